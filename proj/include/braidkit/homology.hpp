#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/bmod.hpp"

namespace braidkit {

// A non-negatively graded chain complex.  differentials[n] goes from
// spaces[n] to spaces[n-1]; a degree with no stored differential (the bottom
// degree, or anything beyond the truncation) carries the zero map, so the
// truncation edge reports the full kernel as homology.  `certified` caches a
// clean run of check_complex; the homology routines refuse uncertified input.
struct GradedComplex {
  std::map<uint32_t, BasedSpace> spaces;
  std::map<uint32_t, LinMap> differentials;
  bool certified = false;
};

// Checks d_{n-1} o d_n = 0 for every consecutive pair (after validating the
// shapes against the graded spaces), reporting failures as "d o d (n)" with
// the first offending domain index as witness.  Stores the outcome in
// c.certified and returns the report.
Report check_complex(GradedComplex& c);

// A first-quadrant bicomplex truncated to total degree <= max_total.
// d[(n,m)] : (n,m) -> (n-1,m) and dprime[(n,m)] : (n,m) -> (n,m-1); the
// certified identities are d o d = 0, d' o d' = 0 and the anticommutation
// d o d' + d' o d = 0, so the total differential d + d' squares to zero with
// no further sign bookkeeping.
struct Bicomplex {
  std::map<std::pair<uint32_t, uint32_t>, BasedSpace> spaces;
  std::map<std::pair<uint32_t, uint32_t>, LinMap> d;
  std::map<std::pair<uint32_t, uint32_t>, LinMap> dprime;
  uint32_t max_total = 0;
  std::string label;
  bool certified = false;
};

// The three identities wherever both composites exist, reported as
// "d o d (n,m)", "d' o d' (n,m)" and "anticommutation (n,m)" (the bidegree
// the composite starts from).  Stores the outcome in b.certified.
Report check_bicomplex(Bicomplex& b);

// The degree-n part of the word grading of a system: one block per weakly
// increasing color word, enumerated lexicographically (all-zeros first).
// offsets[i] is the index of the first basis vector of words[i] inside the
// direct sum, total its overall dimension.
struct WordLayout {
  std::vector<std::vector<uint32_t>> words;
  std::vector<uint64_t> offsets;
  uint64_t total = 0;
};

WordLayout degree_layout(const BraidedSystem& s, uint32_t n);

// The two degree-n braided differentials with two-sided coefficients: a
// right braided module m and a left braided module n_coeff over s.  Both go
// from M (x) T_n (x) N to M (x) T_{n-1} (x) N where T_k is the degree-k
// layout above (M slowest, then (word, position), then N):
//   first:  pull one letter to the front with the quantum coshuffle of the
//           negated system, then absorb it into M;
//   second: pull one letter to the back, absorb it into N, and scale the
//           whole map by (-1)^(n-1).
// The negated coshuffle contributes (-1)^(number of crossings) per summand,
// which is exactly what makes the pair a bidifferential: each map squares to
// zero and the two anticommute (see verify_bidifferential).  The modules are
// validated against s first; a violation throws with the witness.
std::pair<LinMap, LinMap> braided_differential(const BraidedSystem& s,
                                               const BraidedModule& m,
                                               const BraidedModule& n_coeff,
                                               uint32_t n);

// Builds both differentials for every degree <= max_n and checks the three
// identities, reported as "d o d (n)", "d' o d' (n)" and "anticommutation
// (n)".  Deliberately performs no module validation: this is the diagnostic
// one points at corrupted data to see which bidegree breaks.
Report verify_bidifferential(const BraidedSystem& s, const BraidedModule& m,
                             const BraidedModule& n_coeff, uint32_t max_n);

// The bar complex of m.alg with coefficients in m, truncated at max_n:
// X_n = M (x) A^n with d_n = rho^1 + sum_{i<n} (-1)^i mul^i.  The module is
// validated and the result comes back certified.
GradedComplex bar_complex(const AlgebraModule& m, uint32_t max_n);

// The dual of the cobar complex of c: X_m = (C*)^m with the convolution
// faces d_m = sum_{i<m} (-1)^i mul*^i and no coefficient term.  Certified.
GradedComplex cobar_dual(const Coalgebra& c, uint32_t max_m);

// The Hochschild chain complex of a with coefficients in itself, truncated
// at max_n: X_n = A^(n+1) with the usual n+1 faces, the last multiplying
// the final factor around into the front one.  Certified.
GradedComplex hochschild_complex(const Algebra& a, uint32_t max_n);

// The four bialgebra bicomplexes on H^n (x) (H*)^m.  Every variant uses the
// multiplication faces d_bar in degree n and the convolution faces d_cob in
// degree m; they differ in which of the pairing families of adjoint_actions
// couple the two blocks:
//   1:  d = d_bar                    d' = (-1)^n d_cob
//   2:  d = d_bar + (-1)^n pi_h      d' = (-1)^n (d_cob + hstar_pi)
//   3:  d = d_bar + h_pi             d' = (-1)^n d_cob + (-1)^(n+m) pi_hstar
//   4:  both couplings at once (the Gerstenhaber-Schack bicomplex).
// The identities are certified at construction and a failure throws, so a
// sign inconsistency surfaces instead of being patched silently.
Bicomplex gs_bicomplex(const Bialgebra& h, uint32_t variant,
                       uint32_t max_total);

// The two-sided coefficient bicomplex on M (x) H^n (x) (H*)^m (x) N.  The
// coefficients are braided modules over the rank-2 system of h, as produced
// by hopf_module_to_braided or written directly (a counit extended by zero
// is fine): m is right with actions (rho : M(x)H -> M, M(x)H* -> M) and
// n_coeff is left with actions (H(x)N -> N, lambda : H*(x)N -> N).
//   d  = d_bar faces + rho on the two leftmost factors
//        + (-1)^n [pull h_n rightwards across the dual block, absorb into N]
//   d' = (-1)^n d_cob faces
//        + (-1)^n [pull l_1 leftwards across the H block, absorb into M]
//        + (-1)^(n+m) lambda on the two rightmost factors.
// Coefficients are validated, and the result is certified at construction.
Bicomplex ps_bicomplex(const Bialgebra& h, const BraidedModule& m,
                       const BraidedModule& n_coeff, uint32_t max_total);

// Homology dimensions dim ker - rank of the incoming differential, one entry
// per stored degree.  Throws on an uncertified complex (certification is
// what guarantees the subtraction cannot go negative).
std::map<uint32_t, uint32_t> homology_dims(const GradedComplex& c);

// The total complex of a certified bicomplex: degree k is the direct sum of
// the bidegrees with n + m = k (in (n,m) order) under d + d'.
GradedComplex total_complex(const Bicomplex& b);

std::map<uint32_t, uint32_t> homology_dims_total(const Bicomplex& b);

// Per-bidegree homology of every row (fixed m, differential d) resp. every
// column (fixed n, differential d').  Throws on an uncertified bicomplex.
std::map<std::pair<uint32_t, uint32_t>, uint32_t> homology_dims_rows(
    const Bicomplex& b);
std::map<std::pair<uint32_t, uint32_t>, uint32_t> homology_dims_cols(
    const Bicomplex& b);

}  // namespace braidkit
