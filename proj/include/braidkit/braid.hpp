#pragma once

#include "braidkit/hopf.hpp"

#include <map>
#include <optional>
#include <utility>

namespace braidkit {

// An ordered family of based spaces V_1..V_r with braiding components
// sigma_{i,j} : V_i (x) V_j -> V_j (x) V_i for every pair i <= j, plus
// optional per-component units (I -> V_i) and counits (V_i -> I).
//
// Indices are 0-based throughout the API; reports and error messages print
// them 1-based to match the usual component numbering.
//
// `verified` caches a clean colored Yang-Baxter check.  Constructors run the
// check; operations that preserve it structurally (negate, permute_system)
// carry the flag forward, everything else re-checks.  Semantic defects that
// do not prevent construction (failing input axioms, broken unit naturality)
// are collected in `warnings` instead of being thrown, so that deliberately
// corrupted inputs can be studied with check_ybe.
struct BraidedSystem {
  std::vector<BasedSpace> components;
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sigma;  // keys (i,j), i <= j
  std::vector<std::optional<LinMap>> units;               // I -> V_i
  std::vector<std::optional<LinMap>> counits;             // V_i -> I
  bool verified = false;
  std::vector<std::string> warnings;

  uint32_t rank() const { return static_cast<uint32_t>(components.size()); }
  Field field() const;
  const LinMap& braiding(uint32_t i, uint32_t j) const;  // requires i <= j
  bool pointed() const;    // every unit present
  bool bipointed() const;  // pointed and every counit present
};

// Validating constructor: shape errors throw, semantic defects (unit
// naturality on off-diagonal pairs, normalized unit/counit pairs) become
// warnings.  Does not run the YBE check; use verify_system for that.
BraidedSystem make_braided_system(
    std::vector<BasedSpace> components,
    std::map<std::pair<uint32_t, uint32_t>, LinMap> sigma,
    std::vector<std::optional<LinMap>> units = {},
    std::vector<std::optional<LinMap>> counits = {});

// Colored Yang-Baxter check: for every i <= j <= k compares
//   (s_{j,k} (x) id) o (id (x) s_{i,k}) o (s_{i,j} (x) id)
//   (id (x) s_{i,j}) o (s_{i,k} (x) id) o (id (x) s_{j,k})
// on V_i (x) V_j (x) V_k.  The report lists the failing triples.
Report check_ybe(const BraidedSystem& s);

// Runs check_ybe, stores the outcome in s.verified, and returns the report.
Report verify_system(BraidedSystem& s);

// Associativity braiding  nu (x) mul : V(x)V -> V(x)V,  v(x)w -> 1(x)vw,
// its right mirror  mul (x) nu : v(x)w -> vw(x)1,  and the coassociativity
// braiding  counit (x) comul.
LinMap sigma_ass(const Algebra& a);
LinMap sigma_ass_r(const Algebra& a);
LinMap sigma_coass(const Coalgebra& c);

// The bialgebra braiding  H (x) H* -> H* (x) H,
//   h (x) l  ->  <l_(1), h_(2)>  l_(2) (x) h_(1),
// where H* carries the rainbow-dual structure (see tensor.hpp).
LinMap sigma_bi(const Bialgebra& h);

// Rank-2 bipointed system (H, H*) with s_{1,1} = sigma_ass_r(H),
// s_{2,2} = sigma_ass(H*), s_{1,2} = sigma_bi(H); units nu, counit*;
// counits counit, nu*.  Either diagonal convention braids; pass
// left_diagonals = true to use the plain sigma_ass on both diagonals.
BraidedSystem build_B(const Bialgebra& h, bool left_diagonals = false);

// Rank-4 bipointed system (H, H^op, H*, (H^cop)*) with sigma_ass on each
// diagonal, transpositions for (1,2) and (3,4), and sigma_bi of the four
// twists of H on the mixed pairs.  right_diagonals = true switches every
// diagonal to sigma_ass_r.
BraidedSystem build_Bprime(const Bialgebra& h, bool right_diagonals = false);

// A (left or right) module algebra: an algebra together with the action of a
// bialgebra on it.  For the left version action : H (x) A -> A, for the right
// version action : B (x) H -> B.
struct ModuleAlgebra {
  Algebra alg;
  LinMap action;
};

// An algebra with commuting left and right coactions
// left_coaction : C -> H (x) C,  right_coaction : C -> C (x) H,
// both algebra morphisms.
struct BicomoduleAlgebra {
  Algebra alg;
  LinMap left_coaction;
  LinMap right_coaction;
};

// Rank-3 pointed system (B, C, A) built from a left module algebra A, a
// right module algebra B and a bicomodule algebra C over the bialgebra h:
//   xi_{1,2} = (Id_C (x) rho) o (swap_{B,C} (x) Id_H) o (Id_B (x) delta_r)
//   xi_{2,3} = (lambda (x) Id_C) o (Id_H (x) swap_{C,A}) o (delta_l (x) Id_A)
//   xi_{1,3} = swap_{B,A}
// with sigma_ass on the diagonals and the three algebra units as units.
// Module/comodule-algebra axiom violations throw, naming each failing axiom.
BraidedSystem build_crossed_system(const ModuleAlgebra& a_left,
                                   const ModuleAlgebra& b_right,
                                   const BicomoduleAlgebra& c_bicomod,
                                   const Bialgebra& h);

// Checks that the family maps[i] : V_i -> W_i intertwines the braidings,
//   (f_j (x) f_i) o sigma_{i,j} = xi_{i,j} o (f_i (x) f_j)   for all i <= j,
// and preserves units/counits where both systems carry them.
Report check_braided_morphism(const std::vector<LinMap>& maps,
                              const BraidedSystem& src,
                              const BraidedSystem& dst);

// Reorders the components along theta (W_{theta[i]} = V_i).  Pairs whose
// order is reversed use the inverse braiding, which must exist; otherwise
// an error names the offending pair.  A verified input stays verified.
BraidedSystem permute_system(const BraidedSystem& s, const Perm& theta);

// Merges the consecutive components lo..hi (0-based, inclusive) into their
// direct sum.  The braiding on the merged component uses sigma_{i,j} above
// the diagonal and sigma_{i,j}^{-1} below it, so every braiding inside the
// glued range must be invertible.  The merged component has no unit/counit.
BraidedSystem glue(const BraidedSystem& s, uint32_t lo, uint32_t hi);

// Flips the sign of every braiding component.  Both sides of the YBE are
// triple composites, so the sign cancels and a verified input stays
// verified.  Units and counits are kept as data (negate is an involution),
// even though unit naturality only holds up to sign for the negated system.
BraidedSystem negate(const BraidedSystem& s);

// Antipode extraction through the braiding: when sigma_bi(h) is invertible,
// assembles
//   s~ = (((counit (x) nu*) o sigma_bi^{-1}) (x) Id_H)
//        o (Id_{H*} (x) swap_{H,H}) o (coev' (x) Id_H)
// with coev' : I -> H* (x) H, and returns it; absent otherwise.
std::optional<LinMap> extract_antipode(const Bialgebra& h);

}  // namespace braidkit
