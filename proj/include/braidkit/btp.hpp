#pragma once

#include "braidkit/braid.hpp"

namespace braidkit {

// A unital associative algebra assembled on the reversed tensor product
// V_r (x) ... (x) V_1 of a pointed braided system of algebras.  One copy is
// interleaved through the other with the crossings xi_{i,j}, then every
// component pair is multiplied; the unit is nu_r (x) ... (x) nu_1.
struct BraidedTensorAlgebra {
  BraidedSystem source;
  Algebra algebra;
  std::string provenance;
};

// Requires: every component carries a unit; each diagonal braiding is an
// associativity braiding (nu (x) mu or mu (x) nu) of an algebra passing
// check_uaa; the system satisfies the braid equation; every crossing is
// natural with respect to the component multiplications and units.  Any
// violation raises std::invalid_argument naming the condition, since each of
// them is exactly what associativity of the product is equivalent to.
// unchecked skips the braid-equation/naturality gates (the diagonals must
// still be recoverable) so that broken systems can feed negative tests.
BraidedTensorAlgebra braided_tensor_product(const BraidedSystem& s,
                                            bool unchecked = false);

// Exhaustive column-wise associativity certificate; never materializes the
// embedded multiplication, so it stays usable at dim 256 (threads = 0 picks
// the hardware count).  The second form samples basis triples from the seed.
Report check_associativity(const Algebra& a, unsigned threads = 0);
Report check_associativity(const Algebra& a, uint32_t samples, uint64_t seed);

// Enveloping algebra A^op (x) A with the tau crossing; right modules over it
// are precisely A-bimodules.
BraidedTensorAlgebra enveloping_algebra(const Algebra& a);

// H* (x) H with the two-sided braiding as the crossing.
BraidedTensorAlgebra heisenberg(const Bialgebra& h);

// A (x) H for a left module algebra A over h:
//   (a|h)(a'|h') = sum a.(h_(1).a') | h_(2) h'.
BraidedTensorAlgebra smash_left(const ModuleAlgebra& a_left, const Bialgebra& h);

// H (x) B for a right module algebra B over h.
BraidedTensorAlgebra smash_right(const Bialgebra& h, const ModuleAlgebra& b_right);

// A (x) C (x) B built on the rank-3 crossed system.
BraidedTensorAlgebra two_sided_crossed(const ModuleAlgebra& a_left,
                                       const BicomoduleAlgebra& c_bicomod,
                                       const ModuleAlgebra& b_right,
                                       const Bialgebra& h);

// (H^cop)* (x) H* (x) H^op (x) H, the product of the rank-4 system.  A
// bialgebra suffices here.
BraidedTensorAlgebra W(const Bialgebra& h);

// Member of the 24-element family: the rank-4 system is permuted by theta
// before taking the product.  theta != id inverts crossings, so it needs an
// antipode; a non-invertible crossing is reported by its component pair.
BraidedTensorAlgebra theta_W(const Bialgebra& h, const Perm& theta);

// Distinguished members of the family.
Perm theta_x();  // (1 4)(2 3)
Perm theta_y();  // (1 2 3 4)
Perm theta_z();  // (3 4)

struct FactorPermutation {
  BraidedTensorAlgebra target;  // product of the theta-permuted system
  LinMap iso;                   // algebra isomorphism, source product -> target
};

// Realizes theta as a minimal sequence of adjacent transpositions, each
// contributing one inverted crossing embedded at the matching slot.  The
// composite map is verified multiplicative and unital before returning;
// failure of that verification is a hard logic error, never patched over.
FactorPermutation factor_permutation_iso(const BraidedSystem& s,
                                         const Perm& theta);

}  // namespace braidkit
