#pragma once

#include <string>
#include <vector>

#include "braidkit/linmap.hpp"

namespace braidkit {

// A finite-dimensional vector space with a distinguished ordered basis.
struct BasedSpace {
  std::string label;
  uint32_t dim = 0;
  std::vector<std::string> basis_names;  // length dim, distinct

  bool operator==(const BasedSpace& o) const {
    return dim == o.dim && basis_names == o.basis_names;
  }
};

BasedSpace make_space(std::string label, std::vector<std::string> basis_names);
BasedSpace unit_space();  // the monoidal unit: dim 1, basis ["1"]

// An ordered tensor product of based spaces. Index convention is row-major
// with the leftmost factor slowest, matching kron().
struct TensorWord {
  std::vector<BasedSpace> factors;

  uint64_t dim() const;
  std::vector<uint32_t> dims() const;
  size_t length() const { return factors.size(); }
  std::string basis_name(uint64_t index) const;  // "a|b|c" style
};

TensorWord word_of(std::initializer_list<BasedSpace> spaces);
TensorWord power_word(const BasedSpace& v, size_t n);
TensorWord concat(const TensorWord& a, const TensorWord& b);

// phi embedded at 1-based slot i of the context word: identity on the factors
// before and after, phi on as many consecutive factors (starting at i) as its
// domain dimension consumes. The consumed block must match exactly.
LinMap embed_at(const LinMap& phi, size_t i, const TensorWord& context);

// Permutations are stored as images: theta[j] is the 0-based target slot of
// source slot j. The operator carries basis vector e_{i_1}..e_{i_n} to the
// word whose slot theta[j] holds e_{i_j}; the codomain word has factors
// W_{theta[j]} = V_j.
using Perm = std::vector<uint32_t>;

Perm perm_identity(size_t n);
Perm perm_compose(const Perm& a, const Perm& b);  // apply b first, then a
Perm perm_inverse(const Perm& a);
TensorWord permute_word(const TensorWord& w, const Perm& theta);
LinMap perm_operator(const Perm& theta, const TensorWord& word, Field f = Field{});
Perm reversal_perm(size_t n);

// Rainbow duality. The dual space stars each basis name; the dual of a map
// between tensor words is its transpose conjugated by the order reversal of
// the factors on both sides (graphically, a central symmetry). This is the
// convention used throughout: the "arched" (no-reversal) duality is not
// implemented, and formulas derived here can differ from arched-convention
// sources by factor reversals.
BasedSpace dual_space(const BasedSpace& v);
TensorWord dual_word(const TensorWord& w);  // reversed duals
LinMap dual_map(const LinMap& f, const TensorWord& domain, const TensorWord& codomain);

// ev: V* (x) V -> I  and  coev: I -> V (x) V*.  Twisted variants are obtained
// by composing with perm_operator of the swap.
LinMap evaluation(const BasedSpace& v, Field f = Field{});
LinMap coevaluation(const BasedSpace& v, Field f = Field{});

}  // namespace braidkit
