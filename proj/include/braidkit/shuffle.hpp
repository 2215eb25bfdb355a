#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidkit/braid.hpp"

namespace braidkit {

// Positive braid word: letters are 1-based generator indices, 1 <= l < strands.
struct BraidWord {
  uint32_t strands = 0;
  std::vector<uint32_t> letters;
};

// An element of a homogeneous summand of the tensor algebra of a braided
// system: one component index ("color") per slot plus sparse coordinates in
// the corresponding tensor-word basis.  Kept canonical: coeffs sorted by
// index, zero-free.
struct ColoredVector {
  std::vector<uint32_t> colors;
  SparseVec coeffs;
};

bool operator==(const ColoredVector& a, const ColoredVector& b);

// The tensor word V_{colors[0]} (x) ... (x) V_{colors[n-1]}.
TensorWord colored_word(const BraidedSystem& s,
                        const std::vector<uint32_t>& colors);

// Basis vector `index` of the given color word.
ColoredVector colored_basis(const BraidedSystem& s,
                            const std::vector<uint32_t>& colors,
                            uint32_t index);

// All permutations of S_{p_1+...+p_k} that are increasing on each consecutive
// block of sizes parts, in lexicographic order of one-line notation.
std::vector<Perm> shuffle_set(const std::vector<uint32_t>& parts);

// A reduced positive word for theta (length = inversion count), produced by
// leftmost-descent stripping.  Letters applied first-to-last move slot i of
// the input to slot theta(i).
BraidWord matsumoto_lift(const Perm& theta);

// One letter sigma_l crosses slots (l, l+1); with colors (a, b) there it
// applies the system braiding sigma_{a,b}, defined only when a <= b.  The
// composite operator and final color word, or nullopt if any letter falls
// outside the partial action's domain.
std::optional<std::pair<std::vector<uint32_t>, LinMap>> braid_action_operator(
    const BraidWord& b, const std::vector<uint32_t>& colors,
    const BraidedSystem& s);

std::optional<ColoredVector> braid_action(const BraidWord& b,
                                          const ColoredVector& x,
                                          const BraidedSystem& s);

// Quantum shuffle multiplication: sum over the (p,q)-shuffles whose lifted
// braid action is defined on x (x) y and lands back in a reversely ordered
// word.  Inputs must have weakly decreasing colors.
ColoredVector qsh_multiply(const BraidedSystem& s, const ColoredVector& x,
                           const ColoredVector& y);

// Quantum coshuffle comultiplication on a weakly increasing color word,
// split by output color word (the image generally spans several ordered
// summands; each key tags one).
std::map<std::vector<uint32_t>, LinMap> qcosh_map(
    const BraidedSystem& s, uint32_t p, uint32_t q,
    const std::vector<uint32_t>& colors);

// Single-summand convenience form; throws if the image is split.
LinMap qcosh(const BraidedSystem& s, uint32_t p, uint32_t q,
             const std::vector<uint32_t>& colors);

}  // namespace braidkit
