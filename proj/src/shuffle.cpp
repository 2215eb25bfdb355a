#include "braidkit/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace braidkit {

namespace {

void validate_colors(const BraidedSystem& s,
                     const std::vector<uint32_t>& colors) {
  for (uint32_t c : colors)
    if (c >= s.rank())
      throw std::invalid_argument("color " + std::to_string(c + 1) +
                                  " exceeds the system rank");
}

bool weakly_decreasing(const std::vector<uint32_t>& colors) {
  for (size_t i = 0; i + 1 < colors.size(); ++i)
    if (colors[i] < colors[i + 1]) return false;
  return true;
}

bool weakly_increasing(const std::vector<uint32_t>& colors) {
  for (size_t i = 0; i + 1 < colors.size(); ++i)
    if (colors[i] > colors[i + 1]) return false;
  return true;
}

SparseVec apply_sparse(const LinMap& f, const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, c] : v) axpy(c, column_of(f, idx), out);
  SparseVec clean;
  for (auto& e : out)
    if (!e.second.is_zero()) clean.push_back(std::move(e));
  return clean;
}

void choose_rec(const std::vector<uint32_t>& pool, uint32_t take, size_t from,
                std::vector<uint32_t>& picked,
                const std::function<void(const std::vector<uint32_t>&)>& emit) {
  if (picked.size() == take) {
    emit(picked);
    return;
  }
  for (size_t i = from; i + (take - picked.size()) <= pool.size(); ++i) {
    picked.push_back(pool[i]);
    choose_rec(pool, take, i + 1, picked, emit);
    picked.pop_back();
  }
}

void shuffles_rec(const std::vector<uint32_t>& parts, size_t block,
                  std::vector<uint32_t>& avail, Perm& line,
                  std::vector<Perm>& out) {
  if (block == parts.size()) {
    out.push_back(line);
    return;
  }
  std::vector<uint32_t> picked;
  choose_rec(avail, parts[block], 0, picked,
             [&](const std::vector<uint32_t>& vals) {
               std::vector<uint32_t> rest;
               size_t vi = 0;
               for (uint32_t v : avail) {
                 if (vi < vals.size() && v == vals[vi]) {
                   ++vi;
                   continue;
                 }
                 rest.push_back(v);
               }
               size_t n0 = line.size();
               for (uint32_t v : vals) line.push_back(v);
               shuffles_rec(parts, block + 1, rest, line, out);
               line.resize(n0);
             });
}

}  // namespace

bool operator==(const ColoredVector& a, const ColoredVector& b) {
  return a.colors == b.colors && a.coeffs == b.coeffs;
}

TensorWord colored_word(const BraidedSystem& s,
                        const std::vector<uint32_t>& colors) {
  validate_colors(s, colors);
  std::vector<BasedSpace> fs;
  fs.reserve(colors.size());
  for (uint32_t c : colors) fs.push_back(s.components[c]);
  return TensorWord{std::move(fs)};
}

ColoredVector colored_basis(const BraidedSystem& s,
                            const std::vector<uint32_t>& colors,
                            uint32_t index) {
  TensorWord w = colored_word(s, colors);
  if (index >= w.dim())
    throw std::invalid_argument("basis index out of range");
  return {colors, {{index, Scalar(1, s.field())}}};
}

std::vector<Perm> shuffle_set(const std::vector<uint32_t>& parts) {
  uint32_t n = 0;
  for (uint32_t p : parts) n += p;
  std::vector<uint32_t> avail(n);
  for (uint32_t i = 0; i < n; ++i) avail[i] = i;
  std::vector<Perm> out;
  Perm line;
  shuffles_rec(parts, 0, avail, line, out);
  std::sort(out.begin(), out.end());
  return out;
}

BraidWord matsumoto_lift(const Perm& theta) {
  Perm q = theta;
  BraidWord w;
  w.strands = (uint32_t)theta.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (uint32_t i = 0; i + 1 < q.size(); ++i)
      if (q[i] > q[i + 1]) {
        w.letters.push_back(i + 1);
        std::swap(q[i], q[i + 1]);
        moved = true;
        break;
      }
  }
  return w;
}

std::optional<std::pair<std::vector<uint32_t>, LinMap>> braid_action_operator(
    const BraidWord& b, const std::vector<uint32_t>& colors,
    const BraidedSystem& s) {
  if (b.strands != colors.size())
    throw std::invalid_argument("strand count does not match the word length");
  for (uint32_t l : b.letters)
    if (l < 1 || l >= b.strands)
      throw std::invalid_argument("braid letter " + std::to_string(l) +
                                  " out of range");
  validate_colors(s, colors);
  Field f = s.field();
  std::vector<uint32_t> cur = colors;
  LinMap acc = LinMap::identity((uint32_t)colored_word(s, cur).dim(), f);
  for (uint32_t l : b.letters) {
    uint32_t a = cur[l - 1], c = cur[l];
    if (a > c) return std::nullopt;
    acc = compose(embed_at(s.braiding(a, c), l, colored_word(s, cur)), acc);
    std::swap(cur[l - 1], cur[l]);
  }
  return std::make_pair(std::move(cur), std::move(acc));
}

std::optional<ColoredVector> braid_action(const BraidWord& b,
                                          const ColoredVector& x,
                                          const BraidedSystem& s) {
  auto op = braid_action_operator(b, x.colors, s);
  if (!op) return std::nullopt;
  return ColoredVector{std::move(op->first), apply_sparse(op->second, x.coeffs)};
}

ColoredVector qsh_multiply(const BraidedSystem& s, const ColoredVector& x,
                           const ColoredVector& y) {
  validate_colors(s, x.colors);
  validate_colors(s, y.colors);
  if (!weakly_decreasing(x.colors) || !weakly_decreasing(y.colors))
    throw std::invalid_argument(
        "shuffle factors must carry reversely ordered colors");

  std::vector<uint32_t> combined = x.colors;
  combined.insert(combined.end(), y.colors.begin(), y.colors.end());
  uint64_t ydim = colored_word(s, y.colors).dim();
  SparseVec prod;
  for (const auto& [xi, xc] : x.coeffs)
    for (const auto& [yi, yc] : y.coeffs)
      prod.push_back({(uint32_t)((uint64_t)xi * ydim + yi), xc * yc});
  std::sort(prod.begin(), prod.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<uint32_t> target = combined;
  std::sort(target.begin(), target.end(), std::greater<uint32_t>());

  SparseVec acc;
  for (const Perm& theta :
       shuffle_set({(uint32_t)x.colors.size(), (uint32_t)y.colors.size()})) {
    auto op = braid_action_operator(matsumoto_lift(theta), combined, s);
    if (!op || op->first != target) continue;
    axpy(Scalar(1, s.field()), apply_sparse(op->second, prod), acc);
  }
  SparseVec clean;
  for (auto& e : acc)
    if (!e.second.is_zero()) clean.push_back(std::move(e));
  return {std::move(target), std::move(clean)};
}

std::map<std::vector<uint32_t>, LinMap> qcosh_map(
    const BraidedSystem& s, uint32_t p, uint32_t q,
    const std::vector<uint32_t>& colors) {
  validate_colors(s, colors);
  if ((size_t)p + q != colors.size())
    throw std::invalid_argument("degree split does not match the word length");
  if (!weakly_increasing(colors))
    throw std::invalid_argument(
        "coshuffle input must carry an ordered color word");
  std::map<std::vector<uint32_t>, LinMap> out;
  for (const Perm& theta : shuffle_set({p, q})) {
    auto op = braid_action_operator(matsumoto_lift(perm_inverse(theta)),
                                    colors, s);
    if (!op)
      throw std::logic_error(
          "internal: coshuffle action undefined on an ordered word");
    auto it = out.find(op->first);
    if (it == out.end())
      out.emplace(std::move(op->first), std::move(op->second));
    else
      it->second = it->second + op->second;
  }
  return out;
}

LinMap qcosh(const BraidedSystem& s, uint32_t p, uint32_t q,
             const std::vector<uint32_t>& colors) {
  auto m = qcosh_map(s, p, q, colors);
  if (m.size() != 1)
    throw std::invalid_argument(
        "coshuffle image spans several ordered summands; use qcosh_map");
  return m.begin()->second;
}

}  // namespace braidkit
