#include "braidkit/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace braidkit {

BasedSpace make_space(std::string label, std::vector<std::string> basis_names) {
  std::set<std::string> seen(basis_names.begin(), basis_names.end());
  if (seen.size() != basis_names.size())
    throw std::invalid_argument("basis names must be distinct");
  BasedSpace v;
  v.label = std::move(label);
  v.dim = (uint32_t)basis_names.size();
  v.basis_names = std::move(basis_names);
  return v;
}

BasedSpace unit_space() { return make_space("I", {"1"}); }

uint64_t TensorWord::dim() const {
  uint64_t d = 1;
  for (const auto& v : factors) d *= v.dim;
  return d;
}

std::vector<uint32_t> TensorWord::dims() const {
  std::vector<uint32_t> d;
  d.reserve(factors.size());
  for (const auto& v : factors) d.push_back(v.dim);
  return d;
}

std::string TensorWord::basis_name(uint64_t index) const {
  if (factors.empty()) return "1";
  auto mi = unrank_index(index, dims());
  std::string s;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k) s += "|";
    s += factors[k].basis_names[mi[k]];
  }
  return s;
}

TensorWord word_of(std::initializer_list<BasedSpace> spaces) {
  TensorWord w;
  w.factors.assign(spaces.begin(), spaces.end());
  return w;
}

TensorWord power_word(const BasedSpace& v, size_t n) {
  TensorWord w;
  w.factors.assign(n, v);
  return w;
}

TensorWord concat(const TensorWord& a, const TensorWord& b) {
  TensorWord w = a;
  w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
  return w;
}

LinMap embed_at(const LinMap& phi, size_t i, const TensorWord& context) {
  if (i < 1 || i > context.factors.size() + 1)
    throw std::invalid_argument("position/arity mismatch");
  uint64_t pre = 1;
  for (size_t k = 0; k + 1 < i; ++k) pre *= context.factors[k].dim;
  // Consume consecutive factors from slot i until phi's domain is matched.
  uint64_t consumed = 1;
  size_t k = i - 1;
  while (consumed < phi.cols()) {
    if (k >= context.factors.size())
      throw std::invalid_argument("position/arity mismatch");
    consumed *= context.factors[k++].dim;
  }
  if (consumed != phi.cols()) throw std::invalid_argument("position/arity mismatch");
  uint64_t post = 1;
  for (; k < context.factors.size(); ++k) post *= context.factors[k].dim;
  return kron(kron(LinMap::identity((uint32_t)pre, phi.field()), phi),
              LinMap::identity((uint32_t)post, phi.field()));
}

Perm perm_identity(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = (uint32_t)i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = (uint32_t)i;
  return inv;
}

TensorWord permute_word(const TensorWord& w, const Perm& theta) {
  if (theta.size() != w.factors.size())
    throw std::invalid_argument("permutation size mismatch");
  TensorWord out;
  out.factors.resize(w.factors.size());
  for (size_t j = 0; j < theta.size(); ++j) out.factors[theta[j]] = w.factors[j];
  return out;
}

LinMap perm_operator(const Perm& theta, const TensorWord& word, Field f) {
  if (theta.size() != word.factors.size())
    throw std::invalid_argument("permutation size mismatch");
  auto src_dims = word.dims();
  auto dst_dims = permute_word(word, theta).dims();
  uint64_t n = word.dim();
  std::vector<Entry> es;
  es.reserve(n);
  std::vector<uint32_t> dst(theta.size());
  for (uint64_t c = 0; c < n; ++c) {
    auto mi = unrank_index(c, src_dims);
    for (size_t j = 0; j < theta.size(); ++j) dst[theta[j]] = mi[j];
    es.push_back({(uint32_t)rank_index(dst, dst_dims), (uint32_t)c, scalar_one(f)});
  }
  return LinMap::from_entries((uint32_t)n, (uint32_t)n, std::move(es), f);
}

Perm reversal_perm(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = (uint32_t)(n - 1 - i);
  return p;
}

BasedSpace dual_space(const BasedSpace& v) {
  BasedSpace d;
  d.label = v.label + "*";
  d.dim = v.dim;
  d.basis_names.reserve(v.dim);
  for (const auto& b : v.basis_names) d.basis_names.push_back(b + "*");
  return d;
}

TensorWord dual_word(const TensorWord& w) {
  TensorWord out;
  out.factors.reserve(w.factors.size());
  for (size_t k = w.factors.size(); k-- > 0;)
    out.factors.push_back(dual_space(w.factors[k]));
  return out;
}

LinMap dual_map(const LinMap& f, const TensorWord& domain, const TensorWord& codomain) {
  if (domain.dim() != f.cols() || codomain.dim() != f.rows())
    throw std::invalid_argument("word dimensions do not match the map");
  auto dd = domain.dims(), cd = codomain.dims();
  std::vector<Entry> es;
  es.reserve(f.nnz());
  for (const auto& e : f.entries()) {
    // transpose + order reversal of the multi-index on both sides
    auto rmi = unrank_index(e.row, cd);
    auto cmi = unrank_index(e.col, dd);
    std::reverse(rmi.begin(), rmi.end());
    std::reverse(cmi.begin(), cmi.end());
    auto rdd = cd, cdd = dd;
    std::reverse(rdd.begin(), rdd.end());
    std::reverse(cdd.begin(), cdd.end());
    es.push_back({(uint32_t)rank_index(cmi, cdd), (uint32_t)rank_index(rmi, rdd),
                  e.val});
  }
  return LinMap::from_entries(f.cols(), f.rows(), std::move(es), f.field());
}

LinMap evaluation(const BasedSpace& v, Field f) {
  std::vector<Entry> es;
  es.reserve(v.dim);
  for (uint32_t i = 0; i < v.dim; ++i)
    es.push_back({0, i * v.dim + i, scalar_one(f)});
  return LinMap::from_entries(1, v.dim * v.dim, std::move(es), f);
}

LinMap coevaluation(const BasedSpace& v, Field f) {
  std::vector<Entry> es;
  es.reserve(v.dim);
  for (uint32_t i = 0; i < v.dim; ++i)
    es.push_back({i * v.dim + i, 0, scalar_one(f)});
  return LinMap::from_entries(v.dim * v.dim, 1, std::move(es), f);
}

}  // namespace braidkit
