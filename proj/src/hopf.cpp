#include "braidkit/hopf.hpp"

#include <stdexcept>

namespace braidkit {

namespace {

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("incompatible shapes: " + what);
}

// Append a violation when lhs != rhs, with the first differing domain column
// as witness.
void check_eq(Report& rep, const std::string& axiom, const LinMap& lhs,
              const LinMap& rhs, const std::vector<uint32_t>& domain_dims) {
  LinMap diff = lhs - rhs;
  if (diff.is_zero()) return;
  uint32_t col = diff.entries().front().col;
  for (const auto& e : diff.entries()) col = std::min(col, e.col);
  auto mi = unrank_index(col, domain_dims);
  rep.push_back({axiom, mi});
}

LinMap tau_hh(const BasedSpace& v, Field f) {
  return perm_operator({1, 0}, power_word(v, 2), f);
}

}  // namespace

std::string Violation::str() const {
  std::string s = axiom + " @ (";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  return s + ")";
}

static std::string report_str(const Report& rep) {
  std::string s;
  for (const auto& v : rep) {
    if (!s.empty()) s += "; ";
    s += v.str();
  }
  return s;
}

Algebra make_algebra(BasedSpace space, LinMap mul, LinMap unit, bool unchecked) {
  uint32_t d = space.dim;
  require_shape(mul.rows() == d && mul.cols() == d * d, "mul must be V(x)V->V");
  require_shape(unit.rows() == d && unit.cols() == 1, "unit must be I->V");
  require_shape(mul.field() == unit.field(), "field mismatch");
  Algebra a{std::move(space), std::move(mul), std::move(unit)};
  if (!unchecked) {
    Report rep = check_uaa(a);
    if (!rep.empty()) throw std::invalid_argument("algebra axioms fail: " + report_str(rep));
  }
  return a;
}

Coalgebra make_coalgebra(BasedSpace space, LinMap comul, LinMap counit,
                         bool unchecked) {
  uint32_t d = space.dim;
  require_shape(comul.rows() == d * d && comul.cols() == d, "comul must be V->V(x)V");
  require_shape(counit.rows() == 1 && counit.cols() == d, "counit must be V->I");
  require_shape(comul.field() == counit.field(), "field mismatch");
  Coalgebra c{std::move(space), std::move(comul), std::move(counit)};
  if (!unchecked) {
    Report rep = check_coalgebra(c);
    if (!rep.empty())
      throw std::invalid_argument("coalgebra axioms fail: " + report_str(rep));
  }
  return c;
}

Bialgebra make_bialgebra(BasedSpace space, LinMap mul, LinMap unit, LinMap comul,
                         LinMap counit, std::optional<LinMap> antipode,
                         bool unchecked) {
  uint32_t d = space.dim;
  require_shape(mul.rows() == d && mul.cols() == d * d, "mul must be V(x)V->V");
  require_shape(unit.rows() == d && unit.cols() == 1, "unit must be I->V");
  require_shape(comul.rows() == d * d && comul.cols() == d, "comul must be V->V(x)V");
  require_shape(counit.rows() == 1 && counit.cols() == d, "counit must be V->I");
  require_shape(mul.field() == unit.field() && mul.field() == comul.field() &&
                    mul.field() == counit.field(),
                "field mismatch");
  if (antipode) {
    require_shape(antipode->rows() == d && antipode->cols() == d, "antipode must be V->V");
    require_shape(antipode->field() == mul.field(), "field mismatch");
  }
  Bialgebra h{std::move(space), std::move(mul),    std::move(unit),
              std::move(comul), std::move(counit), std::move(antipode),
              unchecked};
  if (!unchecked) {
    Report rep = check_bialgebra(h);
    if (h.antipode) {
      Report ar = check_antipode(h);
      rep.insert(rep.end(), ar.begin(), ar.end());
    }
    if (!rep.empty())
      throw std::invalid_argument("bialgebra axioms fail: " + report_str(rep));
  }
  return h;
}

Report check_uaa(const Algebra& a) {
  Report rep;
  uint32_t d = a.space.dim;
  Field f = a.field();
  TensorWord h3 = power_word(a.space, 3);
  check_eq(rep, "associativity", compose(a.mul, embed_at(a.mul, 1, h3)),
           compose(a.mul, embed_at(a.mul, 2, h3)), {d, d, d});
  check_eq(rep, "unit-left", compose(a.mul, kron(a.unit, LinMap::identity(d, f))),
           LinMap::identity(d, f), {d});
  check_eq(rep, "unit-right", compose(a.mul, kron(LinMap::identity(d, f), a.unit)),
           LinMap::identity(d, f), {d});
  return rep;
}

Report check_coalgebra(const Coalgebra& c) {
  Report rep;
  uint32_t d = c.space.dim;
  Field f = c.field();
  TensorWord h2 = power_word(c.space, 2);
  check_eq(rep, "coassociativity", compose(embed_at(c.comul, 1, h2), c.comul),
           compose(embed_at(c.comul, 2, h2), c.comul), {d});
  check_eq(rep, "counit-left",
           compose(kron(c.counit, LinMap::identity(d, f)), c.comul),
           LinMap::identity(d, f), {d});
  check_eq(rep, "counit-right",
           compose(kron(LinMap::identity(d, f), c.counit), c.comul),
           LinMap::identity(d, f), {d});
  return rep;
}

Report check_bialgebra(const Bialgebra& h) {
  Report rep = check_uaa(h.algebra());
  Report cr = check_coalgebra(h.coalgebra());
  rep.insert(rep.end(), cr.begin(), cr.end());
  uint32_t d = h.dim();
  Field f = h.field();
  // Delta . mu = (mu (x) mu) . c2 . (Delta (x) Delta), where c2 swaps the two
  // middle factors of H^4.
  LinMap lhs = compose(h.comul, h.mul);
  LinMap c2 = perm_operator({0, 2, 1, 3}, power_word(h.space, 4), f);
  LinMap rhs = compose(kron(h.mul, h.mul), compose(c2, kron(h.comul, h.comul)));
  check_eq(rep, "mul-comul-compat", lhs, rhs, {d, d});
  check_eq(rep, "unit-comul-compat", compose(h.comul, h.unit), kron(h.unit, h.unit),
           {1});
  check_eq(rep, "counit-mul-compat", compose(h.counit, h.mul),
           kron(h.counit, h.counit), {d, d});
  check_eq(rep, "unit-counit-normalization", compose(h.counit, h.unit),
           LinMap::identity(1, f), {1});
  return rep;
}

Report check_antipode(const Bialgebra& h) {
  Report rep;
  if (!h.antipode) {
    rep.push_back({"antipode-missing", {}});
    return rep;
  }
  uint32_t d = h.dim();
  Field f = h.field();
  LinMap nu_eps = compose(h.unit, h.counit);
  LinMap id = LinMap::identity(d, f);
  check_eq(rep, "antipode-left",
           compose(h.mul, compose(kron(*h.antipode, id), h.comul)), nu_eps, {d});
  check_eq(rep, "antipode-right",
           compose(h.mul, compose(kron(id, *h.antipode), h.comul)), nu_eps, {d});
  return rep;
}

Bialgebra twist(const Bialgebra& h, bool use_op, bool use_cop) {
  Field f = h.field();
  LinMap tau = tau_hh(h.space, f);
  LinMap mul = use_op ? compose(h.mul, tau) : h.mul;
  LinMap comul = use_cop ? compose(tau, h.comul) : h.comul;
  std::optional<LinMap> s;
  if (use_op == use_cop) {
    s = h.antipode;  // untouched, or kept for the double twist
  } else if (h.antipode) {
    auto inv = try_inverse(*h.antipode);
    if (inv) s = *inv;
  }
  BasedSpace sp = h.space;
  if (use_op) sp.label += "^op";
  if (use_cop) sp.label += "^cop";
  return Bialgebra{std::move(sp), std::move(mul), h.unit,
                   std::move(comul), h.counit,    std::move(s), h.unchecked};
}

Bialgebra dual_bialgebra(const Bialgebra& h) {
  TensorWord v = word_of({h.space});
  TensorWord vv = power_word(h.space, 2);
  TensorWord unit_w;  // empty word = I
  LinMap mul = dual_map(h.comul, v, vv);
  LinMap unit = dual_map(h.counit, v, unit_w);
  LinMap comul = dual_map(h.mul, vv, v);
  LinMap counit = dual_map(h.unit, unit_w, v);
  std::optional<LinMap> s;
  if (h.antipode) s = dual_map(*h.antipode, v, v);
  return Bialgebra{dual_space(h.space), std::move(mul),    std::move(unit),
                   std::move(comul),    std::move(counit), std::move(s),
                   h.unchecked};
}

std::optional<LinMap> solve_antipode(const Bialgebra& h) {
  uint32_t d = h.dim();
  Field f = h.field();
  // Unknowns s[i,p] at index i*d+p; equations indexed by (half, r, k):
  //   half 0:  sum_{p,q,i} Delta[k->(p,q)] mul[(i,q)->r] s[i,p] = nu_r eps_k
  //   half 1:  sum_{p,q,j} Delta[k->(p,q)] mul[(p,j)->r] s[j,q] = nu_r eps_k
  std::vector<Entry> es;
  for (const auto& de : h.comul.entries()) {
    uint32_t p = de.row / d, q = de.row % d, k = de.col;
    for (const auto& me : h.mul.entries()) {
      uint32_t i = me.col / d, qq = me.col % d, r = me.row;
      if (qq == q)
        es.push_back({r * d + k, i * d + p, de.val * me.val});
      if (i == p)  // reuse the loop for half 1: mul[(p,j)->r], j = qq
        es.push_back({d * d + r * d + k, qq * d + q, de.val * me.val});
    }
  }
  LinMap A = LinMap::from_entries(2 * d * d, d * d, std::move(es), f);
  std::vector<Scalar> b(2 * d * d, scalar_zero(f));
  for (uint32_t r = 0; r < d; ++r)
    for (uint32_t k = 0; k < d; ++k) {
      Scalar v = h.unit.at(r, 0) * h.counit.at(0, k);
      b[r * d + k] = v;
      b[d * d + r * d + k] = v;
    }
  auto x = solve_linear(A, b);
  if (!x) return std::nullopt;
  std::vector<Entry> se;
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t p = 0; p < d; ++p)
      if (!(*x)[i * d + p].is_zero()) se.push_back({i, p, (*x)[i * d + p]});
  return LinMap::from_entries(d, d, std::move(se), f);
}

bool is_algebra_character(const Algebra& a, const LinMap& phi) {
  if (phi.rows() != 1 || phi.cols() != a.space.dim) return false;
  if (!(phi.field() == a.field())) return false;
  return compose(phi, a.mul) == kron(phi, phi) &&
         compose(phi, a.unit) == LinMap::identity(1, a.field());
}

Bialgebra trivial_bialgebra(Field f) {
  BasedSpace v = make_space("k", {"1"});
  LinMap one = LinMap::identity(1, f);
  return make_bialgebra(v, one, one, one, one, one);
}

Bialgebra group_algebra(uint32_t n, Field f) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  std::vector<std::string> names;
  for (uint32_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  BasedSpace v = make_space("k[Z/" + std::to_string(n) + "]", names);
  Scalar one = scalar_one(f);
  std::vector<Entry> mul, unit, comul, counit, anti;
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) mul.push_back({(i + j) % n, i * n + j, one});
    comul.push_back({i * n + i, i, one});
    counit.push_back({0, i, one});
    anti.push_back({(n - i) % n, i, one});
  }
  unit.push_back({0, 0, one});
  return make_bialgebra(v, LinMap::from_entries(n, n * n, mul, f),
                        LinMap::from_entries(n, 1, unit, f),
                        LinMap::from_entries(n * n, n, comul, f),
                        LinMap::from_entries(1, n, counit, f),
                        LinMap::from_entries(n, n, anti, f));
}

Bialgebra sweedler_h4(Field f) {
  // basis 1, g, x, gx;  g^2 = 1, x^2 = 0, x g = -g x
  BasedSpace v = make_space("H4", {"1", "g", "x", "gx"});
  Scalar one = scalar_one(f), neg = -scalar_one(f);
  enum { E1 = 0, G = 1, X = 2, GX = 3 };
  std::vector<Entry> mul;
  auto put = [&](uint32_t a, uint32_t b, uint32_t c, Scalar v2) {
    mul.push_back({c, a * 4 + b, v2});
  };
  for (uint32_t a = 0; a < 4; ++a) {
    put(E1, a, a, one);
    if (a != E1) put(a, E1, a, one);
  }
  put(G, G, E1, one);
  put(G, X, GX, one);
  put(G, GX, X, one);
  put(X, G, GX, neg);
  put(GX, G, X, neg);
  // x*x = x*gx = gx*x = gx*gx = 0
  std::vector<Entry> unit{{E1, 0, one}};
  std::vector<Entry> comul{
      {E1 * 4 + E1, E1, one},  // Delta(1) = 1(x)1
      {G * 4 + G, G, one},     // Delta(g) = g(x)g
      {X * 4 + E1, X, one},    // Delta(x) = x(x)1 + g(x)x
      {G * 4 + X, X, one},
      {GX * 4 + G, GX, one},   // Delta(gx) = gx(x)g + 1(x)gx
      {E1 * 4 + GX, GX, one},
  };
  std::vector<Entry> counit{{0, E1, one}, {0, G, one}};
  std::vector<Entry> anti{
      {E1, E1, one}, {G, G, one}, {GX, X, neg}, {X, GX, one}};
  return make_bialgebra(v, LinMap::from_entries(4, 16, mul, f),
                        LinMap::from_entries(4, 1, unit, f),
                        LinMap::from_entries(16, 4, comul, f),
                        LinMap::from_entries(1, 4, counit, f),
                        LinMap::from_entries(4, 4, anti, f));
}

Bialgebra idempotent_monoid_bialgebra(Field f) {
  BasedSpace v = make_space("k{1,x}", {"1", "x"});
  Scalar one = scalar_one(f);
  std::vector<Entry> mul{{0, 0 * 2 + 0, one},
                         {1, 0 * 2 + 1, one},
                         {1, 1 * 2 + 0, one},
                         {1, 1 * 2 + 1, one}};
  std::vector<Entry> unit{{0, 0, one}};
  std::vector<Entry> comul{{0 * 2 + 0, 0, one}, {1 * 2 + 1, 1, one}};
  std::vector<Entry> counit{{0, 0, one}, {0, 1, one}};
  return make_bialgebra(v, LinMap::from_entries(2, 4, mul, f),
                        LinMap::from_entries(2, 1, unit, f),
                        LinMap::from_entries(4, 2, comul, f),
                        LinMap::from_entries(1, 2, counit, f), std::nullopt);
}

}  // namespace braidkit
