#include "braidkit/bmod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace braidkit {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string pair_str(uint32_t i, uint32_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_eq(Report& rep, const std::string& axiom,
              const std::vector<uint32_t>& domain_dims, const LinMap& lhs,
              const LinMap& rhs) {
  LinMap diff = lhs - rhs;
  if (diff.is_zero()) return;
  uint32_t col = diff.entries().front().col;
  for (const Entry& e : diff.entries()) col = std::min(col, e.col);
  rep.push_back({axiom, unrank_index(col, domain_dims)});
}

void pass_or_throw(const Report& rep, const std::string& context) {
  if (!rep.empty())
    throw std::invalid_argument(context + ": " + rep.front().str());
}

LinMap pair_swap(const BasedSpace& v, const BasedSpace& w, Field f) {
  return perm_operator({1, 0}, word_of({v, w}), f);
}

LinMap ev_flip(const BasedSpace& v, Field f) {  // V (x) V* -> I
  return compose(evaluation(v, f), pair_swap(v, dual_space(v), f));
}

LinMap coev_flip(const BasedSpace& v, Field f) {  // I -> V* (x) V
  return compose(pair_swap(v, dual_space(v), f), coevaluation(v, f));
}

// The shuffle sending the first half of 2n slots to the even positions and
// the second half to the odd ones; its inverse de-interleaves paired legs.
Perm omega_interleave(uint32_t n) {
  Perm w(2 * (size_t)n);
  for (uint32_t k = 0; k < n; ++k) {
    w[k] = 2 * k;
    w[n + k] = 2 * k + 1;
  }
  return w;
}

LinMap kron_power(const LinMap& f, uint32_t n, Field fl) {
  LinMap out = LinMap::identity(1, fl);
  for (uint32_t k = 0; k < n; ++k) out = kron(out, f);
  return out;
}

TensorWord repeat_word(const BasedSpace& v, uint32_t a, const BasedSpace& w,
                       uint32_t b) {
  TensorWord out;
  for (uint32_t k = 0; k < a; ++k) out.factors.push_back(v);
  for (uint32_t k = 0; k < b; ++k) out.factors.push_back(w);
  return out;
}

// Flattens a tensor word into a single based space; composite basis names are
// disambiguated positionally if two factors happen to share names.
BasedSpace word_space(const TensorWord& w, std::string label) {
  std::vector<std::string> names;
  uint64_t d = w.dim();
  names.reserve(d);
  for (uint64_t i = 0; i < d; ++i) names.push_back(w.basis_name(i));
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    for (uint64_t i = 0; i < d; ++i)
      names[i] += "@" + std::to_string(i);
  return make_space(std::move(label), std::move(names));
}

LinMap nu_star(const Bialgebra& h) {  // H* -> I, the dual-algebra counit
  return dual_map(h.unit, TensorWord{}, word_of({h.space}));
}

}  // namespace

Report check_braided_module(const BraidedModule& m, bool require_pointed) {
  const BraidedSystem& s = m.system;
  uint32_t r = s.rank();
  require(m.actions.size() == r, "one action per component expected");
  Field f = s.field();
  uint32_t dm = m.space.dim;
  LinMap id_m = LinMap::identity(dm, f);
  for (uint32_t i = 0; i < r; ++i) {
    uint64_t cols = (uint64_t)dm * s.components[i].dim;
    require(m.actions[i].rows() == dm && m.actions[i].cols() == cols,
            "action " + std::to_string(i + 1) + " has wrong shape");
  }

  Report rep;
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i; j < r; ++j) {
      uint32_t di = s.components[i].dim, dj = s.components[j].dim;
      LinMap id_i = LinMap::identity(di, f);
      LinMap id_j = LinMap::identity(dj, f);
      const LinMap& sij = s.braiding(i, j);
      if (m.side == ModuleSide::right) {
        // rho_j o (rho_i (x) Id_j) = rho_i o (rho_j (x) Id_i) o (Id_M (x) s_{i,j})
        LinMap lhs = compose(m.actions[j], kron(m.actions[i], id_j));
        LinMap rhs = compose(
            m.actions[i],
            compose(kron(m.actions[j], id_i), kron(id_m, sij)));
        check_eq(rep, "module " + pair_str(i, j), {dm, di, dj}, lhs, rhs);
      } else {
        // lambda_i o (Id_i (x) lambda_j)
        //   = lambda_j o (Id_j (x) lambda_i) o (s_{i,j} (x) Id_M)
        LinMap lhs = compose(m.actions[i], kron(id_i, m.actions[j]));
        LinMap rhs = compose(
            m.actions[j],
            compose(kron(id_j, m.actions[i]), kron(sij, id_m)));
        check_eq(rep, "module " + pair_str(i, j), {di, dj, dm}, lhs, rhs);
      }
    }

  if (require_pointed && s.pointed())
    for (uint32_t i = 0; i < r; ++i) {
      LinMap acted = m.side == ModuleSide::right
                         ? compose(m.actions[i], kron(id_m, *s.units[i]))
                         : compose(m.actions[i], kron(*s.units[i], id_m));
      check_eq(rep, "unit " + std::to_string(i + 1), {dm}, acted, id_m);
    }
  return rep;
}

Report check_right_module(const AlgebraModule& m) {
  Field f = m.action.field();
  uint32_t dw = m.space.dim, da = m.alg.space.dim;
  LinMap id_w = LinMap::identity(dw, f);
  LinMap id_a = LinMap::identity(da, f);
  Report rep;
  check_eq(rep, "module", {dw, da, da},
           compose(m.action, kron(m.action, id_a)),
           compose(m.action, kron(id_w, m.alg.mul)));
  check_eq(rep, "unit", {dw}, compose(m.action, kron(id_w, m.alg.unit)), id_w);
  return rep;
}

Report check_bimodule(const Bimodule& b) {
  Field f = b.left_action.field();
  uint32_t dw = b.space.dim;
  uint32_t db = b.left_alg.space.dim, da = b.right_alg.space.dim;
  LinMap id_w = LinMap::identity(dw, f);
  LinMap id_b = LinMap::identity(db, f);
  LinMap id_a = LinMap::identity(da, f);
  Report rep;
  check_eq(rep, "left module", {db, db, dw},
           compose(b.left_action, kron(b.left_alg.mul, id_w)),
           compose(b.left_action, kron(id_b, b.left_action)));
  check_eq(rep, "left unit", {dw},
           compose(b.left_action, kron(b.left_alg.unit, id_w)), id_w);
  check_eq(rep, "right module", {dw, da, da},
           compose(b.right_action, kron(b.right_action, id_a)),
           compose(b.right_action, kron(id_w, b.right_alg.mul)));
  check_eq(rep, "right unit", {dw},
           compose(b.right_action, kron(id_w, b.right_alg.unit)), id_w);
  check_eq(rep, "bimodule commutation", {db, dw, da},
           compose(b.left_action, kron(id_b, b.right_action)),
           compose(b.right_action, kron(b.left_action, id_a)));
  return rep;
}

BraidedSystem mirror_system(const BraidedSystem& s) {
  uint32_t r = s.rank();
  Field f = s.field();
  std::vector<BasedSpace> comps(r);
  for (uint32_t a = 0; a < r; ++a) comps[a] = s.components[r - 1 - a];
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  for (uint32_t a = 0; a < r; ++a)
    for (uint32_t b = a; b < r; ++b) {
      uint32_t i = r - 1 - b, j = r - 1 - a;  // i <= j
      LinMap swap_ji = pair_swap(s.components[j], s.components[i], f);
      sg[{a, b}] = compose(swap_ji, compose(s.braiding(i, j), swap_ji));
    }
  std::vector<std::optional<LinMap>> units(r), counits(r);
  for (uint32_t a = 0; a < r; ++a) {
    if (s.units.size() == r) units[a] = s.units[r - 1 - a];
    if (s.counits.size() == r) counits[a] = s.counits[r - 1 - a];
  }
  BraidedSystem out = make_braided_system(std::move(comps), std::move(sg),
                                          std::move(units), std::move(counits));
  out.verified = s.verified;  // the mirror reflects every braid diagram
  return out;
}

BraidedSystem subsystem(const BraidedSystem& s, uint32_t lo, uint32_t hi) {
  uint32_t r = s.rank();
  require(lo <= hi && hi < r, "subsystem range out of bounds");
  std::vector<BasedSpace> comps(s.components.begin() + lo,
                                s.components.begin() + hi + 1);
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  for (uint32_t i = lo; i <= hi; ++i)
    for (uint32_t j = i; j <= hi; ++j) sg[{i - lo, j - lo}] = s.braiding(i, j);
  std::vector<std::optional<LinMap>> units, counits;
  if (s.units.size() == r)
    units.assign(s.units.begin() + lo, s.units.begin() + hi + 1);
  if (s.counits.size() == r)
    counits.assign(s.counits.begin() + lo, s.counits.begin() + hi + 1);
  BraidedSystem out = make_braided_system(std::move(comps), std::move(sg),
                                          std::move(units), std::move(counits));
  out.verified = s.verified;
  return out;
}

BraidedModule left_right_transport(const BraidedModule& m, ModuleSide target) {
  if (m.side == target) return m;
  const BraidedSystem& s = m.system;
  uint32_t r = s.rank();
  Field f = s.field();
  std::vector<LinMap> acts(r);
  for (uint32_t a = 0; a < r; ++a) {
    uint32_t i = r - 1 - a;
    LinMap sw = target == ModuleSide::left
                    ? pair_swap(s.components[i], m.space, f)
                    : pair_swap(m.space, s.components[i], f);
    acts[a] = compose(m.actions[i], sw);
  }
  return {m.space, std::move(acts), target, mirror_system(s)};
}

Algebra dual_algebra(const Coalgebra& c) {
  TensorWord cw = word_of({c.space});
  return {dual_space(c.space),
          dual_map(c.comul, cw, word_of({c.space, c.space})),
          dual_map(c.counit, cw, TensorWord{})};
}

AlgebraModule mod_comod_transport(const Coalgebra& c, const BasedSpace& m_space,
                                  const LinMap& delta) {
  Field f = delta.field();
  uint32_t dm = m_space.dim, dc = c.space.dim;
  require(delta.rows() == (uint64_t)dm * dc && delta.cols() == dm,
          "coaction has wrong shape");
  LinMap id_m = LinMap::identity(dm, f);
  LinMap id_cs = LinMap::identity(dc, f);
  LinMap act = compose(kron(id_m, ev_flip(c.space, f)), kron(delta, id_cs));
  return {m_space, dual_algebra(c), std::move(act)};
}

LinMap comod_from_module(const Coalgebra& c, const AlgebraModule& m) {
  Field f = m.action.field();
  LinMap id_m = LinMap::identity(m.space.dim, f);
  LinMap id_c = LinMap::identity(c.space.dim, f);
  return compose(kron(m.action, id_c), kron(id_m, coev_flip(c.space, f)));
}

BraidedModule hopf_module_to_braided(const Bialgebra& h,
                                     const BasedSpace& m_space,
                                     const LinMap& rho, const LinMap& delta) {
  Field f = h.field();
  const BasedSpace& H = h.space;
  uint32_t dm = m_space.dim, d = H.dim;
  require(rho.rows() == dm && rho.cols() == (uint64_t)dm * d,
          "action has wrong shape");
  require(delta.rows() == (uint64_t)dm * d && delta.cols() == dm,
          "coaction has wrong shape");
  LinMap id_m = LinMap::identity(dm, f);
  LinMap id_h = LinMap::identity(d, f);

  Report rep;
  check_eq(rep, "right module", {dm, d, d}, compose(rho, kron(rho, id_h)),
           compose(rho, kron(id_m, h.mul)));
  check_eq(rep, "right unit", {dm}, compose(rho, kron(id_m, h.unit)), id_m);
  check_eq(rep, "right comodule", {dm}, compose(kron(delta, id_h), delta),
           compose(kron(id_m, h.comul), delta));
  check_eq(rep, "right counit", {dm}, compose(kron(id_m, h.counit), delta),
           id_m);
  LinMap mid = perm_operator({0, 2, 1, 3}, word_of({m_space, H, H, H}), f);
  check_eq(rep, "Hopf compatibility", {dm, d}, compose(delta, rho),
           compose(kron(rho, h.mul), compose(mid, kron(delta, h.comul))));
  pass_or_throw(rep, "not a Hopf module");

  LinMap delta_co =
      compose(kron(id_m, ev_flip(H, f)), kron(delta, LinMap::identity(d, f)));
  return {m_space, {rho, std::move(delta_co)}, ModuleSide::right, build_B(h)};
}

std::pair<LinMap, LinMap> braided_to_hopf_module(const BraidedModule& m,
                                                 const Bialgebra& h) {
  require(m.actions.size() == 2 && m.side == ModuleSide::right,
          "expected a right module over the rank-2 bialgebra system");
  Field f = h.field();
  LinMap id_m = LinMap::identity(m.space.dim, f);
  LinMap id_h = LinMap::identity(h.dim(), f);
  LinMap delta =
      compose(kron(m.actions[1], id_h), kron(id_m, coev_flip(h.space, f)));
  return {m.actions[0], std::move(delta)};
}

Report check_hopf_bimodule(const HopfBimoduleData& d, const Bialgebra& h) {
  Field f = h.field();
  const BasedSpace& H = h.space;
  const BasedSpace& M = d.space;
  uint32_t dm = M.dim, dh = H.dim;
  require(d.rho.rows() == dm && d.rho.cols() == (uint64_t)dm * dh,
          "rho has wrong shape");
  require(d.lambda.rows() == dm && d.lambda.cols() == (uint64_t)dh * dm,
          "lambda has wrong shape");
  require(d.delta.rows() == (uint64_t)dm * dh && d.delta.cols() == dm,
          "delta has wrong shape");
  require(d.gamma.rows() == (uint64_t)dh * dm && d.gamma.cols() == dm,
          "gamma has wrong shape");
  LinMap id_m = LinMap::identity(dm, f);
  LinMap id_h = LinMap::identity(dh, f);

  Report rep;
  check_eq(rep, "right module", {dm, dh, dh},
           compose(d.rho, kron(d.rho, id_h)),
           compose(d.rho, kron(id_m, h.mul)));
  check_eq(rep, "right unit", {dm}, compose(d.rho, kron(id_m, h.unit)), id_m);
  check_eq(rep, "left module", {dh, dh, dm},
           compose(d.lambda, kron(h.mul, id_m)),
           compose(d.lambda, kron(id_h, d.lambda)));
  check_eq(rep, "left unit", {dm}, compose(d.lambda, kron(h.unit, id_m)),
           id_m);
  check_eq(rep, "bimodule compatibility", {dh, dm, dh},
           compose(d.lambda, kron(id_h, d.rho)),
           compose(d.rho, kron(d.lambda, id_h)));
  check_eq(rep, "right comodule", {dm}, compose(kron(d.delta, id_h), d.delta),
           compose(kron(id_m, h.comul), d.delta));
  check_eq(rep, "right counit", {dm}, compose(kron(id_m, h.counit), d.delta),
           id_m);
  check_eq(rep, "left comodule", {dm}, compose(kron(h.comul, id_m), d.gamma),
           compose(kron(id_h, d.gamma), d.gamma));
  check_eq(rep, "left counit", {dm}, compose(kron(h.counit, id_m), d.gamma),
           id_m);
  check_eq(rep, "bicomodule compatibility", {dm},
           compose(kron(d.gamma, id_h), d.delta),
           compose(kron(id_h, d.delta), d.gamma));

  // The four Hopf compatibilities: coaction of an action equals the
  // action-and-multiply of the spread legs, middle factors swapped.
  LinMap mid_mhhh = perm_operator({0, 2, 1, 3}, word_of({M, H, H, H}), f);
  check_eq(rep, "Hopf compatibility (rho, delta)", {dm, dh},
           compose(d.delta, d.rho),
           compose(kron(d.rho, h.mul),
                   compose(mid_mhhh, kron(d.delta, h.comul))));
  LinMap mid_hhmh = perm_operator({0, 2, 1, 3}, word_of({H, H, M, H}), f);
  check_eq(rep, "Hopf compatibility (lambda, delta)", {dh, dm},
           compose(d.delta, d.lambda),
           compose(kron(d.lambda, h.mul),
                   compose(mid_hhmh, kron(h.comul, d.delta))));
  LinMap mid_hmhh = perm_operator({0, 2, 1, 3}, word_of({H, M, H, H}), f);
  check_eq(rep, "Hopf compatibility (rho, gamma)", {dm, dh},
           compose(d.gamma, d.rho),
           compose(kron(h.mul, d.rho),
                   compose(mid_hmhh, kron(d.gamma, h.comul))));
  LinMap mid_hhhm = perm_operator({0, 2, 1, 3}, word_of({H, H, H, M}), f);
  check_eq(rep, "Hopf compatibility (lambda, gamma)", {dh, dm},
           compose(d.gamma, d.lambda),
           compose(kron(h.mul, d.lambda),
                   compose(mid_hhhm, kron(h.comul, d.gamma))));
  return rep;
}

BraidedModule hopf_bimodule_to_braided(const HopfBimoduleData& d,
                                       const Bialgebra& h) {
  pass_or_throw(check_hopf_bimodule(d, h), "not a Hopf bimodule");
  Field f = h.field();
  const BasedSpace& H = h.space;
  BasedSpace Hs = dual_space(H);
  uint32_t dm = d.space.dim, dh = H.dim;
  LinMap id_m = LinMap::identity(dm, f);
  LinMap id_hs = LinMap::identity(dh, f);

  LinMap r_lambda = compose(d.lambda, pair_swap(d.space, H, f));
  LinMap delta_co =
      compose(kron(id_m, ev_flip(H, f)), kron(d.delta, id_hs));
  LinMap gamma_co =
      compose(kron(evaluation(H, f), id_m), kron(id_hs, d.gamma));
  LinMap r_gamma_co = compose(gamma_co, pair_swap(d.space, Hs, f));
  return {d.space,
          {d.rho, std::move(r_lambda), std::move(delta_co),
           std::move(r_gamma_co)},
          ModuleSide::right,
          build_Bprime(h)};
}

HopfBimoduleData braided_to_hopf_bimodule(const BraidedModule& m,
                                          const Bialgebra& h) {
  require(m.actions.size() == 4 && m.side == ModuleSide::right,
          "expected a right module over the rank-4 bialgebra system");
  Field f = h.field();
  const BasedSpace& H = h.space;
  BasedSpace Hs = dual_space(H);
  LinMap id_m = LinMap::identity(m.space.dim, f);
  LinMap id_h = LinMap::identity(H.dim, f);

  LinMap lambda = compose(m.actions[1], pair_swap(H, m.space, f));
  LinMap delta =
      compose(kron(m.actions[2], id_h), kron(id_m, coev_flip(H, f)));
  LinMap gamma_co = compose(m.actions[3], pair_swap(Hs, m.space, f));
  LinMap gamma = compose(kron(id_h, gamma_co),
                         kron(coevaluation(H, f), id_m));
  return {m.space, m.actions[0], std::move(lambda), std::move(delta),
          std::move(gamma)};
}

AlgebraModule braided_to_btp_module(const BraidedModule& m) {
  require(m.side == ModuleSide::right, "expected a right braided module");
  pass_or_throw(check_braided_module(m, /*require_pointed=*/true),
                "not a pointed braided module");
  const BraidedSystem& s = m.system;
  uint32_t r = s.rank();
  BraidedTensorAlgebra bt = braided_tensor_product(s);

  // rho = rho_0 o (rho_1 (x) Id) o ... o (rho_{r-1} (x) Id ... Id)
  // on M (x) V_{r-1} (x) ... (x) V_0.
  TensorWord ctx;
  ctx.factors.push_back(m.space);
  for (uint32_t k = r; k-- > 0;) ctx.factors.push_back(s.components[k]);
  LinMap act = embed_at(m.actions[r - 1], 1, ctx);
  for (uint32_t k = r - 1; k-- > 0;) {
    ctx.factors.erase(ctx.factors.begin() + 1);
    act = compose(embed_at(m.actions[k], 1, ctx), act);
  }
  return {m.space, bt.algebra, std::move(act)};
}

BraidedModule btp_module_to_braided(const AlgebraModule& am,
                                    const BraidedSystem& s) {
  require(s.pointed(), "the system must be pointed");
  uint32_t r = s.rank();
  Field f = s.field();
  uint64_t prod = 1;
  for (const BasedSpace& v : s.components) prod *= v.dim;
  require(am.action.rows() == am.space.dim &&
              am.action.cols() == am.space.dim * prod,
          "action has wrong shape");
  LinMap id_m = LinMap::identity(am.space.dim, f);
  std::vector<LinMap> acts;
  acts.reserve(r);
  for (uint32_t j = 0; j < r; ++j) {
    LinMap iota = LinMap::identity(1, f);
    for (uint32_t a = r; a-- > 0;)
      iota = kron(iota, a == j ? LinMap::identity(s.components[j].dim, f)
                               : *s.units[a]);
    acts.push_back(compose(am.action, kron(id_m, iota)));
  }
  return {am.space, std::move(acts), ModuleSide::right, s};
}

BraidedModule transport_module(const BraidedModule& m, const Perm& theta) {
  const BraidedSystem& s = m.system;
  uint32_t r = s.rank();
  require(theta.size() == r, "permutation length must match the rank");
  BraidedSystem target = permute_system(s, theta);
  std::vector<LinMap> acts(r, LinMap::identity(1, s.field()));
  for (uint32_t i = 0; i < r; ++i) acts[theta[i]] = m.actions[i];
  return {m.space, std::move(acts), m.side, std::move(target)};
}

BraidedModule adjoint_module(const BraidedSystem& s, const BraidedModule& m,
                             uint32_t t, uint32_t n) {
  uint32_t r = s.rank();
  require(t < r, "acting component index out of range");
  require(m.side == ModuleSide::right, "expected a right braided module");
  require(m.system.components == s.components,
          "the module does not live over the given system");
  pass_or_throw(check_braided_module(m), "not a braided module");
  Field f = s.field();
  BraidedSystem sub = subsystem(s, t, r - 1);
  if (n == 0) {
    std::vector<LinMap> acts(m.actions.begin() + t, m.actions.end());
    return {m.space, std::move(acts), ModuleSide::right, std::move(sub)};
  }

  // Ordered degree-n words in the colors 0..t, lexicographically.
  std::vector<std::vector<uint32_t>> words;
  std::vector<uint32_t> cur;
  auto gen = [&](auto&& self, uint32_t start) -> void {
    if (cur.size() == n) {
      words.push_back(cur);
      return;
    }
    for (uint32_t c = start; c <= t; ++c) {
      cur.push_back(c);
      self(self, c);
      cur.pop_back();
    }
  };
  gen(gen, 0);

  std::vector<TensorWord> tws;
  std::vector<uint64_t> offset;
  uint64_t total = 0;
  for (const auto& w : words) {
    TensorWord tw;
    for (uint32_t c : w) tw.factors.push_back(s.components[c]);
    offset.push_back(total);
    total += tw.dim();
    tws.push_back(std::move(tw));
  }
  uint32_t dm = m.space.dim;
  uint64_t big_dim = dm * total;

  std::vector<std::string> names;
  names.reserve(big_dim);
  for (uint32_t mi = 0; mi < dm; ++mi)
    for (size_t wi = 0; wi < words.size(); ++wi)
      for (uint64_t q = 0; q < tws[wi].dim(); ++q)
        names.push_back(m.space.basis_names[mi] + "|" +
                        tws[wi].basis_name(q));
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
      for (uint64_t i = 0; i < big_dim; ++i) names[i] += "@" + std::to_string(i);
  }
  BasedSpace big = make_space(
      m.space.label + "(x)T^" + std::to_string(n), std::move(names));

  std::vector<LinMap> acts;
  for (uint32_t i = t; i < r; ++i) {
    uint32_t di = s.components[i].dim;
    std::vector<Entry> es;
    for (size_t wi = 0; wi < words.size(); ++wi) {
      const std::vector<uint32_t>& w = words[wi];
      uint32_t wd = (uint32_t)tws[wi].dim();
      // pull the incoming letter leftwards across the word
      LinMap pull = LinMap::identity((uint64_t)wd * di, f);
      for (uint32_t k = n; k >= 1; --k) {
        TensorWord stage;
        for (uint32_t a = 0; a < k; ++a)
          stage.factors.push_back(s.components[w[a]]);
        stage.factors.push_back(s.components[i]);
        for (uint32_t a = k; a < n; ++a)
          stage.factors.push_back(s.components[w[a]]);
        pull = compose(embed_at(s.braiding(w[k - 1], i), k, stage), pull);
      }
      LinMap op = compose(kron(m.actions[i], LinMap::identity(wd, f)),
                          kron(LinMap::identity(dm, f), pull));
      for (const Entry& e : op.entries()) {
        uint32_t mp = e.row / wd, qp = e.row % wd;
        uint32_t v = e.col % di;
        uint32_t rest = e.col / di;
        uint32_t q = rest % wd, mm = rest / wd;
        es.push_back({(uint32_t)(mp * total + offset[wi] + qp),
                      (uint32_t)(((mm * total + offset[wi] + q)) * di + v),
                      e.val});
      }
    }
    acts.push_back(
        LinMap::from_entries((uint32_t)big_dim, (uint32_t)(big_dim * di),
                             std::move(es), f));
  }
  return {std::move(big), std::move(acts), ModuleSide::right, std::move(sub)};
}

HopfBimoduleData bar_hopf_bimodule(const Bialgebra& h,
                                   const HopfBimoduleData& d, uint32_t n) {
  pass_or_throw(check_hopf_bimodule(d, h), "not a Hopf bimodule");
  if (n == 0) return d;
  Field f = h.field();
  const BasedSpace& H = h.space;
  const BasedSpace& M = d.space;

  TensorWord mw;
  mw.factors.push_back(M);
  for (uint32_t k = 0; k < n; ++k) mw.factors.push_back(H);
  BasedSpace big = word_space(
      mw, M.label + "(x)" + H.label + "^" + std::to_string(n));

  TensorWord ctx_rho = mw;
  ctx_rho.factors.push_back(H);
  LinMap rho_bar = embed_at(h.mul, n + 1, ctx_rho);

  TensorWord ctx_lam;
  ctx_lam.factors.push_back(H);
  for (const BasedSpace& v : mw.factors) ctx_lam.factors.push_back(v);
  LinMap lambda_bar = embed_at(d.lambda, 1, ctx_lam);

  Perm deint = perm_inverse(omega_interleave(n + 1));

  // delta_bar: spread all legs, de-interleave [M, x_(1)'s | m_(1), x_(2)'s],
  // then multiply the trailing block together left to right.
  TensorWord inter_d;
  inter_d.factors.push_back(M);
  for (uint32_t k = 0; k < 2 * n + 1; ++k) inter_d.factors.push_back(H);
  LinMap delta_bar = compose(perm_operator(deint, inter_d, f),
                             kron(d.delta, kron_power(h.comul, n, f)));
  for (uint32_t k = 0; k < n; ++k) {
    TensorWord ctx;
    ctx.factors.push_back(M);
    for (uint32_t a = 0; a < 2 * n + 1 - k; ++a) ctx.factors.push_back(H);
    delta_bar = compose(embed_at(h.mul, n + 2, ctx), delta_bar);
  }

  // gamma_bar: same with the left coaction; the collected block leads.
  TensorWord inter_g;
  inter_g.factors.push_back(H);
  inter_g.factors.push_back(M);
  for (uint32_t k = 0; k < 2 * n; ++k) inter_g.factors.push_back(H);
  LinMap gamma_bar = compose(perm_operator(deint, inter_g, f),
                             kron(d.gamma, kron_power(h.comul, n, f)));
  for (uint32_t k = 0; k < n; ++k) {
    TensorWord ctx;
    for (uint32_t a = 0; a < n + 1 - k; ++a) ctx.factors.push_back(H);
    ctx.factors.push_back(M);
    for (uint32_t a = 0; a < n; ++a) ctx.factors.push_back(H);
    gamma_bar = compose(embed_at(h.mul, 1, ctx), gamma_bar);
  }

  return {std::move(big), std::move(rho_bar), std::move(lambda_bar),
          std::move(delta_bar), std::move(gamma_bar)};
}

Bimodule crossed_power_bimodule(const BicomoduleAlgebra& c, uint32_t n,
                                const LinMap& eps_a, const LinMap& eps_b,
                                const ModuleAlgebra& a_left,
                                const ModuleAlgebra& b_right,
                                const Bialgebra& h) {
  Field f = h.field();
  require(is_algebra_character(a_left.alg, eps_a),
          "eps_a is not an algebra character");
  require(is_algebra_character(b_right.alg, eps_b),
          "eps_b is not an algebra character");
  BraidedSystem sys = build_crossed_system(a_left, b_right, c, h);
  if (!sys.warnings.empty())
    throw std::invalid_argument("crossed system axioms fail: " +
                                sys.warnings.front());

  const BasedSpace& A = a_left.alg.space;
  const BasedSpace& B = b_right.alg.space;
  const BasedSpace& C = c.alg.space;
  const BasedSpace& H = h.space;
  if (n == 0) {
    Bimodule out{unit_space(), b_right.alg, a_left.alg, eps_b, eps_a};
    pass_or_throw(check_bimodule(out), "crossed power bimodule");
    return out;
  }

  TensorWord cn = power_word(C, n);
  BasedSpace big = word_space(cn, C.label + "^" + std::to_string(n));
  Perm deint = perm_inverse(omega_interleave(n));

  // Right action: collect the left legs of every letter into one H, carry it
  // over to act on the incoming A, erase with eps_a.
  TensorWord inter_l;
  for (uint32_t k = 0; k < n; ++k) {
    inter_l.factors.push_back(H);
    inter_l.factors.push_back(C);
  }
  LinMap right =
      kron(compose(perm_operator(deint, inter_l, f),
                   kron_power(c.left_coaction, n, f)),
           LinMap::identity(A.dim, f));
  for (uint32_t k = 0; k + 1 < n; ++k) {
    TensorWord ctx = repeat_word(H, n - k, C, n);
    ctx.factors.push_back(A);
    right = compose(embed_at(h.mul, 1, ctx), right);
  }
  {
    TensorWord ctx = repeat_word(H, 1, C, n);
    ctx.factors.push_back(A);
    Perm th(n + 2);
    th[0] = 0;
    for (uint32_t j = 1; j <= n; ++j) th[j] = j + 1;
    th[n + 1] = 1;
    right = compose(perm_operator(th, ctx, f), right);
    TensorWord ctx2;
    ctx2.factors.push_back(H);
    ctx2.factors.push_back(A);
    for (uint32_t k = 0; k < n; ++k) ctx2.factors.push_back(C);
    right = compose(embed_at(a_left.action, 1, ctx2), right);
    TensorWord ctx3;
    ctx3.factors.push_back(A);
    for (uint32_t k = 0; k < n; ++k) ctx3.factors.push_back(C);
    right = compose(embed_at(eps_a, 1, ctx3), right);
  }

  // Left action: mirror image through the right legs, B and eps_b.
  TensorWord inter_r;
  for (uint32_t k = 0; k < n; ++k) {
    inter_r.factors.push_back(C);
    inter_r.factors.push_back(H);
  }
  LinMap left = kron(LinMap::identity(B.dim, f),
                     compose(perm_operator(deint, inter_r, f),
                             kron_power(c.right_coaction, n, f)));
  for (uint32_t k = 0; k + 1 < n; ++k) {
    TensorWord ctx;
    ctx.factors.push_back(B);
    for (uint32_t a = 0; a < n; ++a) ctx.factors.push_back(C);
    for (uint32_t a = 0; a < n - k; ++a) ctx.factors.push_back(H);
    left = compose(embed_at(h.mul, n + 2, ctx), left);
  }
  {
    TensorWord ctx;
    ctx.factors.push_back(B);
    for (uint32_t a = 0; a < n; ++a) ctx.factors.push_back(C);
    ctx.factors.push_back(H);
    Perm th(n + 2);
    th[0] = n;
    for (uint32_t j = 1; j <= n; ++j) th[j] = j - 1;
    th[n + 1] = n + 1;
    left = compose(perm_operator(th, ctx, f), left);
    TensorWord ctx2 = repeat_word(C, n, B, 1);
    ctx2.factors.push_back(H);
    left = compose(embed_at(b_right.action, n + 1, ctx2), left);
    TensorWord ctx3 = repeat_word(C, n, B, 1);
    left = compose(embed_at(eps_b, n + 1, ctx3), left);
  }

  Bimodule out{std::move(big), b_right.alg, a_left.alg, std::move(left),
               std::move(right)};
  pass_or_throw(check_bimodule(out), "crossed power bimodule");
  return out;
}

Bimodule hstar_bimodule(const Bialgebra& h, uint32_t n) {
  Field f = h.field();
  const BasedSpace& H = h.space;
  BasedSpace Hs = dual_space(H);
  Algebra conv = dual_algebra(h.coalgebra());
  if (n == 0) {
    LinMap ns = nu_star(h);
    Bimodule out{unit_space(), conv, conv, ns, ns};
    pass_or_throw(check_bimodule(out), "dual-algebra power bimodule");
    return out;
  }

  BasedSpace big = word_space(power_word(H, n),
                              H.label + "^" + std::to_string(n));
  LinMap mu_star = dual_map(h.mul, word_of({H, H}), word_of({H}));
  LinMap iter = LinMap::identity(H.dim, f);
  for (uint32_t k = 1; k < n; ++k)
    iter = compose(embed_at(mu_star, 1, power_word(Hs, k)), iter);
  LinMap legs = compose(
      perm_operator(perm_inverse(omega_interleave(n)), power_word(H, 2 * n), f),
      kron_power(h.comul, n, f));

  // Right action <l, x1_(2) ... xn_(2)> x1_(1)..xn_(1): the second legs sit
  // against the reversed convolution legs of l, so the evaluations nest from
  // the middle outwards.
  LinMap right = kron(legs, iter);
  for (uint32_t k = n; k >= 1; --k)
    right = compose(embed_at(ev_flip(H, f), n + k, repeat_word(H, n + k, Hs, k)),
                    right);

  // Left action <l, x1_(1) ... xn_(1)> x1_(2)..xn_(2): same nesting on the
  // other side, plain evaluations.
  LinMap left = kron(iter, legs);
  for (uint32_t k = 1; k <= n; ++k)
    left = compose(embed_at(evaluation(H, f), n - k + 1,
                            repeat_word(Hs, n - k + 1, H, 2 * n - k + 1)),
                   left);

  Bimodule out{std::move(big), conv, conv, std::move(left), std::move(right)};
  pass_or_throw(check_bimodule(out), "dual-algebra power bimodule");
  return out;
}

AdjointActions adjoint_actions(const Bialgebra& h, uint32_t n, uint32_t m) {
  Field f = h.field();
  const BasedSpace& H = h.space;
  BasedSpace Hs = dual_space(H);
  uint32_t d = H.dim;
  TensorWord word = repeat_word(H, n, Hs, m);
  auto id_pow = [&](uint32_t k) {
    uint64_t dim = 1;
    for (uint32_t a = 0; a < k; ++a) dim *= d;
    return LinMap::identity(dim, f);
  };

  AdjointActions out;
  if (m >= 1) {
    Bimodule hb = hstar_bimodule(h, n);
    out.hstar_pi = kron(hb.right_action, id_pow(m - 1));
    Perm th(n + m);
    for (uint32_t j = 0; j + 1 < n + m; ++j) th[j] = j + 1;
    th[n + m - 1] = 0;
    out.pi_hstar = compose(kron(hb.left_action, id_pow(m - 1)),
                           perm_operator(th, word, f));
  }
  if (n >= 1) {
    Bimodule db = hstar_bimodule(dual_bialgebra(h), m);
    out.pi_h = kron(id_pow(n - 1), db.left_action);
    Perm th(n + m);
    th[0] = n + m - 1;
    for (uint32_t j = 1; j < n + m; ++j) th[j] = j - 1;
    out.h_pi = compose(kron(id_pow(n - 1), db.right_action),
                       perm_operator(th, word, f));
  }
  return out;
}

}  // namespace braidkit
