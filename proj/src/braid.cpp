#include "braidkit/braid.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidkit {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string pair_str(uint32_t i, uint32_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Appends a named violation when lhs != rhs; the witness is the multi-index
// of the smallest domain basis column where the two sides disagree.
void check_eq(Report& rep, const std::string& axiom,
              const std::vector<uint32_t>& domain_dims, const LinMap& lhs,
              const LinMap& rhs) {
  LinMap diff = lhs - rhs;
  if (diff.is_zero()) return;
  uint32_t col = diff.entries().front().col;
  for (const Entry& e : diff.entries()) col = std::min(col, e.col);
  rep.push_back({axiom, unrank_index(col, domain_dims)});
}

LinMap pair_swap(const BasedSpace& v, const BasedSpace& w, Field f) {
  return perm_operator({1, 0}, word_of({v, w}), f);
}

// The algebra (H*, comul*, counit*) under rainbow duality.
Algebra dual_algebra(const Bialgebra& h) {
  TensorWord hw = word_of({h.space});
  TensorWord hh = word_of({h.space, h.space});
  return {dual_space(h.space), dual_map(h.comul, hw, hh),
          dual_map(h.counit, hw, TensorWord{})};
}

LinMap dual_counit(const Bialgebra& h) {  // nu* : H* -> I
  return dual_map(h.unit, TensorWord{}, word_of({h.space}));
}

}  // namespace

Field BraidedSystem::field() const {
  if (!sigma.empty()) return sigma.begin()->second.field();
  return Field{};
}

const LinMap& BraidedSystem::braiding(uint32_t i, uint32_t j) const {
  auto it = sigma.find({i, j});
  require(it != sigma.end(), "no braiding component " + pair_str(i, j));
  return it->second;
}

bool BraidedSystem::pointed() const {
  if (units.size() != components.size()) return false;
  return std::all_of(units.begin(), units.end(),
                     [](const std::optional<LinMap>& u) { return u.has_value(); });
}

bool BraidedSystem::bipointed() const {
  if (!pointed() || counits.size() != components.size()) return false;
  return std::all_of(counits.begin(), counits.end(),
                     [](const std::optional<LinMap>& e) { return e.has_value(); });
}

BraidedSystem make_braided_system(
    std::vector<BasedSpace> components,
    std::map<std::pair<uint32_t, uint32_t>, LinMap> sigma,
    std::vector<std::optional<LinMap>> units,
    std::vector<std::optional<LinMap>> counits) {
  uint32_t r = static_cast<uint32_t>(components.size());
  if (units.empty()) units.resize(r);
  if (counits.empty()) counits.resize(r);
  require(units.size() == r && counits.size() == r,
          "units/counits list length must match the number of components");

  for (const auto& kv : sigma) {
    auto [i, j] = kv.first;
    require(i <= j && j < r, "braiding key " + pair_str(i, j) + " out of range");
  }
  Field f = Field{};
  bool have_field = false;
  for (const auto& kv : sigma) {
    if (!have_field) { f = kv.second.field(); have_field = true; }
    require(kv.second.field() == f, "mixed fields among braiding components");
  }
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i; j < r; ++j) {
      auto it = sigma.find({i, j});
      require(it != sigma.end(), "missing braiding component " + pair_str(i, j));
      uint64_t prod = uint64_t(components[i].dim) * components[j].dim;
      require(it->second.rows() == prod && it->second.cols() == prod,
              "braiding component " + pair_str(i, j) + " has wrong shape");
    }
  for (uint32_t i = 0; i < r; ++i) {
    if (units[i]) {
      require(units[i]->rows() == components[i].dim && units[i]->cols() == 1,
              "unit of component " + std::to_string(i + 1) + " has wrong shape");
      require(!have_field || units[i]->field() == f, "unit field mismatch");
    }
    if (counits[i]) {
      require(counits[i]->rows() == 1 && counits[i]->cols() == components[i].dim,
              "counit of component " + std::to_string(i + 1) + " has wrong shape");
      require(!have_field || counits[i]->field() == f, "counit field mismatch");
    }
  }

  BraidedSystem s;
  s.components = std::move(components);
  s.sigma = std::move(sigma);
  s.units = std::move(units);
  s.counits = std::move(counits);

  // Semantic invariants become warnings: unit naturality on the off-diagonal
  // pairs (the diagonal associativity braidings satisfy only one half of it,
  // by design), and normalization of the unit/counit pairs.
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i + 1; j < r; ++j) {
      if (!s.units[i] || !s.units[j]) continue;
      const LinMap& sij = s.sigma.at({i, j});
      LinMap idi = LinMap::identity(s.components[i].dim, f);
      LinMap idj = LinMap::identity(s.components[j].dim, f);
      if (!(compose(sij, kron(*s.units[i], idj)) - kron(idj, *s.units[i]))
               .is_zero())
        s.warnings.push_back("braiding " + pair_str(i, j) +
                             " is not natural with respect to the unit of component " +
                             std::to_string(i + 1));
      if (!(compose(sij, kron(idi, *s.units[j])) - kron(*s.units[j], idi))
               .is_zero())
        s.warnings.push_back("braiding " + pair_str(i, j) +
                             " is not natural with respect to the unit of component " +
                             std::to_string(j + 1));
    }
  for (uint32_t i = 0; i < r; ++i) {
    if (!s.units[i] || !s.counits[i]) continue;
    if (!compose(*s.counits[i], *s.units[i]).is_identity())
      s.warnings.push_back("unit/counit pair of component " +
                           std::to_string(i + 1) + " is not normalized");
  }
  return s;
}

Report check_ybe(const BraidedSystem& s) {
  Report rep;
  uint32_t r = s.rank();
  Field f = s.field();
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i; j < r; ++j)
      for (uint32_t k = j; k < r; ++k) {
        LinMap idi = LinMap::identity(s.components[i].dim, f);
        LinMap idj = LinMap::identity(s.components[j].dim, f);
        LinMap idk = LinMap::identity(s.components[k].dim, f);
        const LinMap& sij = s.braiding(i, j);
        const LinMap& sik = s.braiding(i, k);
        const LinMap& sjk = s.braiding(j, k);
        LinMap lhs =
            compose(kron(sjk, idi), compose(kron(idj, sik), kron(sij, idk)));
        LinMap rhs =
            compose(kron(idk, sij), compose(kron(sik, idj), kron(idi, sjk)));
        if (!(lhs - rhs).is_zero()) rep.push_back({"ybe", {i + 1, j + 1, k + 1}});
      }
  return rep;
}

Report verify_system(BraidedSystem& s) {
  Report rep = check_ybe(s);
  s.verified = rep.empty();
  return rep;
}

LinMap sigma_ass(const Algebra& a) { return kron(a.unit, a.mul); }

LinMap sigma_ass_r(const Algebra& a) { return kron(a.mul, a.unit); }

LinMap sigma_coass(const Coalgebra& c) { return kron(c.counit, c.comul); }

LinMap sigma_bi(const Bialgebra& h) {
  Field f = h.field();
  const BasedSpace& H = h.space;
  BasedSpace Hs = dual_space(H);
  LinMap comul_dual = dual_map(h.mul, word_of({H, H}), word_of({H}));
  LinMap spread = kron(h.comul, comul_dual);  // H(x)H* -> H(x)H(x)H*(x)H*
  LinMap rev = perm_operator(reversal_perm(4), word_of({H, H, Hs, Hs}), f);
  LinMap id_h = LinMap::identity(H.dim, f);
  LinMap contract = kron(id_h, kron(evaluation(H, f), id_h));
  return compose(contract, compose(rev, spread));
}

BraidedSystem build_B(const Bialgebra& h, bool left_diagonals) {
  Algebra ah = h.algebra();
  Algebra ahs = dual_algebra(h);
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = left_diagonals ? sigma_ass(ah) : sigma_ass_r(ah);
  sg[{1, 1}] = sigma_ass(ahs);
  sg[{0, 1}] = sigma_bi(h);
  BraidedSystem s = make_braided_system(
      {ah.space, ahs.space}, std::move(sg), {h.unit, ahs.unit},
      {h.counit, dual_counit(h)});
  if (h.unchecked)
    for (const Violation& v : check_bialgebra(h))
      s.warnings.push_back("input bialgebra: " + v.str());
  for (const Violation& v : verify_system(s)) s.warnings.push_back(v.str());
  return s;
}

BraidedSystem build_Bprime(const Bialgebra& h, bool right_diagonals) {
  Field f = h.field();
  Bialgebra hop = twist(h, true, false);
  Bialgebra hcop = twist(h, false, true);
  Bialgebra hopcop = twist(h, true, true);
  Algebra diag[4] = {h.algebra(), hop.algebra(), dual_algebra(h),
                     dual_algebra(hcop)};
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  for (uint32_t i = 0; i < 4; ++i)
    sg[{i, i}] = right_diagonals ? sigma_ass_r(diag[i]) : sigma_ass(diag[i]);
  sg[{0, 1}] = pair_swap(diag[0].space, diag[1].space, f);
  sg[{2, 3}] = pair_swap(diag[2].space, diag[3].space, f);
  sg[{0, 2}] = sigma_bi(h);
  sg[{1, 2}] = sigma_bi(hop);
  sg[{0, 3}] = sigma_bi(hcop);
  sg[{1, 3}] = sigma_bi(hopcop);
  BraidedSystem s = make_braided_system(
      {diag[0].space, diag[1].space, diag[2].space, diag[3].space},
      std::move(sg), {h.unit, h.unit, diag[2].unit, diag[3].unit},
      {h.counit, h.counit, dual_counit(h), dual_counit(hcop)});
  if (h.unchecked)
    for (const Violation& v : check_bialgebra(h))
      s.warnings.push_back("input bialgebra: " + v.str());
  for (const Violation& v : verify_system(s)) s.warnings.push_back(v.str());
  return s;
}

BraidedSystem build_crossed_system(const ModuleAlgebra& a_left,
                                   const ModuleAlgebra& b_right,
                                   const BicomoduleAlgebra& c_bicomod,
                                   const Bialgebra& h) {
  Field f = h.field();
  const BasedSpace& A = a_left.alg.space;
  const BasedSpace& B = b_right.alg.space;
  const BasedSpace& C = c_bicomod.alg.space;
  const BasedSpace& H = h.space;
  uint32_t da = A.dim, db = B.dim, dc = C.dim, dh = H.dim;
  const LinMap& lam = a_left.action;
  const LinMap& rho = b_right.action;
  const LinMap& dl = c_bicomod.left_coaction;
  const LinMap& dr = c_bicomod.right_coaction;
  require(lam.rows() == da && lam.cols() == uint64_t(dh) * da,
          "left action must map H (x) A -> A");
  require(rho.rows() == db && rho.cols() == uint64_t(db) * dh,
          "right action must map B (x) H -> B");
  require(dl.rows() == uint64_t(dh) * dc && dl.cols() == dc,
          "left coaction must map C -> H (x) C");
  require(dr.rows() == uint64_t(dc) * dh && dr.cols() == dc,
          "right coaction must map C -> C (x) H");

  LinMap id_a = LinMap::identity(da, f);
  LinMap id_b = LinMap::identity(db, f);
  LinMap id_c = LinMap::identity(dc, f);
  LinMap id_h = LinMap::identity(dh, f);
  Perm mid_swap = {0, 2, 1, 3};

  Report rep;
  for (const Violation& v : check_uaa(a_left.alg)) rep.push_back({"A: " + v.axiom, v.witness});
  for (const Violation& v : check_uaa(b_right.alg)) rep.push_back({"B: " + v.axiom, v.witness});
  for (const Violation& v : check_uaa(c_bicomod.alg)) rep.push_back({"C: " + v.axiom, v.witness});

  check_eq(rep, "A: module-associativity", {dh, dh, da},
           compose(lam, kron(h.mul, id_a)), compose(lam, kron(id_h, lam)));
  check_eq(rep, "A: module-unit", {da}, compose(lam, kron(h.unit, id_a)), id_a);
  check_eq(rep, "A: module-algebra-mul", {dh, da, da},
           compose(lam, kron(id_h, a_left.alg.mul)),
           compose(a_left.alg.mul,
                   compose(kron(lam, lam),
                           compose(perm_operator(mid_swap, word_of({H, H, A, A}), f),
                                   kron(h.comul, kron(id_a, id_a))))));
  check_eq(rep, "A: module-algebra-unit", {dh}, compose(lam, kron(id_h, a_left.alg.unit)),
           compose(a_left.alg.unit, h.counit));

  check_eq(rep, "B: module-associativity", {db, dh, dh},
           compose(rho, kron(id_b, h.mul)), compose(rho, kron(rho, id_h)));
  check_eq(rep, "B: module-unit", {db}, compose(rho, kron(id_b, h.unit)), id_b);
  check_eq(rep, "B: module-algebra-mul", {db, db, dh},
           compose(rho, kron(b_right.alg.mul, id_h)),
           compose(b_right.alg.mul,
                   compose(kron(rho, rho),
                           compose(perm_operator(mid_swap, word_of({B, B, H, H}), f),
                                   kron(kron(id_b, id_b), h.comul)))));
  check_eq(rep, "B: module-algebra-unit", {dh}, compose(rho, kron(b_right.alg.unit, id_h)),
           compose(b_right.alg.unit, h.counit));

  check_eq(rep, "C: comodule-coassociativity-left", {dc},
           compose(kron(h.comul, id_c), dl), compose(kron(id_h, dl), dl));
  check_eq(rep, "C: comodule-counit-left", {dc}, compose(kron(h.counit, id_c), dl),
           id_c);
  check_eq(rep, "C: comodule-coassociativity-right", {dc},
           compose(kron(dr, id_h), dr), compose(kron(id_c, h.comul), dr));
  check_eq(rep, "C: comodule-counit-right", {dc}, compose(kron(id_c, h.counit), dr),
           id_c);
  check_eq(rep, "C: bicomodule-compatibility", {dc}, compose(kron(id_h, dr), dl),
           compose(kron(dl, id_h), dr));
  check_eq(rep, "C: comodule-algebra-mul-left", {dc, dc},
           compose(dl, c_bicomod.alg.mul),
           compose(kron(h.mul, c_bicomod.alg.mul),
                   compose(perm_operator(mid_swap, word_of({H, C, H, C}), f),
                           kron(dl, dl))));
  check_eq(rep, "C: comodule-algebra-unit-left", {}, compose(dl, c_bicomod.alg.unit),
           kron(h.unit, c_bicomod.alg.unit));
  check_eq(rep, "C: comodule-algebra-mul-right", {dc, dc},
           compose(dr, c_bicomod.alg.mul),
           compose(kron(c_bicomod.alg.mul, h.mul),
                   compose(perm_operator(mid_swap, word_of({C, H, C, H}), f),
                           kron(dr, dr))));
  check_eq(rep, "C: comodule-algebra-unit-right", {}, compose(dr, c_bicomod.alg.unit),
           kron(c_bicomod.alg.unit, h.unit));

  if (!rep.empty()) {
    std::string msg = "crossed-product input fails:";
    for (const Violation& v : rep) msg += " [" + v.str() + "]";
    throw std::invalid_argument(msg);
  }

  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = sigma_ass(b_right.alg);
  sg[{1, 1}] = sigma_ass(c_bicomod.alg);
  sg[{2, 2}] = sigma_ass(a_left.alg);
  sg[{0, 1}] = compose(kron(id_c, rho),
                       compose(perm_operator({1, 0, 2}, word_of({B, C, H}), f),
                               kron(id_b, dr)));
  sg[{1, 2}] = compose(kron(lam, id_c),
                       compose(perm_operator({0, 2, 1}, word_of({H, C, A}), f),
                               kron(dl, id_a)));
  sg[{0, 2}] = pair_swap(B, A, f);
  BraidedSystem s = make_braided_system(
      {B, C, A}, std::move(sg),
      {b_right.alg.unit, c_bicomod.alg.unit, a_left.alg.unit}, {});
  if (h.unchecked)
    for (const Violation& v : check_bialgebra(h))
      s.warnings.push_back("input bialgebra: " + v.str());
  for (const Violation& v : verify_system(s)) s.warnings.push_back(v.str());
  return s;
}

Report check_braided_morphism(const std::vector<LinMap>& maps,
                              const BraidedSystem& src,
                              const BraidedSystem& dst) {
  uint32_t r = src.rank();
  require(dst.rank() == r, "systems have different ranks");
  require(maps.size() == r, "morphism must provide one map per component");
  for (uint32_t i = 0; i < r; ++i)
    require(maps[i].rows() == dst.components[i].dim &&
                maps[i].cols() == src.components[i].dim,
            "component map " + std::to_string(i + 1) + " has wrong shape");
  Report rep;
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i; j < r; ++j) {
      LinMap lhs = compose(kron(maps[j], maps[i]), src.braiding(i, j));
      LinMap rhs = compose(dst.braiding(i, j), kron(maps[i], maps[j]));
      if (!(lhs - rhs).is_zero()) rep.push_back({"braiding-compat", {i + 1, j + 1}});
    }
  for (uint32_t i = 0; i < r; ++i) {
    if (i < src.units.size() && i < dst.units.size() && src.units[i] &&
        dst.units[i] &&
        !(compose(maps[i], *src.units[i]) - *dst.units[i]).is_zero())
      rep.push_back({"unit-preservation", {i + 1}});
    if (i < src.counits.size() && i < dst.counits.size() && src.counits[i] &&
        dst.counits[i] &&
        !(compose(*dst.counits[i], maps[i]) - *src.counits[i]).is_zero())
      rep.push_back({"counit-preservation", {i + 1}});
  }
  return rep;
}

BraidedSystem permute_system(const BraidedSystem& s, const Perm& theta) {
  uint32_t r = s.rank();
  require(theta.size() == r, "permutation length must match the rank");
  std::vector<bool> seen(r, false);
  for (uint32_t t : theta) {
    require(t < r && !seen[t], "not a permutation");
    seen[t] = true;
  }
  Perm inv = perm_inverse(theta);
  std::vector<BasedSpace> comps(r);
  std::vector<std::optional<LinMap>> units(r), counits(r);
  for (uint32_t i = 0; i < r; ++i) {
    comps[theta[i]] = s.components[i];
    if (i < s.units.size()) units[theta[i]] = s.units[i];
    if (i < s.counits.size()) counits[theta[i]] = s.counits[i];
  }
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  for (uint32_t a = 0; a < r; ++a)
    for (uint32_t b = a; b < r; ++b) {
      uint32_t i = inv[a], j = inv[b];
      if (i <= j) {
        sg[{a, b}] = s.braiding(i, j);
      } else {
        auto ivm = try_inverse(s.braiding(j, i));
        require(ivm.has_value(), "braiding component " + pair_str(j, i) +
                                     " is not invertible");
        sg[{a, b}] = *ivm;
      }
    }
  BraidedSystem out = make_braided_system(std::move(comps), std::move(sg),
                                          std::move(units), std::move(counits));
  out.warnings.insert(out.warnings.begin(), s.warnings.begin(), s.warnings.end());
  out.verified = s.verified;  // inverses on reversed pairs preserve the YBE
  return out;
}

BraidedSystem glue(const BraidedSystem& s, uint32_t lo, uint32_t hi) {
  uint32_t r = s.rank();
  require(lo <= hi && hi < r, "glue range out of bounds");
  if (lo == hi) return s;
  Field f = s.field();

  std::map<std::pair<uint32_t, uint32_t>, LinMap> below;  // (j,i) -> sigma^{-1}
  for (uint32_t i = lo; i <= hi; ++i)
    for (uint32_t j = i + 1; j <= hi; ++j) {
      auto ivm = try_inverse(s.braiding(i, j));
      require(ivm.has_value(), "cannot glue: braiding component " +
                                   pair_str(i, j) + " is not invertible");
      below.emplace(std::make_pair(i, j), *ivm);
    }

  std::vector<uint32_t> offset(r, 0);
  uint32_t glued_dim = 0;
  for (uint32_t i = lo; i <= hi; ++i) {
    offset[i] = glued_dim;
    glued_dim += s.components[i].dim;
  }
  std::vector<std::string> names;
  std::string label;
  for (uint32_t i = lo; i <= hi; ++i) {
    if (i > lo) label += "+";
    label += s.components[i].label;
    for (const std::string& n : s.components[i].basis_names) names.push_back(n);
  }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      names.clear();
      for (uint32_t i = lo; i <= hi; ++i)
        for (const std::string& n : s.components[i].basis_names)
          names.push_back(std::to_string(i + 1) + ":" + n);
    }
  }
  BasedSpace glued = make_space(label, names);

  uint32_t nr = r - (hi - lo);
  auto range_of = [&](uint32_t a) -> std::pair<uint32_t, uint32_t> {
    if (a < lo) return {a, a};
    if (a == lo) return {lo, hi};
    return {a + (hi - lo), a + (hi - lo)};
  };
  std::vector<BasedSpace> comps(nr);
  std::vector<std::optional<LinMap>> units(nr), counits(nr);
  for (uint32_t a = 0; a < nr; ++a) {
    auto [s0, s1] = range_of(a);
    if (s0 == s1) {
      comps[a] = s.components[s0];
      if (s0 < s.units.size()) units[a] = s.units[s0];
      if (s0 < s.counits.size()) counits[a] = s.counits[s0];
    } else {
      comps[a] = glued;  // a direct sum has no distinguished unit/counit
    }
  }

  auto block_offset = [&](uint32_t i) {
    return (i >= lo && i <= hi) ? offset[i] : 0u;
  };
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  for (uint32_t a = 0; a < nr; ++a)
    for (uint32_t b = a; b < nr; ++b) {
      auto [a0, a1] = range_of(a);
      auto [b0, b1] = range_of(b);
      uint32_t DA = comps[a].dim, DB = comps[b].dim;
      std::vector<Entry> entries;
      for (uint32_t i = a0; i <= a1; ++i)
        for (uint32_t j = b0; j <= b1; ++j) {
          const LinMap* m;
          if (i <= j)
            m = &s.braiding(i, j);
          else
            m = &below.at({j, i});
          uint32_t di = s.components[i].dim, dj = s.components[j].dim;
          uint32_t oi = block_offset(i), oj = block_offset(j);
          for (const Entry& e : m->entries()) {
            uint32_t ci = e.col / dj, cj = e.col % dj;
            uint32_t rj = e.row / di, ri = e.row % di;
            entries.push_back({(oj + rj) * DA + (oi + ri),
                               (oi + ci) * DB + (oj + cj), e.val});
          }
        }
      sg[{a, b}] = LinMap::from_entries(DB * DA, DA * DB, std::move(entries), f);
    }

  BraidedSystem out = make_braided_system(std::move(comps), std::move(sg),
                                          std::move(units), std::move(counits));
  out.warnings.insert(out.warnings.begin(), s.warnings.begin(), s.warnings.end());
  for (const Violation& v : verify_system(out)) out.warnings.push_back(v.str());
  return out;
}

BraidedSystem negate(const BraidedSystem& s) {
  BraidedSystem out = s;
  Scalar minus_one = -scalar_one(s.field());
  for (auto& kv : out.sigma) kv.second = kv.second.scaled(minus_one);
  return out;  // both YBE sides are cubic in sigma, so `verified` survives
}

std::optional<LinMap> extract_antipode(const Bialgebra& h) {
  Field f = h.field();
  LinMap sb = sigma_bi(h);
  auto inv = try_inverse(sb);
  if (!inv) return std::nullopt;
  const BasedSpace& H = h.space;
  LinMap id_h = LinMap::identity(H.dim, f);
  LinMap phi = compose(kron(h.counit, dual_counit(h)), *inv);  // H*(x)H -> I
  LinMap coev_rev = compose(pair_swap(H, dual_space(H), f), coevaluation(H, f));
  LinMap swap_hh = pair_swap(H, H, f);
  return compose(kron(phi, id_h),
                 compose(kron(id_h, swap_hh), kron(coev_rev, id_h)));
}

}  // namespace braidkit
