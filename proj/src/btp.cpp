#include "braidkit/btp.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace braidkit {

namespace {

std::string comp_str(uint32_t i) { return std::to_string(i + 1); }

std::string pair_str(uint32_t i, uint32_t j) {
  return "(" + comp_str(i) + "," + comp_str(j) + ")";
}

std::string perm_str(const Perm& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p[k] + 1);
  }
  return s + ")";
}

// A diagonal braiding of a pointed system is nu (x) mu or mu (x) nu for the
// component's algebra; peel mu off with a functional dual to the unit.
Algebra recover_diagonal_algebra(const BraidedSystem& s, uint32_t i) {
  const LinMap& sig = s.braiding(i, i);
  if (!s.units[i])
    throw std::invalid_argument("component " + comp_str(i) + " has no unit");
  const LinMap& nu = *s.units[i];
  uint32_t d = s.components[i].dim;
  Field f = sig.field();
  uint32_t a0 = 0;
  Scalar c(0, f);
  for (uint32_t r = 0; r < d; ++r) {
    c = nu.at(r, 0);
    if (!c.is_zero()) {
      a0 = r;
      break;
    }
  }
  if (c.is_zero())
    throw std::invalid_argument("unit of component " + comp_str(i) + " is zero");
  LinMap eps = LinMap::from_entries(1, d, {{0, a0, c.inv()}}, f);
  LinMap id_d = LinMap::identity(d, f);
  LinMap mu = compose(kron(eps, id_d), sig);
  if (!(kron(nu, mu) == sig)) {
    mu = compose(kron(id_d, eps), sig);
    if (!(kron(mu, nu) == sig))
      throw std::invalid_argument(
          "diagonal braiding of component " + comp_str(i) +
          " is not an associativity braiding");
  }
  Algebra a{s.components[i], std::move(mu), nu};
  Report rep = check_uaa(a);
  if (!rep.empty())
    throw std::invalid_argument("component " + comp_str(i) +
                                " algebra fails " + rep.front().str());
  return a;
}

void require_natural(const BraidedSystem& s, const std::vector<Algebra>& comp,
                     uint32_t i, uint32_t j) {
  const LinMap& xi = s.braiding(i, j);
  Field f = xi.field();
  uint32_t di = comp[i].space.dim, dj = comp[j].space.dim;
  LinMap idi = LinMap::identity(di, f), idj = LinMap::identity(dj, f);

  if (!(compose(xi, kron(comp[i].unit, idj)) == kron(idj, comp[i].unit)))
    throw std::invalid_argument("crossing " + pair_str(i, j) +
                                " is not natural with respect to the unit of "
                                "component " + comp_str(i));
  if (!(compose(xi, kron(idi, comp[j].unit)) == kron(comp[j].unit, idi)))
    throw std::invalid_argument("crossing " + pair_str(i, j) +
                                " is not natural with respect to the unit of "
                                "component " + comp_str(j));

  LinMap lhs = compose(xi, kron(comp[i].mul, idj));
  LinMap rhs = compose(kron(idj, comp[i].mul),
                       compose(kron(xi, idi), kron(idi, xi)));
  if (!(lhs == rhs))
    throw std::invalid_argument(
        "crossing " + pair_str(i, j) +
        " is not natural with respect to the multiplication of component " +
        comp_str(i));

  lhs = compose(xi, kron(idi, comp[j].mul));
  rhs = compose(kron(comp[j].mul, idi),
                compose(kron(idj, xi), kron(xi, idj)));
  if (!(lhs == rhs))
    throw std::invalid_argument(
        "crossing " + pair_str(i, j) +
        " is not natural with respect to the multiplication of component " +
        comp_str(j));
}

// Column-start offsets into the (col,row)-sorted entry list of f.
std::vector<size_t> col_offsets(const LinMap& f) {
  const auto& fc = f.col_sorted();
  std::vector<size_t> start((size_t)f.cols() + 1, 0);
  size_t i = 0;
  for (size_t c = 0; c <= f.cols(); ++c) {
    while (i < fc.size() && fc[i].col < c) ++i;
    start[c] = i;
  }
  return start;
}

}  // namespace

BraidedTensorAlgebra braided_tensor_product(const BraidedSystem& s_in,
                                            bool unchecked) {
  BraidedSystem s = s_in;
  if (!s.verified && !unchecked) {
    Report rep = verify_system(s);
    if (!rep.empty())
      throw std::invalid_argument("system fails the braid equation at " +
                                  rep.front().str());
  }
  uint32_t r = s.rank();
  if (r == 0) throw std::invalid_argument("empty system");
  Field f = s.field();

  std::vector<Algebra> comp;
  comp.reserve(r);
  for (uint32_t i = 0; i < r; ++i) comp.push_back(recover_diagonal_algebra(s, i));
  if (!unchecked)
    for (uint32_t i = 0; i < r; ++i)
      for (uint32_t j = i + 1; j < r; ++j) require_natural(s, comp, i, j);

  std::vector<BasedSpace> rev(s.components.rbegin(), s.components.rend());
  TensorWord vbar{rev};
  uint32_t dim = (uint32_t)vbar.dim();

  BasedSpace pspace;
  if (r == 1) {
    pspace = s.components[0];
  } else {
    std::string label;
    for (uint32_t k = 0; k < r; ++k) {
      if (k) label += "(x)";
      label += rev[k].label;
    }
    std::vector<std::string> names;
    names.reserve(dim);
    for (uint32_t idx = 0; idx < dim; ++idx) names.push_back(vbar.basis_name(idx));
    pspace = make_space(std::move(label), std::move(names));
  }

  // Interleave the right copy through the left one: the copy of V_j crosses
  // V_{j-1},...,V_1 in turn; at the moment xi_{i,j} applies, the pair sits at
  // slot (j-i+1)+2(r-j) of the current word.
  std::vector<BasedSpace> slots(rev);
  slots.insert(slots.end(), rev.begin(), rev.end());
  LinMap acc = LinMap::identity((uint32_t)((uint64_t)dim * dim), f);
  for (uint32_t j = r; j >= 2; --j)
    for (uint32_t i = 1; i < j; ++i) {
      size_t slot = (j - i + 1) + 2 * (r - j);
      acc = compose(embed_at(s.braiding(i - 1, j - 1), slot, TensorWord{slots}),
                    acc);
      std::swap(slots[slot - 1], slots[slot]);
    }
  LinMap mul_all = comp[r - 1].mul;
  for (uint32_t k = r - 1; k-- > 0;) mul_all = kron(mul_all, comp[k].mul);
  LinMap mu = compose(mul_all, acc);

  LinMap nu = comp[r - 1].unit;
  for (uint32_t k = r - 1; k-- > 0;) nu = kron(nu, comp[k].unit);

  if (!unchecked) {
    LinMap id_dim = LinMap::identity(dim, f);
    if (!(compose(mu, kron(nu, id_dim)) == id_dim) ||
        !(compose(mu, kron(id_dim, nu)) == id_dim))
      throw std::logic_error("internal: braided product failed the unit axioms");
  }

  Algebra alg{std::move(pspace), std::move(mu), std::move(nu)};
  return {std::move(s), std::move(alg), "braided_tensor_product"};
}

Report check_associativity(const Algebra& a, unsigned threads) {
  uint32_t d = a.space.dim;
  Report rep;
  if (d == 0) return rep;
  Field f = a.field();
  const auto& mc = a.mul.col_sorted();
  std::vector<size_t> start = col_offsets(a.mul);

  unsigned t_count = threads ? threads : std::thread::hardware_concurrency();
  if (!t_count) t_count = 1;
  t_count = std::min<unsigned>(t_count, d);

  std::vector<Report> parts(t_count);
  auto worker = [&](unsigned t) {
    std::vector<Scalar> lacc(d, Scalar(0, f)), racc(d, Scalar(0, f));
    std::vector<uint32_t> ltouch, rtouch;
    ltouch.reserve(d);
    rtouch.reserve(d);
    for (uint32_t x = t; x < d; x += t_count)
      for (uint32_t y = 0; y < d; ++y) {
        size_t cxy = (size_t)x * d + y;
        for (uint32_t z = 0; z < d; ++z) {
          ltouch.clear();
          rtouch.clear();
          // (x.y).z
          for (size_t e = start[cxy]; e < start[cxy + 1]; ++e) {
            size_t ckz = (size_t)mc[e].row * d + z;
            for (size_t e2 = start[ckz]; e2 < start[ckz + 1]; ++e2) {
              if (lacc[mc[e2].row].is_zero()) ltouch.push_back(mc[e2].row);
              lacc[mc[e2].row] += mc[e].val * mc[e2].val;
            }
          }
          // x.(y.z)
          size_t cyz = (size_t)y * d + z;
          for (size_t e = start[cyz]; e < start[cyz + 1]; ++e) {
            size_t cxk = (size_t)x * d + mc[e].row;
            for (size_t e2 = start[cxk]; e2 < start[cxk + 1]; ++e2) {
              if (racc[mc[e2].row].is_zero()) rtouch.push_back(mc[e2].row);
              racc[mc[e2].row] += mc[e].val * mc[e2].val;
            }
          }
          bool ok = true;
          for (uint32_t rr : ltouch)
            if (!(lacc[rr] == racc[rr])) {
              ok = false;
              break;
            }
          if (ok)
            for (uint32_t rr : rtouch)
              if (!(racc[rr] == lacc[rr])) {
                ok = false;
                break;
              }
          if (!ok) parts[t].push_back({"associativity", {x, y, z}});
          for (uint32_t rr : ltouch) lacc[rr] = Scalar(0, f);
          for (uint32_t rr : rtouch) racc[rr] = Scalar(0, f);
        }
      }
  };
  if (t_count == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(t_count);
    for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& p : parts)
    rep.insert(rep.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  std::sort(rep.begin(), rep.end(),
            [](const Violation& a, const Violation& b) {
              return a.witness < b.witness;
            });
  return rep;
}

Report check_associativity(const Algebra& a, uint32_t samples, uint64_t seed) {
  uint32_t d = a.space.dim;
  Report rep;
  if (d == 0 || samples == 0) return rep;
  Field f = a.field();
  const auto& mc = a.mul.col_sorted();
  std::vector<size_t> start = col_offsets(a.mul);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, d - 1);
  std::vector<Scalar> lacc(d, Scalar(0, f)), racc(d, Scalar(0, f));
  std::vector<uint32_t> ltouch, rtouch;
  std::set<std::vector<uint32_t>> seen;
  for (uint32_t n = 0; n < samples; ++n) {
    uint32_t x = pick(rng), y = pick(rng), z = pick(rng);
    ltouch.clear();
    rtouch.clear();
    size_t cxy = (size_t)x * d + y;
    for (size_t e = start[cxy]; e < start[cxy + 1]; ++e) {
      size_t ckz = (size_t)mc[e].row * d + z;
      for (size_t e2 = start[ckz]; e2 < start[ckz + 1]; ++e2) {
        if (lacc[mc[e2].row].is_zero()) ltouch.push_back(mc[e2].row);
        lacc[mc[e2].row] += mc[e].val * mc[e2].val;
      }
    }
    size_t cyz = (size_t)y * d + z;
    for (size_t e = start[cyz]; e < start[cyz + 1]; ++e) {
      size_t cxk = (size_t)x * d + mc[e].row;
      for (size_t e2 = start[cxk]; e2 < start[cxk + 1]; ++e2) {
        if (racc[mc[e2].row].is_zero()) rtouch.push_back(mc[e2].row);
        racc[mc[e2].row] += mc[e].val * mc[e2].val;
      }
    }
    bool ok = true;
    for (uint32_t rr : ltouch)
      if (!(lacc[rr] == racc[rr])) {
        ok = false;
        break;
      }
    if (ok)
      for (uint32_t rr : rtouch)
        if (!(racc[rr] == lacc[rr])) {
          ok = false;
          break;
        }
    if (!ok && seen.insert({x, y, z}).second)
      rep.push_back({"associativity", {x, y, z}});
    for (uint32_t rr : ltouch) lacc[rr] = Scalar(0, f);
    for (uint32_t rr : rtouch) racc[rr] = Scalar(0, f);
  }
  std::sort(rep.begin(), rep.end(),
            [](const Violation& a, const Violation& b) {
              return a.witness < b.witness;
            });
  return rep;
}

BraidedTensorAlgebra enveloping_algebra(const Algebra& a) {
  Field f = a.field();
  // The second component carries the opposite multiplication: the product
  // algebra is then A^op (x) A and its modules are A-bimodules.
  Algebra aop{a.space,
              compose(a.mul, perm_operator({1, 0}, power_word(a.space, 2), f)),
              a.unit};
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = sigma_ass(a);
  sg[{1, 1}] = sigma_ass(aop);
  sg[{0, 1}] = perm_operator({1, 0}, power_word(a.space, 2), f);
  BraidedSystem s = make_braided_system({a.space, a.space}, std::move(sg),
                                        {a.unit, a.unit});
  BraidedTensorAlgebra out = braided_tensor_product(s);
  out.provenance = "enveloping";
  return out;
}

BraidedTensorAlgebra heisenberg(const Bialgebra& h) {
  BraidedTensorAlgebra out = braided_tensor_product(build_B(h));
  out.provenance = "heisenberg";
  return out;
}

BraidedTensorAlgebra smash_left(const ModuleAlgebra& a_left,
                                const Bialgebra& h) {
  Field f = h.field();
  uint32_t dh = h.dim(), da = a_left.alg.space.dim;
  if (a_left.action.rows() != da || a_left.action.cols() != (uint64_t)dh * da)
    throw std::invalid_argument("left action must map H (x) A -> A");
  const BasedSpace& hs = h.space;
  const BasedSpace& as = a_left.alg.space;
  // xi : H (x) A -> A (x) H,  h (x) a -> h_(1).a (x) h_(2)
  LinMap xi = compose(
      kron(a_left.action, LinMap::identity(dh, f)),
      compose(perm_operator({0, 2, 1}, word_of({hs, hs, as}), f),
              kron(h.comul, LinMap::identity(da, f))));
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = sigma_ass(h.algebra());
  sg[{1, 1}] = sigma_ass(a_left.alg);
  sg[{0, 1}] = std::move(xi);
  BraidedSystem s = make_braided_system({hs, as}, std::move(sg),
                                        {h.unit, a_left.alg.unit});
  BraidedTensorAlgebra out = braided_tensor_product(s);
  out.provenance = "smash_left";
  return out;
}

BraidedTensorAlgebra smash_right(const Bialgebra& h,
                                 const ModuleAlgebra& b_right) {
  Field f = h.field();
  uint32_t dh = h.dim(), db = b_right.alg.space.dim;
  if (b_right.action.rows() != db || b_right.action.cols() != (uint64_t)db * dh)
    throw std::invalid_argument("right action must map B (x) H -> B");
  const BasedSpace& hs = h.space;
  const BasedSpace& bs = b_right.alg.space;
  // xi : B (x) H -> H (x) B,  b (x) h -> h_(1) (x) b.h_(2)
  LinMap xi = compose(
      kron(LinMap::identity(dh, f), b_right.action),
      compose(perm_operator({1, 0, 2}, word_of({bs, hs, hs}), f),
              kron(LinMap::identity(db, f), h.comul)));
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = sigma_ass(b_right.alg);
  sg[{1, 1}] = sigma_ass(h.algebra());
  sg[{0, 1}] = std::move(xi);
  BraidedSystem s = make_braided_system({bs, hs}, std::move(sg),
                                        {b_right.alg.unit, h.unit});
  BraidedTensorAlgebra out = braided_tensor_product(s);
  out.provenance = "smash_right";
  return out;
}

BraidedTensorAlgebra two_sided_crossed(const ModuleAlgebra& a_left,
                                       const BicomoduleAlgebra& c_bicomod,
                                       const ModuleAlgebra& b_right,
                                       const Bialgebra& h) {
  BraidedTensorAlgebra out = braided_tensor_product(
      build_crossed_system(a_left, b_right, c_bicomod, h));
  out.provenance = "two_sided_crossed";
  return out;
}

BraidedTensorAlgebra W(const Bialgebra& h) {
  BraidedTensorAlgebra out = braided_tensor_product(build_Bprime(h));
  out.provenance = "W";
  return out;
}

BraidedTensorAlgebra theta_W(const Bialgebra& h, const Perm& theta) {
  BraidedTensorAlgebra out =
      braided_tensor_product(permute_system(build_Bprime(h), theta));
  out.provenance = "W.perm" + perm_str(theta);
  return out;
}

Perm theta_x() { return {3, 2, 1, 0}; }
Perm theta_y() { return {1, 2, 3, 0}; }
Perm theta_z() { return {0, 1, 3, 2}; }

FactorPermutation factor_permutation_iso(const BraidedSystem& s,
                                         const Perm& theta) {
  uint32_t r = s.rank();
  if (theta.size() != r)
    throw std::invalid_argument("permutation size does not match the rank");

  BraidedTensorAlgebra src = braided_tensor_product(s);
  Field f = s.field();
  uint32_t dim = src.algebra.space.dim;

  // Bubble-sort the remaining permutation into the identity; each recorded
  // adjacent swap contributes one inverted crossing.
  std::vector<uint32_t> seq(theta);
  std::vector<uint32_t> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (uint32_t a = 0; a + 1 < r; ++a)
      if (seq[a] > seq[a + 1]) {
        std::swap(seq[a], seq[a + 1]);
        swaps.push_back(a);
        moved = true;
      }
  }

  BraidedSystem cur = s;
  LinMap iso = LinMap::identity(dim, f);
  for (uint32_t a : swaps) {
    auto inv = try_inverse(cur.braiding(a, a + 1));
    if (!inv)
      throw std::invalid_argument("crossing " + pair_str(a, a + 1) +
                                  " is not invertible");
    std::vector<BasedSpace> rev(cur.components.rbegin(),
                                cur.components.rend());
    iso = compose(embed_at(*inv, r - a - 1, TensorWord{rev}), iso);
    Perm t = perm_identity(r);
    std::swap(t[a], t[a + 1]);
    cur = permute_system(cur, t);
  }

  BraidedTensorAlgebra tgt = braided_tensor_product(cur);
  tgt.provenance = src.provenance + ".perm" + perm_str(theta);

  if (!(compose(iso, src.algebra.mul) ==
        compose(tgt.algebra.mul, kron(iso, iso))) ||
      !(compose(iso, src.algebra.unit) == tgt.algebra.unit))
    throw std::logic_error(
        "internal: factor permutation map is not an algebra morphism");
  return {std::move(tgt), std::move(iso)};
}

}  // namespace braidkit
