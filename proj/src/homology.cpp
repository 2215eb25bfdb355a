#include "braidkit/homology.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "braidkit/shuffle.hpp"

namespace braidkit {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string deg_str(uint32_t n) { return "(" + std::to_string(n) + ")"; }

std::string bideg_str(uint32_t n, uint32_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

void check_zero(Report& rep, const std::string& axiom,
                const std::vector<uint32_t>& domain_dims, const LinMap& f) {
  if (f.is_zero()) return;
  uint32_t col = f.entries().front().col;
  for (const Entry& e : f.entries()) col = std::min(col, e.col);
  rep.push_back({axiom, unrank_index(col, domain_dims)});
}

void pass_or_throw(const Report& rep, const std::string& context) {
  if (!rep.empty())
    throw std::invalid_argument(context + ": " + rep.front().str());
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
    for (uint64_t i = 0; i < d; ++i) names[i] += "@" + std::to_string(i);
  return make_space(std::move(label), std::move(names));
}

void require_same_system(const BraidedSystem& a, const BraidedSystem& b,
                         const std::string& context) {
  require(a.rank() == b.rank(), context + ": system rank mismatch");
  for (uint32_t i = 0; i < a.rank(); ++i)
    require(a.components[i].dim == b.components[i].dim,
            context + ": component dimension mismatch");
  for (uint32_t i = 0; i < a.rank(); ++i)
    for (uint32_t j = i; j < a.rank(); ++j)
      require(a.braiding(i, j) == b.braiding(i, j),
              context + ": braiding mismatch");
}

uint64_t colors_dim(const BraidedSystem& s, const std::vector<uint32_t>& w) {
  uint64_t d = 1;
  for (uint32_t c : w) d *= s.components[c].dim;
  return d;
}

// Re-indexes the entries of a block map between two single-word pieces into
// the big direct-sum coordinates (M slowest, then (word, position), then N).
void scatter_block(std::vector<Entry>& out, const LinMap& block, uint32_t dn,
                   uint64_t cod_wdim, uint64_t cod_off, uint64_t cod_total,
                   uint64_t dom_wdim, uint64_t dom_off, uint64_t dom_total) {
  for (const Entry& e : block.entries()) {
    uint64_t r = e.row, c = e.col;
    uint64_t rb = r % dn;
    r /= dn;
    uint64_t rp = r % cod_wdim, rm = r / cod_wdim;
    uint64_t cb = c % dn;
    c /= dn;
    uint64_t cq = c % dom_wdim, cm = c / dom_wdim;
    out.push_back({(uint32_t)((rm * cod_total + cod_off + rp) * dn + rb),
                   (uint32_t)((cm * dom_total + dom_off + cq) * dn + cb),
                   e.val});
  }
}

// The unvalidated engine shared by braided_differential (which validates) and
// verify_bidifferential (which deliberately does not).
std::pair<LinMap, LinMap> differential_core(const BraidedSystem& s,
                                            const BraidedSystem& negs,
                                            const BraidedModule& m,
                                            const BraidedModule& nc,
                                            uint32_t n) {
  Field f = s.field();
  WordLayout dom = degree_layout(s, n);
  WordLayout cod = degree_layout(s, n - 1);
  std::map<std::vector<uint32_t>, size_t> cod_index;
  for (size_t i = 0; i < cod.words.size(); ++i) cod_index[cod.words[i]] = i;
  uint32_t dm = m.space.dim, dn = nc.space.dim;
  uint64_t rows = (uint64_t)dm * cod.total * dn;
  uint64_t cols = (uint64_t)dm * dom.total * dn;
  require(rows <= UINT32_MAX && cols <= UINT32_MAX,
          "braided differential too large to index");
  LinMap id_m = LinMap::identity(dm, f), id_n = LinMap::identity(dn, f);
  std::vector<Entry> front_entries, back_entries;
  for (size_t wi = 0; wi < dom.words.size(); ++wi) {
    const auto& w = dom.words[wi];
    uint64_t wdim = colors_dim(s, w);
    for (const auto& [outw, qc] : qcosh_map(negs, 1, n - 1, w)) {
      std::vector<uint32_t> rest(outw.begin() + 1, outw.end());
      uint64_t restd = colors_dim(s, rest);
      LinMap full = compose(
          kron(m.actions[outw.front()],
               LinMap::identity((uint32_t)(restd * dn), f)),
          kron(kron(id_m, qc), id_n));
      scatter_block(front_entries, full, dn, restd, cod.offsets[cod_index.at(rest)],
                    cod.total, wdim, dom.offsets[wi], dom.total);
    }
    for (const auto& [outw, qc] : qcosh_map(negs, n - 1, 1, w)) {
      std::vector<uint32_t> rest(outw.begin(), outw.end() - 1);
      uint64_t restd = colors_dim(s, rest);
      LinMap full = compose(
          kron(LinMap::identity((uint32_t)(dm * restd), f),
               nc.actions[outw.back()]),
          kron(kron(id_m, qc), id_n));
      if (n % 2 == 0) full = -full;  // the (-1)^(n-1) of the back pull
      scatter_block(back_entries, full, dn, restd, cod.offsets[cod_index.at(rest)],
                    cod.total, wdim, dom.offsets[wi], dom.total);
    }
  }
  return {LinMap::from_entries((uint32_t)rows, (uint32_t)cols,
                               std::move(front_entries), f),
          LinMap::from_entries((uint32_t)rows, (uint32_t)cols,
                               std::move(back_entries), f)};
}

}  // namespace

Report check_complex(GradedComplex& c) {
  Report rep;
  for (const auto& [deg, d] : c.differentials) {
    require(deg >= 1, "check_complex: differential out of degree 0");
    auto dom = c.spaces.find(deg), cod = c.spaces.find(deg - 1);
    require(dom != c.spaces.end() && cod != c.spaces.end(),
            "check_complex: differential outside the graded range");
    require(d.cols() == dom->second.dim && d.rows() == cod->second.dim,
            "check_complex: differential shape mismatch at degree " +
                std::to_string(deg));
  }
  for (const auto& [deg, d] : c.differentials) {
    auto up = c.differentials.find(deg + 1);
    if (up == c.differentials.end()) continue;
    check_zero(rep, "d o d " + deg_str(deg + 1), {up->second.cols()},
               compose(d, up->second));
  }
  c.certified = rep.empty();
  return rep;
}

Report check_bicomplex(Bicomplex& b) {
  for (const auto& [nm, f] : b.d) {
    auto dom = b.spaces.find(nm);
    auto cod = b.spaces.find({nm.first - 1, nm.second});
    require(nm.first >= 1 && dom != b.spaces.end() && cod != b.spaces.end(),
            "check_bicomplex: d outside the stored bidegrees");
    require(f.cols() == dom->second.dim && f.rows() == cod->second.dim,
            "check_bicomplex: d shape mismatch at " +
                bideg_str(nm.first, nm.second));
  }
  for (const auto& [nm, f] : b.dprime) {
    auto dom = b.spaces.find(nm);
    auto cod = b.spaces.find({nm.first, nm.second - 1});
    require(nm.second >= 1 && dom != b.spaces.end() && cod != b.spaces.end(),
            "check_bicomplex: d' outside the stored bidegrees");
    require(f.cols() == dom->second.dim && f.rows() == cod->second.dim,
            "check_bicomplex: d' shape mismatch at " +
                bideg_str(nm.first, nm.second));
  }
  Report rep;
  for (const auto& [nm, f] : b.d) {
    auto [n, m] = nm;
    if (auto it = b.d.find({n - 1, m}); it != b.d.end())
      check_zero(rep, "d o d " + bideg_str(n, m), {f.cols()},
                 compose(it->second, f));
  }
  for (const auto& [nm, f] : b.dprime) {
    auto [n, m] = nm;
    if (auto it = b.dprime.find({n, m - 1}); it != b.dprime.end())
      check_zero(rep, "d' o d' " + bideg_str(n, m), {f.cols()},
                 compose(it->second, f));
  }
  for (const auto& [nm, f] : b.d) {
    auto [n, m] = nm;
    if (m == 0) continue;
    auto down = b.dprime.find({n - 1, m});
    auto left = b.dprime.find(nm);
    if (down == b.dprime.end() || left == b.dprime.end()) continue;
    auto dl = b.d.find({n, m - 1});
    if (dl == b.d.end()) continue;
    check_zero(rep, "anticommutation " + bideg_str(n, m), {f.cols()},
               compose(down->second, f) + compose(dl->second, left->second));
  }
  b.certified = rep.empty();
  return rep;
}

WordLayout degree_layout(const BraidedSystem& s, uint32_t n) {
  WordLayout out;
  uint32_t r = s.rank();
  std::vector<uint32_t> cur;
  std::function<void(uint32_t)> gen = [&](uint32_t lo) {
    if (cur.size() == n) {
      out.words.push_back(cur);
      return;
    }
    for (uint32_t c = lo; c < r; ++c) {
      cur.push_back(c);
      gen(c);
      cur.pop_back();
    }
  };
  gen(0);
  uint64_t off = 0;
  out.offsets.reserve(out.words.size());
  for (const auto& w : out.words) {
    out.offsets.push_back(off);
    off += colors_dim(s, w);
  }
  out.total = off;
  return out;
}

std::pair<LinMap, LinMap> braided_differential(const BraidedSystem& s,
                                               const BraidedModule& m,
                                               const BraidedModule& n_coeff,
                                               uint32_t n) {
  require(n >= 1, "braided_differential: degree must be positive");
  require(m.side == ModuleSide::right,
          "braided_differential: left-hand coefficients must be a right module");
  require(n_coeff.side == ModuleSide::left,
          "braided_differential: right-hand coefficients must be a left module");
  require_same_system(m.system, s, "braided_differential: right coefficients");
  require_same_system(n_coeff.system, s,
                      "braided_differential: left coefficients");
  pass_or_throw(check_braided_module(m),
                "braided_differential: invalid right coefficients");
  pass_or_throw(check_braided_module(n_coeff),
                "braided_differential: invalid left coefficients");
  return differential_core(s, negate(s), m, n_coeff, n);
}

Report verify_bidifferential(const BraidedSystem& s, const BraidedModule& m,
                             const BraidedModule& n_coeff, uint32_t max_n) {
  Report rep;
  BraidedSystem negs = negate(s);
  uint32_t dm = m.space.dim, dn = n_coeff.space.dim;
  std::pair<LinMap, LinMap> prev;
  for (uint32_t k = 1; k <= max_n; ++k) {
    std::pair<LinMap, LinMap> curr = differential_core(s, negs, m, n_coeff, k);
    if (k >= 2) {
      std::vector<uint32_t> dd = {dm, (uint32_t)degree_layout(s, k).total, dn};
      check_zero(rep, "d o d " + deg_str(k), dd,
                 compose(prev.first, curr.first));
      check_zero(rep, "d' o d' " + deg_str(k), dd,
                 compose(prev.second, curr.second));
      check_zero(rep, "anticommutation " + deg_str(k), dd,
                 compose(prev.first, curr.second) +
                     compose(prev.second, curr.first));
    }
    prev = std::move(curr);
  }
  return rep;
}

GradedComplex bar_complex(const AlgebraModule& m, uint32_t max_n) {
  pass_or_throw(check_right_module(m), "bar_complex: invalid module");
  GradedComplex c;
  c.spaces[0] = m.space;
  for (uint32_t n = 1; n <= max_n; ++n) {
    TensorWord ctx;
    ctx.factors.push_back(m.space);
    for (uint32_t i = 0; i < n; ++i) ctx.factors.push_back(m.alg.space);
    c.spaces[n] = word_space(ctx, m.space.label + "(x)" + m.alg.space.label +
                                      "^" + std::to_string(n));
    LinMap d = embed_at(m.action, 1, ctx);
    for (uint32_t i = 1; i < n; ++i) {
      LinMap face = embed_at(m.alg.mul, i + 1, ctx);
      d = (i % 2) ? d - face : d + face;
    }
    c.differentials[n] = std::move(d);
  }
  pass_or_throw(check_complex(c), "bar_complex");
  return c;
}

GradedComplex cobar_dual(const Coalgebra& c0, uint32_t max_m) {
  Algebra conv = dual_algebra(c0);
  Field f = conv.mul.field();
  GradedComplex c;
  c.spaces[0] = unit_space();
  for (uint32_t m = 1; m <= max_m; ++m) {
    TensorWord ctx = power_word(conv.space, m);
    c.spaces[m] =
        word_space(ctx, conv.space.label + "^" + std::to_string(m));
    LinMap d = LinMap::zero(c.spaces[m - 1].dim, (uint32_t)ctx.dim(), f);
    for (uint32_t i = 1; i < m; ++i) {
      LinMap face = embed_at(conv.mul, i, ctx);
      d = (i % 2) ? d - face : d + face;
    }
    c.differentials[m] = std::move(d);
  }
  pass_or_throw(check_complex(c), "cobar_dual");
  return c;
}

GradedComplex hochschild_complex(const Algebra& a, uint32_t max_n) {
  pass_or_throw(check_uaa(a), "hochschild_complex: invalid algebra");
  Field f = a.field();
  GradedComplex c;
  c.spaces[0] = a.space;
  for (uint32_t n = 1; n <= max_n; ++n) {
    TensorWord ctx = power_word(a.space, n + 1);
    c.spaces[n] = word_space(ctx, a.space.label + "^" + std::to_string(n + 1));
    LinMap d = embed_at(a.mul, 1, ctx);
    for (uint32_t i = 1; i < n; ++i) {
      LinMap face = embed_at(a.mul, i + 1, ctx);
      d = (i % 2) ? d - face : d + face;
    }
    Perm rot(n + 1);
    rot[n] = 0;
    for (uint32_t j = 0; j < n; ++j) rot[j] = j + 1;
    LinMap wrap = compose(embed_at(a.mul, 1, ctx), perm_operator(rot, ctx, f));
    d = (n % 2) ? d - wrap : d + wrap;
    c.differentials[n] = std::move(d);
  }
  pass_or_throw(check_complex(c), "hochschild_complex");
  return c;
}

Bicomplex gs_bicomplex(const Bialgebra& h, uint32_t variant,
                       uint32_t max_total) {
  require(variant >= 1 && variant <= 4, "gs_bicomplex: variant must be 1..4");
  Field f = h.field();
  Algebra conv = dual_algebra(h.coalgebra());
  Bicomplex b;
  b.max_total = max_total;
  b.label = variant == 4 ? "Gerstenhaber-Schack"
                         : "variant " + std::to_string(variant);
  auto context = [&](uint32_t n, uint32_t m) {
    TensorWord ctx;
    for (uint32_t i = 0; i < n; ++i) ctx.factors.push_back(h.space);
    for (uint32_t i = 0; i < m; ++i) ctx.factors.push_back(conv.space);
    return ctx;
  };
  for (uint32_t n = 0; n <= max_total; ++n)
    for (uint32_t m = 0; n + m <= max_total; ++m)
      b.spaces[{n, m}] = word_space(
          context(n, m), "H^" + std::to_string(n) + "(x)H*^" +
                             std::to_string(m));
  for (const auto& [nm, sp] : b.spaces) {
    auto [n, m] = nm;
    TensorWord ctx = context(n, m);
    AdjointActions adj;
    if (variant != 1 && (n >= 1 || m >= 1)) adj = adjoint_actions(h, n, m);
    if (n >= 1) {
      LinMap d = LinMap::zero(b.spaces.at({n - 1, m}).dim, sp.dim, f);
      for (uint32_t i = 1; i < n; ++i) {
        LinMap face = embed_at(h.mul, i, ctx);
        d = (i % 2) ? d - face : d + face;
      }
      if (variant == 2 || variant == 4)
        d = (n % 2) ? d - *adj.pi_h : d + *adj.pi_h;
      if (variant == 3 || variant == 4) d = d + *adj.h_pi;
      b.d[nm] = std::move(d);
    }
    if (m >= 1) {
      LinMap dp = LinMap::zero(b.spaces.at({n, m - 1}).dim, sp.dim, f);
      for (uint32_t i = 1; i < m; ++i) {
        LinMap face = embed_at(conv.mul, n + i, ctx);
        dp = (i % 2) ? dp - face : dp + face;
      }
      if (n % 2) dp = -dp;
      if (variant == 2 || variant == 4)
        dp = (n % 2) ? dp - *adj.hstar_pi : dp + *adj.hstar_pi;
      if (variant == 3 || variant == 4)
        dp = ((n + m) % 2) ? dp - *adj.pi_hstar : dp + *adj.pi_hstar;
      b.dprime[nm] = std::move(dp);
    }
  }
  pass_or_throw(check_bicomplex(b), "gs_bicomplex: identities fail");
  return b;
}

Bicomplex ps_bicomplex(const Bialgebra& h, const BraidedModule& m,
                       const BraidedModule& n_coeff, uint32_t max_total) {
  require(m.side == ModuleSide::right,
          "ps_bicomplex: M must be a right braided module");
  require(n_coeff.side == ModuleSide::left,
          "ps_bicomplex: N must be a left braided module");
  BraidedSystem sys = build_B(h);
  require_same_system(m.system, sys, "ps_bicomplex: M");
  require_same_system(n_coeff.system, sys, "ps_bicomplex: N");
  pass_or_throw(check_braided_module(m), "ps_bicomplex: invalid M");
  pass_or_throw(check_braided_module(n_coeff), "ps_bicomplex: invalid N");
  Field f = h.field();
  Algebra conv = dual_algebra(h.coalgebra());
  LinMap sbi = sigma_bi(h);
  Bicomplex b;
  b.max_total = max_total;
  b.label = "two-sided coefficients";
  auto context = [&](uint32_t n, uint32_t mm) {
    TensorWord ctx;
    ctx.factors.push_back(m.space);
    for (uint32_t i = 0; i < n; ++i) ctx.factors.push_back(h.space);
    for (uint32_t i = 0; i < mm; ++i) ctx.factors.push_back(conv.space);
    ctx.factors.push_back(n_coeff.space);
    return ctx;
  };
  for (uint32_t n = 0; n <= max_total; ++n)
    for (uint32_t mm = 0; n + mm <= max_total; ++mm)
      b.spaces[{n, mm}] = word_space(
          context(n, mm), "M(x)H^" + std::to_string(n) + "(x)H*^" +
                              std::to_string(mm) + "(x)N");
  for (const auto& [nm, sp] : b.spaces) {
    auto [n, mm] = nm;
    TensorWord ctx = context(n, mm);
    if (n >= 1) {
      // rho on the two leftmost factors, then the bar faces.
      LinMap d = embed_at(m.actions[0], 1, ctx);
      for (uint32_t i = 1; i < n; ++i) {
        LinMap face = embed_at(h.mul, 1 + i, ctx);
        d = (i % 2) ? d - face : d + face;
      }
      // h_n pulled rightwards across the dual block, absorbed into N.
      TensorWord cur = ctx;
      LinMap pull = LinMap::identity((uint32_t)ctx.dim(), f);
      for (uint32_t k = n + 1; k <= n + mm; ++k) {
        pull = compose(embed_at(sbi, k, cur), pull);
        std::swap(cur.factors[k - 1], cur.factors[k]);
      }
      pull = compose(embed_at(n_coeff.actions[0], n + mm + 1, cur), pull);
      d = (n % 2) ? d - pull : d + pull;
      b.d[nm] = std::move(d);
    }
    if (mm >= 1) {
      // convolution faces and lambda on the two rightmost factors.
      LinMap dp = LinMap::zero(b.spaces.at({n, mm - 1}).dim, sp.dim, f);
      for (uint32_t i = 1; i < mm; ++i) {
        LinMap face = embed_at(conv.mul, 1 + n + i, ctx);
        dp = (i % 2) ? dp - face : dp + face;
      }
      if (n % 2) dp = -dp;
      LinMap lam = embed_at(n_coeff.actions[1], 1 + n + mm, ctx);
      dp = ((n + mm) % 2) ? dp - lam : dp + lam;
      // l_1 pulled leftwards across the H block, absorbed into M.
      TensorWord cur = ctx;
      LinMap pull = LinMap::identity((uint32_t)ctx.dim(), f);
      for (uint32_t k = n + 1; k >= 2; --k) {
        pull = compose(embed_at(sbi, k, cur), pull);
        std::swap(cur.factors[k - 1], cur.factors[k]);
      }
      pull = compose(embed_at(m.actions[1], 1, cur), pull);
      dp = (n % 2) ? dp - pull : dp + pull;
      b.dprime[nm] = std::move(dp);
    }
  }
  pass_or_throw(check_bicomplex(b), "ps_bicomplex: identities fail");
  return b;
}

std::map<uint32_t, uint32_t> homology_dims(const GradedComplex& c) {
  require(c.certified, "homology_dims: complex not certified");
  std::map<uint32_t, uint32_t> out;
  for (const auto& [deg, sp] : c.spaces) {
    auto d = c.differentials.find(deg);
    uint32_t cycles =
        d == c.differentials.end() ? sp.dim : kernel_dim(d->second);
    auto up = c.differentials.find(deg + 1);
    uint32_t bounds = up == c.differentials.end() ? 0 : rank(up->second);
    out[deg] = cycles - bounds;
  }
  return out;
}

GradedComplex total_complex(const Bicomplex& b) {
  require(b.certified, "total_complex: bicomplex not certified");
  Field f;
  if (!b.d.empty())
    f = b.d.begin()->second.field();
  else if (!b.dprime.empty())
    f = b.dprime.begin()->second.field();
  std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> blocks;
  std::map<std::pair<uint32_t, uint32_t>, uint64_t> offset;
  for (const auto& [nm, sp] : b.spaces)
    blocks[nm.first + nm.second].push_back(nm);
  GradedComplex t;
  for (const auto& [k, bl] : blocks) {
    uint64_t off = 0;
    std::vector<std::string> names;
    for (const auto& nm : bl) {
      offset[nm] = off;
      const BasedSpace& sp = b.spaces.at(nm);
      off += sp.dim;
      for (const auto& bn : sp.basis_names)
        names.push_back(bideg_str(nm.first, nm.second) + bn);
    }
    t.spaces[k] = make_space("total " + std::to_string(k), std::move(names));
  }
  for (const auto& [k, bl] : blocks) {
    if (k == 0) continue;
    std::vector<Entry> entries;
    for (const auto& nm : bl) {
      auto add = [&](const LinMap& g, std::pair<uint32_t, uint32_t> target) {
        uint64_t ro = offset.at(target), co = offset.at(nm);
        for (const Entry& e : g.entries())
          entries.push_back(
              {(uint32_t)(ro + e.row), (uint32_t)(co + e.col), e.val});
      };
      if (auto it = b.d.find(nm); it != b.d.end())
        add(it->second, {nm.first - 1, nm.second});
      if (auto it = b.dprime.find(nm); it != b.dprime.end())
        add(it->second, {nm.first, nm.second - 1});
    }
    t.differentials[k] = LinMap::from_entries(
        t.spaces.at(k - 1).dim, t.spaces.at(k).dim, std::move(entries), f);
  }
  pass_or_throw(check_complex(t), "total_complex");
  return t;
}

std::map<uint32_t, uint32_t> homology_dims_total(const Bicomplex& b) {
  return homology_dims(total_complex(b));
}

std::map<std::pair<uint32_t, uint32_t>, uint32_t> homology_dims_rows(
    const Bicomplex& b) {
  require(b.certified, "homology_dims_rows: bicomplex not certified");
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> out;
  for (const auto& [nm, sp] : b.spaces) {
    auto d = b.d.find(nm);
    uint32_t cycles = d == b.d.end() ? sp.dim : kernel_dim(d->second);
    auto up = b.d.find({nm.first + 1, nm.second});
    uint32_t bounds = up == b.d.end() ? 0 : rank(up->second);
    out[nm] = cycles - bounds;
  }
  return out;
}

std::map<std::pair<uint32_t, uint32_t>, uint32_t> homology_dims_cols(
    const Bicomplex& b) {
  require(b.certified, "homology_dims_cols: bicomplex not certified");
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> out;
  for (const auto& [nm, sp] : b.spaces) {
    auto d = b.dprime.find(nm);
    uint32_t cycles = d == b.dprime.end() ? sp.dim : kernel_dim(d->second);
    auto up = b.dprime.find({nm.first, nm.second + 1});
    uint32_t bounds = up == b.dprime.end() ? 0 : rank(up->second);
    out[nm] = cycles - bounds;
  }
  return out;
}

}  // namespace braidkit
