#include "doctest.h"

#include "braidkit/shuffle.hpp"

#include <algorithm>
#include <vector>

using namespace braidkit;

namespace {

uint32_t inversions(const Perm& p) {
  uint32_t n = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

uint64_t binom(uint32_t n, uint32_t k) {
  uint64_t r = 1;
  for (uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// all reduced letter sequences realizing theta under first-to-last application
void reduced_words_rec(Perm q, std::vector<uint32_t>& prefix,
                       std::vector<std::vector<uint32_t>>& out) {
  bool any = false;
  for (uint32_t i = 0; i + 1 < q.size(); ++i)
    if (q[i] > q[i + 1]) {
      any = true;
      Perm next = q;
      std::swap(next[i], next[i + 1]);
      prefix.push_back(i + 1);
      reduced_words_rec(std::move(next), prefix, out);
      prefix.pop_back();
    }
  if (!any) out.push_back(prefix);
}

std::vector<std::vector<uint32_t>> reduced_words(const Perm& theta) {
  std::vector<uint32_t> prefix;
  std::vector<std::vector<uint32_t>> out;
  reduced_words_rec(theta, prefix, out);
  return out;
}

std::vector<std::vector<uint32_t>> decreasing_words(uint32_t rank,
                                                    uint32_t deg) {
  std::vector<std::vector<uint32_t>> out;
  if (deg == 0) {
    out.push_back({});
    return out;
  }
  for (auto& tail : decreasing_words(rank, deg - 1))
    for (uint32_t c = 0; c < rank; ++c)
      if (tail.empty() || c >= tail.front()) {
        std::vector<uint32_t> w;
        w.push_back(c);
        w.insert(w.end(), tail.begin(), tail.end());
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BraidedSystem line_system(const Algebra& a) {
  std::map<std::pair<uint32_t, uint32_t>, LinMap> sg;
  sg[{0, 0}] = sigma_ass(a);
  return make_braided_system({a.space}, std::move(sg), {a.unit});
}

}  // namespace

TEST_CASE("shuffle sets") {
  auto s11 = shuffle_set({1, 1});
  REQUIRE(s11.size() == 2);
  CHECK(s11[0] == Perm{0, 1});
  CHECK(s11[1] == Perm{1, 0});

  auto s22 = shuffle_set({2, 2});
  REQUIRE(s22.size() == 6);
  CHECK(s22.front() == Perm{0, 1, 2, 3});
  CHECK(s22.back() == Perm{2, 3, 0, 1});
  CHECK(std::is_sorted(s22.begin(), s22.end()));

  CHECK(shuffle_set({1, 2, 1}).size() == 12);
  CHECK(shuffle_set({0, 3}) == std::vector<Perm>{Perm{0, 1, 2}});
  CHECK(shuffle_set({}).size() == 1);

  for (uint32_t p = 0; p <= 8; ++p)
    for (uint32_t q = 0; p + q <= 8; ++q)
      CHECK(shuffle_set({p, q}).size() == binom(p + q, p));

  // increasing on each block
  for (const Perm& t : shuffle_set({2, 3})) {
    CHECK(t[0] < t[1]);
    CHECK(t[2] < t[3]);
    CHECK(t[3] < t[4]);
  }
}

TEST_CASE("Matsumoto lift") {
  CHECK(matsumoto_lift({0, 1, 2}).letters.empty());

  BraidWord w3 = matsumoto_lift({2, 1, 0});
  CHECK(w3.strands == 3);
  CHECK(w3.letters == std::vector<uint32_t>{1, 2, 1});

  Perm longest{3, 2, 1, 0};
  CHECK(matsumoto_lift(longest).letters.size() == 6);

  // over all of S_4: reduced length, and the letters realize theta
  Perm p{0, 1, 2, 3};
  do {
    BraidWord w = matsumoto_lift(p);
    CHECK(w.letters.size() == inversions(p));
    std::vector<uint32_t> arr{0, 1, 2, 3};
    for (uint32_t l : w.letters) std::swap(arr[l - 1], arr[l]);
    for (uint32_t i = 0; i < 4; ++i) CHECK(arr[p[i]] == i);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("partial braid action") {
  Bialgebra h = group_algebra(2);
  BraidedSystem b = build_B(h);

  SUBCASE("empty word leaves the vector alone") {
    ColoredVector x = colored_basis(b, {0, 1}, 3);
    auto y = braid_action({2, {}}, x, b);
    REQUIRE(y.has_value());
    CHECK(*y == x);
  }

  SUBCASE("one crossing evaluates the bialgebra braiding") {
    // g (x) delta_g  ->  delta_1 (x) g, colors swapped
    ColoredVector x = colored_basis(b, {0, 1}, 3);
    auto y = braid_action({2, {1}}, x, b);
    REQUIRE(y.has_value());
    CHECK(y->colors == std::vector<uint32_t>{1, 0});
    CHECK(y->coeffs == SparseVec{{1, Scalar(1, h.field())}});
  }

  SUBCASE("wrong color order is outside the domain") {
    ColoredVector x = colored_basis(b, {1, 0}, 3);
    CHECK_FALSE(braid_action({2, {1}}, x, b).has_value());
  }

  SUBCASE("the action is linear") {
    Field f = h.field();
    ColoredVector x{{0, 1}, {{0, Scalar(2, f)}, {3, Scalar(1, f)}}};
    auto y = braid_action({2, {1}}, x, b);
    REQUIRE(y.has_value());
    CHECK(y->coeffs == SparseVec{{0, Scalar(2, f)}, {1, Scalar(1, f)}});
  }

  SUBCASE("idempotent diagonal braiding composes as expected") {
    auto once = braid_action_operator({2, {1}}, {0, 0}, b);
    auto twice = braid_action_operator({2, {1, 1}}, {0, 0}, b);
    REQUIRE(once.has_value());
    REQUIRE(twice.has_value());
    CHECK(once->second == twice->second);
  }

  SUBCASE("malformed words are rejected") {
    ColoredVector x = colored_basis(b, {0, 1}, 0);
    CHECK_THROWS_AS(braid_action({3, {1}}, x, b), std::invalid_argument);
    CHECK_THROWS_AS(braid_action({2, {2}}, x, b), std::invalid_argument);
  }
}

TEST_CASE("quantum shuffle on a one-component system") {
  Bialgebra h = group_algebra(2);
  BraidedSystem s = line_system(h.algebra());
  Field f = h.field();

  ColoredVector g = colored_basis(s, {0}, 1);
  ColoredVector gg = qsh_multiply(s, g, g);
  CHECK(gg.colors == std::vector<uint32_t>{0, 0});
  // g (x) g  +  1 (x) 1  (the crossing multiplies into the unit line)
  CHECK(gg.coeffs == SparseVec{{0, Scalar(1, f)}, {3, Scalar(1, f)}});

  ColoredVector one{{}, {{0, Scalar(1, f)}}};
  CHECK(qsh_multiply(s, one, g) == g);
  CHECK(qsh_multiply(s, g, one) == g);
  CHECK(qsh_multiply(s, one, gg) == gg);
}

TEST_CASE("quantum shuffle across two components") {
  Bialgebra h = group_algebra(2);
  BraidedSystem b = build_B(h);
  Field f = h.field();

  ColoredVector g = colored_basis(b, {0}, 1);
  ColoredVector d1 = colored_basis(b, {1}, 0);
  ColoredVector dg = colored_basis(b, {1}, 1);

  // delta_g . g: only the identity shuffle is admissible
  CHECK(qsh_multiply(b, dg, g) ==
        ColoredVector{{1, 0}, {{3, Scalar(1, f)}}});
  // g . delta_g: only the crossing is admissible, and it evaluates sigma
  CHECK(qsh_multiply(b, g, dg) ==
        ColoredVector{{1, 0}, {{1, Scalar(1, f)}}});
  CHECK(qsh_multiply(b, g, d1) ==
        ColoredVector{{1, 0}, {{3, Scalar(1, f)}}});
  CHECK(qsh_multiply(b, d1, g) ==
        ColoredVector{{1, 0}, {{1, Scalar(1, f)}}});

  ColoredVector bad{{0, 1}, {{0, Scalar(1, f)}}};
  CHECK_THROWS_AS(qsh_multiply(b, bad, g), std::invalid_argument);
}

TEST_CASE("quantum shuffle is associative in low degree") {
  std::vector<BraidedSystem> systems;
  systems.push_back(build_B(group_algebra(2)));
  systems.push_back(line_system(sweedler_h4().algebra()));
  for (const BraidedSystem& s : systems) {
    for (uint32_t da = 0; da <= 3; ++da)
      for (uint32_t db = 0; da + db <= 3; ++db)
        for (uint32_t dc = 0; da + db + dc <= 3; ++dc)
          for (auto& wa : decreasing_words(s.rank(), da))
            for (auto& wb : decreasing_words(s.rank(), db))
              for (auto& wc : decreasing_words(s.rank(), dc)) {
                uint32_t na = (uint32_t)colored_word(s, wa).dim();
                uint32_t nb = (uint32_t)colored_word(s, wb).dim();
                uint32_t nc = (uint32_t)colored_word(s, wc).dim();
                for (uint32_t ia = 0; ia < na; ++ia)
                  for (uint32_t ib = 0; ib < nb; ++ib)
                    for (uint32_t ic = 0; ic < nc; ++ic) {
                      ColoredVector x = colored_basis(s, wa, ia);
                      ColoredVector y = colored_basis(s, wb, ib);
                      ColoredVector z = colored_basis(s, wc, ic);
                      CHECK(qsh_multiply(s, qsh_multiply(s, x, y), z) ==
                            qsh_multiply(s, x, qsh_multiply(s, y, z)));
                    }
              }
  }
}

TEST_CASE("quantum coshuffle") {
  Bialgebra h = group_algebra(2);
  Algebra a = h.algebra();
  BraidedSystem s = line_system(a);
  Field f = h.field();

  LinMap c11 = qcosh(s, 1, 1, {0, 0});
  CHECK(c11 == LinMap::identity(4, f) + sigma_ass(a));
  // applied to g (x) g: the two expected terms
  CHECK(column_of(c11, 3) ==
        SparseVec{{0, Scalar(1, f)}, {3, Scalar(1, f)}});

  CHECK(qcosh(s, 2, 0, {0, 0}) == LinMap::identity(4, f));
  CHECK(qcosh(s, 0, 2, {0, 0}) == LinMap::identity(4, f));

  BraidedSystem b = build_B(h);
  auto tags = qcosh_map(b, 1, 1, {0, 1});
  REQUIRE(tags.size() == 2);
  CHECK(tags.at({0, 1}) == LinMap::identity(4, f));
  CHECK(tags.at({1, 0}) == sigma_bi(h));
  CHECK_THROWS_AS(qcosh(b, 1, 1, {0, 1}), std::invalid_argument);

  CHECK_THROWS_AS(qcosh(b, 1, 1, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(qcosh(b, 1, 2, {0, 1}), std::invalid_argument);
}

TEST_CASE("quantum coshuffle is coassociative in low degree") {
  std::vector<Algebra> algs{group_algebra(2).algebra(),
                            sweedler_h4().algebra()};
  for (const Algebra& a : algs) {
    BraidedSystem s = line_system(a);
    Field f = a.field();
    uint32_t d = a.space.dim;
    for (uint32_t n = 0; n <= 3; ++n) {
      std::vector<uint32_t> w(n, 0);
      for (uint32_t p = 0; p <= n; ++p)
        for (uint32_t q = 0; p + q <= n; ++q) {
          uint32_t r = n - p - q;
          std::vector<uint32_t> wpq(p + q, 0), wqr(q + r, 0);
          uint32_t dr = (uint32_t)word_dim(std::vector<uint32_t>(r, d));
          uint32_t dp = (uint32_t)word_dim(std::vector<uint32_t>(p, d));
          LinMap lhs = compose(
              kron(qcosh(s, p, q, wpq), LinMap::identity(dr, f)),
              qcosh(s, p + q, r, w));
          LinMap rhs = compose(
              kron(LinMap::identity(dp, f), qcosh(s, q, r, wqr)),
              qcosh(s, p, q + r, w));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("braid action is constant on reduced-word classes") {
  BraidedSystem b = build_B(sweedler_h4());
  Perm p{0, 1, 2, 3};
  do {
    auto words = reduced_words(p);
    BraidWord lift = matsumoto_lift(p);
    CHECK(std::find(words.begin(), words.end(), lift.letters) != words.end());

    for (uint32_t mask = 0; mask < 16; ++mask) {
      std::vector<uint32_t> colors{(mask >> 3) & 1u, (mask >> 2) & 1u,
                                   (mask >> 1) & 1u, mask & 1u};
      auto ref = braid_action_operator({4, words[0]}, colors, b);
      for (size_t k = 1; k < words.size(); ++k) {
        auto alt = braid_action_operator({4, words[k]}, colors, b);
        CHECK(ref.has_value() == alt.has_value());
        if (ref && alt) {
          CHECK(ref->first == alt->first);
          CHECK(ref->second == alt->second);
        }
      }
    }
  } while (std::next_permutation(p.begin(), p.end()));
}
