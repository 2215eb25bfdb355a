#include <algorithm>

#include "braidkit/hopf.hpp"
#include "doctest.h"

using namespace braidkit;

namespace {

bool mentions(const Report& rep, const std::string& needle) {
  return std::any_of(rep.begin(), rep.end(), [&](const Violation& v) {
    return v.axiom.find(needle) != std::string::npos;
  });
}

bool same_constants(const Bialgebra& a, const Bialgebra& b) {
  if (!(a.mul == b.mul && a.unit == b.unit && a.comul == b.comul &&
        a.counit == b.counit))
    return false;
  if (a.antipode.has_value() != b.antipode.has_value()) return false;
  return !a.antipode || *a.antipode == *b.antipode;
}

}  // namespace

TEST_CASE("fixture algebras satisfy every axiom") {
  for (Bialgebra h : {trivial_bialgebra(), group_algebra(2), group_algebra(3),
                      sweedler_h4(), idempotent_monoid_bialgebra()}) {
    CHECK(check_uaa(h.algebra()).empty());
    CHECK(check_coalgebra(h.coalgebra()).empty());
    CHECK(check_bialgebra(h).empty());
  }
  CHECK(check_antipode(group_algebra(2)).empty());
  CHECK(check_antipode(sweedler_h4()).empty());

  // spot checks of the 4-dim fixture: x g = -gx, Delta x = x(x)1 + g(x)x
  Bialgebra h4 = sweedler_h4();
  Field f;
  CHECK(h4.mul.at(3, 2 * 4 + 1) == Scalar(-1, f));
  CHECK(h4.comul.at(2 * 4 + 0, 2) == Scalar(1, f));
  CHECK(h4.comul.at(1 * 4 + 2, 2) == Scalar(1, f));
  CHECK(h4.counit.at(0, 1) == Scalar(1, f));
  CHECK(h4.counit.at(0, 2) == Scalar(0, f));
}

TEST_CASE("corrupted comultiplication is reported with its witness") {
  Bialgebra h = group_algebra(2);
  // send g to g(x)1 instead of g(x)g
  LinMap bad_comul = LinMap::from_entries(
      4, 2, {{0, 0, Scalar(1, Field{})}, {1 * 2 + 0, 1, Scalar(1, Field{})}});
  Bialgebra broken = make_bialgebra(h.space, h.mul, h.unit, bad_comul, h.counit,
                                    std::nullopt, /*unchecked=*/true);
  Report rep = check_coalgebra(broken.coalgebra());
  REQUIRE(!rep.empty());
  CHECK((mentions(rep, "coassociativity") || mentions(rep, "counit")));
  // the witness points at g (basis index 1)
  bool witness_g = std::any_of(rep.begin(), rep.end(), [](const Violation& v) {
    return !v.witness.empty() && v.witness[0] == 1;
  });
  CHECK(witness_g);

  // without the unchecked flag the constructor refuses the same data
  CHECK_THROWS_AS(make_bialgebra(h.space, h.mul, h.unit, bad_comul, h.counit,
                                 std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("op and cop twists") {
  Bialgebra h2 = group_algebra(2);
  // commutative cocommutative: the double twist changes nothing
  CHECK(same_constants(twist(h2, true, true), h2));

  Bialgebra h4 = sweedler_h4();
  Bialgebra h4oc = twist(h4, true, true);
  CHECK(check_bialgebra(h4oc).empty());
  REQUIRE(h4oc.antipode.has_value());
  CHECK(*h4oc.antipode == *h4.antipode);  // double twist keeps s
  CHECK(check_antipode(h4oc).empty());

  // a single twist installs s^{-1}; for the 4-dim fixture s has order 4
  Bialgebra h4op = twist(h4, true, false);
  CHECK(check_bialgebra(h4op).empty());
  REQUIRE(h4op.antipode.has_value());
  CHECK(check_antipode(h4op).empty());
  CHECK(compose(*h4op.antipode, *h4.antipode) ==
        LinMap::identity(4));

  // twisting twice in the same variable is the identity
  CHECK(same_constants(twist(twist(h4, true, false), true, false), h4));
  CHECK(same_constants(twist(twist(h4, false, true), false, true), h4));
}

TEST_CASE("dual bialgebra") {
  Field f;
  Bialgebra h = group_algebra(2);
  Bialgebra hd = dual_bialgebra(h);
  CHECK(hd.dim() == 2);
  CHECK(check_bialgebra(hd).empty());
  CHECK(check_antipode(hd).empty());

  // explicit isomorphism onto the dual by characters: 1 -> 1* + g*, g -> 1* - g*
  LinMap iso = LinMap::from_entries(2, 2,
                                    {{0, 0, Scalar(1, f)},
                                     {1, 0, Scalar(1, f)},
                                     {0, 1, Scalar(1, f)},
                                     {1, 1, Scalar(-1, f)}});
  CHECK(compose(iso, h.mul) == compose(hd.mul, kron(iso, iso)));
  CHECK(compose(iso, h.unit) == hd.unit);
  CHECK(compose(hd.comul, iso) == compose(kron(iso, iso), h.comul));
  CHECK(compose(hd.counit, iso) == h.counit);

  Bialgebra triv = trivial_bialgebra();
  CHECK(same_constants(dual_bialgebra(triv), triv));
}

TEST_CASE("dual of the opposite is the co-opposite of the dual") {
  Bialgebra h4 = sweedler_h4();
  Bialgebra lhs = dual_bialgebra(twist(h4, true, false));
  Bialgebra rhs = twist(dual_bialgebra(h4), false, true);
  CHECK(lhs.mul == rhs.mul);
  CHECK(lhs.unit == rhs.unit);
  CHECK(lhs.comul == rhs.comul);
  CHECK(lhs.counit == rhs.counit);
  REQUIRE(lhs.antipode.has_value());
  REQUIRE(rhs.antipode.has_value());
  CHECK(*lhs.antipode == *rhs.antipode);
}

TEST_CASE("double dual returns the original structure constants") {
  for (Bialgebra h : {group_algebra(2), sweedler_h4()}) {
    Bialgebra dd = dual_bialgebra(dual_bialgebra(h));
    CHECK(same_constants(dd, h));
  }
  // the dual antipode of a single-factor map is the plain transpose
  Bialgebra h4 = sweedler_h4();
  Bialgebra h4d = dual_bialgebra(h4);
  REQUIRE(h4d.antipode.has_value());
  CHECK(*h4d.antipode == transpose(*h4.antipode));
}

TEST_CASE("solve_antipode") {
  Field f;
  // k[Z/2]: s(g) = g, i.e. the identity matrix
  auto s2 = solve_antipode(group_algebra(2));
  REQUIRE(s2.has_value());
  CHECK(*s2 == LinMap::identity(2));

  // the idempotent monoid has no antipode: s(x) x = 1 has no solution
  CHECK(!solve_antipode(idempotent_monoid_bialgebra()).has_value());

  // the 4-dim fixture: s(g) = g, s(x) = -gx, s(gx) = x
  Bialgebra h4 = sweedler_h4();
  auto s4 = solve_antipode(h4);
  REQUIRE(s4.has_value());
  LinMap expected = LinMap::from_entries(4, 4,
                                         {{0, 0, Scalar(1, f)},
                                          {1, 1, Scalar(1, f)},
                                          {3, 2, Scalar(-1, f)},
                                          {2, 3, Scalar(1, f)}});
  CHECK(*s4 == expected);
  CHECK(*s4 == *h4.antipode);  // agrees with the stored antipode

  // uniqueness against the stored antipode for the group algebras
  for (uint32_t n : {2u, 3u, 4u}) {
    Bialgebra h = group_algebra(n);
    auto s = solve_antipode(h);
    REQUIRE(s.has_value());
    CHECK(*s == *h.antipode);
  }
}

TEST_CASE("algebra characters") {
  Field f;
  Bialgebra h = group_algebra(2);
  CHECK(is_algebra_character(h.algebra(), h.counit));
  LinMap sign =
      LinMap::from_entries(1, 2, {{0, 0, Scalar(1, f)}, {0, 1, Scalar(-1, f)}});
  CHECK(is_algebra_character(h.algebra(), sign));
  LinMap not_unital = LinMap::from_entries(1, 2, {{0, 1, Scalar(1, f)}});
  CHECK(!is_algebra_character(h.algebra(), not_unital));
  CHECK(is_algebra_character(sweedler_h4().algebra(), sweedler_h4().counit));
}
