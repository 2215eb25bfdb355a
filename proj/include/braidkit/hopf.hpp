#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/tensor.hpp"

namespace braidkit {

// One failed axiom instance: the axiom's name plus the basis multi-index of
// the domain where both sides first disagree.
struct Violation {
  std::string axiom;
  std::vector<uint32_t> witness;
  std::string str() const;
};
using Report = std::vector<Violation>;

struct Algebra {
  BasedSpace space;
  LinMap mul;   // V (x) V -> V
  LinMap unit;  // I -> V
  Field field() const { return mul.field(); }
};

struct Coalgebra {
  BasedSpace space;
  LinMap comul;   // V -> V (x) V
  LinMap counit;  // V -> I
  Field field() const { return comul.field(); }
};

struct Bialgebra {
  BasedSpace space;
  LinMap mul, unit, comul, counit;
  std::optional<LinMap> antipode;  // V -> V
  bool unchecked = false;          // set when loaded without axiom validation

  Field field() const { return mul.field(); }
  uint32_t dim() const { return space.dim; }
  Algebra algebra() const { return {space, mul, unit}; }
  Coalgebra coalgebra() const { return {space, comul, counit}; }
};

// Constructors validate shapes always and axioms unless `unchecked`; axiom
// failure raises with the offending report in the message.
Algebra make_algebra(BasedSpace space, LinMap mul, LinMap unit,
                     bool unchecked = false);
Coalgebra make_coalgebra(BasedSpace space, LinMap comul, LinMap counit,
                         bool unchecked = false);
Bialgebra make_bialgebra(BasedSpace space, LinMap mul, LinMap unit, LinMap comul,
                         LinMap counit, std::optional<LinMap> antipode,
                         bool unchecked = false);

Report check_uaa(const Algebra& a);
Report check_coalgebra(const Coalgebra& c);
Report check_bialgebra(const Bialgebra& h);  // includes both halves + compat
Report check_antipode(const Bialgebra& h);

// Opposite / coopposite twists. Both twists keep the stored antipode; exactly
// one twist installs s^{-1} when s is invertible and drops it otherwise.
Bialgebra twist(const Bialgebra& h, bool use_op, bool use_cop);

// The dual bialgebra under the rainbow convention: mul* = dual of comul, etc.
Bialgebra dual_bialgebra(const Bialgebra& h);

// Solve the antipode axiom as a linear system in the dim^2 entries of s.
std::optional<LinMap> solve_antipode(const Bialgebra& h);

// phi: V -> I multiplicative and unital?
bool is_algebra_character(const Algebra& a, const LinMap& phi);

// Fixtures.
Bialgebra trivial_bialgebra(Field f = Field{});
Bialgebra group_algebra(uint32_t n, Field f = Field{});  // k[Z/n]
Bialgebra sweedler_h4(Field f = Field{});
Bialgebra idempotent_monoid_bialgebra(Field f = Field{});  // k{1,x}, x^2 = x

}  // namespace braidkit
