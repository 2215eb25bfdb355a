#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "braidkit/hopf.hpp"

namespace braidkit {

// A structure-constant file describing an algebra, a coalgebra, or a
// bialgebra over an exact field.  JSON object with this canonical key order
// (serialize() always emits it, with sorted triples, no zero coefficients
// and a two-space indent, so parse-then-serialize is byte-stable):
//
//   name      string
//   field     "Q" or "F<p>"
//   dim       n >= 1
//   basis     n distinct names
//   unit      n coefficient strings, a column vector   (paired with mul)
//   counit    n coefficient strings, a row vector      (paired with comul)
//   mul       rows [i, j, k, "c"]:  e_i e_j  contains  c e_k
//   comul     rows [i, j, k, "c"]:  Delta(e_i)  contains  c e_j (x) e_k
//   antipode  optional n x n matrix of strings, a[i][j] = <e^i, S(e_j)>
//   product   optional provenance block written by the builders; carried
//             verbatim so a built tensor product can be re-assembled later
//
// Coefficients are exact-scalar strings: an integer or "a/b" with b > 0.
// mul and unit (resp. comul and counit) must appear together, and at least
// one of the two pairs is required; an antipode needs both.  A repeated
// (i, j, k) row is an error naming the triple.
struct ParsedAlgebra {
  std::string name;
  Field field;
  BasedSpace space;
  std::optional<LinMap> mul, unit, comul, counit, antipode;
  std::string product;  // compact JSON of the provenance block, "" if absent

  bool has_algebra() const { return mul && unit; }
  bool has_coalgebra() const { return comul && counit; }
  Algebra algebra(bool unchecked = false) const;
  Coalgebra coalgebra(bool unchecked = false) const;
  Bialgebra bialgebra(bool unchecked = false) const;
};

// Anything wrong with a file (unreadable, malformed JSON, bad shape, bad
// coefficient, duplicate triple, ...) throws this, with the origin and the
// offending field in the message.  Axiom failures do not: those surface
// from the algebra()/coalgebra()/bialgebra() constructors.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `force` reinterprets the printed constants over another field (the flag
// use case); `fallback` is used only when the file has no "field" key.
ParsedAlgebra parse_algebra_text(const std::string& text,
                                 const std::string& origin,
                                 std::optional<Field> force = {},
                                 Field fallback = Field{});
ParsedAlgebra parse_algebra(const std::string& path,
                            std::optional<Field> force = {},
                            Field fallback = Field{});

std::string serialize(const ParsedAlgebra& a);  // canonical form, ends in \n
void write_algebra(const std::string& path, const ParsedAlgebra& a);

// name is taken from the space label; callers rename afterwards if needed.
ParsedAlgebra to_file(const Bialgebra& h);
ParsedAlgebra to_file(const Algebra& a);

}  // namespace braidkit
