#include "braidkit/serial.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace braidkit {

namespace {

using oj = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ParseError(origin + ": " + msg);
}

Field parse_field_str(const std::string& s, const std::string& origin) {
  if (s == "Q") return Field{};
  if (s.size() >= 2 && s[0] == 'F') {
    size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == s.size() - 1) {
      try {
        return field_fp((uint32_t)p);
      } catch (const std::invalid_argument& e) {
        fail(origin, std::string("field: ") + e.what());
      }
    }
  }
  fail(origin, "field must be \"Q\" or \"F<p>\", got \"" + s + "\"");
}

Scalar coeff(const oj& v, Field f, const std::string& origin,
             const std::string& where) {
  if (!v.is_string()) fail(origin, where + ": coefficient must be a string");
  try {
    return Scalar::parse(v.get<std::string>(), f);
  } catch (const std::exception& e) {
    fail(origin, where + ": " + e.what());
  }
}

uint32_t index_in(const oj& v, uint32_t dim, const std::string& origin,
                  const std::string& where) {
  if (!v.is_number_unsigned() || v.get<uint64_t>() >= dim)
    fail(origin,
         where + ": index out of range (dim " + std::to_string(dim) + ")");
  return (uint32_t)v.get<uint64_t>();
}

std::vector<Entry> parse_vec(const oj& arr, uint32_t dim, bool column, Field f,
                             const std::string& origin,
                             const std::string& key) {
  if (!arr.is_array() || arr.size() != dim)
    fail(origin, "\"" + key + "\" must be an array of dim coefficients");
  std::vector<Entry> es;
  for (uint32_t i = 0; i < dim; ++i) {
    Scalar c = coeff(arr[i], f, origin, key + "[" + std::to_string(i) + "]");
    if (c.is_zero()) continue;
    if (column)
      es.push_back({i, 0, c});
    else
      es.push_back({0, i, c});
  }
  return es;
}

// mul rows [i, j, k, c] become entries (k, i*d + j); comul rows the mirror
// (j*d + k, i).  A repeated (i, j, k) is rejected even with coefficient 0.
LinMap parse_triples(const oj& arr, uint32_t d, bool comul_layout, Field f,
                     const std::string& origin, const std::string& key) {
  if (!arr.is_array()) fail(origin, "\"" + key + "\" must be an array");
  std::set<std::tuple<uint32_t, uint32_t, uint32_t>> seen;
  std::vector<Entry> es;
  for (size_t r = 0; r < arr.size(); ++r) {
    const oj& row = arr[r];
    std::string where = key + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 4)
      fail(origin, where + " must be [i, j, k, coefficient]");
    uint32_t i = index_in(row[0], d, origin, where);
    uint32_t jj = index_in(row[1], d, origin, where);
    uint32_t k = index_in(row[2], d, origin, where);
    if (!seen.insert({i, jj, k}).second)
      fail(origin, key + ": duplicate triple (" + std::to_string(i) + ", " +
                       std::to_string(jj) + ", " + std::to_string(k) + ")");
    Scalar c = coeff(row[3], f, origin, where);
    if (c.is_zero()) continue;
    if (comul_layout)
      es.push_back({jj * d + k, i, c});
    else
      es.push_back({k, i * d + jj, c});
  }
  if (comul_layout) return LinMap::from_entries(d * d, d, std::move(es), f);
  return LinMap::from_entries(d, d * d, std::move(es), f);
}

// dump(2) would spread every [i, j, k, "c"] row over six lines; this keeps
// scalar-only arrays that fit on one line inline and is just as canonical.
void print_json(const oj& v, std::string& out, uint32_t indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    size_t n = v.size(), i = 0;
    for (auto& item : v.items()) {
      out += pad + "  " + oj(item.key()).dump() + ": ";
      print_json(item.value(), out, indent + 2);
      out += (++i < n) ? ",\n" : "\n";
    }
    out += pad + "}";
    return;
  }
  if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    bool flat = std::all_of(v.begin(), v.end(), [](const oj& e) {
      return !e.is_array() && !e.is_object();
    });
    if (flat) {
      std::string line = "[";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) line += ", ";
        line += v[i].dump();
      }
      line += "]";
      if (line.size() <= 72) {
        out += line;
        return;
      }
    }
    out += "[\n";
    for (size_t i = 0; i < v.size(); ++i) {
      out += pad + "  ";
      print_json(v[i], out, indent + 2);
      out += (i + 1 < v.size()) ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  out += v.dump();
}

}  // namespace

Algebra ParsedAlgebra::algebra(bool unchecked) const {
  if (!has_algebra()) throw ParseError(name + ": no multiplication data");
  return make_algebra(space, *mul, *unit, unchecked);
}

Coalgebra ParsedAlgebra::coalgebra(bool unchecked) const {
  if (!has_coalgebra()) throw ParseError(name + ": no comultiplication data");
  return make_coalgebra(space, *comul, *counit, unchecked);
}

Bialgebra ParsedAlgebra::bialgebra(bool unchecked) const {
  if (!has_algebra() || !has_coalgebra())
    throw ParseError(name + ": a bialgebra needs mul, unit, comul and counit");
  return make_bialgebra(space, *mul, *unit, *comul, *counit, antipode,
                        unchecked);
}

ParsedAlgebra parse_algebra_text(const std::string& text,
                                 const std::string& origin,
                                 std::optional<Field> force, Field fallback) {
  oj j;
  try {
    j = oj::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(origin, e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");
  static const std::set<std::string> known{"name", "field",  "dim",
                                           "basis", "unit",  "counit",
                                           "mul",  "comul", "antipode",
                                           "product"};
  for (auto& item : j.items())
    if (!known.count(item.key()))
      fail(origin, "unknown key \"" + item.key() + "\"");

  ParsedAlgebra a;
  if (!j.contains("name") || !j["name"].is_string())
    fail(origin, "missing string \"name\"");
  a.name = j["name"].get<std::string>();

  Field file_field = fallback;
  if (j.contains("field")) {
    if (!j["field"].is_string()) fail(origin, "\"field\" must be a string");
    file_field = parse_field_str(j["field"].get<std::string>(), origin);
  }
  a.field = force ? *force : file_field;
  Field f = a.field;

  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    fail(origin, "missing unsigned \"dim\"");
  uint64_t dim64 = j["dim"].get<uint64_t>();
  if (dim64 == 0 || dim64 > 65535)
    fail(origin, "\"dim\" must be between 1 and 65535");
  uint32_t d = (uint32_t)dim64;

  if (!j.contains("basis") || !j["basis"].is_array() ||
      j["basis"].size() != d)
    fail(origin, "\"basis\" must list dim names");
  std::vector<std::string> names;
  for (auto& v : j["basis"]) {
    if (!v.is_string()) fail(origin, "basis names must be strings");
    names.push_back(v.get<std::string>());
  }
  try {
    a.space = make_space(a.name, std::move(names));
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }

  if (j.contains("mul") != j.contains("unit"))
    fail(origin, "\"mul\" and \"unit\" must be given together");
  if (j.contains("comul") != j.contains("counit"))
    fail(origin, "\"comul\" and \"counit\" must be given together");
  if (!j.contains("mul") && !j.contains("comul"))
    fail(origin, "no algebra or coalgebra data");

  if (j.contains("mul")) {
    a.unit = LinMap::from_entries(
        d, 1, parse_vec(j["unit"], d, true, f, origin, "unit"), f);
    a.mul = parse_triples(j["mul"], d, false, f, origin, "mul");
  }
  if (j.contains("comul")) {
    a.counit = LinMap::from_entries(
        1, d, parse_vec(j["counit"], d, false, f, origin, "counit"), f);
    a.comul = parse_triples(j["comul"], d, true, f, origin, "comul");
  }
  if (j.contains("antipode")) {
    if (!a.has_algebra() || !a.has_coalgebra())
      fail(origin, "an antipode needs both mul and comul");
    const oj& m = j["antipode"];
    std::vector<Entry> es;
    if (!m.is_array() || m.size() != d)
      fail(origin, "\"antipode\" must be a dim x dim matrix");
    for (uint32_t r = 0; r < d; ++r) {
      if (!m[r].is_array() || m[r].size() != d)
        fail(origin, "\"antipode\" must be a dim x dim matrix");
      for (uint32_t c = 0; c < d; ++c) {
        Scalar v = coeff(m[r][c], f, origin,
                         "antipode[" + std::to_string(r) + "][" +
                             std::to_string(c) + "]");
        if (!v.is_zero()) es.push_back({r, c, v});
      }
    }
    a.antipode = LinMap::from_entries(d, d, std::move(es), f);
  }
  if (j.contains("product")) a.product = j["product"].dump();
  return a;
}

ParsedAlgebra parse_algebra(const std::string& path,
                            std::optional<Field> force, Field fallback) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), path, force, fallback);
}

std::string serialize(const ParsedAlgebra& a) {
  uint32_t d = a.space.dim;
  oj j;
  j["name"] = a.name;
  j["field"] = a.field.str();
  j["dim"] = d;
  j["basis"] = a.space.basis_names;
  auto vec_strings = [&](const LinMap& v, bool column) {
    std::vector<std::string> out;
    for (uint32_t i = 0; i < d; ++i)
      out.push_back(column ? v.at(i, 0).str() : v.at(0, i).str());
    return out;
  };
  if (a.unit) j["unit"] = vec_strings(*a.unit, true);
  if (a.counit) j["counit"] = vec_strings(*a.counit, false);
  auto triples = [&](const LinMap& m, bool comul_layout) {
    std::vector<std::tuple<uint32_t, uint32_t, uint32_t, std::string>> rows;
    for (const Entry& e : m.entries()) {
      if (comul_layout)
        rows.emplace_back(e.col, e.row / d, e.row % d, e.val.str());
      else
        rows.emplace_back(e.col / d, e.col % d, e.row, e.val.str());
    }
    std::sort(rows.begin(), rows.end());
    oj arr = oj::array();
    for (auto& [i, jj, k, c] : rows)
      arr.push_back(oj::array({i, jj, k, c}));
    return arr;
  };
  if (a.mul) j["mul"] = triples(*a.mul, false);
  if (a.comul) j["comul"] = triples(*a.comul, true);
  if (a.antipode) {
    oj m = oj::array();
    for (uint32_t r = 0; r < d; ++r) {
      oj row = oj::array();
      for (uint32_t c = 0; c < d; ++c)
        row.push_back(a.antipode->at(r, c).str());
      m.push_back(row);
    }
    j["antipode"] = m;
  }
  if (!a.product.empty()) j["product"] = oj::parse(a.product);
  std::string out;
  print_json(j, out, 0);
  out += "\n";
  return out;
}

void write_algebra(const std::string& path, const ParsedAlgebra& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize(a);
  if (!out) throw ParseError("cannot write " + path);
}

ParsedAlgebra to_file(const Bialgebra& h) {
  ParsedAlgebra a;
  a.name = h.space.label;
  a.field = h.field();
  a.space = h.space;
  a.mul = h.mul;
  a.unit = h.unit;
  a.comul = h.comul;
  a.counit = h.counit;
  a.antipode = h.antipode;
  return a;
}

ParsedAlgebra to_file(const Algebra& al) {
  ParsedAlgebra a;
  a.name = al.space.label;
  a.field = al.field();
  a.space = al.space;
  a.mul = al.mul;
  a.unit = al.unit;
  return a;
}

}  // namespace braidkit
