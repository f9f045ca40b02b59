#include "homcoh/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "homcoh/cochain.hpp"
#include "homcoh/errors.hpp"

namespace homcoh {

namespace fs = std::filesystem;

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

namespace {

std::string dump_at(const Json& j, std::size_t indent) {
  std::string flat = j.dump();
  if (!j.is_structured() || flat.size() + indent < 90) return flat;
  const std::string pad(indent + 2, ' ');
  std::string out(j.is_array() ? "[\n" : "{\n");
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    out += dump_at(*it, indent + 2);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  return out + std::string(indent, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump_json(const Json& j) { return dump_at(j, 0); }

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

namespace {

void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(what + ": unknown field \"" + key + "\"");
  }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ParseError(what + ": missing field \"" + std::string(key) + "\"");
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + ": expected a string");
  return j.get<std::string>();
}

std::size_t basis_index(const HomAlgebra& a, const std::string& name, const std::string& what) {
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    if (a.basis[i] == name) return i;
  }
  throw ParseError(what + ": unknown basis element \"" + name + "\"");
}

Kind kind_from_string(const std::string& s) {
  if (s == "associative") return Kind::associative;
  if (s == "lie") return Kind::lie;
  throw ParseError("kind must be \"associative\" or \"lie\", got \"" + s + "\"");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

fs::path resolve(const std::string& ref, const fs::path& base_dir) {
  const fs::path direct = base_dir / ref;
  if (fs::exists(direct) && fs::is_regular_file(direct)) return direct;
  const fs::path named = base_dir / (ref + ".json");
  if (fs::exists(named)) return named;
  throw ParseError("cannot resolve \"" + ref + "\" relative to " + base_dir.string());
}

HomAlgebra algebra_ref(const Json& j, const fs::path& base_dir) {
  if (j.is_string()) return load_algebra(resolve(j.get<std::string>(), base_dir));
  return algebra_from_json(j);
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(what + ": row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

MultilinearMap products_from_json(const Json& j, const HomAlgebra& a) {
  const std::string what = a.name + " products";
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  const std::size_t n = a.dim;
  std::map<std::pair<std::size_t, std::size_t>, Vector> given;
  for (const auto& e : j) {
    require_object(e, what);
    reject_unknown(e, {"left", "right", "value"}, what);
    const std::size_t l = basis_index(a, string_from_json(field(e, "left", what), what), what);
    const std::size_t r = basis_index(a, string_from_json(field(e, "right", what), what), what);
    const Json& val = field(e, "value", what);
    require_object(val, what);
    Vector v = zero_vector(n);
    for (const auto& [name, q] : val.items()) v[basis_index(a, name, what)] = rational_from_json(q);
    if (!given.emplace(std::make_pair(l, r), v).second) {
      throw ParseError(what + ": pair (" + a.basis[l] + ", " + a.basis[r] + ") given twice");
    }
  }
  MultilinearMap mul(2, n, n);
  for (const auto& [key, v] : given) {
    const auto [l, r] = key;
    mul.add_to(l * n + r, v);
    if (a.kind == Kind::lie && l != r) {
      auto other = given.find({r, l});
      if (other == given.end()) {
        mul.add_to(r * n + l, v, -1);
      } else if (!is_zero(other->second + v)) {
        throw ParseError(what + ": pairs (" + a.basis[l] + ", " + a.basis[r] + ") and (" + a.basis[r] + ", " +
                         a.basis[l] + ") are not antisymmetric");
      }
    }
  }
  return mul;
}

Json products_to_json(const MultilinearMap& mul, const HomAlgebra& a) {
  Json out = Json::array();
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Vector v = mul.value(i * n + k);
      if (is_zero(v)) continue;
      Json val = Json::object();
      for (std::size_t o = 0; o < n; ++o) {
        if (v[o] != 0) val[a.basis[o]] = to_string(v[o]);
      }
      out.push_back(Json{{"left", a.basis[i]}, {"right", a.basis[k]}, {"value", val}});
    }
  }
  return out;
}

HomAlgebra algebra_from_json(const Json& j) {
  const std::string what = "algebra";
  require_object(j, what);
  reject_unknown(j, {"name", "kind", "dim", "basis", "alpha", "mul"}, what);
  const std::string name = j.contains("name") ? string_from_json(j.at("name"), what + " name") : "algebra";
  const Kind kind = kind_from_string(string_from_json(field(j, "kind", what), what + " kind"));
  const std::size_t dim = count_from_json(field(j, "dim", what), what + " dim");
  if (dim == 0) throw ParseError(name + ": dim must be at least 1");
  HomAlgebra a(name, kind, dim);
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != dim) throw ParseError(name + ": basis must list " + std::to_string(dim) + " names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
      a.basis[i] = string_from_json(b[i], name + " basis");
      if (!seen.insert(a.basis[i]).second) throw ParseError(name + ": duplicate basis name \"" + a.basis[i] + "\"");
    }
  }
  if (j.contains("alpha")) a.alpha = matrix_from_json(j.at("alpha"), dim, dim, name + " alpha");
  if (j.contains("mul")) a.mul = products_from_json(j.at("mul"), a);
  return a;
}

Json algebra_to_json(const HomAlgebra& a) {
  Json out;
  out["name"] = a.name;
  out["kind"] = to_string(a.kind);
  out["dim"] = a.dim;
  out["basis"] = a.basis;
  out["alpha"] = matrix_to_json(a.alpha);
  out["mul"] = products_to_json(a.mul, a);
  return out;
}

HomAlgebra load_algebra(const fs::path& path) { return algebra_from_json(read_json_file(path)); }

bool is_morphism_json(const Json& j) { return j.is_object() && j.contains("matrix"); }

HomMorphism morphism_from_json(const Json& j, const fs::path& base_dir) {
  const std::string what = "morphism";
  require_object(j, what);
  reject_unknown(j, {"source", "target", "matrix"}, what);
  HomMorphism m{algebra_ref(field(j, "source", what), base_dir), algebra_ref(field(j, "target", what), base_dir), {}};
  m.matrix = matrix_from_json(field(j, "matrix", what), m.target.dim, m.source.dim, what + " matrix");
  return m;
}

Json morphism_to_json(const HomMorphism& m) {
  Json out;
  out["source"] = algebra_to_json(m.source);
  out["target"] = algebra_to_json(m.target);
  out["matrix"] = matrix_to_json(m.matrix);
  return out;
}

HomMorphism load_morphism(const fs::path& path) {
  return morphism_from_json(read_json_file(path), path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

namespace {

std::map<std::size_t, MultilinearMap> terms_from_json(const Json& j, const HomAlgebra& a, std::size_t order,
                                                      const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  std::map<std::size_t, MultilinearMap> out;
  for (const auto& e : j) {
    require_object(e, what);
    reject_unknown(e, {"degree", "mul"}, what);
    const std::size_t deg = count_from_json(field(e, "degree", what), what + " degree");
    if (deg == 0 || deg > order) throw ParseError(what + ": degree " + std::to_string(deg) + " outside 1.." + std::to_string(order));
    if (out.count(deg)) throw ParseError(what + ": degree " + std::to_string(deg) + " given twice");
    out.emplace(deg, products_from_json(field(e, "mul", what), a));
  }
  return out;
}

Json terms_to_json(const std::map<std::size_t, MultilinearMap>& terms, const HomAlgebra& a) {
  Json out = Json::array();
  for (const auto& [deg, m] : terms) out.push_back(Json{{"degree", deg}, {"mul", products_to_json(m, a)}});
  return out;
}

}  // namespace

DeformationFile deformation_from_json(const Json& j, const fs::path& base_dir) {
  const std::string what = "deformation";
  require_object(j, what);
  reject_unknown(j, {"morphism", "algebra", "order", "terms", "phi_terms", "target_terms"}, what);
  const std::size_t order = count_from_json(field(j, "order", what), what + " order");
  DeformationFile out;
  if (j.contains("morphism")) {
    const Json& mj = j.at("morphism");
    HomMorphism phi;
    if (mj.is_string()) {
      const fs::path p = resolve(mj.get<std::string>(), base_dir);
      phi = morphism_from_json(read_json_file(p), p.parent_path());
    } else {
      phi = morphism_from_json(mj, base_dir);
    }
    if (j.contains("algebra")) {
      const HomAlgebra a = algebra_ref(j.at("algebra"), base_dir);
      if (a.dim != phi.source.dim || !(a.mul == phi.source.mul) || !(a.alpha == phi.source.alpha)) {
        throw ParseError(what + ": \"algebra\" differs from the morphism source");
      }
    }
    MorphismDeformation md;
    md.phi = phi;
    md.order = order;
    md.def_a.base = phi.source;
    md.def_a.order = order;
    md.def_b.base = phi.target;
    md.def_b.order = order;
    if (j.contains("terms")) md.def_a.terms = terms_from_json(j.at("terms"), phi.source, order, what + " terms");
    if (j.contains("target_terms")) {
      md.def_b.terms = terms_from_json(j.at("target_terms"), phi.target, order, what + " target_terms");
    }
    if (j.contains("phi_terms")) {
      const Json& pt = j.at("phi_terms");
      if (!pt.is_array()) throw ParseError(what + " phi_terms: expected an array");
      for (const auto& e : pt) {
        require_object(e, what + " phi_terms");
        reject_unknown(e, {"degree", "matrix"}, what + " phi_terms");
        const std::size_t deg = count_from_json(field(e, "degree", what), what + " phi_terms degree");
        if (deg == 0 || deg > order) throw ParseError(what + " phi_terms: degree " + std::to_string(deg) + " out of range");
        if (md.phi_terms.count(deg)) throw ParseError(what + " phi_terms: degree " + std::to_string(deg) + " given twice");
        md.phi_terms.emplace(deg, matrix_from_json(field(e, "matrix", what), phi.target.dim, phi.source.dim,
                                                   what + " phi_terms matrix"));
      }
    }
    out.algebra = md.def_a;
    out.morphism = std::move(md);
    return out;
  }
  if (j.contains("phi_terms") || j.contains("target_terms")) {
    throw ParseError(what + ": phi_terms and target_terms need a morphism");
  }
  out.algebra.base = algebra_ref(field(j, "algebra", what), base_dir);
  out.algebra.order = order;
  if (j.contains("terms")) out.algebra.terms = terms_from_json(j.at("terms"), out.algebra.base, order, what + " terms");
  return out;
}

Json deformation_to_json(const FormalDeformation& d) {
  Json out;
  out["algebra"] = algebra_to_json(d.base);
  out["order"] = d.order;
  out["terms"] = terms_to_json(d.terms, d.base);
  return out;
}

Json deformation_to_json(const MorphismDeformation& md) {
  Json out;
  out["morphism"] = morphism_to_json(md.phi);
  out["order"] = md.order;
  out["terms"] = terms_to_json(md.def_a.terms, md.phi.source);
  out["target_terms"] = terms_to_json(md.def_b.terms, md.phi.target);
  Json pt = Json::array();
  for (const auto& [deg, m] : md.phi_terms) pt.push_back(Json{{"degree", deg}, {"matrix", matrix_to_json(m)}});
  out["phi_terms"] = pt;
  return out;
}

DeformationFile load_deformation(const fs::path& path) {
  return deformation_from_json(read_json_file(path), path.parent_path().empty() ? fs::path(".") : path.parent_path());
}

namespace {

std::vector<std::string> names_or_default(const std::vector<std::string>& basis, std::size_t n) {
  if (basis.size() == n) return basis;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace

Json cochain_to_json(const MultilinearMap& f, const std::vector<std::string>& target_basis) {
  const auto names = names_or_default(target_basis, f.target_dim());
  Json out;
  out["arity"] = f.arity();
  out["source"] = f.source_dim();
  out["target"] = f.target_dim();
  Json entries = Json::array();
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    Json value = Json::object();
    for (std::size_t k = 0; k < f.target_dim(); ++k) {
      if (f.at(t, k) != 0) value[names[k]] = to_string(f.at(t, k));
    }
    if (value.empty()) continue;
    entries.push_back(Json{{"args", tuple_args(t, f.arity(), f.source_dim())}, {"value", value}});
  }
  out["entries"] = entries;
  return out;
}

MultilinearMap cochain_from_json(const Json& j, const std::vector<std::string>& target_basis) {
  const std::string what = "cochain";
  require_object(j, what);
  reject_unknown(j, {"arity", "source", "target", "entries"}, what);
  const std::size_t k = count_from_json(field(j, "arity", what), what);
  const std::size_t s = count_from_json(field(j, "source", what), what);
  const std::size_t t = count_from_json(field(j, "target", what), what);
  check_arity(k);
  const auto names = names_or_default(target_basis, t);
  MultilinearMap f(k, s, t);
  const Json& entries = field(j, "entries", what);
  if (!entries.is_array()) throw ParseError(what + ": entries must be an array");
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    require_object(e, what + " entry");
    reject_unknown(e, {"args", "value"}, what + " entry");
    const Json& args = field(e, "args", what + " entry");
    if (!args.is_array() || args.size() != k) throw ParseError(what + ": entry needs " + std::to_string(k) + " args");
    std::vector<std::size_t> idx;
    for (const auto& a : args) {
      const std::size_t i = count_from_json(a, what + " args");
      if (i >= s) throw DimensionError(what + ": argument index " + std::to_string(i) + " out of range");
      idx.push_back(i);
    }
    const std::size_t tuple = tuple_index(idx, s);
    if (!seen.insert(tuple).second) throw ParseError(what + ": duplicate entry");
    const Json& value = field(e, "value", what + " entry");
    require_object(value, what + " value");
    for (auto it = value.begin(); it != value.end(); ++it) {
      const auto pos = std::find(names.begin(), names.end(), it.key());
      if (pos == names.end()) throw ParseError(what + ": unknown basis name \"" + it.key() + "\"");
      f.at(tuple, static_cast<std::size_t>(pos - names.begin())) = rational_from_json(it.value());
    }
  }
  return f;
}

Json morphism_cochain_to_json(const MorphismCochain& c, const std::vector<std::string>& source_basis,
                              const std::vector<std::string>& target_basis) {
  Json out;
  out["degree"] = c.degree();
  out["a"] = cochain_to_json(c.a, source_basis);
  out["b"] = cochain_to_json(c.b, target_basis);
  out["ab"] = cochain_to_json(c.ab, target_basis);
  return out;
}

MorphismCochain morphism_cochain_from_json(const Json& j, const std::vector<std::string>& source_basis,
                                           const std::vector<std::string>& target_basis) {
  const std::string what = "morphism cochain";
  require_object(j, what);
  reject_unknown(j, {"degree", "a", "b", "ab"}, what);
  MorphismCochain c{cochain_from_json(field(j, "a", what), source_basis),
                    cochain_from_json(field(j, "b", what), target_basis),
                    cochain_from_json(field(j, "ab", what), target_basis)};
  const std::size_t n = count_from_json(field(j, "degree", what), what);
  if (c.a.arity() != n || c.b.arity() != n || c.ab.arity() + 1 != n) throw ParseError(what + ": arities do not match degree");
  return c;
}

std::string witness_label(const HomAlgebra& a, const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i] < a.basis.size() ? a.basis[w[i]] : std::to_string(w[i]);
  }
  return s + ")";
}

std::string vector_label(const Vector& v, const std::vector<std::string>& basis) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Rational mag = neg ? Rational(-v[i]) : v[i];
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != 1) s += to_string(mag) + "*";
    s += i < basis.size() ? basis[i] : "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Json validity_to_json(const ValidityReport& r, const HomAlgebra& a) {
  Json out;
  out["name"] = a.name;
  out["kind"] = to_string(a.kind);
  out["valid"] = r.is_valid;
  if (!r.is_valid) {
    out["failure"] = r.failure;
    Json w = Json::array();
    for (auto i : r.witness) w.push_back(i < a.basis.size() ? a.basis[i] : std::to_string(i));
    out["witness"] = w;
    out["defect"] = vector_label(r.defect, a.basis);
  }
  out["multiplicative"] = r.multiplicative;
  if (!r.multiplicative) {
    Json w = Json::array();
    for (auto i : r.multiplicative_witness) w.push_back(i < a.basis.size() ? a.basis[i] : std::to_string(i));
    out["multiplicative_witness"] = w;
  }
  return out;
}

Json summary_to_json(const ComplexSummary& s) {
  Json out;
  out["complex"] = to_string(s.flavor);
  Json degs = Json::array();
  for (const auto& d : s.degrees) {
    Json r;
    r["n"] = d.n;
    r["dim_C"] = d.dim_C;
    r["dim_Z"] = d.dim_Z;
    r["dim_B"] = d.dim_B;
    r["dim_H"] = d.dim_H;
    r["images_in_codomain"] = d.images_in_codomain;
    r["square_zero"] = d.square_zero;
    Json reps = Json::array();
    for (const auto& rep : d.representatives) {
      Json parts = Json::array();
      for (const auto& f : rep) parts.push_back(cochain_to_json(f));
      reps.push_back(parts);
    }
    r["representatives"] = reps;
    degs.push_back(r);
  }
  out["degrees"] = degs;
  out["warnings"] = s.warnings;
  return out;
}

Json morphism_cohomology_to_json(const MorphismCohomologyReport& r) {
  Json out;
  out["n"] = r.n;
  out["coupled"] = summary_to_json(r.coupled);
  out["h_source"] = r.h_source;
  out["h_target"] = r.h_target;
  out["h_values_previous"] = r.h_values_previous;
  out["values"] = summary_to_json(r.values);
  out["product_formula"] = r.product_formula;
  out["product_formula_matches"] = r.product_formula_matches;
  return out;
}

Json deformation_report_to_json(const DeformationReport& r) {
  Json out;
  out["ok"] = r.ok();
  out["algebra_a_ok"] = r.algebra_a_ok;
  out["algebra_b_ok"] = r.algebra_b_ok;
  out["morphism_eq_ok"] = r.morphism_eq_ok;
  out["twist_eq_ok"] = r.twist_eq_ok;
  Json orders = Json::array();
  for (const auto& o : r.orders) {
    orders.push_back(Json{{"s", o.s},
                          {"algebra_a_ok", o.algebra_a_ok},
                          {"algebra_b_ok", o.algebra_b_ok},
                          {"morphism_eq_ok", o.morphism_eq_ok},
                          {"twist_eq_ok", o.twist_eq_ok},
                          {"witnesses", o.witnesses}});
  }
  out["orders"] = orders;
  return out;
}

}  // namespace homcoh
