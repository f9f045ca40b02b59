#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "homcoh/cohomology.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/errors.hpp"
#include "homcoh/io.hpp"
#include "homcoh/selftest.hpp"

#ifndef HOMCOH_DEFAULT_EXPECTED
#define HOMCOH_DEFAULT_EXPECTED "fixtures/expected.json"
#endif

namespace fs = std::filesystem;
using namespace homcoh;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct DegreeRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

DegreeRange parse_degrees(const std::string& s) {
  auto num = [&s](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("degree range must look like N or A..B, got \"" + s + "\"");
    }
    return static_cast<std::size_t>(std::stoul(t));
  };
  const auto dots = s.find("..");
  DegreeRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(s);
  } else {
    r.lo = num(s.substr(0, dots));
    r.hi = num(s.substr(dots + 2));
  }
  if (r.lo == 0 || r.hi < r.lo) throw ParseError("degree range must satisfy 1 <= A <= B");
  return r;
}

void print_json(const Json& j) { std::cout << dump_json(j) << "\n"; }

std::string basis_name(const std::vector<std::string>& basis, std::size_t i) {
  return i < basis.size() ? basis[i] : "x" + std::to_string(i + 1);
}

// One line per nonzero basis value: "  f(e1,e2) = e3".
void print_cochain(const MultilinearMap& f, const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                   const std::string& indent, const std::string& label = "f") {
  bool any = false;
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    const Vector v = f.value(t);
    if (is_zero(v)) continue;
    any = true;
    const auto args = tuple_args(t, f.arity(), f.source_dim());
    std::string lhs = label + "(";
    for (std::size_t i = 0; i < args.size(); ++i) lhs += (i ? "," : "") + basis_name(src, args[i]);
    std::cout << indent << lhs << ") = " << vector_label(v, tgt) << "\n";
  }
  if (!any) std::cout << indent << label << " = 0\n";
}

void print_validity(const HomAlgebra& a, const ValidityReport& r) {
  std::cout << a.name << " (" << to_string(a.kind) << ", dim " << a.dim << "): ";
  if (r.is_valid) {
    std::cout << "valid";
  } else {
    std::cout << "INVALID " << r.failure << " at " << witness_label(a, r.witness);
    if (!r.defect.empty()) std::cout << ", defect " << vector_label(r.defect, a.basis);
  }
  std::cout << "; " << (r.multiplicative ? "multiplicative" : "not multiplicative");
  if (!r.multiplicative) std::cout << " at " << witness_label(a, r.multiplicative_witness);
  std::cout << "\n";
}

void print_summary(const ComplexSummary& s) {
  std::cout << "complex " << to_string(s.flavor) << "\n";
  for (const auto& w : s.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "  n  dim C  dim Z  dim B  dim H\n";
  for (const auto& d : s.degrees) {
    std::printf("%3zu %6zu %6zu %6zu %6zu\n", d.n, d.dim_C, d.dim_Z, d.dim_B, d.dim_H);
    if (!d.images_in_codomain) std::cout << "    note: images of delta leave the cochain space in degree " << d.n << "\n";
    if (!d.square_zero) std::cout << "    note: delta o delta != 0 into degree " << d.n << "\n";
  }
}

// Looks up items in the expectations file and prints PASS or FINDING lines.
struct Comparator {
  Json items = Json::array();
  bool loaded = false;

  explicit Comparator(const std::string& path) {
    if (path.empty()) return;
    const Json j = read_json_file(path);
    if (j.contains("items")) items = j.at("items");
    loaded = true;
  }

  void compare(const std::string& command, const std::string& name, std::size_t degree, const std::string& quantity,
               std::size_t computed, Json* out) const {
    for (const auto& it : items) {
      if (it.value("command", "") != command || it.value("name", "") != name) continue;
      if (it.value("degree", 0u) != degree || it.value("quantity", "") != quantity) continue;
      const std::size_t expected = it.at("expected").get<std::size_t>();
      const bool pass = expected == computed;
      const std::string line = std::string(pass ? "PASS" : "FINDING") + " " + name + " " + quantity + "^" +
                               std::to_string(degree) + ": computed " + std::to_string(computed) + ", expected " +
                               std::to_string(expected) + (it.contains("note") ? " (" + it.at("note").get<std::string>() + ")" : "");
      if (out) {
        (*out)["comparisons"].push_back(Json{{"verdict", pass ? "PASS" : "FINDING"},
                                             {"name", name},
                                             {"quantity", quantity},
                                             {"degree", degree},
                                             {"computed", computed},
                                             {"expected", expected}});
      } else {
        std::cout << line << "\n";
      }
    }
  }
};

int cmd_validate(const std::string& file, bool json) {
  const Json j = read_json_file(file);
  if (is_morphism_json(j)) {
    const fs::path p(file);
    const HomMorphism phi = morphism_from_json(j, p.parent_path().empty() ? fs::path(".") : p.parent_path());
    const auto rs = validate(phi.source);
    const auto rt = validate(phi.target);
    const auto rm = check_morphism(phi.source, phi.target, phi.matrix);
    const bool ok = rs.is_valid && rt.is_valid && rm.is_valid;
    if (json) {
      Json out;
      out["source"] = validity_to_json(rs, phi.source);
      out["target"] = validity_to_json(rt, phi.target);
      out["morphism"] = Json{{"valid", rm.is_valid}};
      if (!rm.is_valid) {
        out["morphism"]["failure"] = rm.failure;
        out["morphism"]["witness"] = witness_label(phi.source, rm.witness);
        out["morphism"]["defect"] = vector_label(rm.defect, phi.target.basis);
      }
      out["valid"] = ok;
      print_json(out);
    } else {
      print_validity(phi.source, rs);
      print_validity(phi.target, rt);
      std::cout << "morphism: ";
      if (rm.is_valid) std::cout << "valid\n";
      else std::cout << "INVALID " << rm.failure << " at " << witness_label(phi.source, rm.witness) << ", defect "
                     << vector_label(rm.defect, phi.target.basis) << "\n";
    }
    return ok ? kOk : kMathFailure;
  }
  const HomAlgebra a = algebra_from_json(j);
  const auto r = validate(a);
  if (json) print_json(validity_to_json(r, a));
  else print_validity(a, r);
  return r.is_valid ? kOk : kMathFailure;
}

int refuse_invalid(const HomAlgebra& a) {
  const auto r = validate(a);
  std::cerr << "error: " << a.name << " is not a valid Hom-" << (a.kind == Kind::lie ? "Lie" : "associative")
            << " algebra (" << r.failure << " at " << witness_label(a, r.witness) << "); rerun with --force\n";
  return kMathFailure;
}

int cmd_cohomology(const std::string& file, const std::string& degrees, bool lie, const std::string& values_in,
                   bool json, bool force, const std::string& compare) {
  const DegreeRange range = parse_degrees(degrees);
  const HomAlgebra a = load_algebra(file);
  if (lie && a.kind != Kind::lie) throw ParseError("--lie given but " + a.name + " has kind associative");
  const Flavor flavor = a.kind == Kind::lie ? Flavor::lie : Flavor::hom;
  std::unique_ptr<Complex> complex;
  std::string name = a.name;
  if (!values_in.empty()) {
    const HomMorphism phi = load_morphism(values_in);
    if (phi.source.dim != a.dim || !(phi.source.mul == a.mul) || !(phi.source.alpha == a.alpha)) {
      throw ParseError("--values-in morphism must have " + a.name + " as its source");
    }
    if (!force) {
      for (const HomAlgebra* x : {&phi.source, &phi.target}) {
        if (!validate(*x).is_valid) return refuse_invalid(*x);
      }
    }
    complex = values_in_complex(phi, flavor);
    name = a.name + "->" + phi.target.name;
  } else {
    if (!force && !validate(a).is_valid) return refuse_invalid(a);
    complex = flavor == Flavor::lie ? lie_self_complex(a) : hom_self_complex(a);
  }
  const ComplexSummary s = compute_cohomology(*complex, range.lo, range.hi);
  const Comparator cmp(compare);
  if (json) {
    Json out;
    out["name"] = name;
    out["summary"] = summary_to_json(s);
    if (cmp.loaded) {
      out["comparisons"] = Json::array();
      for (const auto& d : s.degrees) {
        cmp.compare("cohomology", name, d.n, "Z", d.dim_Z, &out);
        cmp.compare("cohomology", name, d.n, "B", d.dim_B, &out);
        cmp.compare("cohomology", name, d.n, "H", d.dim_H, &out);
      }
    }
    print_json(out);
  } else {
    std::cout << name << "\n";
    print_summary(s);
    for (const auto& d : s.degrees) {
      if (d.representatives.empty()) continue;
      std::cout << "H^" << d.n << " representatives:\n";
      for (std::size_t r = 0; r < d.representatives.size(); ++r) {
        std::cout << "  [" << r + 1 << "]\n";
        print_cochain(d.representatives[r].front(), a.basis,
                      values_in.empty() ? a.basis : load_morphism(values_in).target.basis, "    ");
      }
    }
    if (cmp.loaded) {
      for (const auto& d : s.degrees) {
        cmp.compare("cohomology", name, d.n, "Z", d.dim_Z, nullptr);
        cmp.compare("cohomology", name, d.n, "B", d.dim_B, nullptr);
        cmp.compare("cohomology", name, d.n, "H", d.dim_H, nullptr);
      }
    }
  }
  return kOk;
}

int cmd_morphism_cohomology(const std::string& file, std::size_t n, bool json, const std::string& compare) {
  if (n == 0) throw ParseError("--degree must be at least 1");
  const HomMorphism phi = load_morphism(file);
  if (phi.source.kind != phi.target.kind) throw ParseError("source and target kinds differ");
  const Flavor flavor = phi.source.kind == Kind::lie ? Flavor::lie : Flavor::hom;
  const auto r = morphism_cohomology(phi, n, flavor);
  const std::string name = phi.source.name + "->" + phi.target.name;
  const Comparator cmp(compare);
  const std::size_t values_h = r.values.at(n == 1 ? 1 : n).dim_H;
  if (json) {
    Json out;
    out["name"] = name;
    out["report"] = morphism_cohomology_to_json(r);
    if (cmp.loaded) {
      out["comparisons"] = Json::array();
      cmp.compare("morphism-cohomology", name, n, "H", r.coupled.at(n).dim_H, &out);
      cmp.compare("morphism-cohomology", name, n, "values_H", values_h, &out);
    }
    print_json(out);
  } else {
    std::cout << name << " degree " << n << "\n";
    std::cout << "coupled ";
    print_summary(r.coupled);
    std::cout << "values ";
    print_summary(r.values);
    std::cout << "H^" << n << "(source) = " << r.h_source << "\n";
    std::cout << "H^" << n << "(target) = " << r.h_target << "\n";
    std::cout << "H^" << n - 1 << "(source, target) = " << r.h_values_previous << "\n";
    std::cout << "product formula: " << r.h_source << " + " << r.h_target << " + " << r.h_values_previous << " = "
              << r.product_formula << " vs coupled " << r.coupled.at(n).dim_H << " ("
              << (r.product_formula_matches ? "equal" : "different") << ")\n";
    if (cmp.loaded) {
      cmp.compare("morphism-cohomology", name, n, "H", r.coupled.at(n).dim_H, nullptr);
      cmp.compare("morphism-cohomology", name, n, "values_H", values_h, nullptr);
    }
  }
  return kOk;
}

void print_report(const DeformationReport& r) {
  std::cout << "  s  source  target  morphism  twist\n";
  auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
  for (const auto& o : r.orders) {
    std::printf("%3zu  %-6s  %-6s  %-8s  %s\n", o.s, mark(o.algebra_a_ok), mark(o.algebra_b_ok), mark(o.morphism_eq_ok),
                mark(o.twist_eq_ok));
    for (const auto& w : o.witnesses) std::cout << "     " << w << "\n";
  }
  std::cout << "source " << mark(r.algebra_a_ok) << ", target " << mark(r.algebra_b_ok) << ", morphism "
            << mark(r.morphism_eq_ok) << ", twist " << mark(r.twist_eq_ok) << "\n";
}

void print_morphism_cochain(const MorphismCochain& c, const HomMorphism& phi, const std::string& indent) {
  std::cout << indent << "source slot:\n";
  print_cochain(c.a, phi.source.basis, phi.source.basis, indent + "  ");
  std::cout << indent << "target slot:\n";
  print_cochain(c.b, phi.target.basis, phi.target.basis, indent + "  ");
  std::cout << indent << "morphism slot:\n";
  print_cochain(c.ab, phi.source.basis, phi.target.basis, indent + "  ");
}

int cmd_deform(const std::string& sub, const std::string& file, std::optional<std::size_t> to_order, bool json,
               const std::string& output) {
  const DeformationFile df = load_deformation(file);
  const auto& phi_basis = df.algebra.base.basis;
  if (sub == "check") {
    const DeformationReport r = df.morphism ? check_morphism_deformation(*df.morphism, to_order)
                                            : check_algebra_deformation(df.algebra, to_order);
    if (json) print_json(deformation_report_to_json(r));
    else print_report(r);
    return r.ok() ? kOk : kMathFailure;
  }
  if (sub == "infinitesimal") {
    if (df.morphism) {
      const auto inf = infinitesimal(*df.morphism);
      if (json) {
        print_json(Json{{"degree", inf.degree},
                        {"theta", morphism_cochain_to_json(inf.theta, df.morphism->phi.source.basis, df.morphism->phi.target.basis)},
                        {"cocycle", Json{{"source", inf.slot_a_cocycle},
                                         {"target", inf.slot_b_cocycle},
                                         {"morphism", inf.slot_ab_cocycle}}},
                        {"warnings", inf.warnings}});
      } else {
        std::cout << "infinitesimal of degree " << inf.degree << "\n";
        print_morphism_cochain(inf.theta, df.morphism->phi, "  ");
        for (const auto& w : inf.warnings) std::cout << "warning: " << w << "\n";
        std::cout << "2-cocycle: source " << (inf.slot_a_cocycle ? "yes" : "no") << ", target "
                  << (inf.slot_b_cocycle ? "yes" : "no") << ", morphism " << (inf.slot_ab_cocycle ? "yes" : "no") << "\n";
      }
      return kOk;
    }
    const auto inf = infinitesimal(df.algebra);
    if (json) {
      print_json(Json{{"degree", inf.degree}, {"theta", cochain_to_json(inf.theta, phi_basis)}, {"cocycle", inf.cocycle}});
    } else {
      std::cout << "infinitesimal of degree " << inf.degree << "\n";
      print_cochain(inf.theta, phi_basis, phi_basis, "  ");
      std::cout << "2-cocycle: " << (inf.cocycle ? "yes" : "no") << "\n";
    }
    return kOk;
  }
  if (sub == "obstruction") {
    if (df.morphism) {
      const auto ob = obstruction(*df.morphism);
      const bool coboundary = extend_deformation(*df.morphism).extended.has_value();
      if (json) {
        print_json(Json{{"order", df.morphism->order + 1},
                        {"obstruction", morphism_cochain_to_json(ob.ob, df.morphism->phi.source.basis, df.morphism->phi.target.basis)},
                        {"matches_order_equation", ob.matches_required},
                        {"cocycle", Json{{"source", ob.slot_a_cocycle},
                                         {"target", ob.slot_b_cocycle},
                                         {"morphism", ob.slot_ab_cocycle}}},
                        {"coboundary", coboundary},
                        {"diagnostics", ob.diagnostics}});
      } else {
        std::cout << "obstruction at order " << df.morphism->order + 1 << "\n";
        print_morphism_cochain(ob.ob, df.morphism->phi, "  ");
        for (const auto& d : ob.diagnostics) std::cout << "diagnostic: " << d << "\n";
        std::cout << "3-cocycle: source " << (ob.slot_a_cocycle ? "yes" : "no") << ", target "
                  << (ob.slot_b_cocycle ? "yes" : "no") << ", morphism " << (ob.slot_ab_cocycle ? "yes" : "no") << "\n";
        std::cout << "coboundary: " << (coboundary ? "yes" : "no") << "\n";
      }
      return kOk;
    }
    const auto ob = obstruction(df.algebra);
    const bool coboundary = extend_deformation(df.algebra).extended.has_value();
    if (json) {
      print_json(Json{{"order", df.algebra.order + 1},
                      {"obstruction", cochain_to_json(ob.ob, phi_basis)},
                      {"matches_order_equation", ob.matches_required},
                      {"cocycle", ob.cocycle},
                      {"coboundary", coboundary}});
    } else {
      std::cout << "obstruction at order " << df.algebra.order + 1 << "\n";
      print_cochain(ob.ob, phi_basis, phi_basis, "  ", "Ob");
      if (!ob.matches_required) std::cout << "diagnostic: obstruction differs from the order equation\n";
      std::cout << "3-cocycle: " << (ob.cocycle ? "yes" : "no") << "\n";
      std::cout << "coboundary: " << (coboundary ? "yes" : "no") << "\n";
    }
    return kOk;
  }
  // extend
  const std::size_t start = df.morphism ? df.morphism->order : df.algebra.order;
  const std::size_t goal = to_order.value_or(start + 1);
  if (goal <= start) throw ParseError("--to-order must exceed the current order " + std::to_string(start));
  Json emitted;
  std::vector<std::string> diagnostics;
  std::size_t failing = 0;
  bool reverified = true;
  if (df.morphism) {
    MorphismDeformation md = *df.morphism;
    while (md.order < goal) {
      auto ext = extend_deformation(md);
      diagnostics.insert(diagnostics.end(), ext.diagnostics.begin(), ext.diagnostics.end());
      if (!ext.extended) {
        failing = ext.failing_order;
        break;
      }
      reverified = reverified && ext.reverified;
      md = *ext.extended;
    }
    emitted = deformation_to_json(md);
  } else {
    FormalDeformation d = df.algebra;
    while (d.order < goal) {
      auto ext = extend_deformation(d);
      diagnostics.insert(diagnostics.end(), ext.diagnostics.begin(), ext.diagnostics.end());
      if (!ext.extended) {
        failing = ext.failing_order;
        break;
      }
      reverified = reverified && ext.reverified;
      d = *ext.extended;
    }
    emitted = deformation_to_json(d);
  }
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw ParseError("cannot write " + output);
    out << dump_json(emitted) << "\n";
  }
  if (json) {
    print_json(Json{{"extended", failing == 0}, {"reverified", reverified}, {"failing_order", failing}, {"diagnostics", diagnostics},
                    {"deformation", emitted}});
  } else {
    for (const auto& d : diagnostics) std::cout << "diagnostic: " << d << "\n";
    if (failing) {
      std::cout << "no extension: obstruction at order " << failing << " is not a coboundary\n";
    } else {
      std::cout << "extended to order " << goal << " and re-verified\n";
      std::cout << dump_json(emitted) << "\n";
    }
  }
  return failing == 0 && reverified ? kOk : kMathFailure;
}

int cmd_selftest(bool json, std::uint64_t seed) {
  const auto results = run_selftest(seed);
  bool ok = true;
  for (const auto& s : results) ok = ok && s.passed();
  if (json) {
    print_json(Json{{"seed", seed}, {"passed", ok}, {"suites", selftest_to_json(results)}});
  } else {
    for (const auto& s : results) {
      std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " checks)\n";
      for (const auto& f : s.failures) std::cout << "  " << f << "\n";
    }
  }
  return ok ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homcoh: exact cohomology and deformations of Hom-associative and Hom-Lie algebras"};
  app.require_subcommand(1);

  std::string file, degrees = "1..2", values_in, compare, output, sub;
  bool json = false, lie = false, force = false;
  std::size_t degree = 1;
  std::optional<std::size_t> to_order;
  std::uint64_t seed = default_seed;

  auto* validate_cmd = app.add_subcommand("validate", "Check the defining identities of an algebra or morphism file");
  validate_cmd->add_option("file", file, "Algebra or morphism JSON")->required();
  validate_cmd->add_flag("--json", json, "Emit JSON");

  auto* coh = app.add_subcommand("cohomology", "Cohomology of an algebra with adjoint or induced coefficients");
  coh->add_option("file", file, "Algebra JSON")->required();
  coh->add_option("--degree", degrees, "Degree N or range A..B")->capture_default_str();
  coh->add_flag("--lie", lie, "Require a Hom-Lie algebra");
  coh->add_option("--values-in", values_in, "Morphism JSON; coefficients in its target");
  coh->add_flag("--json", json, "Emit JSON");
  coh->add_flag("--force", force, "Compute even if the algebra fails its identities");
  auto* cmp_opt = coh->add_option("--compare", compare, "Expectations file")->expected(0, 1);
  cmp_opt->default_str(HOMCOH_DEFAULT_EXPECTED);

  auto* mcoh = app.add_subcommand("morphism-cohomology", "Cohomology of the coupled morphism complex");
  mcoh->add_option("file", file, "Morphism JSON")->required();
  mcoh->add_option("--degree", degree, "Degree N")->required();
  mcoh->add_flag("--json", json, "Emit JSON");
  auto* mcmp_opt = mcoh->add_option("--compare", compare, "Expectations file")->expected(0, 1);
  mcmp_opt->default_str(HOMCOH_DEFAULT_EXPECTED);

  auto* deform = app.add_subcommand("deform", "Formal deformations");
  deform->add_option("action", sub, "check | infinitesimal | obstruction | extend")
      ->required()
      ->check(CLI::IsMember({"check", "infinitesimal", "obstruction", "extend"}));
  deform->add_option("file", file, "Deformation JSON")->required();
  deform->add_option("--to-order", to_order, "check: highest order; extend: target order");
  deform->add_flag("--json", json, "Emit JSON");
  deform->add_option("-o,--output", output, "extend: write the extended deformation here");

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_flag("--json", json, "Emit JSON");
  self->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  // An empty --compare means the shipped expectations file.
  auto compare_path = [&](CLI::Option* opt) -> std::string {
    if (opt->count() == 0) return "";
    return compare.empty() ? std::string(HOMCOH_DEFAULT_EXPECTED) : compare;
  };

  try {
    if (*validate_cmd) return cmd_validate(file, json);
    if (*coh) return cmd_cohomology(file, degrees, lie, values_in, json, force, compare_path(cmp_opt));
    if (*mcoh) return cmd_morphism_cohomology(file, degree, json, compare_path(mcmp_opt));
    if (*deform) return cmd_deform(sub, file, to_order, json, output);
    if (*self) return cmd_selftest(json, seed);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ArityLimit& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
