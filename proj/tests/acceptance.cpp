// Acceptance run: one PASS/FAIL line per criterion, FINDING lines for published values
// that the computation does not reproduce.
//
//   homcoh_acceptance FIXTURE_DIR HOMCOH_EXE [--allow-fail N]...

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homcoh/cohomology.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/io.hpp"
#include "homcoh/selftest.hpp"
#include "oracles.hpp"

using namespace homcoh;
namespace fs = std::filesystem;

namespace {

fs::path fixtures;
std::string exe;

struct Outcome {
  bool pass = true;
  std::string summary;
};

void finding(int c, const std::string& text) { std::cout << "FINDING c" << c << " " << text << "\n"; }
void detail(const std::string& text) { std::cout << "    " << text << "\n"; }

std::string map_lines(const MultilinearMap& f, const std::vector<std::string>& src, const std::vector<std::string>& tgt) {
  std::string out;
  const bool alt = f.arity() > 1 && is_alternating(f);
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    const Vector v = f.value(t);
    if (oracle::zero(v)) continue;
    const auto args = tuple_args(t, f.arity(), f.source_dim());
    // alternating maps: print sorted tuples only
    bool sorted = true;
    for (std::size_t i = 1; alt && i < args.size(); ++i) sorted = sorted && args[i - 1] < args[i];
    if (!sorted) continue;
    std::string a;
    for (std::size_t i = 0; i < args.size(); ++i) a += (i ? "," : "") + src[args[i]];
    out += (out.empty() ? "" : "; ") + std::string("(") + a + ") -> " + vector_label(v, tgt);
  }
  return out.empty() ? "0" : out;
}

DegreeRecord h2(const HomAlgebra& a) {
  const auto c = a.kind == Kind::lie ? lie_self_complex(a) : hom_self_complex(a);
  return compute_cohomology(*c, 2, 2).at(2);
}

std::string dims(const DegreeRecord& d) {
  std::ostringstream s;
  s << "C=" << d.dim_C << " Z=" << d.dim_Z << " B=" << d.dim_B << " H=" << d.dim_H;
  return s.str();
}

// Twist constraint dropped on both sides: delta of all 1-maps and kernel on all 2-maps.
std::pair<std::size_t, std::size_t> unconstrained_counts(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  auto dmat = [&](std::size_t k) {
    const std::size_t in = int_pow(n, k) * n, out = int_pow(n, k + 1) * n;
    Matrix m(out, in);
    for (std::size_t c = 0; c < in; ++c) {
      MultilinearMap f(k, n, n);
      f.coeffs()[c] = 1;
      const MultilinearMap g = delta_hom_self(a, f);
      for (std::size_t r = 0; r < out; ++r) m(r, c) = g.coeffs()[r];
    }
    return m;
  };
  const Matrix d2 = dmat(2);
  return {d2.cols() - rank(d2), rank(dmat(1))};
}

Outcome criterion1() {
  Outcome o;
  const HomAlgebra a = load_algebra(fixtures / "A3.json");
  const HomAlgebra a1 = load_algebra(fixtures / "A3_b1.json");
  const HomAlgebra b = load_algebra(fixtures / "B2.json");
  const HomMorphism phi = load_morphism(fixtures / "PHI.json");
  const bool valid = validate(a).is_valid && validate(a1).is_valid && validate(b).is_valid &&
                     check_morphism(a, b, phi.matrix).is_valid && check_morphism(a1, b, phi.matrix).is_valid;
  const std::size_t ha = h2(a).dim_H, ha1 = h2(a1).dim_H;
  const DegreeRecord db = h2(b);
  o.pass = valid && ha == 0 && ha1 == 0 && db.dim_Z == 3 && db.dim_B == 2 && db.dim_H == 1;
  if (db.dim_Z != 3) finding(1, "B2 Z^2: computed " + std::to_string(db.dim_Z) + ", expected 3");
  if (db.dim_B != 2) finding(1, "B2 B^2: computed " + std::to_string(db.dim_B) + ", expected 2");
  if (db.dim_H != 1) finding(1, "B2 H^2: computed " + std::to_string(db.dim_H) + ", expected 1");
  if (db.dim_Z != 3) {
    const auto [z, bb] = unconstrained_counts(b);
    detail("B2 with the twist constraint: " + dims(db));
    detail("twist constraint forces psi(f1,f1) = c f1 + d f2 with z = c + d on the other pairs");
    detail("without the constraint: Z^2 = " + std::to_string(z) + ", image of all 1-maps = " + std::to_string(bb) +
           " (not inside Z^2, so no complex)");
    for (std::size_t i = 0; i < db.cocycle_basis.size(); ++i)
      detail("Z^2 basis " + std::to_string(i + 1) + ": " + map_lines(db.cocycle_basis[i].front(), b.basis, b.basis));
  }
  o.summary = std::string("validate A3, A3_1_1, B2, PHI: ") + (valid ? "ok" : "FAILED") + "; H^2(A3) = " +
              std::to_string(ha) + ", H^2(A3_1_1) = " + std::to_string(ha1) + "; B2 " + dims(db);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const HomAlgebra l1 = load_algebra(fixtures / "L4A.json");
  // c + a d with all parameters 1
  const Rational cad = Rational(1) + Rational(1) * Rational(1);
  const DegreeRecord d1 = h2(l1);
  o.pass = cad != 0 && validate(l1).is_valid && d1.dim_H == 0;
  std::string tail;
  for (auto [file, expected] : std::vector<std::pair<std::string, std::size_t>>{{"L4B_e1.json", 7}, {"L4B_em1.json", 6}}) {
    const HomAlgebra l = load_algebra(fixtures / file);
    const DegreeRecord d = h2(l);
    o.pass = o.pass && validate(l).is_valid;
    tail += "; " + l.name + " " + dims(d);
    if (d.dim_H != expected) {
      finding(2, l.name + " H^2: computed " + std::to_string(d.dim_H) + ", expected " + std::to_string(expected));
      for (std::size_t i = 0; i < d.cocycle_basis.size(); ++i)
        detail("Z^2 basis " + std::to_string(i + 1) + ": " + map_lines(d.cocycle_basis[i].front(), l.basis, l.basis));
      for (std::size_t i = 0; i < d.representatives.size(); ++i)
        detail("H^2 rep " + std::to_string(i + 1) + ": " + map_lines(d.representatives[i].front(), l.basis, l.basis));
    } else {
      std::cout << "PASS c2 " << l.name << " H^2 = " << expected << "\n";
    }
  }
  o.summary = "H^2(L4A) = " + std::to_string(d1.dim_H) + tail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Row {
    std::string file;
    std::size_t expected;
  };
  const std::vector<Row> rows = {{"G1_0_1", 4},  {"G1_1_2", 3},   {"G1_1_1", 7},   {"G1_1_0", 4},   {"G1_-1_2", 1},
                                 {"G1_-1_1", 4}, {"G1_-1_0", 4},  {"G1_-1_-1", 3}, {"G1_2_1_2", 1}, {"G1_2_1", 3},
                                 {"G1_2_0", 4},  {"G1_2_-1", 1}, {"G1_2_3", 0}};
  std::size_t matched = 0;
  for (const auto& r : rows) {
    const HomAlgebra g = load_algebra(fixtures / (r.file + ".json"));
    if (!validate(g).is_valid) {
      o.pass = false;
      continue;
    }
    const DegreeRecord d = h2(g);
    if (d.dim_H == r.expected) {
      ++matched;
      std::cout << "PASS c3 " << g.name << " H^2 = " << d.dim_H << "\n";
    } else {
      finding(3, g.name + " H^2: computed " + std::to_string(d.dim_H) + " (" + dims(d) + "), expected " +
                     std::to_string(r.expected));
    }
  }
  const HomAlgebra g2 = load_algebra(fixtures / "G2.json");
  const ValidityReport v = validate(g2);
  const bool defect_ok = !v.is_valid && v.failure == "hom-jacobi" && v.witness == std::vector<std::size_t>{0, 1, 2} &&
                         v.defect == Vector{1, -4, -1};
  if (!v.is_valid) {
    finding(3, "G2 fails " + v.failure + " at " + witness_label(g2, v.witness) + ", defect " +
                   vector_label(v.defect, g2.basis));
  }
  o.pass = o.pass && defect_ok;
  o.summary = std::to_string(matched) + " of " + std::to_string(rows.size()) + " table rows match; G2 defect " +
              (defect_ok ? "f1 - 4*f2 - f3 as expected" : "NOT as expected");
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::string summary;
  for (auto [file, expected] : std::vector<std::pair<std::string, std::size_t>>{{"PHI12_2.json", 2}, {"PHI12_1.json", 6}}) {
    const HomMorphism phi = load_morphism(fixtures / file);
    const auto r = morphism_cohomology(phi, 1, Flavor::lie);
    const DegreeRecord& d = r.values.at(1);
    const std::string name = phi.source.name + "->" + phi.target.name;
    summary += (summary.empty() ? "" : "; ") + name + " values H^1 = " + std::to_string(d.dim_H) +
               " (coupled H^1 = " + std::to_string(r.coupled.at(1).dim_H) + ")";
    if (d.dim_H == expected) {
      std::cout << "PASS c4 " << name << " H^1 with values in the target = " << expected << "\n";
    } else {
      finding(4, name + " H^1 with values in the target: computed " + std::to_string(d.dim_H) + ", expected " +
                     std::to_string(expected));
    }
    for (std::size_t i = 0; i < d.representatives.size(); ++i)
      detail(name + " rep " + std::to_string(i + 1) + ": " +
             map_lines(d.representatives[i].front(), phi.source.basis, phi.target.basis));
    for (const auto& w : r.values.warnings) detail(name + " warning: " + w);
  }
  o.summary = summary;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const DeformationFile f = load_deformation(fixtures / "MDEF2.json");
  const DeformationReport r = check_morphism_deformation(*f.morphism);
  bool src = true, mor = true, tw = true, tgt = true;
  for (const auto& rec : r.orders) {
    src = src && rec.algebra_a_ok;
    mor = mor && rec.morphism_eq_ok;
    tw = tw && rec.twist_eq_ok;
    tgt = tgt && rec.algebra_b_ok;
  }
  o.pass = src && mor && tw && !r.orders.empty();
  if (!tgt) finding(5, "target deformation fails at order 0 (base G2 fails hom-jacobi), as expected");
  o.summary = "orders 0.." + std::to_string(r.orders.size() - 1) + ": source " + (src ? "ok" : "FAIL") +
              ", morphism " + (mor ? "ok" : "FAIL") + ", twist " + (tw ? "ok" : "FAIL") + ", target " +
              (tgt ? "ok" : "FAIL");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto results = run_selftest();
  for (const auto& s : results) {
    o.pass = o.pass && s.passed();
    o.summary += (o.summary.empty() ? "" : ", ") + s.name + " " + (s.passed() ? "ok" : "FAIL") + " (" +
                 std::to_string(s.checked) + ")";
    for (const auto& f : s.failures) detail(s.name + ": " + f);
  }
  return o;
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome criterion7() {
  Outcome o;
  const std::string cmd = "\"" + exe + "\" selftest --json";
  const std::string first = run(cmd), second = run(cmd);
  o.pass = !first.empty() && first == second;
  o.summary = std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "DIFFERENT");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: homcoh_acceptance FIXTURE_DIR HOMCOH_EXE [--allow-fail N]...\n";
    return 2;
  }
  fixtures = argv[1];
  exe = argv[2];
  std::set<int> allowed;
  for (int i = 3; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--allow-fail") allowed.insert(std::stoi(argv[i + 1]));

  const std::vector<std::pair<double, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {5, criterion2}, {10, criterion3}, {5, criterion4}, {1, criterion5}, {60, criterion6}, {60, criterion7}};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int c = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < criteria[i].first;
    const bool pass = o.pass && in_time;
    char t[32];
    std::snprintf(t, sizeof t, "%.2f", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c << " (" << t << " s, limit " << criteria[i].first
              << " s): " << o.summary << (in_time ? "" : " [over time]") << "\n";
    if (!pass && !allowed.count(c)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
