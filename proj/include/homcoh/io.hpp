#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "homcoh/algebra.hpp"
#include "homcoh/cochain.hpp"
#include "homcoh/cohomology.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/rep.hpp"

namespace homcoh {

using Json = nlohmann::ordered_json;

// Parse errors carry "origin:line:column".
Json parse_json_text(const std::string& text, const std::string& origin = "<input>");
Json read_json_file(const std::filesystem::path& path);
// Indented, but short arrays and objects stay on one line.
std::string dump_json(const Json& j);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what);
Json matrix_to_json(const Matrix& m);

HomAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const HomAlgebra& a);
HomAlgebra load_algebra(const std::filesystem::path& path);

// "source"/"target" are inline objects, paths relative to base_dir, or names resolved as <name>.json.
HomMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir = ".");
Json morphism_to_json(const HomMorphism& m);
HomMorphism load_morphism(const std::filesystem::path& path);

// Files holding a "matrix" key are morphisms.
bool is_morphism_json(const Json& j);

// mul entries as in the algebra format; lie kind completes missing transposed pairs.
MultilinearMap products_from_json(const Json& j, const HomAlgebra& a);
Json products_to_json(const MultilinearMap& mul, const HomAlgebra& a);

struct DeformationFile {
  FormalDeformation algebra;
  std::optional<MorphismDeformation> morphism;
};
DeformationFile deformation_from_json(const Json& j, const std::filesystem::path& base_dir = ".");
Json deformation_to_json(const FormalDeformation& d);
Json deformation_to_json(const MorphismDeformation& md);
DeformationFile load_deformation(const std::filesystem::path& path);

// {arity, source, target, entries: [{args, value: {name: q}}]}, zero entries omitted.
// Without target names the keys are x1..xn.
Json cochain_to_json(const MultilinearMap& f, const std::vector<std::string>& target_basis = {});
MultilinearMap cochain_from_json(const Json& j, const std::vector<std::string>& target_basis = {});
Json morphism_cochain_to_json(const MorphismCochain& c, const std::vector<std::string>& source_basis = {},
                              const std::vector<std::string>& target_basis = {});
MorphismCochain morphism_cochain_from_json(const Json& j, const std::vector<std::string>& source_basis = {},
                                           const std::vector<std::string>& target_basis = {});

Json validity_to_json(const ValidityReport& r, const HomAlgebra& a);
Json summary_to_json(const ComplexSummary& s);
Json morphism_cohomology_to_json(const MorphismCohomologyReport& r);
Json deformation_report_to_json(const DeformationReport& r);

std::string witness_label(const HomAlgebra& a, const std::vector<std::size_t>& w);
std::string vector_label(const Vector& v, const std::vector<std::string>& basis);

}  // namespace homcoh
