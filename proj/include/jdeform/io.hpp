#pragma once
// JSON problem files and canonical serialization. Every writer produces
// objects with sorted keys and lowest-terms fraction strings, so dumps are
// byte-stable.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jdeform/deformation.hpp"
#include "json.hpp"

namespace jdeform::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Scalar from a JSON string. Over Q the text must match
/// -?[0-9]+(/[1-9][0-9]*)?; over Q(i) an imaginary part "+r/s*i" may follow.
/// Errors name `where`.
Scalar parse_scalar(const json& j, Field field, const std::string& where);

DGLA parse_dgla(const json& j, Field field, const std::string& where = "dgla");
LieAlgebra parse_lie(const json& j, Field field, const std::string& where = "lie");
Nerve parse_nerve(const json& j, const std::string& where = "nerve");
/// Explicit table, or {"truncated_polynomial": ...} / {"monomial_quotient": ...}.
ArtinAlgebra parse_artin(const json& j, Field field, const std::string& where = "artin");
/// Basis-name -> polynomial map over m; names must resolve in `basis`.
Tensor parse_tensor(const json& j, const std::vector<std::string>& basis, const ArtinAlgebra& R, Field field,
                    const std::string& where);
SparseVec parse_polynomial(const json& j, const ArtinAlgebra& R, Field field, const std::string& where);

struct CechSpec {
  Nerve nerve;
  LocalSystem system;
  bool truncate = false;
};

/// Coefficients of a morphic candidate, keyed by names of ℍ⁰(J_n); the
/// names resolve only once V is computed.
struct MorphicPayload {
  ArtinAlgebra R;
  std::map<std::string, SparseVec> mu;
};

struct ProblemFile {
  int version = kFormatVersion;
  Field field = Field::Q;
  std::optional<std::size_t> order;

  std::optional<DGLA> dgla;                    // "dgla", or the Čech DGLA
  std::optional<CechSpec> cech_spec;
  std::shared_ptr<const CechModel> cech;       // built from cech_spec
  std::optional<ArtinAlgebra> artin;

  std::optional<MCElement> mc;                 // "mc" or "cochain"
  std::vector<Tensor> gauge;                   // one g ⊗ m entry per vertex
  std::optional<ModuleAction> action;
  std::optional<MorphicPayload> morphic;
};

/// Validates the schema; throws ParseError naming the offending field.
/// `field` overrides the file's field selector. Model errors (bad nerve,
/// non-flat monodromy) surface as ModelError from the Čech builder.
ProblemFile parse_problem(const json& j, std::optional<Field> field = {});
ProblemFile parse_problem_text(const std::string& text, std::optional<Field> field = {});
ProblemFile read_problem(const std::filesystem::path& path, std::optional<Field> field = {});

// ----------------------------------------------------------------- writers

std::string to_string(const Scalar& s);
/// {"cols", "entries": [[row, col, "p/q"], ...], "rows"} in row-major order.
json matrix_json(const Matrix& m);
json report_json(const Report& r);
json dgla_json(const DGLA& L);
/// Explicit table, products listed for a <= b only.
json artin_json(const ArtinAlgebra& R);
/// {"t": "1", "t^2": "1/2"}; the zero polynomial is {}.
json polynomial_json(const ArtinAlgebra& R, const SparseVec& m_coords);
/// Nonzero entries only.
json tensor_json(const std::vector<std::string>& basis, const ArtinAlgebra& R, const Tensor& t);
json ring_hom_json(const RingHom& h);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace jdeform::io
