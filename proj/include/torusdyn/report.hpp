#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "torusdyn/forge.hpp"

namespace torusdyn {

using Json = nlohmann::json;

const char* tool_version();

/// Process exit codes of every command.
enum class ExitCode : int { ok = 0, theorem_violation = 2, invalid_input = 3 };

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file: {"kind": "torus_group", "complex_dim": "2", "generators": [{"name": ..., "matrix":
// [[["re", "im"], ...], ...]}]} or {"kind": "number_field", "min_poly": ["1", "0", "-2"],
// "coeff_bound": "4"} with the polynomial leading coefficient first. Integers may be given as
// JSON numbers or decimal strings; output always uses strings.
struct InputSpec {
  std::string kind;
  GroupSpec group;
  IntPoly min_poly;  // number_field only
  long coeff_bound = 4;
};

/// Schema validation; throws InvalidInput with the offending path.
InputSpec parse_spec_file(const Json& j);
/// torus_group file for a group.
Json spec_to_json(const GroupSpec& g);

Json to_json(const Int& x);
Json to_json(const RatInterval& x);
/// {"poly", "minimal", "interval", "approximation"}: a squarefree integer polynomial (leading
/// coefficient first) with exactly one root in the rational interval, refined to width below
/// 2^-bits. "minimal" is true when the polynomial is certified irreducible. The approximation
/// carries an error bound, or is the exact value for rationals.
Json to_json(const AlgebraicReal& x, unsigned bits);
/// Inverse of to_json; the isolation is re-checked by a Sturm count.
AlgebraicReal algebraic_from_json(const Json& j);

struct ReportOptions {
  std::uint64_t seed = 0;
  unsigned precision_bits = 40;  // intervals narrower than 2^-40 < 1e-12
};

struct CommandResult {
  ExitCode code = ExitCode::ok;
  Json report;       // deterministic for fixed inputs and options
  std::string text;  // human-readable summary
};

/// Commuting check, degree profiles, characters, pi rank, structure assertions, decomposition.
CommandResult cmd_analyze(const Json& spec_file, const ReportOptions& opt);
CommandResult analyze_group(const GroupSpec& g, const ReportOptions& opt);

/// Definite check at omega = identity plus positive-definite and nef semipositivity sweeps;
/// k outside {2, 3, 4} is refused.
CommandResult cmd_hodge_check(unsigned k, std::size_t samples, std::uint64_t seed);

/// poly_leading_first as "c_d,...,c_0". The report holds the forged spec file and its analysis.
CommandResult cmd_forge(const std::string& poly_leading_first, long bound, const ReportOptions& opt);

CommandResult cmd_enumerate(unsigned k, long bound);

}  // namespace torusdyn
