#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "usl2/nilcone.hpp"
#include "usl2/repdec.hpp"

#include "json.hpp"

namespace usl2 {

using Json = nlohmann::ordered_json;

/// Bad user input: unsupported prime, unknown block, malformed element.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct JobSpec {
  std::uint32_t p = 5;
  Character chi = Character::zero();
  std::optional<std::uint32_t> omega;
  std::optional<std::string> alpha;
  std::vector<FiltrationKind> kinds;
  /// Test hook: perturb the first idempotent before any check runs.
  bool corrupt_idempotent = false;
};

struct Check {
  std::string name;
  std::string block;   ///< empty for checks about the whole algebra
  Json expected;
  Json computed;
  /// Where the expected value comes from: "reference_table", "closed_form",
  /// "identity" or "oracle".
  std::string basis;
  bool pass = false;
};

struct BlockInfo {
  std::string label;
  std::string alpha;
  std::optional<std::uint32_t> omega;
  std::string idempotent;   ///< polynomial in c
  std::size_t dim = 0;
  std::size_t coinvariants_dim = 0;
};

struct JobResult {
  std::uint32_t p = 0;
  std::string chi;
  std::string field;
  std::vector<BlockInfo> blocks;
  std::vector<FiltrationTable> tables;
  std::vector<std::string> table_labels;  ///< display label per table
  std::vector<Check> checks;
  std::optional<double> wall_ms;
  bool ok() const;
};

struct Report {
  std::string command;
  Json request;
  std::vector<JobResult> results;
  bool ok() const;
  std::size_t checks() const;
  std::size_t failures() const;
};

/// Largest p for which regular characters are supported (F_{p^p} tables).
inline constexpr std::uint32_t kMaxRegularPrime = 7;
/// Largest p for the Gram form, duality, nilcone comparison and adjoint checks.
inline constexpr std::uint32_t kMaxHeavyPrime = 7;

/// Validates p, chi and the block selector; throws UsageError.
void validate(const JobSpec& spec);

JobResult run_blocks(const JobSpec& spec);
JobResult run_filtration(const JobSpec& spec);
JobResult run_verify(const JobSpec& spec);

Json to_json(const Report& report, bool with_timings);
std::string render_json(const Report& report, bool with_timings);
std::string render_csv(const Report& report, bool with_timings);
std::string render_markdown(const Report& report, bool with_timings);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

/// "zero", "e" or "regular" plus a, into a Character; throws UsageError.
Character parse_character(const std::string& tag, std::optional<std::uint32_t> a);

}  // namespace usl2
