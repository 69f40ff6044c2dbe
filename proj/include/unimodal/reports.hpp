#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unimodal/circle_counter.hpp"
#include "unimodal/exact_poly.hpp"
#include "unimodal/phi_analysis.hpp"
#include "unimodal/singularity_catalog.hpp"

namespace unimodal {

enum class OutputFormat { text, json, csv };
OutputFormat parse_format(std::string_view name);

/// Parses a spec and applies a positional weight list (one weight per summand
/// in the order written, multipliers expanded).
SingularitySpec spec_with_weights(std::string_view text, const std::vector<int>& weights,
                                  const CatalogLimits& limits = {});

// -- poly ------------------------------------------------------------------

struct PolyReport {
  std::string spec;
  Polynomial p_algebra;
  Polynomial p_lie;
};

PolyReport run_poly(const SingularitySpec& spec);
std::string render(const PolyReport& report, OutputFormat format);

// -- check -----------------------------------------------------------------

struct CheckOptions {
  bool with_phi = false;
  CrossCheckOptions cross;
};

struct CheckReport {
  std::string spec;
  Polynomial p_algebra;
  Polynomial p_lie;
  bool palindromic = false;
  /// Exact census; absent when p_lie is zero or not self-reciprocal.
  std::optional<CircleReport> circle;
  /// Certified numeric census (always the cross-check's census when an exact
  /// one exists; the only census for non-palindromic inputs).
  std::optional<NumericCensus> numeric;
  bool numeric_only = false;
  std::optional<bool> cross_check;
  std::optional<PhiReport> phi;
  TheoremScope theorem_scope = TheoremScope::out_of_scope;
  /// The off-circle count contradicts the expectation for the scope.
  bool finding = false;
  long long elapsed_ms = 0;
};

CheckReport run_check(const SingularitySpec& spec, const CheckOptions& options = {});

/// 0 when consistent, 3 on a FINDING, 4 when exact and numeric censuses disagree.
int exit_code(const CheckReport& report);

std::string render(const CheckReport& report, OutputFormat format, bool include_timing = false);

// -- table -----------------------------------------------------------------

enum class TableFamily { A_k_E7, D_2k_E7, D_2k1_E7 };
std::string to_string(TableFamily family);

struct TableRow {
  int k = 0;
  TableFamily family = TableFamily::A_k_E7;
  int off_count = 0;
  /// Cell not filled in the reference table.
  bool extrapolated = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableOptions {
  int k_cap = 64;
  unsigned threads = 0;  // 0: hardware concurrency
  std::function<void(int k)> on_row_done;
};

/// The singularity a table cell refers to, e.g. (8, D_2k1_E7) -> D17+E7.
SingularitySpec table_spec(int k, TableFamily family);

/// Rows ordered by k, then family. Throws std::invalid_argument on a bad range.
std::vector<TableRow> run_table(int k_min, int k_max, const TableOptions& options = {});
std::string render(const std::vector<TableRow>& rows, OutputFormat format);

// -- phi -------------------------------------------------------------------

struct PhiCommandReport {
  std::string spec;
  PhiReport phi;
};

std::string render(const PhiCommandReport& report, OutputFormat format);

// JSON building blocks, exposed for tests.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const CircleReport& r);
nlohmann::json to_json(const NumericCensus& r);
nlohmann::json to_json(const PhiReport& r);
nlohmann::json to_json(const CheckReport& r, bool include_timing = false);
nlohmann::json to_json(const TableRow& r);

}  // namespace unimodal
