#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/distance.hpp"
#include "coxkit/eulerian.hpp"

namespace coxkit {

enum class TableId { Am, I23, I24, ExceptionalEulerian };
std::string to_string(TableId id);
TableId parse_table_id(const std::string& text);  // Am | I23 | I24 | exceptional-eulerian

enum class TableMode { Formula, Exact };
std::string to_string(TableMode mode);
TableMode parse_table_mode(const std::string& text);

struct PublishedCell {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  bool italic = false;  // distance relies on the conjecture
};

struct TableCell {
  std::string family;  // "A4", "I2(3)^2"
  int m = 0;           // rank
  int r = 0;
  int mu = 0;          // dihedral power; 0 for A_m
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  DistanceStatus status = DistanceStatus::ConjectureOnly;
  std::optional<PublishedCell> published;
  // exact mode only
  bool built = false;
  std::optional<std::uint64_t> rank;  // GF(2) rank of the generator matrix
  std::string method;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> best_known;
};

struct TableDiff {
  std::string cell;
  std::string field;
  std::string published;
  std::string computed;
  bool documented = false;
  std::string note;
};

struct EulerianRow {
  std::string name;
  EulerianProfile profile;
  bool invariants_ok = false;
  std::optional<bool> counting_ok;  // exact mode, when the group is small enough to enumerate
};

struct TableReport {
  TableId id = TableId::Am;
  TableMode mode = TableMode::Formula;
  std::vector<TableCell> cells;
  std::vector<EulerianRow> eulerian;
  std::vector<TableDiff> diffs;
  std::vector<std::string> failures;
  std::size_t undocumented_diffs() const;
  bool ok() const { return failures.empty() && undocumented_diffs() == 0; }
};

struct TableOptions {
  DistanceOptions distance;
  /// Exact mode builds dihedral cells up to this length regardless of cost.
  std::uint64_t always_build_length = 216;
  /// Exceptional groups are enumerated for the counting cross-check up to this order.
  std::uint64_t counting_limit = 1'000'000;
};

/// Formula mode: parameters from the family formulas, compared against the
/// published values. Exact mode additionally builds codes, checks GF(2)
/// ranks and runs the exact distance search where the budget permits.
TableReport reproduce_table(TableId id, TableMode mode, const TableOptions& options = {});

}  // namespace coxkit
