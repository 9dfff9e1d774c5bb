#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bunred/reduction.hpp"

namespace bunred {

/// One line per node, indented by depth, then the determinant ledger and the
/// verdict.
std::string format_trace_text(const ReductionTrace& trace, const VerificationReport& report);

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const noexcept { return lo > hi; }
};

/// Parses "a..b" or a single integer "a".
IntRange parse_range(const std::string& text);

struct SweepSpec {
  IntRange genus;
  IntRange rank;
  IntRange degree;
  bool verify = true;
  bool emit_traces = false;
};

struct SweepRow {
  std::int64_t genus = 0;
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  std::int64_t h = 0;
  std::int64_t n = 0;  ///< total affine dimension
  std::int64_t depth = 0;
  std::int64_t nodes = 0;
  bool valid = false;
  std::string failure;  ///< first failing check, empty when valid
};

struct SweepResult {
  std::vector<SweepRow> rows;           ///< sorted by (genus, rank, degree)
  std::vector<ReductionTrace> traces;   ///< filled when spec.emit_traces
  bool all_valid() const;
};

/// Throws InvalidArgument for genus values below 2 or ranks below 1 in a
/// nonempty range. Empty ranges give an empty result.
SweepResult run_sweep(const SweepSpec& spec);

std::string format_sweep_table(const SweepResult& result);

}  // namespace bunred
