#pragma once

#include <string>
#include <string_view>

#include "bunred/reduction.hpp"

namespace bunred {

inline constexpr int kTraceFormatVersion = 1;

/// Trace document (JSON, version 1). Integers are plain JSON numbers and must
/// fit in a signed 64-bit integer.
///
///   { "version": 1, "genus", "input": {"rank", "degree"}, "h",
///     "total_affine_dim", "composite_det": {"sign", "shift"}, "root": node }
///   node = {"kind": "base", "rank", "degree", "twist_degree"}
///        | {"kind": "composite", "rank", "degree", "rF", "dF", "r1", "d1", "h1",
///           "rkV", "rho_affine", "hecke_affine", "det_maps": [{"sign", "shift"}, ...],
///           "mu1": node, "mu2": node}
///
/// Keys are written in the order above, two-space indented, with a trailing
/// newline, so serialize(parse(serialize(t))) is byte-identical.
std::string serialize_trace(const ReductionTrace& trace);

/// Throws ParseError naming the offending JSON pointer (or byte offset for
/// syntax errors). Parsing is purely structural; a tampered but well-formed
/// certificate parses and is rejected later by verify_trace.
ReductionTrace parse_trace(std::string_view document);

}  // namespace bunred
