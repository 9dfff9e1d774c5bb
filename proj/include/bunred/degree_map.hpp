#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace bunred {

/// Affine action deg -> sign * deg + shift on determinant degrees, sign = +-1.
///
/// Composition reads left to right: then(first, second) applies `first` and
/// then `second`, i.e. (s2, c2) o (s1, c1) = (s2 s1, s2 c1 + c2).
struct DegreeAffineMap {
  std::int64_t sign = 1;
  std::int64_t shift = 0;

  static DegreeAffineMap identity() { return {}; }

  std::int64_t apply(std::int64_t degree) const;
  DegreeAffineMap inverse() const;
  bool is_valid() const noexcept { return sign == 1 || sign == -1; }

  friend bool operator==(const DegreeAffineMap&, const DegreeAffineMap&) = default;

  std::string to_string() const;
};

DegreeAffineMap then(const DegreeAffineMap& first, const DegreeAffineMap& second);

/// Left-to-right composite of a ledger of maps; empty ledger gives identity.
DegreeAffineMap compose_det(std::span<const DegreeAffineMap> maps);

}  // namespace bunred
