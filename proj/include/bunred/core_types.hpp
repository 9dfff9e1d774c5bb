#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "bunred/error.hpp"

namespace bunred {

/// Input bounds under which every intermediate product fits in 64 bits.
/// Values derived inside a reduction may leave these bounds; they are then
/// protected by overflow-checked arithmetic instead.
inline constexpr std::int64_t kMaxGenus = 100;
inline constexpr std::int64_t kMaxRank = 10'000;
inline constexpr std::int64_t kMaxAbsDegree = 1'000'000;

/// Numerical type (rank, degree) of a coherent sheaf on the curve.
///
/// Rank-zero types are torsion and must have nonnegative degree; (0, 0) is the
/// additive identity.
class SheafType {
 public:
  constexpr SheafType() = default;
  SheafType(std::int64_t rank, std::int64_t degree);

  constexpr std::int64_t rank() const noexcept { return rank_; }
  constexpr std::int64_t degree() const noexcept { return degree_; }
  constexpr bool is_zero() const noexcept { return rank_ == 0 && degree_ == 0; }

  friend constexpr bool operator==(const SheafType&, const SheafType&) = default;

  std::string to_string() const;

 private:
  std::int64_t rank_ = 0;
  std::int64_t degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SheafType& t);

/// Genus of the fixed curve. Euler-form arithmetic accepts any genus in
/// [0, kMaxGenus]; the reduction and generic-Hom results additionally need
/// genus >= 2, enforced with require_reduction_genus().
class GenusContext {
 public:
  explicit GenusContext(std::int64_t genus);

  constexpr std::int64_t genus() const noexcept { return genus_; }
  constexpr std::int64_t one_minus_g() const noexcept { return 1 - genus_; }

  void require_reduction_genus() const;

 private:
  std::int64_t genus_;
};

/// Throws InvalidArgument unless rank and |degree| lie inside the
/// documented 64-bit-safe input box.
void require_input_bounds(const SheafType& t);

SheafType add_types(const SheafType& a, const SheafType& b);
SheafType scale_type(std::int64_t n, const SheafType& t);

/// Positive highest common factor of rank and |degree|; hcf(r, 0) = r.
std::int64_t hcf_of_type(const SheafType& t);

/// Positive gcd of two integers, gcd(0, 0) = 0. Kept separate from std::gcd so
/// that INT64_MIN is rejected instead of being undefined.
std::int64_t hcf(std::int64_t a, std::int64_t b);

/// Exact slope comparison d_a/r_a vs d_b/r_b by cross-multiplication.
std::strong_ordering slope_cmp(const SheafType& a, const SheafType& b);

}  // namespace bunred
