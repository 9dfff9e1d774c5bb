#include "bunred/core_types.hpp"

#include <limits>
#include <ostream>

#include "bunred/checked.hpp"
#include "bunred/degree_map.hpp"

namespace bunred {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BaseCaseReached: return "BaseCaseReached";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotCovered: return "NotCovered";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::InvalidSplitting: return "InvalidSplitting";
    case ErrorKind::TheoremContradicted: return "TheoremContradicted";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

SheafType::SheafType(std::int64_t rank, std::int64_t degree) : rank_(rank), degree_(degree) {
  if (rank < 0)
    throw Error(ErrorKind::InvalidType, "negative rank in type " + to_string());
  if (rank == 0 && degree < 0)
    throw Error(ErrorKind::InvalidType, "torsion type with negative degree " + to_string());
}

std::string SheafType::to_string() const {
  return "(" + std::to_string(rank_) + "," + std::to_string(degree_) + ")";
}

std::ostream& operator<<(std::ostream& os, const SheafType& t) { return os << t.to_string(); }

GenusContext::GenusContext(std::int64_t genus) : genus_(genus) {
  if (genus < 0 || genus > kMaxGenus)
    throw Error(ErrorKind::InvalidArgument,
                "genus must lie in [0, " + std::to_string(kMaxGenus) + "], got " + std::to_string(genus));
}

void GenusContext::require_reduction_genus() const {
  if (genus_ < 2)
    throw Error(ErrorKind::DomainError, "genus must be ≥ 2 (got " + std::to_string(genus_) + ")");
}

void require_input_bounds(const SheafType& t) {
  if (t.rank() > kMaxRank)
    throw Error(ErrorKind::InvalidArgument, "rank exceeds " + std::to_string(kMaxRank));
  if (t.degree() > kMaxAbsDegree || t.degree() < -kMaxAbsDegree)
    throw Error(ErrorKind::InvalidArgument, "|degree| exceeds " + std::to_string(kMaxAbsDegree));
}

SheafType add_types(const SheafType& a, const SheafType& b) {
  return SheafType(checked::add(a.rank(), b.rank()), checked::add(a.degree(), b.degree()));
}

SheafType scale_type(std::int64_t n, const SheafType& t) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be >= 0");
  return SheafType(checked::mul(n, t.rank()), checked::mul(n, t.degree()));
}

std::int64_t hcf(std::int64_t a, std::int64_t b) {
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (a == kMin || b == kMin) throw Error(ErrorKind::Overflow, "hcf argument out of range");
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t hcf_of_type(const SheafType& t) {
  if (t.rank() < 1) throw Error(ErrorKind::InvalidType, "hcf needs rank >= 1, got " + t.to_string());
  return hcf(t.rank(), t.degree());
}

std::strong_ordering slope_cmp(const SheafType& a, const SheafType& b) {
  if (a.rank() < 1 || b.rank() < 1)
    throw Error(ErrorKind::InvalidType, "slope needs positive rank: " + a.to_string() + " vs " + b.to_string());
  return checked::mul(a.degree(), b.rank()) <=> checked::mul(b.degree(), a.rank());
}

// -- DegreeAffineMap ---------------------------------------------------------

std::int64_t DegreeAffineMap::apply(std::int64_t degree) const {
  return checked::add(checked::mul(sign, degree), shift);
}

DegreeAffineMap DegreeAffineMap::inverse() const {
  // deg = s * x + c  =>  x = s * deg - s * c  (s = +-1)
  return {sign, checked::neg(checked::mul(sign, shift))};
}

std::string DegreeAffineMap::to_string() const {
  std::string out = sign < 0 ? "-deg" : "deg";
  if (shift > 0) out += " + " + std::to_string(shift);
  if (shift < 0) out += " - " + std::to_string(-shift);
  return out;
}

DegreeAffineMap then(const DegreeAffineMap& first, const DegreeAffineMap& second) {
  return {checked::mul(second.sign, first.sign),
          checked::add(checked::mul(second.sign, first.shift), second.shift)};
}

DegreeAffineMap compose_det(std::span<const DegreeAffineMap> maps) {
  DegreeAffineMap acc = DegreeAffineMap::identity();
  for (const auto& m : maps) acc = then(acc, m);
  return acc;
}

}  // namespace bunred
