#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bunred/core_types.hpp"
#include "bunred/degree_map.hpp"
#include "bunred/diophantine.hpp"

namespace bunred {

/// Owning pointer with value semantics (deep copy, deep equality) for the
/// recursive trace tree.
template <typename T>
class Box {
 public:
  Box() = default;
  explicit Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  explicit operator bool() const noexcept { return static_cast<bool>(ptr_); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return !a.ptr_ && !b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

struct StepNode;

/// r = h: tensoring with a line bundle of degree twist_degree = -d / r lands
/// in degree 0.
struct BaseStep {
  SheafType type;
  std::int64_t twist_degree = 0;

  friend bool operator==(const BaseStep&, const BaseStep&) = default;
};

/// One inductive step Bun(r,d) --> Bun(h,0), factored as
/// mu2 o theta2 o (pullback of mu1) o rho.
///
/// det_maps holds the determinant ledger in application order:
///   [0] lambda_F:  deg -> h dF - deg
///   [1] composite of mu1
///   [2] Hecke shift deg -> deg - h
///   [3] composite of mu2
struct CompositeStep {
  SheafType type;
  LemmaSolution sol;
  std::int64_t rkV = 0;           ///< rank of Hom(E_1^univ, F) = chi(t1, t_F)
  std::int64_t rho_affine = 0;    ///< h (rkV - h1)
  std::int64_t hecke_affine = 0;  ///< h (h1 - h)
  std::vector<DegreeAffineMap> det_maps;
  Box<StepNode> mu1;  ///< reduces (r1, d1) to (h1, 0)
  Box<StepNode> mu2;  ///< reduces (h1, -h) to (h, 0)

  friend bool operator==(const CompositeStep&, const CompositeStep&) = default;
};

struct StepNode {
  std::variant<BaseStep, CompositeStep> step;

  bool is_base() const noexcept { return std::holds_alternative<BaseStep>(step); }
  const SheafType& type() const;

  friend bool operator==(const StepNode&, const StepNode&) = default;
};

struct ReductionTrace {
  std::int64_t genus = 0;
  SheafType input;
  std::int64_t h = 0;
  StepNode root;
  std::int64_t total_affine_dim = 0;
  DegreeAffineMap composite_det;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Builds the full reduction tree for Bun(t) --> Bun(h, 0).
ReductionTrace reduce(const GenusContext& ctx, const SheafType& t);

// Aggregates read off the stored fields (no recomputation).
std::int64_t node_affine_total(const StepNode& node);
DegreeAffineMap node_det_composite(const StepNode& node);
std::int64_t node_depth(const StepNode& node);
std::int64_t node_count(const StepNode& node);

struct CheckResult {
  std::string path;  ///< "root", "root.mu1", "root.mu2.mu1", or "trace"
  std::string name;
  bool passed = false;
  std::string detail;
};

class VerificationReport {
 public:
  void record(std::string path, std::string name, bool passed, std::string detail = {});

  bool ok() const noexcept;
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  std::vector<CheckResult> failures() const;
  bool failed(std::string_view name) const;

  /// Throws CertificateInvalid naming the first failing node path and check.
  void throw_if_invalid() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Re-derives every node of a trace from first principles and reports one
/// entry per check. Never throws on a malformed certificate; inspect ok().
VerificationReport verify_trace(const ReductionTrace& trace);

}  // namespace bunred
