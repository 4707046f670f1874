#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "postlie/error.hpp"
#include "postlie/matrix.hpp"

namespace postlie {

/// One failed identity instance. Indices are 0-based basis indices.
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  friend bool operator<(const Violation& a, const Violation& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.indices < b.indices;
  }
};

enum class Verbosity { quiet, normal, full };

struct CheckReport {
  static constexpr std::size_t max_violations = 32;

  std::string subject;
  bool passed = true;
  /// Smallest violations first, at most max_violations.
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  /// Every identity id with at least one violation, sorted, including those
  /// whose violations were dropped by the cap.
  std::vector<std::string> failed_ids;

  /// Same as failed_ids.
  std::vector<std::string> failed_identities() const;
  bool failed(const std::string& identity) const;

  std::string render(Verbosity v = Verbosity::normal,
                     const std::vector<std::string>& basis = {}) const;
};

/// Accumulates identity instances into a deterministic report.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string subject) : subject_(std::move(subject)) {}

  /// Records a violation when lhs != rhs.
  void expect_equal(const std::string& identity, std::vector<std::size_t> indices, const Vector& lhs,
                    const Vector& rhs);
  void expect_equal(const std::string& identity, std::vector<std::size_t> indices, const Matrix& lhs,
                    const Matrix& rhs);
  void expect_zero(const std::string& identity, std::vector<std::size_t> indices, const Vector& v);
  void expect_zero(const std::string& identity, std::vector<std::size_t> indices, const Matrix& m);
  /// Scalar-valued condition with no natural witness vector.
  void expect_true(const std::string& identity, bool ok, std::vector<std::size_t> indices = {});

  /// Folds another report in, prefixing its identity ids.
  void merge(const CheckReport& other, const std::string& prefix = "");

  CheckReport finish() const;

 private:
  std::string subject_;
  std::vector<Violation> all_;
  // Counted in a merged report but beyond its cap.
  std::size_t dropped_ = 0;
  std::vector<std::string> merged_ids_;
};

/// Thrown when a construction or checker input fails its precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(CheckReport report)
      : Error("precondition failed: " + report.subject), report_(std::move(report)) {}
  PreconditionError(const std::string& message, CheckReport report)
      : Error(message), report_(std::move(report)) {}

  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// Throws PreconditionError unless the report passed.
void require(const CheckReport& report);

template <class F>
void for_pairs(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j);
}

template <class F>
void for_triples(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) f(i, j, k);
}

}  // namespace postlie
