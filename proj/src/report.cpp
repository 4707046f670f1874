#include "postlie/report.hpp"

#include <algorithm>
#include <sstream>

namespace postlie {

std::vector<std::string> CheckReport::failed_identities() const { return failed_ids; }

bool CheckReport::failed(const std::string& identity) const {
  return std::binary_search(failed_ids.begin(), failed_ids.end(), identity);
}

std::string CheckReport::render(Verbosity verbosity, const std::vector<std::string>& basis) const {
  std::ostringstream os;
  os << (passed ? "PASS " : "FAIL ") << subject;
  if (!passed) os << " (" << total_violations << " violation" << (total_violations == 1 ? "" : "s") << ")";
  os << '\n';
  if (verbosity == Verbosity::quiet || passed) return os.str();

  auto label = [&](std::size_t i) { return i < basis.size() ? basis[i] : "#" + std::to_string(i + 1); };
  std::size_t shown = verbosity == Verbosity::full ? violations.size() : std::min<std::size_t>(violations.size(), 5);
  for (std::size_t k = 0; k < shown; ++k) {
    const auto& v = violations[k];
    os << "  " << v.identity << " at (";
    for (std::size_t t = 0; t < v.indices.size(); ++t) os << (t ? ", " : "") << label(v.indices[t]);
    os << ")";
    if (!v.lhs.empty() || !v.rhs.empty()) os << ": lhs " << to_string(v.lhs) << " rhs " << to_string(v.rhs);
    os << '\n';
  }
  if (shown < total_violations) os << "  ... " << (total_violations - shown) << " more\n";
  return os.str();
}

void ReportBuilder::expect_equal(const std::string& identity, std::vector<std::size_t> indices,
                                 const Vector& lhs, const Vector& rhs) {
  if (lhs != rhs) all_.push_back({identity, std::move(indices), lhs, rhs});
}

void ReportBuilder::expect_equal(const std::string& identity, std::vector<std::size_t> indices,
                                 const Matrix& lhs, const Matrix& rhs) {
  if (lhs != rhs) all_.push_back({identity, std::move(indices), lhs.entries(), rhs.entries()});
}

void ReportBuilder::expect_zero(const std::string& identity, std::vector<std::size_t> indices, const Vector& v) {
  if (!is_zero(v)) all_.push_back({identity, std::move(indices), v, Vector(v.size())});
}

void ReportBuilder::expect_zero(const std::string& identity, std::vector<std::size_t> indices, const Matrix& m) {
  if (!m.is_zero()) all_.push_back({identity, std::move(indices), m.entries(), Vector(m.entries().size())});
}

void ReportBuilder::expect_true(const std::string& identity, bool ok, std::vector<std::size_t> indices) {
  if (!ok) all_.push_back({identity, std::move(indices), {}, {}});
}

void ReportBuilder::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) {
    Violation copy = v;
    copy.identity = prefix + v.identity;
    all_.push_back(std::move(copy));
  }
  dropped_ += other.total_violations - other.violations.size();
  for (const auto& id : other.failed_ids) merged_ids_.push_back(prefix + id);
}

CheckReport ReportBuilder::finish() const {
  CheckReport report;
  report.subject = subject_;
  report.total_violations = all_.size() + dropped_;
  report.passed = report.total_violations == 0;
  std::vector<Violation> sorted = all_;
  std::stable_sort(sorted.begin(), sorted.end());
  if (sorted.size() > CheckReport::max_violations) sorted.resize(CheckReport::max_violations);
  report.violations = std::move(sorted);
  std::vector<std::string> ids = merged_ids_;
  for (const auto& v : all_) ids.push_back(v.identity);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  report.failed_ids = std::move(ids);
  return report;
}

void require(const CheckReport& report) {
  if (!report.passed) throw PreconditionError(report);
}

}  // namespace postlie
