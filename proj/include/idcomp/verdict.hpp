#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace idcomp {

/// Outcome of a bounded check. Unknown means the search budget ran out
/// before a verdict could be certified; it never stands in for Fail.
enum class Status { Pass, Fail, Unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

/// Fail dominates Unknown, Unknown dominates Pass.
inline Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
  return Status::Pass;
}

/// A named check over a battery: how many cases ran and the first witness
/// of a failure (or of the first undecided case).
struct AxiomVerdict {
  std::string name;
  Status status = Status::Pass;
  std::size_t checked = 0;
  std::string witness;
};

inline AxiomVerdict make_verdict(std::string name) {
  AxiomVerdict v;
  v.name = std::move(name);
  return v;
}

/// Result of an exhaustive-or-budgeted enumeration.
enum class Search { Found, Exhausted, OutOfBudget };

/// Budget counter shared across nested searches.
class Budget {
 public:
  explicit Budget(long long limit) : left_(limit) {}
  /// Consume one unit; false once the budget is spent.
  bool take() {
    if (left_ <= 0) return false;
    --left_;
    return true;
  }
  long long left() const noexcept { return left_; }
  bool spent() const noexcept { return left_ <= 0; }

 private:
  long long left_;
};

}  // namespace idcomp
