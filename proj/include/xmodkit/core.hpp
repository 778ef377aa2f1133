#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmodkit {

/// Thrown by constructors when input data violates a structural invariant.
/// `kind` is a stable machine-readable tag; the message names the first
/// violating tuple in lexicographic order.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Outcome of a single verification step. A failing result carries a witness
/// describing the first violation found.
struct CheckResult {
  bool ok = true;
  std::string witness;

  static CheckResult pass() { return {true, {}}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

/// An ordered list of named check results; the value returned by every
/// theorem verifier.
struct Transcript {
  std::string name;
  std::vector<std::pair<std::string, CheckResult>> lines;

  void add(const std::string& label, CheckResult r) {
    lines.emplace_back(label, std::move(r));
  }

  bool all_ok() const {
    for (const auto& [label, r] : lines)
      if (!r.ok) return false;
    return true;
  }
};

/// Cap on the total morphism count of exhaustively enumerated structures.
inline long long morphism_budget() {
  if (const char* s = std::getenv("XMODKIT_MAX_ORDER")) {
    long long v = std::atoll(s);
    if (v > 0) return v;
  }
  return 5000;
}

inline void require_budget(long long count, const std::string& where) {
  long long cap = morphism_budget();
  if (count > cap)
    throw ValidationError(
        "BudgetExceeded",
        where + ": total morphism count " + std::to_string(count) +
            " exceeds XMODKIT_MAX_ORDER=" + std::to_string(cap));
}

}  // namespace xmodkit
