#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Thrown when an enumeration would materialize more elements than the
/// caller-supplied guard allows. Carries the exact count so callers can
/// retry deliberately with a larger guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(unsigned long long count, unsigned long long guard,
                const std::string& prefix = "")
      : std::runtime_error(prefix + "lattice has " + std::to_string(count) +
                           " elements, exceeding the guard of " +
                           std::to_string(guard)),
        count_(count),
        guard_(guard) {}

  unsigned long long count() const noexcept { return count_; }
  unsigned long long guard() const noexcept { return guard_; }

 private:
  unsigned long long count_;
  unsigned long long guard_;
};

/// Thrown when the closed-form Gorenstein verdict and the brute-force purity
/// check disagree. The two routes provably coincide, so this always signals
/// an implementation bug, never a property of the input.
class OracleDisagreement : public std::logic_error {
 public:
  explicit OracleDisagreement(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace schubert
