#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schubert {

/// A maximal-minor index: a strictly increasing tuple [a_1,...,a_m] of
/// 1-based column indices. Minors are immutable values; the comparison
/// operators give the lexicographic order, which is a linear extension of
/// the componentwise lattice order and serves as the canonical output order.
class Minor {
 public:
  /// Checks that `entries` is nonempty, strictly increasing and >= 1.
  explicit Minor(std::vector<int> entries);

  /// As above, and additionally checks entries <= n.
  static Minor validated(std::vector<int> entries, int n);

  int size() const { return static_cast<int>(entries_.size()); }

  /// 1-based access, entry(1) .. entry(m).
  int entry(int i) const { return entries_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& entries() const { return entries_; }

  bool fits_within(int n) const { return entries_.back() <= n; }

  /// "[2,4,5]"
  std::string to_string() const;

  friend bool operator==(const Minor&, const Minor&) = default;
  friend std::strong_ordering operator<=>(const Minor& a, const Minor& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// Componentwise order: a_i <= b_i for every i. Lengths must match.
bool leq(const Minor& a, const Minor& b);

/// Componentwise minimum; the greatest lower bound under leq.
Minor meet(const Minor& a, const Minor& b);

/// Componentwise maximum; the least upper bound under leq.
Minor join(const Minor& a, const Minor& b);

/// True iff d equals c with exactly one entry incremented by 1.
bool is_cover(const Minor& c, const Minor& d);

/// Converts Schubert conditions [a_1,...,a_m] to the bottom minor
/// [b_1,...,b_m] with b_i = n+1-a_{m+1-i}. An order-reversing involution.
Minor gamma_from_schubert_conditions(const Minor& a, int n);

/// Fixes the ambient sizes (n columns, m = |gamma| rows) and the bottom
/// element gamma of the sublattice of minors >= gamma.
class GammaContext {
 public:
  GammaContext(int n, Minor gamma);

  int n() const { return n_; }
  int m() const { return gamma_.size(); }
  const Minor& gamma() const { return gamma_; }

 private:
  int n_;
  Minor gamma_;
};

}  // namespace schubert
