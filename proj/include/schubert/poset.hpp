#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schubert/minor.hpp"

namespace schubert {

/// Explicit, fully materialized poset: every element together with the
/// complete cover relation. This is the brute-force ground truth that the
/// closed forms are judged against.
struct PosetView {
  /// Distinct, lexicographically sorted; indices are therefore deterministic.
  std::vector<Minor> elements;
  /// (lower, upper) index pairs, sorted; (i,j) present iff
  /// elements[i] is a lower cover of elements[j].
  std::vector<std::pair<int, int>> covers;

  std::optional<int> index_of(const Minor& x) const;
};

inline constexpr unsigned long long kDefaultSizeGuard = 2'000'000;

/// Number of minors >= gamma, saturating at ULLONG_MAX.
unsigned long long count_elements(const GammaContext& ctx);

/// All minors >= gamma with the full cover relation. Counts first and throws
/// GuardExceeded (with the exact count) before materializing anything larger
/// than size_guard.
PosetView enumerate(const GammaContext& ctx,
                    unsigned long long size_guard = kDefaultSizeGuard);

/// Elements with exactly one lower cover, sorted. The bottom element has
/// zero lower covers and is never included.
std::vector<Minor> join_irreducibles_oracle(const PosetView& view);

/// Length (edge count) of the longest chain from x up to a maximal element.
int coheight_in(const PosetView& view, const Minor& x);

/// Poset on `subset` with covers recomputed from the restriction of leq,
/// not inherited from the ambient view's cover edges.
PosetView induced_subposet(const PosetView& view,
                           const std::vector<Minor>& subset);

/// True iff all maximal chains have the same length. The empty poset is pure.
bool is_pure(const PosetView& view);

/// m x n 0/1 matrix with entry (i,j) = 1 iff j >= gamma_i: the support of
/// the ladder matrix attached to gamma.
std::vector<std::vector<int>> u_gamma_support(const GammaContext& ctx);

}  // namespace schubert
