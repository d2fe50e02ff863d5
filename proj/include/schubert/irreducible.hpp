#pragma once

#include <utility>
#include <vector>

#include "schubert/minor.hpp"

namespace schubert {

/// Coordinates of a join-irreducible minor c with pivot row i:
///   p = n - c_i - (m - i)   -- unused values above the pivot entry
///   q = i - 1               -- entries below the pivot entry
struct PQ {
  int p = 0;
  int q = 0;
  friend bool operator==(const PQ&, const PQ&) = default;
  friend auto operator<=>(const PQ&, const PQ&) = default;
};

/// The 1-based rows of gamma whose entry can be raised by one while staying
/// a valid minor: {i | b_i + 1 < b_{i+1}, b_i < n} with b_{m+1} read as n+1.
struct LSet {
  std::vector<int> indices;
  friend bool operator==(const LSet&, const LSet&) = default;
};

/// Shape of the poset of join-irreducibles as a staircase region of N^2:
/// for each q with a nonempty arm the points (0..p_max(q), q) are present.
/// Arms occupy the contiguous range q = 0 .. arm_limits.size()-1 and
/// p_max is weakly decreasing in q.
struct FilterShape {
  std::vector<int> arm_limits;     ///< arm_limits[q] = p_max(q)
  std::vector<PQ> minimal_points;  ///< coordinatewise-maximal arm tips, by q
  long long point_count = 0;       ///< sum of (p_max(q) + 1)
  friend bool operator==(const FilterShape&, const FilterShape&) = default;
};

/// Closed-form join-irreducibility: exactly one row i has
/// c_i > b_i and c_i > c_{i-1} + 1 (with c_0 = 0).
/// Requires c to lie in the lattice over gamma.
bool is_join_irreducible(const Minor& c, const GammaContext& ctx);

/// The unique qualifying row of a join-irreducible minor, 1-based.
int pivot_index(const Minor& c, const GammaContext& ctx);

PQ phi(const Minor& c, const GammaContext& ctx);

/// Whether (p,q) is hit by phi: with i = q+1 and c_i = n - p - (m-i),
/// requires p >= 0, q+1 <= m, c_i > b_i and c_i > b_{i-1} + 1 (b_0 = 0).
bool pq_in_image(const PQ& pq, const GammaContext& ctx);

/// The unique join-irreducible with the given coordinates: rows before the
/// pivot equal gamma, the pivot row is n - p - (m-i), and every later row is
/// the smallest legal value max(b_j, c_{j-1} + 1).
Minor phi_inverse(const PQ& pq, const GammaContext& ctx);

FilterShape filter_shape(const GammaContext& ctx);

LSet l_set(const GammaContext& ctx);

/// The minimal join-irreducibles: gamma with row l raised by one, for each l
/// in the l-set, paired with its coheight n - m - b_l + 2l - 2. Order
/// follows the l-set.
std::vector<std::pair<Minor, int>> minimal_join_irreducibles(
    const GammaContext& ctx);

}  // namespace schubert
