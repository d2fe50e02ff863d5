#include "schubert/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void require_member(const Minor& c, const GammaContext& ctx) {
  if (c.size() != ctx.m() || !c.fits_within(ctx.n()) ||
      !leq(ctx.gamma(), c)) {
    throw std::invalid_argument("minor " + c.to_string() +
                                " is not in the lattice over gamma " +
                                ctx.gamma().to_string());
  }
}

/// Rows i with c_i > b_i and c_i > c_{i-1} + 1 (c_0 = 0): exactly the rows
/// whose entry can be lowered by one within the lattice.
std::vector<int> qualifying_rows(const Minor& c, const GammaContext& ctx) {
  const auto& cs = c.entries();
  const auto& bs = ctx.gamma().entries();
  std::vector<int> rows;
  for (int k = 0; k < c.size(); ++k) {
    const int prev = (k > 0) ? cs[static_cast<size_t>(k) - 1] : 0;
    if (cs[static_cast<size_t>(k)] > bs[static_cast<size_t>(k)] &&
        cs[static_cast<size_t>(k)] > prev + 1) {
      rows.push_back(k + 1);
    }
  }
  return rows;
}

}  // namespace

bool is_join_irreducible(const Minor& c, const GammaContext& ctx) {
  require_member(c, ctx);
  return qualifying_rows(c, ctx).size() == 1;
}

int pivot_index(const Minor& c, const GammaContext& ctx) {
  require_member(c, ctx);
  const auto rows = qualifying_rows(c, ctx);
  if (rows.size() != 1) {
    throw std::invalid_argument("minor " + c.to_string() +
                                " is not join-irreducible");
  }
  return rows.front();
}

PQ phi(const Minor& c, const GammaContext& ctx) {
  const int i = pivot_index(c, ctx);
  return PQ{ctx.n() - c.entry(i) - (ctx.m() - i), i - 1};
}

bool pq_in_image(const PQ& pq, const GammaContext& ctx) {
  if (pq.p < 0 || pq.q < 0) return false;
  const int m = ctx.m();
  if (pq.q + 1 > m) return false;
  const int i = pq.q + 1;
  const int ci = ctx.n() - pq.p - (m - i);
  const auto& b = ctx.gamma().entries();
  const int b_i = b[static_cast<size_t>(i) - 1];
  const int b_prev = (i >= 2) ? b[static_cast<size_t>(i) - 2] : 0;
  return ci > b_i && ci > b_prev + 1;
}

Minor phi_inverse(const PQ& pq, const GammaContext& ctx) {
  if (!pq_in_image(pq, ctx)) {
    throw std::invalid_argument("(" + std::to_string(pq.p) + "," +
                                std::to_string(pq.q) +
                                ") is not in the image of phi");
  }
  const int m = ctx.m();
  const int i = pq.q + 1;
  const auto& b = ctx.gamma().entries();
  std::vector<int> c(static_cast<size_t>(m));
  for (int j = 1; j < i; ++j) {
    c[static_cast<size_t>(j) - 1] = b[static_cast<size_t>(j) - 1];
  }
  c[static_cast<size_t>(i) - 1] = ctx.n() - pq.p - (m - i);
  for (int j = i + 1; j <= m; ++j) {
    c[static_cast<size_t>(j) - 1] = std::max(b[static_cast<size_t>(j) - 1],
                                             c[static_cast<size_t>(j) - 2] + 1);
  }
  return Minor::validated(std::move(c), ctx.n());
}

FilterShape filter_shape(const GammaContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  const auto& b = ctx.gamma().entries();

  FilterShape shape;
  for (int i = 1; i <= m; ++i) {
    const int b_i = b[static_cast<size_t>(i) - 1];
    const int b_prev = (i >= 2) ? b[static_cast<size_t>(i) - 2] : 0;
    const int p_max = n - (m - i) - std::max(b_i, b_prev + 1) - 1;
    if (p_max < 0) break;  // p_max is weakly decreasing, arms form a prefix
    shape.arm_limits.push_back(p_max);
    shape.point_count += p_max + 1;
  }

  const int arms = static_cast<int>(shape.arm_limits.size());
  for (int q = 0; q < arms; ++q) {
    const PQ tip{shape.arm_limits[static_cast<size_t>(q)], q};
    bool dominated = false;
    for (int r = 0; r < arms && !dominated; ++r) {
      if (r == q) continue;
      const PQ other{shape.arm_limits[static_cast<size_t>(r)], r};
      dominated = other.p >= tip.p && other.q >= tip.q;
    }
    if (!dominated) shape.minimal_points.push_back(tip);
  }
  return shape;
}

LSet l_set(const GammaContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  const auto& b = ctx.gamma().entries();
  LSet out;
  for (int i = 1; i <= m; ++i) {
    const int next = (i < m) ? b[static_cast<size_t>(i)] : n + 1;
    if (b[static_cast<size_t>(i) - 1] + 1 < next &&
        b[static_cast<size_t>(i) - 1] < n) {
      out.indices.push_back(i);
    }
  }
  return out;
}

std::vector<std::pair<Minor, int>> minimal_join_irreducibles(
    const GammaContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  std::vector<std::pair<Minor, int>> out;
  for (int l : l_set(ctx).indices) {
    std::vector<int> c = ctx.gamma().entries();
    c[static_cast<size_t>(l) - 1] += 1;
    const int coheight = n - m - ctx.gamma().entry(l) + 2 * l - 2;
    out.emplace_back(Minor::validated(std::move(c), n), coheight);
  }
  return out;
}

}  // namespace schubert
