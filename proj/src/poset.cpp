#include "schubert/poset.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  return (a > ULLONG_MAX - b) ? ULLONG_MAX : a + b;
}

/// Upper covers per element index, from the sorted cover list.
std::vector<std::vector<int>> upper_adjacency(const PosetView& view) {
  std::vector<std::vector<int>> up(view.elements.size());
  for (const auto& [lo, hi] : view.covers) up[static_cast<size_t>(lo)].push_back(hi);
  return up;
}

std::vector<std::vector<int>> lower_adjacency(const PosetView& view) {
  std::vector<std::vector<int>> down(view.elements.size());
  for (const auto& [lo, hi] : view.covers) down[static_cast<size_t>(hi)].push_back(lo);
  return down;
}

}  // namespace

std::optional<int> PosetView::index_of(const Minor& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

unsigned long long count_elements(const GammaContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  const auto& b = ctx.gamma().entries();

  // ways[v] = completions of the suffix starting at the current row with
  // that row's entry equal to v; rows are folded from the last upward.
  std::vector<unsigned long long> ways(static_cast<size_t>(n) + 2, 0);
  for (int v = b[static_cast<size_t>(m) - 1]; v <= n; ++v) {
    ways[static_cast<size_t>(v)] = 1;
  }
  for (int i = m - 2; i >= 0; --i) {
    std::vector<unsigned long long> suffix(static_cast<size_t>(n) + 2, 0);
    for (int v = n; v >= 1; --v) {
      suffix[static_cast<size_t>(v)] =
          sat_add(suffix[static_cast<size_t>(v) + 1], ways[static_cast<size_t>(v)]);
    }
    std::vector<unsigned long long> next(static_cast<size_t>(n) + 2, 0);
    for (int v = b[static_cast<size_t>(i)]; v <= n; ++v) {
      next[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1];
    }
    ways = std::move(next);
  }
  unsigned long long total = 0;
  for (int v = b[0]; v <= n; ++v) {
    total = sat_add(total, ways[static_cast<size_t>(v)]);
  }
  return total;
}

PosetView enumerate(const GammaContext& ctx, unsigned long long size_guard) {
  const unsigned long long count = count_elements(ctx);
  if (count > size_guard) throw GuardExceeded(count, size_guard);

  const int n = ctx.n();
  const int m = ctx.m();
  const auto& b = ctx.gamma().entries();

  PosetView view;
  view.elements.reserve(static_cast<size_t>(count));

  // Depth-first generation emits elements in lexicographic order.
  std::vector<int> cur(static_cast<size_t>(m));
  auto generate = [&](auto&& self, int row, int low) -> void {
    if (row == m) {
      view.elements.emplace_back(cur);
      return;
    }
    const int hi = n - (m - 1 - row);
    for (int v = std::max(b[static_cast<size_t>(row)], low); v <= hi; ++v) {
      cur[static_cast<size_t>(row)] = v;
      self(self, row + 1, v + 1);
    }
  };
  generate(generate, 0, 1);

  // Covers are generated constructively: bump one entry where legal. Staying
  // >= gamma is automatic since the bumped minor dominates the original.
  for (int e = 0; e < static_cast<int>(view.elements.size()); ++e) {
    const auto& v = view.elements[static_cast<size_t>(e)].entries();
    for (int k = 0; k < m; ++k) {
      const bool legal = (k + 1 < m) ? (v[static_cast<size_t>(k)] + 1 <
                                        v[static_cast<size_t>(k) + 1])
                                     : (v[static_cast<size_t>(k)] + 1 <= n);
      if (!legal) continue;
      std::vector<int> bumped = v;
      bumped[static_cast<size_t>(k)] += 1;
      const Minor upper{std::move(bumped)};
      const auto idx = view.index_of(upper);
      if (!idx || !is_cover(view.elements[static_cast<size_t>(e)], upper)) {
        throw std::logic_error("constructive cover generation is inconsistent");
      }
      view.covers.emplace_back(e, *idx);
    }
  }
  std::sort(view.covers.begin(), view.covers.end());
  return view;
}

std::vector<Minor> join_irreducibles_oracle(const PosetView& view) {
  std::vector<int> lower_count(view.elements.size(), 0);
  for (const auto& [lo, hi] : view.covers) {
    (void)lo;
    lower_count[static_cast<size_t>(hi)] += 1;
  }
  std::vector<Minor> out;
  for (size_t i = 0; i < view.elements.size(); ++i) {
    if (lower_count[i] == 1) out.push_back(view.elements[i]);
  }
  return out;  // already sorted: elements are
}

int coheight_in(const PosetView& view, const Minor& x) {
  const auto idx = view.index_of(x);
  if (!idx) {
    throw std::invalid_argument("element " + x.to_string() +
                                " is not in the poset view");
  }
  const auto up = upper_adjacency(view);
  // Lexicographic element order is a linear extension, so a reverse pass
  // sees every upper cover before the element itself.
  std::vector<int> height(view.elements.size(), 0);
  for (int i = static_cast<int>(view.elements.size()) - 1; i >= 0; --i) {
    for (int j : up[static_cast<size_t>(i)]) {
      height[static_cast<size_t>(i)] =
          std::max(height[static_cast<size_t>(i)], height[static_cast<size_t>(j)] + 1);
    }
  }
  return height[static_cast<size_t>(*idx)];
}

PosetView induced_subposet(const PosetView& view,
                           const std::vector<Minor>& subset) {
  PosetView out;
  out.elements = subset;
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  for (const auto& x : out.elements) {
    if (!view.index_of(x)) {
      throw std::invalid_argument("element " + x.to_string() +
                                  " is not in the ambient poset view");
    }
  }
  const int k = static_cast<int>(out.elements.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& lo = out.elements[static_cast<size_t>(i)];
      const auto& hi = out.elements[static_cast<size_t>(j)];
      if (!(leq(lo, hi) && lo != hi)) continue;
      bool has_between = false;
      for (int t = 0; t < k && !has_between; ++t) {
        if (t == i || t == j) continue;
        const auto& mid = out.elements[static_cast<size_t>(t)];
        has_between = leq(lo, mid) && mid != lo && leq(mid, hi) && mid != hi;
      }
      if (!has_between) out.covers.emplace_back(i, j);
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

bool is_pure(const PosetView& view) {
  if (view.elements.empty()) return true;
  const auto up = upper_adjacency(view);
  const auto down = lower_adjacency(view);
  const int n = static_cast<int>(view.elements.size());

  // Longest and shortest path from any minimal element, in index order
  // (a linear extension).
  std::vector<int> longest(view.elements.size(), 0);
  std::vector<int> shortest(view.elements.size(), 0);
  for (int i = 0; i < n; ++i) {
    bool first = true;
    for (int j : down[static_cast<size_t>(i)]) {
      const int lo = longest[static_cast<size_t>(j)] + 1;
      const int sh = shortest[static_cast<size_t>(j)] + 1;
      if (first) {
        longest[static_cast<size_t>(i)] = lo;
        shortest[static_cast<size_t>(i)] = sh;
        first = false;
      } else {
        longest[static_cast<size_t>(i)] = std::max(longest[static_cast<size_t>(i)], lo);
        shortest[static_cast<size_t>(i)] = std::min(shortest[static_cast<size_t>(i)], sh);
      }
    }
  }

  // Maximal chains run from a minimal to a maximal element; compare the
  // extremes over all maximal elements.
  int chain_max = -1;
  int chain_min = -1;
  for (int i = 0; i < n; ++i) {
    if (!up[static_cast<size_t>(i)].empty()) continue;
    if (chain_max < 0) {
      chain_max = longest[static_cast<size_t>(i)];
      chain_min = shortest[static_cast<size_t>(i)];
    } else {
      chain_max = std::max(chain_max, longest[static_cast<size_t>(i)]);
      chain_min = std::min(chain_min, shortest[static_cast<size_t>(i)]);
    }
  }
  return chain_max == chain_min;
}

std::vector<std::vector<int>> u_gamma_support(const GammaContext& ctx) {
  const int n = ctx.n();
  const int m = ctx.m();
  std::vector<std::vector<int>> rows(static_cast<size_t>(m),
                                     std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= m; ++i) {
    for (int j = ctx.gamma().entry(i); j <= n; ++j) {
      rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = 1;
    }
  }
  return rows;
}

}  // namespace schubert
