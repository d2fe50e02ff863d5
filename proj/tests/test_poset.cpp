#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "schubert/errors.hpp"
#include "schubert/poset.hpp"

using namespace schubert;

namespace {

const GammaContext kPaperCtx{14, Minor{{2, 4, 5, 9, 10, 12, 13}}};

}  // namespace

TEST_CASE("enumerate: small instances") {
  SUBCASE("whole lattice for the bottom gamma") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 2}}));
    CHECK(view.elements.size() == 6);
  }
  SUBCASE("five elements above [1,3]") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 3}}));
    const std::vector<Minor> expected{Minor{{1, 3}}, Minor{{1, 4}},
                                      Minor{{2, 3}}, Minor{{2, 4}},
                                      Minor{{3, 4}}};
    CHECK(view.elements == expected);
  }
  SUBCASE("top gamma gives a single element") {
    const auto view =
        enumerate(GammaContext(14, Minor{{8, 9, 10, 11, 12, 13, 14}}));
    CHECK(view.elements.size() == 1);
    CHECK(view.covers.empty());
  }
}

TEST_CASE("enumerate: canonical order and well-formed covers") {
  const auto view = enumerate(kPaperCtx);
  CHECK(std::is_sorted(view.elements.begin(), view.elements.end()));
  CHECK(std::adjacent_find(view.elements.begin(), view.elements.end()) ==
        view.elements.end());
  CHECK(std::is_sorted(view.covers.begin(), view.covers.end()));
  for (const auto& [lo, hi] : view.covers) {
    CHECK(is_cover(view.elements[static_cast<size_t>(lo)],
                   view.elements[static_cast<size_t>(hi)]));
  }
  for (const auto& e : view.elements) CHECK(leq(kPaperCtx.gamma(), e));
}

TEST_CASE("element count matches the direct recursion, exhaustively to n=8") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (const auto& gamma : testoracle::all_subsets(n, m)) {
        const GammaContext ctx(n, Minor{gamma});
        const auto expected = testoracle::count_ge_recursive(gamma, n);
        CHECK(count_elements(ctx) ==
              static_cast<unsigned long long>(expected));
        CHECK(enumerate(ctx).elements.size() ==
              static_cast<size_t>(expected));
      }
    }
  }
}

TEST_CASE("size guard") {
  const GammaContext ctx(8, Minor{{1, 2, 3, 4}});  // C(8,4) = 70
  CHECK(enumerate(ctx, 70).elements.size() == 70);
  try {
    enumerate(ctx, 69);
    FAIL("guard should have tripped");
  } catch (const GuardExceeded& e) {
    CHECK(e.count() == 70);
    CHECK(e.guard() == 69);
  }
}

TEST_CASE("cover edges: transitive closure equals leq, exhaustively to n=6") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (const auto& gamma : testoracle::all_subsets(n, m)) {
        const auto view = enumerate(GammaContext(n, Minor{gamma}));
        const int size = static_cast<int>(view.elements.size());

        // all edges are genuine covers by the betweenness definition
        for (const auto& [lo, hi] : view.covers) {
          CHECK(testoracle::is_cover_oracle(
              view.elements, view.elements[static_cast<size_t>(lo)],
              view.elements[static_cast<size_t>(hi)]));
        }

        // reachability along covers reproduces leq
        std::vector<std::vector<bool>> reach(
            static_cast<size_t>(size),
            std::vector<bool>(static_cast<size_t>(size), false));
        for (int i = 0; i < size; ++i) reach[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
        for (int i = size - 1; i >= 0; --i) {
          for (const auto& [lo, hi] : view.covers) {
            if (lo != i) continue;
            for (int j = 0; j < size; ++j) {
              if (reach[static_cast<size_t>(hi)][static_cast<size_t>(j)]) {
                reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
              }
            }
          }
        }
        for (int i = 0; i < size; ++i) {
          for (int j = 0; j < size; ++j) {
            CHECK(reach[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                  leq(view.elements[static_cast<size_t>(i)],
                      view.elements[static_cast<size_t>(j)]));
          }
        }
      }
    }
  }
}

TEST_CASE("join irreducibles by lower-cover counting") {
  SUBCASE("five-element example") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 3}}));
    const std::vector<Minor> expected{Minor{{1, 4}}, Minor{{2, 3}},
                                      Minor{{3, 4}}};
    CHECK(join_irreducibles_oracle(view) == expected);
  }
  SUBCASE("single-element poset has none") {
    const auto view =
        enumerate(GammaContext(14, Minor{{8, 9, 10, 11, 12, 13, 14}}));
    CHECK(join_irreducibles_oracle(view).empty());
  }
  SUBCASE("reference instance: 22 elements, four minimal ones") {
    const auto view = enumerate(kPaperCtx);
    const auto irr = join_irreducibles_oracle(view);
    CHECK(irr.size() == 22);
    const auto p_view = induced_subposet(view, irr);
    const std::vector<Minor> expected_minimal{
        Minor{{2, 4, 5, 9, 10, 12, 14}}, Minor{{2, 4, 5, 9, 11, 12, 13}},
        Minor{{2, 4, 6, 9, 10, 12, 13}}, Minor{{3, 4, 5, 9, 10, 12, 13}}};
    CHECK(testoracle::minimal_elements(p_view.elements) == expected_minimal);
  }
  SUBCASE("membership is exactly lower-cover count == 1") {
    const auto view = enumerate(GammaContext(6, Minor{{1, 3, 4}}));
    const auto irr = join_irreducibles_oracle(view);
    std::vector<int> lower(view.elements.size(), 0);
    for (const auto& [lo, hi] : view.covers) {
      (void)lo;
      lower[static_cast<size_t>(hi)] += 1;
    }
    for (size_t i = 0; i < view.elements.size(); ++i) {
      const bool member = std::binary_search(irr.begin(), irr.end(),
                                             view.elements[i]);
      CHECK(member == (lower[i] == 1));
    }
  }
}

TEST_CASE("coheight") {
  SUBCASE("top element has coheight zero") {
    const auto view = enumerate(kPaperCtx);
    CHECK(coheight_in(view, Minor{{8, 9, 10, 11, 12, 13, 14}}) == 0);
  }
  SUBCASE("bottom of the full lattice on (4,2)") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 2}}));
    CHECK(coheight_in(view, Minor{{1, 2}}) == 4);
  }
  SUBCASE("matches the recursive oracle on a lattice") {
    const auto view = enumerate(GammaContext(6, Minor{{2, 3, 5}}));
    for (const auto& e : view.elements) {
      CHECK(coheight_in(view, e) ==
            testoracle::coheight_recursive(view.elements, e));
    }
  }
  SUBCASE("minimal elements of the reference P") {
    const auto view = enumerate(kPaperCtx);
    const auto p_view =
        induced_subposet(view, join_irreducibles_oracle(view));
    CHECK(coheight_in(p_view, Minor{{3, 4, 5, 9, 10, 12, 13}}) == 5);
    CHECK(coheight_in(p_view, Minor{{2, 4, 5, 9, 10, 12, 14}}) == 6);
  }
  SUBCASE("absent element") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 3}}));
    CHECK_THROWS_AS(coheight_in(view, Minor{{1, 2}}), std::invalid_argument);
  }
}

TEST_CASE("induced subposet") {
  const auto view = enumerate(GammaContext(4, Minor{{1, 3}}));
  SUBCASE("full subset keeps the cover relation") {
    const auto same = induced_subposet(view, view.elements);
    CHECK(same.elements == view.elements);
    CHECK(same.covers == view.covers);
  }
  SUBCASE("covers are recomputed, not inherited") {
    const std::vector<Minor> subset{Minor{{1, 4}}, Minor{{2, 3}},
                                    Minor{{3, 4}}};
    const auto sub = induced_subposet(view, subset);
    CHECK(sub.elements == subset);
    // [1,4] < [3,4] through [2,4] in the lattice, so the edge appears only
    // after restriction.
    const std::vector<std::pair<int, int>> expected{{0, 2}, {1, 2}};
    CHECK(sub.covers == expected);
  }
  SUBCASE("empty subset") {
    const auto sub = induced_subposet(view, {});
    CHECK(sub.elements.empty());
    CHECK(sub.covers.empty());
  }
  SUBCASE("stray element") {
    CHECK_THROWS_AS(induced_subposet(view, {Minor{{1, 2}}}),
                    std::invalid_argument);
  }
}

TEST_CASE("purity") {
  SUBCASE("induced P on (4,2,[1,3]) is pure") {
    const auto view = enumerate(GammaContext(4, Minor{{1, 3}}));
    CHECK(is_pure(induced_subposet(view, join_irreducibles_oracle(view))));
  }
  SUBCASE("reference P is not pure") {
    const auto view = enumerate(kPaperCtx);
    CHECK_FALSE(
        is_pure(induced_subposet(view, join_irreducibles_oracle(view))));
  }
  SUBCASE("empty and singleton posets are pure") {
    CHECK(is_pure(PosetView{}));
    const auto single =
        enumerate(GammaContext(14, Minor{{8, 9, 10, 11, 12, 13, 14}}));
    CHECK(is_pure(single));
  }
  SUBCASE("full lattices are graded, hence pure") {
    for (int n = 1; n <= 6; ++n) {
      for (int m = 1; m <= n; ++m) {
        std::vector<int> bottom(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) bottom[static_cast<size_t>(i)] = i + 1;
        CHECK(is_pure(enumerate(GammaContext(n, Minor{bottom}))));
      }
    }
  }
  SUBCASE("maximal chains of different lengths are detected") {
    PosetView v;
    v.elements = {Minor{{1, 2}}, Minor{{1, 3}}, Minor{{1, 4}}};
    v.covers = {{0, 1}, {0, 2}, {1, 2}};  // chains 0-1-2 and 0-2
    CHECK_FALSE(is_pure(v));
  }
  SUBCASE("a chain next to an isolated point is not pure") {
    PosetView v;
    v.elements = {Minor{{1, 2}}, Minor{{1, 3}}, Minor{{3, 4}}};
    v.covers = {{0, 1}};
    CHECK_FALSE(is_pure(v));
  }
}

TEST_CASE("ladder support matrix") {
  SUBCASE("reference shape") {
    const auto rows = u_gamma_support(GammaContext(4, Minor{{1, 3}}));
    CHECK(rows ==
          std::vector<std::vector<int>>{{1, 1, 1, 1}, {0, 0, 1, 1}});
  }
  SUBCASE("bottom gamma gives the full staircase") {
    const auto rows = u_gamma_support(GammaContext(4, Minor{{1, 2, 3}}));
    CHECK(rows == std::vector<std::vector<int>>{
                      {1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}});
  }
  SUBCASE("top gamma supports the last m columns") {
    const auto rows = u_gamma_support(GammaContext(5, Minor{{4, 5}}));
    CHECK(rows ==
          std::vector<std::vector<int>>{{0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}});
  }
}
