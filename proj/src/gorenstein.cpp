#include "schubert/gorenstein.hpp"

#include <algorithm>
#include <string>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::vector<int> criterion_values(const GammaContext& ctx, const LSet& ls) {
  std::vector<int> values;
  values.reserve(ls.indices.size());
  for (int l : ls.indices) values.push_back(ctx.gamma().entry(l) - 2 * l);
  return values;
}

bool at_most_one_distinct(const std::vector<int>& values) {
  for (int v : values) {
    if (v != values.front()) return false;
  }
  return true;
}

}  // namespace

bool is_gorenstein(const GammaContext& ctx) {
  return at_most_one_distinct(criterion_values(ctx, l_set(ctx)));
}

GorensteinReport gorenstein_report(const GammaContext& ctx, bool run_oracle,
                                   unsigned long long size_guard) {
  GorensteinReport report;
  report.l_set = l_set(ctx);
  report.criterion_values = criterion_values(ctx, report.l_set);
  report.gorenstein = at_most_one_distinct(report.criterion_values);
  report.minimal_irreducibles = minimal_join_irreducibles(ctx);

  if (run_oracle) {
    const PosetView lattice = enumerate(ctx, size_guard);
    const std::vector<Minor> irreducibles = join_irreducibles_oracle(lattice);
    const PosetView p_view = induced_subposet(lattice, irreducibles);
    const bool pure = is_pure(p_view);
    if (pure != report.gorenstein) {
      throw OracleDisagreement(
          "closed-form verdict " +
          std::string(report.gorenstein ? "true" : "false") +
          " contradicts brute-force purity for gamma " +
          ctx.gamma().to_string() + ", n=" + std::to_string(ctx.n()));
    }
    report.oracle = OracleCheck{
        static_cast<unsigned long long>(lattice.elements.size()),
        static_cast<int>(irreducibles.size()), pure};
  }
  return report;
}

}  // namespace schubert
