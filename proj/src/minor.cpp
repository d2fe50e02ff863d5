#include "schubert/minor.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void check_same_length(const Minor& a, const Minor& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("minors have different lengths: " +
                                a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

Minor::Minor(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("a minor needs at least one entry");
  }
  if (entries_.front() < 1) {
    throw std::invalid_argument("minor entries must be >= 1");
  }
  for (size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] <= entries_[i - 1]) {
      throw std::invalid_argument("minor entries must be strictly increasing");
    }
  }
}

Minor Minor::validated(std::vector<int> entries, int n) {
  Minor m{std::move(entries)};
  if (!m.fits_within(n)) {
    throw std::invalid_argument("minor " + m.to_string() +
                                " does not fit within n=" + std::to_string(n));
  }
  return m;
}

std::string Minor::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ']';
  return out;
}

bool leq(const Minor& a, const Minor& b) {
  check_same_length(a, b);
  for (int i = 0; i < a.size(); ++i) {
    if (a.entries()[i] > b.entries()[i]) return false;
  }
  return true;
}

Minor meet(const Minor& a, const Minor& b) {
  check_same_length(a, b);
  std::vector<int> out(a.entries().size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min(a.entries()[i], b.entries()[i]);
  }
  return Minor{std::move(out)};
}

Minor join(const Minor& a, const Minor& b) {
  check_same_length(a, b);
  std::vector<int> out(a.entries().size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = std::max(a.entries()[i], b.entries()[i]);
  }
  return Minor{std::move(out)};
}

bool is_cover(const Minor& c, const Minor& d) {
  check_same_length(c, d);
  int bumped = 0;
  for (int i = 0; i < c.size(); ++i) {
    const int diff = d.entries()[i] - c.entries()[i];
    if (diff == 0) continue;
    if (diff != 1) return false;
    ++bumped;
  }
  return bumped == 1;
}

Minor gamma_from_schubert_conditions(const Minor& a, int n) {
  if (!a.fits_within(n)) {
    throw std::invalid_argument("minor " + a.to_string() +
                                " does not fit within n=" + std::to_string(n));
  }
  const int m = a.size();
  std::vector<int> b(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    b[static_cast<size_t>(i) - 1] = n + 1 - a.entry(m + 1 - i);
  }
  return Minor::validated(std::move(b), n);
}

GammaContext::GammaContext(int n, Minor gamma) : n_(n), gamma_(std::move(gamma)) {
  if (n_ < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  if (gamma_.size() > n_) {
    throw std::invalid_argument("gamma " + gamma_.to_string() +
                                " has more rows than n=" + std::to_string(n_));
  }
  if (!gamma_.fits_within(n_)) {
    throw std::invalid_argument("gamma " + gamma_.to_string() +
                                " does not fit within n=" + std::to_string(n_));
  }
}

}  // namespace schubert
