#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/gorenstein.hpp"
#include "schubert/irreducible.hpp"
#include "schubert/minor.hpp"
#include "schubert/poset.hpp"

namespace schubert::doc {

/// Version tag carried by every machine document; parse_machine rejects
/// anything else.
inline constexpr const char* kFormatTag = "schubert-gamma/1";

/// One join-irreducible as listed by the irreducibles command.
struct IrreducibleEntry {
  Minor minor;
  PQ pq;
  int coheight = 0;
  friend bool operator==(const IrreducibleEntry&,
                         const IrreducibleEntry&) = default;
};

/// Join-irreducibles via the closed form: the filter points are enumerated,
/// mapped back through phi_inverse, and listed in lexicographic order with
/// coheight p+q. Throws GuardExceeded if there are more than `size_guard`.
std::vector<IrreducibleEntry> irreducibles_closed_form(
    const GammaContext& ctx,
    unsigned long long size_guard = kDefaultSizeGuard);

/// Join-irreducibles via brute force: lattice enumeration, lower-cover
/// counting, and longest-chain coheights in the induced subposet.
std::vector<IrreducibleEntry> irreducibles_oracle(
    const GammaContext& ctx,
    unsigned long long size_guard = kDefaultSizeGuard);

nlohmann::ordered_json gorenstein_document(const GammaContext& ctx,
                                           const GorensteinReport& report);
nlohmann::ordered_json irreducibles_document(
    const GammaContext& ctx, const std::vector<IrreducibleEntry>& entries);

/// Canonical machine emission: two-space indent, trailing newline. Parsing
/// the result and re-emitting reproduces the bytes exactly.
std::string emit_machine(const nlohmann::ordered_json& document);

/// Single-line emission used for streamed (one document per line) output.
std::string emit_machine_line(const nlohmann::ordered_json& document);

/// Parses a machine document, rejecting unknown format tags.
nlohmann::ordered_json parse_machine(const std::string& text);

std::string gorenstein_text(const GammaContext& ctx,
                            const GorensteinReport& report);
std::string irreducibles_text(const GammaContext& ctx,
                              const std::vector<IrreducibleEntry>& entries);

/// DOT graph of the join-irreducible subposet, edges oriented lower -> upper,
/// node labels carrying the (p,q) coordinates. Node and edge order canonical.
std::string hasse_dot_p(const GammaContext& ctx,
                        unsigned long long size_guard = kDefaultSizeGuard);

/// DOT graph of the whole lattice over gamma.
std::string hasse_dot_lattice(const GammaContext& ctx,
                              unsigned long long size_guard =
                                  kDefaultSizeGuard);

}  // namespace schubert::doc
