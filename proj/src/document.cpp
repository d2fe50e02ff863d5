#include "schubert/document.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "schubert/errors.hpp"

namespace schubert::doc {

namespace {

std::string fmt_int_list(const std::vector<int>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
  return out;
}

std::string fmt_pq(const PQ& pq) {
  return "(" + std::to_string(pq.p) + "," + std::to_string(pq.q) + ")";
}

nlohmann::ordered_json entry_json(const Minor& minor, const PQ& pq,
                                  int coheight) {
  nlohmann::ordered_json e;
  e["minor"] = minor.entries();
  e["pq"] = {pq.p, pq.q};
  e["coheight"] = coheight;
  return e;
}

}  // namespace

std::vector<IrreducibleEntry> irreducibles_closed_form(
    const GammaContext& ctx, unsigned long long size_guard) {
  const FilterShape shape = filter_shape(ctx);
  if (static_cast<unsigned long long>(shape.point_count) > size_guard) {
    throw GuardExceeded(static_cast<unsigned long long>(shape.point_count),
                        size_guard);
  }
  std::vector<IrreducibleEntry> entries;
  entries.reserve(static_cast<size_t>(shape.point_count));
  for (int q = 0; q < static_cast<int>(shape.arm_limits.size()); ++q) {
    for (int p = 0; p <= shape.arm_limits[static_cast<size_t>(q)]; ++p) {
      const PQ pq{p, q};
      entries.push_back(IrreducibleEntry{phi_inverse(pq, ctx), pq, p + q});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const IrreducibleEntry& a, const IrreducibleEntry& b) {
              return a.minor < b.minor;
            });
  return entries;
}

std::vector<IrreducibleEntry> irreducibles_oracle(
    const GammaContext& ctx, unsigned long long size_guard) {
  const PosetView lattice = enumerate(ctx, size_guard);
  const std::vector<Minor> irreducibles = join_irreducibles_oracle(lattice);
  const PosetView p_view = induced_subposet(lattice, irreducibles);
  std::vector<IrreducibleEntry> entries;
  entries.reserve(irreducibles.size());
  for (const Minor& c : irreducibles) {
    entries.push_back(
        IrreducibleEntry{c, phi(c, ctx), coheight_in(p_view, c)});
  }
  return entries;  // irreducibles come back sorted already
}

nlohmann::ordered_json gorenstein_document(const GammaContext& ctx,
                                           const GorensteinReport& report) {
  nlohmann::ordered_json d;
  d["format"] = kFormatTag;
  d["kind"] = "gorenstein";
  d["n"] = ctx.n();
  d["m"] = ctx.m();
  d["gamma"] = ctx.gamma().entries();
  d["l_set"] = report.l_set.indices;
  d["criterion_values"] = report.criterion_values;
  d["gorenstein"] = report.gorenstein;
  d["degree_note"] = GorensteinReport::kDegreeNote;
  auto minimal = nlohmann::ordered_json::array();
  for (const auto& [minor, coheight] : report.minimal_irreducibles) {
    minimal.push_back(entry_json(minor, phi(minor, ctx), coheight));
  }
  d["minimal_join_irreducibles"] = std::move(minimal);
  const FilterShape shape = filter_shape(ctx);
  nlohmann::ordered_json filter;
  filter["arm_limits"] = shape.arm_limits;
  filter["point_count"] = shape.point_count;
  d["filter"] = std::move(filter);
  if (report.oracle) {
    nlohmann::ordered_json oracle;
    oracle["lattice_size"] = report.oracle->lattice_size;
    oracle["p_size"] = report.oracle->p_size;
    oracle["pure"] = report.oracle->pure;
    d["oracle"] = std::move(oracle);
  }
  return d;
}

nlohmann::ordered_json irreducibles_document(
    const GammaContext& ctx, const std::vector<IrreducibleEntry>& entries) {
  nlohmann::ordered_json d;
  d["format"] = kFormatTag;
  d["kind"] = "irreducibles";
  d["n"] = ctx.n();
  d["m"] = ctx.m();
  d["gamma"] = ctx.gamma().entries();
  d["count"] = entries.size();
  auto elements = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    elements.push_back(entry_json(e.minor, e.pq, e.coheight));
  }
  d["elements"] = std::move(elements);
  return d;
}

std::string emit_machine(const nlohmann::ordered_json& document) {
  return document.dump(2) + "\n";
}

std::string emit_machine_line(const nlohmann::ordered_json& document) {
  return document.dump() + "\n";
}

nlohmann::ordered_json parse_machine(const std::string& text) {
  nlohmann::ordered_json d;
  try {
    d = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("not a machine document: ") +
                                e.what());
  }
  if (!d.is_object() || !d.contains("format") || !d["format"].is_string() ||
      d["format"].get<std::string>() != kFormatTag) {
    throw std::invalid_argument(
        "unsupported document format; expected format tag \"" +
        std::string(kFormatTag) + "\"");
  }
  return d;
}

std::string gorenstein_text(const GammaContext& ctx,
                            const GorensteinReport& report) {
  std::string out;
  out += "n: " + std::to_string(ctx.n()) + "\n";
  out += "m: " + std::to_string(ctx.m()) + "\n";
  out += "gamma: " + ctx.gamma().to_string() + "\n";
  out += "l-set: " + fmt_int_list(report.l_set.indices) + "\n";
  out += "criterion values (b_l - 2l): " +
         fmt_int_list(report.criterion_values) + "\n";
  out += std::string("gorenstein: ") +
         (report.gorenstein ? "true" : "false") + "\n";
  out += std::string("degree note: ") + GorensteinReport::kDegreeNote + "\n";
  if (report.minimal_irreducibles.empty()) {
    out += "minimal join-irreducibles: (none)\n";
  } else {
    out += "minimal join-irreducibles:\n";
    for (const auto& [minor, coheight] : report.minimal_irreducibles) {
      out += "  " + minor.to_string() + "  pq=" + fmt_pq(phi(minor, ctx)) +
             "  coheight=" + std::to_string(coheight) + "\n";
    }
  }
  const FilterShape shape = filter_shape(ctx);
  out += "filter arm limits (q -> p_max): " + fmt_int_list(shape.arm_limits) +
         "\n";
  out += "filter point count: " + std::to_string(shape.point_count) + "\n";
  if (report.oracle) {
    out += "oracle: lattice_size=" +
           std::to_string(report.oracle->lattice_size) +
           " p_size=" + std::to_string(report.oracle->p_size) + " pure=" +
           (report.oracle->pure ? "true" : "false") + " (agrees)\n";
  }
  return out;
}

std::string irreducibles_text(const GammaContext& ctx,
                              const std::vector<IrreducibleEntry>& entries) {
  std::string out;
  out += "n: " + std::to_string(ctx.n()) + "\n";
  out += "m: " + std::to_string(ctx.m()) + "\n";
  out += "gamma: " + ctx.gamma().to_string() + "\n";
  out += "join-irreducibles: " + std::to_string(entries.size()) + "\n";
  for (const auto& e : entries) {
    out += "  " + e.minor.to_string() + "  pq=" + fmt_pq(e.pq) +
           "  coheight=" + std::to_string(e.coheight) + "\n";
  }
  return out;
}

namespace {

std::string dot_graph(const std::vector<std::string>& node_lines,
                      const std::vector<std::pair<std::string, std::string>>&
                          edges) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& line : node_lines) out += "  " + line + "\n";
  for (const auto& [lo, hi] : edges) {
    out += "  \"" + lo + "\" -> \"" + hi + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string hasse_dot_p(const GammaContext& ctx,
                        unsigned long long size_guard) {
  const auto entries = irreducibles_closed_form(ctx, size_guard);

  std::map<std::pair<int, int>, int> by_pq;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    by_pq[{entries[static_cast<size_t>(i)].pq.p,
           entries[static_cast<size_t>(i)].pq.q}] = i;
  }

  std::vector<std::string> nodes;
  nodes.reserve(entries.size());
  for (const auto& e : entries) {
    nodes.push_back("\"" + e.minor.to_string() + "\" [label=\"" +
                    e.minor.to_string() + " " + fmt_pq(e.pq) + "\"];");
  }

  // Covers are the unit steps of the coordinate picture: the element above
  // has either p or q smaller by one.
  std::vector<std::pair<int, int>> edge_idx;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    const PQ pq = entries[static_cast<size_t>(i)].pq;
    for (const auto& upper :
         {std::pair<int, int>{pq.p - 1, pq.q}, {pq.p, pq.q - 1}}) {
      const auto it = by_pq.find(upper);
      if (it != by_pq.end()) edge_idx.emplace_back(i, it->second);
    }
  }
  std::sort(edge_idx.begin(), edge_idx.end());
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(edge_idx.size());
  for (const auto& [lo, hi] : edge_idx) {
    edges.emplace_back(entries[static_cast<size_t>(lo)].minor.to_string(),
                       entries[static_cast<size_t>(hi)].minor.to_string());
  }
  return dot_graph(nodes, edges);
}

std::string hasse_dot_lattice(const GammaContext& ctx,
                              unsigned long long size_guard) {
  const PosetView view = enumerate(ctx, size_guard);
  std::vector<std::string> nodes;
  nodes.reserve(view.elements.size());
  for (const auto& e : view.elements) nodes.push_back("\"" + e.to_string() + "\";");
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(view.covers.size());
  for (const auto& [lo, hi] : view.covers) {
    edges.emplace_back(view.elements[static_cast<size_t>(lo)].to_string(),
                       view.elements[static_cast<size_t>(hi)].to_string());
  }
  return dot_graph(nodes, edges);
}

}  // namespace schubert::doc
