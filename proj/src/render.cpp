#include "holweitz/render.hpp"

#include <algorithm>
#include <sstream>

namespace holweitz {

namespace {

std::string paint(const RenderStyle& style, Verdict v) {
  const std::string text(to_string(v));
  if (!style.color) return text;
  return (v == Verdict::Parallel ? "\x1b[32m" : "\x1b[33m") + text + "\x1b[0m";
}

Json claims_json(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back({{"class", to_string(c.form_class)}, {"degree", c.degree}});
  return out;
}

Json trace_json(const std::vector<TraceStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back({{"rule", s.rule}, {"citation", s.citation}, {"detail", s.detail}});
  return out;
}

std::string claims_text(const std::vector<Claim>& claims, FormClass c) {
  std::string out;
  for (const auto& claim : claims) {
    if (claim.form_class != c) continue;
    out += (out.empty() ? "" : ",") + std::to_string(claim.degree);
  }
  return out.empty() ? "-" : out;
}

void trace_lines(std::ostringstream& os, const std::vector<TraceStep>& steps, const std::string& indent) {
  for (const auto& s : steps) os << indent << '[' << s.rule << "] " << s.citation << ": " << s.detail << '\n';
}

}  // namespace

Json labels_json(const Labels& labels) {
  Json out = Json::array();
  for (auto x : labels) out.push_back(x);
  return out;
}

Json to_json(const Decomposition& d) {
  Json out = Json::array();
  for (const auto& e : d.entries())
    out.push_back({{"weight", labels_json(e.irrep.highest_weight())},
                   {"dim", dimension(e.irrep)},
                   {"multiplicity", e.multiplicity}});
  return out;
}

Json to_json(const WeitzenboeckFormula& f) {
  Json j;
  j["context"] = f.context;
  j["bundle"] = labels_json(f.bundle.highest_weight());
  Json summands = Json::array();
  for (const auto& s : f.summands)
    summands.push_back({{"weight", labels_json(s.irrep.highest_weight())},
                        {"dim", dimension(s.irrep)},
                        {"b", s.b.str()},
                        {"coeff", s.coeff.str()}});
  j["summands"] = std::move(summands);
  j["trace_residual"] = trace_residual(f).str();
  Json disc = Json::array();
  for (const auto& d : f.discrepancies)
    disc.push_back({{"weight", labels_json(d.summand)},
                    {"operator", d.operator_index},
                    {"printed", d.printed.str()},
                    {"computed", d.computed.str()},
                    {"citation", d.citation}});
  j["discrepancies"] = std::move(disc);
  return j;
}

Json to_json(const HolonomyContext& ctx, const ComponentVerdict& v) {
  Json j;
  j["weight"] = labels_json(v.bundle.highest_weight());
  j["name"] = display_name(ctx, v.bundle);
  j["dim"] = dimension(v.bundle);
  Json statuses = Json::array();
  for (const auto& s : v.statuses)
    statuses.push_back({{"weight", labels_json(s.summand.highest_weight())},
                        {"operator", s.operator_index},
                        {"occ_plus", s.occ_plus},
                        {"occ_minus", s.occ_minus},
                        {"killed_by", to_string(s.killed_by)}});
  j["statuses"] = std::move(statuses);
  j["factor"] = v.factor ? Json(v.factor->str()) : Json(nullptr);
  Json survivors = Json::array();
  for (const auto& s : v.survivors)
    survivors.push_back({{"weight", labels_json(s.summand.highest_weight())},
                         {"operator", s.operator_index},
                         {"residual", s.residual.str()}});
  j["survivors"] = std::move(survivors);
  j["verdict"] = to_string(v.verdict);
  j["trace"] = trace_json(v.trace);
  return j;
}

Json to_json(const HolonomyContext& ctx, const DegreeReport& r) {
  Json j;
  j["context"] = r.context;
  j["degree"] = r.degree;
  j["class"] = to_string(r.form_class);
  j["analyzed"] = {{"degree", r.analyzed_degree}, {"class", to_string(r.analyzed_class)}};
  j["componentwise"] = r.componentwise;
  j["hypotheses"] = r.hypotheses;
  j["reductions"] = trace_json(r.reductions);
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(to_json(ctx, c));
  j["components"] = std::move(comps);
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const HolonomyContext& ctx, const TheoremReport& t) {
  Json j;
  j["context"] = t.context;
  j["citation"] = t.citation;
  j["parallel"] = claims_json(t.parallel);
  j["inconclusive"] = claims_json(t.inconclusive);
  j["expected"] = claims_json(t.expected);
  j["matches_claims"] = t.matches_claims;
  Json degrees = Json::array();
  for (const auto& d : t.degrees) degrees.push_back(to_json(ctx, d));
  j["degrees"] = std::move(degrees);
  return j;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      line += rows[r][i];
      if (i + 1 < rows[r].size()) line += std::string(width[i] - rows[r][i].size() + 2, ' ');
    }
    os << line << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

std::string render_table(const Decomposition& d) {
  std::vector<std::vector<std::string>> rows{{"weight", "dim", "mult"}};
  for (const auto& e : d.entries())
    rows.push_back({to_string(e.irrep.highest_weight()), std::to_string(dimension(e.irrep)),
                    std::to_string(e.multiplicity)});
  std::ostringstream os;
  os << format_table(rows) << "total dim " << d.total_dimension() << '\n';
  return os.str();
}

std::string render_table(const HolonomyContext& ctx, const WeitzenboeckFormula& f, const RenderStyle& style) {
  std::ostringstream os;
  os << ctx.id() << ", bundle " << display_name(ctx, f.bundle) << ' ' << to_string(f.bundle.highest_weight())
     << " (dim " << dimension(f.bundle) << ")\n";
  // Rows follow the operator numbering, which is the printed order when one exists.
  std::vector<const WeitzenboeckSummand*> order;
  for (const auto& s : f.summands) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    return operator_index(f, a->irrep.highest_weight()) < operator_index(f, b->irrep.highest_weight());
  });

  std::vector<std::vector<std::string>> rows{{"op", "summand", "weight", "dim", "b", "coeff"}};
  for (const auto* sp : order) {
    const auto& s = *sp;
    rows.push_back({"T" + std::to_string(operator_index(f, s.irrep.highest_weight())), display_name(ctx, s.irrep),
                    to_string(s.irrep.highest_weight()), std::to_string(dimension(s.irrep)), s.b.str(),
                    s.coeff.str()});
  }
  os << format_table(rows);

  os << formula_text(f);
  os << "\ntrace residual " << trace_residual(f).str() << '\n';

  if (!style.quiet) {
    for (const auto& d : f.discrepancies)
      os << "note: " << d.citation << " prints " << d.printed.str() << " for T" << d.operator_index << " ("
         << to_string(d.summand) << "); computed " << d.computed.str() << '\n';
  }
  return os.str();
}

std::string render_table(const HolonomyContext& ctx, const DegreeReport& r, const RenderStyle& style) {
  std::ostringstream os;
  os << r.context << ", " << to_string(r.form_class) << " " << r.degree << "-forms";
  if (r.analyzed_degree != r.degree || r.analyzed_class != r.form_class)
    os << " (analyzed as " << to_string(r.analyzed_class) << ' ' << r.analyzed_degree << "-forms)";
  os << ": " << paint(style, r.verdict) << '\n';
  os << "  hypotheses:";
  for (const auto& h : r.hypotheses) os << ' ' << h << ';';
  os << '\n';
  trace_lines(os, r.reductions, "  ");
  for (const auto& c : r.components) {
    os << "  component " << display_name(ctx, c.bundle) << ' ' << to_string(c.bundle.highest_weight()) << ": "
       << paint(style, c.verdict) << '\n';
    if (!c.statuses.empty()) {
      std::vector<std::vector<std::string>> rows{{"op", "summand", "occ+", "occ-", "killed by"}};
      for (const auto& s : c.statuses)
        rows.push_back({"T" + std::to_string(s.operator_index), display_name(ctx, s.summand),
                        std::to_string(s.occ_plus), std::to_string(s.occ_minus), std::string(to_string(s.killed_by))});
      std::istringstream table(format_table(rows));
      for (std::string line; std::getline(table, line);) os << "    " << line << '\n';
    }
    trace_lines(os, c.trace, "    ");
  }
  return os.str();
}

std::string render_table(const HolonomyContext& ctx, const TheoremReport& t, const RenderStyle& style) {
  std::ostringstream os;
  os << t.context << " (" << t.citation << ")\n";
  std::vector<std::vector<std::string>> rows{{"class", "parallel p", "inconclusive p", "claimed p"}};
  for (FormClass c : {FormClass::Killing, FormClass::StarKilling, FormClass::Twistor})
    rows.push_back({std::string(to_string(c)), claims_text(t.parallel, c), claims_text(t.inconclusive, c),
                    claims_text(t.expected, c)});
  os << format_table(rows);
  os << "claim set " << (t.matches_claims ? "reproduced" : "NOT reproduced") << "\n\n";
  for (const auto& d : t.degrees) os << render_table(ctx, d, style) << '\n';
  return os.str();
}

}  // namespace holweitz
