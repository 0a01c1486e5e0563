#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "holweitz/prover.hpp"

namespace holweitz {

using Json = nlohmann::ordered_json;

struct RenderStyle {
  bool color = false;
  bool quiet = false;  // suppress discrepancy annotations
};

Json labels_json(const Labels& labels);
Json to_json(const Decomposition& d);
Json to_json(const WeitzenboeckFormula& f);
Json to_json(const HolonomyContext& ctx, const ComponentVerdict& v);
Json to_json(const HolonomyContext& ctx, const DegreeReport& r);
Json to_json(const HolonomyContext& ctx, const TheoremReport& t);

std::string render_table(const Decomposition& d);
std::string render_table(const HolonomyContext& ctx, const WeitzenboeckFormula& f, const RenderStyle& style);
std::string render_table(const HolonomyContext& ctx, const DegreeReport& r, const RenderStyle& style);
std::string render_table(const HolonomyContext& ctx, const TheoremReport& t, const RenderStyle& style);

/// Pads cells to column width; first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace holweitz
