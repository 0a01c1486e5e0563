#include "holweitz/holctx.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "holweitz/citations.hpp"
#include "holweitz/errors.hpp"

namespace holweitz {

namespace {

constexpr std::array kCitations{
    cite::kDefinition,   cite::kIntegrability,     cite::kRicci,        cite::kCasimir,
    cite::kCasimirNormalization, cite::kConformalWeights, cite::kWeitzenboeck, cite::kHolonomyDecomposition,
    cite::kHodge,        cite::kTwistorTwoForms,   cite::kMiddleDegree, cite::kSplitting, cite::kTwistorGap,
    cite::kSchur,        cite::kIntegration,       cite::kFinal1,       cite::kFinal2,
    cite::kMain1,        cite::kMain2,
};

const std::string kTrivialCitation = "Cor. ricci (g acts by zero on the trivial representation)";

std::string normalize_id(std::string_view raw) {
  std::string id;
  for (char c : raw) {
    if (c == '(' || c == ')' || c == '_' || c == '-' || c == ' ') continue;
    id.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return id;
}

}  // namespace

std::span<const Citation> citation_table() { return kCitations; }

const Decomposition& HolonomyContext::form_space(int p) const {
  if (p < 0 || p > n_)
    throw Error(ErrorCode::DegreeOutOfRange, "p = " + std::to_string(p) + " outside [0, " + std::to_string(n_) + "]");
  return forms_[static_cast<std::size_t>(p)];
}

bool HolonomyContext::qr_trivial(const Irrep& e) const { return qr_citation(e).has_value(); }

std::optional<std::string> HolonomyContext::qr_citation(const Irrep& e) const {
  if (!(e.root_system() == *rs_)) return std::nullopt;
  for (const auto& entry : registry_)
    if (entry.highest_weight == e.highest_weight()) return entry.citation;
  return std::nullopt;
}

ContextPtr make_context(std::string_view raw_id, std::span<const RegistryRecord> extra) {
  const std::string id = normalize_id(raw_id);
  std::shared_ptr<HolonomyContext> ctx(new HolonomyContext());
  ctx->id_ = id;

  if (id == "g2") {
    ctx->kind_ = ContextKind::G2;
    ctx->rs_ = build_root_system(Family::G, 2);
    ctx->holonomy_ = Irrep(ctx->rs_, {1, 0});
    ctx->ricci_flat_ = true;
    ctx->registry_ = {
        {{0, 0}, kTrivialCitation},
        {{1, 0}, "Cor. ricci (q(R) is the Ricci curvature on the holonomy representation; G2 holonomy is "
                 "Ricci-flat)"},
    };
  } else if (id == "spin7") {
    ctx->kind_ = ContextKind::Spin7;
    ctx->rs_ = build_root_system(Family::B, 3);
    ctx->holonomy_ = Irrep(ctx->rs_, {0, 0, 1});
    ctx->ricci_flat_ = true;
    ctx->registry_ = {
        {{0, 0, 0}, kTrivialCitation},
        {{0, 0, 1}, "Cor. ricci (q(R) is the Ricci curvature on the holonomy representation; Spin7 holonomy "
                    "is Ricci-flat)"},
        {{1, 0, 0}, "Cor. ricci (q(R) acts as s/16 on the rank-7 summand of the spinor bundle; s = 0)"},
    };
  } else if (id.size() >= 3 && id.starts_with("so") &&
             std::all_of(id.begin() + 2, id.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
             id.size() <= 4) {
    const int n = std::stoi(id.substr(2));
    if (n < 5 || n > 10) throw Error(ErrorCode::UnsupportedContext, std::string(raw_id));
    ctx->kind_ = ContextKind::SO;
    ctx->rs_ = n % 2 ? build_root_system(Family::B, (n - 1) / 2) : build_root_system(Family::D, n / 2);
    Labels vec(static_cast<std::size_t>(ctx->rs_->rank()), 0);
    vec[0] = 1;
    ctx->holonomy_ = Irrep(ctx->rs_, vec);
    ctx->ricci_flat_ = false;
    ctx->registry_ = {{Labels(static_cast<std::size_t>(ctx->rs_->rank()), 0), kTrivialCitation}};
  } else {
    throw Error(ErrorCode::UnsupportedContext, "'" + std::string(raw_id) + "'");
  }

  ctx->n_ = static_cast<int>(dimension(*ctx->holonomy_));
  ctx->dim_g_ = lie_algebra_dimension(*ctx->rs_);
  if (ctx->kind_ == ContextKind::G2 && (ctx->n_ != 7 || ctx->dim_g_ != 14))
    throw std::logic_error("g2 context: expected n = 7, dim g = 14");
  if (ctx->kind_ == ContextKind::Spin7 && (ctx->n_ != 8 || ctx->dim_g_ != 21))
    throw std::logic_error("spin7 context: expected n = 8, dim g = 21");

  for (const auto& rec : extra) {
    if (normalize_id(rec.context) != id) continue;
    if (rec.highest_weight.size() != static_cast<std::size_t>(ctx->rs_->rank()) || !is_dominant(rec.highest_weight))
      throw Error(ErrorCode::RegistryFormat, "bad highest weight " + to_string(rec.highest_weight) + " for " + id);
    const bool present = std::any_of(ctx->registry_.begin(), ctx->registry_.end(),
                                     [&](const RegistryEntry& e) { return e.highest_weight == rec.highest_weight; });
    if (!present) ctx->registry_.push_back({rec.highest_weight, rec.citation});
  }

  for (int p = 0; p <= ctx->n_; ++p) ctx->forms_.push_back(exterior_power(*ctx->holonomy_, p));
  return ctx;
}

std::vector<RegistryRecord> parse_registry(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::RegistryFormat, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::RegistryFormat, "top level must be an array");
  std::vector<RegistryRecord> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("context") || !item.contains("highest_weight") ||
        !item.contains("citation"))
      throw Error(ErrorCode::RegistryFormat, "each record needs context, highest_weight, citation");
    if (!item["context"].is_string() || !item["citation"].is_string() || !item["highest_weight"].is_array())
      throw Error(ErrorCode::RegistryFormat, "wrong field types in " + item.dump());
    RegistryRecord rec;
    rec.context = item["context"].get<std::string>();
    rec.citation = item["citation"].get<std::string>();
    for (const auto& x : item["highest_weight"]) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw Error(ErrorCode::RegistryFormat, "highest_weight entries must be non-negative integers");
      rec.highest_weight.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RegistryRecord> load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::RegistryFormat, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str());
}

Rational casimir_lambda2(const HolonomyContext& ctx, const Irrep& pi) {
  return casimir_lambda2(ctx.holonomy_rep(), pi);
}

}  // namespace holweitz
