#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holweitz/decomp.hpp"
#include "holweitz/reps.hpp"

namespace holweitz {

enum class ContextKind { G2, Spin7, SO };

/// An irreducible bundle on which q(R) is known to vanish.
struct RegistryEntry {
  Labels highest_weight;
  std::string citation;
};

/// Registry extension as read from JSON.
struct RegistryRecord {
  std::string context;
  Labels highest_weight;
  std::string citation;
};

class HolonomyContext;
using ContextPtr = std::shared_ptr<const HolonomyContext>;

/// Supported ids: "g2", "spin7", "so5" ... "so10" (also "so(7)").
/// Registry records for other contexts are ignored. Throws
/// Error(UnsupportedContext) or Error(RegistryFormat).
ContextPtr make_context(std::string_view id, std::span<const RegistryRecord> extra = {});

/// A holonomy group together with its holonomy representation T, the
/// decompositions of all form spaces Lambda^p T, and the registry of
/// q(R)-trivial bundles. Immutable after construction.
class HolonomyContext {
 public:
  const std::string& id() const { return id_; }
  ContextKind kind() const { return kind_; }
  const RootSystemPtr& root_system() const { return rs_; }
  const Irrep& holonomy_rep() const { return *holonomy_; }
  int n() const { return n_; }
  std::int64_t dim_g() const { return dim_g_; }
  bool ricci_flat() const { return ricci_flat_; }
  const std::vector<RegistryEntry>& qr_trivial_reps() const { return registry_; }

  /// Throws Error(DegreeOutOfRange) unless 0 <= p <= n.
  const Decomposition& form_space(int p) const;

  bool qr_trivial(const Irrep& e) const;
  /// Citation of the registry entry for e, if any.
  std::optional<std::string> qr_citation(const Irrep& e) const;

  /// Irrep of this context's group. Throws on bad labels.
  Irrep irrep(Labels highest_weight) const { return Irrep(rs_, std::move(highest_weight)); }

 private:
  friend ContextPtr make_context(std::string_view, std::span<const RegistryRecord>);
  HolonomyContext() = default;

  std::string id_;
  ContextKind kind_ = ContextKind::SO;
  RootSystemPtr rs_;
  std::optional<Irrep> holonomy_;
  int n_ = 0;
  std::int64_t dim_g_ = 0;
  bool ricci_flat_ = false;
  std::vector<RegistryEntry> registry_;
  std::vector<Decomposition> forms_;
};

/// Parses a registry extension: a JSON array of
/// {"context": "g2", "highest_weight": [a, b], "citation": "..."}.
/// Throws Error(RegistryFormat).
std::vector<RegistryRecord> parse_registry(std::string_view json_text);
std::vector<RegistryRecord> load_registry(const std::filesystem::path& path);

inline const Decomposition& form_space(const HolonomyContext& ctx, int p) { return ctx.form_space(p); }
inline bool qr_trivial(const HolonomyContext& ctx, const Irrep& e) { return ctx.qr_trivial(e); }

/// Lambda^2-normalized Casimir eigenvalue relative to ctx's holonomy rep.
Rational casimir_lambda2(const HolonomyContext& ctx, const Irrep& pi);

}  // namespace holweitz
