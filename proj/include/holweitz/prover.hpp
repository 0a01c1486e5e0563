#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holweitz/weitz.hpp"

namespace holweitz {

/// Killing = coclosed twistor form, StarKilling = closed twistor form.
enum class FormClass { Twistor, Killing, StarKilling };
enum class KilledBy { TwistorGap, Closedness, Coclosedness, None };
enum class Verdict { Parallel, Inconclusive };

std::string_view to_string(FormClass c);
std::string_view to_string(KilledBy k);
std::string_view to_string(Verdict v);
/// Accepts "twistor", "killing", "star-killing" (also "*-killing", "starkilling").
std::optional<FormClass> parse_form_class(std::string_view text);

struct SummandStatus {
  Irrep summand;
  int operator_index = 0;       // printed numbering T_i when known
  std::int64_t occ_plus = 0;    // multiplicity in Lambda^{p+1}
  std::int64_t occ_minus = 0;   // multiplicity in Lambda^{p-1}
  KilledBy killed_by = KilledBy::None;
};

struct TraceStep {
  std::string rule;
  std::string citation;
  std::string detail;
};

struct Survivor {
  Irrep summand;
  int operator_index = 0;
  Rational coeff;     // Weitzenboeck coefficient of T_i^* T_i
  Rational residual;  // factor + b_i
};

struct ComponentVerdict {
  Irrep bundle;
  int degree = 0;
  FormClass form_class = FormClass::Twistor;
  std::vector<SummandStatus> statuses;
  std::optional<Rational> factor;
  std::vector<Survivor> survivors;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<TraceStep> trace;
};

struct DegreeReport {
  std::string context;
  int degree = 0;
  FormClass form_class = FormClass::Twistor;
  // Degree and class actually analyzed after the reduction rules.
  int analyzed_degree = 0;
  FormClass analyzed_class = FormClass::Twistor;
  bool componentwise = false;
  std::vector<TraceStep> reductions;
  std::vector<ComponentVerdict> components;
  std::vector<std::string> hypotheses;
  Verdict verdict = Verdict::Inconclusive;
};

struct Claim {
  FormClass form_class;
  int degree;
  friend auto operator<=>(const Claim&, const Claim&) = default;
};

struct TheoremReport {
  std::string context;
  std::string citation;
  std::vector<DegreeReport> degrees;
  std::vector<Claim> parallel;
  std::vector<Claim> inconclusive;
  std::vector<Claim> expected;  // the theorem's claim set
  bool matches_claims = false;
};

/// Which summands of T (x) e are forced to vanish on a form of the given
/// class. Throws Error(ContextNotSupported) for non-Ricci-flat contexts,
/// Error(NotAFormComponent) if e does not occur in Lambda^p and
/// Error(MultiplicityViolation) if T (x) e is not multiplicity free.
std::vector<SummandStatus> vanishing_analysis(const HolonomyContext& ctx, const Irrep& e, int p, FormClass c);

/// f such that f * (rough Laplacian) u = q(R) u: p for Killing, n - p for
/// StarKilling, p for Twistor when n = 2p; absent otherwise.
std::optional<Rational> integrability_factor(FormClass c, int p, int n);

ComponentVerdict prove_component(const HolonomyContext& ctx, const Irrep& e, int p, FormClass c);
DegreeReport prove_degree(const HolonomyContext& ctx, int p, FormClass c);
/// Throws Error(ContextNotSupported) unless ctx is g2 or spin7.
TheoremReport prove_theorems(const HolonomyContext& ctx);

/// The claim set of the parallelism theorem for ctx (g2 or spin7).
std::vector<Claim> theorem_claims(const HolonomyContext& ctx);

}  // namespace holweitz
