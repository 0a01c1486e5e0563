#include "holweitz/prover.hpp"

#include <algorithm>
#include <sstream>

#include "holweitz/citations.hpp"
#include "holweitz/errors.hpp"

namespace holweitz {

namespace {

std::string label(const Citation& c) { return std::string(c.label); }

void require_supported(const HolonomyContext& ctx) {
  if (!ctx.ricci_flat())
    throw Error(ErrorCode::ContextNotSupported, ctx.id() + " is not a Ricci-flat holonomy context");
}

void require_degree(const HolonomyContext& ctx, int p) {
  if (p < 1 || p > ctx.n() - 1)
    throw Error(ErrorCode::DegreeOutOfRange,
                "p = " + std::to_string(p) + " outside [1, " + std::to_string(ctx.n() - 1) + "]");
}

std::int64_t occurrences(const HolonomyContext& ctx, int p, const Irrep& e) {
  if (p < 0 || p > ctx.n()) return 0;
  return ctx.form_space(p).multiplicity(e.highest_weight());
}

std::string op_name(const HolonomyContext& ctx, const Irrep& summand, int index) {
  return "T" + std::to_string(index) + " (" + display_name(ctx, summand) + ")";
}

std::string lambda(int p) { return "Lambda^" + std::to_string(p); }

}  // namespace

std::string_view to_string(FormClass c) {
  switch (c) {
    case FormClass::Twistor: return "twistor";
    case FormClass::Killing: return "killing";
    case FormClass::StarKilling: return "star-killing";
  }
  return "?";
}

std::string_view to_string(KilledBy k) {
  switch (k) {
    case KilledBy::TwistorGap: return "TwistorGap";
    case KilledBy::Closedness: return "Closedness";
    case KilledBy::Coclosedness: return "Coclosedness";
    case KilledBy::None: return "None";
  }
  return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::Parallel ? "Parallel" : "Inconclusive"; }

std::optional<FormClass> parse_form_class(std::string_view text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "twistor") return FormClass::Twistor;
  if (t == "killing") return FormClass::Killing;
  if (t == "star-killing" || t == "*-killing" || t == "starkilling" || t == "star_killing")
    return FormClass::StarKilling;
  return std::nullopt;
}

std::vector<SummandStatus> vanishing_analysis(const HolonomyContext& ctx, const Irrep& e, int p, FormClass c) {
  require_supported(ctx);
  if (p < 0 || p > ctx.n() || occurrences(ctx, p, e) == 0)
    throw Error(ErrorCode::NotAFormComponent, to_string(e) + " does not occur in " + lambda(p) + " for " + ctx.id());
  const WeitzenboeckFormula f = conformal_weights(ctx, e);

  std::vector<SummandStatus> out;
  for (const auto& s : f.summands) {
    SummandStatus st{s.irrep, operator_index(f, s.irrep.highest_weight()), occurrences(ctx, p + 1, s.irrep),
                     occurrences(ctx, p - 1, s.irrep), KilledBy::None};
    if (st.occ_plus == 0 && st.occ_minus == 0)
      st.killed_by = KilledBy::TwistorGap;
    else if (c == FormClass::StarKilling && st.occ_plus > 0)
      st.killed_by = KilledBy::Closedness;
    else if (c == FormClass::Killing && st.occ_minus > 0)
      st.killed_by = KilledBy::Coclosedness;
    out.push_back(std::move(st));
  }
  return out;
}

std::optional<Rational> integrability_factor(FormClass c, int p, int n) {
  if (p < 1 || p > n - 1) return std::nullopt;
  switch (c) {
    case FormClass::Killing: return Rational(p);
    case FormClass::StarKilling: return Rational(n - p);
    case FormClass::Twistor: return n == 2 * p ? std::optional<Rational>(Rational(p)) : std::nullopt;
  }
  return std::nullopt;
}

ComponentVerdict prove_component(const HolonomyContext& ctx, const Irrep& e, int p, FormClass c) {
  require_supported(ctx);
  require_degree(ctx, p);
  if (occurrences(ctx, p, e) == 0)
    throw Error(ErrorCode::NotAFormComponent, to_string(e) + " does not occur in " + lambda(p) + " for " + ctx.id());

  ComponentVerdict v{e, p, c, {}, std::nullopt, {}, Verdict::Inconclusive, {}};
  const std::string bundle = display_name(ctx, e);

  if (const auto why = ctx.qr_citation(e)) {
    v.verdict = Verdict::Parallel;
    v.trace.push_back({"registry", label(cite::kRicci),
                       "q(R) acts trivially on " + bundle + " (registry: " + *why + "); twistor forms in it are parallel"});
    return v;
  }

  v.statuses = vanishing_analysis(ctx, e, p, c);
  const WeitzenboeckFormula f = conformal_weights(ctx, e);

  for (const auto& st : v.statuses) {
    const std::string op = op_name(ctx, st.summand, st.operator_index);
    switch (st.killed_by) {
      case KilledBy::TwistorGap:
        v.trace.push_back({"twistor-gap", label(cite::kTwistorGap),
                           op + " vanishes: the summand occurs in neither " + lambda(p - 1) + " nor " +
                               lambda(p + 1)});
        break;
      case KilledBy::Closedness:
        v.trace.push_back({"closedness", label(cite::kSchur),
                           op + " vanishes: du = 0 and the summand occurs in " + lambda(p + 1) +
                               " (assumes pr factors nontrivially through d)"});
        break;
      case KilledBy::Coclosedness:
        v.trace.push_back({"coclosedness", label(cite::kSchur),
                           op + " vanishes: d*u = 0 and the summand occurs in " + lambda(p - 1) +
                               " (assumes pr factors nontrivially through d*)"});
        break;
      case KilledBy::None: break;
    }
  }

  std::vector<const SummandStatus*> alive;
  for (const auto& st : v.statuses)
    if (st.killed_by == KilledBy::None) alive.push_back(&st);

  if (alive.empty()) {
    v.verdict = Verdict::Parallel;
    v.trace.push_back({"all-vanish", label(cite::kSplitting), "all twistor operators vanish on u, so u is parallel"});
    return v;
  }

  v.factor = integrability_factor(c, p, ctx.n());
  if (!v.factor) {
    std::string names;
    for (const auto* st : alive) names += (names.empty() ? "" : ", ") + op_name(ctx, st->summand, st->operator_index);
    v.trace.push_back({"no-integrability", label(cite::kIntegrability),
                       "no integrability identity for " + std::string(to_string(c)) + " forms of degree " +
                           std::to_string(p) + " in dimension " + std::to_string(ctx.n()) + "; " + names +
                           " not controlled"});
    return v;
  }

  v.trace.push_back({"integrability", label(cite::kIntegrability),
                     v.factor->str() + " nabla*nabla u = q(R) u for " + std::string(to_string(c)) + " " +
                         std::to_string(p) + "-forms"});

  v.trace.push_back({"weitzenboeck", label(cite::kWeitzenboeck), "on " + bundle + ": " + formula_text(f)});

  bool any_pos = false, any_neg = false, any_zero = false;
  std::ostringstream combo;
  combo << "0 = " << v.factor->str() << " nabla*nabla u - q(R)u =";
  for (const auto* st : alive) {
    const auto* s = f.find(st->summand.highest_weight());
    const Rational residual = *v.factor + s->b;
    v.survivors.push_back({st->summand, st->operator_index, s->coeff, residual});
    any_pos |= residual.sign() > 0;
    any_neg |= residual.sign() < 0;
    any_zero |= residual.is_zero();
    combo << (v.survivors.size() > 1 ? " +" : "") << " (" << v.factor->str()
          << (s->coeff.sign() < 0 ? " + " : " - ") << (s->coeff.sign() < 0 ? -s->coeff : s->coeff).str() << ") T"
          << st->operator_index << "*T" << st->operator_index << " u";
  }
  v.trace.push_back({"residual", label(cite::kConformalWeights), combo.str()});

  if (!any_zero && !(any_pos && any_neg)) {
    v.verdict = Verdict::Parallel;
    v.trace.push_back({"integration", label(cite::kIntegration),
                       std::string("all residuals are strictly ") + (any_pos ? "positive" : "negative") +
                           "; integrating over the compact manifold kills every surviving T_i u, so u is parallel"});
  } else {
    v.trace.push_back({"sign-check", label(cite::kIntegration),
                       any_zero ? "a surviving residual is zero; the identity does not control that operator"
                                : "surviving residuals have mixed signs; no conclusion"});
  }
  return v;
}

DegreeReport prove_degree(const HolonomyContext& ctx, int p, FormClass c) {
  require_supported(ctx);
  require_degree(ctx, p);
  DegreeReport r;
  r.context = ctx.id();
  r.degree = p;
  r.form_class = c;
  r.analyzed_degree = p;
  r.analyzed_class = c;
  r.hypotheses = {"M compact", "Hol(M, g) equals " + ctx.id() + " (Ricci-flat)"};
  const int n = ctx.n();

  if (c == FormClass::Twistor) {
    if (n - p == 2 && p != 2) {
      r.reductions.push_back({"R1", label(cite::kHodge),
                              "the Hodge star maps twistor " + std::to_string(p) + "-forms to twistor 2-forms"});
      r.analyzed_degree = 2;
    }
    if (r.analyzed_degree == 2) {
      r.reductions.push_back({"R2", label(cite::kTwistorTwoForms),
                              "a twistor 2-form on a compact Ricci-flat manifold is coclosed, hence Killing"});
      r.analyzed_class = FormClass::Killing;
      r.componentwise = true;
      r.reductions.push_back({"componentwise", label(cite::kHolonomyDecomposition),
                              "a Killing form is Killing componentwise"});
    } else if (n == 2 * p) {
      r.componentwise = true;
      r.reductions.push_back({"componentwise", label(cite::kMiddleDegree),
                              "degree " + std::to_string(p) + " is the middle degree"});
    } else if (ctx.form_space(p).size() == 1 && ctx.form_space(p).entries().front().multiplicity == 1) {
      r.componentwise = true;
      r.reductions.push_back({"componentwise", label(cite::kDefinition),
                              lambda(p) + " is irreducible; the form is its own component"});
    } else {
      r.reductions.push_back({"no-reduction", label(cite::kDefinition),
                              "components of a twistor " + std::to_string(p) +
                                  "-form need not be twistor forms; component verdicts are diagnostic only"});
    }
  } else {
    r.componentwise = true;
    r.reductions.push_back({"componentwise", label(cite::kHolonomyDecomposition),
                            std::string(c == FormClass::Killing ? "Killing" : "*-Killing") +
                                " forms decompose into " + (c == FormClass::Killing ? "Killing" : "*-Killing") +
                                " components"});
  }

  bool all_parallel = true;
  for (const auto& entry : ctx.form_space(r.analyzed_degree).entries()) {
    r.components.push_back(prove_component(ctx, entry.irrep, r.analyzed_degree, r.analyzed_class));
    all_parallel &= r.components.back().verdict == Verdict::Parallel;
  }
  r.verdict = r.componentwise && all_parallel ? Verdict::Parallel : Verdict::Inconclusive;
  return r;
}

std::vector<Claim> theorem_claims(const HolonomyContext& ctx) {
  std::vector<Claim> out;
  std::vector<int> twistor;
  if (ctx.kind() == ContextKind::G2)
    twistor = {1, 2, 5, 6};
  else if (ctx.kind() == ContextKind::Spin7)
    twistor = {1, 2, 6, 7};
  else
    throw Error(ErrorCode::ContextNotSupported, ctx.id() + " has no parallelism theorem");
  for (int p = 1; p < ctx.n(); ++p) out.push_back({FormClass::Killing, p});
  for (int p = 1; p < ctx.n(); ++p) out.push_back({FormClass::StarKilling, p});
  for (int p : twistor) out.push_back({FormClass::Twistor, p});
  std::sort(out.begin(), out.end());
  return out;
}

TheoremReport prove_theorems(const HolonomyContext& ctx) {
  if (ctx.kind() != ContextKind::G2 && ctx.kind() != ContextKind::Spin7)
    throw Error(ErrorCode::ContextNotSupported, ctx.id() + " has no parallelism theorem");
  TheoremReport t;
  t.context = ctx.id();
  t.citation = label(ctx.kind() == ContextKind::G2 ? cite::kMain1 : cite::kMain2);
  t.expected = theorem_claims(ctx);
  for (FormClass c : {FormClass::Killing, FormClass::StarKilling, FormClass::Twistor}) {
    for (int p = 1; p < ctx.n(); ++p) {
      t.degrees.push_back(prove_degree(ctx, p, c));
      (t.degrees.back().verdict == Verdict::Parallel ? t.parallel : t.inconclusive).push_back({c, p});
    }
  }
  std::sort(t.parallel.begin(), t.parallel.end());
  std::sort(t.inconclusive.begin(), t.inconclusive.end());
  t.matches_claims = t.parallel == t.expected;
  return t;
}

}  // namespace holweitz
