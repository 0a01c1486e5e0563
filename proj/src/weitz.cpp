#include "holweitz/weitz.hpp"

#include <algorithm>
#include <map>

#include "holweitz/citations.hpp"
#include "holweitz/errors.hpp"

namespace holweitz {

namespace {

using Term = PrintedFormula::Term;

std::vector<PrintedFormula> build_printed() {
  const std::string f1(cite::kFinal1.label), f2(cite::kFinal2.label);
  return {
      {"g2", {0, 1}, "Lambda^2_14", f1,
       {Term{{1, 0}, "T", Rational(4)}, Term{{2, 0}, "Lambda^3_27", Rational(4, 3)},
        Term{{1, 1}, "V_64", Rational(-1)}}},
      {"g2", {2, 0}, "Lambda^3_27", f1,
       {Term{{1, 0}, "T", Rational(14, 3)}, Term{{2, 0}, "Lambda^4_27", Rational(2)},
        Term{{0, 1}, "Lambda^2_14", Rational(8, 3)}, Term{{1, 1}, "V_64", Rational(-1, 3)},
        Term{{3, 0}, "V-_77", Rational(-4, 3)}}},
      {"spin7", {0, 1, 0}, "Lambda^2_21", f2,
       {Term{{0, 0, 1}, "T", Rational(10)}, Term{{1, 0, 1}, "Lambda^3_48", Rational(3)},
        Term{{0, 1, 1}, "Va_112", Rational(-1)}}},
      {"spin7", {1, 0, 1}, "Lambda^3_48", f2,
       {Term{{0, 0, 2}, "Lambda^4_35", Rational(11, 4)}, Term{{0, 1, 0}, "Lambda^2_21", Rational(15, 4)},
        Term{{1, 0, 0}, "Lambda^2_7", Rational(23, 4)}, Term{{2, 0, 0}, "Lambda^4_27", Rational(7, 4)},
        Term{{1, 1, 0}, "V_105", Rational(-1, 4)}, Term{{1, 0, 2}, "V_189", Rational(-5, 4)}}},
      {"spin7", {2, 0, 0}, "Lambda^4_27", f2,
       {Term{{1, 0, 1}, "Lambda^3_48", Rational(7, 2)}, Term{{2, 0, 1}, "V_168", Rational(-2)}}},
      {"spin7", {0, 0, 2}, "Lambda^4_35", f2,
       {Term{{0, 0, 1}, "T", Rational(6)}, Term{{1, 0, 1}, "Lambda^3_48", Rational(5, 2)},
        Term{{0, 1, 1}, "Va_112", std::nullopt}, Term{{0, 0, 3}, "Vb_112", Rational(-3, 2)}}},
  };
}

const std::map<std::pair<std::string, Labels>, std::string>& names() {
  static const std::map<std::pair<std::string, Labels>, std::string> table{
      {{"g2", {0, 0}}, "C"},
      {{"g2", {1, 0}}, "T"},
      {{"g2", {0, 1}}, "Lambda^2_14"},
      {{"g2", {2, 0}}, "Lambda^3_27"},
      {{"g2", {1, 1}}, "V_64"},
      {{"g2", {3, 0}}, "V-_77"},
      {{"spin7", {0, 0, 0}}, "C"},
      {{"spin7", {0, 0, 1}}, "T"},
      {{"spin7", {1, 0, 0}}, "Lambda^2_7"},
      {{"spin7", {0, 1, 0}}, "Lambda^2_21"},
      {{"spin7", {2, 0, 0}}, "Lambda^4_27"},
      {{"spin7", {0, 0, 2}}, "Lambda^4_35"},
      {{"spin7", {1, 0, 1}}, "Lambda^3_48"},
      {{"spin7", {1, 1, 0}}, "V_105"},
      {{"spin7", {0, 1, 1}}, "Va_112"},
      {{"spin7", {0, 0, 3}}, "Vb_112"},
      {{"spin7", {2, 0, 1}}, "V_168"},
      {{"spin7", {1, 0, 2}}, "V_189"},
  };
  return table;
}

}  // namespace

const WeitzenboeckSummand* WeitzenboeckFormula::find(const Labels& highest_weight) const {
  for (const auto& s : summands)
    if (s.irrep.highest_weight() == highest_weight) return &s;
  return nullptr;
}

std::span<const PrintedFormula> printed_formulas() {
  static const std::vector<PrintedFormula> table = build_printed();
  return table;
}

const PrintedFormula* find_printed(const std::string& context, const Labels& bundle) {
  for (const auto& f : printed_formulas())
    if (f.context == context && f.bundle == bundle) return &f;
  return nullptr;
}

int operator_index(const WeitzenboeckFormula& f, const Labels& summand) {
  if (const auto* printed = find_printed(f.context, f.bundle.highest_weight())) {
    for (std::size_t i = 0; i < printed->terms.size(); ++i)
      if (printed->terms[i].summand == summand) return static_cast<int>(i) + 1;
  }
  for (std::size_t i = 0; i < f.summands.size(); ++i)
    if (f.summands[i].irrep.highest_weight() == summand) return static_cast<int>(i) + 1;
  return 0;
}

std::string display_name(const HolonomyContext& ctx, const Irrep& irrep) {
  const auto it = names().find({ctx.id(), irrep.highest_weight()});
  if (it != names().end()) return it->second;
  return to_string(irrep.highest_weight());
}

WeitzenboeckFormula conformal_weights(const HolonomyContext& ctx, const Irrep& e) {
  if (!(e.root_system() == *ctx.root_system()))
    throw Error(ErrorCode::MixedRootSystems, to_string(e) + " is not a representation of " + ctx.id());
  const Decomposition dec = tensor(ctx.holonomy_rep(), e);
  for (const auto& entry : dec.entries())
    if (entry.multiplicity != 1)
      throw Error(ErrorCode::MultiplicityViolation, to_string(entry.irrep) + " occurs " +
                                                        std::to_string(entry.multiplicity) + " times in T (x) " +
                                                        to_string(e));

  const Rational c_t = casimir_lambda2(ctx, ctx.holonomy_rep());
  const Rational c_e = casimir_lambda2(ctx, e);
  WeitzenboeckFormula f{ctx.id(), e, {}, {}};
  for (const auto& entry : dec.entries()) {
    const Rational b = Rational(1, 2) * (c_t + c_e - casimir_lambda2(ctx, entry.irrep));
    f.summands.push_back({entry.irrep, b, -b});
  }

  if (const auto* printed = find_printed(ctx.id(), e.highest_weight())) {
    for (std::size_t i = 0; i < printed->terms.size(); ++i) {
      const auto& term = printed->terms[i];
      const auto* computed = f.find(term.summand);
      if (computed == nullptr) continue;
      const Rational shown = term.coeff.value_or(Rational(0));
      if (shown != computed->coeff)
        f.discrepancies.push_back({term.summand, static_cast<int>(i) + 1, shown, computed->coeff, printed->citation});
    }
  }
  return f;
}

std::string formula_text(const WeitzenboeckFormula& f) {
  std::vector<std::pair<int, const WeitzenboeckSummand*>> order;
  for (const auto& s : f.summands) order.emplace_back(operator_index(f, s.irrep.highest_weight()), &s);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "q(R) =";
  bool first = true;
  for (const auto& [i, s] : order) {
    if (s->coeff.is_zero()) continue;
    const bool neg = s->coeff.sign() < 0;
    out += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
    out += (neg ? -s->coeff : s->coeff).str() + " T" + std::to_string(i) + "*T" + std::to_string(i);
    first = false;
  }
  return first ? out + " 0" : out;
}

Rational trace_residual(const WeitzenboeckFormula& f) {
  Rational s;
  for (const auto& term : f.summands) s += Rational(dimension(term.irrep)) * term.b;
  return s;
}

}  // namespace holweitz
