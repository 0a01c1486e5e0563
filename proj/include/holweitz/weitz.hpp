#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holweitz/holctx.hpp"

namespace holweitz {

struct WeitzenboeckSummand {
  Irrep irrep;    // E_i
  Rational b;     // conformal weight
  Rational coeff; // printed coefficient, -b
};

/// A coefficient that differs from a previously printed formula.
struct Discrepancy {
  Labels summand;
  int operator_index = 0;  // 1-based position in the printed numbering
  Rational printed;
  Rational computed;
  std::string citation;
};

/// q(R) = sum_i coeff_i T_i^* T_i on sections of the bundle modeled on e.
/// Summands follow the canonical Decomposition order of T (x) e.
struct WeitzenboeckFormula {
  std::string context;
  Irrep bundle;
  std::vector<WeitzenboeckSummand> summands;
  std::vector<Discrepancy> discrepancies;

  const WeitzenboeckSummand* find(const Labels& highest_weight) const;
};

/// Throws Error(MultiplicityViolation) if T (x) e has a repeated summand and
/// Error(MixedRootSystems) if e is not a representation of ctx's group.
WeitzenboeckFormula conformal_weights(const HolonomyContext& ctx, const Irrep& e);

/// sum_i dim(E_i) b_i; zero for every correct formula.
Rational trace_residual(const WeitzenboeckFormula& f);

/// A Weitzenboeck formula as printed in the literature, summands in the
/// printed order (which fixes the numbering T_1, T_2, ...). A missing
/// coefficient means the term was omitted from the print.
struct PrintedFormula {
  std::string context;
  Labels bundle;
  std::string name;  // e.g. "Lambda^2_14"
  std::string citation;
  struct Term {
    Labels summand;
    std::string name;
    std::optional<Rational> coeff;
  };
  std::vector<Term> terms;
};

std::span<const PrintedFormula> printed_formulas();
const PrintedFormula* find_printed(const std::string& context, const Labels& bundle);

/// 1-based index of `summand` in the printed numbering for (context, bundle),
/// falling back to the canonical position when no printed formula exists.
int operator_index(const WeitzenboeckFormula& f, const Labels& summand);

/// "q(R) = 4 T1*T1 + 4/3 T2*T2 - 1 T3*T3" in operator order, zero terms omitted.
std::string formula_text(const WeitzenboeckFormula& f);

/// Conventional name ("T", "Lambda^2_14", "V_64", ...) of an irrep in a
/// G2/Spin7 context, or its label vector otherwise.
std::string display_name(const HolonomyContext& ctx, const Irrep& irrep);

}  // namespace holweitz
