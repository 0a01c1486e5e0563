#pragma once

#include <span>
#include <string_view>

namespace holweitz {

/// One row of the citation table surfaced in proof traces. `label` is the
/// short reference printed in traces; `statement` says what is being used.
struct Citation {
  std::string_view label;
  std::string_view statement;
};

namespace cite {
inline constexpr Citation kDefinition{"Def. twistor",
                                      "Killing forms are coclosed twistor forms; *-Killing forms are closed "
                                      "twistor forms"};
inline constexpr Citation kIntegrability{"Prop. integrabl",
                                         "on a compact manifold a Killing p-form satisfies p Lap u = q(R)u; "
                                         "closed twistor forms satisfy (n-p) Lap u = q(R)u; twistor m-forms "
                                         "in dimension 2m satisfy m Lap u = q(R)u (Lap = rough Laplacian)"};
inline constexpr Citation kRicci{"Cor. ricci",
                                 "on a compact manifold, twistor forms in a parallel subbundle on which "
                                 "q(R) acts trivially are parallel"};
inline constexpr Citation kCasimir{"Eq. casimir", "c(lambda) = -(lambda, lambda + 2 rho)"};
inline constexpr Citation kCasimirNormalization{"Lemma casimir2",
                                                "Lambda^2-normalized Casimir: c(T) = -2 dim g / dim T, and "
                                                "c(pi)/c_g(pi) is independent of pi"};
inline constexpr Citation kConformalWeights{"Cor. confW",
                                            "b_i = (c(T) + c(E) - c(E_i)) / 2 on the summand E_i of T (x) E"};
inline constexpr Citation kWeitzenboeck{"Eq. weizen3", "q(R) = - sum_i b_i T_i^* T_i"};
inline constexpr Citation kHolonomyDecomposition{"Lemma holdeco",
                                                 "under G2 or Spin7 holonomy a form is Killing (*-Killing) iff "
                                                 "all of its parallel components are"};
inline constexpr Citation kHodge{"Hodge duality",
                                 "the Hodge star maps twistor p-forms to twistor (n-p)-forms and "
                                 "interchanges Killing and *-Killing forms"};
inline constexpr Citation kTwistorTwoForms{"Twistor 2-forms",
                                           "on a compact Ricci-flat manifold the codifferential of a twistor "
                                           "2-form is dual to a parallel Killing field, hence the form is "
                                           "coclosed"};
inline constexpr Citation kMiddleDegree{"Middle degree",
                                        "in degree n/2 every parallel component of a twistor form is again a "
                                        "twistor form"};
inline constexpr Citation kSplitting{"Stein-Weiss splitting",
                                     "nabla u = sum_i T_i u, so u is parallel iff every T_i u vanishes"};
inline constexpr Citation kTwistorGap{"Twistor equation",
                                      "T_i u = 0 for a twistor form u whenever E_i occurs in neither "
                                      "Lambda^{p-1} nor Lambda^{p+1}"};
inline constexpr Citation kSchur{"Schur identification",
                                 "du = 0 (d*u = 0) forces T_i u = 0 for summands E_i occurring in Lambda^{p+1} "
                                 "(Lambda^{p-1}); assumes the equivariant factorizations of pr_i through "
                                 "d (d*) are nonzero"};
inline constexpr Citation kIntegration{"Integration",
                                       "on a compact manifold sum_i r_i |T_i u|^2 integrates to zero; if all "
                                       "r_i share a strict sign every T_i u vanishes"};
inline constexpr Citation kFinal1{"Prop. final1", "Weitzenboeck formulas on Lambda^2_14 and Lambda^3_27 (G2)"};
inline constexpr Citation kFinal2{"Prop. final2",
                                  "Weitzenboeck formulas on Lambda^2_21, Lambda^3_48, Lambda^4_27, Lambda^4_35 "
                                  "(Spin7)"};
inline constexpr Citation kMain1{"Thm. main1",
                                 "compact G2: Killing and *-Killing forms are parallel; twistor p-forms "
                                 "with p != 3,4 are parallel"};
inline constexpr Citation kMain2{"Thm. main2",
                                 "compact Spin7: Killing and *-Killing forms are parallel; twistor p-forms "
                                 "with p != 3,4,5 are parallel"};
}  // namespace cite

/// Every citation used by the library, in a fixed order.
std::span<const Citation> citation_table();

}  // namespace holweitz
