#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holweitz/liealg.hpp"
#include "holweitz/rational.hpp"

namespace holweitz {

/// Irreducible representation, identified by a dominant integral highest
/// weight given in Dynkin labels.
class Irrep {
 public:
  /// Throws Error(DimensionMismatch) on a label count different from the
  /// rank and Error(NotDominant) on a negative label.
  Irrep(RootSystemPtr rs, Labels highest_weight);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Labels& highest_weight() const { return hw_; }
  Weight highest_weight_vector() const { return rs_->from_labels(hw_); }
  bool is_trivial() const;

  friend bool operator==(const Irrep& a, const Irrep& b) {
    return a.hw_ == b.hw_ && (a.rs_ == b.rs_ || *a.rs_ == *b.rs_);
  }

 private:
  RootSystemPtr rs_;
  Labels hw_;
};

/// "[2,0]" style rendering of the highest weight.
std::string to_string(const Labels& labels);
std::string to_string(const Irrep& irrep);

/// Dominant weight -> multiplicity.
using WeightSystem = std::map<Labels, std::int64_t>;

std::int64_t dimension(const Irrep& irrep);

/// Dominant weights and their multiplicities (Freudenthal recursion).
/// Results are memoized process-wide; the cache is mutex guarded.
const WeightSystem& weight_system(const Irrep& irrep);

/// Every weight of the representation, repeated according to multiplicity;
/// its length equals dimension(irrep). Deterministic order.
std::vector<Labels> all_weights(const Irrep& irrep);

/// -(lambda, lambda + 2 rho) under the root system's base form.
Rational casimir_base(const Irrep& irrep);

/// Dimension of the Lie algebra: rank + 2 * (number of positive roots).
std::int64_t lie_algebra_dimension(const RootSystem& rs);

/// Casimir eigenvalue of `pi` normalized by the scalar product that the
/// holonomy representation `holonomy` induces on g inside Lambda^2:
/// c(pi) = (c_T / c_base(T)) * c_base(pi), with c_T = -2 dim g / dim T.
/// Throws Error(TrivialHolonomyRep) if `holonomy` is trivial.
Rational casimir_lambda2(const Irrep& holonomy, const Irrep& pi);

}  // namespace holweitz
