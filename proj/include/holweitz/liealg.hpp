#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "holweitz/rational.hpp"

namespace holweitz {

enum class Family { A, B, C, D, G };

char family_letter(Family f);

/// Dynkin labels: coordinates with respect to the fundamental weights.
using Labels = std::vector<std::int64_t>;

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A weight in the ambient (orthogonal-model) coordinates of its root system.
struct Weight {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
};

std::string to_string(const Weight& w);

/// Result of reflecting a weight into the closed dominant chamber.
struct ChamberResult {
  Weight dominant;
  int parity = 1;  // determinant of the Weyl element used; +1 when singular
  bool singular = false;
  // Simple reflections applied to the input, in order. Applying them in
  // reverse order to `dominant` recovers the input.
  std::vector<int> word;
};

/// Label-level counterpart of ChamberResult.
struct LabelChamberResult {
  Labels dominant;
  int parity = 1;
  bool singular = false;
};

/// Root system of one simple Lie algebra of classical type A-D or G2, with
/// exact rational geometry.
///
/// Coordinate models: A_r lives in the sum-zero hyperplane of Q^{r+1};
/// B_r, C_r, D_r use the standard e-coordinates of Q^r. G2 uses coordinates
/// with respect to its simple roots (short root first) and a Gram matrix
/// normalized so that the short simple root, and the fundamental weight of
/// the 7-dimensional representation, have square length 1.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int coord_dim() const { return static_cast<int>(base_form_.size()); }
  std::string name() const;

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Positive roots as integer coefficient vectors over the simple roots,
  /// in the same order as positive_roots().
  const std::vector<Labels>& positive_roots_simple() const { return positive_simple_; }
  const RationalMatrix& base_form() const { return base_form_; }
  const Weight& rho() const { return rho_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  /// Gram matrix of the fundamental weights, (omega_i, omega_j).
  const RationalMatrix& fundamental_gram() const { return fundamental_gram_; }

  Rational inner(const Weight& u, const Weight& v) const;
  Rational inner_labels(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;

  /// Fundamental-weight coordinates of w; rational when w is not integral.
  std::vector<Rational> to_fundamental(const Weight& w) const;
  std::optional<Labels> to_labels(const Weight& w) const;
  Weight from_fundamental(std::span<const Rational> coeffs) const;
  Weight from_labels(std::span<const std::int64_t> labels) const;

  /// Positive roots expressed in Dynkin labels.
  const std::vector<Labels>& positive_roots_labels() const { return positive_labels_; }
  /// Integer coroot coefficients: <lambda, alpha^vee> = sum_i c_i lambda_i.
  const std::vector<Labels>& positive_coroots_simple() const { return positive_coroots_; }
  std::int64_t coroot_pairing(std::span<const std::int64_t> labels, std::size_t root_index) const;

  /// Sum over positive coroots of the labels; a strictly increasing function
  /// along the dominance order, used to pick maximal weights.
  std::int64_t level(std::span<const std::int64_t> labels) const;

  /// Reflection in the i-th simple root, acting on labels in place.
  void reflect_labels(Labels& labels, int i) const;

  /// Same root system with base_form multiplied by a positive rational.
  RootSystem scaled(const Rational& factor) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.base_form_ == b.base_form_;
  }

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(Family, int);
  RootSystem() = default;
  void finish();

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<Weight> simple_roots_;
  IntMatrix cartan_;
  RationalMatrix base_form_;
  std::vector<Weight> positive_roots_;
  std::vector<Labels> positive_simple_;
  std::vector<Labels> positive_labels_;
  std::vector<Labels> positive_coroots_;
  std::vector<Weight> fundamental_;
  RationalMatrix fundamental_gram_;
  Weight rho_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Supported: A (r>=1), B (r>=2), C (r>=2), D (r>=3), G (r=2).
/// Throws Error(UnsupportedType) otherwise.
RootSystemPtr build_root_system(Family family, int rank);

/// Parses selectors such as "G2", "B3", "a1". Throws Error(UnsupportedType).
RootSystemPtr parse_root_system(const std::string& selector);

Rational inner(const RootSystem& rs, const Weight& u, const Weight& v);

ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& w);
LabelChamberResult to_dominant_chamber(const RootSystem& rs, Labels labels);

/// Full Weyl orbit of a dominant weight. Throws Error(NotDominant).
std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);
std::vector<Labels> weyl_orbit_labels(const RootSystem& rs, const Labels& dominant);

bool is_dominant(std::span<const std::int64_t> labels);

}  // namespace holweitz
