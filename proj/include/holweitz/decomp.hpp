#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "holweitz/reps.hpp"

namespace holweitz {

struct DecompositionEntry {
  Irrep irrep;
  std::int64_t multiplicity;

  friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

/// Multiset of irreducibles, kept sorted by (dimension, highest weight).
class Decomposition {
 public:
  Decomposition() = default;
  /// Builds from highest weight -> multiplicity; zero entries are dropped.
  Decomposition(RootSystemPtr rs, const std::map<Labels, std::int64_t>& counts);

  const std::vector<DecompositionEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::int64_t multiplicity(const Labels& highest_weight) const;
  std::int64_t total_dimension() const;
  bool multiplicity_free() const;
  std::vector<Irrep> irreps() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<DecompositionEntry> entries_;
};

/// Dominant weight -> (possibly virtual) multiplicity.
using Character = std::map<Labels, std::int64_t>;

/// Klimyk's rule, iterating over the weights of the smaller factor (the
/// right one on a tie). Throws Error(MixedRootSystems).
Decomposition tensor(const Irrep& a, const Irrep& b);

/// Lambda^p of `t` by explicit enumeration of p-subsets of its weights.
/// Throws Error(DegreeOutOfRange) unless 0 <= p <= dim t.
Decomposition exterior_power(const Irrep& t, int p);

/// Greedy highest-weight extraction. Throws Error(NotACharacter) if a
/// multiplicity goes negative along the way.
Decomposition decompose_character(const RootSystemPtr& rs, Character chr);

/// Dominant part of the product of the two characters, computed by direct
/// convolution of weight multisets.
Character product_character(const Irrep& a, const Irrep& b);

}  // namespace holweitz
