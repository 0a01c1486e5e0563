#include "holweitz/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "holweitz/errors.hpp"

namespace holweitz {

Decomposition::Decomposition(RootSystemPtr rs, const std::map<Labels, std::int64_t>& counts) {
  std::vector<std::pair<std::int64_t, DecompositionEntry>> keyed;
  for (const auto& [hw, m] : counts) {
    if (m == 0) continue;
    Irrep irrep(rs, hw);
    const std::int64_t d = dimension(irrep);
    keyed.push_back({d, DecompositionEntry{std::move(irrep), m}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.irrep.highest_weight() < y.second.irrep.highest_weight();
  });
  for (auto& k : keyed) entries_.push_back(std::move(k.second));
}

std::int64_t Decomposition::multiplicity(const Labels& highest_weight) const {
  for (const auto& e : entries_)
    if (e.irrep.highest_weight() == highest_weight) return e.multiplicity;
  return 0;
}

std::int64_t Decomposition::total_dimension() const {
  std::int64_t s = 0;
  for (const auto& e : entries_) s += e.multiplicity * dimension(e.irrep);
  return s;
}

bool Decomposition::multiplicity_free() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.multiplicity == 1; });
}

std::vector<Irrep> Decomposition::irreps() const {
  std::vector<Irrep> out;
  for (const auto& e : entries_) out.push_back(e.irrep);
  return out;
}

Decomposition tensor(const Irrep& a, const Irrep& b) {
  if (!(a.root_system() == b.root_system()))
    throw Error(ErrorCode::MixedRootSystems, to_string(a) + " (x) " + to_string(b));
  const bool a_smaller = dimension(a) < dimension(b);
  const Irrep& small = a_smaller ? a : b;
  const Irrep& big = a_smaller ? b : a;
  const RootSystem& rs = a.root_system();

  std::map<Labels, std::int64_t> acc;
  Labels shifted = big.highest_weight();
  for (auto& x : shifted) x += 1;  // lambda + rho
  for (const auto& nu : all_weights(small)) {
    Labels w = shifted;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += nu[i];
    auto res = to_dominant_chamber(rs, std::move(w));
    if (res.singular) continue;
    for (auto& x : res.dominant) x -= 1;
    acc[res.dominant] += res.parity;
  }
  for (const auto& [hw, m] : acc)
    if (m < 0)
      throw Error(ErrorCode::InternalNegativeMultiplicity,
                  to_string(hw) + " in " + to_string(a) + " (x) " + to_string(b));
  return Decomposition(a.root_system_ptr(), acc);
}

Decomposition exterior_power(const Irrep& t, int p) {
  const std::int64_t d = dimension(t);
  if (p < 0 || p > d)
    throw Error(ErrorCode::DegreeOutOfRange, "p = " + std::to_string(p) + " for dim " + std::to_string(d));
  const std::vector<Labels> weights = all_weights(t);
  const std::size_t rank = static_cast<std::size_t>(t.root_system().rank());

  Character chr;
  std::vector<std::size_t> idx(static_cast<std::size_t>(p));
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = weights.size();
  while (true) {
    Labels sum(rank, 0);
    for (std::size_t k : idx)
      for (std::size_t i = 0; i < rank; ++i) sum[i] += weights[k][i];
    if (is_dominant(sum)) ++chr[sum];

    // Next p-subset in lexicographic order.
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(p) - 1;
    while (pos >= 0 && idx[pos] == n - static_cast<std::size_t>(p) + static_cast<std::size_t>(pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (std::size_t k = static_cast<std::size_t>(pos) + 1; k < idx.size(); ++k) idx[k] = idx[k - 1] + 1;
  }
  return decompose_character(t.root_system_ptr(), std::move(chr));
}

Decomposition decompose_character(const RootSystemPtr& rs, Character chr) {
  std::map<Labels, std::int64_t> found;
  std::erase_if(chr, [](const auto& kv) { return kv.second == 0; });
  while (!chr.empty()) {
    auto top = chr.begin();
    for (auto it = chr.begin(); it != chr.end(); ++it) {
      const auto lt = rs->level(it->first), ltop = rs->level(top->first);
      if (lt > ltop || (lt == ltop && it->first > top->first)) top = it;
    }
    const Labels hw = top->first;
    const std::int64_t m = top->second;
    if (m < 0 || !is_dominant(hw))
      throw Error(ErrorCode::NotACharacter, "negative multiplicity at " + to_string(hw));
    found[hw] += m;
    for (const auto& [mu, k] : weight_system(Irrep(rs, hw))) {
      auto& slot = chr[mu];
      slot -= m * k;
      if (slot < 0) throw Error(ErrorCode::NotACharacter, "negative multiplicity at " + to_string(mu));
    }
    std::erase_if(chr, [](const auto& kv) { return kv.second == 0; });
  }
  return Decomposition(rs, found);
}

Character product_character(const Irrep& a, const Irrep& b) {
  if (!(a.root_system() == b.root_system()))
    throw Error(ErrorCode::MixedRootSystems, to_string(a) + " (x) " + to_string(b));
  Character out;
  const auto wa = all_weights(a);
  const auto wb = all_weights(b);
  for (const auto& mu : wa) {
    for (const auto& nu : wb) {
      Labels s = mu;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += nu[i];
      if (is_dominant(s)) ++out[s];
    }
  }
  return out;
}

}  // namespace holweitz
