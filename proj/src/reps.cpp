#include "holweitz/reps.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "holweitz/errors.hpp"

namespace holweitz {

namespace {

// Base form on fundamental weights scaled to integers. The Freudenthal
// quotient is invariant under the scaling.
IntMatrix integral_gram(const RootSystem& rs) {
  mpz_class den = 1;
  for (const auto& row : rs.fundamental_gram())
    for (const auto& x : row) den = lcm(den, x.denominator());
  IntMatrix out(rs.rank(), std::vector<std::int64_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) {
      const Rational v = rs.fundamental_gram()[i][j] * Rational(mpq_class(den));
      out[i][j] = v.numerator().get_si();
    }
  return out;
}

std::int64_t form(const IntMatrix& g, const Labels& a, const Labels& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

Labels add(Labels a, const Labels& b, std::int64_t k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

WeightSystem freudenthal(const Irrep& irrep) {
  const RootSystem& rs = irrep.root_system();
  const Labels& top = irrep.highest_weight();
  const auto& roots = rs.positive_roots_labels();
  const IntMatrix g = integral_gram(rs);

  // Dominant weights below the highest weight, reached through chains of
  // positive roots that stay dominant.
  std::set<Labels> dominant{top};
  std::deque<Labels> queue{top};
  while (!queue.empty()) {
    const Labels mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : roots) {
      Labels nu = add(mu, a, -1);
      if (is_dominant(nu) && dominant.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<Labels> order(dominant.begin(), dominant.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](const Labels& x, const Labels& y) { return rs.level(x) > rs.level(y); });

  const Labels rho(static_cast<std::size_t>(rs.rank()), 1);
  const Labels top_rho = add(top, rho);
  const std::int64_t top_norm = form(g, top_rho, top_rho);

  WeightSystem mult;
  mult[top] = 1;
  for (const auto& mu : order) {
    if (mu == top) continue;
    const Labels mu_rho = add(mu, rho);
    const std::int64_t denom = top_norm - form(g, mu_rho, mu_rho);
    if (denom <= 0) throw std::logic_error("Freudenthal: non-positive denominator at " + to_string(mu));
    std::int64_t num = 0;
    for (const auto& a : roots) {
      for (std::int64_t k = 1;; ++k) {
        const Labels nu = add(mu, a, k);
        const auto dom = to_dominant_chamber(rs, nu).dominant;
        const auto it = mult.find(dom);
        if (it == mult.end()) break;
        num += it->second * form(g, nu, a);
      }
    }
    num *= 2;
    if (num % denom != 0) throw std::logic_error("Freudenthal: non-integral multiplicity at " + to_string(mu));
    const std::int64_t m = num / denom;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

}  // namespace

Irrep::Irrep(RootSystemPtr rs, Labels highest_weight) : rs_(std::move(rs)), hw_(std::move(highest_weight)) {
  if (!rs_) throw std::invalid_argument("Irrep: null root system");
  if (hw_.size() != static_cast<std::size_t>(rs_->rank()))
    throw Error(ErrorCode::DimensionMismatch, rs_->name() + " needs " + std::to_string(rs_->rank()) +
                                                  " labels, got " + std::to_string(hw_.size()));
  if (!is_dominant(hw_)) throw Error(ErrorCode::NotDominant, to_string(hw_));
}

bool Irrep::is_trivial() const {
  return std::all_of(hw_.begin(), hw_.end(), [](std::int64_t x) { return x == 0; });
}

std::string to_string(const Labels& labels) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ']';
  return os.str();
}

std::string to_string(const Irrep& irrep) { return irrep.root_system().name() + to_string(irrep.highest_weight()); }

std::int64_t dimension(const Irrep& irrep) {
  const RootSystem& rs = irrep.root_system();
  const Labels rho(static_cast<std::size_t>(rs.rank()), 1);
  const Labels lr = add(irrep.highest_weight(), rho);
  Rational d = 1;
  for (std::size_t k = 0; k < rs.positive_roots_labels().size(); ++k)
    d *= Rational(rs.coroot_pairing(lr, k), rs.coroot_pairing(rho, k));
  if (!d.is_integer() || !d.numerator().fits_slong_p())
    throw std::logic_error("Weyl dimension not a machine integer: " + d.str());
  return d.numerator().get_si();
}

const WeightSystem& weight_system(const Irrep& irrep) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, Labels>, WeightSystem> cache;
  const auto key = std::make_pair(irrep.root_system().name(), irrep.highest_weight());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  WeightSystem ws = freudenthal(irrep);
  std::lock_guard lock(mutex);
  // std::map never invalidates references; a concurrent fill stores an
  // identical value.
  return cache.try_emplace(key, std::move(ws)).first->second;
}

std::vector<Labels> all_weights(const Irrep& irrep) {
  std::vector<Labels> out;
  for (const auto& [mu, m] : weight_system(irrep))
    for (const auto& w : weyl_orbit_labels(irrep.root_system(), mu))
      for (std::int64_t i = 0; i < m; ++i) out.push_back(w);
  return out;
}

Rational casimir_base(const Irrep& irrep) {
  const RootSystem& rs = irrep.root_system();
  const Labels& l = irrep.highest_weight();
  Labels l2rho = l;
  for (auto& x : l2rho) x += 2;
  return -rs.inner_labels(l, l2rho);
}

std::int64_t lie_algebra_dimension(const RootSystem& rs) {
  return rs.rank() + 2 * static_cast<std::int64_t>(rs.positive_roots().size());
}

Rational casimir_lambda2(const Irrep& holonomy, const Irrep& pi) {
  if (!(holonomy.root_system() == pi.root_system()))
    throw Error(ErrorCode::MixedRootSystems, to_string(holonomy) + " vs " + to_string(pi));
  const Rational base_t = casimir_base(holonomy);
  if (base_t.is_zero()) throw Error(ErrorCode::TrivialHolonomyRep, to_string(holonomy));
  const Rational lambda2_t =
      Rational(-2 * lie_algebra_dimension(holonomy.root_system()), dimension(holonomy));
  return lambda2_t / base_t * casimir_base(pi);
}

}  // namespace holweitz
