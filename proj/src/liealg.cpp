#include "holweitz/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "holweitz/errors.hpp"

namespace holweitz {

namespace {

Weight unit(int dim, int i, const Rational& s = 1) {
  Weight w{std::vector<Rational>(static_cast<std::size_t>(dim))};
  w.coords[static_cast<std::size_t>(i)] = s;
  return w;
}

RationalMatrix identity(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Gauss-Jordan inverse over the rationals.
RationalMatrix invert(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv = identity(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::int64_t to_int(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("expected an integer, got " + r.str());
  return r.numerator().get_si();
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_zero(); });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "weight addition");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "weight subtraction");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(const Rational& s, Weight w) {
  for (auto& c : w.coords) c *= s;
  return w;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ')';
  return os.str();
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

Rational RootSystem::inner(const Weight& u, const Weight& v) const {
  const auto n = base_form_.size();
  if (u.size() != n || v.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "weight of length " + std::to_string(u.size()) + "/" + std::to_string(v.size()) + " for " + name());
  Rational s;
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!v.coords[j].is_zero() && !base_form_[i][j].is_zero()) s += u.coords[i] * base_form_[i][j] * v.coords[j];
  }
  return s;
}

Rational RootSystem::inner_labels(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const {
  if (u.size() != static_cast<std::size_t>(rank_) || v.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::DimensionMismatch, "label vector length for " + name());
  Rational s;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (v[j] != 0) s += Rational(u[i] * v[j]) * fundamental_gram_[i][j];
  }
  return s;
}

std::vector<Rational> RootSystem::to_fundamental(const Weight& w) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (const auto& a : simple_roots_) out.push_back(Rational(2) * inner(w, a) / inner(a, a));
  return out;
}

std::optional<Labels> RootSystem::to_labels(const Weight& w) const {
  Labels out;
  for (const auto& c : to_fundamental(w)) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.numerator().get_si());
  }
  return out;
}

Weight RootSystem::from_fundamental(std::span<const Rational> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rank_) + " fundamental coordinates");
  Weight w{std::vector<Rational>(base_form_.size())};
  for (int i = 0; i < rank_; ++i)
    if (!coeffs[i].is_zero()) w += coeffs[i] * fundamental_[i];
  return w;
}

Weight RootSystem::from_labels(std::span<const std::int64_t> labels) const {
  std::vector<Rational> c(labels.begin(), labels.end());
  return from_fundamental(c);
}

std::int64_t RootSystem::coroot_pairing(std::span<const std::int64_t> labels, std::size_t root_index) const {
  const auto& c = positive_coroots_[root_index];
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += c[i] * labels[i];
  return s;
}

std::int64_t RootSystem::level(std::span<const std::int64_t> labels) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < positive_coroots_.size(); ++k) s += coroot_pairing(labels, k);
  return s;
}

void RootSystem::reflect_labels(Labels& labels, int i) const {
  const std::int64_t m = labels[i];
  if (m == 0) return;
  for (int j = 0; j < rank_; ++j) labels[j] -= m * cartan_[i][j];
}

RootSystem RootSystem::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw std::invalid_argument("base form scaling must be positive");
  RootSystem copy = *this;
  for (auto& row : copy.base_form_)
    for (auto& x : row) x *= factor;
  for (auto& row : copy.fundamental_gram_)
    for (auto& x : row) x *= factor;
  return copy;
}

void RootSystem::finish() {
  const int r = rank_;
  cartan_.assign(r, std::vector<std::int64_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      cartan_[i][j] = to_int(Rational(2) * inner(simple_roots_[i], simple_roots_[j]) /
                             inner(simple_roots_[j], simple_roots_[j]));

  // Positive roots by closure: beta + alpha_i is a root iff q > 0 where the
  // alpha_i-string through beta is beta - p alpha_i, ..., beta + q alpha_i.
  std::set<Labels> known;
  std::vector<std::vector<Labels>> by_height(1);
  for (int i = 0; i < r; ++i) {
    Labels e(r, 0);
    e[i] = 1;
    by_height[0].push_back(e);
    known.insert(e);
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::vector<Labels> next;
    for (const auto& beta : by_height[h]) {
      for (int i = 0; i < r; ++i) {
        std::int64_t p = 0;
        Labels down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < r; ++j) pairing += beta[j] * cartan_[j][i];
        if (p - pairing > 0) {
          Labels up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    if (!next.empty()) by_height.push_back(std::move(next));
  }
  for (auto& level_roots : by_height) {
    std::sort(level_roots.begin(), level_roots.end());
    for (auto& c : level_roots) positive_simple_.push_back(c);
  }

  const int n = coord_dim();
  for (const auto& c : positive_simple_) {
    Weight w{std::vector<Rational>(static_cast<std::size_t>(n))};
    for (int j = 0; j < r; ++j)
      if (c[j] != 0) w += Rational(c[j]) * simple_roots_[j];
    positive_roots_.push_back(std::move(w));

    Labels lab(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) lab[i] += c[j] * cartan_[j][i];
    positive_labels_.push_back(std::move(lab));
  }
  for (std::size_t k = 0; k < positive_simple_.size(); ++k) {
    const Rational len = inner(positive_roots_[k], positive_roots_[k]);
    Labels co(r, 0);
    for (int j = 0; j < r; ++j)
      co[j] = to_int(Rational(positive_simple_[k][j]) * inner(simple_roots_[j], simple_roots_[j]) / len);
    positive_coroots_.push_back(std::move(co));
  }

  RationalMatrix a(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = cartan_[i][j];
  const RationalMatrix ainv = invert(a);
  for (int i = 0; i < r; ++i) {
    Weight w{std::vector<Rational>(static_cast<std::size_t>(n))};
    for (int j = 0; j < r; ++j)
      if (!ainv[i][j].is_zero()) w += ainv[i][j] * simple_roots_[j];
    fundamental_.push_back(std::move(w));
  }
  fundamental_gram_.assign(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) fundamental_gram_[i][j] = inner(fundamental_[i], fundamental_[j]);

  rho_ = Weight{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (const auto& a_pos : positive_roots_) rho_ += a_pos;
  rho_ = Rational(1, 2) * rho_;
  Weight sum{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (const auto& w : fundamental_) sum += w;
  if (sum != rho_) throw std::logic_error(name() + ": half-sum of positive roots differs from sum of fundamental weights");
}

RootSystemPtr build_root_system(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw Error(ErrorCode::UnsupportedType, std::string(1, family_letter(family)) + std::to_string(rank));

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const int r = rank;
  switch (family) {
    case Family::A: {
      rs.base_form_ = identity(r + 1);
      for (int i = 0; i < r; ++i) rs.simple_roots_.push_back(unit(r + 1, i) - unit(r + 1, i + 1));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      rs.base_form_ = identity(r);
      for (int i = 0; i + 1 < r; ++i) rs.simple_roots_.push_back(unit(r, i) - unit(r, i + 1));
      if (family == Family::B) rs.simple_roots_.push_back(unit(r, r - 1));
      if (family == Family::C) rs.simple_roots_.push_back(unit(r, r - 1, 2));
      if (family == Family::D) rs.simple_roots_.push_back(unit(r, r - 2) + unit(r, r - 1));
      break;
    }
    case Family::G: {
      rs.base_form_ = {{Rational(1), Rational(-3, 2)}, {Rational(-3, 2), Rational(3)}};
      rs.simple_roots_ = {unit(2, 0), unit(2, 1)};
      break;
    }
  }
  rs.finish();

  if (family == Family::G) {
    // omega_1 must be the 7-dimensional representation.
    const Weight lr = rs.fundamental_[0] + rs.rho_;
    Rational dim = 1;
    for (const auto& a : rs.positive_roots_) dim *= rs.inner(lr, a) / rs.inner(rs.rho_, a);
    if (dim != Rational(7)) throw std::logic_error("G2 convention flipped: dim(omega_1) = " + dim.str());
  }
  return std::make_shared<const RootSystem>(std::move(rs));
}

RootSystemPtr parse_root_system(const std::string& selector) {
  if (selector.size() < 2) throw Error(ErrorCode::UnsupportedType, "'" + selector + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(selector[0])));
  const std::string digits = selector.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 3)
    throw Error(ErrorCode::UnsupportedType, "'" + selector + "'");
  static const std::map<char, Family> families{
      {'A', Family::A}, {'B', Family::B}, {'C', Family::C}, {'D', Family::D}, {'G', Family::G}};
  const auto it = families.find(letter);
  if (it == families.end()) throw Error(ErrorCode::UnsupportedType, "'" + selector + "'");
  return build_root_system(it->second, std::stoi(digits));
}

Rational inner(const RootSystem& rs, const Weight& u, const Weight& v) { return rs.inner(u, v); }

bool is_dominant(std::span<const std::int64_t> labels) {
  return std::all_of(labels.begin(), labels.end(), [](std::int64_t x) { return x >= 0; });
}

LabelChamberResult to_dominant_chamber(const RootSystem& rs, Labels labels) {
  int parity = 1;
  while (true) {
    const auto it = std::find_if(labels.begin(), labels.end(), [](std::int64_t x) { return x < 0; });
    if (it == labels.end()) break;
    rs.reflect_labels(labels, static_cast<int>(it - labels.begin()));
    parity = -parity;
  }
  const bool singular = std::find(labels.begin(), labels.end(), 0) != labels.end();
  return {std::move(labels), singular ? 1 : parity, singular};
}

ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& w) {
  std::vector<Rational> f = rs.to_fundamental(w);
  const auto& cartan = rs.cartan_matrix();
  ChamberResult out;
  while (true) {
    const auto it = std::find_if(f.begin(), f.end(), [](const Rational& x) { return x.sign() < 0; });
    if (it == f.end()) break;
    const int i = static_cast<int>(it - f.begin());
    const Rational m = f[i];
    for (int j = 0; j < rs.rank(); ++j) f[j] -= m * Rational(cartan[i][j]);
    out.word.push_back(i);
    out.parity = -out.parity;
  }
  out.singular = std::any_of(f.begin(), f.end(), [](const Rational& x) { return x.is_zero(); });
  if (out.singular) out.parity = 1;
  // Reconstruct in ambient coordinates by reflecting w directly, so any
  // component orthogonal to the roots (A_r) is carried along unchanged.
  Weight d = w;
  for (int i : out.word) {
    const Weight& a = rs.simple_roots()[i];
    d -= (Rational(2) * rs.inner(d, a) / rs.inner(a, a)) * a;
  }
  out.dominant = std::move(d);
  return out;
}

std::vector<Labels> weyl_orbit_labels(const RootSystem& rs, const Labels& dominant) {
  if (!is_dominant(dominant)) throw Error(ErrorCode::NotDominant, "orbit requested for a non-dominant weight");
  std::set<Labels> seen{dominant};
  std::deque<Labels> queue{dominant};
  while (!queue.empty()) {
    Labels cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (cur[i] == 0) continue;
      Labels next = cur;
      rs.reflect_labels(next, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  const auto f = rs.to_fundamental(w);
  if (std::any_of(f.begin(), f.end(), [](const Rational& x) { return x.sign() < 0; }))
    throw Error(ErrorCode::NotDominant, to_string(w));
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.simple_roots()) {
      const Rational c = Rational(2) * rs.inner(cur, a) / rs.inner(a, a);
      if (c.is_zero()) continue;
      Weight next = cur - c * a;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace holweitz
