#include "oracle.hpp"

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace oracle {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        if (!y(k, j).is_zero()) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l) out(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
    }
  return out;
}

Rational trace(const Matrix& m) {
  Rational t;
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = row;
    while (p < m.rows && m(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = Rational(1) / m(row, col);
    for (int j = 0; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (int j = col; j < m.cols; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix kernel(const Matrix& input) {
  Matrix m = input;
  const auto pivots = rref(m);
  std::vector<int> free;
  for (int c = 0, k = 0; c < m.cols; ++c) {
    if (k < static_cast<int>(pivots.size()) && pivots[k] == c)
      ++k;
    else
      free.push_back(c);
  }
  Matrix out(m.cols, static_cast<int>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    out(free[f], static_cast<int>(f)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out(pivots[r], static_cast<int>(f)) = -m(static_cast<int>(r), free[f]);
  }
  return out;
}

std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) throw std::runtime_error("inconsistent system");
  if (static_cast<int>(pivots.size()) != m.cols) throw std::runtime_error("rank deficient system");
  std::vector<Rational> x(m.cols);
  for (int r = 0; r < m.cols; ++r) x[pivots[r]] = aug(r, m.cols);
  return x;
}

Matrix inverse(const Matrix& m) {
  Matrix aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols + i) = 1;
  }
  const auto pivots = rref(aug);
  for (int i = 0; i < m.rows; ++i)
    if (i >= static_cast<int>(pivots.size()) || pivots[i] != i) throw std::runtime_error("singular matrix");
  Matrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = aug(i, m.cols + j);
  return out;
}

// ---------------------------------------------------------------------------
// Kostant

namespace {

struct Kostant {
  const std::vector<Vec>& cartan;
  const std::vector<Vec>& roots;
  std::map<std::pair<Vec, std::size_t>, std::int64_t> memo;

  std::int64_t partitions(const Vec& c, std::size_t k) {
    for (auto x : c)
      if (x < 0) return 0;
    if (k == roots.size()) {
      for (auto x : c)
        if (x != 0) return 0;
      return 1;
    }
    const auto key = std::make_pair(c, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    Vec rest = c;
    while (true) {
      bool ok = true;
      for (auto x : rest) ok &= x >= 0;
      if (!ok) break;
      total += partitions(rest, k + 1);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots[k][i];
      bool zero_root = true;
      for (auto x : roots[k]) zero_root &= x == 0;
      if (zero_root) break;
    }
    memo.emplace(key, total);
    return total;
  }

  // Simple-root coefficients of a label vector; empty if not integral.
  std::optional<Vec> simple_coords(const Vec& labels) const {
    const int r = static_cast<int>(cartan.size());
    Matrix at(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) at(j, i) = cartan[i][j];
    std::vector<Rational> b(labels.begin(), labels.end());
    const auto x = solve(at, b);
    Vec out;
    for (const auto& v : x) {
      if (!v.is_integer()) return std::nullopt;
      out.push_back(v.numerator().get_si());
    }
    return out;
  }

  void reflect(Vec& labels, int i) const {
    const auto li = labels[i];
    for (std::size_t j = 0; j < labels.size(); ++j) labels[j] -= li * cartan[i][j];
  }

  // Orbit of a regular dominant weight with the sign of the Weyl element.
  std::vector<std::pair<Vec, int>> signed_orbit(const Vec& regular) const {
    std::map<Vec, int> seen{{regular, 1}};
    std::deque<Vec> queue{regular};
    while (!queue.empty()) {
      const Vec v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < cartan.size(); ++i) {
        Vec w = v;
        reflect(w, static_cast<int>(i));
        if (seen.emplace(w, -seen[v]).second) queue.push_back(w);
      }
    }
    return {seen.begin(), seen.end()};
  }
};

}  // namespace

std::int64_t kostant_multiplicity(const std::vector<Vec>& cartan, const std::vector<Vec>& positive_roots,
                                  const Vec& highest, const Vec& weight) {
  Kostant k{cartan, positive_roots, {}};
  Vec lr = highest, mr = weight;
  for (auto& x : lr) x += 1;
  for (auto& x : mr) x += 1;
  std::int64_t total = 0;
  for (const auto& [w, sign] : k.signed_orbit(lr)) {
    Vec diff(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) diff[i] = w[i] - mr[i];
    const auto c = k.simple_coords(diff);
    if (!c) continue;
    total += sign * k.partitions(*c, 0);
  }
  return total;
}

std::vector<std::pair<Vec, std::int64_t>> kostant_dominant_character(const std::vector<Vec>& cartan,
                                                                     const std::vector<Vec>& positive_roots,
                                                                     const Vec& highest) {
  const int r = static_cast<int>(cartan.size());
  // Dominant weights below the highest weight have simple coordinates
  // between 0 and those of the highest weight.
  Matrix at(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) at(j, i) = cartan[i][j];
  const auto top = solve(at, std::vector<Rational>(highest.begin(), highest.end()));
  Vec bound;
  for (const auto& t : top) bound.push_back(mpz_class(t.numerator() / t.denominator()).get_si());

  std::vector<std::pair<Vec, std::int64_t>> out;
  Vec c(r, 0);
  while (true) {
    Vec mu = highest;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mu[j] -= c[i] * cartan[i][j];
    bool dominant = true;
    for (auto x : mu) dominant &= x >= 0;
    if (dominant) {
      const auto m = kostant_multiplicity(cartan, positive_roots, highest, mu);
      if (m != 0) out.emplace_back(mu, m);
    }
    int i = 0;
    while (i < r && ++c[i] > bound[i]) c[i++] = 0;
    if (i == r) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit Lie algebras

std::vector<Matrix> so_basis(int n) {
  std::vector<Matrix> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = 1;
      e(j, i) = -1;
      out.push_back(e);
    }
  return out;
}

Matrix casimir(const Matrix& gram_inv, const std::vector<Matrix>& rho) {
  const int d = rho.front().rows;
  Matrix out(d, d);
  for (int a = 0; a < gram_inv.rows; ++a)
    for (int b = 0; b < gram_inv.cols; ++b)
      if (!gram_inv(a, b).is_zero()) out = out + gram_inv(a, b) * (rho[a] * rho[b]);
  return out;
}

Matrix conformal_weight_operator(const Matrix& gram_inv, const std::vector<Matrix>& left,
                                 const std::vector<Matrix>& right) {
  const int d = left.front().rows * right.front().rows;
  Matrix out(d, d);
  for (int a = 0; a < gram_inv.rows; ++a)
    for (int b = 0; b < gram_inv.cols; ++b)
      if (!gram_inv(a, b).is_zero()) out = out - gram_inv(a, b) * kron(left[a], right[b]);
  return out;
}

G2Model build_g2_model() {
  constexpr int n = 7;
  // phi as a fully antisymmetric tensor.
  std::vector<Rational> phi(n * n * n);
  auto at = [&](int a, int b, int c) -> Rational& { return phi[(a * n + b) * n + c]; };
  const int terms[7][4] = {{1, 2, 3, 1},  {1, 4, 5, 1},  {1, 6, 7, 1}, {2, 4, 6, 1},
                           {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1}};
  for (const auto& t : terms) {
    const int i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
    const Rational s(t[3]);
    at(i, j, k) = s;
    at(j, k, i) = s;
    at(k, i, j) = s;
    at(j, i, k) = -s;
    at(i, k, j) = -s;
    at(k, j, i) = -s;
  }

  const auto so7 = so_basis(n);
  // Linear map X -> X.phi on the components a<b<c.
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  Matrix action(static_cast<int>(triples.size()), static_cast<int>(so7.size()));
  for (std::size_t x = 0; x < so7.size(); ++x) {
    const Matrix& X = so7[x];
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const auto [a, b, c] = triples[t];
      Rational v;
      for (int d = 0; d < n; ++d) v -= X(d, a) * at(d, b, c) + X(d, b) * at(a, d, c) + X(d, c) * at(a, b, d);
      action(static_cast<int>(t), static_cast<int>(x)) = v;
    }
  }
  const Matrix ker = kernel(action);

  G2Model g;
  for (int k = 0; k < ker.cols; ++k) {
    Matrix X(n, n);
    for (std::size_t x = 0; x < so7.size(); ++x)
      if (!ker(static_cast<int>(x), k).is_zero()) X = X + ker(static_cast<int>(x), k) * so7[x];
    g.basis.push_back(X);
  }
  const int dim = static_cast<int>(g.basis.size());
  g.gram = Matrix(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) g.gram(a, b) = Rational(-1, 2) * trace(g.basis[a] * g.basis[b]);
  g.gram_inv = inverse(g.gram);

  // ad(X_a) via coordinates in the so(7) basis: column k of ker is Y_k.
  for (int a = 0; a < dim; ++a) {
    Matrix ad(dim, dim);
    for (int b = 0; b < dim; ++b) {
      const Matrix br = g.basis[a] * g.basis[b] - g.basis[b] * g.basis[a];
      std::vector<Rational> coords;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) coords.push_back(br(i, j));
      const auto c = solve(ker, coords);
      for (int k = 0; k < dim; ++k) ad(k, b) = c[k];
    }
    g.adjoint.push_back(ad);
  }
  return g;
}

std::vector<Matrix> wedge_action(const std::vector<Matrix>& generators, int n, int p) {
  // Basis: increasing index subsets of size p.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

  std::vector<Matrix> out;
  const int d = static_cast<int>(subsets.size());
  for (const auto& X : generators) {
    Matrix m(d, d);
    for (int s = 0; s < d; ++s) {
      // X(e_{i1} ^ ... ^ e_{ip}) = sum_k e_{i1} ^ ... ^ X e_{ik} ^ ... ^ e_{ip}
      for (int k = 0; k < p; ++k)
        for (int r = 0; r < n; ++r) {
          const Rational coeff = X(r, subsets[s][k]);
          if (coeff.is_zero()) continue;
          std::vector<int> idx = subsets[s];
          idx[k] = r;
          // sort with sign, drop repeats
          int sign = 1;
          bool repeat = false;
          for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
              if (idx[j] == idx[j + 1]) repeat = true;
              if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
              }
            }
          for (std::size_t j = 0; j + 1 < idx.size(); ++j) repeat |= idx[j] == idx[j + 1];
          if (repeat) continue;
          m(index.at(idx), s) += Rational(sign) * coeff;
        }
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace oracle
