#pragma once

// Independent oracles and random generators shared by the unit, property and
// acceptance tests. Nothing here calls the HNF/SNF code under test.

#include "pi2/homotopy.hpp"
#include "pi2/intlinalg.hpp"
#include "pi2/quaternion.hpp"
#include "pi2/rings.hpp"

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace pi2::test {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Fraction-free Gaussian elimination.
inline BigInt bareiss_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Rational row reduction; returns a basis of the rational left kernel
// {v : v m = 0}, scaled to primitive integer vectors.
inline std::vector<IntVector> rational_left_kernel(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  // Left kernel of m = right kernel of m^T.
  std::vector<std::vector<mpq_class>> a(cols, std::vector<mpq_class>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[j][i] = mpq_class(m(i, j));
  std::vector<long> pivot_of(rows, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && a[p][c] == 0) ++p;
    if (p == cols) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < rows; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<IntVector> out;
  for (std::size_t free = 0; free < rows; ++free) {
    if (pivot_of[free] >= 0) continue;
    std::vector<mpq_class> v(rows, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < rows; ++c)
      if (pivot_of[c] >= 0) v[c] = -a[pivot_of[c]][free];
    BigInt den = 1;
    for (auto& q : v) den = lcm(den, BigInt(q.get_den()));
    IntVector iv;
    BigInt g = 0;
    for (auto& q : v) {
      BigInt x = BigInt(q * den);
      iv.push_back(x);
      g = gcd(g, x);
    }
    for (auto& x : iv) x /= g;
    out.push_back(iv);
  }
  return out;
}

inline std::size_t rational_rank(const IntMatrix& m) { return m.rows() - rational_left_kernel(m).size(); }

// gcd of all k x k minors of a k x n matrix; 1 iff its row span is saturated.
inline BigInt minor_gcd(const std::vector<IntVector>& rows) {
  std::size_t k = rows.size();
  if (k == 0) return 1;
  std::size_t n = rows.front().size();
  BigInt g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IntMatrix sq(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sq(i, j) = rows[i][pick[j]];
    g = gcd(g, bareiss_det(sq));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return abs(g);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline Word random_word(Rng& rng, std::size_t max_runs, long max_exp = 3) {
  std::vector<Letter> letters;
  std::size_t runs = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_runs)));
  for (std::size_t i = 0; i < runs; ++i) {
    long e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    letters.push_back({uniform(rng, 0, 1) ? "x" : "y", e});
  }
  return Word(letters);
}

inline GroupRingElement random_element(Rng& rng, const QGroup& g, long lo = -3, long hi = 3, long modulus = 0) {
  std::vector<BigInt> c;
  for (std::size_t k = 0; k < g.order(); ++k) c.push_back(uniform(rng, lo, hi));
  return GroupRingElement::from_coords(g, c, modulus);
}

// ---------------------------------------------------------------------------
// Property routines; each returns the number of failing instances.

inline std::size_t fox_product_rule(Rng& rng, std::size_t count) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    QGroup g(uniform(rng, 2, 9));
    Word u = random_word(rng, 6), v = random_word(rng, 6);
    for (const char* t : {"x", "y"}) {
      auto lhs = fox(u * v, t, g);
      auto rhs = fox(u, t, g) * g.eval(v) + fox(v, t, g);
      if (!(lhs == rhs)) ++bad;
    }
  }
  return bad;
}

inline std::size_t fox_fundamental_identity(Rng& rng, std::size_t count) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    QGroup g(uniform(rng, 2, 9));
    Word w = random_word(rng, 8);
    auto one = GroupRingElement::scalar(g, 1);
    auto lhs = (GroupRingElement::basis(g, g.x()) - one) * fox(w, "x", g) +
               (GroupRingElement::basis(g, g.y()) - one) * fox(w, "y", g);
    if (!(lhs == GroupRingElement::basis(g, g.eval(w)) - one)) ++bad;
  }
  return bad;
}

// A random word trivial in g: a power of a random word, or a conjugate of a
// defining relator.
inline Word random_trivial_word(Rng& rng, const QGroup& g) {
  Word u = random_word(rng, 4);
  if (uniform(rng, 0, 1)) {
    QElement e = g.eval(u);
    long ord = 1;
    for (QElement p = e; p != QElement{}; p = g.mul(p, e)) ++ord;
    return u.pow(ord);
  }
  Word r = uniform(rng, 0, 1) ? Word::gen("y", -2) * Word::gen("x", g.n())
                              : Word::gen("y", -1) * Word::gen("x") * Word::gen("y") * Word::gen("x");
  return u.inverse() * r * u;
}

inline std::size_t conjugate_product_formula(Rng& rng, std::size_t count) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    QGroup g(uniform(rng, 2, 7));
    std::size_t terms = static_cast<std::size_t>(uniform(rng, 1, 4));
    Word prod;
    std::vector<Word> rs, ws;
    std::vector<long> ss;
    for (std::size_t i = 0; i < terms; ++i) {
      rs.push_back(random_trivial_word(rng, g));
      ws.push_back(random_word(rng, 4));
      ss.push_back(uniform(rng, -2, 2));
      prod = prod * (ws.back().inverse() * rs.back().pow(ss.back()) * ws.back());
    }
    for (const char* t : {"x", "y"}) {
      GroupRingElement expect(g);
      for (std::size_t i = 0; i < terms; ++i) expect += BigInt(ss[i]) * (fox(rs[i], t, g) * g.eval(ws[i]));
      if (!(fox(prod, t, g) == expect)) ++bad;
    }
  }
  return bad;
}

template <class T, class Gen>
std::size_t ring_axioms(Gen gen, std::size_t count, T zero, T one) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    T a = gen(), b = gen(), c = gen();
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c && a + zero == a && a * one == a &&
              one * a == a && a - a == zero;
    if (!ok) ++bad;
  }
  return bad;
}

inline std::size_t hnf_snf_identities(Rng& rng, std::size_t count) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 6)), c = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    HnfResult h = hnf(m);
    bool ok = h.u * m == h.h && abs(bareiss_det(h.u)) == 1 && h.rank == rational_rank(m);
    for (std::size_t i = 0; i < h.rank && ok; ++i) {
      std::size_t p = h.pivots[i];
      if (h.h(i, p) <= 0) ok = false;
      if (i > 0 && p <= h.pivots[i - 1]) ok = false;
      for (std::size_t j = 0; j < p; ++j)
        if (h.h(i, j) != 0) ok = false;
      for (std::size_t a = 0; a < i; ++a)
        if (h.h(a, p) < 0 || h.h(a, p) >= h.h(i, p)) ok = false;
    }
    for (std::size_t i = h.rank; i < r && ok; ++i) ok = h.h.row_is_zero(i);

    SnfResult s = snf(m);
    ok = ok && s.u * m * s.v == s.d && abs(bareiss_det(s.u)) == 1 && abs(bareiss_det(s.v)) == 1;
    std::size_t d = std::min(r, c);
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && s.d(i, j) != 0) ok = false;
    for (std::size_t i = 0; i + 1 < d && ok; ++i) {
      if (s.d(i, i) < 0) ok = false;
      if (s.d(i, i) == 0 ? s.d(i + 1, i + 1) != 0 : s.d(i + 1, i + 1) % s.d(i, i) != 0) ok = false;
    }
    if (r == c && determinant(m) != bareiss_det(m)) ok = false;
    if (!ok) ++bad;
  }
  return bad;
}

// kernel_basis against rational kernel plus saturation (minor gcd).
inline bool kernel_matches_oracle(const IntMatrix& m) {
  IntegerLattice k = kernel_basis(m);
  auto rat = rational_left_kernel(m);
  if (k.rank() != rat.size()) return false;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < k.rank(); ++i) {
    IntVector v = k.basis().row(i);
    if (!is_zero(row_times(v, m))) return false;
    rows.push_back(v);
  }
  // same rational span: each oracle vector lies in the saturated lattice
  for (const auto& v : rat)
    if (!k.contains(v)) return false;
  return minor_gcd(rows) == 1;
}

inline std::size_t kernel_oracle_sample(Rng& rng, std::size_t count) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4)), c = static_cast<std::size_t>(uniform(rng, 1, 4));
    if (!kernel_matches_oracle(random_matrix(rng, r, c, -2, 2))) ++bad;
  }
  return bad;
}

}  // namespace pi2::test
