#include "pi2/intlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace pi2 {

namespace {

// Quotient rounded toward minus infinity.
BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient rounded to nearest; keeps Euclidean steps short.
BigInt rdiv(const BigInt& a, const BigInt& b) {
  BigInt twice = 2 * a + abs(b);
  BigInt q;
  BigInt denom = 2 * abs(b);
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), denom.get_mpz_t());
  return b < 0 ? BigInt(-q) : q;
}

nlohmann::ordered_json int_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_row(std::size_t r, std::span<const BigInt> v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void IntMatrix::append_row(std::span<const BigInt> v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
  }
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::col_block(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

nlohmann::ordered_json IntMatrix::to_json() const {
  auto j = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < cols_; ++c) row.push_back(int_json((*this)(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector row_times(std::span<const BigInt> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
  IntVector out(m.cols(), BigInt(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

bool is_zero(std::span<const BigInt> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid down the column: bring the smallest entry up, reduce the rest.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        BigInt q = rdiv(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      BigInt q = fdiv(h(k, c), h(r, c));
      h.add_row_multiple(k, r, -q);
      u.add_row_multiple(k, r, -q);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

// ---------------------------------------------------------------------------
// Smith normal form

SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 1};
  IntMatrix& d = res.d;
  const std::size_t rows = d.rows(), cols = d.cols();
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return res;  // trailing block is zero
      if (bi != t) {
        d.swap_rows(t, bi);
        res.u.swap_rows(t, bi);
        res.det_sign = -res.det_sign;
      }
      if (bj != t) {
        d.swap_cols(t, bj);
        res.v.swap_cols(t, bj);
        res.det_sign = -res.det_sign;
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = rdiv(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        res.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = rdiv(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        res.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      res.u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      res.u.negate_row(t);
      res.det_sign = -res.det_sign;
    }
  }
  return res;
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  SnfResult s = snf(m);
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < s.d.rows() && t < s.d.cols(); ++t) {
    if (s.d(t, t) != 0) out.push_back(s.d(t, t));
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  SnfResult s = snf(m);
  BigInt det = s.det_sign;
  for (std::size_t t = 0; t < m.rows(); ++t) det *= s.d(t, t);
  return det;
}

// ---------------------------------------------------------------------------
// Lattices

IntegerLattice IntegerLattice::span(const IntMatrix& generators) {
  HnfResult h = hnf(generators);
  IntegerLattice l(generators.cols());
  l.basis_ = h.h.row_block(0, h.rank);
  return l;
}

IntegerLattice IntegerLattice::span(std::span<const IntVector> generators, std::size_t dim) {
  return span(IntMatrix::from_rows(generators, dim));
}

IntegerLattice IntegerLattice::full(std::size_t dim) { return span(IntMatrix::identity(dim)); }

std::optional<IntVector> IntegerLattice::coordinates(std::span<const BigInt> v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice dimension mismatch");
  IntVector rest(v.begin(), v.end());
  IntVector coords(basis_.rows(), BigInt(0));
  for (std::size_t k = 0; k < basis_.rows(); ++k) {
    std::size_t p = 0;
    while (basis_(k, p) == 0) ++p;
    // entries left of this pivot are final
    for (std::size_t c = 0; c < p; ++c)
      if (rest[c] != 0) return std::nullopt;
    if (rest[p] % basis_(k, p) != 0) return std::nullopt;
    BigInt q = rest[p] / basis_(k, p);
    coords[k] = q;
    for (std::size_t c = p; c < dim_; ++c) rest[c] -= q * basis_(k, c);
  }
  if (!pi2::is_zero(rest)) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const BigInt> v) const { return coordinates(v).has_value(); }

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("lattice dimension mismatch");
  for (std::size_t k = 0; k < other.basis_.rows(); ++k)
    if (!contains(other.basis_.row(k))) return false;
  return true;
}

nlohmann::ordered_json IntegerLattice::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim_;
  j["rank"] = rank();
  j["basis"] = basis_.to_json();
  return j;
}

IntegerLattice kernel_basis(const IntMatrix& m) {
  HnfResult h = hnf(m);
  return IntegerLattice::span(h.u.row_block(h.rank, m.rows()));
}

IntegerLattice kernel_mod(const IntMatrix& m, const BigInt& modulus) {
  // v * m = modulus * w  <=>  (v, -w) in the kernel of [m; modulus * I]
  IntMatrix stacked(m.rows() + m.cols(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) stacked(r, c) = m(r, c);
  for (std::size_t c = 0; c < m.cols(); ++c) stacked(m.rows() + c, c) = modulus;
  IntegerLattice k = kernel_basis(stacked);
  return IntegerLattice::span(k.basis().col_block(0, m.rows()));
}

std::optional<IntVector> solve(const IntMatrix& m, std::span<const BigInt> target) {
  if (target.size() != m.cols()) throw std::invalid_argument("solve: target length mismatch");
  HnfResult h = hnf(m);
  IntVector rest(target.begin(), target.end());
  IntVector z(m.rows(), BigInt(0));
  for (std::size_t k = 0; k < h.rank; ++k) {
    std::size_t p = h.pivots[k];
    for (std::size_t c = (k ? h.pivots[k - 1] + 1 : 0); c < p; ++c)
      if (rest[c] != 0) return std::nullopt;
    if (rest[p] % h.h(k, p) != 0) return std::nullopt;
    z[k] = rest[p] / h.h(k, p);
    for (std::size_t c = p; c < m.cols(); ++c) rest[c] -= z[k] * h.h(k, c);
  }
  if (!is_zero(rest)) return std::nullopt;
  IntVector x = row_times(z, h.u);
  if (row_times(x, m) != IntVector(target.begin(), target.end())) {
    throw std::logic_error("solve: solution failed verification");
  }
  return x;
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) { return a == b; }

bool lattice_contains(const IntegerLattice& a, std::span<const BigInt> v) { return a.contains(v); }

std::optional<BigInt> lattice_index(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
  if (!b.contains(a)) throw std::invalid_argument("lattice_index: first lattice is not contained in the second");
  if (a.rank() < b.rank()) return std::nullopt;
  // a's basis expressed in b's basis is square; its |det| is the index
  IntMatrix coords(0, b.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) coords.append_row(*b.coordinates(a.basis().row(k)));
  if (coords.rows() == 0) return BigInt(1);
  return BigInt(abs(determinant(coords)));
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
  IntMatrix all = a.basis();
  for (std::size_t k = 0; k < b.rank(); ++k) all.append_row(b.basis().row(k));
  return IntegerLattice::span(all);
}

IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice dimension mismatch");
  // s * A = t * B  <=>  (s, t) * [A; -B] = 0
  IntMatrix stacked = a.basis();
  for (std::size_t k = 0; k < b.rank(); ++k) {
    IntVector row = b.basis().row(k);
    for (auto& v : row) v = -v;
    stacked.append_row(row);
  }
  IntegerLattice k = kernel_basis(stacked);
  IntMatrix s = k.basis().col_block(0, a.rank());
  return IntegerLattice::span(s * a.basis());
}

IntegerLattice saturation(const IntegerLattice& a) {
  // the kernel of the kernel is the saturation
  if (a.rank() == 0) return a;
  IntegerLattice perp = kernel_basis(a.basis().transpose());
  if (perp.rank() == 0) return IntegerLattice::full(a.dim());
  return kernel_basis(perp.basis().transpose());
}

}  // namespace pi2
