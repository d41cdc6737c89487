#pragma once

// Quotient rings and modules of Z[Q_28]:
//   A = Z_4[x]/(x^3 - x - 1)            M = Z[Q_28]/(x^3-x-1)Z[Q_28] ~ A + A
//   S = Z[Q_28]/(1 + y^2)               Lambda = S / sigma_{-x}
//   Z[y]/(1 + y^2)                      F_49 = Z_7[y]/(1 + y^2)

#include "pi2/bigint.hpp"
#include "pi2/quaternion.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace pi2 {

/// c0 + c1 x + c2 x^2 in A, coefficients in [0, 4).
class APoly {
 public:
  APoly() = default;
  APoly(int c0, int c1, int c2);

  int c0() const { return c_[0]; }
  int c1() const { return c_[1]; }
  int c2() const { return c_[2]; }
  int operator[](std::size_t k) const { return c_[k]; }

  static APoly x();
  /// x^k for any integer k; x is a unit with inverse x^2 - 1.
  static APoly x_pow(long k);
  /// All 64 elements.
  static std::vector<APoly> all();

  bool is_zero() const { return c_ == std::array<int, 3>{}; }

  friend APoly operator+(const APoly& a, const APoly& b);
  friend APoly operator-(const APoly& a, const APoly& b);
  friend APoly operator*(const APoly& a, const APoly& b);
  APoly operator-() const;
  bool operator==(const APoly&) const = default;

  /// `3x^2 + 1` style.
  std::string to_string() const;

 private:
  std::array<int, 3> c_{};
};

/// Canonical representative of an integer polynomial sum_k p[k] x^k in A.
APoly a_reduce(std::span<const BigInt> poly);

/// Element (a, b) of A + A, standing for a + b y in M.
struct MPair {
  APoly a;
  APoly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend MPair operator+(const MPair& p, const MPair& q) { return {p.a + q.a, p.b + q.b}; }
  friend MPair operator-(const MPair& p, const MPair& q) { return {p.a - q.a, p.b - q.b}; }
  MPair scaled(const BigInt& c) const;
  bool operator==(const MPair&) const = default;

  std::string to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

  static std::vector<MPair> all();
};

/// Right action of g in Q_28: (a,b)y = (b x^7, a), (a,b)x = (a x, b x^-1).
MPair m_action(const MPair& m, QElement g);
/// Image of v in M, i.e. (1, 0) . v.
MPair m_from_ring(const GroupRingElement& v);

/// Element of S in coordinates on {x^i y^j : 0 <= i <= 6, j in {0,1}},
/// index i + 7 j.
class SElement {
 public:
  static constexpr std::size_t kDim = 14;

  SElement() { c_.fill(0); }
  explicit SElement(std::span<const BigInt> coords);

  static SElement basis(std::size_t idx);
  const std::array<BigInt, kDim>& coords() const { return c_; }
  const BigInt& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;

  /// Canonical lift to Z[Q_28].
  GroupRingElement lift() const;

  friend SElement operator+(const SElement& a, const SElement& b);
  friend SElement operator-(const SElement& a, const SElement& b);
  friend SElement operator*(const SElement& a, const SElement& b);
  SElement operator-() const;
  bool operator==(const SElement&) const = default;

  std::string to_string() const { return lift().to_string(); }

 private:
  std::array<BigInt, kDim> c_;
};

/// Element of Lambda in coordinates on {x^i y^j : 0 <= i <= 5}, index i + 6 j.
class LambdaElement {
 public:
  static constexpr std::size_t kDim = 12;

  LambdaElement() { c_.fill(0); }
  explicit LambdaElement(std::span<const BigInt> coords);

  static LambdaElement basis(std::size_t idx);
  const std::array<BigInt, kDim>& coords() const { return c_; }
  const BigInt& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;

  SElement lift() const;

  friend LambdaElement operator+(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator-(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
  LambdaElement operator-() const;
  bool operator==(const LambdaElement&) const = default;

  std::string to_string() const { return lift().to_string(); }

 private:
  std::array<BigInt, kDim> c_;
};

/// a + b y in Z[y]/(1 + y^2).
struct GaussInt {
  BigInt a = 0;
  BigInt b = 0;

  friend GaussInt operator+(const GaussInt& p, const GaussInt& q) { return {p.a + q.a, p.b + q.b}; }
  friend GaussInt operator-(const GaussInt& p, const GaussInt& q) { return {p.a - q.a, p.b - q.b}; }
  friend GaussInt operator*(const GaussInt& p, const GaussInt& q) {
    return {p.a * q.a - p.b * q.b, p.a * q.b + p.b * q.a};
  }
  bool operator==(const GaussInt&) const = default;
  std::string to_string() const;
};

/// a + b y in F_49 = Z_7[y]/(1 + y^2), coefficients in [0, 7).
class F49Element {
 public:
  F49Element() = default;
  F49Element(long a, long b);

  int a() const { return a_; }
  int b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  F49Element inverse() const;
  friend F49Element operator+(const F49Element& p, const F49Element& q);
  friend F49Element operator-(const F49Element& p, const F49Element& q);
  friend F49Element operator*(const F49Element& p, const F49Element& q);
  F49Element operator-() const;
  bool operator==(const F49Element&) const = default;
  auto operator<=>(const F49Element&) const = default;

  std::string to_string() const;

  static std::vector<F49Element> all();
  static std::vector<F49Element> units();

 private:
  int a_ = 0;
  int b_ = 0;
};

/// Ring maps. to_S kills 1 + y^2; to_Lambda further kills sigma_{-x}.
SElement to_S(const GroupRingElement& v);
LambdaElement to_Lambda(const SElement& s);
/// x -> -1, y -> y.
GaussInt q1(const SElement& s);
F49Element q2(const LambdaElement& l);
/// Reduction modulo 7.
F49Element p2(const GaussInt& z);

/// sigma_{-x} = 1 - x + x^2 - x^3 + x^4 - x^5 + x^6 in Z[Q_28].
GroupRingElement sigma_minus_x(const QGroup& q28);

}  // namespace pi2
