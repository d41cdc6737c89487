#pragma once

#include "pi2/bigint.hpp"
#include "pi2/presentation.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pi2 {

/// Element x^i y^j of Q_{4n} in normal form, 0 <= i < 2n, j in {0, 1}.
struct QElement {
  long i = 0;
  int j = 0;

  auto operator<=>(const QElement&) const = default;
};

/// The quaternion group Q_{4n} = <x, y | y^2 = x^n, xyx = y>.
class QGroup {
 public:
  explicit QGroup(long n);

  long n() const { return n_; }
  std::size_t order() const { return static_cast<std::size_t>(4 * n_); }

  QElement make(long i, int j = 0) const;
  QElement x(long k = 1) const { return make(k, 0); }
  QElement y() const { return make(0, 1); }

  QElement mul(QElement g, QElement h) const;
  QElement inv(QElement g) const;
  QElement pow(QElement g, const BigInt& e) const;

  /// Image of a word in x, y. Throws std::invalid_argument on other generators.
  QElement eval(const Word& w) const;

  /// Coordinate index of an element: i + 2n j.
  std::size_t index(QElement g) const { return static_cast<std::size_t>(g.i + 2 * n_ * g.j); }
  QElement element(std::size_t idx) const;
  std::vector<QElement> elements() const;

  std::string to_string(QElement g) const;

  bool operator==(const QGroup&) const = default;

 private:
  long n_;
};

/// q_mul for the group Q_{4n}.
QElement q_mul(QElement g, QElement h, long n);

/// Element of Z[Q_{4n}] or (Z/m)[Q_{4n}]. Coefficients are stored sparsely;
/// zero coefficients are never stored. modulus == 0 means integer scalars,
/// otherwise coefficients are kept in [0, modulus).
class GroupRingElement {
 public:
  GroupRingElement(const QGroup& g, long modulus = 0) : group_(g), modulus_(modulus) {}

  static GroupRingElement scalar(const QGroup& g, const BigInt& c, long modulus = 0);
  static GroupRingElement basis(const QGroup& g, QElement e, const BigInt& c = 1, long modulus = 0);
  /// Sum of all group elements.
  static GroupRingElement sigma(const QGroup& g, long modulus = 0);
  /// Image of a word as a group element.
  static GroupRingElement from_word(const QGroup& g, const Word& w, long modulus = 0);
  /// Polynomial c_0 + c_1 x + ... in x.
  static GroupRingElement x_poly(const QGroup& g, std::span<const BigInt> coeffs, long modulus = 0);
  static GroupRingElement from_coords(const QGroup& g, std::span<const BigInt> coords, long modulus = 0);

  const QGroup& group() const { return group_; }
  long modulus() const { return modulus_; }
  const std::map<QElement, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(QElement g) const;
  void add_term(QElement g, const BigInt& c);

  /// Sum of coefficients.
  BigInt augmentation() const;
  /// Dense coordinates indexed by QGroup::index.
  std::vector<BigInt> coords() const;
  /// Reduces integer coefficients modulo m.
  GroupRingElement reduce_mod(long m) const;

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const BigInt& c, const GroupRingElement& a);
  /// Right multiplication by a group element.
  GroupRingElement operator*(QElement g) const;
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(QElement g, const GroupRingElement& a);
  GroupRingElement& operator+=(const GroupRingElement& b);

  bool operator==(const GroupRingElement& o) const {
    return group_ == o.group_ && modulus_ == o.modulus_ && terms_ == o.terms_;
  }

  /// Literal form, terms ordered by (i, j): `2 + 2x - x^3 + x^3*y`.
  std::string to_string() const;

 private:
  void check_compatible(const GroupRingElement& o) const;
  BigInt normalize(BigInt c) const;

  QGroup group_;
  long modulus_;
  std::map<QElement, BigInt> terms_;
};

inline GroupRingElement ring_mul(const GroupRingElement& u, const GroupRingElement& v) { return u * v; }
inline GroupRingElement ring_add(const GroupRingElement& u, const GroupRingElement& v) { return u + v; }
inline GroupRingElement ring_neg(const GroupRingElement& u) { return -u; }

/// Parses a literal such as `2 + 2x - x^3 + x^3*y`. Terms are
/// `[integer]['*'][word]` joined by `+` / `-`; words use the presentation
/// word grammar over x and y.
GroupRingElement parse_group_ring(const std::string& text, const QGroup& g, long modulus = 0);

}  // namespace pi2
