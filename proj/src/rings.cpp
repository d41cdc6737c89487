#include "pi2/rings.hpp"

#include <stdexcept>

namespace pi2 {

namespace {

int mod4(long v) { return static_cast<int>(mod_floor(static_cast<std::int64_t>(v), 4)); }
int mod7(long v) { return static_cast<int>(mod_floor(static_cast<std::int64_t>(v), 7)); }

const QGroup& q28() {
  static const QGroup g(7);
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// A

APoly::APoly(int c0, int c1, int c2) : c_{mod4(c0), mod4(c1), mod4(c2)} {}

APoly APoly::x() { return {0, 1, 0}; }

APoly APoly::x_pow(long k) {
  // x^-1 = x^2 - 1
  APoly base = k < 0 ? APoly(-1, 0, 1) : x();
  APoly acc(1, 0, 0);
  for (long e = k < 0 ? -k : k; e > 0; --e) acc = acc * base;
  return acc;
}

std::vector<APoly> APoly::all() {
  std::vector<APoly> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) out.emplace_back(a, b, c);
  return out;
}

APoly operator+(const APoly& a, const APoly& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
}

APoly operator-(const APoly& a, const APoly& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
}

APoly APoly::operator-() const { return APoly{} - *this; }

APoly operator*(const APoly& a, const APoly& b) {
  std::array<long, 5> p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += a.c_[i] * b.c_[j];
  // x^4 = x^2 + x, x^3 = x + 1
  p[2] += p[4];
  p[1] += p[4];
  p[1] += p[3];
  p[0] += p[3];
  return {static_cast<int>(p[0] % 4), static_cast<int>(p[1] % 4), static_cast<int>(p[2] % 4)};
}

std::string APoly::to_string() const {
  std::string s;
  auto term = [&](int c, const char* mono) {
    if (c == 0) return;
    if (!s.empty()) s += " + ";
    if (*mono == '\0') s += std::to_string(c);
    else s += (c == 1 ? std::string() : std::to_string(c)) + mono;
  };
  term(c_[2], "x^2");
  term(c_[1], "x");
  term(c_[0], "");
  return s.empty() ? "0" : s;
}

APoly a_reduce(std::span<const BigInt> poly) {
  // x^{i+1} from x^i = a x^2 + b x + c is b x^2 + (a + c) x + a.
  APoly acc;
  APoly power(1, 0, 0);
  for (const auto& c : poly) {
    int k = static_cast<int>(mod_floor(c, 4));
    acc = acc + APoly(k, 0, 0) * power;
    power = APoly(power.c2(), power.c0() + power.c2(), power.c1());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// M

MPair MPair::scaled(const BigInt& c) const {
  APoly k(static_cast<int>(mod_floor(c, 4)), 0, 0);
  return {a * k, b * k};
}

std::vector<MPair> MPair::all() {
  auto as = APoly::all();
  std::vector<MPair> out;
  out.reserve(as.size() * as.size());
  for (const auto& a : as)
    for (const auto& b : as) out.push_back({a, b});
  return out;
}

MPair m_action(const MPair& m, QElement g) {
  // x^i first, then y^j
  MPair r{m.a * APoly::x_pow(g.i), m.b * APoly::x_pow(-g.i)};
  if (g.j) r = {r.b * APoly::x_pow(7), r.a};
  return r;
}

MPair m_from_ring(const GroupRingElement& v) {
  if (v.group().n() != 7) throw std::invalid_argument("m_from_ring is defined on Z[Q_28]");
  MPair acc;
  const MPair one{APoly(1, 0, 0), APoly()};
  for (const auto& [g, c] : v.terms()) acc = acc + m_action(one, g).scaled(c);
  return acc;
}

// ---------------------------------------------------------------------------
// S

namespace {

// x^k y^j with 0 <= k < 14 is (-1)^{k div 7} x^{k mod 7} y^j in S.
void accumulate_S(std::array<BigInt, SElement::kDim>& c, QElement g, const BigInt& coeff) {
  std::size_t idx = static_cast<std::size_t>(g.i % 7 + 7 * g.j);
  if (g.i >= 7) c[idx] -= coeff;
  else c[idx] += coeff;
}

}  // namespace

SElement::SElement(std::span<const BigInt> coords) {
  if (coords.size() != kDim) throw std::invalid_argument("S element needs 14 coordinates");
  for (std::size_t k = 0; k < kDim; ++k) c_[k] = coords[k];
}

SElement SElement::basis(std::size_t idx) {
  SElement s;
  s.c_.at(idx) = 1;
  return s;
}

bool SElement::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

GroupRingElement SElement::lift() const {
  GroupRingElement r(q28());
  for (std::size_t k = 0; k < kDim; ++k) {
    r.add_term(q28().make(static_cast<long>(k % 7), static_cast<int>(k / 7)), c_[k]);
  }
  return r;
}

SElement to_S(const GroupRingElement& v) {
  if (v.group().n() != 7 || v.modulus() != 0) throw std::invalid_argument("to_S expects an element of Z[Q_28]");
  SElement s;
  std::array<BigInt, SElement::kDim> c;
  c.fill(0);
  for (const auto& [g, coeff] : v.terms()) accumulate_S(c, g, coeff);
  return SElement(c);
}

SElement operator+(const SElement& a, const SElement& b) {
  SElement r;
  for (std::size_t k = 0; k < SElement::kDim; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

SElement operator-(const SElement& a, const SElement& b) {
  SElement r;
  for (std::size_t k = 0; k < SElement::kDim; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

SElement SElement::operator-() const { return SElement{} - *this; }

SElement operator*(const SElement& a, const SElement& b) {
  std::array<BigInt, SElement::kDim> c;
  c.fill(0);
  for (std::size_t p = 0; p < SElement::kDim; ++p) {
    if (a.c_[p] == 0) continue;
    QElement g = q28().make(static_cast<long>(p % 7), static_cast<int>(p / 7));
    for (std::size_t q = 0; q < SElement::kDim; ++q) {
      if (b.c_[q] == 0) continue;
      QElement h = q28().make(static_cast<long>(q % 7), static_cast<int>(q / 7));
      accumulate_S(c, q28().mul(g, h), a.c_[p] * b.c_[q]);
    }
  }
  return SElement(c);
}

// ---------------------------------------------------------------------------
// Lambda

LambdaElement::LambdaElement(std::span<const BigInt> coords) {
  if (coords.size() != kDim) throw std::invalid_argument("Lambda element needs 12 coordinates");
  for (std::size_t k = 0; k < kDim; ++k) c_[k] = coords[k];
}

LambdaElement LambdaElement::basis(std::size_t idx) {
  LambdaElement l;
  l.c_.at(idx) = 1;
  return l;
}

bool LambdaElement::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

SElement LambdaElement::lift() const {
  std::array<BigInt, SElement::kDim> c;
  c.fill(0);
  for (std::size_t k = 0; k < kDim; ++k) c[k % 6 + 7 * (k / 6)] = c_[k];
  return SElement(c);
}

LambdaElement to_Lambda(const SElement& s) {
  std::array<BigInt, LambdaElement::kDim> c;
  c.fill(0);
  for (std::size_t j = 0; j < 2; ++j) {
    // x^6 = x^5 - x^4 + x^3 - x^2 + x - 1
    const BigInt& top = s[6 + 7 * j];
    for (std::size_t i = 0; i < 6; ++i) {
      BigInt v = s[i + 7 * j];
      if ((5 - i) % 2 == 0) v += top;
      else v -= top;
      c[i + 6 * j] = v;
    }
  }
  return LambdaElement(c);
}

LambdaElement operator+(const LambdaElement& a, const LambdaElement& b) {
  LambdaElement r;
  for (std::size_t k = 0; k < LambdaElement::kDim; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

LambdaElement operator-(const LambdaElement& a, const LambdaElement& b) {
  LambdaElement r;
  for (std::size_t k = 0; k < LambdaElement::kDim; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

LambdaElement LambdaElement::operator-() const { return LambdaElement{} - *this; }

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  return to_Lambda(a.lift() * b.lift());
}

// ---------------------------------------------------------------------------
// Gaussian integers and F_49

std::string GaussInt::to_string() const {
  if (b == 0) return a.get_str();
  std::string yb = (b == 1 ? "" : b == -1 ? "-" : b.get_str()) + "y";
  if (a == 0) return yb;
  return a.get_str() + (b < 0 ? " - " : " + ") + (abs(b) == 1 ? std::string() : BigInt(abs(b)).get_str()) + "y";
}

F49Element::F49Element(long a, long b) : a_(mod7(a)), b_(mod7(b)) {}

F49Element operator+(const F49Element& p, const F49Element& q) { return {p.a_ + q.a_, p.b_ + q.b_}; }
F49Element operator-(const F49Element& p, const F49Element& q) { return {p.a_ - q.a_, p.b_ - q.b_}; }
F49Element F49Element::operator-() const { return F49Element{} - *this; }

F49Element operator*(const F49Element& p, const F49Element& q) {
  return {static_cast<long>(p.a_) * q.a_ - static_cast<long>(p.b_) * q.b_,
          static_cast<long>(p.a_) * q.b_ + static_cast<long>(p.b_) * q.a_};
}

F49Element F49Element::inverse() const {
  // (a + b y)^-1 = (a - b y) / (a^2 + b^2)
  int norm = mod7(a_ * a_ + b_ * b_);
  if (norm == 0) throw std::domain_error("zero has no inverse in F_49");
  int inv = 1;
  while (mod7(inv * norm) != 1) ++inv;
  return {static_cast<long>(a_) * inv, -static_cast<long>(b_) * inv};
}

std::string F49Element::to_string() const {
  if (b_ == 0) return std::to_string(a_);
  std::string yb = (b_ == 1 ? "" : std::to_string(b_)) + "y";
  return a_ == 0 ? yb : std::to_string(a_) + " + " + yb;
}

std::vector<F49Element> F49Element::all() {
  std::vector<F49Element> out;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<F49Element> F49Element::units() {
  auto out = all();
  std::erase_if(out, [](const F49Element& e) { return e.is_zero(); });
  return out;
}

GaussInt q1(const SElement& s) {
  GaussInt z;
  for (std::size_t k = 0; k < SElement::kDim; ++k) {
    BigInt v = (k % 7) % 2 == 0 ? s[k] : BigInt(-s[k]);
    if (k < 7) z.a += v;
    else z.b += v;
  }
  return z;
}

F49Element q2(const LambdaElement& l) {
  BigInt a = 0, b = 0;
  for (std::size_t k = 0; k < LambdaElement::kDim; ++k) {
    BigInt v = (k % 6) % 2 == 0 ? l[k] : BigInt(-l[k]);
    if (k < 6) a += v;
    else b += v;
  }
  return {mod_floor(a, 7), mod_floor(b, 7)};
}

F49Element p2(const GaussInt& z) { return {mod_floor(z.a, 7), mod_floor(z.b, 7)}; }

GroupRingElement sigma_minus_x(const QGroup& q) {
  std::vector<BigInt> c{1, -1, 1, -1, 1, -1, 1};
  return GroupRingElement::x_poly(q, c);
}

}  // namespace pi2
