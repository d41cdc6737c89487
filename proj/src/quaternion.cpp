#include "pi2/quaternion.hpp"

#include "scanner.hpp"

#include <stdexcept>

namespace pi2 {

QGroup::QGroup(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Q_{4n} needs n >= 1");
}

QElement QGroup::make(long i, int j) const {
  return {mod_floor(static_cast<std::int64_t>(i), 2 * n_), j & 1};
}

QElement q_mul(QElement g, QElement h, long n) {
  long two_n = 2 * n;
  if (g.j == 0) return {mod_floor(g.i + h.i, two_n), h.j};
  // y x^c = x^-c y
  long i = g.i - h.i;
  if (h.j == 0) return {mod_floor(i, two_n), 1};
  return {mod_floor(i + n, two_n), 0};  // y^2 = x^n
}

QElement QGroup::mul(QElement g, QElement h) const { return q_mul(g, h, n_); }

QElement QGroup::inv(QElement g) const {
  if (g.j == 0) return make(-g.i, 0);
  // (x^i y)^-1 = y^-1 x^-i = x^{i+n} y
  return make(g.i + n_, 1);
}

QElement QGroup::pow(QElement g, const BigInt& e) const {
  // every element order divides 4n
  std::int64_t k = mod_floor(e, static_cast<std::int64_t>(4 * n_));
  QElement acc{};
  QElement base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

QElement QGroup::eval(const Word& w) const {
  QElement acc{};
  for (const auto& l : w.letters()) {
    QElement g;
    if (l.gen == "x") {
      g = x();
    } else if (l.gen == "y") {
      g = y();
    } else {
      throw std::invalid_argument("generator '" + l.gen + "' is not x or y");
    }
    acc = mul(acc, pow(g, l.exp));
  }
  return acc;
}

QElement QGroup::element(std::size_t idx) const {
  auto two_n = static_cast<std::size_t>(2 * n_);
  return {static_cast<long>(idx % two_n), static_cast<int>(idx / two_n)};
}

std::vector<QElement> QGroup::elements() const {
  std::vector<QElement> out;
  out.reserve(order());
  for (std::size_t k = 0; k < order(); ++k) out.push_back(element(k));
  return out;
}

std::string QGroup::to_string(QElement g) const {
  std::string s;
  if (g.i == 1) s = "x";
  else if (g.i != 0) s = "x^" + std::to_string(g.i);
  if (g.j) s += s.empty() ? "y" : "*y";
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------

BigInt GroupRingElement::normalize(BigInt c) const {
  if (modulus_ == 0) return c;
  return mod_floor(c, BigInt(modulus_));
}

void GroupRingElement::check_compatible(const GroupRingElement& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("group ring elements over different groups");
  if (modulus_ != o.modulus_) throw std::invalid_argument("group ring elements over mixed scalar rings");
}

void GroupRingElement::add_term(QElement g, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, 0);
  it->second = normalize(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::scalar(const QGroup& g, const BigInt& c, long modulus) {
  return basis(g, QElement{}, c, modulus);
}

GroupRingElement GroupRingElement::basis(const QGroup& g, QElement e, const BigInt& c, long modulus) {
  GroupRingElement r(g, modulus);
  r.add_term(e, c);
  return r;
}

GroupRingElement GroupRingElement::sigma(const QGroup& g, long modulus) {
  GroupRingElement r(g, modulus);
  for (auto e : g.elements()) r.add_term(e, 1);
  return r;
}

GroupRingElement GroupRingElement::from_word(const QGroup& g, const Word& w, long modulus) {
  return basis(g, g.eval(w), 1, modulus);
}

GroupRingElement GroupRingElement::x_poly(const QGroup& g, std::span<const BigInt> coeffs, long modulus) {
  GroupRingElement r(g, modulus);
  for (std::size_t k = 0; k < coeffs.size(); ++k) r.add_term(g.x(static_cast<long>(k)), coeffs[k]);
  return r;
}

GroupRingElement GroupRingElement::from_coords(const QGroup& g, std::span<const BigInt> coords, long modulus) {
  if (coords.size() != g.order()) throw std::invalid_argument("coordinate vector has wrong length");
  GroupRingElement r(g, modulus);
  for (std::size_t k = 0; k < coords.size(); ++k) r.add_term(g.element(k), coords[k]);
  return r;
}

BigInt GroupRingElement::coefficient(QElement g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt GroupRingElement::augmentation() const {
  BigInt s = 0;
  for (const auto& [g, c] : terms_) s += c;
  return normalize(s);
}

std::vector<BigInt> GroupRingElement::coords() const {
  std::vector<BigInt> v(group_.order(), BigInt(0));
  for (const auto& [g, c] : terms_) v[group_.index(g)] = c;
  return v;
}

GroupRingElement GroupRingElement::reduce_mod(long m) const {
  GroupRingElement r(group_, m);
  for (const auto& [g, c] : terms_) r.add_term(g, c);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(group_, modulus_);
  for (const auto& [g, c] : terms_) r.add_term(g, -c);
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& b) {
  check_compatible(b);
  for (const auto& [g, c] : b.terms_) add_term(g, c);
  return *this;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r = a;
  r += b;
  return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_compatible(b);
  GroupRingElement r(a.group_, a.modulus_);
  for (const auto& [g, c] : a.terms_) {
    for (const auto& [h, d] : b.terms_) r.add_term(a.group_.mul(g, h), c * d);
  }
  return r;
}

GroupRingElement operator*(const BigInt& c, const GroupRingElement& a) {
  GroupRingElement r(a.group_, a.modulus_);
  for (const auto& [g, d] : a.terms_) r.add_term(g, c * d);
  return r;
}

GroupRingElement GroupRingElement::operator*(QElement g) const {
  GroupRingElement r(group_, modulus_);
  for (const auto& [h, c] : terms_) r.add_term(group_.mul(h, g), c);
  return r;
}

GroupRingElement operator*(QElement g, const GroupRingElement& a) {
  GroupRingElement r(a.group_, a.modulus_);
  for (const auto& [h, c] : a.terms_) r.add_term(a.group_.mul(g, h), c);
  return r;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  // map order is (i, j) lexicographic
  std::string s;
  for (const auto& [g, c] : terms_) {
    std::string mono = group_.to_string(g);
    bool neg = c < 0;
    BigInt mag = abs(c);
    std::string term;
    if (mono == "1") term = mag.get_str();
    else if (mag == 1) term = mono;
    else term = mag.get_str() + mono;
    if (s.empty()) s = neg ? "-" + term : term;
    else s += (neg ? " - " : " + ") + term;
  }
  return s;
}

GroupRingElement parse_group_ring(const std::string& text, const QGroup& g, long modulus) {
  static const std::vector<std::string> gens{"x", "y"};
  detail::Scanner sc(text);
  GroupRingElement r(g, modulus);
  bool first = true;
  while (!sc.at_end()) {
    int sign = 1;
    if (sc.accept('-')) sign = -1;
    else if (!sc.accept('+') && !first) sc.fail("expected '+' or '-'");
    first = false;
    sc.skip_space();
    std::size_t line = sc.line(), col = sc.column();
    BigInt c = 1;
    bool have = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      c = sc.integer();
      have = true;
      sc.accept('*');
    }
    Word w = detail::parse_word_tokens(sc, gens);
    if (!have && w.empty()) throw ParseError("expected term", line, col);
    r.add_term(g.eval(w), sign * c);
  }
  if (first) sc.fail("empty group ring literal");
  return r;
}

}  // namespace pi2
