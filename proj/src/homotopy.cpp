#include "pi2/homotopy.hpp"

#include "pi2/enumerator.hpp"

#include <algorithm>

namespace pi2 {

namespace {

QElement generator_element(const QGroup& g, const std::string& name) {
  if (name == "x") return g.x();
  if (name == "y") return g.y();
  throw std::invalid_argument("fox: unknown generator '" + name + "'");
}

long element_order(const QGroup& g, QElement t) {
  QElement e = t;
  long k = 1;
  while (e != QElement{}) {
    e = g.mul(e, t);
    ++k;
  }
  return k;
}

// Sum of t^k over 0 <= k < e, or minus the sum over e <= k < 0.
GroupRingElement geometric(const QGroup& g, QElement t, const BigInt& e) {
  long ord = element_order(g, t);
  BigInt r = mod_floor(e, BigInt(ord));
  BigInt q = (e - r) / ord;
  GroupRingElement cycle(g), partial(g);
  QElement p{};
  long rr = r.get_si();
  for (long k = 0; k < ord; ++k) {
    cycle.add_term(p, 1);
    if (k < rr) partial.add_term(p, 1);
    p = g.mul(p, t);
  }
  return q * cycle + partial;
}

std::string chain_string(const Chain& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].to_string();
  }
  return s + ")";
}

bool chain_is_zero(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](const GroupRingElement& e) { return e.is_zero(); });
}

nlohmann::ordered_json rows_json(const std::vector<Chain>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& e : r) row.push_back(e.to_string());
    out.push_back(row);
  }
  return out;
}

GroupRingElement lit(const QGroup& g, const std::string& s) { return parse_group_ring(s, g); }

std::vector<Chain> fox_rows(const Presentation& p, const QGroup& g) {
  std::vector<Chain> rows;
  for (const auto& r : p.relators()) rows.push_back({fox(r, "x", g), fox(r, "y", g)});
  return rows;
}

// Matrix of c -> (row[0] c, row[1] c, ...) on coordinates of c.
IntMatrix row_action_matrix(const Chain& row) {
  const QGroup& g = row.front().group();
  std::size_t n = g.order();
  IntMatrix m(n, n * row.size());
  for (std::size_t k = 0; k < n; ++k) {
    QElement h = g.element(k);
    for (std::size_t t = 0; t < row.size(); ++t) {
      auto c = (row[t] * h).coords();
      for (std::size_t j = 0; j < n; ++j) m(k, t * n + j) = c[j];
    }
  }
  return m;
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = a;
  for (std::size_t r = 0; r < b.rows(); ++r) m.append_row(b.row(r));
  return m;
}

}  // namespace

GroupRingElement fox(const Word& w, const std::string& t, const QGroup& g) {
  QElement te = generator_element(g, t);
  GroupRingElement result(g);
  QElement suffix{};
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    QElement s = generator_element(g, it->gen);
    if (it->gen == t) result += geometric(g, te, it->exp) * suffix;
    suffix = g.mul(g.pow(s, it->exp), suffix);
  }
  return result;
}

IntMatrix left_mul_matrix(const GroupRingElement& c) {
  const QGroup& g = c.group();
  std::size_t n = g.order();
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = (c * g.element(k)).coords();
    for (std::size_t j = 0; j < n; ++j) m(k, j) = v[j];
  }
  return m;
}

IntMatrix right_mul_matrix(const GroupRingElement& c) {
  const QGroup& g = c.group();
  std::size_t n = g.order();
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = (g.element(k) * c).coords();
    for (std::size_t j = 0; j < n; ++j) m(k, j) = v[j];
  }
  return m;
}

IntVector chain_coords(const Chain& chain) {
  IntVector out;
  for (const auto& e : chain) {
    auto c = e.coords();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Chain chain_from_coords(const QGroup& g, std::span<const BigInt> coords, std::size_t cells) {
  std::size_t n = g.order();
  if (coords.size() != n * cells) throw std::invalid_argument("chain_from_coords: size mismatch");
  Chain out;
  for (std::size_t r = 0; r < cells; ++r) out.push_back(GroupRingElement::from_coords(g, coords.subspan(r * n, n)));
  return out;
}

Chain chain_act(const Chain& chain, QElement h) {
  Chain out;
  for (const auto& e : chain) out.push_back(e * h);
  return out;
}

IntegerLattice translate_span(const std::vector<Chain>& gens) {
  if (gens.empty()) throw std::invalid_argument("translate_span: no generators");
  const QGroup& g = gens.front().front().group();
  std::vector<IntVector> rows;
  for (const auto& c : gens)
    for (auto h : g.elements()) rows.push_back(chain_coords(chain_act(c, h)));
  return IntegerLattice::span(rows, g.order() * gens.front().size());
}

// ---------------------------------------------------------------------------

Chain ChainComplex::apply_d2(const Chain& c) const {
  if (c.size() != d2.size()) throw std::invalid_argument("apply_d2: wrong number of cells");
  Chain out(cells1(), GroupRingElement(group));
  for (std::size_t r = 0; r < d2.size(); ++r)
    for (std::size_t t = 0; t < cells1(); ++t) out[t] += d2[r][t] * c[r];
  return out;
}

std::optional<std::size_t> ChainComplex::composite_witness() const {
  for (std::size_t r = 0; r < d2.size(); ++r) {
    GroupRingElement s(group);
    for (std::size_t t = 0; t < cells1(); ++t) s += d1[t] * d2[r][t];
    if (!s.is_zero()) return r;
  }
  return std::nullopt;
}

bool ChainComplex::composite_is_zero() const { return !composite_witness().has_value(); }

ChainComplex boundary(const Presentation& p, long n, BoundaryOptions opts) {
  if (p.generators() != std::vector<std::string>{"x", "y"})
    throw BoundaryError("boundary: generators must be x, y");
  ChainComplex cx;
  cx.group = QGroup(n);
  cx.presentation = p;
  const QGroup& g = cx.group;
  if (!opts.allow_nontrivial) {
    for (const auto& r : p.relators())
      if (g.eval(r) != QElement{})
        throw BoundaryError("boundary: relator " + r.to_string() + " is not trivial in Q_" + std::to_string(4 * n));
  }
  if (opts.require_presents) {
    Verdict v = verify_q4n(p, n);
    if (!v.presents_q4n) throw BoundaryError("boundary: presentation does not present Q_" + std::to_string(4 * n) + ": " + v.witness);
  }
  cx.d2 = fox_rows(p, g);
  cx.d1 = {GroupRingElement::basis(g, g.x()) - GroupRingElement::scalar(g, 1),
           GroupRingElement::basis(g, g.y()) - GroupRingElement::scalar(g, 1)};
  std::size_t order = g.order();
  cx.d2_int = IntMatrix(0, 2 * order);
  for (const auto& row : cx.d2) {
    IntMatrix block = row_action_matrix(row);
    for (std::size_t k = 0; k < order; ++k) cx.d2_int.append_row(block.row(k));
  }
  return cx;
}

bool Pi2Lattice::is_g_stable() const {
  const auto& b = lattice.basis();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    Chain c = chain_from_coords(group, b.row(r), cells);
    for (QElement h : {group.x(), group.y()})
      if (!lattice.contains(chain_coords(chain_act(c, h)))) return false;
  }
  return true;
}

Pi2Lattice pi2_lattice(const ChainComplex& cx) {
  Pi2Lattice out;
  out.group = cx.group;
  out.cells = cx.cells2();
  out.lattice = kernel_basis(cx.d2_int);
  out.provenance = cx.presentation.to_string();
  return out;
}

Pi2Lattice pi2_lattice(const Presentation& p, long n, BoundaryOptions opts) {
  return pi2_lattice(boundary(p, n, opts));
}

Chain standard_u(const QGroup& g) {
  return {lit(g, "x - 1"), lit(g, "1 - y*x")};
}

CheckReport verify_standard_u(long n) { return verify_standard_u(n, standard_u(QGroup(n))); }

CheckReport verify_standard_u(long n, const Chain& u) {
  CheckReport rep("standard u");
  QGroup g(n);
  ChainComplex cx = boundary(standard_presentation(n), n);
  Chain du = cx.apply_d2(u);
  rep.add("u in ker d2", chain_is_zero(du), chain_is_zero(du) ? "" : "d2(u) = " + chain_string(du));

  Pi2Lattice pi = pi2_lattice(cx);
  IntegerLattice span = translate_span({u});
  rep.add("translates of u span pi2", span == pi.lattice,
          "rank " + std::to_string(span.rank()) + " vs " + std::to_string(pi.lattice.rank()));

  IntMatrix ann(0, 2 * g.order());
  for (auto h : g.elements()) {
    Chain c;
    for (const auto& e : u) c.push_back(e * h);
    ann.append_row(chain_coords(c));
  }
  IntegerLattice k = kernel_basis(ann);
  IntegerLattice sigma = IntegerLattice::span(std::vector<IntVector>{GroupRingElement::sigma(g).coords()}, g.order());
  rep.add("annihilator of u is Z Sigma_G", k == sigma, "annihilator rank " + std::to_string(k.rank()));
  rep.detail()["d2"] = rows_json(cx.d2);
  rep.detail()["pi2_basis"] = pi.lattice.to_json();
  return rep;
}

// ---------------------------------------------------------------------------

GroupRingElement cubic(const QGroup& q28) { return lit(q28, "x^3 - x - 1"); }
GroupRingElement phi1(const QGroup& q28) { return lit(q28, "x^6 + x^5 - x^4 - 3x^3 - x^2 + x + 1"); }
GroupRingElement phi2(const QGroup& q28) { return lit(q28, "2 + 2x - x^3 + x^3*y"); }

namespace {

using Poly = std::vector<BigInt>;

// Product modulo x^14 - 1.
Poly cyclic_mul(const Poly& a, const Poly& b) {
  Poly out(14, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[(i + j) % 14] += a[i] * b[j];
  return out;
}

Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string poly_string(const Poly& p) {
  QGroup g(7);
  return GroupRingElement::x_poly(g, p).to_string();
}

}  // namespace

QuarticWitness quartic_witness() {
  QuarticWitness w{GroupRingElement(QGroup(7)), {}, {}, {}, {}, CheckReport("quartic witness")};
  QGroup g(7);
  const Poly c{-1, -1, 0, 1};

  // x^14 - 1 = c q0 + alpha1
  Poly rem(15, BigInt(0));
  rem[0] = -1;
  rem[14] = 1;
  Poly q0(12, BigInt(0));
  for (std::size_t d = 14; d >= 3; --d) {
    BigInt lead = rem[d];
    if (lead == 0) continue;
    q0[d - 3] = lead;
    for (std::size_t k = 0; k < c.size(); ++k) rem[d - 3 + k] -= lead * c[k];
  }
  rem.resize(3);
  w.quotient = q0;
  w.alpha1 = rem;

  auto neg = [](Poly p) {
    for (auto& v : p) v = -v;
    return p;
  };
  auto shift = [](const Poly& p) {
    Poly out(p.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
    return out;
  };
  auto add = [](Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  Poly p1 = neg(q0);
  Poly p2 = add(shift(p1), Poly{-12});
  Poly p3 = add(shift(shift(p1)), Poly{-16, -12});

  auto a1 = trimmed(cyclic_mul(p1, c));
  w.alpha2 = trimmed(cyclic_mul(p2, c));
  w.alpha3 = trimmed(cyclic_mul(p3, c));
  w.report.add("alpha1 = 12x^2 + 16x + 8", trimmed(w.alpha1) == Poly{8, 16, 12} && a1 == Poly{8, 16, 12},
               poly_string(w.alpha1));
  w.report.add("alpha2 = 16x^2 + 20x + 12", w.alpha2 == Poly{12, 20, 16}, poly_string(w.alpha2));
  w.report.add("alpha3 = 20x^2 + 28x + 16", w.alpha3 == Poly{16, 28, 20}, poly_string(w.alpha3));

  Poly p = add(add(p3, p2), neg(add(add(p1, p1), p1)));
  w.p = GroupRingElement::x_poly(g, p);
  GroupRingElement prod = w.p * cubic(g);
  w.report.add("p (x^3 - x - 1) = 4", prod == GroupRingElement::scalar(g, 4), prod.to_string());

  IntegerLattice ann = right_annihilator(cubic(g));
  w.report.add("right annihilator of x^3 - x - 1 is zero", ann.is_zero(), "rank " + std::to_string(ann.rank()));
  auto index = lattice_index(IntegerLattice::span(left_mul_matrix(cubic(g))), IntegerLattice::full(g.order()));
  w.report.add("|Z[Q28]/(x^3 - x - 1)| = 4096", index && *index == 4096,
               index ? "index " + to_string(*index) : "infinite index");
  return w;
}

IntegerLattice right_annihilator(const GroupRingElement& v) { return kernel_basis(left_mul_matrix(v)); }

// ---------------------------------------------------------------------------

MPair psi(const GroupRingElement& v) { return m_from_ring(lit(v.group(), "1 - y*x") * v); }

namespace {

IntVector mpair_row(const MPair& m) {
  return {m.a.c2(), m.a.c1(), m.a.c0(), m.b.c2(), m.b.c1(), m.b.c0()};
}

}  // namespace

IntMatrix psi_matrix() {
  QGroup g(7);
  IntMatrix m(0, 6);
  for (auto h : g.elements()) m.append_row(mpair_row(psi(GroupRingElement::basis(g, h))));
  return m;
}

IntMatrix expected_psi_matrix6() {
  return {{0, 0, 1, 3, 0, 1}, {0, 1, 0, 1, 3, 3}, {1, 0, 0, 3, 1, 0},
          {0, 1, 1, 0, 3, 1}, {1, 1, 0, 1, 0, 2}, {1, 1, 1, 2, 1, 2}};
}

PsiKernel psi_kernel() {
  QGroup g(7);
  PsiKernel out;
  out.report = CheckReport("psi kernel");
  IntMatrix m = psi_matrix();
  out.matrix6 = m.row_block(0, 6);
  for (long i = 0; i < 6; ++i) out.table[i] = psi(GroupRingElement::basis(g, g.x(i)));
  out.kernel = kernel_mod(m, 4);
  GroupRingElement sigma = GroupRingElement::sigma(g);
  out.report.add("psi(Sigma_G) = 0", psi(sigma).is_zero(), psi(sigma).to_string());
  out.report.add("Sigma_G in K", out.kernel.contains(sigma.coords()));
  out.report.add("K has full rank", out.kernel.rank() == g.order(), "rank " + std::to_string(out.kernel.rank()));
  out.report.detail()["psi_matrix"] = m.to_json();
  out.report.detail()["kernel_basis"] = out.kernel.to_json();
  return out;
}

CheckReport verify_exotic_generators() { return verify_exotic_generators(phi2(QGroup(7))); }

CheckReport verify_exotic_generators(const GroupRingElement& phi2_value) {
  CheckReport rep("exotic generators");
  QGroup g(7);
  GroupRingElement c = cubic(g), four = GroupRingElement::scalar(g, 4), f1 = phi1(g);
  GroupRingElement one_minus_yx = lit(g, "1 - y*x");

  rep.add("psi(4) = 0", psi(four).is_zero(), psi(four).to_string());
  rep.add("psi(phi1) = 0", psi(f1).is_zero(), psi(f1).to_string());
  rep.add("psi(phi2) = 0", psi(phi2_value).is_zero(), psi(phi2_value).to_string());

  GroupRingElement w1 = -(c * lit(g, "x^-3 - x^-1 - 1") * g.x(3));
  rep.add("phi1 = -(x^3-x-1)(x^-3-x^-1-1)x^3", w1 == f1, w1.to_string());
  GroupRingElement cofactor = lit(g, "-2") + lit(g, "x^4 + x^2 + x - 1") * lit(g, "x^-4*y");
  GroupRingElement lhs = one_minus_yx * phi2_value;
  rep.add("(1-yx)phi2 = (x^3-x-1)(-2+(x^4+x^2+x-1)x^-4 y)", lhs == c * cofactor, lhs.to_string());
  auto b = solve(left_mul_matrix(c), lhs.coords());
  rep.add("solve (x^3-x-1) b = (1-yx)phi2", b && GroupRingElement::from_coords(g, *b) == cofactor,
          b ? GroupRingElement::from_coords(g, *b).to_string() : "no solution");

  IntMatrix m6 = psi_matrix().row_block(0, 6);
  rep.add("6x6 matrix matches", m6 == expected_psi_matrix6(), m6.to_string());
  BigInt det = determinant(m6);
  BigInt det4 = mod_floor(det, BigInt(4));
  rep.add("6x6 matrix invertible mod 4", det4 % 2 == 1, "det = " + to_string(det) + " = " + to_string(det4) + " mod 4");

  PsiKernel k = psi_kernel();
  std::vector<Chain> gens{{four}, {f1}, {phi2_value}};
  IntegerLattice sigma = IntegerLattice::span(std::vector<IntVector>{GroupRingElement::sigma(g).coords()}, g.order());
  IntegerLattice span = lattice_sum(translate_span(gens), sigma);
  rep.add("span{4, phi1, phi2} + Z Sigma_G = K", span == k.kernel,
          "rank " + std::to_string(span.rank()) + " vs " + std::to_string(k.kernel.rank()));

  const char* names[] = {"4", "phi1", "phi2"};
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    std::vector<Chain> rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != drop) rest.push_back(gens[i]);
    IntegerLattice sub = lattice_sum(translate_span(rest), sigma);
    std::string witness;
    bool strict = sub != k.kernel;
    if (k.kernel.contains(sub)) {
      auto idx = lattice_index(sub, k.kernel);
      witness = idx ? "index " + to_string(*idx) : "infinite index";
    } else {
      witness = "not contained in K";
    }
    if (drop == 0) {
      // 4 already lies in the translate span of phi1, phi2
      rep.note(std::string("dropping 4: ") + (strict ? "equality breaks, " : "equality holds, ") + witness);
      continue;
    }
    rep.add(std::string("dropping ") + names[drop] + " breaks equality", strict, witness);
  }
  rep.detail()["matrix6"] = m6.to_json();
  return rep;
}

CheckReport kernel_correspondence_check() {
  CheckReport rep("kernel correspondence");
  QGroup g(7);
  GroupRingElement c = cubic(g), xm1 = lit(g, "x - 1"), one_minus_yx = lit(g, "1 - y*x");
  ChainComplex cx = boundary(rewritten_p_prime(), 7);
  IntMatrix cmat = left_mul_matrix(c);
  PsiKernel k = psi_kernel();

  auto image = [&](const GroupRingElement& gamma) -> std::optional<Chain> {
    auto b = solve(cmat, (one_minus_yx * gamma).coords());
    if (!b) return std::nullopt;
    return Chain{xm1 * gamma, GroupRingElement::from_coords(g, *b)};
  };

  const IntMatrix& kb = k.kernel.basis();
  IntMatrix images(0, 2 * g.order());
  bool all_solved = true, all_cycles = true;
  std::string witness;
  for (std::size_t r = 0; r < kb.rows(); ++r) {
    GroupRingElement gamma = GroupRingElement::from_coords(g, kb.row(r));
    auto ch = image(gamma);
    if (!ch) {
      all_solved = false;
      if (witness.empty()) witness = "no b for gamma = " + gamma.to_string();
      continue;
    }
    if (!chain_is_zero(cx.apply_d2(*ch))) {
      all_cycles = false;
      if (witness.empty()) witness = "not a cycle for gamma = " + gamma.to_string();
    }
    images.append_row(chain_coords(*ch));
  }
  rep.add("b solvable for every kernel basis element", all_solved, witness);
  rep.add("F1 a + F2 b in ker d2'", all_cycles, witness);

  Pi2Lattice pi = pi2_lattice(cx);
  IntegerLattice img = IntegerLattice::span(images);
  rep.add("image equals pi2 of rewritten P'", img == pi.lattice,
          "ranks " + std::to_string(img.rank()) + ", " + std::to_string(pi.lattice.rank()));
  rep.add("pi2 of rewritten P' has rank 27", pi.lattice.rank() == 27, std::to_string(pi.lattice.rank()));

  if (all_solved) {
    IntegerLattice kern = kernel_basis(images);
    std::vector<IntVector> back;
    for (std::size_t r = 0; r < kern.rank(); ++r) back.push_back(row_times(kern.basis().row(r), kb));
    IntegerLattice kernel_gamma = IntegerLattice::span(back, g.order());
    IntegerLattice sigma =
        IntegerLattice::span(std::vector<IntVector>{GroupRingElement::sigma(g).coords()}, g.order());
    rep.add("map kernel is Z Sigma_G", kernel_gamma == sigma, "rank " + std::to_string(kernel_gamma.rank()));
  }

  for (const auto& [name, gamma] : {std::pair{std::string("4"), GroupRingElement::scalar(g, 4)},
                                    std::pair{std::string("phi1"), phi1(g)}}) {
    auto ch = image(gamma);
    rep.add("gamma = " + name + " maps into ker d2'", ch && chain_is_zero(cx.apply_d2(*ch)),
            ch ? chain_string(*ch) : "no solution");
  }
  auto sig = image(GroupRingElement::sigma(g));
  rep.add("gamma = Sigma_G maps to zero", sig && chain_is_zero(*sig), sig ? chain_string(*sig) : "no solution");

  // Original P' against the rewritten form.
  ChainComplex orig = boundary(enr(7, 3), 7);
  Pi2Lattice pi_orig = pi2_lattice(orig);
  rep.add("pi2 of original P' has rank 27", pi_orig.lattice.rank() == 27, std::to_string(pi_orig.lattice.rank()));
  auto f_orig = invariant_factors(orig.d2_int);
  auto f_rew = invariant_factors(cx.d2_int);
  rep.add("d2 invariant factors agree (original, rewritten)", f_orig == f_rew,
          std::to_string(f_orig.size()) + " vs " + std::to_string(f_rew.size()) + " factors");
  rep.detail()["d2_rewritten"] = rows_json(cx.d2);
  return rep;
}

// ---------------------------------------------------------------------------

GeneralGenerators general_generators(const Presentation& p, long n, const GeneralCoefficients& given) {
  QGroup g(n);
  GeneralGenerators out{GroupRingElement(g), GroupRingElement(g), GroupRingElement(g), {}, {},
                        CheckReport("general generators")};
  CheckReport& rep = out.report;
  Presentation std_p = standard_presentation(n);
  if (p.relations().size() != 2) throw std::invalid_argument("general_generators: expected two relations");
  if (p.relator(0) != std_p.relator(0))
    throw std::invalid_argument("general_generators: first relation must be y^2 = x^" + std::to_string(n));

  ChainComplex sx = boundary(std_p, n);
  ChainComplex cx = boundary(p, n);
  const Chain& e2 = sx.d2[1];
  const Chain& g1 = cx.d2[0];
  const Chain& g2 = cx.d2[1];
  std::size_t ord = g.order();

  auto scaled = [](const Chain& row, const GroupRingElement& c) {
    Chain out;
    for (const auto& e : row) out.push_back(e * c);
    return out;
  };
  auto sum = [](const Chain& a, const Chain& b) {
    Chain out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
  };

  if (given.lambda) {
    out.lambda = *given.lambda;
  } else {
    auto s = solve(row_action_matrix(e2), chain_coords(g2));
    if (!s) throw std::runtime_error("general_generators: no integer lambda");
    out.lambda = GroupRingElement::from_coords(g, *s);
  }
  rep.add("d2'' G2 = d2 E2 lambda", scaled(e2, out.lambda) == g2, out.lambda.to_string());

  if (given.mu1 && given.mu2) {
    out.mu1 = *given.mu1;
    out.mu2 = *given.mu2;
  } else {
    IntMatrix m = stack(row_action_matrix(g1), row_action_matrix(g2));
    auto s = solve(m, chain_coords(e2));
    if (!s) throw std::runtime_error("general_generators: no integer mu1, mu2");
    std::span<const BigInt> v(*s);
    out.mu1 = GroupRingElement::from_coords(g, v.subspan(0, ord));
    out.mu2 = GroupRingElement::from_coords(g, v.subspan(ord, ord));
  }
  rep.add("d2 E2 = d2'' G1 mu1 + d2'' G2 mu2", sum(scaled(g1, out.mu1), scaled(g2, out.mu2)) == e2,
          out.mu1.to_string() + "; " + out.mu2.to_string());

  GroupRingElement one = GroupRingElement::scalar(g, 1), xm1 = lit(g, "x - 1"), a = lit(g, "1 - y*x");
  out.first = {xm1 + out.mu1 * a, out.mu2 * a};
  out.second = {-(out.mu1 * out.lambda), one - out.mu2 * out.lambda};

  Chain d_first = cx.apply_d2(out.first), d_second = cx.apply_d2(out.second);
  rep.add("first generator in ker d2''", chain_is_zero(d_first), chain_string(d_first));
  rep.add("second generator in ker d2''", chain_is_zero(d_second), chain_string(d_second));
  Pi2Lattice pi = pi2_lattice(cx);
  IntegerLattice span = translate_span({out.first, out.second});
  rep.add("translates span pi2", span == pi.lattice,
          "rank " + std::to_string(span.rank()) + " vs " + std::to_string(pi.lattice.rank()));
  rep.detail()["first"] = rows_json({out.first});
  rep.detail()["second"] = rows_json({out.second});
  return out;
}

}  // namespace pi2
