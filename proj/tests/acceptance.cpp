// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include "pi2/cli.hpp"
#include "pi2/enumerator.hpp"
#include "pi2/homotopy.hpp"
#include "pi2/milnor.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pi2;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect(const CheckReport& rep) {
    for (const auto& c : rep.checks())
      if (c.status != Status::Pass) failures.push_back(rep.name() + ": " + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]"));
  }
};

GroupRingElement lit(const char* s) { return parse_group_ring(s, QGroup(7)); }

void c1(Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  Verdict v = verify_q4n(enr(7, 3), 7);
  c.expect(v.surjection_ok, "relators of E(7,3) hold in Q28");
  c.expect(v.order == std::size_t{28}, "order of E(7,3) is 28");
  for (long n = 2; n <= 10; ++n) {
    CosetTable t = enumerate(enr(n, 3));
    c.expect(t.closed() && t.rows() == static_cast<std::size_t>(4 * n), "order of E(" + std::to_string(n) + ",3)");
  }
  for (long n : {2L, 4L, 5L, 7L, 8L, 10L}) {
    CosetTable t = enumerate(enr(n, 2));
    c.expect(t.closed() && t.rows() == static_cast<std::size_t>(4 * n), "order of E(" + std::to_string(n) + ",2)");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 10.0, "enumeration runtime under 10 s");
}

void c2(Criterion& c) {
  ChainComplex cx = boundary(standard_presentation(7), 7);
  c.expect(cx.d2[0][0] == lit("1 + x + x^2 + x^3 + x^4 + x^5 + x^6"), "d2 E1, e1 = sigma_x");
  c.expect(cx.d2[0][1] == lit("-1 - y"), "d2 E1, e2 = -(1+y)");
  c.expect(cx.d2[1][0] == lit("1 + y*x"), "d2 E2, e1 = 1+yx");
  c.expect(cx.d2[1][1] == lit("x - 1"), "d2 E2, e2 = x-1");
  c.expect(cx.composite_is_zero(), "d2 d1 = 0");
}

void c3(Criterion& c) {
  c.expect(verify_standard_u(7));
  c.expect(pi2_lattice(standard_presentation(7), 7).lattice.rank() == 27, "kernel lattice has rank 27");
}

void c4(Criterion& c) {
  QuarticWitness w = quartic_witness();
  c.expect(w.report);
  c.expect(w.alpha1 == std::vector<BigInt>{8, 16, 12}, "alpha1");
  c.expect(w.alpha2 == std::vector<BigInt>{12, 20, 16}, "alpha2");
  c.expect(w.alpha3 == std::vector<BigInt>{16, 28, 20}, "alpha3");
}

void c5(Criterion& c) {
  const std::vector<APoly> powers{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 3, 2},
                                  {2, 0, 3}, {3, 1, 0}, {0, 3, 1}, {1, 1, 3}, {3, 0, 1}};
  for (long k = 3; k <= 13; ++k)
    c.expect(APoly::x_pow(k) == powers[static_cast<std::size_t>(k - 3)], "x^" + std::to_string(k) + " in A");
  const std::vector<MPair> psis{{APoly(1, 0, 0), APoly(1, 0, 3)}, {APoly(0, 1, 0), APoly(3, 3, 1)},
                                {APoly(0, 0, 1), APoly(0, 1, 3)}, {APoly(1, 1, 0), APoly(1, 3, 0)},
                                {APoly(0, 1, 1), APoly(2, 0, 1)}, {APoly(1, 1, 1), APoly(2, 1, 2)}};
  QGroup g(7);
  for (long i = 0; i < 6; ++i)
    c.expect(psi(GroupRingElement::basis(g, g.x(i))) == psis[static_cast<std::size_t>(i)],
             "psi(x^" + std::to_string(i) + ")");
}

void c6(Criterion& c) {
  c.expect(verify_exotic_generators());
  QGroup g(7);
  PsiKernel k = psi_kernel();
  IntegerLattice sigma = IntegerLattice::span(std::vector<IntVector>{GroupRingElement::sigma(g).coords()}, 28);
  std::vector<Chain> gens{{GroupRingElement::scalar(g, 4)}, {phi1(g)}, {phi2(g)}};
  const char* names[] = {"4", "phi1", "phi2"};
  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<Chain> rest;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != drop) rest.push_back(gens[i]);
    IntegerLattice sub = lattice_sum(translate_span(rest), sigma);
    auto idx = lattice_index(sub, k.kernel);
    c.expect(sub != k.kernel, std::string("removing ") + names[drop] + " breaks equality (index " +
                                  (idx ? to_string(*idx) : std::string("infinite")) + ")");
  }
}

void c7(Criterion& c) {
  c.expect(kernel_correspondence_check());
  c.expect(pi2_lattice(rewritten_p_prime(), 7).lattice.rank() == 27, "rewritten kernel rank 27");
}

void c8(Criterion& c) {
  c.expect(sigma_factorization());
  c.expect(phi1_identities());
  c.expect(ideal_I_principal());
}

void c9(Criterion& c) {
  UnitCosetReport u = unit_cosets();
  c.expect(u.report);
  c.expect(freeness_obstruction(u));
  c.expect(u.units.size() == 48 && u.H.size() == 12, "|F49*| = 48 and |H| = 12");
  const char* argv[] = {"pi2", "theorem-a"};
  std::ostringstream out, err;
  int code = run_cli(2, argv, out, err);
  c.expect(code == 0 && out.str().find("conclusion: pass") != std::string::npos, "theorem-a exits 0 with pass");
}

void c10(Criterion& c) {
  QGroup g(7);
  GeneralCoefficients std_coeffs{GroupRingElement::scalar(g, 1), GroupRingElement(g), GroupRingElement::scalar(g, 1)};
  GeneralGenerators p = general_generators(standard_presentation(7), 7, std_coeffs);
  c.expect(p.report);
  c.expect(p.first == standard_u(g) && p.second[0].is_zero() && p.second[1].is_zero(), "P yields u and 0");
  GeneralCoefficients lam;
  lam.lambda = cubic(g);
  c.expect(general_generators(rewritten_p_prime(), 7, lam).report);
  c.expect(general_generators(enr(7, 2), 7).report);
}

void c11(Criterion& c) {
  using namespace pi2::test;
  Rng rng(2024);
  c.expect(fox_product_rule(rng, 1000) == 0, "fox product rule");
  c.expect(fox_fundamental_identity(rng, 1000) == 0, "fox fundamental identity");
  c.expect(conjugate_product_formula(rng, 200) == 0, "conjugate product formula");
  QGroup g(7);
  c.expect(ring_axioms([&] { return random_element(rng, g); }, 1000, GroupRingElement(g),
                       GroupRingElement::scalar(g, 1)) == 0, "ring axioms Z[Q28]");
  auto s = [&] { return to_S(random_element(rng, g)); };
  c.expect(ring_axioms(s, 1000, SElement{}, SElement::basis(0)) == 0, "ring axioms S");
  c.expect(ring_axioms([&] { return to_Lambda(s()); }, 1000, LambdaElement{}, LambdaElement::basis(0)) == 0,
           "ring axioms Lambda");
  auto a = [&] { return APoly(uniform(rng, 0, 3), uniform(rng, 0, 3), uniform(rng, 0, 3)); };
  c.expect(ring_axioms(a, 1000, APoly(), APoly(1, 0, 0)) == 0, "ring axioms A");
  auto f = [&] { return F49Element(uniform(rng, 0, 6), uniform(rng, 0, 6)); };
  c.expect(ring_axioms(f, 1000, F49Element(0, 0), F49Element(1, 0)) == 0, "ring axioms F49");
  auto gi = [&] { return GaussInt{uniform(rng, -50, 50), uniform(rng, -50, 50)}; };
  c.expect(ring_axioms(gi, 1000, GaussInt{0, 0}, GaussInt{1, 0}) == 0, "ring axioms Z[y]/(1+y^2)");
  c.expect(hnf_snf_identities(rng, 500) == 0, "hnf/snf identities");
  c.expect(kernel_oracle_sample(rng, 1000) == 0, "kernel oracle");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"enumeration of E(n,3) and E(n,2)", c1},
      {"boundary formulas for P", c2},
      {"standard pi2 generated by u", c3},
      {"ideal (x^3-x-1) contains 4", c4},
      {"power table in A and psi values", c5},
      {"explicit generators 4, phi1, phi2", c6},
      {"kernel correspondence", c7},
      {"Milnor square identities", c8},
      {"unit obstruction and theorem-a", c9},
      {"general generators", c10},
      {"property suites", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
    for (const auto& f : c.failures) std::cout << "    failed: " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
