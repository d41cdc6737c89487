#include <doctest.h>

#include "pi2/homotopy.hpp"
#include "support.hpp"

using namespace pi2;

namespace {
const QGroup q28(7);
GroupRingElement lit(const char* s) { return parse_group_ring(s, q28); }
const std::vector<std::string> kXY{"x", "y"};
}  // namespace

TEST_CASE("fox derivatives of the standard relators") {
  Word r1 = parse_word("y^-2 x^7", kXY), r2 = parse_word("y^-1 x y x", kXY);
  CHECK(fox(r1, "x", q28) == lit("1 + x + x^2 + x^3 + x^4 + x^5 + x^6"));
  CHECK(fox(r1, "y", q28) == lit("-1 - y"));
  CHECK(fox(r2, "x", q28) == lit("1 + y*x"));
  CHECK(fox(r2, "y", q28) == lit("x - 1"));
  CHECK(fox(Word::gen("x"), "y", 7).is_zero());
  CHECK(fox(Word::gen("x", -1), "x", q28) == lit("-x^-1"));
  CHECK_THROWS_AS(fox(Word::gen("z"), "x", q28), std::invalid_argument);
  // exponents far beyond the group order reduce exactly
  CHECK(fox(Word::gen("x", 14 * 1000 + 3), "x", q28) ==
        BigInt(1000) * fox(Word::gen("x", 14), "x", q28) + lit("1 + x + x^2"));
}

TEST_CASE("boundary of the standard presentation") {
  ChainComplex cx = boundary(standard_presentation(7), 7);
  REQUIRE(cx.cells2() == 2);
  CHECK(cx.d2[0][0] == lit("1 + x + x^2 + x^3 + x^4 + x^5 + x^6"));
  CHECK(cx.d2[0][1] == lit("-1 - y"));
  CHECK(cx.d2[1][0] == lit("1 + y*x"));
  CHECK(cx.d2[1][1] == lit("x - 1"));
  CHECK(cx.composite_is_zero());
  CHECK(cx.d2_int.rows() == 56);
  CHECK(cx.d2_int.cols() == 56);
}

TEST_CASE("rewritten E73: second row is the standard row times x^3 - x - 1") {
  ChainComplex s = boundary(standard_presentation(7), 7);
  ChainComplex r = boundary(rewritten_p_prime(), 7);
  CHECK(r.d2[0] == s.d2[0]);
  CHECK(r.d2[1][0] == s.d2[1][0] * cubic(q28));
  CHECK(r.d2[1][1] == s.d2[1][1] * cubic(q28));
  CHECK(r.composite_is_zero());
  CHECK(boundary(enr(7, 3), 7).composite_is_zero());
}

TEST_CASE("boundary preconditions") {
  CHECK_THROWS_AS(boundary(parse_presentation("<x, y | x y = y x>"), 7), BoundaryError);
  CHECK_THROWS_AS(boundary(enr(7, 3), 6), BoundaryError);
  ChainComplex forced = boundary(parse_presentation("<x, y | x y = y x>"), 7, {false, true});
  CHECK_FALSE(forced.composite_is_zero());
  CHECK(forced.composite_witness() == std::size_t{0});
}

TEST_CASE("pi2 lattices") {
  Pi2Lattice p = pi2_lattice(standard_presentation(7), 7);
  CHECK(p.lattice.rank() == 27);
  CHECK(p.ambient() == 56);
  CHECK(p.is_g_stable());
  ChainComplex cx = boundary(standard_presentation(7), 7);
  for (std::size_t r = 0; r < p.lattice.rank(); ++r) CHECK(is_zero(row_times(p.lattice.basis().row(r), cx.d2_int)));
  // rank by an independent rational elimination
  CHECK(p.lattice.rank() == 56 - test::rational_rank(cx.d2_int));

  Pi2Lattice q = pi2_lattice(rewritten_p_prime(), 7);
  CHECK(q.lattice.rank() == 27);
  CHECK(q.is_g_stable());
  CHECK(pi2_lattice(enr(7, 3), 7).lattice.rank() == 27);
}

TEST_CASE("single relation: kernel of a 1 x 2 row") {
  ChainComplex cx = boundary(parse_presentation("<x, y | y^2 = x^7>"), 7, {false, false});
  CHECK(cx.cells2() == 1);
  Pi2Lattice p = pi2_lattice(cx);
  CHECK(p.lattice.rank() == 28 - test::rational_rank(cx.d2_int));
  for (std::size_t r = 0; r < p.lattice.rank(); ++r) CHECK(is_zero(row_times(p.lattice.basis().row(r), cx.d2_int)));
}

TEST_CASE("standard generator u") {
  CHECK(verify_standard_u(7).ok());
  CHECK(verify_standard_u(2).ok());
  CHECK(verify_standard_u(5).ok());
  CheckReport bad = verify_standard_u(7, {lit("x - 1"), lit("1 + y*x")});
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.first_failure());
  CHECK(bad.first_failure()->name == "u in ker d2");
  CHECK(bad.first_failure()->witness.find("d2(u) = ") == 0);
}

TEST_CASE("quartic witness") {
  QuarticWitness w = quartic_witness();
  CHECK(w.report.ok());
  CHECK(w.alpha1 == std::vector<BigInt>{8, 16, 12});
  CHECK(w.alpha2 == std::vector<BigInt>{12, 20, 16});
  CHECK(w.alpha3 == std::vector<BigInt>{16, 28, 20});
  CHECK(w.p * cubic(q28) == GroupRingElement::scalar(q28, 4));
  // alpha3 + alpha2 - 3 alpha1 = 4
  for (std::size_t k = 0; k < 3; ++k) CHECK(w.alpha3[k] + w.alpha2[k] - 3 * w.alpha1[k] == (k == 0 ? 4 : 0));
}

TEST_CASE("right annihilators") {
  CHECK(right_annihilator(cubic(q28)).is_zero());
  CHECK(right_annihilator(GroupRingElement::scalar(q28, 1)).is_zero());
  IntegerLattice a = right_annihilator(GroupRingElement::sigma(q28));
  CHECK(a.rank() == 27);
  IntMatrix aug(28, 1);
  for (std::size_t k = 0; k < 28; ++k) aug(k, 0) = 1;
  CHECK(a == IntegerLattice::span(test::rational_left_kernel(aug), 28));
}

TEST_CASE("ideal generated by x^3 - x - 1 has index 4096") {
  auto idx = lattice_index(IntegerLattice::span(left_mul_matrix(cubic(q28))), IntegerLattice::full(28));
  REQUIRE(idx);
  CHECK(*idx == 4096);
  CHECK(abs(test::bareiss_det(left_mul_matrix(cubic(q28)))) == 4096);
}

TEST_CASE("psi table and kernel") {
  PsiKernel k = psi_kernel();
  CHECK(k.report.ok());
  CHECK(k.table[0] == MPair{APoly(1, 0, 0), APoly(1, 0, 3)});
  CHECK(k.table[1] == MPair{APoly(0, 1, 0), APoly(3, 3, 1)});
  CHECK(k.table[2] == MPair{APoly(0, 0, 1), APoly(0, 1, 3)});
  CHECK(k.table[3] == MPair{APoly(1, 1, 0), APoly(1, 3, 0)});
  CHECK(k.table[4] == MPair{APoly(0, 1, 1), APoly(2, 0, 1)});
  CHECK(k.table[5] == MPair{APoly(1, 1, 1), APoly(2, 1, 2)});
  CHECK(psi(GroupRingElement::sigma(q28)).is_zero());
  CHECK(k.matrix6 == expected_psi_matrix6());
  CHECK(k.kernel.contains(GroupRingElement::sigma(q28).coords()));
  CHECK(k.kernel.contains(GroupRingElement::scalar(q28, 4).coords()));
  CHECK_FALSE(k.kernel.contains(GroupRingElement::scalar(q28, 2).coords()));
}

TEST_CASE("explicit generators of the psi kernel") {
  CheckReport rep = verify_exotic_generators();
  CHECK(rep.ok());
  CheckReport bad = verify_exotic_generators(lit("2 + 2x - x^3 - x^3*y"));
  CHECK_FALSE(bad.ok());
}

TEST_CASE("generator redundancy indices") {
  // indices in K, frozen from an independent Hermite form computation
  PsiKernel k = psi_kernel();
  IntegerLattice sigma = IntegerLattice::span(std::vector<IntVector>{GroupRingElement::sigma(q28).coords()}, 28);
  auto sub = [&](std::vector<Chain> gens) { return lattice_sum(translate_span(gens), sigma); };
  GroupRingElement four = GroupRingElement::scalar(q28, 4);
  CHECK(lattice_index(sub({{phi1(q28)}, {phi2(q28)}}), k.kernel) == BigInt(1));
  CHECK(lattice_index(sub({{four}, {phi2(q28)}}), k.kernel) == BigInt(4));
  CHECK(lattice_index(sub({{four}, {phi1(q28)}}), k.kernel) == BigInt(4096));
  CHECK(lattice_index(k.kernel, IntegerLattice::full(28)) == BigInt(4096));
}

TEST_CASE("solve recovers the phi2 cofactor") {
  auto b = solve(left_mul_matrix(cubic(q28)), (lit("1 - y*x") * phi2(q28)).coords());
  REQUIRE(b);
  CHECK(GroupRingElement::from_coords(q28, *b) == lit("-2") + lit("x^4 + x^2 + x - 1") * lit("x^-4*y"));
}

TEST_CASE("kernel correspondence") { CHECK(kernel_correspondence_check().ok()); }

TEST_CASE("general generators: standard presentation") {
  GeneralCoefficients c{GroupRingElement::scalar(q28, 1), GroupRingElement(q28), GroupRingElement::scalar(q28, 1)};
  GeneralGenerators g = general_generators(standard_presentation(7), 7, c);
  CHECK(g.report.ok());
  CHECK(g.first == standard_u(q28));
  CHECK(g.second[0].is_zero());
  CHECK(g.second[1].is_zero());
}

TEST_CASE("general generators: rewritten E73 and E72") {
  GeneralCoefficients c;
  c.lambda = cubic(q28);
  GeneralGenerators r = general_generators(rewritten_p_prime(), 7, c);
  CHECK(r.report.ok());
  GeneralGenerators solved = general_generators(rewritten_p_prime(), 7);
  CHECK(solved.report.ok());
  GeneralGenerators e72 = general_generators(enr(7, 2), 7);
  CHECK(e72.report.ok());
  CHECK_THROWS_AS(general_generators(enr(6, 2), 6), BoundaryError);
}
