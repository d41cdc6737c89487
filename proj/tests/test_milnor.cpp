#include <doctest.h>

#include "pi2/homotopy.hpp"
#include "pi2/milnor.hpp"
#include "support.hpp"

using namespace pi2;

TEST_CASE("sigma factorization") { CHECK(sigma_factorization().ok()); }

TEST_CASE("the ideal N") {
  IdealLattice n = build_N();
  CHECK(n.ring == RingTag::S);
  CHECK(n.lattice.rank() == 14);
  CHECK(n.is_right_ideal());
  // index frozen from an independent Hermite form computation
  CHECK(lattice_index(n.lattice, IntegerLattice::full(14)) == BigInt(64));
  CHECK(build_N_checks().ok());
}

TEST_CASE("phi1 identities") { CHECK(phi1_identities().ok()); }

TEST_CASE("the ideal I is principal") {
  CheckReport rep = ideal_I_principal();
  CHECK(rep.ok());
  // |det| of right multiplication by 1 + yx on Lambda, from an independent model
  CHECK(rep.detail()["det"] == "64");
}

TEST_CASE("unit cosets of <3, y> in F49") {
  UnitCosetReport u = unit_cosets();
  CHECK(u.report.ok());
  CHECK(u.units.size() == 48);
  CHECK(u.H.size() == 12);
  CHECK(u.in_H(F49Element(-1, 0)));
  CHECK(u.classify(F49Element(1, 0)) == std::size_t{0});
  for (const auto& e : u.units) CHECK(u.classify(e).has_value());
  std::size_t sizes[4] = {0, 0, 0, 0};
  for (const auto& e : u.units) ++sizes[*u.classify(e)];
  for (auto s : sizes) CHECK(s == 12);
}

TEST_CASE("freeness obstruction") {
  UnitCosetReport u = unit_cosets();
  CHECK(freeness_obstruction(u).ok());
  CHECK(u.classify(F49Element(1, -1)) == std::size_t{2});
  CHECK_FALSE(u.in_H(F49Element(1, -1)));
  auto c = u.classify(F49Element(1, 1));
  REQUIRE(c);
  CHECK(*c != 0);
}

TEST_CASE("theorem A") {
  Certificate cert = theorem_a();
  CHECK(cert.sections.size() == 9);
  CHECK(cert.conclusion() == Status::Pass);
  CHECK_FALSE(cert.notes.empty());

  TheoremOptions wrong_n;
  wrong_n.n = 6;
  Certificate six = theorem_a(wrong_n);
  CHECK(six.conclusion() == Status::Fail);
  CHECK(six.sections[0].status() == Status::Fail);

  TheoremOptions sign;
  sign.phi2 = parse_group_ring("2 + 2x - x^3 - x^3*y", QGroup(7));
  Certificate bad = theorem_a(sign);
  CHECK(bad.conclusion() == Status::Fail);
  CHECK(bad.sections[3].status() == Status::Fail);
}
