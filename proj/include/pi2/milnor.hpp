#pragma once

// The ideal N = (4, phi1, phi2)S, its image I in Lambda, and the unit-coset
// obstruction in F_49 showing N is not free.

#include "pi2/intlinalg.hpp"
#include "pi2/quaternion.hpp"
#include "pi2/report.hpp"
#include "pi2/rings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pi2 {

enum class RingTag { S, Lambda };

/// Right ideal held as a lattice in the ring's coordinates.
struct IdealLattice {
  RingTag ring = RingTag::S;
  IntegerLattice lattice;
  std::vector<std::string> generators;

  /// v b stays in the lattice for every basis vector v and ring basis element b.
  bool is_right_ideal() const;
};

IdealLattice right_ideal_S(const std::vector<SElement>& gens, std::vector<std::string> names);
IdealLattice right_ideal_Lambda(const std::vector<LambdaElement>& gens, std::vector<std::string> names);

CheckReport sigma_factorization();

/// (4, phi1, phi2) S.
IdealLattice build_N();
CheckReport build_N_checks();

CheckReport phi1_identities();
CheckReport ideal_I_principal();

struct UnitCosetReport {
  std::vector<F49Element> units;
  std::vector<F49Element> H;  // sorted
  std::vector<F49Element> representatives;
  CheckReport report;

  /// Index into `representatives` of the coset containing u.
  std::optional<std::size_t> classify(const F49Element& u) const;
  bool in_H(const F49Element& u) const;
};

/// 1, 1 + 2y, -3 + 4y, 1 + 4y.
std::vector<F49Element> listed_coset_representatives();
UnitCosetReport unit_cosets();
CheckReport freeness_obstruction(const UnitCosetReport& cosets);

struct TheoremOptions {
  long n = 7;  // order parameter passed to the enumeration section
  std::optional<GroupRingElement> phi2;
};

/// Nine sections in fixed order; conclusion pass iff every check passes.
Certificate theorem_a(const TheoremOptions& opts = {});

}  // namespace pi2
