#pragma once

// Fox calculus and second homotopy modules of two-generator presentations
// of Q_{4n}. Chains in C_2 (or C_1) are lists of group-ring coefficients,
// one per cell; their integer coordinates concatenate the per-cell
// coordinates of QGroup::index.

#include "pi2/intlinalg.hpp"
#include "pi2/presentation.hpp"
#include "pi2/quaternion.hpp"
#include "pi2/report.hpp"
#include "pi2/rings.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pi2 {

using Chain = std::vector<GroupRingElement>;

/// Right-convention Fox derivative d(uv) = d(u) v + d(v), evaluated in Z[Q_{4n}].
GroupRingElement fox(const Word& w, const std::string& t, const QGroup& g);
inline GroupRingElement fox(const Word& w, const std::string& t, long n) { return fox(w, t, QGroup(n)); }

// ---------------------------------------------------------------------------
// Group ring <-> integer matrices

/// Matrix of w -> c * w on coordinates of w.
IntMatrix left_mul_matrix(const GroupRingElement& c);
/// Matrix of w -> w * c on coordinates of w.
IntMatrix right_mul_matrix(const GroupRingElement& c);

IntVector chain_coords(const Chain& chain);
Chain chain_from_coords(const QGroup& g, std::span<const BigInt> coords, std::size_t cells);
/// Right action of a group element on a chain.
Chain chain_act(const Chain& chain, QElement h);
/// Z-span of all right translates c * g, c in `gens`, g in G.
IntegerLattice translate_span(const std::vector<Chain>& gens);

// ---------------------------------------------------------------------------
// Chain complexes

class BoundaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundaryOptions {
  bool require_presents = true;   // run verify_q4n first
  bool allow_nontrivial = false;  // accept relators not trivial in Q_{4n}
};

/// Cellular chain complex of the universal cover of a presentation complex
/// over Q_{4n}, with 2-cells lifted at the identity.
struct ChainComplex {
  QGroup group{2};
  Presentation presentation;
  /// d2[r][t]: coefficient of e_t in the boundary of the r-th 2-cell.
  std::vector<Chain> d2;
  /// Boundary of e_t is (t - 1) times the base vertex.
  Chain d1;
  /// Integer form of d2: rows E_r g, columns e_t g.
  IntMatrix d2_int;

  std::size_t cells2() const { return d2.size(); }
  std::size_t cells1() const { return d1.size(); }

  /// Image of a 2-chain: sum_r E_r a_r -> sum_t e_t sum_r d2[r][t] a_r.
  Chain apply_d2(const Chain& c) const;
  /// The composite C_2 -> C_0; zero iff sum_t (t - 1) d2[r][t] = 0 for every r.
  bool composite_is_zero() const;
  /// Offending row of the composite, if any.
  std::optional<std::size_t> composite_witness() const;
};

ChainComplex boundary(const Presentation& p, long n, BoundaryOptions opts = {});

struct Pi2Lattice {
  QGroup group{2};
  std::size_t cells = 0;
  IntegerLattice lattice;
  std::string provenance;

  std::size_t ambient() const { return lattice.dim(); }
  /// Right action by each generator maps the lattice into itself.
  bool is_g_stable() const;
};

Pi2Lattice pi2_lattice(const ChainComplex& cx);
Pi2Lattice pi2_lattice(const Presentation& p, long n, BoundaryOptions opts = {});

/// u = E_1 (x - 1) + E_2 (1 - yx).
Chain standard_u(const QGroup& g);
CheckReport verify_standard_u(long n);
/// Same checks for a caller-supplied u.
CheckReport verify_standard_u(long n, const Chain& u);

// ---------------------------------------------------------------------------
// Q_28: the rewritten presentation

/// x^3 - x - 1 in Z[Q_28].
GroupRingElement cubic(const QGroup& q28);
/// x^6 + x^5 - x^4 - 3x^3 - x^2 + x + 1
GroupRingElement phi1(const QGroup& q28);
/// 2 + 2x - x^3 + x^3 y
GroupRingElement phi2(const QGroup& q28);

struct QuarticWitness {
  GroupRingElement p;  // p (x^3 - x - 1) = 4
  std::vector<BigInt> quotient;  // x^14 - 1 = (x^3 - x - 1) quotient + alpha1
  std::vector<BigInt> alpha1, alpha2, alpha3;  // coefficient lists, degree <= 2
  CheckReport report;
};

QuarticWitness quartic_witness();

/// {w : v w = 0}.
IntegerLattice right_annihilator(const GroupRingElement& v);

/// psi(v) = image of (1 - yx) v in M ~ A + A.
MPair psi(const GroupRingElement& v);
/// 28 x 6 matrix of psi mod 4; row g, columns (x^2, x, 1) of a then of b.
IntMatrix psi_matrix();

struct PsiKernel {
  std::array<MPair, 6> table;  // psi(x^i), i = 0..5
  IntMatrix matrix6;           // rows psi(x^i) in the column order of psi_matrix
  IntegerLattice kernel;       // in Z^28; contains Z Sigma_G
  CheckReport report;
};

PsiKernel psi_kernel();

/// The 6 x 6 matrix over Z_4 from the explicit-generator argument.
IntMatrix expected_psi_matrix6();

CheckReport verify_exotic_generators();
/// With a substitute for phi_2 (negative controls).
CheckReport verify_exotic_generators(const GroupRingElement& phi2_value);

CheckReport kernel_correspondence_check();

struct GeneralCoefficients {
  std::optional<GroupRingElement> lambda;
  std::optional<GroupRingElement> mu1;
  std::optional<GroupRingElement> mu2;
};

struct GeneralGenerators {
  GroupRingElement lambda;
  GroupRingElement mu1;
  GroupRingElement mu2;
  Chain first;   // G1((x-1) + mu1 (1-yx)) + G2 mu2 (1-yx)
  Chain second;  // -G1 mu1 lambda + G2 (1 - mu2 lambda)
  CheckReport report;
};

/// Generators of pi_2 for a presentation <x, y | y^2 = x^n, S> of Q_{4n}
/// whose second relation follows from xyx = y. Coefficients not supplied
/// are found by integer solving.
GeneralGenerators general_generators(const Presentation& p, long n, const GeneralCoefficients& given = {});

}  // namespace pi2
