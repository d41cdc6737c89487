#pragma once

#include "pi2/bigint.hpp"
#include "pi2/presentation.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pi2 {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class Strategy {
  Hlt,     // relator-based definitions with lookahead on overflow
  Felsch,  // row-major definitions with full deduction processing
  Auto,    // HLT, retried with Felsch if HLT overflows
};

/// Coset table of the trivial subgroup. Rows are cosets (1-based in the
/// public accessors); columns are generator 0, its inverse, generator 1, ...
class CosetTable {
 public:
  enum class Status { Closed, Overflowed };

  Status status() const { return status_; }
  bool closed() const { return status_ == Status::Closed; }
  std::size_t rows() const { return table_.size(); }
  std::size_t columns() const { return ncols_; }
  /// Image of coset `row` (1-based) under column `col`; 0 if undefined.
  std::size_t entry(std::size_t row, std::size_t col) const;
  /// Largest number of simultaneously live cosets during enumeration.
  std::size_t peak_cosets() const { return peak_; }
  std::size_t total_defined() const { return defined_; }

  /// Every column is a permutation of the rows.
  bool is_complete_permutation() const;
  /// Every relator traces a closed loop from every coset.
  bool relators_close(const std::vector<std::vector<std::size_t>>& relators) const;

  bool operator==(const CosetTable& o) const { return status_ == o.status_ && table_ == o.table_; }

 private:
  friend class Enumerator;
  Status status_ = Status::Overflowed;
  std::size_t ncols_ = 0;
  std::vector<std::vector<std::size_t>> table_;  // 0-based; npos = undefined
  std::size_t peak_ = 0;
  std::size_t defined_ = 0;
};

/// Relators of p as column sequences (generator g -> 2g, g^-1 -> 2g+1).
/// Throws std::length_error if a relator expands beyond `max_letters`.
std::vector<std::vector<std::size_t>> relator_columns(const Presentation& p,
                                                      std::size_t max_letters = 10'000'000);

CosetTable enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                     Strategy strategy = Strategy::Auto);

struct Verdict {
  long n = 0;
  bool presents_q4n = false;
  std::optional<std::size_t> order;  // none when enumeration overflowed
  bool surjection_ok = false;
  std::string witness;  // failing relator, or the coset bound hit

  bool conclusive() const { return order.has_value() || !surjection_ok; }
};

/// Checks that p (generators x, y) presents Q_{4n}: each relator is trivial
/// in Q_{4n}, and coset enumeration closes with exactly 4n cosets.
Verdict verify_q4n(const Presentation& p, long n, std::size_t max_cosets = kDefaultMaxCosets,
                   Strategy strategy = Strategy::Auto);

/// Report with one check per verdict component; an overflowed enumeration
/// is inconclusive rather than failing.
CheckReport verdict_report(const Presentation& p, const Verdict& v);

struct ScanRow {
  long n = 0;
  BigInt r;
  Verdict verdict;
};

/// One verdict per (n, r) on the inclusive grid, ordered by (n, r).
std::vector<ScanRow> scan(long n_lo, long n_hi, const BigInt& r_lo, const BigInt& r_hi,
                          std::size_t max_cosets = kDefaultMaxCosets);

/// JSON array of {n, r, order, presents_q4n, status}.
nlohmann::ordered_json scan_to_json(const std::vector<ScanRow>& rows);

}  // namespace pi2
