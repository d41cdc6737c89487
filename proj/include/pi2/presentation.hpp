#pragma once

#include "pi2/bigint.hpp"
#include "pi2/report.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pi2 {

/// Syntax or semantic error in a presentation or group-ring literal.
/// Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Letter {
  std::string gen;
  BigInt exp;

  bool operator==(const Letter&) const = default;
};

/// Free-group word stored as run-length (generator, exponent) pairs.
/// Always kept freely reduced: adjacent letters carry distinct generators
/// and no exponent is zero.
class Word {
 public:
  Word() = default;
  /// Builds the free reduction of the given letter sequence.
  explicit Word(std::vector<Letter> letters);

  static Word gen(const std::string& name, const BigInt& exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Number of runs.
  std::size_t runs() const { return letters_.size(); }
  /// Sum of |exponent| over all runs.
  BigInt length() const;

  Word inverse() const;
  Word pow(long k) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Idempotent.
Word free_reduce(std::span<const Letter> letters);
inline Word free_reduce(const Word& w) { return w; }

struct Relation {
  Word lhs;
  Word rhs;

  bool operator==(const Relation&) const = default;
};

/// The relator lhs^-1 * rhs, freely reduced.
Word relator(const Relation& rel);

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Relation> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  Word relator(std::size_t i) const { return pi2::relator(relations_.at(i)); }
  std::vector<Word> relators() const;

  bool has_generator(const std::string& name) const;
  std::size_t generator_index(const std::string& name) const;

  /// Text form `<x, y | y^2 = x^7, x y x = y>`.
  std::string to_string() const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
};

Presentation parse_presentation(const std::string& text);

/// Parses a word over the given generators. Juxtaposed single-letter
/// generators (`xyx`) are split when the identifier is not itself a generator.
Word parse_word(const std::string& text, std::span<const std::string> generators);

/// <x, y | y^2 = x^n, y = x y x>
Presentation standard_presentation(long n);

/// <x, y | y^2 = x^n, y^-1 x y x^(r-1) = x^r y^-1 x^2 y>
Presentation enr(long n, const BigInt& r);

/// E_{7,3} with its second relation replaced by R (x^-1 R x) = x^-3 R x^3,
/// R = y^-1 x y x.
Presentation rewritten_p_prime();

/// One displayed relation in a chain of relator rewrites, together with
/// the operation that produced it from its predecessor.
struct RewriteStep {
  enum class Op { Start, LeftMultiply, RightMultiply, Rebracket };
  Op op = Op::Start;
  Word factor;  // multiplier for LeftMultiply / RightMultiply
  Relation relation;
  std::string label;
};

/// The four-step chain from E_{7,3}'s second relation to x^-3 R x^3 = R (x^-1 R x).
std::vector<RewriteStep> p_prime_rewrite_steps();

CheckReport rewrite_chain_check(std::span<const RewriteStep> steps);
CheckReport rewrite_chain_check();

}  // namespace pi2
