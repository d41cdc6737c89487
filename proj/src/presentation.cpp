#include "pi2/presentation.hpp"

#include "scanner.hpp"

#include <algorithm>
#include <sstream>

namespace pi2 {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Words

Word free_reduce(std::span<const Letter> letters) {
  // Stack-based: merge with the top run, pop when the exponent cancels.
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word::Word(std::vector<Letter> letters) {
  bool normal = true;
  for (std::size_t i = 0; i < letters.size() && normal; ++i) {
    if (letters[i].exp == 0 || (i > 0 && letters[i].gen == letters[i - 1].gen)) normal = false;
  }
  if (normal) {
    letters_ = std::move(letters);
  } else {
    letters_ = free_reduce(letters).letters_;
  }
}

Word Word::gen(const std::string& name, const BigInt& exp) {
  return Word({Letter{name, exp}});
}

BigInt Word::length() const {
  BigInt n = 0;
  for (const auto& l : letters_) n += abs(l.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word acc;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> all;
  all.reserve(a.letters_.size() + b.letters_.size());
  all.insert(all.end(), a.letters_.begin(), a.letters_.end());
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return free_reduce(all);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp != 1) s += "^" + l.exp.get_str();
  }
  return s;
}

Word relator(const Relation& rel) { return rel.lhs.inverse() * rel.rhs; }

// ---------------------------------------------------------------------------
// Presentations

Presentation::Presentation(std::vector<std::string> generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j]) {
        throw std::invalid_argument("duplicate generator '" + generators_[i] + "'");
      }
    }
  }
  for (const auto& rel : relations_) {
    for (const Word* w : {&rel.lhs, &rel.rhs}) {
      for (const auto& l : w->letters()) {
        if (!has_generator(l.gen)) {
          throw std::invalid_argument("relation uses unknown generator '" + l.gen + "'");
        }
      }
    }
  }
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(pi2::relator(r));
  return out;
}

bool Presentation::has_generator(const std::string& name) const {
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

std::size_t Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw std::out_of_range("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

std::string Presentation::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i];
  }
  s += " |";
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    s += i ? ", " : " ";
    const auto& rel = relations_[i];
    if (rel.lhs.empty()) {
      s += rel.rhs.to_string();
    } else {
      s += rel.lhs.to_string() + " = " + rel.rhs.to_string();
    }
  }
  s += relations_.empty() ? " >" : ">";
  return s;
}

// ---------------------------------------------------------------------------
// Parser

Word parse_word(const std::string& text, std::span<const std::string> generators) {
  detail::Scanner sc(text);
  Word w = detail::parse_word_tokens(sc, generators);
  if (!sc.at_end()) sc.fail("unexpected character after word");
  return w;
}

Presentation parse_presentation(const std::string& text) {
  detail::Scanner sc(text);
  sc.expect('<');
  std::vector<std::string> gens;
  if (sc.peek() != '|') {
    for (;;) {
      sc.skip_space();
      std::size_t line = sc.line(), col = sc.column();
      std::string g = sc.identifier();
      if (detail::contains(gens, g)) throw ParseError("duplicate generator '" + g + "'", line, col);
      gens.push_back(g);
      if (!sc.accept(',')) break;
    }
  }
  sc.expect('|');
  std::vector<Relation> rels;
  if (sc.peek() != '>') {
    for (;;) {
      Relation rel;
      sc.skip_space();
      std::size_t line = sc.line(), col = sc.column();
      Word first = detail::parse_word_tokens(sc, gens);
      if (sc.accept('=')) {
        rel.lhs = std::move(first);
        rel.rhs = detail::parse_word_tokens(sc, gens);
      } else {
        if (first.empty() && sc.peek() != ',' && sc.peek() != '>') {
          throw ParseError("expected word", line, col);
        }
        rel.rhs = std::move(first);
      }
      rels.push_back(std::move(rel));
      if (!sc.accept(',')) break;
    }
  }
  sc.expect('>');
  if (!sc.at_end()) sc.fail("trailing input after presentation");
  return Presentation(std::move(gens), std::move(rels));
}

// ---------------------------------------------------------------------------
// Families

namespace {
Word x(const BigInt& e = 1) { return Word::gen("x", e); }
Word y(const BigInt& e = 1) { return Word::gen("y", e); }
Word standard_r() { return y(-1) * x() * y() * x(); }
}  // namespace

Presentation standard_presentation(long n) {
  if (n < 2) throw std::invalid_argument("standard presentation needs n >= 2");
  return Presentation({"x", "y"}, {{y(2), x(n)}, {y(), x() * y() * x()}});
}

Presentation enr(long n, const BigInt& r) {
  if (n < 2) throw std::invalid_argument("E_{n,r} needs n >= 2");
  Relation second{y(-1) * x() * y() * x(r - 1), x(r) * y(-1) * x(2) * y()};
  return Presentation({"x", "y"}, {{y(2), x(n)}, second});
}

Presentation rewritten_p_prime() {
  Word r = standard_r();
  Relation second{r * (x(-1) * r * x()), x(-3) * r * x(3)};
  return Presentation({"x", "y"}, {{y(2), x(7)}, second});
}

std::vector<RewriteStep> p_prime_rewrite_steps() {
  using Op = RewriteStep::Op;
  Word r = standard_r();
  std::vector<RewriteStep> steps;
  steps.push_back({Op::Start, {}, {y(-1) * x() * y() * x(2), x(3) * y(-1) * x(2) * y()},
                   "original relation"});
  steps.push_back({Op::LeftMultiply, x(-3), {x(-3) * r * x(3) * x(-2), y(-1) * x(2) * y()},
                   "multiply on left by x^-3"});
  steps.push_back({Op::RightMultiply, x(2), {x(-3) * r * x(3), y(-1) * x(2) * y() * x(2)},
                   "multiply on right by x^2"});
  steps.push_back({Op::Rebracket, {}, {x(-3) * r * x(3), r * (x(-1) * r * x())}, "rebracketing"});
  return steps;
}

namespace {

std::string divergence(const Word& got, const Word& want) {
  const auto& a = got.letters();
  const auto& b = want.letters();
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  std::ostringstream os;
  os << "first divergence at run " << i << ": got '" << got.to_string() << "', expected '"
     << want.to_string() << "'";
  return os.str();
}

void compare(CheckReport& rep, const std::string& name, const Word& got, const Word& want) {
  rep.add(name, got == want, got == want ? std::string{} : divergence(got, want));
}

}  // namespace

CheckReport rewrite_chain_check(std::span<const RewriteStep> steps) {
  using Op = RewriteStep::Op;
  CheckReport rep("rewrite_chain");
  for (std::size_t k = 1; k < steps.size(); ++k) {
    const auto& prev = steps[k - 1].relation;
    const auto& cur = steps[k];
    std::string tag = "step " + std::to_string(k + 1) + " (" + cur.label + ")";
    switch (cur.op) {
      case Op::LeftMultiply:
        compare(rep, tag + " lhs", cur.factor * prev.lhs, cur.relation.lhs);
        compare(rep, tag + " rhs", cur.factor * prev.rhs, cur.relation.rhs);
        break;
      case Op::RightMultiply:
        compare(rep, tag + " lhs", prev.lhs * cur.factor, cur.relation.lhs);
        compare(rep, tag + " rhs", prev.rhs * cur.factor, cur.relation.rhs);
        break;
      case Op::Rebracket:
      case Op::Start:
        compare(rep, tag + " lhs", prev.lhs, cur.relation.lhs);
        compare(rep, tag + " rhs", prev.rhs, cur.relation.rhs);
        break;
    }
  }
  if (!steps.empty()) {
    Word r = standard_r();
    Relation target{x(-3) * r * x(3), r * (x(-1) * r * x())};
    compare(rep, "final relator is that of x^-3 R x^3 = R (x^-1 R x)",
            relator(steps.back().relation), relator(target));
  }
  return rep;
}

CheckReport rewrite_chain_check() {
  auto steps = p_prime_rewrite_steps();
  return rewrite_chain_check(steps);
}

}  // namespace pi2
