#pragma once

// Tokenizer shared by the presentation and group-ring literal parsers.

#include "pi2/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <string>

namespace pi2::detail {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      fail(std::string("expected '") + c + "', got " + got);
    }
  }

  bool at_identifier() {
    return std::isalpha(static_cast<unsigned char>(peek())) != 0;
  }

  std::string identifier() {
    skip_space();
    if (!at_identifier()) fail("expected generator name");
    std::size_t start = pos_;
    advance();
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) advance();
    return text_.substr(start, pos_ - start);
  }

  bool at_integer() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  BigInt integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') advance();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    return BigInt(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline bool contains(std::span<const std::string> gens, const std::string& name) {
  return std::find(gens.begin(), gens.end(), name) != gens.end();
}

// word := (token ("*")?)* ; token := gen ["^" integer] | "1"
inline Word parse_word_tokens(Scanner& sc, std::span<const std::string> gens) {
  std::vector<Letter> letters;
  for (;;) {
    if (sc.peek() == '1') {
      BigInt one = sc.integer();
      if (one != 1) sc.fail("unexpected integer in word");
    } else if (sc.at_identifier()) {
      std::size_t line = sc.line(), col = sc.column();
      std::string id = sc.identifier();
      std::vector<std::string> parts;
      if (contains(gens, id)) {
        parts.push_back(id);
      } else {
        // xyx -> x y x when every character is a single-letter generator
        for (char c : id) {
          std::string one(1, c);
          if (!contains(gens, one)) throw ParseError("unknown generator '" + id + "'", line, col);
          parts.push_back(one);
        }
      }
      BigInt exp = 1;
      if (sc.accept('^')) exp = sc.integer();
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) letters.push_back({parts[i], 1});
      letters.push_back({parts.back(), exp});
    } else {
      break;
    }
    sc.accept('*');
  }
  return free_reduce(letters);
}


}  // namespace pi2::detail
