#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>

#include "bcgauge/scalar.hpp"

namespace bcg {

/// Recursive-descent evaluator for bicomplex expressions.
///
/// Grammar:  literals like 1+2i+3j+4k (i, j, k, e1, e2 are constants and
/// number-identifier adjacency multiplies), idempotent literals [z1|z2],
/// operators + - * /, postfix conjugations ^dag1 ^dag2 ^dag3, and the
/// functions knorm, abs, inv.
class ExprParser {
 public:
  static Bicomplex evaluate(std::string_view text) {
    ExprParser p(text);
    const Bicomplex v = p.parse_sum();
    p.skip_ws();
    if (p.pos_ < p.text_.size())
      throw parse_error("unexpected trailing input", p.pos_);
    return v;
  }

 private:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Bicomplex parse_sum() {
    Bicomplex v = parse_product();
    while (true) {
      if (eat('+')) {
        v = v + parse_product();
      } else if (eat('-')) {
        v = v - parse_product();
      } else {
        return v;
      }
    }
  }

  Bicomplex parse_product() {
    Bicomplex v = parse_unary();
    while (true) {
      if (eat('*')) {
        v = v * parse_unary();
      } else if (eat('/')) {
        v = v / parse_unary();
      } else {
        return v;
      }
    }
  }

  Bicomplex parse_unary() {
    if (eat('-')) return -parse_unary();
    return parse_postfix();
  }

  Bicomplex parse_postfix() {
    Bicomplex v = parse_primary();
    while (eat('^')) {
      const std::size_t at = pos_;
      const std::string name = parse_ident();
      if (name == "dag1") {
        v = conj(v, Conjugation::dag1);
      } else if (name == "dag2") {
        v = conj(v, Conjugation::dag2);
      } else if (name == "dag3") {
        v = conj(v, Conjugation::dag3);
      } else {
        throw parse_error("expected dag1, dag2 or dag3 after '^'", at);
      }
    }
    return v;
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw parse_error("expected an identifier", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Bicomplex parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      const Bicomplex v = parse_sum();
      if (!eat(')')) throw parse_error("expected ')'", pos_);
      return v;
    }
    if (c == '[') {
      const std::size_t at = pos_;
      ++pos_;
      const Bicomplex lhs = parse_sum();
      if (!eat('|')) throw parse_error("expected '|' in idempotent literal", pos_);
      const Bicomplex rhs = parse_sum();
      if (!eat(']')) throw parse_error("expected ']'", pos_);
      if (std::abs(lhs.w2()) > 1e-12 || std::abs(rhs.w2()) > 1e-12)
        throw parse_error("idempotent literal components must be complex", at);
      return Bicomplex::from_idempotent(lhs.w1(), rhs.w1());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const Bicomplex num = parse_number();
      // number-identifier adjacency is implicit multiplication: 2i, 3e1, ...
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
        return num * parse_primary();
      }
      return num;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::string name = parse_ident();
      if (peek() == '(') {
        eat('(');
        const Bicomplex arg = parse_sum();
        if (!eat(')')) throw parse_error("expected ')'", pos_);
        if (name == "knorm") return Bicomplex::from_hyperbolic(knorm(arg));
        if (name == "abs") return Bicomplex(euclid_norm(arg));
        if (name == "inv") return invert(arg);
        throw parse_error("unknown function: " + name, at);
      }
      if (name == "i") return Bicomplex::unit_i();
      if (name == "j") return Bicomplex::unit_j();
      if (name == "k") return Bicomplex::unit_k();
      if (name == "e1") return Bicomplex::e1();
      if (name == "e2") return Bicomplex::e2();
      throw parse_error("unknown identifier: " + name, at);
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  Bicomplex parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw parse_error("expected a number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return Bicomplex(v);
  }
};

inline Bicomplex eval_expression(std::string_view text) {
  return ExprParser::evaluate(text);
}

}  // namespace bcg
