/*
 * Copyright 2026 The convexalg authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/rng.hpp"
#include "convexalg/semiring.hpp"

namespace convexalg {

/// Terms of the two-sorted signature: bottom, join, zero, sum, and one
/// scalar action per semiring element.
///
/// Concrete syntax: `bot`, `0`, identifiers, `s*t`, `t+t`, `t|t`, and
/// parentheses, with scaling binding tightest, then `+`, then `|`; the
/// binary operators associate to the left.  Scalar literals follow the
/// active semiring's element syntax.
template <Semiring S>
class Term {
 public:
  enum class Kind { bottom, zero, var, scale, add, join };
  using value_type = typename S::value_type;

  static Term bottom() { return Term(Node{Kind::bottom, {}, {}, {}, {}}); }
  static Term zero() { return Term(Node{Kind::zero, {}, {}, {}, {}}); }

  static Term var(BasisElement name) {
    return Term(Node{Kind::var, {}, std::move(name), {}, {}});
  }

  static Term scale(value_type lambda, Term body) {
    return Term(Node{Kind::scale, std::move(lambda), {}, body.node_, {}});
  }

  static Term add(Term lhs, Term rhs) {
    return Term(Node{Kind::add, {}, {}, lhs.node_, rhs.node_});
  }

  static Term join(Term lhs, Term rhs) {
    return Term(Node{Kind::join, {}, {}, lhs.node_, rhs.node_});
  }

  Kind kind() const { return node_->kind; }
  const value_type& scalar() const { return node_->scalar; }
  const BasisElement& name() const { return node_->name; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::bottom:
      case Kind::zero:
        return true;
      case Kind::var:
        return a.name() == b.name();
      case Kind::scale:
        return a.scalar() == b.scalar() && a.left() == b.left();
      case Kind::add:
      case Kind::join:
        return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

  /// Distinct variables occurring in the term.
  std::set<BasisElement> variables() const {
    std::set<BasisElement> out;
    collect_variables(out);
    return out;
  }

 private:
  struct Node {
    Kind kind;
    value_type scalar;
    BasisElement name;
    std::shared_ptr<const Node> left, right;
  };

  explicit Term(Node node)
      : node_(std::make_shared<const Node>(std::move(node))) {}
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  void collect_variables(std::set<BasisElement>& out) const {
    switch (kind()) {
      case Kind::var:
        out.insert(name());
        break;
      case Kind::scale:
        left().collect_variables(out);
        break;
      case Kind::add:
      case Kind::join:
        left().collect_variables(out);
        right().collect_variables(out);
        break;
      default:
        break;
    }
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

enum class TokenKind { end, ident, number, star, plus, bar, lparen, rparen };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_ident_start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto is_ident = [&](char c) { return is_ident_start(c) || is_digit(c); };

  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_digit(c)) {
      while (i < input.size() && is_digit(input[i])) ++i;
      if (i < input.size() && input[i] == '/') {
        std::size_t slash = i++;
        if (i == input.size() || !is_digit(input[i])) {
          throw SyntaxError("expected digits after '/'",
                            std::min(i, input.size() - 1));
        }
        (void)slash;
        while (i < input.size() && is_digit(input[i])) ++i;
      }
      tokens.push_back(
          {TokenKind::number, std::string(input.substr(start, i - start)),
           start});
    } else if (is_ident_start(c)) {
      while (i < input.size() && is_ident(input[i])) ++i;
      tokens.push_back(
          {TokenKind::ident, std::string(input.substr(start, i - start)),
           start});
    } else if (c == '*') {
      tokens.push_back({TokenKind::star, "*", i++});
    } else if (c == '+') {
      tokens.push_back({TokenKind::plus, "+", i++});
    } else if (c == '|') {
      tokens.push_back({TokenKind::bar, "|", i++});
    } else if (c == '(') {
      tokens.push_back({TokenKind::lparen, "(", i++});
    } else if (c == ')') {
      tokens.push_back({TokenKind::rparen, ")", i++});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  tokens.push_back({TokenKind::end, "", input.size()});
  return tokens;
}

template <Semiring S>
class Parser {
 public:
  explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

  Term<S> parse() {
    Term<S> t = parse_join();
    if (peek().kind != TokenKind::end) {
      throw SyntaxError("trailing input", peek().position);
    }
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return tokens_[std::min(i, tokens_.size() - 1)];
  }
  Token take() { return tokens_[pos_++]; }

  Term<S> parse_join() {
    Term<S> t = parse_add();
    while (peek().kind == TokenKind::bar) {
      take();
      t = Term<S>::join(t, parse_add());
    }
    return t;
  }

  Term<S> parse_add() {
    Term<S> t = parse_scaled();
    while (peek().kind == TokenKind::plus) {
      take();
      t = Term<S>::add(t, parse_scaled());
    }
    return t;
  }

  Term<S> parse_scaled() {
    if (peek().kind == TokenKind::number &&
        peek(1).kind == TokenKind::star) {
      Token lit = take();
      take();  // '*'
      return Term<S>::scale(parse_scalar(lit), parse_scaled());
    }
    return parse_atom();
  }

  Term<S> parse_atom() {
    Token t = take();
    switch (t.kind) {
      case TokenKind::number: {
        typename S::value_type v = parse_scalar(t);
        if (v == S::zero()) return Term<S>::zero();
        throw SyntaxError("scalar literal must be followed by '*'",
                          t.position);
      }
      case TokenKind::ident:
        if (t.text == "bot") return Term<S>::bottom();
        return Term<S>::var(t.text);
      case TokenKind::lparen: {
        Term<S> inner = parse_join();
        if (peek().kind != TokenKind::rparen) {
          throw SyntaxError("expected ')'", peek().position);
        }
        take();
        return inner;
      }
      default:
        throw SyntaxError("expected a term", t.position);
    }
  }

  typename S::value_type parse_scalar(const Token& t) {
    try {
      return S::parse(t.text);
    } catch (const Error& e) {
      throw SyntaxError(e.what(), t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Semiring S>
Term<S> parse_term(std::string_view input) {
  return detail::Parser<S>(input).parse();
}

namespace detail {

template <Semiring S>
int precedence(typename Term<S>::Kind k) {
  using Kind = typename Term<S>::Kind;
  switch (k) {
    case Kind::join: return 0;
    case Kind::add: return 1;
    case Kind::scale: return 2;
    default: return 3;
  }
}

template <Semiring S>
std::string print_term(const Term<S>& t, int min_precedence) {
  using Kind = typename Term<S>::Kind;
  int prec = precedence<S>(t.kind());
  std::string out;
  switch (t.kind()) {
    case Kind::bottom: out = "bot"; break;
    case Kind::zero: out = "0"; break;
    case Kind::var: out = t.name(); break;
    case Kind::scale:
      out = S::to_string(t.scalar()) + "*" + print_term(t.left(), prec);
      break;
    case Kind::add:
      out = print_term(t.left(), prec) + " + " +
            print_term(t.right(), prec + 1);
      break;
    case Kind::join:
      out = print_term(t.left(), prec) + " | " +
            print_term(t.right(), prec + 1);
      break;
  }
  if (prec < min_precedence) return "(" + out + ")";
  return out;
}

}  // namespace detail

/// Renders with the minimal parentheses that reparse to the same tree.
template <Semiring S>
std::string to_string(const Term<S>& t) {
  return detail::print_term(t, 0);
}

template <Semiring S>
Term<S> random_term(const Basis& basis, int depth, Rng& rng) {
  if (depth < 0) throw PreconditionError("negative term depth");
  std::vector<BasisElement> vars(basis.begin(), basis.end());
  auto leaf = [&]() {
    std::uint64_t roll = rng.below(vars.empty() ? 2 : 4);
    if (roll == 0) return Term<S>::zero();
    if (roll == 1) return Term<S>::bottom();
    return Term<S>::var(vars[rng.below(vars.size())]);
  };
  auto rec = [&](auto&& self, int d) -> Term<S> {
    if (d == 0) return leaf();
    switch (rng.below(4)) {
      case 0:
        return Term<S>::scale(S::sample(rng), self(self, d - 1));
      case 1:
        return Term<S>::add(self(self, d - 1), self(self, d - 1));
      case 2:
        return Term<S>::join(self(self, d - 1), self(self, d - 1));
      default:
        return leaf();
    }
  };
  return rec(rec, depth);
}

/// Reproducible pseudo-random term from a bare seed.
template <Semiring S>
Term<S> random_term(const Basis& basis, int depth, std::uint64_t seed) {
  Rng rng(seed);
  return random_term<S>(basis, depth, rng);
}

}  // namespace convexalg
