#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/error.hpp"
#include "fmrig/normalize.hpp"
#include "fmrig/term.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace fmrig {

namespace detail {

// Shared cursor so that nested payloads (y[<expr over M>]) are parsed by the
// parser of the level below without re-tokenizing.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Nat nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a natural number");
    Nat n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      advance();
    }
    return n;
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline bool is_var_letter(char c) { return c == 'x' || c == 'y' || c == 'z'; }
inline bool is_map_letter(char c) { return c == 'f' || c == 'g' || c == 'h'; }

template <class C>
class Parser {
 public:
  Parser(Cursor& cur, const C& carrier) : cur_(cur), carrier_(carrier) {}

  Term<C> expr() {
    Term<C> t = mult();
    while (cur_.accept('+')) t = Term<C>::sum(t, mult());
    return t;
  }

 private:
  Term<C> mult() {
    Term<C> t = atom();
    while (cur_.accept('*')) t = Term<C>::prod(t, atom());
    return t;
  }

  Term<C> atom() {
    const char c = cur_.peek();
    if (c == '0' || c == '1') {
      const auto line = cur_.line();
      const auto col = cur_.column();
      Nat n = cur_.nat();
      if (n > 1) throw parse_error("numeric literals other than 0 and 1 are not terms", line, col);
      return n == 0 ? Term<C>::zero() : Term<C>::one();
    }
    if (cur_.accept('(')) {
      Term<C> t = expr();
      cur_.expect(')');
      return t;
    }
    if (is_map_letter(c)) {
      cur_.accept(c);
      cur_.expect('(');
      Term<C> t = expr();
      cur_.expect(')');
      return Term<C>::app(t);
    }
    if (is_var_letter(c)) {
      cur_.accept(c);
      cur_.expect('[');
      const auto line = cur_.line();
      const auto col = cur_.column();
      Term<C> t = Term<C>::var(payload(line, col));
      cur_.expect(']');
      return t;
    }
    if (c == '\0') cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected character '") + c + "'");
  }

  MonoidElem<C> payload(std::size_t line, std::size_t col) {
    if constexpr (std::is_same_v<C, NatPow>) {
      std::vector<Nat> cs{cur_.nat()};
      while (cur_.accept(',')) cs.push_back(cur_.nat());
      if (cs.size() != carrier_.rank)
        throw parse_error("rank mismatch: " + std::to_string(cs.size()) + " coordinates for carrier " +
                              carrier_.describe(),
                          line, col);
      return from_coords(carrier_, cs);
    } else {
      Parser<typename C::base_type> inner(cur_, carrier_.base);
      return normalize(inner.expr(), carrier_);
    }
  }

  Cursor& cur_;
  const C& carrier_;
};

}  // namespace detail

/// Parses the surface grammar: `+` and `*` left-associative, `*` binding
/// tighter; atoms are 0, 1, x[..], f(..) and parenthesized expressions.
/// Over a level-2 carrier the payload of y[..] is an expression one level
/// down, read as its normal form.
template <class C>
Term<C> parse(std::string_view text, const C& carrier) {
  detail::Cursor cur(text);
  detail::Parser<C> p(cur, carrier);
  Term<C> t = p.expr();
  if (!cur.at_end()) cur.fail("trailing input");
  return t;
}

}  // namespace fmrig
