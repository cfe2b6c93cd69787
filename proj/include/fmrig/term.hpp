#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/normal_form.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace fmrig {

// Surface letters per carrier level: x/f over M, y/g over FM, z/h over FFM.
constexpr char var_letter(int level) { return level == 0 ? 'x' : level == 1 ? 'y' : 'z'; }
constexpr char map_letter(int level) { return level == 0 ? 'f' : level == 1 ? 'g' : 'h'; }

/// Raw syntax of F₀M: fully parenthesized binary sums and products, the
/// constants, generators x_m and self-map applications. Immutable; subterms
/// are shared.
template <class C>
class Term {
 public:
  enum class Kind { zero, one, var, sum, prod, app };

  static Term zero() { return Term(Kind::zero, std::nullopt, nullptr, nullptr); }
  static Term one() { return Term(Kind::one, std::nullopt, nullptr, nullptr); }
  static Term var(MonoidElem<C> m) { return Term(Kind::var, std::move(m), nullptr, nullptr); }
  static Term sum(const Term& a, const Term& b) { return Term(Kind::sum, std::nullopt, a.node_, b.node_); }
  static Term prod(const Term& a, const Term& b) { return Term(Kind::prod, std::nullopt, a.node_, b.node_); }
  static Term app(const Term& a) { return Term(Kind::app, std::nullopt, a.node_, nullptr); }

  Kind kind() const noexcept { return node_->kind; }
  const MonoidElem<C>& payload() const { return *node_->payload; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }
  Term child() const { return Term(node_->left); }

  std::size_t size() const {
    switch (kind()) {
      case Kind::sum:
      case Kind::prod: return 1 + left().size() + right().size();
      case Kind::app: return 1 + child().size();
      default: return 1;
    }
  }

  std::size_t depth() const {
    switch (kind()) {
      case Kind::sum:
      case Kind::prod: return 1 + std::max(left().depth(), right().depth());
      case Kind::app: return 1 + child().depth();
      default: return 0;
    }
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::var: return a.payload() == b.payload();
      case Kind::sum:
      case Kind::prod: return a.left() == b.left() && a.right() == b.right();
      case Kind::app: return a.child() == b.child();
      default: return true;
    }
  }

 private:
  struct Node {
    Kind kind;
    std::optional<MonoidElem<C>> payload;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  Term(Kind k, std::optional<MonoidElem<C>> payload, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{k, std::move(payload), std::move(l), std::move(r)})) {}

  std::shared_ptr<const Node> node_;
};

/// A representative term for a normal form, built so that normalizing it
/// gives the normal form back. A coefficient is folded into the first
/// generator of its monomial (c·x_e = x_{c·e}); generator-free monomials are
/// repeated as sums.
template <class C>
Term<C> nf_to_term(const NormalForm<C>& a) {
  using T = Term<C>;
  std::optional<T> total;
  for (const auto& [mono, coeff] : a.coeffs()) {
    auto build = [&](bool fold) {
      std::optional<T> prod;
      bool folded = false;
      for (const auto& atom : mono.atoms()) {
        T factor = T::zero();
        if (atom.is_gen()) {
          const Nat c = (fold && !folded) ? coeff : Nat{1};
          folded = folded || fold;
          factor = T::var(MonoidElem<C>::generator(a.carrier().base, atom.key(), c));
        } else {
          factor = T::app(nf_to_term(atom.payload()));
        }
        prod = prod ? T::prod(*prod, factor) : factor;
      }
      return prod ? *prod : T::one();
    };
    const bool has_gen = !mono.atoms().empty() && mono.atoms().front().is_gen();
    if (has_gen) {
      T piece = build(true);
      total = total ? T::sum(*total, piece) : piece;
    } else {
      for (Nat i = 0; i < coeff; ++i) {
        T piece = build(false);
        total = total ? T::sum(*total, piece) : piece;
      }
    }
  }
  return total ? *total : T::zero();
}

template <class C>
std::string print(const Term<C>& t);

namespace detail {

inline std::string print_payload(const MonoidElem<NatPow>& m) {
  std::string out;
  const auto cs = coords(m);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ",";
    out += cs[i].str();
  }
  return out;
}

template <class B>
std::string print_payload(const MonoidElem<FreeRig<B>>& m) {
  return print(nf_to_term(m));
}

}  // namespace detail

/// Fully parenthesized rendering; parse(print(t)) == t.
template <class C>
std::string print(const Term<C>& t) {
  using K = typename Term<C>::Kind;
  switch (t.kind()) {
    case K::zero: return "0";
    case K::one: return "1";
    case K::var: return std::string(1, var_letter(C::level)) + "[" + detail::print_payload(t.payload()) + "]";
    case K::sum: return "(" + print(t.left()) + " + " + print(t.right()) + ")";
    case K::prod: return "(" + print(t.left()) + " * " + print(t.right()) + ")";
    case K::app: return std::string(1, map_letter(C::level)) + "(" + print(t.child()) + ")";
  }
  return {};
}

}  // namespace fmrig
