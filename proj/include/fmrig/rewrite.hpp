#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/error.hpp"
#include "fmrig/nat.hpp"
#include "fmrig/term.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmrig {

/// Generating instances of ∼. Reflexivity, symmetry, transitivity and the
/// congruence closure are not separate rules: they come from the direction
/// flag, from sequencing steps, and from applying a rule at any path.
enum class RuleTag {
  assoc_add,   // ((a+b)+c) ∼ (a+(b+c))
  unit_add,    // (a+0) ∼ a
  comm_add,    // (a+b) ∼ (b+a)
  assoc_mul,   // ((ab)c) ∼ (a(bc))
  unit_mul,    // (a1) ∼ a
  comm_mul,    // (ab) ∼ (ba)
  distrib,     // ((a+b)c) ∼ ((ac)+(bc))
  annihilate,  // (0a) ∼ 0
  var_zero,    // x_0 ∼ 0
  var_add,     // (x_m+x_n) ∼ x_{m+n}
};

inline constexpr RuleTag all_rule_tags[] = {RuleTag::assoc_add, RuleTag::unit_add,   RuleTag::comm_add,
                                            RuleTag::assoc_mul, RuleTag::unit_mul,   RuleTag::comm_mul,
                                            RuleTag::distrib,   RuleTag::annihilate, RuleTag::var_zero,
                                            RuleTag::var_add};

inline std::string to_string(RuleTag t) {
  switch (t) {
    case RuleTag::assoc_add: return "assoc+";
    case RuleTag::unit_add: return "unit+";
    case RuleTag::comm_add: return "comm+";
    case RuleTag::assoc_mul: return "assoc*";
    case RuleTag::unit_mul: return "unit*";
    case RuleTag::comm_mul: return "comm*";
    case RuleTag::distrib: return "distrib";
    case RuleTag::annihilate: return "annihilate";
    case RuleTag::var_zero: return "var-zero";
    case RuleTag::var_add: return "var-add";
  }
  return "?";
}

enum class Direction { forward, backward };

/// Child indices from the root: 0 selects the left operand (or the argument
/// of f), 1 the right operand.
using Path = std::vector<std::uint8_t>;

template <class C>
struct RewriteRule {
  RuleTag tag;
  Direction dir = Direction::forward;
  // Backward annihilate: the `a` in 0 → (0a). Defaults to 1.
  std::optional<Term<C>> filler;
  // Backward var-zero: the zero element of the carrier (required).
  // Backward var-add: the part m of x_k → (x_m + x_{k-m}) (required, m ≤ k).
  std::optional<MonoidElem<C>> witness;
};

namespace detail {

template <class C>
std::optional<MonoidElem<C>> monus(const MonoidElem<C>& k, const MonoidElem<C>& m) {
  if (!(k.carrier() == m.carrier())) return std::nullopt;
  LinComb<typename C::key_type> out;
  for (const auto& [key, c] : m.coeffs())
    if (k.coeffs().coefficient(key) < c) return std::nullopt;
  for (const auto& [key, c] : k.coeffs()) out.add(key, c - m.coeffs().coefficient(key));
  return MonoidElem<C>(k.carrier(), std::move(out));
}

template <class C>
std::optional<Term<C>> apply_at_root(const Term<C>& t, const RewriteRule<C>& r) {
  using T = Term<C>;
  using K = typename T::Kind;
  const bool fwd = r.dir == Direction::forward;
  const K k = t.kind();
  switch (r.tag) {
    case RuleTag::assoc_add:
    case RuleTag::assoc_mul: {
      const K op = r.tag == RuleTag::assoc_add ? K::sum : K::prod;
      auto make = [&](const T& a, const T& b) { return op == K::sum ? T::sum(a, b) : T::prod(a, b); };
      if (k != op) return std::nullopt;
      if (fwd) {
        if (t.left().kind() != op) return std::nullopt;
        return make(t.left().left(), make(t.left().right(), t.right()));
      }
      if (t.right().kind() != op) return std::nullopt;
      return make(make(t.left(), t.right().left()), t.right().right());
    }
    case RuleTag::unit_add:
    case RuleTag::unit_mul: {
      const K op = r.tag == RuleTag::unit_add ? K::sum : K::prod;
      const K unit = r.tag == RuleTag::unit_add ? K::zero : K::one;
      if (!fwd) return op == K::sum ? T::sum(t, T::zero()) : T::prod(t, T::one());
      if (k != op || t.right().kind() != unit) return std::nullopt;
      return t.left();
    }
    case RuleTag::comm_add:
      if (k != K::sum) return std::nullopt;
      return T::sum(t.right(), t.left());
    case RuleTag::comm_mul:
      if (k != K::prod) return std::nullopt;
      return T::prod(t.right(), t.left());
    case RuleTag::distrib:
      if (fwd) {
        if (k != K::prod || t.left().kind() != K::sum) return std::nullopt;
        const T c = t.right();
        return T::sum(T::prod(t.left().left(), c), T::prod(t.left().right(), c));
      }
      if (k != K::sum || t.left().kind() != K::prod || t.right().kind() != K::prod) return std::nullopt;
      if (!(t.left().right() == t.right().right())) return std::nullopt;
      return T::prod(T::sum(t.left().left(), t.right().left()), t.left().right());
    case RuleTag::annihilate:
      if (fwd) {
        if (k != K::prod || t.left().kind() != K::zero) return std::nullopt;
        return T::zero();
      }
      if (k != K::zero) return std::nullopt;
      return T::prod(T::zero(), r.filler ? *r.filler : T::one());
    case RuleTag::var_zero:
      if (fwd) {
        if (k != K::var || !t.payload().is_zero()) return std::nullopt;
        return T::zero();
      }
      if (k != K::zero || !r.witness || !r.witness->is_zero()) return std::nullopt;
      return T::var(*r.witness);
    case RuleTag::var_add:
      if (fwd) {
        if (k != K::sum || t.left().kind() != K::var || t.right().kind() != K::var) return std::nullopt;
        if (!(t.left().payload().carrier() == t.right().payload().carrier())) return std::nullopt;
        return T::var(t.left().payload() + t.right().payload());
      }
      if (k != K::var || !r.witness) return std::nullopt;
      if (auto rest = monus(t.payload(), *r.witness)) return T::sum(T::var(*r.witness), T::var(*rest));
      return std::nullopt;
  }
  return std::nullopt;
}

template <class C>
std::optional<Term<C>> apply_at(const Term<C>& t, const RewriteRule<C>& r, const Path& path, std::size_t i) {
  using T = Term<C>;
  using K = typename T::Kind;
  if (i == path.size()) return apply_at_root(t, r);
  const auto step = path[i];
  switch (t.kind()) {
    case K::sum:
    case K::prod: {
      if (step > 1) return std::nullopt;
      auto sub = apply_at(step == 0 ? t.left() : t.right(), r, path, i + 1);
      if (!sub) return std::nullopt;
      const T l = step == 0 ? *sub : t.left();
      const T rr = step == 1 ? *sub : t.right();
      return t.kind() == K::sum ? T::sum(l, rr) : T::prod(l, rr);
    }
    case K::app: {
      if (step != 0) return std::nullopt;
      auto sub = apply_at(t.child(), r, path, i + 1);
      if (!sub) return std::nullopt;
      return T::app(*sub);
    }
    default: return std::nullopt;
  }
}

template <class C>
void collect_paths(const Term<C>& t, Path& prefix, std::vector<Path>& out) {
  using K = typename Term<C>::Kind;
  out.push_back(prefix);
  if (t.kind() == K::sum || t.kind() == K::prod) {
    prefix.push_back(0);
    collect_paths(t.left(), prefix, out);
    prefix.back() = 1;
    collect_paths(t.right(), prefix, out);
    prefix.pop_back();
  } else if (t.kind() == K::app) {
    prefix.push_back(0);
    collect_paths(t.child(), prefix, out);
    prefix.pop_back();
  }
}

template <class C>
Term<C> subterm(const Term<C>& t, const Path& path) {
  Term<C> cur = t;
  for (auto s : path) cur = s == 0 ? cur.left() : cur.right();
  return cur;
}

// A random m ≤ k, coefficientwise.
template <class C>
MonoidElem<C> random_part(Rng& rng, const MonoidElem<C>& k) {
  LinComb<typename C::key_type> out;
  for (const auto& [key, c] : k.coeffs()) {
    if (c <= 64) {
      out.add(key, Nat(rng.upto(static_cast<std::uint64_t>(c))));
    } else {
      out.add(key, rng.coin() ? c : Nat{0});
    }
  }
  return MonoidElem<C>(k.carrier(), std::move(out));
}

}  // namespace detail

/// One application of a generating rule at `path`. Throws
/// rule_not_applicable if the pattern does not match there.
template <class C>
Term<C> rewrite_step(const Term<C>& t, const RewriteRule<C>& r, const Path& path) {
  if (auto out = detail::apply_at(t, r, path, 0)) return *out;
  throw rule_not_applicable(to_string(r.tag) + (r.dir == Direction::forward ? "" : " (backward)") +
                            " does not apply at the given path");
}

/// Applies `steps` rewrite steps, each chosen uniformly among the applicable
/// (path, rule, direction) triples. Deterministic in `seed`.
template <class C>
Term<C> equivalent_variant(const Term<C>& t, unsigned steps, std::uint64_t seed, const C& carrier) {
  Rng rng(seed);
  Term<C> cur = t;
  for (unsigned s = 0; s < steps; ++s) {
    std::vector<Path> paths;
    Path prefix;
    detail::collect_paths(cur, prefix, paths);
    std::vector<Term<C>> candidates;
    for (const auto& p : paths) {
      const Term<C> sub = detail::subterm(cur, p);
      for (RuleTag tag : all_rule_tags) {
        for (Direction dir : {Direction::forward, Direction::backward}) {
          RewriteRule<C> rule{tag, dir, std::nullopt, std::nullopt};
          if (dir == Direction::backward) {
            if (tag == RuleTag::var_zero) rule.witness = MonoidElem<C>::zero(carrier);
            if (tag == RuleTag::var_add) {
              if (sub.kind() != Term<C>::Kind::var) continue;
              rule.witness = detail::random_part(rng, sub.payload());
            }
            if (tag == RuleTag::annihilate) rule.filler = rng.coin() ? Term<C>::one() : sub;
          }
          if (auto out = detail::apply_at(cur, rule, p, 0)) candidates.push_back(std::move(*out));
        }
      }
    }
    if (candidates.empty()) continue;
    cur = candidates[rng.below(candidates.size())];
  }
  return cur;
}

/// F₀ψ: relabels every generator x_m as x_{ψ(m)}, keeping the tree shape.
template <class Dom, class Cod>
Term<Cod> term_map_hom(const MonoidHom<Dom, Cod>& h, const Term<Dom>& t) {
  using K = typename Term<Dom>::Kind;
  using T = Term<Cod>;
  switch (t.kind()) {
    case K::zero: return T::zero();
    case K::one: return T::one();
    case K::var: return T::var(hom_apply(h, t.payload()));
    case K::sum: return T::sum(term_map_hom(h, t.left()), term_map_hom(h, t.right()));
    case K::prod: return T::prod(term_map_hom(h, t.left()), term_map_hom(h, t.right()));
    case K::app: return T::app(term_map_hom(h, t.child()));
  }
  return T::zero();
}

}  // namespace fmrig
