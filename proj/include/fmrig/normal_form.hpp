#pragma once

#include "fmrig/carrier.hpp"

#include <algorithm>
#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fmrig {

template <class C>
class Monomial;

/// FM over the carrier `C`, i.e. the free commutative rig with a self-map
/// on C. With `self_map == false` this is the symmetric algebra SM: the same
/// canonical forms with the f-atoms switched off.
///
/// FreeRig<C> is itself a free-basis carrier whose basis is the set of
/// monomials, which is how FFM = FreeRig<FreeRig<C>> is built.
template <class C>
struct FreeRig {
  using key_type = Monomial<C>;
  using base_type = C;
  static constexpr int level = C::level + 1;

  C base;
  bool self_map = true;

  bool contains(const Monomial<C>& m) const;
  std::string describe() const { return (self_map ? "F(" : "S(") + base.describe() + ")"; }
  friend bool operator==(const FreeRig&, const FreeRig&) = default;
};

/// Canonical element of FM: a coefficient map from monomials to positive
/// naturals. Structural equality decides ∼.
template <class C>
using NormalForm = MonoidElem<FreeRig<C>>;

/// Indivisible multiplicative factor: a basis generator of the carrier, or
/// the self-map applied to a whole normal form.
template <class C>
class Atom {
 public:
  using gen_key = typename C::key_type;

  static Atom gen(gen_key key) { return Atom(std::move(key)); }
  static Atom app(NormalForm<C> payload) {
    return Atom(std::make_shared<const NormalForm<C>>(std::move(payload)));
  }

  bool is_gen() const noexcept { return v_.index() == 0; }
  bool is_app() const noexcept { return v_.index() == 1; }
  const gen_key& key() const { return std::get<0>(v_); }
  const NormalForm<C>& payload() const { return *std::get<1>(v_); }

  friend bool operator==(const Atom& a, const Atom& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_gen()) return a.key() == b.key();
    const auto& pa = std::get<1>(a.v_);
    const auto& pb = std::get<1>(b.v_);
    return pa == pb || pa->coeffs() == pb->coeffs();
  }

  // Generators before f-atoms; generators by key; f-atoms by payload.
  friend std::strong_ordering compare(const Atom& a, const Atom& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
    if (a.is_gen()) {
      if (a.key() < b.key()) return std::strong_ordering::less;
      if (b.key() < a.key()) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    const auto& pa = std::get<1>(a.v_);
    const auto& pb = std::get<1>(b.v_);
    if (pa == pb) return std::strong_ordering::equal;
    return compare(pa->coeffs(), pb->coeffs());
  }

  friend bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

 private:
  explicit Atom(gen_key key) : v_(std::in_place_index<0>, std::move(key)) {}
  explicit Atom(std::shared_ptr<const NormalForm<C>> p) : v_(std::in_place_index<1>, std::move(p)) {}

  std::variant<gen_key, std::shared_ptr<const NormalForm<C>>> v_;
};

/// Sorted multiset of atoms; the empty monomial is the multiplicative unit.
template <class C>
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<Atom<C>> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
  }

  static Monomial of(Atom<C> a) {
    Monomial m;
    m.atoms_.push_back(std::move(a));
    return m;
  }

  const std::vector<Atom<C>>& atoms() const noexcept { return atoms_; }
  std::size_t degree() const noexcept { return atoms_.size(); }
  bool is_unit() const noexcept { return atoms_.empty(); }

  // The monomial with the atom at `pos` removed.
  Monomial without(std::size_t pos) const {
    Monomial m;
    m.atoms_.reserve(atoms_.size() - 1);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (i != pos) m.atoms_.push_back(atoms_[i]);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.atoms_.reserve(a.atoms_.size() + b.atoms_.size());
    std::merge(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(), std::back_inserter(m.atoms_));
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded by degree, then lexicographic on the atom lists.
  friend std::strong_ordering compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
      auto c = compare(a.atoms_[i], b.atoms_[i]);
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  std::vector<Atom<C>> atoms_;
};

template <class C>
bool FreeRig<C>::contains(const Monomial<C>& m) const {
  for (const auto& a : m.atoms()) {
    if (a.is_gen()) {
      if (!base.contains(a.key())) return false;
    } else if (!self_map || !(a.payload().carrier() == *this)) {
      return false;
    }
  }
  return true;
}

/// The carrier whose elements are the normal forms of `space`, read
/// additively over the monomial basis. Used to build FFM.
template <class C>
const FreeRig<C>& fm_as_carrier(const FreeRig<C>& space) {
  return space;
}

template <class C>
NormalForm<C> nf_zero(const FreeRig<C>& space) {
  return NormalForm<C>(space);
}

template <class C>
NormalForm<C> nf_constant(const FreeRig<C>& space, const Nat& c) {
  return NormalForm<C>(space, LinComb<Monomial<C>>::single(Monomial<C>{}, c));
}

template <class C>
NormalForm<C> nf_one(const FreeRig<C>& space) {
  return nf_constant(space, Nat{1});
}

template <class C>
NormalForm<C> nf_monomial(const FreeRig<C>& space, Monomial<C> m, const Nat& c = 1) {
  return NormalForm<C>(space, LinComb<Monomial<C>>::single(std::move(m), c));
}

template <class C>
NormalForm<C> nf_generator(const FreeRig<C>& space, typename C::key_type key) {
  if (!space.base.contains(key)) throw carrier_mismatch("generator outside " + space.base.describe());
  return nf_monomial(space, Monomial<C>::of(Atom<C>::gen(std::move(key))));
}

/// x_m read in FM: m = Σ cᵢeᵢ becomes Σ cᵢ·⟨eᵢ⟩. This is why x_{m+n} and
/// x_m + x_n have the same stored form.
template <class C>
NormalForm<C> nf_embed(const FreeRig<C>& space, const MonoidElem<C>& m) {
  require_same_carrier(space.base, m.carrier(), "embed");
  LinComb<Monomial<C>> out;
  for (const auto& [k, c] : m.coeffs()) out.add(Monomial<C>::of(Atom<C>::gen(k)), c);
  return NormalForm<C>(space, std::move(out));
}

template <class C>
NormalForm<C> nf_add(const NormalForm<C>& a, const NormalForm<C>& b) {
  return elem_add(a, b);
}

template <class C>
NormalForm<C> nf_mul(const NormalForm<C>& a, const NormalForm<C>& b) {
  require_same_carrier(a.carrier(), b.carrier(), "nf_mul");
  LinComb<Monomial<C>> out;
  for (const auto& [ma, ca] : a.coeffs())
    for (const auto& [mb, cb] : b.coeffs()) out.add(ma * mb, ca * cb);
  return NormalForm<C>(a.carrier(), std::move(out));
}

template <class C>
NormalForm<C> operator*(const NormalForm<C>& a, const NormalForm<C>& b) {
  return nf_mul(a, b);
}

template <class C>
NormalForm<C> nf_selfmap(const NormalForm<C>& a) {
  if (!a.carrier().self_map) throw unsupported_operation("self-map is disabled on " + a.carrier().describe());
  return nf_monomial(a.carrier(), Monomial<C>::of(Atom<C>::app(a)));
}

template <class C>
bool has_app_atoms(const NormalForm<C>& a) {
  for (const auto& [m, c] : a.coeffs())
    for (const auto& atom : m.atoms())
      if (atom.is_app()) return true;
  return false;
}

/// Fψ: the rig-with-self-map homomorphism FM → FN extending u_N ∘ ψ.
template <class C, class D>
NormalForm<D> apply_functor(const MonoidHom<C, D>& h, const NormalForm<C>& a) {
  require_same_carrier(h.domain, a.carrier().base, "apply_functor");
  const FreeRig<D> target{h.codomain, a.carrier().self_map};
  NormalForm<D> out = nf_zero(target);
  for (const auto& [m, c] : a.coeffs()) {
    NormalForm<D> term = nf_constant(target, c);
    for (const auto& atom : m.atoms()) {
      if (atom.is_gen())
        term = term * nf_embed(target, h.on_basis(atom.key()));
      else
        term = term * nf_selfmap(apply_functor(h, atom.payload()));
    }
    out = out + term;
  }
  return out;
}

}  // namespace fmrig
