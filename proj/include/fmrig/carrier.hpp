#pragma once

#include "fmrig/error.hpp"
#include "fmrig/lincomb.hpp"

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fmrig {

/// A commutative monoid presented by a distinguished free basis. Elements are
/// ℕ-combinations of `key_type`; `level` counts how many times the free rig
/// construction has been applied to reach this carrier.
template <class C>
concept Carrier = std::equality_comparable<C> && requires(const C& c, const typename C::key_type& k) {
  typename C::key_type;
  { C::level } -> std::convertible_to<int>;
  { c.contains(k) } -> std::convertible_to<bool>;
  { c.describe() } -> std::convertible_to<std::string>;
};

/// ℕᵏ with basis e₀ … e_{k-1}. Rank 0 is the trivial monoid.
struct NatPow {
  using key_type = std::size_t;
  static constexpr int level = 0;

  std::size_t rank = 1;

  bool contains(key_type i) const { return i < rank; }
  std::string describe() const { return "N^" + std::to_string(rank); }
  friend bool operator==(const NatPow&, const NatPow&) = default;
};

template <class C>
void require_same_carrier(const C& a, const C& b, const char* op) {
  if (!(a == b))
    throw carrier_mismatch(std::string(op) + ": carrier " + a.describe() + " vs " + b.describe());
}

/// Element of a free-basis commutative monoid.
template <class C>
class MonoidElem {
 public:
  using carrier_type = C;
  using key_type = typename C::key_type;

  explicit MonoidElem(C carrier) : carrier_(std::move(carrier)) {}
  MonoidElem(C carrier, LinComb<key_type> coeffs) : carrier_(std::move(carrier)), coeffs_(std::move(coeffs)) {}

  static MonoidElem zero(C carrier) { return MonoidElem(std::move(carrier)); }

  static MonoidElem generator(C carrier, key_type key, Nat coeff = 1) {
    if (!carrier.contains(key)) throw carrier_mismatch("generator key outside " + carrier.describe());
    return MonoidElem(std::move(carrier), LinComb<key_type>::single(std::move(key), coeff));
  }

  const C& carrier() const noexcept { return carrier_; }
  const LinComb<key_type>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  MonoidElem scaled(const Nat& factor) const { return MonoidElem(carrier_, coeffs_.scaled(factor)); }

  friend bool operator==(const MonoidElem&, const MonoidElem&) = default;

 private:
  C carrier_;
  LinComb<key_type> coeffs_;
};

template <class C>
MonoidElem<C> elem_add(const MonoidElem<C>& a, const MonoidElem<C>& b) {
  require_same_carrier(a.carrier(), b.carrier(), "elem_add");
  return MonoidElem<C>(a.carrier(), a.coeffs() + b.coeffs());
}

template <class C>
MonoidElem<C> operator+(const MonoidElem<C>& a, const MonoidElem<C>& b) {
  return elem_add(a, b);
}

inline MonoidElem<NatPow> from_coords(const NatPow& carrier, const std::vector<Nat>& coords) {
  if (coords.size() != carrier.rank)
    throw carrier_mismatch("expected " + std::to_string(carrier.rank) + " coordinates, got " +
                           std::to_string(coords.size()));
  LinComb<std::size_t> c;
  for (std::size_t i = 0; i < coords.size(); ++i) c.add(i, coords[i]);
  return MonoidElem<NatPow>(carrier, std::move(c));
}

inline std::vector<Nat> coords(const MonoidElem<NatPow>& m) {
  std::vector<Nat> out(m.carrier().rank);
  for (const auto& [i, c] : m.coeffs()) out[i] = c;
  return out;
}

/// Monoid homomorphism between free-basis carriers, fixed by the image of
/// each domain generator.
template <class Dom, class Cod>
struct MonoidHom {
  Dom domain;
  Cod codomain;
  std::function<MonoidElem<Cod>(const typename Dom::key_type&)> on_basis;
};

template <class Dom, class Cod>
MonoidElem<Cod> hom_apply(const MonoidHom<Dom, Cod>& h, const MonoidElem<Dom>& a) {
  require_same_carrier(h.domain, a.carrier(), "hom_apply");
  LinComb<typename Cod::key_type> out;
  for (const auto& [k, c] : a.coeffs()) {
    auto img = h.on_basis(k);
    require_same_carrier(h.codomain, img.carrier(), "hom_apply image");
    out += img.coeffs().scaled(c);
  }
  return MonoidElem<Cod>(h.codomain, std::move(out));
}

template <class C>
MonoidHom<C, C> identity_hom(const C& carrier) {
  return {carrier, carrier, [carrier](const typename C::key_type& k) { return MonoidElem<C>::generator(carrier, k); }};
}

template <class A, class B, class D>
MonoidHom<A, D> compose(const MonoidHom<B, D>& outer, const MonoidHom<A, B>& inner) {
  return {inner.domain, outer.codomain,
          [outer, inner](const typename A::key_type& k) { return hom_apply(outer, inner.on_basis(k)); }};
}

/// ℕᵏ → ℕʲ given by a k×j natural matrix: row i is the image of eᵢ.
inline MonoidHom<NatPow, NatPow> matrix_hom(NatPow domain, NatPow codomain, std::vector<std::vector<Nat>> rows) {
  if (rows.size() != domain.rank) throw carrier_mismatch("matrix_hom: one row per domain generator required");
  std::vector<MonoidElem<NatPow>> images;
  images.reserve(rows.size());
  for (const auto& r : rows) images.push_back(from_coords(codomain, r));
  return {domain, codomain, [images = std::move(images)](std::size_t i) { return images.at(i); }};
}

}  // namespace fmrig
