#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/error.hpp"
#include "fmrig/normal_form.hpp"
#include "fmrig/parse.hpp"
#include "fmrig/tensor.hpp"
#include "fmrig/term.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fmrig {

/// u_M(m) = [x_m].
template <class C>
NormalForm<C> unit(const FreeRig<C>& space, const MonoidElem<C>& m) {
  return nf_embed(space, m);
}

/// u_M as a monoid homomorphism M → FM, for use with apply_functor.
template <class C>
MonoidHom<C, FreeRig<C>> unit_hom(const FreeRig<C>& space) {
  return {space.base, space, [space](const typename C::key_type& k) { return nf_generator(space, k); }};
}

/// η_M(k) = k[1].
template <class C>
NormalForm<C> eta(const FreeRig<C>& space, const Nat& c) {
  return nf_constant(space, c);
}

/// ∇_M: FM ⊗ FM → FM, [a] ⊗ [b] ↦ [a][b].
template <class C>
NormalForm<C> nabla(const Tensor<FreeRig<C>, FreeRig<C>>& t) {
  const auto& [l, r] = t.factors();
  require_same_carrier(l, r, "nabla");
  LinComb<Monomial<C>> out;
  for (const auto& [k, c] : t.terms()) out.add(std::get<0>(k) * std::get<1>(k), c);
  return NormalForm<C>(l, std::move(out));
}

/// ∇ ⊗ id on FM ⊗ FM ⊗ X₁ ⊗ … : multiplies the first two factors.
template <class C, class... Rest>
Tensor<FreeRig<C>, Rest...> nabla_front(const Tensor<FreeRig<C>, FreeRig<C>, Rest...>& t) {
  using Out = Tensor<FreeRig<C>, Rest...>;
  const auto& f = t.factors();
  require_same_carrier(std::get<0>(f), std::get<1>(f), "nabla");
  LinComb<typename Out::key_type> out;
  for (const auto& [k, c] : t.terms()) {
    auto head = std::get<0>(k) * std::get<1>(k);
    out.add(std::apply([&](const auto&, const auto&, const auto&... rest) { return typename Out::key_type(head, rest...); },
                       k),
            c);
  }
  auto factors = std::apply([](const auto& a, const auto&, const auto&... rest) { return std::tuple(a, rest...); }, f);
  return Out(std::move(factors), std::move(out));
}

/// m_M: FFM → FM. A rig-with-self-map homomorphism fixed by y_μ ↦ μ (the
/// monomial read back in FM) and g(t) ↦ f(m_M(t)).
template <class C>
NormalForm<C> mu(const NormalForm<FreeRig<C>>& a2) {
  const FreeRig<C>& space = a2.carrier().base;
  if (a2.carrier().self_map != space.self_map)
    throw carrier_mismatch("mu: self-map mode differs between levels");
  NormalForm<C> out = nf_zero(space);
  for (const auto& [m, c] : a2.coeffs()) {
    NormalForm<C> term = nf_constant(space, c);
    for (const auto& atom : m.atoms()) {
      if (atom.is_gen())
        term = term * nf_monomial(space, atom.key());
      else
        term = term * nf_selfmap(mu(atom.payload()));
    }
    out = out + term;
  }
  return out;
}

/// m_M as a monoid homomorphism FFM → FM (to take F of it).
template <class C>
MonoidHom<FreeRig<FreeRig<C>>, FreeRig<C>> mu_hom(const FreeRig<FreeRig<C>>& level2) {
  return {level2, level2.base, [level2](const Monomial<FreeRig<C>>& k) { return mu(nf_monomial(level2, k)); }};
}

/// A commutative rig with a self-map whose carrier is ℕ.
struct NatRig {
  std::string name;
  std::function<Nat(const Nat&)> self_map;
};

inline std::vector<std::string> nat_rig_catalog() {
  return {"identity", "successor", "square", "double", "const-one", "const-zero"};
}

namespace detail {

inline Nat eval_pointwise(const Term<NatPow>& t, const Nat& v) {
  using K = Term<NatPow>::Kind;
  switch (t.kind()) {
    case K::zero: return 0;
    case K::one: return 1;
    case K::var: return coords(t.payload())[0] * v;
    case K::sum: return eval_pointwise(t.left(), v) + eval_pointwise(t.right(), v);
    case K::prod: return eval_pointwise(t.left(), v) * eval_pointwise(t.right(), v);
    case K::app: throw unsupported_operation("self-map expressions may not use f");
  }
  return 0;
}

}  // namespace detail

/// Looks `name` up in the catalog; otherwise reads it as a one-variable
/// expression over ℕ (x[1] is the argument) evaluated pointwise.
inline NatRig nat_rig(const std::string& name) {
  if (name == "identity" || name == "id") return {"identity", [](const Nat& v) { return v; }};
  if (name == "successor") return {name, [](const Nat& v) { return v + 1; }};
  if (name == "square") return {name, [](const Nat& v) { return v * v; }};
  if (name == "double") return {name, [](const Nat& v) { return v * 2; }};
  if (name == "const-one") return {name, [](const Nat&) { return Nat{1}; }};
  if (name == "const-zero") return {name, [](const Nat&) { return Nat{0}; }};
  Term<NatPow> body = parse(name, NatPow{1});
  return {name, [body](const Nat& v) { return detail::eval_pointwise(body, v); }};
}

/// The unique rig-with-self-map homomorphism FM → (ℕ, 𝐠) extending φ on
/// the basis: h₀(x_m) = φ(m), h₀(f(a)) = 𝐠(h₀(a)).
template <class C>
Nat evaluate(const NormalForm<C>& a, const NatRig& target, const std::map<typename C::key_type, Nat>& phi) {
  Nat total = 0;
  for (const auto& [m, c] : a.coeffs()) {
    Nat term = c;
    for (const auto& atom : m.atoms()) {
      if (atom.is_gen()) {
        auto it = phi.find(atom.key());
        if (it == phi.end()) throw missing_image("evaluate: phi has no image for a generator");
        term *= it->second;
      } else {
        term *= target.self_map(evaluate(atom.payload(), target, phi));
      }
    }
    total += term;
  }
  return total;
}

inline Nat evaluate(const NormalForm<NatPow>& a, const NatRig& target, const std::vector<Nat>& phi) {
  if (phi.size() < a.carrier().base.rank)
    throw missing_image("evaluate: phi gives " + std::to_string(phi.size()) + " images for " +
                        std::to_string(a.carrier().base.rank) + " generators");
  std::map<std::size_t, Nat> m;
  for (std::size_t i = 0; i < phi.size(); ++i) m.emplace(i, phi[i]);
  return evaluate(a, target, m);
}

}  // namespace fmrig
