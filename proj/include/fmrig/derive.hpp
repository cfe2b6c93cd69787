#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/error.hpp"
#include "fmrig/modality.hpp"
#include "fmrig/normal_form.hpp"
#include "fmrig/tensor.hpp"

#include <tuple>

namespace fmrig {

template <class C>
using DerivTensor = Tensor<FreeRig<C>, C>;

/// ₙd_M: FM → FM ⊗ M on canonical forms. Additive over monomials, Leibniz
/// on each monomial, with d(x_e) = 1 ⊗ e and d(f(t)) = n·ₙd(t).
template <class C>
DerivTensor<C> d_n(const NormalForm<C>& a, const Nat& n) {
  const FreeRig<C>& space = a.carrier();
  using Key = typename DerivTensor<C>::key_type;
  LinComb<Key> out;
  for (const auto& [m, c] : a.coeffs()) {
    const auto& atoms = m.atoms();
    // Equal atoms are adjacent; α^k·rest contributes k·α^{k-1}·rest·d(α).
    for (std::size_t j = 0; j < atoms.size();) {
      std::size_t run = 1;
      while (j + run < atoms.size() && atoms[j + run] == atoms[j]) ++run;
      const Monomial<C> rest = m.without(j);
      const Nat weight = c * run;
      const auto& atom = atoms[j];
      if (atom.is_gen()) {
        out.add(Key(rest, atom.key()), weight);
      } else if (n != 0) {
        const auto inner = d_n(atom.payload(), n);
        for (const auto& [k, ck] : inner.terms())
          out.add(Key(rest * std::get<0>(k), std::get<1>(k)), weight * n * ck);
      }
      j += run;
    }
  }
  return DerivTensor<C>(std::tuple(space, space.base), std::move(out));
}

/// ₙd_{FM}: the same transformation one level up, FFM → FFM ⊗ FM.
template <class C>
DerivTensor<FreeRig<C>> d_n_level2(const NormalForm<FreeRig<C>>& a2, const Nat& n) {
  return d_n(a2, n);
}

/// The deriving transformation of the symmetric algebra: d_n restricted to
/// f-free input, where n plays no role.
template <class C>
DerivTensor<C> sym_derive(const NormalForm<C>& p) {
  if (has_app_atoms(p)) throw unsupported_operation("sym_derive: input contains an f-atom");
  return d_n(p, Nat{0});
}

/// The ℕ-linear Leibniz derivation ∂ on ℕ[x] with ∂(x) = seed:
/// c·xᵏ ↦ c·k·xᵏ⁻¹·seed.
inline NormalForm<NatPow> seeded_derivation(const NormalForm<NatPow>& p, const NormalForm<NatPow>& seed) {
  require_same_carrier(p.carrier(), seed.carrier(), "seeded_derivation");
  if (p.carrier().base.rank != 1) throw unsupported_operation("seeded_derivation needs a single generator");
  if (has_app_atoms(p) || has_app_atoms(seed)) throw unsupported_operation("seeded_derivation: f-atoms not allowed");
  NormalForm<NatPow> out = nf_zero(p.carrier());
  for (const auto& [m, c] : p.coeffs()) {
    if (m.is_unit()) continue;
    out = out + nf_monomial(p.carrier(), m.without(0), c * m.degree()) * seed;
  }
  return out;
}

/// ₙd_M as a linear map, for use inside tensor_bimap.
template <class C>
LinearMap<FreeRig<C>, FreeRig<C>, C> d_n_map(const FreeRig<C>& space, const Nat& n) {
  return {space, std::tuple(space, space.base), [space, n](const Monomial<C>& k) { return d_n(nf_monomial(space, k), n); }};
}

/// m_M as a linear map FFM → FM.
template <class C>
LinearMap<FreeRig<FreeRig<C>>, FreeRig<C>> mu_map(const FreeRig<FreeRig<C>>& level2) {
  return {level2, std::tuple(level2.base),
          [level2](const Monomial<FreeRig<C>>& k) { return as_tensor(mu(nf_monomial(level2, k))); }};
}

/// FM ⊗ ℕ → FM, a ⊗ k ↦ k·a (the right unitor for M = ℕ).
inline NormalForm<NatPow> unitor_right(const DerivTensor<NatPow>& t) {
  const auto& [space, base] = t.factors();
  if (base.rank != 1) throw unsupported_operation("unitor_right needs M = N");
  LinComb<Monomial<NatPow>> out;
  for (const auto& [k, c] : t.terms()) out.add(std::get<0>(k), c);
  return NormalForm<NatPow>(space, std::move(out));
}

}  // namespace fmrig
