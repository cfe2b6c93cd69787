#pragma once

#include "fmrig/normal_form.hpp"
#include "fmrig/term.hpp"

namespace fmrig {

/// The quotient map F₀M → FM, computed as the h₀ recursion into the
/// canonical rig. normalize(a) == normalize(b) exactly when a ∼ b.
template <class C>
NormalForm<C> normalize(const Term<C>& t, const FreeRig<C>& space) {
  using K = typename Term<C>::Kind;
  switch (t.kind()) {
    case K::zero: return nf_zero(space);
    case K::one: return nf_one(space);
    case K::var: return nf_embed(space, t.payload());
    case K::sum: return nf_add(normalize(t.left(), space), normalize(t.right(), space));
    case K::prod: return nf_mul(normalize(t.left(), space), normalize(t.right(), space));
    case K::app: return nf_selfmap(normalize(t.child(), space));
  }
  return nf_zero(space);
}

}  // namespace fmrig
