#pragma once

// Independent oracle for d_n: the recursion on raw syntax trees, before any
// quotienting. Each case below is one clause of the inductive definition.
// Only at the very end is each left factor sent to FM by normalize, and the
// pure tensors are expanded bilinearly.

#include "fmrig/derive.hpp"
#include "fmrig/normalize.hpp"
#include "fmrig/term.hpp"

#include <vector>

namespace oracle {

using fmrig::Nat;

template <class C>
struct Summand {
  fmrig::Term<C> left;
  fmrig::MonoidElem<C> right;
  Nat coeff;
};

template <class C>
std::vector<Summand<C>> d0(const fmrig::Term<C>& t, const Nat& n) {
  using T = fmrig::Term<C>;
  using K = typename T::Kind;
  std::vector<Summand<C>> out;
  switch (t.kind()) {
    case K::zero:
    case K::one:
      break;
    case K::var:
      out.push_back({T::one(), t.payload(), 1});
      break;
    case K::prod:
      // [a] times d(b), plus d(a) times [b] with the FM factor moved left.
      for (auto& s : d0(t.right(), n)) out.push_back({T::prod(t.left(), s.left), s.right, s.coeff});
      for (auto& s : d0(t.left(), n)) out.push_back({T::prod(s.left, t.right()), s.right, s.coeff});
      break;
    case K::sum:
      out = d0(t.left(), n);
      for (auto& s : d0(t.right(), n)) out.push_back(s);
      break;
    case K::app:
      for (auto& s : d0(t.child(), n)) out.push_back({s.left, s.right, s.coeff * n});
      break;
  }
  return out;
}

template <class C>
fmrig::DerivTensor<C> term_derive(const fmrig::Term<C>& t, const Nat& n, const fmrig::FreeRig<C>& space) {
  using Key = typename fmrig::DerivTensor<C>::key_type;
  fmrig::LinComb<Key> acc;
  for (const auto& s : d0(t, n)) {
    const auto left = fmrig::normalize(s.left, space);
    for (const auto& [mono, c1] : left.coeffs())
      for (const auto& [key, c2] : s.right.coeffs()) acc.add(Key(mono, key), s.coeff * c1 * c2);
  }
  return fmrig::DerivTensor<C>(std::tuple(space, space.base), std::move(acc));
}

}  // namespace oracle
