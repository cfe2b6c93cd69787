#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/nat.hpp"
#include "fmrig/normalize.hpp"
#include "fmrig/term.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace fmrig {

/// Bounds for random terms. Over a level-2 carrier, each y-payload is itself
/// a random term one level down, of depth at most `payload_depth`.
template <class C>
struct GenConfig {
  C carrier;
  unsigned max_depth = 4;
  unsigned max_f_depth = 2;
  std::uint64_t max_coefficient = 5;
  std::uint64_t seed = 0;
  unsigned payload_depth = 2;
};

template <class C>
Term<C> random_term(Rng& rng, const GenConfig<C>& cfg);

inline MonoidElem<NatPow> random_elem(Rng& rng, const GenConfig<NatPow>& cfg) {
  std::vector<Nat> cs(cfg.carrier.rank);
  for (auto& c : cs) c = rng.upto(cfg.max_coefficient);
  return from_coords(cfg.carrier, cs);
}

template <class B>
MonoidElem<FreeRig<B>> random_elem(Rng& rng, const GenConfig<FreeRig<B>>& cfg) {
  GenConfig<B> inner{cfg.carrier.base, cfg.payload_depth, cfg.carrier.self_map ? std::min(cfg.max_f_depth, cfg.payload_depth) : 0u,
                     cfg.max_coefficient, rng.next(), cfg.payload_depth};
  // y[0] is the zero element, so a zero payload collapses the whole
  // surrounding product; redraw a few times to keep inputs informative.
  auto payload = normalize(random_term(rng, inner), cfg.carrier);
  for (int retry = 0; retry < 3 && payload.is_zero(); ++retry) {
    inner.seed = rng.next();
    payload = normalize(random_term(rng, inner), cfg.carrier);
  }
  return payload;
}

namespace detail {

template <class C>
Term<C> random_term_at(Rng& rng, const GenConfig<C>& cfg, unsigned depth, unsigned f_depth) {
  using T = Term<C>;
  // 0: zero, 1: one, 2: var, 3: sum, 4: prod, 5: app. Constants get low
  // weight so that most terms do not collapse to 0 or 1.
  std::vector<int> allowed{0, 1, 2, 2, 2};
  if (depth > 0) {
    allowed.insert(allowed.end(), {3, 3, 3, 4, 4, 4});
    if (f_depth > 0) allowed.insert(allowed.end(), {5, 5});
  }
  switch (allowed[rng.below(allowed.size())]) {
    case 0: return T::zero();
    case 1: return T::one();
    case 2: return T::var(random_elem(rng, cfg));
    case 3: {
      T a = random_term_at(rng, cfg, depth - 1, f_depth);
      return T::sum(a, random_term_at(rng, cfg, depth - 1, f_depth));
    }
    case 4: {
      T a = random_term_at(rng, cfg, depth - 1, f_depth);
      return T::prod(a, random_term_at(rng, cfg, depth - 1, f_depth));
    }
    default: return T::app(random_term_at(rng, cfg, depth - 1, f_depth - 1));
  }
}

}  // namespace detail

template <class C>
Term<C> random_term(Rng& rng, const GenConfig<C>& cfg) {
  return detail::random_term_at(rng, cfg, cfg.max_depth, cfg.max_f_depth);
}

/// Deterministic in `cfg` (including its seed). Node kinds are drawn with
/// fixed weights among those the remaining depth permits.
template <class C>
Term<C> random_term(const GenConfig<C>& cfg) {
  Rng rng(cfg.seed);
  return random_term(rng, cfg);
}

}  // namespace fmrig
