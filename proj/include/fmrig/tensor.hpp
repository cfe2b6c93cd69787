#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/normal_form.hpp"

#include <array>
#include <functional>
#include <map>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace fmrig {

/// Element of C₁ ⊗ … ⊗ C_r for free-basis carriers. The tensor product of
/// free ℕ-modules is free on tuples of basis keys, so an element is a
/// coefficient map over key tuples.
template <class... Cs>
class Tensor {
  static_assert(sizeof...(Cs) >= 1, "a tensor needs at least one factor");

 public:
  using key_type = std::tuple<typename Cs::key_type...>;
  using factors_type = std::tuple<Cs...>;
  static constexpr std::size_t arity = sizeof...(Cs);

  explicit Tensor(factors_type factors) : factors_(std::move(factors)) {}
  Tensor(factors_type factors, LinComb<key_type> terms) : factors_(std::move(factors)), terms_(std::move(terms)) {}

  const factors_type& factors() const noexcept { return factors_; }
  const LinComb<key_type>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Tensor scaled(const Nat& c) const { return Tensor(factors_, terms_.scaled(c)); }

  Tensor& operator+=(const Tensor& other) {
    if (!(factors_ == other.factors_)) throw carrier_mismatch("tensor addition across different factor lists");
    terms_ += other.terms_;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) {
    a += b;
    return a;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  factors_type factors_;
  LinComb<key_type> terms_;
};

template <class C>
Tensor<C> as_tensor(const MonoidElem<C>& m) {
  LinComb<std::tuple<typename C::key_type>> terms;
  for (const auto& [k, c] : m.coeffs()) terms.add(std::tuple<typename C::key_type>(k), c);
  return Tensor<C>(std::tuple<C>(m.carrier()), std::move(terms));
}

template <class C>
MonoidElem<C> as_elem(const Tensor<C>& t) {
  LinComb<typename C::key_type> out;
  for (const auto& [k, c] : t.terms()) out.add(std::get<0>(k), c);
  return MonoidElem<C>(std::get<0>(t.factors()), std::move(out));
}

template <class... As>
Tensor<As...> tensor_product(const Tensor<As...>& a) {
  return a;
}

template <class... As, class... Bs>
Tensor<As..., Bs...> tensor_product(const Tensor<As...>& a, const Tensor<Bs...>& b) {
  using Out = Tensor<As..., Bs...>;
  LinComb<typename Out::key_type> terms;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) terms.add(std::tuple_cat(ka, kb), ca * cb);
  return Out(std::tuple_cat(a.factors(), b.factors()), std::move(terms));
}

template <class... As, class... Bs, class... Rest>
auto tensor_product(const Tensor<As...>& a, const Tensor<Bs...>& b, const Rest&... rest) {
  return tensor_product(tensor_product(a, b), rest...);
}

/// m₁ ⊗ … ⊗ m_r, expanded multilinearly over each factor's basis.
template <class... Cs>
Tensor<Cs...> tensor_pure(const MonoidElem<Cs>&... factors) {
  return tensor_product(as_tensor(factors)...);
}

namespace detail {

template <std::size_t I, std::size_t J>
constexpr std::size_t swap_index(std::size_t k) {
  return k == I ? J : (k == J ? I : k);
}

template <std::size_t I, std::size_t J, class Seq, class... Cs>
struct swapped;

template <std::size_t I, std::size_t J, std::size_t... Ks, class... Cs>
struct swapped<I, J, std::index_sequence<Ks...>, Cs...> {
  using type = Tensor<std::tuple_element_t<swap_index<I, J>(Ks), std::tuple<Cs...>>...>;

  static type apply(const Tensor<Cs...>& t) {
    const auto& f = t.factors();
    LinComb<typename type::key_type> terms;
    for (const auto& [k, c] : t.terms()) terms.add(typename type::key_type(std::get<swap_index<I, J>(Ks)>(k)...), c);
    return type(typename type::factors_type(std::get<swap_index<I, J>(Ks)>(f)...), std::move(terms));
  }
};

template <class... Ts>
struct tensor_cat;

template <class... As>
struct tensor_cat<Tensor<As...>> {
  using type = Tensor<As...>;
};

template <class... As, class... Bs, class... Rest>
struct tensor_cat<Tensor<As...>, Tensor<Bs...>, Rest...> {
  using type = typename tensor_cat<Tensor<As..., Bs...>, Rest...>::type;
};

template <class Tuple, std::size_t... Is>
auto tuple_to_array(const Tuple& t, std::index_sequence<Is...>) {
  return std::array<std::tuple_element_t<0, Tuple>, sizeof...(Is)>{std::get<Is>(t)...};
}

template <class Array, std::size_t... Is>
auto array_to_tuple(const Array& a, std::index_sequence<Is...>) {
  return std::make_tuple(a[Is]...);
}

}  // namespace detail

/// σ exchanging factors I and J.
template <std::size_t I, std::size_t J, class... Cs>
auto swap_factors(const Tensor<Cs...>& t) {
  static_assert(I < sizeof...(Cs) && J < sizeof...(Cs), "factor index out of range");
  return detail::swapped<I, J, std::index_sequence_for<Cs...>, Cs...>::apply(t);
}

/// Permutes the factors of a tensor whose factors share one carrier type:
/// the factor at position i moves to position perm[i].
template <class C, class... Rest>
  requires(std::is_same_v<C, Rest> && ...)
Tensor<C, Rest...> tensor_permute(const Tensor<C, Rest...>& t, std::span<const std::size_t> perm) {
  constexpr std::size_t n = 1 + sizeof...(Rest);
  if (perm.size() != n)
    throw arity_mismatch("permutation of size " + std::to_string(perm.size()) + " on a tensor with " +
                         std::to_string(n) + " factors");
  std::array<bool, n> seen{};
  for (auto p : perm) {
    if (p >= n || seen[p]) throw arity_mismatch("tensor_permute: not a bijection");
    seen[p] = true;
  }
  using T = Tensor<C, Rest...>;
  const auto seq = std::make_index_sequence<n>{};
  auto move = [&](const auto& tuple) {
    auto src = detail::tuple_to_array(tuple, seq);
    auto dst = src;
    for (std::size_t i = 0; i < n; ++i) dst[perm[i]] = src[i];
    return detail::array_to_tuple(dst, seq);
  };
  LinComb<typename T::key_type> terms;
  for (const auto& [k, c] : t.terms()) terms.add(move(k), c);
  return T(move(t.factors()), std::move(terms));
}

/// An ℕ-linear map In → Out₁ ⊗ … ⊗ Out_s given on basis keys.
template <class In, class... Outs>
struct LinearMap {
  using domain_type = In;
  using codomain_tensor = Tensor<Outs...>;

  In domain;
  std::tuple<Outs...> codomain;
  std::function<Tensor<Outs...>(const typename In::key_type&)> on_basis;
};

template <class C>
LinearMap<C, C> linear_identity(const C& carrier) {
  return {carrier, std::tuple<C>(carrier), [carrier](const typename C::key_type& k) {
            return Tensor<C>(std::tuple<C>(carrier), LinComb<std::tuple<typename C::key_type>>::single({k}));
          }};
}

template <class In, class... Outs>
LinearMap<In, Outs...> linear_zero(const In& domain, const Outs&... codomain) {
  std::tuple<Outs...> cod(codomain...);
  return {domain, cod, [cod](const typename In::key_type&) { return Tensor<Outs...>(cod); }};
}

/// Wraps an additive function on elements (such as mu or d_n) as a linear map
/// by evaluating it on each basis generator.
template <class In, class... Outs, class F>
LinearMap<In, Outs...> linear_from(const In& domain, std::tuple<Outs...> codomain, F fn) {
  return {domain, codomain, [domain, fn](const typename In::key_type& k) {
            auto r = fn(MonoidElem<In>::generator(domain, k));
            if constexpr (requires { as_tensor(r); })
              return as_tensor(r);
            else
              return r;
          }};
}

/// Applies one linear map per factor and extends additively. Output factors
/// are the concatenation of each map's codomain.
template <class... Ins, class... Maps>
auto tensor_bimap(const Tensor<Ins...>& t, const Maps&... maps) {
  static_assert(sizeof...(Ins) == sizeof...(Maps), "one map per tensor factor");
  using Out = typename detail::tensor_cat<typename Maps::codomain_tensor...>::type;

  return [&]<std::size_t... Is>(std::index_sequence<Is...>) {
    (require_same_carrier(std::get<Is>(t.factors()), maps.domain, "tensor_bimap"), ...);
    Out out(std::tuple_cat(maps.codomain...));
    std::tuple<std::map<typename Ins::key_type, typename Maps::codomain_tensor>...> caches;
    auto image = [](auto& cache, const auto& map, const auto& key) -> const auto& {
      auto it = cache.find(key);
      if (it == cache.end()) {
        auto r = map.on_basis(key);
        if (!(r.factors() == map.codomain)) throw carrier_mismatch("tensor_bimap: map image outside its codomain");
        it = cache.emplace(key, std::move(r)).first;
      }
      return it->second;
    };
    for (const auto& [k, c] : t.terms()) {
      Out piece = tensor_product(image(std::get<Is>(caches), maps, std::get<Is>(k))...);
      out += piece.scaled(c);
    }
    return out;
  }(std::index_sequence_for<Ins...>{});
}

}  // namespace fmrig
