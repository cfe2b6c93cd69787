#pragma once

#include "fmrig/error.hpp"
#include "fmrig/normal_form.hpp"
#include "fmrig/tensor.hpp"
#include "fmrig/term.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fmrig {

// Canonical text. A normal form is `coeff*monomial` terms joined by " + " in
// key order; generators print as x[i] (basis index), f-atoms as f(<nf>), the
// empty monomial as 1 and the zero element as 0. One level up the letters
// are y and g, with a monomial of FM inside y[..]. Tensor factors print as
// e[i] for ℕᵏ and as a monomial for FM.

template <class C>
std::string render(const NormalForm<C>& a);

template <class C>
std::string render_monomial(const Monomial<C>& m);

namespace detail {

inline std::string gen_content(const NatPow&, std::size_t i) { return std::to_string(i); }

template <class B>
std::string gen_content(const FreeRig<B>&, const Monomial<B>& m) {
  return render_monomial(m);
}

}  // namespace detail

template <class C>
std::string render_atom(const C& base, const Atom<C>& a) {
  if (a.is_gen()) return std::string(1, var_letter(C::level)) + "[" + detail::gen_content(base, a.key()) + "]";
  return std::string(1, map_letter(C::level)) + "(" + render(a.payload()) + ")";
}

template <class C>
std::string render_monomial_in(const C& base, const Monomial<C>& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& a : m.atoms()) {
    if (!out.empty()) out += "*";
    out += render_atom(base, a);
  }
  return out;
}

template <class C>
std::string render_monomial(const Monomial<C>& m) {
  // Generator rendering only depends on the key, not on the carrier value.
  return render_monomial_in(C{}, m);
}

template <class C>
std::string render(const NormalForm<C>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.coeffs()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + render_monomial_in(a.carrier().base, m);
  }
  return out;
}

inline std::string render_key(const NatPow&, std::size_t i) { return "e[" + std::to_string(i) + "]"; }

template <class B>
std::string render_key(const FreeRig<B>& c, const Monomial<B>& m) {
  return render_monomial_in(c.base, m);
}

inline std::string render(const MonoidElem<NatPow>& m) {
  std::string out = "(";
  const auto cs = coords(m);
  for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? "," : "") + cs[i].str();
  return out + ")";
}

template <class... Cs>
std::string render(const Tensor<Cs...>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*(";
    [&]<std::size_t... Is>(std::index_sequence<Is...>) {
      ((out += (Is ? " ⊗ " : "") + render_key(std::get<Is>(t.factors()), std::get<Is>(k))), ...);
    }(std::index_sequence_for<Cs...>{});
    out += ")";
  }
  return out;
}

// Structured export: [{"coeff": c, "atoms": [{"gen": key} | {"app": <nf>}]}].
// Coefficients are JSON numbers when they fit in 64 bits, decimal strings
// otherwise. A level-2 generator key is the atom list of an FM monomial.

inline nlohmann::json coeff_to_json(const Nat& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return c.str();
}

inline Nat coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Nat(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw error("structured form: malformed coefficient '" + s + "'");
    return Nat(s);
  }
  throw error("structured form: coefficient must be a natural number");
}

template <class C>
nlohmann::json to_json(const NormalForm<C>& a);

template <class C>
nlohmann::json monomial_to_json(const Monomial<C>& m);

inline nlohmann::json key_to_json(const NatPow&, std::size_t i) { return i; }

template <class B>
nlohmann::json key_to_json(const FreeRig<B>&, const Monomial<B>& m) {
  return monomial_to_json(m);
}

template <class C>
nlohmann::json monomial_to_json(const Monomial<C>& m) {
  auto atoms = nlohmann::json::array();
  for (const auto& a : m.atoms()) {
    if (a.is_gen())
      atoms.push_back({{"gen", key_to_json(C{}, a.key())}});
    else
      atoms.push_back({{"app", to_json(a.payload())}});
  }
  return atoms;
}

template <class C>
nlohmann::json to_json(const NormalForm<C>& a) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : a.coeffs()) out.push_back({{"coeff", coeff_to_json(c)}, {"atoms", monomial_to_json(m)}});
  return out;
}

template <class... Cs>
nlohmann::json to_json(const Tensor<Cs...>& t) {
  auto out = nlohmann::json::array();
  for (const auto& [k, c] : t.terms()) {
    auto factors = nlohmann::json::array();
    [&]<std::size_t... Is>(std::index_sequence<Is...>) {
      (factors.push_back(key_to_json(std::get<Is>(t.factors()), std::get<Is>(k))), ...);
    }(std::index_sequence_for<Cs...>{});
    out.push_back({{"coeff", coeff_to_json(c)}, {"factors", factors}});
  }
  return out;
}

template <class C>
NormalForm<C> nf_from_json(const nlohmann::json& j, const FreeRig<C>& space);

template <class C>
Monomial<C> monomial_from_json(const nlohmann::json& j, const FreeRig<C>& space);

inline std::size_t key_from_json(const nlohmann::json& j, const NatPow& c) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= c.rank)
    throw carrier_mismatch("structured form: generator index outside " + c.describe());
  return j.get<std::size_t>();
}

template <class B>
Monomial<B> key_from_json(const nlohmann::json& j, const FreeRig<B>& c) {
  return monomial_from_json(j, c);
}

template <class C>
Monomial<C> monomial_from_json(const nlohmann::json& j, const FreeRig<C>& space) {
  if (!j.is_array()) throw error("structured form: atoms must be an array");
  std::vector<Atom<C>> atoms;
  for (const auto& a : j) {
    if (a.contains("gen"))
      atoms.push_back(Atom<C>::gen(key_from_json(a.at("gen"), space.base)));
    else if (a.contains("app")) {
      if (!space.self_map) throw unsupported_operation("structured form: f-atom in symmetric-algebra mode");
      atoms.push_back(Atom<C>::app(nf_from_json(a.at("app"), space)));
    } else
      throw error("structured form: atom must have 'gen' or 'app'");
  }
  return Monomial<C>(std::move(atoms));
}

template <class C>
NormalForm<C> nf_from_json(const nlohmann::json& j, const FreeRig<C>& space) {
  if (!j.is_array()) throw error("structured form: expected an array of terms");
  LinComb<Monomial<C>> terms;
  for (const auto& t : j) terms.add(monomial_from_json(t.at("atoms"), space), coeff_from_json(t.at("coeff")));
  return NormalForm<C>(space, std::move(terms));
}

}  // namespace fmrig
