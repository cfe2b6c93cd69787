#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/derive.hpp"
#include "fmrig/generate.hpp"
#include "fmrig/modality.hpp"
#include "fmrig/normal_form.hpp"
#include "fmrig/normalize.hpp"
#include "fmrig/render.hpp"
#include "fmrig/rewrite.hpp"
#include "fmrig/tensor.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fmrig {

/// Deliberate corruptions of d_n, used to check that the harness notices.
enum class Mutation {
  none,
  // d'(a) = d(a) + 1 ⊗ e₀ for every nonzero a.
  spurious_term,
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::vector<std::size_t> carrier_ranks{1, 2};
  unsigned max_depth = 4;
  unsigned max_f_depth = 2;
  std::uint64_t max_coefficient = 5;
  std::vector<Nat> n_values{0, 1, 2, 3, 7};
  // FFM inputs: outer depth and the depth of each y-payload.
  unsigned level2_depth = 4;
  unsigned level2_payload_depth = 2;
  // FFFM inputs for monad associativity.
  std::size_t level3_cases = 50;
  unsigned level3_depth = 3;
  unsigned level3_payload_depth = 2;
  unsigned rewrite_steps = 12;
  // Empty runs every law.
  std::vector<std::string> only;
  Mutation mutation = Mutation::none;
};

struct Counterexample {
  std::uint64_t seed;
  std::string detail;
};

struct LawResult {
  std::string name;
  std::string anchor;
  std::size_t cases = 0;
  std::vector<Counterexample> failures;
  double seconds = 0;
};

struct LawReport {
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& l : laws) n += l.failures.size();
    return n;
  }
  bool ok() const { return failure_count() == 0; }
};

/// Per-case inputs, all drawn from one seed so a case can be replayed from
/// its seed alone. Every generated input is recorded for counterexamples.
class CaseInput {
 public:
  CaseInput(std::uint64_t seed, const SuiteConfig& cfg)
      : cfg_(cfg),
        rng_(seed),
        carrier_{cfg.carrier_ranks.at(rng_.below(cfg.carrier_ranks.size()))},
        space_{carrier_, true},
        level2_{space_, true},
        n_(cfg.n_values.at(rng_.below(cfg.n_values.size()))) {}

  const NatPow& carrier() const { return carrier_; }
  const FreeRig<NatPow>& space() const { return space_; }
  const FreeRig<FreeRig<NatPow>>& level2() const { return level2_; }
  const Nat& n() const { return n_; }
  Rng& rng() { return rng_; }
  const SuiteConfig& config() const { return cfg_; }

  Term<NatPow> term(bool with_f = true) {
    GenConfig<NatPow> g{carrier_, cfg_.max_depth, with_f ? cfg_.max_f_depth : 0u, cfg_.max_coefficient, rng_.next(), 0};
    return note(random_term(g));
  }

  Term<NatPow> term_over(const NatPow& c) {
    GenConfig<NatPow> g{c, cfg_.max_depth, cfg_.max_f_depth, cfg_.max_coefficient, rng_.next(), 0};
    return note(random_term(g));
  }

  NormalForm<NatPow> elem(bool with_f = true) { return normalize(term(with_f), space_); }

  NormalForm<FreeRig<NatPow>> elem2() {
    GenConfig<FreeRig<NatPow>> g{space_, cfg_.level2_depth, cfg_.max_f_depth, cfg_.max_coefficient, rng_.next(),
                                 cfg_.level2_payload_depth};
    return normalize(note(random_term(g)), level2_);
  }

  NormalForm<FreeRig<FreeRig<NatPow>>> elem3() {
    const FreeRig<FreeRig<FreeRig<NatPow>>> level3{level2_, true};
    GenConfig<FreeRig<FreeRig<NatPow>>> g{level2_, cfg_.level3_depth, cfg_.max_f_depth, cfg_.max_coefficient,
                                          rng_.next(), cfg_.level3_payload_depth};
    return normalize(note(random_term(g)), level3);
  }

  MonoidElem<NatPow> monoid_elem(const NatPow& c) {
    std::vector<Nat> cs(c.rank);
    for (auto& x : cs) x = rng_.upto(cfg_.max_coefficient);
    auto m = from_coords(c, cs);
    inputs_.push_back("m=" + render(m));
    return m;
  }

  MonoidHom<NatPow, NatPow> hom(const NatPow& dom, const NatPow& cod) {
    std::vector<std::vector<Nat>> rows(dom.rank, std::vector<Nat>(cod.rank));
    std::string desc = "hom=[";
    for (auto& r : rows) {
      desc += "(";
      for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = rng_.upto(3);
        desc += (j ? "," : "") + r[j].str();
      }
      desc += ")";
    }
    inputs_.push_back(desc + "]");
    return matrix_hom(dom, cod, rows);
  }

  template <class T>
  T note(T t) {
    inputs_.push_back(print(t));
    return t;
  }

  void note_text(std::string s) { inputs_.push_back(std::move(s)); }

  std::string describe() const {
    std::string out = "carrier " + carrier_.describe() + ", n=" + n_.str();
    for (const auto& i : inputs_) out += "; " + i;
    return out;
  }

 private:
  const SuiteConfig& cfg_;
  Rng rng_;
  NatPow carrier_;
  FreeRig<NatPow> space_;
  FreeRig<FreeRig<NatPow>> level2_;
  Nat n_;
  std::vector<std::string> inputs_;
};

namespace detail {

inline std::size_t first_key(const NatPow& c) {
  if (c.rank == 0) throw unsupported_operation("mutation needs a nonempty basis");
  return 0;
}

template <class B>
Monomial<B> first_key(const FreeRig<B>&) {
  return {};
}

}  // namespace detail

/// d_n as seen by the harness: the real one, or a corrupted variant.
template <class C>
DerivTensor<C> harness_derive(const NormalForm<C>& a, const Nat& n, Mutation m) {
  auto t = d_n(a, n);
  if (m == Mutation::spurious_term && !a.is_zero()) {
    using Key = typename DerivTensor<C>::key_type;
    const auto& base = std::get<1>(t.factors());
    t += DerivTensor<C>(t.factors(), LinComb<Key>::single(Key(Monomial<C>{}, detail::first_key(base))));
  }
  return t;
}

template <class C>
LinearMap<FreeRig<C>, FreeRig<C>, C> harness_derive_map(const FreeRig<C>& space, const Nat& n, Mutation m) {
  return {space, std::tuple(space, space.base),
          [space, n, m](const Monomial<C>& k) { return harness_derive(nf_monomial(space, k), n, m); }};
}

/// Evaluates d_n(f(x₁)) over ℕ into (ℕ, id) for each n: the value is n, so
/// distinct n give distinct deriving transformations.
inline std::vector<std::pair<Nat, Nat>> check_distinctness(const std::vector<Nat>& n_values,
                                                           Mutation mutation = Mutation::none) {
  if (n_values.empty()) throw error("check_distinctness: empty list");
  const NatPow line{1};
  const FreeRig<NatPow> space{line, true};
  const auto f_x1 = nf_selfmap(nf_generator(space, std::size_t{0}));
  std::vector<std::pair<Nat, Nat>> out;
  for (const auto& n : n_values) {
    const auto d = harness_derive(f_x1, n, mutation);
    out.emplace_back(n, evaluate(unitor_right(d), nat_rig("identity"), std::vector<Nat>{1}));
  }
  return out;
}

struct LawInfo {
  std::string name;
  std::string anchor;
  // Returns a description of the violation, or nothing.
  std::function<std::optional<std::string>(CaseInput&, Mutation)> check;
  enum class Size { standard, level3, single } size = Size::standard;
};

namespace laws {

using Fail = std::optional<std::string>;
using NF = NormalForm<NatPow>;

inline Fail rig_laws(CaseInput& in, Mutation) {
  const NF a = in.elem(), b = in.elem(), c = in.elem();
  const NF zero = nf_zero(in.space()), one = nf_one(in.space());
  if (!((a + b) + c == a + (b + c))) return "additive associativity";
  if (!(a + b == b + a)) return "additive commutativity";
  if (!(a + zero == a)) return "additive unit";
  if (!((a * b) * c == a * (b * c))) return "multiplicative associativity";
  if (!(a * b == b * a)) return "multiplicative commutativity";
  if (!(a * one == a)) return "multiplicative unit";
  if (!((a + b) * c == a * c + b * c)) return "distributivity";
  if (!(zero * a == zero)) return "annihilation";
  return std::nullopt;
}

inline Fail normalize_homomorphism(CaseInput& in, Mutation) {
  const auto s = in.space();
  const auto ta = in.term(), tb = in.term();
  const NF a = normalize(ta, s), b = normalize(tb, s);
  if (!(normalize(Term<NatPow>::sum(ta, tb), s) == nf_add(a, b))) return "sum";
  if (!(normalize(Term<NatPow>::prod(ta, tb), s) == nf_mul(a, b))) return "product";
  if (!(normalize(Term<NatPow>::app(ta), s) == nf_selfmap(a))) return "self-map";
  if (!(normalize(Term<NatPow>::zero(), s) == nf_zero(s))) return "zero";
  if (!(normalize(Term<NatPow>::one(), s) == nf_one(s))) return "one";
  const auto m = in.monoid_elem(in.carrier());
  NF expanded = nf_zero(s);
  for (const auto& [k, c] : m.coeffs()) expanded = expanded + nf_generator(s, k).scaled(c);
  if (!(normalize(Term<NatPow>::var(m), s) == expanded)) return "generator expansion";
  return std::nullopt;
}

inline Fail normalize_sim_invariance(CaseInput& in, Mutation) {
  const auto t = in.term();
  const auto v = in.note(equivalent_variant(t, in.config().rewrite_steps, in.rng().next(), in.carrier()));
  if (!(normalize(v, in.space()) == normalize(t, in.space()))) return "normal forms differ";
  return std::nullopt;
}

inline Fail functor_laws(CaseInput& in, Mutation) {
  const NF a = in.elem();
  const NatPow mid{1 + in.rng().below(2)}, last{1 + in.rng().below(2)};
  const auto k = in.hom(in.carrier(), mid);
  const auto h = in.hom(mid, last);
  if (!(apply_functor(identity_hom(in.carrier()), a) == a)) return "F(id) != id";
  if (!(apply_functor(compose(h, k), a) == apply_functor(h, apply_functor(k, a)))) return "F(h.k) != F(h).F(k)";
  return std::nullopt;
}

inline Fail functor_on_terms(CaseInput& in, Mutation) {
  const NatPow cod{1 + in.rng().below(2)};
  const auto h = in.hom(in.carrier(), cod);
  const auto t = in.term();
  const FreeRig<NatPow> target{cod, true};
  if (!(normalize(term_map_hom(h, t), target) == apply_functor(h, normalize(t, in.space()))))
    return "normalize(F0 psi t) != F psi (normalize t)";
  return std::nullopt;
}

inline Fail selfmap_not_multiple(CaseInput& in, Mutation) {
  const NF a = in.elem();
  for (unsigned n = 0; n <= 10; ++n) {
    if (nf_selfmap(a) == a.scaled(n)) return "f(a) == " + std::to_string(n) + "*a";
  }
  const NF zero = nf_zero(in.space());
  if (nf_selfmap(zero) == zero) return "f(0) == 0";
  return std::nullopt;
}

inline Fail unit_additive(CaseInput& in, Mutation) {
  const auto m = in.monoid_elem(in.carrier()), k = in.monoid_elem(in.carrier());
  if (!(unit(in.space(), m + k) == unit(in.space(), m) + unit(in.space(), k))) return "u(m+n) != u(m)+u(n)";
  if (!unit(in.space(), MonoidElem<NatPow>::zero(in.carrier())).is_zero()) return "u(0) != 0";
  return std::nullopt;
}

inline Fail monad_left_unit(CaseInput& in, Mutation) {
  const NF a = in.elem();
  if (!(mu(unit(in.level2(), a)) == a)) return "mu(u_FM(a)) != a";
  return std::nullopt;
}

inline Fail monad_right_unit(CaseInput& in, Mutation) {
  const NF a = in.elem();
  const auto lifted = apply_functor(unit_hom(in.space()), a);
  if (!(mu(lifted) == a)) return "mu(F(u)(a)) != a";
  const auto a2 = in.elem2();
  if (!(mu(apply_functor(unit_hom(in.level2()), a2)) == a2)) return "mu_FM(F(u_FM)(a2)) != a2";
  return std::nullopt;
}

inline Fail monad_associativity(CaseInput& in, Mutation) {
  const auto a3 = in.elem3();
  if (!(mu(mu(a3)) == mu(apply_functor(mu_hom(in.level2()), a3)))) return "mu.mu_F != mu.F(mu)";
  return std::nullopt;
}

inline Fail nabla_commutative_monoid(CaseInput& in, Mutation) {
  const NF a = in.elem(), b = in.elem(), c = in.elem();
  const auto lhs = nabla(tensor_pure(nabla(tensor_pure(a, b)), c));
  const auto rhs = nabla(tensor_pure(a, nabla(tensor_pure(b, c))));
  if (!(lhs == rhs)) return "nabla associativity";
  if (!(nabla(tensor_pure(a, eta(in.space(), 1))) == a)) return "nabla unit";
  const auto ab = tensor_pure(a, b) + tensor_pure(c, a);
  if (!(nabla(swap_factors<0, 1>(ab)) == nabla(ab))) return "nabla commutativity";
  return std::nullopt;
}

inline Fail algebra_modality_square(CaseInput& in, Mutation) {
  const auto u = in.elem2(), v = in.elem2();
  if (!(mu(nabla(tensor_pure(u, v))) == nabla(tensor_pure(mu(u), mu(v))))) return "m.nabla_FM != nabla.(m x m)";
  return std::nullopt;
}

inline Fail eta_nabla_natural(CaseInput& in, Mutation) {
  const NatPow cod{1 + in.rng().below(2)};
  const FreeRig<NatPow> target{cod, true};
  const auto h = in.hom(in.carrier(), cod);
  const NF a = in.elem(), b = in.elem();
  const Nat k = in.rng().upto(in.config().max_coefficient);
  if (!(apply_functor(h, eta(in.space(), k)) == eta(target, k))) return "F psi . eta != eta";
  const auto fa = apply_functor(h, a), fb = apply_functor(h, b);
  if (!(nabla(tensor_pure(fa, fb)) == apply_functor(h, nabla(tensor_pure(a, b))))) return "nabla not natural";
  return std::nullopt;
}

inline Fail counit_triangle(CaseInput& in, Mutation) {
  const auto catalog = nat_rig_catalog();
  const auto target = nat_rig(catalog[in.rng().below(catalog.size())]);
  in.note_text("target=" + target.name);
  std::vector<Nat> phi(in.carrier().rank);
  for (auto& p : phi) p = in.rng().upto(4);
  const auto m = in.monoid_elem(in.carrier());
  Nat expected = 0;
  for (const auto& [k, c] : m.coeffs()) expected += c * phi[k];
  if (evaluate(unit(in.space(), m), target, phi) != expected) return "evaluate . unit != phi";
  const NF a = in.elem(), b = in.elem();
  const Nat ea = evaluate(a, target, phi), eb = evaluate(b, target, phi);
  if (evaluate(a + b, target, phi) != ea + eb) return "evaluate not additive";
  if (evaluate(a * b, target, phi) != ea * eb) return "evaluate not multiplicative";
  if (evaluate(nf_selfmap(a), target, phi) != target.self_map(ea)) return "evaluate does not commute with self-maps";
  if (evaluate(nf_one(in.space()), target, phi) != 1) return "evaluate(1) != 1";
  return std::nullopt;
}

inline Fail product_rule(CaseInput& in, Mutation mut) {
  const NF a = in.elem(), b = in.elem();
  const auto& s = in.space();
  const auto ab = tensor_pure(a, b);
  const auto d = harness_derive_map(s, in.n(), mut);
  const auto lhs = harness_derive(nabla(ab), in.n(), mut);
  const auto first = nabla_front(tensor_bimap(ab, linear_identity(s), d));
  const auto second = nabla_front(swap_factors<1, 2>(tensor_bimap(ab, d, linear_identity(s))));
  if (!(lhs == first + second)) return "d(ab) = " + render(lhs) + " but rule gives " + render(first + second);
  return std::nullopt;
}

inline Fail linear_rule(CaseInput& in, Mutation mut) {
  const auto m = in.monoid_elem(in.carrier());
  const auto lhs = harness_derive(unit(in.space(), m), in.n(), mut);
  const auto rhs = tensor_pure(eta(in.space(), 1), m);
  if (!(lhs == rhs)) return "d(u(m)) = " + render(lhs) + " but eta(1) x m = " + render(rhs);
  return std::nullopt;
}

inline Fail chain_rule(CaseInput& in, Mutation mut) {
  const auto a2 = in.elem2();
  const auto lhs = harness_derive(mu(a2), in.n(), mut);
  const auto rhs = nabla_front(tensor_bimap(harness_derive(a2, in.n(), mut), mu_map(in.level2()),
                                            harness_derive_map(in.space(), in.n(), mut)));
  if (!(lhs == rhs)) return "d(mu a2) = " + render(lhs) + " but chain gives " + render(rhs);
  return std::nullopt;
}

inline Fail interchange_rule(CaseInput& in, Mutation mut) {
  const NF a = in.elem();
  const auto twice = tensor_bimap(harness_derive(a, in.n(), mut), harness_derive_map(in.space(), in.n(), mut),
                                  linear_identity(in.carrier()));
  if (!(twice == swap_factors<1, 2>(twice))) return "(d x id).d not symmetric: " + render(twice);
  return std::nullopt;
}

inline Fail derive_sim_invariance(CaseInput& in, Mutation mut) {
  const auto t = in.term();
  const auto v = in.note(equivalent_variant(t, in.config().rewrite_steps, in.rng().next(), in.carrier()));
  if (!(harness_derive(normalize(v, in.space()), in.n(), mut) == harness_derive(normalize(t, in.space()), in.n(), mut)))
    return "d differs on equivalent terms";
  return std::nullopt;
}

inline Fail derive_naturality(CaseInput& in, Mutation mut) {
  const NatPow cod{1 + in.rng().below(2)};
  const FreeRig<NatPow> target{cod, true};
  const auto h = in.hom(in.carrier(), cod);
  const NF a = in.elem();
  const LinearMap<FreeRig<NatPow>, FreeRig<NatPow>> fpsi{
      in.space(), std::tuple(target), [&](const Monomial<NatPow>& k) {
        return as_tensor(apply_functor(h, nf_monomial(in.space(), k)));
      }};
  const LinearMap<NatPow, NatPow> psi{in.carrier(), std::tuple(cod), [&](const std::size_t& k) {
                                        return as_tensor(h.on_basis(k));
                                      }};
  const auto lhs = tensor_bimap(harness_derive(a, in.n(), mut), fpsi, psi);
  const auto rhs = harness_derive(apply_functor(h, a), in.n(), mut);
  if (!(lhs == rhs)) return "(F psi x psi).d = " + render(lhs) + " but d.F psi = " + render(rhs);
  return std::nullopt;
}

inline Fail f_free_n_independence(CaseInput& in, Mutation mut) {
  const NF a = in.elem(false);
  const auto base = harness_derive(a, in.config().n_values.front(), mut);
  for (const auto& n : in.config().n_values)
    if (!(harness_derive(a, n, mut) == base)) return "d_" + n.str() + " differs on an f-free input";
  if (mut == Mutation::none && !(sym_derive(a) == base)) return "sym_derive differs from d_n";
  return std::nullopt;
}

inline Fail derive_monoid_hom(CaseInput& in, Mutation mut) {
  const NF a = in.elem(), b = in.elem();
  if (!(harness_derive(a + b, in.n(), mut) == harness_derive(a, in.n(), mut) + harness_derive(b, in.n(), mut)))
    return "d(a+b) != d(a)+d(b)";
  if (!harness_derive(nf_zero(in.space()), in.n(), mut).is_zero()) return "d(0) != 0";
  return std::nullopt;
}

inline Fail distinctness(CaseInput& in, Mutation mut) {
  std::vector<Nat> ns;
  for (unsigned n = 0; n <= 10; ++n) ns.push_back(n);
  for (const auto& n : in.config().n_values) ns.push_back(n);
  const auto pairs = check_distinctness(ns, mut);
  std::set<Nat> seen;
  for (const auto& [n, v] : pairs) {
    if (v != n) return "epsilon(d_" + n.str() + "(f(x1))) = " + v.str();
    seen.insert(v);
  }
  std::set<Nat> distinct_n(ns.begin(), ns.end());
  if (seen.size() != distinct_n.size()) return "values not pairwise distinct";
  return std::nullopt;
}

}  // namespace laws

/// Every law the harness checks, keyed by name.
inline const std::vector<LawInfo>& law_registry() {
  using S = LawInfo::Size;
  static const std::vector<LawInfo> registry{
      {"rig_laws", "FM is a commutative rig", laws::rig_laws},
      {"normalize_homomorphism", "h0 into the canonical rig", laws::normalize_homomorphism},
      {"normalize_sim_invariance", "operations on FM are well defined", laws::normalize_sim_invariance},
      {"functor_laws", "F(id) = id, F(h.k) = F(h).F(k)", laws::functor_laws},
      {"functor_on_terms", "F psi([a]) = [F0 psi(a)]", laws::functor_on_terms},
      {"selfmap_not_multiple", "f is not n.id", laws::selfmap_not_multiple},
      {"unit_additive", "u_M is a monoid homomorphism", laws::unit_additive},
      {"monad_left_unit", "m.u_F = id", laws::monad_left_unit},
      {"monad_right_unit", "m.F(u) = id", laws::monad_right_unit},
      {"monad_associativity", "m.m_F = m.F(m)", laws::monad_associativity, S::level3},
      {"nabla_commutative_monoid", "(FM, nabla, eta) is a commutative monoid", laws::nabla_commutative_monoid},
      {"algebra_modality_square", "m.nabla_FM = nabla.(m x m)", laws::algebra_modality_square},
      {"eta_nabla_natural", "eta and nabla are natural", laws::eta_nabla_natural},
      {"counit_triangle", "evaluation extends phi and is a morphism", laws::counit_triangle},
      {"product_rule", "product rule", laws::product_rule},
      {"linear_rule", "d.u = eta x id", laws::linear_rule},
      {"chain_rule", "d.m = (nabla x id).(m x d).d_F", laws::chain_rule},
      {"interchange_rule", "(d x id).d = (id x sigma).(d x id).d", laws::interchange_rule},
      {"derive_sim_invariance", "d0 respects the congruence", laws::derive_sim_invariance},
      {"derive_naturality", "d is natural", laws::derive_naturality},
      {"f_free_n_independence", "d_n agrees with the symmetric-algebra d on f-free input",
       laws::f_free_n_independence},
      {"derive_monoid_hom", "d is a monoid homomorphism", laws::derive_monoid_hom},
      {"distinctness", "d_n != d_p for n != p", laws::distinctness, S::single},
  };
  return registry;
}

inline std::uint64_t case_seed(std::uint64_t suite_seed, std::size_t law_index, std::size_t case_index) {
  return mix_seed(mix_seed(suite_seed, law_index), case_index);
}

inline const LawInfo& find_law(const std::string& name) {
  for (const auto& l : law_registry())
    if (l.name == name) return l;
  throw error("unknown law '" + name + "'");
}

/// Re-runs one case of one law. Returns the failure description, if any.
inline std::optional<std::string> replay(const std::string& law, std::uint64_t seed, const SuiteConfig& cfg) {
  CaseInput in(seed, cfg);
  auto r = find_law(law).check(in, cfg.mutation);
  if (r) return *r + " [" + in.describe() + "]";
  return std::nullopt;
}

inline LawReport check_laws(const SuiteConfig& cfg) {
  if (cfg.cases == 0 || cfg.level3_cases == 0 || cfg.carrier_ranks.empty() || cfg.n_values.empty())
    throw error("check_laws: counts and lists must be nonempty");
  LawReport report;
  report.seed = cfg.seed;
  const auto& registry = law_registry();
  for (std::size_t li = 0; li < registry.size(); ++li) {
    const auto& law = registry[li];
    if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), law.name) == cfg.only.end()) continue;
    LawResult res{law.name, law.anchor};
    const std::size_t n_cases = law.size == LawInfo::Size::level3   ? std::min(cfg.cases, cfg.level3_cases)
                                : law.size == LawInfo::Size::single ? 1
                                                                    : cfg.cases;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < n_cases; ++i) {
      const auto seed = case_seed(cfg.seed, li, i);
      CaseInput in(seed, cfg);
      std::optional<std::string> failure;
      try {
        failure = law.check(in, cfg.mutation);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) res.failures.push_back({seed, *failure + " [" + in.describe() + "]"});
    }
    res.cases = n_cases;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::sort(res.failures.begin(), res.failures.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.seed < b.seed; });
    report.laws.push_back(std::move(res));
  }
  return report;
}

inline nlohmann::json to_json(const LawReport& r, bool with_timing = true) {
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& l : r.laws) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : l.failures) fails.push_back({{"seed", f.seed}, {"detail", f.detail}});
    nlohmann::json j{{"name", l.name}, {"anchor", l.anchor}, {"cases", l.cases}, {"failures", fails}};
    if (with_timing) j["seconds"] = l.seconds;
    laws.push_back(std::move(j));
  }
  return {{"seed", r.seed}, {"failures", r.failure_count()}, {"laws", laws}};
}

inline std::string render_table(const LawReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "law" << std::right << std::setw(8) << "cases" << std::setw(10) << "failures"
     << std::setw(10) << "seconds" << "  anchor\n";
  for (const auto& l : r.laws) {
    os << std::left << std::setw(28) << l.name << std::right << std::setw(8) << l.cases << std::setw(10)
       << l.failures.size() << std::setw(10) << std::fixed << std::setprecision(2) << l.seconds << "  " << l.anchor
       << "\n";
    for (const auto& f : l.failures) os << "    seed " << f.seed << ": " << f.detail << "\n";
  }
  os << (r.ok() ? "all laws hold" : std::to_string(r.failure_count()) + " failure(s)") << "\n";
  return os.str();
}

}  // namespace fmrig
