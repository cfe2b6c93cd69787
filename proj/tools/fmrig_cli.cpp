// Command-line front end: normalize, derive, mu, eval, laws, distinctness.

#include "fmrig/fmrig.hpp"
#include "fmrig/laws.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace fmrig;

namespace {

struct Common {
  std::size_t carrier = 1;
  int level = 1;
  std::string format = "text";
  bool symmetric = false;
  std::string expr;
};

std::string read_expr(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::vector<Nat> parse_nat_list(const std::string& text, const char* flag) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw error(std::string(flag) + ": empty entry");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw error(std::string(flag) + ": '" + item + "' is not a natural number");
    out.emplace_back(item);
  }
  if (out.empty()) throw error(std::string(flag) + ": expected a comma-separated list");
  return out;
}

template <class T>
void emit(const T& value, const Common& c) {
  if (c.format == "structured")
    std::cout << to_json(value).dump() << "\n";
  else
    std::cout << render(value) << "\n";
}

struct Spaces {
  NatPow base;
  FreeRig<NatPow> fm;
  FreeRig<FreeRig<NatPow>> ffm;
};

Spaces spaces(const Common& c) {
  if (c.carrier == 0) throw error("--carrier must be at least 1");
  const NatPow base{c.carrier};
  const FreeRig<NatPow> fm{base, !c.symmetric};
  return {base, fm, FreeRig<FreeRig<NatPow>>{fm, !c.symmetric}};
}

NormalForm<NatPow> level1(const Common& c) {
  const auto s = spaces(c);
  return normalize(parse(read_expr(c.expr), s.base), s.fm);
}

NormalForm<FreeRig<NatPow>> level2(const Common& c) {
  const auto s = spaces(c);
  return normalize(parse(read_expr(c.expr), s.fm), s.ffm);
}

void add_common(CLI::App* sub, Common& c, bool with_expr = true) {
  sub->add_option("--carrier", c.carrier, "rank k of the carrier N^k")->check(CLI::PositiveNumber);
  sub->add_option("--level", c.level, "1 for FM, 2 for FFM")->check(CLI::IsMember({1, 2}));
  sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  sub->add_flag("--symmetric", c.symmetric, "f-free mode: the symmetric algebra");
  if (with_expr) sub->add_option("expr", c.expr, "expression, or - for stdin")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free commutative rigs with a self-map and their deriving transformations"};
  app.require_subcommand(1);

  Common c;
  std::string n_text = "0";
  std::string target = "identity";
  std::string phi_text;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  unsigned depth = 4;
  std::string n_values = "0,1,2,3,7";
  std::string dist_values = "0,1,2,3,4,5,6,7,8,9,10";
  bool mutate = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "print the canonical form");
  add_common(normalize_cmd, c);

  auto* derive_cmd = app.add_subcommand("derive", "apply the n-th deriving transformation");
  add_common(derive_cmd, c);
  derive_cmd->add_option("--n", n_text, "which d_n")->required();

  auto* mu_cmd = app.add_subcommand("mu", "monad multiplication FFM -> FM (level 2 input)");
  add_common(mu_cmd, c);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate into N with a chosen self-map");
  add_common(eval_cmd, c);
  eval_cmd->add_option("--target", target, "catalog name or a one-variable expression in x[1]");
  eval_cmd->add_option("--phi", phi_text, "image of each generator, comma separated")->required();

  auto* laws_cmd = app.add_subcommand("laws", "run the law suite");
  add_common(laws_cmd, c, false);
  laws_cmd->add_option("--seed", seed, "suite seed");
  laws_cmd->add_option("--cases", cases, "cases per law")->check(CLI::PositiveNumber);
  laws_cmd->add_option("--depth", depth, "maximum term depth");
  laws_cmd->add_option("--n-values", n_values, "comma separated n");
  laws_cmd->add_flag("--mutate", mutate, "corrupt d_n to test the harness itself");

  auto* dist_cmd = app.add_subcommand("distinctness", "evaluate d_n(f(x[1])) into (N, id)");
  add_common(dist_cmd, c, false);
  dist_cmd->add_option("--n-values", dist_values, "comma separated n");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize_cmd) {
      if (c.level == 2) emit(level2(c), c);
      else emit(level1(c), c);
    } else if (*derive_cmd) {
      const Nat n = parse_nat_list(n_text, "--n").at(0);
      if (c.level == 2) emit(d_n_level2(level2(c), n), c);
      else emit(d_n(level1(c), n), c);
    } else if (*mu_cmd) {
      if (c.level != 2) throw error("mu takes level-2 input: pass --level 2");
      emit(mu(level2(c)), c);
    } else if (*eval_cmd) {
      if (c.level != 1) throw error("eval takes level-1 input");
      const auto phi = parse_nat_list(phi_text, "--phi");
      if (phi.size() != c.carrier)
        throw error("--phi gives " + std::to_string(phi.size()) + " images for " + std::to_string(c.carrier) +
                    " generators");
      const Nat v = evaluate(level1(c), nat_rig(target), phi);
      if (c.format == "structured")
        std::cout << coeff_to_json(v).dump() << "\n";
      else
        std::cout << v.str() << "\n";
    } else if (*laws_cmd) {
      SuiteConfig cfg;
      cfg.seed = seed;
      cfg.cases = cases;
      cfg.max_depth = depth;
      cfg.n_values = parse_nat_list(n_values, "--n-values");
      if (mutate) cfg.mutation = Mutation::spurious_term;
      const auto report = check_laws(cfg);
      if (c.format == "structured")
        std::cout << to_json(report).dump(2) << "\n";
      else
        std::cout << render_table(report);
      return report.ok() ? 0 : 1;
    } else if (*dist_cmd) {
      const auto pairs = check_distinctness(parse_nat_list(dist_values, "--n-values"));
      std::set<Nat> seen;
      bool ok = true;
      for (const auto& [n, v] : pairs) {
        ok = ok && v == n;
        seen.insert(v);
      }
      std::set<Nat> ns;
      for (const auto& [n, v] : pairs) ns.insert(n);
      ok = ok && seen.size() == ns.size();
      if (c.format == "structured") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [n, v] : pairs) j.push_back({{"n", coeff_to_json(n)}, {"value", coeff_to_json(v)}});
        std::cout << nlohmann::json{{"pairs", j}, {"distinct", ok}}.dump() << "\n";
      } else {
        for (const auto& [n, v] : pairs) std::cout << n.str() << " -> " << v.str() << "\n";
        std::cout << (ok ? "pairwise distinct" : "NOT distinct") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
