// idinf: command-line front end for the semigroup of partial cofinite
// isometries of Z. Every command prints one JSON object per line.
//
// Exit codes: 0 success, 1 a verification found a failure, 2 malformed
// expression, 4 integer overflow, 5 solution set over the cutoff,
// 64 usage error (unknown command, bad flag).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idinf/circle.hpp"
#include "idinf/expr.hpp"
#include "idinf/kernels.hpp"
#include "idinf/oracle.hpp"
#include "idinf/random.hpp"
#include "idinf/solvers.hpp"
#include "idinf/structure.hpp"

namespace {

  using nlohmann::json;
  using namespace idinf;

  constexpr int exit_check_failed = 1;
  constexpr int exit_parse        = 2;
  constexpr int exit_overflow     = 4;
  constexpr int exit_too_many     = 5;
  constexpr int exit_usage        = 64;

  bool pretty = false;

  void emit(json const& j) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
  }

  void emit_error(json j) {
    std::cerr << j.dump() << '\n';
  }

  json element_list(std::vector<PartialIsometry> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(expr::print(x));
    }
    return out;
  }

  json solution_json(SolutionSet const& s) {
    return {{"count", s.size()},
            {"solutions", element_list(s.solutions)},
            {"unit_member",
             s.unit_member ? json(expr::print(*s.unit_member)) : json(nullptr)}};
  }

  json mc_json(MCElem const& x) {
    return {{"idem_excl", expr::print(x.idem_excl)},
            {"t", expr::print(x.t)},
            {"element", expr::print(mc_extract(x))}};
  }

  std::uint64_t default_seed() {
    if (char const* env = std::getenv("IDINF_SEED")) {
      try {
        return std::stoull(env);
      } catch (std::exception const&) {
      }
    }
    return 1;
  }

  //////////////////////////////////////////////////////////////////////////
  // oracle-check
  //////////////////////////////////////////////////////////////////////////

  struct OracleCheck {
    char const*                               name;
    std::function<bool(Rng&)>                 trial;
  };

  std::vector<OracleCheck> oracle_checks(Int coord, std::size_t max_excl) {
    // Equation solving and Green's relations search over small boxes, so
    // their samples stay small whatever the window.
    Int const small = std::min<Int>(coord, 6);
    auto      big   = [=](Rng& rng) { return random_element(rng, coord, max_excl); };
    auto      tiny  = [=](Rng& rng) { return random_element(rng, small, 4); };

    auto solve_agrees = [](PartialIsometry const& a,
                           PartialIsometry const& b,
                           oracle::Side           side) {
      auto got  = side == oracle::Side::right ? solve_right(a, b) : solve_left(a, b);
      auto want = oracle::solve(a, b, side, oracle::solve_bound(a, b, side));
      std::size_t units = 0;
      for (auto const& x : got.solutions) {
        units += x.is_unit() ? 1 : 0;
      }
      return got.solutions == want && units <= 1;
    };

    return {
        {"mul",
         [=](Rng& rng) {
           auto p = big(rng), q = big(rng);
           return oracle::mul_check(p, q, oracle::auto_window({p, q}));
         }},
        {"inv",
         [=](Rng& rng) {
           auto p = big(rng);
           return oracle::inv_check(p, oracle::auto_window({p}));
         }},
        {"leq",
         [=](Rng& rng) {
           auto p = big(rng), q = big(rng);
           // Half the pairs are comparable by construction.
           if (rng() % 2 == 0) {
             p = PartialIsometry(q.gamma(), finset_union(p.excl(), q.excl()));
           }
           return oracle::leq_check(p, q, oracle::auto_window({p, q}));
         }},
        {"canonical",
         [=](Rng& rng) {
           auto p = tiny(rng), q = tiny(rng);
           return oracle::canonical_check(p, q, oracle::auto_window({p, q}));
         }},
        {"upset",
         [=](Rng& rng) {
           auto p  = tiny(rng);
           auto up = upset(p);
           for (auto const& q : up) {
             if (!oracle::restricts(p, q, oracle::auto_window({p, q}))) {
               return false;
             }
           }
           return up.size() == (std::size_t{1} << p.excl().size());
         }},
        {"solve-right",
         [=](Rng& rng) {
           auto a = tiny(rng), x = tiny(rng);
           auto b = rng() % 2 == 0 ? a * x : tiny(rng);
           return solve_agrees(a, b, oracle::Side::right);
         }},
        {"solve-left",
         [=](Rng& rng) {
           auto a = tiny(rng), x = tiny(rng);
           auto b = rng() % 2 == 0 ? x * a : tiny(rng);
           return solve_agrees(a, b, oracle::Side::left);
         }},
        {"green",
         [=](Rng& rng) {
           auto p = tiny(rng);
           auto q = rng() % 2 == 0 ? PartialIsometry(random_isometry(rng, small),
                                                     finset_image(p.excl(),
                                                                  random_isometry(rng, small)))
                                   : tiny(rng);
           return green(p, q) == oracle::green(p, q);
         }},
    };
  }

  int run_oracle_check(Int window, std::size_t samples, std::uint64_t seed,
                       std::size_t max_excl) {
    bool all_ok = true;
    auto checks = oracle_checks(window, max_excl);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      auto const& check  = checks[c];
      auto        result = kernels::sweep(
          samples,
          [&](std::size_t i) {
            Rng rng(mix_seed(mix_seed(seed, c), i));
            return check.trial(rng);
          },
          kernels::Exec::parallel);
      json line = {{"check", check.name},
                   {"samples", samples},
                   {"seed", seed},
                   {"failures", result.failures.size()}};
      if (!result.ok()) {
        all_ok = false;
        std::vector<std::size_t> first(
            result.failures.begin(),
            result.failures.begin()
                + std::min<std::size_t>(10, result.failures.size()));
        line["failing_trials"] = first;
      }
      emit(line);
    }
    emit({{"ok", all_ok},
          {"samples", samples},
          {"seed", seed},
          {"window", window}});
    return all_ok ? 0 : exit_check_failed;
  }

  //////////////////////////////////////////////////////////////////////////
  // prop38-scan
  //////////////////////////////////////////////////////////////////////////

  json counts_json(kernels::EquationCounts const& c, oracle::Side side) {
    json out = {{"nonempty", c.nonempty},
                {"nonempty_without_unit", c.nonempty_without_unit},
                {"max_units", c.max_units}};
    if (c.first_without_unit) {
      auto const& [a, b] = *c.first_without_unit;
      auto sols = oracle::solve(a, b, side, oracle::solve_bound(a, b, side));
      bool confirmed = !sols.empty();
      for (auto const& x : sols) {
        confirmed = confirmed && !x.is_unit();
      }
      out["first_without_unit"] = {{"a", expr::print(a)},
                                   {"b", expr::print(b)},
                                   {"solutions", element_list(sols)},
                                   {"oracle_confirms", confirmed}};
    } else {
      out["first_without_unit"] = nullptr;
    }
    return out;
  }

  int run_prop38_scan(Int bound) {
    auto scan = kernels::equation_scan(bound, kernels::Exec::parallel);
    bool at_most_one
        = scan.right.max_units <= 1 && scan.left.max_units <= 1;
    bool exactly_one = scan.right.nonempty_without_unit == 0
                       && scan.left.nonempty_without_unit == 0;
    emit({{"coord_bound", scan.coord_bound},
          {"elements", scan.elements},
          {"instances", scan.instances},
          {"right", counts_json(scan.right, oracle::Side::right)},
          {"left", counts_json(scan.left, oracle::Side::left)},
          {"at_most_one_unit", at_most_one},
          {"nonempty_implies_unit", exactly_one}});
    return at_most_one ? 0 : exit_check_failed;
  }

  //////////////////////////////////////////////////////////////////////////
  // circle-demo
  //////////////////////////////////////////////////////////////////////////

  int run_circle_demo(long long max_n, double tol, long long every,
                      std::uint64_t seed) {
    auto profile = circle::min_gap_profile(max_n);
    bool within  = true;
    for (long long n = 1; n <= max_n; ++n) {
      double gap   = profile[n - 1];
      double bound = circle::pigeonhole_bound(n);
      within       = within && gap <= bound;
      if ((n - 1) % every == 0 || n == max_n) {
        emit({{"n", n}, {"min_gap", gap}, {"bound", bound},
              {"within_bound", gap <= bound}});
      }
    }
    Rng    rng(seed);
    double residual = 0.0;
    for (int i = 0; i < 10000; ++i) {
      auto g   = random_isometry(rng, 1000000);
      auto h   = random_isometry(rng, 1000000);
      residual = std::max(residual,
                          circle::distance(circle::theta(g * h),
                                           circle::circle_mul(circle::theta(g),
                                                              circle::theta(h))));
    }
    double last = profile.back();
    emit({{"max_n", max_n},
          {"min_gap", last},
          {"tol", tol},
          {"injective", last > tol},
          {"all_within_bound", within},
          {"homomorphism_residual", residual},
          {"residual_below_tol", residual < tol}});
    return within && last > tol && residual < tol ? 0 : exit_check_failed;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations in the inverse semigroup of partial cofinite "
      "isometries of Z.\n\n"
      "Elements are written <SIGNx+A|{I1,I2,...}>, the isometry x -> SIGN x + A\n"
      "restricted to Z minus the listed points, e.g. <+x+3|{0,2}> or <-x-1|{}>.\n"
      "Products are written with '*' and applied left to right: in p * q the\n"
      "map p acts first. '^-1' (inverse) binds tighter than '*'; parentheses\n"
      "group. Arguments starting with '-' (e.g. the isometry -x+2) must follow\n"
      "a '--' separator.",
      "idinf"};
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.require_subcommand(1);

  std::string e1, e2, s1, s2, g1, g2;

  auto* eval = app.add_subcommand("eval", "Evaluate a word to canonical form");
  eval->add_option("EXPR", e1, "Expression")->required();

  auto* leq_cmd = app.add_subcommand("leq", "Natural partial order E1 <= E2");
  leq_cmd->add_option("E1", e1)->required();
  leq_cmd->add_option("E2", e2)->required();

  auto* upset_cmd = app.add_subcommand("upset", "All elements above E");
  upset_cmd->add_option("E", e1)->required();

  auto* sr = app.add_subcommand("solve-right", "All X with A * X = B");
  sr->add_option("A", e1)->required();
  sr->add_option("B", e2)->required();
  auto* sl = app.add_subcommand("solve-left", "All X with X * A = B");
  sl->add_option("A", e1)->required();
  sl->add_option("B", e2)->required();

  auto* smax = app.add_subcommand("sigma-max", "Maximum of the sigma-class of E");
  smax->add_option("E", e1)->required();
  auto* seq = app.add_subcommand("sigma-eq", "Whether E1 and E2 are sigma-related");
  seq->add_option("E1", e1)->required();
  seq->add_option("E2", e2)->required();

  auto* grn = app.add_subcommand("green", "Green's relations L, R, H, D");
  grn->add_option("E1", e1)->required();
  grn->add_option("E2", e2)->required();

  auto* tosd = app.add_subcommand("to-semidirect",
                                  "E as (isometry, range-excluded set)");
  tosd->add_option("E", e1)->required();
  auto* fromsd = app.add_subcommand("from-semidirect",
                                    "Element from (isometry, range-excluded set)");
  fromsd->add_option("G", g1, "Isometry, e.g. +x+1")->required();
  fromsd->add_option("SET", s1, "Finite set, e.g. {1,4}")->required();

  auto* mce = app.add_subcommand("mc-embed",
                                 "E as (domain-excluded set, class maximum)");
  mce->add_option("E", e1)->required();
  auto* mcm = app.add_subcommand("mc-mul", "(SET1, G1) o (SET2, G2)");
  mcm->add_option("SET1", s1)->required();
  mcm->add_option("G1", g1)->required();
  mcm->add_option("SET2", s2)->required();
  mcm->add_option("G2", g2)->required();

  long long max_n = 20, every = 1;
  double    tol   = 1e-9;
  std::uint64_t seed = default_seed();
  auto* circ = app.add_subcommand("circle-demo",
                                  "Minimal gaps of {e^{ik} : |k| <= n}");
  circ->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);
  circ->add_option("--tol", tol, "Distinctness and residual tolerance");
  circ->add_option("--every", every, "Print every k-th row")
      ->check(CLI::PositiveNumber);
  circ->add_option("--seed", seed, "Seed for the residual sample");

  Int         window   = 50;
  std::size_t samples  = 10000;
  std::size_t max_excl = 6;
  auto* orc = app.add_subcommand(
      "oracle-check",
      "Randomized comparison of the closed forms against the pointwise oracle");
  orc->add_option("--window", window,
                  "Samples draw shifts and excluded points from [-N, N]")
      ->check(CLI::PositiveNumber);
  orc->add_option("--samples", samples, "Trials per check");
  orc->add_option("--seed", seed, "Seed (default: $IDINF_SEED or 1)");
  orc->add_option("--max-excl", max_excl, "Largest excluded set")
      ->check(CLI::Range(0, 20));

  Int   coord_bound = 2;
  auto* p38 = app.add_subcommand(
      "prop38-scan",
      "Exhaustively count one-sided equations solvable without a unit solution");
  p38->add_option("--coord-bound", coord_bound,
                  "Shifts and excluded points in [-B, B]")
      ->check(CLI::Range(0, 4));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  auto* cmd = app.get_subcommands().front();
  try {
    if (cmd == eval) {
      emit({{"result", expr::print(expr::eval(e1))}});
    } else if (cmd == leq_cmd) {
      emit({{"leq", leq(expr::eval(e1), expr::eval(e2))}});
    } else if (cmd == upset_cmd) {
      auto up = upset(expr::eval(e1));
      emit({{"count", up.size()}, {"upset", element_list(up)}});
    } else if (cmd == sr) {
      emit(solution_json(solve_right(expr::eval(e1), expr::eval(e2))));
    } else if (cmd == sl) {
      emit(solution_json(solve_left(expr::eval(e1), expr::eval(e2))));
    } else if (cmd == smax) {
      emit({{"result", expr::print(sigma_max(expr::eval(e1)))}});
    } else if (cmd == seq) {
      emit({{"sigma_eq", sigma_eq(expr::eval(e1), expr::eval(e2))}});
    } else if (cmd == grn) {
      auto g = green(expr::eval(e1), expr::eval(e2));
      emit({{"L", g.L}, {"R", g.R}, {"H", g.H}, {"D", g.D}});
    } else if (cmd == tosd) {
      auto s = to_semidirect(expr::eval(e1));
      emit({{"gamma", expr::print(s.gamma)},
            {"ran_excl", expr::print(s.ran_excl)}});
    } else if (cmd == fromsd) {
      SemidirectElem s{expr::parse_isometry(g1), expr::parse_finset(s1)};
      emit({{"result", expr::print(from_semidirect(s))}});
    } else if (cmd == mce) {
      emit(mc_json(mc_embed(expr::eval(e1))));
    } else if (cmd == mcm) {
      MCElem x{expr::parse_finset(s1), expr::parse_isometry(g1)};
      MCElem y{expr::parse_finset(s2), expr::parse_isometry(g2)};
      emit(mc_json(x * y));
    } else if (cmd == circ) {
      return run_circle_demo(max_n, tol, every, seed);
    } else if (cmd == orc) {
      return run_oracle_check(window, samples, seed, max_excl);
    } else if (cmd == p38) {
      return run_prop38_scan(coord_bound);
    }
  } catch (expr::ParseError const& e) {
    emit_error({{"error", "parse"},
                {"line", e.line()},
                {"column", e.column()},
                {"message", e.message()}});
    return exit_parse;
  } catch (OverflowError const& e) {
    emit_error({{"error", "overflow"}, {"message", e.what()}});
    return exit_overflow;
  } catch (TooManySolutions const& e) {
    emit_error({{"error", "too_many_solutions"}, {"count", e.count()}});
    return exit_too_many;
  }
  return 0;
}
