//  Copyright 2026 The majlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// majlab command-line tool.
//
//   majlab check <majority|pixley|bergman|pcrt|ddrr|image-meet|selecting|cross> ALGEBRA
//   majlab solve ALGEBRA SYSTEM [--constructive]
//   majlab gen-corpus DIR
//
// Exit codes: 0 pass/found, 1 fail/not found, 2 unknown, 3 input error,
// 4 inconsistency between checkers.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majlab/majlab.hpp"

namespace {

  using namespace majlab;

  enum Exit { exit_pass = 0, exit_fail = 1, exit_unknown = 2, exit_input = 3, exit_fatal = 4 };

  struct Options {
    CheckConfig              cfg;
    std::vector<std::size_t> select_powers{1, 1, 1};
    std::string              format = "json";
    std::string              out;
  };

  void emit(Options const& opt, std::string const& text) {
    if (opt.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      throw ParseError("cannot write \"" + opt.out + "\"");
    }
    f << text;
  }

  void validate(Options& opt) {
    auto& c = opt.cfg;
    if (c.powers.empty()) {
      throw ParseError("--powers must list at least one exponent");
    }
    for (auto e : c.powers) {
      if (e == 0) {
        throw ParseError("--powers entries must be positive");
      }
    }
    for (auto [value, name] : {std::pair{c.n_factors, "--factors"},
                               std::pair{c.gen_cap, "--gen-cap"},
                               std::pair{c.clone.coord_budget, "--clone-coord-budget"},
                               std::pair{c.clone.size_budget, "--clone-size-budget"},
                               std::pair{c.cong_size_guard, "--cong-size-guard"},
                               std::pair{c.sys_len, "--sys-len"},
                               std::pair{c.relation_power, "--relation-power"},
                               std::pair{c.relation_budget, "--relation-budget"},
                               std::pair{c.subpower_guard, "--subpower-guard"}}) {
      if (value == 0) {
        throw ParseError(std::string(name) + " must be positive");
      }
    }
    if (opt.select_powers.size() != 3 || opt.select_powers[0] == 0 || opt.select_powers[1] == 0
        || opt.select_powers[2] == 0) {
      throw ParseError("--select-powers needs three positive exponents");
    }
    c.power_triples = {{opt.select_powers[0], opt.select_powers[1], opt.select_powers[2]}};
    if (char const* env = std::getenv("MAJLAB_THREADS")) {
      try {
        c.threads = std::stoul(env);
      } catch (std::exception const&) {
        throw ParseError("MAJLAB_THREADS must be a non-negative integer");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text rendering
  ////////////////////////////////////////////////////////////////////////

  std::string majority_line(CloneSearchReport const& r) {
    std::ostringstream s;
    if (r.found) {
      s << "majority term: " << r.found->witness().to_string();
    } else if (r.exhausted) {
      s << "majority term: none (clone of " << r.generated_count << " ternary operations exhausted)";
    } else {
      s << "majority term: unknown (stopped after " << r.generated_count << " operations)";
    }
    return s.str();
  }

  std::string text_report(std::string const&               algebra,
                          CloneSearchReport const*         majority,
                          std::vector<CheckOutcome> const& outcomes,
                          bool                             fatal,
                          std::vector<std::string> const&  notes) {
    std::ostringstream s;
    s << "algebra: " << algebra << "\n";
    if (majority) {
      s << majority_line(*majority) << "\n";
    }
    for (auto const& o : outcomes) {
      std::string id = to_string(o.condition);
      s << "  " << id << std::string(id.size() < 16 ? 16 - id.size() : 1, ' ')
        << to_string(o.verdict) << (is_implication_only(o.condition) ? "  (implication only)" : "")
        << "\n";
      if (o.witness) {
        s << "    witness: " << o.witness->dump() << "\n";
      }
      s << "    bounds: " << o.bounds.dump() << "\n";
    }
    s << "consistency: " << (fatal ? "FATAL" : "ok") << "\n";
    for (auto const& n : notes) {
      s << "  - " << n << "\n";
    }
    return s.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int outcome_exit(std::vector<CheckOutcome> const& outcomes, bool fatal) {
    if (fatal) {
      return exit_fatal;
    }
    bool unknown = false;
    for (auto const& o : outcomes) {
      if (o.verdict == Verdict::fail) {
        return exit_fail;
      }
      unknown = unknown || o.verdict == Verdict::unknown;
    }
    return unknown ? exit_unknown : exit_pass;
  }

  int cmd_majority(FiniteAlgebra const& A, Options const& opt) {
    auto r = find_majority_term(A, opt.cfg.clone);
    bool fatal = false;
    json out   = {{"algebra", A.name()}};
    json const body = to_json(r);
    for (auto const& [k, v] : body.items()) {
      out[k] = v;
    }
    if (r.found) {
      if (auto problem = recheck::majority_term(A, r.found->witness())) {
        std::cerr << "FATAL: " << *problem << "\n";
        fatal = true;
      }
    }
    if (opt.format == "text") {
      emit(opt, "algebra: " + A.name() + "\n" + majority_line(r) + "\nclone size: "
                    + std::to_string(r.generated_count)
                    + (r.exhausted ? " (exhausted)\n" : " (budget reached)\n"));
    } else {
      emit(opt, out.dump(2) + "\n");
    }
    if (fatal) {
      return exit_fatal;
    }
    return r.found ? exit_pass : r.exhausted ? exit_fail : exit_unknown;
  }

  int cmd_conditions(FiniteAlgebra const& A, std::string const& kind, Options const& opt) {
    auto const&               cfg = opt.cfg;
    std::vector<CheckOutcome> outcomes;
    if (kind == "pixley") {
      outcomes.push_back(check_pixley_congruences(A, cfg));
      auto [ii, iii] = check_pixley_reflexive(A, cfg);
      outcomes.push_back(std::move(ii));
      outcomes.push_back(std::move(iii));
    } else if (kind == "bergman") {
      outcomes.push_back(check_bergman(A, cfg));
    } else if (kind == "pcrt") {
      outcomes.push_back(check_pcrt(A, cfg));
    } else if (kind == "ddrr") {
      outcomes.push_back(check_ddrr(A, cfg));
    } else if (kind == "image-meet") {
      outcomes.push_back(check_image_meet_preservation(A, cfg));
    } else {
      outcomes.push_back(check_majority_selecting_all(A, cfg));
    }
    bool                     fatal = false;
    std::vector<std::string> notes;
    verify_outcomes(A, outcomes, fatal, notes);
    if (opt.format == "text") {
      emit(opt, text_report(A.name(), nullptr, outcomes, fatal, notes));
    } else {
      json conditions = json::array();
      for (auto const& o : outcomes) {
        conditions.push_back(to_json(o));
      }
      json report = {{"algebra", A.name()},
                     {"conditions", conditions},
                     {"consistency", {{"fatal", fatal}, {"notes", notes}}}};
      emit(opt, report.dump(2) + "\n");
    }
    return outcome_exit(outcomes, fatal);
  }

  int cmd_cross(FiniteAlgebra const& A, Options const& opt) {
    auto m = cross_check(A, opt.cfg);
    if (opt.format == "text") {
      emit(opt, text_report(A.name(), &m.majority, m.outcomes, m.fatal, m.notes));
    } else {
      emit(opt, to_json(m).dump(2) + "\n");
    }
    if (m.fatal) {
      return exit_fatal;
    }
    int const code = outcome_exit(m.outcomes, false);
    if (code == exit_fail || m.majority.found) {
      return code == exit_fail ? exit_fail : exit_pass;
    }
    return m.majority.exhausted ? exit_fail : exit_unknown;
  }

  int cmd_solve(std::string const& algebra_path,
                std::string const& system_path,
                bool               constructive,
                Options const&     opt) {
    auto const A   = load_algebra(algebra_path);
    auto const sys = parse_system(read_file(system_path), A);
    SolveReport rep;
    if (constructive) {
      auto m = find_majority_term(A, opt.cfg.clone);
      if (!m.found) {
        std::cerr << "no majority term for " << A.name()
                  << (m.exhausted ? " (clone exhausted)" : " (clone budget reached)") << "\n";
        return exit_unknown;
      }
      rep = solve_constructive(sys, *m.found);
    } else {
      rep = solve_brute(sys);
    }
    if (opt.format == "text") {
      std::ostringstream s;
      s << "pairwise solvable: " << (rep.pairwise.solvable ? "yes" : "no");
      if (rep.pairwise.failing_pair) {
        s << " (rows " << rep.pairwise.failing_pair->first << " and "
          << rep.pairwise.failing_pair->second << " have disjoint blocks)";
      }
      s << "\nsolution: " << (rep.solution ? std::to_string(*rep.solution) : "none")
        << "\nmethod: " << to_string(rep.method) << "\n";
      emit(opt, s.str());
    } else {
      emit(opt, to_json(rep).dump(2) + "\n");
    }
    return rep.solution ? exit_pass : exit_fail;
  }

  // One operation per line, so tables stay readable.
  std::string corpus_file(FiniteAlgebra const& A) {
    std::ostringstream s;
    s << "{\n  \"name\": " << json(A.name()).dump() << ",\n  \"size\": " << A.size()
      << ",\n  \"operations\": [\n";
    for (std::size_t op = 0; op < A.number_of_operations(); ++op) {
      json line = {{"name", A.signature()[op].name},
                   {"arity", A.arity(op)},
                   {"table", A.table(op)}};
      s << "    " << line.dump() << (op + 1 < A.number_of_operations() ? ",\n" : "\n");
    }
    s << "  ]\n}\n";
    return s.str();
  }

  int cmd_gen_corpus(std::string const& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw ParseError("cannot create \"" + dir + "\": " + ec.message());
    }
    for (auto const& A : corpus::all()) {
      auto          path = std::filesystem::path(dir) / (A.name() + ".json");
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw ParseError("cannot write \"" + path.string() + "\"");
      }
      f << corpus_file(A);
      std::cout << path.string() << "\n";
    }
    return exit_pass;
  }

  void add_bounds(CLI::App* cmd, Options& opt) {
    auto& c = opt.cfg;
    cmd->add_option("--powers", c.powers, "exponents for PIXLEY-CONG and PCRT")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--factors", c.n_factors, "number of factors for BERGMAN")
        ->capture_default_str();
    cmd->add_option("--gen-cap", c.gen_cap, "generators per enumerated subpower")
        ->capture_default_str();
    cmd->add_option("--clone-coord-budget", c.clone.coord_budget, "largest n^k in term search")
        ->capture_default_str();
    cmd->add_option("--clone-size-budget", c.clone.size_budget, "most term operations generated")
        ->capture_default_str();
    cmd->add_option("--cong-size-guard", c.cong_size_guard,
                    "largest algebra whose congruences or relations are enumerated")
        ->capture_default_str();
    cmd->add_option("--sys-len", c.sys_len, "longest system for PCRT")->capture_default_str();
    cmd->add_option("--relation-power", c.relation_power,
                    "exponent for PIXLEY-REFL and IMAGE-MEET")
        ->capture_default_str();
    cmd->add_option("--relation-budget", c.relation_budget,
                    "most reflexive compatible relations enumerated")
        ->capture_default_str();
    cmd->add_option("--subpower-guard", c.subpower_guard,
                    "largest product for subpower enumeration")
        ->capture_default_str();
    cmd->add_option("--select-powers", opt.select_powers,
                    "exponents of the three factors for MAJ-SELECT")
        ->delimiter(',')
        ->expected(3)
        ->capture_default_str();
  }

  void add_output(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "write the report to PATH instead of stdout");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majlab: majority terms and their equivalent conditions on finite algebras"};
  app.require_subcommand(1);
  Options opt;

  std::string kind, algebra_path, system_path, out_dir;
  bool        constructive = false;

  auto* check = app.add_subcommand("check", "run a checker on an algebra file");
  check
      ->add_option("kind", kind,
                   "majority|pixley|bergman|pcrt|ddrr|image-meet|selecting|cross")
      ->required()
      ->check(CLI::IsMember(
          {"majority", "pixley", "bergman", "pcrt", "ddrr", "image-meet", "selecting", "cross"}));
  check->add_option("algebra", algebra_path, "algebra JSON file")->required();
  add_bounds(check, opt);
  add_output(check, opt);

  auto* solve = app.add_subcommand("solve", "solve a congruence system");
  solve->add_option("algebra", algebra_path, "algebra JSON file")->required();
  solve->add_option("system", system_path, "system JSON file")->required();
  solve->add_flag("--constructive", constructive, "use the majority-term solver");
  add_bounds(solve, opt);
  add_output(solve, opt);

  auto* gen = app.add_subcommand("gen-corpus", "write the sample algebras");
  gen->add_option("out_dir", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*gen) {
      return cmd_gen_corpus(out_dir);
    }
    validate(opt);
    if (*solve) {
      return cmd_solve(algebra_path, system_path, constructive, opt);
    }
    auto const A = load_algebra(algebra_path);
    if (kind == "majority") {
      return cmd_majority(A, opt);
    }
    if (kind == "cross") {
      return cmd_cross(A, opt);
    }
    return cmd_conditions(A, kind, opt);
  } catch (majlab::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
