// Command-line front end.  `run` executes a scenario file; the direct verbs
// assemble a single-task scenario from flags, so any verdict from a larger
// run can be reproduced in isolation.  Exit codes: 0 all tasks ok, 1 verdict
// mismatch, 2 parse or validation error, 3 column budget exceeded.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hochlab/scenario.hpp"
#include "hochlab/schemas.hpp"

using namespace hochlab;

namespace {

struct GlobalOpts {
  int jobs = 1;
  bool dump_matrices = false;
  std::optional<Index> budget_cols;
  std::optional<std::uint64_t> seed;
  std::string output_dir = ".";
};

// Ambient selection shared by the direct verbs.
struct AlgebraOpts {
  std::optional<Index> matrix_m;
  std::optional<Index> square_zero_dim;
  bool scalars = false;
  bool unitize = false;
  std::string algebra_file;
  std::vector<Index> frame;  // k N [spare]
  std::string expect = "pass";
  std::string name;
};

void add_algebra_opts(CLI::App* cmd, AlgebraOpts& a) {
  cmd->add_option("--matrix", a.matrix_m, "ambient full matrix algebra M_m");
  cmd->add_option("--square-zero", a.square_zero_dim,
                  "ambient square-zero algebra of this dimension");
  cmd->add_flag("--scalars", a.scalars, "ambient one-dimensional algebra");
  cmd->add_option("--algebra-file", a.algebra_file,
                  "load the ambient algebra from a JSON file");
  cmd->add_flag("--unitize", a.unitize, "adjoin a unit to the chosen ambient");
  cmd->add_option("--frame", a.frame,
                  "shift frame as k,N[,spare]; the ambient defaults to its "
                  "M_M when no algebra is chosen")
      ->delimiter(',')
      ->expected(2, 3);
  cmd->add_option("--expect", a.expect, "expected verdict (default pass)")
      ->check(CLI::IsMember({"pass", "fail"}));
  cmd->add_option("--name", a.name, "scenario name (default: the verb)");
}

Json algebra_spec_of(const AlgebraOpts& a) {
  Json spec = nullptr;
  int chosen = int(a.matrix_m.has_value()) + int(a.square_zero_dim.has_value()) +
               int(a.scalars) + int(!a.algebra_file.empty());
  if (chosen > 1)
    throw CLI::ValidationError("choose at most one ambient algebra");
  if (a.matrix_m) spec = Json{{"builtin", "matrix"}, {"m", *a.matrix_m}};
  if (a.square_zero_dim)
    spec = Json{{"builtin", "square-zero"}, {"dim", *a.square_zero_dim}};
  if (a.scalars) spec = Json{{"builtin", "scalars"}};
  if (!a.algebra_file.empty()) spec = Json{{"file", a.algebra_file}};
  if (a.unitize) {
    if (spec.is_null())
      throw CLI::ValidationError("--unitize needs an ambient algebra");
    spec = Json{{"builtin", "unitization"}, {"of", spec}};
  }
  return spec;
}

Json frame_spec_of(const AlgebraOpts& a) {
  if (a.frame.empty()) return nullptr;
  Json f;
  f["k"] = a.frame[0];
  f["N"] = a.frame[1];
  f["spare"] = a.frame.size() > 2 ? a.frame[2] : Index(0);
  return f;
}

int execute(Scenario s, const GlobalOpts& g) {
  RunOptions o;
  o.jobs = g.jobs;
  o.dump_matrices = g.dump_matrices;
  o.budget_cols = g.budget_cols;
  o.seed = g.seed;
  const RunResult r = run_scenario(s, o);
  std::cout << write_reports(r, g.output_dir);
  return r.exit_code;
}

int run_single(const std::string& verb, const AlgebraOpts& a, Json params,
               const GlobalOpts& g) {
  Scenario s;
  s.name = a.name.empty() ? verb : a.name;
  s.algebra_spec = algebra_spec_of(a);
  s.frame_spec = frame_spec_of(a);
  s.base_dir = ".";
  TaskSpec t;
  t.kind = verb;
  t.expect = a.expect;
  t.params = std::move(params);
  s.tasks.push_back(std::move(t));
  return execute(std::move(s), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chain-complex verification workbench"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--jobs", g.jobs, "run tasks on this many threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-cols", g.budget_cols,
                 "override the column budget for every task");
  app.add_option("--seed", g.seed, "override the scenario seed");
  app.add_flag("--dump-matrices", g.dump_matrices,
               "attach materialized differentials to homology reports");
  app.add_option("--output-dir", g.output_dir,
                 "directory for report files (default .)");

  // run <scenario.json>
  auto* run = app.add_subcommand("run", "execute a scenario file");
  std::string scenario_path;
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();

  // schemas [--out-dir D]: regenerate the shipped schema files
  auto* schemas_cmd =
      app.add_subcommand("schemas", "write the JSON schemas to a directory");
  std::string schema_dir = "schemas";
  schemas_cmd->add_option("--out-dir", schema_dir, "target directory");

  struct Verb {
    CLI::App* cmd = nullptr;
    AlgebraOpts alg;
  };
  std::map<std::string, Verb> verbs;
  auto add_verb = [&](const std::string& name, const std::string& help) {
    Verb& v = verbs[name];
    v.cmd = app.add_subcommand(name, help);
    add_algebra_opts(v.cmd, v.alg);
    return v.cmd;
  };

  // homology
  std::string complex_kind = "hochschild";
  int max_degree = 2;
  std::vector<Index> expect_dims;
  bool with_cohomology = false, with_trace = false;
  {
    auto* c = add_verb("homology", "chain homology of the ambient algebra");
    c->add_option("--complex", complex_kind, "hochschild or bar")
        ->check(CLI::IsMember({"hochschild", "bar"}));
    c->add_option("--max-degree", max_degree, "top degree (default 2)");
    c->add_option("--expect-dims", expect_dims,
                  "expected dimensions per degree, 0..max")
        ->delimiter(',');
    c->add_flag("--cohomology", with_cohomology,
                "also compute the dual complex and compare dimensions");
    c->add_flag("--trace-iso", with_trace,
                "check the cyclic contraction induces isomorphisms");
  }

  // bar-acyclicity
  int bar_degree = 2;
  {
    auto* c = add_verb("bar-acyclicity", "bar-complex acyclicity verdict");
    c->add_option("--max-degree", bar_degree, "top degree (default 2)");
  }

  // verify-identities
  int ident_degree = 2;
  {
    auto* c = add_verb("verify-identities",
                       "the shift-frame operator identity battery");
    c->add_option("--max-degree", ident_degree, "top degree (default 2)");
  }

  // les / excision
  std::string les_complex = "hochschild", exc_complex = "hochschild";
  int les_degree = 2, exc_degree = 2;
  bool les_unitization = false, exc_unitization = false;
  std::optional<Index> les_conj_step, exc_conj_step;
  {
    auto* c = add_verb("les", "exactness of the extension ladder");
    c->add_option("--complex", les_complex)
        ->check(CLI::IsMember({"hochschild", "bar"}));
    c->add_option("--max-degree", les_degree, "top degree (default 2)");
    c->add_flag("--unitization", les_unitization,
                "extension: unitize the chosen ambient");
    c->add_option("--conjugator-step", les_conj_step,
                  "extension: adjoin the frame's k-step conjugator");
  }
  {
    auto* c = add_verb("excision",
                       "quotient-complex versus quotient-algebra classes");
    c->add_option("--complex", exc_complex)
        ->check(CLI::IsMember({"hochschild", "bar"}));
    c->add_option("--max-degree", exc_degree, "top degree (default 2)");
    c->add_flag("--unitization", exc_unitization,
                "extension: unitize the chosen ambient");
    c->add_option("--conjugator-step", exc_conj_step,
                  "extension: adjoin the frame's k-step conjugator");
  }

  // average-cocycle
  int avg_degree = 1;
  std::vector<Index> corner_sizes;
  std::string avg_norm = "linf", avg_source = "coboundary";
  {
    auto* c = add_verb("average-cocycle",
                       "solve a cocycle and average its primitive over blocks");
    c->add_option("--degree", avg_degree, "cocycle degree (default 1)");
    c->add_option("--corner-sizes", corner_sizes, "corner sizes to average over")
        ->delimiter(',')
        ->required();
    c->add_option("--norm", avg_norm)->check(CLI::IsMember({"l1", "linf", "l2"}));
    c->add_option("--source", avg_source)
        ->check(CLI::IsMember({"coboundary", "zero"}));
  }

  // decay
  int decay_degree = 1;
  std::vector<Index> decay_blocks;
  std::string decay_norm = "linf";
  std::vector<std::string> tau_terms;
  {
    auto* c = add_verb("decay", "averaged-boundary decay table over a frame");
    c->add_option("--degree", decay_degree, "chain degree (default 1)");
    c->add_option("--blocks", decay_blocks, "block counts (default 1..N)")
        ->delimiter(',');
    c->add_option("--norm", decay_norm)
        ->check(CLI::IsMember({"l1", "linf", "l2"}));
    c->add_option("--tau-term", tau_terms,
                  "test chain term as tuple=value, e.g. 0,1=1 (repeatable)");
  }

  // norms
  std::string norm_kind = "l1";
  int norm_samples = 8, norm_bound = 3;
  std::optional<Index> norm_copies;
  {
    auto* c = add_verb("norms", "amplification and signed-permutation isometries");
    c->add_option("--norm", norm_kind)->check(CLI::IsMember({"l1", "linf", "l2"}));
    c->add_option("--samples", norm_samples, "sample pairs (default 8)");
    c->add_option("--bound", norm_bound, "coordinate bound (default 3)");
    c->add_option("--max-copies", norm_copies,
                  "amplification copies (default frame N)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const Json j = load_json_file(scenario_path);
      const std::string dir =
          std::filesystem::path(scenario_path).parent_path().string();
      return execute(scenario_from_json(j, dir.empty() ? "." : dir), g);
    }
    if (schemas_cmd->parsed()) {
      std::filesystem::create_directories(schema_dir);
      for (const std::string& name : schema_names())
        write_text_file((std::filesystem::path(schema_dir) /
                         (name + ".schema.json"))
                            .string(),
                        schema_file_text(name));
      std::cout << "wrote " << schema_names().size() << " schemas to "
                << schema_dir << "\n";
      return 0;
    }

    for (auto& [name, v] : verbs) {
      if (!v.cmd->parsed()) continue;
      Json p = Json::object();
      if (name == "homology") {
        p["complex"] = complex_kind;
        p["max_degree"] = max_degree;
        if (!expect_dims.empty()) p["expect_dims"] = expect_dims;
        if (with_cohomology) p["cohomology"] = true;
        if (with_trace) p["trace_iso"] = true;
      } else if (name == "bar-acyclicity") {
        p["max_degree"] = bar_degree;
      } else if (name == "verify-identities") {
        p["max_degree"] = ident_degree;
      } else if (name == "les" || name == "excision") {
        const bool unitize = name == "les" ? les_unitization : exc_unitization;
        const auto step = name == "les" ? les_conj_step : exc_conj_step;
        if (unitize == step.has_value())
          throw CLI::ValidationError(
              "choose exactly one of --unitization and --conjugator-step");
        Json ext;
        if (unitize) {
          ext["kind"] = "unitization";
          ext["of"] = algebra_spec_of(v.alg);
          if (ext["of"].is_null())
            throw CLI::ValidationError("--unitization needs an ambient algebra");
        } else {
          ext["kind"] = "conjugator";
          ext["step"] = *step;
        }
        p["extension"] = std::move(ext);
        p["complex"] = name == "les" ? les_complex : exc_complex;
        p["max_degree"] = name == "les" ? les_degree : exc_degree;
      } else if (name == "average-cocycle") {
        p["degree"] = avg_degree;
        p["corner_sizes"] = corner_sizes;
        p["norm"] = avg_norm;
        p["source"] = avg_source;
      } else if (name == "decay") {
        p["degree"] = decay_degree;
        if (!decay_blocks.empty()) p["blocks"] = decay_blocks;
        p["norm"] = decay_norm;
        if (!tau_terms.empty()) {
          Json tau = Json::object();
          for (const std::string& term : tau_terms) {
            const auto eq = term.find('=');
            if (eq == std::string::npos)
              throw CLI::ValidationError("--tau-term needs tuple=value");
            tau[term.substr(0, eq)] = term.substr(eq + 1);
          }
          p["tau"] = std::move(tau);
        }
      } else if (name == "norms") {
        p["norm"] = norm_kind;
        p["samples"] = norm_samples;
        p["bound"] = norm_bound;
        if (norm_copies) p["max_copies"] = *norm_copies;
      }
      return run_single(name, v.alg, std::move(p), g);
    }
    std::cerr << "no subcommand matched\n";
    return 2;
  } catch (const JsonParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
