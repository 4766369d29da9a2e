#include "hochlab/scenario.hpp"

#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>
#include <utility>

#include "hochlab/averaging.hpp"
#include "hochlab/homology.hpp"
#include "hochlab/homotopy.hpp"
#include "hochlab/les.hpp"
#include "hochlab/norms.hpp"
#include "hochlab/schemas.hpp"

namespace hochlab {
namespace {

ComplexKind parse_complex(const std::string& name, const char* task) {
  if (name == "hochschild") return ComplexKind::hochschild;
  if (name == "bar") return ComplexKind::bar;
  throw std::invalid_argument(std::string(task) + ": unknown complex '" + name +
                              "'");
}

int required_int(const Json& p, const char* key, const char* task) {
  if (!p.contains(key))
    throw std::invalid_argument(std::string(task) + ": missing parameter '" +
                                key + "'");
  if (!p[key].is_number_integer() && !p[key].is_number_unsigned())
    throw std::invalid_argument(std::string(task) + ": parameter '" + key +
                                "' must be an integer");
  return p[key].get<int>();
}

std::vector<Index> index_list(const Json& j, const char* key, const char* task) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(task) + ": parameter '" + key +
                                "' must be a nonempty array");
  std::vector<Index> out;
  for (const Json& x : j) {
    if (!x.is_number_integer() && !x.is_number_unsigned())
      throw std::invalid_argument(std::string(task) + ": parameter '" + key +
                                  "' must hold integers");
    out.push_back(x.get<Index>());
  }
  return out;
}

// Per-task working set.  Everything is resolved from the scenario's JSON
// specs inside the task, so concurrent tasks share nothing mutable.
struct TaskCtx {
  const Scenario* s = nullptr;
  const TaskSpec* t = nullptr;
  Index index = 0;
  std::uint64_t task_seed = 0;
  Index budget = 0;
  bool dump = false;

  std::optional<AlgebraPresentation> algebra;
  std::optional<ShiftFrame> frame;

  const ShiftFrame& need_frame() {
    if (!frame) {
      if (s->frame_spec.is_null())
        throw std::invalid_argument(t->kind + " task: scenario has no frame");
      frame = resolve_frame(s->frame_spec);
    }
    return *frame;
  }

  // The ambient algebra: the explicit spec when present, else the frame's.
  const AlgebraPresentation& ambient() {
    if (algebra) return *algebra;
    if (!s->algebra_spec.is_null()) {
      algebra = resolve_algebra(s->algebra_spec, s->base_dir);
      return *algebra;
    }
    return need_frame().ambient;
  }
};

struct TaskData {
  Json data = Json::object();
  bool pass = false;
};

TaskData task_homology(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const AlgebraPresentation& a = ctx.ambient();
  const ComplexKind kind =
      parse_complex(p.value("complex", "hochschild"), "homology task");
  const int maxd = required_int(p, "max_degree", "homology task");

  const HomologyReport rep = homology(a, kind, maxd, ctx.budget);
  TaskData out;
  out.data = homology_report_json(rep);
  out.pass = true;

  if (p.contains("expect_dims")) {
    const std::vector<Index> want =
        index_list(p["expect_dims"], "expect_dims", "homology task");
    bool match = want.size() == rep.degrees.size();
    for (std::size_t i = 0; match && i < want.size(); ++i)
      match = want[i] == rep.degrees[i].dim;
    out.data["expected_dims"] = want;
    out.data["dims_match"] = match;
    out.pass = out.pass && match;
  }
  if (p.value("cohomology", false)) {
    const HomologyReport co = cohomology(a, maxd, ctx.budget);
    bool agree = co.degrees.size() == rep.degrees.size();
    Json dims = Json::array();
    for (std::size_t i = 0; i < co.degrees.size(); ++i) {
      dims.push_back(co.degrees[i].dim);
      if (agree && co.degrees[i].dim != rep.degrees[i].dim) agree = false;
    }
    out.data["cohomology_dims"] = std::move(dims);
    out.data["cohomology_agrees"] = agree;
    out.pass = out.pass && agree;
  }
  if (p.value("trace_iso", false)) {
    const AlgebraPresentation scalars = make_scalar_algebra();
    const GradedMap tr = trace_map(a, scalars);
    Json arr = Json::array();
    bool all = true;
    for (int d = 0; d <= maxd; ++d) {
      const InducedMap im = induced_map(tr, scalars, kind, d, ctx.budget);
      all = all && im.iso;
      arr.push_back(induced_map_json(im));
    }
    out.data["trace"] = std::move(arr);
    out.data["trace_iso"] = all;
    out.pass = out.pass && all;
  }
  if (ctx.dump) {
    const GradedMap dmap =
        kind == ComplexKind::hochschild ? hochschild_map(a) : bar_map(a);
    Json mats = Json::array();
    for (int d = 1; d <= maxd; ++d)
      mats.push_back(sparse_matrix_json(materialize(dmap, d)));
    out.data["differentials"] = std::move(mats);
  }
  return out;
}

TaskData task_bar_acyclicity(TaskCtx& ctx) {
  const int maxd =
      required_int(ctx.t->params, "max_degree", "bar-acyclicity task");
  const HUnitality rep = h_unitality(ctx.ambient(), maxd, ctx.budget);
  return {h_unitality_json(rep), rep.h_unital};
}

TaskData task_verify_identities(TaskCtx& ctx) {
  const int maxd =
      required_int(ctx.t->params, "max_degree", "verify-identities task");
  const std::vector<HomotopyVerdict> verdicts =
      verify_shift_identities(ctx.need_frame(), maxd, ctx.budget);
  Json arr = Json::array();
  bool all = true;
  for (const HomotopyVerdict& v : verdicts) {
    all = all && v.pass;
    arr.push_back(homotopy_verdict_json(v));
  }
  TaskData out;
  out.data["count"] = verdicts.size();
  out.data["all_pass"] = all;
  out.data["verdicts"] = std::move(arr);
  out.pass = all;
  return out;
}

ExtensionSpec resolve_extension(TaskCtx& ctx, const char* task) {
  const Json& p = ctx.t->params;
  if (!p.contains("extension") || !p["extension"].is_object())
    throw std::invalid_argument(std::string(task) +
                                ": missing 'extension' object");
  const Json& e = p["extension"];
  const std::string kind = e.value("kind", "");
  if (kind == "unitization") {
    if (!e.contains("of"))
      throw std::invalid_argument(std::string(task) +
                                  ": unitization extension needs 'of'");
    return unitization_extension(resolve_algebra(e["of"], ctx.s->base_dir));
  }
  if (kind == "conjugator") {
    const Index step = e.value("step", Index(1));
    return conjugator_extension(ctx.need_frame(), step);
  }
  throw std::invalid_argument(std::string(task) + ": unknown extension kind '" +
                              kind + "'");
}

TaskData task_les(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const ExtensionSpec ext = resolve_extension(ctx, "les task");
  const ComplexKind kind =
      parse_complex(p.value("complex", "hochschild"), "les task");
  const int maxd = required_int(p, "max_degree", "les task");
  const LESReport rep = les_of_subcomplex(ext, kind, maxd, ctx.budget);
  return {les_report_json(rep), rep.exact};
}

TaskData task_excision(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const ExtensionSpec ext = resolve_extension(ctx, "excision task");
  const ComplexKind kind =
      parse_complex(p.value("complex", "hochschild"), "excision task");
  const int maxd = required_int(p, "max_degree", "excision task");
  const ExcisionReport rep = excision_compare(ext, kind, maxd, ctx.budget);
  return {excision_report_json(rep), rep.all_iso};
}

TaskData task_average_cocycle(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const AlgebraPresentation& a = ctx.ambient();
  const int degree = required_int(p, "degree", "average-cocycle task");
  if (!p.contains("corner_sizes"))
    throw std::invalid_argument(
        "average-cocycle task: missing parameter 'corner_sizes'");
  const std::vector<Index> sizes =
      index_list(p["corner_sizes"], "corner_sizes", "average-cocycle task");
  const NormKind nk = parse_norm_kind(p.value("norm", "linf"));
  const std::string source = p.value("source", "coboundary");

  CocycleInstance inst;
  if (source == "coboundary")
    inst = coboundary_instance(a, degree, ctx.task_seed, ctx.budget);
  else if (source == "zero")
    inst = zero_instance(a, degree);
  else
    throw std::invalid_argument("average-cocycle task: unknown source '" +
                                source + "'");
  const AveragingReport rep =
      averaging_harness(inst, sizes, nk, ctx.task_seed, ctx.budget);
  return {averaging_report_json(rep), rep.primitive_found && rep.all_identities};
}

TaskData task_decay(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const ShiftFrame& f = ctx.need_frame();
  const int degree = required_int(p, "degree", "decay task");
  std::vector<Index> blocks;
  if (p.contains("blocks")) {
    blocks = index_list(p["blocks"], "blocks", "decay task");
  } else {
    for (Index n = 1; n <= f.N; ++n) blocks.push_back(n);
  }
  const NormKind nk = parse_norm_kind(p.value("norm", "linf"));

  const CocycleInstance inst =
      coboundary_instance(f.ambient, degree, ctx.task_seed, ctx.budget);
  const PrimitiveResult prim = solve_primitive(inst, ctx.budget);
  if (!prim.feasible)
    throw std::logic_error("decay task: coboundary instance has no primitive");

  Chain tau;
  tau.alg = &f.ambient;
  tau.degree = degree;
  if (p.contains("tau")) {
    if (!p["tau"].is_object() || p["tau"].empty())
      throw std::invalid_argument(
          "decay task: 'tau' must be a nonempty tuple-to-value object");
    for (const auto& [key, val] : p["tau"].items()) {
      const std::vector<Index> tuple = parse_tuple_key(key);
      if (int(tuple.size()) != degree + 1)
        throw std::invalid_argument("decay task: tau tuple '" + key +
                                    "' has the wrong length");
      tau.add_term(encode_tuple(tuple, f.ambient.dim), rat_from_json(val));
    }
  } else {
    tau = corner_space(f).basis(degree, 0);
  }

  const DecayReport rep =
      decay_table(f, inst, prim.primitive, tau, blocks, nk, ctx.budget);
  TaskData out;
  out.data = decay_report_json(rep);
  out.data["tau"] = chain_json(tau);
  out.pass = rep.all_identities && rep.all_bounded;
  return out;
}

TaskData task_norms(TaskCtx& ctx) {
  const Json& p = ctx.t->params;
  const NormKind nk = parse_norm_kind(p.value("norm", "l1"));
  const int samples = p.value("samples", 8);
  const int bound = p.value("bound", 3);
  if (samples < 1)
    throw std::invalid_argument("norms task: samples must be positive");
  std::mt19937_64 rng(ctx.task_seed);

  TaskData out;
  out.pass = true;
  const bool has_frame = !ctx.s->frame_spec.is_null();
  if (has_frame) {
    const ShiftFrame& f = ctx.need_frame();
    const Element a0 = random_corner_element(rng, f, bound);
    const Index copies = p.value("max_copies", f.N);
    const NormRatioReport amp = amplification_isometry(f, a0, copies, nk);
    out.data["amplification"] = norm_ratio_report_json(amp);
    out.pass = out.pass && amp.all_one;
  } else {
    out.data["amplification"] = nullptr;
  }

  const AlgebraPresentation& amb = ctx.ambient();
  if (!amb.matrix_view)
    throw std::invalid_argument(
        "norms task: the ambient algebra has no matrix view");
  std::vector<SignedPermutation> us;
  std::vector<Element> as;
  for (int i = 0; i < samples; ++i) {
    us.push_back(random_signed_permutation(rng, amb.matrix_view->m));
    as.push_back(random_matrix_element(rng, amb, bound));
  }
  const NormRatioReport perm = permutation_isometry(amb, us, as, nk);
  out.data["permutation"] = norm_ratio_report_json(perm);
  out.pass = out.pass && perm.all_one;
  out.data["all_one"] = out.pass;
  return out;
}

TaskData dispatch(TaskCtx& ctx) {
  const std::string& kind = ctx.t->kind;
  if (kind == "homology") return task_homology(ctx);
  if (kind == "bar-acyclicity") return task_bar_acyclicity(ctx);
  if (kind == "verify-identities") return task_verify_identities(ctx);
  if (kind == "les") return task_les(ctx);
  if (kind == "excision") return task_excision(ctx);
  if (kind == "average-cocycle") return task_average_cocycle(ctx);
  if (kind == "decay") return task_decay(ctx);
  if (kind == "norms") return task_norms(ctx);
  throw std::invalid_argument("unknown task kind '" + kind + "'");
}

Json frame_inputs_json(const ShiftFrame& f) {
  Json out;
  out["k"] = f.k;
  out["N"] = f.N;
  out["spare"] = f.spare;
  out["M"] = f.M;
  out["ambient"] = f.ambient.content_hash;
  return out;
}

TaskOutcome run_one_task(const Scenario& s, const RunOptions& opts,
                         std::uint64_t run_seed, Index budget, Index index) {
  const TaskSpec& t = s.tasks[index];
  TaskCtx ctx;
  ctx.s = &s;
  ctx.t = &t;
  ctx.index = index;
  ctx.task_seed = run_seed + index;
  ctx.budget = budget;
  ctx.dump = opts.dump_matrices;

  TaskOutcome out;
  out.index = index;
  out.kind = t.kind;
  out.expect = t.expect;

  Json data = nullptr;
  Json error = nullptr;
  try {
    TaskData res = dispatch(ctx);
    data = std::move(res.data);
    out.pass = res.pass;
    out.ok = out.pass == (t.expect == "pass");
  } catch (const JsonParseError& e) {
    out.error = e.what();
    out.error_type = "parse";
  } catch (const std::length_error& e) {
    out.error = e.what();
    out.error_type = "budget";
  } catch (const std::invalid_argument& e) {
    out.error = e.what();
    out.error_type = "invalid";
  } catch (const std::exception& e) {
    out.error = e.what();
    out.error_type = "internal";
  }
  if (!out.error.empty()) {
    error = Json::object();
    error["type"] = out.error_type;
    error["message"] = out.error;
    out.pass = false;
    out.ok = false;
  }

  Json inputs;
  inputs["algebra"] = ctx.algebra ? Json(ctx.algebra->content_hash)
                     : ctx.frame  ? Json(ctx.frame->ambient.content_hash)
                                  : Json(nullptr);
  inputs["frame"] = ctx.frame ? frame_inputs_json(*ctx.frame) : Json(nullptr);
  inputs["seed"] = ctx.task_seed;
  inputs["budget_cols"] = ctx.budget;
  inputs["params"] = t.params;

  Json rep;
  rep["scenario"] = s.name;
  rep["task"] = t.kind;
  rep["index"] = index;
  rep["expect"] = t.expect;
  rep["inputs"] = std::move(inputs);
  rep["data"] = std::move(data);
  rep["error"] = std::move(error);
  rep["pass"] = out.pass;
  rep["ok"] = out.ok;
  require_schema(schema("task-report"), rep, "task report");
  out.report = std::move(rep);
  return out;
}

}  // namespace

Scenario scenario_from_json(const Json& j, std::string base_dir) {
  require_schema(schema("scenario"), j, "scenario");
  Scenario s;
  s.name = j.at("name").get<std::string>();
  s.seed = j.value("seed", std::uint64_t(0));
  s.budget_cols = j.value("budget_cols", kDefaultColumnBudget);
  if (j.contains("algebra")) s.algebra_spec = j["algebra"];
  if (j.contains("frame")) s.frame_spec = j["frame"];
  s.base_dir = base_dir.empty() ? "." : std::move(base_dir);
  for (const Json& tj : j.at("tasks")) {
    TaskSpec t;
    t.kind = tj.at("kind").get<std::string>();
    t.expect = tj.value("expect", "pass");
    if (tj.contains("params")) t.params = tj["params"];
    s.tasks.push_back(std::move(t));
  }
  return s;
}

AlgebraPresentation resolve_algebra(const Json& spec,
                                    const std::string& base_dir) {
  if (!spec.is_object())
    throw std::invalid_argument("algebra spec: expected an object");
  if (spec.contains("builtin")) {
    const std::string which = spec["builtin"].get<std::string>();
    if (which == "matrix") {
      if (!spec.contains("m"))
        throw std::invalid_argument("algebra spec: matrix needs 'm'");
      return make_matrix_algebra(spec["m"].get<Index>());
    }
    if (which == "square-zero") {
      if (!spec.contains("dim"))
        throw std::invalid_argument("algebra spec: square-zero needs 'dim'");
      return make_square_zero_algebra(spec["dim"].get<Index>());
    }
    if (which == "scalars") return make_scalar_algebra();
    if (which == "unitization") {
      if (!spec.contains("of"))
        throw std::invalid_argument("algebra spec: unitization needs 'of'");
      return unitization(resolve_algebra(spec["of"], base_dir));
    }
    throw std::invalid_argument("algebra spec: unknown builtin '" + which + "'");
  }
  if (spec.contains("file")) {
    const std::filesystem::path p =
        std::filesystem::path(base_dir) / spec["file"].get<std::string>();
    const Json j = load_json_file(p.string());
    require_schema(schema("algebra"), j, "algebra file " + p.string());
    return algebra_from_json(j);
  }
  require_schema(schema("algebra"), spec, "inline algebra");
  return algebra_from_json(spec);
}

ShiftFrame resolve_frame(const Json& spec) {
  if (!spec.is_object())
    throw std::invalid_argument("frame spec: expected an object");
  return make_shift_frame(spec.at("k").get<Index>(), spec.at("N").get<Index>(),
                          spec.value("spare", Index(0)));
}

RunResult run_scenario(const Scenario& s, const RunOptions& opts) {
  const std::uint64_t run_seed = opts.seed.value_or(s.seed);
  const Index budget = opts.budget_cols.value_or(s.budget_cols);

  RunResult r;
  r.scenario = s.name;
  r.seed = run_seed;
  r.budget_cols = budget;
  r.outcomes.resize(s.tasks.size());

  const std::size_t jobs = std::min<std::size_t>(
      std::max(1, opts.jobs), std::max<std::size_t>(1, s.tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < s.tasks.size(); i = next++)
      r.outcomes[i] = run_one_task(s, opts, run_seed, budget, i);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  bool any_parse = false, any_budget = false, any_bad = false;
  Index ok_count = 0;
  Json tasks = Json::array();
  for (const TaskOutcome& o : r.outcomes) {
    any_parse = any_parse || o.error_type == "parse";
    any_budget = any_budget || o.error_type == "budget";
    any_bad = any_bad || !o.ok;
    if (o.ok) ++ok_count;
    Json tj;
    tj["index"] = o.index;
    tj["kind"] = o.kind;
    tj["expect"] = o.expect;
    tj["pass"] = o.pass;
    tj["ok"] = o.ok;
    tj["error"] = o.error.empty() ? Json(nullptr) : Json(o.error);
    tj["report"] = report_filename(s.name, o.index, o.kind);
    tasks.push_back(std::move(tj));
  }
  r.exit_code = any_parse ? 2 : any_budget ? 3 : any_bad ? 1 : 0;

  Json summary;
  summary["scenario"] = s.name;
  summary["seed"] = run_seed;
  summary["budget_cols"] = budget;
  summary["tasks"] = std::move(tasks);
  summary["counts"] = Json::object();
  summary["counts"]["total"] = r.outcomes.size();
  summary["counts"]["ok"] = ok_count;
  summary["exit_code"] = r.exit_code;
  require_schema(schema("summary"), summary, "summary");
  r.summary = std::move(summary);
  return r;
}

std::string report_filename(const std::string& scenario, Index index,
                            const std::string& kind) {
  return scenario + ".task" + std::to_string(index) + "." + kind + ".json";
}

std::string summary_text(const Json& summary) {
  std::ostringstream out;
  out << "scenario " << summary["scenario"].get<std::string>() << "  seed "
      << summary["seed"].get<std::uint64_t>() << "  budget "
      << summary["budget_cols"].get<Index>() << "\n";
  for (const Json& t : summary["tasks"]) {
    out << "  [" << t["index"].get<Index>() << "] ";
    std::string kind = t["kind"].get<std::string>();
    kind.resize(18, ' ');
    out << kind;
    if (!t["error"].is_null())
      out << " error: " << t["error"].get<std::string>();
    else
      out << (t["pass"].get<bool>() ? " pass" : " fail") << "  expected "
          << t["expect"].get<std::string>();
    out << (t["ok"].get<bool>() ? "  OK" : "  NOT OK") << "\n";
  }
  out << "tasks " << summary["counts"]["total"].get<Index>() << ", ok "
      << summary["counts"]["ok"].get<Index>() << ", exit "
      << summary["exit_code"].get<int>() << "\n";
  return out.str();
}

std::string write_reports(const RunResult& r, const std::string& output_dir) {
  std::filesystem::create_directories(output_dir);
  const std::filesystem::path dir(output_dir);
  for (const TaskOutcome& o : r.outcomes)
    write_text_file((dir / report_filename(r.scenario, o.index, o.kind)).string(),
                    stable_dump(o.report));
  write_text_file((dir / (r.scenario + ".summary.json")).string(),
                  stable_dump(r.summary));
  const std::string text = summary_text(r.summary);
  write_text_file((dir / (r.scenario + ".summary.txt")).string(), text);
  return text;
}

}  // namespace hochlab
