#include "ivp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ivp/globalpic.hpp"
#include "ivp/localize.hpp"
#include "ivp/picdvr.hpp"
#include "ivp/spectra.hpp"
#include "ivp/verify.hpp"

namespace ivp::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// ---- report plumbing -------------------------------------------------------

struct Emitter {
  std::string command;
  bool table = false;
  std::ostream* out;
  Clock::time_point start = Clock::now();
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();

  void flatten(const ordered_json& j, const std::string& prefix,
               std::ostream& os) const {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items())
        flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
      for (size_t i = 0; i < j.size(); ++i)
        flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
      os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump())
         << "\n";
    }
  }

  int emit(bool ok) const {
    ordered_json rep;
    rep["schema_version"] = "1";
    rep["command"] = command;
    rep["inputs"] = inputs;
    rep["results"] = results;
    rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();
    if (table)
      flatten(rep, "", *out);
    else
      *out << rep.dump(2) << "\n";
    return ok ? 0 : 1;
  }
};

// ---- json helpers ----------------------------------------------------------

ordered_json ideal_json(const FracIdeal& i) { return i.to_string(); }

ordered_json class_json(const StepClass& c) {
  ordered_json j;
  j["print"] = c.to_string();
  j["p"] = c.prime();
  j["level"] = c.level();
  j["values"] = c.values();
  return j;
}

ordered_json int_ideal_json(const IntIdeal& i) {
  ordered_json j;
  j["print"] = i.to_string();
  j["const_gen"] = i.const_gen().get_str();
  ordered_json gens = ordered_json::array();
  for (const GenPoly& g : i.poly_gens()) gens.push_back(poly_to_string(g.binpoly()));
  j["poly_gens"] = gens;
  return j;
}

ordered_json vector_json(const LocalClassVector& v) {
  ordered_json j;
  j["print"] = v.to_string();
  ordered_json classes = ordered_json::object();
  for (const auto& [p, c] : v.entries())
    classes[std::to_string(p)] = class_json(c);
  j["classes"] = classes;
  return j;
}

ordered_json point_set_json(const PointSet& s) {
  ordered_json j;
  j["print"] = s.to_string();
  if (auto pts = s.finite_points()) {
    ordered_json arr = ordered_json::array();
    for (const Path& p : *pts) arr.push_back(p);
    j["points"] = arr;
  }
  return j;
}

ordered_json derived_json(const DerivedSequenceResult& r) {
  ordered_json j;
  ordered_json steps = ordered_json::array();
  for (const DerivedStep& s : r.steps) {
    ordered_json step;
    step["alpha"] = s.alpha;
    step["njaff"] = point_set_json(s.njaff);
    step["t_alpha_support_removed"] = point_set_json(s.removed);
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["classification"] = to_string(r.classification);
  if (r.pointed_at) j["pointed_at"] = path_to_string(*r.pointed_at);
  j["sharp"] = r.sharp;
  j["rank"] = r.rank;
  return j;
}

ordered_json meta_json(const DvrMeta& m) {
  ordered_json j;
  j["residue_char"] = m.residue_char.get_str();
  j["residue_size"] = m.residue_size ? ordered_json(m.residue_size->get_str())
                                     : ordered_json("inf");
  if (m.localization_ok) j["localization_ok"] = *m.localization_ok;
  return j;
}

ordered_json decomposition_json(const DecompositionReport& r) {
  ordered_json j;
  ordered_json checks = ordered_json::array();
  for (const HypothesisCheck& c : r.checks) {
    ordered_json e;
    e["stage"] = c.stage;
    e["witness"] = path_to_string(c.witness);
    e["localization"] = to_string(c.verdict);
    e["via_model_flag"] = c.flag_used;
    e["pass"] = c.pass;
    checks.push_back(e);
  }
  j["hypothesis_checks"] = checks;
  if (r.violation) {
    ordered_json v;
    v["stage"] = r.violation->stage;
    v["point"] = path_to_string(r.violation->point);
    v["message"] = r.violation->message;
    j["violation"] = v;
    j["decomposition"] = nullptr;
  } else {
    ordered_json parts = ordered_json::array();
    for (const Summand& s : r.summands) {
      ordered_json e;
      e["points"] = point_set_json(s.points);
      e["level"] = s.level;
      e["meta"] = meta_json(s.meta);
      e["summand"] = s.group;
      e["free"] = s.free;
      e["count"] = s.count ? ordered_json(*s.count) : ordered_json("infinite");
      parts.push_back(e);
    }
    j["decomposition"] = parts;
  }
  return j;
}

// the modeling axiom is an assumption of the model class, surfaced on
// every spectra report
const char* kModelingAxiom =
    "modeling axiom: a member is a Jaffard overring of the current stage "
    "exactly when it is isolated there";

// ---- input parsing ---------------------------------------------------------

// the CLI keeps exact arithmetic fast by bounding polynomial degrees; the
// library itself has no cap
constexpr int kDegreeCap = 64;

BinPoly parse_poly_checked(const std::string& s) {
  BinPoly f = parse_poly(s);
  if (f.degree() > kDegreeCap)
    throw std::invalid_argument("polynomial degree exceeds the CLI cap of " +
                                std::to_string(kDegreeCap) + ": '" + s + "'");
  return f;
}

IntIdeal parse_ideal_spec(std::optional<long> p, const std::string& s) {
  size_t semi = s.find(';');
  std::string head = s.substr(0, semi == std::string::npos ? s.size() : semi);
  Int m;
  try {
    m = Int(head);
  } catch (const std::exception&) {
    throw std::invalid_argument("ideal spec: bad constant generator '" + head +
                                "'");
  }
  std::vector<GenPoly> gens;
  if (semi != std::string::npos) {
    std::string rest = s.substr(semi + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      if (isspace(static_cast<unsigned char>(rest[pos])) || rest[pos] == ',') {
        ++pos;
        continue;
      }
      if (rest[pos] != '[')
        throw std::invalid_argument(
            std::string("ideal spec: expected '[' at '") + rest[pos] + "'");
      size_t close = rest.find(']', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("ideal spec: unterminated polynomial");
      gens.emplace_back(parse_poly_checked(rest.substr(pos, close - pos + 1)));
      pos = close + 1;
    }
  }
  return IntIdeal(p, std::move(m), std::move(gens));
}

StepClass parse_class_values(long p, const std::string& csv) {
  std::vector<long> values;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("class values: empty entry");
    try {
      size_t used = 0;
      long v = std::stol(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("class values: bad integer '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  if (!cur.empty()) flush();
  int level = 0;
  long size = 1;
  while (size < static_cast<long>(values.size())) {
    size *= p;
    ++level;
  }
  if (size != static_cast<long>(values.size()))
    throw std::invalid_argument("class values: need p^n entries, got " +
                                std::to_string(values.size()));
  return StepClass(p, level, std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json spectra_analysis(const AlmDedModel& model) {
  ordered_json results;
  results["assumptions"] = ordered_json::array({kModelingAxiom});
  results["model"] = model.name;
  results["depth"] = model.depth;
  DerivedSequenceResult derived = derived_sequence(model);
  results["derived_sequence"] = derived_json(derived);
  results["space_rank"] = PointSet::full_set(model.depth).cb_rank();
  results["isolated_points"] =
      point_set_json(PointSet::full_set(model.depth).isolated());
  PruferSplitReport split = prufer_split(model);
  ordered_json prufer;
  prufer["x_nontrivial_int"] = point_set_json(split.x);
  prufer["x_closure"] = point_set_json(split.x_closure);
  prufer["isomorphism"] = "picpol(D) = picpol(D, T) for T supported on the closure";
  prufer["vanishing"] = point_set_json(split.vanishing);
  results["prufer_split"] = prufer;
  return results;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"localize", "decide the localization criterion for one polynomial",
       {"criterion_holds", "member_int_extension", "member_int_of_T",
        "conductor", "value_module", "zmodule_generator", "ideal_colon",
        "ideal_eq", "extend", "val_p", "to_binomial", "from_binomial"}},
      {"localize-oracle", "seeded criterion sweep over one overring",
       {"noetherian_oracle", "criterion_holds"}},
      {"pic class-of", "class of an ideal of Int(Z_(p))",
       {"class_of_ideal", "value_function", "step_canonical", "is_int_valued"}},
      {"pic realize", "ideal with a prescribed class",
       {"realize_class", "class_of_ideal"}},
      {"pic add", "sum of two classes",
       {"class_add", "refine", "step_canonical"}},
      {"global pi-theta", "extension classes of an ideal of Int(Z)",
       {"pi_theta", "support", "class_of_ideal"}},
      {"global globalize", "preimage ideal of a local class vector",
       {"globalize", "realize_class", "int_ideal_mul", "pi_theta"}},
      {"global exactness", "seeded surjectivity and kernel checks",
       {"exactness_report", "globalize", "pi_theta", "divisorially_principal",
        "class_neg"}},
      {"spectra analyze", "derived sequence and split of a model",
       {"derived_sequence", "cb_derivative", "isolated", "cb_rank",
        "closure_inverse", "prufer_split", "int_trivial_point"}},
      {"spectra decompose", "pointwise hypotheses and decomposition",
       {"picpol_decomposition", "derived_sequence", "localization_report"}},
      {"spectra example-weakjaff", "the pointed weak Jaffard example",
       {"build_example_weakjaff", "derived_sequence", "localization_report",
        "picpol_decomposition"}},
      {"verify-all", "run every acceptance and invariant suite",
       {"evaluate", "fixed_divisor", "intersection_transfer_check",
        "ball_indicator", "ideal_mul"}},
  };
  return table;
}

const std::vector<std::string>& operation_list() {
  static const std::vector<std::string> ops = {
      // exactnum
      "val_p", "zmodule_generator", "ideal_mul", "ideal_colon", "ideal_eq",
      "extend",
      // intpoly
      "to_binomial", "from_binomial", "evaluate", "is_int_valued",
      "value_module", "conductor", "fixed_divisor",
      // localize
      "member_int_extension", "member_int_of_T", "criterion_holds",
      "noetherian_oracle", "intersection_transfer_check",
      // picdvr
      "step_canonical", "class_add", "class_neg", "refine", "ball_indicator",
      "value_function", "class_of_ideal", "realize_class", "int_ideal_mul",
      // globalpic
      "support", "pi_theta", "globalize", "divisorially_principal",
      "exactness_report",
      // spectra
      "isolated", "cb_derivative", "cb_rank", "closure_inverse",
      "derived_sequence", "int_trivial_point", "localization_report",
      "prufer_split", "picpol_decomposition", "build_example_weakjaff"};
  return ops;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact integer-valued polynomial calculator"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // localize
  auto* localize_cmd =
      app.add_subcommand("localize", "decide the localization criterion");
  std::string poly_spec, overring_spec = "Z";
  localize_cmd->add_option("--poly", poly_spec, "power-basis coefficients")
      ->required();
  localize_cmd->add_option("--overring", overring_spec, "overring spec")
      ->required();

  // localize-oracle
  auto* oracle_cmd =
      app.add_subcommand("localize-oracle", "seeded criterion sweep");
  SampleSpec oracle_spec;
  std::string oracle_overring = "Z";
  std::uint64_t oracle_seed = 0;
  oracle_cmd->add_option("--seed", oracle_seed, "sample seed")->required();
  oracle_cmd->add_option("--count", oracle_spec.count, "sample count");
  oracle_cmd->add_option("--degree", oracle_spec.degree_bound, "degree bound");
  oracle_cmd->add_option("--height", oracle_spec.height_bound, "height bound");
  oracle_cmd->add_option("--overring", oracle_overring, "overring spec")
      ->required();

  // pic
  auto* pic_cmd = app.add_subcommand("pic", "local class group");
  pic_cmd->require_subcommand(1);
  auto* class_of_cmd = pic_cmd->add_subcommand("class-of", "class of an ideal");
  long pic_p = 2;
  std::string ideal_spec;
  class_of_cmd->add_option("--p", pic_p, "prime")->required();
  class_of_cmd->add_option("--ideal", ideal_spec, "\"<m>; [poly], [poly]\"")
      ->required();
  auto* realize_cmd = pic_cmd->add_subcommand("realize", "realize a class");
  long realize_p = 2;
  int realize_level = 0;
  std::string realize_values;
  realize_cmd->add_option("--p", realize_p, "prime")->required();
  realize_cmd->add_option("--level", realize_level, "level")->required();
  realize_cmd->add_option("--values", realize_values, "comma separated values")
      ->required();
  auto* add_cmd = pic_cmd->add_subcommand("add", "sum of two classes");
  long add_p = 2;
  std::string add_a, add_b;
  add_cmd->add_option("--p", add_p, "prime")->required();
  add_cmd->add_option("--a", add_a, "values of the first class")->required();
  add_cmd->add_option("--b", add_b, "values of the second class")->required();

  // global
  auto* global_cmd = app.add_subcommand("global", "globalization over Z");
  global_cmd->require_subcommand(1);
  auto* pitheta_cmd =
      global_cmd->add_subcommand("pi-theta", "extension classes");
  std::string global_ideal_spec;
  pitheta_cmd->add_option("--ideal", global_ideal_spec, "\"<m>; [poly], ...\"")
      ->required();
  auto* globalize_cmd =
      global_cmd->add_subcommand("globalize", "preimage of a class vector");
  std::string vector_spec;
  globalize_cmd->add_option("--vector", vector_spec, "\"2:[0,1];3:[0,0,1]\"")
      ->required();
  auto* exactness_cmd =
      global_cmd->add_subcommand("exactness", "exact sequence checks");
  SampleSpec exactness_spec;
  exactness_spec.count = 100;
  std::uint64_t exactness_seed = 0;
  exactness_cmd->add_option("--seed", exactness_seed, "sample seed")
      ->required();
  exactness_cmd->add_option("--count", exactness_spec.count, "sample count");

  // spectra
  auto* spectra_cmd = app.add_subcommand("spectra", "almost Dedekind models");
  spectra_cmd->require_subcommand(1);
  auto* analyze_cmd = spectra_cmd->add_subcommand("analyze", "derived sequence");
  std::string model_path;
  analyze_cmd->add_option("model", model_path, "model JSON file")->required();
  auto* decompose_cmd =
      spectra_cmd->add_subcommand("decompose", "decomposition report");
  std::string decompose_path;
  decompose_cmd->add_option("model", decompose_path, "model JSON file")
      ->required();
  auto* example_cmd = spectra_cmd->add_subcommand(
      "example-weakjaff", "the pointed weak Jaffard example");

  // verify-all
  auto* verify_cmd =
      app.add_subcommand("verify-all", "run every acceptance suite");
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("--seed", verify_seed, "suite seed")->required();

  for (CLI::App* sub :
       {localize_cmd, oracle_cmd, pic_cmd, class_of_cmd, realize_cmd, add_cmd,
        global_cmd, pitheta_cmd, globalize_cmd, exactness_cmd, spectra_cmd,
        analyze_cmd, decompose_cmd, example_cmd, verify_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Emitter emit;
  emit.table = format == "table";
  emit.out = &out;

  try {
    if (*localize_cmd) {
      emit.command = "localize";
      BinPoly f = parse_poly_checked(poly_spec);
      OverringZ t = OverringZ::parse(overring_spec);
      if (f.is_zero())
        throw std::invalid_argument("the zero polynomial has no verdict");
      emit.inputs["poly"] = poly_to_string(f);
      emit.inputs["overring"] = t.to_string();
      CriterionVerdict v = criterion_holds(f, t);
      emit.results["lhs"] = ideal_json(v.lhs);
      emit.results["rhs"] = ideal_json(v.rhs);
      emit.results["equal"] = v.equal;
      emit.results["member_int_extension"] = member_int_extension(f, t);
      emit.results["member_int_of_T"] = member_int_of_T(f, t);
      return emit.emit(v.equal);
    }
    if (*oracle_cmd) {
      emit.command = "localize-oracle";
      oracle_spec.seed = oracle_seed;
      OverringZ t = OverringZ::parse(oracle_overring);
      emit.inputs["overring"] = t.to_string();
      emit.inputs["seed"] = oracle_spec.seed;
      emit.inputs["count"] = oracle_spec.count;
      emit.inputs["degree"] = oracle_spec.degree_bound;
      emit.inputs["height"] = oracle_spec.height_bound;
      OracleReport report = noetherian_oracle(oracle_spec, t);
      emit.results["pass"] = report.pass;
      emit.results["fail"] = report.fail;
      ordered_json bad = ordered_json::array();
      for (const CriterionVerdict& v : report.counterexamples) {
        ordered_json e;
        e["poly"] = poly_to_string(v.f);
        e["lhs"] = ideal_json(v.lhs);
        e["rhs"] = ideal_json(v.rhs);
        bad.push_back(e);
      }
      emit.results["counterexamples"] = bad;
      return emit.emit(report.fail == 0);
    }
    if (*class_of_cmd) {
      emit.command = "pic class-of";
      IntIdeal ideal = parse_ideal_spec(pic_p, ideal_spec);
      emit.inputs["p"] = pic_p;
      emit.inputs["ideal"] = int_ideal_json(ideal);
      StepClass c = class_of_ideal(ideal);
      emit.results["class"] = class_json(c);
      emit.results["value_function"] = value_function(ideal, c.level());
      return emit.emit(true);
    }
    if (*realize_cmd) {
      emit.command = "pic realize";
      long expected = 1;
      for (int k = 0; k < realize_level; ++k) expected *= realize_p;
      long given = realize_values.empty()
                       ? 0
                       : 1 + std::count(realize_values.begin(),
                                        realize_values.end(), ',');
      if (given != expected)
        throw std::invalid_argument(
            "level " + std::to_string(realize_level) + " needs " +
            std::to_string(expected) + " values, got " + std::to_string(given));
      StepClass sigma = parse_class_values(realize_p, realize_values);
      if (sigma.level() != realize_level)
        emit.results["note"] =
            "values reduce to level " + std::to_string(sigma.level());
      emit.inputs["p"] = realize_p;
      emit.inputs["class"] = class_json(sigma);
      IntIdeal ideal = realize_class(sigma);
      emit.results["ideal"] = int_ideal_json(ideal);
      bool roundtrip = class_of_ideal(ideal) == sigma;
      emit.results["class_roundtrip"] = roundtrip;
      return emit.emit(roundtrip);
    }
    if (*add_cmd) {
      emit.command = "pic add";
      StepClass a = parse_class_values(add_p, add_a);
      StepClass b = parse_class_values(add_p, add_b);
      emit.inputs["a"] = class_json(a);
      emit.inputs["b"] = class_json(b);
      emit.results["sum"] = class_json(class_add(a, b));
      return emit.emit(true);
    }
    if (*pitheta_cmd) {
      emit.command = "global pi-theta";
      IntIdeal ideal = parse_ideal_spec(std::nullopt, global_ideal_spec);
      emit.inputs["ideal"] = int_ideal_json(ideal);
      emit.results["support"] = support(ideal);
      emit.results["pi_theta"] = vector_json(pi_theta(ideal));
      return emit.emit(true);
    }
    if (*globalize_cmd) {
      emit.command = "global globalize";
      LocalClassVector v = LocalClassVector::parse(vector_spec);
      emit.inputs["vector"] = vector_json(v);
      IntIdeal ideal = globalize(v);
      emit.results["ideal"] = int_ideal_json(ideal);
      bool roundtrip = pi_theta(ideal) == v;
      emit.results["pi_theta_roundtrip"] = roundtrip;
      return emit.emit(roundtrip);
    }
    if (*exactness_cmd) {
      emit.command = "global exactness";
      exactness_spec.seed = exactness_seed;
      emit.inputs["seed"] = exactness_spec.seed;
      emit.inputs["count"] = exactness_spec.count;
      ExactnessReport report = exactness_report(exactness_spec);
      ordered_json surj;
      surj["pass"] = report.surjectivity_pass;
      surj["fail"] = report.surjectivity_fail;
      emit.results["surjectivity"] = surj;
      ordered_json kernel;
      kernel["pass"] = report.kernel_pass;
      kernel["fail"] = report.kernel_fail;
      emit.results["kernel"] = kernel;
      ordered_json samples = ordered_json::array();
      for (const ExactnessSample& s : report.samples) {
        ordered_json e;
        e["kind"] = s.kind;
        e["sample"] = s.description;
        e["pass"] = s.pass;
        samples.push_back(e);
      }
      emit.results["samples"] = samples;
      return emit.emit(report.surjectivity_fail == 0 && report.kernel_fail == 0);
    }
    if (*analyze_cmd) {
      emit.command = "spectra analyze";
      AlmDedModel model = model_from_json_text(read_file(model_path));
      emit.inputs["model_file"] = model_path;
      emit.results = spectra_analysis(model);
      return emit.emit(true);
    }
    if (*decompose_cmd) {
      emit.command = "spectra decompose";
      AlmDedModel model = model_from_json_text(read_file(decompose_path));
      emit.inputs["model_file"] = decompose_path;
      emit.results["assumptions"] = ordered_json::array({kModelingAxiom});
      DecompositionReport report = picpol_decomposition(model);
      emit.results["derived_sequence"] = derived_json(report.derived);
      emit.results["report"] = decomposition_json(report);
      return emit.emit(!report.violation.has_value());
    }
    if (*example_cmd) {
      emit.command = "spectra example-weakjaff";
      AlmDedModel model = build_example_weakjaff();
      emit.results = spectra_analysis(model);
      ordered_json loc;
      loc["root"] = to_string(localization_report(model, {}));
      loc["leaf"] = to_string(localization_report(model, {0}));
      emit.results["localization_report"] = loc;
      emit.results["decomposition"] =
          decomposition_json(picpol_decomposition(model));
      emit.results["model_json"] =
          ordered_json::parse(model_to_json_text(model));
      return emit.emit(true);
    }
    if (*verify_cmd) {
      emit.command = "verify-all";
      emit.inputs["seed"] = verify_seed;
      bool all = true;
      ordered_json criteria = ordered_json::array();
      for (const auto& r : verify::run_all(verify_seed)) {
        ordered_json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        criteria.push_back(e);
        all = all && r.pass;
      }
      emit.results["criteria"] = criteria;
      emit.results["all_pass"] = all;
      return emit.emit(all);
    }
  } catch (const precision_cap_error& e) {
    err << "computation aborted: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ivp::cli
