#pragma once

/**
 * @file cli.hpp
 * @brief The torsim command surface: job parsing, execution and report output.
 *
 * A job is {command, payload, options}. Executing a job yields a report
 * {job, anchor, status, result}; `replay` re-executes the job embedded in a
 * report and compares results.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "torsim/suites.hpp"

namespace torsim::cli {

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_order = 200;
  std::size_t max_dim = 3;
  std::size_t count = 500;
  bool json_output = false;
  bool no_prune = false;

  Json to_json() const {
    return Json{{"seed", seed},           {"max_order", max_order}, {"max_dim", max_dim},
                {"count", count},         {"json_output", json_output}, {"no_prune", no_prune}};
  }

  static Options from_json(const Json& j) {
    json::check_fields(j, "options", {}, {"seed", "max_order", "max_dim", "count", "json_output", "no_prune"});
    Options o;
    auto flag = [&](const char* key, bool& dst) {
      if (!j.contains(key)) return;
      if (!j[key].is_boolean()) throw InputError(std::string("option ") + key + " must be a boolean");
      dst = j[key].get<bool>();
    };
    if (j.contains("seed")) o.seed = static_cast<std::uint64_t>(json::to_integer(j["seed"], "seed"));
    if (j.contains("max_order")) o.max_order = json::to_size(j["max_order"], "max_order");
    if (j.contains("max_dim")) o.max_dim = json::to_size(j["max_dim"], "max_dim");
    if (j.contains("count")) o.count = json::to_size(j["count"], "count");
    flag("json_output", o.json_output);
    flag("no_prune", o.no_prune);
    return o;
  }

  ModuleOptions module() const {
    ModuleOptions m;
    m.max_order = max_order;
    m.prune = !no_prune;
    return m;
  }
  EngineOptions engine() const { return {!no_prune, true}; }
  QuiverCategory quiver() const { return QuiverCategory{quiver::Bound{max_dim}}; }
  SuiteOptions suite() const { return {seed, max_order, max_dim, count, !no_prune}; }
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"check",          "torsion-parts", "ass",    "radical",
                                             "mccoy",          "hom-conormal",  "radical-lemma", "verify"};
  return c;
}

namespace anchors {
inline const char* kAss = "Cor: torsion-simple iff |Ass M| = 1";
inline const char* kFiniteLength = "Prop: finite length torsion-simple iff unique simple factor";
inline const char* kParts = "Def: torsion parts t x = {w <= x : Hom(w, x/w) = 0}";
inline const char* kRadical = "Thm: torsion radical as iterated trace";
inline const char* kCoradical = "Prop: torsion-free coradical as iterated reject";
inline const char* kMcCoy = "Thm: nonzero nullvector iff mcrk A < columns";
inline const char* kMorphisms = "Prop: Hom_S(I, S/I) != 0";
inline const char* kRadicalLemma = "Lemma: dI in I^2 implies d in rad I over a domain";
}  // namespace anchors

struct Report {
  Json job;
  std::string anchor;
  std::string status = "ok";  // "ok" or "violation"
  Json result;

  Json to_json() const { return Json{{"job", job}, {"anchor", anchor}, {"status", status}, {"result", result}}; }
};

// ---------------------------------------------------------------------------
// Command implementations
// ---------------------------------------------------------------------------

namespace detail {

/// Either {"module": M} or {"rep": X}; exactly one.
inline bool is_module_payload(const Json& p, const std::string& what) {
  json::require_object(p, what);
  bool m = p.contains("module"), r = p.contains("rep");
  if (m == r) throw InputError(what + " needs exactly one of \"module\" or \"rep\"");
  return m;
}

inline Json check(const Json& p, const Options& o, std::string& anchor) {
  json::check_fields(p, "check payload", {}, {"module", "rep"});
  Json r;
  if (is_module_payload(p, "check payload")) {
    anchor = anchors::kAss;
    auto M = json::parse_module(p["module"]);
    auto d = canonical_decomposition(M);
    auto s = module_is_torsion_simple(M, o.module());
    r["object"] = "module";
    r["decomposition"] = json::decomposition_json(d);
    r["verdict"] = s.verdict;
    r["method"] = s.method;
    r["type"] = s.type ? Json(*s.type) : Json(nullptr);
    r["ass"] = json::prime_set_json(s.ass);
    r["witness"] = s.witness ? json::subobject_json(*s.witness) : Json(nullptr);
    if (d.is_finite()) {
      auto u = module_unique_simple_factor(M);
      r["unique_simple_factor"] = Json{{"unique", u.unique}, {"factor", u.factor ? json::from_integer(*u.factor) : Json(nullptr)}};
    }
  } else {
    anchor = anchors::kFiniteLength;
    auto X = json::parse_rep(p["rep"]);
    auto cat = o.quiver();
    auto s = is_torsion_simple(cat, X, o.engine());
    auto u = unique_simple_factor(cat, X);
    r["object"] = "rep";
    r["dims"] = X.dims();
    r["verdict"] = s.verdict;
    r["method"] = s.method;
    r["type"] = s.verdict && u.factor ? Json(*u.factor) : Json(nullptr);
    r["witness"] = s.witness ? json::subrep_json(*s.witness) : Json(nullptr);
    r["single_vertex_criterion"] = single_vertex_criterion(X).verdict;
    r["unique_simple_factor"] = Json{{"unique", u.unique}, {"factor", u.factor ? Json(*u.factor) : Json(nullptr)}};
  }
  return r;
}

inline Json torsion_parts_cmd(const Json& p, const Options& o, std::string& anchor) {
  json::check_fields(p, "torsion-parts payload", {}, {"module", "rep"});
  anchor = anchors::kParts;
  Json r, parts = Json::array();
  if (is_module_payload(p, "torsion-parts payload")) {
    auto M = json::parse_module(p["module"]);
    for (const auto& w : module_torsion_parts(M, o.module())) parts.push_back(json::subobject_json(w));
    r["object"] = "module";
  } else {
    auto X = json::parse_rep(p["rep"]);
    for (const auto& w : torsion_parts(o.quiver(), X, o.engine())) parts.push_back(json::subrep_json(w));
    r["object"] = "rep";
  }
  r["count"] = parts.size();
  r["parts"] = parts;
  return r;
}

inline Json ass_cmd(const Json& p, const Options&, std::string& anchor) {
  json::check_fields(p, "ass payload", {"module"});
  anchor = anchors::kAss;
  auto M = json::parse_module(p["module"]);
  auto ass = associated_primes(M);
  Json r;
  r["decomposition"] = json::decomposition_json(canonical_decomposition(M));
  r["ass"] = json::prime_set_json(ass);
  r["singleton"] = ass.size() == 1;
  return r;
}

inline Json radical_cmd(const Json& p, const Options& o, std::string& anchor) {
  json::check_fields(p, "radical payload", {"set"}, {"module", "rep", "mode"});
  std::string mode = p.contains("mode") ? json::to_string(p["mode"], "mode") : "generated";
  if (mode != "generated" && mode != "cogenerated") throw InputError("mode must be \"generated\" or \"cogenerated\"");
  anchor = mode == "generated" ? anchors::kRadical : anchors::kCoradical;
  const auto& set = json::to_array(p["set"], "set");
  Json r;
  r["mode"] = mode;
  if (is_module_payload(p, "radical payload")) {
    auto M = json::parse_module(p["module"]);
    std::vector<PresentedModule> S;
    for (const auto& s : set) {
      S.push_back(json::parse_module(s));
      if (!same_ring(S.back().ring(), M.ring())) throw InputError("set members must share the module's ring");
    }
    if (mode == "generated") {
      std::size_t it = 0;
      auto t = module_radical_generated(S, M, o.module(), &it);
      r["radical"] = json::subobject_json(t);
      r["iterations"] = it;
      r["quotient"] = json::decomposition_json(canonical_decomposition(quotient(M, t)));
    } else {
      auto c = module_coradical_cogenerated(S, M, o.module());
      r["torsion"] = json::subobject_json(c.torsion);
      r["coradical"] = json::decomposition_json(canonical_decomposition(c.coradical));
    }
  } else {
    auto X = json::parse_rep(p["rep"]);
    std::vector<QuiverRep> S;
    for (const auto& s : set) {
      S.push_back(json::parse_rep(s));
      quiver::require_compatible(S.back(), X);
    }
    auto cat = o.quiver();
    if (mode == "generated") {
      std::size_t it = 0;
      auto t = torsion_radical_generated(cat, S, X, &it);
      r["radical"] = json::subrep_json(t);
      r["iterations"] = it;
      r["quotient_dims"] = quiver::quotient_rep(X, t).object.dims();
    } else {
      auto c = torsionfree_coradical_cogenerated(cat, S, X);
      r["torsion"] = json::subrep_json(c.torsion);
      r["coradical"] = json::rep_json(c.coradical);
    }
  }
  return r;
}

inline Json mccoy_cmd(const Json& p, const Options&, std::string& anchor) {
  json::check_fields(p, "mccoy payload", {"ring", "matrix", "mode"}, {"method"});
  anchor = anchors::kMcCoy;
  auto R = json::parse_ring(p["ring"]);
  auto A = json::parse_ring_matrix(R, p["matrix"]);
  std::string mode = json::to_string(p["mode"], "mode");
  Json r;
  r["rows"] = A.rows();
  r["cols"] = A.cols();
  if (mode == "rank") {
    auto prof = mccoy_rank(A);
    Json ideals = Json::array(), ann = Json::array();
    for (std::size_t k = 0; k < prof.ideals.size(); ++k) {
      ideals.push_back(json::ideal_json(prof.ideals[k]));
      ann.push_back(static_cast<bool>(prof.annihilator_is_zero[k]));
    }
    r["mccoy_rank"] = prof.mccoy_rank;
    r["determinantal_ideals"] = ideals;
    r["annihilator_is_zero"] = ann;
    return r;
  }
  if (mode != "nullvector") throw InputError("mccoy mode must be \"rank\" or \"nullvector\"");
  std::string method = p.contains("method") ? json::to_string(p["method"], "method") : (R->is_finite() ? "both" : "theorem");
  if (method != "both" && method != "theorem" && method != "exhaustive")
    throw InputError("mccoy method must be \"theorem\", \"exhaustive\" or \"both\"");
  if (method != "theorem" && !R->is_finite())
    throw PreconditionError("exhaustive nullvector search needs a finite ring, got " + R->describe());
  r["method"] = method;
  std::optional<bool> th, ex;
  if (method != "exhaustive") {
    auto t = nullvector_theorem(A);
    th = t.exists;
    r["mccoy_rank"] = *t.mccoy_rank;
    r["theorem_exists"] = t.exists;
  }
  if (method != "theorem") {
    auto e = nullvector_exhaustive(A);
    ex = e.exists;
    r["exhaustive_exists"] = e.exists;
    r["vector"] = e.vector ? json::elements_json(*e.vector) : Json(nullptr);
  }
  r["exists"] = th ? *th : *ex;
  if (th && ex) r["agree"] = *th == *ex;
  return r;
}

inline Json hom_conormal_cmd(const Json& p, const Options&, std::string& anchor) {
  json::check_fields(p, "hom-conormal payload", {"ring", "ideal"});
  anchor = anchors::kMorphisms;
  auto R = json::parse_ring(p["ring"]);
  auto I = json::parse_ideal(R, p["ideal"]);
  auto rep = hom_I_to_quotient(I);
  const auto& pr = rep.presentation;
  Json r;
  r["ideal"] = json::ideal_json(pr.ideal);
  r["quotient_ring"] = json::ring_json(*pr.quotient.ring);
  r["matrix"] = json::ring_matrix_json(pr.matrix);
  r["shape"] = Json{{"n", pr.matrix.rows()}, {"m", pr.matrix.cols()}, {"convention", "M is n x m, generators index rows; Hom = ker M^t"}};
  r["method"] = rep.method;
  r["free_rank"] = rep.free_rank ? Json(*rep.free_rank) : Json(nullptr);
  r["torsion_orders"] = json::vector_json(rep.torsion_orders);
  r["fp_dimension"] = rep.fp_dimension ? Json(*rep.fp_dimension) : Json(nullptr);
  r["transpose_mccoy_rank"] = rep.transpose_mccoy_rank ? Json(*rep.transpose_mccoy_rank) : Json(nullptr);
  r["domain"] = R->is_domain();
  r["verdict"] = rep.hom_nonzero;
  return r;
}

inline Json radical_lemma_cmd(const Json& p, const Options&, std::string& anchor) {
  json::check_fields(p, "radical-lemma payload", {"ring", "ideal", "d"});
  anchor = anchors::kRadicalLemma;
  auto R = json::parse_ring(p["ring"]);
  auto I = json::parse_ideal(R, p["ideal"]);
  auto d = parse_element(R, p["d"].is_string() ? p["d"].get<std::string>() : json::to_integer(p["d"], "d").str());
  auto rep = check_radical_lemma(I, d);
  Json r;
  r["premise"] = rep.premise;
  r["conclusion"] = rep.conclusion;
  r["violation"] = rep.violation();
  r["domain"] = rep.domain;
  r["expected_for_non_domain"] = rep.expected_for_non_domain();
  return r;
}

inline Json verify_cmd(const Json& p, const Options& o, std::string& anchor, std::string& status) {
  json::check_fields(p, "verify payload", {"suite"});
  auto rep = suites::run(json::to_string(p["suite"], "suite"), o.suite());
  anchor = rep.anchor;
  if (!rep.passed()) status = "violation";
  return rep.to_json();
}

}  // namespace detail

inline Json make_job(const std::string& command, const Json& payload, const Options& o) {
  return Json{{"command", command}, {"payload", payload}, {"options", o.to_json()}};
}

/// Executes a job document. Library errors propagate as exceptions.
inline Report execute(const Json& job) {
  json::check_fields(job, "job", {"command", "payload"}, {"options"});
  std::string command = json::to_string(job["command"], "command");
  Options o = job.contains("options") ? Options::from_json(job["options"]) : Options{};
  const Json& p = job["payload"];
  Report rep;
  rep.job = make_job(command, p, o);
  if (command == "check") {
    rep.result = detail::check(p, o, rep.anchor);
  } else if (command == "torsion-parts") {
    rep.result = detail::torsion_parts_cmd(p, o, rep.anchor);
  } else if (command == "ass") {
    rep.result = detail::ass_cmd(p, o, rep.anchor);
  } else if (command == "radical") {
    rep.result = detail::radical_cmd(p, o, rep.anchor);
  } else if (command == "mccoy") {
    rep.result = detail::mccoy_cmd(p, o, rep.anchor);
  } else if (command == "hom-conormal") {
    rep.result = detail::hom_conormal_cmd(p, o, rep.anchor);
  } else if (command == "radical-lemma") {
    rep.result = detail::radical_lemma_cmd(p, o, rep.anchor);
  } else if (command == "verify") {
    rep.result = detail::verify_cmd(p, o, rep.anchor, rep.status);
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

/// Human-readable two-column table of the top-level result fields.
inline std::string render_table(const Report& r) {
  std::ostringstream os;
  std::vector<std::pair<std::string, std::string>> rows;
  rows.push_back({"command", r.job["command"].get<std::string>()});
  rows.push_back({"anchor", r.anchor});
  rows.push_back({"status", r.status});
  for (auto it = r.result.begin(); it != r.result.end(); ++it) rows.push_back({it.key(), render_value(it.value())});
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

inline int exit_code_for(const std::exception_ptr& e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const UnsupportedRingError& x) {
    err << "torsim: unsupported ring: " << x.what() << '\n';
    return 3;
  } catch (const ContradictionError& x) {
    err << "torsim: property violation: " << x.what() << '\n';
    return 1;
  } catch (const InputError& x) {
    err << "torsim: input error: " << x.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& x) {
    err << "torsim: input error: malformed JSON: " << x.what() << '\n';
    return 2;
  } catch (const std::exception& x) {
    err << "torsim: error: " << x.what() << '\n';
    return 2;
  }
}

/// "@path" reads a file, "-" reads stdin, anything else is inline JSON.
inline Json read_json_argument(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw InputError("cannot read " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text = arg;
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline void emit(const Report& r, const Options& o, const std::string& out_path, std::ostream& out) {
  Json j = r.to_json();
  if (o.json_output)
    out << j.dump(2) << '\n';
  else
    out << render_table(r);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << j.dump(2) << '\n';
  }
}

/// Entry point shared by the binary and the tests. args excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"torsim: torsion-simple objects, torsion parts and McCoy ranks", "torsim"};
  app.require_subcommand(1, 1);
  Options o;
  std::string out_path;
  app.add_option("--seed", o.seed, "seed for randomised suites")->capture_default_str();
  app.add_option("--max-order", o.max_order, "largest module order enumerated")->capture_default_str();
  app.add_option("--max-dim", o.max_dim, "largest per-vertex dimension enumerated")->capture_default_str();
  app.add_option("--count", o.count, "instances per modulus in the mccoy suite")->capture_default_str();
  app.add_flag("--json", o.json_output, "machine-readable JSON report");
  app.add_flag("--no-prune", o.no_prune, "disable endomorphism-stability pruning");
  app.add_option("--out", out_path, "also write the JSON report to this path");

  std::string payload_arg, module_arg, rep_arg, mode_arg, suite_arg, report_arg;
  auto object_cmd = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("payload", payload_arg, "JSON payload, @file or -");
    s->add_option("--module", module_arg, "module JSON");
    s->add_option("--rep", rep_arg, "representation JSON");
    return s;
  };
  auto* c_check = object_cmd("check", "torsion-simplicity verdict with witness");
  auto* c_parts = object_cmd("torsion-parts", "all torsion parts in canonical order");
  auto* c_ass = object_cmd("ass", "associated primes of a Z-module");
  auto* c_rad = app.add_subcommand("radical", "radical generated or coradical cogenerated by a set");
  c_rad->fallthrough();
  c_rad->add_option("payload", payload_arg, "JSON payload, @file or -")->required();
  auto* c_mccoy = app.add_subcommand("mccoy", "McCoy rank or nullvector existence");
  c_mccoy->fallthrough();
  c_mccoy->add_option("mode", mode_arg, "rank | nullvector")->required()->check(CLI::IsMember({"rank", "nullvector"}));
  c_mccoy->add_option("payload", payload_arg, "JSON payload, @file or -")->required();
  auto* c_hom = app.add_subcommand("hom-conormal", "Hom_S(I, S/I) through the conormal presentation");
  c_hom->fallthrough();
  c_hom->add_option("payload", payload_arg, "JSON payload, @file or -")->required();
  auto* c_lemma = app.add_subcommand("radical-lemma", "check dI in I^2 against d in rad I");
  c_lemma->fallthrough();
  c_lemma->add_option("payload", payload_arg, "JSON payload, @file or -")->required();
  auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
  c_verify->fallthrough();
  std::vector<std::string> names;
  for (const auto& [n, f] : suites::registry()) names.push_back(n);
  c_verify->add_option("suite", suite_arg, "suite name")->required()->check(CLI::IsMember(names));
  auto* c_replay = app.add_subcommand("replay", "re-run the job inside a JSON report and compare");
  c_replay->fallthrough();
  c_replay->add_option("report", report_arg, "report JSON, @file or -")->required();

  std::vector<std::string> argv_store = {"torsim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "torsim: input error: " << e.what() << '\n';
    return 2;
  }

  try {
    worker_count();  // validates TORSIM_THREADS up front
    auto object_payload = [&]() -> Json {
      int given = !payload_arg.empty() + !module_arg.empty() + !rep_arg.empty();
      if (given != 1) throw InputError("give exactly one of a payload, --module or --rep");
      if (!module_arg.empty()) return Json{{"module", read_json_argument(module_arg, in)}};
      if (!rep_arg.empty()) return Json{{"rep", read_json_argument(rep_arg, in)}};
      return read_json_argument(payload_arg, in);
    };

    if (c_replay->parsed()) {
      Json report = read_json_argument(report_arg, in);
      json::check_fields(report, "report", {"job", "anchor", "status", "result"}, {"replay"});
      Report again = execute(report["job"]);
      Json fresh = again.to_json();
      bool match = fresh["job"] == report["job"] && fresh["anchor"] == report["anchor"] &&
                   fresh["status"] == report["status"] && fresh["result"] == report["result"];
      Report shown = again;
      shown.result = Json{{"match", match}, {"command", report["job"]["command"]}};
      if (!match) shown.status = "violation";
      shown.anchor = again.anchor;
      emit(shown, o, out_path, out);
      if (!match) err << "torsim: replay mismatch\n";
      return match ? 0 : 1;
    }

    std::string command;
    Json payload;
    if (c_check->parsed()) {
      command = "check";
      payload = object_payload();
    } else if (c_parts->parsed()) {
      command = "torsion-parts";
      payload = object_payload();
    } else if (c_ass->parsed()) {
      command = "ass";
      payload = object_payload();
    } else if (c_rad->parsed()) {
      command = "radical";
      payload = read_json_argument(payload_arg, in);
    } else if (c_mccoy->parsed()) {
      command = "mccoy";
      payload = read_json_argument(payload_arg, in);
      json::require_object(payload, "mccoy payload");
      if (payload.contains("mode") && payload["mode"] != mode_arg)
        throw InputError("payload mode disagrees with the command line mode");
      payload["mode"] = mode_arg;
    } else if (c_hom->parsed()) {
      command = "hom-conormal";
      payload = read_json_argument(payload_arg, in);
    } else if (c_lemma->parsed()) {
      command = "radical-lemma";
      payload = read_json_argument(payload_arg, in);
    } else if (c_verify->parsed()) {
      command = "verify";
      payload = Json{{"suite", suite_arg}};
    }
    Report rep = execute(make_job(command, payload, o));
    emit(rep, o, out_path, out);
    return rep.status == "ok" ? 0 : 1;
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

}  // namespace torsim::cli
