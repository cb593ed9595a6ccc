#include "symdef/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symdef/asymptotics.hpp"
#include "symdef/errors.hpp"
#include "symdef/graph_io.hpp"
#include "symdef/sdefect.hpp"

namespace symdef::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kEnvMaxGens = "SYMDEF_MAX_GENS";

struct Report {
  Json input = Json::object();
  Json results = Json::array();
  Json warnings = Json::array();
  int exit_code = kOk;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError("invalid " + what + " '" + text + "'");
  }
  if (used != text.size()) throw InputError("invalid " + what + " '" + text + "'");
  return value;
}

Json range_json(const Range& r) { return Json::array({r.lo, r.hi}); }

Range checked_m_range(const RunConfig& cfg, Range fallback) {
  const Range r = cfg.m_range.value_or(fallback);
  if (r.lo < 1) throw InputError("m must be at least 1");
  if (r.hi > static_cast<std::int64_t>(cfg.caps.max_m)) {
    throw InputError("m = " + std::to_string(r.hi) + " exceeds the cap --max-m " +
                     std::to_string(cfg.caps.max_m));
  }
  return r;
}

Range checked_n_range(const RunConfig& cfg, Range fallback, std::int64_t min_n) {
  const Range r = cfg.n_range.value_or(fallback);
  if (r.lo < min_n) throw InputError("n must be at least " + std::to_string(min_n));
  return r;
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  return gens;
}

Json vertex_set_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

struct GraphInput {
  Graph graph;
  std::string source;
};

GraphInput load_graph(const RunConfig& cfg) {
  if (cfg.graph_file.empty() == cfg.family.empty()) {
    throw InputError("give exactly one of --graph or --family");
  }
  if (!cfg.family.empty()) return {graph_from_family(cfg.family), cfg.family};
  return {load_graph_file(cfg.graph_file), cfg.graph_file};
}

void describe_graph(Report& report, const GraphInput& in) {
  report.input["source"] = in.source;
  report.input["graph"] = graph_to_json(in.graph);
  if (in.graph.num_edges() == 0) {
    report.warnings.push_back("graph has no edges: the cover ideal is the unit ideal");
  }
}

bool is_complete_graph(const Graph& g) {
  const std::size_t n = g.num_vertices();
  return n >= 2 && g.num_edges() == n * (n - 1) / 2;
}

bool is_odd_cycle_graph(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3 || n % 2 == 0 || g.num_edges() != n || !is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// --- commands ---------------------------------------------------------------

void cmd_cover_ideal(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const MonomialIdeal j = cover_ideal(in.graph);
  report.results.push_back({{"generators", ideal_json(j)},
                            {"mu", mu(j)},
                            {"alpha", alpha(j)}});
}

void cmd_sdefect(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const Range ms = checked_m_range(cfg, {1, 6});
  report.input["m"] = range_json(ms);
  report.input["method"] = cfg.method;
  const CoverIdealCache cache(in.graph, cfg.caps, in.source);
  const Graph& g = in.graph;
  const std::size_t n = g.num_vertices();

  if (cfg.method != "all") {
    for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
      SdefectReport r;
      if (cfg.method == "brute") {
        r = sdefect_brute(cache, m);
      } else if (cfg.method == "recursion") {
        r = sdefect_recursive(cache, m);
      } else if (cfg.method == "cycle") {
        if (!is_odd_cycle_graph(g)) throw PreconditionError("cycle method needs an odd cycle");
        r = sdefect_cycle(n, m, cfg.caps);
      } else {
        if (!is_complete_graph(g)) throw PreconditionError("closed form needs a complete graph");
        r = sdefect_complete_closed_form(n, m);
      }
      Json row{{"m", m}, {"sdefect", r.value}, {"method", to_string(r.method)}};
      row["witness_count"] = r.method == SdefectMethod::Brute ? Json(r.witnesses.size()) : Json();
      report.results.push_back(std::move(row));
    }
    return;
  }

  const bool recursion_applies = sdefect_brute(cache, 2).value == 1;
  if (!recursion_applies) {
    report.warnings.push_back("recursion skipped: sdefect(J,2) = " +
                              std::to_string(sdefect_brute(cache, 2).value));
  }
  const bool cycle_applies = is_odd_cycle_graph(g);
  const bool closed_applies = is_complete_graph(g);
  for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
    const auto brute = sdefect_brute(cache, m);
    Json row{{"m", m}, {"brute", brute.value}, {"witness_count", brute.witnesses.size()}};
    std::vector<std::pair<std::string, std::uint64_t>> others;
    row["recursion"] = nullptr;
    row["recursion_hypotheses"] = nullptr;
    if (recursion_applies) {
      const auto rec = sdefect_recursive(cache, m, {.enforce_hypotheses = false});
      row["recursion"] = rec.value;
      row["recursion_hypotheses"] = rec.hypotheses_verified;
      others.emplace_back("recursion", rec.value);
      if (!rec.hypotheses_verified) {
        report.warnings.push_back("m=" + std::to_string(m) + ": " + rec.note);
      }
    }
    row["cycle"] = nullptr;
    if (cycle_applies) {
      const auto v = sdefect_cycle(n, m, cfg.caps).value;
      row["cycle"] = v;
      others.emplace_back("cycle", v);
    }
    row["closed_form"] = nullptr;
    if (closed_applies) {
      const auto v = sdefect_complete_closed_form(n, m).value;
      row["closed_form"] = v;
      others.emplace_back("closed_form", v);
    }
    bool agree = true;
    for (const auto& [name, v] : others) {
      if (v != brute.value) {
        agree = false;
        report.warnings.push_back("m=" + std::to_string(m) + ": " + name + " gives " +
                                  std::to_string(v) + ", brute force gives " +
                                  std::to_string(brute.value));
      }
    }
    row["agree"] = agree;
    if (!agree) report.exit_code = kMismatch;
    report.results.push_back(std::move(row));
  }
}

void cmd_waldschmidt(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const CoverIdealCache cache(in.graph, cfg.caps, in.source);
  const auto w = waldschmidt(cache);
  Json row{{"alpha_1", w.alphas[0]},
           {"alpha_2", w.alphas[1]},
           {"minimizing_index", w.minimizing_index},
           {"waldschmidt", to_string(w.value)},
           {"bounded_by_alpha", w.value <= Rational(w.alphas[0])}};
  row["resurgence_lower_bound"] =
      w.resurgence_lower_bound ? Json(to_string(*w.resurgence_lower_bound)) : Json();
  if (!w.resurgence_lower_bound) {
    report.warnings.push_back("no resurgence lower bound: sdefect(J,2) != 1");
  }
  report.results.push_back(std::move(row));
}

void cmd_fit(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const Range ms = checked_m_range(cfg, {1, 10});
  if (cfg.period == 0) throw InputError("period must be positive");
  report.input["m"] = range_json(ms);
  report.input["period"] = cfg.period;
  const CoverIdealCache cache(in.graph, cfg.caps, in.source);
  std::vector<std::int64_t> seq;
  for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
    seq.push_back(static_cast<std::int64_t>(sdefect_brute(cache, m).value));
  }
  Json row{{"sequence", seq}};
  const auto fit = fit_quasipolynomial(seq, ms.lo, cfg.period);
  if (const auto* q = std::get_if<QuasiPolynomial>(&fit)) {
    Json pieces = Json::array();
    for (const auto& p : q->pieces) pieces.push_back(to_string(p));
    row["period"] = q->period;
    row["degree"] = q->degree();
    row["onset"] = q->onset;
    row["pieces"] = pieces;
    row["tail_samples"] = q->tail_samples;
  } else {
    const auto& none = std::get<NoFit>(fit);
    row["fit"] = nullptr;
    row["reason"] = none.reason;
    row["required_length"] = none.required_length;
    report.warnings.push_back("no quasi-polynomial fit: " + none.reason);
  }
  report.results.push_back(std::move(row));
}

Monomial parse_exponents(const std::string& text, std::size_t n) {
  std::vector<Monomial::Exponent> exps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_int(item, "exponent");
    if (v < 0) throw InputError("exponents must be nonnegative");
    exps.push_back(static_cast<Monomial::Exponent>(v));
  }
  if (exps.size() != n) {
    throw InputError("--exps needs " + std::to_string(n) + " exponents, got " +
                     std::to_string(exps.size()));
  }
  return Monomial(std::move(exps));
}

Json classification_row(const Graph& g, const CoverIdealCache& cache, const Monomial& f) {
  const auto c = classify_indecomposable_2cover(g, f);
  const bool in_square = contains(cache.ordinary(2), f);
  Json row{{"cover", to_string(f)},
           {"kind", to_string(c.kind)},
           {"zero_set", vertex_set_json(c.zero_set)},
           {"two_set", vertex_set_json(c.two_set)},
           {"one_set", vertex_set_json(c.one_set)},
           {"reason", c.reason},
           {"in_square", in_square},
           {"agrees", c.indecomposable() != in_square}};
  return row;
}

void cmd_classify2(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const CoverIdealCache cache(in.graph, cfg.caps, in.source);
  std::vector<Monomial> covers;
  if (!cfg.exps.empty()) {
    covers.push_back(parse_exponents(cfg.exps, in.graph.num_vertices()));
  } else {
    covers = minimal_mcovers(in.graph, 2);
  }
  for (const auto& f : covers) {
    Json row = classification_row(in.graph, cache, f);
    if (!row["agrees"].get<bool>()) report.exit_code = kMismatch;
    report.results.push_back(std::move(row));
  }
}

void cmd_degree(const RunConfig& cfg, Report& report) {
  const auto in = load_graph(cfg);
  describe_graph(report, in);
  const Range ms = checked_m_range(cfg, {1, 10});
  report.input["m"] = range_json(ms);
  report.input["seed"] = cfg.seed;
  const CoverIdealCache cache(in.graph, cfg.caps, in.source);
  const auto d = sdefect_degree(cache, static_cast<unsigned>(ms.hi));
  const MonomialIdeal quotient = quotient_by_variable(cache.cover(), d.maximizing_var);
  const auto& gens = quotient.generators();
  Json row{{"maximizing_var", d.maximizing_var + 1},
           {"quotient_generators", ideal_json(quotient)},
           {"quotient_independent", jacobian_rank_full(gens, cfg.seed)},
           {"quotient_degree", d.quotient_degree},
           {"predicted_degree", d.predicted_degree},
           {"sequence", d.sdefect_sequence}};
  row["fitted_degree"] = d.fitted_degree ? Json(*d.fitted_degree) : Json();
  row["agrees"] = d.agrees;
  if (!d.agrees) report.exit_code = kMismatch;
  report.results.push_back(std::move(row));
}

// --- verification sweeps ----------------------------------------------------

void record(Report& report, Json row, bool pass) {
  row["pass"] = pass;
  if (!pass) report.exit_code = kMismatch;
  report.results.push_back(std::move(row));
}

void verify_kn(const RunConfig& cfg, Report& report) {
  const Range ns = checked_n_range(cfg, {3, 5}, 2);
  const Range ms = checked_m_range(cfg, {2, 8});
  report.input["n"] = range_json(ns);
  report.input["m"] = range_json(ms);
  for (auto n = static_cast<std::size_t>(ns.lo); n <= static_cast<std::size_t>(ns.hi); ++n) {
    const CoverIdealCache cache(complete(n), cfg.caps, "K" + std::to_string(n));
    for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
      const auto brute = sdefect_brute(cache, m).value;
      const auto closed = sdefect_complete_closed_form(n, m).value;
      const auto rec = sdefect_recursive(cache, m).value;
      record(report,
             {{"n", n}, {"m", m}, {"brute", brute}, {"closed_form", closed}, {"recursion", rec}},
             brute == closed && rec == closed);
    }
  }
}

void verify_cycle(const RunConfig& cfg, Report& report) {
  const Range ns = checked_n_range(cfg, {5, 7}, 3);
  const Range ms = checked_m_range(cfg, {1, 6});
  report.input["n"] = range_json(ns);
  report.input["m"] = range_json(ms);
  for (auto n = static_cast<std::size_t>(ns.lo); n <= static_cast<std::size_t>(ns.hi); ++n) {
    if (n % 2 == 0) continue;
    const CoverIdealCache cache(cycle(n), cfg.caps, "C" + std::to_string(n));
    for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
      const auto brute = sdefect_brute(cache, m).value;
      const auto formula = sdefect_cycle(n, m, cfg.caps).value;
      record(report, {{"n", n}, {"m", m}, {"brute", brute}, {"cycle", formula}},
             brute == formula);
    }
  }
}

void verify_triangle_tail_cmd(const RunConfig& cfg, Report& report) {
  const Range ns = checked_n_range(cfg, {5, 7}, 1);
  report.input["n"] = range_json(ns);
  std::vector<std::size_t> values;
  for (auto n = ns.lo; n <= ns.hi; ++n) values.push_back(static_cast<std::size_t>(n));
  const auto sweep = verify_triangle_tail_sweep(values, cfg.caps);
  for (const auto& r : sweep.reports) {
    Json row{{"n", r.n}, {"sdefect", r.sdefect_n}, {"applicable", r.applicable}};
    bool pass = true;
    if (r.applicable) {
      row["sdefect_prev"] = r.sdefect_prev;
      row["mu_path_vertices"] = r.mu_path_vertices;
      row["mu_path_edges"] = r.mu_path_edges;
      row["holds_vertex_reading"] = r.holds_vertex_reading;
      row["holds_edge_reading"] = r.holds_edge_reading;
      pass = sweep.convention == "vertices"
                 ? r.holds_vertex_reading
                 : sweep.convention == "edges" && r.holds_edge_reading;
    }
    row["convention"] = sweep.convention;
    record(report, std::move(row), pass);
  }
}

void verify_decomposition(const RunConfig& cfg, Report& report) {
  const Range ns = checked_n_range(cfg, {3, 5}, 2);
  const Range ms = checked_m_range(cfg, {3, 5});
  if (ms.lo < 2) throw InputError("decomposition identity needs m >= 2");
  report.input["n"] = range_json(ns);
  report.input["m"] = range_json(ms);
  for (auto n = static_cast<std::size_t>(ns.lo); n <= static_cast<std::size_t>(ns.hi); ++n) {
    for (const auto& g : graphs_up_to_isomorphism(n, true)) {
      const CoverIdealCache cache(g, cfg.caps);
      for (auto m = static_cast<unsigned>(ms.lo); m <= ms.hi; ++m) {
        const MonomialIdeal rhs =
            add(cache.ordinary(m), multiply(cache.symbolic(2), cache.symbolic(m - 2),
                                            cfg.caps.max_gens));
        record(report, {{"graph", graph_to_json(g)}, {"m", m}}, rhs == cache.symbolic(m));
      }
    }
  }
}

void verify_dupvil(const RunConfig& cfg, Report& report) {
  const Range ns = checked_n_range(cfg, {3, 5}, 3);
  report.input["n"] = range_json(ns);
  for (auto n = static_cast<std::size_t>(ns.lo); n <= static_cast<std::size_t>(ns.hi); ++n) {
    for (const auto& g : graphs_up_to_isomorphism(n, true)) {
      if (is_bipartite(g)) continue;
      const CoverIdealCache cache(g, cfg.caps);
      std::size_t covers = 0;
      std::size_t disagreements = 0;
      for (const auto& f : minimal_mcovers(g, 2)) {
        ++covers;
        if (!classification_row(g, cache, f)["agrees"].get<bool>()) ++disagreements;
      }
      record(report,
             {{"graph", graph_to_json(g)}, {"covers", covers}, {"disagreements", disagreements}},
             disagreements == 0);
    }
  }
}

void cmd_verify(const RunConfig& cfg, Report& report) {
  report.input["theorem"] = cfg.theorem;
  if (cfg.theorem == "kn") return verify_kn(cfg, report);
  if (cfg.theorem == "cycle") return verify_cycle(cfg, report);
  if (cfg.theorem == "triangle-tail") return verify_triangle_tail_cmd(cfg, report);
  if (cfg.theorem == "decomposition") return verify_decomposition(cfg, report);
  if (cfg.theorem == "dupvil") return verify_dupvil(cfg, report);
  throw InputError("unknown verification '" + cfg.theorem + "'");
}

void dispatch(const RunConfig& cfg, Report& report) {
  if (cfg.command == "cover-ideal") return cmd_cover_ideal(cfg, report);
  if (cfg.command == "sdefect") return cmd_sdefect(cfg, report);
  if (cfg.command == "waldschmidt") return cmd_waldschmidt(cfg, report);
  if (cfg.command == "fit") return cmd_fit(cfg, report);
  if (cfg.command == "classify2") return cmd_classify2(cfg, report);
  if (cfg.command == "degree") return cmd_degree(cfg, report);
  if (cfg.command == "verify") return cmd_verify(cfg, report);
  throw InputError("unknown command '" + cfg.command + "'");
}

// --- rendering --------------------------------------------------------------

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<std::string> columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  return cols;
}

void render_tsv(const Json& rows, std::ostream& out) {
  const auto cols = columns(rows);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : "") << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "\t" : "") << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
    }
    out << '\n';
  }
}

void render_pretty(const RunConfig& cfg, const Report& report, std::ostream& out) {
  out << cfg.command;
  if (!cfg.theorem.empty()) out << ' ' << cfg.theorem;
  if (report.input.contains("source")) out << "  " << report.input["source"].get<std::string>();
  out << '\n';
  const auto cols = columns(report.results);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : report.results) {
      if (row.contains(cols[i])) width[i] = std::max(width[i], cell(row[cols[i]]).size());
    }
  }
  auto line = [&](auto&& text_at) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << text_at(i);
    }
    out << '\n';
  };
  line([&](std::size_t i) { return cols[i]; });
  for (const auto& row : report.results) {
    line([&](std::size_t i) { return row.contains(cols[i]) ? cell(row[cols[i]]) : ""; });
  }
  for (const auto& w : report.warnings) out << "warning: " << w.get<std::string>() << '\n';
}

void render(const RunConfig& cfg, const Report& report, std::optional<double> ms,
            std::ostream& out, std::ostream& err) {
  switch (cfg.format) {
    case OutputFormat::Json: {
      Json doc{{"command", cfg.command},
               {"input", report.input},
               {"results", report.results},
               {"warnings", report.warnings}};
      doc["timing_ms"] = ms ? Json(*ms) : Json();
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Tsv:
      render_tsv(report.results, out);
      for (const auto& w : report.warnings) err << "warning: " << w.get<std::string>() << '\n';
      break;
    case OutputFormat::Pretty:
      render_pretty(cfg, report, out);
      break;
  }
}

// --- argument parsing -------------------------------------------------------

void add_graph_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--graph", cfg.graph_file, "graph JSON file {\"n\", \"edges\"} (1-based)");
  sub.add_option("--family", cfg.family, "named graph: K5, C7, P4, T3, F2, net, butterfly, diamond");
}

void add_range_option(CLI::App& sub, const std::string& name, std::optional<Range>& target,
                      const std::string& help) {
  sub.add_option_function<std::string>(
      name, [&target](const std::string& text) { target = parse_range(text); }, help);
}

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--max-gens", cfg.caps.max_gens, "generator cap (overrides SYMDEF_MAX_GENS)");
  sub.add_option("--max-m", cfg.caps.max_m, "largest admissible power");
  sub.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                              {"tsv", OutputFormat::Tsv},
                                              {"pretty", OutputFormat::Pretty}}));
  sub.add_option("--seed", cfg.seed, "seed for randomized rank checks");
  sub.add_flag("--timing", cfg.timing, "report wall time in timing_ms");
}

std::size_t env_max_gens() {
  const char* raw = std::getenv(kEnvMaxGens);
  if (raw == nullptr || *raw == '\0') return ResourceCaps{}.max_gens;
  const auto v = parse_int(raw, kEnvMaxGens);
  if (v < 1) throw InputError(std::string(kEnvMaxGens) + " must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "range");
  } else {
    r.lo = parse_int(text.substr(0, dots), "range");
    r.hi = parse_int(text.substr(dots + 2), "range");
  }
  if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Symbolic powers and symbolic defects of cover ideals of graphs", "symdef"};
  app.require_subcommand(1, 1);

  struct Spec {
    const char* name;
    const char* help;
    bool graph;
    bool m;
  };
  const Spec specs[] = {
      {"cover-ideal", "minimal generators, mu and alpha of J(G)", true, false},
      {"sdefect", "symbolic defect over a range of m", true, true},
      {"waldschmidt", "Waldschmidt constant and resurgence lower bound", true, false},
      {"fit", "quasi-polynomial fit of the symbolic defect sequence", true, true},
      {"classify2", "classify the minimal 2-covers of G", true, false},
      {"degree", "predicted and fitted degree of the symbolic defect", true, true},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    if (s.graph) add_graph_options(*sub, cfg);
    if (s.m) add_range_option(*sub, "--m", cfg.m_range, "m or a..b");
    add_common_options(*sub, cfg);
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }
  app.get_subcommand("sdefect")
      ->add_option("--method", cfg.method, "evaluation method")
      ->check(CLI::IsMember({"brute", "recursion", "cycle", "closed_form", "all"}));
  app.get_subcommand("fit")->add_option("--period", cfg.period, "quasi-period");
  app.get_subcommand("classify2")
      ->add_option("--exps", cfg.exps, "classify one cover, e.g. 1,1,2,0");

  auto* verify = app.add_subcommand("verify", "check an identity over a parameter sweep");
  verify->add_option("theorem", cfg.theorem, "kn | cycle | triangle-tail | decomposition | dupvil")
      ->required()
      ->check(CLI::IsMember({"kn", "cycle", "triangle-tail", "decomposition", "dupvil"}));
  add_range_option(*verify, "--m", cfg.m_range, "m or a..b");
  add_range_option(*verify, "--n", cfg.n_range, "n or a..b");
  add_common_options(*verify, cfg);
  verify->callback([&cfg] { cfg.command = "verify"; });

  try {
    cfg.caps.max_gens = env_max_gens();
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Report report;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    dispatch(cfg, report);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - t0;
    render(cfg, report, cfg.timing ? std::optional<double>(elapsed.count()) : std::nullopt, out,
           err);
    return report.exit_code;
  } catch (const ResourceLimit& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ExponentOverflow& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace symdef::cli
