#include "bcx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "bcx/beta.hpp"
#include "bcx/crosscheck.hpp"
#include "bcx/errors.hpp"
#include "bcx/family.hpp"
#include "bcx/graph_io.hpp"
#include "bcx/homology.hpp"
#include "bcx/ideal.hpp"
#include "bcx/morse.hpp"

namespace bcx {

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string family;
  std::string edges;
  std::string file;
  std::string method = "recursion";
  std::optional<Vertex> at_vertex;
  bool cycles = false;
  bool words = false;
  bool as_json = false;
  std::size_t budget = kIdealBudget;
  unsigned sweep = 0;
  unsigned threads = 0;
};

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", std::vector<Vertex>(g.vertices().begin(), g.vertices().end())}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  try {
    const json& body = j.contains("graph") ? j.at("graph") : j;
    auto vertices = body.at("vertices").get<std::vector<Vertex>>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : body.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v]");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph(std::move(vertices), edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

std::string unescape_edges(std::string text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else if (text[i] == ';') {
      out += '\n';
    } else {
      out += text[i];
    }
  }
  return out;
}

Graph load_graph(const Options& o) {
  const int sources = !o.family.empty() + !o.edges.empty() + !o.file.empty();
  if (sources != 1) throw ParseError("give exactly one of --family, --edges, --file");
  if (!o.family.empty()) return family_graph(parse_family(o.family));
  if (!o.edges.empty()) return parse_edge_list(unescape_edges(o.edges));
  std::ifstream in(o.file);
  if (!in) throw ParseError("cannot read " + o.file);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

std::vector<BetaMethod> parse_methods(const std::string& list) {
  std::vector<BetaMethod> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_beta_method(item));
  }
  if (out.empty()) throw ParseError("no method given");
  return out;
}

json header(const char* command, const Graph& g) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"graph", graph_to_json(g)}};
}

json words_json(std::span<const BooleanElement> els, const Graph& g) {
  json a = json::array();
  for (const auto& el : els) a.push_back(format_element(el, g));
  return a;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int cmd_beta(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  json results = json::array();
  std::optional<std::uint64_t> first;
  bool agree = true;
  for (BetaMethod m : parse_methods(o.method)) {
    std::uint64_t value = 0, calls = 0;
    switch (m) {
      case BetaMethod::Recursion: {
        const auto r = beta_recursive(g);
        value = r.value;
        calls = r.calls;
        break;
      }
      case BetaMethod::Euler: value = beta_euler(g, o.budget).value; break;
      case BetaMethod::SubsetFormula: value = beta_subset_formula(g).value; break;
      case BetaMethod::Homology: value = betti_gf2(g, kHomologyMaxVertices, o.budget).back(); break;
      case BetaMethod::Morse:
        value = build_h_matching(g, g.vertices().front(), o.budget).unmatched_maximal.size();
        break;
    }
    if (first && *first != value) agree = false;
    if (!first) first = value;
    json r{{"method", to_string(m)}, {"value", value}};
    if (m == BetaMethod::Recursion) r["calls"] = calls;
    results.push_back(r);
  }
  if (o.as_json) {
    json doc = header("beta", g);
    doc["results"] = results;
    doc["agree"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r["method"].get<std::string>() << ": " << r["value"].get<std::uint64_t>() << "\n";
    }
    if (!agree) out << "methods disagree\n";
  }
  return agree ? kExitOk : kExitMismatch;
}

int cmd_chi(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const BooleanIdeal ideal = enumerate_ideal(g, o.budget);
  const auto chi = euler_characteristic(ideal);
  const auto beta = beta_euler(ideal).value;
  if (o.as_json) {
    json doc = header("chi", g);
    doc["rank_sizes"] = rank_sizes(ideal);
    doc["chi"] = chi;
    doc["beta"] = beta;
    out << doc.dump(2) << "\n";
  } else {
    out << "rank sizes: " << join(rank_sizes(ideal)) << "\n";
    out << "chi: " << chi << "\n";
    out << "beta: " << beta << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const BooleanIdeal ideal = enumerate_ideal(g, o.budget);
  if (o.as_json) {
    json doc = header("enumerate", g);
    doc["rank_sizes"] = rank_sizes(ideal);
    if (o.words) {
      json ranks = json::array();
      for (int r = 0; r <= ideal.top_rank(); ++r) ranks.push_back(words_json(ideal.rank(r), g));
      doc["ranks"] = ranks;
    }
    out << doc.dump(2) << "\n";
  } else {
    for (int r = 0; r <= ideal.top_rank(); ++r) {
      out << "rank " << r << ": " << ideal.rank_size(r);
      if (o.words) {
        out << " |";
        for (const auto& el : ideal.rank(r)) out << " " << format_element(el, g);
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_matching(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex s = o.at_vertex.value_or(g.vertices().front());
  if (!g.has_vertex(s)) throw UnknownVertex("unknown vertex " + std::to_string(s));
  const BooleanIdeal ideal = enumerate_ideal(g, o.budget);
  const Matching m = build_h_matching(ideal, s);
  const bool acyclic = verify_acyclic(m, ideal);
  const HReport h = verify_h_properties(m, ideal);
  const SkeletonReport sk = skeleton_sphere_counts(g, m, o.budget);
  const bool ok = acyclic && h.ok();
  if (o.as_json) {
    json doc = header("matching", g);
    doc["at_vertex"] = s;
    json pairs = json::array();
    for (const auto& p : m.pairs) {
      pairs.push_back({{"lower", format_element(p.lower, g)}, {"upper", format_element(p.upper, g)}});
    }
    doc["pairs"] = pairs;
    doc["unmatched_rank0"] = m.unmatched_rank0 ? json(format_element(*m.unmatched_rank0, g)) : json(nullptr);
    doc["unmatched_maximal"] = words_json(m.unmatched_maximal, g);
    doc["verification"] = {{"acyclic", acyclic},
                           {"h1", h.h1},
                           {"h2", h.h2},
                           {"h2_checked", h.h2_checked},
                           {"h3", h.h3},
                           {"counterexamples", h.counterexamples}};
    doc["skeleta"] = {{"f", sk.f}, {"spheres", sk.spheres}, {"restricted", sk.restricted}};
    out << doc.dump(2) << "\n";
  } else {
    out << "H-matching at " << s << ": " << m.pairs.size() << " pairs\n";
    for (const auto& p : m.pairs) {
      out << "  " << format_element(p.lower, g) << " < " << format_element(p.upper, g) << "\n";
    }
    out << "unmatched rank 0: " << (m.unmatched_rank0 ? format_element(*m.unmatched_rank0, g) : "-") << "\n";
    out << "unmatched maximal (" << m.unmatched_maximal.size() << "):";
    for (const auto& el : m.unmatched_maximal) out << " " << format_element(el, g);
    out << "\n";
    out << "acyclic: " << (acyclic ? "yes" : "no") << "\n";
    out << "h1: " << (h.h1 ? "yes" : "no") << "  h2: " << (h.h2_checked ? (h.h2 ? "yes" : "no") : "n/a")
        << "  h3: " << (h.h3 ? "yes" : "no") << "\n";
    for (const auto& c : h.counterexamples) out << "  " << c << "\n";
    out << "skeleton spheres: " << join(sk.spheres) << "\n";
    out << "restricted matching: " << join(sk.restricted) << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  if (g.size() > kHomologyMaxVertices) {
    throw BudgetExceeded("dense homology is limited to " + std::to_string(kHomologyMaxVertices) + " vertices");
  }
  const BooleanIdeal ideal = enumerate_ideal(g, o.budget);
  const auto betti = betti_gf2(ideal);
  std::vector<Gf2Chain> basis;
  if (o.cycles) basis = top_cycle_basis(ideal);
  if (o.as_json) {
    json doc = header("homology", g);
    doc["betti"] = betti;
    if (o.cycles) {
      json cycles = json::array();
      for (const auto& c : basis) cycles.push_back(words_json(c.support, g));
      doc["cycles"] = cycles;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "reduced betti: " << join(betti) << "\n";
    for (const auto& c : basis) out << "cycle: " << format_chain(c, g) << "\n";
  }
  return kExitOk;
}

std::string closed_form(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::Path: return "f(n-1)";
    case Family::D: return "f(n-2)";
    case Family::AffineA: return "c(n)";
    case Family::AffineB: return "f(n-2)";
    case Family::AffineC: return "f(n-1)";
    case Family::AffineD: return "f(n-3)";
    case Family::Complete: return "derangements(n)";
    case Family::Cycle: return "c(n-1)";
    case Family::Star: return "1";
    case Family::Edgeless: return "0";
    default: return "table value";
  }
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw ParseError("family needs --family");
  const FamilySpec spec = parse_family(o.family);
  const Graph g = family_graph(spec);
  const std::uint64_t table = beta_family(spec);
  const std::uint64_t computed = beta_recursive(g).value;
  if (o.as_json) {
    json doc = header("family", g);
    doc["family"] = to_string(spec);
    doc["closed_form"] = closed_form(spec);
    doc["beta_closed_form"] = table;
    doc["beta_recursion"] = computed;
    doc["agree"] = table == computed;
    out << doc.dump(2) << "\n";
  } else {
    out << to_string(spec) << ": " << to_string(g) << "\n";
    out << "closed form " << closed_form(spec) << " = " << table << "\n";
    out << "recursion = " << computed << (table == computed ? "" : "  (differs from closed form)") << "\n";
  }
  return kExitOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  CrossCheckOptions cco;
  cco.budget = o.budget;
  if (o.sweep == 0) {
    const Graph g = load_graph(o);
    const CrossCheckReport rep = cross_check(g, cco);
    if (o.as_json) {
      json doc = header("crosscheck", g);
      json values = json::object();
      for (const auto& mv : rep.values) values[std::string(to_string(mv.method))] = mv.value;
      doc["values"] = values;
      doc["skipped"] = rep.skipped;
      doc["beta"] = rep.agreed_value;
      doc["agree"] = true;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& mv : rep.values) out << to_string(mv.method) << ": " << mv.value << "\n";
      for (const auto& s : rep.skipped) out << s << ": skipped\n";
      out << "all methods agree: beta = " << rep.agreed_value << "\n";
    }
    return kExitOk;
  }

  if (o.sweep > 6) throw InvalidInput("--sweep is limited to 6 vertices");
  std::vector<Graph> graphs;
  for (unsigned n = 1; n <= o.sweep; ++n) {
    auto classes = isomorphism_classes(n);
    graphs.insert(graphs.end(), classes.begin(), classes.end());
  }
  const unsigned workers = std::max(1u, o.threads ? o.threads : std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<std::string> failures;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        cross_check(graphs[i], cco);
      } catch (const Error& e) {
        std::lock_guard lock(mu);
        failures.push_back(to_string(graphs[i]) + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(workers, graphs.size()); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  std::sort(failures.begin(), failures.end());
  if (o.as_json) {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "crosscheck"},
             {"sweep", o.sweep},
             {"graphs", graphs.size()},
             {"failures", failures},
             {"agree", failures.empty()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "checked " << graphs.size() << " graphs on at most " << o.sweep << " vertices\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    out << (failures.empty() ? "all methods agree\n" : "mismatches found\n");
  }
  return failures.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean complexes of finite simple graphs", "bcx"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "family spec NAME:n, e.g. A:5, affineD:6, K:4");
    sub->add_option("--edges", o.edges, "inline edge list; lines separated by newlines, \\n or ;");
    sub->add_option("--file", o.file, "edge-list file or graph JSON");
    sub->add_option("--budget", o.budget, "maximum number of enumerated cells");
    sub->add_flag("--json", o.as_json, "machine-readable output");
  };

  auto* beta = app.add_subcommand("beta", "boolean number by one or more methods");
  add_input(beta);
  beta->add_option("--method", o.method, "comma list of recursion, euler, subset, homology, morse");
  auto* chi = app.add_subcommand("chi", "Euler characteristic and the implied boolean number");
  add_input(chi);
  auto* enumerate = app.add_subcommand("enumerate", "rank sizes of the boolean ideal");
  add_input(enumerate);
  enumerate->add_flag("--words", o.words, "list every canonical word");
  auto* matching = app.add_subcommand("matching", "build and verify the H-matching");
  add_input(matching);
  matching->add_option("--at-vertex", o.at_vertex, "vertex s (default: smallest label)");
  auto* homology = app.add_subcommand("homology", "reduced GF(2) Betti numbers");
  add_input(homology);
  homology->add_flag("--cycles", o.cycles, "print a basis of top cycles");
  auto* family = app.add_subcommand("family", "family graph and closed-form boolean number");
  add_input(family);
  auto* crosscheck = app.add_subcommand("crosscheck", "compare every applicable method");
  add_input(crosscheck);
  crosscheck->add_option("--sweep", o.sweep, "check every graph on at most N vertices");
  crosscheck->add_option("--threads", o.threads, "worker threads for --sweep");

  std::vector<std::string> storage{"bcx"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (beta->parsed()) return cmd_beta(o, out);
    if (chi->parsed()) return cmd_chi(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (matching->parsed()) return cmd_matching(o, out);
    if (homology->parsed()) return cmd_homology(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (crosscheck->parsed()) return cmd_crosscheck(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CrossCheckMismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const InvalidMatching& e) {
    err << "invalid matching: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitFailure;
}

}  // namespace bcx
