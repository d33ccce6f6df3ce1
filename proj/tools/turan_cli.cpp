#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/blocks.hpp"
#include "turan/canon.hpp"
#include "turan/discharging.hpp"
#include "turan/formulas.hpp"
#include "turan/graph6.hpp"
#include "turan/patterns.hpp"
#include "turan/search.hpp"

using json = nlohmann::json;
using namespace turan;

namespace {

// graph6 lines from the named files, or stdin when none given. Blank lines
// and an optional ">>graph6<<" header are skipped.
std::vector<std::string> read_graph_lines(const std::vector<std::string>& files) {
  std::vector<std::string> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      if (!line.empty()) lines.push_back(line);
    }
  };
  if (files.empty()) {
    drain(std::cin);
  } else {
    for (const std::string& f : files) {
      std::ifstream in(f);
      if (!in) throw std::runtime_error("cannot open file: " + f);
      drain(in);
    }
  }
  return lines;
}

std::string flag_names(unsigned flags) {
  std::vector<std::string> parts;
  if (flags & kExcludedN) parts.push_back("excluded-n");
  if (flags & kBelowValidRange) parts.push_back("below-valid-range");
  if (flags & kOutOfRange) parts.push_back("out-of-range");
  if (flags & kNonIntegral) parts.push_back("non-integral");
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

json row_to_json(const FormulaTableRow& r) {
  json j{{"n", r.n},           {"t2", r.t2},
         {"f", r.f},           {"g", r.g},
         {"ex_edges_p62", r.ex_edges_p62.value},
         {"ex_tri_p62", r.ex_tri_p62.value},
         {"ex_tri_p52", r.ex_tri_p52.value},
         {"ex_edges_tp2", r.ex_edges_tp2.value},
         {"tri_tp2_bound", r.tri_tp2_bound.value}};
  json flags = json::object();
  auto note = [&](const char* k, unsigned f) {
    if (f != kTheoremBacked) flags[k] = flag_names(f);
  };
  note("ex_edges_p62", r.ex_edges_p62.flags);
  note("ex_tri_p62", r.ex_tri_p62.flags);
  note("ex_tri_p52", r.ex_tri_p52.flags);
  note("ex_edges_tp2", r.ex_edges_tp2.flags);
  note("tri_tp2_bound", r.tri_tp2_bound.flags);
  if (!flags.empty()) j["flags"] = flags;
  return j;
}

json report_to_json(const SearchReport& r) {
  return json{{"n", r.n},
              {"pattern", r.pattern},
              {"objective", to_string(r.objective)},
              {"optimum", r.optimum},
              {"extremal", r.extremal},
              {"nodes_explored", r.nodes_explored},
              {"wall_time_s", r.wall_time_s},
              {"completeness", to_string(r.completeness)}};
}

std::string edge_str(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

std::string tri_str(const Triangle& t) {
  return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
}

int run(int argc, char** argv) {
  CLI::App app{"Extremal machinery for path-square-free graphs: constructions, "
               "formulas, block decomposition, discharging, exhaustive search"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool no_cache = false;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");
  app.add_option("--seed", seed, "RNG seed for randomized paths (default 0)");
  app.add_option("--jobs", jobs, "worker threads for search")->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", no_cache, "bypass the results cache");

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "formula table rows for an n-range (CSV or JSON)");
  int t_from = 1, t_to = 20;
  cmd_table->add_option("--from", t_from, "first n")->required();
  cmd_table->add_option("--to", t_to, "last n")->required();

  // ---- build ----
  auto* cmd_build = app.add_subcommand("build", "construct a named pattern, emit graph6");
  std::string b_pattern;
  cmd_build->add_option("pattern", b_pattern, "pattern, e.g. H(12,6), P6^2, T(14,2)")->required();

  // ---- check ----
  auto* cmd_check = app.add_subcommand("check", "test graph6 input lines for pattern-freeness");
  std::string c_pattern;
  std::vector<std::string> c_files;
  cmd_check->add_option("--free", c_pattern, "pattern that must be absent")->required();
  cmd_check->add_option("files", c_files, "graph6 files (default: stdin)");

  // ---- count ----
  auto* cmd_count = app.add_subcommand("count", "triangle statistics of graph6 input lines");
  std::vector<std::string> n_files;
  bool n_list = false;
  cmd_count->add_flag("--list", n_list, "also list every triangle");
  cmd_count->add_option("files", n_files, "graph6 files (default: stdin)");

  // ---- search ----
  auto* cmd_search = app.add_subcommand("search", "exhaustive extremal search / near-Turan enumeration");
  int s_n = 0;
  std::string s_forbid = "P6^2", s_objective = "edges";
  long long s_budget_nodes = 0;
  double s_budget_seconds = 0;
  long long s_min_edges = -1;
  bool s_lower_bound = false;
  cmd_search->add_option("--n", s_n, "number of vertices")->required();
  cmd_search->add_option("--forbid", s_forbid, "forbidden pattern (default P6^2)");
  cmd_search->add_option("--objective", s_objective, "edges | triangles")
      ->check(CLI::IsMember({"edges", "triangles"}));
  cmd_search->add_option("--budget-nodes", s_budget_nodes, "stop after this many candidates");
  cmd_search->add_option("--budget-seconds", s_budget_seconds, "stop after this much wall time");
  cmd_search->add_option("--min-edges", s_min_edges,
                         "enumerate all triangle-free graphs with at least this many edges "
                         "(requires --forbid K3)");
  cmd_search->add_flag("--lower-bound-only", s_lower_bound,
                       "sample constructions and random maximal graphs instead of searching");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "check a theorem's formula against the oracle");
  std::string v_theorem;
  int v_from = 0, v_to = 0;
  long long v_budget_nodes = 0;
  double v_budget_seconds = 0;
  cmd_verify
      ->add_option("theorem", v_theorem,
                   "ex-edges-p62 | ex-tri-p62 | ex-tri-p52 | ex-edges-tp2")
      ->required()
      ->check(CLI::IsMember({"ex-edges-p62", "ex-tri-p62", "ex-tri-p52", "ex-edges-tp2"}));
  cmd_verify->add_option("--from", v_from, "first n")->required();
  cmd_verify->add_option("--to", v_to, "last n")->required();
  cmd_verify->add_option("--budget-nodes", v_budget_nodes, "per-n node budget for the oracle");
  cmd_verify->add_option("--budget-seconds", v_budget_seconds, "per-n time budget for the oracle");

  // ---- decompose ----
  auto* cmd_dec = app.add_subcommand("decompose", "triangle-block decomposition and classification");
  std::vector<std::string> d_files;
  bool d_audit = false;
  cmd_dec->add_flag("--audit", d_audit, "also run the red/blue counting audit (t <= e_b + B, blue triangle-free)");
  cmd_dec->add_option("files", d_files, "graph6 files (default: stdin)");

  // ---- discharge ----
  auto* cmd_dis = app.add_subcommand("discharge", "verify the discharging rules on a graph");
  std::string g6_arg;
  bool trace = false, diamond = false;
  cmd_dis->add_option("graph6", g6_arg, "graph6 string (default: read lines from stdin)");
  cmd_dis->add_flag("--trace", trace, "dump every (edge, triangle, charge) flow as TSV");
  cmd_dis->add_flag("--diamond", diamond, "also run the diamond-configuration check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cmd_table->parsed()) {
    if (t_from < 0 || t_to > kMaxN || t_from > t_to) {
      std::cerr << "table: need 0 <= from <= to <= 64\n";
      return 2;
    }
    if (as_json) {
      json rows = json::array();
      for (int n = t_from; n <= t_to; ++n) rows.push_back(row_to_json(table_row(n)));
      std::cout << rows.dump(2) << "\n";
    } else {
      std::cout << "n,t2,f,g,ex_edges_p62,ex_tri_p62,ex_tri_p52,ex_edges_tp2,tri_tp2_bound\n";
      for (int n = t_from; n <= t_to; ++n) {
        FormulaTableRow r = table_row(n);
        std::cout << r.n << ',' << r.t2 << ',' << r.f << ',' << r.g << ','
                  << r.ex_edges_p62.value << ',' << r.ex_tri_p62.value << ','
                  << r.ex_tri_p52.value << ',' << r.ex_edges_tp2.value << ','
                  << r.tri_tp2_bound.value << "\n";
      }
    }
    return 0;
  }

  if (cmd_build->parsed()) {
    Graph g = build(parse_pattern(b_pattern));
    if (as_json) {
      json j{{"pattern", to_string(parse_pattern(b_pattern))},
             {"n", g.n},
             {"edges", g.edge_count()},
             {"triangles", triangle_count(g)},
             {"graph6", graph6_encode(g)},
             {"canonical_graph6", canonical_graph6(g)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << graph6_encode(g) << "\n";
    }
    return 0;
  }

  if (cmd_check->parsed()) {
    Graph pat = build(parse_pattern(c_pattern));
    bool any_hit = false;
    json out = json::array();
    for (const std::string& line : read_graph_lines(c_files)) {
      Graph g = graph6_decode(line);
      auto wit = contains(g, pat);
      bool free = !wit.has_value();
      any_hit |= !free;
      if (as_json) {
        json j{{"graph6", line}, {"free", free}};
        if (wit) j["witness"] = *wit;
        out.push_back(j);
      } else {
        std::cout << (free ? "true" : "false") << "\n";
      }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return any_hit ? 1 : 0;
  }

  if (cmd_count->parsed()) {
    json out = json::array();
    for (const std::string& line : read_graph_lines(n_files)) {
      Graph g = graph6_decode(line);
      long long t = triangle_count(g);
      if (as_json) {
        json j{{"graph6", line}, {"n", g.n}, {"edges", g.edge_count()}, {"triangles", t}};
        if (n_list) {
          json ts = json::array();
          for (const Triangle& tr : triangle_list(g)) ts.push_back({tr.a, tr.b, tr.c});
          j["triangle_list"] = ts;
        }
        out.push_back(j);
      } else {
        std::cout << t << "\n";
        if (n_list)
          for (const Triangle& tr : triangle_list(g)) std::cout << "  " << tri_str(tr) << "\n";
      }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_search->parsed()) {
    PatternId pat = parse_pattern(s_forbid);
    if (s_min_edges >= 0) {
      Graph built = build(pat);
      if (!(built.n == 3 && built.edge_count() == 3)) {
        std::cerr << "search: --min-edges enumerates triangle-free graphs; use --forbid K3\n";
        return 2;
      }
      std::vector<std::string> got = near_turan_triangle_free(s_n, s_min_edges);
      if (as_json) {
        json j{{"n", s_n}, {"min_edges", s_min_edges}, {"count", got.size()}, {"graphs", got}};
        std::cout << j.dump(2) << "\n";
      } else {
        for (const std::string& s : got) std::cout << s << "\n";
      }
      return 0;
    }
    SearchSpec ss;
    ss.n = s_n;
    ss.forbidden = pat;
    ss.objective = s_objective == "edges" ? Objective::Edges : Objective::Triangles;
    ss.mode = s_lower_bound ? SearchMode::LowerBoundOnly : SearchMode::Exact;
    ss.budget.max_nodes = s_budget_nodes;
    ss.budget.max_seconds = s_budget_seconds;
    ss.jobs = jobs;
    SearchReport rep;
    bool from_cache = false;
    if (!no_cache && ss.mode == SearchMode::Exact)
      if (auto cached = cache_lookup("results", pat, ss.objective, s_n)) {
        rep = *cached;
        from_cache = true;
      }
    if (!from_cache) {
      rep = exhaustive_max(ss);
      if (!no_cache && ss.mode == SearchMode::Exact) cache_store("results", pat, rep);
    }
    if (as_json) {
      json j = report_to_json(rep);
      j["from_cache"] = from_cache;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "n=" << rep.n << " forbid=" << rep.pattern << " objective="
                << to_string(rep.objective) << " optimum=" << rep.optimum << " ("
                << to_string(rep.completeness) << ", " << rep.nodes_explored << " nodes, "
                << rep.wall_time_s << "s" << (from_cache ? ", cached" : "") << ")\n";
      for (const std::string& s : rep.extremal) std::cout << s << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    TheoremId id;
    if (v_theorem == "ex-edges-p62") id = TheoremId::ExEdgesP62;
    else if (v_theorem == "ex-tri-p62") id = TheoremId::ExTriP62;
    else if (v_theorem == "ex-tri-p52") id = TheoremId::ExTriP52;
    else id = TheoremId::ExEdgesTP2;
    VerifyOptions opts;
    opts.budget.max_nodes = v_budget_nodes;
    opts.budget.max_seconds = v_budget_seconds;
    opts.jobs = jobs;
    opts.no_cache = no_cache;
    opts.cache_dir = "results";
    std::vector<TheoremVerdict> verdicts = verify_theorem(id, v_from, v_to, opts);
    bool bad = false;
    json out = json::array();
    for (const TheoremVerdict& v : verdicts) {
      bad |= v.verdict == Verdict::Failed || v.verdict == Verdict::Budgeted;
      if (as_json) {
        json j{{"n", v.n},
               {"verdict", to_string(v.verdict)},
               {"oracle", v.oracle},
               {"formula", v.formula},
               {"extremal", v.extremal},
               {"detail", v.detail}};
        if (v.family_checked) {
          j["family"] = v.family_names;
          j["family_matches"] = v.family_matches;
        }
        out.push_back(j);
      } else {
        std::cout << "n=" << v.n << ": " << to_string(v.verdict);
        if (v.verdict == Verdict::Verified) {
          std::cout << " (" << v.oracle << ")";
          if (v.family_checked) {
            std::cout << ", extremal: {";
            for (std::size_t i = 0; i < v.family_names.size(); ++i)
              std::cout << (i ? ", " : "") << v.family_names[i];
            std::cout << "}";
          }
        } else {
          std::cout << " (" << v.detail << ")";
        }
        std::cout << "\n";
        if (v.verdict == Verdict::Failed)
          for (const std::string& w : v.extremal) std::cout << w << "\n";
      }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return bad ? 1 : 0;
  }

  if (cmd_dec->parsed()) {
    bool any_violation = false;
    json out = json::array();
    for (const std::string& line : read_graph_lines(d_files)) {
      Graph g = graph6_decode(line);
      BlockDecomposition d = decompose(g);
      json jg{{"graph6", line}, {"n", g.n}, {"edges", g.edge_count()},
              {"triangles", triangle_count(g)}};
      if (!as_json)
        std::cout << line << ": " << d.blocks.size() << " block(s), "
                  << d.unassigned_edges.size() << " edge(s) in no triangle\n";
      json jblocks = json::array();
      std::vector<BlockKind> kinds;
      bool classified_all = true;
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        json jb{{"vertices", b.vertices}, {"triangles", b.triangles.size()},
                {"edges", b.edges.size()}};
        try {
          BlockKind k = classify(g, b);
          kinds.push_back(k);
          std::size_t red = k.red_edges.size();
          std::size_t blue = b.edges.size() - red;
          jb["kind"] = to_string(k.tag);
          jb["red"] = red;
          jb["blue"] = blue;
          if (k.tag == BlockKindTag::Suspension) jb["apex"] = k.apex;
          if (!as_json) {
            std::cout << "  block " << i << ": " << to_string(k.tag) << " vertices=[";
            for (std::size_t vi = 0; vi < b.vertices.size(); ++vi)
              std::cout << (vi ? "," : "") << b.vertices[vi];
            std::cout << "] triangles=" << b.triangles.size() << " red=" << red
                      << " blue=" << blue << "\n";
          }
        } catch (const ClaimViolation& cv) {
          classified_all = false;
          any_violation = true;
          jb["kind"] = "UNCLASSIFIED";
          jb["error"] = cv.what();
          if (!as_json) std::cout << "  block " << i << ": UNCLASSIFIED (" << cv.what() << ")\n";
        }
        jblocks.push_back(jb);
      }
      jg["blocks"] = jblocks;
      jg["unassigned_edges"] = d.unassigned_edges.size();
      if (d_audit) {
        try {
          AuditReport rep = audit(g);
          any_violation |= !rep.ok();
          jg["audit"] = json{{"t", rep.t},
                             {"e", rep.e},
                             {"e_b", rep.e_b},
                             {"e_r", rep.e_r},
                             {"B", rep.B},
                             {"ok", rep.ok()},
                             {"violations", rep.violations}};
          if (!as_json) {
            std::cout << "  audit: t=" << rep.t << " e=" << rep.e << " e_b=" << rep.e_b
                      << " e_r=" << rep.e_r << " B=" << rep.B
                      << (rep.ok() ? " OK" : " VIOLATIONS:") << "\n";
            for (const std::string& v : rep.violations) std::cout << "    " << v << "\n";
          }
        } catch (const std::invalid_argument& e) {
          jg["audit"] = json{{"hypothesis_error", e.what()}};
          any_violation = true;
          if (!as_json) std::cout << "  audit: hypothesis error: " << e.what() << "\n";
        }
      }
      (void)classified_all;
      out.push_back(jg);
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return any_violation ? 1 : 0;
  }

  if (cmd_dis->parsed()) {
    std::vector<std::string> inputs;
    if (!g6_arg.empty())
      inputs.push_back(g6_arg);
    else
      inputs = read_graph_lines({});
    bool any_fail = false;
    json out = json::array();
    for (const std::string& line : inputs) {
      Graph g = graph6_decode(line);
      try {
        DischargeReport rep = verify_discharge(g);
        any_fail |= !rep.certified;
        if (as_json) {
          json j{{"graph6", line},
                 {"t", rep.t},
                 {"e", rep.e},
                 {"e_normalized", rep.e_normalized},
                 {"min_tri_in", charge_to_string(rep.min_tri_in)},
                 {"max_edge_out", charge_to_string(rep.max_edge_out)},
                 {"inflow_ok", rep.inflow_ok},
                 {"outflow_ok", rep.outflow_ok},
                 {"conservation_ok", rep.conservation_ok},
                 {"certified", rep.certified}};
          if (rep.worst_edge) j["worst_edge"] = {rep.worst_edge->first, rep.worst_edge->second};
          if (rep.worst_triangle)
            j["worst_triangle"] = {rep.worst_triangle->a, rep.worst_triangle->b,
                                   rep.worst_triangle->c};
          if (diamond) {
            json dv = json::array();
            for (const DiamondViolation& d : diamond_claim_check(g))
              dv.push_back({{"x", d.x}, {"y", d.y}, {"z", d.z}, {"w", d.w}});
            j["diamond_violations"] = dv;
          }
          out.push_back(j);
        } else {
          std::cout << line << ": " << (rep.certified ? "PASS" : "FAIL") << " t=" << rep.t
                    << " e=" << rep.e << " min_inflow=" << charge_to_string(rep.min_tri_in)
                    << " max_outflow=" << charge_to_string(rep.max_edge_out) << "\n";
          if (!rep.certified) {
            if (rep.worst_triangle)
              std::cout << "  worst triangle " << tri_str(*rep.worst_triangle) << " inflow "
                        << charge_to_string(rep.min_tri_in) << "\n";
            if (rep.worst_edge)
              std::cout << "  worst edge " << edge_str(*rep.worst_edge) << " outflow "
                        << charge_to_string(rep.max_edge_out) << "\n";
          }
          if (diamond) {
            auto dv = diamond_claim_check(g);
            std::cout << "  diamond violations: " << dv.size() << "\n";
          }
          if (trace) {
            for (const ChargeFlow& f : assign_charges(g).flows)
              std::cout << f.edge.first << "," << f.edge.second << "\t" << f.tri.a << ","
                        << f.tri.b << "," << f.tri.c << "\t" << charge_to_string(f.twelfths)
                        << "\n";
          }
        }
      } catch (const HypothesisViolation& e) {
        std::cerr << "discharge: " << e.what() << "\n";
        return 2;
      }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return any_fail ? 1 : 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const PatternError& e) {
    std::cerr << "pattern error: " << e.what() << "\n";
  } catch (const Graph6Error& e) {
    std::cerr << "graph6 error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
