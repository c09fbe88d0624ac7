// foxcolor: command-line front end. JSON on stdout by default; --text for
// plain output. Exit codes: 0 ok (NONE answers included), 1 computation
// error, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reproduce.hpp"

using namespace foxcolor;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string knot;
  std::string pd_file;
  std::string braid;
  int strands = 0;
};

struct Common {
  bool text = false;
  int mod = 0;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--knot", in.knot, "Knot name from the table, or T(2,n)");
  cmd->add_option("--pd", in.pd_file, "File with a PD code");
  cmd->add_option("--braid", in.braid, "Braid word such as \"s1 s1 -s2\"");
  cmd->add_option("--strands", in.strands, "Strand count for --braid");
}

std::pair<std::string, Diagram> load(const Input& in) {
  int given = !in.knot.empty() + !in.pd_file.empty() + !in.braid.empty();
  if (given != 1) throw UsageError("give exactly one of --knot, --pd, --braid");
  if (!in.knot.empty()) {
    auto k = find_knot(in.knot);
    if (!k) throw UsageError("unknown knot: " + in.knot);
    return {k->name, k->pd};
  }
  if (!in.pd_file.empty()) {
    std::ifstream f(in.pd_file);
    if (!f) throw UsageError("cannot read " + in.pd_file);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
      return {in.pd_file, parse_pd(ss.str())};
    } catch (const DiagramError& e) {
      throw UsageError(e.what());
    }
  }
  if (in.strands < 1) throw UsageError("--braid needs --strands");
  try {
    return {in.braid, parse_braid(in.braid, in.strands)};
  } catch (const DiagramError& e) {
    throw UsageError(e.what());
  }
}

Modulus need_mod(const Common& c) {
  if (c.mod < 2) throw UsageError("--mod must be at least 2");
  return Modulus(c.mod);
}

Palette need_set(const std::string& text, const Modulus& m, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return parse_palette(text, m.value());
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

json to_json(const Palette& p) { return p.colors; }
json to_json(const AffineMap& f) { return {{"lambda", f.lambda()}, {"mu", f.mu()}, {"text", f.to_string()}}; }
json to_json(const Move& mv) {
  return {{"kind", kind_name(mv.kind)}, {"a", mv.a}, {"b", mv.b}, {"variant", mv.variant}};
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string values_text(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, " ");
}

// Output of one command: a JSON result plus its text rendering.
struct Output {
  json inputs = json::object();
  json result = json::object();
  std::string text;
};

void emit(const std::string& command, const Output& o, bool text, double seconds) {
  if (text) {
    std::cout << o.text;
    if (!o.text.empty() && o.text.back() != '\n') std::cout << '\n';
    return;
  }
  json report{{"command", command}, {"inputs", o.inputs}, {"result", o.result}, {"seconds", seconds}};
  std::cout << report.dump(2) << '\n';
}

std::string pinning_text(const std::vector<PinningRow>& rows, const std::vector<int>& from) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "f(" << from[0] << ") = " << r.image0 << "  f(" << from[1] << ") = " << r.image1 << "  lambda = " << r.lambda
        << "  mu = " << r.mu;
    for (std::size_t i = 0; i < r.images.size(); ++i)
      out << "  f(" << from[i + 2] << ") = " << r.images[i] << (r.outside[i] ? " X" : "");
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox colorings of knot diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--text", common.text, "Plain text instead of JSON");
  app.add_flag("--json", [&](std::int64_t) { common.text = false; }, "JSON output (default)");

  Input in;
  std::string set_text, from_text, to_text;
  int limit = 50;

  auto* det = app.add_subcommand("det", "Determinant and Smith diagonal");
  add_input(det, in);

  auto* nullity = app.add_subcommand("nullity", "p-nullity");
  add_input(nullity, in);
  nullity->add_option("--mod", common.mod, "Prime modulus")->required();

  auto* colorings = app.add_subcommand("colorings", "Non-trivial colorings");
  add_input(colorings, in);
  colorings->add_option("--mod", common.mod, "Prime modulus")->required();
  colorings->add_option("--limit", limit, "Print at most this many (0: all)");

  auto* classes = app.add_subcommand("classes", "Equivalence classes under affine maps");
  add_input(classes, in);
  classes->add_option("--mod", common.mod, "Prime modulus")->required();

  auto* mincol = app.add_subcommand("mincol-diagram", "Fewest colors on this diagram");
  add_input(mincol, in);
  mincol->add_option("--mod", common.mod, "Prime modulus")->required();

  auto* orbit = app.add_subcommand("orbit", "Affine orbit of a set");
  orbit->add_option("--mod", common.mod, "Modulus")->required();
  orbit->add_option("--set", set_text, "Comma separated residues")->required();

  auto* mapset = app.add_subcommand("map-set", "Affine map taking one set onto another");
  mapset->add_option("--mod", common.mod, "Odd prime modulus")->required();
  mapset->add_option("--from", from_text, "Source set")->required();
  mapset->add_option("--to", to_text, "Target set")->required();

  auto* table31 = app.add_subcommand("table31", "Pinning table: f(a0), f(a1) fixed, remaining images marked");
  int table_mod = 11;
  std::string table_from = "0,2,3,4,8", table_to = "0,3,4,5,6";
  table31->add_option("--mod", table_mod, "Modulus")->capture_default_str();
  table31->add_option("--from", table_from, "Source set, in pinning order")->capture_default_str();
  table31->add_option("--to", table_to, "Target set")->capture_default_str();

  auto* screen = app.add_subcommand("screen", "Screen the one-color removals of a set");
  screen->add_option("--mod", common.mod, "Odd modulus")->required();
  screen->add_option("--set", set_text, "Comma separated residues")->required();

  auto* search = app.add_subcommand("search", "Colored Reidemeister search for fewer colors");
  add_input(search, in);
  search->add_option("--mod", common.mod, "Prime modulus")->required();
  SearchOptions sopt;
  int target = 0;
  bool first_class = false;
  search->add_option("--target-size", target, "Stop at this palette size");
  search->add_option("--max-crossings", sopt.budget.max_crossings, "Crossing cap (default: start + 6)");
  search->add_option("--max-depth", sopt.budget.max_depth, "Moves per palette improvement")->capture_default_str();
  search->add_option("--max-nodes", sopt.budget.max_nodes, "Node budget")->capture_default_str();
  search->add_option("--max-seconds", sopt.budget.max_seconds, "Wall-clock budget per class (0: none)");
  search->add_flag("--first-class", first_class, "Search only the first equivalence class");
  search->add_flag("--allow-kinks", sopt.allow_kinks, "Generate R1+ moves");
  search->add_flag("--keep-palette", sopt.keep_palette, "Only R2+ moves whose new color is already present");
  search->add_option("--lookahead", sopt.lookahead, "R3 chain length expanded after each R2+")->capture_default_str();
  search->add_flag("--plan-to-target", sopt.plan_to_target, "Measure progress against target-size subsets");

  auto* repro = app.add_subcommand("reproduce", "Run the reproduction suite");
  reproduce::Options ropt;
  bool skip_search = false, skip_stretch = false;
  repro->add_flag("--skip-search", skip_search, "Skip the search witnesses");
  repro->add_flag("--skip-stretch", skip_stretch, "Skip the larger knots in the search check");
  repro->add_option("--seconds-per-knot", ropt.seconds_per_knot, "Search time per required knot")->capture_default_str();
  repro->add_option("--seconds-per-stretch", ropt.seconds_per_stretch, "Search time per stretch knot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  Output o;
  try {
    if (cmd == det) {
      auto [label, d] = load(in);
      SNFSummary s = link_determinant(d);
      o.inputs["diagram"] = label;
      o.result["det"] = s.det_link.str();
      std::vector<std::string> diag;
      for (const auto& x : s.diagonal) diag.push_back(x.str());
      o.result["det"] = json::parse(s.det_link.str());
      o.result["diagonal"] = json::array();
      for (const auto& x : diag) o.result["diagonal"].push_back(json::parse(x));
      o.text = s.det_link.str();
    } else if (cmd == nullity) {
      auto [label, d] = load(in);
      Modulus m = need_mod(common);
      if (!m.is_prime()) throw UsageError("--mod must be prime");
      int n = link_determinant(d).nullity_of(m.value());
      o.inputs = {{"diagram", label}, {"mod", m.value()}};
      o.result["nullity"] = n;
      o.text = std::to_string(n);
    } else if (cmd == colorings) {
      auto [label, d] = load(in);
      Modulus m = need_mod(common);
      if (!m.is_prime()) throw UsageError("--mod must be prime");
      auto all = enumerate_nontrivial(d, m);
      o.inputs = {{"diagram", label}, {"mod", m.value()}};
      o.result["count"] = all.size();
      o.result["colorings"] = json::array();
      std::ostringstream t;
      t << all.size() << " non-trivial colorings\n";
      for (std::size_t i = 0; i < all.size() && (limit <= 0 || static_cast<int>(i) < limit); ++i) {
        o.result["colorings"].push_back(all[i].values);
        t << values_text(all[i].values) << '\n';
      }
      o.text = t.str();
    } else if (cmd == classes) {
      auto [label, d] = load(in);
      Modulus m = need_mod(common);
      if (!m.is_prime()) throw UsageError("--mod must be prime");
      auto cls = equivalence_classes(d, m);
      o.inputs = {{"diagram", label}, {"mod", m.value()}};
      o.result["classes"] = cls.size();
      o.result["members"] = json::array();
      o.result["representatives"] = json::array();
      std::ostringstream t;
      t << cls.size() << " classes\n";
      for (const auto& k : cls) {
        Coloring norm = normalize_to_012(d, k.representative);
        o.result["members"].push_back(k.members.size());
        o.result["representatives"].push_back(
            {{"coloring", norm.values}, {"palette", to_json(palette_of(norm))}, {"size", k.members.size()}});
        t << k.members.size() << " colorings, representative " << values_text(norm.values) << '\n';
      }
      o.text = t.str();
    } else if (cmd == mincol) {
      auto [label, d] = load(in);
      Modulus m = need_mod(common);
      if (!m.is_prime()) throw UsageError("--mod must be prime");
      int n = min_colors_on_diagram(d, m);
      o.inputs = {{"diagram", label}, {"mod", m.value()}};
      o.result["min_colors"] = n;
      o.text = std::to_string(n);
    } else if (cmd == orbit) {
      Modulus m = need_mod(common);
      Palette s = need_set(set_text, m, "--set");
      auto orb = orbit_of_set(s, m);
      o.inputs = {{"mod", m.value()}, {"set", to_json(s)}};
      o.result["size"] = orb.size();
      o.result["orbit"] = json::array();
      std::ostringstream t;
      for (const auto& x : orb) {
        o.result["orbit"].push_back(to_json(x));
        t << x.to_string() << '\n';
      }
      o.text = t.str();
    } else if (cmd == mapset) {
      Modulus m = need_mod(common);
      if (!m.is_prime() || !m.is_odd()) throw UsageError("--mod must be an odd prime");
      Palette a = need_set(from_text, m, "--from"), b = need_set(to_text, m, "--to");
      if (a.size() != b.size()) throw UsageError("--from and --to differ in size");
      auto f = find_map_between_sets(a, b, m);
      o.inputs = {{"mod", m.value()}, {"from", to_json(a)}, {"to", to_json(b)}};
      o.result["map"] = f ? to_json(*f) : json("NONE");
      o.text = f ? f->to_string() : "NONE";
    } else if (cmd == table31) {
      Modulus m(table_mod);
      if (!m.is_prime() || !m.is_odd()) throw UsageError("--mod must be an odd prime");
      std::vector<int> from;
      for (const auto& tok : foxcolor::detail::split_ws(table_from))
        from.push_back(m.reduce(foxcolor::detail::parse_int(tok, "--from")));
      if (from.size() < 2) throw UsageError("--from needs at least two elements");
      Palette to = need_set(table_to, m, "--to");
      auto rows = pinning_table(from, to, m);
      o.inputs = {{"mod", m.value()}, {"from", from}, {"to", to_json(to)}};
      o.result["rows"] = json::array();
      for (const auto& r : rows)
        o.result["rows"].push_back({{"images_pinned", {r.image0, r.image1}},
                                    {"lambda", r.lambda},
                                    {"mu", r.mu},
                                    {"images", r.images},
                                    {"outside", r.outside}});
      o.result["every_row_marked"] =
          std::all_of(rows.begin(), rows.end(), [](const PinningRow& r) { return r.marks() >= 1; });
      o.text = pinning_text(rows, from);
    } else if (cmd == screen) {
      Modulus m = need_mod(common);
      if (!m.is_odd()) throw UsageError("--mod must be odd");
      Palette s = need_set(set_text, m, "--set");
      if (s.size() < 2) throw UsageError("--set needs at least two colors");
      o.inputs = {{"mod", m.value()}, {"set", to_json(s)}};
      o.result["subsets"] = json::array();
      std::ostringstream t;
      for (const auto& r : screen_candidates(s, m)) {
        std::vector<std::string> tests;
        for (Test x : r.blocked_by) tests.push_back(test_name(x));
        json row{{"removed", r.removed},
                 {"subset", to_json(r.subset)},
                 {"verdict", r.blocked() ? "BLOCKED" : "CANDIDATE"},
                 {"blocked_by", tests}};
        if (r.affine_witness) row["witness"] = to_json(*r.affine_witness);
        if (!r.integral_pairs.empty()) {
          row["integral_pairs"] = json::array();
          for (const auto& [c, pr] : r.integral_pairs) row["integral_pairs"].push_back({c, pr.first, pr.second});
        }
        o.result["subsets"].push_back(row);
        t << "-" << r.removed << " " << r.subset.to_string() << " "
          << (r.blocked() ? "BLOCKED by " + join(tests, ", ") : std::string("CANDIDATE"))
          << (r.affine_witness ? " witness " + r.affine_witness->to_string() : "") << '\n';
      }
      o.text = t.str();
    } else if (cmd == search) {
      auto [label, d] = load(in);
      Modulus m = need_mod(common);
      if (!m.is_prime()) throw UsageError("--mod must be prime");
      if (target > 0) sopt.target_size = target;
      sopt.all_classes = !first_class;
      auto results = minimize_colors(d, m, sopt);
      o.inputs = {{"diagram", label}, {"mod", m.value()}};
      if (target > 0) o.inputs["target_size"] = target;
      o.result["classes"] = json::array();
      std::ostringstream t;
      for (const auto& r : results) {
        json moves = json::array();
        std::vector<std::string> mtext;
        for (const auto& mv : r.certificate.moves) {
          moves.push_back(to_json(mv));
          mtext.push_back(mv.to_string());
        }
        auto v = verify_certificate(d, r.certificate);
        o.result["classes"].push_back({{"start_coloring", r.representative.values},
                                       {"start_palette", to_json(r.start_palette)},
                                       {"palette", to_json(r.best_palette)},
                                       {"moves", moves},
                                       {"final_pd", r.best.diagram.to_pd()},
                                       {"final_coloring", r.best.coloring().values},
                                       {"crossings", r.best.diagram.crossing_count()},
                                       {"reached_target", r.reached_target},
                                       {"verified", v.ok},
                                       {"nodes_generated", r.nodes_generated},
                                       {"nodes_expanded", r.nodes_expanded},
                                       {"below_known_bound", r.below_known_bound}});
        t << r.start_palette.to_string() << " -> " << r.best_palette.to_string() << " ("
          << r.best.diagram.crossing_count() << " crossings, " << r.certificate.moves.size() << " moves"
          << (v.ok ? ", verified" : ", NOT verified") << ")\n";
        if (!mtext.empty()) t << "  " << join(mtext, " ") << '\n';
        if (r.below_known_bound) throw std::logic_error("palette below the known lower bound: internal error");
      }
      o.text = t.str();
    } else if (cmd == repro) {
      ropt.run_search = !skip_search;
      ropt.run_stretch = !skip_stretch;
      bool all = true;
      std::ostringstream t;
      o.result["criteria"] = json::array();
      auto checks = reproduce::run_all(ropt, [&](const reproduce::Check& c) {
        if (common.text) {
          std::cout << reproduce::status(c) << " " << c.id << " " << c.title << '\n';
          for (const auto& line : c.details) std::cout << "    " << line << '\n';
          std::cout.flush();
        }
      });
      for (const auto& c : checks) {
        all = all && (c.pass || c.skipped);
        o.result["criteria"].push_back(
            {{"id", c.id}, {"title", c.title}, {"status", reproduce::status(c)}, {"details", c.details}});
      }
      o.result["all_pass"] = all;
      if (!common.text) emit(name, o, false, 0);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(name, o, common.text, seconds);
  return 0;
}
