// Command-line front end: reads a clutter document, runs one computation and
// prints a JSON report.
//
// Exit codes: 0 definitive positive answer, 1 definitive negative answer,
// 2 inconclusive or out of budget, 3 bad input or usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "admcm/acceptance.hpp"
#include "admcm/chordal.hpp"
#include "admcm/cm.hpp"
#include "admcm/document.hpp"
#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "admcm/linear_quotients.hpp"
#include "admcm/simd/kernels.hpp"

using json = nlohmann::ordered_json;
using namespace admcm;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInconclusive = 2, kInput = 3 };

struct Globals {
  unsigned threads = 1;
  bool deterministic = false;
  bool minimalize = false;
  std::string simd = "auto";
  std::size_t max_covers = CoverBudget{}.max_covers;
  std::size_t max_nodes = CoverBudget{}.max_nodes;
  std::size_t face_budget = CMOptions{}.face_budget;
  std::size_t link_budget = CMOptions{}.link_face_budget;
  std::size_t betti_budget = std::size_t{1} << 26;
  std::uint32_t characteristic = 2;
  std::string input = "-";
  std::string command;
};

struct Loaded {
  std::string text;
  ClutterDocument doc;
};

Loaded load(const Globals& g) {
  Loaded l;
  if (g.input == "-") {
    l.text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(g.input, std::ios::binary);
    if (!f) throw InputError("cannot read " + g.input);
    l.text.assign(std::istreambuf_iterator<char>(f), {});
  }
  l.doc = parse_document(l.text, g.minimalize);
  for (const auto& w : l.doc.warnings) std::cerr << "warning: " << w << "\n";
  return l;
}

CoverBudget covers(const Globals& g) { return CoverBudget{g.max_covers, g.max_nodes}; }

CMOptions cm_options(const Globals& g) {
  CMOptions o;
  o.face_budget = g.face_budget;
  o.link_face_budget = g.link_budget;
  o.threads = g.threads;
  o.covers = covers(g);
  return o;
}

json labels(const Clutter& c, VertexSet s) { return c.labels_of(s); }

json set_list(const Clutter& c, const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (VertexSet s : sets) arr.push_back(labels(c, s));
  return arr;
}

json grid_json(const Clutter& c, const GridStructure& grid) {
  return json{{"colors", set_list(c, grid.colors())}, {"matching", set_list(c, grid.matching())}};
}

class Reporter {
 public:
  explicit Reporter(const Globals& g) : g_(g), t0_(std::chrono::steady_clock::now()) {
    report_["command"] = g.command;
  }

  void input(const Loaded& l) {
    report_["input"] = {{"source", g_.input}, {"digest", "fnv1a64:" + content_digest(l.text)}};
  }

  json& result() { return report_["result"]; }

  int emit(int code) {
    report_["characteristic"] = g_.characteristic;
    report_["budgets"] = {{"max_covers", g_.max_covers},   {"max_nodes", g_.max_nodes},
                          {"face_budget", g_.face_budget}, {"link_face_budget", g_.link_budget},
                          {"betti_budget", g_.betti_budget}};
    report_["exit_code"] = code;
    if (!g_.deterministic) {
      report_["timing"] = {
          {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count()},
          {"threads", g_.threads},
          {"simd", simd::active().name}};
    }
    std::cout << report_.dump(2) << "\n";
    return code;
  }

 private:
  const Globals& g_;
  std::chrono::steady_clock::time_point t0_;
  json report_;
};

GridStructure grid_for(const Loaded& l, bool find, const Globals& g) {
  if (l.doc.grid && !find) return *l.doc.grid;
  if (!find) throw InputError("this command needs 'colors' and 'matching' in the document (or --find-grid)");
  auto grid = find_grid_structure(l.doc.clutter, g.max_nodes * 10);
  if (!grid) throw InputError("no grid structure makes this clutter admissible");
  return *grid;
}

json cm_json(const Clutter& c, const SimplicialComplex& cx, const CMVerdict& v) {
  json r{{"status", to_string(v.status)}, {"exhaustive", v.exhaustive}, {"faces_checked", v.faces_checked}};
  if (v.status == CMStatus::NotCM) {
    r["witness_face"] = labels(c, v.witness_face);
    r["homology_index"] = v.homology_index;
    r["link_dimension"] = link(cx, v.witness_face).dimension();
  }
  if (!v.note.empty()) r["note"] = v.note;
  return r;
}

int cmd_covers(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const auto cs = minimal_vertex_covers(l.doc.clutter, covers(g));
  rep.result() = {{"count", cs.size()}, {"covers", set_list(l.doc.clutter, cs)}};
  return rep.emit(kOk);
}

int cmd_height(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  rep.result() = {{"height", height(l.doc.clutter, covers(g))}};
  return rep.emit(kOk);
}

int cmd_unmixed(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const auto cs = minimal_vertex_covers(l.doc.clutter, covers(g));
  std::vector<int> sizes;
  for (VertexSet c : cs)
    if (std::find(sizes.begin(), sizes.end(), c.size()) == sizes.end()) sizes.push_back(c.size());
  const bool unmixed = sizes.size() <= 1;
  rep.result() = {{"unmixed", unmixed}, {"cover_sizes", sizes}};
  return rep.emit(unmixed ? kOk : kNegative);
}

int cmd_dual(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter d = alexander_dual(l.doc.clutter, covers(g));
  rep.result() = {{"document", json::parse(serialize_document(d))}};
  return rep.emit(kOk);
}

int cmd_admissible(const Globals& g, bool find) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter& c = l.doc.clutter;
  if (find) {
    const auto grid = find_grid_structure(c, g.max_nodes * 10);
    rep.result()["admissible"] = grid.has_value();
    if (grid) rep.result()["grid"] = grid_json(c, *grid);
    return rep.emit(grid ? kOk : kNegative);
  }
  const GridStructure grid = grid_for(l, false, g);
  const auto r = is_admissible_instance(c, grid);
  rep.result() = {{"admissible", r.admissible},
                  {"offending_edges", set_list(c, r.offending_edges)},
                  {"missing_blocks", r.missing_blocks}};
  return rep.emit(r.admissible ? kOk : kNegative);
}

int cmd_linquot(const Globals& g, const std::string& order_name, bool find) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter& c = l.doc.clutter;
  const OrderName order = parse_order_name(order_name);
  const SquareFreeIdeal dual = SquareFreeIdeal::alexander_dual(c, covers(g));
  json& res = rep.result();
  res["order"] = std::string(to_string(order));
  std::vector<std::size_t> ordering;
  if (order == OrderName::Search) {
    const auto found = exists_linear_quotients_ordering(dual);
    if (!found) {
      res["success"] = false;
      res["note"] = "no ordering of the dual generators has linear quotients";
      return rep.emit(kNegative);
    }
    ordering = *found;
  } else {
    const GridStructure grid = grid_for(l, find, g);
    const int d = grid.d();
    if (order == OrderName::GridG4) {
      try {
        ordering = order_g4(make_instance(c, grid)).ordering;
      } catch (const ConditionStarError& e) {
        res["success"] = false;
        res["bad_pair"] = {{"first", labels(c, e.pair().first_cover)}, {"second", labels(c, e.pair().second_cover)}};
        res["note"] = e.what();
        return rep.emit(kNegative);
      }
    } else {
      int (*cmp)(int, const ExponentVector&, const ExponentVector&) = nullptr;
      int need_g = 0;
      switch (order) {
        case OrderName::GridG2: cmp = compare_g2, need_g = 2; break;
        case OrderName::GridG3: cmp = compare_g3, need_g = 3; break;
        case OrderName::GridG3Alt: cmp = compare_g3_alt, need_g = 3; break;
        case OrderName::Lex: cmp = compare_lex; break;
        default: cmp = compare_revlex; break;
      }
      if (need_g && grid.g() != need_g)
        throw InputError("order " + order_name + " needs g = " + std::to_string(need_g) + ", the grid has g = " +
                         std::to_string(grid.g()));
      ordering = ordering_by(dual, grid, [&](const ExponentVector& a, const ExponentVector& b) { return cmp(d, a, b); });
    }
  }
  const auto report = check_linear_quotients(dual, ordering);
  res["success"] = report.success;
  json ord = json::array();
  for (std::size_t k : report.ordering) ord.push_back(labels(c, dual.generators()[k]));
  res["ordering"] = ord;
  json steps = json::array();
  for (const auto& s : report.steps)
    steps.push_back({{"generator", labels(c, dual.generators()[s.generator])},
                     {"colon", set_list(c, s.colon)},
                     {"linear", s.linear}});
  res["certificate"] = steps;
  if (report.witness) {
    const auto& w = *report.witness;
    res["witness"] = {{"position", w.position},
                      {"current", labels(c, dual.generators()[w.current])},
                      {"earlier", labels(c, dual.generators()[w.earlier])},
                      {"quotient", labels(c, w.quotient)},
                      {"quotient_degree", w.quotient.size()}};
  }
  return rep.emit(report.success ? kOk : kNegative);
}

int cmd_condition_star(const Globals& g, bool find) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter& c = l.doc.clutter;
  const auto inst = make_instance(c, grid_for(l, find, g));
  const auto bad = satisfies_condition_star(inst);
  rep.result()["condition_star"] = bad.has_value();
  if (bad)
    rep.result()["bad_pair"] = {{"first", labels(c, bad->first_cover)},
                                {"first_exponents", bad->first},
                                {"second", labels(c, bad->second_cover)},
                                {"second_exponents", bad->second}};
  return rep.emit(bad ? kNegative : kOk);
}

int cmd_cm(const Globals& g, bool witness_only) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  CMOptions o = cm_options(g);
  o.witness_only = witness_only;
  const PrimeField field(g.characteristic);
  const auto cx = independence_complex(l.doc.clutter, o.covers);
  const CMVerdict v = reisner_check(cx, field, o);
  rep.result() = cm_json(l.doc.clutter, cx, v);
  return rep.emit(v.status == CMStatus::CM ? kOk : v.status == CMStatus::NotCM ? kNegative : kInconclusive);
}

int cmd_betti(const Globals& g, bool edge) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter& c = l.doc.clutter;
  const PrimeField field(g.characteristic);
  const SquareFreeIdeal ideal =
      edge ? SquareFreeIdeal::edge_ideal(c) : SquareFreeIdeal::alexander_dual(c, covers(g));
  const BettiTable t = betti_numbers(ideal, field, std::nullopt, g.betti_budget);
  json& res = rep.result();
  res["ideal"] = edge ? "edge" : "dual";
  json coarse = json::array();
  for (const auto& [key, v] : t.coarse) coarse.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  res["coarse"] = coarse;
  json fine = json::array();
  for (const auto& [key, v] : t.fine)
    fine.push_back({{"i", key.first}, {"sigma", labels(c, key.second)}, {"beta", v}});
  res["fine"] = fine;
  if (const auto q = ideal.degree()) {
    bool linear = true;
    for (const auto& [key, v] : t.coarse) linear = linear && key.second == key.first + *q;
    res["linear"] = linear;
  }
  return rep.emit(kOk);
}

Clutter graph_of(const Loaded& l) {
  for (VertexSet e : l.doc.clutter.edges())
    if (e.size() != 2) throw InputError("expected a graph: edge " + l.doc.clutter.format(e) + " has " +
                                        std::to_string(e.size()) + " vertices");
  return l.doc.clutter;
}

int cmd_chordal(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const Clutter graph = graph_of(l);
  const auto r = is_chordal(graph);
  rep.result()["chordal"] = r.chordal;
  if (r.chordal) {
    json order = json::array();
    for (int v : r.elimination_order) order.push_back(graph.labels()[static_cast<std::size_t>(v)]);
    rep.result()["elimination_order"] = order;
  }
  return rep.emit(r.chordal ? kOk : kNegative);
}

int cmd_froberg(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const bool ok = froberg_check(graph_of(l));
  rep.result() = {{"complement_chordal", ok}, {"edge_ideal_linear", ok}};
  return rep.emit(ok ? kOk : kNegative);
}

int cmd_recover(const Globals& g) {
  Reporter rep(g);
  const Loaded l = load(g);
  rep.input(l);
  const auto r = recover_structure_g2(l.doc.clutter, PrimeField(g.characteristic), cm_options(g));
  rep.result()["recovered"] = r.grid.has_value();
  if (r.grid) rep.result()["grid"] = grid_json(l.doc.clutter, *r.grid);
  if (!r.log.empty()) rep.result()["log"] = r.log;
  return rep.emit(r.grid ? kOk : kNegative);
}

int emit_document(const AdmissibleInstance& inst) {
  std::cout << serialize_document(inst.clutter, &inst.grid);
  return kOk;
}

int cmd_verify(const Globals& g) {
  Reporter rep(g);
  AcceptanceOptions opt;
  opt.threads = g.threads;
  int failed = 0;
  json arr = json::array();
  for (int id = 1; id <= 12; ++id) {
    const auto r = run_criterion(id, opt);
    std::cerr << format_result(r) << "\n";
    failed += r.passed ? 0 : 1;
    json item{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"limit_seconds", r.limit_seconds}};
    if (!g.deterministic) item["seconds"] = r.seconds;
    arr.push_back(item);
  }
  rep.result() = {{"criteria", arr}, {"failed", failed}};
  return rep.emit(failed ? kNegative : kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible clutters: covers, linear quotients and Cohen-Macaulay checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for the Reisner pass")->check(CLI::Range(1u, 256u));
  app.add_flag("--deterministic", g.deterministic, "Omit timing so identical runs give identical reports");
  app.add_flag("--minimalize", g.minimalize, "Drop edges that contain other edges instead of rejecting them");
  app.add_option("--simd", g.simd, "Kernel variant: auto, scalar or avx2");
  app.add_option("--max-covers", g.max_covers, "Cover enumeration budget");
  app.add_option("--max-nodes", g.max_nodes, "Search node budget");
  app.add_option("--face-budget", g.face_budget, "Faces for an exhaustive Reisner pass");
  app.add_option("--link-budget", g.link_budget, "Faces per link in witness search");
  app.add_option("--betti-budget", g.betti_budget, "Subset work for Betti tables");

  auto input_opt = [&](CLI::App* sub) { sub->add_option("input", g.input, "Document path, or - for stdin"); };
  auto char_opt = [&](CLI::App* sub) { sub->add_option("--char", g.characteristic, "Field characteristic (prime)"); };

  auto* covers_cmd = app.add_subcommand("covers", "Minimal vertex covers");
  auto* height_cmd = app.add_subcommand("height", "Height (minimum cover size)");
  auto* unmixed_cmd = app.add_subcommand("unmixed", "Do all minimal covers have one size?");
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual clutter");
  bool find_grid = false;
  auto* adm_cmd = app.add_subcommand("admissible", "Admissibility under the document's grid");
  adm_cmd->add_flag("--find-grid", find_grid, "Search for a grid instead");
  std::string order = "paper-g3";
  auto* lq_cmd = app.add_subcommand("linquot", "Linear quotients of the dual ideal");
  lq_cmd->add_option("--order", order, "paper-g2|paper-g3|paper-g3-alt|paper-g4|lex|revlex|search");
  lq_cmd->add_flag("--find-grid", find_grid, "Search for a grid when the document has none");
  auto* star_cmd = app.add_subcommand("condition-star", "Look for a bad cover pair (g = 4)");
  star_cmd->add_flag("--find-grid", find_grid, "Search for a grid when the document has none");
  bool witness_only = false;
  auto* cm_cmd = app.add_subcommand("cm", "Cohen-Macaulay test by Reisner's criterion");
  cm_cmd->add_flag("--witness-only", witness_only, "Only search for a non-CM witness");
  std::string ideal_kind = "dual";
  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti numbers by Hochster's formula");
  betti_cmd->add_option("--ideal", ideal_kind, "dual (default) or edge")->check(CLI::IsMember({"dual", "edge"}));
  auto* chordal_cmd = app.add_subcommand("chordal", "Chordality of a graph");
  auto* froberg_cmd = app.add_subcommand("froberg", "Chordality of the complement graph");
  auto* recover_cmd = app.add_subcommand("recover-g2", "Recover colors and matching at height 2");
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();
  int gen_g = 4, gen_d = 3, gen_extra = 1;
  std::uint64_t gen_seed = 1;
  bool gen_unmixed = false;
  auto* gen_ce = gen_cmd->add_subcommand("counterexample", "The non-CM admissible family, g >= 4");
  gen_ce->add_option("--g", gen_g, "Height")->required();
  auto* gen_rand = gen_cmd->add_subcommand("random", "Random admissible instance");
  gen_rand->add_option("--d", gen_d, "Colors")->required();
  gen_rand->add_option("--g", gen_g, "Blocks")->required();
  gen_rand->add_option("--extra", gen_extra, "Extra edges beyond the matching");
  gen_rand->add_option("--seed", gen_seed, "Seed");
  gen_rand->add_flag("--unmixed", gen_unmixed, "Redraw until unmixed");
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance suite");

  for (auto* s : {covers_cmd, height_cmd, unmixed_cmd, dual_cmd, adm_cmd, lq_cmd, star_cmd, cm_cmd, betti_cmd,
                  chordal_cmd, froberg_cmd, recover_cmd})
    input_opt(s);
  for (auto* s : {cm_cmd, betti_cmd, recover_cmd}) char_opt(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  for (int k = 0; k < argc; ++k) g.command += (k ? " " : "") + std::string(argv[k]);
  // argv[0] varies with the install path; keep the echo stable.
  g.command = g.command.substr(g.command.find(' ') == std::string::npos ? g.command.size() : g.command.find(' ') + 1);

  try {
    if (!simd::select(g.simd)) throw InputError("unknown or unavailable SIMD variant '" + g.simd + "'");
    PrimeField check(g.characteristic);
    (void)check;
    if (*covers_cmd) return cmd_covers(g);
    if (*height_cmd) return cmd_height(g);
    if (*unmixed_cmd) return cmd_unmixed(g);
    if (*dual_cmd) return cmd_dual(g);
    if (*adm_cmd) return cmd_admissible(g, find_grid);
    if (*lq_cmd) return cmd_linquot(g, order, find_grid);
    if (*star_cmd) return cmd_condition_star(g, find_grid);
    if (*cm_cmd) return cmd_cm(g, witness_only);
    if (*betti_cmd) return cmd_betti(g, ideal_kind == "edge");
    if (*chordal_cmd) return cmd_chordal(g);
    if (*froberg_cmd) return cmd_froberg(g);
    if (*recover_cmd) return cmd_recover(g);
    if (*gen_ce) return emit_document(gen_counterexample(gen_g));
    if (*gen_rand)
      return emit_document(gen_unmixed ? sample_unmixed(gen_d, gen_g, gen_extra, gen_seed)
                                       : gen_random_admissible(gen_d, gen_g, gen_extra, gen_seed));
    if (*verify_cmd) return cmd_verify(g);
  } catch (const ResourceError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
