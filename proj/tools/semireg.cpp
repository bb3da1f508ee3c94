// semireg: constructions, automorphism groups, classification and the
// semiregular-subgroup finder from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semireg/construct.hpp"
#include "semireg/corpus.hpp"
#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/finder.hpp"
#include "semireg/io.hpp"
#include "semireg/quotient.hpp"
#include "semireg/search.hpp"
#include "semireg/verify.hpp"

namespace fs = std::filesystem;
using namespace semireg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::size_t r = 0, s = 0, n = 0;
  std::uint64_t cap = kDefaultCap;
  bool oracle = false;
  bool wreath = false;
  std::vector<std::string> sections;
  std::string out;
  std::string format = "json";
  std::string graph_file, group_file, normal_file;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

// Report goes to OUT/<name>.json when --out is set, otherwise to stdout.
void emit(const Options& o, const std::string& name, const Json& report) {
  std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(o.out);
  write_text(fs::path(o.out) / (name + ".json"), text);
}

Json generators_json(const std::vector<Permutation>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(to_cycle_string(g));
  return a;
}

int cmd_construct(const Options& o) {
  Graph g;
  std::optional<PermGroup> group;
  std::string name = o.family;
  if (o.family == "px" || o.family == "spx") {
    if (!o.r || !o.s) throw UsageError(o.family + " needs --r and --s");
    check_px_parameters(o.r, o.s);
    bool split_graph = o.family == "spx";
    g = split_graph ? spx_graph(o.r, o.s) : px_graph(o.r, o.s);
    if (o.wreath) group = wreath_group(o.r, o.s, split_graph ? WreathTarget::SPX : WreathTarget::PX);
    name += "_" + std::to_string(o.r) + "_" + std::to_string(o.s);
  } else if (o.family == "ladder" || o.family == "moebius") {
    if (!o.n) throw UsageError(o.family + " needs --n");
    g = o.family == "ladder" ? circular_ladder(o.n) : moebius_ladder(o.n);
    name += "_" + std::to_string(o.n);
  } else if (o.family == "k4") {
    g = k4();
  } else if (o.family == "k33") {
    g = k33();
  } else if (o.family == "q3") {
    g = q3();
  } else if (o.family == "petersen") {
    if (!o.n || !o.s) throw UsageError("petersen needs --n and --s (the step k)");
    g = generalized_petersen(o.n, o.s);
    name = "gp_" + std::to_string(o.n) + "_" + std::to_string(o.s);
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  if (o.wreath && !group) throw UsageError("--wreath applies to px and spx only");

  std::ostringstream gs;
  write_graph(gs, g);
  std::string group_text;
  if (group) {
    std::ostringstream ps;
    write_group(ps, *group);
    group_text = ps.str();
  }
  if (o.out.empty()) {
    std::cout << gs.str() << group_text;
  } else {
    fs::create_directories(o.out);
    write_text(fs::path(o.out) / (name + ".graph"), gs.str());
    if (group) write_text(fs::path(o.out) / (name + ".group"), group_text);
  }
  std::cerr << name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
  if (group) std::cerr << ", wreath group of order " << group->order();
  std::cerr << "\n";
  return 0;
}

int cmd_aut(const Options& o) {
  Graph g = read_graph_file(o.graph_file);
  SearchLimits limits;
  limits.max_vertices = std::max<std::size_t>(limits.max_vertices, g.vertex_count());
  PermGroup aut = automorphism_group(g, limits);
  Json j = report_header("aut", {o.graph_file});
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["order"] = aut.order();
  j["vertex_transitive"] = aut.is_transitive();
  j["generators"] = generators_json(aut.generators());
  emit(o, "aut", j);
  std::cerr << "|Aut| = " << aut.order() << "\n";
  return 0;
}

int cmd_decomp_verify(const Options& o) {
  std::vector<BoringReport> reps;
  if (o.r || o.s) {
    if (!o.r || !o.s) throw UsageError("give both --r and --s, or neither");
    check_px_parameters(o.r, o.s);
    reps.push_back(check_unique_decomposition(o.r, o.s));
  } else {
    reps = verify_lemma_boring_r4();
  }
  Json j = report_header("decomp-verify", {});
  Json a = Json::array();
  bool ok = true;
  for (const auto& rep : reps) {
    a.push_back(to_json(rep));
    ok = ok && rep.passed();
    std::cerr << "PX(2," << rep.r << "," << rep.s << "): " << rep.arc_transitive
              << " arc-transitive decompositions in " << rep.classes << " class(es)\n";
  }
  j["graphs"] = std::move(a);
  j["passed"] = ok;
  emit(o, "decomp-verify", j);
  return ok ? 0 : 1;
}

int cmd_classify(const Options& o) {
  Graph g = read_graph_file(o.graph_file);
  PermGroup group = read_group_file(o.group_file);
  std::vector<std::string> inputs{o.graph_file, o.group_file};
  std::optional<PermGroup> n;
  if (!o.normal_file.empty()) {
    n = read_group_file(o.normal_file);
    inputs.push_back(o.normal_file);
  }
  Json j = report_header("classify", inputs);
  try {
    ClassificationResult res = classify_theorem12(g, group, n, o.cap);
    j["result"] = to_json(res);
    emit(o, "classify", j);
    std::cerr << "classified as " << family_name(res.family, res.r, res.s) << "\n";
    return 0;
  } catch (const HypothesisViolation& e) {
    j["violation"] = {{"kind", e.kind()}, {"detail", e.what()}};
    emit(o, "classify", j);
    std::cerr << "hypothesis violated (" << e.kind() << "): " << e.what() << "\n";
    bool input_problem = e.kind() == "not-cubic" || e.kind() == "disconnected" ||
                         e.kind() == "not-automorphisms" || e.kind() == "not-vertex-transitive" ||
                         e.kind() == "invalid-normal-subgroup";
    return input_problem ? 2 : 1;
  }
}

int cmd_find(const Options& o) {
  Graph g = read_graph_file(o.graph_file);
  PermGroup group = read_group_file(o.group_file);
  Json j = report_header("find-semiregular", {o.graph_file, o.group_file});
  SemiregularWitness w;
  try {
    w = find_semiregular(g, group, o.cap);
  } catch (const HypothesisViolation& e) {
    j["violation"] = {{"kind", e.kind()}, {"detail", e.what()}};
    emit(o, "find-semiregular", j);
    std::cerr << "hypothesis violated (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  }
  j["witness"] = to_json(w);
  std::cerr << "semiregular subgroup of order " << w.order << " via " << strategy_name(w.strategy) << "\n";
  int code = 0;
  if (o.oracle) {
    SemiregularWitness best = max_semiregular_bruteforce(g, group, o.cap);
    bool ok = verify_witness(group, best) && (best.mode != "full" || w.order <= best.order);
    j["oracle"] = to_json(best);
    j["oracle_consistent"] = ok;
    std::cerr << "oracle (" << best.mode << " mode): order " << best.order << "\n";
    if (!ok) code = 1;
  }
  emit(o, "find-semiregular", j);
  return code;
}

int cmd_corpus(const Options& o) {
  CorpusOptions copt;
  if (o.n) copt.max_vertices = o.n;
  auto graphs = corpus_graphs(copt);
  auto pairs = corpus_pairs(graphs, copt);
  Json j = report_header("corpus", {});
  j["max_vertices"] = copt.max_vertices;
  j["max_group_order"] = copt.max_group_order;
  j["graphs"] = graphs.size();
  Json a = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    Json e;
    e["name"] = p.name;
    e["vertices"] = p.graph.vertex_count();
    e["group_order"] = p.group.order();
    e["group_kind"] = p.group_kind;
    if (!o.out.empty()) {
      fs::path dir = fs::path(o.out) / "pairs";
      fs::create_directories(dir);
      std::string stem = "pair" + std::to_string(i);
      std::ostringstream gs, ps;
      write_graph(gs, p.graph);
      write_group(ps, p.group);
      write_text(dir / (stem + ".graph"), gs.str());
      write_text(dir / (stem + ".group"), ps.str());
      e["files"] = {"pairs/" + stem + ".graph", "pairs/" + stem + ".group"};
    }
    a.push_back(std::move(e));
  }
  j["pairs"] = std::move(a);
  emit(o, "corpus", j);
  std::cerr << graphs.size() << " graphs, " << pairs.size() << " pairs\n";
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vopt;
  vopt.cap = o.cap;
  VerifyReport rep = run_verification(o.sections, vopt);
  Json j = report_header("verify-paper", {});
  Json a = Json::array();
  for (const auto& r : rep.results) {
    a.push_back({{"criterion", r.id}, {"section", r.section}, {"description", r.description},
                 {"passed", r.passed}, {"detail", r.detail}});
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.section << " (" << r.seconds << " s): "
              << r.detail << "\n";
  }
  j["criteria"] = std::move(a);
  if (!rep.growth.empty()) {
    Json g = Json::array();
    for (const auto& row : rep.growth)
      g.push_back({{"vertices", row.vertices}, {"pairs", row.pairs}, {"min_witness", row.min_witness},
                   {"max_witness", row.max_witness}});
    j["growth"] = std::move(g);
  }
  j["passed"] = rep.passed();
  emit(o, "verify-paper", j);
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiregular subgroups of cubic vertex-transitive graphs", "semireg"};
  app.set_version_flag("--version", SEMIREG_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cap", o.cap, "Element enumeration cap")->capture_default_str();
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json"}));

  auto* construct = app.add_subcommand("construct", "Write a graph (and optionally its wreath group)");
  construct->add_option("family", o.family, "px | spx | ladder | moebius | k4 | k33 | q3 | petersen")
      ->required();
  construct->add_option("--r", o.r);
  construct->add_option("--s", o.s);
  construct->add_option("--n", o.n);
  construct->add_flag("--wreath", o.wreath, "Also write Z2 wr D_r acting on the graph");

  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph");
  aut->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);

  auto* decomp = app.add_subcommand("decomp-verify", "Arc-transitive 4-cycle decompositions of PX(2,r,s)");
  decomp->add_option("--r", o.r);
  decomp->add_option("--s", o.s);

  auto* classify = app.add_subcommand("classify", "Classify (graph, group) with an abelian normal non-semiregular subgroup");
  classify->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  classify->add_option("group", o.group_file)->required()->check(CLI::ExistingFile);
  classify->add_option("--normal", o.normal_file, "Generators of N")->check(CLI::ExistingFile);

  auto* find = app.add_subcommand("find-semiregular", "Find a large semiregular subgroup");
  find->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  find->add_option("group", o.group_file)->required()->check(CLI::ExistingFile);
  find->add_flag("--oracle", o.oracle, "Compare against brute force");

  auto* corpus = app.add_subcommand("corpus", "Generate the cubic vertex-transitive corpus");
  corpus->add_option("--n", o.n, "Largest number of vertices");

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify->add_option("--section", o.sections, "Run only these sections")
      ->check(CLI::IsMember(verify_sections()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*aut) return cmd_aut(o);
    if (*decomp) return cmd_decomp_verify(o);
    if (*classify) return cmd_classify(o);
    if (*find) return cmd_find(o);
    if (*corpus) return cmd_corpus(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "semireg: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "semireg: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "semireg: " << e.what() << " (raise --cap)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "semireg: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
