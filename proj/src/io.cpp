#include "semireg/io.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace semireg {
namespace {

bool skip(const std::string& line) {
  auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

std::size_t read_header(std::istream& in, const std::string& keyword, std::size_t& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    std::istringstream ls(line);
    std::string word;
    long long n = -1;
    if (!(ls >> word >> n) || word != keyword || n < 0) fail(lineno, "expected '" + keyword + " n'");
    return static_cast<std::size_t>(n);
  }
  fail(lineno, "missing '" + keyword + "' header");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::size_t lineno = 0;
  std::size_t n = read_header(in, "vertices", lineno);
  std::vector<Edge> es;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0) fail(lineno, "expected 'u v'");
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(n, es);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

PermGroup read_group(std::istream& in) {
  std::size_t lineno = 0;
  std::size_t n = read_header(in, "degree", lineno);
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    try {
      gens.push_back(parse_permutation(line, n));
    } catch (const std::exception& e) {
      fail(lineno, e.what());
    }
  }
  return PermGroup(n, std::move(gens));
}

void write_generators(std::ostream& out, std::size_t degree, const std::vector<Permutation>& gens) {
  out << "degree " << degree << '\n';
  for (const auto& g : gens) out << to_image_string(g) << '\n';
}

void write_group(std::ostream& out, const PermGroup& group) {
  write_generators(out, group.degree(), group.generators());
}

CycleDecomposition read_decomposition(std::istream& in) {
  std::vector<std::vector<Vertex>> cycles;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    auto open_at = line.find('('), close_at = line.find(')');
    if (open_at == std::string::npos || close_at == std::string::npos || close_at < open_at)
      fail(lineno, "expected '(v0 v1 ...)'");
    std::istringstream ls(line.substr(open_at + 1, close_at - open_at - 1));
    std::vector<Vertex> c;
    long long v;
    while (ls >> v) {
      if (v < 0) fail(lineno, "negative vertex");
      c.push_back(static_cast<Vertex>(v));
    }
    cycles.push_back(std::move(c));
  }
  return make_decomposition(std::move(cycles));
}

void write_decomposition(std::ostream& out, const CycleDecomposition& d) {
  for (const auto& c : d.cycles) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ")\n";
  }
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

PermGroup read_group_file(const std::string& path) {
  auto in = open(path);
  return read_group(in);
}

std::string sha256_bytes(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return sha256_bytes(bytes);
}

Json to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    Json labels = Json::array();
    for (const auto& l : g.labels()) labels.push_back(l.to_string());
    j["labels"] = std::move(labels);
  }
  return j;
}

Json to_json(const ClassificationResult& c) {
  Json j;
  j["family"] = family_name(c.family, c.r, c.s);
  if (c.family == Family::SPX) {
    j["r"] = c.r;
    j["s"] = c.s;
  }
  j["route"] = c.route;
  j["witness"] = to_image_string(c.witness);
  j["group_order"] = c.group_order;
  j["p"] = c.p;
  j["n_order"] = c.n_order;
  j["n_stabilizer_order"] = c.n_stabilizer;
  if (c.local_order) j["local_group_order"] = *c.local_order;
  if (c.k) j["k"] = *c.k;
  if (!c.matching.empty()) {
    Json m = Json::array();
    for (const auto& e : c.matching) m.push_back({e.u, e.v});
    j["matching"] = std::move(m);
  }
  if (c.merged_vertices) j["merged_quotient_vertices"] = *c.merged_vertices;
  if (c.faithful) j["faithful_on_merged_quotient"] = *c.faithful;
  if (c.round_trip) j["split_round_trip"] = *c.round_trip;
  if (c.natural_conjugate) j["decomposition_conjugate_to_natural"] = *c.natural_conjugate;
  return j;
}

Json to_json(const SemiregularWitness& w) {
  Json j;
  j["strategy"] = strategy_name(w.strategy);
  if (!w.mode.empty()) j["mode"] = w.mode;
  j["order"] = w.order;
  Json gens = Json::array();
  for (const auto& g : w.generators) gens.push_back(to_image_string(g));
  j["generators"] = std::move(gens);
  j["reduction_order"] = w.reduction_order;
  if (w.r) j["r"] = *w.r;
  if (w.base_sum) j["base_sum"] = int(*w.base_sum);
  if (w.cycle_length) j["quotient_cycle_length"] = *w.cycle_length;
  if (w.step) j["rotation_step"] = *w.step;
  if (w.centralizer_equals_n) j["centralizer_in_kernel_equals_n"] = *w.centralizer_equals_n;
  if (!w.fallback_reason.empty()) j["fallback_reason"] = w.fallback_reason;
  return j;
}

Json to_json(const BoringReport& r) {
  Json j;
  j["graph"] = "PX(2," + std::to_string(r.r) + "," + std::to_string(r.s) + ")";
  j["aut_order"] = r.aut_order;
  j["four_cycles"] = r.four_cycles;
  j["decompositions"] = r.decompositions;
  j["arc_transitive"] = r.arc_transitive;
  j["classes"] = r.classes;
  j["natural_is_arc_transitive"] = r.natural_is_arc_transitive;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(x ? Json(to_image_string(*x)) : Json());
  j["witnesses"] = std::move(w);
  j["passed"] = r.passed();
  return j;
}

Json report_header(const std::string& command, const std::vector<std::string>& input_files) {
  Json j;
  j["tool"] = "semireg";
  j["version"] = SEMIREG_VERSION;
  j["command"] = command;
  Json inputs = Json::array();
  for (const auto& f : input_files) inputs.push_back({{"path", f}, {"sha256", sha256_file(f)}});
  j["inputs"] = std::move(inputs);
  return j;
}

}  // namespace semireg
