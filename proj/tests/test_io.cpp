#include <doctest.h>

#include <sstream>

#include "semireg/construct.hpp"
#include "semireg/io.hpp"

using namespace semireg;

TEST_CASE("graph files round trip") {
  Graph g = spx_graph(4, 2);
  std::stringstream ss;
  write_graph(ss, g);
  Graph back = read_graph(ss);
  CHECK(back == g);
  std::istringstream bad("vertices 3\n0 1\n1 5\n");
  CHECK_THROWS_AS(read_graph(bad), std::runtime_error);
  std::istringstream comments("# triangle\nvertices 3\n\n0 1\n1 2\n2 0\n");
  CHECK(read_graph(comments).edge_count() == 3);
}

TEST_CASE("group files round trip") {
  PermGroup w = wreath_group(5, 1, WreathTarget::SPX);
  std::stringstream ss;
  write_group(ss, w);
  PermGroup back = read_group(ss);
  CHECK(back.degree() == w.degree());
  CHECK(back.generators() == w.generators());
  CHECK(back.order() == 320);
  std::istringstream cycles("degree 4\n(0 1 2 3)\n(0 1)\n");
  CHECK(read_group(cycles).order() == 24);
}

TEST_CASE("decomposition files round trip") {
  CycleDecomposition d = natural_decomposition(4, 2);
  std::stringstream ss;
  write_decomposition(ss, d);
  CHECK(read_decomposition(ss) == d);
}

TEST_CASE("digests") {
  CHECK(sha256_bytes("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_bytes("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("report header has a stable field order") {
  Json j = report_header("aut", {});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "command", "inputs"});
  CHECK(j["version"] == SEMIREG_VERSION);
  CHECK(to_json(px_graph(3, 1))["vertices"] == 6);
}
