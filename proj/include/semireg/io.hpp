#pragma once
// Text formats and JSON reports.
//
//   graph:          "vertices n" then one "u v" line per edge (u < v)
//   group:          "degree n" then one generator per line
//   decomposition:  one cycle per line, "(v0 v1 ... )"
// Blank lines and lines starting with '#' are ignored on input.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semireg/construct.hpp"
#include "semireg/decomp.hpp"
#include "semireg/finder.hpp"
#include "semireg/graph.hpp"
#include "semireg/perm.hpp"
#include "semireg/quotient.hpp"

namespace semireg {

using Json = nlohmann::ordered_json;

/// Throws std::runtime_error with a line number on malformed input.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
PermGroup read_group(std::istream& in);
void write_group(std::ostream& out, const PermGroup& group);
void write_generators(std::ostream& out, std::size_t degree, const std::vector<Permutation>& gens);
CycleDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const CycleDecomposition& d);

Graph read_graph_file(const std::string& path);
PermGroup read_group_file(const std::string& path);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);
std::string sha256_bytes(const std::string& bytes);

Json to_json(const Graph& g);
Json to_json(const ClassificationResult& c);
Json to_json(const SemiregularWitness& w);
Json to_json(const BoringReport& r);

/// Report envelope: tool name, version, command and input digests.
Json report_header(const std::string& command, const std::vector<std::string>& input_files);

}  // namespace semireg
