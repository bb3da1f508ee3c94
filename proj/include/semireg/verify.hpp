#pragma once
// Reproducible checks of the constructions, lemmas and theorems, shared by
// the acceptance binary and `semireg verify-paper`.

#include <cstdint>
#include <string>
#include <vector>

#include "semireg/corpus.hpp"

namespace semireg {

struct CriterionResult {
  int id = 0;
  std::string section;
  std::string description;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct VerifyOptions {
  CorpusOptions corpus;
  std::uint64_t cap = 100000;
  std::size_t wreath_samples = 1000;
  std::uint64_t seed = 7;
  /// Largest |G| for which the full brute-force oracle runs.
  std::uint64_t oracle_limit = 2000;
};

/// Section names in criterion order.
const std::vector<std::string>& verify_sections();

struct GrowthRow {
  std::size_t vertices = 0;
  std::size_t pairs = 0;
  std::uint64_t min_witness = 0;
  std::uint64_t max_witness = 0;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  /// Witness orders by graph order over the corpus; informational only.
  std::vector<GrowthRow> growth;
  bool passed() const;
};

/// Runs the named sections (all when empty). Sections sharing the corpus
/// run reuse it. Unknown names throw std::invalid_argument.
VerifyReport run_verification(const std::vector<std::string>& sections, const VerifyOptions& options = {});

}  // namespace semireg
