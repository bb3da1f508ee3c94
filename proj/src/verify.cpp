#include "semireg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "semireg/construct.hpp"
#include "semireg/decomp.hpp"
#include "semireg/error.hpp"
#include "semireg/finder.hpp"
#include "semireg/quotient.hpp"
#include "semireg/search.hpp"
#include "semireg/subgroups.hpp"

namespace semireg {
namespace {

using Clock = std::chrono::steady_clock;

// Breadth-first closure under right multiplication by generators; nullopt
// past the cap. Independent of the stabilizer chain.
std::optional<std::vector<Permutation>> closure_elements(std::size_t degree,
                                                         const std::vector<Permutation>& gens,
                                                         std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out{Permutation(degree)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      Permutation x = out[i] * s;
      if (seen.insert(x).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(std::move(x));
      }
    }
  return out;
}

// Semiregular with the stated order, checked by fixed points over the
// enumerated subgroup.
bool witness_checks_out(std::size_t degree, const SemiregularWitness& w) {
  auto elems = closure_elements(degree, w.generators, 1u << 20);
  if (!elems || elems->size() != w.order) return false;
  for (const auto& x : *elems)
    if (!x.is_identity() && x.fixed_point_count() != 0) return false;
  return true;
}

std::string join_failures(const std::vector<std::string>& fails) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fails.size() && i < 5; ++i) out << (i ? "; " : "") << fails[i];
  if (fails.size() > 5) out << "; ...";
  return out.str();
}

struct Check {
  std::size_t total = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) failures.push_back(what);
  }
  std::string summary(const std::string& noun) const {
    std::ostringstream out;
    out << total << " " << noun << ", " << failures.size() << " failures";
    if (!failures.empty()) out << ": " << join_failures(failures);
    return out.str();
  }
};

std::string rs(std::size_t r, std::size_t s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

std::uint64_t expected_wreath_order(std::size_t r) { return (std::uint64_t{1} << r) * 2 * r; }

Check check_constructions() {
  Check c;
  for (std::size_t r = 3; r <= 8; ++r)
    for (std::size_t s = 1; s < r; ++s) {
      Graph px = px_graph(r, s);
      c.expect(px.vertex_count() == (r << s) && valency(px) == std::optional<std::size_t>(4) && is_connected(px),
               "px" + rs(r, s));
      Graph spx = spx_graph(r, s);
      c.expect(spx.vertex_count() == (r << (s + 1)) && valency(spx) == std::optional<std::size_t>(3) &&
                   is_connected(spx),
               "spx" + rs(r, s));
    }
  return c;
}

Check check_traversing_paths() {
  Check c;
  for (std::size_t r = 3; r <= 7; ++r)
    for (std::size_t s = 1; s < r; ++s) {
      Graph a = px_graph(r, s), b = px_via_traversing_paths(r, s);
      auto w = are_isomorphic(a, b);
      c.expect(w && is_isomorphism(a, b, *w), "px" + rs(r, s));
    }
  return c;
}

Check check_split_identity() {
  Check c;
  for (std::size_t r = 3; r <= 7; ++r)
    for (std::size_t s = 1; s < r; ++s) {
      Graph a = split(px_graph(r, s), natural_decomposition(r, s)), b = spx_graph(r, s);
      auto w = are_isomorphic(a, b);
      c.expect(w && is_isomorphism(a, b, *w), "spx" + rs(r, s));
    }
  return c;
}

Check check_aut_split() {
  Check c;
  const std::pair<std::size_t, std::size_t> params[] = {{5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}};
  for (auto [r, s] : params) {
    PermGroup aut = automorphism_group(spx_graph(r, s));
    PermGroup w = wreath_group(r, s, WreathTarget::SPX);
    bool same = aut.order() == expected_wreath_order(r) && w.order() == aut.order();
    for (const auto& g : w.generators()) same = same && aut.contains(g);
    for (const auto& g : aut.generators()) same = same && w.contains(g);
    c.expect(same, "spx" + rs(r, s) + " |Aut| = " + std::to_string(aut.order()));
  }
  return c;
}

Check check_px_aut() {
  Check c;
  for (std::size_t r : {3, 5, 6})
    for (std::size_t s = 1; s < r; ++s) {
      auto order = automorphism_group(px_graph(r, s)).order();
      c.expect(order == expected_wreath_order(r), "px" + rs(r, s) + " |Aut| = " + std::to_string(order));
    }
  return c;
}

Check check_lemma_boring() {
  Check c;
  for (const auto& rep : verify_lemma_boring_r4())
    c.expect(rep.passed() && rep.classes == 1,
             "PX(2,4," + std::to_string(rep.s) + ") classes = " + std::to_string(rep.classes));
  return c;
}

Check check_px_corollary(const VerifyOptions& opt) {
  Check c;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t r = 5; r <= 7; ++r) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < opt.wreath_samples; ++i) {
      WreathElement g = WreathElement::rotation(r, 1);
      for (auto& b : g.base) b = static_cast<std::uint8_t>(rng() & 1);
      WreathElement expect = WreathElement::identity(r);
      std::fill(expect.base.begin(), expect.base.end(), g.base_sum());
      // Algebraically and as permutations of S(PX).
      bool ok = g.pow(static_cast<long long>(r)) == expect;
      Permutation p = to_permutation(g, 1, WreathTarget::SPX);
      ok = ok && p.pow(static_cast<long long>(r)) == to_permutation(expect, 1, WreathTarget::SPX);
      if (!ok) ++bad;
    }
    c.expect(bad == 0, "r = " + std::to_string(r) + ": " + std::to_string(bad) + " powers wrong");
    for (std::size_t s = 1; s < r; ++s) {
      Graph g = spx_graph(r, s);
      PermGroup w = wreath_group(r, s, WreathTarget::SPX);
      try {
        SemiregularWitness wit = find_semiregular_case2(g, w, opt.cap);
        c.expect(wit.order >= r && verify_witness(w, wit) && witness_checks_out(g.vertex_count(), wit),
                 "case 2 on spx" + rs(r, s) + " order " + std::to_string(wit.order));
      } catch (const std::exception& e) {
        c.expect(false, "case 2 on spx" + rs(r, s) + ": " + e.what());
      }
    }
  }
  return c;
}

struct CorpusRun {
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  Check classification;
  Check round_trip;
  Check semiregular;
  std::size_t oracle_runs = 0;
  std::map<std::string, std::size_t> strategies;
  std::vector<GrowthRow> growth;
};

CorpusRun run_corpus(const std::vector<CorpusPair>& pairs, const VerifyOptions& opt) {
  CorpusRun run;
  run.pairs = pairs.size();
  std::map<std::size_t, GrowthRow> growth;
  for (const auto& pr : pairs) {
    const Graph& g = pr.graph;
    const PermGroup& grp = pr.group;
    bool has_n = false;
    try {
      has_n = find_abelian_normal_nonsemiregular(grp, opt.cap).has_value();
    } catch (const std::exception& e) {
      run.classification.expect(false, pr.name + ": " + e.what());
    }
    if (has_n) {
      try {
        ClassificationResult cls = classify_theorem12(g, grp, std::nullopt, opt.cap);
        run.classification.expect(is_isomorphism(g, cls.family_graph(), cls.witness),
                                  pr.name + ": witness does not verify");
        if (cls.merged_vertices)
          run.round_trip.expect(cls.round_trip.value_or(false), pr.name);
      } catch (const std::exception& e) {
        run.classification.expect(false, pr.name + ": " + e.what());
      }
    }
    try {
      SemiregularWitness w = find_semiregular(g, grp, opt.cap);
      bool ok = verify_witness(grp, w) && witness_checks_out(g.vertex_count(), w);
      if (grp.order() <= opt.oracle_limit) {
        ++run.oracle_runs;
        SemiregularWitness best = max_semiregular_bruteforce(g, grp, opt.cap, opt.oracle_limit);
        bool oracle_ok = best.mode == "full" && witness_checks_out(g.vertex_count(), best);
        ok = ok && oracle_ok && w.order <= best.order;
      }
      run.semiregular.expect(ok, pr.name + " (" + strategy_name(w.strategy) + ")");
      ++run.strategies[strategy_name(w.strategy)];
      auto& row = growth[g.vertex_count()];
      row.vertices = g.vertex_count();
      row.min_witness = row.pairs ? std::min(row.min_witness, w.order) : w.order;
      row.max_witness = std::max(row.max_witness, w.order);
      ++row.pairs;
    } catch (const std::exception& e) {
      run.semiregular.expect(false, pr.name + ": " + e.what());
    }
  }
  for (auto& [v, row] : growth) run.growth.push_back(row);
  return run;
}

Check check_group_orders(const std::vector<CorpusPair>& pairs) {
  Check c;
  std::vector<const CorpusPair*> chosen;
  for (const auto& pr : pairs)
    if (pr.group.order() <= 10000) chosen.push_back(&pr);
  // Spread 100 picks over the corpus.
  std::vector<const CorpusPair*> picks;
  for (std::size_t i = 0; i < 100 && !chosen.empty(); ++i) picks.push_back(chosen[i * chosen.size() / 100]);
  for (const auto* pr : picks) {
    auto elems = closure_elements(pr->group.degree(), pr->group.generators(), 10001);
    c.expect(elems && elems->size() == pr->group.order(),
             pr->name + " |G| = " + std::to_string(pr->group.order()));
  }
  return c;
}

struct SectionInfo {
  int id;
  const char* name;
  const char* description;
  double limit;
};

const SectionInfo kSections[] = {
    {1, "constructions", "PX and SPX sizes, valency, connectivity for 3 <= r <= 8", 5},
    {2, "traversing-paths", "PX(2,r,s) matches the traversing-path definition, r <= 7", 60},
    {3, "split-identity", "split of PX along the natural decomposition is SPX, r <= 7", 60},
    {4, "aut-split", "Aut(SPX(r,s)) is the wreath product of order 2^r * 2r", 300},
    {5, "px-aut", "|Aut(PX(2,r,s))| = 2^r * 2r for r in {3,5,6}", 300},
    {6, "lemma-boring", "one class of arc-transitive 4-cycle decompositions for r = 4", 600},
    {7, "px-corollary", "g^r = (x,...,x; 1) for rotations and case 2 witnesses of order >= r", 30},
    {8, "classification", "corpus pairs with an abelian normal non-semiregular subgroup classify", 1800},
    {9, "round-trip", "merged quotient then split gives back the graph", 1800},
    {10, "semiregular", "find_semiregular witnesses verify and never beat the oracle", 1800},
    {11, "group-order", "stabilizer chain orders agree with enumeration on 100 corpus groups", 120},
};

}  // namespace

const std::vector<std::string>& verify_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSections) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

VerifyReport run_verification(const std::vector<std::string>& sections, const VerifyOptions& opt) {
  std::vector<std::string> wanted = sections.empty() ? verify_sections() : sections;
  for (const auto& w : wanted)
    if (std::find(verify_sections().begin(), verify_sections().end(), w) == verify_sections().end())
      throw std::invalid_argument("unknown section '" + w + "'");
  auto want = [&](const char* name) { return std::find(wanted.begin(), wanted.end(), name) != wanted.end(); };

  VerifyReport report;
  auto record = [&](const SectionInfo& info, Clock::time_point start, const Check& c, const std::string& noun,
                    double seconds_override = -1) {
    CriterionResult r;
    r.id = info.id;
    r.section = info.name;
    r.description = info.description;
    r.seconds = seconds_override >= 0 ? seconds_override
                                      : std::chrono::duration<double>(Clock::now() - start).count();
    r.limit_seconds = info.limit;
    r.passed = c.failures.empty() && c.total > 0 && r.seconds <= r.limit_seconds;
    r.detail = c.summary(noun);
    if (r.seconds > r.limit_seconds) r.detail += " (over time limit)";
    report.results.push_back(std::move(r));
  };

  std::optional<std::vector<CorpusPair>> corpus;
  double corpus_build = 0;
  auto get_corpus = [&]() -> const std::vector<CorpusPair>& {
    if (!corpus) {
      auto t0 = Clock::now();
      corpus = build_corpus(opt.corpus);
      corpus_build = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    return *corpus;
  };

  for (const auto& info : kSections) {
    if (!want(info.name)) continue;
    auto t0 = Clock::now();
    switch (info.id) {
      case 1: record(info, t0, check_constructions(), "graphs"); break;
      case 2: record(info, t0, check_traversing_paths(), "graphs"); break;
      case 3: record(info, t0, check_split_identity(), "graphs"); break;
      case 4: record(info, t0, check_aut_split(), "graphs"); break;
      case 5: record(info, t0, check_px_aut(), "graphs"); break;
      case 6: record(info, t0, check_lemma_boring(), "graphs"); break;
      case 7: record(info, t0, check_px_corollary(opt), "checks"); break;
      default: break;
    }
    if (info.id == 11) {
      const auto& pairs = get_corpus();
      t0 = Clock::now();
      record(info, t0, check_group_orders(pairs), "groups");
    }
  }

  // Criteria 8 to 10 share one pass over the corpus.
  if (want("classification") || want("round-trip") || want("semiregular")) {
    const auto& pairs = get_corpus();
    auto t0 = Clock::now();
    CorpusRun run = run_corpus(pairs, opt);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count() + corpus_build;
    report.growth = run.growth;
    for (const auto& info : kSections) {
      if (!want(info.name)) continue;
      if (info.id == 8) record(info, t0, run.classification, "pairs classified", secs);
      if (info.id == 9) record(info, t0, run.round_trip, "round trips", secs);
      if (info.id == 10) {
        record(info, t0, run.semiregular, "pairs", secs);
        auto& detail = report.results.back().detail;
        detail += ", oracle ran on " + std::to_string(run.oracle_runs);
        for (const auto& [name, count] : run.strategies) detail += ", " + name + " " + std::to_string(count);
      }
    }
    for (auto& r : report.results)
      if (r.id >= 8 && r.id <= 10)
        r.detail = std::to_string(run.pairs) + " corpus pairs; " + r.detail;
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace semireg
