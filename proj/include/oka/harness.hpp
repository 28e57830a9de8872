#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oka/family.hpp"
#include "oka/io.hpp"

namespace oka {

struct CorpusEntry {
  std::string name;
  Json description;
};

struct Corpus {
  std::vector<CorpusEntry> rings;
  Caps caps;
  std::uint64_t seed = 42;
  std::size_t random_families = 1000;
};

/// Z1..Z12, matrix, triangular and product rings; see README for the list.
Corpus default_corpus();

/// {"rings":[{"name":..,"ring":<ring>}|<ring>,...],"caps":{"order":..,"lattice":..},
///  "seed":..,"random_families":..}; missing fields take the defaults.
Corpus corpus_from_json(const Json& j);
Json corpus_to_json(const Corpus& c);

/// Uniform double in [0,1) from the top 53 bits, independent of the
/// standard library's distribution implementations.
double unit_interval(std::mt19937_64& rng);

/// Each proper ideal joins independently with probability `density`; R is
/// always a member.
Family random_family(const ContextPtr& ctx, std::mt19937_64& rng, double density,
                     std::string name = "random");
Family random_family(const ContextPtr& ctx, std::uint64_t seed, double density);

/// Seed for everything random about one corpus ring.
std::uint64_t ring_seed(std::uint64_t seed, const std::string& ring_name);

enum class Verdict { verified, degenerate, hypothesis_unmet, violated };
std::string_view to_string(Verdict v);

struct Assertion {
  std::string block;
  std::string name;
  Verdict verdict = Verdict::verified;
  std::size_t checks = 0;
  Json detail = Json::object();
};

struct RingReport {
  std::string name;
  std::string label;
  std::size_t order = 0;
  std::size_t ideals = 0;
  bool zero_ring = false;
  std::vector<Assertion> assertions;
  double seconds = 0;  ///< table output only; JSON stays timing-free
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<RingReport> rings;

  bool ok() const;
  std::size_t count(Verdict v) const;
  std::size_t total_checks() const;
  Json to_json() const;
  std::string to_table(std::size_t width = 100) const;
};

struct SuiteOptions {
  std::vector<std::string> only;  ///< empty means every block
  unsigned jobs = 1;
};

std::vector<std::string> suite_blocks();

/// Builds every corpus ring first (validation gate; throws ParseError on the
/// first bad description), then runs the selected blocks ring by ring.
SuiteReport run_paper_suite(const Corpus& corpus, const SuiteOptions& options = {});

struct RingSearch {
  std::string name;
  std::size_t ideals = 0;
  std::size_t examined = 0;
  std::size_t space = 0;  ///< 2^(ideals-1) when enumerated, else the budget
  bool exhaustive = false;
  std::optional<ElementSet> witness;
  Json witness_profile;
};

struct SeparationResult {
  std::string prop_a;
  std::vector<std::string> prop_b;
  std::vector<RingSearch> rings;
  std::optional<std::size_t> first;  ///< index into rings of the first witness
  bool aborted = false;              ///< a witness contradicted the implication diagram
  std::string abort_reason;
  Json to_json() const;
};

/// Looks for families with prop_a true and every prop_b false. Lattices with
/// at most `exhaustive_limit` ideals are enumerated completely (R pinned),
/// larger ones are sampled `budget` times.
SeparationResult search_separation(const Corpus& corpus, Property prop_a,
                                   const std::vector<Property>& prop_b, std::size_t budget,
                                   unsigned jobs = 1, std::size_t exhaustive_limit = 20);

}  // namespace oka
