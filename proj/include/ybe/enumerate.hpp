#pragma once

#include "ybe/solution.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace ybe {

/// Every non-degenerate involutive solution on {1..n}, in lexicographic
/// order of the sigma-tuple. Throws LimitExceeded for n > max_n.
std::vector<Solution> all_solutions(std::size_t n, std::size_t max_n = 4);

/// The lexicographically least sigma-tuple among all relabelings of s.
Solution canonical_form(const Solution& s);

struct CensusClass {
  Solution representative;  // canonical
  std::uint64_t members = 0;        // solutions counted directly
  std::uint64_t automorphisms = 0;  // relabelings fixing the representative
  AnalysisReport report;

  /// n! / |Aut|
  std::uint64_t orbit_size() const;
};

struct SolutionCensus {
  std::size_t n = 0;
  std::uint64_t total_count = 0;
  std::vector<CensusClass> classes;  // ordered by representative

  std::size_t iso_count() const noexcept { return classes.size(); }
  /// Sum of orbit sizes equals the direct count, class by class and in total.
  bool orbit_sizes_consistent() const;
};

SolutionCensus enumerate_solutions(std::size_t n, std::size_t max_n = 4);

using CensusPredicate = std::function<bool(const AnalysisReport&)>;

/// Keeps the classes whose report satisfies `keep`; an empty predicate keeps
/// everything. total_count is recomputed from the kept classes.
SolutionCensus census_filter(const SolutionCensus& census, const CensusPredicate& keep);

/// Plain-text summary: n, total, iso, and one line of flags per class.
std::string census_summary(const SolutionCensus& census);

/// Writes rep_001.sol, rep_002.sol, ... and summary.txt into `dir`.
void write_census(const std::filesystem::path& dir, const SolutionCensus& census);

}  // namespace ybe
