#include "ybe/enumerate.hpp"

#include "ybe/error.hpp"
#include "ybe/solution_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>

namespace ybe {

namespace {

std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t t = 2; t <= n; ++t) f *= t;
  return f;
}

// gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x), rejecting non-bijective results
// without going through exceptions; most sigma-tuples fail here.
bool has_bijective_gamma(const std::vector<Permutation>& sigma,
                         const std::vector<Permutation>& sigma_inv) {
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n + 1);
  for (Point y = 1; y <= n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (Point x = 1; x <= n; ++x) {
      const Point image = sigma_inv[sigma[x - 1](y) - 1](x);
      if (seen[image]) return false;
      seen[image] = true;
    }
  }
  return true;
}

}  // namespace

std::vector<Solution> all_solutions(std::size_t n, std::size_t max_n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (n > max_n) {
    throw Error(ErrorCode::LimitExceeded, "exhaustive enumeration is bounded at n <= " +
                                              std::to_string(max_n));
  }
  const std::vector<Permutation> group = symmetric_group(n);
  std::vector<Permutation> group_inv;
  group_inv.reserve(group.size());
  for (const auto& p : group) group_inv.push_back(inverse(p));

  std::vector<std::size_t> digits(n, 0);
  std::vector<Permutation> sigma(n, group[0]);
  std::vector<Permutation> sigma_inv(n, group_inv[0]);
  std::vector<Solution> out;
  while (true) {
    for (std::size_t t = 0; t < n; ++t) {
      sigma[t] = group[digits[t]];
      sigma_inv[t] = group_inv[digits[t]];
    }
    if (has_bijective_gamma(sigma, sigma_inv)) {
      Solution s = Solution::from_sigma(sigma);
      if (verify(s).ok()) out.push_back(std::move(s));
    }
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == group.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Solution canonical_form(const Solution& s) {
  std::optional<Solution> best;
  for (const Permutation& mu : symmetric_group(s.size())) {
    Solution t = relabel(s, mu);
    if (!best || t.sigmas() < best->sigmas()) best = std::move(t);
  }
  return *best;
}

std::uint64_t CensusClass::orbit_size() const {
  return automorphisms == 0 ? 0 : factorial(representative.size()) / automorphisms;
}

bool SolutionCensus::orbit_sizes_consistent() const {
  std::uint64_t sum = 0;
  for (const auto& c : classes) {
    if (c.orbit_size() != c.members) return false;
    sum += c.members;
  }
  return sum == total_count;
}

SolutionCensus enumerate_solutions(std::size_t n, std::size_t max_n) {
  std::vector<Solution> solutions = all_solutions(n, max_n);
  const std::vector<Permutation> group = symmetric_group(n);

  std::map<std::vector<Permutation>, std::uint64_t> tally;
  for (const Solution& s : solutions) ++tally[canonical_form(s).sigmas()];

  SolutionCensus census;
  census.n = n;
  census.total_count = solutions.size();
  for (auto& [sigmas, members] : tally) {
    CensusClass c{Solution::from_sigma(sigmas), members, 0, {}};
    for (const Permutation& mu : group) {
      if (relabel(c.representative, mu) == c.representative) ++c.automorphisms;
    }
    c.report = analyze(c.representative);
    census.classes.push_back(std::move(c));
  }
  return census;
}

SolutionCensus census_filter(const SolutionCensus& census, const CensusPredicate& keep) {
  SolutionCensus out;
  out.n = census.n;
  for (const auto& c : census.classes) {
    if (keep && !keep(c.report)) continue;
    out.total_count += c.members;
    out.classes.push_back(c);
  }
  return out;
}

namespace {

std::string optional_text(const std::optional<std::size_t>& v, const char* none) {
  return v ? std::to_string(*v) : none;
}

std::string rep_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rep_%03zu", index + 1);
  return buf;
}

}  // namespace

std::string census_summary(const SolutionCensus& census) {
  std::string out = "n " + std::to_string(census.n) + "\n";
  out += "total " + std::to_string(census.total_count) + "\n";
  out += "iso " + std::to_string(census.iso_count()) + "\n";
  out += "# name members automorphisms class indecomposable retract_level condition_C iyb_order\n";
  for (std::size_t t = 0; t < census.classes.size(); ++t) {
    const CensusClass& c = census.classes[t];
    const AnalysisReport& r = c.report;
    out += rep_name(t) + " " + std::to_string(c.members) + " " + std::to_string(c.automorphisms) +
           " " + optional_text(r.class_m, "exceeded") + " " +
           (r.indecomposable ? "true" : "false") + " " +
           optional_text(r.retract_level, "irretractable") + " " +
           (r.condition_C ? "true" : "false") + " " + std::to_string(r.iyb_order) + "\n";
  }
  return out;
}

void write_census(const std::filesystem::path& dir, const SolutionCensus& census) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
  for (std::size_t t = 0; t < census.classes.size(); ++t) {
    const CensusClass& c = census.classes[t];
    save_solution(dir / (rep_name(t) + ".sol"), c.representative,
                  {"class " + std::to_string(t + 1) + " of " + std::to_string(census.iso_count()) +
                   ", " + std::to_string(c.members) + " labelled solutions"});
  }
  std::ofstream summary(dir / "summary.txt");
  if (!summary) throw Error(ErrorCode::Io, "cannot write " + (dir / "summary.txt").string());
  summary << census_summary(census);
}

}  // namespace ybe
