#pragma once

#include "ybe/permutation.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ybe {

/// A finite set-theoretic solution r(x,y) = (sigma_x(y), gamma_y(x)) on
/// {1..n}. Non-degeneracy holds by construction since every component is a
/// Permutation; involutivity and the braid relation are checked by verify().
class Solution {
public:
  /// gamma is derived from sigma (see derive_gamma).
  static Solution from_sigma(std::vector<Permutation> sigma);

  /// Both families supplied. Sizes are checked; nothing else.
  static Solution from_families(std::vector<Permutation> sigma, std::vector<Permutation> gamma);

  static Solution trivial(std::size_t n);

  std::size_t size() const noexcept { return sigma_.size(); }
  const Permutation& sigma(Point x) const { return sigma_[x - 1]; }
  const Permutation& gamma(Point y) const { return gamma_[y - 1]; }
  const std::vector<Permutation>& sigmas() const noexcept { return sigma_; }
  const std::vector<Permutation>& gammas() const noexcept { return gamma_; }

  friend bool operator==(const Solution&, const Solution&) = default;

private:
  Solution(std::vector<Permutation> sigma, std::vector<Permutation> gamma)
      : sigma_(std::move(sigma)), gamma_(std::move(gamma)) {}

  std::vector<Permutation> sigma_;
  std::vector<Permutation> gamma_;
};

/// gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x). Throws NotBijective when some
/// derived gamma_y is not a bijection.
std::vector<Permutation> derive_gamma(const std::vector<Permutation>& sigma);

using PointPair = std::pair<Point, Point>;
using PointTriple = std::array<Point, 3>;

/// (sigma_x(y), gamma_y(x)). Throws OutOfRange.
PointPair apply_r(const Solution& s, Point x, Point y);

struct VerifyReport {
  bool nondegenerate = true;
  bool involutive = true;
  bool braided = true;
  std::optional<PointPair> involutive_witness;
  std::optional<PointTriple> braided_witness;

  bool ok() const noexcept { return nondegenerate && involutive && braided; }
};

/// Exhaustive check of r∘r = id on all pairs and r12 r23 r12 = r23 r12 r23
/// on all triples. The first failing pair/triple (lexicographic) is kept.
VerifyReport verify(const Solution& s);

/// Throws NotASolution unless verify(s).ok().
void require_solution(const Solution& s);

/// D(x) = sigma_x^{-1}(x).
Point diagonal_D(const Solution& s, Point x);

/// Minimal m with sigma_x sigma_{D(x)} ... sigma_{D^{m-1}(x)} = Id for all x,
/// or nullopt when the search passes `cap`.
std::optional<std::size_t> class_of(const Solution& s, std::size_t cap = 1'000'000);

using Word = std::vector<Point>;

/// The n words x D(x) ... D^{m-1}(x), ordered by x. m must be 2 or the class.
std::vector<Word> frozen_elements(const Solution& s, std::size_t m);

struct Retraction {
  Solution solution;
  /// class_map[x-1] is the 1-based class of x; classes numbered by first member.
  std::vector<Point> class_map;
};

/// Identifies x ~ y when sigma_x = sigma_y. Throws NotASolution when the
/// induced map is not well defined.
Retraction retract(const Solution& s);

/// Multipermutation level, or nullopt when irretractable. Level 0 for n == 1.
std::optional<std::size_t> multipermutation_level(const Solution& s);

/// Orbits of the IYB group <sigma_x> on {1..n}.
std::vector<std::vector<Point>> orbits(const Solution& s);
bool is_indecomposable(const Solution& s);

/// Orbit table of the point 1: column l holds every sigma_{i1}...sigma_{il}(1).
struct OrbitTable {
  /// columns[l-1] is column l, as a sorted point list. Stored up to the first
  /// repeat (or max_steps); later columns follow from periodicity.
  std::vector<std::vector<Point>> columns;
  /// Column index (1-based) where the periodic part starts, if a repeat was found.
  std::optional<std::size_t> period_start;
  std::size_t period = 0;

  /// Column l >= 1, extended periodically past the stored prefix.
  const std::vector<Point>& column(std::size_t l) const;
};

OrbitTable table_T(const Solution& s, std::size_t max_steps = 1u << 16);

struct ConditionC {
  bool holds = false;
  /// Smallest column holding all of {1..n}.
  std::optional<std::size_t> column;
};

ConditionC condition_C(const Solution& s, std::size_t max_steps = 1u << 16);

/// Columns-pairing criterion: every (s, m) occurs together in some column.
bool column_pair_condition(const Solution& s, std::size_t max_steps = 1u << 16);

/// x y = sigma_x(y) gamma_y(x), one per unordered non-frozen pair; lhs is the
/// lexicographically smaller word.
struct Relation {
  PointPair lhs;
  PointPair rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

std::vector<Relation> structure_relations(const Solution& s);

/// True when mu (a bijection of {1..n}) carries s onto t.
bool is_isomorphism(const Solution& s, const Solution& t, const Permutation& mu);

/// First mu in lexicographic order with mu(sigma_x(y)) = sigma'_{mu(x)}(mu(y)).
/// n must be at most `max_n` (brute force over n! bijections).
std::optional<Permutation> find_isomorphism(const Solution& s, const Solution& t,
                                            std::size_t max_n = 8);

/// The solution transported along mu: sigma'_{mu(x)} = mu sigma_x mu^{-1}.
Solution relabel(const Solution& s, const Permutation& mu);

struct AnalysisReport {
  bool nondegenerate = true;
  bool involutive = true;
  bool braided = true;
  std::optional<std::size_t> class_m;  // nullopt: exceeded
  bool indecomposable = false;
  std::optional<std::size_t> retract_level;  // nullopt: irretractable
  bool condition_C = false;
  std::optional<std::size_t> condition_C_column;
  std::uint64_t iyb_order = 0;
};

struct AnalysisLimits {
  std::size_t class_cap = 1'000'000;
  std::uint64_t closure_limit = 10'000'000;
  std::size_t table_steps = 1u << 16;
};

/// Runs every analysis. Requires a verified solution.
AnalysisReport analyze(const Solution& s, const AnalysisLimits& limits = {});

}  // namespace ybe
