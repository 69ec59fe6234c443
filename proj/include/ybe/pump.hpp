#pragma once

#include "ybe/solution.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

/// T_i^k <-> m = n(i-1) + k. Throws OutOfRange.
std::uint64_t renumber_pair(std::uint64_t n, std::uint64_t i, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> renumber_point(std::uint64_t n, std::uint64_t m);

/// T_j^l -> T_{left(j)}^{right(l)} on |left| * |right| points.
Permutation pair_permutation(const Permutation& left, const Permutation& right);

/// g_i^k(T_j^l) = T_{sigma_i(j)}^{sigma_k(l)}, on the renumbered n^2 points.
Permutation g_of(const Solution& s, Point i, Point k);

/// f_j^l(T_i^k) = T_{gamma_j(i)}^{gamma_l(k)}.
Permutation f_of(const Solution& s, Point j, Point l);

/// Pairs each cycle of p with each cycle of q: lengths a, b give gcd(a,b)
/// cycles of length lcm(a,b). The result is a permutation of |p|*|q| points
/// acting as T_j^l -> T_{p(j)}^{q(l)}.
std::vector<Cycle> product_cycles(const Permutation& p, const Permutation& q);

/// g_i^k assembled from product_cycles(sigma_i, sigma_k).
Permutation g_by_cycles(const Solution& s, Point i, Point k);

/// Renders a permutation of n^2 points as cycles of pairs "(T_1^1,T_2^3)".
/// Fixed points are dropped when `compact` is set.
std::string format_pair_cycles(const Permutation& p, std::size_t n, bool compact = false);

struct PumpedSolution {
  Solution base;
  Solution result;  // sigma[m] = g_i^k, gamma[m] = f_i^k with m = n(i-1)+k
};

/// Requires a verified base; throws NotASolution otherwise.
PumpedSolution pump(const Solution& s);

/// k-fold pump. Throws LimitExceeded when n^(2^k) exceeds `max_points`.
Solution pump_iterate(const Solution& s, unsigned k, std::uint64_t max_points = 1'000'000);

/// A generator pair T_i^k on the renumbered n^2 points.
using PumpWord = std::pair<std::uint64_t, std::uint64_t>;

/// The element C with lower indices (a, b) and upper indices (c, d):
///   C_{ab}^{cd} = T_{sigma_a(b)}^c T_{gamma_b(a)}^d - T_a^{sigma_c(d)} T_b^{gamma_d(c)}
/// kept as the pair of words (positive, negative), renumbered.
struct FrtElement {
  std::uint64_t a, b, c, d;
  PumpWord positive;
  PumpWord negative;
  bool is_zero() const noexcept { return positive == negative; }
};

FrtElement frt_element(const Solution& s, Point a, Point b, Point c, Point d);

/// One record per nonzero class of {C}/±: the word (T_i^k, T_j^l) and its
/// image under the pumped r, with lower/upper indices of the C it came from.
struct FrtRelation {
  PumpWord lhs;
  PumpWord rhs;
  std::uint64_t lower1, lower2, upper1, upper2;
};

struct SignTally {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;   // both sides vanish
  std::size_t other = 0;  // neither ±: the identity fails
};

struct FrtReport {
  std::size_t elements = 0;       // n^4 indexed C's
  std::size_t zero_elements = 0;  // C = 0
  std::size_t classes = 0;        // nonzero classes of {C}/±
  std::size_t expected_classes = 0;  // C(n^2, 2)
  bool same_family = true;  // the lower pair (sigma_i(j), gamma_j(i)) matches the pumped r
  SignTally negation_i;    // C_{r(ij)}^{r(kl)} vs C_{ij}^{kl}, expected all minus/zero
  SignTally negation_ii;   // C_{ij}^{r(kl)} vs C_{r(ij)}^{kl}
  SignTally fixed_lower;   // r(i,j)=(i,j): C_{ij}^{r(kl)} vs C_{ij}^{kl}
  SignTally fixed_upper;   // r(k,l)=(k,l): C_{r(ij)}^{kl} vs C_{ij}^{kl}
  std::size_t both_fixed_nonzero = 0;  // r(i,j)=(i,j), r(k,l)=(k,l) but C != 0

  bool ok() const noexcept {
    return same_family && classes == expected_classes && negation_i.plus == 0 &&
           negation_i.other == 0 && negation_ii.plus == 0 && negation_ii.other == 0 &&
           fixed_lower.other == 0 && fixed_upper.other == 0 && both_fixed_nonzero == 0;
  }
};

struct FrtResult {
  std::vector<FrtRelation> relations;
  FrtReport report;
};

FrtResult frt_relations(const Solution& s);

/// mu~(T_i^k) = T_{mu(i)}^{mu(k)} on n^2 points.
Permutation lift_isomorphism(const Permutation& mu);

/// Properties pump(s) must inherit from s, by name, that fail: "verify",
/// "class", "retract_level", "decomposable" (s decomposable but the pump is
/// not), "indecomposable" (s indecomposable with condition C but the pump is
/// not). Empty when everything holds. Requires a verified solution.
std::vector<std::string> preservation_failures(const Solution& s);

}  // namespace ybe
