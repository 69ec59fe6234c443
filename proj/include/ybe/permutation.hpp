#pragma once

#include "ybe/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

/// A point of {1..N}. Materialized permutations never exceed 32-bit sizes.
using Point = std::uint32_t;

using Cycle = std::vector<Point>;

/// Bijection of {1..N} in one-line form.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// images[x-1] is the image of x. Throws NotBijective / OutOfRange.
  static Permutation from_images(std::vector<Point> images);

  /// Points absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t n, std::span<const Cycle> cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x - 1]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// (p ∘ q)(x) = p(q(x)); the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Disjoint cycles covering {1..N}, each starting at its minimum, sorted by
/// that minimum. Fixed points appear as 1-cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

enum class PermStyle {
  OneLine,        // "2 1 4 3"
  CyclesVerbose,  // "(1,2)(3,4)(5)"
  CyclesCompact,  // "(1,2)(3,4)"; identity renders as "()"
};

/// Accepts one-line ("2 1 4 3") or cycle notation ("(1,2)(3,4)").
/// For one-line text, n == 0 means "infer from the number of entries".
/// Cycle notation requires n > 0.
Permutation parse_perm(std::string_view text, std::size_t n = 0);

std::string format_perm(const Permutation& p, PermStyle style = PermStyle::CyclesVerbose);

/// Order of the subgroup generated by `gens`, by breadth-first closure.
/// Throws LimitExceeded once more than `limit` elements have been found.
std::uint64_t group_closure_order(std::span<const Permutation> gens,
                                  std::uint64_t limit = 10'000'000);

/// Orbits of <gens> on {1..n}, each sorted, ordered by minimum.
std::vector<std::vector<Point>> orbits_of(std::span<const Permutation> gens, std::size_t n);

struct CycleType {
  std::size_t size = 0;
  /// cycle length d -> number of d-cycles n_d
  std::map<std::size_t, std::size_t> multiplicities;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type_of(const Permutation& p);

/// log10 of N! / prod_d (n_d! d^{n_d}), via log-gamma.
/// Throws InvalidArgument when sum_d d*n_d != N.
double cycle_type_count_log10(const CycleType& t);

/// The same count, exactly.
BigInt cycle_type_count_exact(const CycleType& t);

}  // namespace ybe
