#pragma once

#include "ybe/bigint.hpp"
#include "ybe/solution.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

struct TreeLimits {
  unsigned max_depth = 32;
  /// Upper bound on 2^k * log2(n), the bit length of the largest point.
  std::uint64_t max_point_bits = std::uint64_t{1} << 26;
};

/// The labelled regular binary tree for a point i of the k-fold pumped
/// solution. The root (level k) carries i; a node at level l >= 1 with label a
/// has children ceil(a / n^(2^(l-1))) and a mod n^(2^(l-1)) (residue 0 read as
/// the modulus). Nodes with equal (level, label) are shared, so a tree with
/// many repeated labels (small i) stays small for any depth.
class PumpTree {
public:
  struct Node {
    unsigned level = 0;
    BigInt label;
    std::size_t left = 0;  // valid when level > 0
    std::size_t right = 0;
    Point leaf = 0;  // the label as a point, when level == 0
  };

  /// Throws OutOfRange unless 1 <= i <= n^(2^k); LimitExceeded past `limits`.
  static PumpTree build(const BigInt& i, std::uint64_t n, unsigned k, const TreeLimits& limits = {});

  std::uint64_t base_size() const noexcept { return n_; }
  unsigned depth() const noexcept { return k_; }
  const BigInt& root_label() const { return nodes_[root_].label; }
  std::size_t root() const noexcept { return root_; }
  const Node& node(std::size_t index) const { return nodes_[index]; }
  std::size_t distinct_nodes() const noexcept { return nodes_.size(); }

  /// n^(2^level), for 0 <= level <= k.
  const BigInt& modulus(unsigned level) const { return moduli_[level]; }

  /// Label at an address given as a string of '0' (left) / '1' (right) steps
  /// from the root.
  const BigInt& label_at(std::string_view address) const;

  /// All 2^(k-level) labels of one level, left to right. Throws LimitExceeded
  /// when that exceeds 2^20 entries.
  std::vector<BigInt> level_labels(unsigned level) const;

  /// Indented rendering, one node per line, root first. Throws
  /// LimitExceeded for k > 10.
  std::string render() const;

private:
  std::size_t intern(unsigned level, const BigInt& label);

  std::uint64_t n_ = 0;
  unsigned k_ = 0;
  std::vector<BigInt> moduli_;
  std::vector<Node> nodes_;
  std::map<std::pair<unsigned, BigInt>, std::size_t> index_;
  std::size_t root_ = 0;
};

/// Evaluation handle for the sigma-permutation at point i of the k-fold
/// pumped solution. Lazy keys evaluate point by point through the tree
/// (O(2^k) base lookups per point); materialized keys hold the whole
/// permutation of n^(2^k) points.
class LazyKey {
public:
  static LazyKey lazy(std::shared_ptr<const Solution> base, const BigInt& i, unsigned k,
                      const TreeLimits& limits = {});

  /// Throws LimitExceeded when n^(2^k) > max_points.
  static LazyKey materialized(std::shared_ptr<const Solution> base, const BigInt& i, unsigned k,
                              std::uint64_t max_points = 1'000'000,
                              const TreeLimits& limits = {});

  const PumpTree& tree() const noexcept { return tree_; }
  const Solution& base() const noexcept { return *base_; }
  const BigInt& index() const { return tree_.root_label(); }
  unsigned depth() const noexcept { return tree_.depth(); }
  /// n^(2^k)
  const BigInt& domain_size() const { return tree_.modulus(tree_.depth()); }
  bool is_materialized() const noexcept { return materialized_.has_value(); }

  /// Throws OutOfRange unless 1 <= m <= n^(2^k).
  BigInt eval(const BigInt& m) const;
  BigInt eval_inverse(const BigInt& m) const;

  /// Tree-walk evaluation, ignoring any materialized table.
  BigInt eval_lazy(const BigInt& m) const;
  BigInt eval_inverse_lazy(const BigInt& m) const;

  struct Materialized {
    Permutation permutation;
    std::uint64_t builds = 0;  // 2^k - 1: one per internal tree node
  };

  /// The full permutation, built bottom-up from the leaves (throws
  /// LimitExceeded past `max_points`).
  Materialized materialize_counted(std::uint64_t max_points = 1'000'000) const;
  Permutation materialize(std::uint64_t max_points = 1'000'000) const {
    return materialize_counted(max_points).permutation;
  }

private:
  LazyKey(std::shared_ptr<const Solution> base, PumpTree tree);

  Permutation build(std::size_t node, std::uint64_t& builds) const;
  template <bool Inverse>
  BigInt walk(std::size_t node, const BigInt& m) const;
  template <bool Inverse>
  std::uint64_t walk_small(std::size_t node, std::uint64_t m) const;
  void check_point(const BigInt& m) const;

  std::shared_ptr<const Solution> base_;
  std::vector<Permutation> sigma_inv_;
  PumpTree tree_;
  /// Highest level whose modulus fits in 64 bits.
  unsigned small_levels_ = 0;
  std::vector<std::uint64_t> small_moduli_;
  std::optional<Permutation> materialized_;
  std::optional<Permutation> materialized_inv_;
};

struct KeyCheck {
  std::uint64_t points = 0;
  std::uint64_t inverse_failures = 0;  // points where eval and eval_inverse do not undo each other
  std::uint64_t lazy_mismatches = 0;   // points where the table and the tree walk disagree
  bool against_materialized = false;

  bool ok() const noexcept { return inverse_failures == 0 && lazy_mismatches == 0; }
};

/// Round trips eval/eval_inverse on every point; a materialized key is also
/// compared with its own tree walk.
KeyCheck check_key(const LazyKey& key, const std::vector<BigInt>& points);

/// `count` uniform points of {1..upper} from a seeded generator.
std::vector<BigInt> random_points(const BigInt& upper, std::size_t count, std::uint64_t seed);

struct CostConstants {
  double op_seconds = 1e-9;      // one elementary operation
  double search_seconds = 1e-8;  // testing one candidate permutation
};

enum class CostVariant { General, SmallI };

struct CostEstimate {
  BigInt operations;
  double log10_operations = 0;
  double seconds = 0;  // may be +inf when out of double range
  double log10_seconds = 0;
};

/// General:  (2^{k+1}-2) + sum_{l=1..k} 2^{k+1-l} n^{2^l}
/// Small i:  2 (2 n^{2^1} + 2 n^{2^2} + ... + 2 n^{2^{k-1}} + n^{2^k})
/// Throws InvalidArgument unless n >= 2 and k >= 1.
CostEstimate cost_model(std::uint64_t n, unsigned k, CostVariant variant = CostVariant::General,
                        const CostConstants& constants = {});

struct AttackEstimate {
  double seconds = 0;
  double log10_seconds = 0;  // -inf when solution_count is 0
};

/// solution_count times the general cost of one key.
AttackEstimate attack_cost(std::uint64_t n, unsigned k, const BigInt& solution_count,
                           const CostConstants& constants = {});

struct SearchSpace {
  double log10_permutations = 0;  // log10((n^(2^k))!)
  double log10_seconds = 0;       // plus log10(search_seconds)
};

SearchSpace search_space(std::uint64_t n, unsigned k, const CostConstants& constants = {});
double search_space_log10(std::uint64_t n, unsigned k);

/// log10 of a positive big integer.
double log10_big(const BigInt& x);

}  // namespace ybe
