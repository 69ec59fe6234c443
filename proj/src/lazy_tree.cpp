#include "ybe/lazy_tree.hpp"

#include "ybe/error.hpp"
#include "ybe/pump.hpp"

#include <cmath>
#include <limits>

namespace ybe {

namespace {

constexpr std::size_t kMaxLevelEntries = std::size_t{1} << 20;

std::uint64_t point_bits(std::uint64_t n, unsigned k) {
  // ceil(log2 n) * 2^k, saturating.
  unsigned log2n = 0;
  while ((std::uint64_t{1} << log2n) < n) ++log2n;
  if (k >= 63) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t width = std::uint64_t{1} << k;
  if (log2n != 0 && width > std::numeric_limits<std::uint64_t>::max() / log2n) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return width * log2n;
}

void check_shape(std::uint64_t n, unsigned k, const TreeLimits& limits) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "base size must be positive");
  if (k > limits.max_depth) {
    throw Error(ErrorCode::LimitExceeded, "depth k=" + std::to_string(k) + " exceeds the guard " +
                                              std::to_string(limits.max_depth));
  }
  if (point_bits(n, k) > limits.max_point_bits) {
    throw Error(ErrorCode::LimitExceeded,
                "points of " + std::to_string(n) + "^(2^" + std::to_string(k) + ") need more than " +
                    std::to_string(limits.max_point_bits) + " bits");
  }
}

}  // namespace

PumpTree PumpTree::build(const BigInt& i, std::uint64_t n, unsigned k, const TreeLimits& limits) {
  check_shape(n, k, limits);
  PumpTree tree;
  tree.n_ = n;
  tree.k_ = k;
  tree.moduli_.reserve(k + 1);
  tree.moduli_.push_back(BigInt(n));
  for (unsigned l = 1; l <= k; ++l) tree.moduli_.push_back(tree.moduli_.back() * tree.moduli_.back());
  if (i < 1 || i > tree.moduli_[k]) {
    throw Error(ErrorCode::OutOfRange, "index " + i.str() + " outside 1.." + tree.moduli_[k].str());
  }
  tree.root_ = tree.intern(k, i);
  return tree;
}

std::size_t PumpTree::intern(unsigned level, const BigInt& label) {
  auto key = std::make_pair(level, label);
  if (auto it = index_.find(key); it != index_.end()) return it->second;

  Node node;
  node.level = level;
  node.label = label;
  if (level == 0) {
    node.leaf = label.convert_to<Point>();
  } else {
    auto [left, right] = split_point(label, moduli_[level - 1]);
    node.left = intern(level - 1, left);
    node.right = intern(level - 1, right);
  }
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), nodes_.size() - 1);
  return nodes_.size() - 1;
}

const BigInt& PumpTree::label_at(std::string_view address) const {
  if (address.size() > k_) {
    throw Error(ErrorCode::OutOfRange, "address longer than the tree depth");
  }
  std::size_t cur = root_;
  for (char step : address) {
    if (step == '0') {
      cur = nodes_[cur].left;
    } else if (step == '1') {
      cur = nodes_[cur].right;
    } else {
      throw Error(ErrorCode::ParseError, "address steps must be '0' or '1'");
    }
  }
  return nodes_[cur].label;
}

std::vector<BigInt> PumpTree::level_labels(unsigned level) const {
  if (level > k_) throw Error(ErrorCode::OutOfRange, "level above the root");
  if (k_ - level >= 21 || (std::size_t{1} << (k_ - level)) > kMaxLevelEntries) {
    throw Error(ErrorCode::LimitExceeded, "level has too many nodes to list");
  }
  std::vector<std::size_t> frontier{root_};
  for (unsigned l = k_; l > level; --l) {
    std::vector<std::size_t> next;
    next.reserve(frontier.size() * 2);
    for (std::size_t idx : frontier) {
      next.push_back(nodes_[idx].left);
      next.push_back(nodes_[idx].right);
    }
    frontier = std::move(next);
  }
  std::vector<BigInt> labels;
  labels.reserve(frontier.size());
  for (std::size_t idx : frontier) labels.push_back(nodes_[idx].label);
  return labels;
}

std::string PumpTree::render() const {
  if (k_ > 10) throw Error(ErrorCode::LimitExceeded, "tree too deep to render (k > 10)");
  std::string out;
  auto emit = [&](auto&& self, std::size_t idx, unsigned indent) -> void {
    const Node& node = nodes_[idx];
    out += std::string(indent * 2, ' ') + node.label.str() + "  [level " +
           std::to_string(node.level) + "]\n";
    if (node.level > 0) {
      self(self, node.left, indent + 1);
      self(self, node.right, indent + 1);
    }
  };
  emit(emit, root_, 0);
  return out;
}

LazyKey::LazyKey(std::shared_ptr<const Solution> base, PumpTree tree)
    : base_(std::move(base)), tree_(std::move(tree)) {
  if (base_->size() != tree_.base_size()) {
    throw Error(ErrorCode::SizeMismatch, "tree and base solution disagree on n");
  }
  sigma_inv_.reserve(base_->size());
  for (const auto& s : base_->sigmas()) sigma_inv_.push_back(inverse(s));

  const BigInt small_limit = BigInt(1) << 62;
  for (unsigned l = 0; l <= tree_.depth() && tree_.modulus(l) <= small_limit; ++l) {
    small_moduli_.push_back(tree_.modulus(l).convert_to<std::uint64_t>());
    small_levels_ = l;
  }
}

LazyKey LazyKey::lazy(std::shared_ptr<const Solution> base, const BigInt& i, unsigned k,
                      const TreeLimits& limits) {
  if (!base) throw Error(ErrorCode::InvalidArgument, "missing base solution");
  require_solution(*base);
  return LazyKey(base, PumpTree::build(i, base->size(), k, limits));
}

LazyKey LazyKey::materialized(std::shared_ptr<const Solution> base, const BigInt& i, unsigned k,
                              std::uint64_t max_points, const TreeLimits& limits) {
  LazyKey key = lazy(std::move(base), i, k, limits);
  key.materialized_ = key.materialize(max_points);
  key.materialized_inv_ = inverse(*key.materialized_);
  return key;
}

void LazyKey::check_point(const BigInt& m) const {
  if (m < 1 || m > domain_size()) {
    throw Error(ErrorCode::OutOfRange,
                "point " + m.str() + " outside 1.." + domain_size().str());
  }
}

template <bool Inverse>
std::uint64_t LazyKey::walk_small(std::size_t idx, std::uint64_t m) const {
  const auto& node = tree_.node(idx);
  if (node.level == 0) {
    const Permutation& p = Inverse ? sigma_inv_[node.leaf - 1] : base_->sigma(node.leaf);
    return p(static_cast<Point>(m));
  }
  const std::uint64_t width = small_moduli_[node.level - 1];
  auto [j, l] = split_point(m, width);
  return join_point(walk_small<Inverse>(node.left, j), walk_small<Inverse>(node.right, l), width);
}

template <bool Inverse>
BigInt LazyKey::walk(std::size_t idx, const BigInt& m) const {
  const auto& node = tree_.node(idx);
  if (node.level <= small_levels_) {
    return BigInt(walk_small<Inverse>(idx, m.convert_to<std::uint64_t>()));
  }
  const BigInt& width = tree_.modulus(node.level - 1);
  auto [j, l] = split_point(m, width);
  return join_point(walk<Inverse>(node.left, j), walk<Inverse>(node.right, l), width);
}

BigInt LazyKey::eval_lazy(const BigInt& m) const {
  check_point(m);
  return walk<false>(tree_.root(), m);
}

BigInt LazyKey::eval_inverse_lazy(const BigInt& m) const {
  check_point(m);
  return walk<true>(tree_.root(), m);
}

BigInt LazyKey::eval(const BigInt& m) const {
  if (!materialized_) return eval_lazy(m);
  check_point(m);
  return BigInt((*materialized_)(m.convert_to<Point>()));
}

BigInt LazyKey::eval_inverse(const BigInt& m) const {
  if (!materialized_inv_) return eval_inverse_lazy(m);
  check_point(m);
  return BigInt((*materialized_inv_)(m.convert_to<Point>()));
}

Permutation LazyKey::build(std::size_t idx, std::uint64_t& builds) const {
  const auto& node = tree_.node(idx);
  if (node.level == 0) return base_->sigma(node.leaf);
  Permutation left = build(node.left, builds);
  Permutation right = build(node.right, builds);
  ++builds;
  return pair_permutation(left, right);
}

LazyKey::Materialized LazyKey::materialize_counted(std::uint64_t max_points) const {
  if (domain_size() > max_points) {
    throw Error(ErrorCode::LimitExceeded, "cannot materialize " + domain_size().str() +
                                              " points (bound " + std::to_string(max_points) +
                                              "); use lazy evaluation");
  }
  Materialized out;
  out.permutation = build(tree_.root(), out.builds);
  return out;
}

KeyCheck check_key(const LazyKey& key, const std::vector<BigInt>& points) {
  KeyCheck c;
  c.against_materialized = key.is_materialized();
  for (const BigInt& m : points) {
    ++c.points;
    const BigInt image = key.eval(m);
    if (key.eval_inverse(image) != m || key.eval(key.eval_inverse(m)) != m) ++c.inverse_failures;
    if (c.against_materialized &&
        (key.eval_lazy(m) != image || key.eval_inverse_lazy(m) != key.eval_inverse(m))) {
      ++c.lazy_mismatches;
    }
  }
  return c;
}

std::vector<BigInt> random_points(const BigInt& upper, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(uniform_point(rng, upper));
  return out;
}

double log10_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 900) return std::log10(x.convert_to<double>());
  const std::size_t shift = bits - 64;
  BigInt top = x >> shift;
  return std::log10(top.convert_to<double>()) + static_cast<double>(shift) * std::log10(2.0);
}

namespace {

CostEstimate finish(BigInt ops, const CostConstants& constants) {
  CostEstimate c;
  c.log10_operations = log10_big(ops);
  c.log10_seconds = c.log10_operations + std::log10(constants.op_seconds);
  c.seconds = c.log10_seconds < 300 ? ops.convert_to<double>() * constants.op_seconds
                                    : std::numeric_limits<double>::infinity();
  c.operations = std::move(ops);
  return c;
}

}  // namespace

CostEstimate cost_model(std::uint64_t n, unsigned k, CostVariant variant,
                        const CostConstants& constants) {
  if (n < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "cost model needs n >= 2, k >= 1");
  check_shape(n, k, TreeLimits{});

  // powers[l] = n^(2^l)
  std::vector<BigInt> powers{BigInt(n)};
  for (unsigned l = 1; l <= k; ++l) powers.push_back(powers.back() * powers.back());

  BigInt ops = 0;
  if (variant == CostVariant::General) {
    ops = (BigInt(1) << (k + 1)) - 2;
    for (unsigned l = 1; l <= k; ++l) ops += (BigInt(1) << (k + 1 - l)) * powers[l];
  } else {
    BigInt inner = powers[k];
    for (unsigned l = 1; l < k; ++l) inner += 2 * powers[l];
    ops = 2 * inner;
  }
  return finish(std::move(ops), constants);
}

AttackEstimate attack_cost(std::uint64_t n, unsigned k, const BigInt& solution_count,
                           const CostConstants& constants) {
  AttackEstimate a;
  if (solution_count == 0) {
    a.seconds = 0;
    a.log10_seconds = -std::numeric_limits<double>::infinity();
    return a;
  }
  CostEstimate one = cost_model(n, k, CostVariant::General, constants);
  a.log10_seconds = one.log10_seconds + log10_big(solution_count);
  a.seconds = std::pow(10.0, a.log10_seconds);
  return a;
}

double search_space_log10(std::uint64_t n, unsigned k) {
  // N = n^(2^k); log10(N!) = lgamma(N + 1) / ln 10
  const double log10_points = std::ldexp(std::log10(static_cast<double>(n)), static_cast<int>(k));
  if (log10_points > 300) return std::numeric_limits<double>::infinity();
  const double points = std::pow(10.0, log10_points);
  return std::lgamma(points + 1.0) / std::log(10.0);
}

SearchSpace search_space(std::uint64_t n, unsigned k, const CostConstants& constants) {
  SearchSpace s;
  s.log10_permutations = search_space_log10(n, k);
  s.log10_seconds = s.log10_permutations + std::log10(constants.search_seconds);
  return s;
}

}  // namespace ybe
