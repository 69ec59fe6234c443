#include "ybe/solution.hpp"

#include "ybe/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ybe {

namespace {

std::string pair_str(Point a, Point b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_family(const std::vector<Permutation>& family, const char* name) {
  const std::size_t n = family.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a solution needs at least one point");
  for (std::size_t x = 0; x < n; ++x) {
    if (family[x].size() != n) {
      throw Error(ErrorCode::SizeMismatch, std::string(name) + "_" + std::to_string(x + 1) +
                                               " acts on " + std::to_string(family[x].size()) +
                                               " points, expected " + std::to_string(n));
    }
  }
}

void check_point(const Solution& s, Point x) {
  if (x < 1 || x > s.size()) {
    throw Error(ErrorCode::OutOfRange,
                "point " + std::to_string(x) + " outside 1.." + std::to_string(s.size()));
  }
}

}  // namespace

Solution Solution::from_sigma(std::vector<Permutation> sigma) {
  check_family(sigma, "sigma");
  auto gamma = derive_gamma(sigma);
  return Solution(std::move(sigma), std::move(gamma));
}

Solution Solution::from_families(std::vector<Permutation> sigma, std::vector<Permutation> gamma) {
  check_family(sigma, "sigma");
  check_family(gamma, "gamma");
  if (sigma.size() != gamma.size()) {
    throw Error(ErrorCode::SizeMismatch, "sigma and gamma families differ in length");
  }
  return Solution(std::move(sigma), std::move(gamma));
}

Solution Solution::trivial(std::size_t n) {
  std::vector<Permutation> ids(n, Permutation::identity(n));
  return from_families(ids, ids);
}

std::vector<Permutation> derive_gamma(const std::vector<Permutation>& sigma) {
  check_family(sigma, "sigma");
  const std::size_t n = sigma.size();
  std::vector<Permutation> sigma_inv;
  sigma_inv.reserve(n);
  for (const auto& p : sigma) sigma_inv.push_back(inverse(p));

  std::vector<Permutation> gamma;
  gamma.reserve(n);
  for (Point y = 1; y <= n; ++y) {
    std::vector<Point> images(n);
    for (Point x = 1; x <= n; ++x) images[x - 1] = sigma_inv[sigma[x - 1](y) - 1](x);
    try {
      gamma.push_back(Permutation::from_images(std::move(images)));
    } catch (const Error&) {
      throw Error(ErrorCode::NotBijective,
                  "derived gamma_" + std::to_string(y) + " is not bijective");
    }
  }
  return gamma;
}

PointPair apply_r(const Solution& s, Point x, Point y) {
  check_point(s, x);
  check_point(s, y);
  return {s.sigma(x)(y), s.gamma(y)(x)};
}

VerifyReport verify(const Solution& s) {
  VerifyReport report;
  const Point n = static_cast<Point>(s.size());
  auto r = [&](Point x, Point y) -> PointPair { return {s.sigma(x)(y), s.gamma(y)(x)}; };

  for (Point x = 1; x <= n && report.involutive; ++x) {
    for (Point y = 1; y <= n; ++y) {
      auto [u, v] = r(x, y);
      if (r(u, v) != PointPair{x, y}) {
        report.involutive = false;
        report.involutive_witness = PointPair{x, y};
        break;
      }
    }
  }

  for (Point x = 1; x <= n && report.braided; ++x) {
    for (Point y = 1; y <= n && report.braided; ++y) {
      for (Point z = 1; z <= n; ++z) {
        // r12 r23 r12
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        PointTriple lhs{a3, b3, c2};
        // r23 r12 r23
        auto [e1, f1] = r(y, z);
        auto [d2, e2] = r(x, e1);
        auto [e3, f3] = r(e2, f1);
        PointTriple rhs{d2, e3, f3};
        if (lhs != rhs) {
          report.braided = false;
          report.braided_witness = PointTriple{x, y, z};
          break;
        }
      }
    }
  }
  return report;
}

void require_solution(const Solution& s) {
  VerifyReport v = verify(s);
  if (v.ok()) return;
  if (!v.involutive) {
    throw Error(ErrorCode::NotASolution,
                "not involutive at pair " + pair_str(v.involutive_witness->first,
                                                     v.involutive_witness->second));
  }
  const auto& t = *v.braided_witness;
  throw Error(ErrorCode::NotASolution, "not braided at triple (" + std::to_string(t[0]) + "," +
                                           std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                           ")");
}

Point diagonal_D(const Solution& s, Point x) {
  check_point(s, x);
  const Permutation& sx = s.sigma(x);
  for (Point y = 1; y <= s.size(); ++y) {
    if (sx(y) == x) return y;
  }
  throw Error(ErrorCode::NotBijective, "sigma_" + std::to_string(x) + " is not onto");
}

std::optional<std::size_t> class_of(const Solution& s, std::size_t cap) {
  const std::size_t n = s.size();
  std::vector<Point> D(n);
  for (Point x = 1; x <= n; ++x) D[x - 1] = diagonal_D(s, x);

  // products[x-1] = sigma_x sigma_{D(x)} ... sigma_{D^{m-1}(x)}; tail[x-1] = D^m(x)
  std::vector<Permutation> products;
  std::vector<Point> tail(n);
  products.reserve(n);
  for (Point x = 1; x <= n; ++x) {
    products.push_back(s.sigma(x));
    tail[x - 1] = D[x - 1];
  }
  for (std::size_t m = 1; m <= cap; ++m) {
    if (std::all_of(products.begin(), products.end(),
                    [](const Permutation& p) { return p.is_identity(); })) {
      return m;
    }
    for (std::size_t x = 0; x < n; ++x) {
      products[x] = compose(products[x], s.sigma(tail[x]));
      tail[x] = D[tail[x] - 1];
    }
  }
  return std::nullopt;
}

std::vector<Word> frozen_elements(const Solution& s, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "frozen word length must be positive");
  if (m != 2) {
    auto cls = class_of(s);
    if (!cls || *cls != m) {
      throw Error(ErrorCode::InvalidArgument,
                  "frozen word length " + std::to_string(m) + " is neither 2 nor the class" +
                      (cls ? " (" + std::to_string(*cls) + ")" : std::string{}));
    }
  }
  std::vector<Word> words;
  for (Point x = 1; x <= s.size(); ++x) {
    Word w;
    Point cur = x;
    for (std::size_t i = 0; i < m; ++i) {
      w.push_back(cur);
      cur = diagonal_D(s, cur);
    }
    words.push_back(std::move(w));
  }
  return words;
}

Retraction retract(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<Point> class_map(n);
  std::vector<Point> reps;
  for (Point x = 1; x <= n; ++x) {
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](Point r) { return s.sigma(r) == s.sigma(x); });
    if (it == reps.end()) {
      reps.push_back(x);
      class_map[x - 1] = static_cast<Point>(reps.size());
    } else {
      class_map[x - 1] = static_cast<Point>(it - reps.begin() + 1);
    }
  }
  const std::size_t c = reps.size();
  auto cls = [&](Point x) { return class_map[x - 1]; };

  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      Point rx = reps[cls(x) - 1];
      Point ry = reps[cls(y) - 1];
      if (cls(s.sigma(x)(y)) != cls(s.sigma(rx)(ry)) ||
          cls(s.gamma(y)(x)) != cls(s.gamma(ry)(rx))) {
        throw Error(ErrorCode::NotASolution,
                    "retraction ill-defined at pair " + pair_str(x, y));
      }
    }
  }

  std::vector<Permutation> sigma, gamma;
  for (Point a = 1; a <= c; ++a) {
    std::vector<Point> si(c), gi(c);
    for (Point b = 1; b <= c; ++b) {
      si[b - 1] = cls(s.sigma(reps[a - 1])(reps[b - 1]));
      gi[b - 1] = cls(s.gamma(reps[a - 1])(reps[b - 1]));
    }
    try {
      sigma.push_back(Permutation::from_images(std::move(si)));
      gamma.push_back(Permutation::from_images(std::move(gi)));
    } catch (const Error& e) {
      throw Error(ErrorCode::NotASolution, std::string("retraction degenerate: ") + e.what());
    }
  }
  return {Solution::from_families(std::move(sigma), std::move(gamma)), std::move(class_map)};
}

std::optional<std::size_t> multipermutation_level(const Solution& s) {
  Solution cur = s;
  std::size_t level = 0;
  while (cur.size() > 1) {
    Retraction next = retract(cur);
    if (next.solution.size() == cur.size()) return std::nullopt;
    cur = std::move(next.solution);
    ++level;
  }
  return level;
}

std::vector<std::vector<Point>> orbits(const Solution& s) {
  return orbits_of(s.sigmas(), s.size());
}

bool is_indecomposable(const Solution& s) { return orbits(s).size() == 1; }

const std::vector<Point>& OrbitTable::column(std::size_t l) const {
  if (l == 0) throw Error(ErrorCode::InvalidArgument, "orbit table columns start at 1");
  if (l <= columns.size()) return columns[l - 1];
  if (!period_start) {
    throw Error(ErrorCode::OutOfRange, "column " + std::to_string(l) + " beyond computed table");
  }
  std::size_t offset = (l - *period_start) % period;
  return columns[*period_start - 1 + offset];
}

OrbitTable table_T(const Solution& s, std::size_t max_steps) {
  const std::size_t n = s.size();
  OrbitTable table;
  std::map<std::vector<bool>, std::size_t> seen;  // column set -> 1-based index
  std::vector<bool> cur(n + 1, false);
  cur[1] = true;
  for (std::size_t l = 1; l <= max_steps; ++l) {
    std::vector<bool> next(n + 1, false);
    for (Point x = 1; x <= n; ++x) {
      if (!cur[x]) continue;
      for (const auto& sigma : s.sigmas()) next[sigma(x)] = true;
    }
    auto [it, inserted] = seen.emplace(next, l);
    if (!inserted) {
      table.period_start = it->second;
      table.period = l - it->second;
      break;
    }
    std::vector<Point> col;
    for (Point x = 1; x <= n; ++x) {
      if (next[x]) col.push_back(x);
    }
    table.columns.push_back(std::move(col));
    cur = std::move(next);
  }
  return table;
}

ConditionC condition_C(const Solution& s, std::size_t max_steps) {
  OrbitTable table = table_T(s, max_steps);
  for (std::size_t l = 1; l <= table.columns.size(); ++l) {
    if (table.columns[l - 1].size() == s.size()) return {true, l};
  }
  return {};
}

bool column_pair_condition(const Solution& s, std::size_t max_steps) {
  const std::size_t n = s.size();
  OrbitTable table = table_T(s, max_steps);
  std::vector<bool> covered(n * n, false);
  for (const auto& col : table.columns) {
    for (Point a : col) {
      for (Point b : col) covered[(a - 1) * n + (b - 1)] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<Relation> structure_relations(const Solution& s) {
  std::vector<Relation> relations;
  const Point n = static_cast<Point>(s.size());
  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      PointPair lhs{x, y};
      PointPair rhs = apply_r(s, x, y);
      if (rhs == lhs) continue;
      if (rhs < lhs) continue;  // emitted from the smaller side
      relations.push_back({lhs, rhs});
    }
  }
  return relations;
}

bool is_isomorphism(const Solution& s, const Solution& t, const Permutation& mu) {
  const Point n = static_cast<Point>(s.size());
  if (t.size() != n || mu.size() != n) return false;
  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      if (mu(s.sigma(x)(y)) != t.sigma(mu(x))(mu(y))) return false;
      if (mu(s.gamma(y)(x)) != t.gamma(mu(y))(mu(x))) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const Solution& s, const Solution& t,
                                            std::size_t max_n) {
  if (s.size() != t.size()) {
    throw Error(ErrorCode::SizeMismatch, "solutions have different sizes");
  }
  if (s.size() > max_n) {
    throw Error(ErrorCode::LimitExceeded, "isomorphism search limited to n <= " +
                                              std::to_string(max_n));
  }
  std::vector<Point> images(s.size());
  std::iota(images.begin(), images.end(), Point{1});
  do {
    Permutation mu = Permutation::from_images(images);
    if (is_isomorphism(s, t, mu)) return mu;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

Solution relabel(const Solution& s, const Permutation& mu) {
  const std::size_t n = s.size();
  if (mu.size() != n) throw Error(ErrorCode::SizeMismatch, "relabeling has wrong size");
  Permutation mu_inv = inverse(mu);
  std::vector<Permutation> sigma(n, Permutation::identity(n));
  std::vector<Permutation> gamma(n, Permutation::identity(n));
  for (Point x = 1; x <= n; ++x) {
    sigma[mu(x) - 1] = compose(mu, compose(s.sigma(x), mu_inv));
    gamma[mu(x) - 1] = compose(mu, compose(s.gamma(x), mu_inv));
  }
  return Solution::from_families(std::move(sigma), std::move(gamma));
}

AnalysisReport analyze(const Solution& s, const AnalysisLimits& limits) {
  AnalysisReport report;
  VerifyReport v = verify(s);
  report.nondegenerate = v.nondegenerate;
  report.involutive = v.involutive;
  report.braided = v.braided;
  if (!v.ok()) return report;

  report.class_m = class_of(s, limits.class_cap);
  report.indecomposable = is_indecomposable(s);
  report.retract_level = multipermutation_level(s);
  ConditionC c = condition_C(s, limits.table_steps);
  report.condition_C = c.holds;
  report.condition_C_column = c.column;
  report.iyb_order = group_closure_order(s.sigmas(), limits.closure_limit);
  return report;
}

}  // namespace ybe
