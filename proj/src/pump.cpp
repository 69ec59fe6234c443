#include "ybe/pump.hpp"

#include "ybe/bigint.hpp"
#include "ybe/error.hpp"

#include <cassert>
#include <numeric>
#include <set>

namespace ybe {

std::uint64_t renumber_pair(std::uint64_t n, std::uint64_t i, std::uint64_t k) {
  if (n == 0 || i < 1 || i > n || k < 1 || k > n) {
    throw Error(ErrorCode::OutOfRange, "pair (" + std::to_string(i) + "," + std::to_string(k) +
                                           ") outside 1.." + std::to_string(n));
  }
  return join_point<std::uint64_t>(i, k, n);
}

std::pair<std::uint64_t, std::uint64_t> renumber_point(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m < 1 || m > n * n) {
    throw Error(ErrorCode::OutOfRange,
                "point " + std::to_string(m) + " outside 1.." + std::to_string(n * n));
  }
  return split_point<std::uint64_t>(m, n);
}

Permutation pair_permutation(const Permutation& left, const Permutation& right) {
  const std::size_t a = left.size();
  const std::size_t b = right.size();
  std::vector<Point> images(a * b);
  for (Point j = 1; j <= a; ++j) {
    for (Point l = 1; l <= b; ++l) {
      images[(j - 1) * b + (l - 1)] = static_cast<Point>((left(j) - 1) * b + right(l));
    }
  }
  return Permutation::from_images(std::move(images));
}

namespace {

void check_index(const Solution& s, Point x) {
  if (x < 1 || x > s.size()) {
    throw Error(ErrorCode::OutOfRange,
                "index " + std::to_string(x) + " outside 1.." + std::to_string(s.size()));
  }
}

}  // namespace

Permutation g_of(const Solution& s, Point i, Point k) {
  check_index(s, i);
  check_index(s, k);
  Permutation direct = pair_permutation(s.sigma(i), s.sigma(k));
  assert(direct == g_by_cycles(s, i, k));
  return direct;
}

Permutation f_of(const Solution& s, Point j, Point l) {
  check_index(s, j);
  check_index(s, l);
  return pair_permutation(s.gamma(j), s.gamma(l));
}

std::vector<Cycle> product_cycles(const Permutation& p, const Permutation& q) {
  const std::size_t width = q.size();
  std::vector<Cycle> result;
  for (const Cycle& a : cycle_decomposition(p)) {
    for (const Cycle& b : cycle_decomposition(q)) {
      const std::size_t qa = a.size();
      const std::size_t pb = b.size();
      const std::size_t g = std::gcd(qa, pb);
      const std::size_t len = qa / g * pb;
      for (std::size_t offset = 0; offset < g; ++offset) {
        Cycle c;
        c.reserve(len);
        for (std::size_t t = 0; t < len; ++t) {
          c.push_back(static_cast<Point>((a[t % qa] - 1) * width + b[(t + offset) % pb]));
        }
        result.push_back(std::move(c));
      }
    }
  }
  return result;
}

Permutation g_by_cycles(const Solution& s, Point i, Point k) {
  check_index(s, i);
  check_index(s, k);
  auto cycles = product_cycles(s.sigma(i), s.sigma(k));
  return Permutation::from_cycles(s.size() * s.size(), cycles);
}

std::string format_pair_cycles(const Permutation& p, std::size_t n, bool compact) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(p)) {
    if (compact && c.size() == 1) continue;
    out += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      auto [i, k] = renumber_point(n, c[t]);
      if (t) out += ',';
      out += "T_" + std::to_string(i) + "^" + std::to_string(k);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

PumpedSolution pump(const Solution& s) {
  require_solution(s);
  const std::size_t n = s.size();
  std::vector<Permutation> sigma, gamma;
  sigma.reserve(n * n);
  gamma.reserve(n * n);
  for (Point i = 1; i <= n; ++i) {
    for (Point k = 1; k <= n; ++k) {
      sigma.push_back(pair_permutation(s.sigma(i), s.sigma(k)));
      gamma.push_back(pair_permutation(s.gamma(i), s.gamma(k)));
    }
  }
  return {s, Solution::from_families(std::move(sigma), std::move(gamma))};
}

Solution pump_iterate(const Solution& s, unsigned k, std::uint64_t max_points) {
  if (s.size() > 1 && (k > 6 || pumped_size(s.size(), k) > max_points)) {
    throw Error(ErrorCode::LimitExceeded,
                "pumped size " + std::to_string(s.size()) + "^(2^" + std::to_string(k) +
                    ") exceeds the materialization bound " + std::to_string(max_points) +
                    "; use lazy evaluation");
  }
  if (k == 0) {
    require_solution(s);
    return s;
  }
  Solution cur = pump(s).result;
  for (unsigned step = 1; step < k; ++step) cur = pump(cur).result;
  return cur;
}

FrtElement frt_element(const Solution& s, Point a, Point b, Point c, Point d) {
  const std::uint64_t n = s.size();
  FrtElement e{a, b, c, d, {}, {}};
  e.positive = {renumber_pair(n, s.sigma(a)(b), c), renumber_pair(n, s.gamma(b)(a), d)};
  e.negative = {renumber_pair(n, a, s.sigma(c)(d)), renumber_pair(n, b, s.gamma(d)(c))};
  return e;
}

namespace {

void tally(SignTally& t, const FrtElement& x, const FrtElement& y) {
  if (x.is_zero() && y.is_zero()) {
    ++t.zero;
  } else if (x.positive == y.positive && x.negative == y.negative) {
    ++t.plus;
  } else if (x.positive == y.negative && x.negative == y.positive) {
    ++t.minus;
  } else {
    ++t.other;
  }
}

}  // namespace

FrtResult frt_relations(const Solution& s) {
  require_solution(s);
  const Point n = static_cast<Point>(s.size());
  const std::uint64_t nn = std::uint64_t{n} * n;
  FrtResult out;
  FrtReport& rep = out.report;
  rep.expected_classes = static_cast<std::size_t>(nn * (nn - 1) / 2);

  std::set<std::pair<PumpWord, PumpWord>> classes;
  for (Point i = 1; i <= n; ++i) {
    for (Point j = 1; j <= n; ++j) {
      auto [ri, rj] = apply_r(s, i, j);
      for (Point k = 1; k <= n; ++k) {
        for (Point l = 1; l <= n; ++l) {
          auto [rk, rl] = apply_r(s, k, l);
          FrtElement e = frt_element(s, i, j, k, l);
          ++rep.elements;
          if (e.is_zero()) {
            ++rep.zero_elements;
          } else {
            classes.insert(std::minmax(e.positive, e.negative));
          }

          FrtElement from_pair = frt_element(s, ri, rj, k, l);
          PumpWord w{renumber_pair(n, i, k), renumber_pair(n, j, l)};
          PumpWord rw{renumber_pair(n, ri, s.sigma(k)(l)), renumber_pair(n, rj, s.gamma(l)(k))};
          if (from_pair.positive != w || from_pair.negative != rw) rep.same_family = false;

          tally(rep.negation_i, frt_element(s, ri, rj, rk, rl), e);
          tally(rep.negation_ii, frt_element(s, i, j, rk, rl), from_pair);
          if (ri == i && rj == j) tally(rep.fixed_lower, frt_element(s, i, j, rk, rl), e);
          if (rk == k && rl == l) tally(rep.fixed_upper, from_pair, e);
          if (ri == i && rj == j && rk == k && rl == l && !e.is_zero()) ++rep.both_fixed_nonzero;
        }
      }
    }
  }
  rep.classes = classes.size();

  // One record per class, read off the pumped r: (T_i^k, T_j^l) -> r~ of it.
  for (Point i = 1; i <= n; ++i) {
    for (Point k = 1; k <= n; ++k) {
      for (Point j = 1; j <= n; ++j) {
        for (Point l = 1; l <= n; ++l) {
          PumpWord w{renumber_pair(n, i, k), renumber_pair(n, j, l)};
          auto [ri, rj] = apply_r(s, i, j);
          auto [rk, rl] = apply_r(s, k, l);
          PumpWord rw{renumber_pair(n, ri, rk), renumber_pair(n, rj, rl)};
          if (!(w < rw)) continue;
          out.relations.push_back({w, rw, ri, rj, k, l});
        }
      }
    }
  }
  return out;
}

Permutation lift_isomorphism(const Permutation& mu) { return pair_permutation(mu, mu); }

std::vector<std::string> preservation_failures(const Solution& s) {
  const Solution p = pump(s).result;
  std::vector<std::string> failed;
  if (!verify(p).ok()) {
    failed.push_back("verify");
    return failed;
  }
  if (class_of(p) != class_of(s)) failed.push_back("class");
  if (multipermutation_level(p) != multipermutation_level(s)) failed.push_back("retract_level");
  const bool indecomposable = is_indecomposable(s);
  if (!indecomposable && is_indecomposable(p)) failed.push_back("decomposable");
  if (indecomposable && condition_C(s).holds && !is_indecomposable(p)) {
    failed.push_back("indecomposable");
  }
  return failed;
}

}  // namespace ybe
