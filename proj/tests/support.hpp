#pragma once

#include "ybe/permutation.hpp"
#include "ybe/solution.hpp"
#include "ybe/solution_io.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <string>
#include <vector>

namespace testing_support {

using ybe::Permutation;
using ybe::Point;
using ybe::Solution;

inline Solution irretractable4() { return ybe::load_solution(YBE_DATA_DIR "/irretractable4.sol"); }
inline Solution swap2() { return ybe::load_solution(YBE_DATA_DIR "/swap2.sol"); }

inline Permutation perm(std::initializer_list<Point> images) {
  return Permutation::from_images(std::vector<Point>(images));
}

inline Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

inline std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// r(x,y) straight from the families, no library helpers.
inline std::pair<Point, Point> r_of(const Solution& s, Point x, Point y) {
  return {s.sigma(x)(y), s.gamma(y)(x)};
}

// Checks r∘r = id and r12 r23 r12 = r23 r12 r23 pointwise.
inline bool is_braided_involutive(const Solution& s) {
  const Point n = static_cast<Point>(s.size());
  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      auto [a, b] = r_of(s, x, y);
      if (r_of(s, a, b) != std::pair<Point, Point>{x, y}) return false;
      for (Point z = 1; z <= n; ++z) {
        auto r12 = [&](std::array<Point, 3> t) {
          auto [p, q] = r_of(s, t[0], t[1]);
          return std::array<Point, 3>{p, q, t[2]};
        };
        auto r23 = [&](std::array<Point, 3> t) {
          auto [p, q] = r_of(s, t[1], t[2]);
          return std::array<Point, 3>{t[0], p, q};
        };
        const std::array<Point, 3> t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
      }
    }
  }
  return true;
}

// Every involutive non-degenerate solution on {1..n}, found without the
// enumerate module.
inline std::vector<Solution> brute_force_solutions(std::size_t n) {
  const auto group = all_perms(n);
  std::vector<Solution> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<Permutation> sigma;
    for (auto d : digits) sigma.push_back(group[d]);
    // gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x)
    std::vector<std::vector<Point>> gamma(n, std::vector<Point>(n));
    bool ok = true;
    for (Point y = 1; y <= n && ok; ++y) {
      std::vector<bool> seen(n + 1);
      for (Point x = 1; x <= n; ++x) {
        const Permutation& t = sigma[sigma[x - 1](y) - 1];
        Point pre = 0;
        for (Point z = 1; z <= n; ++z) {
          if (t(z) == x) pre = z;
        }
        if (seen[pre]) {
          ok = false;
          break;
        }
        seen[pre] = true;
        gamma[y - 1][x - 1] = pre;
      }
    }
    if (ok) {
      std::vector<Permutation> g;
      for (auto& images : gamma) g.push_back(Permutation::from_images(images));
      Solution s = Solution::from_families(sigma, g);
      if (is_braided_involutive(s)) out.push_back(std::move(s));
    }
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == group.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

// Parses cycles written with pair labels, e.g. "(T_1^1,T_2^3)(T_2^1,T_2^1)",
// into a permutation of the renumbered points m = n(i-1)+k. A cycle that
// repeats its only element is read as a fixed point.
inline Permutation parse_pair_cycles(const std::string& text, std::size_t n) {
  static const std::regex cycle_re(R"(\(([^)]*)\))");
  static const std::regex point_re(R"(T_(\d+)\^(\d+))");
  std::vector<ybe::Cycle> cycles;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), cycle_re);
       it != std::sregex_iterator(); ++it) {
    const std::string body = (*it)[1];
    ybe::Cycle c;
    for (auto p = std::sregex_iterator(body.begin(), body.end(), point_re);
         p != std::sregex_iterator(); ++p) {
      const auto i = std::stoul((*p)[1]);
      const auto k = std::stoul((*p)[2]);
      c.push_back(static_cast<Point>(n * (i - 1) + k));
    }
    if (c.size() == 2 && c[0] == c[1]) c.pop_back();
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(n * n, cycles);
}

}  // namespace testing_support
