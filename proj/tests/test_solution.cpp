#include "support.hpp"

#include "ybe/error.hpp"
#include "ybe/pump.hpp"
#include "ybe/solution.hpp"
#include "ybe/solution_io.hpp"

#include <doctest.h>

#include <set>

using namespace ybe;
using namespace testing_support;

namespace {

Solution non_braided() {
  return Solution::from_sigma({perm({1, 3, 2}), perm({1, 3, 2}), perm({2, 3, 1})});
}

std::set<std::pair<PointPair, PointPair>> relation_set(const std::vector<Relation>& rels) {
  std::set<std::pair<PointPair, PointPair>> out;
  for (const auto& r : rels) out.insert(std::minmax(r.lhs, r.rhs));
  return out;
}

const std::vector<Solution>& corpus() {
  static const std::vector<Solution> all = [] {
    std::vector<Solution> v;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& s : brute_force_solutions(n)) v.push_back(std::move(s));
    }
    v.push_back(irretractable4());
    return v;
  }();
  return all;
}

}  // namespace

TEST_CASE("derive_gamma") {
  for (const auto& g : derive_gamma({Permutation::identity(3), Permutation::identity(3),
                                     Permutation::identity(3)})) {
    CHECK(g.is_identity());
  }
  const Solution e31 = swap2();
  CHECK(e31.gamma(1) == parse_perm("(1,2)", 2));
  CHECK(e31.gamma(2) == parse_perm("(1,2)", 2));

  const Solution e = irretractable4();
  CHECK(e.gamma(1) == parse_perm("(1,2,4,3)", 4));
  CHECK(e.gamma(2) == parse_perm("(2,1,3,4)", 4));
  CHECK(e.gamma(3) == parse_perm("(1)(2,3)(4)", 4));
  CHECK(e.gamma(4) == parse_perm("(1,4)(2)(3)", 4));

  try {
    derive_gamma({perm({2, 1}), perm({1, 2})});
    FAIL("expected NotBijective");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotBijective);
  }
}

TEST_CASE("apply_r") {
  const Solution t = Solution::trivial(3);
  for (Point x = 1; x <= 3; ++x) {
    for (Point y = 1; y <= 3; ++y) CHECK(apply_r(t, x, y) == PointPair{y, x});
  }
  const Solution e = irretractable4();
  CHECK(apply_r(e, 1, 4) == PointPair{1, 4});
  CHECK(apply_r(e, 1, 1) == PointPair{2, 2});
  CHECK_THROWS_AS(apply_r(e, 5, 1), Error);
}

TEST_CASE("verify") {
  const VerifyReport e = verify(irretractable4());
  CHECK(e.ok());
  CHECK_FALSE(e.braided_witness.has_value());

  const VerifyReport bad = verify(non_braided());
  CHECK(bad.nondegenerate);
  CHECK(bad.involutive);
  CHECK_FALSE(bad.braided);
  REQUIRE(bad.braided_witness.has_value());
  CHECK(*bad.braided_witness == PointTriple{1, 1, 2});

  for (std::size_t n = 1; n <= 5; ++n) CHECK(verify(Solution::trivial(n)).ok());

  // sigma = gamma = (1,2) on both points is not involutive as a pair of families
  const Solution not_involutive =
      Solution::from_families({perm({2, 1}), perm({1, 2})}, {perm({1, 2}), perm({1, 2})});
  const VerifyReport ni = verify(not_involutive);
  CHECK_FALSE(ni.involutive);
  CHECK(ni.involutive_witness.has_value());
  CHECK_THROWS_AS(require_solution(not_involutive), Error);
}

TEST_CASE("verify agrees with the pointwise braid oracle on every sigma-tuple of size 2 and 3") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto group = all_perms(n);
    std::vector<std::size_t> digits(n, 0);
    std::size_t checked = 0;
    while (true) {
      std::vector<Permutation> sigma;
      for (auto d : digits) sigma.push_back(group[d]);
      try {
        const Solution s = Solution::from_sigma(sigma);
        CHECK(verify(s).ok() == is_braided_involutive(s));
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotBijective);
      }
      std::size_t pos = n;
      while (pos > 0 && ++digits[pos - 1] == group.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("class and diagonal") {
  CHECK(class_of(Solution::trivial(4)) == 1u);

  const Solution e = irretractable4();
  CHECK(class_of(e) == 4u);
  const Permutation product =
      compose(compose(compose(e.sigma(1), e.sigma(4)), e.sigma(2)), e.sigma(3));
  CHECK(product.is_identity());

  const Solution e31 = swap2();
  CHECK(diagonal_D(e31, 1) == 2);
  CHECK(class_of(e31) == 2u);
  CHECK(class_of(e, 2) == std::nullopt);
}

TEST_CASE("frozen elements") {
  const Solution e = irretractable4();
  const auto two = frozen_elements(e, 2);
  const std::set<Word> expected{{1, 4}, {4, 2}, {2, 3}, {3, 1}};
  CHECK(std::set<Word>(two.begin(), two.end()) == expected);

  const auto four = frozen_elements(e, 4);
  CHECK(std::find(four.begin(), four.end(), Word{1, 4, 2, 3}) != four.end());

  const auto ones = frozen_elements(Solution::trivial(3), 1);
  CHECK(ones == std::vector<Word>{{1}, {2}, {3}});

  CHECK_THROWS_AS(frozen_elements(e, 3), Error);
}

TEST_CASE("retract and multipermutation level") {
  CHECK(multipermutation_level(swap2()) == 1u);
  CHECK(multipermutation_level(irretractable4()) == std::nullopt);
  CHECK(multipermutation_level(Solution::trivial(1)) == 0u);
  CHECK(multipermutation_level(Solution::trivial(3)) == 1u);

  const Retraction r = retract(swap2());
  CHECK(r.solution.size() == 1);
  CHECK(r.class_map == std::vector<Point>{1, 1});
}

TEST_CASE("orbits and decomposability") {
  const Solution e = irretractable4();
  CHECK(orbits(e) == std::vector<std::vector<Point>>{{1, 2, 3, 4}});
  CHECK(is_indecomposable(e));

  CHECK(orbits(Solution::trivial(2)) == std::vector<std::vector<Point>>{{1}, {2}});
  CHECK_FALSE(is_indecomposable(Solution::trivial(2)));

  // T_1^1, T_2^2 -> 1, 4 and T_1^2, T_2^1 -> 2, 3
  const Solution p = pump(swap2()).result;
  CHECK(orbits(p) == std::vector<std::vector<Point>>{{1, 4}, {2, 3}});
}

TEST_CASE("orbit table and condition (c)") {
  const OrbitTable t = table_T(swap2());
  for (std::size_t l = 1; l <= 6; ++l) {
    CHECK(t.column(l) == std::vector<Point>{l % 2 == 1 ? Point{2} : Point{1}});
  }
  CHECK_FALSE(condition_C(swap2()).holds);

  const Solution e = irretractable4();
  const OrbitTable te = table_T(e);
  for (std::size_t l = 1; l <= 5; ++l) CHECK(te.column(l) == std::vector<Point>{1, 2, 3, 4});
  const ConditionC c = condition_C(e);
  CHECK(c.holds);
  CHECK(c.column == 1u);

  CHECK(table_T(Solution::trivial(3)).column(4) == std::vector<Point>{1});
  CHECK_FALSE(condition_C(Solution::trivial(3)).holds);
  CHECK(condition_C(Solution::trivial(1)).holds);
}

TEST_CASE("structure relations") {
  const auto e = relation_set(structure_relations(irretractable4()));
  CHECK(e.count({{1, 1}, {2, 2}}) == 1);
  CHECK(e.count({{3, 4}, {4, 3}}) == 1);

  // the pumped swap solution with T_1^1, T_1^2, T_2^1, T_2^2 -> 1, 2, 3, 4
  const auto p = relation_set(structure_relations(pump(swap2()).result));
  const std::set<std::pair<PointPair, PointPair>> expected{
      {{1, 1}, {4, 4}}, {{1, 2}, {3, 4}}, {{2, 1}, {4, 3}},
      {{1, 3}, {2, 4}}, {{2, 2}, {3, 3}}, {{3, 1}, {4, 2}}};
  CHECK(p == expected);

  const auto t = structure_relations(Solution::trivial(2));
  REQUIRE(t.size() == 1);
  CHECK(t[0].lhs == PointPair{1, 2});
  CHECK(t[0].rhs == PointPair{2, 1});
}

TEST_CASE("find_isomorphism") {
  const Solution e = irretractable4();
  REQUIRE(find_isomorphism(e, e).has_value());
  CHECK(find_isomorphism(e, e)->is_identity());

  // The swap solution is fixed by relabelling, so both bijections work and the first is the identity.
  const Solution e31 = swap2();
  const Permutation swap = perm({2, 1});
  CHECK(is_isomorphism(e31, relabel(e31, swap), swap));
  CHECK(find_isomorphism(e31, relabel(e31, swap))->is_identity());

  CHECK_FALSE(find_isomorphism(Solution::trivial(2), e31).has_value());
  CHECK_THROWS_AS(find_isomorphism(Solution::trivial(2), Solution::trivial(3)), Error);
  CHECK_THROWS_AS(find_isomorphism(Solution::trivial(9), Solution::trivial(9)), Error);
}

TEST_CASE("find_isomorphism returns the lexicographically first bijection") {
  std::mt19937_64 rng(5);
  for (const Solution& s : corpus()) {
    const std::size_t n = s.size();
    const Permutation mu = random_perm(rng, n);
    const Solution t = relabel(s, mu);
    std::optional<Permutation> first;
    for (const auto& cand : all_perms(n)) {
      bool ok = true;
      for (Point x = 1; x <= n && ok; ++x) {
        for (Point y = 1; y <= n && ok; ++y) {
          ok = cand(s.sigma(x)(y)) == t.sigma(cand(x))(cand(y)) &&
               cand(s.gamma(y)(x)) == t.gamma(cand(y))(cand(x));
        }
      }
      if (ok) {
        first = cand;
        break;
      }
    }
    REQUIRE(first.has_value());
    CHECK(find_isomorphism(s, t) == first);
  }
}

TEST_CASE("analyze the size-4 irretractable solution") {
  const AnalysisReport r = analyze(irretractable4());
  CHECK(r.nondegenerate);
  CHECK(r.involutive);
  CHECK(r.braided);
  CHECK(r.class_m == 4u);
  CHECK(r.indecomposable);
  CHECK(r.retract_level == std::nullopt);
  CHECK(r.condition_C);
  CHECK(r.condition_C_column == 1u);
  CHECK(r.iyb_order == 8);

  const AnalysisReport bad = analyze(non_braided());
  CHECK_FALSE(bad.braided);
}

TEST_CASE("solution files") {
  const std::string text =
      "# comment\n\n2\n2 1\n# between\n2 1\n2 1\n2 1\n";
  const Solution s = parse_solution(text);
  CHECK(s == swap2());
  CHECK(parse_solution(format_solution(irretractable4(), {"header"})) == irretractable4());

  CHECK_THROWS_AS(parse_solution("2\n2 1\n2 1\n1 2\n1 2\n"), Error);  // gamma disagrees
  CHECK_THROWS_AS(parse_solution("3\n2 1 3\n"), Error);                 // too few lines
  CHECK_THROWS_AS(parse_solution("x\n"), Error);
  CHECK_THROWS_AS(parse_solution("2\n2 1\n1 1\n"), Error);
  CHECK_THROWS_AS(load_solution("/nonexistent/file.sol"), Error);
}

TEST_CASE("property: solution invariants on every solution of size <= 3 and the size-4 irretractable one") {
  for (const Solution& s : corpus()) {
    const Point n = static_cast<Point>(s.size());
    CHECK(verify(s).ok());
    for (Point x = 1; x <= n; ++x) {
      for (Point y = 1; y <= n; ++y) {
        auto [a, b] = apply_r(s, x, y);
        CHECK(apply_r(s, a, b) == PointPair{x, y});
      }
    }

    // D is inverted by y -> gamma_y^{-1}(y)
    for (Point x = 1; x <= n; ++x) {
      const Point d = diagonal_D(s, x);
      CHECK(inverse(s.gamma(d))(d) == x);
      CHECK(apply_r(s, x, d) == PointPair{x, d});
    }

    const auto m = class_of(s);
    REQUIRE(m.has_value());
    if (*m == 2) {
      for (Point x = 1; x <= n; ++x) {
        CHECK(compose(s.sigma(x), s.sigma(inverse(s.sigma(x))(x))).is_identity());
      }
    }
    std::uint64_t bound = 1;
    for (Point t = 0; t < n; ++t) bound *= *m;
    CHECK(bound % group_closure_order(s.sigmas()) == 0);

    for (Point i = 1; i <= n; ++i) {
      for (Point j = 1; j <= n; ++j) {
        const Permutation lhs = compose(s.sigma(i), s.sigma(inverse(s.sigma(i))(j)));
        const Permutation rhs = compose(s.sigma(j), s.sigma(inverse(s.sigma(j))(i)));
        CHECK(lhs == rhs);
      }
    }

    // the orbit of 1 is {1} together with every column of the table
    const OrbitTable t = table_T(s);
    std::set<Point> reached{1};
    for (const auto& col : t.columns) reached.insert(col.begin(), col.end());
    CHECK(is_indecomposable(s) == (reached.size() == n));
  }
}
