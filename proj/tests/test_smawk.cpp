#include <doctest.h>

#include <cmath>
#include <limits>

#include "knapsack/errors.hpp"
#include "knapsack/oracle.hpp"
#include "knapsack/smawk.hpp"
#include "knapsack/testing.hpp"
#include "knapsack/uniform_merge.hpp"

using namespace knapsack;

TEST_CASE("smawk trivial matrices") {
  CHECK(smawk_argmax(1, 1, [](std::size_t, std::size_t) { return 0.0; }) ==
        std::vector<std::size_t>{0});
  const auto diag = smawk_argmax(5, 5, [](std::size_t i, std::size_t j) {
    const double d = static_cast<double>(j) - static_cast<double>(i);
    return -d * d;
  });
  CHECK(diag == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(smawk_argmax(0, 3, [](std::size_t, std::size_t) { return 0.0; }).empty());
}

TEST_CASE("smawk ties go left") {
  const auto flat = smawk_argmax(4, 6, [](std::size_t, std::size_t) { return 1.0; });
  CHECK(flat == std::vector<std::size_t>(4, 0));
}

TEST_CASE("smawk matches brute force") {
  SplitMix64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const auto m = knapsack::testing::random_monotone_matrix(rng, 50);
    const std::function<double(std::size_t, std::size_t)> v = [&](std::size_t i, std::size_t j) {
      return m(i, j);
    };
    CHECK(smawk_argmax(m.rows, m.cols, v) == brute_row_argmax(m.rows, m.cols, v));
  }
}

TEST_CASE("uniform function basics") {
  const auto f = UniformFunction::from_weights(1.5, {2, 1, 3});
  CHECK(f.count() == 3);
  CHECK(f(0.5) == 0);
  CHECK(f(1) == 1.5);
  CHECK(f(3) == 3.0);
  CHECK(f(6) == 4.5);
  CHECK_THROWS(UniformFunction(1.0, {1, 3, 4}));  // not convex
  CHECK_THROWS(UniformFunction(1.0, {}));
}

TEST_CASE("build_uniform_functions") {
  const auto one = build_uniform_functions(std::vector<Item>{{2, 1.0}, {1, 1.0}}, 0.1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].profit() == 1.0);
  CHECK(std::vector<double>(one[0].cumweights().begin(), one[0].cumweights().end()) ==
        std::vector<double>{1, 3});
  const auto r = build_uniform_functions(std::vector<Item>{{1, 1.26}}, 0.25);
  REQUIRE(r.size() == 1);
  CHECK(r[0].profit() == 1.25);
  CHECK(build_uniform_functions(std::vector<Item>{}, 0.1).empty());
  CHECK_THROWS_AS(build_uniform_functions(std::vector<Item>{{1, 2.5}}, 0.1), std::domain_error);
}

TEST_CASE("add_uniform examples") {
  const auto f = UniformFunction(1.0, {1, 2, 3});
  const auto prof = add_uniform(QuantizedProfile::zero(1.0, 3.0), f);
  CHECK(prof.minweight == std::vector<double>{0, 1, 2, 3});

  const auto g = UniformFunction(0.5, {2, 5});
  const auto p2 = add_uniform(QuantizedProfile::zero(0.25, 2.0), g);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(p2.minweight == std::vector<double>{0, 2, 2, 5, 5, inf, inf, inf, inf});
  CHECK_THROWS_AS(add_uniform(QuantizedProfile::zero(0.3, 2.0), g), ContractError);
}

TEST_CASE("add_uniform matches brute force") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const double q = rng.uniform_real(0.1, 1.0);
    auto prof = QuantizedProfile::zero(q, q * static_cast<double>(rng.uniform_int(1, 199)));
    for (int k = 0; k < 5; ++k) {
      const auto f = knapsack::testing::random_uniform_function(
          rng, q * static_cast<double>(rng.uniform_int(1, 7)),
          static_cast<std::size_t>(rng.uniform_int(1, 12)), 25.0, trial % 2 == 0);
      const auto fast = add_uniform(prof, f);
      const auto slow = brute_add_uniform(prof, f);
      REQUIRE(fast.minweight.size() == slow.minweight.size());
      for (std::size_t i = 0; i < fast.minweight.size(); ++i) {
        if (std::isinf(slow.minweight[i])) {
          CHECK(std::isinf(fast.minweight[i]));
        } else {
          CHECK(fast.minweight[i] == doctest::Approx(slow.minweight[i]).epsilon(1e-12));
        }
      }
      prof = fast;
    }
  }
}

TEST_CASE("switch_quantum keeps a valid lower bound") {
  auto prof = add_uniform(QuantizedProfile::zero(0.5, 5.0), UniformFunction(1.5, {1, 2, 3}));
  const auto coarse = switch_quantum(prof, 1.0);
  const auto before = prof.to_step_function();
  const auto after = coarse.to_step_function();
  for (double x = 0; x <= 7; x += 0.5) {
    CHECK(after(x) <= before(x) + 1e-12);
    CHECK(after(x) > before(x) - 1.0);
  }
}

TEST_CASE("uniform_merge with one quantum is exact") {
  const double z = 0.1;
  std::vector<UniformFunction> fs{UniformFunction(1.0, {1, 3}), UniformFunction(1.3, {2})};
  const auto merged = uniform_merge(fs, std::vector<double>{z}, z, 10.0);
  CHECK(merged.error_bound == 0.0);
  const auto exact = exact_maxplus(fs[0].to_step_function(), fs[1].to_step_function());
  for (double x = 0; x <= 7; x += 0.25) CHECK(merged.function(x) == doctest::Approx(exact(x)));
  CHECK(uniform_merge({}, std::vector<double>{z}, z, 10.0).function.is_zero());
  CHECK_THROWS_AS(uniform_merge(fs, std::vector<double>{0.07}, 0.05, 10.0), ContractError);
}

TEST_CASE("naive_capped") {
  const auto f = UniformFunction(1.0, {1, 2, 4});
  const auto single = naive_capped(std::vector{f}, 2.5, 0.1);
  CHECK(single(1) == doctest::Approx(1.0));
  CHECK(single(4) == doctest::Approx(2.5));
  const auto small = naive_capped(std::vector{f}, 0.5, 0.1);
  CHECK(small(0.9) == 0);
  CHECK(small(1) == doctest::Approx(0.5));
}

TEST_CASE("naive and fast naive against the exact fold") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<UniformFunction> fs;
    StepFunction fold;
    const auto m = rng.uniform_int(1, 8);
    for (int i = 0; i < m; ++i) {
      fs.push_back(knapsack::testing::random_uniform_function(
          rng, rng.uniform_real(1.0, 2.0), static_cast<std::size_t>(rng.uniform_int(1, 4)), 10.0, false));
      fold = exact_maxplus(fold, fs.back().to_step_function());
    }
    const double B = rng.uniform_real(1.0, fold.max_value());
    const double eps = 0.1;
    const auto naive = naive_capped(fs, B, eps);
    const auto fast = fast_naive_capped(fs, B, eps);
    CHECK(knapsack::testing::sandwich(naive, cap(fold, B), eps).ok);
    CHECK(knapsack::testing::sandwich(fast, cap(fold, B), eps).ok);
  }
}

TEST_CASE("fast_naive_capped with B = 1") {
  const auto f = UniformFunction(1.2, {1, 2});
  const auto g = fast_naive_capped(std::vector{f}, 1.0, 0.1);
  CHECK(g(1) == doctest::Approx(1.0));
  CHECK(g(0.5) == 0.0);
}
