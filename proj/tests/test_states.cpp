#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "xxz/states.hpp"

using namespace xxz;

namespace {
const double kPi = M_PI;
}

TEST_CASE("ground-state numbers pack around the origin") {
  CHECK(ground_state_numbers(8, 4).doubled == std::vector<std::int64_t>{-3, -1, 1, 3});
  CHECK(ground_state_numbers(8, 3).doubled == std::vector<std::int64_t>{-1, 1, 3});
  CHECK(ground_state_numbers(12, 6).doubled == std::vector<std::int64_t>{-5, -3, -1, 1, 3, 5});
  CHECK(ground_state_numbers(4, 1).doubled == std::vector<std::int64_t>{1});
}

TEST_CASE("number validation") {
  CHECK_NOTHROW((void)BetheNumberSet::from_doubled({-3, -1, 5}));
  CHECK_THROWS_AS((void)BetheNumberSet::from_doubled({-3, 0, 5}), std::invalid_argument);
  CHECK_THROWS_AS((void)BetheNumberSet::from_doubled({-3, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS((void)BetheNumberSet::from_doubled({5, 3}), std::invalid_argument);
  const auto s = BetheNumberSet::from_doubled({-3, 1});
  CHECK(s.value(0) == -1.5);
  CHECK(s.value(1) == 0.5);
}

TEST_CASE("classification counts vacancies per side") {
  SUBCASE("balanced ground state") {
    const auto c = classify(ground_state_numbers(8, 4), 8);
    CHECK(c.n_plus == 0.0);
    CHECK(c.n_minus == 0.0);
    CHECK(c.delta_plus_I == 0);
    CHECK(c.delta_minus_I == 0);
  }
  SUBCASE("odd ground state leans positive") {
    const auto c = classify(ground_state_numbers(8, 3), 8);
    CHECK(c.n_plus == 0.0);
    CHECK(c.n_minus == 1.0);
  }
  SUBCASE("negative-leaning three-root state") {
    const auto c = classify(BetheNumberSet::from_doubled({-3, -1, 1}), 8);
    CHECK(c.n_plus == 1.0);
    CHECK(c.n_minus == 0.0);
  }
  SUBCASE("one displaced number on the positive side") {
    const auto c = classify(BetheNumberSet::from_doubled({-3, -1, 1, 5}), 12);
    CHECK(c.n_plus == 1.0);
    CHECK(c.n_minus == 1.0);
    CHECK(c.delta_plus_I == 1);
    CHECK(c.delta_minus_I == 0);
  }
  SUBCASE("displacement on the negative side") {
    const auto c = classify(BetheNumberSet::from_doubled({-7, -1, 1, 3}), 12);
    CHECK(c.delta_minus_I == 2);
    CHECK(c.delta_plus_I == 0);
  }
}

TEST_CASE("admissibility bound tracks the vacancy count") {
  // L = 20, gamma = pi/5: two vacancies widen the window to 5 + 0.6.
  const double gamma = kPi / 5.0;
  const auto inside =
      BetheNumberSet::from_doubled({-7, -5, -3, -1, 1, 3, 5, 11});
  const auto outside =
      BetheNumberSet::from_doubled({-7, -5, -3, -1, 1, 3, 5, 13});
  CHECK(admissible(inside, 20, gamma));
  CHECK_FALSE(admissible(outside, 20, gamma));
}

TEST_CASE("template states") {
  CHECK(template_numbers(8, 1, 1).doubled == std::vector<std::int64_t>{-1, 1});
  CHECK(template_numbers(8, 1, 1, 1).doubled == std::vector<std::int64_t>{-1, 3});
  CHECK(template_numbers(8, 1, 1, 0, 2).doubled == std::vector<std::int64_t>{-5, 1});
  CHECK(template_numbers(16, 1, 0).doubled == std::vector<std::int64_t>{-7, -5, -3, -1, 1, 3, 5});
  CHECK(template_numbers(8, 0, 0).doubled == ground_state_numbers(8, 4).doubled);
  CHECK_THROWS_AS((void)template_numbers(10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)template_numbers(8, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)template_numbers(8, 2, 2, 1), std::invalid_argument);

  const auto c = classify(template_numbers(16, 2, 1, 3), 16);
  CHECK(c.n_plus == 2.0);
  CHECK(c.n_minus == 1.0);
  CHECK(c.delta_plus_I == 3);
  CHECK(c.delta_minus_I == 0);
}

TEST_CASE("excitation enumeration is ordered and classified consistently") {
  const double gamma = kPi / 5.0;
  const auto states = enumerate_excitations_split(40, 9, 9, 2, gamma);
  CHECK(states.size() == 2);  // partitions of 2 with parts <= 2: 2, 1+1
  for (const auto& s : states) {
    const auto c = classify(s, 40);
    CHECK(c.n_plus == 1.0);
    CHECK(c.n_minus == 1.0);
    CHECK(c.delta_plus_I == 2);
    CHECK(c.delta_minus_I == 0);
    CHECK(admissible(s, 40, gamma));
  }
  for (std::size_t i = 1; i < states.size(); ++i) {
    CHECK(states[i - 1].doubled < states[i].doubled);
  }
}

TEST_CASE("level zero enumeration is the packed template") {
  const auto states = enumerate_excitations(8, 4, 0, 0.55 * kPi);
  REQUIRE(states.size() == 1);
  CHECK(states[0].doubled == ground_state_numbers(8, 4).doubled);
}
