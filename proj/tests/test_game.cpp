#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "sbpg/core/errors.hpp"
#include "sbpg/game/grid.hpp"
#include "sbpg/game/interpolation.hpp"
#include "sbpg/game/map_io.hpp"
#include "sbpg/game/maps.hpp"
#include "sbpg/game/reference_game.hpp"
#include "sbpg/game/verify.hpp"

using namespace sbpg;

namespace {

// exhaustive scan, first minimum wins
CellIndex nearest_by_scan(const SupportGrid& grid, const StateVector& s) {
  CellIndex best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (CellIndex c = 0; c < grid.cell_count(); ++c) {
    const auto x = grid.coordinates(c);
    double d = 0.0;
    for (std::size_t j = 0; j < s.dimension(); ++j) d += (s[j] - x[j]) * (s[j] - x[j]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

CellIndex cell_of(const SupportGrid& g, std::size_t i, std::size_t j) {
  const std::size_t idx[] = {i, j};
  return g.flat_index(idx);
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("grid centers and counts") {
  SupportGrid g(40, 2);
  CHECK(g.cell_count() == 1600);
  CHECK(g.center(0) == 0.0);
  CHECK(g.center(39) == 1.0);
  for (std::size_t k = 1; k < 40; ++k) CHECK(g.center(k) > g.center(k - 1));
  CHECK_THROWS_AS(SupportGrid(1, 2), ConfigError);
  CHECK_THROWS_AS(SupportGrid(5, 0), ConfigError);
}

TEST_CASE("locate boundary states") {
  SupportGrid g(5, 2);
  CHECK(g.locate(StateVector{0.0, 0.0}) == cell_of(g, 0, 0));
  CHECK(g.locate(StateVector{1.0, 1.0}) == cell_of(g, 4, 4));
  CHECK(g.multi_index(g.locate(StateVector{1.0, 1.0})) == std::vector<std::size_t>{4, 4});
}

TEST_CASE("locate matches brute force on (0.13, 0.88)") {
  SupportGrid g(40, 2);
  const StateVector s{0.13, 0.88};
  CHECK(g.locate(s) == nearest_by_scan(g, s));
}

TEST_CASE("locate ties go to the lower index") {
  SupportGrid g(5, 1);
  // 0.125 is halfway between 0 and 0.25
  CHECK(g.locate(StateVector{0.125}) == 0);
  CHECK(g.locate(StateVector{0.375}) == 1);
}

TEST_CASE("locate rejects a dimension mismatch") {
  SupportGrid g(5, 2);
  CHECK_THROWS_AS(g.locate(StateVector{0.5}), ConfigError);
}

TEST_CASE("state and action value contracts") {
  CHECK_THROWS_AS(StateVector(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS((StateVector{0.5, 1.2}), std::invalid_argument);
  CHECK_THROWS_AS((StateVector{std::nan("")}), std::invalid_argument);
  CHECK(ActionValue::clamped(1.7).value() == 1.0);
  CHECK(ActionValue::clamped(-0.2).value() == 0.0);
  CHECK_THROWS_AS(ActionValue::clamped(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("best response overwrites only on strict improvement") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  const CellIndex c = 7;
  REQUIRE(m.update(c, ActionValue::clamped(0.3), 1.0));

  SUBCASE("better utility replaces the cell") {
    CHECK(m.update(c, ActionValue::clamped(0.7), 2.0));
    CHECK(m.cell(c).utility == 2.0);
    CHECK(m.cell(c).action == 0.7);
  }
  SUBCASE("equal utility leaves it unchanged") {
    CHECK_FALSE(m.update(c, ActionValue::clamped(0.7), 1.0));
    CHECK(m.cell(c).utility == 1.0);
    CHECK(m.cell(c).action == 0.3);
  }
}

TEST_CASE("fresh cell accepts a negative utility") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  CHECK(m.cell(3).utility == -std::numeric_limits<double>::infinity());
  CHECK(m.update(3, ActionValue::clamped(0.5), -3.0));
  CHECK(m.cell(3).visited);
  CHECK(m.cell(3).utility == -3.0);
  CHECK(m.cell(3).action == 0.5);
}

TEST_CASE("non-finite utility is rejected") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  CHECK_FALSE(m.update(2, ActionValue::clamped(0.5), std::nan("")));
  CHECK_FALSE(m.cell(2).visited);
  GradientMap gm(g, 8);
  CHECK_FALSE(gm.push(2, ActionValue::clamped(0.5), std::numeric_limits<double>::infinity()));
  CHECK(gm.samples(2).size() == 1);
}

TEST_CASE("best response replay against a running max") {
  SupportGrid g(4, 2);
  BestResponseMap m(g);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<CellIndex> cell(0, g.cell_count() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0), util(-5.0, 5.0);
  std::vector<double> best_u(g.cell_count(), -std::numeric_limits<double>::infinity());
  std::vector<double> best_a(g.cell_count(), 0.0);
  for (int t = 0; t < 5000; ++t) {
    const CellIndex c = cell(rng);
    const double a = unit(rng);
    const double u = util(rng);
    m.update(c, ActionValue::clamped(a), u);
    if (u > best_u[c]) {
      best_u[c] = u;
      best_a[c] = a;
    }
  }
  for (CellIndex c = 0; c < g.cell_count(); ++c) {
    CHECK(m.cell(c).utility == best_u[c]);
    CHECK(m.cell(c).action == best_a[c]);
  }
}

TEST_CASE("gradient map starts from the pseudo-sample") {
  SupportGrid g(5, 2);
  GradientMap m(g, 8);
  CHECK(m.samples(4).size() == 1);
  CHECK(m.samples(4)[0] == Sample{0.0, 0.0});
  m.push(4, ActionValue::clamped(0.6), 1.5);
  REQUIRE(m.samples(4).size() == 2);
  CHECK(m.samples(4)[0] == Sample{0.0, 0.0});
  CHECK(m.samples(4)[1] == Sample{0.6, 1.5});
  CHECK_THROWS_AS(GradientMap(g, 1), ConfigError);
}

TEST_CASE("gradient map window keeps the last M of the ideal history") {
  SupportGrid g(5, 2);
  GradientMap m(g, 8);
  std::vector<Sample> ideal{{0.0, 0.0}};
  for (int k = 1; k <= 10; ++k) {
    const Sample s{0.05 * k, 0.3 * k - 1.0};
    m.push(9, ActionValue::clamped(s.action), s.utility);
    ideal.push_back(s);
    CHECK(m.samples(9).size() <= 8);
  }
  REQUIRE(ideal.size() == 11);
  const std::vector<Sample> expected(ideal.end() - 8, ideal.end());
  const auto got = m.samples(9);
  CHECK(std::vector<Sample>(got.begin(), got.end()) == expected);
}

TEST_CASE("push on a full stack keeps depth M") {
  SupportGrid g(5, 2);
  GradientMap m(g, 3);
  for (int k = 0; k < 5; ++k) m.push(0, ActionValue::clamped(0.1 * k), k);
  CHECK(m.samples(0).size() == 3);
  m.push(0, ActionValue::clamped(0.9), 9.0);
  CHECK(m.samples(0).size() == 3);
  CHECK(m.latest(0) == Sample{0.9, 9.0});
}

TEST_CASE("seeding drops the pseudo-sample") {
  SupportGrid g(5, 2);
  GradientMap m(g, 8);
  m.seed(1, ActionValue::clamped(0.4), 2.0);
  REQUIRE(m.samples(1).size() == 1);
  CHECK(m.samples(1)[0] == Sample{0.4, 2.0});
  m.seed(1, ActionValue::clamped(0.5), 2.5);
  CHECK(m.samples(1).size() == 2);
}

TEST_CASE("gradient policy uses the latest sample") {
  SupportGrid g(5, 2);
  GradientMap m(g, 8);
  m.push(3, ActionValue::clamped(0.2), 1.0);
  m.push(3, ActionValue::clamped(0.8), 0.5);
  const auto t = m.policy();
  REQUIRE(t.size() == 1);
  CHECK(t.action(0) == 0.8);
  CHECK(t.utility(0) == 0.5);
  CHECK(t.depth(0) == 3);
}

TEST_CASE("interpolation over a single visited cell") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  m.update(cell_of(g, 1, 3), ActionValue::clamped(0.42), 1.0);
  const auto t = m.policy();
  for (double x : {0.0, 0.3, 0.77, 1.0})
    CHECK(interpolate_action(t, StateVector{x, 1.0 - x}, 1e-3).value() == doctest::Approx(0.42).epsilon(1e-15));
}

TEST_CASE("interpolation between two equidistant cells") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  m.update(cell_of(g, 0, 0), ActionValue::clamped(0.2), 1.0);
  m.update(cell_of(g, 0, 2), ActionValue::clamped(0.4), 1.0);
  // (0, 0.25) sits halfway between (0, 0) and (0, 0.5)
  CHECK(interpolate_action(m.policy(), StateVector{0.0, 0.25}, 0.0).value() ==
        doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("interpolation matches a straight-line reimplementation") {
  SupportGrid g(5, 2);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BestResponseMap m(g);
  std::vector<bool> visited(g.cell_count(), false);
  std::vector<double> action(g.cell_count(), 0.0);
  for (CellIndex c = 0; c < g.cell_count(); ++c) {
    if (unit(rng) < 0.4) {
      visited[c] = true;
      action[c] = unit(rng);
      m.update(c, ActionValue::clamped(action[c]), 0.0);
    }
  }
  const double gamma = 0.01;
  for (int q = 0; q < 50; ++q) {
    const double sx = unit(rng), sy = unit(rng);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        const CellIndex c = i * 5 + j;
        if (!visited[c]) continue;
        const double dx = sx - i / 4.0, dy = sy - j / 4.0;
        const double w = 1.0 / (dx * dx + dy * dy + gamma);
        num += w * action[c];
        den += w;
      }
    }
    CHECK(interpolate_action(m.policy(), StateVector{sx, sy}, gamma).value() ==
          doctest::Approx(num / den).epsilon(1e-12));
  }
}

TEST_CASE("exact support hit with gamma 0 returns the stored action") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  m.update(cell_of(g, 2, 2), ActionValue::clamped(0.9), 1.0);
  m.update(cell_of(g, 0, 4), ActionValue::clamped(0.1), 1.0);
  CHECK(interpolate_action(m.policy(), StateVector{0.5, 0.5}, 0.0).value() == 0.9);
  const auto w = interpolation_weights(m.policy(), StateVector{0.5, 0.5}, 0.0);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 0.0);
}

TEST_CASE("interpolation errors") {
  SupportGrid g(5, 2);
  BestResponseMap m(g);
  CHECK_THROWS_AS(interpolate_action(m.policy(), StateVector{0.5, 0.5}, 1e-3), PolicyNotReady);
  m.update(0, ActionValue::clamped(0.5), 0.0);
  CHECK_THROWS_AS(interpolate_action(m.policy(), StateVector{0.5}, 1e-3), ConfigError);
  CHECK_THROWS_AS(interpolate_action(m.policy(), StateVector{0.5, 0.5}, -1.0), ConfigError);
}

TEST_CASE("map csv round trip") {
  SupportGrid g(6, 2);
  GradientMap m(g, 8);
  m.push(5, ActionValue::clamped(0.1), -1.25);
  m.push(5, ActionValue::clamped(1.0 / 3.0), 2.0 / 7.0);
  m.push(17, ActionValue::clamped(0.75), 3.5);
  const auto t = m.policy();
  std::stringstream ss;
  write_policy_csv(ss, t);
  const std::string text = ss.str();
  CHECK(text.rfind("cell,idx_0,idx_1,coord_0,coord_1,action,utility,depth\n", 0) == 0);

  const auto back = read_policy_csv(ss, g);
  REQUIRE(back.size() == t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(back.cell(k) == t.cell(k));
    CHECK(back.action(k) == t.action(k));
    CHECK(back.utility(k) == t.utility(k));
    CHECK(back.depth(k) == t.depth(k));
  }
  std::stringstream again;
  write_policy_csv(again, back);
  CHECK(again.str() == text);
}

TEST_CASE("map csv rejects malformed input") {
  SupportGrid g(6, 2);
  std::stringstream empty;
  CHECK_THROWS_AS(read_policy_csv(empty, g), ConfigError);
  std::stringstream wrong_header("cell,idx_0,coord_0,action,utility,depth\n");
  CHECK_THROWS_AS(read_policy_csv(wrong_header, g), ConfigError);
  std::stringstream bad_action(
      "cell,idx_0,idx_1,coord_0,coord_1,action,utility,depth\n0,0,0,0,0,1.5,0,1\n");
  CHECK_THROWS_AS(read_policy_csv(bad_action, g), ConfigError);
  std::stringstream bad_index(
      "cell,idx_0,idx_1,coord_0,coord_1,action,utility,depth\n3,0,0,0,0,0.5,0,1\n");
  CHECK_THROWS_AS(read_policy_csv(bad_index, g), ConfigError);
  CHECK_THROWS_AS(load_policy_csv("/nonexistent/dir/map.csv", g), IoError);
}

TEST_CASE("potential condition on the exact reference game") {
  auto game = make_exact_reference_game(5);
  std::mt19937_64 rng(1);
  const auto r = verify_potential_condition(game, 10000, 1e-9, rng);
  CHECK(r.passed);
  CHECK(r.samples == 10000);
  CHECK(r.max_residual <= 1e-9);
}

TEST_CASE("identical deviation has zero residual") {
  auto game = make_exact_reference_game(3);
  game.set_perturbation([](std::size_t i, std::span<const double> a, double) {
    return i == 0 ? 0.1 * a[0] * a[0] : 0.0;
  });
  const std::vector<double> a{0.2, 0.6, 0.9};
  for (std::size_t i = 0; i < 3; ++i) CHECK(potential_residual(game, i, a, a[i], 0.4) == 0.0);
}

TEST_CASE("perturbed utility fails the potential condition") {
  auto game = make_exact_reference_game(5);
  game.set_perturbation([](std::size_t i, std::span<const double> a, double) {
    return i == 0 ? 0.1 * a[0] * a[0] : 0.0;
  });
  std::mt19937_64 rng(2);
  const auto r = verify_potential_condition(game, 2000, 1e-9, rng);
  CHECK_FALSE(r.passed);
  CHECK(r.violations > 0);
  CHECK(r.max_residual > 0.0);
}

TEST_CASE("state transition condition") {
  std::mt19937_64 rng(3);
  const std::vector<double> offsets{-0.2, 0.0, 0.2};

  SUBCASE("improving rule passes") {
    ReferenceGame game(offsets, 1.0, ReferenceGame::Transition::improving);
    CHECK(verify_state_transition_condition(game, 5000, 1e-12, rng).passed);
  }
  SUBCASE("identity rule passes with equality") {
    ReferenceGame game(offsets, 1.0, ReferenceGame::Transition::identity);
    const auto r = verify_state_transition_condition(game, 5000, 0.0, rng);
    CHECK(r.passed);
    CHECK(r.max_residual == 0.0);
  }
  SUBCASE("adversarial rule fails") {
    ReferenceGame game(offsets, 1.0, ReferenceGame::Transition::adversarial);
    const auto r = verify_state_transition_condition(game, 5000, 1e-12, rng);
    CHECK_FALSE(r.passed);
    CHECK(r.violations > 0);
  }
}

TEST_CASE("reference game closed forms") {
  auto game = make_exact_reference_game(5);
  const std::vector<double> a{0.1, 0.3, 0.5, 0.7, 0.9};
  const double s = 0.35;
  double phi = 0.0;
  for (std::size_t i = 0; i < 5; ++i) phi -= (a[i] - game.target(i, s)) * (a[i] - game.target(i, s));
  CHECK(game.potential(a, s) == doctest::Approx(phi).epsilon(1e-15));
  CHECK(game.utility(2, a, s) == game.potential(a, s));
  // zero-sum offsets with unit coupling: best state is the action mean
  CHECK(game.best_state(a) == doctest::Approx(0.5).epsilon(1e-12));
  const double next = game.transition(a, s);
  CHECK(next >= 0.0);
  CHECK(next <= 1.0);
  CHECK(game.potential(a, next) >= game.potential(a, s));
  CHECK_THROWS_AS(ReferenceGame({}, 1.0, ReferenceGame::Transition::identity), ConfigError);
}

}  // TEST_SUITE
