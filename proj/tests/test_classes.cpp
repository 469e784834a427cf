#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wallcross/classes.hpp"

using wallcross::ChernClass;
using wallcross::in_positive_cone;
using wallcross::NumClass;
using wallcross::StabCondition;
using wallcross::stability_value;

TEST_CASE("effectiveness is nonzero with all coordinates >= 0") {
  CHECK(ChernClass({1, 0}).effective());
  CHECK(ChernClass({2}).effective());
  CHECK_FALSE(ChernClass({0, 0}).effective());
  CHECK_FALSE(ChernClass({1, -1}).effective());
  CHECK(ChernClass::zero(3).is_zero());
  CHECK_THROWS_AS(ChernClass(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("rank mixing is an error, not a coercion") {
  CHECK_THROWS_AS(ChernClass({1}) + ChernClass({1, 0}), std::invalid_argument);
  CHECK(ChernClass({1, 2}) + ChernClass({3, 4}) == ChernClass({4, 6}));
}

TEST_CASE("positive cone membership") {
  CHECK(in_positive_cone(NumClass(ChernClass({1, 0}), 0)));  // effective, d = 0
  CHECK_FALSE(in_positive_cone(NumClass(ChernClass::zero(2), 0)));
  CHECK(in_positive_cone(NumClass(ChernClass::zero(2), 2)));  // beta = 0, d > 0
  CHECK(in_positive_cone(NumClass(ChernClass({1}), 5)));
  CHECK_FALSE(in_positive_cone(NumClass(ChernClass({-1, 2}), 1)));
  CHECK_THROWS_AS(NumClass(ChernClass({1}), -1), std::invalid_argument);
}

TEST_CASE("stability values of the three conditions") {
  const NumClass sheaf(ChernClass({1}), 0);
  const NumClass mixed(ChernClass({1}), 2);
  const NumClass points(ChernClass::zero(1), 2);

  CHECK(stability_value(StabCondition::TauBullet, mixed) == -1);
  CHECK(stability_value(StabCondition::TauBullet, sheaf) == 0);
  CHECK(stability_value(StabCondition::TauTilde, points) == 1);
  CHECK(stability_value(StabCondition::TauTilde, sheaf) == 0);
  CHECK(stability_value(StabCondition::TauN, NumClass(ChernClass({1}), 5)) == 0);

  CHECK_THROWS_AS(stability_value(StabCondition::TauBullet, NumClass(ChernClass::zero(1), 0)),
                  std::domain_error);
}

TEST_CASE("tau_bullet mirrors tau_tilde away from d = 0") {
  for (std::int64_t b = 0; b <= 2; ++b) {
    for (std::int64_t d = 0; d <= 3; ++d) {
      NumClass c(ChernClass({b}), d);
      if (!in_positive_cone(c)) continue;
      if (d > 0)
        CHECK(stability_value(StabCondition::TauBullet, c) ==
              -stability_value(StabCondition::TauTilde, c));
      else
        CHECK(stability_value(StabCondition::TauBullet, c) ==
              stability_value(StabCondition::TauTilde, c));
    }
  }
}

// weak seesaw: tau(alpha) <= tau(sigma) <= tau(gamma) or the reverse, for
// sigma = alpha + gamma, exhausted over small rank-2 classes
TEST_CASE("weak seesaw by exhaustion") {
  std::vector<NumClass> cone;
  for (std::int64_t b0 = 0; b0 <= 2; ++b0)
    for (std::int64_t b1 = 0; b1 <= 2; ++b1)
      for (std::int64_t d = 0; d <= 2; ++d) {
        NumClass c(ChernClass({b0, b1}), d);
        if (in_positive_cone(c)) cone.push_back(c);
      }

  for (const auto cond :
       {StabCondition::TauBullet, StabCondition::TauTilde, StabCondition::TauN}) {
    for (const auto& alpha : cone) {
      for (const auto& gamma : cone) {
        const NumClass sigma = alpha + gamma;
        const int ta = stability_value(cond, alpha);
        const int ts = stability_value(cond, sigma);
        const int tg = stability_value(cond, gamma);
        const bool up = ta <= ts && ts <= tg;
        const bool down = ta >= ts && ts >= tg;
        CHECK((up || down));
      }
    }
  }
}
