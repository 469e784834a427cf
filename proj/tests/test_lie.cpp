#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wallcross/lie.hpp"
#include "wallcross/stackcalc.hpp"

using namespace wallcross;

namespace {

Rational rat(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

const ChernClass b1({1});
const NumClass sheaf_b1 = NumClass::sheaf(b1);
const NumClass pt1 = NumClass::point(1, 1);
const NumClass pt2 = NumClass::point(1, 2);

}  // namespace

TEST_CASE("geometric-linear pairing evaluates d L(gamma) - e L(beta)") {
  const EulerPairing p = EulerPairing::geometric_linear({3});
  CHECK(p(pt2, sheaf_b1) == 6);               // 2*3 - 0
  CHECK(p(sheaf_b1, pt2) == -6);              // antisymmetry
  CHECK(p(pt1, pt2) == 0);                    // both beta = 0
  CHECK(p(NumClass(b1, 1), NumClass(b1, 0)) == 3);
  // chi((0,2),(gamma,0)) = 2 L(gamma) is always even
  for (std::int64_t l = -3; l <= 3; ++l) {
    const EulerPairing q = EulerPairing::geometric_linear({l});
    for (std::int64_t g = 1; g <= 4; ++g)
      CHECK(q(pt2, NumClass::sheaf(ChernClass({g}))) % 2 == 0);
  }
  CHECK_THROWS_AS(p(NumClass(ChernClass({1, 0}), 0), NumClass(ChernClass({1, 0}), 1)),
                  std::invalid_argument);
}

TEST_CASE("explicit table validation") {
  // consistent table passes
  const EulerPairing ok = EulerPairing::explicit_table({{pt2, sheaf_b1, 5}});
  CHECK(ok(pt2, sheaf_b1) == 5);
  CHECK(ok(sheaf_b1, pt2) == -5);
  CHECK(ok(pt1, sheaf_b1) == 0);  // absent pairs evaluate to 0

  // antisymmetry violations throw with the offending pair named
  CHECK_THROWS_WITH_AS(
      EulerPairing::explicit_table({{pt2, sheaf_b1, 5}, {sheaf_b1, pt2, 5}}),
      doctest::Contains("pairing antisymmetry violated at"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(EulerPairing::explicit_table({{pt1, pt1, 2}}),
                       doctest::Contains("pairing antisymmetry violated at"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      EulerPairing::explicit_table({{pt2, sheaf_b1, 5}, {pt2, sheaf_b1, 4}}),
      doctest::Contains("pairing antisymmetry violated at"), std::invalid_argument);

  // bi-additivity is enforced on covered triples:
  // ((1),0)+((1),0) = ((2),0) so chi((2),0),y) must be 2*chi(((1),0),y)
  const NumClass sheaf_b2 = NumClass::sheaf(ChernClass({2}));
  CHECK_THROWS_WITH_AS(
      EulerPairing::explicit_table({{sheaf_b1, pt2, 3}, {sheaf_b2, pt2, 5}}),
      doctest::Contains("bi-additivity violated"), std::invalid_argument);
  CHECK_NOTHROW(EulerPairing::explicit_table({{sheaf_b1, pt2, 3}, {sheaf_b2, pt2, 6}}));
}

TEST_CASE("class set box") {
  const ClassSet S = ClassSet::box(ChernClass({2}), 2);
  CHECK(S.contains(pt1));
  CHECK(S.contains(pt2));
  CHECK(S.contains(sheaf_b1));
  CHECK(S.contains(NumClass(ChernClass({2}), 2)));
  CHECK(!S.contains(NumClass(ChernClass({3}), 0)));   // outside the box
  CHECK(!S.contains(NumClass(ChernClass::zero(1), 0)));  // outside the cone
  CHECK_THROWS_AS(ClassSet::box(ChernClass({2}), -1), std::invalid_argument);
}

TEST_CASE("bracket of generators follows the sign rule") {
  const ClassSet S = ClassSet::box(ChernClass({2}), 4);
  // chi = 2: even exponent, [l^(0,2), l^(b,0)] = 2 l^(b,2)
  const EulerPairing p1 = EulerPairing::geometric_linear({1});
  CHECK(lie_bracket(LieElement::generator(pt2), LieElement::generator(sheaf_b1), p1, S) ==
        LieElement::generator(NumClass(b1, 2), Rational(2)));
  // chi = 3: odd exponent flips the sign
  const EulerPairing p3 = EulerPairing::geometric_linear({3});
  CHECK(lie_bracket(LieElement::generator(pt1), LieElement::generator(sheaf_b1), p3, S) ==
        LieElement::generator(NumClass(b1, 1), Rational(-3)));
  // [x,x] = 0
  CHECK(lie_bracket(LieElement::generator(pt2), LieElement::generator(pt2), p1, S).is_zero());
}

TEST_CASE("brackets landing outside S vanish") {
  const ClassSet tight = ClassSet::box(ChernClass({1}), 1);  // (b1,2) not in the box
  const EulerPairing p = EulerPairing::geometric_linear({1});
  CHECK(lie_bracket(LieElement::generator(pt2), LieElement::generator(sheaf_b1), p, tight)
            .is_zero());
}

TEST_CASE("iterated brackets leave the finite class set and vanish") {
  const ClassSet S = ClassSet::box(ChernClass({3}), 2);
  const EulerPairing p = EulerPairing::geometric_linear({1});
  LieElement acc = LieElement::generator(pt2);
  const LieElement step = LieElement::generator(sheaf_b1);
  int vanished_at = -1;
  for (int i = 1; i <= 10; ++i) {
    acc = lie_bracket(acc, step, p, S);
    if (acc.is_zero()) {
      vanished_at = i;
      break;
    }
  }
  CHECK(vanished_at == 4);  // (3,2)+(1,0) leaves the box at the fourth step
}

TEST_CASE("DT table validation") {
  CHECK_THROWS_AS(DTTable({{ChernClass::zero(1), Rational(1)}}), std::invalid_argument);
  const DTTable dt({{b1, rat(1, 2)}});
  CHECK(dt.value(b1) == rat(1, 2));
  CHECK(dt.contains(b1));
  CHECK_THROWS_AS(dt.value(ChernClass({2})), std::invalid_argument);
  CHECK(dt.support() == std::vector<ChernClass>{b1});
}

TEST_CASE("psi_apply substitutes the generator images") {
  const ClassSet S = ClassSet::box(ChernClass({2}), 2);
  const DTTable dt({{b1, Rational(3)}});

  // eps^(0,1) alone -> -lambda^(0,1)
  const EulerPairing any = EulerPairing::geometric_linear({1});
  CHECK(psi_apply(BracketExpr::leaf(pt1), dt, any, S) ==
        LieElement::generator(pt1, Rational(-1)));
  // eps^(0,2) -> -1/4 lambda^(0,2), the stackcalc constant
  CHECK(psi_apply(BracketExpr::leaf(pt2), dt, any, S) == psi_constant_image_02(1));
  // eps^(b,0) -> -DT(b) lambda^(b,0)
  CHECK(psi_apply(BracketExpr::leaf(sheaf_b1), dt, any, S) ==
        LieElement::generator(sheaf_b1, Rational(-3)));

  // (-1)[eps^(0,2), eps^(b,0)] with DT = D, L(b) = c gives -(cD/2) lambda^(b,2)
  const std::int64_t c = 2;
  const EulerPairing p = EulerPairing::geometric_linear({c});
  BracketExpr expr =
      BracketExpr::bracket(BracketExpr::leaf(pt2), BracketExpr::leaf(sheaf_b1));
  LieElement img = psi_apply(expr, dt, p, S);
  img *= Rational(-1);
  CHECK(img == LieElement::generator(NumClass(b1, 2), rat(-c * 3, 2)));

  // [eps^(0,1), eps^(0,1)] has chi = 0
  CHECK(psi_apply(BracketExpr::bracket(BracketExpr::leaf(pt1), BracketExpr::leaf(pt1)), dt, p, S)
            .is_zero());
}

TEST_CASE("psi_apply rejects generators without an image") {
  const ClassSet S = ClassSet::box(ChernClass({2}), 2);
  const DTTable dt({{b1, Rational(1)}});
  const EulerPairing p = EulerPairing::geometric_linear({1});
  // d = 3 point class has no image
  CHECK_THROWS_AS(psi_apply(BracketExpr::leaf(NumClass::point(1, 3)), dt, p, S),
                  std::invalid_argument);
  // mixed class (b,1) is not a generator
  CHECK_THROWS_AS(psi_apply(BracketExpr::leaf(NumClass(b1, 1)), dt, p, S),
                  std::invalid_argument);
  // sheaf class outside the DT support
  CHECK_THROWS_AS(psi_apply(BracketExpr::leaf(NumClass::sheaf(ChernClass({2}))), dt, p, S),
                  std::invalid_argument);
}

TEST_CASE("left-nested builder shape") {
  const std::vector<ChernClass> parts{b1, ChernClass({2})};
  const BracketExpr e = BracketExpr::left_nested(pt2, parts);
  REQUIRE(!e.is_leaf());
  CHECK(e.rhs().is_leaf());
  CHECK(e.rhs().generator() == NumClass::sheaf(ChernClass({2})));
  CHECK(!e.lhs().is_leaf());
  CHECK(e.lhs().lhs().generator() == pt2);
  CHECK(e.lhs().rhs().generator() == sheaf_b1);
}

TEST_CASE("lie element printing") {
  CHECK(LieElement::generator(pt2, rat(-1, 4)).to_string() == "-1/4·λ^(0,2)");
  CHECK(LieElement().to_string() == "0");
}
