#include <doctest.h>

#include "rcqm/clifford.hpp"

using namespace rcqm;
using cd = std::complex<double>;

TEST_CASE("standard set: block structure and product identity") {
  const GammaSet g = standard_gammas();
  const Mat g0 = g.elems[0].linear();
  Mat want = Mat::Zero(4, 4);
  want.diagonal() << 1, 1, -1, -1;
  CHECK((g0 - want).cwiseAbs().maxCoeff() == 0.0);
  // (g1)^2 = -I
  const Mat g1 = g.elems[1].linear();
  CHECK((g1 * g1 + Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  // product of all five is -I
  Mat prod = Mat::Identity(4, 4);
  for (const auto& e : g.elems) prod = prod * e.linear();
  CHECK((prod + Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(check_clifford(g, 1e-14).pass());
}

TEST_CASE("conjugation-dressed set satisfies the five-element relations") {
  const GammaSet g = qm_gammas();
  CHECK(check_clifford(g, 1e-14).pass());
  // first element is plain gamma0, squares to +I
  CHECK(g.elems[0].is_linear());
  const RLinearOp sq = g.elems[0] * g.elems[0];
  CHECK(sq.distance_to(RLinearOp::identity(4)) == 0.0);
  // (gbar^1)^2 = -I through the conjugation
  const RLinearOp sq1 = g.elems[1] * g.elems[1];
  CHECK(sq1.distance_to(RLinearOp(-Mat::Identity(4, 4), Mat::Zero(4, 4))) == 0.0);
  // mixed anticommutator vanishes
  const RLinearOp mix = g.elems[1] * g.elems[2];
  const RLinearOp mix2 = g.elems[2] * g.elems[1];
  CHECK(RLinearOp(mix.linear() + mix2.linear(), mix.antilinear() + mix2.antilinear())
            .distance_to(RLinearOp(Mat::Zero(4, 4), Mat::Zero(4, 4))) == 0.0);
}

TEST_CASE("seven-generator sets: anticommutation with -I squares and unit product") {
  for (const auto rep : {ExtendedRep::standard, ExtendedRep::qm}) {
    const GammaSet g = extended_gammas(rep);
    REQUIRE(g.elems.size() == 7);
    CHECK(check_clifford(g, 1e-14).pass());
    for (const auto& m : g.metric) CHECK(m == -1);
    RLinearOp prod = g.elems[0];
    for (size_t a = 1; a < 7; ++a) prod = prod * g.elems[a];
    CHECK(prod.distance_to(RLinearOp::identity(4)) == 0.0);
  }
  // a fifth-sixth anticommutator from the standard set vanishes exactly
  const GammaSet g = extended_gammas(ExtendedRep::standard);
  const RLinearOp ab = g.elems[4] * g.elems[5];
  const RLinearOp ba = g.elems[5] * g.elems[4];
  CHECK(RLinearOp(ab.linear() + ba.linear(), ab.antilinear() + ba.antilinear())
            .distance_to(RLinearOp(Mat::Zero(4, 4), Mat::Zero(4, 4))) == 0.0);
}

TEST_CASE("big sets: block forms and anticommutators") {
  const GammaSet g8 = big_gammas(8);
  Mat want = Mat::Zero(8, 8);
  want.diagonal() << 1, 1, 1, 1, -1, -1, -1, -1;
  CHECK((g8.elems[0].linear() - want).cwiseAbs().maxCoeff() == 0.0);
  CHECK(check_clifford(g8, 1e-14).pass());

  // 12-dimensional first Pauli block has antidiagonal identity blocks
  const auto sig12 = sigma_blocks(12);
  CHECK((sig12[0].block(0, 3, 3, 3) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sig12[0].block(3, 0, 3, 3) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(check_clifford(big_gammas(12), 1e-14).pass());
  CHECK(check_clifford(big_gammas(16), 1e-14).pass());
  CHECK_THROWS_AS(big_gammas(6), std::invalid_argument);
}

TEST_CASE("check_clifford fails on a mutated set") {
  GammaSet g = big_gammas(8);
  g.elems[1] = g.elems[2];
  CHECK(!check_clifford(g, 1e-14).pass());
}

TEST_CASE("conjugation-dressed elements equal v gamma v") {
  const GammaSet std4 = standard_gammas();
  const GammaSet qm4 = qm_gammas();
  const RLinearOp v = v_operator(4);
  for (int mu = 0; mu < 5; ++mu) {
    const RLinearOp lhs = v.compose(std4.elems[mu]).compose(v);
    CHECK(lhs.distance_to(qm4.elems[mu]) == 0.0);
  }
}
