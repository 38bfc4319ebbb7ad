#include <doctest.h>

#include <random>

#include "rcqm/rlinear.hpp"
#include "rcqm/clifford.hpp"

using namespace rcqm;
using cd = std::complex<double>;

namespace {

std::mt19937_64 rng(42);

Mat random_mat(int n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cd(d(rng), d(rng));
  return m;
}

Vec random_vec(int n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = cd(d(rng), d(rng));
  return v;
}

}  // namespace

TEST_CASE("identity and pure conjugation") {
  const Vec f = random_vec(4);
  CHECK((RLinearOp::identity(4).apply(f) - f).norm() == 0.0);
  CHECK((RLinearOp::conjugation(4).apply(f) - f.conjugate()).norm() == 0.0);
  // v conjugates the lower block
  Vec g(4);
  g << 1.0, 0.0, cd(0, 1), 0.0;
  Vec want(4);
  want << 1.0, 0.0, cd(0, -1), 0.0;
  CHECK((v_operator(4).apply(g) - want).norm() == 0.0);
}

TEST_CASE("composition is a homomorphism for apply") {
  // property: apply(compose(a,b), f) = apply(a, apply(b, f))
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + 2 * (trial % 4);
    const RLinearOp a(random_mat(n), random_mat(n));
    const RLinearOp b(random_mat(n), random_mat(n));
    const Vec f = random_vec(n);
    const Vec lhs = a.compose(b).apply(f);
    const Vec rhs = a.apply(b.apply(f));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("composition is associative with identity") {
  const int n = 6;
  const RLinearOp a(random_mat(n), random_mat(n));
  const RLinearOp b(random_mat(n), random_mat(n));
  const RLinearOp c(random_mat(n), random_mat(n));
  CHECK(a.compose(b.compose(c)).distance_to(a.compose(b).compose(c)) < 1e-12);
  CHECK(a.compose(RLinearOp::identity(n)).distance_to(a) == 0.0);
}

TEST_CASE("v operators are involutions") {
  for (int n : {4, 6, 8, 10, 12, 16}) {
    const RLinearOp v = v_operator(n);
    CHECK(v.compose(v).distance_to(RLinearOp::identity(n)) == 0.0);
    CHECK(v.adjoint().distance_to(v) == 0.0);
  }
  CHECK_THROWS_AS(v_operator(5), std::invalid_argument);
  // conjugation squared is the identity
  const RLinearOp C = RLinearOp::conjugation(4);
  CHECK(C.compose(C).distance_to(RLinearOp::identity(4)) == 0.0);
}

TEST_CASE("v commutes with the charge sign") {
  for (const char* id : {"1/2,1/2-", "1,0,1-,0-", "3/2,3/2-"}) {
    const SpinConfig cfg = SpinConfig::parse(id);
    const RLinearOp v = v_operator(cfg.dim());
    const RLinearOp g = RLinearOp::from_linear(charge_sign(cfg).g);
    CHECK(v.compose(g).distance_to(g.compose(v)) < 1e-15);
  }
}

TEST_CASE("anti-Hermiticity test") {
  const Mat h = random_mat(4) + random_mat(4).adjoint();  // not Hermitian; fix below
  Mat herm = h + h.adjoint();
  CHECK(is_antihermitian(RLinearOp::from_linear(cd(0, 1) * herm), 1e-12));
  CHECK(!is_antihermitian(RLinearOp::from_linear(herm + Mat::Identity(4, 4)), 1e-12));
  // i times the doublet spin, including the matrix-realized antiparticle block
  const SpinTriple S = multiplet_spin(SpinConfig::parse("1/2,1/2-"));
  for (int j = 0; j < 3; ++j)
    CHECK(is_antihermitian(RLinearOp::from_linear(cd(0, 1) * S.s[j]), 1e-12));
}

TEST_CASE("conjugation by v maps the doublet spin to the block-repeated spin") {
  const SpinTriple S = multiplet_spin(SpinConfig::parse("1/2,1/2-"));
  const RLinearOp v = v_operator(4);
  // expected: diag(sigma/2, sigma/2)
  const SpinTriple half = su2_generators(1);
  for (int j = 0; j < 3; ++j) {
    const RLinearOp q = RLinearOp::from_linear(cd(0, 1) * S.s[j]);
    const RLinearOp out = conjugate_generator(v, q);
    Mat want = Mat::Zero(4, 4);
    want.block(0, 0, 2, 2) = half.s[j];
    want.block(2, 2, 2, 2) = half.s[j];
    CHECK(out.distance_to(RLinearOp::from_linear(cd(0, 1) * want)) < 1e-15);
  }
}

TEST_CASE("conjugation by v maps i omega to i omega gamma0") {
  const double w = 1.7;
  const RLinearOp q = RLinearOp::from_linear(cd(0, w) * Mat::Identity(4, 4));
  const RLinearOp out = conjugate_generator(v_operator(4), q);
  Mat want = cd(0, w) * gamma0(4);
  CHECK(out.distance_to(RLinearOp::from_linear(want)) < 1e-15);
}

TEST_CASE("conjugate_generator enforces the anti-Hermiticity precondition") {
  const RLinearOp herm = RLinearOp::from_linear(Mat::Identity(4, 4));
  CHECK_THROWS_AS(conjugate_generator(v_operator(4), herm), std::invalid_argument);
  CHECK_NOTHROW(conjugate_generator(v_operator(4), herm, false));
  // identity maps to identity when the check is waived
  CHECK(conjugate_generator(v_operator(4), herm, false)
            .distance_to(herm) < 1e-15);
}

TEST_CASE("conjugation by v preserves anti-Hermiticity") {
  for (int trial = 0; trial < 10; ++trial) {
    const Mat r = random_mat(6);
    const Mat h = r + r.adjoint();
    const RLinearOp q = RLinearOp::from_linear(cd(0, 1) * h);
    const RLinearOp out = conjugate_generator(v_operator(6), q);
    CHECK(antihermiticity_residual(out) < 1e-12);
  }
}
