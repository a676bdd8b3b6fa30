#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "vatwist/error.hpp"
#include "vatwist/exact/circle.hpp"
#include "vatwist/exact/lattice.hpp"
#include "vatwist/exact/normal_form.hpp"

using namespace vatwist;
using vatwist::testing::for_each_box_point;
using vatwist::testing::random_int_matrix;

namespace {

bool is_diagonal_chain(const IntMatrix& S) {
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j)
      if (i != j && S(i, j) != 0) return false;
  const std::size_t n = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (S(i, i) < 0) return false;
    if (S(i, i) == 0) {
      if (S(i + 1, i + 1) != 0) return false;
    } else if (!mpz_divisible_p(S(i + 1, i + 1).get_mpz_t(), S(i, i).get_mpz_t())) {
      return false;
    }
  }
  return true;
}

QAlphaMatrix rotation_form(const QAlpha& theta) {
  QAlphaMatrix m(2, 2);
  m(0, 1) = -theta;
  m(1, 0) = theta;
  return m;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).frac() == Rational(1, 2));
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
}

TEST_CASE("circle value operations") {
  auto third = CircleValue::from_turns(1, 3);
  auto half = CircleValue::from_turns(1, 2);
  CHECK(third + half == CircleValue::from_turns(5, 6));
  CHECK(CircleValue::from_turns(1, 4).torsion_order() == 4);
  CircleValue irr(Rational(0), Rational(1, 2));
  CHECK_FALSE(irr.is_root_of_unity());
  CHECK_THROWS_AS(irr.torsion_order(), Error);
  CHECK(CircleValue::from_turns(-1, 4) == CircleValue::from_turns(3, 4));
  CHECK(CircleValue::from_turns(1, 3).scaled(3).is_zero());

  SUBCASE("abelian group laws on random samples") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      CircleValue a(testing::random_rational(rng, 20, 12), testing::random_rational(rng, 5, 6));
      CircleValue b(testing::random_rational(rng, 20, 12), testing::random_rational(rng, 5, 6));
      CircleValue c(testing::random_rational(rng, 20, 12), testing::random_rational(rng, 5, 6));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a + (-a)).is_zero());
      CHECK(a + CircleValue() == a);
    }
  }
}

TEST_CASE("smith normal form examples") {
  SUBCASE("diag(2,3)") {
    IntMatrix M{{2, 0}, {0, 3}};
    SmithForm sf = smith_normal_form(M);
    CHECK(sf.S == IntMatrix{{1, 0}, {0, 6}});
    CHECK(sf.U * M * sf.V == sf.S);
  }
  SUBCASE("identity") {
    SmithForm sf = smith_normal_form(IntMatrix::identity(3));
    CHECK(sf.S.is_identity());
    CHECK(sf.U.is_identity());
    CHECK(sf.V.is_identity());
  }
  SUBCASE("zero") {
    SmithForm sf = smith_normal_form(IntMatrix{{0}});
    CHECK(sf.S == IntMatrix{{0}});
    CHECK(sf.rank == 0);
  }
}

TEST_CASE("smith normal form property: U*M*V = S with unimodular transforms") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix M = random_int_matrix(rng, size(rng), size(rng), -5, 5);
    SmithForm sf = smith_normal_form(M);
    REQUIRE(sf.U * M * sf.V == sf.S);
    CHECK(is_diagonal_chain(sf.S));
    CHECK(abs(determinant(sf.U)) == 1);
    CHECK(abs(determinant(sf.V)) == 1);
  }
}

TEST_CASE("hermite normal form examples") {
  CHECK(hermite_normal_form(IntMatrix{{2, 1}, {0, 1}}) == IntMatrix{{2, 0}, {0, 1}});
  CHECK(hermite_normal_form(IntMatrix::identity(3)).is_identity());
  CHECK(hermite_normal_form(IntMatrix{{4}, {6}}) == IntMatrix{{2}});
}

TEST_CASE("hermite normal form property: idempotent and span preserving") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix M = random_int_matrix(rng, size(rng), size(rng), -5, 5);
    IntMatrix H = hermite_normal_form(M);
    CHECK(hermite_normal_form(H) == H);
    Lattice from_m = Lattice::from_generators(M);
    Lattice from_h = Lattice::from_generators(H);
    for (std::size_t i = 0; i < M.rows(); ++i) CHECK(from_h.contains(M.row(i)));
    for (std::size_t i = 0; i < H.rows(); ++i) CHECK(from_m.contains(H.row(i)));
    HermiteForm hf = hermite_decomposition(M);
    CHECK(hf.U * M == hf.H);
    CHECK(abs(determinant(hf.U)) == 1);
  }
}

TEST_CASE("lattice index") {
  CHECK(lattice_index(Lattice::full(2), Lattice::scaled(2, 3)).value == 9);
  CHECK(lattice_index(Lattice::full(2), Lattice::full(2)).value == 1);
  Lattice line = Lattice::from_generators(IntMatrix{{2, 0}});
  CHECK(lattice_index(Lattice::full(2), line).infinite);
  CHECK_THROWS_AS(lattice_index(Lattice::scaled(2, 2), Lattice::full(2)), Error);
  try {
    lattice_index(Lattice::scaled(2, 2), Lattice::full(2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASublattice);
  }
}

TEST_CASE("lattice_kernel_mod_Z examples") {
  SUBCASE("theta = 1/2 rotation form gives 2Z^2") {
    QAlphaMatrix theta = rotation_form(QAlpha(Rational(1, 2)));
    Lattice k = lattice_kernel_mod_Z(theta);
    CHECK(k == Lattice::from_generators(IntMatrix{{2, 0}, {0, 2}}));
    // Brute force over |x_i| <= 4: members are exactly the even vectors.
    for_each_box_point(2, 4, [&](const IntVector& x) {
      bool even = x[0] % 2 == 0 && x[1] % 2 == 0;
      CHECK(pairs_integrally(theta, x) == even);
      CHECK(k.contains(x) == even);
    });
  }
  SUBCASE("zero matrix gives the full lattice") {
    CHECK(lattice_kernel_mod_Z(QAlphaMatrix(3, 3)) == Lattice::full(3));
  }
  SUBCASE("alpha rotation form gives the zero lattice") {
    CHECK(lattice_kernel_mod_Z(rotation_form(QAlpha(Rational(0), Rational(1)))) == Lattice::zero(2));
  }
}

TEST_CASE("lattice_kernel_mod_Z property: agrees with brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 3;
    QAlphaMatrix M(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        M(i, j).rat = testing::random_rational(rng, 4, 6);
        if (trial % 4 == 0 && (i + j) % 2 == 1) M(i, j).alpha = testing::random_rational(rng, 2, 3);
      }
    Lattice k = lattice_kernel_mod_Z(M);
    for (std::size_t i = 0; i < k.rank(); ++i) CHECK(pairs_integrally(M, k.basis().row(i)));
    for_each_box_point(r, 3, [&](const IntVector& x) { CHECK(pairs_integrally(M, x) == k.contains(x)); });
  }
}
