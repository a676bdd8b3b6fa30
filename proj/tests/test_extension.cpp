#include <doctest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "vatwist/cocycles/classify.hpp"
#include "vatwist/error.hpp"
#include "vatwist/groups/extension.hpp"

using namespace vatwist;
using namespace vatwist::testing;

namespace {

GroupElement random_element(const VAGroup& g, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> pt(0, static_cast<int>(g.point_group().order()) - 1);
  ZVec v(g.rank());
  for (auto& x : v) x = coord(rng);
  return {v, pt(rng)};
}

CocycleSpec heisenberg_cocycle() {
  // value x2 y1 / 2
  QAlphaMatrix B(2, 2);
  B(0, 1) = QAlpha(Rational(1, 2));
  return CocycleSpec::bilinear(B);
}

void check_extension(const ExtensionResult& ext, const CocycleSpec& sigma, std::mt19937_64& rng) {
  const auto& G = ext.original();
  const auto& E = ext.extended();
  const long n = ext.order_n();
  REQUIRE(validate(E).ok);
  CHECK(hirsch_length(E) == hirsch_length(G));
  CHECK(E.point_group().order() ==
        static_cast<std::size_t>(n) * G.point_group().order() *
            static_cast<std::size_t>(std::pow(ext.scale_s(), static_cast<double>(G.rank()))));

  const auto a = ext.central_gen();
  CHECK(ext.project(a) == G.identity());
  CHECK(E.power(a, n) == E.identity());
  for (long k = 1; k < n; ++k) CHECK_FALSE(E.power(a, k) == E.identity());
  for (std::size_t i = 0; i < E.rank(); ++i) CHECK(E.multiply(a, E.basis_element(i)) == E.multiply(E.basis_element(i), a));
  for (std::size_t d = 0; d < E.point_group().order(); ++d) {
    auto t = E.point_lift(static_cast<int>(d));
    CHECK(E.multiply(a, t) == E.multiply(t, a));
  }
  // Kernel of the projection is exactly <a>.
  std::size_t kernel = 0;
  for (std::size_t d = 0; d < E.point_group().order(); ++d)
    if (ext.project(E.point_lift(static_cast<int>(d))) == G.identity()) {
      ++kernel;
      bool in_a = false;
      for (long k = 0; k < n; ++k) in_a = in_a || E.point_lift(static_cast<int>(d)) == ext.embed_centre(k);
      CHECK(in_a);
    }
  CHECK(kernel == static_cast<std::size_t>(n));

  const TorsionCocycle tau(sigma, n);
  for (int t = 0; t < 200; ++t) {
    auto x = random_element(E, rng, 5), y = random_element(E, rng, 5);
    CHECK(ext.project(E.multiply(x, y)) == G.multiply(ext.project(x), ext.project(y)));
    auto g = random_element(G, rng, 7), h = random_element(G, rng, 7);
    CHECK(ext.project(ext.lift(g)) == g);
    auto lhs = E.multiply(ext.lift(g), ext.lift(h));
    auto rhs = E.multiply(ext.embed_centre(tau(g, h)), ext.lift(G.multiply(g, h)));
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("heisenberg extension of Z^2") {
  std::mt19937_64 rng(1);
  auto G = VAGroup::lattice(2);
  auto sigma = heisenberg_cocycle();
  auto ext = central_extension(G, sigma, 2);
  CHECK(ext.scale_s() == 2);
  CHECK(ext.extended().point_group().order() == 8);
  CHECK_FALSE(ext.extended().point_group().is_abelian());
  auto E = ext.extended();
  auto g1 = ext.lift(G.basis_element(0)), g2 = ext.lift(G.basis_element(1));
  auto comm = E.multiply(E.multiply(g1, g2), E.multiply(E.invert(g1), E.invert(g2)));
  CHECK(comm == ext.central_gen());
  check_extension(ext, sigma, rng);
  auto c = centralizer_of_lattice(E);
  CHECK(c.index == 1);
  CHECK(c.kernel.group.order() == 8);
}

TEST_CASE("trivial cocycle gives a direct product") {
  std::mt19937_64 rng(2);
  for (long n : {1L, 2L, 3L}) {
    auto G = catalog::inversion_semidirect();
    auto ext = central_extension(G, CocycleSpec::zero(2), n);
    CHECK(ext.scale_s() == 1);
    CHECK(ext.extended().point_group().order() == static_cast<std::size_t>(2 * n));
    check_extension(ext, CocycleSpec::zero(2), rng);
  }
}

TEST_CASE("inflated point-group table") {
  std::mt19937_64 rng(3);
  auto G = catalog::inversion_semidirect();
  std::vector<CircleValue> t{CircleValue(), CircleValue(), CircleValue(), CircleValue::from_turns(1, 2)};
  auto sigma = CocycleSpec::finite_table(2, t);
  auto ext = central_extension(G, sigma, 2);
  CHECK(ext.scale_s() == 1);
  CHECK(ext.extended().point_group().order() == 4);
  check_extension(ext, sigma, rng);
}

TEST_CASE("rotation cocycles and the scale ladder") {
  std::mt19937_64 rng(4);
  auto G = VAGroup::lattice(2);
  for (auto [p, q] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 5L}}) {
    auto s = rotation_cocycle(QAlpha(Rational(p, q)));
    auto rep = minimal_representative(s, G);
    CHECK(*value_order(rep) == q);
    auto ext = central_extension(G, rep, q);
    CHECK(ext.scale_s() == q);
    check_extension(ext, rep, rng);
  }
  auto half = rotation_cocycle(QAlpha(Rational(1, 2)));
  CHECK_THROWS_AS(central_extension(G, half, 2), Error);
  auto ext4 = central_extension(G, half, 4);
  check_extension(ext4, half, rng);
  CHECK_THROWS_AS(central_extension(G, rotation_cocycle(alpha()), 4), Error);
  CHECK_THROWS_AS(central_extension(VAGroup::lattice(3), CocycleSpec::zero(3), 30000), Error);
}

TEST_CASE("inflation cocycles on point-group extensions") {
  std::mt19937_64 rng(5);
  auto p2 = catalog::inversion_semidirect();
  auto sigma = twisted_bilinear_inflation(p2, IntMatrix{{0, -1}, {1, 0}}, 2);
  auto ext = central_extension(p2, sigma, 2);
  check_extension(ext, sigma, rng);
  auto p4 = catalog::quarter_turn_semidirect();
  auto s4 = twisted_bilinear_inflation(p4, IntMatrix{{0, -1}, {1, 0}}, 3);
  auto e4 = central_extension(p4, s4, 3);
  check_extension(e4, s4, rng);
}
