#include <doctest.h>

#include <random>
#include <set>

#include "vatwist/error.hpp"
#include "vatwist/groups/catalog.hpp"
#include "vatwist/groups/fin_group.hpp"
#include "vatwist/groups/va_group.hpp"

using namespace vatwist;

namespace {

GroupElement random_element(const VAGroup& g, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> pt(0, static_cast<int>(g.point_group().order()) - 1);
  ZVec v(g.rank());
  for (auto& x : v) x = coord(rng);
  return {v, pt(rng)};
}

std::vector<VAGroup> sample_groups() {
  // Z x| Z_2 with a nonsplit translation cocycle: delta(s, s) = 1 under
  // trivial action gives Z with index-2 subgroup 2Z.
  VAGroup nonsplit(1, FinGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::identity(1)},
                   {ZVec{0}, ZVec{0}, ZVec{0}, ZVec{1}});
  return {VAGroup::lattice(2), catalog::inversion_semidirect(), catalog::quarter_turn_semidirect(),
          catalog::infinite_dihedral(), nonsplit};
}

}  // namespace

TEST_CASE("fin group axioms and constructors") {
  auto c6 = FinGroup::cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.is_abelian());
  CHECK(c6.element_order(2) == 3);
  CHECK(c6.pow(1, 9) == 3);

  // S3 from permutations.
  auto s3 = FinGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(commutator_subgroup(s3).size() == 3);

  std::vector<std::int32_t> bad{0, 1, 1, 1};
  CHECK_THROWS_AS(FinGroup::from_table(2, bad), Error);
}

TEST_CASE("heisenberg mod 2 commutator data") {
  auto h = heisenberg_mod2();
  CHECK(h.order() == 8);
  auto comm = commutator_subgroup(h);
  CHECK(comm.size() == 2);
  auto ab = abelianization(h);
  CHECK(ab.group.order() == 4);
  CHECK(ab.group.is_abelian());
  for (int x = 0; x < 4; ++x) CHECK(ab.group.element_order(x) <= 2);
  // The central element z (index 4) generates the commutator subgroup.
  CHECK(h.is_central(4));
  CHECK(comm == std::vector<int>{0, 4});
}

TEST_CASE("abelian and dihedral commutator subgroups") {
  CHECK(commutator_subgroup(FinGroup::cyclic(12)).size() == 1);
  auto q = catalog::finite_inversion_semidirect(3, 2);
  CHECK(q.order() == 18);
  auto comm = commutator_subgroup(q);
  CHECK(comm.size() == 9);
  // The commutators land in Z_3^2 (indices below 9).
  for (int x : comm) CHECK(x < 9);
}

TEST_CASE("validate extension data") {
  CHECK(validate(catalog::inversion_semidirect()).ok);
  CHECK(validate(VAGroup::lattice(1)).ok);
  CHECK(validate(catalog::quarter_turn_semidirect()).ok);

  const IntMatrix minus{{-1, 0}, {0, -1}};
  VAGroup broken(2, FinGroup::cyclic(2), {IntMatrix::identity(2), minus},
                 {ZVec{0, 0}, ZVec{0, 0}, ZVec{0, 0}, ZVec{1, 0}});
  auto report = validate(broken);
  CHECK_FALSE(report.ok);
  CHECK(report.violation.find("(1,1,1)") != std::string::npos);

  // Non-homomorphic action.
  VAGroup bad_action(1, FinGroup::cyclic(3),
                     {IntMatrix::identity(1), IntMatrix{{-1}}, IntMatrix{{-1}}});
  CHECK_FALSE(validate(bad_action).ok);
}

TEST_CASE("non-normalized translation cocycle is normalized") {
  VAGroup g(1, FinGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::identity(1)},
            {ZVec{3}, ZVec{3}, ZVec{3}, ZVec{4}});
  CHECK(g.delta(0, 0) == ZVec{0});
  CHECK(g.delta(0, 1) == ZVec{0});
  CHECK(g.delta(1, 1) == ZVec{1});
  CHECK(validate(g).ok);
}

TEST_CASE("multiplication examples") {
  auto g = catalog::inversion_semidirect();
  GroupElement a{{1, 0}, 1};
  CHECK(g.multiply(a, a) == g.identity());
  CHECK(g.multiply({{2, 3}, 0}, {{1, 1}, 0}) == GroupElement{{3, 4}, 0});
  CHECK(hirsch_length(g) == 2);
  CHECK(hirsch_length(VAGroup::lattice(5)) == 5);
  CHECK_THROWS_AS(g.multiply({{1}, 0}, a), Error);
}

TEST_CASE("group laws on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& g : sample_groups()) {
    REQUIRE(validate(g).ok);
    for (int t = 0; t < 200; ++t) {
      auto x = random_element(g, rng, 6), y = random_element(g, rng, 6), z = random_element(g, rng, 6);
      CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
      CHECK(g.multiply(x, g.invert(x)) == g.identity());
      CHECK(g.multiply(g.invert(x), x) == g.identity());
    }
    auto x = random_element(g, rng, 3);
    CHECK(g.power(x, 3) == g.multiply(x, g.multiply(x, x)));
    CHECK(g.power(x, -2) == g.invert(g.multiply(x, x)));
  }
}

TEST_CASE("finite quotients") {
  auto q = finite_quotient(catalog::inversion_semidirect(), 3);
  CHECK(q.order() == 18);
  CHECK_FALSE(q.group().is_abelian());
  CHECK(finite_quotient(VAGroup::lattice(3), 1).order() == 1);
  auto k = finite_quotient(VAGroup::lattice(2), 2);
  CHECK(k.order() == 4);
  CHECK(k.group().is_abelian());
  for (int x = 0; x < 4; ++x) CHECK(k.group().element_order(x) <= 2);
  CHECK_THROWS_AS(finite_quotient(VAGroup::lattice(4), 20), Error);
}

TEST_CASE("quotient projection is a homomorphism") {
  std::mt19937_64 rng(5);
  for (const auto& g : sample_groups()) {
    for (long m : {1L, 2L, 3L, 4L}) {
      auto q = finite_quotient(g, m);
      CHECK(q.order() == quotient_order(g, m));
      for (int t = 0; t < 200; ++t) {
        auto x = random_element(g, rng, 9), y = random_element(g, rng, 9);
        CHECK(q.index_of(g.multiply(x, y)) == q.group().mul(q.index_of(x), q.index_of(y)));
      }
      for (std::size_t i = 0; i < q.order(); ++i) CHECK(q.index_of(q.element(static_cast<int>(i))) == static_cast<int>(i));
      // Kernel is m Z^r.
      ZVec v(g.rank(), m);
      CHECK(q.index_of(g.lattice_element(v)) == q.group().id());
    }
  }
}

TEST_CASE("centralizer of the lattice") {
  auto p2 = centralizer_of_lattice(catalog::inversion_semidirect());
  CHECK(p2.kernel.group.order() == 1);
  CHECK(p2.index == 2);
  CHECK(p2.centralizer.rank() == 2);

  VAGroup trivial_action(2, FinGroup::cyclic(3), {IntMatrix::identity(2), IntMatrix::identity(2), IntMatrix::identity(2)});
  auto t = centralizer_of_lattice(trivial_action);
  CHECK(t.kernel.group.order() == 3);
  CHECK(t.index == 1);

  auto p4 = centralizer_of_lattice(catalog::quarter_turn_semidirect());
  CHECK(p4.index == 4);

  // Conjugation by lifts of K fixes lattice elements.
  for (const auto& g : sample_groups()) {
    auto c = centralizer_of_lattice(g);
    for (int k : c.kernel.to_parent) {
      auto lift = g.point_lift(k);
      for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
          ZVec v(g.rank(), 0);
          v[0] = a;
          if (g.rank() > 1) v[1] = b;
          auto x = g.lattice_element(v);
          CHECK(g.multiply(g.multiply(lift, x), g.invert(lift)) == x);
        }
    }
  }
}
