#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "vatwist/cli/jobs.hpp"
#include "vatwist/error.hpp"

using namespace vatwist;
using namespace vatwist::cli;
using namespace vatwist::testing;

TEST_CASE("groups survive a JSON round trip") {
  for (const auto& [name, G] : mackey_test_groups()) {
    CAPTURE(name);
    const VAGroup back = group_from_json(json::parse(to_json(G).dump()));
    CHECK(back.rank() == G.rank());
    REQUIRE(back.point_group().order() == G.point_group().order());
    CHECK(back.point_group().table() == G.point_group().table());
    for (std::size_t a = 0; a < G.point_group().order(); ++a) {
      CHECK(back.action(static_cast<int>(a)) == G.action(static_cast<int>(a)));
      for (std::size_t b = 0; b < G.point_group().order(); ++b)
        CHECK(back.delta(static_cast<int>(a), static_cast<int>(b)) == G.delta(static_cast<int>(a), static_cast<int>(b)));
    }
  }
}

TEST_CASE("cocycles survive a JSON round trip") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (const auto& e : cocycle_corpus()) {
    CAPTURE(e.name);
    const CocycleSpec back = cocycle_from_json(json::parse(to_json(e.sigma).dump()), e.group.rank());
    for (int t = 0; t < 30; ++t) {
      GroupElement g{ZVec(e.group.rank()), static_cast<int>(rng() % e.group.point_group().order())};
      GroupElement h{ZVec(e.group.rank()), static_cast<int>(rng() % e.group.point_group().order())};
      for (auto& x : g.vec) x = coord(rng);
      for (auto& x : h.vec) x = coord(rng);
      CHECK(eval(back, g, h) == eval(e.sigma, g, h));
    }
  }
}

TEST_CASE("theta, circle values and characters round trip") {
  const ThetaMatrix t = ThetaMatrix::block_diagonal(1, ThetaMatrix::rotation(QAlpha(Rational(2, 5), Rational(-1, 3))));
  CHECK(theta_from_json(to_json(t)).matrix() == t.matrix());
  const CircleValue c(Rational(3, 7), Rational(1, 2));
  CHECK(circle_from_json(to_json(c)) == c);
  CHECK(circle_from_json(json("5/4")) == CircleValue(Rational(1, 4)));
  const RationalCharacter chi(std::vector<Rational>{Rational(1, 3), Rational(4, 5)});
  CHECK(character_from_json(to_json(chi), 2) == chi);
  CHECK_THROWS_AS(character_from_json(to_json(chi), 3), Error);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), MalformedInput);
}

TEST_CASE("run_job is deterministic and classifies failures") {
  const json twisted = json::parse(R"({"group": {"preset": "lattice", "rank": 2},
    "cocycle": {"kind": "rotation", "theta": "1/3"}, "character": ["1/7", "3/7"]})");
  const auto a = run_job(Command::TwistedIrreps, twisted, {});
  const auto b = run_job(Command::TwistedIrreps, twisted, {});
  CHECK(a.exit_code == 0);
  CHECK(render(a.report) == render(b.report));
  REQUIRE(a.report.at("records").size() == 1);
  CHECK(a.report.at("records")[0].at("dim") == 3);

  const auto bad = run_job(Command::TorusReport, json::parse(R"({"theta": {"rotation": "1/0"}})"), {});
  CHECK(bad.exit_code == 2);
  const auto missing = run_job(Command::CocycleCheck, json::object(), {});
  CHECK(missing.exit_code == 2);
  const auto module = run_job(Command::TwistedIrreps,
                              json::parse(R"({"group": {"preset": "lattice", "rank": 2},
    "cocycle": {"kind": "rotation", "theta": {"rat": "0", "alpha": "1"}}, "character": ["1/5", "2/5"]})"),
                              {});
  CHECK(module.exit_code == 1);
  CHECK(module.report.at("error").at("kind") == "IrrationalCocycle");
  CHECK(parse_command("twisted-irreps") == Command::TwistedIrreps);
  CHECK_FALSE(parse_command("twisted_irreps"));
}
