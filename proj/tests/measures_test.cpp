#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kmbc/measures.hpp"

using namespace kmbc;
using namespace kmbc::test;

TEST_CASE("KmValue arithmetic and ordering") {
  KmValue a = KmValue::finite(1.5), b = KmValue::finite(0.5), inf = KmValue::infinity();
  CHECK((a + b).value() == 2.0);
  CHECK((a - b).value() == 1.0);
  CHECK((a + inf).is_infinite());
  CHECK((inf - b).is_infinite());
  CHECK_THROWS_AS(inf - inf, std::logic_error);
  CHECK(b < a);
  CHECK(a < inf);
  CHECK(!(inf < inf));
  CHECK(inf <= inf);
  CHECK_THROWS_AS(inf.value(), error);
  CHECK(to_string(a) == "1.500");
  CHECK(to_string(inf) == "inf");
}

TEST_CASE("shannon measure on the running example") {
  const ProbDist& d = birds_dist();
  const Alphabet& a = birds_alphabet();
  CHECK(close(shannon_km(birds_kb(), d), 1.515, 0.001));
  CHECK(close(shannon_km(parse("f", a), d), 1.152, 0.001));
  CHECK(shannon_km(top(), d).value() == 0.0);
  CHECK(shannon_km(bottom(), d).is_infinite());
  CHECK(shannon_km(parse("p & o", a), d).is_infinite());  // possible nowhere
}

TEST_CASE("base-b family") {
  const ProbDist& d = birds_dist();
  CHECK(close(km_with_base(birds_kb(), d, 2.0), shannon_km(birds_kb(), d), 1e-12));
  // -ln(7/20) = 1.0498...
  CHECK(close(km_with_base(birds_kb(), d, std::exp(1.0)), 1.0498, 0.0005));

  ProbDist quarter = make_dist(Alphabet::from_string("p q"), {{"11", "1/4"}, {"00", "3/4"}});
  CHECK(close(km_with_base(parse("p", quarter.alphabet()), quarter, 4.0), 1.0, 1e-12));
  CHECK_THROWS_AS(km_with_base(birds_kb(), d, 1.0), error);
  CHECK_THROWS_AS(km_with_base(birds_kb(), d, 0.5), error);
  CHECK(km_with_base(bottom(), d, 4.0).is_infinite());
}

TEST_CASE("uniform-case measure over own letters") {
  const Alphabet& a = birds_alphabet();
  CHECK(close(hartley_km(birds_kb()), 2.415, 0.001));  // 4 - log2 3
  CHECK(hartley_km(parse("a' & b", Alphabet::from_string("a' b"))).value() == 2.0);
  CHECK(hartley_km(top()).value() == 0.0);
  CHECK(hartley_km(bottom()).is_infinite());
  CHECK(hartley_km(parse("p & ~p", Alphabet::from_string("p"))).is_infinite());
  CHECK(hartley_km(parse("p | ~p", Alphabet::from_string("p"))).value() == 0.0);
  CHECK(hartley_km(parse("b", a)).value() == 1.0);  // a literal carries one bit
}

TEST_CASE("no-surprise case: certainty carries no information") {
  Alphabet ab = Alphabet::from_string("a b");
  ProbDist d = make_dist(ab, {{"11", "1"}});
  Formula f = parse("a & b", ab);
  CHECK(shannon_km(f, d).value() == 0.0);
  CHECK(hartley_km(f).value() == 2.0);
}

TEST_CASE("substitutions rename worlds") {
  Alphabet pq = Alphabet::from_string("p q");
  // p -> ~q, q -> p
  Substitution theta({{1, true}, {0, false}});
  WorldSet p_models = models(parse("p", pq), pq);
  CHECK(theta.apply(p_models) == models(parse("~q", pq), pq));

  Substitution id = Substitution::identity(2);
  CHECK(id.apply(p_models) == p_models);

  // an involutive renaming applied twice is the identity
  Substitution swap({{1, false}, {0, false}});
  CHECK(swap.apply(swap.apply(p_models)) == p_models);
  CHECK(theta.inverse().apply(theta.apply(p_models)) == p_models);

  CHECK_THROWS_AS(Substitution({{0, false}, {0, true}}), error);
}

TEST_CASE("s-entailment finds renamings") {
  Alphabet pq = Alphabet::from_string("p q");
  Formula p = parse("p", pq), nq = parse("~q", pq), q = parse("q", pq);
  CHECK(s_entails(p, nq, pq));
  CHECK(!entails(p, nq, pq));
  CHECK(s_equivalent(p, nq, pq));
  CHECK(s_equivalent(p, q, pq));
  CHECK(s_entails(p, parse("p | q", pq), pq));
  CHECK(s_strictly_entails(p, parse("p | q", pq), pq));
  CHECK(!s_entails(parse("p | q", pq), p, pq));

  CHECK_THROWS_AS(s_entails(p, q, Alphabet::from_string("a b c d e f g h i")), error);
}

TEST_CASE("classical entailment implies s-entailment") {
  Alphabet a = Alphabet::from_string("p q");
  for (std::uint32_t f = 0; f < 16; ++f)
    for (std::uint32_t g = 0; g < 16; ++g) {
      Formula ff = formula_of_worlds(ws_of_mask(2, f), a);
      Formula gg = formula_of_worlds(ws_of_mask(2, g), a);
      if (entails(ff, gg, a)) CHECK(s_entails(ff, gg, a));
    }
}

TEST_CASE("axioms: certainty, monotonicity, additivity") {
  // certainty: true measures 0, false measures infinity
  for (const ProbDist& d : grid_dists(Alphabet::from_string("p q r"))) {
    CHECK(shannon_km(top(), d).value() == 0.0);
    CHECK(shannon_km(bottom(), d).is_infinite());
  }

  // monotonicity: the exact probability order inverts the measure order
  Alphabet a = Alphabet::from_string("p q");
  for (const ProbDist& d : grid_dists(a))
    for (std::uint32_t f = 0; f < 16; ++f)
      for (std::uint32_t g = 0; g < 16; ++g) {
        Formula ff = formula_of_worlds(ws_of_mask(2, f), a);
        Formula gg = formula_of_worlds(ws_of_mask(2, g), a);
        if (prob(ff, d) <= prob(gg, d)) CHECK(shannon_km(gg, d) <= shannon_km(ff, d));
        if (prob(ff, d) < prob(gg, d)) CHECK(shannon_km(gg, d) < shannon_km(ff, d));
      }

  // additivity on independent conjunctions, up to float log error
  const ProbDist& birds = birds_dist();
  const Alphabet& ba = birds_alphabet();
  ProbDist u = ProbDist::uniform(ba);
  std::vector<std::pair<Formula, Formula>> independents = {
      {parse("b", ba), parse("p | ~p", ba)},
      {parse("b", ba), parse("w", ba)},
      {parse("b & p", ba), parse("o <-> f", ba)},
  };
  for (const auto& [f, g] : independents) {
    REQUIRE(p_independent(f, g, u));
    KmValue sum = shannon_km(f, u) + shannon_km(g, u);
    CHECK(close(shannon_km(land(f, g), u), sum, 1e-9));
  }
  Formula b = parse("b", ba), taut = parse("f | ~f", ba);
  REQUIRE(p_independent(b, taut, birds));
  CHECK(close(shannon_km(land(b, taut), birds),
              shannon_km(b, birds) + shannon_km(taut, birds), 1e-9));
}

TEST_CASE("strict P-entailment strictly raises the measure") {
  ProbDist m = marginalize(birds_dist(), Alphabet::from_string("b p o f"));
  Formula kb = birds_kb();
  Formula f = parse("f", m.alphabet());
  REQUIRE(p_strictly_entails(kb, f, m));
  CHECK(prob(kb, m) < prob(f, m));
  CHECK(shannon_km(f, m) < shannon_km(kb, m));
}

TEST_CASE("uniform distribution collapses the two measures (exhaustive n<=3)") {
  const std::vector<std::string> names = {"p", "q", "r"};
  for (std::size_t n = 1; n <= 3; ++n) {
    Alphabet a(std::vector<std::string>(names.begin(), names.begin() + n));
    ProbDist u = ProbDist::uniform(a);
    const std::uint32_t subsets = std::uint32_t{1} << a.world_count();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Formula f = formula_of_worlds(ws_of_mask(n, mask), a);
      CHECK(close(shannon_km(f, u), hartley_km(f), 1e-9));
    }
  }

  // formulas whose letters form a strict subset of the alphabet
  Alphabet big = Alphabet::from_string("p q r");
  ProbDist u = ProbDist::uniform(big);
  for (const char* text : {"p", "p & q", "p | q", "p -> q", "~p", "p <-> p"})
    CHECK(close(shannon_km(parse(text, big), u), hartley_km(parse(text, big)), 1e-9));
}

TEST_CASE("uniform-case measure satisfies the classical axiom set") {
  Alphabet a = Alphabet::from_string("p q r");

  // value depends only on the formula's own letters: padding the evaluation
  // alphabet leaves the uniform measure unchanged
  Formula f = parse("p & (p -> q)", a);
  ProbDist u3 = ProbDist::uniform(a);
  ProbDist u2 = ProbDist::uniform(Alphabet::from_string("p q"));
  CHECK(close(shannon_km(f, u3), shannon_km(parse("p & (p -> q)", u2.alphabet()), u2), 1e-9));
  CHECK(close(shannon_km(f, u3), hartley_km(f), 1e-9));

  // bounded by the letter count, equality at single-model formulas
  for (std::uint32_t mask = 1; mask < 256; ++mask) {
    Formula g = formula_of_worlds(ws_of_mask(3, mask), a);
    KmValue v = hartley_km(g);
    CHECK(v.value() >= 0.0);
    CHECK(v.value() <= double(letters(g).size()) + 1e-12);
    if (ws_of_mask(3, mask).count() == 1) CHECK(v.value() == doctest::Approx(3.0));
  }

  // monotone against full s-entailment, exhaustively for n = 2
  Alphabet pq = Alphabet::from_string("p q");
  for (std::uint32_t fm = 0; fm < 16; ++fm)
    for (std::uint32_t gm = 0; gm < 16; ++gm) {
      Formula ff = formula_of_worlds(ws_of_mask(2, fm), pq);
      Formula gg = formula_of_worlds(ws_of_mask(2, gm), pq);
      if (s_entails(ff, gg, pq))
        CHECK(hartley_km(gg).value_or_inf() <= hartley_km(ff).value_or_inf() + 1e-9);
      if (s_entails(ff, gg, pq) && !s_entails(gg, ff, pq))
        CHECK(hartley_km(gg).value_or_inf() < hartley_km(ff).value_or_inf());
    }
}

TEST_CASE("s-entailment monotonicity for n = 3 world-subset formulas") {
  Alphabet a = Alphabet::from_string("p q r");
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    std::uint32_t fm = static_cast<std::uint32_t>(rng()) & 0xff;
    std::uint32_t gm = static_cast<std::uint32_t>(rng()) & 0xff;
    Formula ff = formula_of_worlds(ws_of_mask(3, fm), a);
    Formula gg = formula_of_worlds(ws_of_mask(3, gm), a);
    if (s_entails(ff, gg, a))
      CHECK(hartley_km(gg).value_or_inf() <= hartley_km(ff).value_or_inf() + 1e-9);
  }
}
