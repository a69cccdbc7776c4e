#include <doctest.h>

#include <bit>
#include <random>

#include "oracle.hpp"
#include "prefl/parser.hpp"
#include "prefl/representation.hpp"
#include "prefl/selection.hpp"
#include "prefl/semantics.hpp"
#include "prefl/structure.hpp"

using namespace prefl;

namespace {

// Two-model universe: a = 0, b = 1.
const ModelSet kNone(2), kA(2, {0}), kB(2, {1}), kAB(2, {0, 1});

PreferentialStructure two(std::vector<Copy> copies, std::vector<Preference> prefers) {
  return PreferentialStructure(2, std::move(copies), prefers);
}

}  // namespace

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(two({{0, 0}, {0, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(two({{2, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(two({{0, 0}}, {{{0, 0}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(two({{0, 0}}, {{{1, 0}, {0, 0}}}), std::invalid_argument);
  const auto s = two({{1, 0}, {0, 0}, {1, 1}}, {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}});
  CHECK(s.copies() == std::vector<Copy>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(s.edge_count() == 1);
  CHECK(s.copies_of(1) == 2);
}

TEST_CASE("empty relation selects everything") {
  const auto s = two({{0, 0}, {1, 0}}, {});
  for (const auto& x : subsets_of(kAB)) CHECK(mu_of_structure(s, x) == x);
}

TEST_CASE("a preferred to b") {
  const auto s = two({{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}});
  CHECK(mu_of_structure(s, kAB) == kA);
  CHECK(mu_of_structure(s, kB) == kB);
}

TEST_CASE("a two-cycle empties the pair") {
  const auto s = two({{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
  CHECK(mu_of_structure(s, kAB).empty());
  CHECK(mu_of_structure(s, kA) == kA);
}

TEST_CASE("a surviving copy keeps its model minimal") {
  const auto s = two({{0, 0}, {1, 0}, {1, 1}}, {{{0, 0}, {1, 0}}});
  CHECK(oracle::mu(s, {0, 1}) == std::set<std::uint32_t>{0, 1});
  CHECK(mu_of_structure(s, kAB) == kAB);
}

TEST_CASE("kills by models outside the set do not count") {
  const auto s = PreferentialStructure(4, {{0, 0}, {1, 0}, {2, 0}}, {{{2, 0}, {1, 0}}});
  CHECK(mu_of_structure(s, ModelSet(4, {0, 1})) == ModelSet(4, {0, 1}));
  CHECK(mu_of_structure(s, ModelSet(4, {1, 2})) == ModelSet(4, {2}));
}

TEST_CASE("models without copies are never minimal") {
  const auto s = two({{0, 0}}, {});
  CHECK(mu_of_structure(s, kAB) == kA);
  CHECK(mu_of_structure(s, kB).empty());
}

TEST_CASE("selection_of_structure tables") {
  const auto id = selection_of_structure(two({{0, 0}, {1, 0}}, {}), kAB);
  for (const auto& [x, v] : id.table()) CHECK(v == x);

  const auto ab = selection_of_structure(two({{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}}), kAB);
  CHECK(ab.table() == SelectionFunction::Table{{kNone, kNone}, {kA, kA}, {kB, kB}, {kAB, kA}});

  const auto cyc = two({{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
  CHECK(selection_of_structure(cyc, kAB).at(kAB).empty());

  const auto partial = selection_of_structure(cyc, std::vector<ModelSet>{kA, kAB});
  CHECK(partial.domain() == std::vector<ModelSet>{kA, kAB});
  CHECK(partial.universe() == kAB);
}

TEST_CASE("mu matches the edge-list oracle on random structures") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const ModelSet universe = ModelSet::full(8);
    const auto s = random_structure(rng, universe);
    for (const auto& x : subsets_of(universe)) {
      CHECK(oracle::as_set(mu_of_structure(s, x)) == oracle::mu(s, oracle::as_set(x)));
    }
  }
}

TEST_CASE("mu laws on random structures") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const ModelSet universe = ModelSet::full(i % 2 == 0 ? 4 : 8);
    const auto s = random_structure(rng, universe);
    const auto subs = subsets_of(universe);
    for (const auto& x : subs) {
      const ModelSet mx = mu_of_structure(s, x);
      CHECK(mx.is_subset_of(x));
      for (const auto& y : subs) {
        if (y.is_subset_of(x)) CHECK((mx & y).is_subset_of(mu_of_structure(s, y)));
      }
    }
  }
}

TEST_CASE("pref_entails") {
  const Alphabet pq({"p", "q"});
  std::mt19937_64 rng(3);

  // Inconsistent premises entail everything.
  const auto s = random_structure(rng, ModelSet::full(4));
  CHECK(pref_entails(s, Theory{parse_formula("p & !p")}, parse_formula("F"), pq));

  // Empty relation: coincides with classical consequence.
  const auto flat = PreferentialStructure::from_order(4, [](Model, Model) { return false; });
  for (int i = 0; i < 100; ++i) {
    Theory t{oracle::random_formula(rng, pq.atoms(), 3)};
    const Formula f = oracle::random_formula(rng, pq.atoms(), 3);
    CHECK(pref_entails(flat, t, f, pq) == classical_entails(t, f, pq));
  }
}

TEST_CASE("preferential consequence is nonmonotonic") {
  // Atoms b (bird) = bit 0, f (flies) = bit 1, p (penguin) = bit 2. Normal
  // worlds are the bird worlds that fly and are not penguins.
  const Alphabet a({"b", "f", "p"});
  const auto s = PreferentialStructure::from_order(8, [](Model better, Model worse) {
    auto rank = [](Model m) {
      const bool b = m.holds(0), f = m.holds(1), p = m.holds(2);
      if (p) return f ? 2 : 1;
      return b && !f ? 1 : 0;
    };
    return rank(better) < rank(worse);
  });
  CHECK(pref_entails(s, Theory{parse_formula("b")}, parse_formula("f"), a));
  CHECK_FALSE(pref_entails(s, Theory{parse_formula("b"), parse_formula("p")}, parse_formula("f"), a));
  CHECK(pref_entails(s, Theory{parse_formula("b"), parse_formula("p")}, parse_formula("!f"), a));
}

TEST_CASE("minimal_under a strict order") {
  const ModelSet x(8, {1, 2, 3, 6});
  const auto fewer_bits = [](Model a, Model b) {
    return std::popcount(a.index) < std::popcount(b.index);
  };
  CHECK(minimal_under(x, fewer_bits) == ModelSet(8, {1, 2}));
  CHECK(minimal_under(ModelSet(8), fewer_bits).empty());
}
