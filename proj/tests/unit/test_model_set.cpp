#include <doctest.h>

#include "prefl/error.hpp"
#include "prefl/model_set.hpp"

using namespace prefl;

TEST_CASE("set algebra over a universe spanning several words") {
  ModelSet a(130, {0, 64, 129});
  ModelSet b(130, {64, 100});
  CHECK((a & b) == ModelSet(130, {64}));
  CHECK((a | b) == ModelSet(130, {0, 64, 100, 129}));
  CHECK((a - b) == ModelSet(130, {0, 129}));
  CHECK(a.complement().count() == 127);
  CHECK(a.complement().complement() == a);
  CHECK(ModelSet(130, {64}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.first()->index == 0);
  CHECK(ModelSet(130).first() == std::nullopt);
  CHECK(a.to_string() == "{0,64,129}");
  CHECK(ModelSet::full(130).count() == 130);
}

TEST_CASE("mixing universes is rejected") {
  CHECK_THROWS_AS(ModelSet(4) & ModelSet(8), std::invalid_argument);
  CHECK_THROWS_AS(ModelSet(4).insert(Model{4}), std::out_of_range);
}

TEST_CASE("ordering follows the numeric value of the bit set") {
  CHECK(ModelSet(8, {0, 1}) < ModelSet(8, {2}));
  CHECK(ModelSet(8) < ModelSet(8, {0}));
  CHECK(ModelSet(100, {70}) > ModelSet(100, {0, 1, 2, 63}));
}

TEST_CASE("subsets are listed by ascending value") {
  const ModelSet u(8, {1, 4, 6});
  const auto subs = subsets_of(u);
  REQUIRE(subs.size() == 8);
  CHECK(subs.front().empty());
  CHECK(subs.back() == u);
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
  CHECK_THROWS_AS(subsets_of(ModelSet::full(32)), CapacityError);
}
