#include <doctest.h>

#include <algorithm>

#include "taucat/catalog.hpp"
#include "taucat/category.hpp"

using namespace taucat;

TEST_CASE("pentagon category counts") {
  TccCategory c = build_category(make_pentagon());
  REQUIRE(c.object_count() == 5);
  CHECK(c.morphism_count() == 21);
  CHECK(zero_object(c) == 0);
  REQUIRE(full_object(c).has_value());
  CHECK(*full_object(c) == 4);

  // Hom-set size matrix, rows = source object.
  std::vector<std::vector<size_t>> sizes(5, std::vector<size_t>(5));
  for (int s = 0; s < 5; ++s)
    for (int t = 0; t < 5; ++t) sizes[s][t] = hom_set(c, s, t).size();
  CHECK(sizes == std::vector<std::vector<size_t>>{{1, 0, 0, 0, 0},
                                                  {2, 1, 0, 0, 0},
                                                  {2, 0, 1, 0, 0},
                                                  {2, 0, 0, 1, 0},
                                                  {5, 2, 2, 1, 1}});
}

TEST_CASE("hom sets consist of members of the target class inside the source") {
  TccCategory c = build_category(make_pentagon());
  auto hom = hom_set(c, 4, 1);  // full object to the class {[0,1],[3,4]}
  REQUIRE(hom.size() == 2);
  CHECK(hom[0].inner == Interval{0, 1});
  CHECK(hom[1].inner == Interval{3, 4});
  CHECK(hom_set(c, 1, 3).empty());
  CHECK(hom_set(c, 0, 0) == std::vector<Morphism>{c.identity(0)});
}

TEST_CASE("composition transports along the class isomorphism") {
  TccCategory c = build_category(make_pentagon());
  Morphism f{4, 2, {0, 2}};   // full -> {[0,2],[1,4]} picking member [0,2]
  Morphism g{2, 0, {2, 2}};   // that class -> zero, inner in canonical coordinates
  CHECK(compose(c, f, g) == Morphism{4, 0, {2, 2}});

  Morphism f2{4, 2, {1, 4}};  // same shape but picking member [1,4]
  CHECK(compose(c, f2, g) == Morphism{4, 0, {4, 4}});

  Morphism id4 = c.identity(4);
  CHECK(compose(c, id4, f) == f);
  CHECK(compose(c, f, c.identity(2)) == f);
  CHECK_THROWS_AS(compose(c, g, f), Error);
}

TEST_CASE("factorizations into irreducibles") {
  TccCategory c = build_category(make_pentagon());
  Morphism f{4, 0, {0, 0}};
  auto seqs = signed_sequences(c, f);
  CHECK(seqs.size() == 2);
  for (const auto& seq : seqs) {
    CHECK(seq.size() == 2);
    CHECK(compose(c, seq[0], seq[1]) == f);
    for (const auto& step : seq) CHECK(is_irreducible(c, step));
  }

  CHECK(signed_sequences(c, c.identity(3)).size() == 1);
  CHECK(signed_sequences(c, c.identity(3))[0].empty());

  CHECK(complete_signed_sequences(c).size() == 10);
}

TEST_CASE("complete chains in small categories") {
  CHECK(complete_signed_sequences(build_category(catalog_make("boolean(2)"))).size() == 8);
  CHECK(complete_signed_sequences(build_category(catalog_make("chain(1)"))).size() == 1);

  // No full object: the top of chain(3) is not the join of the atoms.
  TccCategory chain3 = build_category(catalog_make("chain(3)"));
  CHECK_FALSE(full_object(chain3).has_value());
  CHECK(complete_signed_sequences(chain3).empty());
}

TEST_CASE("hexagon category counts") {
  TccCategory c = build_category(catalog_make("weak_order(3)"));
  CHECK(c.object_count() == 6);
  CHECK(c.morphism_count() == 26);
}

TEST_CASE("lazy mode computes the same hom sets") {
  CategoryOptions lazy;
  lazy.max_eager_join_intervals = 5;  // the pentagon has 11 join-intervals
  TccCategory c = build_category(make_pentagon(), lazy);
  CHECK_FALSE(c.eager);
  CHECK(c.object_count() == 5);
  CHECK(c.morphism_count() == 21);
  CHECK(hom_set(c, 4, 0).size() == 5);
  CHECK_THROWS_WITH_AS(c.hom(4, 0), doctest::Contains("SizeBound"), Error);

  Morphism f{4, 2, {1, 4}};
  Morphism g{2, 0, {2, 2}};
  CHECK(compose(c, f, g) == Morphism{4, 0, {4, 4}});
}

TEST_CASE("category isomorphism") {
  TccCategory n5 = build_category(make_pentagon());
  TccCategory t3 = build_category(catalog_make("tamari(3)"));
  auto iso = categories_isomorphic(n5, t3);
  REQUIRE(iso.has_value());
  // Object bijection preserving ranks.
  std::vector<int> seen(5, 0);
  for (int o = 0; o < 5; ++o) {
    CHECK(n5.objects[o].rank == t3.objects[(*iso)[o]].rank);
    seen[(*iso)[o]]++;
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));

  CHECK_FALSE(categories_isomorphic(n5, build_category(catalog_make("boolean(2)"))).has_value());
  CHECK_FALSE(categories_isomorphic(n5, build_category(catalog_make("chain(5)"))).has_value());
}

TEST_CASE("a one-element lattice gives the point category") {
  TccCategory c = build_category(catalog_make("chain(1)"));
  CHECK(c.object_count() == 1);
  CHECK(c.morphism_count() == 1);
  CHECK(zero_object(c) == 0);
  CHECK(*full_object(c) == 0);
}
