#include <doctest.h>

#include "oracle.hpp"
#include "taucat/catalog.hpp"
#include "taucat/lattice.hpp"

using namespace taucat;

namespace {

const std::vector<std::pair<int, int>> pentagon_covers = {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}};
const std::vector<std::pair<int, int>> hexagon_covers = {{0, 1}, {0, 2}, {1, 4},
                                                         {2, 3}, {3, 5}, {4, 5}};
const std::vector<std::pair<int, int>> m3_covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};

void check_against_oracle(const Lattice& l) {
  auto leq = oracle::leq_matrix(l.size, l.covers);
  for (int x = 0; x < l.size; ++x)
    for (int y = 0; y < l.size; ++y) {
      CHECK(l.leq(x, y) == leq[x][y]);
      CHECK(l.join(x, y) == *oracle::join_of(leq, x, y));
      CHECK(l.meet(x, y) == *oracle::meet_of(leq, x, y));
    }
}

}  // namespace

TEST_CASE("pentagon structure") {
  Lattice l = build_lattice(5, pentagon_covers);
  CHECK(l.size == 5);
  CHECK(l.bottom == 0);
  CHECK(l.top == 4);
  CHECK(l.join(1, 2) == 4);
  CHECK(l.meet(1, 3) == 0);
  CHECK(l.leq(2, 3));
  CHECK_FALSE(l.leq(1, 3));
  CHECK(l.is_cover(2, 3));
  CHECK_FALSE(l.is_cover(0, 4));
  check_against_oracle(l);
}

TEST_CASE("join and meet tables match the oracle on catalog lattices") {
  for (const char* name : {"chain(4)", "boolean(3)", "pentagon", "m3", "tamari(4)",
                           "weak_order(3)", "product(pentagon,chain(2))"}) {
    CAPTURE(name);
    check_against_oracle(catalog_make(name));
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_WITH_AS(build_lattice(-1, {}), doctest::Contains("Schema"), Error);
  CHECK_THROWS_AS(build_lattice(3, {{0, 5}}), Error);
  CHECK_THROWS_WITH_AS(build_lattice(2, {{0, 0}}), doctest::Contains("NotAPoset"), Error);
  CHECK_THROWS_WITH_AS(build_lattice(3, {{0, 1}, {1, 2}, {2, 0}}),
                       doctest::Contains("NotAPoset"), Error);
  CHECK_THROWS_WITH_AS(build_lattice(3, {{0, 1}, {1, 2}, {0, 2}}),
                       doctest::Contains("RedundantCover"), Error);
  CHECK_THROWS_WITH_AS(build_lattice(2, {{0, 1}, {0, 1}}), doctest::Contains("RedundantCover"),
                       Error);
  CHECK_THROWS_WITH_AS(build_lattice(3, {{0, 1}, {0, 2}}),
                       doctest::Contains("NoBoundedExtremes"), Error);
  CHECK_THROWS_WITH_AS(build_lattice(2, {}), doctest::Contains("NoBoundedExtremes"), Error);
  // Bounded but 1 and 2 have two minimal upper bounds.
  CHECK_THROWS_WITH_AS(
      build_lattice(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
      doctest::Contains("NotALattice"), Error);
  CHECK_THROWS_WITH_AS(build_lattice(2, {{0, 1}}, std::vector<std::string>{"a"}),
                       doctest::Contains("Schema"), Error);
}

TEST_CASE("completely join-irreducible elements") {
  CHECK(completely_join_irreducibles(build_lattice(5, pentagon_covers)) ==
        std::vector<int>{1, 2, 3});
  CHECK(completely_join_irreducibles(build_lattice(5, m3_covers)) == std::vector<int>{1, 2, 3});
  CHECK(completely_join_irreducibles(build_lattice(6, hexagon_covers)) ==
        std::vector<int>{1, 2, 3, 4});
  for (const char* name : {"boolean(3)", "tamari(4)", "weak_order(4)"}) {
    CAPTURE(name);
    Lattice l = catalog_make(name);
    CHECK(completely_join_irreducibles(l) ==
          oracle::unique_lower_cover_elements(l.size, l.covers));
  }
}

TEST_CASE("arrow labels on the pentagon") {
  Lattice l = build_lattice(5, pentagon_covers);
  CHECK(arrow_label(l, 0, 1) == 1);
  CHECK(arrow_label(l, 0, 2) == 2);
  CHECK(arrow_label(l, 2, 3) == 3);
  CHECK(arrow_label(l, 1, 4) == 2);
  CHECK(arrow_label(l, 3, 4) == 1);
  CHECK_THROWS_WITH_AS(arrow_label(l, 0, 4), doctest::Contains("NotACover"), Error);

  auto h = labelled_hasse(l);
  CHECK(h.arrows.size() == 5);
  CHECK(h.label_of(3, 4) == 1);
  CHECK(h.label_of(1, 4) == 2);
}

TEST_CASE("arrow labels on the hexagon") {
  Lattice l = build_lattice(6, hexagon_covers);
  CHECK(arrow_label(l, 0, 1) == 1);
  CHECK(arrow_label(l, 0, 2) == 2);
  CHECK(arrow_label(l, 1, 4) == 4);
  CHECK(arrow_label(l, 2, 3) == 3);
  CHECK(arrow_label(l, 3, 5) == 1);
  CHECK(arrow_label(l, 4, 5) == 2);
}

TEST_CASE("labels are distinct among the covers of a fixed element") {
  for (const char* name : {"pentagon", "boolean(3)", "tamari(4)", "weak_order(4)"}) {
    CAPTURE(name);
    Lattice l = catalog_make(name);
    auto h = labelled_hasse(l);
    for (int x = 0; x < l.size; ++x) {
      std::vector<int> labels;
      for (const auto& a : h.arrows_up[x]) labels.push_back(a.label);
      std::sort(labels.begin(), labels.end());
      CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
    }
  }
}

TEST_CASE("diamond has no minimum label") {
  Lattice l = build_lattice(5, m3_covers);
  CHECK_THROWS_WITH_AS(arrow_label(l, 1, 4), doctest::Contains("NoMinimumLabel"), Error);
  CHECK_THROWS_AS(labelled_hasse(l), Error);
}

TEST_CASE("semidistributivity") {
  CHECK(is_semidistributive(build_lattice(5, pentagon_covers)).semidistributive);
  CHECK(is_semidistributive(build_lattice(6, hexagon_covers)).semidistributive);
  CHECK(is_semidistributive(catalog_make("boolean(3)")).semidistributive);

  auto report = is_semidistributive(build_lattice(5, m3_covers));
  CHECK_FALSE(report.semidistributive);
  Lattice m3 = build_lattice(5, m3_covers);
  if (report.join_side_failed) {
    CHECK(m3.join(report.u, report.x) == m3.join(report.u, report.y));
    CHECK(m3.join(report.u, report.x) != m3.join(report.u, m3.meet(report.x, report.y)));
  } else {
    CHECK(m3.meet(report.u, report.x) == m3.meet(report.u, report.y));
    CHECK(m3.meet(report.u, report.x) != m3.meet(report.u, m3.join(report.x, report.y)));
  }
}

TEST_CASE("lattice isomorphism") {
  Lattice n5 = build_lattice(5, pentagon_covers);

  // Relabel with sigma = (0 2 3 1)(4): covers map to (2,0),(2,3),(3,1),(0,4),(1,4).
  std::vector<int> sigma = {2, 0, 3, 1, 4};
  std::vector<std::pair<int, int>> relabeled;
  for (auto [x, y] : pentagon_covers) relabeled.emplace_back(sigma[x], sigma[y]);
  Lattice shuffled = build_lattice(5, relabeled);

  auto iso = lattice_isomorphic(n5, shuffled);
  REQUIRE(iso.has_value());
  for (auto [x, y] : pentagon_covers) CHECK(shuffled.is_cover((*iso)[x], (*iso)[y]));

  CHECK_FALSE(lattice_isomorphic(n5, build_lattice(5, m3_covers)).has_value());
  CHECK_FALSE(lattice_isomorphic(catalog_make("boolean(2)"), catalog_make("chain(4)")).has_value());

  // Lex-least mapping is the identity when comparing a lattice with itself.
  Lattice b2 = catalog_make("boolean(2)");
  auto self = lattice_isomorphic(b2, b2);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("element names") {
  Lattice l = make_pentagon();
  CHECK(l.element_name(1) == "Fac(2)");
  CHECK(l.element_name(4) == "mod A");
  Lattice plain = build_lattice(2, {{0, 1}});
  CHECK(plain.element_name(1) == "1");
}
