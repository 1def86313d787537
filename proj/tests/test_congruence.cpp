#include <doctest.h>

#include "oracle.hpp"
#include "taucat/catalog.hpp"
#include "taucat/congruence.hpp"

using namespace taucat;

namespace {

// Compare a computed congruence against the oracle's equivalence matrix.
void check_closure(const Lattice& l, const std::vector<std::pair<int, int>>& seeds) {
  Congruence phi = congruence_from_contractions(l, seeds);
  auto eq = oracle::congruence_closure(l.size, l.covers, seeds);
  for (int x = 0; x < l.size; ++x)
    for (int y = 0; y < l.size; ++y) CHECK((phi.class_of[x] == phi.class_of[y]) == !!eq[x][y]);
}

}  // namespace

TEST_CASE("contracting (2,3) in the pentagon") {
  Lattice l = make_pentagon();
  Congruence phi = congruence_from_contractions(l, {{2, 3}});
  CHECK(phi.classes == std::vector<std::vector<int>>{{0}, {1}, {2, 3}, {4}});
  CHECK(phi.class_of == std::vector<int>{0, 1, 2, 2, 3});
  CHECK(phi.pi_down == std::vector<int>{0, 1, 2, 2, 4});
  CHECK(phi.pi_up == std::vector<int>{0, 1, 3, 3, 4});
  CHECK(phi.quotient.size == 4);
  CHECK(lattice_isomorphic(phi.quotient, catalog_make("boolean(2)")).has_value());
  CHECK(phi.quotient.element_name(2) == "{Fac(1),Fac(1/2)}");

  auto h = labelled_hasse(l);
  auto report = contracted_labels(l, h, phi);
  CHECK(report.contracted_labels == std::vector<int>{3});
  CHECK(report.uncontracted_labels == std::vector<int>{1, 2});

  auto corr = label_correspondence(l, h, phi);
  CHECK(corr[1] == 1);
  CHECK(corr[2] == 2);
  CHECK(corr[3] == -1);
  CHECK(corr[0] == -1);
  CHECK(corr[4] == -1);
}

TEST_CASE("contracting (0,1) in the pentagon propagates") {
  // 0 == 1 forces 2 = 0 v 2 == 1 v 2 = 4, so {2,3,4} collapses too.
  Lattice l = make_pentagon();
  Congruence phi = congruence_from_contractions(l, {{0, 1}});
  CHECK(phi.classes == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(phi.quotient.size == 2);

  auto h = labelled_hasse(l);
  auto report = contracted_labels(l, h, phi);
  CHECK(report.contracted_labels == std::vector<int>{1, 3});
  CHECK(report.uncontracted_labels == std::vector<int>{2});
  check_closure(l, {{0, 1}});
}

TEST_CASE("identity and total congruences") {
  Lattice l = make_pentagon();
  Congruence id = congruence_from_contractions(l, {});
  CHECK(id.classes.size() == 5);
  CHECK(lattice_isomorphic(id.quotient, l).has_value());

  Congruence total = congruence_from_contractions(
      l, {{0, 1}, {0, 2}});
  CHECK(total.classes.size() == 1);
  CHECK(total.quotient.size == 1);
}

TEST_CASE("closures match the oracle") {
  check_closure(catalog_make("weak_order(3)"), {{0, 1}});
  check_closure(catalog_make("weak_order(3)"), {{2, 3}});
  check_closure(catalog_make("boolean(3)"), {{0, 1}});
  check_closure(catalog_make("m3"), {{0, 1}});
  check_closure(catalog_make("tamari(4)"), {{0, 1}, {12, 13}});

  Lattice t4 = catalog_make("tamari(4)");
  for (size_t i = 0; i < t4.covers.size(); i += 5) check_closure(t4, {t4.covers[i]});
}

TEST_CASE("partition input is validated") {
  Lattice l = make_pentagon();

  Congruence phi = congruence_from_partition(l, {{0}, {1}, {2, 3}, {4}});
  CHECK(phi.class_of == congruence_from_contractions(l, {{2, 3}}).class_of);

  CHECK_THROWS_WITH_AS(congruence_from_partition(l, {{0}, {1, 2}, {3}, {4}}),
                       doctest::Contains("witness"), Error);
  CHECK_THROWS_WITH_AS(congruence_from_partition(l, {{0}, {1}, {2, 3}}),
                       doctest::Contains("Schema"), Error);
  CHECK_THROWS_WITH_AS(congruence_from_partition(l, {{0, 0, 1}, {2, 3}, {4}}),
                       doctest::Contains("Schema"), Error);
}

TEST_CASE("contraction pairs must be covers") {
  Lattice l = make_pentagon();
  CHECK_THROWS_WITH_AS(congruence_from_contractions(l, {{0, 4}}), doctest::Contains("NotACover"),
                       Error);
  CHECK_THROWS_WITH_AS(congruence_from_contractions(l, {{1, 0}}), doctest::Contains("NotACover"),
                       Error);
}

TEST_CASE("classes are intervals and proj is a lattice map") {
  for (const char* name : {"pentagon", "boolean(3)", "weak_order(3)", "tamari(4)"}) {
    CAPTURE(name);
    Lattice l = catalog_make(name);
    Congruence phi = congruence_from_contractions(l, {l.covers[0]});
    for (int c = 0; c < static_cast<int>(phi.classes.size()); ++c) {
      int lo = phi.pi_down[phi.classes[c].front()];
      int hi = phi.pi_up[phi.classes[c].front()];
      for (int x = 0; x < l.size; ++x) {
        bool inside = l.leq(lo, x) && l.leq(x, hi);
        CHECK(inside == (phi.class_of[x] == c));
      }
    }
    for (int x = 0; x < l.size; ++x)
      for (int y = 0; y < l.size; ++y) {
        CHECK(phi.quotient.join(phi.proj(x), phi.proj(y)) == phi.proj(l.join(x, y)));
        CHECK(phi.quotient.meet(phi.proj(x), phi.proj(y)) == phi.proj(l.meet(x, y)));
      }
  }
}

TEST_CASE("quotient hasse carries corresponding labels") {
  Lattice l = make_pentagon();
  auto h = labelled_hasse(l);
  Congruence phi = congruence_from_contractions(l, {{2, 3}});
  auto corr = label_correspondence(l, h, phi);
  // Quotient arrows (0,1):1, (0,2):2, (1,3):2, (2,3):1 in quotient indices.
  CHECK(phi.quotient_hasse.label_of(0, 1) == corr[1]);
  CHECK(phi.quotient_hasse.label_of(0, 2) == corr[2]);
  CHECK(phi.quotient_hasse.label_of(1, 3) == corr[2]);
  CHECK(phi.quotient_hasse.label_of(2, 3) == corr[1]);
}

TEST_CASE("mixed contraction cannot arise from congruences") {
  // Changing one arrow of a label class forces the other: closure keeps the
  // all-or-none property, so contracted_labels never throws on real input.
  Lattice l = catalog_make("weak_order(3)");
  auto h = labelled_hasse(l);
  for (auto [x, y] : l.covers) {
    Congruence phi = congruence_from_contractions(l, {{x, y}});
    auto report = contracted_labels(l, h, phi);
    std::vector<char> status(l.size, 0);
    for (int j : report.contracted_labels) status[j] = 1;
    for (const auto& a : h.arrows) CHECK(phi.contracts(a.lower, a.upper) == !!status[a.label]);
  }
}
