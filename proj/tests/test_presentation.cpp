#include <doctest.h>

#include "taucat/catalog.hpp"
#include "taucat/presentation.hpp"

using namespace taucat;

namespace {

GroupPresentation present(const Lattice& l) { return picture_group(l, labelled_hasse(l)); }

}  // namespace

TEST_CASE("pentagon picture group") {
  Lattice l = make_pentagon();
  GroupPresentation p = present(l);

  CHECK(p.x_elements == std::vector<int>{1, 2, 3});
  CHECK(p.num_g == 5);
  CHECK(p.generator_names[0] == "X_Fac(2)");
  CHECK(p.generator_names[3] == "g_0");

  // One relation per arrow plus the trivialized bottom.
  REQUIRE(p.relations.size() == 6);
  // g_4 = X_2 g_1 for the arrow (1,4) labelled 2.
  CHECK(p.relations[3].lhs == std::vector<int>{p.g_gen(4)});
  CHECK(p.relations[3].rhs == std::vector<int>{1, p.g_gen(1)});
  CHECK(p.relations[5].lhs == std::vector<int>{p.g_gen(0)});
  CHECK(p.relations[5].rhs.empty());

  // Eliminating the g generators leaves arrows - elements + 1 = 1 relation:
  // X_2 X_1 = X_1 X_3 X_2.
  REQUIRE(p.simplified_relations.size() == 1);
  CHECK(p.simplified_relations[0].lhs == std::vector<int>{1, 0});
  CHECK(p.simplified_relations[0].rhs == std::vector<int>{0, 2, 1});

  CHECK(p.element_words[0].empty());
  CHECK(p.element_words[4] == std::vector<int>{1, 0});
  CHECK(p.x_index_of(3) == 2);
  CHECK(p.x_index_of(0) == -1);
}

TEST_CASE("square picture group commutes") {
  GroupPresentation p = present(catalog_make("boolean(2)"));
  CHECK(p.x_elements == std::vector<int>{1, 2});
  REQUIRE(p.simplified_relations.size() == 1);
  CHECK(p.simplified_relations[0].lhs == std::vector<int>{1, 0});
  CHECK(p.simplified_relations[0].rhs == std::vector<int>{0, 1});
}

TEST_CASE("simplified relation count is arrows minus elements plus one") {
  for (const char* name : {"pentagon", "boolean(3)", "weak_order(3)", "tamari(4)", "chain(4)"}) {
    CAPTURE(name);
    Lattice l = catalog_make(name);
    GroupPresentation p = present(l);
    CHECK(p.simplified_relations.size() == l.covers.size() - l.size + 1);
    CHECK(p.relations.size() == l.covers.size() + 1);
  }
}

TEST_CASE("picture group hom from pentagon to its square quotient") {
  Lattice l = make_pentagon();
  auto h = labelled_hasse(l);
  Congruence phi = congruence_from_contractions(l, {{2, 3}});
  PictureGroupHom hom = picture_group_hom(l, h, phi);

  // X_3 dies, X_1 and X_2 map to the quotient generators.
  CHECK(hom.x_image[hom.source.x_index_of(3)] == -1);
  CHECK(hom.x_image[hom.source.x_index_of(1)] == hom.target.x_index_of(1));
  CHECK(hom.x_image[hom.source.x_index_of(2)] == hom.target.x_index_of(2));

  // The mapped relation is syntactically the square's relation.
  GroupPresentation::Relation mapped{hom.map_word(hom.source.simplified_relations[0].lhs),
                                     hom.map_word(hom.source.simplified_relations[0].rhs)};
  CHECK(relations_match(mapped, hom.target.simplified_relations[0]));
}

TEST_CASE("relator comparison is cyclic and inversion tolerant") {
  using Rel = GroupPresentation::Relation;
  CHECK(relations_match(Rel{{0, 1}, {1, 0}}, Rel{{1, 0}, {0, 1}}));
  CHECK(relations_match(Rel{{1, 0}, {0, 2, 1}}, Rel{{1, 0}, {0, 2, 1}}));
  CHECK(relations_match(Rel{{0}, {}}, Rel{{}, {0}}));
  CHECK_FALSE(relations_match(Rel{{0, 1}, {1, 0}}, Rel{{0, 1}, {0, 1}}));
  CHECK_FALSE(relations_match(Rel{{0, 1}, {1, 0}}, Rel{{0, 2}, {2, 0}}));
  CHECK(relations_match(Rel{{0, 1, 2}, {}}, Rel{{1, 2, 0}, {}}));
  CHECK(relations_match(Rel{{0, 1}, {}}, Rel{{}, {0, 1}}));
  // Free reduction: lhs a b b^-1 ... collapses (encoded via equal sides).
  CHECK(relations_match(Rel{{0, 1}, {0, 1}}, Rel{{2}, {2}}));
}

TEST_CASE("cell data") {
  CellData n5 = cw_f_vector(build_category(make_pentagon()));
  CHECK(n5.f_vector == std::vector<int>{1, 3, 1});
  CHECK(n5.euler_characteristic == -1);

  CellData b2 = cw_f_vector(build_category(catalog_make("boolean(2)")));
  CHECK(b2.f_vector == std::vector<int>{1, 2, 1});
  CHECK(b2.euler_characteristic == 0);

  CellData pt = cw_f_vector(build_category(catalog_make("chain(1)")));
  CHECK(pt.f_vector == std::vector<int>{1});
  CHECK(pt.euler_characteristic == 1);

  CellData hex = cw_f_vector(build_category(catalog_make("weak_order(3)")));
  CHECK(hex.f_vector == std::vector<int>{1, 4, 1});
  CHECK(hex.euler_characteristic == -2);
}

TEST_CASE("nerve counts") {
  TccCategory n5 = build_category(make_pentagon());
  NerveData nd = nerve_export(n5, 3);
  CHECK(nd.simplex_counts == std::vector<long long>{5, 16, 10, 0});
  CHECK(nd.chains[0].size() == 16);
  CHECK(nd.chains[1].size() == 10);

  NerveData capped = nerve_export(n5, 1);
  CHECK(capped.simplex_counts == std::vector<long long>{5, 16});

  TccCategory hex = build_category(catalog_make("weak_order(3)"));
  CHECK(nerve_export(hex, 3).simplex_counts == std::vector<long long>{6, 20, 12, 0});
}

TEST_CASE("nerve euler characteristic agrees with the cell complex") {
  for (const char* name : {"pentagon", "boolean(2)", "boolean(3)", "weak_order(3)", "tamari(4)"}) {
    CAPTURE(name);
    TccCategory c = build_category(catalog_make(name));
    CellData cd = cw_f_vector(c);
    int max_rank = static_cast<int>(cd.f_vector.size()) - 1;
    NerveData nd = nerve_export(c, max_rank + 1);
    CHECK(nd.simplex_counts.back() == 0);  // chains cannot exceed the top rank
    long long chi = 0;
    for (size_t k = 0; k < nd.simplex_counts.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * nd.simplex_counts[k];
    CHECK(chi == cd.euler_characteristic);
  }
}
