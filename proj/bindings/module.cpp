#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taucat/catalog.hpp"
#include "taucat/io.hpp"

namespace py = pybind11;
using namespace taucat;

PYBIND11_MODULE(_core, m) {
  m.doc() = "categories of join-interval classes over finite semidistributive lattices";

  py::register_exception<Error>(m, "LatticeError");

  py::class_<Lattice>(m, "Lattice")
      .def_readonly("size", &Lattice::size)
      .def_readonly("covers", &Lattice::covers)
      .def_readonly("bottom", &Lattice::bottom)
      .def_readonly("top", &Lattice::top)
      .def_readonly("name", &Lattice::name)
      .def("leq", &Lattice::leq)
      .def("join", &Lattice::join)
      .def("meet", &Lattice::meet)
      .def("is_cover", &Lattice::is_cover)
      .def("element_name", &Lattice::element_name)
      .def("__len__", [](const Lattice& l) { return l.size; })
      .def("__repr__", [](const Lattice& l) {
        return "Lattice(" + (l.name.empty() ? std::to_string(l.size) + " elements" : l.name) + ")";
      });

  m.def("build_lattice", &build_lattice, py::arg("size"), py::arg("covers"),
        py::arg("element_names") = std::optional<std::vector<std::string>>{},
        py::arg("name") = "");
  m.def("completely_join_irreducibles", &completely_join_irreducibles);
  m.def("arrow_label", &arrow_label);
  m.def("lattice_isomorphic", &lattice_isomorphic);

  py::class_<LabelledArrow>(m, "LabelledArrow")
      .def_readonly("lower", &LabelledArrow::lower)
      .def_readonly("upper", &LabelledArrow::upper)
      .def_readonly("label", &LabelledArrow::label)
      .def("__repr__", [](const LabelledArrow& a) {
        return "(" + std::to_string(a.lower) + " -> " + std::to_string(a.upper) + " : " +
               std::to_string(a.label) + ")";
      });

  py::class_<LabelledHasse>(m, "LabelledHasse")
      .def_readonly("arrows", &LabelledHasse::arrows)
      .def("label_of", &LabelledHasse::label_of);
  m.def("labelled_hasse", &labelled_hasse);

  py::class_<SemidistributivityReport>(m, "SemidistributivityReport")
      .def_readonly("semidistributive", &SemidistributivityReport::semidistributive)
      .def_readonly("join_side_failed", &SemidistributivityReport::join_side_failed)
      .def_readonly("u", &SemidistributivityReport::u)
      .def_readonly("x", &SemidistributivityReport::x)
      .def_readonly("y", &SemidistributivityReport::y)
      .def("__bool__", [](const SemidistributivityReport& r) { return r.semidistributive; });
  m.def("is_semidistributive", &is_semidistributive);

  py::class_<Interval>(m, "Interval")
      .def(py::init<int, int>(), py::arg("bottom"), py::arg("top"))
      .def_readonly("bottom", &Interval::bottom)
      .def_readonly("top", &Interval::top)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](Interval iv) { return std::hash<long long>()(iv.bottom * 1000003LL + iv.top); })
      .def("__repr__", [](Interval iv) {
        return "[" + std::to_string(iv.bottom) + "," + std::to_string(iv.top) + "]";
      });
  m.def("interval_elements", &interval_elements);
  m.def("interval_atoms", &interval_atoms);
  m.def("is_join_interval", &is_join_interval);
  m.def("interval_label_set", &interval_label_set);
  m.def("label_preserving_iso", &label_preserving_iso);

  py::class_<JoinIntervalClass>(m, "JoinIntervalClass")
      .def_readonly("representatives", &JoinIntervalClass::representatives)
      .def_readonly("label_set", &JoinIntervalClass::label_set)
      .def_readonly("rank", &JoinIntervalClass::rank)
      .def("canonical", &JoinIntervalClass::canonical);
  m.def("enumerate_join_interval_classes", &enumerate_join_interval_classes);

  py::class_<Morphism>(m, "Morphism")
      .def_readonly("source", &Morphism::source)
      .def_readonly("target", &Morphism::target)
      .def_readonly("inner", &Morphism::inner)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const Morphism& f) {
             return std::hash<long long>()(((f.source * 131LL + f.target) * 1000003LL +
                                            f.inner.bottom) * 1000003LL + f.inner.top);
           })
      .def("__repr__", [](const Morphism& f) {
        return "Morphism(o" + std::to_string(f.source) + "->o" + std::to_string(f.target) +
               ", [" + std::to_string(f.inner.bottom) + "," + std::to_string(f.inner.top) + "])";
      });

  py::class_<CategoryOptions>(m, "CategoryOptions")
      .def(py::init<>())
      .def_readwrite("verify_axioms", &CategoryOptions::verify_axioms)
      .def_readwrite("max_eager_join_intervals", &CategoryOptions::max_eager_join_intervals);

  py::class_<TccCategory>(m, "Category")
      .def_readonly("lat", &TccCategory::lat)
      .def_readonly("objects", &TccCategory::objects)
      .def_readonly("eager", &TccCategory::eager)
      .def("object_count", &TccCategory::object_count)
      .def("morphism_count", &TccCategory::morphism_count)
      .def("object_of", &TccCategory::object_of)
      .def("identity", &TccCategory::identity)
      .def("is_identity", &TccCategory::is_identity)
      .def("__repr__", [](const TccCategory& c) {
        return "Category(" + std::to_string(c.object_count()) + " objects)";
      });
  m.def(
      "build_category",
      [](const Lattice& l, CategoryOptions opts) { return build_category(l, opts); },
      py::arg("lattice"), py::arg("options") = CategoryOptions{});
  m.def("hom_set", &hom_set);
  m.def("compose", &compose);
  m.def("object_rank", &object_rank);
  m.def("is_irreducible", &is_irreducible);
  m.def("signed_sequences", &signed_sequences);
  m.def("full_object", &full_object);
  m.def("zero_object", &zero_object);
  m.def("complete_signed_sequences", &complete_signed_sequences);
  m.def("categories_isomorphic", &categories_isomorphic);

  py::class_<Congruence>(m, "Congruence")
      .def_readonly("classes", &Congruence::classes)
      .def_readonly("class_of", &Congruence::class_of)
      .def_readonly("pi_down", &Congruence::pi_down)
      .def_readonly("pi_up", &Congruence::pi_up)
      .def_readonly("quotient", &Congruence::quotient)
      .def("proj", &Congruence::proj)
      .def("__repr__", [](const Congruence& phi) {
        return "Congruence(" + std::to_string(phi.classes.size()) + " classes)";
      });
  m.def("congruence_from_contractions", &congruence_from_contractions);
  m.def("congruence_from_partition", &congruence_from_partition);

  py::class_<ContractionReport>(m, "ContractionReport")
      .def_readonly("contracted_labels", &ContractionReport::contracted_labels)
      .def_readonly("uncontracted_labels", &ContractionReport::uncontracted_labels);
  m.def("contracted_labels", &contracted_labels);
  m.def("label_correspondence", &label_correspondence);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("ok", &CheckResult::ok)
      .def_readonly("witness", &CheckResult::witness)
      .def("__bool__", [](const CheckResult& r) { return r.ok; })
      .def("__repr__", [](const CheckResult& r) {
        return std::string("CheckResult(") + (r.ok ? "ok" : "failed: " + r.witness) + ")";
      });

  m.def("lift_interval", &lift_interval);
  m.def("lift_interval_within", &lift_interval_within);

  py::class_<InducedFunctor>(m, "InducedFunctor")
      .def_readonly("source", &InducedFunctor::source)
      .def_readonly("target", &InducedFunctor::target)
      .def_readonly("cong", &InducedFunctor::cong)
      .def_readonly("obj_map", &InducedFunctor::obj_map)
      .def_readonly("correspondence", &InducedFunctor::correspondence)
      .def("image", &InducedFunctor::image);
  m.def(
      "induced_functor",
      [](const Lattice& l, const LabelledHasse& h, const Congruence& phi, CategoryOptions opts) {
        return induced_functor(l, h, phi, opts);
      },
      py::arg("lattice"), py::arg("hasse"), py::arg("congruence"),
      py::arg("options") = CategoryOptions{});

  py::class_<FunctorAnalysis>(m, "FunctorAnalysis")
      .def_readonly("surjective_on_objects", &FunctorAnalysis::surjective_on_objects)
      .def_readonly("faithful", &FunctorAnalysis::faithful)
      .def_readonly("full", &FunctorAnalysis::full)
      .def_readonly("essential_image", &FunctorAnalysis::essential_image)
      .def_readonly("reflects_composition", &FunctorAnalysis::reflects_composition)
      .def_readonly("image_generates", &FunctorAnalysis::image_generates);
  m.def("analyze", &analyze);
  m.def("check_surjective_on_objects", &check_surjective_on_objects);
  m.def("check_faithful", &check_faithful);
  m.def("check_full", &check_full);
  m.def("check_essential_image_morphisms", &check_essential_image_morphisms);
  m.def("check_reflects_composition", &check_reflects_composition);
  m.def("check_image_generates", &check_image_generates);

  py::class_<GroupPresentation::Relation>(m, "Relation")
      .def(py::init<std::vector<int>, std::vector<int>>(), py::arg("lhs"), py::arg("rhs"))
      .def_readonly("lhs", &GroupPresentation::Relation::lhs)
      .def_readonly("rhs", &GroupPresentation::Relation::rhs);
  py::class_<GroupPresentation>(m, "GroupPresentation")
      .def_readonly("x_elements", &GroupPresentation::x_elements)
      .def_readonly("num_g", &GroupPresentation::num_g)
      .def_readonly("generator_names", &GroupPresentation::generator_names)
      .def_readonly("relations", &GroupPresentation::relations)
      .def_readonly("simplified_relations", &GroupPresentation::simplified_relations)
      .def_readonly("element_words", &GroupPresentation::element_words)
      .def("x_index_of", &GroupPresentation::x_index_of)
      .def("g_gen", &GroupPresentation::g_gen);
  m.def("picture_group", &picture_group);

  py::class_<PictureGroupHom>(m, "PictureGroupHom")
      .def_readonly("source", &PictureGroupHom::source)
      .def_readonly("target", &PictureGroupHom::target)
      .def_readonly("x_image", &PictureGroupHom::x_image)
      .def_readonly("g_image", &PictureGroupHom::g_image)
      .def("map_word", &PictureGroupHom::map_word);
  m.def("picture_group_hom", &picture_group_hom);
  m.def("relations_match", &relations_match);

  py::class_<CellData>(m, "CellData")
      .def_readonly("f_vector", &CellData::f_vector)
      .def_readonly("euler_characteristic", &CellData::euler_characteristic);
  m.def("cw_f_vector", &cw_f_vector);

  py::class_<NerveData>(m, "NerveData")
      .def_readonly("max_dim", &NerveData::max_dim)
      .def_readonly("simplex_counts", &NerveData::simplex_counts)
      .def_readonly("chains", &NerveData::chains);
  m.def("nerve_export", &nerve_export, py::arg("category"), py::arg("max_dim") = 3);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_readonly("description", &CatalogEntry::description)
      .def_readonly("torsion_type", &CatalogEntry::torsion_type);
  m.def("catalog_entries", &catalog_entries,
        py::return_value_policy::reference);
  m.def("catalog_make", &catalog_make);
  m.def("make_chain", &make_chain);
  m.def("make_boolean", &make_boolean);
  m.def("make_product", &make_product);
  m.def("make_pentagon", &make_pentagon);
  m.def("make_tamari", &make_tamari);
  m.def("make_weak_order", &make_weak_order);
  m.def("make_m3", &make_m3);

  m.def("lattice_from_json", [](const std::string& text) {
    return lattice_from_json(json::parse(text));
  });
  m.def("lattice_to_json", [](const Lattice& l) { return lattice_to_json(l).dump(2); });
  m.def("congruence_from_json", [](const Lattice& l, const std::string& text) {
    return congruence_from_json(l, json::parse(text));
  });
  m.def("category_to_json", [](const TccCategory& c) { return category_to_json(c).dump(2); });
  m.def("presentation_to_text", &presentation_to_text);
  m.def("dot_hasse", &dot_hasse);
  m.def("dot_quiver", &dot_quiver);
}
