#pragma once

#include <json.hpp>
#include <string>

#include "taucat/category.hpp"
#include "taucat/congruence.hpp"
#include "taucat/functor.hpp"
#include "taucat/presentation.hpp"

namespace taucat {

using json = nlohmann::ordered_json;

// Lattice files: {"size": n, "covers": [[l,u],...], "name"?: str,
// "element_names"?: [str,...]}.
Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& l);

// Congruence files: {"contract": [[l,u],...]} or {"classes": [[...],...]}.
Congruence congruence_from_json(const Lattice& l, const json& j);
json congruence_to_json(const Lattice& l, const Congruence& phi);

json labelled_hasse_to_json(const Lattice& l, const LabelledHasse& h);
json category_to_json(const TccCategory& c);
json functor_report_to_json(const InducedFunctor& f, const FunctorAnalysis& a);
json presentation_to_json(const GroupPresentation& p);
std::string presentation_to_text(const GroupPresentation& p);
json cell_data_to_json(const CellData& cd, const NerveData& nd);

std::string interval_str(const TccCategory& c, Interval iv);
std::string object_str(const TccCategory& c, int obj);
std::string morphism_str(const TccCategory& c, const Morphism& m);

// Hasse diagram with labelled edges drawn lower -> upper; the comment header
// documents the orientation convention.
std::string dot_hasse(const Lattice& l, const LabelledHasse& h);

// Quiver of irreducible morphisms between objects.
std::string dot_quiver(const TccCategory& c);

}  // namespace taucat
