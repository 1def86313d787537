#include "taucat/io.hpp"

#include <sstream>

namespace taucat {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::Schema, what);
}

std::vector<std::pair<int, int>> pair_list(const json& j, const std::string& key) {
  require(j.is_array(), "'" + key + "' must be an array of [lower, upper] pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
            "'" + key + "' entries must be [int, int]");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

json interval_json(Interval iv) { return json{{"bottom", iv.bottom}, {"top", iv.top}}; }

json check_json(const CheckResult& r) {
  json j{{"ok", r.ok}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace

Lattice lattice_from_json(const json& j) {
  require(j.is_object(), "lattice file must be a JSON object");
  require(j.contains("size") && j["size"].is_number_integer(), "'size' must be an integer");
  require(j.contains("covers"), "'covers' is required");
  int size = j["size"].get<int>();
  auto covers = pair_list(j["covers"], "covers");

  std::string name;
  if (j.contains("name")) {
    require(j["name"].is_string(), "'name' must be a string");
    name = j["name"].get<std::string>();
  }
  std::optional<std::vector<std::string>> names;
  if (j.contains("element_names")) {
    require(j["element_names"].is_array(), "'element_names' must be an array of strings");
    names.emplace();
    for (const auto& e : j["element_names"]) {
      require(e.is_string(), "'element_names' must be an array of strings");
      names->push_back(e.get<std::string>());
    }
  }
  return build_lattice(size, covers, names, name);
}

json lattice_to_json(const Lattice& l) {
  json j;
  if (!l.name.empty()) j["name"] = l.name;
  j["size"] = l.size;
  j["covers"] = json::array();
  for (auto [x, y] : l.covers) j["covers"].push_back(json::array({x, y}));
  if (l.element_names) j["element_names"] = *l.element_names;
  return j;
}

Congruence congruence_from_json(const Lattice& l, const json& j) {
  require(j.is_object(), "congruence file must be a JSON object");
  if (j.contains("contract")) return congruence_from_contractions(l, pair_list(j["contract"], "contract"));
  if (j.contains("classes")) {
    require(j["classes"].is_array(), "'classes' must be an array of element arrays");
    std::vector<std::vector<int>> classes;
    for (const auto& cls : j["classes"]) {
      require(cls.is_array(), "'classes' must be an array of element arrays");
      std::vector<int> members;
      for (const auto& e : cls) {
        require(e.is_number_integer(), "class members must be integers");
        members.push_back(e.get<int>());
      }
      classes.push_back(std::move(members));
    }
    return congruence_from_partition(l, classes);
  }
  throw Error(ErrorKind::Schema, "congruence file needs 'contract' or 'classes'");
}

json congruence_to_json(const Lattice& l, const Congruence& phi) {
  json j;
  j["classes"] = json::array();
  for (const auto& cls : phi.classes) j["classes"].push_back(cls);
  j["proj"] = phi.class_of;
  j["pi_down"] = phi.pi_down;
  j["pi_up"] = phi.pi_up;
  j["quotient"] = lattice_to_json(phi.quotient);
  (void)l;
  return j;
}

json labelled_hasse_to_json(const Lattice& l, const LabelledHasse& h) {
  json j;
  j["completely_join_irreducibles"] = completely_join_irreducibles(l);
  j["arrows"] = json::array();
  for (const auto& a : h.arrows)
    j["arrows"].push_back(json{{"lower", a.lower}, {"upper", a.upper}, {"label", a.label}});
  return j;
}

json category_to_json(const TccCategory& c) {
  json j;
  j["object_count"] = c.object_count();
  j["morphism_count"] = c.morphism_count();
  j["objects"] = json::array();
  for (int o = 0; o < c.object_count(); ++o) {
    const auto& cls = c.objects[o];
    json jo{{"id", o}, {"rank", cls.rank}, {"label_set", cls.label_set}};
    jo["representatives"] = json::array();
    for (const auto& iv : cls.representatives) jo["representatives"].push_back(interval_json(iv));
    j["objects"].push_back(std::move(jo));
  }
  j["hom_sizes"] = json::array();
  for (int s = 0; s < c.object_count(); ++s) {
    json row = json::array();
    for (int t = 0; t < c.object_count(); ++t) row.push_back(hom_set(c, s, t).size());
    j["hom_sizes"].push_back(std::move(row));
  }
  j["morphisms"] = json::array();
  for (int s = 0; s < c.object_count(); ++s)
    for (int t = 0; t < c.object_count(); ++t)
      for (const Morphism& m : hom_set(c, s, t))
        j["morphisms"].push_back(
            json{{"source", s}, {"target", t}, {"inner", interval_json(m.inner)}});
  return j;
}

json functor_report_to_json(const InducedFunctor& f, const FunctorAnalysis& a) {
  json j;
  j["source_objects"] = f.source.object_count();
  j["target_objects"] = f.target.object_count();
  j["object_map"] = f.obj_map;
  j["label_correspondence"] = f.correspondence;
  j["quotient"] = lattice_to_json(f.cong.quotient);
  j["checks"] = json{{"surjective_on_objects", check_json(a.surjective_on_objects)},
                     {"faithful", check_json(a.faithful)},
                     {"full", check_json(a.full)},
                     {"essential_image_morphisms", check_json(a.essential_image)},
                     {"reflects_composition", check_json(a.reflects_composition)},
                     {"image_generates", check_json(a.image_generates)}};
  j["lifts"] = json::array();
  for (int t = 0; t < f.target.object_count(); ++t) {
    Interval rep = f.target.objects[t].canonical();
    Interval lifted = lift_interval(f.source.lat, f.source.hasse, f.cong, rep);
    j["lifts"].push_back(
        json{{"object", t}, {"interval", interval_json(rep)}, {"lift", interval_json(lifted)}});
  }
  auto morphism_json = [](const Morphism& m) {
    return json{{"source", m.source}, {"target", m.target}, {"inner", interval_json(m.inner)}};
  };
  j["morphism_images"] = json::array();
  for (int s = 0; s < f.source.object_count(); ++s)
    for (int t = 0; t < f.source.object_count(); ++t)
      for (const Morphism& m : hom_set(f.source, s, t)) {
        Morphism im = f.image(m);
        j["morphism_images"].push_back(json{
            {"from", morphism_json(m)},
            {"to", morphism_json(im)},
            {"text", morphism_str(f.source, m) + " |-> " + morphism_str(f.target, im)}});
      }
  return j;
}

json presentation_to_json(const GroupPresentation& p) {
  json j;
  j["x_elements"] = p.x_elements;
  j["num_g"] = p.num_g;
  j["generator_names"] = p.generator_names;
  auto rel_json = [](const GroupPresentation::Relation& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}};
  };
  j["relations"] = json::array();
  for (const auto& r : p.relations) j["relations"].push_back(rel_json(r));
  j["simplified_relations"] = json::array();
  for (const auto& r : p.simplified_relations) j["simplified_relations"].push_back(rel_json(r));
  j["element_words"] = p.element_words;
  return j;
}

std::string presentation_to_text(const GroupPresentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& n : p.generator_names) out << " " << n;
  out << "\n";
  auto side = [&](const std::vector<int>& word) {
    if (word.empty()) return std::string("e");
    std::string s;
    for (size_t i = 0; i < word.size(); ++i)
      s += (i ? " " : "") + p.generator_names[word[i]];
    return s;
  };
  out << "# defining relations\n";
  for (const auto& r : p.relations) out << side(r.lhs) << " = " << side(r.rhs) << "\n";
  out << "# simplified relations\n";
  for (const auto& r : p.simplified_relations) out << side(r.lhs) << " = " << side(r.rhs) << "\n";
  return out.str();
}

json cell_data_to_json(const CellData& cd, const NerveData& nd) {
  json j;
  j["f_vector"] = cd.f_vector;
  j["euler_characteristic"] = cd.euler_characteristic;
  long long nerve_euler = 0;
  for (size_t k = 0; k < nd.simplex_counts.size(); ++k)
    nerve_euler += (k % 2 == 0 ? 1 : -1) * nd.simplex_counts[k];
  j["nerve"] =
      json{{"max_dim", nd.max_dim}, {"simplex_counts", nd.simplex_counts},
           {"euler_characteristic", nerve_euler}};
  return j;
}

std::string interval_str(const TccCategory& c, Interval iv) {
  return "[" + c.lat.element_name(iv.bottom) + "," + c.lat.element_name(iv.top) + "]";
}

std::string object_str(const TccCategory& c, int obj) {
  return "o" + std::to_string(obj) + "=" + interval_str(c, c.objects[obj].canonical());
}

std::string morphism_str(const TccCategory& c, const Morphism& m) {
  return "o" + std::to_string(m.source) + "->o" + std::to_string(m.target) + " via " +
         interval_str(c, m.inner);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string dot_hasse(const Lattice& l, const LabelledHasse& h) {
  std::ostringstream out;
  out << "// Hasse diagram; every edge points from the lower cover up to the\n"
         "// upper cover, so the diagram is drawn bottom-up.\n"
         "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < l.size; ++x)
    out << "  n" << x << " [label=\"" << dot_escape(l.element_name(x)) << "\"];\n";
  for (const auto& a : h.arrows)
    out << "  n" << a.lower << " -> n" << a.upper << " [label=\""
        << dot_escape(l.element_name(a.label)) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string dot_quiver(const TccCategory& c) {
  std::ostringstream out;
  out << "// Quiver of irreducible morphisms; edges point from source object\n"
         "// to target object (rank drops by one along every edge).\n"
         "digraph quiver {\n";
  for (int o = 0; o < c.object_count(); ++o)
    out << "  o" << o << " [label=\"" << dot_escape(interval_str(c, c.objects[o].canonical()))
        << "\"];\n";
  for (int s = 0; s < c.object_count(); ++s)
    for (int t = 0; t < c.object_count(); ++t)
      for (const Morphism& m : hom_set(c, s, t))
        if (is_irreducible(c, m))
          out << "  o" << s << " -> o" << t << " [label=\"" << dot_escape(interval_str(c, m.inner))
              << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace taucat
