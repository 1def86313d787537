#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "taucat/catalog.hpp"
#include "taucat/io.hpp"

using namespace taucat;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::NotACover:
    case ErrorKind::NotACongruence:
    case ErrorKind::ClassNotInterval:
    case ErrorKind::SizeBound:
      return 1;
    case ErrorKind::NotAPoset:
    case ErrorKind::NotALattice:
    case ErrorKind::NoBoundedExtremes:
    case ErrorKind::RedundantCover:
      return 2;
    case ErrorKind::NoMinimumLabel:
      return 3;
    default:
      return 4;
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("JSON parse error: ") + e.what());
  }
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Schema, "cannot write '" + path + "'");
    out << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

std::string check_mark(bool ok) { return ok ? "✓" : "✗"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion-type lattice categories"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;  // per-command default when empty
  std::string verify = "full";
  int max_dim = 3;
  Output output;
  app.add_option("--format", format, "output format: json, text or dot");
  app.add_option("--verify", verify, "verification level: full or fast")
      ->check(CLI::IsMember({"full", "fast"}));
  app.add_option("--max-dim", max_dim, "largest nerve dimension to enumerate")
      ->check(CLI::Range(0, 12));
  app.add_option("--output", output.path, "write to a file instead of stdout");

  auto fmt = [&](const std::string& def) { return format.empty() ? def : format; };
  auto options = [&] {
    CategoryOptions opts;
    opts.verify_axioms = (verify == "full");
    return opts;
  };

  std::function<int()> run;

  std::string lattice_path, congruence_path, catalog_name;
  bool quiver = false;

  auto* c_check = app.add_subcommand("check", "validate a lattice, semidistributivity, labelling");
  c_check->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_check->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      auto sd = is_semidistributive(l);
      std::string f = fmt("text");
      if (!sd.semidistributive) {
        std::string side = sd.join_side_failed ? "join" : "meet";
        std::string witness = "u=" + l.element_name(sd.u) + ", x=" + l.element_name(sd.x) +
                              ", y=" + l.element_name(sd.y);
        if (f == "json")
          output.write(json{{"lattice", true},
                            {"semidistributive", false},
                            {"failed_side", side},
                            {"witness", witness}});
        else
          output.write("lattice " + check_mark(true) + ", semidistributive " + check_mark(false) +
                       " (" + side + " side: " + witness + ")\n");
        return 3;
      }
      auto h = labelled_hasse(l);
      if (f == "json")
        output.write(json{{"lattice", true},
                          {"semidistributive", true},
                          {"labelled", true},
                          {"size", l.size},
                          {"arrows", h.arrows.size()}});
      else
        output.write("lattice " + check_mark(true) + ", semidistributive " + check_mark(true) +
                     ", labelled " + check_mark(true) + "\n");
      return 0;
    };
  });

  auto* c_jirr = app.add_subcommand("jirr", "list completely join-irreducible elements");
  c_jirr->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_jirr->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      auto cjis = completely_join_irreducibles(l);
      if (fmt("json") == "json") {
        json j{{"count", cjis.size()}, {"completely_join_irreducibles", cjis}};
        if (l.element_names) {
          j["names"] = json::array();
          for (int x : cjis) j["names"].push_back(l.element_name(x));
        }
        output.write(j);
      } else {
        std::string text;
        for (int x : cjis)
          text += l.element_name(x) + " (lower cover " +
                  l.element_name(l.covers_down[x][0]) + ")\n";
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_labels = app.add_subcommand("labels", "label every cover with its minimal joiner");
  c_labels->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_labels->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      auto h = labelled_hasse(l);
      std::string f = fmt("json");
      if (f == "dot")
        output.write(dot_hasse(l, h));
      else if (f == "json")
        output.write(labelled_hasse_to_json(l, h));
      else {
        std::string text;
        for (const auto& a : h.arrows)
          text += l.element_name(a.lower) + " -> " + l.element_name(a.upper) + " : " +
                  l.element_name(a.label) + "\n";
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_category = app.add_subcommand("category", "build the category of join-interval classes");
  c_category->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_category->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      TccCategory c = build_category(std::move(l), options());
      std::string f = fmt("json");
      if (f == "dot")
        output.write(dot_quiver(c));
      else if (f == "json")
        output.write(category_to_json(c));
      else {
        std::string text = std::to_string(c.object_count()) + " objects, " +
                           std::to_string(c.morphism_count()) + " morphisms\n";
        for (int o = 0; o < c.object_count(); ++o)
          text += object_str(c, o) + " rank " + std::to_string(c.objects[o].rank) + ", " +
                  std::to_string(c.objects[o].representatives.size()) + " representatives\n";
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_quotient = app.add_subcommand("quotient", "close a congruence and emit the quotient");
  c_quotient->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_quotient->add_option("congruence", congruence_path, "congruence JSON file")->required();
  c_quotient->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      Congruence phi = congruence_from_json(l, load_json(congruence_path));
      auto h = labelled_hasse(l);
      auto report = contracted_labels(l, h, phi);
      if (fmt("json") == "json") {
        json j = congruence_to_json(l, phi);
        j["contracted_labels"] = report.contracted_labels;
        j["uncontracted_labels"] = report.uncontracted_labels;
        output.write(j);
      } else {
        std::string text = std::to_string(phi.classes.size()) + " classes\n";
        for (const auto& cls : phi.classes) {
          text += "{";
          for (size_t i = 0; i < cls.size(); ++i)
            text += (i ? "," : "") + l.element_name(cls[i]);
          text += "}\n";
        }
        text += "contracted labels:";
        for (int j : report.contracted_labels) text += " " + l.element_name(j);
        text += "\n";
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_functor = app.add_subcommand("functor", "analyze the functor induced by a congruence");
  c_functor->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_functor->add_option("congruence", congruence_path, "congruence JSON file")->required();
  c_functor->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      Congruence phi = congruence_from_json(l, load_json(congruence_path));
      auto h = labelled_hasse(l);
      InducedFunctor fun = induced_functor(l, h, std::move(phi), options());
      FunctorAnalysis a = analyze(fun);
      if (fmt("json") == "json") {
        output.write(functor_report_to_json(fun, a));
      } else {
        auto line = [&](const char* name, const CheckResult& r) {
          std::string s = std::string(name) + ": " + check_mark(r.ok);
          if (!r.witness.empty()) s += " (" + r.witness + ")";
          return s + "\n";
        };
        std::string text = line("surjective on objects", a.surjective_on_objects) +
                           line("faithful", a.faithful) + line("full", a.full) +
                           line("essential image contains all morphisms", a.essential_image) +
                           line("reflects composition", a.reflects_composition) +
                           line("image generates", a.image_generates);
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_sequences = app.add_subcommand("sequences", "complete factorization chains");
  c_sequences->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_sequences->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      TccCategory c = build_category(std::move(l), options());
      auto seqs = complete_signed_sequences(c);
      if (fmt("json") == "json") {
        json j{{"count", seqs.size()}};
        j["sequences"] = json::array();
        for (const auto& seq : seqs) {
          json js = json::array();
          for (const auto& m : seq)
            js.push_back(json{{"source", m.source},
                              {"target", m.target},
                              {"inner", json{{"bottom", m.inner.bottom}, {"top", m.inner.top}}}});
          j["sequences"].push_back(std::move(js));
        }
        output.write(j);
      } else {
        std::string text = std::to_string(seqs.size()) + " complete chains\n";
        for (const auto& seq : seqs) {
          for (size_t i = 0; i < seq.size(); ++i)
            text += (i ? "  " : "") + morphism_str(c, seq[i]);
          text += "\n";
        }
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_picture = app.add_subcommand("picture-group", "present the picture group");
  c_picture->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_picture->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      auto h = labelled_hasse(l);
      auto p = picture_group(l, h);
      if (fmt("json") == "json")
        output.write(presentation_to_json(p));
      else
        output.write(presentation_to_text(p));
      return 0;
    };
  });

  auto* c_nerve = app.add_subcommand("nerve", "cell counts and nerve simplex counts");
  c_nerve->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_nerve->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      TccCategory c = build_category(std::move(l), options());
      CellData cd = cw_f_vector(c);
      NerveData nd = nerve_export(c, max_dim);
      if (fmt("json") == "json") {
        output.write(cell_data_to_json(cd, nd));
      } else {
        std::string text = "f-vector (";
        for (size_t k = 0; k < cd.f_vector.size(); ++k)
          text += (k ? ", " : "") + std::to_string(cd.f_vector[k]);
        text += "), euler " + std::to_string(cd.euler_characteristic) + "\n";
        text += "nerve simplices:";
        for (long long n : nd.simplex_counts) text += " " + std::to_string(n);
        text += "\n";
        output.write(text);
      }
      return 0;
    };
  });

  auto* c_catalog = app.add_subcommand("catalog", "built-in example lattices");
  c_catalog->require_subcommand(1);
  auto* c_list = c_catalog->add_subcommand("list", "list available lattices");
  c_list->callback([&] {
    run = [&]() -> int {
      if (fmt("text") == "json") {
        json j = json::array();
        for (const auto& e : catalog_entries())
          j.push_back(json{{"name", e.name},
                           {"description", e.description},
                           {"torsion_type", e.torsion_type}});
        output.write(j);
      } else {
        std::string text;
        for (const auto& e : catalog_entries())
          text += e.name + "  " + e.description +
                  (e.torsion_type ? "" : "  [negative control]") + "\n";
        output.write(text);
      }
      return 0;
    };
  });
  auto* c_emit = c_catalog->add_subcommand("emit", "emit a catalog lattice as JSON");
  c_emit->add_option("name", catalog_name, "catalog name, e.g. pentagon or tamari(3)")->required();
  c_emit->callback([&] {
    run = [&]() -> int {
      output.write(lattice_to_json(catalog_make(catalog_name)));
      return 0;
    };
  });

  auto* c_dot = app.add_subcommand("export-dot", "labelled Hasse diagram or quiver as DOT");
  c_dot->add_option("lattice", lattice_path, "lattice JSON file")->required();
  c_dot->add_flag("--quiver", quiver, "emit the irreducible-morphism quiver instead");
  c_dot->callback([&] {
    run = [&]() -> int {
      Lattice l = lattice_from_json(load_json(lattice_path));
      if (quiver) {
        TccCategory c = build_category(std::move(l), options());
        output.write(dot_quiver(c));
      } else {
        auto h = labelled_hasse(l);
        output.write(dot_hasse(l, h));
      }
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
