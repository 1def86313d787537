#pragma once

#include <string>
#include <vector>

#include "taucat/category.hpp"
#include "taucat/congruence.hpp"
#include "taucat/lattice.hpp"

namespace taucat {

// Words are sequences of generator ids; defining relations never need
// inverses. Generators 0..num_x-1 are the X generators (one per completely
// join-irreducible label), num_x..num_x+num_g-1 the g generators (one per
// lattice element).
struct GroupPresentation {
  struct Relation {
    std::vector<int> lhs, rhs;
  };

  std::vector<int> x_elements;  // CJI element per X generator
  int num_g = 0;
  std::vector<std::string> generator_names;    // X generators then g generators
  std::vector<Relation> relations;             // per labelled arrow, then g_bottom = e
  std::vector<Relation> simplified_relations;  // X generators only, one per non-tree arrow
  std::vector<std::vector<int>> element_words;  // per element, its g eliminated to an X word

  int x_index_of(int element) const;  // -1 when element labels nothing
  int g_gen(int element) const { return static_cast<int>(x_elements.size()) + element; }
};

// Generators X_j per label and g_T per element; one relation g_upper =
// X_label * g_lower per arrow plus g_bottom = e. The simplification
// eliminates every g along a breadth-first spanning tree from the bottom
// (lowest index first), leaving one relation per non-tree arrow; their count
// is arrows - elements + 1.
GroupPresentation picture_group(const Lattice& l, const LabelledHasse& h);

struct PictureGroupHom {
  GroupPresentation source, target;
  std::vector<int> x_image;  // source X id -> target X id, -1 for the trivial word
  std::vector<int> g_image;  // source element -> target element

  std::vector<int> map_word(const std::vector<int>& word) const;  // X-only words
};

// X_j -> X_proj(j) for uncontracted labels, X_j -> e for contracted ones,
// g_T -> g_proj(T). Each source relation must map to a target relation or a
// trivial identity, checked syntactically; else throws RelationImageUnmatched.
PictureGroupHom picture_group_hom(const Lattice& l, const LabelledHasse& h, const Congruence& phi);

// Letters are (generator, sign); words free-reduce; relators compare up to
// cyclic rotation and inversion. Used to compare relations across
// presentations with renamed generators.
bool relations_match(const GroupPresentation::Relation& a, const GroupPresentation::Relation& b);

struct CellData {
  std::vector<int> f_vector;  // cells per rank
  int euler_characteristic = 0;
};

// One k-cell per object of rank k.
CellData cw_f_vector(const TccCategory& c);

struct NerveData {
  int max_dim = 3;
  std::vector<long long> simplex_counts;                  // index 0 = objects
  std::vector<std::vector<std::vector<Morphism>>> chains;  // chains[k-1] lists the k-chains
};

// Chains of composable non-identity morphisms up to max_dim.
NerveData nerve_export(const TccCategory& c, int max_dim = 3);

}  // namespace taucat
