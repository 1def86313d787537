#pragma once

#include <utility>
#include <vector>

#include "taucat/lattice.hpp"

namespace taucat {

// A lattice congruence together with its quotient. Classes are intervals
// [pi_down(x), pi_up(x)] and are indexed in ascending order of their minimum
// element; class indices double as quotient element indices.
struct Congruence {
  std::vector<std::vector<int>> classes;  // each ascending
  std::vector<int> class_of;              // element -> class id (== proj)
  std::vector<int> pi_down;               // element -> least element of its class
  std::vector<int> pi_up;                 // element -> greatest element of its class
  Lattice quotient;
  LabelledHasse quotient_hasse;

  int proj(int x) const { return class_of[x]; }
  bool contracts(int lower, int upper) const { return class_of[lower] == class_of[upper]; }
};

// Smallest congruence collapsing the given covers: union-find fixpoint under
// x≡y ⇒ x∨z ≡ y∨z and x∧z ≡ y∧z. Throws NotACover if a pair is not a cover.
Congruence congruence_from_contractions(const Lattice& l,
                                        const std::vector<std::pair<int, int>>& arrows);

// Validates an explicit partition exhaustively; throws NotACongruence with a
// witness triple (x, y, z) on failure.
Congruence congruence_from_partition(const Lattice& l, const std::vector<std::vector<int>>& classes);

int quotient_map(const Congruence& phi, int x);

struct ContractionReport {
  std::vector<int> contracted_labels;    // ascending
  std::vector<int> uncontracted_labels;  // ascending
  std::vector<char> cover_contracted;    // parallel to l.covers
};

// Arrows sharing a label are contracted all-or-none; throws MixedContraction
// otherwise.
ContractionReport contracted_labels(const Lattice& l, const LabelledHasse& h,
                                    const Congruence& phi);

// proj restricted to uncontracted completely join-irreducibles, verified to be
// a bijection onto the quotient's completely join-irreducibles (else throws
// CorrespondenceFailure). Full-size element map, -1 elsewhere.
std::vector<int> label_correspondence(const Lattice& l, const LabelledHasse& h,
                                      const Congruence& phi);

}  // namespace taucat
