#pragma once

#include <string>
#include <vector>

#include "taucat/lattice.hpp"

namespace taucat {

Lattice make_chain(int n);        // n elements
Lattice make_boolean(int n);      // subsets of {1..n}
Lattice make_product(const Lattice& a, const Lattice& b);  // (x,y) -> x*|b|+y
Lattice make_pentagon();          // N5
Lattice make_tamari(int n);       // binary trees with n internal nodes, 1 <= n <= 8
Lattice make_weak_order(int n);   // right weak order on permutations, 1 <= n <= 6
Lattice make_m3();                // negative control, not semidistributive

struct CatalogEntry {
  std::string name;
  std::string description;
  bool torsion_type;  // expected to pass semidistributivity and category construction
};

const std::vector<CatalogEntry>& catalog_entries();

// Parses names like "pentagon", "chain(4)", "boolean(2)", "tamari(3)",
// "weak_order(3)", "m3", "product(pentagon,chain(2))".
Lattice catalog_make(const std::string& name);

}  // namespace taucat
