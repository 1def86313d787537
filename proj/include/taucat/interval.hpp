#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "taucat/lattice.hpp"

namespace taucat {

struct Interval {
  int bottom = -1;
  int top = -1;

  auto operator<=>(const Interval&) const = default;
};

// Elements z with bottom <= z <= top, ascending.
std::vector<int> interval_elements(const Lattice& l, Interval iv);

// Covers of iv.bottom inside the interval, ascending.
std::vector<int> interval_atoms(const Lattice& l, Interval iv);

// True iff iv.top equals the join of the atoms (the empty join being iv.bottom).
bool is_join_interval(const Lattice& l, Interval iv);

// Labels of all Hasse arrows lying inside the interval, sorted ascending.
std::vector<int> interval_label_set(const Lattice& l, const LabelledHasse& h, Interval iv);

// The unique label-preserving order isomorphism from iv1 onto iv2, or nullopt.
// Returned as a full-size element map with -1 outside iv1. Forced level by
// level from the bottom: covers of a fixed element carry distinct labels.
std::optional<std::vector<int>> label_preserving_iso(const Lattice& l, const LabelledHasse& h,
                                                     Interval iv1, Interval iv2);

// Equivalence class of join-intervals sharing a label set.
struct JoinIntervalClass {
  std::vector<Interval> representatives;  // sorted; [0] is canonical
  std::vector<int> label_set;             // sorted
  int rank = 0;                           // atom count of any representative

  const Interval& canonical() const { return representatives.front(); }
};

// All intervals of the lattice, for diagnostics (most are not join-intervals).
std::vector<Interval> enumerate_intervals(const Lattice& l);

// Groups all join-intervals by label set, confirms every group member is
// label-preserving isomorphic to the canonical representative (else throws
// TorsionTypeObstruction), and sorts classes by (rank, canonical rep).
std::vector<JoinIntervalClass> enumerate_join_interval_classes(const Lattice& l,
                                                               const LabelledHasse& h);

}  // namespace taucat
