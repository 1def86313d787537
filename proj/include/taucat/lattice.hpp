#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taucat {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

enum class ErrorKind {
  Schema,
  NotAPoset,
  NotALattice,
  NoBoundedExtremes,
  RedundantCover,
  NoMinimumLabel,
  TorsionTypeObstruction,
  CompositionFailure,
  NotACover,
  NotACongruence,
  ClassNotInterval,
  MixedContraction,
  CorrespondenceFailure,
  ImageNotJoinInterval,
  WellDefinednessFailure,
  LiftFailure,
  TheoremMismatch,
  RelationImageUnmatched,
  SizeBound,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Finite bounded lattice given by its Hasse diagram. Covers are stored as
// (lower, upper) pairs; order queries go through per-element bitsets, so
// everything here assumes desk scale (at most a few thousand elements).
struct Lattice {
  int size = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<ElementSet> up;    // up[x] = { y : x <= y }
  std::vector<ElementSet> down;  // down[x] = { y : y <= x }
  std::vector<std::vector<int>> covers_up;    // ascending
  std::vector<std::vector<int>> covers_down;  // ascending
  std::vector<int> join_table;  // row-major size*size
  std::vector<int> meet_table;
  int bottom = -1;
  int top = -1;
  std::string name;
  std::optional<std::vector<std::string>> element_names;

  bool leq(int x, int y) const { return up[x].test(y); }
  int join(int x, int y) const { return join_table[x * size + y]; }
  int meet(int x, int y) const { return meet_table[x * size + y]; }
  bool is_cover(int lower, int upper) const;
  std::string element_name(int x) const;
};

// Validates and closes a cover list. Throws Error with kind NotAPoset,
// RedundantCover, NoBoundedExtremes or NotALattice.
Lattice build_lattice(int size, std::vector<std::pair<int, int>> covers,
                      std::optional<std::vector<std::string>> element_names = std::nullopt,
                      std::string name = {});

int join(const Lattice& l, int x, int y);
int meet(const Lattice& l, int x, int y);

// Elements with exactly one lower cover.
std::vector<int> completely_join_irreducibles(const Lattice& l);

// Minimum t with x ∨ t = y, for a cover x ⋖ y. The result is completely
// join-irreducible and its unique lower cover lies below x.
int arrow_label(const Lattice& l, int x, int y);

struct LabelledArrow {
  int lower = -1;
  int upper = -1;
  int label = -1;
};

struct LabelledHasse {
  std::vector<LabelledArrow> arrows;           // in cover-list order
  std::vector<std::vector<LabelledArrow>> arrows_up;  // per lower element, ascending upper

  int label_of(int lower, int upper) const;  // -1 if (lower, upper) is not a cover
};

LabelledHasse labelled_hasse(const Lattice& l);

struct SemidistributivityReport {
  bool semidistributive = true;
  bool join_side_failed = false;  // else the meet side failed
  int u = -1, x = -1, y = -1;

  explicit operator bool() const { return semidistributive; }
};

SemidistributivityReport is_semidistributive(const Lattice& l);

// First order isomorphism in lexicographic order (as the image sequence of
// elements 0,1,...), or nullopt.
std::optional<std::vector<int>> lattice_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace taucat
