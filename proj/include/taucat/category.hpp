#pragma once

#include <map>
#include <optional>
#include <vector>

#include "taucat/interval.hpp"
#include "taucat/lattice.hpp"

namespace taucat {

// A morphism in canonical form: an interval contained in the canonical
// representative of its source class, itself a member of the target class.
// Identity iff inner == canonical representative of the source.
struct Morphism {
  int source = -1;
  int target = -1;
  Interval inner;

  auto operator<=>(const Morphism&) const = default;
};

struct CategoryOptions {
  bool verify_axioms = true;
  // Above this many join-intervals, hom sets are computed on demand and no
  // composition table or axiom verification is materialized.
  int max_eager_join_intervals = 2000;
};

class TccCategory {
 public:
  Lattice lat;
  LabelledHasse hasse;
  std::vector<JoinIntervalClass> objects;
  bool eager = true;

  int object_count() const { return static_cast<int>(objects.size()); }
  long long morphism_count() const;

  // (class id, member index) of a join-interval; throws if iv is not one.
  std::pair<int, int> locate(Interval iv) const;
  int object_of(Interval iv) const { return locate(iv).first; }

  // Label-preserving iso from the canonical representative onto member k,
  // as a full-size element map (-1 outside the representative).
  const std::vector<int>& transport(int obj, int member) const;
  std::vector<int> transport_inverse(int obj, int member) const;

  const std::vector<Morphism>& hom(int src, int tgt) const;  // eager mode only
  Morphism identity(int obj) const;
  bool is_identity(const Morphism& f) const;

  // Index of f within hom(source, target).
  int hom_index(const Morphism& f) const;

  // All composable pairs (eager mode only).
  const std::map<std::pair<Morphism, Morphism>, Morphism>& composition_table() const;

 private:
  friend TccCategory build_category(Lattice l, CategoryOptions opts);
  std::vector<std::vector<std::vector<Morphism>>> homs_;
  std::map<Interval, std::pair<int, int>> member_of_;
  mutable std::vector<std::vector<std::vector<int>>> transports_;
  std::map<std::pair<Morphism, Morphism>, Morphism> comp_table_;
  void build_transports() const;
  void materialize(bool verify);
  friend std::vector<Morphism> hom_set(const TccCategory& c, int src, int tgt);
};

// Enumerates objects (throwing TorsionTypeObstruction when two join-intervals
// with equal label sets admit no label-preserving isomorphism), materializes
// hom sets and the composition table when within the eager bound, and verifies
// the category axioms exhaustively unless disabled.
TccCategory build_category(Lattice l, CategoryOptions opts = {});

// Works in both eager and lazy modes.
std::vector<Morphism> hom_set(const TccCategory& c, int src, int tgt);

// f: o1 -> o2 then g: o2 -> o3. Throws CompositionFailure on a mismatch.
Morphism compose(const TccCategory& c, const Morphism& f, const Morphism& g);

int object_rank(const TccCategory& c, int obj);

// Non-identity with rank drop exactly one.
bool is_irreducible(const TccCategory& c, const Morphism& f);

// All factorizations of f into chains of irreducible morphisms. Every chain
// has length rank(source) - rank(target); the identity factors as the empty
// chain.
std::vector<std::vector<Morphism>> signed_sequences(const TccCategory& c, const Morphism& f);

// Class of [bottom, top] when that interval is a join-interval.
std::optional<int> full_object(const TccCategory& c);
int zero_object(const TccCategory& c);

// Factorizations of every morphism from the full object to the zero object.
std::vector<std::vector<Morphism>> complete_signed_sequences(const TccCategory& c);

// Object bijection extending to an isomorphism of categories, or nullopt.
// Tries an isomorphism of the underlying lattices first and verifies the
// induced functor; otherwise searches object bijections respecting ranks and
// hom-set cardinalities and extends them morphism by morphism.
std::optional<std::vector<int>> categories_isomorphic(const TccCategory& a, const TccCategory& b);

}  // namespace taucat
