#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taucat/category.hpp"
#include "taucat/congruence.hpp"

namespace taucat {

struct CheckResult {
  bool ok = true;
  std::string witness;  // human-readable counterexample or certificate note

  explicit operator bool() const { return ok; }
};

// Interval lift i[U,T]: bottom is pi_up of the quotient interval's bottom; top
// joins onto it the covers whose labels correspond to the quotient atom
// labels. Projects back onto iv_q. Throws LiftFailure if a labelled cover is
// missing.
Interval lift_interval(const Lattice& l, const LabelledHasse& h, const Congruence& phi,
                       Interval iv_q);

// Same construction run inside lift_interval(outer_q) with the congruence
// restricted to it. The result is contained in lift_interval(outer_q), which
// the plain lift of inner_q need not be.
Interval lift_interval_within(const Lattice& l, const LabelledHasse& h, const Congruence& phi,
                              Interval outer_q, Interval inner_q);

class InducedFunctor {
 public:
  TccCategory source;
  TccCategory target;  // built on the quotient
  Congruence cong;
  std::vector<int> obj_map;  // source object -> target object
  std::vector<int> correspondence;  // uncontracted CJI -> quotient CJI

  Morphism image(const Morphism& f) const;
  Interval project_interval(Interval iv) const;
};

// Builds both categories, the object map, and (unless opts.verify_axioms is
// off) verifies well-definedness on every class representative and
// functoriality on identities and all composable pairs. Throws
// ImageNotJoinInterval or WellDefinednessFailure.
InducedFunctor induced_functor(const Lattice& l, const LabelledHasse& h, Congruence phi,
                               CategoryOptions opts = {});

CheckResult check_surjective_on_objects(const InducedFunctor& f);

// Extensional check per hom set, cross-checked against injectivity of proj;
// a disagreement throws TheoremMismatch.
CheckResult check_faithful(const InducedFunctor& f);

// Surjectivity of every induced hom map with a nonempty domain. Object pairs
// without morphisms between them are exempt, matching the product
// characterization: collapsing a product factor keeps the functor full.
CheckResult check_full(const InducedFunctor& f);

// Exhibits a preimage for every target morphism via lift_interval and
// lift_interval_within.
CheckResult check_essential_image_morphisms(const InducedFunctor& f);

// For every source pair (f, g) whose images compose, finds a composable pair
// with the same images.
CheckResult check_reflects_composition(const InducedFunctor& f);

// Closure of the image under composition equals the whole target.
CheckResult check_image_generates(const InducedFunctor& f);

struct FunctorAnalysis {
  CheckResult surjective_on_objects;
  CheckResult faithful;
  CheckResult full;
  CheckResult essential_image;
  CheckResult reflects_composition;
  CheckResult image_generates;
};

FunctorAnalysis analyze(const InducedFunctor& f);

}  // namespace taucat
