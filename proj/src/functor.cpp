#include "taucat/functor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace taucat {

namespace {

std::string iv_str(Interval iv) {
  return "[" + std::to_string(iv.bottom) + "," + std::to_string(iv.top) + "]";
}

std::string mor_str(const TccCategory& c, const Morphism& m) {
  return "[f_" + iv_str(c.objects[m.source].canonical()) + iv_str(m.inner) + "]";
}

int class_top(const Congruence& phi, int qelt) {
  return phi.pi_up[phi.classes[qelt].front()];
}

Interval lift_with_corr(const Lattice& l, const LabelledHasse& h, const Congruence& phi,
                        const std::vector<int>& corr, Interval iv_q, int within_top) {
  const Lattice& q = phi.quotient;
  if (iv_q.bottom < 0 || iv_q.top >= q.size || !q.leq(iv_q.bottom, iv_q.top))
    throw Error(ErrorKind::LiftFailure, "not a quotient interval: " + iv_str(iv_q));

  std::vector<int> inv_corr(q.size, -1);
  for (int j = 0; j < l.size; ++j)
    if (corr[j] >= 0) inv_corr[corr[j]] = j;

  int bottom = class_top(phi, iv_q.bottom);
  if (within_top >= 0) bottom = l.meet(within_top, bottom);
  if (phi.proj(bottom) != iv_q.bottom)
    throw Error(ErrorKind::LiftFailure,
                "no representative of " + std::to_string(iv_q.bottom) + " inside the outer lift");

  int top = bottom;
  for (int atom : interval_atoms(q, iv_q)) {
    int label_q = phi.quotient_hasse.label_of(iv_q.bottom, atom);
    int label = inv_corr[label_q];
    if (label < 0)
      throw Error(ErrorKind::LiftFailure,
                  "quotient label " + std::to_string(label_q) + " has no corresponding label");
    int found = -1;
    for (const auto& a : h.arrows_up[bottom])
      if (a.label == label && (within_top < 0 || l.leq(a.upper, within_top))) {
        found = a.upper;
        break;
      }
    if (found < 0)
      throw Error(ErrorKind::LiftFailure, "element " + std::to_string(bottom) +
                                              " has no cover labelled " + std::to_string(label));
    top = l.join(top, found);
  }
  Interval lifted{bottom, top};
  if (phi.proj(top) != iv_q.top || !is_join_interval(l, lifted))
    throw Error(ErrorKind::LiftFailure, "lift of " + iv_str(iv_q) + " does not project back");
  return lifted;
}

}  // namespace

Interval lift_interval(const Lattice& l, const LabelledHasse& h, const Congruence& phi,
                       Interval iv_q) {
  auto corr = label_correspondence(l, h, phi);
  return lift_with_corr(l, h, phi, corr, iv_q, -1);
}

Interval lift_interval_within(const Lattice& l, const LabelledHasse& h, const Congruence& phi,
                              Interval outer_q, Interval inner_q) {
  if (!phi.quotient.leq(outer_q.bottom, inner_q.bottom) ||
      !phi.quotient.leq(inner_q.top, outer_q.top))
    throw Error(ErrorKind::LiftFailure,
                iv_str(inner_q) + " is not contained in " + iv_str(outer_q));
  auto corr = label_correspondence(l, h, phi);
  Interval outer = lift_with_corr(l, h, phi, corr, outer_q, -1);
  return lift_with_corr(l, h, phi, corr, inner_q, outer.top);
}

Interval InducedFunctor::project_interval(Interval iv) const {
  return {cong.proj(iv.bottom), cong.proj(iv.top)};
}

Morphism InducedFunctor::image(const Morphism& f) const {
  Interval outer_p = project_interval(source.objects[f.source].canonical());
  Interval inner_p = project_interval(f.inner);
  if (!is_join_interval(target.lat, inner_p))
    throw Error(ErrorKind::ImageNotJoinInterval,
                "projection " + iv_str(inner_p) + " is not a join-interval");
  auto [ocls, omember] = target.locate(outer_p);
  assert(ocls == obj_map[f.source]);
  auto inv = target.transport_inverse(ocls, omember);
  Morphism m{obj_map[f.source], obj_map[f.target], {inv[inner_p.bottom], inv[inner_p.top]}};
  if (target.locate(m.inner).first != m.target)
    throw Error(ErrorKind::WellDefinednessFailure,
                "image of " + mor_str(source, f) + " left the image class");
  return m;
}

InducedFunctor induced_functor(const Lattice& l, const LabelledHasse& h, Congruence phi,
                               CategoryOptions opts) {
  InducedFunctor f;
  f.correspondence = label_correspondence(l, h, phi);
  f.source = build_category(l, opts);
  f.target = build_category(phi.quotient, opts);
  f.cong = std::move(phi);

  f.obj_map.assign(f.source.object_count(), -1);
  for (int o = 0; o < f.source.object_count(); ++o) {
    const auto& cls = f.source.objects[o];
    for (size_t k = 0; k < cls.representatives.size(); ++k) {
      Interval p = f.project_interval(cls.representatives[k]);
      if (!is_join_interval(f.target.lat, p))
        throw Error(ErrorKind::ImageNotJoinInterval,
                    "projection " + iv_str(p) + " of representative " +
                        iv_str(cls.representatives[k]) + " is not a join-interval");
      int image_cls = f.target.locate(p).first;
      if (f.obj_map[o] == -1)
        f.obj_map[o] = image_cls;
      else if (f.obj_map[o] != image_cls)
        throw Error(ErrorKind::WellDefinednessFailure,
                    "representatives of object " + std::to_string(o) +
                        " project to different classes");
      if (!opts.verify_axioms) break;
    }
  }

  if (opts.verify_axioms && f.source.eager && f.target.eager) {
    // The morphism map must not depend on the chosen pair representative.
    for (int s = 0; s < f.source.object_count(); ++s) {
      const auto& cls = f.source.objects[s];
      for (int t = 0; t < f.source.object_count(); ++t)
        for (const Morphism& m : f.source.hom(s, t)) {
          Morphism expected = f.image(m);
          for (size_t k = 1; k < cls.representatives.size(); ++k) {
            const auto& psi = f.source.transport(s, k);
            Interval outer_p = f.project_interval(cls.representatives[k]);
            Interval inner_p =
                f.project_interval({psi[m.inner.bottom], psi[m.inner.top]});
            auto [ocls, omember] = f.target.locate(outer_p);
            auto inv = f.target.transport_inverse(ocls, omember);
            Morphism other{f.obj_map[s], f.obj_map[t],
                           {inv[inner_p.bottom], inv[inner_p.top]}};
            if (other != expected)
              throw Error(ErrorKind::WellDefinednessFailure,
                          "morphism image depends on the pair representative for " +
                              mor_str(f.source, m));
          }
        }
    }
    for (int o = 0; o < f.source.object_count(); ++o)
      if (f.image(f.source.identity(o)) != f.target.identity(f.obj_map[o]))
        throw Error(ErrorKind::WellDefinednessFailure,
                    "identity of object " + std::to_string(o) + " has a non-identity image");
    for (const auto& [fg, comp] : f.source.composition_table()) {
      if (f.image(comp) != compose(f.target, f.image(fg.first), f.image(fg.second)))
        throw Error(ErrorKind::WellDefinednessFailure,
                    "image fails to preserve a composition at " + mor_str(f.source, fg.first));
    }
  }
  return f;
}

CheckResult check_surjective_on_objects(const InducedFunctor& f) {
  std::vector<char> hit(f.target.object_count(), 0);
  for (int t : f.obj_map) hit[t] = 1;
  std::string misses;
  for (int t = 0; t < f.target.object_count(); ++t)
    if (!hit[t]) misses += (misses.empty() ? "" : ", ") + std::to_string(t);
  if (!misses.empty()) return {false, "uncovered target objects: " + misses};
  return {true, ""};
}

CheckResult check_faithful(const InducedFunctor& f) {
  CheckResult res{true, ""};
  for (int s = 0; s < f.source.object_count() && res.ok; ++s)
    for (int t = 0; t < f.source.object_count() && res.ok; ++t) {
      std::map<Morphism, Morphism> seen;
      for (const Morphism& m : hom_set(f.source, s, t)) {
        auto [it, fresh] = seen.try_emplace(f.image(m), m);
        if (!fresh) {
          res = {false, mor_str(f.source, it->second) + " and " + mor_str(f.source, m) +
                            " have the same image " + mor_str(f.target, it->first)};
          break;
        }
      }
    }
  bool proj_injective = static_cast<int>(f.cong.classes.size()) == f.source.lat.size;
  if (res.ok != proj_injective)
    throw Error(ErrorKind::TheoremMismatch,
                "extensional faithfulness disagrees with injectivity of the projection");
  return res;
}

CheckResult check_full(const InducedFunctor& f) {
  // Fullness is tested on the hom maps of pairs related by a containment,
  // i.e. with a nonempty hom set. Pairs of distinct objects with no morphism
  // between them do not count against it even when their images admit one.
  for (int s = 0; s < f.source.object_count(); ++s)
    for (int t = 0; t < f.source.object_count(); ++t) {
      std::vector<Morphism> source_homs = hom_set(f.source, s, t);
      if (source_homs.empty()) continue;
      std::set<Morphism> images;
      for (const Morphism& m : source_homs) images.insert(f.image(m));
      for (const Morphism& g : hom_set(f.target, f.obj_map[s], f.obj_map[t]))
        if (!images.count(g))
          return {false, "hom(" + std::to_string(s) + "," + std::to_string(t) + ") misses " +
                             mor_str(f.target, g) + " (" + std::to_string(images.size()) +
                             " images vs " +
                             std::to_string(hom_set(f.target, f.obj_map[s], f.obj_map[t]).size()) +
                             " target morphisms)"};
    }
  return {true, ""};
}

CheckResult check_essential_image_morphisms(const InducedFunctor& f) {
  const Lattice& l = f.source.lat;
  const LabelledHasse& h = f.source.hasse;
  for (int s = 0; s < f.target.object_count(); ++s) {
    Interval outer_q = f.target.objects[s].canonical();
    for (int t = 0; t < f.target.object_count(); ++t)
      for (const Morphism& g : hom_set(f.target, s, t)) {
        Interval lifted_outer = lift_with_corr(l, h, f.cong, f.correspondence, outer_q, -1);
        Interval lifted_inner =
            lift_with_corr(l, h, f.cong, f.correspondence, g.inner, lifted_outer.top);
        auto [src_cls, src_member] = f.source.locate(lifted_outer);
        auto inv = f.source.transport_inverse(src_cls, src_member);
        Morphism pre{src_cls, f.source.locate(lifted_inner).first,
                     {inv[lifted_inner.bottom], inv[lifted_inner.top]}};
        if (f.image(pre) != g)
          return {false, "no preimage found for " + mor_str(f.target, g)};
      }
  }
  return {true, ""};
}

CheckResult check_reflects_composition(const InducedFunctor& f) {
  // Group source morphisms by image, then demand a composable preimage pair
  // for every composable image pair.
  std::map<Morphism, std::vector<Morphism>> fibers;
  for (int s = 0; s < f.source.object_count(); ++s)
    for (int t = 0; t < f.source.object_count(); ++t)
      for (const Morphism& m : hom_set(f.source, s, t)) fibers[f.image(m)].push_back(m);

  for (const auto& [u, pre_u] : fibers)
    for (const auto& [v, pre_v] : fibers) {
      if (u.target != v.source) continue;
      bool found = false;
      for (const Morphism& fu : pre_u) {
        for (const Morphism& fv : pre_v)
          if (fu.target == fv.source) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found)
        return {false, "images " + mor_str(f.target, u) + " then " + mor_str(f.target, v) +
                           " compose but no preimages do"};
    }
  return {true, ""};
}

CheckResult check_image_generates(const InducedFunctor& f) {
  std::set<Morphism> generated;
  for (int s = 0; s < f.source.object_count(); ++s)
    for (int t = 0; t < f.source.object_count(); ++t)
      for (const Morphism& m : hom_set(f.source, s, t)) generated.insert(f.image(m));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Morphism> snapshot(generated.begin(), generated.end());
    for (const Morphism& u : snapshot)
      for (const Morphism& v : snapshot) {
        if (u.target != v.source) continue;
        if (generated.insert(compose(f.target, u, v)).second) grew = true;
      }
  }

  long long total = f.target.morphism_count();
  if (static_cast<long long>(generated.size()) == total) return {true, ""};
  for (int s = 0; s < f.target.object_count(); ++s)
    for (int t = 0; t < f.target.object_count(); ++t)
      for (const Morphism& g : hom_set(f.target, s, t))
        if (!generated.count(g))
          return {false, mor_str(f.target, g) + " is not generated by the image"};
  return {false, "generated count mismatch"};
}

FunctorAnalysis analyze(const InducedFunctor& f) {
  return {check_surjective_on_objects(f), check_faithful(f),        check_full(f),
          check_essential_image_morphisms(f), check_reflects_composition(f),
          check_image_generates(f)};
}

}  // namespace taucat
