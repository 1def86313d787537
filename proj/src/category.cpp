#include "taucat/category.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace taucat {

namespace {

std::string iv_str(Interval iv) {
  return "[" + std::to_string(iv.bottom) + "," + std::to_string(iv.top) + "]";
}

}  // namespace

long long TccCategory::morphism_count() const {
  long long total = 0;
  for (int s = 0; s < object_count(); ++s)
    for (int t = 0; t < object_count(); ++t)
      total += static_cast<long long>(hom_set(*this, s, t).size());
  return total;
}

std::pair<int, int> TccCategory::locate(Interval iv) const {
  auto it = member_of_.find(iv);
  if (it == member_of_.end())
    throw Error(ErrorKind::CompositionFailure, iv_str(iv) + " is not a join-interval");
  return it->second;
}

void TccCategory::build_transports() const {
  if (!transports_.empty()) return;
  transports_.resize(objects.size());
  for (size_t o = 0; o < objects.size(); ++o)
    transports_[o].resize(objects[o].representatives.size());
}

const std::vector<int>& TccCategory::transport(int obj, int member) const {
  build_transports();
  auto& slot = transports_[obj][member];
  if (slot.empty()) {
    const auto& cls = objects[obj];
    auto iso = label_preserving_iso(lat, hasse, cls.canonical(), cls.representatives[member]);
    assert(iso);  // guaranteed by the obstruction gate in class enumeration
    slot = std::move(*iso);
  }
  return slot;
}

std::vector<int> TccCategory::transport_inverse(int obj, int member) const {
  const auto& fwd = transport(obj, member);
  std::vector<int> inv(lat.size, -1);
  for (int x = 0; x < lat.size; ++x)
    if (fwd[x] >= 0) inv[fwd[x]] = x;
  return inv;
}

const std::vector<Morphism>& TccCategory::hom(int src, int tgt) const {
  if (!eager)
    throw Error(ErrorKind::SizeBound, "hom sets are not materialized in lazy mode");
  return homs_[src][tgt];
}

Morphism TccCategory::identity(int obj) const { return {obj, obj, objects[obj].canonical()}; }

bool TccCategory::is_identity(const Morphism& f) const {
  return f.source == f.target && f.inner == objects[f.source].canonical();
}

int TccCategory::hom_index(const Morphism& f) const {
  auto hs = hom_set(*this, f.source, f.target);
  auto it = std::lower_bound(hs.begin(), hs.end(), f);
  if (it == hs.end() || *it != f)
    throw Error(ErrorKind::CompositionFailure, "morphism not found in its hom set");
  return static_cast<int>(it - hs.begin());
}

const std::map<std::pair<Morphism, Morphism>, Morphism>& TccCategory::composition_table() const {
  if (!eager)
    throw Error(ErrorKind::SizeBound, "no composition table in lazy mode");
  return comp_table_;
}

std::vector<Morphism> hom_set(const TccCategory& c, int src, int tgt) {
  if (c.eager) return c.hom(src, tgt);
  std::vector<Morphism> out;
  const Interval outer = c.objects[src].canonical();
  for (const Interval& m : c.objects[tgt].representatives)
    if (c.lat.leq(outer.bottom, m.bottom) && c.lat.leq(m.top, outer.top))
      out.push_back({src, tgt, m});
  return out;
}

void TccCategory::materialize(bool verify) {
  const int n_obj = object_count();
  homs_.assign(n_obj, std::vector<std::vector<Morphism>>(n_obj));
  for (int s = 0; s < n_obj; ++s) {
    const Interval outer = objects[s].canonical();
    for (int t = 0; t < n_obj; ++t)
      for (const Interval& m : objects[t].representatives)
        if (lat.leq(outer.bottom, m.bottom) && lat.leq(m.top, outer.top))
          homs_[s][t].push_back({s, t, m});
  }
  for (int s = 0; s < n_obj; ++s)
    for (int t = 0; t < n_obj; ++t)
      for (const Morphism& f : homs_[s][t])
        for (int u = 0; u < n_obj; ++u)
          for (const Morphism& g : homs_[t][u]) comp_table_[{f, g}] = compose(*this, f, g);

  if (!verify) return;
  for (int s = 0; s < n_obj; ++s) {
    const Morphism id_s = identity(s);
    for (int t = 0; t < n_obj; ++t)
      for (const Morphism& f : homs_[s][t]) {
        if (comp_table_.at({id_s, f}) != f || comp_table_.at({f, identity(t)}) != f)
          throw Error(ErrorKind::CompositionFailure, "identity law failed");
      }
  }
  for (const auto& [fg, fg_comp] : comp_table_) {
    const auto& [f, g] = fg;
    for (int u = 0; u < n_obj; ++u)
      for (const Morphism& h : homs_[g.target][u])
        if (comp_table_.at({fg_comp, h}) != comp_table_.at({f, comp_table_.at({g, h})}))
          throw Error(ErrorKind::CompositionFailure, "associativity failed");
  }
}

TccCategory build_category(Lattice l, CategoryOptions opts) {
  TccCategory c;
  c.lat = std::move(l);
  c.hasse = labelled_hasse(c.lat);
  c.objects = enumerate_join_interval_classes(c.lat, c.hasse);

  long long total_members = 0;
  for (size_t o = 0; o < c.objects.size(); ++o) {
    total_members += static_cast<long long>(c.objects[o].representatives.size());
    for (size_t m = 0; m < c.objects[o].representatives.size(); ++m)
      c.member_of_[c.objects[o].representatives[m]] = {static_cast<int>(o), static_cast<int>(m)};
  }
  c.eager = total_members <= opts.max_eager_join_intervals;
  if (c.eager) c.materialize(opts.verify_axioms);
  return c;
}

Morphism compose(const TccCategory& c, const Morphism& f, const Morphism& g) {
  if (f.target != g.source)
    throw Error(ErrorKind::CompositionFailure,
                "target of the first factor is not the source of the second");
  auto [cls, member] = c.locate(f.inner);
  if (cls != f.target)
    throw Error(ErrorKind::CompositionFailure, "inner interval not in the target class");
  const auto& psi = c.transport(f.target, member);
  Interval image{psi[g.inner.bottom], psi[g.inner.top]};
  auto [img_cls, img_member] = c.locate(image);
  if (img_cls != g.target)
    throw Error(ErrorKind::CompositionFailure, "transported interval left its class");
  return {f.source, g.target, image};
}

int object_rank(const TccCategory& c, int obj) { return c.objects[obj].rank; }

bool is_irreducible(const TccCategory& c, const Morphism& f) {
  return !c.is_identity(f) && object_rank(c, f.target) == object_rank(c, f.source) - 1;
}

std::vector<std::vector<Morphism>> signed_sequences(const TccCategory& c, const Morphism& f) {
  std::vector<std::vector<Morphism>> out;
  if (c.is_identity(f)) {
    out.push_back({});
    return out;
  }
  for (int r = 0; r < c.object_count(); ++r) {
    if (object_rank(c, r) != object_rank(c, f.source) - 1) continue;
    for (const Morphism& h : hom_set(c, f.source, r)) {
      for (const Morphism& rest : hom_set(c, r, f.target)) {
        if (compose(c, h, rest) != f) continue;
        for (auto& tail : signed_sequences(c, rest)) {
          std::vector<Morphism> chain{h};
          chain.insert(chain.end(), tail.begin(), tail.end());
          out.push_back(std::move(chain));
        }
      }
    }
  }
  return out;
}

std::optional<int> full_object(const TccCategory& c) {
  Interval whole{c.lat.bottom, c.lat.top};
  if (!is_join_interval(c.lat, whole)) return std::nullopt;
  return c.locate(whole).first;
}

int zero_object(const TccCategory& c) {
  assert(c.objects[0].label_set.empty());
  return 0;
}

std::vector<std::vector<Morphism>> complete_signed_sequences(const TccCategory& c) {
  std::vector<std::vector<Morphism>> out;
  auto full = full_object(c);
  if (!full) return out;
  for (const Morphism& f : hom_set(c, *full, zero_object(c)))
    for (auto& chain : signed_sequences(c, f)) out.push_back(std::move(chain));
  return out;
}

namespace {

// Checks that the object bijection sigma extends to an isomorphism along the
// given per-morphism map.
bool verify_functor(const TccCategory& a, const TccCategory& b, const std::vector<int>& sigma,
                    const std::map<Morphism, Morphism>& mu) {
  for (int s = 0; s < a.object_count(); ++s)
    for (int t = 0; t < a.object_count(); ++t)
      if (hom_set(a, s, t).size() != hom_set(b, sigma[s], sigma[t]).size()) return false;
  for (int s = 0; s < a.object_count(); ++s)
    for (int t = 0; t < a.object_count(); ++t)
      for (const Morphism& f : hom_set(a, s, t))
        for (int u = 0; u < a.object_count(); ++u)
          for (const Morphism& g : hom_set(a, t, u))
            if (mu.at(compose(a, f, g)) != compose(b, mu.at(f), mu.at(g))) return false;
  return true;
}

std::optional<std::map<Morphism, Morphism>> induced_morphism_map(const TccCategory& a,
                                                                 const TccCategory& b,
                                                                 const std::vector<int>& elt_iso,
                                                                 std::vector<int>& sigma_out) {
  sigma_out.assign(a.object_count(), -1);
  for (int o = 0; o < a.object_count(); ++o) {
    Interval rep = a.objects[o].canonical();
    Interval img{elt_iso[rep.bottom], elt_iso[rep.top]};
    auto [cls, member] = b.locate(img);
    sigma_out[o] = cls;
  }
  std::vector<char> hit(b.object_count(), 0);
  for (int s : sigma_out) {
    if (hit[s]) return std::nullopt;
    hit[s] = 1;
  }
  std::map<Morphism, Morphism> mu;
  for (int s = 0; s < a.object_count(); ++s)
    for (int t = 0; t < a.object_count(); ++t)
      for (const Morphism& f : hom_set(a, s, t)) {
        Interval outer_img{elt_iso[a.objects[s].canonical().bottom],
                           elt_iso[a.objects[s].canonical().top]};
        Interval inner_img{elt_iso[f.inner.bottom], elt_iso[f.inner.top]};
        auto [ocls, omember] = b.locate(outer_img);
        if (ocls != sigma_out[s]) return std::nullopt;
        auto inv = b.transport_inverse(ocls, omember);
        Morphism m{sigma_out[s], sigma_out[t], {inv[inner_img.bottom], inv[inner_img.top]}};
        if (b.locate(m.inner).first != sigma_out[t]) return std::nullopt;
        mu[f] = m;
      }
  return mu;
}

struct CatIsoSearch {
  const TccCategory& a;
  const TccCategory& b;
  std::vector<int> sigma;
  std::vector<char> used;

  bool feasible(int o, int p) const {
    if (a.objects[o].rank != b.objects[p].rank) return false;
    if (a.objects[o].representatives.size() != b.objects[p].representatives.size()) return false;
    for (int q = 0; q < o; ++q) {
      if (hom_set(a, q, o).size() != hom_set(b, sigma[q], p).size()) return false;
      if (hom_set(a, o, q).size() != hom_set(b, p, sigma[q]).size()) return false;
    }
    return hom_set(a, o, o).size() == hom_set(b, p, p).size();
  }

  bool assign_objects(int o) {
    if (o == a.object_count()) return extend_morphisms();
    for (int p = 0; p < b.object_count(); ++p) {
      if (used[p] || !feasible(o, p)) continue;
      sigma[o] = p;
      used[p] = 1;
      if (assign_objects(o + 1)) return true;
      sigma[o] = -1;
      used[p] = 0;
    }
    return false;
  }

  std::vector<Morphism> all_a;
  std::map<Morphism, Morphism> mu;
  std::map<Morphism, char> taken;

  bool extend_morphisms() {
    all_a.clear();
    mu.clear();
    taken.clear();
    for (int s = 0; s < a.object_count(); ++s)
      for (int t = 0; t < a.object_count(); ++t)
        for (const Morphism& f : hom_set(a, s, t)) all_a.push_back(f);
    return assign_morphism(0) && verify_functor(a, b, sigma, mu);
  }

  bool consistent(const Morphism& f) {
    for (const auto& [g, mg] : mu) {
      if (g.target == f.source) {
        Morphism comp = compose(a, g, f);
        auto it = mu.find(comp);
        if (it != mu.end() && it->second != compose(b, mg, mu.at(f))) return false;
      }
      if (f.target == g.source) {
        Morphism comp = compose(a, f, g);
        auto it = mu.find(comp);
        if (it != mu.end() && it->second != compose(b, mu.at(f), mg)) return false;
      }
    }
    return true;
  }

  bool assign_morphism(size_t i) {
    if (i == all_a.size()) return true;
    const Morphism& f = all_a[i];
    if (a.is_identity(f)) {
      Morphism id_b = b.identity(sigma[f.source]);
      mu[f] = id_b;
      if (assign_morphism(i + 1)) return true;
      mu.erase(f);
      return false;
    }
    for (const Morphism& cand : hom_set(b, sigma[f.source], sigma[f.target])) {
      if (taken.count(cand)) continue;
      mu[f] = cand;
      if (consistent(f)) {
        taken[cand] = 1;
        if (assign_morphism(i + 1)) return true;
        taken.erase(cand);
      }
      mu.erase(f);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> categories_isomorphic(const TccCategory& a, const TccCategory& b) {
  if (a.object_count() != b.object_count()) return std::nullopt;
  {
    std::vector<int> ranks_a, ranks_b;
    for (const auto& o : a.objects) ranks_a.push_back(o.rank);
    for (const auto& o : b.objects) ranks_b.push_back(o.rank);
    std::sort(ranks_a.begin(), ranks_a.end());
    std::sort(ranks_b.begin(), ranks_b.end());
    if (ranks_a != ranks_b) return std::nullopt;
  }
  if (auto elt_iso = lattice_isomorphic(a.lat, b.lat)) {
    std::vector<int> sigma;
    if (auto mu = induced_morphism_map(a, b, *elt_iso, sigma))
      if (verify_functor(a, b, sigma, *mu)) return sigma;
  }
  CatIsoSearch search{a, b};
  search.sigma.assign(a.object_count(), -1);
  search.used.assign(b.object_count(), 0);
  if (search.assign_objects(0)) return search.sigma;
  return std::nullopt;
}

}  // namespace taucat
