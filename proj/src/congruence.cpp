#include "taucat/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace taucat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep the least element as representative
    parent[y] = x;
    return true;
  }
};

Congruence from_union_find(const Lattice& l, UnionFind& uf) {
  Congruence phi;
  std::vector<std::vector<int>> buckets(l.size);
  for (int x = 0; x < l.size; ++x) buckets[uf.find(x)].push_back(x);

  phi.class_of.assign(l.size, -1);
  for (int root = 0; root < l.size; ++root) {
    if (buckets[root].empty()) continue;
    int id = static_cast<int>(phi.classes.size());
    for (int x : buckets[root]) phi.class_of[x] = id;
    phi.classes.push_back(std::move(buckets[root]));
  }

  phi.pi_down.assign(l.size, -1);
  phi.pi_up.assign(l.size, -1);
  for (const auto& cls : phi.classes) {
    int lo = cls.front(), hi = cls.front();
    for (int x : cls) {
      lo = l.meet(lo, x);
      hi = l.join(hi, x);
    }
    // Congruence classes are intervals; anything else means the input
    // relation was not congruence-stable.
    ElementSet between = l.up[lo] & l.down[hi];
    if (between.count() != cls.size() || phi.class_of[lo] != phi.class_of[cls.front()] ||
        phi.class_of[hi] != phi.class_of[cls.front()])
      throw Error(ErrorKind::ClassNotInterval,
                  "class of element " + std::to_string(cls.front()) + " is not an interval");
    for (auto z = between.find_first(); z != ElementSet::npos; z = between.find_next(z))
      if (phi.class_of[z] != phi.class_of[lo])
        throw Error(ErrorKind::ClassNotInterval,
                    "class of element " + std::to_string(lo) + " is not an interval");
    for (int x : cls) {
      phi.pi_down[x] = lo;
      phi.pi_up[x] = hi;
    }
  }

  // Quotient order: [x] <= [y] iff pi_down(x) <= pi_down(y).
  int q = static_cast<int>(phi.classes.size());
  std::vector<int> rep(q);
  for (int c = 0; c < q; ++c) rep[c] = phi.pi_down[phi.classes[c].front()];
  std::vector<std::pair<int, int>> qcovers;
  for (int c1 = 0; c1 < q; ++c1)
    for (int c2 = 0; c2 < q; ++c2) {
      if (c1 == c2 || !l.leq(rep[c1], rep[c2])) continue;
      bool is_cover = true;
      for (int c3 = 0; c3 < q && is_cover; ++c3)
        if (c3 != c1 && c3 != c2 && l.leq(rep[c1], rep[c3]) && l.leq(rep[c3], rep[c2]))
          is_cover = false;
      if (is_cover) qcovers.push_back({c1, c2});
    }
  std::sort(qcovers.begin(), qcovers.end());

  std::optional<std::vector<std::string>> qnames;
  if (l.element_names) {
    qnames.emplace();
    for (int c = 0; c < q; ++c) {
      std::string s = "{";
      for (size_t i = 0; i < phi.classes[c].size(); ++i)
        s += (i ? "," : "") + l.element_name(phi.classes[c][i]);
      qnames->push_back(s + "}");
    }
  }
  phi.quotient = build_lattice(q, qcovers, std::move(qnames),
                               l.name.empty() ? std::string{} : l.name + "/phi");

  // proj must be a lattice homomorphism onto the quotient.
  for (int x = 0; x < l.size; ++x)
    for (int y = 0; y < l.size; ++y) {
      if (phi.class_of[l.join(x, y)] != phi.quotient.join(phi.class_of[x], phi.class_of[y]) ||
          phi.class_of[l.meet(x, y)] != phi.quotient.meet(phi.class_of[x], phi.class_of[y]))
        throw Error(ErrorKind::NotACongruence, "projection fails to preserve join or meet at (" +
                                                   std::to_string(x) + "," + std::to_string(y) +
                                                   ")");
    }
  phi.quotient_hasse = labelled_hasse(phi.quotient);
  return phi;
}

}  // namespace

Congruence congruence_from_contractions(const Lattice& l,
                                        const std::vector<std::pair<int, int>>& arrows) {
  for (auto [x, y] : arrows) {
    if (x < 0 || x >= l.size || y < 0 || y >= l.size || !l.is_cover(x, y))
      throw Error(ErrorKind::NotACover,
                  "(" + std::to_string(x) + "," + std::to_string(y) + ") is not a cover");
  }
  UnionFind uf(l.size);
  std::vector<std::pair<int, int>> work(arrows);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (int z = 0; z < l.size; ++z) {
      int jx = l.join(x, z), jy = l.join(y, z);
      if (uf.find(jx) != uf.find(jy)) work.push_back({jx, jy});
      int mx = l.meet(x, z), my = l.meet(y, z);
      if (uf.find(mx) != uf.find(my)) work.push_back({mx, my});
    }
  }
  return from_union_find(l, uf);
}

Congruence congruence_from_partition(const Lattice& l,
                                     const std::vector<std::vector<int>>& classes) {
  std::vector<int> cls_of(l.size, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) {
      if (x < 0 || x >= l.size)
        throw Error(ErrorKind::Schema, "element " + std::to_string(x) + " out of range");
      if (cls_of[x] != -1)
        throw Error(ErrorKind::Schema, "element " + std::to_string(x) + " listed twice");
      cls_of[x] = static_cast<int>(c);
    }
  for (int x = 0; x < l.size; ++x)
    if (cls_of[x] == -1)
      throw Error(ErrorKind::Schema, "element " + std::to_string(x) + " missing from partition");

  for (const auto& cls : classes)
    for (int x : cls) {
      int r = cls.front();
      if (x == r) continue;
      for (int z = 0; z < l.size; ++z) {
        if (cls_of[l.join(x, z)] != cls_of[l.join(r, z)])
          throw Error(ErrorKind::NotACongruence,
                      "witness: " + std::to_string(r) + " ≡ " + std::to_string(x) +
                          " but joining with " + std::to_string(z) + " separates (" +
                          std::to_string(l.join(r, z)) + " vs " + std::to_string(l.join(x, z)) +
                          ")");
        if (cls_of[l.meet(x, z)] != cls_of[l.meet(r, z)])
          throw Error(ErrorKind::NotACongruence,
                      "witness: " + std::to_string(r) + " ≡ " + std::to_string(x) +
                          " but meeting with " + std::to_string(z) + " separates (" +
                          std::to_string(l.meet(r, z)) + " vs " + std::to_string(l.meet(x, z)) +
                          ")");
      }
    }

  UnionFind uf(l.size);
  for (const auto& cls : classes)
    for (int x : cls) uf.unite(cls.front(), x);
  return from_union_find(l, uf);
}

int quotient_map(const Congruence& phi, int x) { return phi.proj(x); }

ContractionReport contracted_labels(const Lattice& l, const LabelledHasse& h,
                                    const Congruence& phi) {
  ContractionReport r;
  r.cover_contracted.resize(l.covers.size());
  std::vector<int> status(l.size, -1);  // per label: 1 contracted, 0 not
  for (size_t i = 0; i < h.arrows.size(); ++i) {
    const auto& a = h.arrows[i];
    int contracted = phi.contracts(a.lower, a.upper) ? 1 : 0;
    r.cover_contracted[i] = static_cast<char>(contracted);
    if (status[a.label] == -1)
      status[a.label] = contracted;
    else if (status[a.label] != contracted)
      throw Error(ErrorKind::MixedContraction,
                  "label " + std::to_string(a.label) + " is contracted on some arrows only");
  }
  for (int j = 0; j < l.size; ++j) {
    if (status[j] == 1) r.contracted_labels.push_back(j);
    if (status[j] == 0) r.uncontracted_labels.push_back(j);
  }
  return r;
}

std::vector<int> label_correspondence(const Lattice& l, const LabelledHasse& h,
                                      const Congruence& phi) {
  ContractionReport r = contracted_labels(l, h, phi);
  std::vector<int> corr(l.size, -1);
  auto qcjis = completely_join_irreducibles(phi.quotient);
  ElementSet unhit(phi.quotient.size);
  for (int j : qcjis) unhit.set(j);
  for (int j : r.uncontracted_labels) {
    int image = phi.proj(j);
    if (!unhit.test(image))
      throw Error(ErrorKind::CorrespondenceFailure,
                  "label " + std::to_string(j) + " maps to " + std::to_string(image) +
                      ", which is not a fresh quotient join-irreducible");
    unhit.reset(image);
    corr[j] = image;
  }
  if (unhit.any())
    throw Error(ErrorKind::CorrespondenceFailure,
                "quotient join-irreducible " + std::to_string(unhit.find_first()) +
                    " is not the image of any uncontracted label");
  return corr;
}

}  // namespace taucat
