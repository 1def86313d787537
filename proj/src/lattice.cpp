#include "taucat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

namespace taucat {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBoundedExtremes: return "NoBoundedExtremes";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::NoMinimumLabel: return "NoMinimumLabel";
    case ErrorKind::TorsionTypeObstruction: return "TorsionTypeObstruction";
    case ErrorKind::CompositionFailure: return "CompositionFailure";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::ClassNotInterval: return "ClassNotInterval";
    case ErrorKind::MixedContraction: return "MixedContraction";
    case ErrorKind::CorrespondenceFailure: return "CorrespondenceFailure";
    case ErrorKind::ImageNotJoinInterval: return "ImageNotJoinInterval";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::TheoremMismatch: return "TheoremMismatch";
    case ErrorKind::RelationImageUnmatched: return "RelationImageUnmatched";
    case ErrorKind::SizeBound: return "SizeBound";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

bool Lattice::is_cover(int lower, int upper) const {
  const auto& ups = covers_up[lower];
  return std::binary_search(ups.begin(), ups.end(), upper);
}

std::string Lattice::element_name(int x) const {
  if (element_names && x >= 0 && x < static_cast<int>(element_names->size()))
    return (*element_names)[x];
  return std::to_string(x);
}

Lattice build_lattice(int size, std::vector<std::pair<int, int>> covers,
                      std::optional<std::vector<std::string>> element_names, std::string name) {
  if (size < 1) throw Error(ErrorKind::Schema, "size must be at least 1");
  if (element_names && static_cast<int>(element_names->size()) != size)
    throw Error(ErrorKind::Schema, "element_names length differs from size");

  Lattice l;
  l.size = size;
  l.name = std::move(name);
  l.element_names = std::move(element_names);
  l.covers_up.assign(size, {});
  l.covers_down.assign(size, {});

  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : covers) {
    if (x < 0 || x >= size || y < 0 || y >= size)
      throw Error(ErrorKind::Schema, "cover (" + std::to_string(x) + "," + std::to_string(y) +
                                         ") out of range");
    if (x == y)
      throw Error(ErrorKind::NotAPoset, "cover (" + std::to_string(x) + "," + std::to_string(x) +
                                            ") is a self-loop");
    if (!seen.insert({x, y}).second)
      throw Error(ErrorKind::RedundantCover,
                  "cover (" + std::to_string(x) + "," + std::to_string(y) + ") listed twice");
    l.covers_up[x].push_back(y);
    l.covers_down[y].push_back(x);
  }
  l.covers = std::move(covers);
  for (int x = 0; x < size; ++x) {
    std::sort(l.covers_up[x].begin(), l.covers_up[x].end());
    std::sort(l.covers_down[x].begin(), l.covers_down[x].end());
  }

  // Kahn topological sort; leftovers witness a cycle.
  std::vector<int> indeg(size, 0);
  for (auto [x, y] : l.covers) indeg[y]++;
  std::deque<int> ready;
  for (int x = 0; x < size; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  std::vector<int> topo;
  while (!ready.empty()) {
    int x = ready.front();
    ready.pop_front();
    topo.push_back(x);
    for (int y : l.covers_up[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (static_cast<int>(topo.size()) != size)
    throw Error(ErrorKind::NotAPoset, "cover list contains a directed cycle");
  std::vector<int> topo_pos(size);
  for (int i = 0; i < size; ++i) topo_pos[topo[i]] = i;

  l.up.assign(size, ElementSet(size));
  l.down.assign(size, ElementSet(size));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    l.up[x].set(x);
    for (int y : l.covers_up[x]) l.up[x] |= l.up[y];
  }
  for (int x : topo) {
    l.down[x].set(x);
    for (int y : l.covers_down[x]) l.down[x] |= l.down[y];
  }

  for (auto [x, y] : l.covers) {
    if ((l.up[x] & l.down[y]).count() > 2)
      throw Error(ErrorKind::RedundantCover, "cover (" + std::to_string(x) + "," +
                                                 std::to_string(y) +
                                                 ") is implied by a longer chain");
  }

  for (int x = 0; x < size; ++x) {
    if (l.up[x].count() == static_cast<size_t>(size)) l.bottom = x;
    if (l.down[x].count() == static_cast<size_t>(size)) l.top = x;
  }
  if (l.bottom < 0 || l.top < 0)
    throw Error(ErrorKind::NoBoundedExtremes,
                l.bottom < 0 ? "no minimum element" : "no maximum element");

  l.join_table.assign(static_cast<size_t>(size) * size, -1);
  l.meet_table.assign(static_cast<size_t>(size) * size, -1);
  ElementSet bounds(size);
  auto extremum = [&](int x, int y, const std::vector<ElementSet>& dir, bool low,
                      const char* which) {
    bounds = dir[x];
    bounds &= dir[y];
    // If the extremum exists it sits first (join) or last (meet) among the
    // common bounds in topological order, so one containment test decides.
    int best = -1;
    for (auto z = bounds.find_first(); z != ElementSet::npos; z = bounds.find_next(z))
      if (best < 0 || (topo_pos[z] < topo_pos[best]) == low) best = static_cast<int>(z);
    if (best >= 0 && bounds.is_subset_of(dir[best])) return best;
    throw Error(ErrorKind::NotALattice, "elements " + std::to_string(x) + " and " +
                                            std::to_string(y) + " have no " + which);
  };
  for (int x = 0; x < size; ++x)
    for (int y = x; y < size; ++y) {
      int j, m;
      if (l.up[x].test(y)) {
        j = y;
        m = x;
      } else if (l.up[y].test(x)) {
        j = x;
        m = y;
      } else {
        j = extremum(x, y, l.up, true, "join");
        m = extremum(x, y, l.down, false, "meet");
      }
      l.join_table[x * size + y] = l.join_table[y * size + x] = j;
      l.meet_table[x * size + y] = l.meet_table[y * size + x] = m;
    }
  return l;
}

int join(const Lattice& l, int x, int y) { return l.join(x, y); }
int meet(const Lattice& l, int x, int y) { return l.meet(x, y); }

std::vector<int> completely_join_irreducibles(const Lattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size; ++x)
    if (l.covers_down[x].size() == 1) out.push_back(x);
  return out;
}

int arrow_label(const Lattice& l, int x, int y) {
  if (!l.is_cover(x, y))
    throw Error(ErrorKind::NotACover,
                "(" + std::to_string(x) + "," + std::to_string(y) + ") is not a cover");
  ElementSet joiners(l.size);
  for (int t = 0; t < l.size; ++t)
    if (l.join(x, t) == y) joiners.set(t);
  for (auto t = joiners.find_first(); t != ElementSet::npos; t = joiners.find_next(t))
    if (joiners.is_subset_of(l.up[t])) {
      int label = static_cast<int>(t);
      assert(l.covers_down[label].size() == 1);
      assert(l.leq(l.covers_down[label][0], x));
      return label;
    }
  throw Error(ErrorKind::NoMinimumLabel, "cover (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") admits several minimal joiners");
}

int LabelledHasse::label_of(int lower, int upper) const {
  for (const auto& a : arrows_up[lower])
    if (a.upper == upper) return a.label;
  return -1;
}

LabelledHasse labelled_hasse(const Lattice& l) {
  LabelledHasse h;
  h.arrows.reserve(l.covers.size());
  h.arrows_up.assign(l.size, {});
  for (auto [x, y] : l.covers) h.arrows.push_back({x, y, arrow_label(l, x, y)});
  for (const auto& a : h.arrows) h.arrows_up[a.lower].push_back(a);
  for (auto& v : h.arrows_up)
    std::sort(v.begin(), v.end(),
              [](const LabelledArrow& a, const LabelledArrow& b) { return a.upper < b.upper; });
  return h;
}

SemidistributivityReport is_semidistributive(const Lattice& l) {
  SemidistributivityReport r;
  for (int u = 0; u < l.size; ++u)
    for (int x = 0; x < l.size; ++x)
      for (int y = x + 1; y < l.size; ++y) {
        if (l.join(u, x) == l.join(u, y) && l.join(u, x) != l.join(u, l.meet(x, y))) {
          r.semidistributive = false;
          r.join_side_failed = true;
          r.u = u, r.x = x, r.y = y;
          return r;
        }
        if (l.meet(u, x) == l.meet(u, y) && l.meet(u, x) != l.meet(u, l.join(x, y))) {
          r.semidistributive = false;
          r.join_side_failed = false;
          r.u = u, r.x = x, r.y = y;
          return r;
        }
      }
  return r;
}

namespace {

struct IsoSearch {
  const Lattice& a;
  const Lattice& b;
  std::vector<int> map;        // a element -> b element or -1
  std::vector<char> used;      // b side
  std::vector<long long> sig_a, sig_b;

  bool extend(int x) {
    if (x == a.size) return true;
    for (int y = 0; y < b.size; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (int x2 = 0; x2 < x && ok; ++x2) {
        int y2 = map[x2];
        ok = a.leq(x2, x) == b.leq(y2, y) && a.leq(x, x2) == b.leq(y, y2);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

long long element_signature(const Lattice& l, int x) {
  return ((long long)l.up[x].count() << 40) ^ ((long long)l.down[x].count() << 20) ^
         ((long long)l.covers_up[x].size() << 10) ^ (long long)l.covers_down[x].size();
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size != b.size || a.covers.size() != b.covers.size()) return std::nullopt;
  IsoSearch s{a, b, std::vector<int>(a.size, -1), std::vector<char>(b.size, 0), {}, {}};
  s.sig_a.resize(a.size);
  s.sig_b.resize(b.size);
  for (int x = 0; x < a.size; ++x) s.sig_a[x] = element_signature(a, x);
  for (int y = 0; y < b.size; ++y) s.sig_b[y] = element_signature(b, y);
  {
    auto sa = s.sig_a, sb = s.sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace taucat
