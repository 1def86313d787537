#include "taucat/interval.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taucat {

std::vector<int> interval_elements(const Lattice& l, Interval iv) {
  std::vector<int> out;
  ElementSet between = l.up[iv.bottom];
  between &= l.down[iv.top];
  for (auto z = between.find_first(); z != ElementSet::npos; z = between.find_next(z))
    out.push_back(static_cast<int>(z));
  return out;
}

std::vector<int> interval_atoms(const Lattice& l, Interval iv) {
  std::vector<int> out;
  for (int y : l.covers_up[iv.bottom])
    if (l.leq(y, iv.top)) out.push_back(y);
  return out;
}

bool is_join_interval(const Lattice& l, Interval iv) {
  if (!l.leq(iv.bottom, iv.top)) return false;
  int j = iv.bottom;
  for (int a : interval_atoms(l, iv)) j = l.join(j, a);
  return j == iv.top;
}

std::vector<int> interval_label_set(const Lattice& l, const LabelledHasse& h, Interval iv) {
  std::vector<int> labels;
  ElementSet between = l.up[iv.bottom];
  between &= l.down[iv.top];
  for (auto z = between.find_first(); z != ElementSet::npos; z = between.find_next(z))
    for (const auto& a : h.arrows_up[z])
      if (between.test(a.upper)) labels.push_back(a.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::optional<std::vector<int>> label_preserving_iso(const Lattice& l, const LabelledHasse& h,
                                                     Interval iv1, Interval iv2) {
  auto elems1 = interval_elements(l, iv1);
  auto elems2 = interval_elements(l, iv2);
  if (elems1.size() != elems2.size()) return std::nullopt;

  ElementSet in1 = l.up[iv1.bottom] & l.down[iv1.top];
  ElementSet in2 = l.up[iv2.bottom] & l.down[iv2.top];
  std::vector<int> map(l.size, -1), inv(l.size, -1);
  map[iv1.bottom] = iv2.bottom;
  inv[iv2.bottom] = iv1.bottom;

  // Propagate upward: the image of a cover is the equally-labelled cover of
  // the image, which is unique when it exists.
  std::vector<int> queue{iv1.bottom};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (const auto& a : h.arrows_up[x]) {
      if (!in1.test(a.upper)) continue;
      int y2 = -1;
      for (const auto& b : h.arrows_up[map[x]])
        if (b.label == a.label && in2.test(b.upper)) {
          y2 = b.upper;
          break;
        }
      if (y2 < 0) return std::nullopt;
      if (map[a.upper] == -1) {
        if (inv[y2] != -1) return std::nullopt;
        map[a.upper] = y2;
        inv[y2] = a.upper;
        queue.push_back(a.upper);
      } else if (map[a.upper] != y2) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != elems1.size()) return std::nullopt;

  // The forced map must be an order isomorphism matching every label.
  for (int x : elems1)
    for (int y : elems1)
      if (l.leq(x, y) != l.leq(map[x], map[y])) return std::nullopt;
  for (int x : elems1)
    for (const auto& a : h.arrows_up[x])
      if (in1.test(a.upper) && h.label_of(map[x], map[a.upper]) != a.label) return std::nullopt;
  return map;
}

std::vector<Interval> enumerate_intervals(const Lattice& l) {
  std::vector<Interval> out;
  for (int x = 0; x < l.size; ++x)
    for (auto y = l.up[x].find_first(); y != ElementSet::npos; y = l.up[x].find_next(y))
      out.push_back({x, static_cast<int>(y)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JoinIntervalClass> enumerate_join_interval_classes(const Lattice& l,
                                                               const LabelledHasse& h) {
  std::map<std::vector<int>, std::vector<Interval>> groups;
  for (Interval iv : enumerate_intervals(l))
    if (is_join_interval(l, iv)) groups[interval_label_set(l, h, iv)].push_back(iv);

  std::vector<JoinIntervalClass> classes;
  for (auto& [labels, members] : groups) {
    std::sort(members.begin(), members.end());
    const Interval rep = members.front();
    for (size_t k = 1; k < members.size(); ++k)
      if (!label_preserving_iso(l, h, rep, members[k])) {
        std::ostringstream msg;
        msg << "join-intervals [" << rep.bottom << "," << rep.top << "] and ["
            << members[k].bottom << "," << members[k].top
            << "] share a label set but admit no label-preserving isomorphism";
        throw Error(ErrorKind::TorsionTypeObstruction, msg.str());
      }
    JoinIntervalClass cls;
    cls.representatives = std::move(members);
    cls.label_set = labels;
    cls.rank = static_cast<int>(interval_atoms(l, rep).size());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const JoinIntervalClass& a, const JoinIntervalClass& b) {
    return std::pair(a.rank, a.canonical()) < std::pair(b.rank, b.canonical());
  });
  return classes;
}

}  // namespace taucat
