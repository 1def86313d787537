#include "taucat/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

namespace taucat {

int GroupPresentation::x_index_of(int element) const {
  auto it = std::lower_bound(x_elements.begin(), x_elements.end(), element);
  if (it == x_elements.end() || *it != element) return -1;
  return static_cast<int>(it - x_elements.begin());
}

GroupPresentation picture_group(const Lattice& l, const LabelledHasse& h) {
  GroupPresentation p;
  p.x_elements = completely_join_irreducibles(l);
  p.num_g = l.size;
  for (int j : p.x_elements) p.generator_names.push_back("X_" + l.element_name(j));
  for (int t = 0; t < l.size; ++t) p.generator_names.push_back("g_" + l.element_name(t));

  for (const auto& a : h.arrows)
    p.relations.push_back({{p.g_gen(a.upper)}, {p.x_index_of(a.label), p.g_gen(a.lower)}});
  p.relations.push_back({{p.g_gen(l.bottom)}, {}});

  // Eliminate the g generators along a breadth-first spanning tree rooted at
  // the bottom, taking covers in index order. Tree arrows become definitions,
  // every other arrow survives as a relation between X words.
  p.element_words.assign(l.size, {});
  std::vector<char> reached(l.size, 0);
  std::vector<std::pair<int, int>> tree_arrows;
  reached[l.bottom] = 1;
  std::deque<int> queue{l.bottom};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& a : h.arrows_up[x])
      if (!reached[a.upper]) {
        reached[a.upper] = 1;
        p.element_words[a.upper] = p.element_words[x];
        p.element_words[a.upper].insert(p.element_words[a.upper].begin(), p.x_index_of(a.label));
        tree_arrows.emplace_back(x, a.upper);
        queue.push_back(a.upper);
      }
  }
  assert(static_cast<int>(tree_arrows.size()) == l.size - 1);

  for (const auto& a : h.arrows) {
    if (std::find(tree_arrows.begin(), tree_arrows.end(), std::make_pair(a.lower, a.upper)) !=
        tree_arrows.end())
      continue;
    std::vector<int> rhs = p.element_words[a.lower];
    rhs.insert(rhs.begin(), p.x_index_of(a.label));
    p.simplified_relations.push_back({p.element_words[a.upper], rhs});
  }
  return p;
}

std::vector<int> PictureGroupHom::map_word(const std::vector<int>& word) const {
  std::vector<int> out;
  for (int x : word)
    if (x_image[x] >= 0) out.push_back(x_image[x]);
  return out;
}

PictureGroupHom picture_group_hom(const Lattice& l, const LabelledHasse& h,
                                  const Congruence& phi) {
  PictureGroupHom hom;
  hom.source = picture_group(l, h);
  hom.target = picture_group(phi.quotient, phi.quotient_hasse);

  auto corr = label_correspondence(l, h, phi);
  hom.x_image.assign(hom.source.x_elements.size(), -1);
  for (size_t i = 0; i < hom.source.x_elements.size(); ++i) {
    int j = hom.source.x_elements[i];
    if (corr[j] >= 0) hom.x_image[i] = hom.target.x_index_of(corr[j]);
  }
  hom.g_image.assign(l.size, -1);
  for (int t = 0; t < l.size; ++t) hom.g_image[t] = phi.proj(t);

  int num_x_src = static_cast<int>(hom.source.x_elements.size());
  auto map_side = [&](const std::vector<int>& word) {
    std::vector<int> out;
    for (int g : word) {
      if (g < num_x_src) {
        if (hom.x_image[g] >= 0) out.push_back(hom.x_image[g]);
      } else {
        out.push_back(hom.target.g_gen(hom.g_image[g - num_x_src]));
      }
    }
    return out;
  };

  for (const auto& rel : hom.source.relations) {
    std::vector<int> lhs = map_side(rel.lhs), rhs = map_side(rel.rhs);
    if (lhs == rhs) continue;
    bool matched = false;
    for (const auto& trel : hom.target.relations)
      if (trel.lhs == lhs && trel.rhs == rhs) {
        matched = true;
        break;
      }
    if (!matched)
      throw Error(ErrorKind::RelationImageUnmatched,
                  "a defining relation maps to no relation of the quotient presentation");
  }
  return hom;
}

namespace {

using Letter = std::pair<int, int>;  // generator id, +1/-1

void push_reduced(std::vector<Letter>& word, Letter letter) {
  if (!word.empty() && word.back().first == letter.first && word.back().second == -letter.second)
    word.pop_back();
  else
    word.push_back(letter);
}

std::vector<Letter> relator(const GroupPresentation::Relation& r) {
  std::vector<Letter> word;
  for (int g : r.lhs) push_reduced(word, {g, 1});
  for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) push_reduced(word, {*it, -1});
  // Cyclically reduce so conjugate relators compare equal.
  while (word.size() >= 2 && word.front().first == word.back().first &&
         word.front().second == -word.back().second) {
    word.erase(word.begin());
    word.pop_back();
  }
  return word;
}

std::vector<Letter> inverted(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
  return out;
}

bool cyclic_equal(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t shift = 0; shift < b.size(); ++shift) {
    bool eq = true;
    for (size_t i = 0; i < a.size() && eq; ++i) eq = a[i] == b[(i + shift) % b.size()];
    if (eq) return true;
  }
  return false;
}

}  // namespace

bool relations_match(const GroupPresentation::Relation& a, const GroupPresentation::Relation& b) {
  auto ra = relator(a), rb = relator(b);
  return cyclic_equal(ra, rb) || cyclic_equal(ra, inverted(rb));
}

CellData cw_f_vector(const TccCategory& c) {
  CellData d;
  for (const auto& cls : c.objects) {
    if (cls.rank >= static_cast<int>(d.f_vector.size())) d.f_vector.resize(cls.rank + 1, 0);
    d.f_vector[cls.rank]++;
  }
  for (size_t k = 0; k < d.f_vector.size(); ++k)
    d.euler_characteristic += (k % 2 == 0 ? 1 : -1) * d.f_vector[k];
  return d;
}

NerveData nerve_export(const TccCategory& c, int max_dim) {
  NerveData n;
  n.max_dim = max_dim;
  n.simplex_counts.assign(max_dim + 1, 0);
  n.simplex_counts[0] = c.object_count();
  if (max_dim < 1) return n;

  n.chains.resize(max_dim);
  for (int s = 0; s < c.object_count(); ++s)
    for (int t = 0; t < c.object_count(); ++t)
      for (const Morphism& m : hom_set(c, s, t))
        if (!c.is_identity(m)) n.chains[0].push_back({m});
  n.simplex_counts[1] = static_cast<long long>(n.chains[0].size());

  for (int k = 2; k <= max_dim; ++k) {
    for (const auto& chain : n.chains[k - 2]) {
      int at = chain.back().target;
      for (int t = 0; t < c.object_count(); ++t)
        for (const Morphism& m : hom_set(c, at, t)) {
          if (c.is_identity(m)) continue;
          auto extended = chain;
          extended.push_back(m);
          n.chains[k - 1].push_back(std::move(extended));
        }
    }
    n.simplex_counts[k] = static_cast<long long>(n.chains[k - 1].size());
  }
  return n;
}

}  // namespace taucat
