#include "taucat/catalog.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

namespace taucat {

Lattice make_chain(int n) {
  if (n < 1 || n > 4096) throw Error(ErrorKind::SizeBound, "chain length must be in [1,4096]");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return build_lattice(n, covers, std::nullopt, "chain(" + std::to_string(n) + ")");
}

Lattice make_boolean(int n) {
  if (n < 0 || n > 10) throw Error(ErrorKind::SizeBound, "boolean rank must be in [0,10]");
  int size = 1 << n;
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < size; ++x)
    for (int b = 0; b < n; ++b)
      if (!(x & (1 << b))) covers.emplace_back(x, x | (1 << b));
  return build_lattice(size, covers, std::nullopt, "boolean(" + std::to_string(n) + ")");
}

Lattice make_product(const Lattice& a, const Lattice& b) {
  long long size = static_cast<long long>(a.size) * b.size;
  if (size > 4096)
    throw Error(ErrorKind::SizeBound, "product would have " + std::to_string(size) + " elements");
  auto idx = [&](int x, int y) { return x * b.size + y; };
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) {
      for (int x2 : a.covers_up[x]) covers.emplace_back(idx(x, y), idx(x2, y));
      for (int y2 : b.covers_up[y]) covers.emplace_back(idx(x, y), idx(x, y2));
    }
  std::optional<std::vector<std::string>> names;
  if (a.element_names || b.element_names) {
    names.emplace();
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < b.size; ++y)
        names->push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
  }
  return build_lattice(static_cast<int>(size), covers, names,
                       "product(" + a.name + "," + b.name + ")");
}

Lattice make_pentagon() {
  return build_lattice(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}},
                       std::vector<std::string>{"0", "Fac(2)", "Fac(1)", "Fac(1/2)", "mod A"},
                       "pentagon");
}

namespace {

// Binary trees serialized as "L" or "(left right)".
struct BTree {
  std::unique_ptr<BTree> l, r;
  bool leaf() const { return !l; }
};

std::string bt_str(const BTree& t) {
  return t.leaf() ? "L" : "(" + bt_str(*t.l) + " " + bt_str(*t.r) + ")";
}

std::unique_ptr<BTree> bt_parse(const std::string& s, size_t& pos) {
  auto t = std::make_unique<BTree>();
  if (s[pos] == 'L') {
    ++pos;
    return t;
  }
  ++pos;  // '('
  t->l = bt_parse(s, pos);
  ++pos;  // ' '
  t->r = bt_parse(s, pos);
  ++pos;  // ')'
  return t;
}

void all_trees(int n, std::vector<std::string>& out) {
  if (n == 0) {
    out = {"L"};
    return;
  }
  out.clear();
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> left, right;
    all_trees(k, left);
    all_trees(n - 1 - k, right);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back("(" + a + " " + b + ")");
  }
}

// Serializations reachable by one rotation ((A B) C) -> (A (B C)) anywhere.
void bt_rotations(const BTree& t, std::vector<std::string>& out) {
  if (t.leaf()) return;
  if (!t.l->leaf())
    out.push_back("(" + bt_str(*t.l->l) + " (" + bt_str(*t.l->r) + " " + bt_str(*t.r) + "))");
  std::vector<std::string> sub;
  bt_rotations(*t.l, sub);
  for (const auto& s : sub) out.push_back("(" + s + " " + bt_str(*t.r) + ")");
  sub.clear();
  bt_rotations(*t.r, sub);
  for (const auto& s : sub) out.push_back("(" + bt_str(*t.l) + " " + s + ")");
}

}  // namespace

Lattice make_tamari(int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::SizeBound, "tamari parameter must be in [1,8]");
  std::vector<std::string> trees;
  all_trees(n, trees);
  std::sort(trees.begin(), trees.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < trees.size(); ++i) index[trees[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < trees.size(); ++i) {
    size_t pos = 0;
    auto t = bt_parse(trees[i], pos);
    std::vector<std::string> next;
    bt_rotations(*t, next);
    for (const auto& s : next) covers.emplace_back(static_cast<int>(i), index.at(s));
  }
  return build_lattice(static_cast<int>(trees.size()), covers, trees,
                       "tamari(" + std::to_string(n) + ")");
}

Lattice make_weak_order(int n) {
  if (n < 1 || n > 6) throw Error(ErrorKind::SizeBound, "weak order parameter must be in [1,6]");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> names;
  for (size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    std::string s;
    for (int v : perms[i]) s += std::to_string(v);
    names.push_back(s);
  }

  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < perms.size(); ++i)
    for (int k = 0; k + 1 < n; ++k)
      if (perms[i][k] < perms[i][k + 1]) {
        auto q = perms[i];
        std::swap(q[k], q[k + 1]);
        covers.emplace_back(static_cast<int>(i), index.at(q));
      }
  return build_lattice(static_cast<int>(perms.size()), covers, names,
                       "weak_order(" + std::to_string(n) + ")");
}

Lattice make_m3() {
  return build_lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, std::nullopt, "m3");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"chain(n)", "total order on n elements", true},
      {"boolean(n)", "subsets of an n-element set", true},
      {"pentagon", "five-element non-modular lattice", true},
      {"tamari(n)", "rotation order on binary trees with n internal nodes, n <= 8", true},
      {"weak_order(n)", "right weak order on permutations of n letters, n <= 6", true},
      {"product(a,b)", "componentwise order on pairs", true},
      {"m3", "five-element modular diamond, fails semidistributivity", false},
  };
  return entries;
}

namespace {

int parse_int_arg(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Schema, "bad catalog parameter '" + s + "'");
  }
}

}  // namespace

Lattice catalog_make(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (c != ' ') name += c;

  if (name == "pentagon") return make_pentagon();
  if (name == "m3") return make_m3();

  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string head = name.substr(0, open);
    std::string args = name.substr(open + 1, name.size() - open - 2);
    if (head == "chain") return make_chain(parse_int_arg(args));
    if (head == "boolean") return make_boolean(parse_int_arg(args));
    if (head == "tamari") return make_tamari(parse_int_arg(args));
    if (head == "weak_order") return make_weak_order(parse_int_arg(args));
    if (head == "product") {
      int depth = 0;
      size_t comma = std::string::npos;
      for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == '(') depth++;
        if (args[i] == ')') depth--;
        if (args[i] == ',' && depth == 0) {
          comma = i;
          break;
        }
      }
      if (comma == std::string::npos)
        throw Error(ErrorKind::Schema, "product needs two comma-separated factors");
      Lattice a = catalog_make(args.substr(0, comma));
      Lattice b = catalog_make(args.substr(comma + 1));
      return make_product(a, b);
    }
  }
  throw Error(ErrorKind::Schema, "unknown catalog lattice '" + raw + "'");
}

}  // namespace taucat
