#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fqh/scalar.hpp"

namespace fqh {

/// Finite group as a validated Cayley table.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::size_t inv(std::size_t i) const { return inverse[i]; }
};

inline FiniteGroup make_group(std::vector<std::string> labels,
                              std::vector<std::vector<std::size_t>> table) {
  FiniteGroup g;
  g.order = labels.size();
  g.labels = std::move(labels);
  g.table = std::move(table);
  if (g.order == 0) throw StructuralError("group must be nonempty");
  if (g.table.size() != g.order)
    throw StructuralError("Cayley table row count mismatch");
  for (const auto& row : g.table) {
    if (row.size() != g.order)
      throw StructuralError("Cayley table column count mismatch");
    for (auto v : row)
      if (v >= g.order) throw StructuralError("Cayley table index out of range");
  }

  bool found_identity = false;
  for (std::size_t e = 0; e < g.order; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < g.order; ++i)
      if (g.table[e][i] != i || g.table[i][e] != i) {
        ok = false;
        break;
      }
    if (ok) {
      g.identity = e;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) throw StructuralError("Cayley table has no identity");

  g.inverse.assign(g.order, g.order);
  for (std::size_t i = 0; i < g.order; ++i) {
    for (std::size_t j = 0; j < g.order; ++j)
      if (g.table[i][j] == g.identity && g.table[j][i] == g.identity) {
        g.inverse[i] = j;
        break;
      }
    if (g.inverse[i] == g.order)
      throw StructuralError("Cayley table element without inverse: " +
                            g.labels[i]);
  }

  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      for (std::size_t k = 0; k < g.order; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw StructuralError("Cayley table is not associative at (" +
                                g.labels[i] + "," + g.labels[j] + "," +
                                g.labels[k] + ")");
  return g;
}

namespace detail {

inline std::string cycle_label(const std::vector<std::size_t>& perm) {
  // One-line permutation of {0..n-1}, rendered in 1-based cycle notation.
  std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || perm[s] == s) continue;
    std::string cyc = "(" + std::to_string(s + 1);
    seen[s] = true;
    for (std::size_t x = perm[s]; x != s; x = perm[x]) {
      seen[x] = true;
      cyc += " " + std::to_string(x + 1);
    }
    cyc += ")";
    out += cyc;
  }
  return out.empty() ? "e" : out;
}

inline FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& q : perms) labels.push_back(cycle_label(q));

  std::vector<std::vector<std::size_t>> table(
      perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index[comp];
    }
  return make_group(std::move(labels), std::move(table));
}

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return make_group(std::move(labels), std::move(table));
}

inline FiniteGroup dihedral_group(std::size_t n) {
  // Elements r^a s^b with b in {0,1}; index = a + n*b.
  auto idx = [n](std::size_t a, std::size_t b) { return a + n * b; };
  std::vector<std::string> labels(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[idx(a, 0)] = a == 0 ? "e" : (a == 1 ? "r" : "r" + std::to_string(a));
    labels[idx(a, 1)] =
        a == 0 ? "s" : (a == 1 ? "rs" : "r" + std::to_string(a) + "s");
  }
  std::vector<std::vector<std::size_t>> table(2 * n,
                                              std::vector<std::size_t>(2 * n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          // (r^a s^b)(r^c s^d) = r^(a±c) s^(b+d), sign per s r^c = r^-c s.
          std::size_t e = b == 0 ? (a + c) % n : (a + n - c % n) % n;
          table[idx(a, b)][idx(c, d)] = idx(e, (b + d) % 2);
        }
  return make_group(std::move(labels), std::move(table));
}

}  // namespace detail

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::size_t n = g.order * h.order;
  auto idx = [&](std::size_t a, std::size_t b) { return a * h.order + b; };
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < h.order; ++b) {
      labels[idx(a, b)] = "(" + g.labels[a] + "," + h.labels[b] + ")";
      for (std::size_t c = 0; c < g.order; ++c)
        for (std::size_t d = 0; d < h.order; ++d)
          table[idx(a, b)][idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
    }
  return make_group(std::move(labels), std::move(table));
}

/// Named presets: Zn, Sn (n <= 5), Dn, K4, and x-separated direct products
/// such as "Z2xZ2".
inline FiniteGroup preset(std::string_view name) {
  auto x = name.find('x');
  if (x != std::string_view::npos)
    return direct_product(preset(name.substr(0, x)), preset(name.substr(x + 1)));
  auto num = [&](std::size_t from) -> std::size_t {
    std::size_t v = 0;
    if (from >= name.size())
      throw StructuralError("unknown group preset: " + std::string(name));
    for (std::size_t i = from; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9')
        throw StructuralError("unknown group preset: " + std::string(name));
      v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return v;
  };
  if (name == "K4") return direct_product(detail::cyclic_group(2),
                                          detail::cyclic_group(2));
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t n = num(1);
    if (n == 0) throw StructuralError("unknown group preset: " + std::string(name));
    return detail::cyclic_group(n);
  }
  if (name.size() >= 2 && name[0] == 'S') {
    std::size_t n = num(1);
    if (n < 1 || n > 5)
      throw StructuralError("symmetric group preset supports n in 1..5");
    return detail::symmetric_group(n);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    std::size_t n = num(1);
    if (n < 1) throw StructuralError("unknown group preset: " + std::string(name));
    return detail::dihedral_group(n);
  }
  throw StructuralError("unknown group preset: " + std::string(name));
}

inline std::size_t element_by_label(const FiniteGroup& g,
                                    std::string_view label) {
  for (std::size_t i = 0; i < g.order; ++i)
    if (g.labels[i] == label) return i;
  throw StructuralError("no group element labelled '" + std::string(label) +
                        "'");
}

/// Subgroup as a sorted member index set of a parent group.
struct Subgroup {
  std::vector<std::size_t> members;

  bool contains(std::size_t x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  std::size_t size() const { return members.size(); }
};

inline Subgroup subgroup_generate(const FiniteGroup& g,
                                  const std::vector<std::size_t>& gens) {
  for (auto x : gens)
    if (x >= g.order) throw StructuralError("generator index out of range");
  std::set<std::size_t> closure{g.identity};
  std::vector<std::size_t> frontier{g.identity};
  for (auto x : gens)
    if (closure.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    std::vector<std::size_t> next{g.inv(x)};
    for (auto y : closure) {
      next.push_back(g.mul(x, y));
      next.push_back(g.mul(y, x));
    }
    for (auto z : next)
      if (closure.insert(z).second) frontier.push_back(z);
  }
  Subgroup h;
  h.members.assign(closure.begin(), closure.end());
  return h;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{{g.identity}};
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t p = 0; p < g.order; ++p)
    for (auto x : h.members)
      if (!h.contains(g.mul(g.mul(p, x), g.inv(p)))) return false;
  return true;
}

struct SetProducts {
  std::vector<std::size_t> hk;
  std::vector<std::size_t> kh;
  std::vector<std::size_t> intersection;
};

inline SetProducts set_products(const FiniteGroup& g, const Subgroup& h,
                                const Subgroup& k) {
  std::set<std::size_t> hk, kh;
  for (auto a : h.members)
    for (auto b : k.members) {
      hk.insert(g.mul(a, b));
      kh.insert(g.mul(b, a));
    }
  SetProducts r;
  r.hk.assign(hk.begin(), hk.end());
  r.kh.assign(kh.begin(), kh.end());
  std::set_intersection(h.members.begin(), h.members.end(), k.members.begin(),
                        k.members.end(), std::back_inserter(r.intersection));
  return r;
}

enum class CosetSide { left, right };

/// Partition of G into cosets gH (left) or Hg (right), each sorted, the
/// partition ordered by least member.
inline std::vector<std::vector<std::size_t>> cosets(const FiniteGroup& g,
                                                    const Subgroup& h,
                                                    CosetSide side) {
  std::vector<bool> seen(g.order, false);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t p = 0; p < g.order; ++p) {
    if (seen[p]) continue;
    std::set<std::size_t> part;
    for (auto x : h.members)
      part.insert(side == CosetSide::left ? g.mul(p, x) : g.mul(x, p));
    std::vector<std::size_t> v(part.begin(), part.end());
    for (auto q : v) seen[q] = true;
    parts.push_back(std::move(v));
  }
  return parts;
}

/// Partition of G into double cosets HgK, ordered by least member.
inline std::vector<std::vector<std::size_t>> double_cosets(
    const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<bool> seen(g.order, false);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t p = 0; p < g.order; ++p) {
    if (seen[p]) continue;
    std::set<std::size_t> part;
    for (auto a : h.members)
      for (auto b : k.members) part.insert(g.mul(g.mul(a, p), b));
    std::vector<std::size_t> v(part.begin(), part.end());
    for (auto q : v) seen[q] = true;
    parts.push_back(std::move(v));
  }
  return parts;
}

}  // namespace fqh
