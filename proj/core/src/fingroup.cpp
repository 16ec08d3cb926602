#include "exmod/fingroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace exmod {

FiniteGroup::FiniteGroup() : order_(1), mul_{0}, inv_{0} {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw StructuralError("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw StructuralError("group table row " + std::to_string(a) +
                            " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = mul[a][b];
      if (v < 0 || v >= n)
        throw StructuralError("group table entry out of range at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              ")");
      g.mul_[a * n + b] = v;
    }
  }
  g.derive_inverses();
  return g;
}

void FiniteGroup::derive_inverses() {
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(t);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  return from_table(t);
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // elements r^i s^j, index i + n*j; s r s = r^-1
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          const int kk = j ? (n - k) % n : k;
          t[i + n * j][k + n * l] = (i + kk) % n + n * ((j + l) % 2);
        }
  return from_table(t);
}

FiniteGroup FiniteGroup::quaternion8() {
  // a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; elements a^i b^j, index i + 4*j
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = (i + (j ? (4 - k) % 4 : k)) % 4;
          int jj = j + l;
          if (jj == 2) {
            ii = (ii + 2) % 4;
            jj = 0;
          }
          t[i + 4 * j][k + 4 * l] = ii + 4 * jj;
        }
  return from_table(t);
}

FiniteGroup FiniteGroup::dicyclic3() {
  // a^6 = 1, b^2 = a^3, b a b^-1 = a^-1; elements a^i b^j, index i + 6*j
  std::vector<std::vector<int>> t(12, std::vector<int>(12));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = (i + (j ? (6 - k) % 6 : k)) % 6;
          int jj = j + l;
          if (jj == 2) {
            ii = (ii + 3) % 6;
            jj = 0;
          }
          t[i + 6 * j][k + 6 * l] = ii + 6 * jj;
        }
  return from_table(t);
}

FiniteGroup FiniteGroup::from_permutations(std::vector<std::vector<int>> gens) {
  if (gens.empty()) throw StructuralError("no permutation generators");
  const size_t deg = gens[0].size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& gen : gens) {
      if (gen.size() != deg) throw StructuralError("mixed permutation degrees");
      std::vector<int> prod(deg);
      for (size_t i = 0; i < deg; ++i) prod[i] = cur[gen[i]];
      if (seen.insert(prod).second) todo.push_back(prod);
    }
  }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  // set iteration is lexicographic, so the identity is element 0
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(deg);
      for (size_t i = 0; i < deg; ++i) prod[i] = elems[a][elems[b][i]];
      t[a][b] = index.at(prod);
    }
  return from_table(t);
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n <= 1) return trivial();
  if (n > 5) throw PreconditionError("symmetric(n) supports n <= 5");
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return from_permutations({transposition, cycle});
}

FiniteGroup FiniteGroup::alternating4() {
  return from_permutations({{1, 0, 3, 2}, {0, 2, 3, 1}});
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::order_of(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> out(order_);
  for (int a = 0; a < order_; ++a) out[a] = order_of(a);
  return out;
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return {g, g, std::move(m)};
}

GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst) {
  return {src, dst, std::vector<int>(src.order(), 0)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.dst == outer.src))
    throw StructuralError("compose: hom codomain/domain mismatch");
  std::vector<int> m(inner.src.order());
  for (int x = 0; x < inner.src.order(); ++x) m[x] = outer.apply(inner.apply(x));
  return {inner.src, outer.dst, std::move(m)};
}

Report validate_group(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a)
      return Report::violation("identity", "1*x != x at x=" + std::to_string(a),
                               {a});
    if (g.mul(a, 0) != a)
      return Report::violation("identity", "x*1 != x at x=" + std::to_string(a),
                               {a});
  }
  // cancellation: each row and column must be a permutation, and every
  // element needs a two-sided inverse
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[g.mul(a, b)]++)
        return Report::violation(
            "inverse", "row of " + std::to_string(a) + " is not a bijection",
            {a});
      if (seen_col[g.mul(b, a)]++)
        return Report::violation(
            "inverse", "column of " + std::to_string(a) + " is not a bijection",
            {a});
    }
    if (g.inv(a) < 0)
      return Report::violation(
          "inverse", "no two-sided inverse for " + std::to_string(a), {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return Report::violation(
              "assoc",
              "(ab)c != a(bc) at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")",
              {a, b, c});
  return Report::pass();
}

Report validate_hom(const GroupHom& f) {
  if (static_cast<int>(f.map.size()) != f.src.order())
    return Report::structural("hom", "image table has wrong length");
  for (int x : f.map)
    if (x < 0 || x >= f.dst.order())
      return Report::structural("hom", "image table entry out of range");
  for (int x = 0; x < f.src.order(); ++x)
    for (int y = 0; y < f.src.order(); ++y)
      if (f.apply(f.src.mul(x, y)) != f.dst.mul(f.apply(x), f.apply(y)))
        return Report::violation(
            "hom", "f(xy) != f(x)f(y) at (" + std::to_string(x) + "," +
                       std::to_string(y) + ")",
            {x, y});
  return Report::pass();
}

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> stack;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  std::vector<int> members;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    members.push_back(x);
    for (int y = 0; y < g.order(); ++y)
      if (in[y]) {
        add(g.mul(x, y));
        add(g.mul(y, x));
      }
    add(g.inv(x));
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.order(), 0);
  for (int x : elems) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int x : elems)
    for (int y : elems)
      if (!in[g.mul(x, y)]) return false;
  for (int x : elems)
    if (!in[g.inv(x)]) return false;
  return true;
}

std::optional<std::array<int, 2>> normality_witness(
    const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.order(), 0);
  for (int x : elems) in[x] = 1;
  for (int x = 0; x < g.order(); ++x)
    for (int n : elems)
      if (!in[g.mul(g.mul(x, n), g.inv(x))]) return std::array<int, 2>{x, n};
  return std::nullopt;
}

std::vector<int> kernel(const GroupHom& f) {
  std::vector<int> out;
  for (int x = 0; x < f.src.order(); ++x)
    if (f.apply(x) == 0) out.push_back(x);
  return out;
}

std::vector<int> image(const GroupHom& f) {
  std::vector<char> in(f.dst.order(), 0);
  for (int x = 0; x < f.src.order(); ++x) in[f.apply(x)] = 1;
  std::vector<int> out;
  for (int y = 0; y < f.dst.order(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

Subgroup subgroup(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  if (!is_subgroup(g, elems))
    throw PreconditionError("subgroup: element set is not a subgroup");
  const int k = static_cast<int>(elems.size());
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < k; ++i) back[elems[i]] = i;
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = back[g.mul(elems[i], elems[j])];
  return {FiniteGroup::from_table(t), std::move(elems), std::move(back)};
}

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  std::vector<int> n = normal;
  std::sort(n.begin(), n.end());
  if (!is_subgroup(g, n))
    throw PreconditionError("quotient: N is not a subgroup");
  if (auto w = normality_witness(g, n))
    throw PreconditionError("quotient: N is not normal, witness x=" +
                            std::to_string((*w)[0]) + " n=" +
                            std::to_string((*w)[1]));
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);  // x is minimal in its coset by scan order
    for (int e : n) coset_of[g.mul(x, e)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
  Quotient q;
  q.group = FiniteGroup::from_table(t);
  q.reps = std::move(reps);
  q.proj = {g, q.group, std::move(coset_of)};
  return q;
}

GenDecomposition generator_decomposition(const FiniteGroup& g) {
  GenDecomposition d;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  int covered_count = 1;
  while (covered_count < g.order()) {
    int e = 0;
    while (covered[e]) ++e;
    d.gens.push_back(e);
    for (int x : closure(g, d.gens))
      if (!covered[x]) {
        covered[x] = 1;
        ++covered_count;
      }
  }
  // BFS factorization over the generating sequence
  d.parent.assign(g.order(), -1);
  d.via_gen.assign(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  d.bfs_order.push_back(0);
  for (size_t head = 0; head < d.bfs_order.size(); ++head) {
    const int x = d.bfs_order[head];
    for (size_t gi = 0; gi < d.gens.size(); ++gi) {
      const int y = g.mul(x, d.gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        d.parent[y] = x;
        d.via_gen[y] = static_cast<int>(gi);
        d.bfs_order.push_back(y);
      }
    }
  }
  return d;
}

namespace {

// Backtracking over generator images; extends to a full map via the BFS
// factorization and checks the hom law, optionally requiring bijectivity.
void map_search(const FiniteGroup& src, const FiniteGroup& dst,
                bool require_bijective, const Limits& lim,
                const std::function<bool(const std::vector<int>&)>& emit) {
  if (require_bijective && src.order() != dst.order()) return;
  const auto dec = generator_decomposition(src);
  const auto src_orders = src.element_orders();
  const auto dst_orders = dst.element_orders();
  SearchBudget budget(lim, "hom search");

  std::vector<int> gen_img(dec.gens.size(), -1);
  std::vector<int> full(src.order(), -1);
  bool stop = false;

  std::function<void(size_t)> rec = [&](size_t k) {
    if (stop) return;
    budget.spend();
    if (k == dec.gens.size()) {
      // complete the map along the BFS tree
      full.assign(src.order(), -1);
      full[0] = 0;
      for (int x : dec.bfs_order) {
        if (x == 0) continue;
        full[x] = dst.mul(full[dec.parent[x]], gen_img[dec.via_gen[x]]);
      }
      for (int x = 0; x < src.order(); ++x)
        for (int y = 0; y < src.order(); ++y)
          if (full[src.mul(x, y)] != dst.mul(full[x], full[y])) return;
      if (require_bijective) {
        std::vector<char> hit(dst.order(), 0);
        for (int v : full) {
          if (hit[v]) return;
          hit[v] = 1;
        }
      }
      if (!emit(full)) stop = true;
      return;
    }
    const int g_ord = src_orders[dec.gens[k]];
    for (int img = 0; img < dst.order() && !stop; ++img) {
      if (g_ord % dst_orders[img] != 0) continue;
      if (require_bijective && g_ord != dst_orders[img]) continue;
      gen_img[k] = img;
      rec(k + 1);
    }
    gen_img[k] = -1;
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                const Limits& lim) {
  std::vector<std::vector<int>> out;
  map_search(src, dst, false, lim, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& src,
                                               const FiniteGroup& dst,
                                               const Limits& lim) {
  std::vector<std::vector<int>> out;
  map_search(src, dst, true, lim, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& src,
                                                 const FiniteGroup& dst,
                                                 const Limits& lim) {
  std::optional<std::vector<int>> found;
  map_search(src, dst, true, lim, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const Limits& lim) {
  return find_isomorphism(a, b, lim).has_value();
}

}  // namespace exmod
