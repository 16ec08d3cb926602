#include "exmod/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "exmod/abelian.hpp"

namespace exmod {

Cochain2 Cochain2::zero(const EquivariantModule& mod) {
  Cochain2 f;
  f.mod = mod;
  f.fQQ.assign(static_cast<size_t>(mod.Pi.order()) * mod.Pi.order(), 0);
  f.fQG.assign(static_cast<size_t>(mod.Pi.order()) * mod.gamma().order(), 0);
  return f;
}

Cochain1 Cochain1::zero(const EquivariantModule& mod) {
  return {mod, std::vector<int>(mod.Pi.order(), 0)};
}

Report validate_normalized(const Cochain2& f) {
  const int np = f.mod.Pi.order(), ng = f.mod.gamma().order();
  if (static_cast<int>(f.fQQ.size()) != np * np ||
      static_cast<int>(f.fQG.size()) != np * ng)
    return Report::structural("cochain", "cochain tables have wrong dimensions");
  for (int x = 0; x < np; ++x) {
    if (f.qq(x, 0) != 0)
      return Report::violation("normalization", "f(x,1) != 0", {x, 0});
    if (f.qq(0, x) != 0)
      return Report::violation("normalization", "f(1,y) != 0", {0, x});
    if (f.qg(x, 0) != 0)
      return Report::violation("normalization", "f(x,1_Γ) != 0", {x, 0});
  }
  return Report::pass();
}

Report is_cocycle2(const Cochain2& f) {
  if (auto r = validate_normalized(f); !r.ok()) return r;
  const auto& A = f.mod.A.group;
  const auto& Pi = f.mod.Pi;
  const auto& G = f.mod.gamma();
  const int np = Pi.order(), ng = G.order();

  for (int x = 0; x < np; ++x)
    for (int s = 0; s < ng; ++s)
      for (int t = 0; t < ng; ++t) {
        const int lhs = A.mul(f.mod.A.act(t, f.qg(x, s)),
                              f.qg(Pi.act(s, x), t));
        const int rhs = f.qg(x, G.mul(t, s));
        if (lhs != rhs)
          return Report::violation("cocycle-6",
                                   "τf(x,σ) + f(σx,τ) != f(x,τσ)", {x, s, t});
      }
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      for (int s = 0; s < ng; ++s) {
        const int lhs = A.mul(f.mod.A.act(s, f.qq(x, y)),
                              f.qg(Pi.group.mul(x, y), s));
        const int rhs =
            A.mul(A.mul(f.qg(x, s), f.mod.act(Pi.act(s, x), f.qg(y, s))),
                  f.qq(Pi.act(s, x), Pi.act(s, y)));
        if (lhs != rhs)
          return Report::violation("cocycle-7",
                                   "σf(x,y) identity fails", {x, y, s});
      }
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      for (int z = 0; z < np; ++z) {
        const int lhs = A.mul(f.mod.act(x, f.qq(y, z)),
                              f.qq(x, Pi.group.mul(y, z)));
        const int rhs = A.mul(f.qq(x, y), f.qq(Pi.group.mul(x, y), z));
        if (lhs != rhs)
          return Report::violation(
              "cocycle-8", "x·f(y,z) + f(x,yz) != f(x,y) + f(xy,z)", {x, y, z});
      }
  return Report::pass();
}

Cochain2 coboundary(const Cochain1& g) {
  const auto& mod = g.mod;
  const auto& A = mod.A.group;
  const auto& Pi = mod.Pi;
  if (g.g[0] != 0) throw PreconditionError("coboundary: g(1) != 0");
  Cochain2 f = Cochain2::zero(mod);
  for (int x = 0; x < Pi.order(); ++x)
    for (int y = 0; y < Pi.order(); ++y)
      f.fQQ[x * Pi.order() + y] =
          A.mul(A.mul(g.g[x], mod.act(x, g.g[y])),
                A.inv(g.g[Pi.group.mul(x, y)]));
  for (int x = 0; x < Pi.order(); ++x)
    for (int s = 0; s < mod.gamma().order(); ++s)
      f.fQG[x * mod.gamma().order() + s] =
          A.mul(mod.A.act(s, g.g[x]), A.inv(g.g[Pi.act(s, x)]));
  return f;
}

Cochain2 add(const Cochain2& a, const Cochain2& b) {
  if (!(a.mod == b.mod)) throw StructuralError("add: modules differ");
  Cochain2 out = a;
  for (size_t i = 0; i < out.fQQ.size(); ++i)
    out.fQQ[i] = a.mod.A.group.mul(a.fQQ[i], b.fQQ[i]);
  for (size_t i = 0; i < out.fQG.size(); ++i)
    out.fQG[i] = a.mod.A.group.mul(a.fQG[i], b.fQG[i]);
  return out;
}

Cochain2 neg(const Cochain2& a) {
  Cochain2 out = a;
  for (auto& v : out.fQQ) v = a.mod.A.group.inv(v);
  for (auto& v : out.fQG) v = a.mod.A.group.inv(v);
  return out;
}

namespace {

// Free slot layout shared by the brute and linear routes: fQQ slots with
// both arguments nonidentity in row-major order, then fQG slots with
// nonidentity grade. Every other table entry is pinned to zero by
// normalization.
struct SlotLayout {
  std::vector<std::pair<int, int>> qq;  // (x, y)
  std::vector<std::pair<int, int>> qg;  // (x, s)
  std::vector<int> qq_slot;             // dense maps, -1 when fixed zero
  std::vector<int> qg_slot;

  int total() const { return static_cast<int>(qq.size() + qg.size()); }
};

SlotLayout make_layout(const EquivariantModule& mod) {
  const int np = mod.Pi.order(), ng = mod.gamma().order();
  SlotLayout lay;
  lay.qq_slot.assign(np * np, -1);
  lay.qg_slot.assign(np * ng, -1);
  for (int x = 1; x < np; ++x)
    for (int y = 1; y < np; ++y) {
      lay.qq_slot[x * np + y] = static_cast<int>(lay.qq.size());
      lay.qq.emplace_back(x, y);
    }
  for (int x = 0; x < np; ++x)
    for (int s = 1; s < ng; ++s) {
      lay.qg_slot[x * ng + s] =
          static_cast<int>(lay.qq.size() + lay.qg.size());
      lay.qg.emplace_back(x, s);
    }
  return lay;
}

void check_enumeration_space(const EquivariantModule& mod, int slots,
                             const Limits& lim) {
  const long double space =
      std::pow(static_cast<long double>(mod.A.order()),
               static_cast<long double>(slots));
  if (space > static_cast<long double>(lim.max_search))
    throw ResourceError("cochain enumeration space |A|^slots = " +
                        std::to_string(static_cast<double>(space)) +
                        " exceeds budget " + std::to_string(lim.max_search));
}

// One identity instance, bucketed by the largest free slot it reads so the
// search can reject right after that slot is assigned.
struct Instance {
  int kind;  // 8, 6 or 7
  int a, b, c;
  int max_slot = -1;
};

std::vector<std::vector<Instance>> bucket_instances(
    const EquivariantModule& mod, const SlotLayout& lay) {
  const auto& Pi = mod.Pi;
  const auto& G = mod.gamma();
  const int np = Pi.order(), ng = G.order();
  std::vector<std::vector<Instance>> buckets(lay.total());

  auto push = [&](Instance ins, std::initializer_list<int> slots) {
    for (int s : slots) ins.max_slot = std::max(ins.max_slot, s);
    if (ins.max_slot >= 0) buckets[ins.max_slot].push_back(ins);
  };
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      for (int z = 0; z < np; ++z)
        push({8, x, y, z},
             {lay.qq_slot[y * np + z], lay.qq_slot[x * np + Pi.group.mul(y, z)],
              lay.qq_slot[x * np + y],
              lay.qq_slot[Pi.group.mul(x, y) * np + z]});
  for (int x = 0; x < np; ++x)
    for (int s = 0; s < ng; ++s)
      for (int t = 0; t < ng; ++t)
        push({6, x, s, t},
             {lay.qg_slot[x * ng + s], lay.qg_slot[Pi.act(s, x) * ng + t],
              lay.qg_slot[x * ng + G.mul(t, s)]});
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y)
      for (int s = 0; s < ng; ++s)
        push({7, x, y, s},
             {lay.qq_slot[x * np + y],
              lay.qg_slot[Pi.group.mul(x, y) * ng + s],
              lay.qg_slot[x * ng + s], lay.qg_slot[y * ng + s],
              lay.qq_slot[Pi.act(s, x) * np + Pi.act(s, y)]});
  return buckets;
}

bool instance_holds(const Cochain2& f, const Instance& ins) {
  const auto& A = f.mod.A.group;
  const auto& Pi = f.mod.Pi;
  switch (ins.kind) {
    case 8: {
      const int x = ins.a, y = ins.b, z = ins.c;
      return A.mul(f.mod.act(x, f.qq(y, z)), f.qq(x, Pi.group.mul(y, z))) ==
             A.mul(f.qq(x, y), f.qq(Pi.group.mul(x, y), z));
    }
    case 6: {
      const int x = ins.a, s = ins.b, t = ins.c;
      return A.mul(f.mod.A.act(t, f.qg(x, s)), f.qg(Pi.act(s, x), t)) ==
             f.qg(x, f.mod.gamma().mul(t, s));
    }
    default: {
      const int x = ins.a, y = ins.b, s = ins.c;
      return A.mul(f.mod.A.act(s, f.qq(x, y)),
                   f.qg(Pi.group.mul(x, y), s)) ==
             A.mul(A.mul(f.qg(x, s), f.mod.act(Pi.act(s, x), f.qg(y, s))),
                   f.qq(Pi.act(s, x), Pi.act(s, y)));
    }
  }
}

}  // namespace

std::vector<Cochain2> enumerate_z2(const EquivariantModule& mod,
                                   const Limits& lim) {
  const SlotLayout lay = make_layout(mod);
  check_enumeration_space(mod, lay.total(), lim);
  const auto buckets = bucket_instances(mod, lay);
  const int na = mod.A.order();
  const int np = mod.Pi.order(), ng = mod.gamma().order();

  std::vector<Cochain2> out;
  Cochain2 work = Cochain2::zero(mod);
  SearchBudget budget(lim, "enumerate_z2");

  auto set_slot = [&](int slot, int v) {
    if (slot < static_cast<int>(lay.qq.size())) {
      auto [x, y] = lay.qq[slot];
      work.fQQ[x * np + y] = v;
    } else {
      auto [x, s] = lay.qg[slot - lay.qq.size()];
      work.fQG[x * ng + s] = v;
    }
  };

  const int total = lay.total();
  if (total == 0) {
    out.push_back(work);
    return out;
  }
  std::vector<int> value(total, 0);
  int depth = 0;
  // iterative DFS in lexicographic slot/value order
  while (depth >= 0) {
    if (value[depth] == na) {
      set_slot(depth, 0);
      value[depth] = 0;
      --depth;
      if (depth >= 0) ++value[depth];
      continue;
    }
    budget.spend();
    set_slot(depth, value[depth]);
    bool ok = true;
    for (const auto& ins : buckets[depth])
      if (!instance_holds(work, ins)) {
        ok = false;
        break;
      }
    if (!ok) {
      ++value[depth];
      continue;
    }
    if (depth == total - 1) {
      out.push_back(work);
      ++value[depth];
    } else {
      ++depth;
    }
  }
  return out;
}

std::vector<Cochain2> enumerate_b2(const EquivariantModule& mod,
                                   const Limits& lim) {
  const int na = mod.A.order(), np = mod.Pi.order();
  const long double space = std::pow(static_cast<long double>(na),
                                     static_cast<long double>(np - 1));
  if (space > static_cast<long double>(lim.max_search))
    throw ResourceError("1-cochain space exceeds budget");

  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Cochain2> out;
  Cochain1 g = Cochain1::zero(mod);
  while (true) {
    Cochain2 d = coboundary(g);
    if (seen.emplace(d.fQQ, d.fQG).second) out.push_back(std::move(d));
    int i = np - 1;
    for (; i >= 1; --i) {
      if (++g.g[i] < na) break;
      g.g[i] = 0;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Cochain2& a, const Cochain2& b) {
    return a.key() < b.key();
  });
  return out;
}

H2Result h2(const EquivariantModule& mod, const Limits& lim) {
  H2Result res;
  res.mod = mod;
  res.z2 = enumerate_z2(mod, lim);
  res.b2 = enumerate_b2(mod, lim);
  res.z2_count = static_cast<long long>(res.z2.size());
  res.b2_count = static_cast<long long>(res.b2.size());

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> z2_index;
  for (size_t i = 0; i < res.z2.size(); ++i)
    z2_index[{res.z2[i].fQQ, res.z2[i].fQG}] = static_cast<int>(i);

  res.class_of.assign(res.z2.size(), -1);
  for (size_t i = 0; i < res.z2.size(); ++i) {
    if (res.class_of[i] >= 0) continue;
    const int cls = static_cast<int>(res.reps.size());
    res.reps.push_back(res.z2[i]);  // z2 is in lex order, so reps are minimal
    for (const auto& b : res.b2) {
      const Cochain2 shifted = add(res.z2[i], b);
      auto it = z2_index.find({shifted.fQQ, shifted.fQG});
      if (it == z2_index.end())
        throw Error("h2: coboundary shift left the cocycle set");
      res.class_of[it->second] = cls;
    }
  }
  res.h2_count = static_cast<long long>(res.reps.size());
  if (res.h2_count * res.b2_count != res.z2_count)
    throw Error("h2: |Z2| != |B2| * |H2|");
  return res;
}

int class_index_of(const H2Result& res, const Cochain2& f) {
  for (size_t i = 0; i < res.z2.size(); ++i)
    if (res.z2[i].fQQ == f.fQQ && res.z2[i].fQG == f.fQG)
      return res.class_of[i];
  throw PreconditionError("class_index_of: cochain is not a cocycle here");
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

// k x k integer matrix of an automorphism of A in basis coordinates.
Matrix action_matrix(const FiniteGroup& A, const AbelianBasis& basis,
                     const std::function<int(int)>& alpha) {
  const int k = basis.rank();
  Matrix m(k, std::vector<long long>(k, 0));
  for (int j = 0; j < k; ++j) {
    const auto& c = basis.coords[alpha(basis.gens[j])];
    for (int i = 0; i < k; ++i) m[i][j] = c[i];
  }
  return m;
}

// A term of a linear equation: coefficient matrix applied to one variable
// block. kind: 0 matrix, 1 identity, -1 negated identity, 2 negated matrix.
struct Term {
  int block;
  int kind;
  const Matrix* m = nullptr;
};

// Accumulates scalar rows (one per basis coordinate) of A-valued equations.
class RowBuilder {
 public:
  RowBuilder(int num_blocks, const std::vector<long long>& coord_mod)
      : k_(static_cast<int>(coord_mod.size())),
        num_vars_(num_blocks * static_cast<int>(coord_mod.size())),
        coord_mod_(coord_mod) {}

  void add_equation(const std::vector<Term>& terms) {
    for (int i = 0; i < k_; ++i) {
      std::vector<long long> row(num_vars_, 0);
      for (const auto& t : terms) {
        if (t.block < 0) continue;  // slot pinned to zero
        for (int j = 0; j < k_; ++j) {
          long long c = 0;
          switch (t.kind) {
            case 1: c = (i == j) ? 1 : 0; break;
            case -1: c = (i == j) ? -1 : 0; break;
            case 0: c = (*t.m)[i][j]; break;
            case 2: c = -(*t.m)[i][j]; break;
          }
          row[t.block * k_ + j] += c;
        }
      }
      bool nonzero = false;
      for (auto& v : row) {
        v = ((v % coord_mod_[i]) + coord_mod_[i]) % coord_mod_[i];
        if (v != 0) nonzero = true;
      }
      if (nonzero && uniq_.emplace(row, coord_mod_[i]).second) {
        rows_.push_back(std::move(row));
        row_mod_.push_back(coord_mod_[i]);
      }
    }
  }

  /// Order of the subgroup of the row space generated by variable columns.
  long long image_order() const {
    const int r = static_cast<int>(rows_.size());
    std::vector<std::vector<long long>> columns(
        num_vars_, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int v = 0; v < num_vars_; ++v) columns[v][i] = rows_[i][v];
    return subgroup_order(row_mod_, columns);
  }

  int num_vars() const { return num_vars_; }

 private:
  int k_;
  int num_vars_;
  std::vector<long long> coord_mod_;
  std::vector<std::vector<long long>> rows_;
  std::vector<long long> row_mod_;
  std::set<std::pair<std::vector<long long>, long long>> uniq_;
};

}  // namespace

LinearCounts h2_linear(const EquivariantModule& mod) {
  const auto& A = mod.A.group;
  const auto& Pi = mod.Pi;
  const auto& G = mod.gamma();
  const int np = Pi.order(), ng = G.order();
  const AbelianBasis basis = abelian_basis(A);
  const int k = basis.rank();
  const SlotLayout lay = make_layout(mod);

  std::vector<long long> coord_mod(basis.orders.begin(), basis.orders.end());

  std::vector<Matrix> mg(ng), mp(np);
  for (int s = 0; s < ng; ++s)
    mg[s] = action_matrix(A, basis, [&](int a) { return mod.A.act(s, a); });
  for (int x = 0; x < np; ++x)
    mp[x] = action_matrix(A, basis, [&](int a) { return mod.act(x, a); });

  auto qq = [&](int x, int y) { return lay.qq_slot[x * np + y]; };
  auto qg = [&](int x, int s) { return lay.qg_slot[x * ng + s]; };

  LinearCounts out;
  long long cochain_space = 1;
  for (int s = 0; s < lay.total(); ++s)
    for (int i = 0; i < k; ++i) cochain_space *= coord_mod[i];

  {  // Z² = kernel of the homogeneous identity system
    RowBuilder rb(lay.total(), coord_mod);
    for (int x = 0; x < np; ++x)
      for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
          rb.add_equation({{qg(x, s), 0, &mg[t]},
                           {qg(Pi.act(s, x), t), 1},
                           {qg(x, G.mul(t, s)), -1}});
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y)
        for (int s = 0; s < ng; ++s)
          rb.add_equation({{qq(x, y), 0, &mg[s]},
                           {qg(Pi.group.mul(x, y), s), 1},
                           {qg(x, s), -1},
                           {qg(y, s), 2, &mp[Pi.act(s, x)]},
                           {qq(Pi.act(s, x), Pi.act(s, y)), -1}});
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y)
        for (int z = 0; z < np; ++z)
          rb.add_equation({{qq(y, z), 0, &mp[x]},
                           {qq(x, Pi.group.mul(y, z)), 1},
                           {qq(x, y), -1},
                           {qq(Pi.group.mul(x, y), z), -1}});
    out.z2 = cochain_space / rb.image_order();
  }

  {  // B² = image of the coboundary map; one row block per free 2-slot
    RowBuilder rb(np - 1, coord_mod);
    auto gblock = [](int x) { return x - 1; };  // g(1) = 0 is not a variable
    for (auto [x, y] : lay.qq) {
      std::vector<Term> terms{{gblock(x), 1}, {gblock(y), 0, &mp[x]}};
      const int xy = Pi.group.mul(x, y);
      if (xy != 0) terms.push_back({gblock(xy), -1});
      rb.add_equation(terms);
    }
    for (auto [x, s] : lay.qg) {
      std::vector<Term> terms;
      if (x != 0) terms.push_back({gblock(x), 0, &mg[s]});
      const int sx = Pi.act(s, x);
      if (sx != 0) terms.push_back({gblock(sx), -1});
      rb.add_equation(terms);
    }
    out.b2 = rb.image_order();
  }

  if (out.b2 == 0 || out.z2 % out.b2 != 0)
    throw Error("h2_linear: |B2| does not divide |Z2|");
  out.h2 = out.z2 / out.b2;
  return out;
}

}  // namespace exmod
