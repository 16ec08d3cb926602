#include "exmod/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace exmod {

int AbelianBasis::element_of(const std::vector<int>& c,
                             const FiniteGroup& g) const {
  int e = 0;
  for (size_t i = 0; i < gens.size(); ++i)
    e = g.mul(e, g.pow(gens[i], c[i]));
  return e;
}

namespace {

// Splits off a maximal-order cyclic factor and lifts a basis of the
// quotient; each lift is adjusted inside the split-off factor so its order
// matches its image, which makes the spans independent.
std::vector<std::pair<int, int>> basis_rec(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  int x = 1, m = 1;
  for (int e = 1; e < g.order(); ++e)
    if (int o = g.order_of(e); o > m) {
      m = o;
      x = e;
    }
  if (m == g.order()) return {{x, m}};

  const Quotient q = quotient(g, closure(g, {x}));
  std::vector<std::pair<int, int>> out{{x, m}};
  for (auto [ybar, f] : basis_rec(q.group)) {
    const int y0 = q.reps[ybar];
    int lift = -1;
    for (int t = 0; t < m && lift < 0; ++t) {
      const int y = g.mul(y0, g.inv(g.pow(x, t)));
      if (g.pow(y, f) == 0) lift = y;
    }
    if (lift < 0) throw Error("abelian_basis: lift adjustment failed");
    out.emplace_back(lift, f);
  }
  return out;
}

}  // namespace

AbelianBasis abelian_basis(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw PreconditionError("abelian_basis: group is not abelian");
  AbelianBasis b;
  for (auto [e, o] : basis_rec(g)) {
    b.gens.push_back(e);
    b.orders.push_back(o);
  }
  // tabulate coordinates and confirm the spans really form a direct sum
  b.coords.assign(g.order(), {});
  const int k = b.rank();
  std::vector<int> tuple(k, 0);
  long long total = 1;
  for (int o : b.orders) total *= o;
  if (total != g.order()) throw Error("abelian_basis: rank defect");
  for (long long it = 0; it < total; ++it) {
    const int e = b.element_of(tuple, g);
    if (!b.coords[e].empty() && !(tuple == b.coords[e] && k == 0))
      throw Error("abelian_basis: coordinates collide");
    if (b.coords[e].empty()) b.coords[e] = tuple;
    if (k == 0) break;
    for (int i = k - 1; i >= 0; --i) {
      if (++tuple[i] < b.orders[i]) break;
      tuple[i] = 0;
    }
  }
  for (int e = 0; e < g.order(); ++e)
    if (static_cast<int>(b.coords[e].size()) != k)
      throw Error("abelian_basis: element not covered");
  return b;
}

long long subgroup_order(const std::vector<long long>& moduli,
                         const std::vector<std::vector<long long>>& columns) {
  const int r = static_cast<int>(moduli.size());
  // working columns; relation columns m_i e_i are handled implicitly at
  // their own row, with the residual combination pushed back into the set
  std::vector<std::vector<long long>> w;
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != r)
      throw StructuralError("subgroup_order: column length mismatch");
    auto v = c;
    for (int i = 0; i < r; ++i) v[i] = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
    w.push_back(std::move(v));
  }
  auto reduce_below = [&](std::vector<long long>& col, int from) {
    for (int i = from; i < r; ++i)
      col[i] = ((col[i] % moduli[i]) + moduli[i]) % moduli[i];
  };

  long long image = 1;
  size_t front = 0;
  for (int i = 0; i < r; ++i) {
    // gcd-combine the row-i entries of all working columns into one
    size_t c = front;
    while (c < w.size() && w[c][i] == 0) ++c;
    if (c < w.size() && c != front) std::swap(w[c], w[front]);
    if (c < w.size()) {
      for (size_t j = front + 1; j < w.size(); ++j) {
        while (w[j][i] != 0) {
          const long long qt = w[front][i] / w[j][i];
          for (int t = i; t < r; ++t) w[front][t] -= qt * w[j][t];
          reduce_below(w[front], i + 1);
          std::swap(w[front], w[j]);
        }
      }
    }
    const long long g = (c < w.size()) ? w[front][i] : 0;
    const long long pivot = g == 0 ? moduli[i] : std::gcd(g, moduli[i]);
    image *= moduli[i] / pivot;
    if (g != 0) {
      // residual of combining the front column with the relation m_i e_i:
      // (m_i/pivot) * front, with row i zeroed
      std::vector<long long> res(r, 0);
      const long long scale = moduli[i] / pivot;
      for (int t = i + 1; t < r; ++t) res[t] = w[front][t] * scale;
      reduce_below(res, i + 1);
      ++front;
      if (std::any_of(res.begin() + (i + 1), res.end(),
                      [](long long v) { return v != 0; }))
        w.push_back(std::move(res));
    }
  }
  return image;
}

}  // namespace exmod
