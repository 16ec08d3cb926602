#include "exmod/small_groups.hpp"

#include <algorithm>

namespace exmod {

namespace {

// abelian groups by invariant factors, descending with each dividing the
// previous, so every type is generated exactly once
void abelian_types(int n, int max_factor, std::vector<int> cur,
                   std::vector<std::vector<int>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int d = 2; d <= std::min(n, max_factor); ++d)
    if (n % d == 0 && max_factor % d == 0) {
      cur.push_back(d);
      abelian_types(n / d, d, cur, out);
      cur.pop_back();
    }
}

std::string cyclic_name(const std::vector<int>& factors) {
  std::string s;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(*it);
  }
  return s;
}

}  // namespace

std::vector<std::pair<std::string, FiniteGroup>> small_group_catalog(
    int max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  out.emplace_back("Z1", FiniteGroup::trivial());
  for (int n = 2; n <= max_order; ++n) {
    std::vector<std::vector<int>> types;
    abelian_types(n, n, {}, types);
    std::sort(types.begin(), types.end());
    for (const auto& t : types) {
      FiniteGroup g = FiniteGroup::cyclic(t.back());
      for (auto it = std::next(t.rbegin()); it != t.rend(); ++it)
        g = FiniteGroup::direct_product(FiniteGroup::cyclic(*it), g);
      out.emplace_back(cyclic_name(t), std::move(g));
    }
  }
  auto add = [&](const std::string& name, FiniteGroup g) {
    if (g.order() <= max_order) out.emplace_back(name, std::move(g));
  };
  add("S3", FiniteGroup::symmetric(3));
  add("D4", FiniteGroup::dihedral(4));
  add("Q8", FiniteGroup::quaternion8());
  add("D5", FiniteGroup::dihedral(5));
  add("D6", FiniteGroup::dihedral(6));
  add("A4", FiniteGroup::alternating4());
  add("Dic3", FiniteGroup::dicyclic3());
  add("D7", FiniteGroup::dihedral(7));
  add("D8", FiniteGroup::dihedral(8));
  add("S4", FiniteGroup::symmetric(4));
  return out;
}

std::string isomorphism_label(const FiniteGroup& g, const Limits& lim) {
  std::vector<std::pair<std::string, FiniteGroup>> catalog;
  for (auto& [name, cand] : small_group_catalog(g.order()))
    if (cand.order() == g.order()) catalog.emplace_back(name, std::move(cand));
  auto fingerprint = [](const FiniteGroup& h) {
    auto orders = h.element_orders();
    std::sort(orders.begin(), orders.end());
    orders.push_back(h.is_abelian() ? 1 : 0);
    orders.push_back(static_cast<int>(center(h).size()));
    return orders;
  };
  const auto fp = fingerprint(g);
  for (const auto& [name, cand] : catalog) {
    if (fingerprint(cand) != fp) continue;
    if (is_isomorphic(g, cand, lim)) return name;
  }
  return "G" + std::to_string(g.order());
}

}  // namespace exmod
