#include "exmod/equivariant_module.hpp"

namespace exmod {

EquivariantModule make_module(const GammaGroup& A, const GammaGroup& Pi,
                              const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != Pi.order())
    throw StructuralError("module action needs one row per Π element");
  EquivariantModule m;
  m.A = A;
  m.Pi = Pi;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != A.order())
      throw StructuralError("module action row has wrong length");
    for (int v : row) {
      if (v < 0 || v >= A.order())
        throw StructuralError("module action entry out of range");
      m.paction.push_back(v);
    }
  }
  return m;
}

EquivariantModule trivial_module(const GammaGroup& A, const GammaGroup& Pi) {
  EquivariantModule m;
  m.A = A;
  m.Pi = Pi;
  m.paction.resize(static_cast<size_t>(Pi.order()) * A.order());
  for (int x = 0; x < Pi.order(); ++x)
    for (int a = 0; a < A.order(); ++a) m.paction[x * A.order() + a] = a;
  return m;
}

Report validate_module(const EquivariantModule& m) {
  if (!same_gamma(m.A, m.Pi))
    return Report::structural("module", "A and Π have different Γ");
  if (static_cast<int>(m.paction.size()) !=
      m.Pi.order() * m.A.order())
    return Report::structural("module", "action table has wrong dimensions");
  for (int a = 0; a < m.A.order(); ++a)
    for (int b = a + 1; b < m.A.order(); ++b)
      if (m.A.group.mul(a, b) != m.A.group.mul(b, a))
        return Report::violation("module-abelian", "A is not abelian", {a, b});
  // each row an automorphism, rows compose along Π
  for (int x = 0; x < m.Pi.order(); ++x) {
    std::vector<char> hit(m.A.order(), 0);
    for (int a = 0; a < m.A.order(); ++a)
      if (hit[m.act(x, a)]++)
        return Report::violation("module-action", "row is not a permutation",
                                 {x, -1, a});
    for (int a = 0; a < m.A.order(); ++a)
      for (int b = 0; b < m.A.order(); ++b)
        if (m.act(x, m.A.group.mul(a, b)) !=
            m.A.group.mul(m.act(x, a), m.act(x, b)))
          return Report::violation("module-action",
                                   "x(a+b) != xa + xb", {x, a, b});
  }
  for (int a = 0; a < m.A.order(); ++a)
    if (m.act(0, a) != a)
      return Report::violation("module-action", "1 does not act as identity",
                               {0, -1, a});
  for (int x = 0; x < m.Pi.order(); ++x)
    for (int y = 0; y < m.Pi.order(); ++y)
      for (int a = 0; a < m.A.order(); ++a)
        if (m.act(m.Pi.group.mul(x, y), a) != m.act(x, m.act(y, a)))
          return Report::violation("module-action", "(xy)a != x(ya)",
                                   {x, y, a});
  for (int s = 0; s < m.gamma().order(); ++s)
    for (int x = 0; x < m.Pi.order(); ++x)
      for (int a = 0; a < m.A.order(); ++a)
        if (m.A.act(s, m.act(x, a)) != m.act(m.Pi.act(s, x), m.A.act(s, a)))
          return Report::violation("module-compat", "s(xa) != (sx)(sa)",
                                   {s, x, a});
  return Report::pass();
}

}  // namespace exmod
