#pragma once

#include <vector>

#include "exmod/fingroup.hpp"

namespace exmod {

/// Invariant decomposition of a finite abelian group: generators whose
/// cyclic spans form a direct sum, with `coords` giving the unique
/// coordinate vector of every element (coords[e][i] in 0..orders[i]-1).
struct AbelianBasis {
  std::vector<int> gens;
  std::vector<int> orders;
  std::vector<std::vector<int>> coords;

  int rank() const { return static_cast<int>(gens.size()); }
  int element_of(const std::vector<int>& c, const FiniteGroup& g) const;
};

/// Kronecker basis of a finite abelian group, computed by splitting off a
/// maximal-order cyclic factor and lifting a basis of the quotient.
/// Throws PreconditionError on a nonabelian input.
AbelianBasis abelian_basis(const FiniteGroup& g);

/// Order of the subgroup of ⊕_i Z/moduli[i] generated by the given columns
/// (each column has one entry per modulus), via a Hermite normal form of the
/// column lattice extended by the relation lattice.
long long subgroup_order(const std::vector<long long>& moduli,
                         const std::vector<std::vector<long long>>& columns);

}  // namespace exmod
