#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exmod/fingroup.hpp"

namespace exmod {

/// Catalog of named small groups up to the given order (abelian invariant
/// factor forms plus the common nonabelian ones).
std::vector<std::pair<std::string, FiniteGroup>> small_group_catalog(
    int max_order);

/// Human-readable isomorphism type ("Z4", "Z2xZ2", "S3", "Q8", ...), via an
/// order-profile fingerprint with an isomorphism search as tiebreak;
/// "G<order>" when the group is outside the catalog.
std::string isomorphism_label(const FiniteGroup& g, const Limits& lim = {});

}  // namespace exmod
