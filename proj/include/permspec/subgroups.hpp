#pragma once

#include <cstdint>
#include <vector>

#include "permspec/group_engine.hpp"
#include "permspec/perm.hpp"

namespace permspec {

// A subgroup of the ambient group, as indices into SubgroupLattice::elements.
struct Subgroup {
    std::vector<std::uint16_t> members;     // sorted ascending
    std::vector<std::uint16_t> generators;  // <generators> == members
};

// The full subgroup lattice of a small group, obtained as the
// join-closure of its cyclic subgroups (every subgroup is the join of
// the cyclic subgroups it contains, so closing the cyclic seeds under
// "join with a cyclic seed" reaches everything). Includes the trivial
// subgroup and the whole group.
struct SubgroupLattice {
    std::vector<Permutation> elements;  // ambient group, engine stream order
    std::uint16_t identity_index = 0;
    std::vector<Subgroup> subgroups;
};

// Throws CapExceeded if |G| > order_cap (or past the uint16 index space).
SubgroupLattice subgroup_lattice(const GroupEngine& engine, std::uint64_t order_cap);

// Number of points fixed by every generator of the subgroup.
int subgroup_fixed_points(const SubgroupLattice& lattice, const Subgroup& subgroup);

} // namespace permspec
