#include "permspec/subgroups.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "permspec/errors.hpp"

namespace permspec {

namespace {

struct MemberSetHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct ImageVectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

SubgroupLattice subgroup_lattice(const GroupEngine& engine, std::uint64_t order_cap) {
    if (engine.order() > BigCount(order_cap))
        throw CapExceeded("subgroup lattice: group order " + engine.order().to_decimal() +
                          " exceeds cap " + std::to_string(order_cap));
    if (engine.order() > BigCount(65535))
        throw CapExceeded("subgroup lattice: group order exceeds the uint16 index space");

    SubgroupLattice lattice;
    lattice.elements = engine.elements(order_cap);
    const std::uint16_t g = static_cast<std::uint16_t>(lattice.elements.size());

    std::unordered_map<std::vector<int>, std::uint16_t, ImageVectorHash> index_of;
    index_of.reserve(g * 2);
    for (std::uint16_t i = 0; i < g; ++i) {
        if (lattice.elements[i].is_identity())
            lattice.identity_index = i;
        index_of.emplace(lattice.elements[i].images(), i);
    }

    // Cayley table: product[a * g + b] = index of "apply a, then b".
    const int n = engine.degree();
    std::vector<std::uint16_t> product(static_cast<std::size_t>(g) * g);
    std::vector<int> scratch(n);
    for (std::uint16_t a = 0; a < g; ++a) {
        const auto& pa = lattice.elements[a].images();
        for (std::uint16_t b = 0; b < g; ++b) {
            const auto& pb = lattice.elements[b].images();
            for (int i = 0; i < n; ++i)
                scratch[i] = pb[pa[i]];
            product[static_cast<std::size_t>(a) * g + b] = index_of.at(scratch);
        }
    }
    auto mul = [&](std::uint16_t a, std::uint16_t b) {
        return product[static_cast<std::size_t>(a) * g + b];
    };

    // Registered subgroups, deduplicated by sorted member set. A bit
    // array per subgroup gives O(1) membership during joins.
    std::unordered_map<std::vector<std::uint16_t>, std::uint32_t, MemberSetHash> seen;
    std::vector<std::vector<char>> member_bits;
    auto register_subgroup = [&](std::vector<std::uint16_t> members,
                                 std::vector<std::uint16_t> generators) -> bool {
        std::sort(members.begin(), members.end());
        auto it = seen.find(members);
        if (it != seen.end())
            return false;
        std::vector<char> bits(g, 0);
        for (std::uint16_t m : members)
            bits[m] = 1;
        seen.emplace(members, static_cast<std::uint32_t>(lattice.subgroups.size()));
        member_bits.push_back(std::move(bits));
        lattice.subgroups.push_back(Subgroup{std::move(members), std::move(generators)});
        return true;
    };

    register_subgroup({lattice.identity_index}, {lattice.identity_index});

    // Cyclic seeds, scanned in element order.
    struct Seed {
        std::uint16_t generator;
        std::uint32_t subgroup;
    };
    std::vector<Seed> seeds;
    for (std::uint16_t e = 0; e < g; ++e) {
        if (e == lattice.identity_index)
            continue;
        std::vector<std::uint16_t> members{lattice.identity_index};
        std::uint16_t x = e;
        while (x != lattice.identity_index) {
            members.push_back(x);
            x = mul(x, e);
        }
        std::size_t before = lattice.subgroups.size();
        if (register_subgroup(std::move(members), {e}))
            seeds.push_back(Seed{e, static_cast<std::uint32_t>(before)});
    }

    // Worklist join-closure: join every known subgroup with every cyclic
    // seed until no new subgroup appears.
    for (std::size_t wi = 0; wi < lattice.subgroups.size(); ++wi) {
        for (const Seed& seed : seeds) {
            if (member_bits[wi][seed.generator])
                continue; // seed inside, join is H itself
            const std::vector<std::uint16_t> base_members = lattice.subgroups[wi].members;
            std::vector<std::uint16_t> gens = lattice.subgroups[wi].generators;
            gens.push_back(seed.generator);

            // <H, s> as a union of right cosets H*r, found by BFS over
            // coset representatives under right multiplication by the
            // generators. Once more than half the group is painted the
            // join must be everything (subgroup orders divide |G|).
            std::vector<char> painted = member_bits[wi];
            std::vector<std::uint16_t> members = base_members;
            std::vector<std::uint16_t> rep_queue{lattice.identity_index};
            bool whole_group = false;
            for (std::size_t head = 0; head < rep_queue.size() && !whole_group; ++head) {
                for (std::uint16_t t : gens) {
                    std::uint16_t r = mul(rep_queue[head], t);
                    if (painted[r])
                        continue;
                    for (std::uint16_t h : base_members) {
                        std::uint16_t y = mul(h, r);
                        painted[y] = 1;
                        members.push_back(y);
                    }
                    rep_queue.push_back(r);
                    if (members.size() > g / 2u) {
                        whole_group = true;
                        break;
                    }
                }
            }
            if (whole_group) {
                members.resize(g);
                for (std::uint16_t i = 0; i < g; ++i)
                    members[i] = i;
            }
            register_subgroup(std::move(members), std::move(gens));
        }
    }
    return lattice;
}

int subgroup_fixed_points(const SubgroupLattice& lattice, const Subgroup& subgroup) {
    const int n = lattice.elements.empty() ? 0 : lattice.elements.front().degree();
    int count = 0;
    for (int point = 0; point < n; ++point) {
        bool fixed_by_all = true;
        for (std::uint16_t gi : subgroup.generators) {
            if (lattice.elements[gi].image(point) != point) {
                fixed_by_all = false;
                break;
            }
        }
        if (fixed_by_all)
            ++count;
    }
    return count;
}

} // namespace permspec
