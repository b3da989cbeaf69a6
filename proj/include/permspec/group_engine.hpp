#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "permspec/bigcount.hpp"
#include "permspec/perm.hpp"

namespace permspec {

// Elements streams refuse to run past this many elements unless the
// caller raises the cap explicitly. Everything in the built-in corpus
// (M12 included, 95040 elements) fits with lots of room; the cap guards
// user-supplied generators.
inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

// One level of the stabilizer chain: the orbit of base_point under the
// generators stored at this level, with explicit coset representatives
// (reps[k] maps base_point to orbit[k]).
struct TransversalLevel {
    int base_point = 0;
    std::vector<Permutation> generators;
    std::vector<int> orbit;            // discovery order, orbit[0] == base_point
    std::vector<int> position;         // point -> index into orbit, -1 if outside
    std::vector<Permutation> reps;     // parallel to orbit
};

struct OrbitPartition {
    std::vector<std::vector<int>> classes;  // sorted ascending, ordered by least point
    std::vector<int> representatives;       // least point of each class
};

// Exact computational handle on G = <generators>: order, membership,
// element streams, orbits and point stabilizers, backed by a
// deterministic (non-randomized) Schreier-Sims stabilizer chain.
// Determinism: base points are chosen as the smallest point moved by the
// first generator found to fix all existing base points, and orbits are
// filled by breadth-first search scanning generators in list order, so
// the same input always yields the identical chain.
//
// Immutable after construction; safe for unlimited concurrent readers.
class GroupEngine {
public:
    // Non-empty generator list, all of the same degree (the identity
    // alone yields the trivial group).
    static GroupEngine build(std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<TransversalLevel>& levels() const { return levels_; }
    const std::vector<int>& base() const { return base_; }
    const BigCount& order() const { return order_; }
    bool is_trivial() const { return order_.is_one(); }

    bool contains(const Permutation& p) const;

    // Every element exactly once, in deterministic order (products of
    // transversal representatives, deepest level first). Throws
    // CapExceeded if the order exceeds cap.
    void for_each_element(const std::function<void(const Permutation&)>& fn,
                          std::uint64_t cap = kDefaultElementCap) const;
    std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const;

    OrbitPartition orbit_partition() const;
    std::vector<int> orbit_of(int point) const;  // sorted ascending
    bool is_transitive() const;

    // Engine for the stabilizer of `point`, satisfying
    // |G| = |orbit(point)| * |G_point| exactly.
    GroupEngine point_stabilizer(int point) const;

private:
    GroupEngine() = default;

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<TransversalLevel> levels_;
    std::vector<int> base_;
    BigCount order_;

    friend class ChainBuilder;
};

inline GroupEngine build_engine(std::vector<Permutation> generators) {
    return GroupEngine::build(std::move(generators));
}

// Independent brute-force oracle: breadth-first product closure of the
// generators. Returns the full element set of <generators>, sorted.
// Used to validate the Schreier-Sims engine on small groups; never used
// by the engine itself. Throws CapExceeded if the closure grows past cap.
std::vector<Permutation> closure_enumerate(const std::vector<Permutation>& generators,
                                           std::uint64_t cap);

} // namespace permspec
