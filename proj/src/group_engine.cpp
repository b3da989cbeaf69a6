#include "permspec/group_engine.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "permspec/errors.hpp"

namespace permspec {

namespace {

int smallest_moved_point(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i)
        if (g.image(i) != i)
            return i;
    throw DomainError("identity has no moved point");
}

} // namespace

// Deterministic Schreier-Sims. Levels are verified from the deepest one
// upward; a Schreier generator that fails to sift is installed as a new
// strong generator on the levels it belongs to and verification resumes
// at the deepest level it touched.
class ChainBuilder {
public:
    ChainBuilder(int degree, const std::vector<Permutation>& generators,
                 const std::vector<int>& base_seed)
        : n_(degree) {
        for (int b : base_seed)
            append_level(b);
        for (const auto& g : generators)
            if (!g.is_identity())
                install(g, 0);
        verify_all();
    }

    std::vector<TransversalLevel> take_levels() { return std::move(levels_); }

private:
    int n_;
    std::vector<TransversalLevel> levels_;

    void append_level(int base_point) {
        TransversalLevel lvl;
        lvl.base_point = base_point;
        levels_.push_back(std::move(lvl));
        recompute_orbit(levels_.size() - 1);
    }

    void recompute_orbit(std::size_t li) {
        TransversalLevel& lvl = levels_[li];
        lvl.orbit.clear();
        lvl.reps.clear();
        lvl.position.assign(n_, -1);
        lvl.orbit.push_back(lvl.base_point);
        lvl.position[lvl.base_point] = 0;
        lvl.reps.push_back(Permutation(n_));
        for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
            int p = lvl.orbit[head];
            for (const auto& g : lvl.generators) {
                int q = g.image(p);
                if (lvl.position[q] < 0) {
                    lvl.position[q] = static_cast<int>(lvl.orbit.size());
                    lvl.orbit.push_back(q);
                    lvl.reps.push_back(compose(lvl.reps[head], g));
                }
            }
        }
    }

    // Store g on levels first..last inclusive (S_l is the set of strong
    // generators fixing the first l base points, so g belongs to every
    // level from `first` up to the first level whose base point it moves).
    // Returns the index of the deepest level that changed.
    std::size_t install(const Permutation& g, std::size_t first) {
        std::size_t last = first;
        while (last < levels_.size() && g.image(levels_[last].base_point) == levels_[last].base_point)
            ++last;
        if (last == levels_.size())
            append_level(smallest_moved_point(g));
        for (std::size_t l = first; l <= last; ++l)
            levels_[l].generators.push_back(g);
        for (std::size_t l = first; l <= last; ++l)
            recompute_orbit(l);
        return last;
    }

    // Strip g through levels from..end; returns the residue and the level
    // the strip stopped at (levels_.size() means fully stripped).
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
        for (std::size_t l = from; l < levels_.size(); ++l) {
            int p = g.image(levels_[l].base_point);
            int pos = levels_[l].position[p];
            if (pos < 0)
                return {std::move(g), l};
            g = compose(g, inverse(levels_[l].reps[pos]));
        }
        return {std::move(g), levels_.size()};
    }

    // True if every Schreier generator of level li sifts to the identity
    // through the deeper levels; otherwise installs the failing residue
    // and reports the deepest level modified via `restart_at`.
    bool verify_level(std::size_t li, std::size_t& restart_at) {
        TransversalLevel& lvl = levels_[li];
        for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
            for (std::size_t gi = 0; gi < lvl.generators.size(); ++gi) {
                const Permutation& x = lvl.generators[gi];
                int p = lvl.orbit[k];
                int q = x.image(p);
                Permutation schreier_gen =
                    compose(compose(lvl.reps[k], x), inverse(lvl.reps[lvl.position[q]]));
                if (schreier_gen.is_identity())
                    continue;
                auto [residue, stop] = sift(std::move(schreier_gen), li + 1);
                if (residue.is_identity())
                    continue;
                restart_at = install(residue, li + 1);
                return false;
            }
        }
        return true;
    }

    void verify_all() {
        if (levels_.empty())
            return;
        std::size_t i = levels_.size() - 1;
        while (true) {
            std::size_t restart_at = 0;
            if (verify_level(i, restart_at)) {
                if (i == 0)
                    break;
                --i;
            } else {
                i = restart_at;
            }
        }
    }
};

GroupEngine GroupEngine::build(std::vector<Permutation> generators) {
    if (generators.empty())
        throw DomainError("build_engine: at least one generator required");
    const int n = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != n)
            throw DomainError("build_engine: generators of mixed degree");

    GroupEngine engine;
    engine.degree_ = n;
    engine.generators_ = std::move(generators);
    ChainBuilder builder(n, engine.generators_, {});
    engine.levels_ = builder.take_levels();
    engine.order_ = BigCount(1);
    for (const auto& lvl : engine.levels_) {
        engine.base_.push_back(lvl.base_point);
        engine.order_ *= BigCount(static_cast<std::uint64_t>(lvl.orbit.size()));
    }
    return engine;
}

bool GroupEngine::contains(const Permutation& p) const {
    if (p.degree() != degree_)
        throw DomainError("contains: degree mismatch");
    Permutation residue = p;
    for (const auto& lvl : levels_) {
        int q = residue.image(lvl.base_point);
        int pos = lvl.position[q];
        if (pos < 0)
            return false;
        residue = compose(residue, inverse(lvl.reps[pos]));
    }
    return residue.is_identity();
}

void GroupEngine::for_each_element(const std::function<void(const Permutation&)>& fn,
                                   std::uint64_t cap) const {
    if (order_ > BigCount(cap))
        throw CapExceeded("element stream: group order " + order_.to_decimal() +
                          " exceeds cap " + std::to_string(cap));
    if (levels_.empty()) {
        fn(Permutation(degree_));
        return;
    }
    // g = compose(...compose(rep_{m-1}, rep_{m-2})..., rep_0); recurse from
    // the deepest level so each level composes onto the accumulator once.
    auto rec = [&](auto&& self, std::size_t li, const Permutation& acc) -> void {
        const TransversalLevel& lvl = levels_[li];
        for (const auto& rep : lvl.reps) {
            Permutation next = compose(acc, rep);
            if (li == 0)
                fn(next);
            else
                self(self, li - 1, next);
        }
    };
    rec(rec, levels_.size() - 1, Permutation(degree_));
}

std::vector<Permutation> GroupEngine::elements(std::uint64_t cap) const {
    std::vector<Permutation> out;
    out.reserve(order_.fits_uint64() ? static_cast<std::size_t>(order_.to_uint64()) : 0);
    for_each_element([&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

OrbitPartition GroupEngine::orbit_partition() const {
    OrbitPartition part;
    std::vector<char> seen(degree_, 0);
    for (int start = 0; start < degree_; ++start) {
        if (seen[start])
            continue;
        std::vector<int> cls{start};
        seen[start] = 1;
        for (std::size_t head = 0; head < cls.size(); ++head) {
            for (const auto& g : generators_) {
                int q = g.image(cls[head]);
                if (!seen[q]) {
                    seen[q] = 1;
                    cls.push_back(q);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        part.representatives.push_back(start);
        part.classes.push_back(std::move(cls));
    }
    return part;
}

std::vector<int> GroupEngine::orbit_of(int point) const {
    if (point < 0 || point >= degree_)
        throw DomainError("orbit_of: point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<int> orbit{point};
    seen[point] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const auto& g : generators_) {
            int q = g.image(orbit[head]);
            if (!seen[q]) {
                seen[q] = 1;
                orbit.push_back(q);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

bool GroupEngine::is_transitive() const {
    return static_cast<int>(orbit_of(0).size()) == degree_;
}

GroupEngine GroupEngine::point_stabilizer(int point) const {
    if (point < 0 || point >= degree_)
        throw DomainError("point_stabilizer: point out of range");
    bool all_fix = true;
    for (const auto& g : generators_) {
        if (g.image(point) != point) {
            all_fix = false;
            break;
        }
    }
    if (all_fix)
        return *this;

    // Rebuild the chain with `point` forced to the front of the base; the
    // strong generators stored past level 0 then generate the stabilizer.
    ChainBuilder builder(degree_, generators_, {point});
    std::vector<TransversalLevel> levels = builder.take_levels();
    std::vector<Permutation> stab_gens;
    if (levels.size() > 1)
        stab_gens = levels[1].generators;
    if (stab_gens.empty())
        stab_gens.push_back(Permutation(degree_));
    return build(std::move(stab_gens));
}

std::vector<Permutation> closure_enumerate(const std::vector<Permutation>& generators,
                                           std::uint64_t cap) {
    if (generators.empty())
        throw DomainError("closure_enumerate: at least one generator required");
    const int n = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != n)
            throw DomainError("closure_enumerate: generators of mixed degree");

    std::set<Permutation> closure;
    std::vector<Permutation> worklist;
    closure.insert(Permutation(n));
    worklist.push_back(Permutation(n));
    while (!worklist.empty()) {
        Permutation current = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& g : generators) {
            Permutation next = compose(current, g);
            if (closure.insert(next).second) {
                if (closure.size() > cap)
                    throw CapExceeded("closure_enumerate: closure exceeds cap " +
                                      std::to_string(cap));
                worklist.push_back(std::move(next));
            }
        }
    }
    return {closure.begin(), closure.end()};
}

} // namespace permspec
