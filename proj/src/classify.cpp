#include "permspec/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "permspec/errors.hpp"

namespace permspec {

namespace {

// Largest k with G k-transitive on the points outside `fixed`, by the
// stabilizer-chain recursion: G is k-transitive iff it is transitive and
// a point stabilizer is (k-1)-transitive on the remaining points.
int transitivity_degree_on(const GroupEngine& engine, std::vector<char>& fixed, int remaining) {
    if (remaining == 0)
        return 0;
    int anchor = 0;
    while (fixed[anchor])
        ++anchor;
    std::vector<int> orbit = engine.orbit_of(anchor);
    if (static_cast<int>(orbit.size()) != remaining)
        return 0;
    fixed[anchor] = 1;
    int deeper = transitivity_degree_on(engine.point_stabilizer(anchor), fixed, remaining - 1);
    fixed[anchor] = 0;
    return 1 + deeper;
}

} // namespace

int transitivity_degree(const GroupEngine& engine) {
    std::vector<char> fixed(engine.degree(), 0);
    return transitivity_degree_on(engine, fixed, engine.degree());
}

bool is_sharply_k_transitive(const GroupEngine& engine, int k) {
    const int n = engine.degree();
    if (k < 1 || k > n)
        throw DomainError("is_sharply_k_transitive: k must be in 1..degree");
    if (transitivity_degree(engine) < k)
        return false;
    if (engine.order() != falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k)))
        return false;
    // consistency: non-trivial elements must then fix fewer than k points
    Spectrum spectrum = fixed_point_spectrum(engine, ElementFilter::AllNontrivialElements);
    for (int f : spectrum.values)
        if (f >= k)
            throw IntegralityError("sharply k-transitive group with an element fixing >= k points");
    return true;
}

int rank(const GroupEngine& engine) {
    if (!engine.is_transitive())
        throw DomainError("rank: group is not transitive");
    return static_cast<int>(engine.point_stabilizer(0).orbit_partition().classes.size());
}

PrimitivityResult is_primitive(const GroupEngine& engine) {
    const int n = engine.degree();
    if (!engine.is_transitive())
        return {};
    // Minimal block containing {0, b}: union-find refinement under the
    // generators until classes are stable.
    for (int b = 1; b < n; ++b) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        std::vector<std::pair<int, int>> pending{{0, b}};
        parent[find(b)] = find(0);
        while (!pending.empty()) {
            auto [u, v] = pending.back();
            pending.pop_back();
            for (const auto& g : engine.generators()) {
                int ru = find(g.image(u));
                int rv = find(g.image(v));
                if (ru != rv) {
                    parent[rv] = ru;
                    pending.emplace_back(ru, rv);
                }
            }
        }
        std::vector<int> block;
        int root = find(0);
        for (int i = 0; i < n; ++i)
            if (find(i) == root)
                block.push_back(i);
        if (static_cast<int>(block.size()) != n)
            return {false, std::move(block)};
    }
    return {true, std::nullopt};
}

FrobeniusReport frobenius_analysis(const GroupEngine& engine, std::uint64_t cap) {
    FrobeniusReport report;
    const int n = engine.degree();
    bool transitive = engine.is_transitive();
    Spectrum spectrum = fixed_point_spectrum(engine, ElementFilter::AllNontrivialElements, cap);
    report.is_frobenius = transitive && spectrum.values == std::vector<int>{0, 1};

    std::uint64_t fixed_point_free = 0;
    engine.for_each_element(
        [&](const Permutation& g) {
            if (!g.is_identity() && fixed_point_count(g) == 0)
                ++fixed_point_free;
        },
        cap);
    report.kernel_size = fixed_point_free + 1;
    report.kernel_size_equals_degree = report.kernel_size == static_cast<std::uint64_t>(n);
    if (!report.is_frobenius)
        return report;

    report.kernel_elements.push_back(Permutation(n));
    engine.for_each_element(
        [&](const Permutation& g) {
            if (!g.is_identity() && fixed_point_count(g) == 0)
                report.kernel_elements.push_back(g);
        },
        cap);

    std::set<Permutation> kernel_set(report.kernel_elements.begin(), report.kernel_elements.end());
    report.kernel_is_subgroup = true;
    for (const auto& a : report.kernel_elements) {
        if (!kernel_set.count(inverse(a))) {
            report.kernel_is_subgroup = false;
            break;
        }
        for (const auto& b : report.kernel_elements) {
            if (!kernel_set.count(compose(a, b))) {
                report.kernel_is_subgroup = false;
                break;
            }
        }
        if (!report.kernel_is_subgroup)
            break;
    }
    // invariance under conjugation by the generators is invariance under G
    report.kernel_is_normal = true;
    for (const auto& g : engine.generators()) {
        for (const auto& a : report.kernel_elements) {
            if (!kernel_set.count(conjugate(a, g))) {
                report.kernel_is_normal = false;
                break;
            }
        }
        if (!report.kernel_is_normal)
            break;
    }
    return report;
}

bool is_natural_symmetric(const GroupEngine& engine) {
    const int n = engine.degree();
    if (engine.order() != factorial(static_cast<unsigned>(n)))
        return false;
    if (n < 2)
        return true;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[0], images[1]);
    return engine.contains(Permutation::from_images(std::move(images)));
}

bool is_natural_alternating(const GroupEngine& engine) {
    const int n = engine.degree();
    if (n < 2)
        return false; // Alt(1) is the trivial group = Sym(1); report it as symmetric
    BigCount half = factorial(static_cast<unsigned>(n)).exact_div(BigCount(2), "alternating order");
    if (engine.order() != half)
        return false;
    for (const auto& g : engine.generators())
        if (permutation_sign(g) < 0)
            return false;
    return true;
}

BochertReport bochert_check(const GroupEngine& engine) {
    BochertReport report;
    const int n = engine.degree();
    report.group_order = engine.order();
    report.bound = falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2));
    bool primitive = is_primitive(engine).primitive;
    report.applicable =
        primitive && !is_natural_symmetric(engine) && !is_natural_alternating(engine);
    report.satisfied = report.group_order <= report.bound;
    return report;
}

ClassificationReport classify_report(const GroupEngine& engine, std::uint64_t cap) {
    ClassificationReport report;
    const int n = engine.degree();
    report.degree = n;
    report.order = engine.order();
    report.num_orbits = static_cast<int>(engine.orbit_partition().classes.size());
    report.transitive = report.num_orbits == 1;
    report.transitivity_degree = transitivity_degree(engine);
    if (report.transitivity_degree >= 1 &&
        engine.order() == falling_factorial(static_cast<unsigned>(n),
                                            static_cast<unsigned>(report.transitivity_degree)))
        report.sharply_transitive_k = report.transitivity_degree;
    if (report.transitive)
        report.rank = rank(engine);
    report.primitivity = is_primitive(engine);
    report.bochert = bochert_check(engine);
    try {
        Spectrum all = fixed_point_spectrum(engine, ElementFilter::AllNontrivialElements, cap);
        report.is_sharp = blichfeldt_product(n, all) == engine.order();
        report.spectrum_all = std::move(all);
        report.spectrum_prime_power =
            fixed_point_spectrum(engine, ElementFilter::PrimePowerOrder, cap);
        report.spectrum_prime = fixed_point_spectrum(engine, ElementFilter::PrimeOrder, cap);
        if (report.transitive)
            report.frobenius = frobenius_analysis(engine, cap);
    } catch (const CapExceeded&) {
        // enumeration-dependent fields stay empty
    }
    for (unsigned k = 0; k <= 6; ++k)
        report.moments.push_back(moment_recursive(engine, k));
    return report;
}

} // namespace permspec
