#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "permspec/classify.hpp"
#include "permspec/corpus.hpp"
#include "permspec/errors.hpp"
#include "permspec/families.hpp"
#include "permspec/subgroups.hpp"

using namespace permspec;

#ifndef PERMSPEC_DATA_DIR
#define PERMSPEC_DATA_DIR "data"
#endif

namespace {

GroupEngine paper_d10() {
    return build_engine({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,5)(3,4)", 5)});
}

// Oracle: k-transitivity via the orbit of a distinct k-tuple under the
// full element set. Exponential; only for tiny groups.
bool naive_k_transitive(const GroupEngine& engine, int k) {
    const int n = engine.degree();
    if (k > n)
        return false;
    std::vector<Permutation> elems = engine.elements(100000);
    std::vector<int> tuple(k);
    std::iota(tuple.begin(), tuple.end(), 0);
    std::set<std::vector<int>> orbit;
    for (const auto& g : elems) {
        std::vector<int> image(k);
        for (int i = 0; i < k; ++i)
            image[i] = g.image(tuple[i]);
        orbit.insert(std::move(image));
    }
    // number of distinct k-tuples = n(n-1)...(n-k+1)
    std::uint64_t expected = 1;
    for (int i = 0; i < k; ++i)
        expected *= static_cast<std::uint64_t>(n - i);
    return orbit.size() == expected;
}

} // namespace

TEST_CASE("transitivity degree") {
    CHECK(transitivity_degree(symmetric_group(4)) == 4);
    CHECK(transitivity_degree(paper_d10()) == 1);
    CHECK(transitivity_degree(affine_group(5, 1)) == 2);
    CHECK(transitivity_degree(counterexample_group()) == 0);
    CHECK(transitivity_degree(build_engine({Permutation(1)})) == 1);
    CHECK(transitivity_degree(build_engine({Permutation(3)})) == 0);
    CHECK(transitivity_degree(alternating_group(6)) == 4);
}

TEST_CASE("transitivity degree matches the tuple-orbit oracle") {
    for (const GroupEngine& engine :
         {symmetric_group(4), paper_d10(), affine_group(5, 1), cyclic_regular(6), pgl2(3),
          dihedral(6), alternating_group(5)}) {
        int declared = transitivity_degree(engine);
        for (int k = 1; k <= std::min(engine.degree(), declared + 1); ++k)
            CHECK(naive_k_transitive(engine, k) == (k <= declared));
    }
}

TEST_CASE("sharp k-transitivity") {
    CHECK(is_sharply_k_transitive(cyclic_regular(7), 1));
    CHECK(is_sharply_k_transitive(symmetric_group(4), 4));
    CHECK(is_sharply_k_transitive(symmetric_group(4), 3));
    CHECK_FALSE(is_sharply_k_transitive(symmetric_group(4), 2));
    CHECK_FALSE(is_sharply_k_transitive(paper_d10(), 2));
    CHECK(is_sharply_k_transitive(affine_group(5, 1), 2));
    CHECK_THROWS_AS(is_sharply_k_transitive(paper_d10(), 0), DomainError);
}

TEST_CASE("sharply k-transitive witnessing elements are unique") {
    // count elements carrying the base tuple to a fixed image tuple
    auto witness_count = [](const GroupEngine& engine, const std::vector<int>& from,
                            const std::vector<int>& to) {
        int count = 0;
        engine.for_each_element([&](const Permutation& g) {
            for (std::size_t i = 0; i < from.size(); ++i)
                if (g.image(from[i]) != to[i])
                    return;
            ++count;
        });
        return count;
    };
    CHECK(witness_count(affine_group(5, 1), {0, 1}, {3, 0}) == 1);
    CHECK(witness_count(affine_group(5, 1), {0, 1}, {0, 1}) == 1);
    CHECK(witness_count(pgl2(4), {0, 1, 2}, {4, 2, 0}) == 1);
    CHECK(witness_count(symmetric_group(4), {0, 1, 2, 3}, {1, 0, 2, 3}) == 1);
}

TEST_CASE("rank") {
    CHECK(rank(affine_group(5, 1)) == 2);
    CHECK(rank(symmetric_group(4)) == 2);
    CHECK(rank(paper_d10()) == 3);
    CHECK_THROWS_AS(rank(counterexample_group()), DomainError);
    // rank equals the second moment for transitive groups
    for (const GroupEngine& engine : {paper_d10(), symmetric_group(5), pgl2(4), dihedral(6)})
        CHECK(BigCount(static_cast<std::uint64_t>(rank(engine))) ==
              moment_direct(engine, 2).value);
}

TEST_CASE("primitivity by minimal blocks") {
    CHECK(is_primitive(paper_d10()).primitive);
    CHECK(is_primitive(symmetric_group(4)).primitive);
    CHECK(is_primitive(cyclic_regular(5)).primitive);
    CHECK_FALSE(is_primitive(counterexample_group()).primitive); // intransitive
    CHECK_FALSE(is_primitive(cyclic_regular(6)).primitive);

    PrimitivityResult square = is_primitive(dihedral(4));
    CHECK_FALSE(square.primitive);
    REQUIRE(square.witness_block.has_value());
    CHECK(*square.witness_block == std::vector<int>{0, 2}); // a diagonal of the square

    // witness blocks really are blocks: g maps the block to itself or away
    GroupEngine d6 = dihedral(6);
    PrimitivityResult r = is_primitive(d6);
    REQUIRE(r.witness_block.has_value());
    const std::vector<int>& block = *r.witness_block;
    CHECK(block.size() > 1);
    CHECK(static_cast<int>(block.size()) < d6.degree());
    d6.for_each_element([&](const Permutation& g) {
        std::vector<int> image;
        for (int b : block)
            image.push_back(g.image(b));
        std::sort(image.begin(), image.end());
        std::vector<int> inter;
        std::set_intersection(image.begin(), image.end(), block.begin(), block.end(),
                              std::back_inserter(inter));
        CHECK((inter.empty() || image == block));
    });
}

TEST_CASE("primitivity agrees with stabilizer maximality on the lattice") {
    std::vector<GroupEngine> engines{paper_d10(),       dihedral(4),      cyclic_regular(6),
                                     cyclic_regular(7), symmetric_group(4), pgl2(3),
                                     affine_group(3, 2), alternating_group(5)};
    for (const GroupEngine& engine : engines) {
        if (!engine.is_transitive())
            continue;
        SubgroupLattice lattice = subgroup_lattice(engine, 2000);
        // element set of the stabilizer of point 0
        std::set<std::uint16_t> stab;
        for (std::uint16_t i = 0; i < lattice.elements.size(); ++i)
            if (lattice.elements[i].image(0) == 0)
                stab.insert(i);
        bool maximal = true;
        for (const Subgroup& subgroup : lattice.subgroups) {
            if (subgroup.members.size() <= stab.size() ||
                subgroup.members.size() == lattice.elements.size())
                continue;
            bool contains_stab = std::includes(subgroup.members.begin(), subgroup.members.end(),
                                               stab.begin(), stab.end());
            if (contains_stab) {
                maximal = false;
                break;
            }
        }
        CHECK(is_primitive(engine).primitive == maximal);
    }
}

TEST_CASE("frobenius analysis") {
    FrobeniusReport d10 = frobenius_analysis(paper_d10());
    CHECK(d10.is_frobenius);
    CHECK(d10.kernel_size == 5);
    CHECK(d10.kernel_is_subgroup);
    CHECK(d10.kernel_is_normal);
    CHECK(d10.kernel_size_equals_degree);
    // the kernel is exactly the rotation subgroup
    for (const auto& g : d10.kernel_elements)
        CHECK((element_order(g) == 5 || g.is_identity()));

    FrobeniusReport aff8 = frobenius_analysis(affine_group(2, 3));
    CHECK(aff8.is_frobenius);
    CHECK(aff8.kernel_size == 8);
    CHECK(aff8.kernel_is_subgroup);
    CHECK(aff8.kernel_is_normal);

    FrobeniusReport s4 = frobenius_analysis(symmetric_group(4));
    CHECK_FALSE(s4.is_frobenius);
    CHECK(s4.kernel_elements.empty());
}

TEST_CASE("symmetric and alternating detection") {
    CHECK(is_natural_symmetric(symmetric_group(5)));
    CHECK(is_natural_symmetric(dihedral(3))); // D3 = Sym(3)
    CHECK_FALSE(is_natural_symmetric(alternating_group(5)));
    CHECK(is_natural_alternating(alternating_group(5)));
    CHECK(is_natural_alternating(cyclic_regular(3)));
    CHECK_FALSE(is_natural_alternating(symmetric_group(5)));
    CHECK_FALSE(is_natural_alternating(paper_d10()));
}

TEST_CASE("bochert bound") {
    BochertReport d10 = bochert_check(paper_d10());
    CHECK(d10.applicable);
    CHECK(d10.bound == BigCount(20));
    CHECK(d10.satisfied);

    CHECK_FALSE(bochert_check(symmetric_group(5)).applicable);
    CHECK_FALSE(bochert_check(alternating_group(6)).applicable);
    CHECK_FALSE(bochert_check(counterexample_group()).applicable); // not primitive

    BochertReport p8 = bochert_check(pgl2(8));
    CHECK(p8.applicable);
    CHECK(p8.bound == falling_factorial(9, 4));
    CHECK(p8.satisfied);
}

TEST_CASE("classification report for the square symmetry group") {
    ClassificationReport report = classify_report(dihedral(4));
    CHECK(report.degree == 4);
    CHECK(report.order == BigCount(8));
    CHECK(report.transitive);
    CHECK(report.transitivity_degree == 1);
    CHECK_FALSE(report.sharply_transitive_k.has_value());
    REQUIRE(report.is_sharp.has_value());
    CHECK(*report.is_sharp);
    CHECK_FALSE(report.primitivity.primitive);
    REQUIRE(report.frobenius.has_value());
    CHECK_FALSE(report.frobenius->is_frobenius);
    REQUIRE(report.spectrum_all.has_value());
    CHECK(report.spectrum_all->values == std::vector<int>{0, 2});
    REQUIRE(report.moments.size() == 7);
    CHECK(report.moments[0].value == BigCount(1));
    CHECK(report.moments[1].value == BigCount(1));
}

TEST_CASE("classification report for the trivial group") {
    ClassificationReport report = classify_report(build_engine({Permutation(3)}));
    CHECK(report.order == BigCount(1));
    CHECK(report.num_orbits == 3);
    CHECK_FALSE(report.transitive);
    CHECK(report.transitivity_degree == 0);
    CHECK_FALSE(report.rank.has_value());
    CHECK_FALSE(report.frobenius.has_value());
    REQUIRE(report.spectrum_all.has_value());
    CHECK(report.spectrum_all->values.empty());
}

TEST_CASE("classification report under a tight cap marks enumeration fields unavailable") {
    ClassificationReport report = classify_report(symmetric_group(5), 10);
    CHECK(report.order == BigCount(120));
    CHECK(report.transitivity_degree == 5);
    CHECK_FALSE(report.is_sharp.has_value());
    CHECK_FALSE(report.spectrum_all.has_value());
    CHECK_FALSE(report.frobenius.has_value());
    CHECK(report.moments.size() == 7); // recursive path needs no enumeration
}

TEST_CASE("moments in the report use the recursive path") {
    ClassificationReport report = classify_report(paper_d10());
    CHECK(report.moments[2].value == BigCount(3)); // rank of D10
}

TEST_CASE("classification report for the degree-12 Mathieu group") {
    ClassificationReport report = classify_report(mathieu(12, PERMSPEC_DATA_DIR));
    CHECK(report.order == BigCount(95040));
    REQUIRE(report.sharply_transitive_k.has_value());
    CHECK(*report.sharply_transitive_k == 5);
    REQUIRE(report.is_sharp.has_value());
    CHECK(*report.is_sharp);
    CHECK(report.primitivity.primitive);
    CHECK(report.rank == 2);
}

TEST_CASE("positive transitivity degree iff a single orbit") {
    for (const GroupEngine& engine :
         {paper_d10(), counterexample_group(), symmetric_group(4), cyclic_regular(6),
          build_engine({Permutation(3)}), dihedral(6), affine_group(2, 3)}) {
        bool one_orbit = engine.orbit_partition().classes.size() == 1;
        CHECK((transitivity_degree(engine) >= 1) == one_orbit);
    }
}
