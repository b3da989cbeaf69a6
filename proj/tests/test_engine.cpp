#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "permspec/errors.hpp"
#include "permspec/group_engine.hpp"

using namespace permspec;

namespace {

GroupEngine paper_d10() {
    return build_engine({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,5)(3,4)", 5)});
}

GroupEngine counterexample() {
    return build_engine({parse_cycles("(1,2)(3,4)", 6), parse_cycles("(1,3)(2,4)", 6),
                         parse_cycles("(1,2)(5,6)", 6)});
}

GroupEngine sym4() {
    return build_engine({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
}

Permutation random_permutation(std::mt19937& rng, int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

} // namespace

TEST_CASE("orders of the paper's groups") {
    CHECK(paper_d10().order() == BigCount(10));
    CHECK(counterexample().order() == BigCount(8));
    CHECK(sym4().order() == BigCount(24));
    CHECK(build_engine({Permutation(4)}).order() == BigCount(1));
}

TEST_CASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(build_engine({Permutation(4), Permutation(5)}), DomainError);
    CHECK_THROWS_AS(build_engine({}), DomainError);
}

TEST_CASE("membership by sifting") {
    GroupEngine d10 = paper_d10();
    CHECK(d10.contains(parse_cycles("(1,2,3,4,5)", 5)));
    CHECK(d10.contains(Permutation(5)));
    CHECK_FALSE(d10.contains(parse_cycles("(1,2)", 5)));
    CHECK_THROWS_AS(d10.contains(Permutation(6)), DomainError);

    // membership matches the closure oracle exactly
    auto closure = closure_enumerate(d10.generators(), 100);
    std::set<Permutation> closure_set(closure.begin(), closure.end());
    std::mt19937 rng(11);
    int inside = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Permutation p = random_permutation(rng, 5);
        bool in_closure = closure_set.count(p) > 0;
        CHECK(d10.contains(p) == in_closure);
        inside += in_closure;
    }
    CHECK(inside > 0); // 10/120 of all permutations; 200 draws hit some
}

TEST_CASE("element stream") {
    GroupEngine trivial = build_engine({Permutation(4)});
    CHECK(trivial.elements().size() == 1);
    CHECK(trivial.elements()[0] == Permutation(4));

    GroupEngine d10 = paper_d10();
    std::vector<Permutation> elems = d10.elements();
    REQUIRE(elems.size() == 10);
    std::set<Permutation> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == 10);
    int order5 = 0, order2 = 0, order1 = 0;
    for (const auto& g : elems) {
        switch (element_order(g)) {
        case 5: ++order5; break;
        case 2: ++order2; break;
        case 1: ++order1; break;
        default: FAIL("unexpected element order in D10");
        }
        CHECK(d10.contains(g));
    }
    CHECK(order5 == 4);
    CHECK(order2 == 5);
    CHECK(order1 == 1);
    for (const auto& g : d10.generators())
        CHECK(distinct.count(g) == 1);

    CHECK(sym4().elements().size() == 24);
    CHECK_THROWS_AS(d10.elements(5), CapExceeded);
}

TEST_CASE("orbit partition") {
    OrbitPartition part = counterexample().orbit_partition();
    REQUIRE(part.classes.size() == 2);
    CHECK(part.classes[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(part.classes[1] == std::vector<int>{4, 5});
    CHECK(part.representatives == std::vector<int>{0, 4});

    CHECK(build_engine({Permutation(4)}).orbit_partition().classes.size() == 4);
    CHECK(paper_d10().orbit_partition().classes.size() == 1);
    CHECK(paper_d10().is_transitive());
    CHECK_FALSE(counterexample().is_transitive());
}

TEST_CASE("point stabilizers") {
    GroupEngine d10 = paper_d10();
    GroupEngine stab = d10.point_stabilizer(0);
    CHECK(stab.order() == BigCount(2));
    CHECK(stab.contains(parse_cycles("(2,5)(3,4)", 5)));

    GroupEngine trivial = build_engine({Permutation(4)});
    CHECK(trivial.point_stabilizer(2).order() == BigCount(1));

    GroupEngine s4 = sym4();
    GroupEngine stab3 = s4.point_stabilizer(3);
    CHECK(stab3.order() == BigCount(6));
    CHECK(stab3.orbit_of(0) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(s4.point_stabilizer(7), DomainError);
}

TEST_CASE("orbit-stabilizer identity at every point") {
    for (const GroupEngine& engine : {paper_d10(), counterexample(), sym4()}) {
        for (int point = 0; point < engine.degree(); ++point) {
            BigCount orbit_size(engine.orbit_of(point).size());
            CHECK(orbit_size * engine.point_stabilizer(point).order() == engine.order());
        }
    }
}

TEST_CASE("stabilizers of points in one orbit have equal order") {
    GroupEngine d10 = paper_d10();
    for (int point = 1; point < 5; ++point)
        CHECK(d10.point_stabilizer(point).order() == d10.point_stabilizer(0).order());
    GroupEngine ce = counterexample();
    CHECK(ce.point_stabilizer(4).order() == ce.point_stabilizer(5).order());
    CHECK(ce.point_stabilizer(0).order() == ce.point_stabilizer(3).order());
}

TEST_CASE("closure oracle") {
    auto pair = closure_enumerate({parse_cycles("(1,2)", 2)}, 10);
    CHECK(pair.size() == 2);
    CHECK(closure_enumerate(counterexample().generators(), 100).size() == 8);
    CHECK(closure_enumerate(paper_d10().generators(), 100).size() == 10);
    CHECK_THROWS_AS(closure_enumerate(sym4().generators(), 10), CapExceeded);
}

TEST_CASE("engine agrees with the closure oracle") {
    for (const GroupEngine& engine : {paper_d10(), counterexample(), sym4()}) {
        std::vector<Permutation> closure = closure_enumerate(engine.generators(), 100000);
        CHECK(BigCount(closure.size()) == engine.order());
        std::vector<Permutation> streamed = engine.elements();
        std::sort(streamed.begin(), streamed.end());
        CHECK(streamed == closure);
    }
}

TEST_CASE("oracle equivalence on random subgroups of Sym(6)") {
    std::mt19937 rng(600613);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Permutation> gens;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i)
            gens.push_back(random_permutation(rng, 6));
        GroupEngine engine = build_engine(gens);
        std::vector<Permutation> closure = closure_enumerate(gens, 1000);
        CHECK(BigCount(closure.size()) == engine.order());
        // Lagrange sanity
        CHECK(factorial(6).divisible_by(engine.order()));
        for (const auto& g : closure)
            CHECK(engine.contains(g));
    }
}

TEST_CASE("construction is deterministic") {
    GroupEngine a = paper_d10();
    GroupEngine b = paper_d10();
    CHECK(a.base() == b.base());
    REQUIRE(a.levels().size() == b.levels().size());
    for (std::size_t l = 0; l < a.levels().size(); ++l) {
        CHECK(a.levels()[l].orbit == b.levels()[l].orbit);
        CHECK(a.levels()[l].reps == b.levels()[l].reps);
    }
    CHECK(a.elements() == b.elements());
    // fundamental identity: order is the product of transversal sizes
    BigCount product(1);
    for (const auto& lvl : a.levels())
        product *= BigCount(lvl.orbit.size());
    CHECK(product == a.order());
}

TEST_CASE("element orders divide the group order") {
    for (const GroupEngine& engine : {paper_d10(), counterexample(), sym4()}) {
        engine.for_each_element([&](const Permutation& g) {
            CHECK(engine.order().divisible_by(BigCount(element_order(g))));
        });
    }
}
