#include "permspec/families.hpp"

#include <numeric>

#include "permspec/errors.hpp"
#include "permspec/group_io.hpp"
#include "permspec/numtheory.hpp"

namespace permspec {

namespace {

Permutation full_cycle(int n, int first, int last) {
    // (first, first+1, ..., last), 0-based
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    for (int i = first; i < last; ++i)
        images[i] = i + 1;
    images[last] = first;
    return Permutation::from_images(std::move(images));
}

Permutation transposition(int n, int a, int b) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::swap(images[a], images[b]);
    return Permutation::from_images(std::move(images));
}

} // namespace

GroupEngine symmetric_group(int n) {
    if (n < 1)
        throw DomainError("symmetric_group: n must be >= 1");
    if (n == 1)
        return build_engine({Permutation(1)});
    if (n == 2)
        return build_engine({transposition(2, 0, 1)});
    return build_engine({transposition(n, 0, 1), full_cycle(n, 0, n - 1)});
}

GroupEngine alternating_group(int n) {
    if (n < 3)
        throw DomainError("alternating_group: n must be >= 3");
    // <(1,2,3)> for n = 3; otherwise the 3-cycle plus an even long cycle:
    // (1,...,n) when n is odd, (2,...,n) when n is even.
    std::vector<int> three(n);
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    std::vector<Permutation> gens{Permutation::from_images(std::move(three))};
    if (n > 3)
        gens.push_back(n % 2 == 1 ? full_cycle(n, 0, n - 1) : full_cycle(n, 1, n - 1));
    return build_engine(std::move(gens));
}

GroupEngine cyclic_regular(int n) {
    if (n < 1)
        throw DomainError("cyclic_regular: n must be >= 1");
    if (n == 1)
        return build_engine({Permutation(1)});
    return build_engine({full_cycle(n, 0, n - 1)});
}

GroupEngine dihedral(int n) {
    if (n < 3)
        throw DomainError("dihedral: n must be >= 3");
    std::vector<int> reflection(n);
    reflection[0] = 0;
    for (int i = 1; i < n; ++i)
        reflection[i] = n - i;
    return build_engine({full_cycle(n, 0, n - 1),
                         Permutation::from_images(std::move(reflection))});
}

GroupEngine affine_group(int p, int m, int degree_cap) {
    FiniteField field(p, m);
    if (field.size() > static_cast<std::uint64_t>(degree_cap))
        throw DomainError("affine_group: degree " + std::to_string(field.size()) +
                          " exceeds cap " + std::to_string(degree_cap));
    const int n = static_cast<int>(field.size());
    std::vector<std::uint64_t> point_to_elem = field.elements_in_lex_order();
    std::vector<int> elem_to_point(n);
    for (int i = 0; i < n; ++i)
        elem_to_point[point_to_elem[i]] = i;

    auto as_permutation = [&](auto&& map) {
        std::vector<int> images(n);
        for (int i = 0; i < n; ++i)
            images[i] = elem_to_point[map(point_to_elem[i])];
        return Permutation::from_images(std::move(images));
    };
    Permutation translate = as_permutation([&](std::uint64_t x) { return field.add(x, 1); });
    std::uint64_t gamma = field.multiplicative_generator();
    Permutation scale = as_permutation([&](std::uint64_t x) { return field.mul(gamma, x); });
    return build_engine({translate, scale});
}

GroupEngine pgl2(int q, int degree_cap) {
    auto factors = factorize(static_cast<std::uint64_t>(q < 1 ? 1 : q));
    if (q < 2 || factors.size() != 1)
        throw DomainError("pgl2: q must be a prime power >= 2");
    if (q + 1 > degree_cap)
        throw DomainError("pgl2: degree " + std::to_string(q + 1) + " exceeds cap " +
                          std::to_string(degree_cap));
    FiniteField field(static_cast<int>(factors[0].first), factors[0].second);

    // point 0 is infinity; points 1..q are the field elements in lex order
    const int n = q + 1;
    std::vector<std::uint64_t> point_to_elem = field.elements_in_lex_order();
    std::vector<int> elem_to_point(q);
    for (int i = 0; i < q; ++i)
        elem_to_point[point_to_elem[i]] = i + 1;

    auto moebius = [&](auto&& map_finite, auto&& map_infinity) {
        std::vector<int> images(n);
        images[0] = map_infinity();
        for (int i = 1; i < n; ++i)
            images[i] = map_finite(point_to_elem[i - 1]);
        return Permutation::from_images(std::move(images));
    };
    Permutation translate = moebius(
        [&](std::uint64_t x) { return elem_to_point[field.add(x, 1)]; }, [&] { return 0; });
    std::uint64_t gamma = field.multiplicative_generator();
    Permutation scale = moebius(
        [&](std::uint64_t x) { return elem_to_point[field.mul(gamma, x)]; }, [&] { return 0; });
    Permutation invert = moebius(
        [&](std::uint64_t x) { return x == 0 ? 0 : elem_to_point[field.inv(x)]; },
        [&] { return elem_to_point[0]; });
    return build_engine({translate, scale, invert});
}

GroupEngine mathieu(int degree, const std::string& data_dir) {
    if (degree != 11 && degree != 12)
        throw DomainError("mathieu: unsupported degree " + std::to_string(degree) +
                          " (only 11 and 12 exist here)");
    const BigCount forced_order =
        degree == 11 ? falling_factorial(11, 4) : falling_factorial(12, 5);
    std::string path = data_dir + "/mathieu" + std::to_string(degree) + ".gens";
    GroupFile file = load_group_file(path);
    if (file.degree != degree)
        throw ParseError(path + ": degree " + std::to_string(file.degree) +
                         " does not match requested " + std::to_string(degree));
    GroupEngine engine = engine_from_file(file);
    if (engine.order() != forced_order)
        throw OrderAssertionError(path + ": generator data yields order " +
                                  engine.order().to_decimal() + ", expected " +
                                  forced_order.to_decimal());
    return engine;
}

GroupEngine counterexample_group() {
    return build_engine({parse_cycles("(1,2)(3,4)", 6), parse_cycles("(1,3)(2,4)", 6),
                         parse_cycles("(1,2)(5,6)", 6)});
}

} // namespace permspec
