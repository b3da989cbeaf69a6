#include "permspec/spectrum.hpp"

#include <algorithm>
#include <map>

#include "permspec/errors.hpp"
#include "permspec/numtheory.hpp"
#include "permspec/subgroups.hpp"

namespace permspec {

namespace {

// Per-degree-of-fixedness element counts from a single pass over the
// element stream. Non-identity counts only; the identity is accounted
// for separately (it is the unique element fixing everything).
struct FixedPointCensus {
    std::vector<std::uint64_t> all;          // f -> #{g != 1 : f(g) = f}
    std::vector<std::uint64_t> prime_power;  // same, g of prime power order
    std::vector<std::uint64_t> prime;        // same, g of prime order
};

FixedPointCensus fixed_point_census(const GroupEngine& engine, std::uint64_t cap) {
    FixedPointCensus census;
    census.all.assign(engine.degree() + 1, 0);
    census.prime_power.assign(engine.degree() + 1, 0);
    census.prime.assign(engine.degree() + 1, 0);
    engine.for_each_element(
        [&](const Permutation& g) {
            if (g.is_identity())
                return;
            int f = fixed_point_count(g);
            census.all[f] += 1;
            std::uint64_t order = element_order(g);
            if (is_prime_power(order))
                census.prime_power[f] += 1;
            if (is_prime(order))
                census.prime[f] += 1;
        },
        cap);
    return census;
}

Spectrum spectrum_from_counts(const std::vector<std::uint64_t>& counts, ElementFilter filter,
                              int degree) {
    Spectrum spectrum;
    spectrum.filter = filter;
    spectrum.degree = degree;
    for (int f = 0; f <= degree; ++f)
        if (counts[f] > 0)
            spectrum.values.push_back(f);
    return spectrum;
}

DivisibilityReport report_from_spectrum(const GroupEngine& engine, Spectrum spectrum) {
    DivisibilityReport report;
    report.degree = engine.degree();
    report.product = blichfeldt_product(engine.degree(), spectrum);
    report.spectrum = std::move(spectrum);
    report.group_order = engine.order();
    BigCountDivMod dm = report.product.divmod(report.group_order);
    report.divides = dm.remainder.is_zero();
    if (report.divides)
        report.quotient = dm.quotient;
    report.is_sharp = report.product == report.group_order;
    return report;
}

} // namespace

const char* filter_name(ElementFilter filter) {
    switch (filter) {
    case ElementFilter::AllNontrivialElements: return "all";
    case ElementFilter::PrimePowerOrder: return "prime-power";
    case ElementFilter::PrimeOrder: return "prime";
    case ElementFilter::AllNontrivialSubgroups: return "subgroups";
    }
    throw DomainError("unknown element filter");
}

std::optional<ElementFilter> filter_from_name(const std::string& name) {
    if (name == "all")
        return ElementFilter::AllNontrivialElements;
    if (name == "prime-power")
        return ElementFilter::PrimePowerOrder;
    if (name == "prime")
        return ElementFilter::PrimeOrder;
    if (name == "subgroups")
        return ElementFilter::AllNontrivialSubgroups;
    return std::nullopt;
}

Spectrum fixed_point_spectrum(const GroupEngine& engine, ElementFilter filter,
                              std::uint64_t cap) {
    if (filter == ElementFilter::AllNontrivialSubgroups)
        return maillet_spectrum(engine);
    FixedPointCensus census = fixed_point_census(engine, cap);
    switch (filter) {
    case ElementFilter::AllNontrivialElements:
        return spectrum_from_counts(census.all, filter, engine.degree());
    case ElementFilter::PrimePowerOrder:
        return spectrum_from_counts(census.prime_power, filter, engine.degree());
    default:
        return spectrum_from_counts(census.prime, filter, engine.degree());
    }
}

BigCount blichfeldt_product(int degree, const Spectrum& spectrum) {
    if (spectrum.degree != degree)
        throw DomainError("blichfeldt_product: spectrum degree mismatch");
    BigCount product(1);
    for (int f : spectrum.values) {
        if (f >= degree)
            throw DomainError("blichfeldt_product: spectrum value not below degree");
        product *= BigCount(static_cast<std::uint64_t>(degree - f));
    }
    return product;
}

DivisibilityReport blichfeldt_check(const GroupEngine& engine, ElementFilter filter,
                                    std::uint64_t cap) {
    if (filter == ElementFilter::AllNontrivialSubgroups)
        return maillet_check(engine);
    return report_from_spectrum(engine, fixed_point_spectrum(engine, filter, cap));
}

MomentValue moment_direct(const GroupEngine& engine, unsigned k, std::uint64_t cap) {
    const int n = engine.degree();
    FixedPointCensus census = fixed_point_census(engine, cap);
    // identity contributes n^k; 0^0 counts as 1 so F_0 sums |G| ones
    BigCount numerator = BigCount(static_cast<std::uint64_t>(n)).pow(k);
    for (int f = 0; f <= n; ++f) {
        if (census.all[f] == 0)
            continue;
        numerator += BigCount(census.all[f]) * BigCount(static_cast<std::uint64_t>(f)).pow(k);
    }
    return MomentValue{k, numerator.exact_div(engine.order(), "moment_direct")};
}

namespace {

using EngineKey = std::vector<std::vector<int>>;

EngineKey engine_key(const GroupEngine& engine) {
    EngineKey key;
    key.reserve(engine.generators().size());
    for (const auto& g : engine.generators())
        key.push_back(g.images());
    std::sort(key.begin(), key.end());
    return key;
}

BigCount moment_recursive_impl(const GroupEngine& engine, unsigned k,
                               std::map<std::pair<unsigned, EngineKey>, BigCount>& memo) {
    if (k == 0)
        return BigCount(1);
    auto key = std::make_pair(k, engine_key(engine));
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    BigCount total(0);
    for (int rep : engine.orbit_partition().representatives)
        total += moment_recursive_impl(engine.point_stabilizer(rep), k - 1, memo);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

MomentValue moment_recursive(const GroupEngine& engine, unsigned k) {
    std::map<std::pair<unsigned, EngineKey>, BigCount> memo;
    return MomentValue{k, moment_recursive_impl(engine, k, memo)};
}

bool psi_identity_check(const GroupEngine& engine, std::uint64_t cap) {
    const int n = engine.degree();
    FixedPointCensus census = fixed_point_census(engine, cap);
    Spectrum spectrum = spectrum_from_counts(census.all, ElementFilter::AllNontrivialElements, n);

    // (a) every non-identity summand (f(g)-f_1)...(f(g)-f_r) vanishes
    for (int f = 0; f <= n; ++f) {
        if (census.all[f] == 0)
            continue;
        bool vanishes = false;
        for (int fj : spectrum.values) {
            if (f == fj) {
                vanishes = true;
                break;
            }
        }
        if (!vanishes)
            return false;
    }

    // (b) the g = 1 summand equals the Blichfeldt product
    BigCount identity_summand(1);
    for (int fj : spectrum.values)
        identity_summand *= BigCount(static_cast<std::uint64_t>(n - fj));
    BigCount product = blichfeldt_product(n, spectrum);
    if (identity_summand != product)
        return false;

    // (c) the total (= the identity summand) divides out to the report quotient
    BigCountDivMod dm = identity_summand.divmod(engine.order());
    if (!dm.remainder.is_zero())
        return false;
    DivisibilityReport report = blichfeldt_check(engine, ElementFilter::AllNontrivialElements, cap);
    return report.divides && report.quotient.has_value() && *report.quotient == dm.quotient;
}

Spectrum maillet_spectrum(const GroupEngine& engine, std::uint64_t order_cap) {
    SubgroupLattice lattice = subgroup_lattice(engine, order_cap);
    std::vector<int> values;
    for (const Subgroup& subgroup : lattice.subgroups) {
        if (subgroup.members.size() == 1)
            continue; // H = 1 is excluded
        values.push_back(subgroup_fixed_points(lattice, subgroup));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return Spectrum{std::move(values), ElementFilter::AllNontrivialSubgroups, engine.degree()};
}

DivisibilityReport maillet_check(const GroupEngine& engine, std::uint64_t order_cap) {
    return report_from_spectrum(engine, maillet_spectrum(engine, order_cap));
}

} // namespace permspec
