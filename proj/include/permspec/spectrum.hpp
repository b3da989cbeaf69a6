#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permspec/bigcount.hpp"
#include "permspec/group_engine.hpp"

namespace permspec {

// Subgroup-lattice computations refuse groups larger than this unless
// the caller raises the cap.
inline constexpr std::uint64_t kDefaultSubgroupOrderCap = 2000;

enum class ElementFilter {
    AllNontrivialElements,  // every g != 1
    PrimePowerOrder,        // g != 1 of order p^e
    PrimeOrder,             // g != 1 of prime order
    AllNontrivialSubgroups, // every subgroup H != 1 (Maillet's variant)
};

const char* filter_name(ElementFilter filter);                  // "all", "prime-power", ...
std::optional<ElementFilter> filter_from_name(const std::string& name);

// The set {f(g) : g passes the filter} (or {f(H)} for the subgroup
// filter), sorted ascending and duplicate-free. Empty exactly for the
// trivial group.
struct Spectrum {
    std::vector<int> values;
    ElementFilter filter = ElementFilter::AllNontrivialElements;
    int degree = 0;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Verdict of one divisibility theorem instance: does |G| divide
// (n - f_1)...(n - f_r)?
struct DivisibilityReport {
    int degree = 0;
    Spectrum spectrum;
    BigCount product;     // (n - f_1)...(n - f_r); empty spectrum gives 1
    BigCount group_order;
    bool divides = false;
    std::optional<BigCount> quotient;  // product / order, present iff divides
    bool is_sharp = false;             // product == order

    friend bool operator==(const DivisibilityReport&, const DivisibilityReport&) = default;
};

struct MomentValue {
    unsigned k = 0;
    BigCount value;

    friend bool operator==(const MomentValue&, const MomentValue&) = default;
};

Spectrum fixed_point_spectrum(const GroupEngine& engine, ElementFilter filter,
                              std::uint64_t cap = kDefaultElementCap);

BigCount blichfeldt_product(int degree, const Spectrum& spectrum);

DivisibilityReport blichfeldt_check(const GroupEngine& engine, ElementFilter filter,
                                    std::uint64_t cap = kDefaultElementCap);

// F_k(G) = (sum over g in G of f(g)^k) / |G|, evaluated literally over
// the element stream. The division is checked exact; a remainder throws
// IntegralityError (it would mean a bug, not bad input).
MomentValue moment_direct(const GroupEngine& engine, unsigned k,
                          std::uint64_t cap = kDefaultElementCap);

// The same quantity by the orbit recursion F_k(G) = sum over orbit
// representatives w of F_{k-1}(G_w), with F_0 = 1. Never enumerates all
// of G, so it has no cap.
MomentValue moment_recursive(const GroupEngine& engine, unsigned k);

// Evaluates the sum (1/|G|) sum_g (f(g)-f_1)...(f(g)-f_r) term by term:
// every g != 1 summand must vanish, the g = 1 summand must equal the
// Blichfeldt product, and the total must divide out to the report's
// quotient.
bool psi_identity_check(const GroupEngine& engine, std::uint64_t cap = kDefaultElementCap);

// Maillet's subgroup spectrum {f(H) : 1 != H <= G}, computed over the
// full subgroup lattice (join-closure of the cyclic subgroups). f(H) is
// the number of points fixed by every generator of H.
Spectrum maillet_spectrum(const GroupEngine& engine,
                          std::uint64_t order_cap = kDefaultSubgroupOrderCap);

DivisibilityReport maillet_check(const GroupEngine& engine,
                                 std::uint64_t order_cap = kDefaultSubgroupOrderCap);

} // namespace permspec
