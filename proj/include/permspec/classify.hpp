#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permspec/bigcount.hpp"
#include "permspec/group_engine.hpp"
#include "permspec/spectrum.hpp"

namespace permspec {

// Kernel analysis of the Frobenius definition: transitive with element
// spectrum exactly {0, 1}. When the definition holds, the kernel (the
// fixed-point-free elements plus the identity) is materialized and its
// subgroup/normality/size properties are verified computationally; for
// non-Frobenius groups only its size is reported.
struct FrobeniusReport {
    bool is_frobenius = false;
    std::uint64_t kernel_size = 0;
    bool kernel_is_subgroup = false;
    bool kernel_is_normal = false;
    bool kernel_size_equals_degree = false;
    std::vector<Permutation> kernel_elements;  // populated only when is_frobenius

    friend bool operator==(const FrobeniusReport&, const FrobeniusReport&) = default;
};

// Bochert's bound n(n-1)...(n-floor(n/2)+1), applicable to primitive
// groups other than the natural symmetric and alternating groups.
struct BochertReport {
    bool applicable = false;
    BigCount bound;
    BigCount group_order;
    bool satisfied = false;

    friend bool operator==(const BochertReport&, const BochertReport&) = default;
};

struct PrimitivityResult {
    bool primitive = false;
    // A non-trivial block (sorted points) when one exists.
    std::optional<std::vector<int>> witness_block;

    friend bool operator==(const PrimitivityResult&, const PrimitivityResult&) = default;
};

// Largest k such that G is k-transitive (0 for intransitive groups;
// the trivial group on one point is 1-transitive).
int transitivity_degree(const GroupEngine& engine);

// True iff G is k-transitive with |G| = n(n-1)...(n-k+1) exactly; the
// counting argument then forces uniqueness of the witnessing element.
bool is_sharply_k_transitive(const GroupEngine& engine, int k);

// Number of orbits of a one-point stabilizer; requires transitivity.
int rank(const GroupEngine& engine);

// Block-system test: G is primitive iff it is transitive and the
// minimal block containing {0, b} is all of the points for every b.
PrimitivityResult is_primitive(const GroupEngine& engine);

FrobeniusReport frobenius_analysis(const GroupEngine& engine,
                                   std::uint64_t cap = kDefaultElementCap);

BochertReport bochert_check(const GroupEngine& engine);

// G is the natural symmetric (resp. alternating) group of its degree:
// order n! plus membership of the transposition (1,2), resp. order n!/2
// with all generators even.
bool is_natural_symmetric(const GroupEngine& engine);
bool is_natural_alternating(const GroupEngine& engine);

// Aggregate of every check for one group. Fields that need a full
// element enumeration (spectra, sharpness, Frobenius) are left empty if
// the order exceeds the cap; everything else is always filled.
struct ClassificationReport {
    int degree = 0;
    BigCount order;
    int num_orbits = 0;
    bool transitive = false;
    int transitivity_degree = 0;
    std::optional<int> sharply_transitive_k;
    std::optional<int> rank;                     // transitive only
    PrimitivityResult primitivity;
    std::optional<BochertReport> bochert;
    std::optional<bool> is_sharp;
    std::optional<Spectrum> spectrum_all;
    std::optional<Spectrum> spectrum_prime_power;
    std::optional<Spectrum> spectrum_prime;
    std::optional<FrobeniusReport> frobenius;    // transitive only
    std::vector<MomentValue> moments;            // F_0..F_6, recursive path

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify_report(const GroupEngine& engine,
                                     std::uint64_t cap = kDefaultElementCap);

} // namespace permspec
