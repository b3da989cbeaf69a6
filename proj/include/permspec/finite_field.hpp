#pragma once

#include <cstdint>
#include <vector>

namespace permspec {

// GF(p^m) with the lexicographically smallest monic irreducible modulus.
//
// Elements are encoded as integers in [0, p^m): the base-p digits of the
// code are the polynomial coefficients, constant term first (digit i is
// the coefficient of x^i). The modulus is found by scanning candidate
// lower-coefficient vectors in increasing code order and keeping the
// first irreducible one; irreducibility is checked by trial division
// against every monic polynomial of degree <= m/2, which is plenty at
// the supported sizes (p^m <= 4096).
class FiniteField {
public:
    FiniteField(int p, int m);

    int characteristic() const { return p_; }
    int extension_degree() const { return m_; }
    std::uint64_t size() const { return q_; }
    // Coefficients of the modulus, constant first, length m+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    // Multiplicative inverse of a != 0.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t multiplicative_order(std::uint64_t a) const;  // a != 0
    // The lexicographically smallest element of full multiplicative
    // order q-1 ("lexicographically" on coefficient vectors, constant
    // term first).
    std::uint64_t multiplicative_generator() const;

    // All q elements sorted by coefficient vector, constant term first
    // and most significant. This is the point ordering used by the
    // affine and projective group constructors.
    std::vector<std::uint64_t> elements_in_lex_order() const;

    std::vector<int> coefficients(std::uint64_t a) const;  // length m, constant first

private:
    int p_;
    int m_;
    std::uint64_t q_;
    std::vector<int> modulus_;
};

} // namespace permspec
