#include "permspec/finite_field.hpp"

#include <algorithm>

#include "permspec/errors.hpp"
#include "permspec/numtheory.hpp"

namespace permspec {

namespace {

constexpr std::uint64_t kFieldSizeCap = 4096;

// Dense coefficient vectors over Z/p, constant term first, no implied
// degree (trailing zeros allowed). Only used at construction time.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0)
            return i;
    return -1;
}

// Remainder of f modulo g (g monic-normalized via leading inverse).
Poly poly_mod(Poly f, const Poly& g, int p) {
    int dg = poly_degree(g);
    int lead_inv = 0;
    for (int c = 1; c < p; ++c)
        if (c * g[dg] % p == 1)
            lead_inv = c;
    for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
        int scale = f[df] * lead_inv % p;
        for (int i = 0; i <= dg; ++i) {
            int idx = df - dg + i;
            f[idx] = ((f[idx] - scale * g[i]) % p + p) % p;
        }
    }
    return f;
}

bool is_irreducible(const Poly& f, int p) {
    int df = poly_degree(f);
    if (df < 1)
        return false;
    // A reducible polynomial has a monic factor of degree <= df/2; trial
    // divide by every monic polynomial of those degrees.
    for (int d = 1; d <= df / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t rest = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_degree(poly_mod(f, g, p)) < 0)
                return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw DomainError("finite field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1)
        throw DomainError("finite field: extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= static_cast<std::uint64_t>(p);
        if (q_ > kFieldSizeCap)
            throw DomainError("finite field: size exceeds supported cap " +
                              std::to_string(kFieldSizeCap));
    }
    // smallest lower-coefficient code whose monic polynomial is irreducible
    for (std::uint64_t code = 0;; ++code) {
        if (code >= q_)
            throw DomainError("finite field: no irreducible modulus found"); // unreachable
        Poly f(m + 1, 0);
        std::uint64_t rest = code;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
}

std::vector<int> FiniteField::coefficients(std::uint64_t a) const {
    std::vector<int> coeffs(m_, 0);
    for (int i = 0; i < m_; ++i) {
        coeffs[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return coeffs;
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < m_; ++i) {
        std::uint64_t da = a % p_;
        std::uint64_t db = b % p_;
        result += (da + db) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return result;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < m_; ++i) {
        std::uint64_t da = a % p_;
        result += (p_ - da) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return result;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
    std::vector<int> ca = coefficients(a);
    std::vector<int> cb = coefficients(b);
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (ca[i] == 0)
            continue;
        for (int j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    // reduce modulo the modulus: x^m = -(lower part of modulus)
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        int c = prod[d];
        if (c == 0)
            continue;
        prod[d] = 0;
        for (int i = 0; i < m_; ++i)
            prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < m_; ++i) {
        result += static_cast<std::uint64_t>(prod[i]) * place;
        place *= p_;
    }
    return result;
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1;
    while (e != 0) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
    if (a == 0)
        throw DomainError("finite field: zero has no inverse");
    return pow(a, q_ - 2);
}

std::uint64_t FiniteField::multiplicative_order(std::uint64_t a) const {
    if (a == 0)
        throw DomainError("finite field: zero has no multiplicative order");
    // ord(a) divides q-1; peel primes off q-1 while the power stays 1
    std::uint64_t order = q_ - 1;
    for (const auto& [prime, exponent] : factorize(q_ - 1)) {
        for (int i = 0; i < exponent; ++i) {
            if (pow(a, order / prime) == 1)
                order /= prime;
            else
                break;
        }
    }
    return order;
}

std::vector<std::uint64_t> FiniteField::elements_in_lex_order() const {
    std::vector<std::uint64_t> elems(q_);
    for (std::uint64_t e = 0; e < q_; ++e)
        elems[e] = e;
    std::sort(elems.begin(), elems.end(), [this](std::uint64_t a, std::uint64_t b) {
        return coefficients(a) < coefficients(b);
    });
    return elems;
}

std::uint64_t FiniteField::multiplicative_generator() const {
    for (std::uint64_t e : elements_in_lex_order()) {
        if (e == 0)
            continue;
        if (multiplicative_order(e) == q_ - 1)
            return e;
    }
    throw DomainError("finite field: no multiplicative generator found"); // unreachable
}

} // namespace permspec
