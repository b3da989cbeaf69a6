#include "permspec/perm.hpp"

#include <algorithm>
#include <numeric>

#include "permspec/errors.hpp"

namespace permspec {

Permutation::Permutation(int degree) {
    if (degree < 1)
        throw DomainError("permutation degree must be >= 1");
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1)
        throw DomainError("permutation degree must be >= 1");
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n)
            throw DomainError("image out of range in permutation");
        if (seen[v])
            throw DomainError("duplicate image in permutation");
        seen[v] = 1;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DomainError("compose: degree mismatch");
    std::vector<int> images(p.degree());
    for (int i = 0; i < p.degree(); ++i)
        images[i] = q.image(p.image(i));
    return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(p.degree());
    for (int i = 0; i < p.degree(); ++i)
        images[p.image(i)] = i;
    return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
    return compose(inverse(q), compose(p, q));
}

int fixed_point_count(const Permutation& p) {
    int count = 0;
    for (int i = 0; i < p.degree(); ++i)
        if (p.image(i) == i)
            ++count;
    return count;
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> pts;
    for (int i = 0; i < p.degree(); ++i)
        if (p.image(i) == i)
            pts.push_back(i);
    return pts;
}

std::vector<int> cycle_lengths(const Permutation& p) {
    std::vector<char> seen(p.degree(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.image(i) == i)
            continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p.image(j);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::uint64_t element_order(const Permutation& p) {
    std::uint64_t order = 1;
    for (int len : cycle_lengths(p)) {
        std::uint64_t g = std::gcd(order, static_cast<std::uint64_t>(len));
        std::uint64_t next = order / g * static_cast<std::uint64_t>(len);
        if (next / static_cast<std::uint64_t>(len) != order / g)
            throw DomainError("element order overflows 64 bits");
        order = next;
    }
    return order;
}

int permutation_sign(const Permutation& p) {
    int transpositions = 0;
    for (int len : cycle_lengths(p))
        transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1)
        throw DomainError("parse_cycles: degree must be >= 1");
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(degree, 0);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("cycle notation: expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!cycle.empty()) {
                if (text[pos] != ',')
                    throw ParseError("cycle notation: expected ',' at position " + std::to_string(pos));
                ++pos;
                skip_ws();
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start)
                throw ParseError("cycle notation: expected point at position " + std::to_string(pos));
            long value = std::stol(text.substr(start, pos - start));
            if (value < 1 || value > degree)
                throw ParseError("cycle notation: point " + std::to_string(value) +
                                 " out of range 1.." + std::to_string(degree));
            int point = static_cast<int>(value) - 1;
            if (used[point])
                throw ParseError("cycle notation: point " + std::to_string(value) + " repeated");
            used[point] = 1;
            cycle.push_back(point);
            skip_ws();
        }
        if (pos >= text.size())
            throw ParseError("cycle notation: unterminated cycle");
        ++pos; // ')'
        if (cycle.size() == 1)
            throw ParseError("cycle notation: singleton cycle (" +
                             std::to_string(cycle[0] + 1) + ") is not allowed");
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.image(i) == i)
            continue;
        out.push_back('(');
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first)
                out.push_back(',');
            out += std::to_string(j + 1);
            first = false;
            j = p.image(j);
        }
        out.push_back(')');
    }
    if (out.empty())
        out = "()";
    return out;
}

} // namespace permspec
