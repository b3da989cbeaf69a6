#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permspec {

// A permutation of {0, ..., degree-1}, stored as its image sequence.
//
// Convention used throughout the library: points act on the right, and
// composition reads left to right, so compose(p, q) means "apply p, then
// q". Points are 0-based everywhere in the API; the cycle-notation codec
// (parse_cycles / format_cycles) is the only place the 1-based external
// numbering appears.
class Permutation {
public:
    explicit Permutation(int degree);               // identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// Apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// compose(inverse(q), compose(p, q))
Permutation conjugate(const Permutation& p, const Permutation& q);

int fixed_point_count(const Permutation& p);
std::vector<int> fixed_points(const Permutation& p);

// Least m >= 1 with p^m = identity (the lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& p);
// Sorted cycle lengths >= 2; fixed points are omitted.
std::vector<int> cycle_lengths(const Permutation& p);
// +1 for even permutations, -1 for odd ones.
int permutation_sign(const Permutation& p);

// Disjoint-cycle codec, 1-based points. Input tolerates whitespace
// between cycles; empty text (or "()") is the identity. Output is
// canonical: cycles sorted by smallest element, each cycle starting at
// its smallest element, identity printed as "()".
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace permspec
