#pragma once

#include <string>

#include "permspec/finite_field.hpp"
#include "permspec/group_engine.hpp"

namespace permspec {

// Affine and projective constructions refuse degrees beyond this.
inline constexpr int kFamilyDegreeCap = 4096;

// Standard group families on {1..n} / field points. All constructors are
// deterministic: repeated calls produce identical generator lists.

GroupEngine symmetric_group(int n);       // <(1,2), (1,...,n)>, n >= 1
GroupEngine alternating_group(int n);     // n >= 3; see families.cpp for the generator rule
GroupEngine cyclic_regular(int n);        // <(1,...,n)>, n >= 1
// Symmetries of the regular n-gon on its n vertices: the n-cycle plus
// the reflection fixing vertex 1 (i -> n+2-i mod n). n >= 3, order 2n.
GroupEngine dihedral(int n);

// Aff(1, p^m) = {x -> a*x + b, a != 0} acting on the p^m field elements,
// generated by x -> x+1 and x -> g*x for the field's lexicographically
// smallest multiplicative generator g. Points follow the field's lex
// element order (so point 1 is 0). Order p^m * (p^m - 1).
GroupEngine affine_group(int p, int m, int degree_cap = kFamilyDegreeCap);

// PGL(2, q) acting on the q+1 points of the projective line (infinity
// first, then the field elements in lex order), generated by x -> x+1,
// x -> g*x and x -> 1/x (with 0 and infinity swapped).
// Order (q+1)q(q-1); for q = 2^m this is the natural action of SL(2,2^m)
// on the one-dimensional subspaces.
GroupEngine pgl2(int q, int degree_cap = kFamilyDegreeCap);

// Mathieu group of degree 11 or 12, built from the generator data file
// ("mathieu11.gens" / "mathieu12.gens") in data_dir. The data is
// untrusted: construction fails unless the computed order equals the
// order forced by sharp 4-/5-transitivity (7920 resp. 95040).
GroupEngine mathieu(int degree, const std::string& data_dir);

// The degree-6 group <(1,2)(3,4), (1,3)(2,4), (1,2)(5,6)>: dihedral of
// order 8 in which every involution moves exactly four letters, so the
// prime-order spectrum alone fails the divisibility bound.
GroupEngine counterexample_group();

} // namespace permspec
