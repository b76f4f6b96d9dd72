#pragma once

#include <map>
#include <string>
#include <vector>

#include "entrocone/indexing.hpp"
#include "entrocone/scalar.hpp"

namespace entrocone {

// A real-valued function on the objects of an indexing category. For Λn the
// object order is the printed coordinate order (singletons, pairs, ... by
// cardinality then lexicographically).
struct EntropyVector {
    Shape shape;
    std::vector<Scalar> values;

    EntropyVector() = default;
    EntropyVector(Shape s, std::vector<Scalar> v) : shape(std::move(s)), values(std::move(v)) {}

    static EntropyVector zero(const Shape& s) {
        return EntropyVector(s, std::vector<Scalar>(static_cast<size_t>(s->size())));
    }
    static EntropyVector exact(const Shape& s, const std::vector<Rational>& coords);

    bool all_exact() const;
    std::vector<Rational> exact_coords() const; // throws if any coordinate inexact

    EntropyVector& operator+=(const EntropyVector& o);
    friend EntropyVector operator+(EntropyVector a, const EntropyVector& b) { return a += b; }
    EntropyVector operator-(const EntropyVector& o) const;
    friend EntropyVector operator*(const Rational& c, const EntropyVector& f);
};

// A formal linear combination of objects with exact rational coefficients;
// the dual pairing partner of EntropyVector.
struct InfoVector {
    Shape shape;
    std::string name;              // display form, e.g. "[1:2|3]"
    std::map<int, Rational> coeff; // object index -> nonzero coefficient

    InfoVector() = default;
    InfoVector(Shape s, std::string n) : shape(std::move(s)), name(std::move(n)) {}

    void add(int object, const Rational& c);
    bool is_zero() const { return coeff.empty(); }
    InfoVector negated(const std::string& new_name) const;
    bool same_coefficients(const InfoVector& o) const { return coeff == o.coeff; }
};

// <f, sum(c_i x i)> = sum(c_i f(i)); exact when every touched coordinate of f
// is exact. Throws ShapeMismatch.
Scalar pair(const EntropyVector& f, const InfoVector& v);

// The four Shannon covector families. Objects are arbitrary members of the
// category; hats are minimal common ancestors.
InfoVector info_base(const Shape& shape, int i);                // [i]
InfoVector info_cond(const Shape& shape, int i, int j);         // [i|j] = [mca(i,j)] - [j]
InfoVector info_mi(const Shape& shape, int i, int j);           // [i:j] = [i] + [j] - [mca(i,j)]
InfoVector info_cmi(const Shape& shape, int i, int j, int k);   // [i:j|k]

// Symmetric-group action on Λn vectors: result(S) = input(sigma^{-1} S).
// `perm` maps 1-based variable v to perm[v-1].
EntropyVector sn_act(const std::vector<int>& perm, const EntropyVector& f);
InfoVector sn_act(const std::vector<int>& perm, const InfoVector& v);

// Index permutation of Λn objects induced by a variable permutation.
std::vector<int> lambda_object_permutation(const Shape& shape, const std::vector<int>& perm);

// Variable-subset helpers for Λn shapes: object index for "134"-style names.
int lambda_object_index(const Shape& shape, const std::string& digits);

} // namespace entrocone
