#include "entrocone/vectors.hpp"

#include <algorithm>

namespace entrocone {

EntropyVector EntropyVector::exact(const Shape& s, const std::vector<Rational>& coords) {
    if (static_cast<int>(coords.size()) != s->size())
        throw ShapeMismatch("coordinate count does not match shape");
    std::vector<Scalar> v;
    v.reserve(coords.size());
    for (const auto& c : coords) v.emplace_back(c);
    return EntropyVector(s, std::move(v));
}

bool EntropyVector::all_exact() const {
    return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_exact(); });
}

std::vector<Rational> EntropyVector::exact_coords() const {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& s : values) out.push_back(s.exact());
    return out;
}

EntropyVector& EntropyVector::operator+=(const EntropyVector& o) {
    if (!same_shape(shape, o.shape)) throw ShapeMismatch("adding vectors over different shapes");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

EntropyVector EntropyVector::operator-(const EntropyVector& o) const {
    if (!same_shape(shape, o.shape)) throw ShapeMismatch("subtracting vectors over different shapes");
    EntropyVector out = *this;
    for (size_t i = 0; i < values.size(); ++i) out.values[i] -= o.values[i];
    return out;
}

EntropyVector operator*(const Rational& c, const EntropyVector& f) {
    EntropyVector out = f;
    for (auto& v : out.values) v = c * v;
    return out;
}

void InfoVector::add(int object, const Rational& c) {
    auto it = coeff.find(object);
    if (it == coeff.end()) {
        if (c != 0) coeff.emplace(object, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeff.erase(it);
}

InfoVector InfoVector::negated(const std::string& new_name) const {
    InfoVector out(shape, new_name);
    for (const auto& [i, c] : coeff) out.coeff.emplace(i, -c);
    return out;
}

Scalar pair(const EntropyVector& f, const InfoVector& v) {
    if (!same_shape(f.shape, v.shape)) throw ShapeMismatch("pairing over different shapes");
    Scalar acc;
    for (const auto& [i, c] : v.coeff) acc += c * f.values[static_cast<size_t>(i)];
    return acc;
}

InfoVector info_base(const Shape& shape, int i) {
    InfoVector v(shape, "[" + shape->object(i) + "]");
    v.add(i, 1);
    return v;
}

InfoVector info_cond(const Shape& shape, int i, int j) {
    int hat = shape->minimal_common_ancestor(i, j);
    InfoVector v(shape, "[" + shape->object(i) + "|" + shape->object(j) + "]");
    v.add(hat, 1);
    v.add(j, -1);
    return v;
}

InfoVector info_mi(const Shape& shape, int i, int j) {
    int hat = shape->minimal_common_ancestor(i, j);
    InfoVector v(shape, "[" + shape->object(i) + ":" + shape->object(j) + "]");
    v.add(i, 1);
    v.add(j, 1);
    v.add(hat, -1);
    return v;
}

InfoVector info_cmi(const Shape& shape, int i, int j, int k) {
    int ihat = shape->minimal_common_ancestor(i, k);
    int jhat = shape->minimal_common_ancestor(j, k);
    int top = shape->minimal_common_ancestor(ihat, jhat);
    InfoVector v(shape, "[" + shape->object(i) + ":" + shape->object(j) + "|" +
                            shape->object(k) + "]");
    v.add(ihat, 1);
    v.add(jhat, 1);
    v.add(k, -1);
    v.add(top, -1);
    return v;
}

std::vector<int> lambda_object_permutation(const Shape& shape, const std::vector<int>& perm) {
    auto n = lambda_n_of(*shape);
    if (!n) throw ShapeMismatch("symmetric-group action requires a lambda shape");
    if (static_cast<int>(perm.size()) != *n) throw ParseError("permutation size mismatch");
    std::vector<int> out(static_cast<size_t>(shape->size()));
    for (int idx = 0; idx < shape->size(); ++idx) {
        std::string image;
        for (char c : shape->object(idx)) {
            int var = c - '0';
            image += static_cast<char>('0' + perm[static_cast<size_t>(var - 1)]);
        }
        std::sort(image.begin(), image.end());
        out[static_cast<size_t>(idx)] = shape->index_of(image);
    }
    return out;
}

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[static_cast<size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

} // namespace

EntropyVector sn_act(const std::vector<int>& perm, const EntropyVector& f) {
    auto obj_inv = lambda_object_permutation(f.shape, inverse_permutation(perm));
    EntropyVector out(f.shape, f.values);
    for (int i = 0; i < f.shape->size(); ++i)
        out.values[static_cast<size_t>(i)] = f.values[static_cast<size_t>(obj_inv[static_cast<size_t>(i)])];
    return out;
}

InfoVector sn_act(const std::vector<int>& perm, const InfoVector& v) {
    auto obj = lambda_object_permutation(v.shape, perm);
    InfoVector out(v.shape, v.name + "'");
    for (const auto& [i, c] : v.coeff) out.add(obj[static_cast<size_t>(i)], c);
    return out;
}

int lambda_object_index(const Shape& shape, const std::string& digits) {
    std::string sorted = digits;
    std::sort(sorted.begin(), sorted.end());
    return shape->index_of(sorted);
}

} // namespace entrocone
