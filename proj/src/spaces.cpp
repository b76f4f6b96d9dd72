#include "entrocone/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace entrocone {

Space::Space(std::vector<Atom> atoms) {
    Rational total = 0;
    for (auto& a : atoms) {
        if (a.weight < 0) throw NotADistribution("negative weight on atom '" + a.label + "'");
        total += a.weight;
        if (a.weight == 0) continue;
        atoms_.push_back(std::move(a));
    }
    if (total != 1)
        throw NotADistribution("weights sum to " + rational_to_string(total) + ", expected 1");
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(atoms_[static_cast<size_t>(i)].label, i).second)
            throw NotADistribution("duplicate atom label '" + atoms_[static_cast<size_t>(i)].label + "'");
    }
}

Space Space::point(const std::string& label) {
    return Space({{label, Rational(1)}});
}

Space Space::fair_coin() {
    return Space({{"0", ratio(1, 2)}, {"1", ratio(1, 2)}});
}

Space Space::uniform(const std::vector<std::string>& labels) {
    std::vector<Atom> atoms;
    Rational w = ratio(1, static_cast<long>(labels.size()));
    for (const auto& l : labels) atoms.push_back({l, w});
    return Space(std::move(atoms));
}

Space Space::two_atom(const Rational& p) {
    if (p < 0 || p > 1) throw NotADistribution("two_atom weight out of range");
    return Space({{"0", p}, {"1", 1 - p}});
}

int Space::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

int Space::index_of(const std::string& label) const {
    int i = find(label);
    if (i < 0) throw UnknownLabel("atom '" + label + "' not in space");
    return i;
}

bool Space::operator==(const Space& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i) {
        const Atom& a = atom(i);
        int j = o.find(a.label);
        if (j < 0 || o.atom(j).weight != a.weight) return false;
    }
    return true;
}

Scalar entropy(const Space& x, const LogBase& base) {
    // Canonical summation order: by weight, then label.
    std::vector<int> order(static_cast<size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = cmp(x.atom(a).weight, x.atom(b).weight);
        if (c != 0) return c < 0;
        return x.atom(a).label < x.atom(b).label;
    });

    double h = 0.0;
    for (int i : order) {
        double w = x.atom(i).weight.get_d();
        h -= w * std::log(w);
    }
    h /= base.ln();
    if (h < 0 || x.size() == 1) h = 0.0;

    if (base.is_natural()) {
        if (x.size() == 1) return Scalar(Rational(0));
        return Scalar::approximate(h);
    }
    // Exact when every weight is base^-k.
    Rational exact = 0;
    for (int i = 0; i < x.size(); ++i) {
        auto k = exact_power_exponent(base.value(), x.atom(i).weight);
        if (!k || *k > 0) return Scalar::approximate(h);
        exact += x.atom(i).weight * Rational(-*k);
    }
    return Scalar(exact);
}

Space tensor(const Space& x, const Space& y) {
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<size_t>(x.size()) * static_cast<size_t>(y.size()));
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            atoms.push_back({x.atom(i).label + kTensorJoin + y.atom(j).label,
                             x.atom(i).weight * y.atom(j).weight});
    return Space(std::move(atoms));
}

Space power(const Space& x, int n) {
    if (n < 0) throw SizeLimit("negative tensor power");
    double atoms = 1.0;
    for (int i = 0; i < n; ++i) {
        atoms *= x.size();
        if (atoms > 1e6) throw SizeLimit("tensor power exceeds 1e6 atoms");
    }
    Space acc = Space::point();
    for (int i = 0; i < n; ++i) acc = (i == 0) ? x : tensor(acc, x);
    return acc;
}

Reduction::Reduction(Space source, Space target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

bool Reduction::is_isomorphism() const {
    if (source_.size() != target_.size()) return false;
    std::vector<char> hit(static_cast<size_t>(target_.size()), 0);
    for (int s = 0; s < source_.size(); ++s) {
        int t = map_[static_cast<size_t>(s)];
        if (hit[static_cast<size_t>(t)]) return false;
        hit[static_cast<size_t>(t)] = 1;
        if (source_.atom(s).weight != target_.atom(t).weight) return false;
    }
    return true;
}

std::vector<int> validate_reduction_indices(const Space& source, const Space& target,
                                            const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != source.size())
        throw NotMeasurePreserving("map not total on source atoms");
    std::vector<Rational> mass(static_cast<size_t>(target.size()), Rational(0));
    for (int s = 0; s < source.size(); ++s) {
        int t = map[static_cast<size_t>(s)];
        if (t < 0 || t >= target.size()) throw UnknownLabel("map image out of range");
        mass[static_cast<size_t>(t)] += source.atom(s).weight;
    }
    for (int t = 0; t < target.size(); ++t) {
        if (mass[static_cast<size_t>(t)] != target.atom(t).weight)
            throw NotMeasurePreserving(
                "atom '" + target.atom(t).label + "': expected " +
                rational_to_string(target.atom(t).weight) + ", got " +
                rational_to_string(mass[static_cast<size_t>(t)]));
    }
    return map;
}

Reduction validate_reduction(const Space& source, const Space& target,
                             const std::map<std::string, std::string>& map) {
    std::vector<int> idx(static_cast<size_t>(source.size()), -1);
    for (int s = 0; s < source.size(); ++s) {
        auto it = map.find(source.atom(s).label);
        if (it == map.end())
            throw UnknownLabel("map missing source atom '" + source.atom(s).label + "'");
        idx[static_cast<size_t>(s)] = target.index_of(it->second);
    }
    validate_reduction_indices(source, target, idx);
    return Reduction(source, target, std::move(idx));
}

} // namespace entrocone
