#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "entrocone/scalar.hpp"

namespace entrocone {

struct Atom {
    std::string label;
    Rational weight;
};

// A finite probability space with exact rational weights. Zero-weight atoms
// are dropped on construction; weights must sum to exactly 1.
class Space {
public:
    explicit Space(std::vector<Atom> atoms);

    static Space point(const std::string& label = "*");
    static Space fair_coin();
    static Space uniform(const std::vector<std::string>& labels);
    // Two atoms "0"/"1" with weights p and 1-p (p in [0,1]).
    static Space two_atom(const Rational& p);

    int size() const { return static_cast<int>(atoms_.size()); }
    const Atom& atom(int i) const { return atoms_[static_cast<size_t>(i)]; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int find(const std::string& label) const; // -1 if absent
    int index_of(const std::string& label) const; // throws UnknownLabel

    bool operator==(const Space& o) const;

private:
    std::vector<Atom> atoms_;
    std::unordered_map<std::string, int> index_;
};

// Shannon entropy in the given base. Exact rational value attached when every
// weight is an integer power of 1/base; the double part is always present and
// is summed in a canonical order so equal weight multisets give bit-equal
// results.
Scalar entropy(const Space& x, const LogBase& base);

Space tensor(const Space& x, const Space& y); // labels joined with U+22C8
Space power(const Space& x, int n);           // SizeLimit if |x|^n > 1e6

// A measure-preserving map between spaces, stored as an atom-index map.
class Reduction {
public:
    Reduction(Space source, Space target, std::vector<int> map);
    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    const std::vector<int>& map() const { return map_; }
    int apply(int source_atom) const { return map_[static_cast<size_t>(source_atom)]; }
    bool is_isomorphism() const;

private:
    Space source_, target_;
    std::vector<int> map_;
};

// Checks that `map` (source label -> target label) is total and
// measure-preserving. Errors: UnknownLabel, NotMeasurePreserving.
Reduction validate_reduction(const Space& source, const Space& target,
                             const std::map<std::string, std::string>& map);

// Index-map variant used internally; same validation.
std::vector<int> validate_reduction_indices(const Space& source, const Space& target,
                                            const std::vector<int>& map);

inline const char* kTensorJoin = "⋈";

} // namespace entrocone
