#pragma once

#include <string>
#include <vector>

#include "entrocone/diagrams.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

// A finite Abelian group presented as a direct product of cyclic groups.
// Elements are enumerated as mixed-radix tuples; index 0 is the identity.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<int> cyclic_orders); // each >= 2; empty = trivial

    int order() const { return order_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& cyclic_orders() const { return orders_; }

    int add(int a, int b) const;
    int neg(int a) const;
    std::vector<int> tuple_of(int e) const;
    int index_of(const std::vector<int>& tuple) const;
    std::string element_name(int e) const; // "(1,0,2)"

    bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

private:
    std::vector<int> orders_;
    int order_ = 1;
};

// A subgroup stored fully enumerated (element indices, sorted).
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(const AbelianGroup& g, std::vector<int> elements);

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int e) const { return member_[static_cast<size_t>(e)] != 0; }

    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    std::vector<int> elements_;
    std::vector<char> member_;
};

// Closure of a generator set under addition and negation.
Subgroup span(const AbelianGroup& g, const std::vector<int>& generators);
Subgroup span_tuples(const AbelianGroup& g, const std::vector<std::vector<int>>& generators);
Subgroup trivial_subgroup(const AbelianGroup& g);
Subgroup full_subgroup(const AbelianGroup& g);
Subgroup intersect(const AbelianGroup& g, const Subgroup& a, const Subgroup& b);

// All subgroups of g, ordered by (order, elements). Intended for small
// groups (order <= 64) in search loops.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);

// An assignment of subgroups to the objects of a shape such that every arrow
// i -> j has subgroup_at(i) contained in subgroup_at(j).
struct GroupDiagram {
    Shape shape;
    AbelianGroup group;
    std::vector<Subgroup> subgroup_at;

    GroupDiagram(Shape s, AbelianGroup g, std::vector<Subgroup> subs);
};

// Minimal Λn diagram of groups: subgroup at subset I is the intersection of
// the terminal subgroups H_i, i in I.
GroupDiagram minimal_group_diagram(const AbelianGroup& g, const std::vector<Subgroup>& terminals);

// The homogeneous diagram: space at i is the coset space G/H_i with uniform
// weights, reductions the coset coarsenings. Group order capped at 4096.
Diagram realize(const GroupDiagram& gd);

// Coordinate at I is log_base(|G| / |H_I|); exact whenever the index is an
// integer power of the base.
EntropyVector exact_entropy_vector(const GroupDiagram& gd, const LogBase& base);

// Exact sign of <exact entropy vector, v>, decided with integer products and
// therefore independent of the log base.
int pairing_sign(const GroupDiagram& gd, const InfoVector& v);

} // namespace entrocone
