#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entrocone/spaces.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

// A commutative diagram of probability spaces over an indexing category.
// Arrow maps are supplied on a generating set (at least the covering
// arrows); composites for the full relation are derived and the whole
// assignment is validated: every map measure-preserving, all composites
// path-independent. Immutable once constructed.
class Diagram {
public:
    Diagram(Shape shape, std::vector<Space> spaces,
            const std::map<std::pair<int, int>, std::vector<int>>& arrow_maps);

    const Shape& shape() const { return shape_; }
    const Space& space_at(int i) const { return spaces_[static_cast<size_t>(i)]; }
    int initial() const { return shape_->initial_object(); }

    // Composite reduction map for i ancestor-of j (identity for i == j).
    const std::vector<int>& map(int i, int j) const;

    bool arrow_is_isomorphism(int i, int j) const;

private:
    Shape shape_;
    std::vector<Space> spaces_;
    std::vector<std::vector<std::vector<int>>> maps_;
};

EntropyVector entropy_vector(const Diagram& d, const LogBase& base);

Diagram tensor_diagrams(const Diagram& x, const Diagram& y);

// Conditions every space on the outcome `atom_label` of the space at
// `u_obj`: restrict the initial space to the fiber, renormalize, push
// forward. Throws ZeroWeightAtom if the atom is absent.
Diagram condition(const Diagram& d, int u_obj, const std::string& atom_label);

// Average of entropy_vector(condition(d, u_obj, u)) over the atoms u.
EntropyVector conditional_entropy_vector(const Diagram& d, int u_obj, const LogBase& base);

struct AdmissibleFan {
    Fan fan;      // objects (left <- apex -> right) with right terminal
    bool reduced; // apex -> left is an isomorphism
};

// All minimal sub-fans (x <- mca(x,u) -> u) with u terminal, x != u. Fans
// whose apex does not embed into the product of the feet are not minimal and
// are skipped.
std::vector<AdmissibleFan> find_admissible_fans(const Diagram& d);

// Identifies the endpoints of an isomorphism arrow; the resulting shape is
// revalidated (which may fail for posets where the merge creates a cycle).
Diagram collapse_arrow(const Diagram& d, int i, int j);

// Tests whether the automorphism group acts transitively on every space.
// Brute-force search, capped at 64 total atoms.
bool is_homogeneous(const Diagram& d);

// --- full diagrams -----------------------------------------------------

struct JointRow {
    std::vector<std::string> labels;
    Rational weight;
};

struct JointTable {
    int n = 0;
    std::vector<JointRow> rows;
};

// The full Λn diagram of a joint distribution: space at subset I is the
// marginal on the coordinates in I, reductions are coordinate projections.
// Keeps the (canonicalized) joint so that later operations can rebuild.
struct FullDiagram {
    JointTable joint;
    Diagram diagram;
    // Atom index of each support row at each object.
    std::vector<std::vector<int>> row_atom;

    const Shape& shape() const { return diagram.shape(); }
};

FullDiagram full_diagram(const JointTable& joint);

// Replaces variable `var` (1-based) by its product with an independent copy
// of `noise`; every joint over a subset containing var gains ent(noise), all
// others are untouched. A single-atom noise is a no-op.
FullDiagram expand_terminal(const FullDiagram& fd, int var, const Space& noise);

// --- two-fans of diagrams ----------------------------------------------

// A pair of diagram reductions with a common apex; the per-object legs form
// natural transformations (checked on covering arrows).
class TwoFanOfDiagrams {
public:
    TwoFanOfDiagrams(Diagram apex, Diagram left, Diagram right,
                     std::vector<std::vector<int>> to_left,
                     std::vector<std::vector<int>> to_right);

    const Diagram& apex() const { return apex_; }
    const Diagram& left() const { return left_; }
    const Diagram& right() const { return right_; }
    const std::vector<int>& leg_left(int obj) const { return to_left_[static_cast<size_t>(obj)]; }
    const std::vector<int>& leg_right(int obj) const { return to_right_[static_cast<size_t>(obj)]; }

private:
    Diagram apex_, left_, right_;
    std::vector<std::vector<int>> to_left_, to_right_;
};

// Exact sign of <entropy vector of d, v>, decided through big-integer
// products of the (rational) atom weights; independent of the log base.
int entropy_pairing_sign(const Diagram& d, const InfoVector& v);

// Single probability spaces as Λ1 diagrams, and fans thereof.
Diagram space_as_diagram(const Space& x);
TwoFanOfDiagrams two_fan_of_spaces(const Space& apex, const Space& left, const Space& right,
                                   const std::vector<int>& to_left, const std::vector<int>& to_right);

// Canonical minimization: objectwise, apex atoms with equal (left-image,
// right-image) pairs are merged with weights added; feet are untouched.
TwoFanOfDiagrams minimize_fan(const TwoFanOfDiagrams& fan);

} // namespace entrocone
