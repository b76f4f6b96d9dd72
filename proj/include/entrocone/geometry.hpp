#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entrocone/groups.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

// A polyhedral cone given dually: { f : <f, v> >= 0 for every generator v }.
struct ConeSpec {
    Shape shape;
    std::vector<InfoVector> generators;

    explicit ConeSpec(Shape s) : shape(std::move(s)) {}
    // Skips zero vectors and duplicates (by coefficients).
    void add(const InfoVector& v);
};

// The Shannon generating set {[i], [i|j], [i:j], [i:j|k]} over all object
// triples of Λn (n <= 5), deduplicated.
ConeSpec shannon_generators(const Shape& shape);

// ing(ab;cd) = -[a:b] + [a:b|c] + [a:b|d] + [c:d]; variables are 1-based.
InfoVector ingleton_vector(const Shape& shape, int a, int b, int c, int d);

// The six Ingleton vectors of Λ4, one per unordered pair {a,b}.
std::vector<InfoVector> ingleton_vectors(const Shape& shape);

// Shannon plus the six Ingleton vectors.
ConeSpec abelian_cone_spec(const Shape& shape);

struct Membership {
    bool member = false;
    double worst_value = 0.0;
    bool worst_exact = false;
    Rational worst_exact_value;
    std::string witness; // most violated generator when not a member
    int witness_index = -1;
};

// Exact test when f is exact and tolerance is 0; float test otherwise.
Membership in_cone(const EntropyVector& f, const ConeSpec& spec, double tolerance);

using Ray = std::vector<Rational>; // coprime integers, shape coordinate order

// Complete extremal-ray enumeration by the double description method with
// exact rational arithmetic. Inequalities are inserted in ascending order of
// nonzero-coefficient count; adjacency uses the rank criterion. Output is
// sorted lexicographically, each ray certified by a rank-(d-1) active set.
std::vector<Ray> extremal_rays(const ConeSpec& spec);

// True iff the generators active at `ray` span a rank-(d-1) subspace.
// Throws NotInCone if the ray violates a generator.
bool is_extremal(const Ray& ray, const ConeSpec& spec);

// Partition of `rays` into orbits of the full symmetric-group action on the
// Λn variables. Orbits are sorted by (size, lexicographically least member);
// members within an orbit are sorted too.
std::vector<std::vector<Ray>> sn_orbits(const Shape& shape, const std::vector<Ray>& rays);

// --- the non-Ingleton simplex chart --------------------------------------

// A minimal Λ4 diagram-of-groups descriptor: cyclic factor orders plus one
// generator list per terminal subgroup, and the log base for which the
// entropy vector has integer entries.
struct GroupRep {
    std::vector<int> cyclic_orders;
    std::vector<std::vector<std::vector<int>>> terminal_generators; // 4 subgroups
    int base = 2;
};

GroupDiagram group_diagram_of(const GroupRep& rep);

struct ChartRow {
    std::string name; // "a1" .. "a15"
    std::vector<Rational> coords;
    InfoVector alpha;
    std::optional<GroupRep> representative;
    bool reconciled = false;
    // Original data retained for audit when it differs from the adopted row.
    std::optional<std::vector<Rational>> printed_coords;
    std::optional<GroupRep> printed_representative;
};

struct SimplexChart {
    Shape shape;
    std::vector<ChartRow> rows; // 15

    const ChartRow& row(int i) const { return rows[static_cast<size_t>(i - 1)]; } // 1-based
    EntropyVector vertex(int i) const { return EntropyVector::exact(shape, row(i).coords); }
};

// The chart of vertices a1..a15 and covectors alpha1..alpha15 with the base
// simplex pairing <a_j, alpha_i> = delta_ij. Rows a3..a8 are reconciled from
// the dual-face labels and orbit sizes; the original rows are retained.
const SimplexChart& ning_chart();

// Variant of the chart with the original (unreconciled) rows adopted; used
// by strict verification to exhibit the defects.
SimplexChart chart_with_printed_rows();

struct ChartCheck {
    std::string row;   // "a3"
    std::string check; // "duality", "shannon", "ingleton-face", "representative", "extremal"
    bool pass = false;
    std::string note;
};

struct ChartReport {
    bool all_pass = false;
    std::vector<ChartCheck> checks;
    std::vector<std::string> reconciliation_notes;
};

// Runs, in exact arithmetic: (1) the 15x15 duality pairing, (2) membership
// of every vertex in the submodular cone, (3) the ing(12;34) face values,
// (4) agreement of each vertex with its group representative, (5)
// extremality of each vertex for SH plus the -ing constraint.
ChartReport verify_chart(const SimplexChart& chart);

// Coefficients of f in the vertex basis: (alpha_1(f), ..., alpha_15(f)).
std::array<Scalar, 15> alpha_coords(const EntropyVector& f);

// Membership in the non-Ingleton cone = all 15 alpha coordinates >= 0.
bool in_ning(const EntropyVector& f, double tolerance);

EntropyVector spc_vector();

} // namespace entrocone
