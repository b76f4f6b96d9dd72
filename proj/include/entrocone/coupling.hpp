#pragma once

#include <tuple>
#include <vector>

#include "entrocone/diagrams.hpp"

namespace entrocone {

// A coupling of two diagrams over the same shape: a joint distribution on
// the two initial spaces whose marginals match exactly, together with the
// induced two-fan (objectwise minimal by construction).
struct Coupling {
    Diagram left, right;
    std::vector<std::tuple<int, int, Rational>> joint; // (left atom, right atom, weight > 0)
    TwoFanOfDiagrams fan;
};

// Entropy distance of a fan: sum over objects of
// |H(Z_i)-H(X_i)| + |H(Z_i)-H(Y_i)|. The apex dominates both feet along
// reductions, so this equals sum(2 H(Z_i) - H(X_i) - H(Y_i)); both forms are
// computed and must agree.
Scalar kd(const TwoFanOfDiagrams& fan, const LogBase& base);

// Builds the coupling induced by `joint`. Throws MarginalMismatch when the
// joint's marginals differ from the initial distributions.
Coupling induce(const Diagram& left, const Diagram& right,
                const std::vector<std::tuple<int, int, Rational>>& joint);

struct IkdResult {
    double value = 0.0;
    Scalar scalar_value;
    long vertices_enumerated = 0; // distinct feasible vertices (exact method)
    std::vector<std::tuple<int, int, Rational>> joint;
};

// Exact minimum of kd over all couplings. Apex entropies are concave in the
// joint and kd has positive weight on them, so the minimum sits at a vertex
// of the transport polytope; all vertices are enumerated with exact
// arithmetic. Requires |left initial| * |right initial| <= 30.
IkdResult ikd_exact(const Diagram& left, const Diagram& right, const LogBase& base);

// Feasible upper bound from greedy largest-remaining-mass pairing on the
// initial spaces (ties broken lexicographically by label).
IkdResult ikd_greedy(const Diagram& left, const Diagram& right, const LogBase& base);

struct AikdEstimate {
    std::vector<double> raw;      // u_n = ikd_greedy(X^n, Y^n)/n, n = 1..n_max
    std::vector<double> envelope; // running minimum; a valid upper bound at each n
};

// Subadditivity makes min_n u_n an upper bound for the asymptotic distance.
AikdEstimate aikd_upper(const Diagram& left, const Diagram& right, const LogBase& base, int n_max);

// n-fold tensor power of a diagram (atom-count guarded).
Diagram diagram_power(const Diagram& d, int n);

} // namespace entrocone
