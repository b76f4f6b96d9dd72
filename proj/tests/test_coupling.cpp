#include <doctest.h>

#include <cmath>
#include <map>

#include "entrocone/coupling.hpp"

using namespace entrocone;

namespace {

const LogBase kBits = LogBase::bits();

Diagram coin() { return space_as_diagram(Space::fair_coin()); }
Diagram point() { return space_as_diagram(Space::point()); }

// A small family of spaces for exhaustive pseudo-distance checks.
std::vector<Space> family() {
    return {
        Space::point(),
        Space::fair_coin(),
        Space::two_atom(ratio(1, 4)),
        Space::two_atom(ratio(1, 3)),
        Space::uniform({"a", "b", "c"}),
        Space::uniform({"a", "b", "c", "d"}),
        Space({{"a", ratio(1, 2)}, {"b", ratio(1, 4)}, {"c", ratio(1, 4)}}),
        Space({{"a", ratio(2, 3)}, {"b", ratio(1, 6)}, {"c", ratio(1, 6)}}),
    };
}

} // namespace

TEST_CASE("kd of an identity fan is zero, of an independent coupling two bits") {
    Space c = Space::fair_coin();
    TwoFanOfDiagrams ident = two_fan_of_spaces(c, c, c, {0, 1}, {0, 1});
    CHECK(kd(ident, kBits).exact() == 0);

    Space four = tensor(c, c);
    TwoFanOfDiagrams indep = two_fan_of_spaces(four, c, c, {0, 0, 1, 1}, {0, 1, 0, 1});
    CHECK(kd(indep, kBits).exact() == 2);
}

TEST_CASE("induced couplings check marginals exactly") {
    Diagram c = coin();
    // Diagonal joint on identical spaces gives distance zero.
    Coupling diag = induce(c, c, {{0, 0, ratio(1, 2)}, {1, 1, ratio(1, 2)}});
    CHECK(kd(diag.fan, kBits).exact() == 0);

    // Product joint induces the objectwise tensor apex.
    Coupling prod = induce(c, c,
                           {{0, 0, ratio(1, 4)},
                            {0, 1, ratio(1, 4)},
                            {1, 0, ratio(1, 4)},
                            {1, 1, ratio(1, 4)}});
    CHECK(prod.fan.apex().space_at(0).size() == 4);
    CHECK(kd(prod.fan, kBits).exact() == 2);

    CHECK_THROWS_AS(induce(c, c, {{0, 0, ratio(1, 2)}, {1, 0, ratio(1, 2)}}), MarginalMismatch);
    CHECK_THROWS_AS(induce(c, c, {{0, 0, Rational(1)}}), MarginalMismatch);
}

TEST_CASE("apex entropy dominates both feet in any induced coupling") {
    SplitMix64 rng(3);
    auto spaces = family();
    for (int trial = 0; trial < 20; ++trial) {
        const Space& x = spaces[rng.below(spaces.size())];
        const Space& y = spaces[rng.below(spaces.size())];
        Diagram dx = space_as_diagram(x), dy = space_as_diagram(y);
        IkdResult r = ikd_greedy(dx, dy, kBits);
        Coupling c = induce(dx, dy, r.joint);
        double hz = entropy(c.fan.apex().space_at(0), kBits).value();
        CHECK(hz >= entropy(x, kBits).value() - 1e-12);
        CHECK(hz >= entropy(y, kBits).value() - 1e-12);
    }
}

TEST_CASE("exact intrinsic distance on basic pairs") {
    CHECK(ikd_exact(coin(), coin(), kBits).scalar_value.exact() == 0);
    // Any coupling of a coin with a point has the coin itself as apex.
    IkdResult cp = ikd_exact(coin(), point(), kBits);
    CHECK(cp.scalar_value.exact() == 1);
    CHECK(cp.vertices_enumerated == 1);

    // Uniform-4 against a coin: the 1-Lipschitz bound |2-1| is attained by
    // any 2-to-1 pairing, so the minimum is exactly one bit.
    Diagram u4 = space_as_diagram(Space::uniform({"a", "b", "c", "d"}));
    IkdResult r = ikd_exact(u4, coin(), kBits);
    CHECK(r.scalar_value.exact() == 1);
    CHECK(r.vertices_enumerated > 1);
}

TEST_CASE("exact ikd size guard") {
    Diagram big = space_as_diagram(Space::uniform({"a", "b", "c", "d", "e", "f"}));
    CHECK_THROWS_AS(ikd_exact(big, big, kBits), SizeLimit);
}

TEST_CASE("pseudo-distance properties on the exhaustive small family") {
    auto spaces = family();
    const int n = static_cast<int>(spaces.size());
    std::map<std::pair<int, int>, double> dist;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IkdResult r = ikd_exact(space_as_diagram(spaces[static_cast<size_t>(i)]),
                                    space_as_diagram(spaces[static_cast<size_t>(j)]), kBits);
            dist[{i, j}] = r.value;
        }
    for (int i = 0; i < n; ++i) {
        CHECK(dist[{i, i}] == 0.0);
        for (int j = 0; j < n; ++j) {
            // Exact symmetry: transposing the joint gives the same value set.
            CHECK(dist[{i, j}] == dist[{j, i}]);
            // 1-Lipschitz entropy bound.
            double gap = std::abs(entropy(spaces[static_cast<size_t>(i)], kBits).value() -
                                  entropy(spaces[static_cast<size_t>(j)], kBits).value());
            CHECK(dist[{i, j}] >= gap - 1e-9);
            for (int k = 0; k < n; ++k)
                CHECK(dist[{i, k}] <= dist[{i, j}] + dist[{j, k}] + 1e-9);
        }
    }
}

TEST_CASE("greedy matches the diagonal on identical spaces and bounds exact from above") {
    auto spaces = family();
    CHECK(ikd_greedy(coin(), coin(), kBits).scalar_value.exact() == 0);
    CHECK(ikd_greedy(coin(), point(), kBits).scalar_value.exact() == 1);
    for (size_t i = 0; i < spaces.size(); ++i)
        for (size_t j = 0; j < spaces.size(); ++j) {
            Diagram a = space_as_diagram(spaces[i]), b = space_as_diagram(spaces[j]);
            CHECK(ikd_greedy(a, b, kBits).value >= ikd_exact(a, b, kBits).value - 1e-9);
        }
}

TEST_CASE("greedy gap on a random five-atom pair is reported nonnegative") {
    Space x({{"a", ratio(5, 16)}, {"b", ratio(4, 16)}, {"c", ratio(3, 16)},
             {"d", ratio(2, 16)}, {"e", ratio(2, 16)}});
    Space y({{"u", ratio(7, 16)}, {"v", ratio(5, 16)}, {"w", ratio(4, 16)}});
    Diagram dx = space_as_diagram(x), dy = space_as_diagram(y);
    double g = ikd_greedy(dx, dy, kBits).value;
    double e = ikd_exact(dx, dy, kBits).value;
    CHECK(g >= e - 1e-9);
}

TEST_CASE("tensor translation never increases the distance") {
    auto spaces = family();
    SplitMix64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const Space& x = spaces[rng.below(4)];
        const Space& y = spaces[rng.below(4)];
        const Space& w = spaces[rng.below(4)];
        double base = ikd_exact(space_as_diagram(x), space_as_diagram(y), kBits).value;
        if (x.size() * w.size() * y.size() * w.size() > 900) continue;
        if (tensor(x, w).size() * tensor(y, w).size() > 30) continue;
        double shifted = ikd_exact(space_as_diagram(tensor(x, w)),
                                   space_as_diagram(tensor(y, w)), kBits).value;
        CHECK(shifted <= base + 1e-9);
    }
}

TEST_CASE("couplings parametrized by joints dominate arbitrary fans") {
    // A non-minimal fan's joint pushforward can only lower apex entropies.
    Space apex = Space::uniform({"p", "q", "r", "s"});
    Space c = Space::fair_coin();
    TwoFanOfDiagrams fan = two_fan_of_spaces(apex, c, c, {0, 0, 1, 1}, {0, 1, 1, 0});
    double direct = kd(fan, kBits).value();
    // Collect the induced joint on (left, right) labels.
    std::map<std::pair<int, int>, Rational> cells;
    for (int a = 0; a < apex.size(); ++a)
        cells[{fan.leg_left(0)[static_cast<size_t>(a)], fan.leg_right(0)[static_cast<size_t>(a)]}] +=
            apex.atom(a).weight;
    std::vector<std::tuple<int, int, Rational>> joint;
    for (const auto& [cell, w] : cells) joint.emplace_back(cell.first, cell.second, w);
    Coupling minimized = induce(space_as_diagram(c), space_as_diagram(c), joint);
    CHECK(kd(minimized.fan, kBits).value() <= direct + 1e-12);
}

TEST_CASE("couplings work over lambda-2 diagrams, not just spaces") {
    JointTable t;
    t.n = 2;
    t.rows.push_back({{"0", "0"}, ratio(1, 2)});
    t.rows.push_back({{"1", "1"}, ratio(1, 2)});
    Diagram d = full_diagram(t).diagram;
    IkdResult self = ikd_exact(d, d, kBits);
    CHECK(self.scalar_value.exact() == 0);

    JointTable u;
    u.n = 2;
    for (const char* a : {"0", "1"})
        for (const char* b : {"0", "1"}) u.rows.push_back({{a, b}, ratio(1, 4)});
    Diagram indep = full_diagram(u).diagram;
    IkdResult cross = ikd_exact(d, indep, kBits);
    CHECK(cross.value > 0.5); // the two diagrams differ in their [12] entropy by 1
    CHECK(cross.value >= 1.0 - 1e-9);
}

TEST_CASE("asymptotic upper bounds") {
    AikdEstimate same = aikd_upper(coin(), coin(), kBits, 4);
    for (double u : same.envelope) CHECK(u == 0.0);

    AikdEstimate cp = aikd_upper(coin(), point(), kBits, 4);
    for (double u : cp.raw) CHECK(std::abs(u - 1.0) < 1e-12);

    Diagram biased = space_as_diagram(Space::two_atom(ratio(1, 3)));
    AikdEstimate cb = aikd_upper(coin(), biased, kBits, 5);
    for (size_t i = 1; i < cb.envelope.size(); ++i) CHECK(cb.envelope[i] <= cb.envelope[i - 1] + 1e-12);
    double h13 = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
    CHECK(cb.raw[0] >= (1.0 - h13) - 1e-9);

    CHECK_THROWS_AS(aikd_upper(coin(), point(), kBits, 7), SizeLimit);
}
