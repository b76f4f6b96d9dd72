#include <doctest.h>

#include <cmath>

#include "entrocone/geometry.hpp"
#include "entrocone/groups.hpp"

using namespace entrocone;

TEST_CASE("abelian group arithmetic") {
    AbelianGroup g({2, 3});
    CHECK(g.order() == 6);
    int a = g.index_of({1, 2});
    int b = g.index_of({1, 1});
    CHECK(g.tuple_of(g.add(a, b)) == std::vector<int>{0, 0});
    CHECK(g.add(a, g.neg(a)) == 0);
    CHECK(g.element_name(g.index_of({1, 2})) == "(1,2)");
    CHECK(AbelianGroup({}).order() == 1);
    CHECK_THROWS_AS(AbelianGroup({1}), ParseError);
    CHECK_THROWS_AS(AbelianGroup({64, 65}), SizeLimit);
}

TEST_CASE("span of generators") {
    AbelianGroup g22({2, 2});
    Subgroup s = span_tuples(g22, {{1, 0}});
    CHECK(s.order() == 2);
    CHECK(s.contains(g22.index_of({1, 0})));
    CHECK(!s.contains(g22.index_of({0, 1})));

    AbelianGroup g333({3, 3, 3});
    Subgroup pair = span_tuples(g333, {{1, 1, 0}, {0, 1, 1}});
    CHECK(pair.order() == 9);

    CHECK(trivial_subgroup(g22).order() == 1);
    CHECK(span(g22, {}).order() == 1);
    CHECK(full_subgroup(g22).order() == 4);
}

TEST_CASE("subgroup enumeration for small groups") {
    // Z2 x Z2 has subgroups {0}, three of order 2, and the whole group.
    auto subs = all_subgroups(AbelianGroup({2, 2}));
    CHECK(subs.size() == 5);
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == 4);
    // Z4 has exactly the chain {0} < <2> < Z4.
    CHECK(all_subgroups(AbelianGroup({4})).size() == 3);
    for (const auto& s : subs) CHECK(4 % s.order() == 0);
}

TEST_CASE("minimal group diagrams intersect terminal subgroups") {
    AbelianGroup z2({2});
    GroupDiagram gd = minimal_group_diagram(
        z2, {trivial_subgroup(z2), full_subgroup(z2), full_subgroup(z2), full_subgroup(z2)});
    CHECK(gd.subgroup_at[static_cast<size_t>(gd.shape->index_of("1234"))].order() == 1);
    CHECK(gd.subgroup_at[static_cast<size_t>(gd.shape->index_of("234"))].order() == 2);

    AbelianGroup g22({2, 2});
    GroupDiagram a12 = minimal_group_diagram(
        g22, {span_tuples(g22, {{1, 0}}), full_subgroup(g22), span_tuples(g22, {{0, 1}}),
              span_tuples(g22, {{1, 1}})});
    CHECK(a12.subgroup_at[static_cast<size_t>(a12.shape->index_of("12"))] ==
          span_tuples(g22, {{1, 0}}));
    CHECK(a12.subgroup_at[static_cast<size_t>(a12.shape->index_of("34"))].order() == 1);

    GroupDiagram all_full = minimal_group_diagram(g22, {full_subgroup(g22), full_subgroup(g22)});
    for (const auto& s : all_full.subgroup_at) CHECK(s.order() == 4);
}

TEST_CASE("realization of group diagrams") {
    AbelianGroup z2({2});
    Diagram coin = realize(minimal_group_diagram(z2, {trivial_subgroup(z2)}));
    CHECK(coin.space_at(0).size() == 2);
    CHECK(coin.space_at(0).atom(0).weight == ratio(1, 2));

    // All subgroups equal to the group: every space a point.
    AbelianGroup g22({2, 2});
    Diagram points = realize(minimal_group_diagram(g22, {full_subgroup(g22), full_subgroup(g22)}));
    for (int o = 0; o < points.shape()->size(); ++o) CHECK(points.space_at(o).size() == 1);
}

TEST_CASE("the rank-three representative realizes with a 27-atom initial space") {
    AbelianGroup g({3, 3, 3});
    GroupDiagram gd = minimal_group_diagram(
        g, {span_tuples(g, {{1, 0, 0}, {0, 1, 0}}), span_tuples(g, {{0, 1, 0}, {0, 0, 1}}),
            span_tuples(g, {{0, 0, 1}, {1, 0, 0}}), span_tuples(g, {{1, 1, 0}, {0, 1, 1}})});
    Diagram d = realize(gd);
    CHECK(d.space_at(d.initial()).size() == 27);

    EntropyVector exact = exact_entropy_vector(gd, LogBase::base3());
    CHECK(exact.all_exact());
    std::vector<Rational> expected = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3};
    CHECK(exact.exact_coords() == expected);
}

TEST_CASE("the rank-two representative has the printed base-2 coordinates") {
    AbelianGroup g({2, 2});
    GroupDiagram gd = minimal_group_diagram(
        g, {span_tuples(g, {{1, 0}}), full_subgroup(g), span_tuples(g, {{0, 1}}),
            span_tuples(g, {{1, 1}})});
    EntropyVector exact = exact_entropy_vector(gd, LogBase::bits());
    std::vector<Rational> expected = {1, 0, 1, 1, 1, 2, 2, 1, 1, 2, 2, 2, 2, 2, 2};
    CHECK(exact.exact_coords() == expected);
}

TEST_CASE("the trivial diagram has a zero entropy vector") {
    AbelianGroup z2({2});
    GroupDiagram gd = minimal_group_diagram(z2, {full_subgroup(z2), full_subgroup(z2)});
    for (const auto& v : exact_entropy_vector(gd, LogBase::bits()).values)
        CHECK(v.exact() == 0);
}

TEST_CASE("exact vectors agree with realized entropy vectors") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> orders;
        int pick = static_cast<int>(rng.below(4));
        if (pick == 0) orders = {2, 2};
        if (pick == 1) orders = {4};
        if (pick == 2) orders = {2, 3};
        if (pick == 3) orders = {3, 3};
        AbelianGroup g(orders);
        std::vector<Subgroup> terminals;
        for (int t = 0; t < 3; ++t) {
            std::vector<int> gens;
            for (unsigned long long k = rng.below(3); k > 0; --k)
                gens.push_back(static_cast<int>(rng.below(static_cast<unsigned long long>(g.order()))));
            terminals.push_back(span(g, gens));
        }
        GroupDiagram gd = minimal_group_diagram(g, terminals);
        EntropyVector exact = exact_entropy_vector(gd, LogBase::bits());
        EntropyVector realized = entropy_vector(realize(gd), LogBase::bits());
        for (size_t i = 0; i < exact.values.size(); ++i)
            CHECK(std::abs(exact.values[i].value() - realized.values[i].value()) < 1e-12);
    }
}

TEST_CASE("group vectors satisfy Shannon and Ingleton exactly") {
    AbelianGroup g({2, 3});
    GroupDiagram gd = minimal_group_diagram(
        g, {span(g, {1}), span(g, {2}), span(g, {3}), trivial_subgroup(g)});
    // Mixed-order group: coordinates are irrational in base 2, but the sign
    // of any pairing is still decided exactly.
    for (const auto& ing : ingleton_vectors(lambda_shape(4)))
        CHECK(pairing_sign(gd, ing) >= 0);

    EntropyVector v = exact_entropy_vector(gd, LogBase::bits());
    Membership m = in_cone(v, shannon_generators(lambda_shape(4)), 1e-9);
    CHECK(m.member);
}

TEST_CASE("subgroup inclusion is enforced for arbitrary shapes") {
    AbelianGroup g22({2, 2});
    Shape l2 = lambda_shape(2);
    // Subgroup at the initial object must sit inside the terminals.
    CHECK_THROWS_AS(GroupDiagram(l2, g22,
                                 {span_tuples(g22, {{1, 0}}), trivial_subgroup(g22),
                                  span_tuples(g22, {{1, 0}})}),
                    ShapeMismatch);
}
