#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "entrocone/diagrams.hpp"
#include "entrocone/geometry.hpp"

using namespace entrocone;

namespace {

const Shape& l4() {
    static Shape s = lambda_shape(4);
    return s;
}

EntropyVector exact_l4(std::vector<long> flat) {
    std::vector<Rational> coords(flat.begin(), flat.end());
    return EntropyVector::exact(l4(), coords);
}

Rational coeff_at(const InfoVector& v, const std::string& name) {
    auto it = v.coeff.find(lambda_object_index(v.shape, name));
    return it == v.coeff.end() ? Rational(0) : it->second;
}

} // namespace

TEST_CASE("info vector families expand correctly") {
    Shape s = l4();
    InfoVector cmi = info_cmi(s, s->index_of("1"), s->index_of("2"), s->index_of("3"));
    CHECK(coeff_at(cmi, "13") == 1);
    CHECK(coeff_at(cmi, "23") == 1);
    CHECK(coeff_at(cmi, "3") == -1);
    CHECK(coeff_at(cmi, "123") == -1);
    CHECK(cmi.coeff.size() == 4);

    Shape s2 = lambda_shape(2);
    InfoVector mi = info_mi(s2, s2->index_of("1"), s2->index_of("2"));
    CHECK(coeff_at(mi, "1") == 1);
    CHECK(coeff_at(mi, "2") == 1);
    CHECK(coeff_at(mi, "12") == -1);

    // [i|i] collapses to zero; [i:i] to [i].
    CHECK(info_cond(s2, 0, 0).is_zero());
    InfoVector self_mi = info_mi(s2, 0, 0);
    CHECK(self_mi.coeff.size() == 1);
}

TEST_CASE("conditional mutual information vanishes on independent coins") {
    Shape s3 = lambda_shape(3);
    // Three independent fair bits: entropy = cardinality.
    std::vector<Scalar> values;
    for (int o = 0; o < s3->size(); ++o)
        values.emplace_back(Rational(static_cast<long>(s3->object(o).size())));
    EntropyVector f(s3, values);
    Scalar v = pair(f, info_cmi(s3, s3->index_of("1"), s3->index_of("2"), s3->index_of("3")));
    CHECK(v.exact() == 0);
}

TEST_CASE("shannon generator counts and lambda-2 contents") {
    CHECK(shannon_generators(lambda_shape(1)).generators.size() == 1);
    // 3 base + 2 conditional + 1 mutual information.
    auto sh2 = shannon_generators(lambda_shape(2));
    CHECK(sh2.generators.size() == 6);
    // 7 + 12 + 9 + 3 and 15 + 50 + 55 + 42.
    CHECK(shannon_generators(lambda_shape(3)).generators.size() == 31);
    CHECK(shannon_generators(lambda_shape(4)).generators.size() == 162);
    CHECK_THROWS_AS(shannon_generators(lambda_shape(6)), SizeLimit);

    Shape s2 = lambda_shape(2);
    std::vector<InfoVector> expected = {
        info_base(s2, s2->index_of("1")),  info_base(s2, s2->index_of("2")),
        info_base(s2, s2->index_of("12")), info_cond(s2, s2->index_of("1"), s2->index_of("2")),
        info_cond(s2, s2->index_of("2"), s2->index_of("1")),
        info_mi(s2, s2->index_of("1"), s2->index_of("2"))};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : sh2.generators) found = found || g.same_coefficients(e);
        CHECK(found);
    }
}

TEST_CASE("the six ingleton vectors and the printed expansion") {
    auto ings = ingleton_vectors(l4());
    CHECK(ings.size() == 6);
    for (size_t i = 0; i < ings.size(); ++i)
        for (size_t j = i + 1; j < ings.size(); ++j)
            CHECK(!ings[i].same_coefficients(ings[j]));

    InfoVector ing = ingleton_vector(l4(), 1, 2, 3, 4);
    CHECK(coeff_at(ing, "1") == -1);
    CHECK(coeff_at(ing, "2") == -1);
    CHECK(coeff_at(ing, "12") == 1);
    CHECK(coeff_at(ing, "13") == 1);
    CHECK(coeff_at(ing, "14") == 1);
    CHECK(coeff_at(ing, "23") == 1);
    CHECK(coeff_at(ing, "24") == 1);
    CHECK(coeff_at(ing, "34") == -1);
    CHECK(coeff_at(ing, "123") == -1);
    CHECK(coeff_at(ing, "124") == -1);
    CHECK(ing.coeff.size() == 10);
}

TEST_CASE("pairings around the special vector") {
    EntropyVector spc = spc_vector();
    InfoVector ing = ingleton_vector(l4(), 1, 2, 3, 4);
    CHECK(pair(spc, ing).exact() == -1);

    InfoVector zero(l4(), "0");
    CHECK(pair(spc, zero).exact() == 0);

    // <a11, [3:4]> = [3] + [4] - [34] = 1 + 1 - 1.
    EntropyVector a11 = ning_chart().vertex(11);
    CHECK(pair(a11, info_mi(l4(), l4()->index_of("3"), l4()->index_of("4"))).exact() == 1);

    CHECK_THROWS_AS(pair(spc, info_base(lambda_shape(2), 0)), ShapeMismatch);
}

TEST_CASE("cone membership of the special vector") {
    EntropyVector spc = spc_vector();
    CHECK(in_cone(spc, shannon_generators(l4()), 0.0).member);
    Membership m = in_cone(spc, abelian_cone_spec(l4()), 0.0);
    CHECK(!m.member);
    CHECK(m.witness == "ing(12;34)");
    CHECK(m.worst_exact_value == -1);

    EntropyVector zero = EntropyVector::zero(l4());
    CHECK(in_cone(zero, abelian_cone_spec(l4()), 0.0).member);
}

TEST_CASE("symmetric group action") {
    EntropyVector spc = spc_vector();
    // (1 2) stabilizes the special vector.
    EntropyVector swapped = sn_act({2, 1, 3, 4}, spc);
    CHECK(swapped.exact_coords() == spc.exact_coords());

    // (1 3)(2 4) moves the heavy pair coordinate from [34] to [12].
    EntropyVector crossed = sn_act({3, 4, 1, 2}, spc);
    CHECK(crossed.exact_coords() != spc.exact_coords());
    CHECK(crossed.values[static_cast<size_t>(l4()->index_of("12"))].exact() == 4);
    CHECK(crossed.values[static_cast<size_t>(l4()->index_of("34"))].exact() == 3);

    // Full orbit has six members.
    std::set<std::vector<Rational>> orbit;
    std::vector<int> perm = {1, 2, 3, 4};
    do {
        orbit.insert(sn_act(perm, spc).exact_coords());
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(orbit.size() == 6);
}

TEST_CASE("duality of the pairing under the symmetric group action") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> coords;
        for (int i = 0; i < 15; ++i)
            coords.push_back(ratio(static_cast<long>(rng.below(19)) - 9,
                                   1 + static_cast<long>(rng.below(4))));
        EntropyVector f = EntropyVector::exact(l4(), coords);
        InfoVector v = ingleton_vector(l4(), 1, 2, 3, 4);
        if (trial % 2) v = info_cmi(l4(), static_cast<int>(rng.below(15)),
                                    static_cast<int>(rng.below(15)),
                                    static_cast<int>(rng.below(15)));
        std::vector<int> perm = {1, 2, 3, 4};
        for (int k = 3; k > 0; --k)
            std::swap(perm[static_cast<size_t>(k)], perm[rng.below(static_cast<unsigned long long>(k + 1))]);
        if (v.is_zero()) continue;
        CHECK(pair(sn_act(perm, f), sn_act(perm, v)).exact() == pair(f, v).exact());
    }
}

TEST_CASE("extremal rays of small shannon cones") {
    auto rays1 = extremal_rays(shannon_generators(lambda_shape(1)));
    CHECK(rays1 == std::vector<Ray>{{Rational(1)}});

    auto rays2 = extremal_rays(shannon_generators(lambda_shape(2)));
    std::vector<Ray> expected2 = {{Rational(0), Rational(1), Rational(1)},
                                  {Rational(1), Rational(0), Rational(1)},
                                  {Rational(1), Rational(1), Rational(1)}};
    CHECK(rays2 == expected2);

    // The eight rays over three variables: seven indicator vectors plus the
    // uniform rank-two function, in coordinate order [1][2][3][12][13][23][123].
    auto rays3 = extremal_rays(shannon_generators(lambda_shape(3)));
    auto mk = [](std::vector<long> v) {
        Ray r;
        for (long x : v) r.emplace_back(x);
        return r;
    };
    std::vector<Ray> expected3 = {
        mk({0, 0, 1, 0, 1, 1, 1}), mk({0, 1, 0, 1, 0, 1, 1}), mk({0, 1, 1, 1, 1, 1, 1}),
        mk({1, 0, 0, 1, 1, 0, 1}), mk({1, 0, 1, 1, 1, 1, 1}), mk({1, 1, 0, 1, 1, 1, 1}),
        mk({1, 1, 1, 1, 1, 1, 1}), mk({1, 1, 1, 2, 2, 2, 2})};
    CHECK(rays3 == expected3);

    auto orbits3 = sn_orbits(lambda_shape(3), rays3);
    CHECK(orbits3.size() == 4);
}

TEST_CASE("ray enumeration is deterministic") {
    auto a = extremal_rays(shannon_generators(lambda_shape(3)));
    auto b = extremal_rays(shannon_generators(lambda_shape(3)));
    CHECK(a == b);
}

TEST_CASE("extremality certificates") {
    ConeSpec sh = shannon_generators(l4());
    EntropyVector spc = spc_vector();
    CHECK(is_extremal(spc.exact_coords(), sh));
    CHECK(is_extremal(ning_chart().vertex(11).exact_coords(), sh));

    // An interior point of a two-dimensional face is not extremal.
    std::vector<Rational> mid = ning_chart().row(1).coords;
    const auto& ones = ning_chart().row(11).coords;
    for (size_t i = 0; i < mid.size(); ++i) mid[i] += ones[i];
    CHECK(!is_extremal(mid, sh));

    std::vector<Rational> outside(15, Rational(0));
    outside[0] = -1;
    CHECK_THROWS_AS(is_extremal(outside, sh), NotInCone);
}

TEST_CASE("the chart pairing matrix is the identity") {
    const SimplexChart& chart = ning_chart();
    for (int i = 1; i <= 15; ++i)
        for (int j = 1; j <= 15; ++j)
            CHECK(pair(chart.vertex(j), chart.row(i).alpha).exact() == (i == j ? 1 : 0));
}

TEST_CASE("verify_chart passes on the adopted rows") {
    ChartReport report = verify_chart(ning_chart());
    CHECK(report.all_pass);
    CHECK(report.checks.size() == 75);
    CHECK(report.reconciliation_notes.size() == 6);
}

TEST_CASE("the original a3 row carries an exact monotonicity violation") {
    const ChartRow& a3 = ning_chart().row(3);
    REQUIRE(a3.reconciled);
    REQUIRE(a3.printed_coords.has_value());
    EntropyVector printed = EntropyVector::exact(l4(), *a3.printed_coords);
    // [123] - [13] pairs to -1: the triple coordinate sits below the pair.
    InfoVector mono = info_cond(l4(), l4()->index_of("123"), l4()->index_of("13"));
    CHECK(pair(printed, mono).exact() == -1);
    CHECK(!in_cone(printed, shannon_generators(l4()), 0.0).member);
}

TEST_CASE("the original a5 row sits off the ingleton face") {
    const ChartRow& a5 = ning_chart().row(5);
    REQUIRE(a5.reconciled);
    EntropyVector printed = EntropyVector::exact(l4(), *a5.printed_coords);
    CHECK(pair(printed, ingleton_vector(l4(), 1, 2, 3, 4)).exact() == 1);
    // It is Shannon-valid, so only the face condition exposes it.
    CHECK(in_cone(printed, shannon_generators(l4()), 0.0).member);
    // The adopted a5 row pairs to 1 with its own covector and lies on the face.
    EntropyVector adopted = ning_chart().vertex(5);
    CHECK(pair(adopted, a5.alpha).exact() == 1);
    CHECK(pair(adopted, ingleton_vector(l4(), 1, 2, 3, 4)).exact() == 0);
}

TEST_CASE("strict chart verification fails where the reconciliation says so") {
    ChartReport strict = verify_chart(chart_with_printed_rows());
    CHECK(!strict.all_pass);
    int fails = 0;
    for (const auto& c : strict.checks)
        if (!c.pass) ++fails;
    CHECK(fails > 0);
    // Rows outside the reconciled families still pass everything.
    for (const auto& c : strict.checks)
        if (c.row == "a1" || c.row == "a12" || c.row == "a14" || c.row == "a15") CHECK(c.pass);
}

TEST_CASE("alpha coordinates are the coefficients in the vertex basis") {
    auto e15 = alpha_coords(spc_vector());
    for (int i = 0; i < 15; ++i) CHECK(e15[static_cast<size_t>(i)].exact() == (i == 14 ? 1 : 0));

    // Linearity: 2 a1 + 3 a11.
    EntropyVector combo =
        Rational(2) * ning_chart().vertex(1) + Rational(3) * ning_chart().vertex(11);
    auto alpha = alpha_coords(combo);
    for (int i = 0; i < 15; ++i) {
        Rational expected = (i == 0) ? 2 : (i == 10 ? 3 : 0);
        CHECK(alpha[static_cast<size_t>(i)].exact() == expected);
    }
}

TEST_CASE("reconstruction from alpha coordinates is exact") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> coords;
        for (int i = 0; i < 15; ++i)
            coords.push_back(ratio(static_cast<long>(rng.below(41)) - 20,
                                   1 + static_cast<long>(rng.below(8))));
        EntropyVector f = EntropyVector::exact(l4(), coords);
        auto alpha = alpha_coords(f);
        EntropyVector sum = EntropyVector::zero(l4());
        for (int i = 1; i <= 15; ++i)
            sum += alpha[static_cast<size_t>(i - 1)].exact() * ning_chart().vertex(i);
        CHECK(sum.exact_coords() == coords);
    }
}

TEST_CASE("four independent coins reconstruct through the chart") {
    std::vector<Scalar> values;
    for (int o = 0; o < l4()->size(); ++o)
        values.emplace_back(Rational(static_cast<long>(l4()->object(o).size())));
    EntropyVector coins(l4(), values);
    auto alpha = alpha_coords(coins);
    for (int i = 0; i < 4; ++i) CHECK(alpha[static_cast<size_t>(i)].exact() == 1);
    for (int i = 4; i < 15; ++i) CHECK(alpha[static_cast<size_t>(i)].exact() == 0);
    CHECK(in_ning(coins, 0.0));
}

TEST_CASE("ning membership via alpha nonnegativity") {
    CHECK(in_ning(spc_vector(), 0.0));
    CHECK(in_ning(ning_chart().vertex(3), 0.0));
    EntropyVector diff = ning_chart().vertex(1) - spc_vector();
    CHECK(!in_ning(diff, 0.0));
}

TEST_CASE("ray enumeration caps") {
    CHECK_THROWS_AS(extremal_rays(shannon_generators(lambda_shape(5))), SizeLimit);
}
