#include <doctest.h>

#include <algorithm>

#include "entrocone/indexing.hpp"

using namespace entrocone;

namespace {

IndexingCategory chain_abc() {
    return IndexingCategory::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

} // namespace

TEST_CASE("a chain validates with the expected structure") {
    auto cat = chain_abc();
    CHECK(cat.size() == 3);
    CHECK(cat.object(cat.initial_object()) == "a");
    CHECK(cat.is_ancestor(cat.index_of("a"), cat.index_of("c"))); // closure
    CHECK(cat.terminal_objects() == std::vector<int>{cat.index_of("c")});
    CHECK(cat.minimal_common_ancestor(cat.index_of("b"), cat.index_of("c")) == cat.index_of("b"));
}

TEST_CASE("the five-object poset with two incomparable common ancestors is rejected") {
    // m above k and l; both k and l above both i and j. The pair (i, j) has
    // common ancestors {k, l, m} with no minimal one.
    CHECK_THROWS_AS(IndexingCategory::validate(
                        {"m", "k", "l", "i", "j"},
                        {{"m", "k"}, {"m", "l"}, {"k", "i"}, {"k", "j"}, {"l", "i"}, {"l", "j"}}),
                    NoMinimalCommonAncestor);
}

TEST_CASE("validation failures are diagnosed in axiom order") {
    CHECK_THROWS_AS(IndexingCategory::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}), NotAPoset);
    CHECK_THROWS_AS(IndexingCategory::validate({}, {}), NoInitialObject);
    // Two incomparable points: no minimal common ancestor for the pair.
    CHECK_THROWS_AS(IndexingCategory::validate({"a", "b"}, {}), NoMinimalCommonAncestor);
    CHECK_THROWS_AS(IndexingCategory::validate({"a", "a"}, {}), ParseError);
    CHECK_THROWS_AS(IndexingCategory::validate({"a"}, {{"a", "zzz"}}), UnknownLabel);
}

TEST_CASE("lambda posets") {
    CHECK(IndexingCategory::lambda(1).size() == 1);
    CHECK(IndexingCategory::lambda(4).size() == 15);
    CHECK_THROWS_AS(IndexingCategory::lambda(9), SizeLimit);
    CHECK_THROWS_AS(IndexingCategory::lambda(0), SizeLimit);

    auto l2 = IndexingCategory::lambda(2);
    CHECK(l2.object(l2.initial_object()) == "12");
    Fan f = l2.minimal_fan(l2.index_of("1"), l2.index_of("2"));
    CHECK(l2.object(f.apex) == "12");

    auto l4 = IndexingCategory::lambda(4);
    CHECK(l4.object(l4.initial_object()) == "1234");
    // Printed coordinate order: cardinality, then lexicographic.
    CHECK(l4.objects() == std::vector<std::string>{"1", "2", "3", "4", "12", "13", "14", "23",
                                                   "24", "34", "123", "124", "134", "234", "1234"});
    std::vector<std::string> terminals;
    for (int t : l4.terminal_objects()) terminals.push_back(l4.object(t));
    CHECK(terminals == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("minimal common ancestors in lambda-4 are unions") {
    auto l4 = IndexingCategory::lambda(4);
    CHECK(l4.object(l4.minimal_common_ancestor(l4.index_of("1"), l4.index_of("2"))) == "12");
    CHECK(l4.object(l4.minimal_common_ancestor(l4.index_of("13"), l4.index_of("3"))) == "13");
    CHECK(l4.object(l4.minimal_common_ancestor(l4.index_of("12"), l4.index_of("23"))) == "123");
}

TEST_CASE("mca properties hold for all pairs") {
    auto l4 = IndexingCategory::lambda(4);
    int initial = l4.initial_object();
    for (int i = 0; i < l4.size(); ++i) {
        CHECK(l4.minimal_common_ancestor(i, i) == i);
        CHECK(l4.minimal_common_ancestor(i, initial) == initial);
        for (int j = 0; j < l4.size(); ++j) {
            int m = l4.minimal_common_ancestor(i, j);
            CHECK(m == l4.minimal_common_ancestor(j, i));
            CHECK(l4.is_ancestor(m, i));
            CHECK(l4.is_ancestor(m, j));
        }
    }
}

TEST_CASE("degenerate minimal fan at equal feet") {
    auto l2 = IndexingCategory::lambda(2);
    int one = l2.index_of("1");
    Fan f = l2.minimal_fan(one, one);
    CHECK(f.apex == one);
    CHECK(f.left == one);
    CHECK(f.right == one);
}

TEST_CASE("ideals are full subcategories on descendants") {
    auto l4 = IndexingCategory::lambda(4);
    auto sub = l4.ideal(l4.index_of("234"));
    CHECK(sub.size() == 7);
    CHECK(sub.object(sub.initial_object()) == "234");
    std::vector<std::string> objs = sub.objects();
    std::sort(objs.begin(), objs.end());
    CHECK(objs == std::vector<std::string>{"2", "23", "234", "24", "3", "34", "4"});

    CHECK(l4.ideal(l4.index_of("1")).size() == 1);

    auto l2 = IndexingCategory::lambda(2);
    CHECK(l2.ideal(l2.initial_object()).same_shape(l2)); // whole category
    // Idempotence.
    auto once = l4.ideal(l4.index_of("234"));
    CHECK(once.ideal(once.initial_object()).same_shape(once));
}

TEST_CASE("terminal objects for degenerate categories") {
    auto single = IndexingCategory::validate({"x"}, {});
    CHECK(single.terminal_objects() == std::vector<int>{0});
    CHECK(single.initial_object() == 0);
}

TEST_CASE("lambda detection") {
    for (int n = 1; n <= 5; ++n) CHECK(lambda_n_of(*lambda_shape(n)) == n);
    CHECK(lambda_n_of(chain_abc()) == std::nullopt);
    // A renamed copy of lambda-2 is not recognized (names are part of the contract).
    auto renamed = IndexingCategory::validate({"x", "y", "xy"}, {{"xy", "x"}, {"xy", "y"}});
    CHECK(lambda_n_of(renamed) == std::nullopt);
}

TEST_CASE("covering arrows generate the relation") {
    auto l3 = IndexingCategory::lambda(3);
    auto covers = l3.covering_arrows();
    // Each subset covers its one-element-smaller subsets: 3*1 + 3*2 + 3 = 12.
    CHECK(covers.size() == 12);
    for (const auto& [i, j] : covers) {
        CHECK(l3.is_ancestor(i, j));
        CHECK(l3.object(i).size() == l3.object(j).size() + 1);
    }
}
