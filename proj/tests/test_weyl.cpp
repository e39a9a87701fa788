#include <doctest.h>

#include "bcnet/errors.hpp"
#include "bcnet/weyl.hpp"

#include <algorithm>
#include <random>

using namespace bcnet;

namespace {

std::vector<Perm> centralizer_by_brute_force(int n) {
    std::vector<Perm> out;
    Perm w = identity_perm(n);
    do {
        if (centralizes_w0(w)) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

TEST_CASE("generators") {
    auto s4 = gens(4);
    REQUIRE(s4.size() == 2);
    CHECK(s4[0] == Perm{2, 1, 4, 3});
    CHECK(s4[1] == Perm{1, 3, 2, 4});
    auto s5 = gens(5);
    CHECK(s5[1] == Perm{1, 4, 3, 2, 5});
    for (int n = 2; n <= 7; ++n)
        for (const Perm& s : gens(n)) {
            CHECK(centralizes_w0(s));
            CHECK(compose(s, s) == identity_perm(n));
        }
}

TEST_CASE("inversions and negations") {
    Perm w{3, 4, 1, 2};
    CHECK(inv_count(w) == 4);
    CHECK(neg_count(w) == 2);
    CHECK(length(w) == 3);
    CHECK(reduced_word(w) == std::vector<int>{2, 1, 2});
    CHECK(inv_count(identity_perm(5)) == 0);
    CHECK(neg_count(identity_perm(5)) == 0);
    CHECK(reduced_word(identity_perm(5)).empty());
    Perm s2{1, 4, 3, 2, 5};
    CHECK(inv_count(s2) == 3);
    CHECK(neg_count(s2) == 1);
    CHECK(length(s2) == 1);
    CHECK_THROWS_WITH_AS(inv_count(Perm{2, 1, 3, 4}), doctest::Contains("does not commute"), Error);
    CHECK_THROWS_AS(length(Perm{1, 1, 2}), Error);
}

TEST_CASE("length formula equals the Cayley distance") {
    const std::map<int, std::size_t> order{{4, 8}, {5, 8}, {6, 48}, {7, 48}};
    for (auto [n, ord] : order) {
        auto dist = cayley_distances(n);
        auto all = centralizer_by_brute_force(n);
        CHECK(dist.size() == ord);
        CHECK(all.size() == ord);
        for (const Perm& w : all) {
            REQUIRE(dist.count(w));
            CHECK(length(w) == dist.at(w));
            auto word = reduced_word(w);
            CHECK(static_cast<int>(word.size()) == length(w));
            CHECK(word_product(n, word) == w);
            CHECK(std::count(word.begin(), word.end(), n / 2) == neg_count(w));
        }
    }
}

TEST_CASE("every reduced word uses s_k exactly neg times") {
    for (int n : {4, 5}) {
        for (const auto& [w, d] : cayley_distances(n)) {
            auto words = all_reduced_words(w);
            CHECK(!words.empty());
            for (const auto& word : words) {
                CHECK(static_cast<int>(word.size()) == d);
                CHECK(word_product(n, word) == w);
                CHECK(std::count(word.begin(), word.end(), n / 2) == neg_count(w));
            }
        }
    }
}

TEST_CASE("length is subadditive and additive on reduced products") {
    for (int n : {4, 5, 6}) {
        auto dist = cayley_distances(n);
        for (const auto& [a, la] : dist)
            for (const auto& [b, lb] : dist) {
                Perm ab = compose(a, b);
                CHECK(length(ab) <= la + lb);
                auto wa = reduced_word(a), wb = reduced_word(b);
                wa.insert(wa.end(), wb.begin(), wb.end());
                CHECK((length(ab) == la + lb) == is_reduced(n, wa));
            }
    }
}

TEST_CASE("double words") {
    auto [u, v] = word_to_pair(4, {1, -1});
    CHECK(u == gens(4)[0]);
    CHECK(v == gens(4)[0]);
    CHECK(is_reduced_double(4, {1, -1}));
    auto [e, s] = word_to_pair(4, {1, 1});
    CHECK(e == identity_perm(4));
    CHECK(s == identity_perm(4));
    CHECK_FALSE(is_reduced_double(4, {1, 1}));

    std::mt19937_64 rng(3);
    auto dist = cayley_distances(6);
    std::vector<Perm> elems;
    for (const auto& kv : dist) elems.push_back(kv.first);
    for (int t = 0; t < 30; ++t) {
        Perm a = elems[rng() % elems.size()], b = elems[rng() % elems.size()];
        auto wa = reduced_word(a), wb = reduced_word(b);
        DoubleWord dw;
        std::size_t i = 0, j = 0;
        while (i < wa.size() || j < wb.size()) {
            bool take_a = j == wb.size() || (i < wa.size() && rng() % 2);
            dw.push_back(take_a ? -wa[i++] : wb[j++]);
        }
        CHECK(is_reduced_double(6, dw));
        CHECK(word_to_pair(6, dw) == std::make_pair(a, b));
    }
}

TEST_CASE("type A expansion") {
    CHECK(type_a_expand(5, {2}) == std::vector<int>{2, 3, 2});
    CHECK(type_a_expand(4, {1}) == std::vector<int>{1, 3});
    CHECK(type_a_expand(5, {1, -2}) == std::vector<int>{1, 4, -2, -3, -2});
    CHECK_THROWS_WITH_AS(type_a_expand(4, {2, 2}), doctest::Contains("is not reduced"), Error);
    // the expansion is a reduced word of S_n: its length is inv(w)
    for (int n : {4, 5, 6, 7})
        for (const auto& [w, d] : cayley_distances(n)) {
            auto a = type_a_expand(n, reduced_word(w));
            CHECK(static_cast<int>(a.size()) == inv_count(w));
            Perm p = identity_perm(n);
            for (int i : a) std::swap(p[i - 1], p[i]);
            CHECK(p == w);
        }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("1 -2 2") == DoubleWord{1, -2, 2});
    CHECK(parse_word("").empty());
    CHECK(word_str({1, -2, 2}) == "1 -2 2");
    CHECK_THROWS_WITH_AS(parse_word("1 x"), doctest::Contains("bad letter"), Error);
    CHECK_THROWS_WITH_AS(parse_word("0"), doctest::Contains("bad letter"), Error);
    CHECK(parse_perm("3 4 1 2") == Perm{3, 4, 1, 2});
    CHECK_THROWS_AS(parse_perm("1 1"), Error);
    CHECK(reduced_double_words(4, 1).size() == 5);
}
