#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include <catch2/catch_amalgamated.hpp>

#include "motcell/root_system.hpp"
#include "motcell/weyl.hpp"
#include "oracles.hpp"

using namespace motcell;

TEST_CASE("invalid specs are rejected at construction") {
    CHECK_THROWS_AS(RootSystemSpec(Family::A, 0), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::A, -3), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::B, 1), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::C, 1), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::D, 1), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::E, 5), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::E, 9), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::F, 3), InvalidSpec);
    CHECK_THROWS_AS(RootSystemSpec(Family::G, 3), InvalidSpec);
    CHECK_THROWS_AS(family_from_char('H'), InvalidSpec);
    CHECK_NOTHROW(RootSystemSpec(Family::D, 2)); // documented degenerate case
}

TEST_CASE("root counts") {
    auto count = [](Family f, int r) {
        return build_root_system(RootSystemSpec(f, r)).all_roots().size();
    };
    CHECK(count(Family::A, 1) == 2);
    CHECK(count(Family::A, 2) == 6);
    CHECK(count(Family::A, 3) == 12);
    CHECK(count(Family::B, 2) == 8);
    CHECK(count(Family::B, 3) == 18);
    CHECK(count(Family::C, 3) == 18);
    CHECK(count(Family::D, 2) == 4);
    CHECK(count(Family::D, 3) == 12);
    CHECK(count(Family::D, 4) == 24);
    CHECK(count(Family::G, 2) == 12);
    CHECK(count(Family::F, 4) == 48);
    CHECK(count(Family::E, 6) == 72);
    CHECK(build_root_system(RootSystemSpec(Family::A, 1)).num_positive() == 1);
}

TEST_CASE("root set invariants") {
    for (auto spec : {RootSystemSpec(Family::A, 3), RootSystemSpec(Family::B, 3),
                      RootSystemSpec(Family::C, 3), RootSystemSpec(Family::D, 4),
                      RootSystemSpec(Family::G, 2), RootSystemSpec(Family::F, 4)}) {
        RootSystem rs(spec);
        const auto roots = rs.all_roots();
        std::set<Vec> root_set(roots.begin(), roots.end());
        CHECK(roots.size() % 2 == 0);
        CHECK(roots.size() == root_set.size());

        for (const Vec& b : roots) CHECK(root_set.count(negated(b)) == 1);

        // positive roots are nonnegative integer combinations of simple roots
        for (const Vec& b : rs.positive_roots())
            CHECK(std::all_of(b.begin(), b.end(), [](long long x) { return x >= 0; }));

        // every simple reflection permutes the root set
        for (int i = 1; i <= rs.rank(); ++i) {
            std::set<Vec> image;
            for (const Vec& b : roots) image.insert(rs.reflect_simple(i, b));
            CHECK(image == root_set);
        }

        // number of positive roots = sum of exponents
        long long exps = 0;
        for (int d : rs.degrees()) exps += d - 1;
        CHECK(exps == rs.num_positive());
    }
}

TEST_CASE("degrees table certified by independent closure for rank <= 3") {
    for (auto spec : {RootSystemSpec(Family::A, 1), RootSystemSpec(Family::A, 2),
                      RootSystemSpec(Family::A, 3), RootSystemSpec(Family::B, 2),
                      RootSystemSpec(Family::B, 3), RootSystemSpec(Family::C, 3),
                      RootSystemSpec(Family::D, 2), RootSystemSpec(Family::D, 3),
                      RootSystemSpec(Family::G, 2)}) {
        RootSystem rs(spec);
        INFO(rs.name());
        const auto closure = oracle::weyl_closure(rs);
        CHECK(static_cast<long long>(closure.size()) == rs.weyl_order());
        CHECK(oracle::closure_length_polynomial(rs) == degrees_product_polynomial(rs));
    }
}

TEST_CASE("enumerate_weyl basic examples") {
    RootSystem a1(RootSystemSpec(Family::A, 1));
    const auto w_a1 = enumerate_weyl(a1);
    REQUIRE(w_a1.size() == 2);
    CHECK(w_a1[0].word.empty());
    CHECK(w_a1[1].word == std::vector<int>{1});

    RootSystem a2(RootSystemSpec(Family::A, 2));
    const auto w_a2 = enumerate_weyl(a2);
    REQUIRE(w_a2.size() == 6);
    std::multiset<int> lengths;
    for (const auto& w : w_a2) lengths.insert(w.length());
    CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});

    RootSystem b2(RootSystemSpec(Family::B, 2));
    const auto w_b2 = enumerate_weyl(b2);
    CHECK(w_b2.size() == 8);
    CHECK(longest_element(w_b2).length() == 4);
}

TEST_CASE("enumeration order is length-ascending with lex words inside") {
    RootSystem rs(RootSystemSpec(Family::B, 3));
    const auto elements = enumerate_weyl(rs);
    for (size_t i = 1; i < elements.size(); ++i) {
        const auto& prev = elements[i - 1];
        const auto& cur = elements[i];
        const bool ordered = prev.length() < cur.length() ||
                             (prev.length() == cur.length() && prev.word < cur.word);
        CHECK(ordered);
    }
}

TEST_CASE("stored words are lex-minimal reduced words") {
    // brute force: the first word of length l(w) in lex order evaluating to w
    // is the lex-smallest reduced word
    for (auto spec : {RootSystemSpec(Family::A, 2), RootSystemSpec(Family::B, 2)}) {
        RootSystem rs(spec);
        INFO(rs.name());
        for (const auto& w : enumerate_weyl(rs)) {
            std::vector<int> best;
            std::vector<int> stack;
            std::function<bool(const IntMat&)> dfs = [&](const IntMat& acc) {
                if (static_cast<int>(stack.size()) == w.length()) {
                    if (acc == w.action) {
                        best = stack;
                        return true;
                    }
                    return false;
                }
                for (int s = 1; s <= rs.rank(); ++s) {
                    stack.push_back(s);
                    if (dfs(acc * rs.simple_reflection_matrix(s))) return true;
                    stack.pop_back();
                }
                return false;
            };
            REQUIRE(dfs(IntMat::identity(rs.rank())));
            CHECK(best == w.word);
        }
    }
}

TEST_CASE("enumeration matches closure oracle elementwise") {
    RootSystem rs(RootSystemSpec(Family::C, 3));
    const auto enumerated = enumerate_weyl(rs);
    const auto closure = oracle::weyl_closure(rs);
    std::unordered_set<IntMat, IntMatHash> closure_set(closure.begin(), closure.end());
    REQUIRE(enumerated.size() == closure.size());
    for (const auto& w : enumerated) {
        CHECK(closure_set.count(w.action) == 1);
        CHECK(w.length() == oracle::inversions(rs, w.action));
    }
}

TEST_CASE("length equals inversion count and respects inverse/word laws") {
    RootSystem rs(RootSystemSpec(Family::A, 3));
    const auto elements = enumerate_weyl(rs);

    std::unordered_map<IntMat, int, IntMatHash> index;
    for (size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].action, static_cast<int>(i));

    CHECK(elements[0].length() == 0);
    CHECK(longest_element(elements).length() == rs.num_positive());
    int longest_count = 0;
    for (const auto& w : elements)
        if (w.length() == rs.num_positive()) ++longest_count;
    CHECK(longest_count == 1);

    for (const auto& w : elements) {
        CHECK(inversion_length(rs, w) == w.length());

        // l(w) = l(w^{-1}): the inverse is the matrix inverse
        const IntMat winv = inverse_unimodular(w.action);
        auto it = index.find(winv);
        REQUIRE(it != index.end());
        CHECK(elements[static_cast<size_t>(it->second)].length() == w.length());

        // |l(sw) - l(w)| = 1 for every simple reflection s
        for (int s = 1; s <= rs.rank(); ++s) {
            const IntMat sw = rs.simple_reflection_matrix(s) * w.action;
            auto jt = index.find(sw);
            REQUIRE(jt != index.end());
            const int diff = elements[static_cast<size_t>(jt->second)].length() - w.length();
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("action matrices compose like words") {
    RootSystem rs(RootSystemSpec(Family::B, 2));
    const auto elements = enumerate_weyl(rs);
    std::unordered_map<IntMat, int, IntMatHash> index;
    for (size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].action, static_cast<int>(i));
    for (const auto& u : elements)
        for (const auto& v : elements) {
            auto it = index.find(u.action * v.action);
            REQUIRE(it != index.end());
            const auto& uv = elements[static_cast<size_t>(it->second)];
            CHECK(uv.length() <= u.length() + v.length());
            CHECK((u.length() + v.length() - uv.length()) % 2 == 0);
        }
}

TEST_CASE("weyl product formula for enumerable types") {
    for (auto spec : {RootSystemSpec(Family::A, 3), RootSystemSpec(Family::B, 3),
                      RootSystemSpec(Family::D, 3), RootSystemSpec(Family::D, 2),
                      RootSystemSpec(Family::G, 2)}) {
        RootSystem rs(spec);
        INFO(rs.name());
        CHECK(length_polynomial(enumerate_weyl(rs)) == degrees_product_polynomial(rs));
    }
}

TEST_CASE("enumeration cap") {
    RootSystem a2(RootSystemSpec(Family::A, 2));
    CHECK_THROWS_AS(enumerate_weyl(a2, 5), CapExceeded);
    CHECK_NOTHROW(enumerate_weyl(a2, 6));

    // E7/E8 are constructible but their Weyl groups exceed the default cap
    RootSystem e7(RootSystemSpec(Family::E, 7));
    CHECK(e7.all_roots().size() == 126);
    CHECK(e7.weyl_order() == 2903040);
    CHECK_THROWS_AS(enumerate_weyl(e7), CapExceeded);

    RootSystem e8(RootSystemSpec(Family::E, 8));
    CHECK(e8.all_roots().size() == 240);
    CHECK(e8.weyl_order() == 696729600);
    CHECK_THROWS_AS(enumerate_weyl(e8), CapExceeded);
}

TEST_CASE("dominant regular cocharacter") {
    RootSystem a1(RootSystemSpec(Family::A, 1));
    const Cocharacter l1 = dominant_regular_cocharacter(a1);
    REQUIRE(a1.positive_roots().size() == 1);
    CHECK(pair_cocharacter(a1.positive_roots()[0], l1) > 0);

    RootSystem a2(RootSystemSpec(Family::A, 2));
    const Cocharacter l2 = dominant_regular_cocharacter(a2);
    CHECK(pair_cocharacter(a2.simple_root(1), l2) == 1);
    CHECK(pair_cocharacter(a2.simple_root(2), l2) == 1);
    std::multiset<long long> pairings;
    for (const Vec& b : a2.positive_roots()) pairings.insert(pair_cocharacter(b, l2));
    CHECK(pairings == std::multiset<long long>{1, 1, 2});

    RootSystem b2(RootSystemSpec(Family::B, 2));
    const Cocharacter l3 = dominant_regular_cocharacter(b2);
    for (const Vec& b : b2.positive_roots()) CHECK(pair_cocharacter(b, l3) > 0);
}

TEST_CASE("is_regular") {
    RootSystem a2(RootSystemSpec(Family::A, 2));
    CHECK(is_regular(a2, dominant_regular_cocharacter(a2)));
    CHECK_FALSE(is_regular(a2, Cocharacter{{0, 0}}));
    CHECK_FALSE(is_regular(a2, Cocharacter{{1, 0}})); // kills alpha_2
    CHECK(is_regular(a2, Cocharacter{{1, -1}}) == false); // kills alpha_1 + alpha_2
    CHECK(is_regular(a2, Cocharacter{{2, -1}}));
}
