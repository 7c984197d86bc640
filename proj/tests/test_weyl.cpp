#include <set>

#include "doctest.h"
#include "lecell/weyl.hpp"

using namespace lecell;

namespace {
// x <= w iff some subword of a reduced word of w multiplies to x
bool subword_oracle(const WeylElement& x, const std::vector<int>& word) {
    const auto& rs = x.root_system();
    const int m = static_cast<int>(word.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        WeylElement y = WeylElement::identity(rs);
        for (int k = 0; k < m; ++k)
            if ((mask >> k) & 1) y = multiply(y, simple_reflection(rs, word[k]));
        if (y == x) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("positive root counts") {
    CHECK(RootSystemData::get(Type::A, 4).positive_roots.size() == 10);
    CHECK(RootSystemData::get(Type::B, 4).positive_roots.size() == 16);
    CHECK(RootSystemData::get(Type::D, 5).positive_roots.size() == 20);
    CHECK(RootSystemData::get(Type::E6, 6).positive_roots.size() == 36);
    CHECK(RootSystemData::get(Type::E7, 7).positive_roots.size() == 63);
}

TEST_CASE("simple reflections are involutions and negate one simple root") {
    for (auto [t, r] : {std::pair{Type::A, 8}, {Type::B, 8}, {Type::D, 8}, {Type::E6, 6}, {Type::E7, 7}}) {
        const auto& rs = RootSystemData::get(t, r);
        for (int i = 1; i <= r; ++i) {
            auto s = simple_reflection(rs, i);
            CHECK(multiply(s, s) == WeylElement::identity(rs));
            CHECK(s.length() == 1);
            int negated = 0;
            for (const auto& beta : rs.positive_roots) {
                auto img = s.apply(beta);
                bool neg = false;
                for (int c : img)
                    if (c != 0) {
                        neg = c < 0;
                        break;
                    }
                negated += neg;
            }
            CHECK(negated == 1);
        }
    }
}

TEST_CASE("Coxeter relation in B2") {
    const auto& rs = RootSystemData::get(Type::B, 2);
    auto st = multiply(simple_reflection(rs, 1), simple_reflection(rs, 2));
    auto p = st;
    for (int k = 1; k < 4; ++k) {
        CHECK(p != WeylElement::identity(rs));
        p = multiply(p, st);
    }
    CHECK(p == WeylElement::identity(rs));
}

TEST_CASE("length of a word in A4") {
    const auto& rs = RootSystemData::get(Type::A, 4);
    CHECK(from_word(rs, {3, 2, 1, 4, 3, 2}).length() == 6);
    CHECK(is_reduced(rs, {3, 2, 1, 4, 3, 2}));
    CHECK_FALSE(is_reduced(rs, {3, 1, 3, 2}));
    CHECK(from_word(rs, {3, 1, 3, 2}) == from_word(rs, {1, 2}));
}

TEST_CASE("descents agree with length in A3") {
    const auto& rs = RootSystemData::get(Type::A, 3);
    auto all = enumerate_group(rs);
    CHECK(all.size() == 24);
    CHECK_FALSE(is_right_descent(WeylElement::identity(rs), 1));
    for (const auto& w : all)
        for (int i = 1; i <= 3; ++i)
            CHECK(is_right_descent(w, i) == (multiply(w, simple_reflection(rs, i)).length() < w.length()));
}

TEST_CASE("Bruhat order agrees with the subword oracle on A3") {
    const auto& rs = RootSystemData::get(Type::A, 3);
    auto all = enumerate_group(rs);
    int mismatches = 0;
    for (const auto& w : all) {
        auto word = w.reduced_word();
        for (const auto& x : all) mismatches += bruhat_leq(x, word) != subword_oracle(x, word);
    }
    CHECK(mismatches == 0);
}

TEST_CASE("group orders") {
    CHECK(enumerate_group(RootSystemData::get(Type::B, 3)).size() == 48);
    CHECK(enumerate_group(RootSystemData::get(Type::D, 4)).size() == 192);
    CHECK(parabolic_subgroup(RootSystemData::get(Type::A, 3), 2).size() == 4);
}

TEST_CASE("signed permutation embeddings") {
    const auto& b3 = RootSystemData::get(Type::B, 3);
    CHECK(iota_embed(WeylElement::identity(b3)).window == std::vector<int>{1, 2, 3});
    // s~0 s~1 with s~k = s_{n-k}
    CHECK(iota_embed(from_word(b3, {3, 2})).window == std::vector<int>{2, -1, 3});
    CHECK(iota_embed(from_word(b3, {1, 3, 2, 3})).window == std::vector<int>{-3, -1, 2});

    auto all = enumerate_group(b3);
    std::set<std::vector<int>> seen;
    for (const auto& u : all) {
        seen.insert(iota_embed(u).window);
        CHECK(iota_preimage(b3, iota_embed(u)) == u);
        for (const auto& v : all) CHECK(iota_embed(multiply(u, v)) == iota_embed(u).compose(iota_embed(v)));
    }
    CHECK(seen.size() == 48);

    const auto& d4 = RootSystemData::get(Type::D, 4);
    for (const auto& w : enumerate_group(d4)) CHECK(delta_embed(w).negatives() % 2 == 0);
    auto sn = delta_embed(simple_reflection(d4, 4));
    CHECK(sn.compose(sn) == SignedPermutation::identity(4));
}

TEST_CASE("type A one-line notation") {
    const auto& a3 = RootSystemData::get(Type::A, 3);
    for (const auto& w : enumerate_group(a3)) CHECK(from_permutation(a3, to_permutation(w)) == w);
    CHECK(to_permutation(simple_reflection(a3, 2)) == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("bad rank is a domain error") {
    CHECK_THROWS_AS(RootSystemData::get(Type::E6, 5), DomainError);
    CHECK_THROWS_AS(parse_type("F4"), DomainError);
}
