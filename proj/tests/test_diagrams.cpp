#include <random>

#include "doctest.h"
#include "lecell/diagrams.hpp"
#include "lecell/io.hpp"

using namespace lecell;

namespace {
std::string word_text(const Subexpression& s) {
    std::string out;
    for (std::size_t k = 0; k < s.word.size(); ++k) {
        if (k) out += ' ';
        out += s.kept[k] ? "s" + std::to_string(s.word[k]) : "1";
    }
    return out;
}

// PDS by definition: v_{k-1} <= v_k (positive) and v_k <= v_{k-1} s (distinguished),
// which together forbid any letter that is a right descent of the product so far.
bool pds_oracle(const RootSystemData& rs, const Subexpression& s) {
    WeylElement v = WeylElement::identity(rs);
    for (std::size_t k = 0; k < s.word.size(); ++k) {
        const int i = s.word[k];
        WeylElement up = multiply(v, simple_reflection(rs, i));
        WeylElement next = s.kept[k] ? up : v;
        if (!bruhat_leq(v, next) || !bruhat_leq(next, up)) return false;
        v = next;
    }
    return true;
}
}  // namespace

TEST_CASE("subexpressions of the three (A_4,2) diagrams") {
    auto p = build_poset(Type::A, 4, 2);
    auto ext = canonical_extension(*p, p->full());
    auto first = parse_inline_diagram(p, "000/000");
    auto second = parse_inline_diagram(p, "0+0/00+");
    auto third = parse_inline_diagram(p, "000/+0+");
    CHECK(word_text(to_subexpression(first, ext)) == "s3 s2 s1 s4 s3 s2");
    CHECK(word_text(to_subexpression(second, ext)) == "s3 1 s1 1 s3 s2");
    CHECK(word_text(to_subexpression(third, ext)) == "s3 s2 s1 1 s3 1");
    CHECK(is_pds(first));
    CHECK_FALSE(is_pds(second));
    CHECK(is_pds(third));
    CHECK(value(second) == from_word(*p->rs, {3, 1, 3, 2}));
    CHECK(value(second).length() == 2);
}

TEST_CASE("values of trivial fillings") {
    auto p = build_poset(Type::B, 3, 3);
    CHECK(value(make_diagram(p, p->full(), p->full())) == WeylElement::identity(*p->rs));
    CHECK(value(make_diagram(p, p->full(), 0)) == ideal_element(*p, p->full()));
}

TEST_CASE("is_pds agrees with the definition and does not depend on the extension") {
    for (auto [t, n, j] : {std::tuple{Type::A, 4, 2}, {Type::B, 3, 3}, {Type::D, 4, 4}, {Type::D, 4, 1}}) {
        auto p = build_poset(t, n, j);
        auto exts = linear_extensions(*p, p->full());
        for (Mask plus = 0; plus <= p->full(); ++plus) {
            auto d = make_diagram(p, p->full(), plus);
            const bool pds = is_pds(d);
            CHECK(pds == pds_oracle(*p->rs, to_subexpression(d, canonical_extension(*p, p->full()))));
            for (std::size_t k = 0; k < exts.size(); k += 7) CHECK(is_pds_along(d, exts[k]) == pds);
        }
    }
}

TEST_CASE("leify_direct") {
    auto p = build_poset(Type::A, 4, 2);
    auto third = parse_inline_diagram(p, "000/+0+");
    CHECK(leify_direct(third) == third);
    auto all_plus = make_diagram(p, p->full(), p->full());
    CHECK(leify_direct(all_plus) == all_plus);

    // second diagram: the only Le-diagram of the full shape with value s1 s2
    auto second = parse_inline_diagram(p, "0+0/00+");
    std::vector<Diagram> matches;
    for (Mask plus = 0; plus <= p->full(); ++plus) {
        auto d = make_diagram(p, p->full(), plus);
        if (is_pds(d) && value(d) == value(second)) matches.push_back(d);
    }
    REQUIRE(matches.size() == 1);
    CHECK(leify_direct(second) == matches[0]);
}

TEST_CASE("Le-diagrams of a shape correspond to the Bruhat interval") {
    auto p = build_poset(Type::D, 5, 5);
    for (Mask m : order_ideals(*p)) {
        auto w = ideal_element(*p, m);
        long count = 0;
        for_each_le_diagram(p, m, [&](const Diagram& d) {
            ++count;
            CHECK(is_pds(d));
            CHECK(pds_filling(p, m, value(d)) == d);
        });
        long below = 0;
        for (const auto& x : enumerate_group(*p->rs)) below += bruhat_leq(x, w);
        CHECK(count == below);
    }
}

TEST_CASE("pds_filling rejects elements outside the interval") {
    auto p = build_poset(Type::A, 3, 2);
    Mask one_box = 1;
    CHECK_THROWS_AS(pds_filling(p, one_box, from_word(*p->rs, {1, 3})), DomainError);
}

TEST_CASE("random diagrams leify to a Le-diagram with the same value") {
    auto p = build_poset(Type::E6, 6, 1);
    std::mt19937_64 rng(11);
    auto ideals = order_ideals(*p);
    for (int trial = 0; trial < 200; ++trial) {
        Mask shape = ideals[rng() % ideals.size()];
        auto d = make_diagram(p, shape, rng() & shape);
        auto le = leify_direct(d);
        CHECK(is_pds(le));
        CHECK(value(le) == value(d));
        CHECK(le.shape == shape);
    }
}
