#include "doctest.h"
#include "lecell/io.hpp"
#include "lecell/oracle.hpp"
#include "lecell/patterns.hpp"
#include "lecell/preference.hpp"

using namespace lecell;

TEST_CASE("type A") {
    auto p = build_poset(Type::A, 3, 2);
    CHECK(is_le_A(make_diagram(p, p->full(), p->full())));
    CHECK_FALSE(is_le_A(parse_inline_diagram(p, "+0/0+")));
    auto q = build_poset(Type::A, 7, 4);
    CHECK(is_le_A(parse_inline_diagram(q, "/0+/000/+++0")));
}

TEST_CASE("type (B_n, n)") {
    auto p = build_poset(Type::B, 3, 3);
    CHECK(is_le_B_n(make_diagram(p, p->full(), 0)));
    CHECK(is_le_B_n(parse_inline_diagram(p, "+/00/+")));
    auto q = build_poset(Type::B, 2, 2);
    CHECK_FALSE(is_le_B_n(parse_inline_diagram(q, "+0/0")));
    CHECK_FALSE(is_pds(parse_inline_diagram(q, "+0/0")));
}

TEST_CASE("type (B_n, 1)") {
    auto p = build_poset(Type::B, 2, 1);
    CHECK(is_le_B_1(make_diagram(p, p->full(), p->full())));
    CHECK_FALSE(is_le_B_1(parse_inline_diagram(p, "++0")));
    CHECK_FALSE(is_pds(parse_inline_diagram(p, "++0")));
    CHECK(is_le_B_1(parse_inline_diagram(p, "+00")));
    CHECK(is_pds(parse_inline_diagram(p, "+00")));
}

TEST_CASE("type (D_n, n)") {
    auto p = build_poset(Type::D, 4, 4);
    CHECK(is_le_D_n(make_diagram(p, p->full(), 0)));
    // the final grid of the n = 9 worked example
    auto f = parse_preference("4,6,3,1,7,5,7,2,1");
    CHECK(is_le_D_n(psi(f)));
    // first non-Le filling of the full staircase
    Mask plus = 0;
    while (is_pds(make_diagram(p, p->full(), plus))) ++plus;
    CHECK_FALSE(is_le_D_n(make_diagram(p, p->full(), plus)));
}

TEST_CASE("type (D_n, 1)") {
    auto p = build_poset(Type::D, 4, 1);
    CHECK(is_le_D_1(make_diagram(p, p->full(), p->full())));
    // middle boxes (labels 3 and 4) both +, the 0 just right of them
    auto d = parse_inline_diagram(p, "+0+/+++");
    CHECK_FALSE(is_le_D_1(d));
    CHECK_FALSE(is_pds(d));
}

TEST_CASE("pattern predicates agree with is_pds on every filling") {
    for (const auto& pair : classical_pairs(5, 5)) {
        auto r = sweep_equivalence(pair);
        INFO(r.counterexample);
        CHECK(r.ok);
    }
}

TEST_CASE("E types have no pattern predicate") {
    auto p = build_poset(Type::E6, 6, 1);
    CHECK_FALSE(has_pattern_predicate(*p));
    CHECK_THROWS_AS(is_le_pattern(make_diagram(p, 0, 0)), DomainError);
}
