#include <set>

#include "doctest.h"
#include "lecell/bijections.hpp"
#include "lecell/io.hpp"
#include "lecell/oracle.hpp"

using namespace lecell;

TEST_CASE("decorated permutation text") {
    auto d = parse_decorated("~1 3 -2", true);
    CHECK(d.perm == std::vector<int>{1, 3, -2});
    CHECK(d.clockwise[0]);
    CHECK(to_string(d) == "~1 3 -2");
    CHECK_THROWS_AS(parse_decorated("1 1 2", false), DomainError);
    CHECK_THROWS_AS(parse_decorated("~2 1", false), DomainError);
}

TEST_CASE("type A worked conversion") {
    auto p = build_poset(Type::A, 7, 4);
    auto d = parse_inline_diagram(p, "/0+/000/+++0");
    auto c = phi2(d);
    CHECK(to_permutation(c.x) == std::vector<int>{1, 3, 6, 2, 4, 5, 8, 7});
    CHECK(to_permutation(c.w) == std::vector<int>{1, 4, 6, 8, 2, 3, 5, 7});
    auto via_cells = phi1(*p, c);
    auto direct = phi3(d);
    CHECK(direct == via_cells);
    CHECK(direct.perm == std::vector<int>{1, 4, 5, 3, 8, 6, 7, 2});
    CHECK(direct.clockwise[0]);
    CHECK(phi2_inverse(p, c) == d);
}

TEST_CASE("type B worked conversion") {
    auto p = build_poset(Type::B, 3, 3);
    auto d = parse_inline_diagram(p, "+/00/+");
    auto c = phi2_B(d);
    CHECK(iota_embed(c.x).window == std::vector<int>{2, -1, 3});
    CHECK(iota_embed(c.w).window == std::vector<int>{-3, -1, 2});
    CHECK(to_string(phi1_B(*p, c)) == "~1 3 -2");
    CHECK(to_string(phi3_B(d)) == "~1 3 -2");
}

TEST_CASE("triangles commute and are bijective") {
    for (int n = 2; n <= 6; ++n) CHECK(sweep_triangle_A(n).ok);
    for (int n = 1; n <= 4; ++n) CHECK(sweep_triangle_B(n).ok);
    CHECK(decorated_permutations_A(6, 3).size() == 883);
    CHECK(decorated_permutations_B(3).size() == 79);
}

TEST_CASE("type B permutation tableaux") {
    const long expected[] = {2, 8, 48, 384};
    for (int n = 1; n <= 4; ++n) {
        auto p = build_poset(Type::B, n, n);
        long tableaux = 0;
        for (Mask m : order_ideals(*p))
            for_each_le_diagram(p, m, [&](const Diagram& d) {
                if (is_permutation_tableau_B(d)) {
                    ++tableaux;
                    // no clockwise fixed point in the window
                    auto dp = phi3_B(d);
                    for (int i = 1; i <= n; ++i) CHECK_FALSE((dp.perm[i - 1] == i && dp.clockwise[i - 1]));
                    return;
                }
                Diagram smaller;
                REQUIRE(delete_zero_hook(d, smaller));
                if (n > 1) CHECK(is_pds(smaller));
            });
        CHECK(tableaux == expected[n - 1]);
    }
}

TEST_CASE("closure order on cells") {
    for (auto [t, n, j] : {std::tuple{Type::A, 2, 1}, {Type::A, 3, 2}, {Type::B, 2, 2}}) {
        auto p = build_poset(t, n, j);
        auto cells = all_cells(p);
        for (const auto& a : cells) {
            CHECK(cell_leq(*p, a, a));
            for (const auto& b : cells) {
                if (&a != &b && cell_leq(*p, a, b) && cell_leq(*p, b, a)) CHECK((a.x == b.x && a.w == b.w));
                if (!cell_leq(*p, a, b)) continue;
                for (const auto& c : cells)
                    if (cell_leq(*p, b, c)) CHECK(cell_leq(*p, a, c));
            }
        }
    }
    // (A_2, 1): the 7 cells of P^2, graded by dimension l(w) - l(x)
    auto p = build_poset(Type::A, 2, 1);
    auto cells = all_cells(p);
    CHECK(cells.size() == 7);
    for (const auto& a : cells)
        for (const auto& b : cells) {
            if (!cell_leq(*p, a, b) || (a.x == b.x && a.w == b.w)) continue;
            int da = a.w.length() - a.x.length(), db = b.w.length() - b.x.length();
            CHECK(da < db);
            bool cover = true;
            for (const auto& c : cells)
                if (!(c.x == a.x && c.w == a.w) && !(c.x == b.x && c.w == b.w) && cell_leq(*p, a, c) &&
                    cell_leq(*p, c, b))
                    cover = false;
            if (cover) CHECK(db == da + 1);
        }
}
