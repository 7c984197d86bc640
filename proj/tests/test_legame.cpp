#include <random>

#include "doctest.h"
#include "lecell/io.hpp"
#include "lecell/legame.hpp"
#include "lecell/oracle.hpp"
#include "lecell/patterns.hpp"

using namespace lecell;

TEST_CASE("family names round trip") {
    for (auto f : {MoveFamily::Rectangular, MoveFamily::Diagonal, MoveFamily::DS1, MoveFamily::DS2,
                   MoveFamily::Conjugate})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("zigzag"), DomainError);
}

TEST_CASE("compatibility") {
    auto p = build_poset(Type::A, 3, 2);
    auto moves = enumerate_moves(*p, MoveFamily::Rectangular);
    REQUIRE(moves.size() == 1);
    MoveTemplate free_move = moves[0];
    free_move.plus = free_move.zero = 0;
    MoveTemplate zero_move = free_move;
    zero_move.zero = zero_move.interval;
    for (Mask plus = 0; plus <= p->full(); ++plus) {
        auto d = make_diagram(p, p->full(), plus);
        CHECK(compatible(d, free_move));
        CHECK(compatible(d, zero_move) == ((plus & zero_move.interval) == 0));
    }
}

TEST_CASE("rectangle census in type A") {
    for (int r = 2; r <= 6; ++r)
        for (int j = 1; j <= r; ++j) {
            const int rows = j, cols = r + 1 - j;
            const long rects = (rows * (rows - 1) / 2) * (cols * (cols - 1) / 2);
            CHECK(static_cast<long>(enumerate_moves(*build_poset(Type::A, r, j), MoveFamily::Rectangular).size()) ==
                  rects);
        }
}

TEST_CASE("the rectangular move removes a type A violation") {
    auto p = build_poset(Type::A, 4, 2);
    // 0 in the top row with + to its left and + below it
    auto d = parse_inline_diagram(p, "+00/0+0");
    REQUIRE_FALSE(is_le_A(d));
    bool applied = false;
    for (const auto& m : enumerate_moves(*p, MoveFamily::Rectangular)) {
        if (!performable(d, m)) continue;
        auto e = apply_move(d, m);
        CHECK(value(e) == value(d));
        CHECK(e.is_plus(m.y));
        applied = true;
    }
    CHECK(applied);
    CHECK_THROWS_AS(apply_move(make_diagram(p, p->full(), p->full()), enumerate_moves(*p, MoveFamily::Rectangular)[0]),
                    DomainError);
}

TEST_CASE("performable moves keep the value on random (A_5,2) diagrams") {
    auto p = build_poset(Type::A, 5, 2);
    const auto& moves = all_moves(*p);
    std::mt19937_64 rng(5);
    long applied = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        auto d = make_diagram(p, p->full(), rng() & p->full());
        for (const auto& m : moves)
            if (performable(d, m)) {
                auto e = apply_move(d, m);
                CHECK(value(e) == value(d));
                CHECK(popcount(e.zeros()) <= popcount(d.zeros()));
                ++applied;
            }
    }
    CHECK(applied > 0);
}

TEST_CASE("root criterion for the move families") {
    auto a = build_poset(Type::A, 5, 3);
    for (const auto& m : enumerate_moves(*a, MoveFamily::Rectangular)) CHECK(verify_move_triple(*a, m));
    auto b = build_poset(Type::B, 4, 4);
    auto diag = enumerate_moves(*b, MoveFamily::Diagonal);
    CHECK_FALSE(diag.empty());
    for (const auto& m : diag) CHECK(verify_move_triple(*b, m));
    for (const auto& pair : classical_pairs(5, 5)) {
        auto r = sweep_moves(pair);
        INFO(r.counterexample);
        CHECK(r.ok);
    }
}

TEST_CASE("corrupted templates fail the root criterion") {
    auto a = build_poset(Type::A, 5, 3);
    int failures = 0, total = 0;
    for (auto m : enumerate_moves(*a, MoveFamily::Rectangular)) {
        // corners become 0
        m.zero |= m.plus;
        m.plus = 0;
        ++total;
        failures += !verify_move_triple(*a, m);
    }
    CHECK(failures == total);
}

TEST_CASE("type D move constraints") {
    auto p = build_poset(Type::D, 5, 5);
    for (const auto& m : enumerate_moves(*p, MoveFamily::DS2)) {
        CHECK(p->boxes[m.x].row > p->boxes[m.y].row);
        CHECK(verify_move_triple(*p, m));
    }
    CHECK(enumerate_moves(*build_poset(Type::D, 3, 3), MoveFamily::DS2).empty());
    CHECK_THROWS_AS(enumerate_moves(*p, MoveFamily::Conjugate), DomainError);
}

TEST_CASE("Le-game") {
    auto p = build_poset(Type::A, 4, 2);
    auto le = parse_inline_diagram(p, "000/+0+");
    auto g = play_le_game(le);
    CHECK(g.steps.empty());
    CHECK(g.result == le);

    auto second = parse_inline_diagram(p, "0+0/00+");
    CHECK(play_le_game(second).result == leify_direct(second));

    auto r = sweep_le_game({Type::D, 4, 4}, 1);
    CHECK(r.ok);
    CHECK(r.checked == 135);
    for (const auto& pair : classical_pairs(4, 4)) CHECK(sweep_le_game(pair, 9).ok);
}

TEST_CASE("strategies reach the same diagram") {
    auto p = build_poset(Type::B, 4, 4);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = make_diagram(p, p->full(), rng() & p->full());
        auto det = play_le_game(d, Strategy::Deterministic, 0, false);
        auto rnd = play_le_game(d, Strategy::Random, trial, false);
        CHECK(det.result == rnd.result);
        CHECK(is_pds(det.result));
        for (const auto& m : all_moves(*p)) CHECK_FALSE(performable(det.result, m));
    }
}
