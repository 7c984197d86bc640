#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lecell/diagrams.hpp"

namespace lecell {

enum class MoveFamily {
    Rectangular,  // S0 in types A, (B_n,n), (D_n,n)
    Diagonal,     // S1 between diagonal boxes of (B_n,n)
    DS1,          // S1 of (D_n,n)
    DS2,          // S2 of (D_n,n)
    Conjugate,    // conjugate-pair moves of (B_n,1) and (D_n,1)
};

std::string family_name(MoveFamily f);
MoveFamily parse_family(const std::string& s);

// A move from y to x. The interval filling is stored as masks over the
// poset: boxes in `plus` must be +, boxes in `zero` must be 0, the rest
// of `interval` is free.
struct MoveTemplate {
    MoveFamily family = MoveFamily::Rectangular;
    int x = -1;
    int y = -1;
    Mask interval = 0;
    Mask plus = 0;
    Mask zero = 0;

    Mask wildcard() const { return interval & ~plus & ~zero; }
    bool operator==(const MoveTemplate& o) const {
        return family == o.family && x == o.x && y == o.y && interval == o.interval && plus == o.plus &&
               zero == o.zero;
    }
};

// Compatibility of D restricted to (x, y) with S.
bool compatible(const Diagram& d, const MoveTemplate& m);
bool performable(const Diagram& d, const MoveTemplate& m);
Diagram apply_move(const Diagram& d, const MoveTemplate& m);

struct MoveCheck {
    bool ok = true;
    long fillings = 0;
    // a failing filling of the interval, if any
    Mask witness_plus = 0;
    bool sign_flip = false;  // v^{-1}(beta) = -alpha for the witness
};

constexpr int kDefaultVerifyCap = 24;

// Brute force over every compatible filling of (x, y): v(D)^{-1} beta = alpha.
MoveCheck verify_move(const Poset& p, const MoveTemplate& m, int cap = kDefaultVerifyCap);
bool verify_move_triple(const Poset& p, const MoveTemplate& m, int cap = kDefaultVerifyCap);

std::vector<MoveFamily> complete_families(const Poset& p);
std::vector<MoveTemplate> enumerate_moves(const Poset& p, MoveFamily f);
std::vector<MoveTemplate> all_moves(const Poset& p);

enum class Strategy { Deterministic, Random };

struct GameStep {
    MoveTemplate move;
    Diagram after;
};

struct GameResult {
    Diagram result;
    std::vector<GameStep> steps;
};

// Moves from `moves` are applied until none is performable.
GameResult play_le_game(const Diagram& d, Strategy strategy = Strategy::Deterministic, uint64_t seed = 0,
                        bool keep_trace = true);
GameResult play_le_game(const Diagram& d, const std::vector<MoveTemplate>& moves, Strategy strategy,
                        uint64_t seed, bool keep_trace);

}  // namespace lecell
