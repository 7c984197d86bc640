#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lecell/enumeration.hpp"
#include "lecell/posets.hpp"

namespace lecell {

struct PairSpec {
    Type type;
    int n;
    int j;
    std::string name() const;
};

struct SweepReport {
    std::string name;
    bool ok = true;
    long long checked = 0;
    std::string counterexample;  // first failure, empty when ok
};

// Classical pairs at the given scale: (A_{m-1}, j) for m <= max_n + 1 (so
// rank <= max_n), (B_m, m), (B_m, 1), (D_m, m), (D_m, m-1), (D_m, 1) for m <= max_n.
std::vector<PairSpec> classical_pairs(int max_a_n, int max_bd_n);

// pattern predicate <=> is_pds on every filling of every ideal
SweepReport sweep_equivalence(const PairSpec& pair, int jobs = 1);
// per ideal O_w: Le-diagrams by #+ against sum over x <= w of q^{l(w)-l(x)}
SweepReport sweep_cell_counts(const PairSpec& pair);
// deterministic and seeded random Le-game against leify_direct, value kept per step
SweepReport sweep_le_game(const PairSpec& pair, std::uint64_t seed, int jobs = 1);
// every enumerated move passes the root criterion
SweepReport sweep_moves(const PairSpec& pair);
// phi3 = phi1 o phi2 and bijectivity onto decorated permutations
SweepReport sweep_triangle_A(int n);
SweepReport sweep_triangle_B(int n);
// alpha round trip, Phi o Psi, Psi o Phi, counts
SweepReport sweep_preference(int n);

// Bruhat interval [e, w] graded by l(w) - l(x), by subword products.
QPolynomial bruhat_interval_polynomial(const WeylElement& w);

}  // namespace lecell
