#pragma once

#include <string>
#include <vector>

#include "lecell/diagrams.hpp"

namespace lecell {

// Type A: perm is one-line notation on [n]. Type B: perm is a signed
// window (a_1..a_n); a clockwise fixed point i forces -i counterclockwise.
struct DecoratedPermutation {
    std::vector<int> perm;
    std::vector<bool> clockwise;  // meaningful at fixed points only
    bool signed_window = false;

    int size() const { return static_cast<int>(perm.size()); }
    bool is_fixed(int i) const { return perm[i - 1] == i; }
    int nonexcedances() const;  // type A notion
    bool operator==(const DecoratedPermutation& o) const;
    bool operator<(const DecoratedPermutation& o) const;
};

// "~1 3 -2": `~` marks a clockwise fixed point.
std::string to_string(const DecoratedPermutation& p);
DecoratedPermutation parse_decorated(const std::string& s, bool signed_window);

struct CellLabel {
    WeylElement x;
    WeylElement w;
};

bool is_cell_label(const Poset& p, const CellLabel& c);

// Type A maps for (A_{n-1}, j); the poset fixes n and j.
CellLabel phi2(const Diagram& d);
Diagram phi2_inverse(const std::shared_ptr<const Poset>& p, const CellLabel& c);
DecoratedPermutation phi1(const Poset& p, const CellLabel& c);
DecoratedPermutation phi3(const Diagram& d);

// Type (B_n, n) maps. phi3_B doubles the diagram into (A_{2n-1}, n).
Diagram double_B_diagram(const Diagram& d);
CellLabel phi2_B(const Diagram& d);
DecoratedPermutation phi1_B(const Poset& p, const CellLabel& c);
DecoratedPermutation phi3_B(const Diagram& d);

// Enumerates decorated permutations: type A on [n] with j nonexcedances,
// or type B on n letters.
std::vector<DecoratedPermutation> decorated_permutations_A(int n, int j);
std::vector<DecoratedPermutation> decorated_permutations_B(int n);

bool is_permutation_tableau_B(const Diagram& d);
// Removes one all-zero column together with the row of its diagonal box;
// the result lives in (B_{n-1}, n-1). Returns false if there is none.
bool delete_zero_hook(const Diagram& d, Diagram& out);

// c1 <= c2 in the closure order: some z in W_J has x2 <= x1 z <= w1 z <= w2.
bool cell_leq(const Poset& p, const CellLabel& c1, const CellLabel& c2);
std::vector<CellLabel> all_cells(const std::shared_ptr<const Poset>& p);

}  // namespace lecell
