#pragma once

#include <string>
#include <vector>

#include "lecell/diagrams.hpp"

namespace lecell {

using PreferenceFunction = std::vector<int>;

bool is_preference_function(const std::vector<int>& word);
bool is_atomic(const PreferenceFunction& p);
std::vector<PreferenceFunction> preference_functions(int n);
std::vector<PreferenceFunction> atomic_preference_functions(int n);

// J_n: signed windows with pi(i) <= i in the order -n < .. < -1 < 1 < .. < n
// and pi(n) negative. Fixed points are implicitly clockwise.
bool is_in_J(const SignedPermutation& pi);
PreferenceFunction alpha(const SignedPermutation& pi);
SignedPermutation alpha_inverse(const PreferenceFunction& p);

// Staircase grid with rows a = 1..n from the top and columns b = n..1
// from the left. Box (a, b) is fillable for a < b; (a, a) holds a *.
struct StairGrid {
    static constexpr int kEmpty = -1;
    int n = 0;
    std::vector<int> cells;  // 0, 1 (+) or kEmpty

    explicit StairGrid(int n_ = 0) : n(n_), cells(static_cast<std::size_t>(n_) * n_, kEmpty) {}
    int& at(int a, int b) { return cells[(a - 1) * n + (b - 1)]; }
    int at(int a, int b) const { return cells[(a - 1) * n + (b - 1)]; }
    bool row_complete(int a) const;
    bool row_all_zero(int a) const;  // complete and without +
    bool operator==(const StairGrid& o) const { return n == o.n && cells == o.cells; }
};

StairGrid grid_from_diagram(const Diagram& d);
Diagram grid_to_diagram(const StairGrid& g);

// Paths from i_W to the north border; + and * are elbows, 0 a crossing.
// Entry i is positive iff row i < n is all 0.
SignedPermutation wiring_permutation(const StairGrid& g);
PreferenceFunction phi_D(const StairGrid& g);
PreferenceFunction phi_D(const Diagram& d);

struct PsiStep {
    int i = 0;
    int i_star = 0;
    std::string cases;  // case letters in order, e.g. "DDA"
    StairGrid grid;     // D_i
};

struct PsiOptions {
    bool check_invariants = false;
};

StairGrid psi_grid(const PreferenceFunction& p, std::vector<PsiStep>* trace = nullptr, PsiOptions opts = {});
Diagram psi(const PreferenceFunction& p);

// Picture with N and W border labels; '.' marks an empty box.
std::string render_psi_grid(const StairGrid& g);

// Maximal (B_n, n) Le-diagrams with + in the bottom box.
PreferenceFunction max_B_le_to_preference(const Diagram& d);
Diagram preference_to_max_B_le(const PreferenceFunction& p);

std::string preference_to_string(const PreferenceFunction& p);
PreferenceFunction parse_preference(const std::string& s);

}  // namespace lecell
