#pragma once

#include "lecell/diagrams.hpp"

namespace lecell {

bool is_le_A(const Diagram& d);
bool is_le_B_n(const Diagram& d);
bool is_le_B_1(const Diagram& d);
bool is_le_D_n(const Diagram& d);
bool is_le_D_1(const Diagram& d);

// Dispatches on the poset's pair. Throws for E6/E7, which have no pattern
// description.
bool is_le_pattern(const Diagram& d);
bool has_pattern_predicate(const Poset& p);

// Number of boxes directly below b in its column, for staircase shapes.
int diagonal_distance(const Poset& p, int b);
bool is_diagonal(const Poset& p, int b);
// Box with the same label on the other side of the middle; -1 if none.
int conjugate_box(const Poset& p, int b);

}  // namespace lecell
