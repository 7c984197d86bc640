#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "lecell/weyl.hpp"

namespace lecell {

using Mask = uint64_t;

// Grid coordinates: row 0 is the top line of the picture, columns grow to
// the right. A box covers the box immediately to its left and the box
// immediately below it.
struct Box {
    int row = 0;
    int col = 0;
    int label = 0;
};

struct Poset {
    Type type;
    int n = 0;  // rank
    int j = 0;
    const RootSystemData* rs = nullptr;
    std::vector<Box> boxes;                   // canonical reading order
    std::vector<std::pair<int, int>> covers;  // (lower, upper)
    std::vector<Mask> below;                  // strictly smaller boxes
    std::vector<Mask> above;                  // strictly larger boxes
    int min_row = 0, max_row = 0, min_col = 0, max_col = 0;

    int size() const { return static_cast<int>(boxes.size()); }
    Mask full() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
    int index_at(int row, int col) const;
    bool leq(int a, int b) const { return a == b || ((below[b] >> a) & 1); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    // open interval (a, b) as a mask
    Mask interval(int a, int b) const { return above[a] & below[b]; }

private:
    friend std::shared_ptr<const Poset> build_poset(Type, int, int);
    std::vector<int> grid_;
};

bool is_cominuscule(Type type, int n, int j);
// Normalizes equivalent selectors (E7 with j = 1 is recorded as j = 7).
std::shared_ptr<const Poset> build_poset(Type type, int n, int j);

bool is_ideal(const Poset& p, Mask m);
// Graded by size, then lexicographic on sorted box coordinates.
std::vector<Mask> order_ideals(const Poset& p);
Mask maximal_ideal(const Poset& p);

// Linear extensions are sequences of box indices, smallest first.
void for_each_linear_extension(const Poset& p, Mask ideal,
                               const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> linear_extensions(const Poset& p, Mask ideal);
bool is_linear_extension(const Poset& p, Mask ideal, const std::vector<int>& ext);
std::vector<int> canonical_extension(const Poset& p, Mask ideal);

// Word read from right to left: the first box of the extension is the
// rightmost letter.
std::vector<int> ideal_to_word(const Poset& p, Mask ideal, const std::vector<int>& ext);
std::vector<int> ideal_to_word(const Poset& p, Mask ideal);
WeylElement ideal_element(const Poset& p, Mask ideal);

int popcount(Mask m);

}  // namespace lecell
