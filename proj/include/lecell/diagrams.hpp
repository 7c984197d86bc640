#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "lecell/posets.hpp"

namespace lecell {

// A {0,+} filling of an order ideal. Bits of `plus` outside `shape` are
// never set.
struct Diagram {
    std::shared_ptr<const Poset> poset;
    Mask shape = 0;
    Mask plus = 0;

    const Poset& P() const { return *poset; }
    bool in_shape(int i) const { return (shape >> i) & 1; }
    bool is_plus(int i) const { return (plus >> i) & 1; }
    bool is_zero(int i) const { return in_shape(i) && !is_plus(i); }
    Mask zeros() const { return shape & ~plus; }
    int plus_count() const { return popcount(plus); }
    bool operator==(const Diagram& o) const {
        return poset == o.poset && shape == o.shape && plus == o.plus;
    }
};

Diagram make_diagram(std::shared_ptr<const Poset> p, Mask shape, Mask plus);

struct Subexpression {
    std::vector<int> word;   // reference reduced word
    std::vector<bool> kept;  // false means the letter is replaced by 1
};

Subexpression to_subexpression(const Diagram& d, const std::vector<int>& ext);
WeylElement subexpression_value(const RootSystemData& rs, const Subexpression& s);

WeylElement value(const Diagram& d);
WeylElement value_along(const Diagram& d, const std::vector<int>& ext);
bool is_pds(const Diagram& d);
bool is_pds_along(const Diagram& d, const std::vector<int>& ext);

// The unique Le-diagram of the same shape with the same value.
Diagram leify_direct(const Diagram& d);
// Greedy PDS filling of `shape` for an element v below the shape's element.
Diagram pds_filling(std::shared_ptr<const Poset> p, Mask shape, const WeylElement& v);

// Depth-first generation of all Le-diagrams of one shape.
void for_each_le_diagram(const std::shared_ptr<const Poset>& p, Mask shape,
                         const std::function<void(const Diagram&)>& fn);
std::vector<Diagram> le_diagrams(const std::shared_ptr<const Poset>& p, Mask shape);

}  // namespace lecell
