#include "lecell/patterns.hpp"

namespace lecell {

namespace {

void require(const Poset& p, Type t, bool single_row_form, const char* what) {
    bool ok = p.type == t;
    if (ok && t == Type::B) ok = single_row_form ? (p.j == 1 && p.n > 1) : p.j == p.n;
    if (ok && t == Type::D) ok = single_row_form ? p.j == 1 : p.j != 1;
    if (!ok) throw DomainError(std::string(what) + ": wrong poset type");
}

bool plus_at(const Diagram& d, int row, int col) {
    int i = d.P().index_at(row, col);
    return i >= 0 && d.is_plus(i);
}

bool plus_below(const Diagram& d, const Box& b) {
    for (int r = b.row + 1; r <= d.P().max_row; ++r)
        if (plus_at(d, r, b.col)) return true;
    return false;
}

bool plus_left(const Diagram& d, const Box& b) {
    for (int c = d.P().min_col; c < b.col; ++c)
        if (plus_at(d, b.row, c)) return true;
    return false;
}

}  // namespace

int diagonal_distance(const Poset& p, int b) {
    const Box& box = p.boxes[b];
    int d = 0;
    while (p.index_at(box.row + d + 1, box.col) >= 0) ++d;
    return d;
}

bool is_diagonal(const Poset& p, int b) { return p.index_at(p.boxes[b].row, p.boxes[b].col + 1) < 0; }

int conjugate_box(const Poset& p, int b) {
    for (int i = 0; i < p.size(); ++i)
        if (i != b && p.boxes[i].label == p.boxes[b].label) return i;
    if (p.type == Type::D && p.j == 1) {
        int lab = p.boxes[b].label;
        int other = lab == p.n ? p.n - 1 : lab == p.n - 1 ? p.n : 0;
        for (int i = 0; i < p.size(); ++i)
            if (other && p.boxes[i].label == other) return i;
    }
    return p.type == Type::B && p.boxes[b].label == p.n ? b : -1;
}

bool is_le_A(const Diagram& d) {
    require(d.P(), Type::A, false, "is_le_A");
    for (int i = 0; i < d.P().size(); ++i) {
        if (!d.is_zero(i)) continue;
        const Box& b = d.P().boxes[i];
        if (plus_below(d, b) && plus_left(d, b)) return false;
    }
    return true;
}

bool is_le_B_n(const Diagram& d) {
    require(d.P(), Type::B, false, "is_le_B_n");
    for (int i = 0; i < d.P().size(); ++i) {
        if (!d.is_zero(i)) continue;
        const Box& b = d.P().boxes[i];
        if ((plus_below(d, b) || is_diagonal(d.P(), i)) && plus_left(d, b)) return false;
    }
    return true;
}

bool is_le_B_1(const Diagram& d) {
    require(d.P(), Type::B, true, "is_le_B_1");
    const Poset& p = d.P();
    const int middle = p.n - 1;
    for (int i = 0; i < p.size(); ++i) {
        if (!d.is_zero(i) || p.boxes[i].col <= middle) continue;
        int b = p.index_at(0, p.boxes[i].col - 1);
        int bc = conjugate_box(p, b);
        if (d.is_plus(b) && d.is_plus(bc)) return false;
    }
    return true;
}

bool is_le_D_n(const Diagram& d) {
    require(d.P(), Type::D, false, "is_le_D_n");
    const Poset& p = d.P();
    for (int i = 0; i < p.size(); ++i) {
        if (!d.is_zero(i)) continue;
        const Box& c = p.boxes[i];
        // (1)
        if (plus_below(d, c) && plus_left(d, c)) return false;
        const int dist = diagonal_distance(p, i);
        for (int bcol = p.min_col; bcol < c.col; ++bcol) {
            if (!plus_at(d, c.row, bcol)) continue;
            const int south = c.row + dist + 1;
            // (2)
            for (int col = p.min_col; col < bcol; ++col)
                if (plus_at(d, south, col)) return false;
            // (3): b1 = (c.row, bcol), b2 directly d+1 rows below it
            if (plus_at(d, south, bcol))
                for (int r = c.row + 1; r < south; ++r)
                    for (int col = p.min_col; col < bcol; ++col)
                        if (plus_at(d, r, col)) return false;
        }
    }
    return true;
}

bool is_le_D_1(const Diagram& d) {
    require(d.P(), Type::D, true, "is_le_D_1");
    const Poset& p = d.P();
    int m1 = -1, m2 = -1;
    for (int i = 0; i < p.size(); ++i) {
        if (p.boxes[i].label == p.n - 1) m1 = i;
        if (p.boxes[i].label == p.n) m2 = i;
    }
    for (int i = 0; i < p.size(); ++i) {
        if (!d.is_zero(i)) continue;
        if (!((p.above[m1] >> i) & 1) || !((p.above[m2] >> i) & 1)) continue;
        for (auto [lo, hi] : p.covers) {
            if (hi != i) continue;
            int conj = conjugate_box(p, lo);
            if (d.is_plus(lo) && conj >= 0 && d.is_plus(conj)) return false;
        }
    }
    return true;
}

bool has_pattern_predicate(const Poset& p) {
    return p.type == Type::A || p.type == Type::B || p.type == Type::D;
}

bool is_le_pattern(const Diagram& d) {
    const Poset& p = d.P();
    switch (p.type) {
        case Type::A: return is_le_A(d);
        case Type::B: return p.j == p.n ? is_le_B_n(d) : is_le_B_1(d);
        case Type::D:
            if (p.j == 1) return is_le_D_1(d);
            // (D_n, n-1) is the mirror image of (D_n, n)
            return is_le_D_n(d);
        default: break;
    }
    throw DomainError("no pattern characterization for this pair");
}

}  // namespace lecell
