#include "lecell/posets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>

namespace lecell {

int popcount(Mask m) { return std::popcount(m); }

int Poset::index_at(int row, int col) const {
    if (row < min_row || row > max_row || col < min_col || col > max_col) return -1;
    return grid_[(row - min_row) * (max_col - min_col + 1) + (col - min_col)];
}

bool is_cominuscule(Type type, int n, int j) {
    switch (type) {
        case Type::A: return n >= 1 && n <= kMaxRank - 1 && j >= 1 && j <= n;
        case Type::B: return n >= 1 && n <= kMaxRank && (j == 1 || j == n);
        case Type::D:
            if (n < 2 || n > kMaxRank) return false;
            if (j == n) return true;
            return n >= 3 && (j == 1 || j == n - 1);
        case Type::E6: return n == 6 && (j == 1 || j == 6);
        case Type::E7: return n == 7 && (j == 7 || j == 1);
    }
    return false;
}

namespace {

struct RawBox {
    int row, col, label;
};

std::vector<RawBox> raw_boxes(Type type, int n, int j) {
    std::vector<RawBox> out;
    switch (type) {
        case Type::A:
            for (int R = 0; R < j; ++R)
                for (int c = 0; c <= n - j; ++c) out.push_back({R, c, R + 1 + c});
            break;
        case Type::B:
            if (j == n) {
                for (int R = 0; R < n; ++R)
                    for (int c = 0; c <= n - 1 - R; ++c) out.push_back({R, c, R + 1 + c});
            } else {
                for (int c = 0; c <= 2 * n - 2; ++c) out.push_back({0, c, c <= n - 1 ? c + 1 : 2 * n - 1 - c});
            }
            break;
        case Type::D:
            if (j == 1) {
                for (int k = 0; k <= n - 2; ++k) out.push_back({1, k, k + 1});
                out.push_back({0, n - 3, n});
                for (int m = 1; m <= n - 2; ++m) out.push_back({0, n - 3 + m, n - 1 - m});
            } else {
                for (int R = 0; R <= n - 2; ++R)
                    for (int c = 0; c <= n - 2 - R; ++c) {
                        int label = R + 1 + c;
                        if (c == n - 2 - R) label = ((n - 2 - R) % 2 == 0) ? n : n - 1;
                        if (j == n - 1 && c == n - 2 - R) label = (label == n) ? n - 1 : n;
                        out.push_back({R, c, label});
                    }
            }
            break;
        case Type::E6: {
            const int rows[4][3] = {{3, 7, 0}, {3, 5, 1}, {2, 4, 2}, {0, 4, 3}};
            const std::vector<std::vector<int>> labels = {{1, 3, 4, 5, 6}, {3, 4, 2}, {2, 4, 5}, {1, 3, 4, 5, 6}};
            for (int r = 0; r < 4; ++r)
                for (int c = rows[r][0]; c <= rows[r][1]; ++c) {
                    int lab = labels[r][c - rows[r][0]];
                    // the node-6 poset is the mirror image under the diagram automorphism
                    if (j == 6) lab = std::vector<int>{0, 6, 2, 5, 4, 3, 1}[lab];
                    out.push_back({r, c, lab});
                }
            break;
        }
        case Type::E7: {
            const int span[9][2] = {{8, 8}, {8, 8}, {8, 8}, {7, 8}, {4, 8}, {4, 8}, {4, 6}, {3, 5}, {0, 5}};
            const std::vector<std::vector<int>> labels = {{7},          {6},       {5},       {2, 4},
                                                          {7, 6, 5, 4, 3}, {6, 5, 4, 3, 1}, {5, 4, 2}, {2, 4, 3},
                                                          {7, 6, 5, 4, 3, 1}};
            for (int r = 0; r < 9; ++r)
                for (int c = span[r][0]; c <= span[r][1]; ++c) out.push_back({r, c, labels[r][c - span[r][0]]});
            break;
        }
    }
    return out;
}

}  // namespace

std::shared_ptr<const Poset> build_poset(Type type, int n, int j) {
    if (!is_cominuscule(type, n, j))
        throw DomainError("(" + type_name(type) + std::to_string(n) + ", " + std::to_string(j) +
                          ") is not a supported cominuscule pair");
    if (type == Type::E7) j = 7;

    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const Poset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(type), n, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto raw = raw_boxes(type, n, j);
    if (raw.size() > 64) throw DomainError("poset too large for mask representation");
    std::sort(raw.begin(), raw.end(), [](const RawBox& a, const RawBox& b) {
        return a.row != b.row ? a.row > b.row : a.col < b.col;
    });

    auto p = std::make_shared<Poset>();
    p->type = type;
    p->n = n;
    p->j = j;
    p->rs = &RootSystemData::get(type, n);
    p->min_row = p->min_col = 1 << 20;
    p->max_row = p->max_col = -(1 << 20);
    for (const auto& b : raw) {
        p->boxes.push_back({b.row, b.col, b.label});
        p->min_row = std::min(p->min_row, b.row);
        p->max_row = std::max(p->max_row, b.row);
        p->min_col = std::min(p->min_col, b.col);
        p->max_col = std::max(p->max_col, b.col);
    }
    const int width = p->max_col - p->min_col + 1;
    p->grid_.assign((p->max_row - p->min_row + 1) * width, -1);
    for (int i = 0; i < p->size(); ++i)
        p->grid_[(p->boxes[i].row - p->min_row) * width + (p->boxes[i].col - p->min_col)] = i;

    const int N = p->size();
    p->below.assign(N, 0);
    p->above.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        const Box& b = p->boxes[i];
        int left = p->index_at(b.row, b.col - 1);
        int down = p->index_at(b.row + 1, b.col);
        if (left >= 0) p->covers.push_back({left, i});
        if (down >= 0) p->covers.push_back({down, i});
    }
    // reading order is a linear extension, so one forward pass closes the relation
    for (int i = 0; i < N; ++i)
        for (auto [lo, hi] : p->covers)
            if (hi == i) p->below[i] |= p->below[lo] | (Mask{1} << lo);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            if ((p->below[k] >> i) & 1) p->above[i] |= Mask{1} << k;

    cache[key] = p;
    return p;
}

bool is_ideal(const Poset& p, Mask m) {
    if (m & ~p.full()) return false;
    for (int i = 0; i < p.size(); ++i)
        if (((m >> i) & 1) && (p.below[i] & ~m)) return false;
    return true;
}

std::vector<Mask> order_ideals(const Poset& p) {
    std::set<Mask> seen{0};
    std::vector<Mask> frontier{0};
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask m : frontier)
            for (int i = 0; i < p.size(); ++i) {
                if ((m >> i) & 1) continue;
                if (p.below[i] & ~m) continue;
                Mask t = m | (Mask{1} << i);
                if (seen.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    auto key = [&](Mask m) {
        std::vector<std::pair<int, int>> coords;
        for (int i = 0; i < p.size(); ++i)
            if ((m >> i) & 1) coords.push_back({p.boxes[i].row, p.boxes[i].col});
        std::sort(coords.begin(), coords.end());
        return coords;
    };
    std::vector<std::pair<std::vector<std::pair<int, int>>, Mask>> keyed;
    for (Mask m : seen) keyed.push_back({key(m), m});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Mask> out;
    for (auto& k : keyed) out.push_back(k.second);
    return out;
}

Mask maximal_ideal(const Poset& p) { return p.full(); }

namespace {
void extend(const Poset& p, Mask ideal, Mask used, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& fn) {
    if (used == ideal) {
        fn(cur);
        return;
    }
    for (int i = 0; i < p.size(); ++i) {
        if (!((ideal >> i) & 1) || ((used >> i) & 1)) continue;
        if (p.below[i] & ~used) continue;
        cur.push_back(i);
        extend(p, ideal, used | (Mask{1} << i), cur, fn);
        cur.pop_back();
    }
}
}  // namespace

void for_each_linear_extension(const Poset& p, Mask ideal,
                               const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    extend(p, ideal, 0, cur, fn);
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, Mask ideal) {
    std::vector<std::vector<int>> out;
    for_each_linear_extension(p, ideal, [&](const std::vector<int>& e) { out.push_back(e); });
    return out;
}

bool is_linear_extension(const Poset& p, Mask ideal, const std::vector<int>& ext) {
    Mask used = 0;
    for (int i : ext) {
        if (i < 0 || i >= p.size() || !((ideal >> i) & 1) || ((used >> i) & 1)) return false;
        if (p.below[i] & ~used) return false;
        used |= Mask{1} << i;
    }
    return used == ideal;
}

std::vector<int> canonical_extension(const Poset& p, Mask ideal) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if ((ideal >> i) & 1) out.push_back(i);
    return out;
}

std::vector<int> ideal_to_word(const Poset& p, Mask ideal, const std::vector<int>& ext) {
    if (!is_linear_extension(p, ideal, ext)) throw DomainError("not a linear extension of the ideal");
    std::vector<int> word;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) word.push_back(p.boxes[*it].label);
    return word;
}

std::vector<int> ideal_to_word(const Poset& p, Mask ideal) {
    return ideal_to_word(p, ideal, canonical_extension(p, ideal));
}

WeylElement ideal_element(const Poset& p, Mask ideal) { return from_word(*p.rs, ideal_to_word(p, ideal)); }

}  // namespace lecell
