#include "lecell/legame.hpp"

#include <map>
#include <mutex>
#include <random>

#include "lecell/patterns.hpp"

namespace lecell {

std::string family_name(MoveFamily f) {
    switch (f) {
        case MoveFamily::Rectangular: return "rectangular";
        case MoveFamily::Diagonal: return "diagonal";
        case MoveFamily::DS1: return "d-s1";
        case MoveFamily::DS2: return "d-s2";
        case MoveFamily::Conjugate: return "conjugate";
    }
    return "?";
}

MoveFamily parse_family(const std::string& s) {
    for (auto f : {MoveFamily::Rectangular, MoveFamily::Diagonal, MoveFamily::DS1, MoveFamily::DS2,
                   MoveFamily::Conjugate})
        if (family_name(f) == s) return f;
    throw DomainError("unknown move family '" + s + "'");
}

bool compatible(const Diagram& d, const MoveTemplate& m) {
    if (m.interval & ~d.shape) throw DomainError("move interval is not inside the shape");
    return (d.plus & m.zero) == 0 && (m.plus & ~d.plus) == 0;
}

bool performable(const Diagram& d, const MoveTemplate& m) {
    if (!d.in_shape(m.y)) return false;
    return d.is_zero(m.y) && compatible(d, m);
}

Diagram apply_move(const Diagram& d, const MoveTemplate& m) {
    if (!performable(d, m)) throw DomainError("move cannot be performed");
    Diagram out = d;
    out.plus |= Mask{1} << m.y;
    out.plus ^= Mask{1} << m.x;
    return out;
}

MoveCheck verify_move(const Poset& p, const MoveTemplate& m, int cap) {
    if (!p.comparable(m.x, m.y) || !p.leq(m.x, m.y) || m.x == m.y) throw DomainError("x < y required");
    if (m.interval != p.interval(m.x, m.y)) throw DomainError("template does not cover the open interval");
    const Mask free = m.wildcard();
    if (popcount(free) > cap) throw DomainError("interval exceeds the verification cap");
    std::vector<int> order;  // word order over the interval
    for (int i = p.size() - 1; i >= 0; --i)
        if ((m.interval >> i) & 1) order.push_back(i);
    const auto& rs = *p.rs;
    std::vector<int> beta(rs.rank, 0), alpha(rs.rank, 0);
    beta[p.boxes[m.y].label - 1] = 1;
    alpha[p.boxes[m.x].label - 1] = 1;

    MoveCheck res;
    for (Mask sub = free;; sub = (sub - 1) & free) {
        const Mask plus = m.plus | sub;
        WeylElement v(rs);
        for (int i : order)
            if (!((plus >> i) & 1)) v.right_multiply_simple(p.boxes[i].label);
        auto img = v.inverse().apply(beta);
        ++res.fillings;
        if (img != alpha) {
            res.ok = false;
            res.witness_plus = plus;
            std::vector<int> neg(alpha.size());
            for (std::size_t t = 0; t < alpha.size(); ++t) neg[t] = -alpha[t];
            res.sign_flip = img == neg;
            return res;
        }
        if (sub == 0) break;
    }
    return res;
}

bool verify_move_triple(const Poset& p, const MoveTemplate& m, int cap) { return verify_move(p, m, cap).ok; }

namespace {

bool is_staircase(const Poset& p) {
    return (p.type == Type::B && p.j == p.n) || (p.type == Type::D && p.j != 1);
}

// S builder: sym(row, col) returns '0', '+' or '?' for an interval box.
template <class F>
bool build(const Poset& p, MoveFamily fam, int x, int y, F sym, std::vector<MoveTemplate>& out,
           const std::vector<std::pair<int, int>>& required_plus) {
    MoveTemplate m;
    m.family = fam;
    m.x = x;
    m.y = y;
    m.interval = p.interval(x, y);
    for (auto [r, c] : required_plus) {
        int i = p.index_at(r, c);
        if (i < 0 || !((m.interval >> i) & 1)) return false;
    }
    for (int i = 0; i < p.size(); ++i) {
        if (!((m.interval >> i) & 1)) continue;
        char s = sym(p.boxes[i].row, p.boxes[i].col);
        if (s == '+') m.plus |= Mask{1} << i;
        if (s == '0') m.zero |= Mask{1} << i;
    }
    out.push_back(m);
    return true;
}

bool full_rectangle(const Poset& p, const Box& bx, const Box& by) {
    for (int r = by.row; r <= bx.row; ++r)
        for (int c = bx.col; c <= by.col; ++c)
            if (p.index_at(r, c) < 0) return false;
    return true;
}

}  // namespace

std::vector<MoveFamily> complete_families(const Poset& p) {
    switch (p.type) {
        case Type::A: return {MoveFamily::Rectangular};
        case Type::B:
            if (p.j == p.n) return {MoveFamily::Rectangular, MoveFamily::Diagonal};
            return {MoveFamily::Conjugate};
        case Type::D:
            if (p.j == 1) return {MoveFamily::Conjugate};
            return {MoveFamily::Rectangular, MoveFamily::DS1, MoveFamily::DS2};
        default: return {};
    }
}

std::vector<MoveTemplate> enumerate_moves(const Poset& p, MoveFamily f) {
    auto fams = complete_families(p);
    if (std::find(fams.begin(), fams.end(), f) == fams.end())
        throw DomainError("move family " + family_name(f) + " does not apply to this pair");
    std::vector<MoveTemplate> out;
    const int N = p.size();
    for (int y = 0; y < N; ++y)
        for (int x = 0; x < N; ++x) {
            if (x == y || !p.leq(x, y)) continue;
            const Box& bx = p.boxes[x];
            const Box& by = p.boxes[y];
            switch (f) {
                case MoveFamily::Rectangular: {
                    if (bx.row <= by.row || bx.col >= by.col || !full_rectangle(p, bx, by)) break;
                    build(p, f, x, y,
                          [&](int r, int c) {
                              return (r == by.row && c == bx.col) || (r == bx.row && c == by.col) ? '+' : '0';
                          },
                          out, {{by.row, bx.col}, {bx.row, by.col}});
                    break;
                }
                case MoveFamily::Diagonal: {
                    if (!is_diagonal(p, x) || !is_diagonal(p, y)) break;
                    build(p, f, x, y, [&](int r, int c) { return r == by.row && c == bx.col ? '+' : '0'; }, out,
                          {{by.row, bx.col}});
                    break;
                }
                case MoveFamily::DS1:
                case MoveFamily::DS2: {
                    if (!is_staircase(p)) break;
                    const int d = diagonal_distance(p, y);
                    const int r = bx.row - by.row;
                    const int c = by.col - bx.col;
                    if (r <= d + 1 || c <= 0) break;
                    const int k = r - (d + 1);
                    if (c <= k) break;
                    const int zc = by.col - k;        // column of z1
                    const int lower = by.row + d + 1;  // row of the lower +
                    if (f == MoveFamily::DS1) {
                        build(p, f, x, y,
                              [&](int rr, int cc) {
                                  if ((rr == by.row && cc == zc) || (rr == lower && cc == bx.col)) return '+';
                                  if (rr == lower && cc == zc) return '?';
                                  if (cc < zc && rr < lower) return '?';
                                  return '0';
                              },
                              out, {{by.row, zc}, {lower, bx.col}});
                    } else {
                        for (int t = by.row + 1; t < lower; ++t)
                            build(p, f, x, y,
                                  [&](int rr, int cc) {
                                      if (cc == zc && (rr == by.row || rr == lower || rr == t)) return '+';
                                      if (rr == t && cc == bx.col) return '+';
                                      if (cc < zc && rr < t) return '?';
                                      if (cc == zc && rr > t && rr < lower) return '?';
                                      return '0';
                                  },
                                  out, {{by.row, zc}, {lower, zc}, {t, zc}, {t, bx.col}});
                    }
                    break;
                }
                case MoveFamily::Conjugate: {
                    if (bx.label != by.label) break;
                    // + right after x in its row and right before y in its row
                    std::pair<int, int> after{bx.row, bx.col + 1}, before{by.row, by.col - 1};
                    build(p, f, x, y,
                          [&](int rr, int cc) {
                              std::pair<int, int> at{rr, cc};
                              return at == after || at == before ? '+' : '?';
                          },
                          out, {after, before});
                    break;
                }
            }
        }
    return out;
}

std::vector<MoveTemplate> all_moves(const Poset& p) {
    static std::mutex mu;
    static std::map<const Poset*, std::vector<MoveTemplate>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&p);
    if (it != cache.end()) return it->second;
    std::vector<MoveTemplate> out;
    for (auto f : complete_families(p)) {
        auto ms = enumerate_moves(p, f);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    cache[&p] = out;
    return out;
}

GameResult play_le_game(const Diagram& d, const std::vector<MoveTemplate>& moves, Strategy strategy,
                        uint64_t seed, bool keep_trace) {
    GameResult res{d, {}};
    std::mt19937_64 rng(seed);
    std::vector<const MoveTemplate*> avail;
    for (;;) {
        avail.clear();
        for (const auto& m : moves)
            if (((res.result.shape >> m.y) & 1) && performable(res.result, m)) avail.push_back(&m);
        if (avail.empty()) break;
        const MoveTemplate* pick = avail.front();
        if (strategy == Strategy::Random) {
            pick = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(rng)];
        } else {
            for (auto* m : avail)
                if (m->y > pick->y || (m->y == pick->y && m->x > pick->x)) pick = m;
        }
        res.result = apply_move(res.result, *pick);
        if (keep_trace) res.steps.push_back({*pick, res.result});
    }
    return res;
}

GameResult play_le_game(const Diagram& d, Strategy strategy, uint64_t seed, bool keep_trace) {
    if (complete_families(d.P()).empty()) throw DomainError("no complete move system for this pair");
    return play_le_game(d, all_moves(d.P()), strategy, seed, keep_trace);
}

}  // namespace lecell
