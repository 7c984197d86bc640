#include "lecell/preference.hpp"

#include <algorithm>
#include <sstream>

#include "lecell/bijections.hpp"

namespace lecell {

bool is_preference_function(const std::vector<int>& word) {
    if (word.empty()) return false;
    const int n = static_cast<int>(word.size());
    std::vector<bool> seen(n + 2, false);
    int k = 0;
    for (int v : word) {
        if (v < 1 || v > n) return false;
        seen[v] = true;
        k = std::max(k, v);
    }
    for (int v = 1; v <= k; ++v)
        if (!seen[v]) return false;
    return true;
}

bool is_atomic(const PreferenceFunction& p) {
    if (!is_preference_function(p)) throw DomainError("not a preference function");
    const int n = static_cast<int>(p.size());
    std::vector<int> suffix_min(n + 1, n + 1);
    for (int k = n - 1; k >= 0; --k) suffix_min[k] = std::min(suffix_min[k + 1], p[k]);
    int prefix_max = 0;
    for (int len = 1; len < n; ++len) {
        prefix_max = std::max(prefix_max, p[len - 1]);
        if (prefix_max < suffix_min[len]) return false;
    }
    return true;
}

std::vector<PreferenceFunction> preference_functions(int n) {
    std::vector<PreferenceFunction> out;
    PreferenceFunction cur(n, 1);
    for (;;) {
        if (is_preference_function(cur)) out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[k] == n) cur[k--] = 1;
        if (k < 0) break;
        ++cur[k];
    }
    return out;
}

std::vector<PreferenceFunction> atomic_preference_functions(int n) {
    std::vector<PreferenceFunction> out;
    for (auto& p : preference_functions(n))
        if (is_atomic(p)) out.push_back(p);
    return out;
}

bool is_in_J(const SignedPermutation& pi) {
    const int n = pi.size();
    if (n == 0) return false;
    for (int i = 1; i <= n; ++i)
        if (pi(i) > i) return false;
    return pi(n) < 0;
}

PreferenceFunction alpha(const SignedPermutation& pi) {
    if (!is_in_J(pi)) throw DomainError("alpha: not an element of J_n");
    const int n = pi.size();
    std::vector<bool> repeat(n + 1, false);  // positions in I+ + 1
    for (int i = 1; i <= n; ++i)
        if (pi(i) > 0) repeat[i + 1] = true;
    std::vector<int> negs;
    for (int i = 1; i <= n; ++i)
        if (pi(i) < 0) negs.push_back(-pi(i));
    std::vector<int> sorted = negs;
    std::sort(sorted.begin(), sorted.end());
    PreferenceFunction p(n, 0);
    std::size_t t = 0;
    for (int k = 1; k <= n; ++k)
        if (!repeat[k]) {
            int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), negs[t++]) - sorted.begin());
            p[k - 1] = rank + 1;
        }
    for (int k = 2; k <= n; ++k)
        if (repeat[k]) p[k - 1] = p[pi(k - 1) - 1];
    return p;
}

SignedPermutation alpha_inverse(const PreferenceFunction& p) {
    if (!is_preference_function(p)) throw DomainError("alpha_inverse: not a preference function");
    const int n = static_cast<int>(p.size());
    SignedPermutation pi;
    pi.window.assign(n, 0);
    std::vector<int> last(n + 1, 0);
    std::vector<bool> in_T(n + 1, false);
    std::vector<int> firsts;  // values at first occurrences, in order
    for (int k = 1; k <= n; ++k) {
        int a = p[k - 1];
        if (last[a] == 0) {
            firsts.push_back(a);
        } else {
            pi.window[k - 2] = last[a];
            in_T[last[a]] = true;
        }
        last[a] = k;
    }
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!in_T[v]) rest.push_back(v);
    std::size_t t = 0;
    for (int i = 1; i <= n; ++i)
        if (pi.window[i - 1] == 0) pi.window[i - 1] = -rest[firsts[t++] - 1];
    return pi;
}

bool StairGrid::row_complete(int a) const {
    for (int b = a + 1; b <= n; ++b)
        if (at(a, b) == kEmpty) return false;
    return true;
}

bool StairGrid::row_all_zero(int a) const {
    for (int b = a + 1; b <= n; ++b)
        if (at(a, b) != 0) return false;
    return true;
}

StairGrid grid_from_diagram(const Diagram& d) {
    const Poset& p = d.P();
    if (p.type != Type::D || p.j != p.n) throw DomainError("a (D_n, n) diagram is required");
    StairGrid g(p.n);
    for (int i = 0; i < p.size(); ++i) {
        if (!d.in_shape(i)) continue;
        const Box& b = p.boxes[i];
        g.at(b.row + 1, p.n - b.col) = d.is_plus(i) ? 1 : 0;
    }
    return g;
}

Diagram grid_to_diagram(const StairGrid& g) {
    if (g.n < 2) throw DomainError("(D_n, n) posets need n >= 2");
    auto p = build_poset(Type::D, g.n, g.n);
    Mask shape = 0, plus = 0;
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b) {
            int v = g.at(a, b);
            if (v == StairGrid::kEmpty) continue;
            int i = p->index_at(a - 1, g.n - b);
            shape |= Mask{1} << i;
            if (v == 1) plus |= Mask{1} << i;
        }
    return make_diagram(p, shape, plus);
}

SignedPermutation wiring_permutation(const StairGrid& g) {
    const int n = g.n;
    SignedPermutation pi;
    for (int i = 1; i <= n; ++i) {
        int r = i, c = n;
        bool east = true;
        for (;;) {
            if (east) {
                bool turn = (c == r) || g.at(r, c) == 1;
                if (g.at(r, c) == StairGrid::kEmpty && c != r) throw DomainError("wiring: grid is not complete");
                if (turn) {
                    east = false;
                } else {
                    --c;
                    continue;
                }
            }
            if (r == 1) break;
            --r;
            if (g.at(r, c) == StairGrid::kEmpty) throw DomainError("wiring: grid is not complete");
            if (g.at(r, c) == 1) {
                east = true;
                --c;
            }
        }
        bool positive = i < n && g.row_all_zero(i);
        pi.window.push_back(positive ? c : -c);
    }
    return pi;
}

PreferenceFunction phi_D(const StairGrid& g) { return alpha(wiring_permutation(g)); }

PreferenceFunction phi_D(const Diagram& d) {
    if (d.shape != d.P().full()) throw DomainError("phi_D: maximal shape required");
    if (!is_pds(d)) throw DomainError("phi_D: input is not a Le-diagram");
    return phi_D(grid_from_diagram(d));
}

namespace {

struct PsiRun {
    StairGrid g;
    int n;
    const SignedPermutation& w;

    bool plus(int a, int b) const { return a < b && g.at(a, b) == 1; }

    void fail(const std::string& what) const { throw std::logic_error("psi: " + what); }

    // From (a, b) heading south; returns the exit row.
    int walk(int a, int b) {
        int r = a, c = b;
        bool south = true;
        for (;;) {
            if (south) {
                ++r;
                if (r == c) {
                    south = false;
                    continue;
                }
                int& cell = g.at(r, c);
                if (cell == StairGrid::kEmpty) cell = 0;
                if (cell == 1) south = false;
            } else {
                ++c;
                if (c > n) return r;
                int& cell = g.at(r, c);
                if (cell == StairGrid::kEmpty) cell = 0;
                if (cell == 1) south = true;
            }
        }
    }

    bool rows_complete_from(int a) const {
        for (int r = a; r <= n; ++r)
            if (!g.row_complete(r)) return false;
        return true;
    }
};

void check_invariants(const StairGrid& g, int i, const StairGrid& before, bool case_b) {
    const int n = g.n;
    auto bad = [&](const std::string& what) {
        throw std::logic_error("psi invariant violated after step " + std::to_string(i) + ": " + what);
    };
    for (int a = 1; a < n; ++a)
        if (g.row_complete(a) && !g.row_all_zero(a))
            for (int r = a + 1; r <= n; ++r)
                if (!g.row_complete(r)) bad("complete row " + std::to_string(a) + " above an incomplete row");
    auto corner_col = [&](int a) {
        if (g.row_complete(a)) return 0;
        for (int b = a + 1; b <= n; ++b)
            if (g.at(a, b) == 1) return b;
        return 0;
    };
    for (int b = 1; b <= n; ++b) {
        int filled = 0, boxes = 0, corners = 0;
        for (int a = 1; a < b; ++a) {
            ++boxes;
            if (g.at(a, b) != StairGrid::kEmpty) ++filled;
            if (corner_col(a) == b) ++corners;
        }
        if (b < i && filled) bad("column " + std::to_string(b) + " should be empty");
        if (corners > 1) bad("two corner + in column " + std::to_string(b));
        if (b >= i && corners == 0 && filled != boxes) bad("column " + std::to_string(b) + " incomplete");
    }
    if (!case_b)
        for (int a = 1; a <= n; ++a) {
            int fresh = 0;
            for (int b = a + 1; b <= n; ++b)
                if (before.at(a, b) == StairGrid::kEmpty && g.at(a, b) == 1) ++fresh;
            if (fresh > 1) bad("two new + in row " + std::to_string(a));
        }
}

}  // namespace

StairGrid psi_grid(const PreferenceFunction& p, std::vector<PsiStep>* trace, PsiOptions opts) {
    if (!is_preference_function(p)) throw DomainError("psi: not a preference function");
    if (!is_atomic(p)) throw DomainError("psi: preference function is not atomic");
    const int n = static_cast<int>(p.size());
    const SignedPermutation w = alpha_inverse(p);
    std::vector<int> istar_of(n + 1);
    for (int k = 1; k <= n; ++k) istar_of[std::abs(w(k))] = k;

    PsiRun run{StairGrid(n), n, w};
    StairGrid& g = run.g;
    for (int i = n; i >= 1; --i) {
        const StairGrid before = g;
        const int istar = istar_of[i];
        std::string cases;
        int a = 0, b = i;
        for (;;) {
            int aprime = 0, bstar = 0;
            for (int r = a + 1; r < b && !aprime; ++r)
                for (int c = r + 1; c <= n; ++c)
                    if (g.at(r, c) == 1) {
                        aprime = r;
                        bstar = c;
                        break;
                    }
            const bool cstar = aprime != 0;
            const bool za = !cstar && istar >= b;
            const bool zb = run.rows_complete_from(a + 1);
            const bool zc = cstar && aprime == istar && bstar == b;
            const bool zd = cstar && istar > aprime && run.rows_complete_from(aprime);
            const bool z = za || zb || zc || zd;
            const bool ca = (cstar && istar < aprime) || (!cstar && istar < b);
            const bool cb = cstar && istar == b && (w(istar) > 0 || (b <= n && g.row_all_zero(b)));
            bool cc = false;
            if (cstar && istar > b && b <= n && w(b) < 0) {
                int empties = 0, nonzero = 0;
                for (int c = b + 1; c <= n; ++c) {
                    if (g.at(b, c) == StairGrid::kEmpty) ++empties;
                    else if (g.at(b, c) != 0) ++nonzero;
                }
                cc = empties == 1 && nonzero == 0;
            }
            if (int(z) + int(ca) + int(cb) + int(cc) > 1)
                run.fail("overlapping cases at i=" + std::to_string(i));

            int exit_row = 0;
            if (z) {
                cases += 'Z';
                exit_row = run.walk(a, b);
            } else if (ca) {
                cases += 'A';
                if (g.at(istar, b) != StairGrid::kEmpty) run.fail("case A target is filled");
                g.at(istar, b) = 1;
                exit_row = run.walk(a, b);
            } else if (cb) {
                cases += 'B';
                exit_row = run.walk(a, b);
            } else if (cc) {
                cases += 'C';
                if (g.at(b, bstar) != StairGrid::kEmpty) run.fail("case C target is filled");
                g.at(b, bstar) = 1;
                exit_row = run.walk(a, b);
            } else {
                cases += 'D';
                if (!cstar || bstar <= b) run.fail("case D without a corner to the west");
                if (g.at(aprime, b) != StairGrid::kEmpty) run.fail("case D target is filled");
                for (int r = a + 1; r < aprime; ++r) {
                    int& cell = g.at(r, b);
                    if (cell == 1) run.fail("case D meets a + in its column");
                    cell = 0;
                }
                g.at(aprime, b) = 1;
                for (int c = b + 1; c < bstar; ++c) {
                    int& cell = g.at(aprime, c);
                    if (cell == 1) run.fail("case D meets a + in its row");
                    cell = 0;
                }
                a = aprime;
                b = bstar;
                continue;
            }
            if (exit_row != istar)
                run.fail("path " + std::to_string(i) + " exits at " + std::to_string(exit_row) + ", expected " +
                         std::to_string(istar));
            break;
        }
        if (opts.check_invariants) check_invariants(g, i, before, cases.back() == 'B');
        if (trace) trace->push_back({i, istar, cases, g});
    }
    return g;
}

Diagram psi(const PreferenceFunction& p) { return grid_to_diagram(psi_grid(p)); }

std::string render_psi_grid(const StairGrid& g) {
    const int n = g.n;
    const int width = static_cast<int>(std::to_string(n).size()) + 3;
    auto pad = [&](std::string s) {
        s.resize(width, ' ');
        return s;
    };
    std::string out = pad("");
    for (int b = n; b >= 1; --b) out += pad(std::to_string(b) + "_N");
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    for (int a = 1; a <= n; ++a) {
        std::string line = pad(std::to_string(a) + "_W");
        for (int b = n; b >= a; --b) {
            if (b == a) {
                line += pad("*");
                break;
            }
            int v = g.at(a, b);
            line += pad(v == StairGrid::kEmpty ? "." : v == 1 ? "+" : "0");
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

namespace {
void require_max_B(const Diagram& d) {
    const Poset& p = d.P();
    if (p.type != Type::B || p.j != p.n) throw DomainError("a (B_n, n) diagram is required");
    if (d.shape != p.full()) throw DomainError("maximal shape required");
}
}  // namespace

PreferenceFunction max_B_le_to_preference(const Diagram& d) {
    require_max_B(d);
    if (!d.is_plus(0)) throw DomainError("the bottom box must contain a +");
    auto dp = phi3_B(d);
    return alpha(SignedPermutation{dp.perm});
}

Diagram preference_to_max_B_le(const PreferenceFunction& p) {
    const int n = static_cast<int>(p.size());
    SignedPermutation pi = alpha_inverse(p);
    auto P = build_poset(Type::B, n, n);
    const auto& rs = *P->rs;
    WeylElement w0 = ideal_element(*P, P->full());
    SignedPermutation v = pi.compose(iota_embed(w0));
    return pds_filling(P, P->full(), iota_preimage(rs, v));
}

std::string preference_to_string(const PreferenceFunction& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
    return os.str();
}

PreferenceFunction parse_preference(const std::string& s) {
    PreferenceFunction p;
    std::string text = s;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            p.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("bad preference entry '" + tok + "'");
        }
    }
    if (!is_preference_function(p)) throw DomainError("not a preference function: " + s);
    return p;
}

}  // namespace lecell
