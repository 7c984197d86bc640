#include "lecell/bijections.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lecell {

int DecoratedPermutation::nonexcedances() const {
    int c = 0;
    for (int i = 1; i <= size(); ++i)
        if (perm[i - 1] < i || (perm[i - 1] == i && clockwise[i - 1])) ++c;
    return c;
}

namespace {
std::vector<int> decoration_key(const DecoratedPermutation& p) {
    std::vector<int> k = p.perm;
    for (int i = 1; i <= p.size(); ++i) k.push_back(p.is_fixed(i) && p.clockwise[i - 1]);
    k.push_back(p.signed_window);
    return k;
}
}  // namespace

bool DecoratedPermutation::operator==(const DecoratedPermutation& o) const {
    return decoration_key(*this) == decoration_key(o);
}

bool DecoratedPermutation::operator<(const DecoratedPermutation& o) const {
    return decoration_key(*this) < decoration_key(o);
}

std::string to_string(const DecoratedPermutation& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ' ';
        if (p.is_fixed(i) && p.clockwise[i - 1]) os << '~';
        os << p.perm[i - 1];
    }
    return os.str();
}

DecoratedPermutation parse_decorated(const std::string& s, bool signed_window) {
    DecoratedPermutation p;
    p.signed_window = signed_window;
    std::string text = s;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        bool cw = false;
        if (tok[0] == '~') {
            cw = true;
            tok = tok.substr(1);
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("bad permutation entry '" + tok + "'");
        }
        if (used != tok.size()) throw DomainError("bad permutation entry '" + tok + "'");
        p.perm.push_back(v);
        p.clockwise.push_back(cw);
    }
    const int n = p.size();
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        int v = p.perm[i - 1];
        int a = v < 0 ? -v : v;
        if (a < 1 || a > n || seen[a] || (!signed_window && v < 0))
            throw DomainError("not a permutation: '" + s + "'");
        seen[a] = true;
        if (p.clockwise[i - 1] && v != i) throw DomainError("decoration on a non-fixed point in '" + s + "'");
    }
    return p;
}

bool is_cell_label(const Poset& p, const CellLabel& c) {
    if (&c.x.root_system() != p.rs || &c.w.root_system() != p.rs) return false;
    for (int i = 1; i <= p.n; ++i)
        if (i != p.j && c.w.is_right_descent(i)) return false;
    return bruhat_leq(c.x, c.w);
}

namespace {

void require_A(const Poset& p) {
    if (p.type != Type::A) throw DomainError("type A pair required");
}

void require_Bn(const Poset& p) {
    if (p.type != Type::B || p.j != p.n) throw DomainError("type (B_n, n) pair required");
}

// pi = v w^{-1}; fixed points in positions w(1..j) are clockwise.
DecoratedPermutation phi1_perms(const std::vector<int>& v, const std::vector<int>& w, int j) {
    const int n = static_cast<int>(v.size());
    std::vector<int> winv(n);
    for (int i = 0; i < n; ++i) winv[w[i] - 1] = i + 1;
    DecoratedPermutation out;
    out.perm.resize(n);
    out.clockwise.assign(n, false);
    for (int i = 1; i <= n; ++i) out.perm[i - 1] = v[winv[i - 1] - 1];
    for (int k = 1; k <= j; ++k) {
        int pos = w[k - 1];
        if (out.perm[pos - 1] == pos) out.clockwise[pos - 1] = true;
    }
    return out;
}

// Letters of S_{2n} identified with -n..-1, 1..n.
int signed_letter(int p, int n) { return p <= n ? -(n + 1 - p) : p - n; }
int unsigned_letter(int s, int n) { return s < 0 ? n + 1 + s : s + n; }

std::vector<int> signed_to_full(const SignedPermutation& sp) {
    const int n = sp.size();
    std::vector<int> out(2 * n);
    for (int p = 1; p <= 2 * n; ++p) out[p - 1] = unsigned_letter(sp(signed_letter(p, n)), n);
    return out;
}

DecoratedPermutation full_to_window(const DecoratedPermutation& a, int n) {
    DecoratedPermutation out;
    out.signed_window = true;
    for (int i = 1; i <= n; ++i) {
        out.perm.push_back(signed_letter(a.perm[n + i - 1], n));
        out.clockwise.push_back(a.clockwise[n + i - 1]);
    }
    return out;
}

}  // namespace

CellLabel phi2(const Diagram& d) {
    if (!is_pds(d)) throw DomainError("phi2: input is not a Le-diagram");
    return {value(d), ideal_element(d.P(), d.shape)};
}

Diagram phi2_inverse(const std::shared_ptr<const Poset>& p, const CellLabel& c) {
    if (!is_cell_label(*p, c)) throw DomainError("phi2_inverse: not a cell label");
    for (Mask m : order_ideals(*p))
        if (ideal_element(*p, m) == c.w) return pds_filling(p, m, c.x);
    throw DomainError("phi2_inverse: w has no order ideal");
}

DecoratedPermutation phi1(const Poset& p, const CellLabel& c) {
    require_A(p);
    if (!is_cell_label(p, c)) throw DomainError("phi1: not a cell label");
    return phi1_perms(to_permutation(c.x), to_permutation(c.w), p.j);
}

DecoratedPermutation phi3(const Diagram& d) {
    const Poset& p = d.P();
    require_A(p);
    if (!is_pds(d)) throw DomainError("phi3: input is not a Le-diagram");
    const int n = p.n + 1;
    const int rows = p.j;
    const int cols = n - p.j;
    std::vector<int> len(rows, 0);
    for (int i = 0; i < p.size(); ++i)
        if (d.in_shape(i)) ++len[p.boxes[i].row];

    // border steps along the northeast boundary of the shape
    std::vector<int> col_step(cols), row_step(rows);
    int label = 1, x = 0;
    for (int R = 0; R < rows; ++R) {
        for (; x < len[R]; ++x) col_step[x] = label++;
        row_step[R] = label++;
    }
    for (; x < cols; ++x) col_step[x] = label++;

    auto plus = [&](int r, int c) {
        int i = p.index_at(r, c);
        return i >= 0 && d.is_plus(i);
    };
    // from a + at (r, c) heading east (east=true) or north
    auto walk = [&](int r, int c, bool east) {
        for (;;) {
            if (east) {
                int nc = c + 1;
                while (nc < cols && !plus(r, nc)) ++nc;
                if (nc >= cols) return row_step[r];
                c = nc;
            } else {
                int nr = r - 1;
                while (nr >= 0 && !plus(nr, c)) --nr;
                if (nr < 0) return col_step[c];
                r = nr;
            }
            east = !east;
        }
    };

    DecoratedPermutation out;
    out.perm.assign(n, 0);
    out.clockwise.assign(n, false);
    for (int c = 0; c < cols; ++c) {
        int i = col_step[c];
        int r = rows - 1;
        while (r >= 0 && !plus(r, c)) --r;
        out.perm[i - 1] = r < 0 ? i : walk(r, c, true);
    }
    for (int R = 0; R < rows; ++R) {
        int i = row_step[R];
        int c = 0;
        while (c < cols && !plus(R, c)) ++c;
        if (c >= cols) {
            out.perm[i - 1] = i;
            out.clockwise[i - 1] = true;
        } else {
            out.perm[i - 1] = walk(R, c, false);
        }
    }
    return out;
}

Diagram double_B_diagram(const Diagram& d) {
    const Poset& p = d.P();
    require_Bn(p);
    const int n = p.n;
    auto A = build_poset(Type::A, 2 * n - 1, n);
    Mask shape = 0, plus = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (!d.in_shape(i)) continue;
        const Box& b = p.boxes[i];
        for (auto [r, c] : {std::pair{b.row, b.col}, std::pair{n - 1 - b.col, n - 1 - b.row}}) {
            int k = A->index_at(r, c);
            shape |= Mask{1} << k;
            if (d.is_plus(i)) plus |= Mask{1} << k;
        }
    }
    return make_diagram(A, shape, plus);
}

CellLabel phi2_B(const Diagram& d) {
    require_Bn(d.P());
    return phi2(d);
}

DecoratedPermutation phi1_B(const Poset& p, const CellLabel& c) {
    require_Bn(p);
    if (!is_cell_label(p, c)) throw DomainError("phi1_B: not a cell label");
    auto full = phi1_perms(signed_to_full(iota_embed(c.x)), signed_to_full(iota_embed(c.w)), p.n);
    return full_to_window(full, p.n);
}

DecoratedPermutation phi3_B(const Diagram& d) {
    require_Bn(d.P());
    if (!is_pds(d)) throw DomainError("phi3_B: input is not a Le-diagram");
    return full_to_window(phi3(double_B_diagram(d)), d.P().n);
}

std::vector<DecoratedPermutation> decorated_permutations_A(int n, int j) {
    std::vector<DecoratedPermutation> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (perm[i - 1] == i) fixed.push_back(i);
        for (int mask = 0; mask < (1 << fixed.size()); ++mask) {
            DecoratedPermutation d;
            d.perm = perm;
            d.clockwise.assign(n, false);
            for (std::size_t f = 0; f < fixed.size(); ++f)
                if ((mask >> f) & 1) d.clockwise[fixed[f] - 1] = true;
            if (d.nonexcedances() == j) out.push_back(d);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<DecoratedPermutation> decorated_permutations_B(int n) {
    std::vector<DecoratedPermutation> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            std::vector<int> win(n);
            std::vector<int> fixed;
            for (int i = 0; i < n; ++i) {
                win[i] = ((signs >> i) & 1) ? -perm[i] : perm[i];
                if (win[i] == i + 1) fixed.push_back(i + 1);
            }
            for (int mask = 0; mask < (1 << fixed.size()); ++mask) {
                DecoratedPermutation d;
                d.signed_window = true;
                d.perm = win;
                d.clockwise.assign(n, false);
                for (std::size_t f = 0; f < fixed.size(); ++f)
                    if ((mask >> f) & 1) d.clockwise[fixed[f] - 1] = true;
                out.push_back(d);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool is_permutation_tableau_B(const Diagram& d) {
    const Poset& p = d.P();
    require_Bn(p);
    std::vector<int> boxes(p.n, 0), pluses(p.n, 0);
    for (int i = 0; i < p.size(); ++i) {
        if (!d.in_shape(i)) continue;
        ++boxes[p.boxes[i].col];
        if (d.is_plus(i)) ++pluses[p.boxes[i].col];
    }
    for (int c = 0; c < p.n; ++c)
        if (boxes[c] > 0 && pluses[c] == 0) return false;
    return true;
}

bool delete_zero_hook(const Diagram& d, Diagram& out) {
    const Poset& p = d.P();
    require_Bn(p);
    const int n = p.n;
    int col = -1;
    for (int c = 0; c < n && col < 0; ++c) {
        bool any = false, all_zero = true;
        for (int i = 0; i < p.size(); ++i)
            if (d.in_shape(i) && p.boxes[i].col == c) {
                any = true;
                if (d.is_plus(i)) all_zero = false;
            }
        if (any && all_zero) col = c;
    }
    if (col < 0) return false;
    const int row = n - 1 - col;
    if (n == 1) {
        out = Diagram{nullptr, 0, 0};
        return true;
    }
    auto q = build_poset(Type::B, n - 1, n - 1);
    Mask shape = 0, plus = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (!d.in_shape(i)) continue;
        const Box& b = p.boxes[i];
        if (b.row == row || b.col == col) continue;
        int k = q->index_at(b.row - (b.row > row), b.col - (b.col > col));
        shape |= Mask{1} << k;
        if (d.is_plus(i)) plus |= Mask{1} << k;
    }
    out = make_diagram(q, shape, plus);
    return true;
}

namespace {
const std::vector<WeylElement>& cached_parabolic(const Poset& p) {
    static std::mutex mu;
    static std::map<const Poset*, std::vector<WeylElement>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&p);
    if (it == cache.end()) it = cache.emplace(&p, parabolic_subgroup(*p.rs, p.j)).first;
    return it->second;
}
}  // namespace

bool cell_leq(const Poset& p, const CellLabel& c1, const CellLabel& c2) {
    if (!is_cell_label(p, c1) || !is_cell_label(p, c2)) throw DomainError("cell_leq: not cell labels");
    const auto w2_word = c2.w.reduced_word();
    for (const auto& z : cached_parabolic(p)) {
        WeylElement xz = multiply(c1.x, z);
        WeylElement wz = multiply(c1.w, z);
        if (bruhat_leq(c2.x, xz) && bruhat_leq(xz, wz) && bruhat_leq(wz, w2_word)) return true;
    }
    return false;
}

std::vector<CellLabel> all_cells(const std::shared_ptr<const Poset>& p) {
    std::vector<CellLabel> out;
    for (Mask m : order_ideals(*p)) {
        WeylElement w = ideal_element(*p, m);
        for_each_le_diagram(p, m, [&](const Diagram& d) { out.push_back({value(d), w}); });
    }
    return out;
}

}  // namespace lecell
