#include "lecell/weyl.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace lecell {

std::string type_name(Type t) {
    switch (t) {
        case Type::A: return "A";
        case Type::B: return "B";
        case Type::D: return "D";
        case Type::E6: return "E6";
        case Type::E7: return "E7";
    }
    return "?";
}

Type parse_type(const std::string& s) {
    if (s == "A") return Type::A;
    if (s == "B" || s == "C") return Type::B;
    if (s == "D") return Type::D;
    if (s == "E6" || s == "E") return Type::E6;
    if (s == "E7") return Type::E7;
    throw DomainError("unknown type '" + s + "'");
}

namespace {

std::vector<std::vector<int>> orthonormal_simple_roots(Type type, int rank, int& dim) {
    std::vector<std::vector<int>> roots;
    auto unit_diff = [&](int a, int b) {
        std::vector<int> v(dim, 0);
        v[a] += 1;
        v[b] -= 1;
        return v;
    };
    switch (type) {
        case Type::A:
            dim = rank + 1;
            for (int i = 0; i < rank; ++i) roots.push_back(unit_diff(i, i + 1));
            break;
        case Type::B:
            dim = rank;
            for (int i = 0; i + 1 < rank; ++i) roots.push_back(unit_diff(i, i + 1));
            roots.push_back(std::vector<int>(dim, 0));
            roots.back()[rank - 1] = 1;
            break;
        case Type::D:
            dim = rank;
            for (int i = 0; i + 1 < rank; ++i) roots.push_back(unit_diff(i, i + 1));
            roots.push_back(std::vector<int>(dim, 0));
            roots.back()[rank - 2] = 1;
            roots.back()[rank - 1] = 1;
            break;
        case Type::E6:
        case Type::E7: {
            // Bourbaki E8 frame, coordinates doubled.
            dim = 8;
            roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            for (int i = 3; i <= rank; ++i) {
                std::vector<int> v(8, 0);
                v[i - 2] = 2;
                v[i - 3] = -2;
                roots.push_back(v);
            }
            break;
        }
    }
    return roots;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool root_negative(const std::vector<int>& beta) {
    for (int c : beta)
        if (c != 0) return c < 0;
    return false;
}

std::unique_ptr<RootSystemData> build_root_system(Type type, int rank) {
    auto rs = std::make_unique<RootSystemData>();
    rs->type = type;
    rs->rank = rank;
    int dim = 0;
    rs->simple_coords = orthonormal_simple_roots(type, rank, dim);
    rs->dim = dim;
    rs->cartan.assign(rank, std::vector<int>(rank, 0));
    for (int k = 0; k < rank; ++k)
        for (int i = 0; i < rank; ++i)
            rs->cartan[k][i] = 2 * dot(rs->simple_coords[k], rs->simple_coords[i]) /
                               dot(rs->simple_coords[i], rs->simple_coords[i]);

    std::vector<std::vector<int>> roots;
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen[e] = 1;
        roots.push_back(e);
    }
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        for (int i = 0; i < rank; ++i) {
            std::vector<int> beta = roots[idx];
            int pairing = 0;
            for (int m = 0; m < rank; ++m) pairing += beta[m] * rs->cartan[m][i];
            beta[i] -= pairing;
            if (root_negative(beta) || seen.count(beta)) continue;
            seen[beta] = 1;
            roots.push_back(beta);
        }
    }
    rs->positive_roots = std::move(roots);
    return rs;
}

}  // namespace

const RootSystemData& RootSystemData::get(Type type, int rank) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<RootSystemData>> cache;
    if (rank < 1 || rank > kMaxRank) throw DomainError("rank out of range");
    if (type == Type::E6 && rank != 6) throw DomainError("E6 has rank 6");
    if (type == Type::E7 && rank != 7) throw DomainError("E7 has rank 7");
    if (type == Type::D && rank < 2) throw DomainError("type D needs rank >= 2");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(type), rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_root_system(type, rank)).first;
    return *it->second;
}

WeylElement::WeylElement(const RootSystemData& rs) : rs_(&rs) {
    for (int k = 0; k < rs.rank; ++k) img_[k * kMaxRank + k] = 1;
}

std::vector<int> WeylElement::apply(const std::vector<int>& beta) const {
    const int r = rs_->rank;
    std::vector<int> out(r, 0);
    for (int k = 0; k < r; ++k) {
        if (beta[k] == 0) continue;
        for (int m = 0; m < r; ++m) out[m] += beta[k] * img_[k * kMaxRank + m];
    }
    return out;
}

void WeylElement::right_multiply_simple(int i) {
    const int r = rs_->rank;
    const int ii = i - 1;
    const int8_t* col_i = &img_[ii * kMaxRank];
    std::array<int8_t, kMaxRank> ci;
    for (int m = 0; m < r; ++m) ci[m] = col_i[m];
    for (int k = 0; k < r; ++k) {
        int c = rs_->cartan[k][ii];
        if (c == 0) continue;
        int8_t* col_k = &img_[k * kMaxRank];
        for (int m = 0; m < r; ++m) col_k[m] = static_cast<int8_t>(col_k[m] - c * ci[m]);
    }
}

void WeylElement::left_multiply_simple(int i) {
    const int r = rs_->rank;
    const int ii = i - 1;
    for (int k = 0; k < r; ++k) {
        int8_t* col = &img_[k * kMaxRank];
        int pairing = 0;
        for (int m = 0; m < r; ++m) pairing += col[m] * rs_->cartan[m][ii];
        col[ii] = static_cast<int8_t>(col[ii] - pairing);
    }
}

bool WeylElement::is_right_descent(int i) const {
    const int8_t* col = &img_[(i - 1) * kMaxRank];
    for (int m = 0; m < rs_->rank; ++m)
        if (col[m] != 0) return col[m] < 0;
    return false;
}

bool WeylElement::is_left_descent(int i) const { return inverse().is_right_descent(i); }

int WeylElement::length() const {
    int len = 0;
    for (const auto& beta : rs_->positive_roots)
        if (root_negative(apply(beta))) ++len;
    return len;
}

std::vector<int> WeylElement::reduced_word() const {
    std::deque<int> word;
    WeylElement w = *this;
    for (;;) {
        int found = 0;
        for (int i = 1; i <= rank(); ++i)
            if (w.is_right_descent(i)) {
                found = i;
                break;
            }
        if (!found) break;
        word.push_front(found);
        w.right_multiply_simple(found);
    }
    return {word.begin(), word.end()};
}

WeylElement WeylElement::inverse() const {
    auto word = reduced_word();
    WeylElement w(*rs_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w.right_multiply_simple(*it);
    return w;
}

std::size_t WeylElement::hash() const {
    std::size_t h = 1469598103934665603ull;
    const int r = rs_ ? rs_->rank : 0;
    for (int k = 0; k < r; ++k)
        for (int m = 0; m < r; ++m) {
            h ^= static_cast<uint8_t>(img_[k * kMaxRank + m]);
            h *= 1099511628211ull;
        }
    return h;
}

WeylElement simple_reflection(const RootSystemData& rs, int i) {
    if (i < 1 || i > rs.rank) throw DomainError("simple index out of range");
    WeylElement w(rs);
    w.right_multiply_simple(i);
    return w;
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    if (u.rs_ != v.rs_) throw DomainError("mismatched root systems");
    const int r = u.rank();
    WeylElement out(*u.rs_);
    out.img_.fill(0);
    for (int k = 0; k < r; ++k)
        for (int m = 0; m < r; ++m) {
            int c = v.img_[k * kMaxRank + m];
            if (c == 0) continue;
            for (int t = 0; t < r; ++t)
                out.img_[k * kMaxRank + t] =
                    static_cast<int8_t>(out.img_[k * kMaxRank + t] + c * u.img_[m * kMaxRank + t]);
        }
    return out;
}

WeylElement from_word(const RootSystemData& rs, const std::vector<int>& word) {
    WeylElement w(rs);
    for (int i : word) {
        if (i < 1 || i > rs.rank) throw DomainError("simple index out of range");
        w.right_multiply_simple(i);
    }
    return w;
}

bool is_right_descent(const WeylElement& w, int i) {
    if (i < 1 || i > w.rank()) throw DomainError("simple index out of range");
    return w.is_right_descent(i);
}

bool is_reduced(const RootSystemData& rs, const std::vector<int>& word) {
    WeylElement w(rs);
    for (int i : word) {
        if (w.is_right_descent(i)) return false;
        w.right_multiply_simple(i);
    }
    return true;
}

bool bruhat_leq(const WeylElement& x, const std::vector<int>& w_word) {
    if (!is_reduced(x.root_system(), w_word)) throw DomainError("word is not reduced");
    WeylElement v = x;
    for (auto it = w_word.rbegin(); it != w_word.rend(); ++it)
        if (v.is_right_descent(*it)) v.right_multiply_simple(*it);
    return v == WeylElement::identity(x.root_system());
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) { return bruhat_leq(x, w.reduced_word()); }

namespace {
std::vector<WeylElement> generate(const RootSystemData& rs, const std::vector<int>& gens) {
    std::vector<WeylElement> out{WeylElement::identity(rs)};
    std::unordered_set<WeylElement, WeylHash> seen(out.begin(), out.end());
    for (std::size_t idx = 0; idx < out.size(); ++idx)
        for (int i : gens) {
            WeylElement w = out[idx];
            w.right_multiply_simple(i);
            if (seen.insert(w).second) out.push_back(w);
        }
    return out;
}
}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystemData& rs) {
    std::vector<int> gens;
    for (int i = 1; i <= rs.rank; ++i) gens.push_back(i);
    return generate(rs, gens);
}

std::vector<WeylElement> parabolic_subgroup(const RootSystemData& rs, int j) {
    std::vector<int> gens;
    for (int i = 1; i <= rs.rank; ++i)
        if (i != j) gens.push_back(i);
    return generate(rs, gens);
}

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation p;
    for (int i = 1; i <= n; ++i) p.window.push_back(i);
    return p;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
    SignedPermutation out;
    for (int i = 1; i <= rhs.size(); ++i) out.window.push_back((*this)(rhs(i)));
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation out;
    out.window.assign(window.size(), 0);
    for (int i = 1; i <= size(); ++i) {
        int v = window[i - 1];
        if (v > 0)
            out.window[v - 1] = i;
        else
            out.window[-v - 1] = -i;
    }
    return out;
}

int SignedPermutation::negatives() const {
    int c = 0;
    for (int v : window)
        if (v < 0) ++c;
    return c;
}

namespace {

SignedPermutation signed_generator(int n, int i, bool type_d) {
    SignedPermutation g = SignedPermutation::identity(n);
    if (i == n) {
        if (type_d) {
            g.window[0] = -2;
            g.window[1] = -1;
        } else {
            g.window[0] = -1;
        }
    } else {
        int p = n - i;  // swap letters p and p+1
        g.window[p - 1] = p + 1;
        g.window[p] = p;
    }
    return g;
}

SignedPermutation embed(const WeylElement& w, bool type_d) {
    const int n = w.rank();
    SignedPermutation p = SignedPermutation::identity(n);
    for (int i : w.reduced_word()) p = p.compose(signed_generator(n, i, type_d));
    return p;
}

}  // namespace

SignedPermutation iota_embed(const WeylElement& w) {
    if (w.root_system().type != Type::B) throw DomainError("iota_embed needs a type B element");
    return embed(w, false);
}

SignedPermutation delta_embed(const WeylElement& w) {
    if (w.root_system().type != Type::D) throw DomainError("delta_embed needs a type D element");
    return embed(w, true);
}

WeylElement iota_preimage(const RootSystemData& rs, const SignedPermutation& p) {
    if (rs.type != Type::B || p.size() != rs.rank) throw DomainError("iota_preimage: type mismatch");
    const int n = rs.rank;
    SignedPermutation cur = p;
    std::deque<int> word;
    for (;;) {
        int found = 0;
        if (cur(1) < 0) found = n;
        for (int i = 1; i < n && !found; ++i) {
            int pos = n - i;
            if (cur(pos) > cur(pos + 1)) found = i;
        }
        if (!found) break;
        cur = cur.compose(signed_generator(n, found, false));
        word.push_front(found);
    }
    return from_word(rs, {word.begin(), word.end()});
}

std::vector<int> to_permutation(const WeylElement& w) {
    if (w.root_system().type != Type::A) throw DomainError("to_permutation needs type A");
    const int n = w.rank() + 1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    // w = s_{i1} ... s_{ik}; one-line of w o s is w with positions swapped.
    for (int i : w.reduced_word()) std::swap(perm[i - 1], perm[i]);
    return perm;
}

WeylElement from_permutation(const RootSystemData& rs, const std::vector<int>& perm) {
    if (rs.type != Type::A || static_cast<int>(perm.size()) != rs.rank + 1)
        throw DomainError("from_permutation: size mismatch");
    std::vector<int> cur = perm;
    std::deque<int> word;
    for (;;) {
        int found = 0;
        for (int i = 1; i <= rs.rank; ++i)
            if (cur[i - 1] > cur[i]) {
                found = i;
                break;
            }
        if (!found) break;
        std::swap(cur[found - 1], cur[found]);
        word.push_front(found);
    }
    return from_word(rs, {word.begin(), word.end()});
}

}  // namespace lecell
