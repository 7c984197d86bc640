#include "lecell/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "lecell/bijections.hpp"
#include "lecell/diagrams.hpp"
#include "lecell/posets.hpp"

namespace lecell {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(long long c) : c_{BigInt(c)} { trim(); }

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::q_power(int k) {
    std::vector<BigInt> c(k + 1, 0);
    c[k] = 1;
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::q_integer(int i) { return QPolynomial(std::vector<BigInt>(std::max(i, 0), 1)); }

BigInt QPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

QPolynomial QPolynomial::derivative() const {
    std::vector<BigInt> c;
    for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * static_cast<long long>(k));
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::divided_exactly(const BigInt& d) const {
    std::vector<BigInt> c = c_;
    for (auto& x : c) {
        if (x % d != 0) throw std::logic_error("inexact polynomial division");
        x /= d;
    }
    return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[i + k] += a.c_[i] * b.c_[k];
    return QPolynomial(std::move(c));
}

namespace {
std::string monomial(const BigInt& c, const std::string& vars, bool first) {
    std::string out;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) out += "-";
    else if (!first) out += "+";
    if (vars.empty() || mag != 1) out += mag.str();
    out += vars;
    return out;
}

std::string power(const char* v, int k) {
    if (k == 0) return "";
    if (k == 1) return v;
    return std::string(v) + "^" + std::to_string(k);
}
}  // namespace

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) out += monomial(c_[k], power("q", static_cast<int>(k)), out.empty());
    return out;
}

XYPolynomial XYPolynomial::constant(long long c) {
    XYPolynomial p;
    p.add(0, 0, c);
    return p;
}

XYPolynomial XYPolynomial::x_plus(long long c) {
    XYPolynomial p;
    p.add(1, 0, 1);
    p.add(0, 0, c);
    return p;
}

XYPolynomial XYPolynomial::y_plus(long long c) {
    XYPolynomial p;
    p.add(0, 1, 1);
    p.add(0, 0, c);
    return p;
}

void XYPolynomial::add(int dx, int dy, const BigInt& c) {
    auto& slot = t_[{dx, dy}];
    slot += c;
    if (slot == 0) t_.erase({dx, dy});
}

BigInt XYPolynomial::coeff(int dx, int dy) const {
    auto it = t_.find({dx, dy});
    return it == t_.end() ? BigInt(0) : it->second;
}

BigInt XYPolynomial::evaluate(long long x, long long y) const {
    BigInt s = 0;
    for (const auto& [k, c] : t_) s += c * boost::multiprecision::pow(BigInt(x), k.first) *
                                       boost::multiprecision::pow(BigInt(y), k.second);
    return s;
}

XYPolynomial operator*(const XYPolynomial& a, const XYPolynomial& b) {
    XYPolynomial out;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

std::string XYPolynomial::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
        std::string vars = power("x", k.first);
        std::string ys = power("y", k.second);
        if (!vars.empty() && !ys.empty()) vars += "*";
        out += monomial(c, vars + ys, out.empty());
    }
    return out;
}

namespace {
QPolynomial shared_recurrence(const QPolynomial& prev, const QPolynomial& prev2) {
    const QPolynomial one_q = QPolynomial::q_integer(2);
    return one_q * one_q * prev - one_q * QPolynomial::q_power(2) * prev2;
}
}  // namespace

QPolynomial bhat_q(int n) {
    if (n < 0) throw DomainError("bhat_q: n must be >= 0");
    if (n == 0) return 1;
    if (n == 1) return QPolynomial::q_integer(2);
    QPolynomial a = QPolynomial::q_integer(2), b = std::vector<BigInt>{1, 2, 2, 1};
    for (int k = 3; k <= n; ++k) {
        QPolynomial c = shared_recurrence(b, a);
        a = b;
        b = c;
    }
    return b;
}

QPolynomial dhat_q(int n) {
    if (n < 0) throw DomainError("dhat_q: n must be >= 0");
    const QPolynomial two = QPolynomial::q_integer(2);
    if (n == 0) return 1;
    if (n == 1) return two;
    QPolynomial a = two * two;
    if (n == 2) return a;
    QPolynomial b = a * a - QPolynomial::q_power(2) * two;
    for (int k = 4; k <= n; ++k) {
        QPolynomial c = shared_recurrence(b, a);
        a = b;
        b = c;
    }
    return b;
}

BigInt big_B(int n) {
    if (n < 0) throw DomainError("big_B: n must be >= 0");
    BigInt b = 1;
    for (int k = 0; k < n; ++k) b = 2 * (k + 1) * b + 1;
    return b;
}

XYPolynomial T_poly(int n) {
    if (n < 1) throw DomainError("T_poly: n must be >= 1");
    XYPolynomial t = XYPolynomial::constant(1);
    for (int k = 0; k < n; ++k) t = t * XYPolynomial::y_plus(1);
    for (int k = 1; k <= n - 1; ++k) t = t * XYPolynomial::x_plus(k);
    return t;
}

QPolynomial b_staircase_q(int n) {
    if (n < 0) throw DomainError("b_staircase_q: n must be >= 0");
    std::vector<QPolynomial> b{QPolynomial(1)};
    for (int m = 1; m <= n; ++m) {
        QPolynomial next = QPolynomial::q_integer(m + 1) * b[m - 1];
        QPolynomial deriv = QPolynomial::q_integer(m - 1);
        BigInt fact = 1;
        for (int i = 1; i <= m - 2; ++i) {
            deriv = deriv.derivative();
            fact *= i;
            next += QPolynomial::q_power(2) * deriv.divided_exactly(fact) * b[m - i - 1];
        }
        b.push_back(next);
    }
    return b[n];
}

QPolynomial census(Type type, int n, int j, Scope scope, Grading grading, CensusOptions opts) {
    auto p = build_poset(type, n, j);
    std::vector<Mask> shapes;
    if (scope == Scope::Maximal) shapes.push_back(p->full());
    else shapes = order_ideals(*p);

    long double fillings = 0;
    for (Mask s : shapes) fillings += std::ldexp(1.0L, popcount(s));
    if (fillings > static_cast<long double>(opts.cap))
        throw DomainError("census: " + std::to_string(static_cast<unsigned long long>(fillings)) +
                          " fillings exceed the cap");

    const int size = p->size();
    std::vector<BigInt> total(size + 1, 0);
    std::mutex mu;
    auto work = [&](std::size_t begin, std::size_t step) {
        std::vector<long long> local(size + 1, 0);
        for (std::size_t k = begin; k < shapes.size(); k += step)
            for_each_le_diagram(p, shapes[k], [&](const Diagram& d) {
                switch (grading) {
                    case Grading::Count: ++local[0]; break;
                    case Grading::ByPlus: ++local[d.plus_count()]; break;
                    case Grading::ByZero: ++local[popcount(d.zeros())]; break;
                }
            });
        std::lock_guard<std::mutex> lock(mu);
        for (int k = 0; k <= size; ++k) total[k] += local[k];
    };
    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(shapes.size())));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }
    return QPolynomial(std::move(total));
}

XYPolynomial tableau_census(int n) {
    auto p = build_poset(Type::B, n, n);
    XYPolynomial out;
    for (Mask s : order_ideals(*p))
        for_each_le_diagram(p, s, [&](const Diagram& d) {
            if (!is_permutation_tableau_B(d)) return;
            std::vector<bool> restricted(n, false);
            int diag_plus = 0;
            for (int i = 0; i < p->size(); ++i) {
                if (!d.in_shape(i)) continue;
                const Box& b = p->boxes[i];
                const bool diagonal = p->index_at(b.row, b.col + 1) < 0;
                if (diagonal && d.is_plus(i)) ++diag_plus;
                if (d.is_plus(i)) continue;
                bool plus_below = false;
                for (int r = b.row + 1; r < n; ++r) {
                    int k = p->index_at(r, b.col);
                    if (k >= 0 && d.is_plus(k)) plus_below = true;
                }
                if (diagonal || plus_below) restricted[b.row] = true;
            }
            const int free_rows = static_cast<int>(std::count(restricted.begin(), restricted.end(), false));
            if (free_rows == 0) throw std::logic_error("tableau without an unrestricted row");
            out.add(free_rows - 1, diag_plus, 1);
        });
    return out;
}

}  // namespace lecell
