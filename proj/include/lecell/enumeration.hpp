#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lecell/weyl.hpp"

namespace lecell {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients in ascending degree, no trailing zeros.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(std::vector<BigInt> coeffs);  // NOLINT
    QPolynomial(long long c);                  // NOLINT

    static QPolynomial q_power(int k);
    static QPolynomial q_integer(int i);  // [i] = 1 + q + .. + q^{i-1}

    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0); }
    BigInt at_one() const;
    QPolynomial derivative() const;
    // exact division by an integer; throws if some coefficient is not divisible
    QPolynomial divided_exactly(const BigInt& d) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

    // "1+2q+2q^2+q^3"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Polynomial in x and y keyed by (deg_x, deg_y).
class XYPolynomial {
public:
    using Key = std::pair<int, int>;
    XYPolynomial() = default;

    static XYPolynomial constant(long long c);
    static XYPolynomial x_plus(long long c);  // x + c
    static XYPolynomial y_plus(long long c);  // y + c

    void add(int dx, int dy, const BigInt& c);
    BigInt coeff(int dx, int dy) const;
    BigInt evaluate(long long x, long long y) const;
    const std::map<Key, BigInt>& terms() const { return t_; }

    friend XYPolynomial operator*(const XYPolynomial& a, const XYPolynomial& b);
    bool operator==(const XYPolynomial& o) const { return t_ == o.t_; }
    std::string to_string() const;

private:
    std::map<Key, BigInt> t_;
};

QPolynomial bhat_q(int n);          // maximal (B_n, 1)
QPolynomial dhat_q(int n);          // maximal (D_n, 1)
BigInt big_B(int n);                // all (B_n, n) Le-diagrams
XYPolynomial T_poly(int n);         // type B permutation tableaux
QPolynomial b_staircase_q(int n);   // maximal (B_n, n)

enum class Scope { Maximal, AllShapes };
enum class Grading { Count, ByPlus, ByZero };

struct CensusOptions {
    std::uint64_t cap = std::uint64_t{1} << 30;  // bound on the number of fillings
    int jobs = 1;
};

// Exhaustive Le-diagram census, graded by the chosen statistic.
QPolynomial census(Type type, int n, int j, Scope scope, Grading grading, CensusOptions opts = {});

// Census of type B_n permutation tableaux as sum x^{k-1} y^j, k unrestricted
// rows (n rows in total, empty rows unrestricted), j diagonal +.
XYPolynomial tableau_census(int n);

}  // namespace lecell
