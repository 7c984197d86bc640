#include "doctest.h"
#include "lecell/bijections.hpp"
#include "lecell/enumeration.hpp"

using namespace lecell;

TEST_CASE("polynomial arithmetic") {
    QPolynomial two = QPolynomial::q_integer(2);
    CHECK((two * two).to_string() == "1+2q+q^2");
    CHECK((two - two).to_string() == "0");
    CHECK(QPolynomial::q_integer(4).derivative().to_string() == "1+2q+3q^2");
    CHECK(QPolynomial(std::vector<BigInt>{2, 4}).divided_exactly(2).to_string() == "1+2q");
    CHECK_THROWS(QPolynomial(std::vector<BigInt>{1, 4}).divided_exactly(2));
    CHECK(QPolynomial(std::vector<BigInt>{-1, 0, 3}).to_string() == "-1+3q^2");
    XYPolynomial t = XYPolynomial::x_plus(1) * XYPolynomial::y_plus(1);
    CHECK(t.to_string() == "1+y+x+x*y");
    CHECK(t.evaluate(2, 3) == 12);
}

TEST_CASE("bhat") {
    CHECK(bhat_q(0).to_string() == "1");
    CHECK(bhat_q(1).to_string() == "1+q");
    CHECK(bhat_q(2).to_string() == "1+2q+2q^2+q^3");
    // A006012: 1, 2, 6, 20, 68, 232, 792
    const int plain[] = {1, 2, 6, 20, 68, 232, 792};
    for (int n = 0; n <= 6; ++n) CHECK(bhat_q(n).at_one() == plain[n]);
    for (int n = 2; n <= 7; ++n) CHECK(census(Type::B, n, 1, Scope::Maximal, Grading::ByPlus) == bhat_q(n));
}

TEST_CASE("dhat") {
    const QPolynomial two = QPolynomial::q_integer(2);
    CHECK(dhat_q(2) == two * two);
    CHECK(dhat_q(3) == two * two * two * two - QPolynomial::q_power(2) * two);
    for (int n = 3; n <= 6; ++n) CHECK(census(Type::D, n, 1, Scope::Maximal, Grading::ByPlus) == dhat_q(n));
}

TEST_CASE("shared recurrence") {
    const QPolynomial two = QPolynomial::q_integer(2);
    for (int n = 3; n <= 9; ++n) {
        CHECK(bhat_q(n) == two * two * bhat_q(n - 1) - two * QPolynomial::q_power(2) * bhat_q(n - 2));
        if (n >= 4) CHECK(dhat_q(n) == two * two * dhat_q(n - 1) - two * QPolynomial::q_power(2) * dhat_q(n - 2));
    }
}

TEST_CASE("all (B_n, n) Le-diagrams") {
    CHECK(big_B(0) == 1);
    CHECK(big_B(1) == 3);
    CHECK(big_B(2) == 13);
    for (int n = 1; n <= 4; ++n) {
        CHECK(census(Type::B, n, n, Scope::AllShapes, Grading::Count).at_one() == big_B(n));
        CHECK(BigInt(decorated_permutations_B(n).size()) == big_B(n));
    }
}

TEST_CASE("permutation tableaux") {
    CHECK(T_poly(1).to_string() == "1+y");
    BigInt fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        CHECK(T_poly(n).evaluate(1, 1) == (BigInt(1) << n) * fact);
    }
    for (int n = 1; n <= 5; ++n) CHECK(tableau_census(n) == T_poly(n));
}

TEST_CASE("maximal (B_n, n)") {
    CHECK(b_staircase_q(0).to_string() == "1");
    CHECK(b_staircase_q(1).to_string() == "1+q");
    const int prefs[] = {1, 3, 13, 75, 541};
    for (int n = 1; n <= 5; ++n) {
        CHECK(b_staircase_q(n).at_one() == 2 * prefs[n - 1]);
        CHECK(census(Type::B, n, n, Scope::Maximal, Grading::ByPlus) == b_staircase_q(n));
    }
}

TEST_CASE("census") {
    // ideals of a 2-chain: 1, 1+q and 1+2q+q^2
    CHECK(census(Type::A, 2, 1, Scope::AllShapes, Grading::ByPlus).to_string() == "3+3q+q^2");
    CHECK(census(Type::D, 4, 4, Scope::Maximal, Grading::Count).at_one() == 48);
    CHECK(census(Type::B, 3, 1, Scope::Maximal, Grading::Count).at_one() == bhat_q(3).at_one());
    CensusOptions opts;
    opts.jobs = 3;
    CHECK(census(Type::B, 4, 4, Scope::AllShapes, Grading::ByZero, opts) ==
          census(Type::B, 4, 4, Scope::AllShapes, Grading::ByZero));
    CensusOptions tiny;
    tiny.cap = 10;
    CHECK_THROWS_AS(census(Type::B, 4, 4, Scope::Maximal, Grading::Count, tiny), DomainError);
}
