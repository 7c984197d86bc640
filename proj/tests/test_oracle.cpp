#include "doctest.h"
#include "lecell/oracle.hpp"

using namespace lecell;

TEST_CASE("Bruhat interval polynomials") {
    const auto& a2 = RootSystemData::get(Type::A, 2);
    CHECK(bruhat_interval_polynomial(from_word(a2, {1, 2, 1})).to_string() == "1+2q+2q^2+q^3");
    CHECK(bruhat_interval_polynomial(WeylElement::identity(a2)).to_string() == "1");
}

TEST_CASE("pair lists") {
    auto pairs = classical_pairs(2, 3);
    std::vector<std::string> names;
    for (const auto& p : pairs) names.push_back(p.name());
    CHECK(names == std::vector<std::string>{"(A_1,1)", "(A_2,1)", "(A_2,2)", "(B_1,1)", "(B_2,2)", "(B_2,1)", "(B_3,3)",
                                            "(B_3,1)", "(D_2,2)", "(D_3,3)", "(D_3,2)", "(D_3,1)"});
}

TEST_CASE("cell counts against Bruhat intervals") {
    for (const auto& pair : classical_pairs(4, 4)) CHECK(sweep_cell_counts(pair).ok);
    CHECK(sweep_cell_counts({Type::E6, 6, 1}).ok);
}

TEST_CASE("parallel sweeps report the same thing") {
    auto a = sweep_equivalence({Type::B, 4, 4}, 1);
    auto b = sweep_equivalence({Type::B, 4, 4}, 4);
    CHECK(a.ok == b.ok);
    CHECK(a.checked == b.checked);
}
