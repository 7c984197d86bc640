#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lecell/bijections.hpp"
#include "lecell/io.hpp"
#include "lecell/oracle.hpp"
#include "lecell/preference.hpp"

using namespace lecell;

namespace {
const PreferenceFunction kExample{4, 6, 3, 1, 7, 5, 7, 2, 1};
const SignedPermutation kExamplePi{{-6, -8, -3, -1, -9, 5, -7, 4, -2}};

std::vector<std::string> expected_grids() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/psi_example.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<std::string> out;
    std::string block, line;
    while (std::getline(ss, line)) {
        if (line.rfind("D_", 0) == 0) {
            if (!block.empty()) out.push_back(block);
            block.clear();
        } else if (!line.empty()) {
            block += line + "\n";
        }
    }
    if (!block.empty()) out.push_back(block);
    return out;
}
}  // namespace

TEST_CASE("preference function predicates") {
    CHECK(is_preference_function({1, 1, 1}));
    CHECK(is_preference_function(kExample));
    CHECK_FALSE(is_preference_function({2, 2}));
    CHECK(is_atomic({1}));
    CHECK_FALSE(is_atomic({1, 2}));
    CHECK(is_atomic(kExample));
    const std::size_t counts[] = {1, 3, 13, 75, 541, 4683};
    const std::size_t atomic[] = {1, 2, 8, 48, 368, 3376};
    for (int n = 1; n <= 6; ++n) {
        CHECK(preference_functions(n).size() == counts[n - 1]);
        CHECK(atomic_preference_functions(n).size() == atomic[n - 1]);
    }
}

TEST_CASE("alpha") {
    CHECK(is_in_J(kExamplePi));
    CHECK(alpha(kExamplePi) == kExample);
    CHECK(alpha_inverse(kExample) == kExamplePi);
    CHECK(alpha(SignedPermutation{{-1}}) == PreferenceFunction{1});
    CHECK(alpha_inverse({1}) == SignedPermutation{{-1}});
    CHECK_THROWS_AS(alpha(SignedPermutation{{2, -1}}), DomainError);

    // injective on J_3, by enumerating all signed permutations
    std::set<PreferenceFunction> image;
    int members = 0;
    std::vector<int> perm{1, 2, 3};
    do {
        for (int signs = 0; signs < 8; ++signs) {
            SignedPermutation pi;
            for (int k = 0; k < 3; ++k) pi.window.push_back((signs >> k) & 1 ? -perm[k] : perm[k]);
            if (!is_in_J(pi)) continue;
            ++members;
            image.insert(alpha(pi));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(members == 13);
    CHECK(image.size() == 13);
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : preference_functions(n)) {
            CHECK(alpha(alpha_inverse(f)) == f);
            CHECK(alpha_inverse(alpha(alpha_inverse(f))) == alpha_inverse(f));
        }
}

TEST_CASE("psi reproduces the worked example") {
    std::vector<PsiStep> steps;
    PsiOptions opts;
    opts.check_invariants = true;
    auto grid = psi_grid(kExample, &steps, opts);
    auto expected = expected_grids();
    REQUIRE(expected.size() == 8);
    REQUIRE(steps.size() == 9);
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(steps[k].i == 9 - static_cast<int>(k));
        CHECK(render_psi_grid(steps[k].grid) == expected[k]);
    }
    const std::vector<std::string> cases{"A", "A", "DDA", "A", "DB", "DDDB", "DDA", "DDC", "Z"};
    for (std::size_t k = 0; k < steps.size(); ++k) CHECK(steps[k].cases == cases[k]);
    CHECK(steps[7].grid == steps[8].grid);
    CHECK(wiring_permutation(grid) == kExamplePi);
    CHECK(phi_D(grid) == kExample);
    CHECK(phi_D(grid_to_diagram(grid)) == kExample);
}

TEST_CASE("all-zero rows of psi(f) are the positive entries of its permutation") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& f : atomic_preference_functions(n)) {
            auto g = psi_grid(f);
            auto w = alpha_inverse(f);
            for (int i = 1; i < n; ++i) CHECK(g.row_all_zero(i) == (w(i) > 0));
        }
}

TEST_CASE("Phi and Psi are inverse bijections") {
    CHECK(phi_D(psi_grid({1})) == PreferenceFunction{1});
    CHECK_THROWS_AS(psi_grid({1, 2}), DomainError);
    CHECK_THROWS_AS(psi_grid({2, 2}), DomainError);
    for (int n = 1; n <= 6; ++n) {
        auto r = sweep_preference(n);
        INFO(r.counterexample);
        CHECK(r.ok);
    }
    PsiOptions opts;
    opts.check_invariants = true;
    for (int n = 2; n <= 6; ++n)
        for (const auto& f : atomic_preference_functions(n)) CHECK_NOTHROW(psi_grid(f, nullptr, opts));
}

TEST_CASE("maximal type B diagrams and preference functions") {
    auto p = build_poset(Type::B, 1, 1);
    auto single = make_diagram(p, 1, 1);
    CHECK(max_B_le_to_preference(single) == PreferenceFunction{1});
    CHECK_THROWS_AS(max_B_le_to_preference(make_diagram(p, 1, 0)), DomainError);

    auto b3 = build_poset(Type::B, 3, 3);
    long maximal = 0;
    std::set<PreferenceFunction> image;
    for_each_le_diagram(b3, b3->full(), [&](const Diagram& d) {
        ++maximal;
        if (!d.is_plus(0)) return;
        auto f = max_B_le_to_preference(d);
        image.insert(f);
        CHECK(preference_to_max_B_le(f) == d);
    });
    CHECK(maximal == 26);
    CHECK(image.size() == 13);
}

TEST_CASE("phi3_B maps the maximal diagrams with bottom + onto J_n") {
    for (int n = 1; n <= 5; ++n) {
        auto p = build_poset(Type::B, n, n);
        long members = 0;
        for_each_le_diagram(p, p->full(), [&](const Diagram& d) {
            if (!d.is_plus(0)) return;
            ++members;
            CHECK(is_in_J(SignedPermutation{phi3_B(d).perm}));
        });
        CHECK(members == static_cast<long>(preference_functions(n).size()));
    }
}

TEST_CASE("text forms") {
    CHECK(parse_preference("4,6,3,1,7,5,7,2,1") == kExample);
    CHECK(parse_preference("4 6 3 1 7 5 7 2 1") == kExample);
    CHECK(preference_to_string(kExample) == "4,6,3,1,7,5,7,2,1");
    CHECK_THROWS_AS(parse_preference("1,x"), DomainError);
    CHECK_THROWS_AS(parse_preference("1,3"), DomainError);
}
