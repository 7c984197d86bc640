#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lecell {

enum class Type { A, B, D, E6, E7 };

std::string type_name(Type t);
Type parse_type(const std::string& s);

constexpr int kMaxRank = 12;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root data. Roots are stored in simple-root coordinates; the orthonormal
// realization is kept for reference and for deriving the Cartan matrix.
struct RootSystemData {
    Type type;
    int rank;
    int dim;
    std::vector<std::vector<int>> simple_coords;
    std::vector<std::vector<int>> cartan;  // cartan[k][i] = <alpha_k, alpha_i^vee>
    std::vector<std::vector<int>> positive_roots;

    static const RootSystemData& get(Type type, int rank);
};

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(const RootSystemData& rs);

    static WeylElement identity(const RootSystemData& rs) { return WeylElement(rs); }

    const RootSystemData& root_system() const { return *rs_; }
    int rank() const { return rs_->rank; }

    // coefficient of alpha_m in w(alpha_k)
    int image(int k, int m) const { return img_[k * kMaxRank + m]; }

    std::vector<int> apply(const std::vector<int>& beta) const;

    void right_multiply_simple(int i);
    void left_multiply_simple(int i);

    bool is_right_descent(int i) const;
    bool is_left_descent(int i) const;
    int length() const;

    WeylElement inverse() const;
    std::vector<int> reduced_word() const;

    bool operator==(const WeylElement& o) const { return rs_ == o.rs_ && img_ == o.img_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    std::size_t hash() const;

private:
    friend WeylElement multiply(const WeylElement& u, const WeylElement& v);
    const RootSystemData* rs_ = nullptr;
    std::array<int8_t, kMaxRank * kMaxRank> img_{};
};

struct WeylHash {
    std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

// Generator indices are 1-based throughout the public API.
WeylElement simple_reflection(const RootSystemData& rs, int i);
WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement from_word(const RootSystemData& rs, const std::vector<int>& word);
bool is_right_descent(const WeylElement& w, int i);
bool is_reduced(const RootSystemData& rs, const std::vector<int>& word);

// x <= w where w is given by a reduced word. Throws DomainError on a
// non-reduced word.
bool bruhat_leq(const WeylElement& x, const std::vector<int>& w_word);
bool bruhat_leq(const WeylElement& x, const WeylElement& w);

// All group elements, breadth first from the identity.
std::vector<WeylElement> enumerate_group(const RootSystemData& rs);
// Parabolic subgroup generated by all simple reflections except j.
std::vector<WeylElement> parabolic_subgroup(const RootSystemData& rs, int j);

// Signed permutation as a window (a_1..a_n); pi(-i) = -pi(i).
struct SignedPermutation {
    std::vector<int> window;

    int size() const { return static_cast<int>(window.size()); }
    int operator()(int i) const { return i > 0 ? window[i - 1] : -window[-i - 1]; }
    bool operator==(const SignedPermutation& o) const { return window == o.window; }
    SignedPermutation compose(const SignedPermutation& rhs) const;  // (this o rhs)
    SignedPermutation inverse() const;
    int negatives() const;
    static SignedPermutation identity(int n);
};

SignedPermutation iota_embed(const WeylElement& w);
SignedPermutation delta_embed(const WeylElement& w);
WeylElement iota_preimage(const RootSystemData& rs, const SignedPermutation& p);

// Type A_{n}: one-line notation w(1..n+1) with s_i = (i, i+1).
std::vector<int> to_permutation(const WeylElement& w);
WeylElement from_permutation(const RootSystemData& rs, const std::vector<int>& perm);

}  // namespace lecell
