#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ospq/cyclotomic.hpp"

namespace ospq {

/// A weight in the epsilon-basis, stored as doubled coordinates so that
/// half-integer vectors like rho are exact integers.
struct Weight {
    std::vector<int> doubled;  // entry i holds 2 * (coefficient of eps_{i+1})

    Weight() = default;
    explicit Weight(std::vector<int> d) : doubled(std::move(d)) {}

    /// Weight with integer coordinates.
    static Weight from_int_coords(const std::vector<int>& coords);
    static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }

    int rank() const { return static_cast<int>(doubled.size()); }
    bool is_integer() const;
    /// Integer coordinates; requires is_integer().
    std::vector<int> int_coords() const;

    Weight operator+(const Weight& b) const;
    Weight operator-(const Weight& b) const;
    Weight operator-() const;

    auto operator<=>(const Weight& b) const = default;
};

/// Exact bilinear form with (eps_i, eps_j) = delta_{ij}.
Rational bilinear(const Weight& a, const Weight& b);

/// (a, b) scaled by 4, i.e. the dot product of doubled coordinates.
/// Always an integer; useful for exponent bookkeeping.
long long bilinear4(const Weight& a, const Weight& b);

/// A signed permutation: (sigma w)_i = signs[i] * w[pre[i]], where pre[i]
/// is the index sent to slot i.
struct WeylElement {
    std::vector<int> pre;    // pre[i] = source index of slot i (0-based)
    std::vector<int> signs;  // entries in {+1, -1}

    static WeylElement identity(int n);
    WeylElement operator*(const WeylElement& b) const;  // (a*b)(w) = a(b(w))
    WeylElement inverse() const;
    Weight act(const Weight& w) const;

    bool operator==(const WeylElement& b) const = default;
};

/// Sign of the underlying permutation; a group homomorphism.  Sign flips
/// contribute +1: only reflections in the roots eps_i - eps_j and
/// eps_i + eps_j count.
int eps_prime(const WeylElement& s);

/// All 2^n * n! signed permutations; guarded at n <= 6.
std::vector<WeylElement> enumerate_weyl(int n);

/// Positive roots and rho for osp(1|2n).
struct RootData {
    int n = 0;
    std::vector<Weight> even_pos;  // eps_i +- eps_j (i<j) and 2 eps_k
    std::vector<Weight> odd_pos;   // eps_k
    std::vector<Weight> phi0;      // eps_i +- eps_j (i<j) only
    std::vector<Weight> phi1;      // = odd_pos
    Weight rho;                    // rho_i = n - i + 1/2
};

RootData build_root_data(int n);

/// The truncated dominant alcove: all lambda in the Z_+-span of the eps_i
/// with 0 < 2(lambda+rho, alpha)/(alpha,alpha) < N/2 for all alpha in
/// phi0 union phi1 (strict), or with both inequalities relaxed to <=
/// (closed variant).  Requires N = 2(2k+1), k >= 1.
std::vector<Weight> enumerate_domain(int n, long N, bool strict);

/// -w0(lambda) for the longest element w0 = -id; the identity map here.
Weight dual_weight(const Weight& lambda);

/// (sum of coordinates) mod 2 for an integer weight.
int parity(const Weight& lambda);

/// All M^n integer weights with coordinates in [0, M).
std::vector<Weight> enumerate_lattice_box(int n, long M);

}  // namespace ospq
