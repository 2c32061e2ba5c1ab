#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

namespace ospq {

using Rational = mpq_class;
using Integer = mpz_class;

/// An exact element of the cyclotomic field Q(zeta_M), stored in the power
/// basis 1, zeta, ..., zeta^{deg(Phi_M)-1} reduced modulo the M-th
/// cyclotomic polynomial.  The representation is canonical: two elements
/// are equal iff their orders and coefficient vectors coincide.
class CycloNumber {
  public:
    CycloNumber() : order_(1), coeffs_(1, Rational(0)) {}

    static CycloNumber zero(long order);
    static CycloNumber one(long order);
    static CycloNumber from_rational(long order, const Rational& r);
    /// zeta_M^{e mod M} in canonical reduced form.
    static CycloNumber root_power(long order, long long e);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant term; meaningful when is_rational().
    Rational rational_part() const { return coeffs_[0]; }

    CycloNumber operator+(const CycloNumber& b) const;
    CycloNumber operator-(const CycloNumber& b) const;
    CycloNumber operator*(const CycloNumber& b) const;
    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& b) { return *this = *this + b; }
    CycloNumber& operator-=(const CycloNumber& b) { return *this = *this - b; }
    CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }

    bool operator==(const CycloNumber& b) const {
        return order_ == b.order_ && coeffs_ == b.coeffs_;
    }
    bool operator!=(const CycloNumber& b) const { return !(*this == b); }

    /// Multiplicative inverse via extended gcd with Phi_M over Q.
    CycloNumber inverse() const;
    /// Integer power, negative exponents go through inverse().
    CycloNumber pow(long long e) const;

    /// Double-precision evaluation at zeta_M = exp(2*pi*i/M).  Reporting
    /// only; never used for equality decisions.
    std::complex<double> embed() const;

  private:
    CycloNumber(long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    long order_;
    std::vector<Rational> coeffs_;  // length deg(Phi_order)
};

/// Coefficients of the M-th cyclotomic polynomial, monic, low degree first.
const std::vector<Integer>& cyclotomic_polynomial(long M);

/// Euler phi, the degree of Phi_M.
long cyclo_degree(long M);

/// G(N,m) = sum_{i=0}^{N-1} q^{i(i+m)} with q = zeta_{4N}^4, exactly.
CycloNumber gauss_sum(long N, long long m);

/// The closed form (1+i)*sqrt(N)/x^{m^2} as an exact element of Q(zeta_{4N}),
/// with i = zeta_{4N}^N, sqrt(N) = sqrt(2)*sqrt(N/2), sqrt(2) = zeta_8 +
/// zeta_8^{-1} and sqrt(N/2) built from the quadratic Gauss sum of the odd
/// modulus N/2 with its known sign.  Requires N == 2 (mod 4).
CycloNumber gauss_sum_closed_form(long N, long long m);

/// sqrt(d) as an element of Q(zeta_M) when it embeds there; supports
/// d = 2 (needs 8 | M) and odd d with d | M via the quadratic Gauss sum,
/// plus multiplicative combinations d = 2 * odd.
CycloNumber cyclo_sqrt(long M, long d);

}  // namespace ospq
