#pragma once

#include <map>

#include "ospq/cyclotomic.hpp"

namespace ospq {

/// Integer-coefficient Laurent polynomial in one variable u (semantically
/// u = q^{1/2}).  Zero coefficients are never stored; the zero polynomial
/// has an empty map.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long long exponent, Integer coeff);

    const std::map<long long, Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(long long exponent, const Integer& coeff);

    LaurentPoly operator+(const LaurentPoly& b) const;
    LaurentPoly operator-(const LaurentPoly& b) const;
    LaurentPoly operator*(const LaurentPoly& b) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }

    bool operator==(const LaurentPoly& b) const { return coeffs_ == b.coeffs_; }
    bool operator!=(const LaurentPoly& b) const { return !(*this == b); }

    long long min_exponent() const;  // requires nonzero
    long long max_exponent() const;  // requires nonzero

    /// Substitutes u -> zeta_M^{step}, exactly.
    CycloNumber specialize(long M, long long step) const;

  private:
    std::map<long long, Integer> coeffs_;
};

/// The unique Laurent quotient when den divides num exactly; throws
/// NonExactDivision otherwise.  Implemented as shift to ordinary
/// polynomials, long division over Q, shift back, integrality check.
LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace ospq
