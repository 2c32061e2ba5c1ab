#include "ospq/laurent.hpp"

#include <vector>

#include "ospq/errors.hpp"

namespace ospq {

LaurentPoly LaurentPoly::monomial(long long exponent, Integer coeff) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
    return p;
}

void LaurentPoly::add_term(long long exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& b) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& b) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& b) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

long long LaurentPoly::min_exponent() const { return coeffs_.begin()->first; }
long long LaurentPoly::max_exponent() const { return coeffs_.rbegin()->first; }

CycloNumber LaurentPoly::specialize(long M, long long step) const {
    CycloNumber acc = CycloNumber::zero(M);
    for (const auto& [e, c] : coeffs_) {
        Rational rc(c);
        acc += CycloNumber::from_rational(M, rc) * CycloNumber::root_power(M, step * e);
    }
    return acc;
}

LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw NonExactDivision("laurent_exact_div: zero divisor");
    if (num.is_zero()) return LaurentPoly::zero();

    // shift both to ordinary polynomials
    long long ns = num.min_exponent();
    long long ds = den.min_exponent();
    std::vector<Rational> n(static_cast<size_t>(num.max_exponent() - ns) + 1, Rational(0));
    std::vector<Rational> d(static_cast<size_t>(den.max_exponent() - ds) + 1, Rational(0));
    for (const auto& [e, c] : num.coeffs()) n[static_cast<size_t>(e - ns)] = Rational(c);
    for (const auto& [e, c] : den.coeffs()) d[static_cast<size_t>(e - ds)] = Rational(c);

    if (n.size() < d.size()) throw NonExactDivision("laurent_exact_div: degree of divisor exceeds dividend");
    std::vector<Rational> quot(n.size() - d.size() + 1, Rational(0));
    for (size_t qi = quot.size(); qi-- > 0;) {
        Rational c = n[qi + d.size() - 1] / d.back();
        if (c == 0) continue;
        quot[qi] = c;
        for (size_t j = 0; j < d.size(); ++j) n[qi + j] -= c * d[j];
    }
    for (const auto& c : n)
        if (c != 0) throw NonExactDivision("laurent_exact_div: nonzero remainder");

    LaurentPoly out;
    long long qs = ns - ds;
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        if (quot[i].get_den() != 1)
            throw NonExactDivision("laurent_exact_div: non-integer quotient coefficient");
        out.add_term(qs + static_cast<long long>(i), quot[i].get_num());
    }
    return out;
}

}  // namespace ospq
