#include "ospq/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "ospq/errors.hpp"

namespace ospq {

namespace {

// ---- dense integer polynomial helpers (low degree first, trimmed) ----

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

// Exact division of integer polynomials; divisor must be monic here
// (cyclotomic polynomials are), so no fractions appear.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("zdiv_exact: divisor must be monic");
    ztrim(num);
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::logic_error("zdiv_exact: nonzero remainder");
    ZPoly quot(num.size() - den.size() + 1, Integer(0));
    for (size_t qi = quot.size(); qi-- > 0;) {
        Integer c = num[qi + den.size() - 1];
        if (c == 0) continue;
        quot[qi] = c;
        for (size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return quot;
}

// ---- rational polynomial helpers for the field context ----

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// r <- r mod d, d monic-normalizable; returns nothing, r shrinks in place.
void qmod(QPoly& r, const QPoly& d) {
    qtrim(r);
    while (r.size() >= d.size() && !r.empty()) {
        Rational c = r.back() / d.back();
        size_t off = r.size() - d.size();
        for (size_t j = 0; j < d.size(); ++j) r[off + j] -= c * d[j];
        qtrim(r);
    }
}

struct FieldContext {
    long M = 0;
    long degree = 0;
    QPoly phi;  // Phi_M over Q, monic
    // power_table[j] = zeta^j reduced into the power basis, for 0 <= j < max(M, 2*degree-1)
    std::vector<QPoly> power_table;
};

const FieldContext& field_context(long M) {
    static std::map<long, FieldContext> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    FieldContext ctx;
    ctx.M = M;
    const ZPoly& phi_z = [&]() -> const ZPoly& {
        static std::map<long, ZPoly> phis;
        // compute Phi_M recursively: (x^M - 1) / prod_{d | M, d < M} Phi_d
        std::function<const ZPoly&(long)> get = [&](long m) -> const ZPoly& {
            auto pit = phis.find(m);
            if (pit != phis.end()) return pit->second;
            ZPoly num(m + 1, Integer(0));
            num[0] = -1;
            num[m] = 1;
            ZPoly den{Integer(1)};
            for (long d = 1; d < m; ++d)
                if (m % d == 0) den = zmul(den, get(d));
            return phis.emplace(m, zdiv_exact(std::move(num), den)).first->second;
        };
        return get(M);
    }();
    ctx.degree = static_cast<long>(phi_z.size()) - 1;
    ctx.phi.reserve(phi_z.size());
    for (const auto& c : phi_z) ctx.phi.emplace_back(c);

    long table_size = std::max<long>(M, 2 * ctx.degree - 1);
    ctx.power_table.resize(table_size);
    for (long j = 0; j < std::min<long>(ctx.degree, table_size); ++j) {
        QPoly e(ctx.degree, Rational(0));
        e[j] = 1;
        ctx.power_table[j] = std::move(e);
    }
    for (long j = ctx.degree; j < table_size; ++j) {
        // zeta^j = zeta * zeta^{j-1}
        const QPoly& prev = ctx.power_table[j - 1];
        QPoly cur(ctx.degree + 1, Rational(0));
        for (long i = 0; i < ctx.degree; ++i) cur[i + 1] = prev[i];
        // reduce the single overflow term via zeta^degree = -(phi minus leading)
        if (cur[ctx.degree] != 0) {
            Rational c = cur[ctx.degree];
            cur.pop_back();
            for (long i = 0; i < ctx.degree; ++i) cur[i] -= c * ctx.phi[i];
        } else {
            cur.pop_back();
        }
        ctx.power_table[j] = std::move(cur);
    }
    return cache.emplace(M, std::move(ctx)).first->second;
}

long long pos_mod(long long e, long long m) {
    long long r = e % m;
    return r < 0 ? r + m : r;
}

}  // namespace

long cyclo_degree(long M) { return field_context(M).degree; }

const std::vector<Integer>& cyclotomic_polynomial(long M) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    const auto& ctx = field_context(M);
    std::vector<Integer> out;
    out.reserve(ctx.phi.size());
    for (const auto& c : ctx.phi) out.push_back(c.get_num());
    return cache.emplace(M, std::move(out)).first->second;
}

CycloNumber CycloNumber::zero(long order) {
    const auto& ctx = field_context(order);
    return CycloNumber(order, std::vector<Rational>(ctx.degree, Rational(0)));
}

CycloNumber CycloNumber::one(long order) { return from_rational(order, Rational(1)); }

CycloNumber CycloNumber::from_rational(long order, const Rational& r) {
    CycloNumber c = zero(order);
    c.coeffs_[0] = r;
    c.coeffs_[0].canonicalize();
    return c;
}

CycloNumber CycloNumber::root_power(long order, long long e) {
    if (order < 1) throw std::invalid_argument("cyclo order must be >= 1");
    const auto& ctx = field_context(order);
    long long j = pos_mod(e, order);
    CycloNumber c = zero(order);
    const QPoly& row = ctx.power_table[j];
    for (size_t i = 0; i < row.size(); ++i) c.coeffs_[i] = row[i];
    return c;
}

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

static void check_same_order(const CycloNumber& a, const CycloNumber& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

CycloNumber CycloNumber::operator+(const CycloNumber& b) const {
    check_same_order(*this, b);
    CycloNumber r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& b) const {
    check_same_order(*this, b);
    CycloNumber r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& b) const {
    check_same_order(*this, b);
    const auto& ctx = field_context(order_);
    long d = ctx.degree;
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (long i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (b.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * b.coeffs_[j];
        }
    }
    CycloNumber r = zero(order_);
    for (long i = 0; i < d; ++i) r.coeffs_[i] = conv[i];
    for (long j = d; j < 2 * d - 1; ++j) {
        if (conv[j] == 0) continue;
        const QPoly& row = ctx.power_table[j];
        for (size_t i = 0; i < row.size(); ++i) r.coeffs_[i] += conv[j] * row[i];
    }
    return r;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclo inverse of zero");
    const auto& ctx = field_context(order_);
    // extended Euclid: s*a + t*phi = gcd over Q[x]; gcd is a nonzero constant.
    QPoly r0 = ctx.phi;
    QPoly r1(coeffs_.begin(), coeffs_.end());
    qtrim(r1);
    QPoly s0{}, s1{Rational(1)};  // coefficients of `a` in r0, r1
    while (true) {
        qtrim(r1);
        if (r1.empty()) throw std::logic_error("cyclo inverse: zero remainder before unit");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        QPoly r2 = r0;
        qtrim(r2);
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational c = r2.back() / r1.back();
            size_t off = r2.size() - r1.size();
            q[off] = c;
            for (size_t j = 0; j < r1.size(); ++j) r2[off + j] -= c * r1[j];
            qtrim(r2);
        }
        // s2 = s0 - q*s1
        QPoly qs = [&] {
            if (q.empty() || s1.empty()) return QPoly{};
            QPoly out(q.size() + s1.size() - 1, Rational(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) out[i + j] += q[i] * s1[j];
            return out;
        }();
        QPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qtrim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational unit = r1[0];
    QPoly s = std::move(s1);
    for (auto& c : s) c /= unit;
    qmod(s, ctx.phi);
    CycloNumber out = zero(order_);
    for (size_t i = 0; i < s.size(); ++i) out.coeffs_[i] = s[i];
    return out;
}

CycloNumber CycloNumber::pow(long long e) const {
    if (e == 0) return one(order_);
    CycloNumber base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    CycloNumber acc = one(order_);
    while (n) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::complex<double> CycloNumber::embed() const {
    double angle = 2.0 * std::numbers::pi / static_cast<double>(order_);
    std::complex<double> zeta(std::cos(angle), std::sin(angle));
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * zeta + coeffs_[i].get_d();
    return acc;
}

CycloNumber gauss_sum(long N, long long m) {
    if (N < 1) throw std::invalid_argument("gauss_sum: N must be >= 1");
    long M = 4 * N;
    CycloNumber acc = CycloNumber::zero(M);
    for (long long i = 0; i < N; ++i)
        acc += CycloNumber::root_power(M, 4 * (i * (i + m)));
    return acc;
}

CycloNumber cyclo_sqrt(long M, long d) {
    if (d == 1) return CycloNumber::one(M);
    if (d == 2) {
        if (M % 8 != 0) throw std::invalid_argument("cyclo_sqrt: sqrt(2) needs 8 | M");
        long s = M / 8;
        return CycloNumber::root_power(M, s) + CycloNumber::root_power(M, M - s);
    }
    if (d % 2 == 0) return cyclo_sqrt(M, 2) * cyclo_sqrt(M, d / 2);
    if (M % d != 0) throw std::invalid_argument("cyclo_sqrt: odd d must divide M");
    // quadratic Gauss sum g = sum_{a=0}^{d-1} zeta_d^{a^2}; g = sqrt(d) when
    // d = 1 (mod 4) and g = i*sqrt(d) when d = 3 (mod 4).
    long step = M / d;
    CycloNumber g = CycloNumber::zero(M);
    for (long a = 0; a < d; ++a)
        g += CycloNumber::root_power(M, step * ((static_cast<long long>(a) * a) % d));
    if (d % 4 == 1) return g;
    if (M % 4 != 0) throw std::invalid_argument("cyclo_sqrt: d = 3 (mod 4) needs 4 | M");
    CycloNumber minus_i = CycloNumber::root_power(M, 3L * (M / 4));
    return minus_i * g;
}

CycloNumber gauss_sum_closed_form(long N, long long m) {
    if (N % 4 != 2) throw std::invalid_argument("gauss_sum_closed_form: N must be 2 (mod 4)");
    long M = 4 * N;
    CycloNumber one_plus_i = CycloNumber::one(M) + CycloNumber::root_power(M, N);
    CycloNumber sqrtN = cyclo_sqrt(M, N);
    CycloNumber x_pow = CycloNumber::root_power(M, -(m * m));
    return one_plus_i * sqrtN * x_pow;
}

}  // namespace ospq
