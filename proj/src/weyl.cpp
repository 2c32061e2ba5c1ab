#include "ospq/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ospq {

Weight Weight::from_int_coords(const std::vector<int>& coords) {
    std::vector<int> d(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) d[i] = 2 * coords[i];
    return Weight(std::move(d));
}

bool Weight::is_integer() const {
    for (int v : doubled)
        if (v % 2 != 0) return false;
    return true;
}

std::vector<int> Weight::int_coords() const {
    if (!is_integer()) throw std::invalid_argument("weight has non-integer coordinates");
    std::vector<int> c(doubled.size());
    for (size_t i = 0; i < doubled.size(); ++i) c[i] = doubled[i] / 2;
    return c;
}

static void check_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
}

Weight Weight::operator+(const Weight& b) const {
    check_rank(*this, b);
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.doubled[i] += b.doubled[i];
    return r;
}

Weight Weight::operator-(const Weight& b) const {
    check_rank(*this, b);
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.doubled[i] -= b.doubled[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& v : r.doubled) v = -v;
    return r;
}

long long bilinear4(const Weight& a, const Weight& b) {
    check_rank(a, b);
    long long acc = 0;
    for (int i = 0; i < a.rank(); ++i)
        acc += static_cast<long long>(a.doubled[i]) * b.doubled[i];
    return acc;
}

Rational bilinear(const Weight& a, const Weight& b) {
    Rational r(Integer(static_cast<long>(bilinear4(a, b))), Integer(4));
    r.canonicalize();
    return r;
}

WeylElement WeylElement::identity(int n) {
    WeylElement e;
    e.pre.resize(n);
    std::iota(e.pre.begin(), e.pre.end(), 0);
    e.signs.assign(n, 1);
    return e;
}

Weight WeylElement::act(const Weight& w) const {
    if (w.rank() != static_cast<int>(pre.size()))
        throw std::invalid_argument("weyl element / weight rank mismatch");
    Weight r = w;
    for (size_t i = 0; i < pre.size(); ++i) r.doubled[i] = signs[i] * w.doubled[pre[i]];
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& b) const {
    // (a*b)(w)_i = signs[i] * (b(w))_{pre[i]} = signs[i]*b.signs[pre[i]] * w_{b.pre[pre[i]]}
    WeylElement r;
    size_t n = pre.size();
    r.pre.resize(n);
    r.signs.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.pre[i] = b.pre[pre[i]];
        r.signs[i] = signs[i] * b.signs[pre[i]];
    }
    return r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    size_t n = pre.size();
    r.pre.resize(n);
    r.signs.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.pre[pre[i]] = static_cast<int>(i);
        r.signs[pre[i]] = signs[i];
    }
    return r;
}

int eps_prime(const WeylElement& s) {
    int sign = 1;
    for (size_t i = 0; i < s.pre.size(); ++i)
        for (size_t j = i + 1; j < s.pre.size(); ++j)
            if (s.pre[i] > s.pre[j]) sign = -sign;
    return sign;
}

std::vector<WeylElement> enumerate_weyl(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (n > 6) throw std::invalid_argument("rank too large for Weyl enumeration (n <= 6)");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElement> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            WeylElement e;
            e.pre = perm;
            e.signs.resize(n);
            for (int i = 0; i < n; ++i) e.signs[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(std::move(e));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RootData build_root_data(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    RootData rd;
    rd.n = n;
    auto eps = [n](int i) {  // 0-based
        std::vector<int> d(n, 0);
        d[i] = 2;
        return Weight(std::move(d));
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rd.even_pos.push_back(eps(i) + eps(j));
            rd.even_pos.push_back(eps(i) - eps(j));
            rd.phi0.push_back(eps(i) + eps(j));
            rd.phi0.push_back(eps(i) - eps(j));
        }
    }
    for (int k = 0; k < n; ++k) {
        std::vector<int> d(n, 0);
        d[k] = 4;  // 2*eps_k
        rd.even_pos.push_back(Weight(std::move(d)));
        rd.odd_pos.push_back(eps(k));
        rd.phi1.push_back(eps(k));
    }
    std::vector<int> rho_d(n);
    for (int i = 0; i < n; ++i) rho_d[i] = 2 * (n - i) - 1;  // 2*(n - i - 1/2) with 1-based i
    rd.rho = Weight(std::move(rho_d));
    return rd;
}

std::vector<Weight> enumerate_domain(int n, long N, bool strict) {
    if (N < 6 || N % 4 != 2)
        throw std::invalid_argument("level must satisfy N = 2(2k+1), k >= 1");
    RootData rd = build_root_data(n);
    std::vector<Weight> roots = rd.phi0;
    roots.insert(roots.end(), rd.phi1.begin(), rd.phi1.end());
    long Nprime = N / 2;

    std::vector<Weight> out;
    std::vector<int> coords(n, 0);
    // every coordinate is confined to [0, N'] by the alpha = eps_i condition
    while (true) {
        Weight lambda = Weight::from_int_coords(coords);
        Weight shifted = lambda + rd.rho;
        bool ok = true;
        for (const Weight& alpha : roots) {
            // r = 2(lambda+rho, alpha)/(alpha,alpha); with doubled coords
            // this is 2 * bilinear4(shifted, alpha) / bilinear4(alpha, alpha).
            long long num = 2 * bilinear4(shifted, alpha);
            long long den = bilinear4(alpha, alpha);
            // compare num/den against [0, N'] without division
            long long lo = 0, hi = Nprime * den;
            if (strict ? (num <= lo || num >= hi) : (num < lo || num > hi)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(lambda));
        int i = 0;
        while (i < n && coords[i] == Nprime) coords[i++] = 0;
        if (i == n) break;
        ++coords[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Weight dual_weight(const Weight& lambda) { return lambda; }

int parity(const Weight& lambda) {
    long long s = 0;
    for (int c : lambda.int_coords()) s += c;
    return static_cast<int>(((s % 2) + 2) % 2);
}

std::vector<Weight> enumerate_lattice_box(int n, long M) {
    if (M < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<Weight> out;
    std::vector<int> coords(n, 0);
    while (true) {
        out.push_back(Weight::from_int_coords(coords));
        int i = 0;
        while (i < n && coords[i] == M - 1) coords[i++] = 0;
        if (i == n) break;
        ++coords[i];
    }
    return out;
}

}  // namespace ospq
