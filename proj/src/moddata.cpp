#include "ospq/moddata.hpp"

#include <algorithm>
#include <sstream>

#include "ospq/errors.hpp"

namespace ospq {

LaurentPoly generic_S(const Weight& lambda, const Weight& mu, const RootData& rd,
                      const std::vector<WeylElement>& weyl, bool with_prefactor) {
    // u-exponent of q^{2(lambda+rho, sigma(mu+rho))} is 4(lambda+rho, sigma(mu+rho)),
    // which is the dot product of the doubled coordinate vectors.
    Weight a = lambda + rd.rho;
    Weight b = mu + rd.rho;
    int prefactor = with_prefactor && parity(lambda) == 1 ? -1 : 1;
    LaurentPoly out;
    for (const WeylElement& s : weyl) {
        long long e = bilinear4(a, s.act(b));
        out.add_term(e, Integer(prefactor * eps_prime(s)));
    }
    return out;
}

LaurentPoly generic_Q(const Weight& mu, const RootData& rd,
                      const std::vector<WeylElement>& weyl) {
    return generic_S(Weight::zero(rd.n), mu, rd, weyl, false);
}

CycloNumber superdim(const Weight& lambda, const RootData& rd,
                     const std::vector<WeylElement>& weyl, long N) {
    return hopf_eigen(lambda, Weight::zero(rd.n), rd, weyl, N);
}

CycloNumber hopf_eigen(const Weight& lambda, const Weight& mu, const RootData& rd,
                       const std::vector<WeylElement>& weyl, long N) {
    LaurentPoly S = generic_S(lambda, mu, rd, weyl);
    LaurentPoly Q = generic_Q(mu, rd, weyl);
    return laurent_exact_div(S, Q).specialize(4 * N, 2);
}

CycloNumber twist_eigen(const Weight& lambda, const RootData& rd, long N) {
    // (lambda, lambda + 2rho) is an integer for integer lambda
    Weight two_rho = rd.rho + rd.rho;
    long long e4 = bilinear4(lambda, lambda + two_rho);
    if (e4 % 4 != 0) throw std::logic_error("twist exponent not an integer");
    return CycloNumber::root_power(4 * N, e4);  // q^{e4/4} = zeta_{4N}^{e4}
}

CycloNumber coeff_c(int n, long N) {
    if (N % 4 != 2) throw std::invalid_argument("coeff_c: N must be 2 (mod 4)");
    RootData rd = build_root_data(n);
    Weight two_rho = rd.rho + rd.rho;
    long M = 4 * N;
    CycloNumber sum = CycloNumber::zero(M);
    for (const Weight& mu : enumerate_lattice_box(n, N)) {
        long long e4 = bilinear4(mu, mu + two_rho);
        sum += CycloNumber::root_power(M, e4);
    }
    if (sum.is_zero())
        throw DegenerateNormalization("coeff_c: lattice Gauss sum vanishes");
    return sum.inverse();
}

CycloNumber d_coeff(const Weight& lambda, const RootData& rd,
                    const std::vector<WeylElement>& weyl, const CycloNumber& c, long N) {
    long M = 4 * N;
    Weight shifted = lambda + rd.rho;
    Weight two_rho = rd.rho + rd.rho;
    CycloNumber sum = CycloNumber::zero(M);
    for (const WeylElement& s : weyl) {
        Weight nu = s.act(shifted) - rd.rho;  // integer weight
        long long e4 = bilinear4(nu, two_rho);
        if (e4 % 4 != 0) throw std::logic_error("d_coeff exponent not an integer");
        CycloNumber term = CycloNumber::root_power(M, -e4);
        if (eps_prime(s) < 0) term = -term;
        sum += term;
    }
    CycloNumber result = CycloNumber::from_rational(M, Rational(Integer(1) << rd.n)) * c * sum;
    return parity(lambda) == 1 ? -result : result;
}

namespace {

std::string describe(const CycloNumber& v) {
    auto z = v.embed();
    std::ostringstream os;
    os << "~(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

std::string describe(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) os << ",";
        os << w.doubled[i] << "/2";
    }
    os << ")";
    return os.str();
}

}  // namespace

ModularTables build_tables(int n, int k, long long max_cells) {
    if (n < 1 || k < 1) throw std::invalid_argument("build_tables: need n >= 1 and k >= 1");
    ModularTables t;
    t.n = n;
    t.k = k;
    t.N = 2L * (2 * k + 1);
    t.root_data = build_root_data(n);
    t.weyl = enumerate_weyl(n);

    t.index_set = enumerate_domain(n, t.N, /*strict=*/true);
    std::vector<Weight> closed = enumerate_domain(n, t.N, /*strict=*/false);
    for (const Weight& w : closed)
        if (!std::binary_search(t.index_set.begin(), t.index_set.end(), w))
            t.boundary_set.push_back(w);

    long long cells = static_cast<long long>(t.weyl.size()) * closed.size() * closed.size();
    if (cells > max_cells)
        throw BudgetExceeded("table cell budget exceeded: |W|*|closed alcove|^2 = " +
                             std::to_string(cells) + " > " + std::to_string(max_cells));

    long M = 4 * t.N;
    for (const Weight& w : closed) t.sdim[w] = superdim(w, t.root_data, t.weyl, t.N);
    for (const Weight& w : t.index_set) t.twist[w] = twist_eigen(w, t.root_data, t.N);
    for (const Weight& a : t.index_set)
        for (const Weight& b : t.index_set)
            t.hopf[{a, b}] = hopf_eigen(a, b, t.root_data, t.weyl, t.N);

    t.c = coeff_c(n, t.N);
    for (const Weight& w : t.index_set) t.d[w] = d_coeff(w, t.root_data, t.weyl, t.c, t.N);

    t.zeta = CycloNumber::zero(M);
    t.z = CycloNumber::zero(M);
    for (const Weight& w : t.index_set) {
        t.zeta += t.d.at(w) * t.sdim.at(w);
        t.z += t.d.at(w) * t.twist.at(w).inverse() * t.sdim.at(w);
    }

    // validation: the ModularTables invariants plus condition iv
    for (const Weight& w : t.index_set)
        if (t.sdim.at(w).is_zero())
            throw ValidationFailure("sdim[lambda] != 0 on the index set; lambda = " + describe(w));
    for (const Weight& w : t.boundary_set)
        if (!t.sdim.at(w).is_zero())
            throw ValidationFailure("sdim[lambda] = 0 on the boundary; lambda = " + describe(w));
    for (const Weight& w : t.index_set) {
        if (t.d.at(dual_weight(w)) != t.d.at(w))
            throw ValidationFailure("d[dual(lambda)] = d[lambda]; lambda = " + describe(w));
        if (t.d.at(w) != t.d.at(Weight::zero(n)) * t.sdim.at(w))
            throw ValidationFailure("d[lambda] = d[0]*sdim[lambda]; lambda = " + describe(w));
    }
    if (t.z.is_zero()) throw ValidationFailure("z != 0");
    if (t.zeta.is_zero()) throw ValidationFailure("zeta != 0");
    if (t.z != t.d.at(Weight::zero(n)) * t.zeta) throw ValidationFailure("z = d[0]*zeta");
    for (const Weight& mu : t.index_set) {
        CheckResult r = verify_condition_iv(t, mu);
        if (!r.pass)
            throw ValidationFailure("condition iv at mu = " + describe(mu) + ": " + r.witness);
    }
    return t;
}

CheckResult verify_condition_iv(const ModularTables& t, const Weight& mu) {
    long M = t.order();
    CycloNumber lhs = twist_eigen(mu, t.root_data, t.N).inverse();  // chi_mu(v) = q^{-(mu,mu+2rho)}
    CycloNumber rhs = CycloNumber::zero(M);
    for (const Weight& lam : t.index_set)
        rhs += t.d.at(lam) * t.twist.at(lam) * t.hopf.at({lam, mu});
    CheckResult r;
    if (lhs != rhs) {
        r.pass = false;
        r.witness = "chi_mu(v) = " + describe(lhs) + " but sum = " + describe(rhs);
    }
    return r;
}

CheckResult verify_boundary_vanishing(const ModularTables& t) {
    CheckResult r;
    for (const Weight& lam : t.boundary_set) {
        for (const Weight& mu : t.index_set) {
            LaurentPoly Sprime = generic_S(lam, mu, t.root_data, t.weyl, /*with_prefactor=*/false);
            CycloNumber v = Sprime.specialize(t.order(), 2);
            if (!v.is_zero()) {
                r.pass = false;
                r.witness = "S'_{lambda,mu} != 0 at lambda = " + describe(lam) +
                            ", mu = " + describe(mu) + ": " + describe(v);
                return r;
            }
        }
    }
    return r;
}

}  // namespace ospq
