#pragma once

#include <map>
#include <vector>

#include "ospq/laurent.hpp"
#include "ospq/weyl.hpp"

namespace ospq {

/// Per-(n,k) bundle of exact modular data at q = zeta_N, N = 2(2k+1).
/// All cyclotomic values live in Q(zeta_{4N}) with q = zeta_{4N}^4.
struct ModularTables {
    int n = 0;
    int k = 0;
    long N = 0;
    RootData root_data;
    std::vector<WeylElement> weyl;

    std::vector<Weight> index_set;     // Lambda_N^+ (open alcove), sorted
    std::vector<Weight> boundary_set;  // closed minus open alcove

    std::map<Weight, CycloNumber> sdim;
    std::map<Weight, CycloNumber> twist;  // q^{(lambda, lambda+2rho)}, the v^{-1} eigenvalue
    std::map<std::pair<Weight, Weight>, CycloNumber> hopf;

    CycloNumber c;
    std::map<Weight, CycloNumber> d;
    CycloNumber zeta;
    CycloNumber z;

    long order() const { return 4 * N; }
    bool in_index_set(const Weight& w) const { return sdim.count(w) && d.count(w); }
};

/// S_{lambda,mu}: the alternating Weyl sum as a Laurent polynomial in
/// u = q^{1/2}, including the (-1)^{[lambda]} prefactor.  Pass
/// with_prefactor = false for the unsigned variant S'.
LaurentPoly generic_S(const Weight& lambda, const Weight& mu, const RootData& rd,
                      const std::vector<WeylElement>& weyl, bool with_prefactor = true);

/// Q_mu: the alternating sum with lambda = 0.
LaurentPoly generic_Q(const Weight& mu, const RootData& rd,
                      const std::vector<WeylElement>& weyl);

/// Quantum superdimension at the root of unity: exact Laurent division of
/// S_{lambda,0} by Q_0 followed by specialization u -> zeta_{4N}^2.
CycloNumber superdim(const Weight& lambda, const RootData& rd,
                     const std::vector<WeylElement>& weyl, long N);

/// Hopf-link eigenvalue chi_mu(C_lambda) = S_{lambda,mu}/Q_mu specialized
/// at the root of unity.
CycloNumber hopf_eigen(const Weight& lambda, const Weight& mu, const RootData& rd,
                       const std::vector<WeylElement>& weyl, long N);

/// q^{(lambda, lambda+2rho)}; the eigenvalue of v^{-1} on V_lambda.
CycloNumber twist_eigen(const Weight& lambda, const RootData& rd, long N);

/// c with c^{-1} = sum over the lattice box {0..N-1}^n of q^{(mu,mu+2rho)}.
CycloNumber coeff_c(int n, long N);

/// d_lambda = (-1)^{[lambda]} * 2^n * c * sum_sigma eps'(sigma) *
/// q^{-(sigma(lambda+rho)-rho, 2rho)}.
CycloNumber d_coeff(const Weight& lambda, const RootData& rd,
                    const std::vector<WeylElement>& weyl, const CycloNumber& c, long N);

struct CheckResult {
    bool pass = true;
    std::string witness;  // description of the first failure
};

/// Builds and validates the full table bundle.  Throws ValidationFailure
/// naming the first violated identity.  max_cells bounds |W|*|closed alcove|^2.
ModularTables build_tables(int n, int k, long long max_cells = 10'000'000);

/// chi_mu(v) = sum_lambda d_lambda chi_lambda(v^{-1}) chi_mu(C_lambda),
/// exactly; on failure the witness carries both field elements.
CheckResult verify_condition_iv(const ModularTables& t, const Weight& mu);

/// S'_{lambda,mu} = 0 at the root of unity for every boundary lambda and
/// every mu in the index set.
CheckResult verify_boundary_vanishing(const ModularTables& t);

}  // namespace ospq
