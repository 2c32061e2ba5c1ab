#pragma once

#include <map>

#include "ospq/moddata.hpp"
#include "ospq/surgery.hpp"

namespace ospq {

/// A total assignment of index-set weights to the vertices of a plumbing
/// graph; one summand of the surgery sum.
struct Coloring {
    std::map<int, Weight> assignment;
};

/// The ribbon-functor value of one colored plumbing forest:
///   prod_v twist(c_v)^{a_v} * sdim[c_v]^{1-deg(v)}
/// * prod_{(u,v) in E} hopf(c_u, c_v) * sdim[c_v]   (lower id first).
/// The edge factor is symmetric by the Hopf-symmetry identity, which the
/// test suite verifies rather than assumes.
CycloNumber colored_value(const PlumbingGraph& g, const Coloring& c, const ModularTables& t);

/// F(M_L) = z^{-sigma(A_L)} * sum over colorings of prod_v d[c_v] *
/// colored_value.  The empty graph gives exactly 1.
CycloNumber rt_invariant(const PlumbingGraph& g, const ModularTables& t,
                         long long max_colorings = 10'000'000, int workers = 1);

struct InvariantReport {
    CycloNumber value;
    int sigma = 0;
    long long coloring_count = 0;
    double seconds = 0.0;
};

InvariantReport invariant_report(const PlumbingGraph& g, const ModularTables& t,
                                 long long max_colorings = 10'000'000, int workers = 1);

}  // namespace ospq
