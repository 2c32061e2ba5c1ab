#include "ospq/invariant.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "ospq/errors.hpp"

namespace ospq {

CycloNumber colored_value(const PlumbingGraph& g, const Coloring& c, const ModularTables& t) {
    g.validate();
    long M = t.order();
    CycloNumber acc = CycloNumber::one(M);
    for (const auto& [id, framing] : g.vertices) {
        auto it = c.assignment.find(id);
        if (it == c.assignment.end())
            throw std::invalid_argument("coloring misses vertex " + std::to_string(id));
        const Weight& lam = it->second;
        if (!t.in_index_set(lam))
            throw std::invalid_argument("color outside index set at vertex " + std::to_string(id));
        acc *= t.twist.at(lam).pow(framing);
        acc *= t.sdim.at(lam).pow(1 - g.degree(id));
    }
    for (const auto& [a, b] : g.edges) {
        const Weight& la = c.assignment.at(a);
        const Weight& lb = c.assignment.at(b);
        acc *= t.hopf.at({la, lb}) * t.sdim.at(lb);
    }
    return acc;
}

namespace {

struct VertexData {
    int id;
    std::vector<CycloNumber> factor;  // per color: d * twist^a * sdim^{1-deg}
};

// sum of the coloring products over a contiguous range of mixed-radix indices
CycloNumber sum_range(const std::vector<VertexData>& verts,
                      const std::vector<std::pair<size_t, size_t>>& edge_idx,
                      const std::vector<std::vector<CycloNumber>>& edge_factor,
                      size_t radix, long M, long long begin, long long end) {
    size_t nv = verts.size();
    std::vector<size_t> digits(nv, 0);
    long long rem = begin;
    for (size_t i = 0; i < nv; ++i) {
        digits[i] = static_cast<size_t>(rem % radix);
        rem /= radix;
    }
    CycloNumber acc = CycloNumber::zero(M);
    for (long long idx = begin; idx < end; ++idx) {
        CycloNumber term = CycloNumber::one(M);
        for (size_t i = 0; i < nv; ++i) term *= verts[i].factor[digits[i]];
        for (size_t e = 0; e < edge_idx.size(); ++e)
            term *= edge_factor[e][digits[edge_idx[e].first] * radix + digits[edge_idx[e].second]];
        acc += term;
        size_t i = 0;
        while (i < nv && digits[i] == radix - 1) digits[i++] = 0;
        if (i < nv) ++digits[i];
    }
    return acc;
}

}  // namespace

CycloNumber rt_invariant(const PlumbingGraph& g, const ModularTables& t,
                         long long max_colorings, int workers) {
    g.validate();
    long M = t.order();
    int sigma = inertia(linking_matrix(g)).sigma();
    if (g.vertices.empty()) return CycloNumber::one(M);

    size_t radix = t.index_set.size();
    long long total = 1;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (total > max_colorings / static_cast<long long>(radix) + 1)
            throw BudgetExceeded("coloring budget exceeded");
        total *= static_cast<long long>(radix);
    }
    if (total > max_colorings) throw BudgetExceeded("coloring budget exceeded");

    std::vector<VertexData> verts;
    std::map<int, size_t> pos;
    for (const auto& [id, framing] : g.vertices) {
        VertexData vd;
        vd.id = id;
        int deg = g.degree(id);
        vd.factor.reserve(radix);
        for (const Weight& lam : t.index_set)
            vd.factor.push_back(t.d.at(lam) * t.twist.at(lam).pow(framing) *
                                t.sdim.at(lam).pow(1 - deg));
        pos[id] = verts.size();
        verts.push_back(std::move(vd));
    }
    std::vector<std::pair<size_t, size_t>> edge_idx;
    for (const auto& [a, b] : g.edges) edge_idx.emplace_back(pos.at(a), pos.at(b));
    // flat color-pair table per edge: hopf(c_a, c_b) * sdim[c_b]
    std::vector<std::vector<CycloNumber>> edge_factor(edge_idx.size());
    for (size_t e = 0; e < edge_idx.size(); ++e) {
        edge_factor[e].reserve(radix * radix);
        for (const Weight& la : t.index_set)
            for (const Weight& lb : t.index_set)
                edge_factor[e].push_back(t.hopf.at({la, lb}) * t.sdim.at(lb));
    }

    CycloNumber sum = CycloNumber::zero(M);
    if (workers <= 1 || total < 64) {
        sum = sum_range(verts, edge_idx, edge_factor, radix, M, 0, total);
    } else {
        int nthreads = std::min<long long>(workers, total);
        std::vector<CycloNumber> partial(nthreads, CycloNumber::zero(M));
        std::vector<std::thread> pool;
        long long chunk = (total + nthreads - 1) / nthreads;
        for (int w = 0; w < nthreads; ++w) {
            long long lo = w * chunk;
            long long hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                partial[w] = sum_range(verts, edge_idx, edge_factor, radix, M, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) sum += p;
    }
    return t.z.pow(-sigma) * sum;
}

InvariantReport invariant_report(const PlumbingGraph& g, const ModularTables& t,
                                 long long max_colorings, int workers) {
    auto start = std::chrono::steady_clock::now();
    InvariantReport r;
    r.sigma = inertia(linking_matrix(g)).sigma();
    r.coloring_count = 1;
    for (size_t i = 0; i < g.vertices.size(); ++i)
        r.coloring_count *= static_cast<long long>(t.index_set.size());
    r.value = rt_invariant(g, t, max_colorings, workers);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace ospq
