#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ospq {

/// A plumbing graph: integer-framed vertices joined by edges, each edge a
/// clasp with linking number +1.  Evaluation requires the graph to be a
/// forest; cycles are rejected rather than mis-evaluated.
struct PlumbingGraph {
    std::map<int, int> vertices;            // id -> framing
    std::set<std::pair<int, int>> edges;    // normalized (min,max) pairs

    void add_vertex(int id, int framing);
    void add_edge(int a, int b);
    int degree(int id) const;
    bool is_forest() const;
    /// Throws CycleDetected / invalid_argument on malformed input.
    void validate() const;

    bool operator==(const PlumbingGraph& b) const = default;
};

/// Framings on the diagonal, 1 on plumbing edges; vertex order is sorted id.
Eigen::MatrixXi linking_matrix(const PlumbingGraph& g);

/// Exact eigenvalue-sign counts of a symmetric integer matrix.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    /// The normalization exponent: the number of nonpositive eigenvalues.
    int sigma() const { return n_minus + n_zero; }
};

/// Exact inertia by symmetric (congruence) diagonalization over the
/// rationals, with the 2x2 clearing step when a zero diagonal pivot has a
/// nonzero off-diagonal partner.
Inertia inertia(const Eigen::MatrixXi& m);

/// Kirby blow-up.  Without a site: adds an isolated vertex framed sign.
/// With a site u: attaches a new leaf framed sign to u and adds sign to
/// u's framing, so blow_down of the new leaf restores g exactly.
PlumbingGraph blow_up(const PlumbingGraph& g, int sign, std::optional<int> site = std::nullopt);

/// Kirby blow-down of a +-1-framed vertex of degree <= 1; a leaf's
/// neighbour loses the leaf's framing.  Throws NotBlowDownable otherwise.
PlumbingGraph blow_down(const PlumbingGraph& g, int v);

/// Negative continued fraction p/q = a_1 - 1/(a_2 - 1/(...)), all a_i >= 2.
std::vector<int> continued_fraction(int p, int q);

/// Linear chain presenting the lens space L(p,q); requires gcd(p,q) = 1 and
/// 0 < q < p (or q = 1 with any p >= 1).
PlumbingGraph lens_chain(int p, int q);

/// Star-shaped plumbing: central vertex framed e0 with one continued-
/// fraction chain per (p_i, q_i) leg.
PlumbingGraph seifert_star(int e0, const std::vector<std::pair<int, int>>& legs);

/// Text format, one item per line: `v <id> <framing>`, `e <id> <id>`,
/// `#` comments.  Throws ParseError with the offending line number.
PlumbingGraph parse_graph(const std::string& text);

std::string graph_to_text(const PlumbingGraph& g);

}  // namespace ospq
