#include "ospq/surgery.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ospq/errors.hpp"

namespace ospq {

void PlumbingGraph::add_vertex(int id, int framing) {
    if (!vertices.emplace(id, framing).second)
        throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
}

void PlumbingGraph::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (!vertices.count(a) || !vertices.count(b))
        throw std::invalid_argument("edge endpoint does not exist");
    auto e = std::minmax(a, b);
    if (!edges.emplace(e.first, e.second).second)
        throw std::invalid_argument("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
}

int PlumbingGraph::degree(int id) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == id || b == id) ++d;
    return d;
}

bool PlumbingGraph::is_forest() const {
    // union-find; a cycle appears exactly when an edge joins an existing class
    std::map<int, int> parent;
    for (const auto& [id, f] : vertices) parent[id] = id;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

void PlumbingGraph::validate() const {
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (!vertices.count(a) || !vertices.count(b))
            throw std::invalid_argument("edge endpoint does not exist");
    }
    if (!is_forest()) throw CycleDetected("plumbing graph contains a cycle");
}

Eigen::MatrixXi linking_matrix(const PlumbingGraph& g) {
    std::map<int, int> index;
    for (const auto& [id, f] : g.vertices) index[id] = static_cast<int>(index.size());
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(index.size(), index.size());
    for (const auto& [id, f] : g.vertices) m(index[id], index[id]) = f;
    for (const auto& [a, b] : g.edges) {
        m(index.at(a), index.at(b)) = 1;
        m(index.at(b), index.at(a)) = 1;
    }
    return m;
}

Inertia inertia(const Eigen::MatrixXi& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inertia: matrix not square");
    if (m != m.transpose().eval()) throw std::invalid_argument("inertia: matrix not symmetric");
    const int n = static_cast<int>(m.rows());
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

    auto add_row_col = [&](int dst, int src, const mpq_class& f) {
        // congruence: row dst += f*row src, then col dst += f*col src
        for (int j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
        for (int i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
    };

    Inertia out;
    for (int i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            int partner = -1;
            for (int j = i + 1; j < n; ++j)
                if (a[i][j] != 0) {
                    partner = j;
                    break;
                }
            if (partner < 0) {
                ++out.n_zero;
                continue;
            }
            add_row_col(i, partner, 1);
            if (a[i][i] == 0) add_row_col(i, partner, -2);  // undo and subtract instead
        }
        mpq_class pivot = a[i][i];
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j] == 0) continue;
            mpq_class f = -a[i][j] / pivot;
            add_row_col(j, i, f);
        }
        if (pivot > 0)
            ++out.n_plus;
        else
            ++out.n_minus;
    }
    return out;
}

PlumbingGraph blow_up(const PlumbingGraph& g, int sign, std::optional<int> site) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("blow-up sign must be +-1");
    PlumbingGraph h = g;
    int fresh = h.vertices.empty() ? 0 : h.vertices.rbegin()->first + 1;
    h.add_vertex(fresh, sign);
    if (site) {
        auto it = h.vertices.find(*site);
        if (it == h.vertices.end())
            throw std::invalid_argument("blow-up site " + std::to_string(*site) + " does not exist");
        h.add_edge(*site, fresh);
        it->second += sign;
    }
    return h;
}

PlumbingGraph blow_down(const PlumbingGraph& g, int v) {
    auto it = g.vertices.find(v);
    if (it == g.vertices.end())
        throw std::invalid_argument("vertex " + std::to_string(v) + " does not exist");
    int f = it->second;
    if (f != 1 && f != -1)
        throw NotBlowDownable("vertex " + std::to_string(v) + " has framing " + std::to_string(f));
    int deg = g.degree(v);
    if (deg > 1)
        throw NotBlowDownable("vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    PlumbingGraph h;
    std::optional<int> neighbour;
    for (const auto& [a, b] : g.edges) {
        if (a == v) neighbour = b;
        if (b == v) neighbour = a;
    }
    for (const auto& [id, fr] : g.vertices) {
        if (id == v) continue;
        h.vertices[id] = (neighbour && id == *neighbour) ? fr - f : fr;
    }
    for (const auto& [a, b] : g.edges)
        if (a != v && b != v) h.edges.emplace(a, b);
    return h;
}

std::vector<int> continued_fraction(int p, int q) {
    if (p < 1 || q < 1 || q > p || std::gcd(p, q) != 1)
        throw std::invalid_argument("continued_fraction: need 0 < q <= p with gcd(p,q) = 1");
    std::vector<int> out;
    while (q > 0) {
        int a = (p + q - 1) / q;  // ceil(p/q)
        out.push_back(a);
        int p2 = q, q2 = a * q - p;
        p = p2;
        q = q2;
    }
    return out;
}

PlumbingGraph lens_chain(int p, int q) {
    std::vector<int> framings = continued_fraction(p, q);
    PlumbingGraph g;
    for (size_t i = 0; i < framings.size(); ++i) {
        g.add_vertex(static_cast<int>(i) + 1, framings[i]);
        if (i > 0) g.add_edge(static_cast<int>(i), static_cast<int>(i) + 1);
    }
    return g;
}

PlumbingGraph seifert_star(int e0, const std::vector<std::pair<int, int>>& legs) {
    PlumbingGraph g;
    g.add_vertex(0, e0);
    int next = 1;
    for (const auto& [p, q] : legs) {
        std::vector<int> framings = continued_fraction(p, q);
        int prev = 0;
        for (int f : framings) {
            g.add_vertex(next, f);
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

PlumbingGraph parse_graph(const std::string& text) {
    PlumbingGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::pair<int, int>, int>> pending_edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            int id, framing;
            if (!(ls >> id >> framing)) throw ParseError(lineno, "expected: v <id> <framing>");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after vertex");
            try {
                g.add_vertex(id, framing);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kind == "e") {
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "expected: e <id> <id>");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
            pending_edges.push_back({{a, b}, lineno});
        } else {
            throw ParseError(lineno, "unknown item '" + kind + "'");
        }
    }
    for (const auto& [edge, ln] : pending_edges) {
        try {
            g.add_edge(edge.first, edge.second);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ln, e.what());
        }
    }
    return g;
}

std::string graph_to_text(const PlumbingGraph& g) {
    std::ostringstream os;
    for (const auto& [id, f] : g.vertices) os << "v " << id << " " << f << "\n";
    for (const auto& [a, b] : g.edges) os << "e " << a << " " << b << "\n";
    return os.str();
}

}  // namespace ospq
