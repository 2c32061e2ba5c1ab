#include "ospq/serialize.hpp"

#include <stdexcept>

namespace ospq {

namespace {

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

}  // namespace

Json to_json(const CycloNumber& v) {
    Json j;
    j["order"] = v.order();
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_str(c));
    j["coeffs"] = std::move(coeffs);
    auto z = v.embed();
    j["approx"] = {{"re", z.real()}, {"im", z.imag()}};
    return j;
}

CycloNumber cyclo_from_json(const Json& j) {
    long order = j.at("order").get<long>();
    CycloNumber v = CycloNumber::zero(order);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<long>(coeffs.size()) != cyclo_degree(order))
        throw std::invalid_argument("cyclotomic coefficient count does not match order");
    CycloNumber acc = CycloNumber::zero(order);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Rational c = parse_rational(coeffs[i].get<std::string>());
        if (c != 0)
            acc += CycloNumber::from_rational(order, c) *
                   CycloNumber::root_power(order, static_cast<long long>(i));
    }
    return acc;
}

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(std::stoll(it.key()), Integer(it.value().get<std::string>()));
    return p;
}

Json to_json(const Weight& w) {
    Json j;
    j["doubled"] = true;
    j["coords"] = w.doubled;
    return j;
}

Weight weight_from_json(const Json& j) {
    if (!j.at("doubled").get<bool>())
        throw std::invalid_argument("weight coordinates must be marked doubled");
    return Weight(j.at("coords").get<std::vector<int>>());
}

Json to_json(const ModularTables& t) {
    Json j;
    j["config"] = {{"n", t.n}, {"k", t.k}, {"N", t.N}};
    Json idx = Json::array();
    for (const auto& w : t.index_set) idx.push_back(to_json(w));
    j["index_set"] = std::move(idx);
    Json bnd = Json::array();
    for (const auto& w : t.boundary_set) bnd.push_back(to_json(w));
    j["boundary_set"] = std::move(bnd);

    auto dump_map = [](const std::map<Weight, CycloNumber>& m) {
        Json arr = Json::array();
        for (const auto& [w, v] : m) arr.push_back({{"weight", to_json(w)}, {"value", to_json(v)}});
        return arr;
    };
    j["sdim"] = dump_map(t.sdim);
    j["twist"] = dump_map(t.twist);
    Json hopf = Json::array();
    for (const auto& [key, v] : t.hopf)
        hopf.push_back({{"lambda", to_json(key.first)}, {"mu", to_json(key.second)}, {"value", to_json(v)}});
    j["hopf"] = std::move(hopf);
    j["c"] = to_json(t.c);
    j["d"] = dump_map(t.d);
    j["zeta"] = to_json(t.zeta);
    j["z"] = to_json(t.z);
    return j;
}

ModularTables tables_from_json(const Json& j) {
    ModularTables t;
    t.n = j.at("config").at("n").get<int>();
    t.k = j.at("config").at("k").get<int>();
    t.N = j.at("config").at("N").get<long>();
    if (t.N != 2L * (2 * t.k + 1)) throw std::invalid_argument("tables: N != 2(2k+1)");
    t.root_data = build_root_data(t.n);
    t.weyl = enumerate_weyl(t.n);
    for (const auto& w : j.at("index_set")) t.index_set.push_back(weight_from_json(w));
    for (const auto& w : j.at("boundary_set")) t.boundary_set.push_back(weight_from_json(w));
    auto load_map = [](const Json& arr, std::map<Weight, CycloNumber>& m) {
        for (const auto& item : arr)
            m[weight_from_json(item.at("weight"))] = cyclo_from_json(item.at("value"));
    };
    load_map(j.at("sdim"), t.sdim);
    load_map(j.at("twist"), t.twist);
    for (const auto& item : j.at("hopf"))
        t.hopf[{weight_from_json(item.at("lambda")), weight_from_json(item.at("mu"))}] =
            cyclo_from_json(item.at("value"));
    t.c = cyclo_from_json(j.at("c"));
    load_map(j.at("d"), t.d);
    t.zeta = cyclo_from_json(j.at("zeta"));
    t.z = cyclo_from_json(j.at("z"));
    return t;
}

Json to_json(const PlumbingGraph& g) {
    Json j;
    Json verts = Json::array();
    for (const auto& [id, f] : g.vertices) verts.push_back({{"id", id}, {"framing", f}});
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

PlumbingGraph graph_from_json(const Json& j) {
    PlumbingGraph g;
    for (const auto& v : j.at("vertices"))
        g.add_vertex(v.at("id").get<int>(), v.at("framing").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["value"] = to_json(r.value);
    j["sigma"] = r.sigma;
    j["colorings"] = r.coloring_count;
    j["seconds"] = r.seconds;
    return j;
}

}  // namespace ospq
