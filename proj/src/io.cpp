#include "conespectra/io.hpp"
#include "conespectra/errors.hpp"

#include <sstream>

namespace conespectra {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail("RangeError", "graph JSON needs \"n\" and \"edges\"");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail("RangeError", "edge must be a pair");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

json cone_to_json(const ConeGraph& g) {
    json out = graph_to_json(g.full);
    out["t"] = g.t;
    return out;
}

ConeGraph cone_from_json(const json& j) {
    Graph full = graph_from_json(j);
    int t = j.value("t", 0);
    if (t < 0 || t > full.size()) fail("RangeError", "apex count out of range");
    for (int a = 0; a < t; ++a)
        if (full.degree(a) != full.size() - 1)
            fail("NotConeSequence", "vertex " + std::to_string(a) +
                                        " is not adjacent to everything");
    std::vector<int> rest;
    for (int v = t; v < full.size(); ++v) rest.push_back(v);
    ConeGraph out;
    out.t = t;
    out.h = induced_subgraph(full, rest);
    out.full = std::move(full);
    return out;
}

json sequence_to_json(const ConeSequence& s) {
    return json{{"n", s.n}, {"t", s.t}, {"c", s.c}, {"pi", s.pi}, {"case", to_string(s.kind)}};
}

ConeSequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pi") || !j.contains("t") || !j.contains("c"))
        fail("RangeError", "sequence JSON needs \"pi\", \"t\" and \"c\"");
    Sequence pi = j.at("pi").get<Sequence>();
    ConeSequence s = classify(pi, j.at("t").get<int>(), j.at("c").get<int>());
    if (j.contains("case")) {
        auto want = seq_case_from_string(j.at("case").get<std::string>());
        if (!want || *want != s.kind)
            fail("NoCaseMatch", "stored case tag " + j.at("case").get<std::string>() +
                                    " but the sequence classifies as " + to_string(s.kind));
    }
    return s;
}

json perron_to_json(const PerronResult& r) {
    return json{{"theta", r.theta},
                {"weights", r.weights},
                {"residual", r.residual},
                {"iterations", r.iterations}};
}

json chain_to_json(const MajorizationChain& c) {
    json moves = json::array();
    for (auto [p, q] : c.moves) moves.push_back({{"p", p + 1}, {"q", q + 1}});
    return json{{"sequences", c.sequences}, {"moves", moves}};
}

json report_to_json(const TheoremReport& r) {
    return json{{"check", r.check},
                {"verdict", to_string(r.verdict)},
                {"detail", r.detail},
                {"witness", r.witness},
                {"min_margin", r.min_margin}};
}

std::string to_graph6(const Graph& g) {
    const int n = g.size();
    if (n > 62) fail("TooLarge", "graph6 writer supports up to 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (n > 1 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    if (text.empty()) fail("RangeError", "empty graph6 string");
    const int n = text[0] - 63;
    if (n < 0 || n > 62) fail("RangeError", "unsupported graph6 size byte");
    Graph g(n);
    long need = static_cast<long>(n) * (n - 1) / 2;
    long have = 6L * (static_cast<long>(text.size()) - 1);
    if (have < need) fail("RangeError", "graph6 string too short");
    long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int byte = text[1 + idx / 6] - 63;
            if (byte < 0 || byte > 63) fail("RangeError", "bad graph6 character");
            if (byte >> (5 - idx % 6) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace conespectra
