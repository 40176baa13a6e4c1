#pragma once

#include "conespectra/degseq.hpp"
#include "conespectra/graph.hpp"
#include "conespectra/spectral.hpp"
#include "conespectra/verify.hpp"

#include "json.hpp"

#include <string>

namespace conespectra {

// Wire formats. Vertices are 0-based everywhere; sequence positions in
// reports (chain moves, pair positions) are 1-based.

nlohmann::json graph_to_json(const Graph& g);            // {"n":., "edges":[[u,v],..]}
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json cone_to_json(const ConeGraph& g);         // adds "t"
ConeGraph cone_from_json(const nlohmann::json& j);       // checks the apex block

nlohmann::json sequence_to_json(const ConeSequence& s);  // {"n","t","c","pi","case"}
ConeSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json perron_to_json(const PerronResult& r);
nlohmann::json chain_to_json(const MajorizationChain& c);  // moves as 1-based {"p","q"}
nlohmann::json report_to_json(const TheoremReport& r);

// graph6: the usual printable encoding of the upper triangle, column by
// column, 6 bits per character. Supports up to 62 vertices.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

std::string to_dot(const Graph& g);

} // namespace conespectra
