// Python bindings for the main operations. Vertices and sequence positions
// are 0-based here, matching the C++ API; the JSON/CLI wire stays 1-based.
#include "conespectra/construct.hpp"
#include "conespectra/degseq.hpp"
#include "conespectra/errors.hpp"
#include "conespectra/enumerate.hpp"
#include "conespectra/graph.hpp"
#include "conespectra/io.hpp"
#include "conespectra/spectral.hpp"
#include "conespectra/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace conespectra;

namespace {

using Edges = std::vector<std::pair<int, int>>;

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        default: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
    }
}

Graph graph_of(int n, const Edges& edges) { return Graph(n, edges); }

py::dict cone_dict(const ConeGraph& g) {
    py::dict out;
    out["n"] = g.full.size();
    out["t"] = g.t;
    out["edges"] = g.full.edges();
    out["h_edges"] = g.h.edges();
    return out;
}

py::dict perron_dict(const PerronResult& r) {
    py::dict out;
    out["theta"] = r.theta;
    out["weights"] = r.weights;
    out["residual"] = r.residual;
    out["iterations"] = r.iterations;
    return out;
}

py::dict report_dict(const TheoremReport& r) {
    py::dict out;
    out["check"] = r.check;
    out["verdict"] = to_string(r.verdict);
    out["detail"] = r.detail;
    out["min_margin"] = r.min_margin;
    out["witness"] = json_to_py(r.witness);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral maxima of apex degree sequence families";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "classify",
        [](const Sequence& pi, int t, int c) { return json_to_py(sequence_to_json(classify(pi, t, c))); },
        py::arg("pi"), py::arg("t"), py::arg("c"),
        "Validate a cone degree sequence; returns n, t, c, pi and the case tag.");

    m.def(
        "enumerate_sequences",
        [](int n, int t, int c) {
            py::list out;
            for (const ConeSequence& s : enumerate_sequences(n, t, c)) out.append(s.pi);
            return out;
        },
        py::arg("n"), py::arg("t"), py::arg("c"),
        "All valid cone degree sequences for (n, t, c), descending lexicographic.");

    m.def(
        "construct",
        [](const Sequence& pi, int t, int c) {
            ConeSequence s = classify(pi, t, c);
            py::dict out = cone_dict(maximal_cone_graph(s));
            out["layers"] = maximal_reduced_graph(s).layers;
            return out;
        },
        py::arg("pi"), py::arg("t"), py::arg("c"),
        "The spectrally maximal graph of the family, with its layer structure.");

    m.def(
        "theta",
        [](int n, const Edges& edges, double alpha, double tol) {
            return perron_dict(theta(graph_of(n, edges), alpha, tol));
        },
        py::arg("n"), py::arg("edges"), py::arg("alpha"), py::arg("tol") = 1e-12,
        "Dominant eigenvalue and positive unit eigenvector of A + alpha*D.");

    m.def(
        "oracle",
        [](const Sequence& pi, int t, int c, double alpha, int limit, double margin) {
            OracleResult r = oracle_maximal(classify(pi, t, c), alpha, limit, margin);
            py::dict out;
            out["best"] = cone_dict(r.best);
            out["perron"] = perron_dict(r.perron);
            out["unique"] = r.unique;
            out["family_size"] = r.family_size;
            if (r.family_size > 1) out["gap_to_second"] = r.gap_to_second;
            return out;
        },
        py::arg("pi"), py::arg("t"), py::arg("c"), py::arg("alpha"), py::arg("limit") = 9,
        py::arg("margin") = 1e-9,
        "Brute-force argmax over every realization of the family.");

    m.def(
        "star_chain",
        [](const Sequence& pi, const Sequence& pi_prime, int t, int c) {
            MajorizationChain chain = star_chain(pi, pi_prime, t, c);
            py::dict out;
            out["sequences"] = chain.sequences;
            out["moves"] = chain.moves;
            return out;
        },
        py::arg("pi"), py::arg("pi_prime"), py::arg("t"), py::arg("c"),
        "Stepwise unit-transfer chain between two comparable sequences (0-based moves).");

    m.def(
        "verify_majorization",
        [](const Sequence& pi, const Sequence& pi_prime, int t, int c, double alpha,
           int oracle_limit, double margin) {
            return report_dict(
                verify_majorization(pi, pi_prime, t, c, alpha, oracle_limit, margin));
        },
        py::arg("pi"), py::arg("pi_prime"), py::arg("t"), py::arg("c"), py::arg("alpha"),
        py::arg("oracle_limit") = 0, py::arg("margin") = 1e-9,
        "Strict spectral comparison of the two family maxima.");

    m.def(
        "run_check",
        [](const std::string& id, int n, int t, int c, double alpha, int oracle_limit,
           double margin, int samples) {
            py::list out;
            for (const TheoremReport& r : run_check(id, n, t, c, alpha, oracle_limit, margin,
                                                    samples))
                out.append(report_dict(r));
            return out;
        },
        py::arg("id"), py::arg("n"), py::arg("t"), py::arg("c") = 0, py::arg("alpha") = 0.0,
        py::arg("oracle_limit") = 9, py::arg("margin") = 1e-9, py::arg("samples") = 200,
        "Run a named structural or spectral check over every family instance.");

    m.def(
        "search_counterexample",
        [](int n, int t, int c, double alpha, int limit, double margin) {
            py::list out;
            for (const PairFinding& f : counterexample_search(n, t, c, alpha, limit, margin)) {
                py::dict d;
                d["pi"] = f.pi;
                d["pi_prime"] = f.pi_prime;
                d["theta"] = f.theta_pi;
                d["theta_prime"] = f.theta_pi_prime;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("t"), py::arg("c"), py::arg("alpha"), py::arg("limit") = 9,
        py::arg("margin") = 1e-9,
        "Adjacent sequence pairs whose brute-force maxima fail the strict increase.");

    m.def(
        "to_graph6", [](int n, const Edges& edges) { return to_graph6(graph_of(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "from_graph6",
        [](const std::string& text) {
            Graph g = from_graph6(text);
            return py::make_tuple(g.size(), g.edges());
        },
        py::arg("text"));
}
