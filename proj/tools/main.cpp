// cone-spectra: build, check and search the spectral maxima of apex degree
// sequence families. Every subcommand prints JSON (or graph6/dot where noted)
// and uses exit codes 0 = success / law holds, 1 = bad input or usage,
// 2 = a checked law was violated (witness included in the output).

#include "conespectra/construct.hpp"
#include "conespectra/degseq.hpp"
#include "conespectra/enumerate.hpp"
#include "conespectra/errors.hpp"
#include "conespectra/graph.hpp"
#include "conespectra/io.hpp"
#include "conespectra/spectral.hpp"
#include "conespectra/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace conespectra;
using nlohmann::json;

namespace {

// Sequence and graph arguments accept inline JSON or a path to a JSON file.
json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) fail("RangeError", "cannot open " + arg);
    return json::parse(in);
}

Sequence parse_sequence_arg(const std::string& arg) {
    json j = parse_json_arg(arg);
    if (!j.is_array()) fail("RangeError", "expected a JSON array of degrees");
    return j.get<Sequence>();
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail("RangeError", "cannot write " + out_path);
    out << text;
}

void emit(const json& j, const std::string& out_path) { emit_text(j.dump(2) + "\n", out_path); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone-spectra: spectral maxima of apex degree sequence families.\n"
                 "Set CONE_SPECTRA_THREADS to cap sweep parallelism."};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands pass -o back up

    std::string out_path;
    app.add_option("-o,--out", out_path, "write the result here instead of stdout")
        ->capture_default_str();

    // validate
    std::string v_seq;
    int v_t = 0, v_c = 0;
    auto* validate = app.add_subcommand("validate", "classify a degree sequence");
    validate->add_option("--seq", v_seq, "degree sequence (JSON array or file)")->required();
    validate->add_option("--t", v_t, "apex count")->required();
    validate->add_option("--c", v_c, "cyclomatic number (0, 1 or 2)")->required();

    // construct
    std::string c_seq, c_format = "json";
    int c_t = 0, c_c = 0;
    double c_alpha = -1.0;
    auto* construct = app.add_subcommand("construct", "build the maximal graph");
    construct->add_option("--seq", c_seq, "degree sequence (JSON array or file)")->required();
    construct->add_option("--t", c_t, "apex count")->required();
    construct->add_option("--c", c_c, "cyclomatic number (0, 1 or 2)")->required();
    construct->add_option("--alpha", c_alpha, "also report the dominant eigenpair for this alpha");
    construct->add_option("--format", c_format, "json, graph6 or dot")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));

    // theta
    std::string th_graph, th_g6, th_seq;
    int th_t = 0, th_c = 0;
    double th_alpha = 0.0, th_tol = 1e-12;
    auto* th = app.add_subcommand("theta", "dominant eigenvalue and weights of one graph");
    th->add_option("--graph", th_graph, "graph as JSON ({\"n\":..,\"edges\":[..]}) or file");
    th->add_option("--graph6", th_g6, "graph in graph6 notation");
    th->add_option("--seq", th_seq, "degree sequence; uses the constructed maximal graph");
    th->add_option("--t", th_t, "apex count (with --seq)");
    th->add_option("--c", th_c, "cyclomatic number (with --seq)");
    th->add_option("--alpha", th_alpha, "diagonal weight alpha >= 0")->required();
    th->add_option("--tol", th_tol, "residual tolerance");

    // chain
    std::string ch_from, ch_to;
    int ch_t = 0, ch_c = 0;
    double ch_alpha = -1.0;
    auto* chain = app.add_subcommand("chain", "stepwise majorization chain between two sequences");
    chain->add_option("--from", ch_from, "lower sequence (JSON array or file)")->required();
    chain->add_option("--to", ch_to, "upper sequence (JSON array or file)")->required();
    chain->add_option("--t", ch_t, "apex count")->required();
    chain->add_option("--c", ch_c, "cyclomatic number (0, 1 or 2)")->required();
    chain->add_option("--alpha", ch_alpha, "also report theta of each step's maximal graph");

    // verify-theorem
    std::string vt_check, vt_seq, vt_seq_prime;
    int vt_n = 0, vt_t = 0, vt_c = 0, vt_limit = 9, vt_samples = 200;
    double vt_alpha = 0.0, vt_margin = 1e-9;
    auto* vt = app.add_subcommand("verify-theorem", "run a named check over a family");
    vt->add_option("--check", vt_check,
                   "check id: 2.1 2.2 3.1 3.5 3.10 4.2 4.4 4.6 5.5 5.6 5.7 (see README)")
        ->required();
    vt->add_option("--n", vt_n, "number of vertices");
    vt->add_option("--t", vt_t, "apex count")->required();
    vt->add_option("--c", vt_c, "cyclomatic number (ids 2.x and 3.x only)");
    vt->add_option("--alpha", vt_alpha, "diagonal weight alpha >= 0")->required();
    vt->add_option("--oracle-limit", vt_limit, "brute-force ceiling on non-apex size");
    vt->add_option("--margin", vt_margin, "strictness margin for comparisons");
    vt->add_option("--samples", vt_samples, "instance cap per family for ids 2.x");
    vt->add_option("--seq", vt_seq, "single-pair mode (ids 5.x): lower sequence");
    vt->add_option("--seq-prime", vt_seq_prime, "single-pair mode (ids 5.x): upper sequence");

    // enumerate
    int e_n = 0, e_t = 0, e_c = 0;
    bool e_reduced = false;
    auto* enumerate = app.add_subcommand("enumerate", "list the family of cone sequences");
    enumerate->add_option("--n", e_n, "number of vertices")->required();
    enumerate->add_option("--t", e_t, "apex count")->required();
    enumerate->add_option("--c", e_c, "cyclomatic number (0, 1 or 2)")->required();
    enumerate->add_flag("--reduced", e_reduced, "print reduced sequences instead");

    // oracle
    std::string o_seq;
    int o_t = 0, o_c = 0, o_limit = 9;
    double o_alpha = 0.0, o_margin = 1e-9;
    auto* oracle = app.add_subcommand("oracle", "brute-force argmax over all realizations");
    oracle->add_option("--seq", o_seq, "degree sequence (JSON array or file)")->required();
    oracle->add_option("--t", o_t, "apex count")->required();
    oracle->add_option("--c", o_c, "cyclomatic number (0, 1 or 2)")->required();
    oracle->add_option("--alpha", o_alpha, "diagonal weight alpha >= 0")->required();
    oracle->add_option("--limit", o_limit, "ceiling on the non-apex size");
    oracle->add_option("--margin", o_margin, "uniqueness margin");

    // search-counterexample
    int s_n = 0, s_t = 0, s_c = 0, s_limit = 9;
    double s_alpha = 0.0, s_margin = 1e-9;
    auto* search = app.add_subcommand("search-counterexample",
                                      "scan adjacent pairs for non-increasing maxima");
    search->add_option("--n", s_n, "number of vertices")->required();
    search->add_option("--t", s_t, "apex count")->required();
    search->add_option("--c", s_c, "cyclomatic number (any value >= 0)")->required();
    search->add_option("--alpha", s_alpha, "diagonal weight alpha >= 0")->required();
    search->add_option("--limit", s_limit, "ceiling on the non-apex size");
    search->add_option("--margin", s_margin, "strictness margin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) {
            json out;
            try {
                ConeSequence s = classify(parse_sequence_arg(v_seq), v_t, v_c);
                out = sequence_to_json(s);
                out["valid"] = true;
            } catch (const Error& e) {
                out = json{{"valid", false}, {"kind", e.kind()}, {"message", e.what()}};
                emit(out, out_path);
                return 1;
            }
            emit(out, out_path);
            return 0;
        }

        if (construct->parsed()) {
            ConeSequence s = classify(parse_sequence_arg(c_seq), c_t, c_c);
            ConeGraph g = maximal_cone_graph(s);
            if (c_format == "graph6") {
                emit_text(to_graph6(g.full) + "\n", out_path);
            } else if (c_format == "dot") {
                emit_text(to_dot(g.full), out_path);
            } else {
                json out{{"sequence", sequence_to_json(s)}, {"graph", cone_to_json(g)}};
                out["layers"] = maximal_reduced_graph(s).layers;
                if (c_alpha >= 0.0) {
                    out["alpha"] = c_alpha;
                    out["perron"] = perron_to_json(theta(g.full, c_alpha));
                }
                emit(out, out_path);
            }
            return 0;
        }

        if (th->parsed()) {
            Graph g;
            if (!th_graph.empty())
                g = graph_from_json(parse_json_arg(th_graph));
            else if (!th_g6.empty())
                g = from_graph6(th_g6);
            else if (!th_seq.empty())
                g = maximal_cone_graph(classify(parse_sequence_arg(th_seq), th_t, th_c)).full;
            else
                fail("RangeError", "one of --graph, --graph6 or --seq is required");
            json out = perron_to_json(theta(g, th_alpha, th_tol));
            out["alpha"] = th_alpha;
            emit(out, out_path);
            return 0;
        }

        if (chain->parsed()) {
            Sequence lo = parse_sequence_arg(ch_from);
            Sequence hi = parse_sequence_arg(ch_to);
            MajorizationChain mc = star_chain(lo, hi, ch_t, ch_c);
            json out = chain_to_json(mc);
            if (ch_alpha >= 0.0) {
                json thetas = json::array();
                double prev = 0.0;
                bool increasing = true;
                for (std::size_t i = 0; i < mc.sequences.size(); ++i) {
                    ConeGraph g = maximal_cone_graph(mc.sequences[i], ch_t, ch_c);
                    double th_i = theta(g.full, ch_alpha).theta;
                    thetas.push_back(th_i);
                    if (i > 0 && th_i <= prev) increasing = false;
                    prev = th_i;
                }
                out["alpha"] = ch_alpha;
                out["thetas"] = thetas;
                out["increasing"] = increasing;
            }
            emit(out, out_path);
            return 0;
        }

        if (vt->parsed()) {
            std::vector<TheoremReport> reports;
            if (!vt_seq.empty() || !vt_seq_prime.empty()) {
                if (vt_seq.empty() || vt_seq_prime.empty())
                    fail("RangeError", "single-pair mode needs both --seq and --seq-prime");
                int cc;
                if (vt_check == "5.5")
                    cc = 0;
                else if (vt_check == "5.6")
                    cc = 1;
                else if (vt_check == "5.7")
                    cc = 2;
                else
                    fail("RangeError", "single-pair mode only fits the 5.x checks");
                reports.push_back(verify_majorization(parse_sequence_arg(vt_seq),
                                                      parse_sequence_arg(vt_seq_prime), vt_t, cc,
                                                      vt_alpha, vt_limit, vt_margin));
            } else {
                if (vt_n <= 0) fail("RangeError", "--n is required for a sweep");
                reports = run_check(vt_check, vt_n, vt_t, vt_c, vt_alpha, vt_limit, vt_margin,
                                    vt_samples);
            }
            int holds = 0, violated = 0, inconclusive = 0;
            json arr = json::array();
            for (const TheoremReport& r : reports) {
                arr.push_back(report_to_json(r));
                if (r.verdict == Verdict::Holds) ++holds;
                if (r.verdict == Verdict::Violated) ++violated;
                if (r.verdict == Verdict::Inconclusive) ++inconclusive;
            }
            json out{{"check", vt_check},
                     {"reports", arr},
                     {"holds", holds},
                     {"violated", violated},
                     {"inconclusive", inconclusive}};
            emit(out, out_path);
            if (!out_path.empty())
                std::cout << "check " << vt_check << ": " << holds << " holds, " << violated
                          << " violated, " << inconclusive << " inconclusive\n";
            return violated > 0 ? 2 : 0;
        }

        if (enumerate->parsed()) {
            std::vector<ConeSequence> seqs = enumerate_sequences(e_n, e_t, e_c);
            json arr = json::array();
            for (const ConeSequence& s : seqs)
                arr.push_back(e_reduced ? json(reduce(s)) : sequence_to_json(s));
            emit(json{{"count", seqs.size()}, {"sequences", arr}}, out_path);
            return 0;
        }

        if (oracle->parsed()) {
            ConeSequence s = classify(parse_sequence_arg(o_seq), o_t, o_c);
            OracleResult r = oracle_maximal(s, o_alpha, o_limit, o_margin);
            json out{{"best", cone_to_json(r.best)},
                     {"perron", perron_to_json(r.perron)},
                     {"alpha", o_alpha},
                     {"unique", r.unique},
                     {"family_size", r.family_size}};
            if (r.family_size > 1) out["gap_to_second"] = r.gap_to_second;
            emit(out, out_path);
            return 0;
        }

        if (search->parsed()) {
            std::vector<PairFinding> finds =
                counterexample_search(s_n, s_t, s_c, s_alpha, s_limit, s_margin);
            json arr = json::array();
            for (const PairFinding& f : finds)
                arr.push_back(json{{"pi", f.pi},
                                   {"pi_prime", f.pi_prime},
                                   {"theta", f.theta_pi},
                                   {"theta_prime", f.theta_pi_prime},
                                   {"best", cone_to_json(f.best_pi)},
                                   {"best_prime", cone_to_json(f.best_pi_prime)}});
            emit(json{{"count", finds.size()}, {"findings", arr}, {"alpha", s_alpha}}, out_path);
            return finds.empty() ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
