// bcnet: command-line front end for the plabic-network library.

#include "bcnet/acceptance.hpp"
#include "bcnet/cells.hpp"
#include "bcnet/io.hpp"
#include "bcnet/measure.hpp"
#include "bcnet/moves.hpp"
#include "bcnet/positivity.hpp"
#include "bcnet/quiver.hpp"
#include "bcnet/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace bcnet;
using nlohmann::ordered_json;

namespace {

/// Domain outcome that is not an error: the command ran and answered "no".
struct Negative {
    int code;
};

GraphDoc load(const std::string& path) { return parse_graph_json(read_file(path)); }

/// Face weights of a file: its own, else those of its edge weights.
FaceWeighting<Scalar> weighting_of(const GraphDoc& doc) {
    if (doc.faces && !doc.weights) return *doc.faces;
    if (!doc.weights) fail("NoWeights", "graph file carries neither edge nor face weights");
    return face_weights_of(network_of(doc));
}

int face_arg(const PlabicGraph& g, const std::string& face) {
    try {
        return g.face_index(face);
    } catch (const Error&) {
    }
    if (!face.empty() && face.find_first_not_of("0123456789") == std::string::npos) {
        int f = std::stoi(face);
        if (f < g.num_faces()) return f;
    }
    fail("UnknownFace", "no face " + face);
}

GroupContext context_of(const std::string& type, int rank) {
    if (type == "A") return GroupContext::gl(rank);
    if (type == "B") return GroupContext::make(GroupType::B, rank);
    if (type == "C") return GroupContext::make(GroupType::C, rank);
    fail("BadType", "type must be A, B or C");
}

std::vector<Scalar> parse_literals(const std::string& text) {
    std::istringstream in(text);
    std::vector<Scalar> out;
    for (std::string tok; in >> tok;) out.push_back(Scalar::parse(tok));
    return out;
}

ordered_json rationals(const std::vector<Rational>& row) {
    ordered_json j = ordered_json::array();
    for (const Rational& q : row) j.push_back(q.get_str());
    return j;
}

std::string bracket_json(const PlabicGraph& g, const BracketSpec& spec) {
    ordered_json c = ordered_json::array();
    for (const auto& row : spec.c) c.push_back(rationals(row));
    ordered_json faces = ordered_json::array();
    for (int f = 0; f < g.num_faces(); ++f) {
        auto [coord, factor] = spec.face_terms.at(f);
        ordered_json x = {{"face", g.faces()[f].id}};
        x["coordinate"] = coord < 0 ? ordered_json(nullptr) : ordered_json(spec.names[coord]);
        x["factor"] = factor.str();
        faces.push_back(std::move(x));
    }
    ordered_json j = {{"names", spec.names}, {"c", c}, {"relation", rationals(spec.relation)}, {"faces", faces}};
    return j.dump(2);
}

ordered_json certificate_json(const TNNCertificate& cert) {
    ordered_json fs = ordered_json::array();
    for (const CertFactor& f : cert.factors) {
        if (f.letter == 0) {
            ordered_json h = ordered_json::array();
            for (const Scalar& x : f.torus) h.push_back(x.str());
            fs.push_back({{"torus", h}});
            continue;
        }
        ordered_json ta = ordered_json::array();
        for (const Scalar& x : f.type_a) ta.push_back(x.str());
        fs.push_back({{"letter", f.letter}, {"t", f.t.str()}, {"case", f.case_no}, {"type_a", ta}});
    }
    return {{"factors", fs}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plabic networks for GL_n, Sp_2k and O_2k+1"};
    app.require_subcommand(1);

    std::string file, face, type = "C", word, params, perm, out;
    int rank = 1, n = 0;
    bool fold = false, average = false, dot = false, quiver = false;
    std::uint64_t seed = 20240601;

    auto* c_meas = app.add_subcommand("meas", "Print the boundary measurement matrix");
    c_meas->add_option("graph", file, "Graph JSON")->required();

    auto* c_move = app.add_subcommand("move", "Square move at a face; rewrites the file");
    c_move->add_option("graph", file, "Graph JSON")->required();
    c_move->add_option("--face", face, "Face id or index")->required();
    c_move->add_option("--out", out, "Write here instead of in place");

    auto* c_sigma = app.add_subcommand("sigma", "Print the mirrored weighting sigma(fw)");
    c_sigma->add_option("graph", file, "Graph JSON")->required();

    auto* c_ms = app.add_subcommand("check-ms", "Exit 0 iff the graph (and its weighting) is move-symmetric");
    c_ms->add_option("graph", file, "Graph JSON")->required();

    auto* c_quiver = app.add_subcommand("quiver", "Print the log-canonical, folded or averaged bracket");
    c_quiver->add_option("graph", file, "Graph JSON")->required();
    auto* o_fold = c_quiver->add_flag("--fold", fold, "Folded bracket (even valency)");
    c_quiver->add_flag("--average", average, "Averaged bracket (odd valency)")->excludes(o_fold);

    auto* c_cell = app.add_subcommand("cell", "Graph of a double word and its chart");
    c_cell->add_option("--type", type, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
    c_cell->add_option("--rank", rank, "Rank k (n for type A)")->check(CLI::PositiveNumber);
    c_cell->add_option("--word", word, "Letters, e.g. \"1 -2 2\"");
    c_cell->add_option("--params", params, "Chart parameters as scalar literals; default all 1");
    c_cell->add_flag("--dot", dot, "Include the DOT drawing");

    auto* c_tnn = app.add_subcommand("tnn", "Decide total nonnegativity and print a certificate");
    c_tnn->add_option("matrix", file, "Matrix JSON")->required();

    auto* c_weyl = app.add_subcommand("weyl", "Length data of an element of the centralizer of w0");
    c_weyl->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
    c_weyl->add_option("--perm", perm, "One-line notation, e.g. \"3 4 1 2\"")->required();

    auto* c_dot = app.add_subcommand("export-dot", "Render a graph or its dual quiver as DOT");
    c_dot->add_option("graph", file, "Graph JSON")->required();
    c_dot->add_flag("--quiver", quiver, "Render the dual quiver");

    auto* c_verify = app.add_subcommand("verify", "Run the acceptance suite");
    c_verify->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_meas->parsed()) {
            std::cout << matrix_json(meas(network_of(load(file)))) << "\n";
        } else if (c_move->parsed()) {
            GraphDoc doc = load(file);
            const int f = face_arg(doc.graph, face);
            GraphDoc moved{square_move(doc.graph, f), std::nullopt, std::nullopt, std::nullopt};
            if (doc.faces || doc.weights) moved.faces = mutate_weights(dual_quiver(doc.graph), f, weighting_of(doc));
            write_file(out.empty() ? file : out, graph_json(moved));
        } else if (c_sigma->parsed()) {
            GraphDoc doc = load(file);
            std::cout << face_weights_json(doc.graph, sigma(doc.graph, weighting_of(doc))) << "\n";
        } else if (c_ms->parsed()) {
            GraphDoc doc = load(file);
            bool ok = doc.faces || doc.weights ? is_move_symmetric(doc.graph, weighting_of(doc))
                                               : is_move_symmetric(doc.graph);
            std::cout << (ok ? "yes" : "no") << "\n";
            if (!ok) throw Negative{1};
        } else if (c_quiver->parsed()) {
            PlabicGraph g = load(file).graph;
            BracketSpec spec = fold ? folded_bracket(g) : average ? averaged_bracket(g) : log_canonical_bracket(g);
            std::cout << bracket_json(g, spec) << "\n";
        } else if (c_cell->parsed()) {
            GroupContext ctx = context_of(type, rank);
            DoubleWord dw = parse_word(word);
            PlabicGraph g = gamma_word(ctx, dw);
            const std::size_t count = ctx.type == GroupType::A ? dw.size() : fg_parameter_count(ctx, dw);
            std::vector<Scalar> ps = params.empty() ? std::vector<Scalar>(count, Scalar(1)) : parse_literals(params);
            ordered_json j;
            j["graph"] = ordered_json::parse(graph_json(g));
            if (ctx.type == GroupType::A) {
                j["chart"] = {{"kind", "product"},
                              {"matrix", ordered_json::parse(matrix_json(phi(ctx, dw, std::vector<Scalar>(ctx.n, Scalar(1)), ps)))}};
            } else {
                FgValue fg = fg_chart(ctx, dw, ps);
                j["chart"] = {{"kind", "fock-goncharov"}, {"projective", fg.projective},
                              {"matrix", ordered_json::parse(matrix_json(fg.m))}};
            }
            if (dot) j["dot"] = graph_dot(g);
            std::cout << j.dump(2) << "\n";
        } else if (c_tnn->parsed()) {
            SMatrix a = parse_matrix_json(read_file(file));
            GroupContext ctx = GroupContext::for_valency(static_cast<int>(a.rows()));
            try {
                TNNCertificate cert = tnn_membership(ctx, a);
                std::cout << "yes\n" << certificate_json(cert).dump(2) << "\n";
            } catch (const Error& e) {
                if (e.code() != "NotTNN" && e.code() != "NotInGroup" && e.code() != "ZeroLeadingMinor") throw;
                std::cout << "no\n" << ordered_json{{"reason", e.code()}, {"message", e.what()}}.dump(2) << "\n";
                throw Negative{1};
            }
        } else if (c_weyl->parsed()) {
            Perm w = parse_perm(perm);
            if (static_cast<int>(w.size()) != n) fail("BadPermutation", "permutation has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
            const int inv = inv_count(w), neg = neg_count(w), len = length(w);
            std::cout << "inv=" << inv << " neg=" << neg << " length=" << len << "\n"
                      << "word=" << word_str(reduced_word(w)) << "\n";
        } else if (c_dot->parsed()) {
            PlabicGraph g = load(file).graph;
            std::cout << (quiver ? quiver_dot(g, dual_quiver(g)) : graph_dot(g));
        } else if (c_verify->parsed()) {
            int failed = 0;
            run_acceptance(seed, [&](const CriterionResult& r) {
                std::cout << format_result(r) << std::endl;
                failed += !r.pass;
            });
            if (failed) throw Negative{1};
        }
    } catch (const Negative& neg) {
        return neg.code;
    } catch (const Error& e) {
        std::cerr << ordered_json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
