#include "bcnet/io.hpp"

#include "bcnet/measure.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bcnet {

using nlohmann::ordered_json;

namespace {

Scalar literal(const ordered_json& j, const char* what) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    fail("BadJson", std::string(what) + " must be a scalar literal");
}

const ordered_json& field(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail("BadJson", std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string point_literal(const Scalar& s) { return s.str(); }

} // namespace

GraphDoc parse_graph_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        fail("BadJson", e.what());
    }
    const ordered_json& r = field(j, "rect");
    Rect rect{literal(field(r, "x0"), "x0"), literal(field(r, "x1"), "x1"), literal(field(r, "y0"), "y0"),
              literal(field(r, "y1"), "y1")};

    std::map<std::string, VKind> boundary;
    for (const auto& id : field(j, "sources")) boundary[id.get<std::string>()] = VKind::Source;
    for (const auto& id : field(j, "sinks")) boundary[id.get<std::string>()] = VKind::Sink;

    std::vector<Vertex> vs;
    std::map<std::string, int> index;
    for (const auto& v : field(j, "vertices")) {
        Vertex x;
        x.id = field(v, "id").get<std::string>();
        x.pos = {literal(field(v, "x"), "x"), literal(field(v, "y"), "y")};
        auto b = boundary.find(x.id);
        if (b != boundary.end()) {
            x.kind = b->second;
        } else {
            const std::string c = field(v, "color").get<std::string>();
            if (c != "black" && c != "white") fail("BadJson", "vertex " + x.id + " has color \"" + c + "\"");
            x.color = c == "black" ? Color::Black : Color::White;
        }
        if (!index.emplace(x.id, static_cast<int>(vs.size())).second) fail("BadJson", "duplicate vertex " + x.id);
        vs.push_back(std::move(x));
    }
    for (const auto& [id, kind] : boundary)
        if (!index.count(id)) fail("BadJson", "boundary vertex " + id + " is not listed");

    auto vertex = [&](const ordered_json& e, const char* key) {
        const std::string id = field(e, key).get<std::string>();
        auto it = index.find(id);
        if (it == index.end()) fail("BadJson", "edge endpoint " + id + " is not a vertex");
        return it->second;
    };
    std::vector<Edge> es;
    Orientation orient;
    std::vector<Scalar> weights;
    bool all_dir = true, any_w = false;
    for (const auto& e : field(j, "edges")) {
        Edge x{vertex(e, "u"), vertex(e, "v"), {}};
        if (e.contains("via"))
            for (const auto& p : e.at("via")) {
                if (!p.is_array() || p.size() != 2) fail("BadJson", "via points are [x, y] pairs");
                x.via.push_back({literal(p[0], "via"), literal(p[1], "via")});
            }
        if (e.contains("dir")) {
            const std::string d = e.at("dir").get<std::string>();
            if (d != "u->v" && d != "v->u") fail("BadJson", "dir must be \"u->v\" or \"v->u\"");
            orient.push_back(d == "u->v");
        } else {
            all_dir = false;
            orient.push_back(true);
        }
        if (e.contains("w")) {
            any_w = true;
            weights.push_back(literal(e.at("w"), "w"));
        } else {
            weights.push_back(Scalar(1));
        }
        es.push_back(std::move(x));
    }

    GraphDoc doc{PlabicGraph(rect, vs, es), std::nullopt, std::nullopt, std::nullopt};
    if (all_dir && !es.empty()) doc.orient = orient;
    if (any_w) doc.weights = weights;
    if (j.contains("face_weights")) {
        const ordered_json& fj = j.at("face_weights");
        const std::string mode = field(fj, "mode").get<std::string>();
        if (mode != "projective" && mode != "full") fail("BadJson", "face weight mode must be projective or full");
        FaceWeighting<Scalar> fw{mode == "projective", std::vector<Scalar>(doc.graph.num_faces(), Scalar(1))};
        for (const auto& [id, val] : field(fj, "values").items()) {
            int f;
            try {
                f = doc.graph.face_index(id);
            } catch (const Error&) {
                fail("BadJson", "unknown face id " + id);
            }
            fw.y[f] = literal(val, "face weight");
        }
        doc.faces = fw;
    }
    return doc;
}

std::string graph_json(const GraphDoc& doc) {
    const PlabicGraph& g = doc.graph;
    ordered_json j;
    j["rect"] = {{"x0", g.rect().x0.str()}, {"x1", g.rect().x1.str()}, {"y0", g.rect().y0.str()}, {"y1", g.rect().y1.str()}};
    ordered_json vs = ordered_json::array();
    for (const Vertex& v : g.vertices()) {
        ordered_json x = {{"id", v.id}, {"x", point_literal(v.pos.x)}, {"y", point_literal(v.pos.y)}};
        x["color"] = v.kind != VKind::Internal ? "boundary" : v.color == Color::Black ? "black" : "white";
        vs.push_back(std::move(x));
    }
    j["vertices"] = vs;
    ordered_json src = ordered_json::array(), snk = ordered_json::array();
    for (int l = 1; l <= g.n(); ++l) {
        src.push_back(g.vertex(g.source(l)).id);
        snk.push_back(g.vertex(g.sink(l)).id);
    }
    j["sources"] = src;
    j["sinks"] = snk;
    ordered_json es = ordered_json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& x = g.edge(e);
        ordered_json o = {{"u", g.vertex(x.u).id}, {"v", g.vertex(x.v).id}};
        if (!x.via.empty()) {
            ordered_json via = ordered_json::array();
            for (const Point& p : x.via) via.push_back({p.x.str(), p.y.str()});
            o["via"] = via;
        }
        if (doc.orient) o["dir"] = (*doc.orient)[e] ? "u->v" : "v->u";
        if (doc.weights) o["w"] = (*doc.weights)[e].str();
        es.push_back(std::move(o));
    }
    j["edges"] = es;
    if (doc.faces) j["face_weights"] = ordered_json::parse(face_weights_json(g, *doc.faces));
    return j.dump(2) + "\n";
}

std::string graph_json(const PlabicGraph& g) { return graph_json(GraphDoc{g, std::nullopt, std::nullopt, std::nullopt}); }

std::string face_weights_json(const PlabicGraph& g, const FaceWeighting<Scalar>& fw) {
    ordered_json vals = ordered_json::object();
    for (int f = 0; f < g.num_faces(); ++f) {
        if (fw.projective && (f == g.top_face() || f == g.bottom_face())) continue;
        vals[g.faces()[f].id] = fw.y[f].str();
    }
    ordered_json j = {{"mode", fw.projective ? "projective" : "full"}, {"values", vals}};
    return j.dump(2);
}

SMatrix parse_matrix_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        fail("BadJson", e.what());
    }
    const ordered_json& rows = field(j, "entries");
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : rows.size();
    if (!rows.is_array() || rows.size() != n) fail("BadJson", "entries must have n rows");
    SMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) fail("BadJson", "entries must have n columns");
        for (std::size_t c = 0; c < n; ++c) m(i, c) = literal(rows[i][c], "entry");
    }
    return m;
}

std::string matrix_json(const SMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(m(i, c).str());
        rows.push_back(r);
    }
    return ordered_json{{"n", m.rows()}, {"entries", rows}}.dump();
}

Network<Scalar> network_of(const GraphDoc& doc) {
    const PlabicGraph& g = doc.graph;
    std::optional<Orientation> o = doc.orient;
    if (!o || !is_perfect(g, *o)) {
        if (doc.orient && doc.weights) fail("NotPerfect", "the file's orientation is not perfect");
        o = perfect_orientation(g);
        if (!o) fail("NotPerfect", "graph has no perfect orientation");
    }
    if (doc.weights) return {g, *o, *doc.weights};
    if (doc.faces) return edge_weights_from_faces(g, complete(g, *doc.faces), *o);
    return {g, *o, std::vector<Scalar>(g.num_edges(), Scalar(1))};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail("FileError", "cannot write " + path);
    out << text;
}

} // namespace bcnet
