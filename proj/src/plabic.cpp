#include "bcnet/plabic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace bcnet {

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int half_plane(const Scalar& dx, const Scalar& dy) {
    int sy = dy.sign();
    return (sy > 0 || (sy == 0 && dx.sign() > 0)) ? 0 : 1;
}

// Counter-clockwise angular order of direction vectors.
bool angle_less(const Point& a, const Point& b) {
    int ha = half_plane(a.x, a.y), hb = half_plane(b.x, b.y);
    if (ha != hb) return ha < hb;
    return (a.x * b.y - a.y * b.x).sign() > 0;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (cross(a, b, p).sign() != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = cross(a, b, c).sign(), o2 = cross(a, b, d).sign();
    int o3 = cross(c, d, a).sign(), o4 = cross(c, d, b).sign();
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

// Winding number of a closed polygon around p (p off the polygon).
int winding(const std::vector<Point>& poly, const Point& p) {
    int w = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(a, b, p).sign() > 0) ++w;
        } else if (b.y <= p.y && cross(a, b, p).sign() < 0) {
            --w;
        }
    }
    return w;
}

// Segment endpoint identity: vertices are >= 0, via points are encoded negative.
struct Seg {
    int edge;
    Point a, b;
    long ka, kb;
    double x0, x1, y0, y1; // padded bounding box, for cheap rejection
};

Seg make_seg(int edge, const Point& a, const Point& b, long ka, long kb) {
    constexpr double pad = 1e-9;
    double ax = a.x.to_double(), bx = b.x.to_double(), ay = a.y.to_double(), by = b.y.to_double();
    return {edge, a, b, ka, kb, std::min(ax, bx) - pad, std::max(ax, bx) + pad, std::min(ay, by) - pad,
            std::max(ay, by) + pad};
}

} // namespace

PlabicGraph::PlabicGraph(Rect rect, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : rect_(std::move(rect)), vs_(std::move(vertices)), es_(std::move(edges)) {
    validate();
    build_faces();
    mark_midline();
}

int PlabicGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vs_.size(); ++i)
        if (vs_[i].id == id) return static_cast<int>(i);
    fail("UnknownVertex", "no vertex '" + id + "'");
}

int PlabicGraph::face_index(const std::string& id) const {
    auto it = face_ids_.find(id);
    if (it == face_ids_.end()) fail("UnknownFace", "no face '" + id + "'");
    return it->second;
}

void PlabicGraph::validate() {
    const Rect& r = rect_;
    if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) fail("BadGeometry", "degenerate rectangle");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        Vertex& v = vs_[i];
        if (!ids.insert(v.id).second) fail("BadGeometry", "duplicate vertex id '" + v.id + "'");
        bool inside_y = r.y0 < v.pos.y && v.pos.y < r.y1;
        switch (v.kind) {
        case VKind::Source:
            if (v.pos.x != r.x0 || !inside_y) fail("BadGeometry", "source '" + v.id + "' off the left side");
            sources_.push_back(static_cast<int>(i));
            break;
        case VKind::Sink:
            if (v.pos.x != r.x1 || !inside_y) fail("BadGeometry", "sink '" + v.id + "' off the right side");
            sinks_.push_back(static_cast<int>(i));
            break;
        case VKind::Internal:
            if (!(r.x0 < v.pos.x && v.pos.x < r.x1 && inside_y))
                fail("BadGeometry", "vertex '" + v.id + "' not inside the rectangle");
        }
    }
    if (sources_.size() != sinks_.size() || sources_.empty())
        fail("ValencyMismatch", "need equally many sources and sinks, at least one");
    n_ = static_cast<int>(sources_.size());
    auto by_y = [&](int a, int b) { return vs_[a].pos.y < vs_[b].pos.y; };
    for (auto* side : {&sources_, &sinks_}) {
        std::sort(side->begin(), side->end(), by_y);
        for (std::size_t j = 0; j < side->size(); ++j) {
            if (j && vs_[(*side)[j]].pos.y == vs_[(*side)[j - 1]].pos.y)
                fail("BadGeometry", "boundary vertices at equal height");
            vs_[(*side)[j]].label = static_cast<int>(j) + 1;
        }
    }

    std::vector<int> deg(vs_.size(), 0);
    for (const Edge& e : es_) {
        if (e.u < 0 || e.v < 0 || e.u >= static_cast<int>(vs_.size()) || e.v >= static_cast<int>(vs_.size()))
            fail("BadGeometry", "edge endpoint out of range");
        if (e.u == e.v) fail("SelfLoop", "self-loop at '" + vs_[e.u].id + "'");
        ++deg[e.u];
        ++deg[e.v];
        for (const Point& p : e.via)
            if (!(r.x0 < p.x && p.x < r.x1 && r.y0 < p.y && p.y < r.y1))
                fail("BadGeometry", "edge bend outside the rectangle");
    }
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        if (vs_[i].kind != VKind::Internal && deg[i] != 1)
            fail("NotUnivalent", "boundary vertex '" + vs_[i].id + "' must be univalent");
        if (deg[i] == 0) fail("NotConnected", "isolated vertex '" + vs_[i].id + "'");
    }

    // planarity of the straight-line (polyline) drawing
    std::vector<Seg> segs;
    long via_key = -1;
    for (int ei = 0; ei < num_edges(); ++ei) {
        const Edge& e = es_[ei];
        std::vector<std::pair<Point, long>> pts{{vs_[e.u].pos, e.u}};
        for (const Point& p : e.via) pts.push_back({p, via_key--});
        pts.push_back({vs_[e.v].pos, e.v});
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            if (pts[k].first == pts[k + 1].first) fail("NonPlanarEmbedding", "zero-length edge segment");
            segs.push_back(make_seg(ei, pts[k].first, pts[k + 1].first, pts[k].second, pts[k + 1].second));
        }
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            if (s.x1 < t.x0 || t.x1 < s.x0 || s.y1 < t.y0 || t.y1 < s.y0) continue;
            long shared = -1;
            int nshared = 0;
            for (long ks : {s.ka, s.kb})
                for (long kt : {t.ka, t.kb})
                    if (ks == kt) {
                        shared = ks;
                        ++nshared;
                    }
            if (nshared == 0) {
                if (segments_intersect(s.a, s.b, t.a, t.b))
                    fail("NonPlanarEmbedding", "edges cross or touch away from vertices");
                continue;
            }
            if (nshared == 2) fail("NonPlanarEmbedding", "two edges drawn on the same segment");
            const Point& p = s.ka == shared ? s.a : s.b;
            const Point& q1 = s.ka == shared ? s.b : s.a;
            const Point& q2 = t.ka == shared ? t.b : t.a;
            Scalar cr = cross(p, q1, q2);
            Scalar dot = (q1.x - p.x) * (q2.x - p.x) + (q1.y - p.y) * (q2.y - p.y);
            if (cr.is_zero() && dot.sign() > 0) fail("NonPlanarEmbedding", "overlapping edges");
        }
}

void PlabicGraph::build_faces() {
    const int V = static_cast<int>(vs_.size());
    const int E = num_edges();
    std::vector<Point> pts;
    for (const auto& v : vs_) pts.push_back(v.pos);
    pts.push_back({rect_.x0, rect_.y0});
    pts.push_back({rect_.x1, rect_.y0});
    pts.push_back({rect_.x1, rect_.y1});
    pts.push_back({rect_.x0, rect_.y1});

    // Virtual rectangle edges, directed counter-clockwise.
    struct VEdge {
        int a, b;
        Side side;
        int index;
    };
    std::vector<VEdge> ve;
    ve.push_back({V, V + 1, Side::Bottom, 0});
    {
        int prev = V + 1;
        for (int j = 0; j < n_; ++j) {
            ve.push_back({prev, sinks_[j], Side::Right, j});
            prev = sinks_[j];
        }
        ve.push_back({prev, V + 2, Side::Right, n_});
    }
    ve.push_back({V + 2, V + 3, Side::Top, 0});
    {
        int prev = V + 3;
        for (int j = n_ - 1; j >= 0; --j) {
            ve.push_back({prev, sources_[j], Side::Left, j + 1});
            prev = sources_[j];
        }
        ve.push_back({prev, V, Side::Left, 0});
    }
    const int K = static_cast<int>(ve.size());
    const int D = 2 * (E + K);

    auto dtail = [&](int d) {
        int e = d / 2;
        if (e < E) return d % 2 ? es_[e].v : es_[e].u;
        return d % 2 ? ve[e - E].b : ve[e - E].a;
    };
    auto dhead = [&](int d) { return dtail(d ^ 1); };
    // Point right after the tail along the dart.
    auto first_step = [&](int d) -> Point {
        int e = d / 2;
        if (e < E && !es_[e].via.empty()) return d % 2 ? es_[e].via.back() : es_[e].via.front();
        return pts[dhead(d)];
    };

    std::vector<std::vector<int>> rot(V + 4);
    for (int d = 0; d < D; ++d) rot[dtail(d)].push_back(d);
    std::vector<int> pos(D);
    for (int v = 0; v < V + 4; ++v) {
        const Point& o = pts[v];
        auto dir = [&](int d) {
            Point s = first_step(d);
            return Point{s.x - o.x, s.y - o.y};
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle_less(dir(a), dir(b)); });
        for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
        // boundary vertices must send their edge into the rectangle
        if (v < V && vs_[v].kind != VKind::Internal) {
            for (int d : rot[v])
                if (d / 2 < E) {
                    Scalar dx = dir(d).x;
                    if ((vs_[v].kind == VKind::Source && dx.sign() <= 0) ||
                        (vs_[v].kind == VKind::Sink && dx.sign() >= 0))
                        fail("NonPlanarEmbedding", "boundary edge runs outside or along the side");
                }
        }
    }
    rot_.assign(V, {});
    for (int v = 0; v < V; ++v)
        for (int d : rot[v])
            if (d / 2 < E) rot_[v].push_back(d);

    auto next = [&](int d) {
        int h = dhead(d);
        int r = d ^ 1;
        int deg = static_cast<int>(rot[h].size());
        return rot[h][(pos[r] - 1 + deg) % deg];
    };

    // connectivity of graph plus rectangle
    {
        std::vector<bool> seen(V + 4, false);
        std::vector<int> stack{V};
        seen[V] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : rot[v]) {
                int h = dhead(d);
                if (!seen[h]) {
                    seen[h] = true;
                    ++count;
                    stack.push_back(h);
                }
            }
        }
        if (count != V + 4) fail("NotConnected", "graph together with the rectangle is disconnected");
    }

    std::vector<int> orbit(D, -1);
    int norbits = 0;
    std::vector<std::vector<int>> orbits;
    for (int d0 = 0; d0 < D; ++d0) {
        if (orbit[d0] >= 0) continue;
        std::vector<int> cyc;
        int d = d0;
        do {
            if (orbit[d] >= 0) fail("NonPlanarEmbedding", "inconsistent rotation system");
            orbit[d] = norbits;
            cyc.push_back(d);
            d = next(d);
        } while (d != d0);
        orbits.push_back(std::move(cyc));
        ++norbits;
    }
    if ((V + 4) - (E + K) + norbits != 2) fail("NonPlanarEmbedding", "Euler characteristic check failed");
    const int outer = orbit[2 * E + 1];
    for (int k = 0; k < K; ++k)
        if (orbit[2 * (E + k) + 1] != outer) fail("NonPlanarEmbedding", "rectangle is not the outer face");

    dart_face_.assign(2 * E, -1);
    std::vector<int> face_of_orbit(norbits, -1);
    for (int o = 0; o < norbits; ++o) {
        if (o == outer) continue;
        Face f;
        for (int d : orbits[o]) {
            int e = d / 2;
            f.polygon.push_back(pts[dtail(d)]);
            if (e < E) {
                f.darts.push_back(d);
                const auto& via = es_[e].via;
                if (d % 2 == 0) f.polygon.insert(f.polygon.end(), via.begin(), via.end());
                else f.polygon.insert(f.polygon.end(), via.rbegin(), via.rend());
            } else {
                const VEdge& v = ve[e - E];
                f.sides.push_back({v.side, v.index});
                if (v.side == Side::Top) f.is_top = true;
                if (v.side == Side::Bottom) f.is_bottom = true;
            }
        }
        if (f.darts.empty()) fail("NotConnected", "face without graph edges");
        // canonical id: least rotation of the signed edge cycle
        std::vector<std::pair<int, int>> tok;
        for (int d : f.darts) tok.push_back({d / 2, d % 2});
        auto best = tok;
        for (std::size_t s = 1; s < tok.size(); ++s) {
            std::vector<std::pair<int, int>> rotd(tok.begin() + s, tok.end());
            rotd.insert(rotd.end(), tok.begin(), tok.begin() + s);
            best = std::min(best, rotd);
        }
        for (std::size_t i = 0; i < best.size(); ++i) {
            if (i) f.id += '.';
            f.id += std::to_string(best[i].first) + (best[i].second ? '-' : '+');
        }
        int idx = static_cast<int>(faces_.size());
        face_of_orbit[o] = idx;
        for (int d : f.darts) dart_face_[d] = idx;
        if (f.is_top) top_ = idx;
        if (f.is_bottom) bottom_ = idx;
        face_ids_[f.id] = idx;
        faces_.push_back(std::move(f));
    }
}

int PlabicGraph::locate(const Point& p) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (winding(faces_[i].polygon, p) != 0) return static_cast<int>(i);
    return -1;
}

void PlabicGraph::mark_midline() {
    const Scalar m = rect_.midline();
    std::vector<Scalar> cuts{rect_.x0, rect_.x1};
    std::vector<std::pair<Scalar, Scalar>> covered;
    for (const Edge& e : es_) {
        std::vector<Point> pl{vs_[e.u].pos};
        pl.insert(pl.end(), e.via.begin(), e.via.end());
        pl.push_back(vs_[e.v].pos);
        for (std::size_t k = 0; k + 1 < pl.size(); ++k) {
            const Point& a = pl[k];
            const Point& b = pl[k + 1];
            if (a.y == m && b.y == m) {
                cuts.push_back(a.x);
                cuts.push_back(b.x);
                covered.push_back({std::min(a.x, b.x), std::max(a.x, b.x)});
            } else if (((a.y - m) * (b.y - m)).sign() <= 0) {
                cuts.push_back(a.x + (m - a.y) * (b.x - a.x) / (b.y - a.y));
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar& lo = cuts[i];
        const Scalar& hi = cuts[i + 1];
        if (lo < rect_.x0 || hi > rect_.x1) continue;
        bool on_edge = std::any_of(covered.begin(), covered.end(),
                                   [&](const auto& c) { return c.first <= lo && hi <= c.second; });
        if (on_edge) continue;
        int f = locate({(lo + hi) / Scalar(2), m});
        if (f >= 0) faces_[f].touches_midline = true;
    }
}

PlabicGraph identity_graph(int n, Scalar width) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) {
        vs.push_back({"s" + std::to_string(i), {Scalar(0), Scalar(i)}, VKind::Source});
        vs.push_back({"t" + std::to_string(i), {width, Scalar(i)}, VKind::Sink});
        es.push_back({2 * i - 2, 2 * i - 1, {}});
    }
    return PlabicGraph({Scalar(0), width, Scalar(0), Scalar(n + 1)}, vs, es);
}

PlabicGraph reflect(const PlabicGraph& g) {
    const Scalar s = g.rect().y0 + g.rect().y1;
    auto vs = g.vertices();
    auto es = g.edges();
    for (auto& v : vs) v.pos.y = s - v.pos.y;
    for (auto& e : es)
        for (auto& p : e.via) p.y = s - p.y;
    return PlabicGraph(g.rect(), vs, es);
}

PlabicGraph recolor(const PlabicGraph& g) {
    auto vs = g.vertices();
    for (auto& v : vs)
        if (v.kind == VKind::Internal) v.color = flip(v.color);
    return PlabicGraph(g.rect(), vs, g.edges());
}

PlabicGraph translate(const PlabicGraph& g, const Scalar& dx) {
    auto vs = g.vertices();
    auto es = g.edges();
    for (auto& v : vs) v.pos.x += dx;
    for (auto& e : es)
        for (auto& p : e.via) p.x += dx;
    Rect r = g.rect();
    r.x0 += dx;
    r.x1 += dx;
    return PlabicGraph(r, vs, es);
}

std::optional<std::vector<int>> isomorphism(const PlabicGraph& a, const PlabicGraph& b) {
    if (a.n() != b.n() || a.vertices().size() != b.vertices().size() || a.num_edges() != b.num_edges())
        return std::nullopt;
    const int D = 2 * a.num_edges();
    std::vector<int> dmap(D, -1), vmap(a.vertices().size(), -1);
    std::deque<std::pair<int, int>> queue;
    for (int i = 1; i <= a.n(); ++i) {
        queue.push_back({a.rotation(a.source(i))[0], b.rotation(b.source(i))[0]});
        queue.push_back({a.rotation(a.sink(i))[0], b.rotation(b.sink(i))[0]});
    }
    auto compatible = [&](int va, int vb) {
        const Vertex& x = a.vertex(va);
        const Vertex& y = b.vertex(vb);
        if (x.kind != y.kind) return false;
        if (x.kind == VKind::Internal) return x.color == y.color && a.rotation(va).size() == b.rotation(vb).size();
        return x.label == y.label;
    };
    auto bind = [&](int va, int vb) {
        if (vmap[va] == -1) {
            if (!compatible(va, vb)) return false;
            vmap[va] = vb;
        }
        return vmap[va] == vb;
    };
    while (!queue.empty()) {
        auto [da, db] = queue.front();
        queue.pop_front();
        if (dmap[da] != -1) {
            if (dmap[da] != db) return std::nullopt;
            continue;
        }
        if (!bind(a.tail(da), b.tail(db)) || !bind(a.head(da), b.head(db))) return std::nullopt;
        dmap[da] = db;
        dmap[da ^ 1] = db ^ 1;
        for (int side = 0; side < 2; ++side) {
            int xa = side ? da : da ^ 1; // dart leaving the vertex we rotate around
            int xb = side ? db : db ^ 1;
            int va = a.tail(xa), vb = b.tail(xb);
            const auto& ra = a.rotation(va);
            const auto& rb = b.rotation(vb);
            if (ra.size() != rb.size()) return std::nullopt;
            int ia = static_cast<int>(std::find(ra.begin(), ra.end(), xa) - ra.begin());
            int ib = static_cast<int>(std::find(rb.begin(), rb.end(), xb) - rb.begin());
            int deg = static_cast<int>(ra.size());
            for (int k = 1; k < deg; ++k) queue.push_back({ra[(ia + k) % deg], rb[(ib + k) % deg]});
        }
    }
    for (int d : dmap)
        if (d == -1) return std::nullopt;
    return dmap;
}

Glue glue(const PlabicGraph& g1, const PlabicGraph& g2in) {
    if (g1.n() != g2in.n()) fail("ValencyMismatch", "concatenation needs equal valency");
    for (int i = 1; i <= g1.n(); ++i)
        if (g1.vertex(g1.sink(i)).pos.y != g2in.vertex(g2in.source(i)).pos.y)
            fail("GeometryMismatch", "sinks and sources are at different heights");
    const PlabicGraph g2 = translate(g2in, g1.rect().x1 - g2in.rect().x0);

    std::vector<Vertex> vs;
    std::set<std::string> used;
    std::vector<int> m1(g1.vertices().size(), -1), m2(g2.vertices().size(), -1);
    for (std::size_t i = 0; i < g1.vertices().size(); ++i) {
        if (g1.vertex(i).kind == VKind::Sink) continue;
        m1[i] = static_cast<int>(vs.size());
        vs.push_back(g1.vertex(i));
        used.insert(vs.back().id);
    }
    int suffix = 0;
    for (std::size_t i = 0; i < g2.vertices().size(); ++i) {
        if (g2.vertex(i).kind == VKind::Source) continue;
        Vertex v = g2.vertex(i);
        std::string base = v.id;
        while (used.count(v.id)) v.id = base + "_" + std::to_string(++suffix);
        used.insert(v.id);
        m2[i] = static_cast<int>(vs.size());
        vs.push_back(v);
    }

    std::vector<Edge> es;
    std::vector<std::pair<int, bool>> e1(g1.num_edges()), e2(g2.num_edges());
    for (int e = 0; e < g1.num_edges(); ++e) {
        const Edge& ed = g1.edge(e);
        if (g1.vertex(ed.u).kind == VKind::Sink || g1.vertex(ed.v).kind == VKind::Sink) continue;
        e1[e] = {static_cast<int>(es.size()), true};
        es.push_back({m1[ed.u], m1[ed.v], ed.via});
    }
    for (int e = 0; e < g2.num_edges(); ++e) {
        const Edge& ed = g2.edge(e);
        if (g2.vertex(ed.u).kind == VKind::Source || g2.vertex(ed.v).kind == VKind::Source) continue;
        e2[e] = {static_cast<int>(es.size()), true};
        es.push_back({m2[ed.u], m2[ed.v], ed.via});
    }
    for (int i = 1; i <= g1.n(); ++i) {
        int t = g1.sink(i), s = g2.source(i);
        int a_e = g1.boundary_edge(t), b_e = g2.boundary_edge(s);
        const Edge& ea = g1.edge(a_e);
        const Edge& eb = g2.edge(b_e);
        bool a_fwd = ea.v == t; // edge a drawn towards the sink
        bool b_fwd = eb.u == s; // edge b drawn away from the source
        int a = a_fwd ? ea.u : ea.v;
        int b = b_fwd ? eb.v : eb.u;
        Edge merged{m1[a], m2[b], {}};
        if (a_fwd) merged.via = ea.via;
        else merged.via.assign(ea.via.rbegin(), ea.via.rend());
        merged.via.push_back(g1.vertex(t).pos);
        if (b_fwd) merged.via.insert(merged.via.end(), eb.via.begin(), eb.via.end());
        else merged.via.insert(merged.via.end(), eb.via.rbegin(), eb.via.rend());
        int ne = static_cast<int>(es.size());
        es.push_back(std::move(merged));
        e1[a_e] = {ne, a_fwd};
        e2[b_e] = {ne, b_fwd};
    }

    Rect r{g1.rect().x0, g2.rect().x1, std::min(g1.rect().y0, g2.rect().y0), std::max(g1.rect().y1, g2.rect().y1)};
    Glue out{PlabicGraph(r, vs, es), e1, e2, {}, {}};
    auto faces = [&](const PlabicGraph& g, const std::vector<std::pair<int, bool>>& em, std::vector<int>& fm) {
        for (const Face& f : g.faces()) {
            int d = f.darts.front();
            auto [ne, same] = em[edge_of(d)];
            bool rev = (d % 2 == 1) == same;
            fm.push_back(out.graph.face_left(dart_of(ne, rev)));
        }
    };
    faces(g1, e1, out.left_faces);
    faces(g2, e2, out.right_faces);
    return out;
}

PeelPlan peel_plan(const PlabicGraph& g) {
    const int V = static_cast<int>(g.vertices().size());
    const int E = g.num_edges();
    PeelPlan plan;
    std::vector<bool> reached(V, false), known(E, false);
    std::deque<int> bfs;
    for (int v = 0; v < V; ++v)
        if (g.is_boundary(v)) {
            reached[v] = true;
            bfs.push_back(v);
        }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int d : g.rotation(v)) {
            int h = g.head(d);
            if (reached[h]) continue;
            reached[h] = true;
            known[edge_of(d)] = true;
            plan.tree.push_back(edge_of(d));
            bfs.push_back(h);
        }
    }
    const int F = g.num_faces();
    auto unknown_in = [&](int f) {
        std::vector<int> out;
        for (int d : g.faces()[f].darts)
            if (!known[edge_of(d)]) out.push_back(edge_of(d));
        return out;
    };
    std::vector<bool> done(F, false);
    std::deque<int> queue;
    for (int f = 0; f < F; ++f)
        if (unknown_in(f).size() == 1) queue.push_back(f);
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        if (done[f]) continue;
        auto u = unknown_in(f);
        if (u.size() != 1) continue;
        int e = u[0];
        plan.steps.push_back({f, e});
        known[e] = true;
        done[f] = true;
        for (int d : {dart_of(e, false), dart_of(e, true)}) {
            int h = g.face_left(d);
            if (!done[h] && unknown_in(h).size() == 1) queue.push_back(h);
        }
    }
    for (int e = 0; e < E; ++e)
        if (!known[e]) fail("NonPlanarEmbedding", "face peeling did not reach every edge");
    for (int f = 0; f < F; ++f)
        if (!done[f]) {
            if (plan.check_face != -1) fail("NonPlanarEmbedding", "face peeling left several faces");
            plan.check_face = f;
        }
    return plan;
}

bool is_perfect(const PlabicGraph& g, const Orientation& o) {
    if (static_cast<int>(o.size()) != g.num_edges()) return false;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        int in = 0, out = 0;
        for (int d : g.rotation(static_cast<int>(v))) {
            if (forward_dart(o, edge_of(d)) == d) ++out;
            else ++in;
        }
        const Vertex& x = g.vertex(static_cast<int>(v));
        switch (x.kind) {
        case VKind::Source: if (out != 1) return false; break;
        case VKind::Sink: if (in != 1) return false; break;
        case VKind::Internal:
            if (x.color == Color::White && in != 1) return false;
            if (x.color == Color::Black && out != 1) return false;
        }
    }
    return true;
}

std::vector<Orientation> perfect_orientations(const PlabicGraph& g, std::size_t limit) {
    const int V = static_cast<int>(g.vertices().size());
    const int E = g.num_edges();
    // edge order: breadth-first from the boundary, so constraints bite early
    std::vector<int> order;
    {
        std::vector<bool> seen_e(E, false), seen_v(V, false);
        std::deque<int> q;
        for (int i = 1; i <= g.n(); ++i) {
            q.push_back(g.source(i));
            seen_v[g.source(i)] = true;
        }
        for (int i = 1; i <= g.n(); ++i) {
            q.push_back(g.sink(i));
            seen_v[g.sink(i)] = true;
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int d : g.rotation(v)) {
                int e = edge_of(d);
                if (!seen_e[e]) {
                    seen_e[e] = true;
                    order.push_back(e);
                }
                if (!seen_v[g.head(d)]) {
                    seen_v[g.head(d)] = true;
                    q.push_back(g.head(d));
                }
            }
        }
    }
    std::vector<int> in(V, 0), out(V, 0), free(V, 0);
    for (int v = 0; v < V; ++v) free[v] = static_cast<int>(g.rotation(v).size());
    auto ok = [&](int v) {
        const Vertex& x = g.vertex(v);
        switch (x.kind) {
        case VKind::Source: return in[v] == 0;
        case VKind::Sink: return out[v] == 0;
        case VKind::Internal:
            if (x.color == Color::White) return in[v] <= 1 && in[v] + free[v] >= 1;
            return out[v] <= 1 && out[v] + free[v] >= 1;
        }
        return false;
    };
    std::vector<Orientation> result;
    Orientation cur(E, true);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (limit && result.size() >= limit) return;
        if (k == order.size()) {
            result.push_back(cur);
            return;
        }
        int e = order[k];
        int u = g.edge(e).u, v = g.edge(e).v;
        for (bool fwd : {true, false}) {
            int from = fwd ? u : v, to = fwd ? v : u;
            --free[u];
            --free[v];
            ++out[from];
            ++in[to];
            cur[e] = fwd;
            if (ok(u) && ok(v)) rec(k + 1);
            ++free[u];
            ++free[v];
            --out[from];
            --in[to];
        }
    };
    rec(0);
    return result;
}

std::optional<Orientation> perfect_orientation(const PlabicGraph& g) {
    auto all = perfect_orientations(g, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool nondegenerate(const PlabicGraph& g) {
    if (!perfect_orientation(g)) fail("NotPerfectlyOrientable", "graph has no perfect orientation");
    return perfect_orientation(recolor(g)).has_value();
}

FaceWeighting<Scalar> evaluate(const FaceWeighting<Expr>& fw, const Env& env) {
    FaceWeighting<Scalar> out{fw.projective, {}};
    for (const Expr& y : fw.y) out.y.push_back(eval(y, env));
    return out;
}

FaceWeighting<Scalar> random_weighting(const PlabicGraph& g, std::mt19937_64& rng, bool positive, long bound) {
    FaceWeighting<Scalar> fw{false, {}};
    Scalar prod(1);
    for (int f = 0; f + 1 < g.num_faces(); ++f) {
        fw.y.push_back(random_rational(rng, bound, positive));
        prod *= fw.y.back();
    }
    fw.y.push_back(prod.inverse());
    return fw;
}

} // namespace bcnet
