#include "bcnet/measure.hpp"

#include "bcnet/lie.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cmath>
#include <functional>
#include <map>

namespace bcnet {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Cycle {
    std::vector<int> edges;
    Bits verts;
};

struct Digraph {
    std::vector<std::vector<std::pair<int, int>>> out; // (edge, head)
};

Digraph directed(const PlabicGraph& g, const Orientation& o) {
    Digraph d;
    d.out.resize(g.vertices().size());
    for (int e = 0; e < g.num_edges(); ++e) {
        int fd = forward_dart(o, e);
        d.out[g.tail(fd)].push_back({e, g.head(fd)});
    }
    return d;
}

std::vector<Cycle> simple_cycles(const Digraph& d) {
    const int V = static_cast<int>(d.out.size());
    std::vector<Cycle> out;
    std::vector<int> path;
    Bits on(V);
    for (int s = 0; s < V; ++s) {
        std::function<void(int)> dfs = [&](int v) {
            for (auto [e, h] : d.out[v]) {
                if (h == s) {
                    Cycle c{path, on};
                    c.edges.push_back(e);
                    out.push_back(std::move(c));
                } else if (h > s && !on[h]) {
                    on[h] = true;
                    path.push_back(e);
                    dfs(h);
                    path.pop_back();
                    on[h] = false;
                }
            }
        };
        on[s] = true;
        dfs(s);
        on[s] = false;
    }
    return out;
}

// All families of pairwise vertex-disjoint cycles avoiding `blocked`.
void cycle_families(const std::vector<Cycle>& cycles, std::size_t from, Bits& used, std::vector<int>& edges,
                    std::vector<std::vector<int>>& out) {
    out.push_back(edges);
    for (std::size_t c = from; c < cycles.size(); ++c) {
        if (cycles[c].verts.intersects(used)) continue;
        used |= cycles[c].verts;
        std::size_t mark = edges.size();
        edges.insert(edges.end(), cycles[c].edges.begin(), cycles[c].edges.end());
        cycle_families(cycles, c + 1, used, edges, out);
        edges.resize(mark);
        used -= cycles[c].verts;
    }
}

} // namespace

FlowTable flow_table(const PlabicGraph& g, const Orientation& o) {
    const int V = static_cast<int>(g.vertices().size());
    Digraph d = directed(g, o);
    std::vector<Cycle> cycles = simple_cycles(d);

    FlowTable ft;
    ft.n = g.n();
    {
        Bits used(V);
        std::vector<int> edges;
        cycle_families(cycles, 0, used, edges, ft.denominator);
    }
    ft.numerator.assign(ft.n, std::vector<std::vector<std::vector<int>>>(ft.n));
    std::vector<int> sink_label(V, 0);
    for (int j = 1; j <= ft.n; ++j) sink_label[g.sink(j)] = j;

    for (int i = 1; i <= ft.n; ++i) {
        Bits on(V);
        std::vector<int> path;
        std::function<void(int)> dfs = [&](int v) {
            if (sink_label[v]) {
                auto& bucket = ft.numerator[i - 1][sink_label[v] - 1];
                Bits used = on;
                std::vector<int> edges = path;
                cycle_families(cycles, 0, used, edges, bucket);
                return;
            }
            for (auto [e, h] : d.out[v]) {
                if (on[h]) continue;
                on[h] = true;
                path.push_back(e);
                dfs(h);
                path.pop_back();
                on[h] = false;
            }
        };
        int s = g.source(i);
        on[s] = true;
        dfs(s);
    }
    return ft;
}

FaceMeasure::FaceMeasure(const PlabicGraph& g) : g_(g) {
    auto o = perfect_orientation(g);
    if (!o) fail("NoPerfectOrientation", "graph has no perfect orientation");
    o_ = *o;
    table_ = flow_table(g_, o_);
}

FaceMeasure::FaceMeasure(const PlabicGraph& g, const Orientation& o) : g_(g), o_(o) {
    if (!is_perfect(g, o)) fail("NotPerfect", "orientation is not perfect");
    table_ = flow_table(g_, o_);
}

namespace {

struct Dir {
    double x, y;
};

double turn(const Dir& a, const Dir& b) { return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y); }

} // namespace

std::vector<std::vector<double>> meas_series_oracle(const Network<Scalar>& net, int maxlen) {
    const PlabicGraph& g = net.graph;
    const int n = g.n();
    const double two_pi = 2 * std::acos(-1.0);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));

    // per forward dart: turning inside the polyline, first and last segment directions
    struct Step {
        int head;
        double inner;
        Dir first, last;
        double w;
    };
    std::vector<std::vector<Step>> out(g.vertices().size());
    for (int e = 0; e < g.num_edges(); ++e) {
        int d = forward_dart(net.orient, e);
        std::vector<Point> pts{g.vertex(g.tail(d)).pos};
        const auto& via = g.edge(e).via;
        if (d % 2 == 0) pts.insert(pts.end(), via.begin(), via.end());
        else pts.insert(pts.end(), via.rbegin(), via.rend());
        pts.push_back(g.vertex(g.head(d)).pos);
        std::vector<Dir> segs;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k)
            segs.push_back({(pts[k + 1].x - pts[k].x).to_double(), (pts[k + 1].y - pts[k].y).to_double()});
        double inner = 0;
        for (std::size_t k = 0; k + 1 < segs.size(); ++k) inner += turn(segs[k], segs[k + 1]);
        out[g.tail(d)].push_back({g.head(d), inner, segs.front(), segs.back(), net.weight[e].to_double()});
    }
    std::vector<int> sink_label(g.vertices().size(), 0);
    for (int j = 1; j <= n; ++j) sink_label[g.sink(j)] = j;

    const Dir right{1, 0};
    for (int i = 1; i <= n; ++i) {
        // state: (vertex, incoming direction index via last step, turning bucket) -> weight
        struct State {
            int v;
            Dir in;
            double turning;
            double w;
        };
        std::map<std::tuple<int, long, long, long>, State> cur;
        auto key = [](int v, const Dir& in, double t) {
            return std::make_tuple(v, std::lround(in.x * 1e6), std::lround(in.y * 1e6), std::lround(t * 1e6));
        };
        State s0{g.source(i), right, 0.0, 1.0};
        cur.emplace(key(s0.v, s0.in, 0.0), s0);
        for (int len = 0; len < maxlen && !cur.empty(); ++len) {
            std::map<std::tuple<int, long, long, long>, State> nxt;
            for (const auto& [k, st] : cur) {
                for (const Step& step : out[st.v]) {
                    double t = st.turning + turn(st.in, step.first) + step.inner;
                    double w = st.w * step.w;
                    if (sink_label[step.head]) {
                        double total = t + turn(step.last, right);
                        long wind = std::lround(total / two_pi);
                        a[i - 1][sink_label[step.head] - 1] += (wind % 2 ? -1.0 : 1.0) * w;
                        continue;
                    }
                    auto kk = key(step.head, step.last, t);
                    auto it = nxt.find(kk);
                    if (it == nxt.end()) nxt.emplace(kk, State{step.head, step.last, t, w});
                    else it->second.w += w;
                }
            }
            cur = std::move(nxt);
        }
    }
    return a;
}

SMatrix grassmann_meas(const Network<Scalar>& net) {
    const int n = net.graph.n();
    SMatrix a = meas(net);
    SMatrix left = d_form(n) * w0_form(n) * a;
    SMatrix out(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out(i, j) = left(i, j);
        out(i, n + i) = Scalar(1);
    }
    return out;
}

} // namespace bcnet
