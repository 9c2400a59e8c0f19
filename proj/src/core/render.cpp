// Copyright 2026 The Pastel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

namespace pastel {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

// TikZ node names may not contain punctuation.
std::string tikz_id(const std::string& prefix, int i) {
    return prefix + std::to_string(i);
}

std::string tikz_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

// Corner points of the polyline drawing of an edge.
std::vector<std::pair<double, double>> edge_points(const PlaneGraph& g, const Layout& l, int e) {
    const int u = g.src(e), w = g.dst(e);
    const double ye = l.edge_y[e];
    std::vector<std::pair<double, double>> pts{{l.vertex_x[u], l.vertex_y[u]}};
    if (ye != l.vertex_y[u] || ye != l.vertex_y[w]) {
        pts.emplace_back(l.vertex_x[u] + 0.3, ye);
        pts.emplace_back(l.vertex_x[w] - 0.3, ye);
    }
    pts.emplace_back(l.vertex_x[w], l.vertex_y[w]);
    return pts;
}

} // namespace

Layout layout_graph(const PlaneGraph& g) {
    g.globular();
    Layout l;
    const int nv = g.num_vertices();
    l.vertex_x.assign(nv, 0);
    for (int v : g.topo_order()) {
        for (int e = 0; e < g.num_edges(); ++e) {
            if (g.dst(e) == v) {
                l.vertex_x[v] = std::max(l.vertex_x[v], l.vertex_x[g.src(e)] + 1);
            }
        }
    }
    const int nf = static_cast<int>(g.faces().size());
    std::vector<int> depth(nf, -1);
    std::function<int(int)> face_depth = [&](int f) -> int {
        if (g.faces()[f].exterior) {
            return 0;
        }
        if (depth[f] >= 0) {
            return depth[f];
        }
        int d = 0;
        for (int e : g.faces()[f].dom) {
            d = std::max(d, face_depth(g.face_above(e)));
        }
        return depth[f] = d + 1;
    };
    l.edge_y.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        l.edge_y[e] = face_depth(g.face_above(e));
    }
    l.vertex_y.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        double lo = 1e9, hi = -1e9;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (g.src(e) == v || g.dst(e) == v) {
                lo = std::min(lo, l.edge_y[e]);
                hi = std::max(hi, l.edge_y[e]);
            }
        }
        l.vertex_y[v] = lo <= hi ? (lo + hi) / 2 : 0;
    }
    l.face_x.assign(nf, 0);
    l.face_y.assign(nf, 0);
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        double sum = 0;
        for (int e : phi.dom) {
            sum += (l.vertex_x[g.src(e)] + l.vertex_x[g.dst(e)]) / 2;
        }
        for (int e : phi.cod) {
            sum += (l.vertex_x[g.src(e)] + l.vertex_x[g.dst(e)]) / 2;
        }
        l.face_x[f] = sum / static_cast<double>(phi.dom.size() + phi.cod.size());
        l.face_y[f] = face_depth(f) - 0.5;
    }
    return l;
}

std::string graph_to_dot(const PlaneGraph& g) {
    Layout l = layout_graph(g);
    std::ostringstream out;
    out << "digraph " << dot_quote(g.name()) << " {\n";
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  v" << v << " [label=" << dot_quote(g.vertex_name(v)) << ", pos=\""
            << num(l.vertex_x[v] * 1.5) << "," << num(-l.vertex_y[v]) << "!\"];\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        out << "  v" << g.src(e) << " -> v" << g.dst(e) << " [label=" << dot_quote(g.edge_name(e))
            << "];\n";
    }
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        out << "  // face " << phi.name << ": " << g.path_to_string(phi.dom) << " => "
            << g.path_to_string(phi.cod) << "\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_tikz(const PlaneGraph& g) {
    Layout l = layout_graph(g);
    std::ostringstream out;
    out << "\\begin{tikzpicture}[x=1.5cm, y=-1cm, >=stealth]\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  \\node[circle, draw, inner sep=1pt] (" << tikz_id("v", v) << ") at ("
            << num(l.vertex_x[v]) << ", " << num(l.vertex_y[v]) << ") {$"
            << tikz_text(g.vertex_name(v)) << "$};\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        auto pts = edge_points(g, l, e);
        out << "  \\draw[->] (" << tikz_id("v", g.src(e)) << ")";
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            out << " -- (" << num(pts[i].first) << ", " << num(pts[i].second) << ")";
            if (i == 1) {
                out << " node[midway, above, font=\\scriptsize] {$" << tikz_text(g.edge_name(e))
                    << "$}";
            }
        }
        out << " -- (" << tikz_id("v", g.dst(e)) << ")";
        if (pts.size() == 2) {
            out << " node[midway, above, font=\\scriptsize] {$" << tikz_text(g.edge_name(e))
                << "$}";
        }
        out << ";\n";
    }
    for (int f : g.interior_faces()) {
        out << "  \\node at (" << num(l.face_x[f]) << ", " << num(l.face_y[f]) << ") {$\\Downarrow "
            << tikz_text(g.faces()[f].name) << "$};\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

std::string graph_to_svg(const PlaneGraph& g) {
    Layout l = layout_graph(g);
    const double sx = 90, sy = 60, pad = 30;
    double w = 0, h = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        w = std::max(w, l.vertex_x[v]);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        h = std::max(h, l.edge_y[e]);
    }
    auto px = [&](double x) { return num(pad + x * sx); };
    auto py = [&](double y) { return num(pad + y * sy); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * pad + w * sx)
        << "\" height=\"" << num(2 * pad + h * sy) << "\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/>"
           "</marker></defs>\n";
    out << "  <title>" << xml_escape(g.name()) << "</title>\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        auto pts = edge_points(g, l, e);
        out << "  <polyline fill=\"none\" stroke=\"black\" marker-end=\"url(#arrow)\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out << (i ? " " : "") << px(pts[i].first) << "," << py(pts[i].second);
        }
        out << "\"/>\n";
        const auto& mid = pts[pts.size() / 2 - 1];
        const auto& next = pts[pts.size() / 2];
        out << "  <text font-size=\"11\" text-anchor=\"middle\" x=\""
            << px((mid.first + next.first) / 2) << "\" y=\"" << py((mid.second + next.second) / 2 - 0.1)
            << "\">" << xml_escape(g.edge_name(e)) << "</text>\n";
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  <circle cx=\"" << px(l.vertex_x[v]) << "\" cy=\"" << py(l.vertex_y[v])
            << "\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n";
        out << "  <text font-size=\"11\" text-anchor=\"middle\" x=\"" << px(l.vertex_x[v])
            << "\" y=\"" << num(pad + l.vertex_y[v] * sy + 4) << "\">"
            << xml_escape(g.vertex_name(v)) << "</text>\n";
    }
    for (int f : g.interior_faces()) {
        out << "  <text font-size=\"12\" font-style=\"italic\" text-anchor=\"middle\" x=\""
            << px(l.face_x[f]) << "\" y=\"" << py(l.face_y[f]) << "\">"
            << xml_escape(g.faces()[f].name) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_graph(const PlaneGraph& g, std::string_view format) {
    if (format == "dot") {
        return graph_to_dot(g);
    }
    if (format == "tikz") {
        return graph_to_tikz(g);
    }
    if (format == "svg") {
        return graph_to_svg(g);
    }
    fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(format) + "'");
}

std::string hasse_to_dot(const PlaneGraph& g, const PathPoset& poset) {
    std::ostringstream out;
    out << "digraph " << dot_quote(g.name() + "_paths") << " {\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i) {
        out << "  p" << i << " [label=" << dot_quote(g.path_to_string(poset.paths[i].edges))
            << "];\n";
    }
    for (auto [a, b] : hasse_edges(poset)) {
        out << "  p" << a << " -> p" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pastel
