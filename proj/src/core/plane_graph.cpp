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

#include "plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "text.hpp"

namespace pastel {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
    case ErrorCode::NotStGraph: return "NotStGraph";
    case ErrorCode::HasDirectedCycle: return "HasDirectedCycle";
    case ErrorCode::FaceNotGlobular: return "FaceNotGlobular";
    case ErrorCode::MirroredEmbedding: return "MirroredEmbedding";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotGlobularSubgraph: return "NotGlobularSubgraph";
    case ErrorCode::NotWideGenerated: return "NotWideGenerated";
    case ErrorCode::NotIncluded: return "NotIncluded";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotMinimalComplete: return "NotMinimalComplete";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::BadInclusion: return "BadInclusion";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::TooFewFaces: return "TooFewFaces";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::InterchangeViolation: return "InterchangeViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

struct PlaneGraph::Impl {
    GraphData data;
    std::vector<int> dart_pos;
    std::vector<Face> faces;
    std::vector<int> dart_face;
    int exterior = -1;

    bool globular = false;
    GlobularityReport report;
    ErrorCode glob_error = ErrorCode::Ok;
    std::string glob_message;

    std::vector<int> topo;
    std::vector<int> topo_index;
    std::vector<std::vector<char>> reach;

    int start(int d) const {
        const auto& e = data.edges[dart_edge(d)];
        return dart_forward(d) ? e.src : e.dst;
    }
    int end(int d) const {
        return start(dart_rev(d));
    }
    std::string dart_name(int d) const {
        return data.edges[dart_edge(d)].name + (dart_forward(d) ? "+" : "-");
    }
};

struct PlaneGraph::Cache {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, std::unique_ptr<SubgraphInfo>> subs;
    std::recursive_mutex memo_mutex;
    std::unordered_map<std::string, std::shared_ptr<const void>> memo;
};

namespace {

struct Decomposition {
    bool globular = false;
    std::vector<int> forward; // edges of the forward run, in order
    std::vector<int> backward; // edges of the backward run, in path order
    int source = -1;
    int target = -1;
};

// Splits a cyclic dart walk into one forward and one backward run.
template<typename StartFn>
Decomposition decompose_walk(const std::vector<int>& walk, StartFn start) {
    Decomposition result;
    const int n = static_cast<int>(walk.size());
    if (n == 0) {
        return result;
    }
    int changes = 0;
    int first = -1;
    for (int i = 0; i < n; ++i) {
        int prev = walk[(i + n - 1) % n];
        if (dart_forward(prev) != dart_forward(walk[i])) {
            ++changes;
            if (dart_forward(walk[i]) && first < 0) {
                first = i;
            }
        }
    }
    if (changes != 2) {
        return result;
    }
    int i = first;
    while (dart_forward(walk[i % n])) {
        result.forward.push_back(dart_edge(walk[i % n]));
        ++i;
    }
    std::vector<int> back;
    while (!dart_forward(walk[i % n])) {
        back.push_back(dart_edge(walk[i % n]));
        ++i;
    }
    std::reverse(back.begin(), back.end());
    result.backward = std::move(back);
    result.source = start(walk[first]);
    result.globular = true;
    return result;
}

void fill_face(Face& f, const Decomposition& dec, int target) {
    f.globular = dec.globular;
    if (!dec.globular) {
        return;
    }
    if (f.exterior) {
        f.cod = dec.forward;
        f.dom = dec.backward;
    }
    else {
        f.dom = dec.forward;
        f.cod = dec.backward;
    }
    f.dom_set = EdgeSet::of(f.dom);
    f.cod_set = EdgeSet::of(f.cod);
    f.source = dec.source;
    f.target = target;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

PlaneGraph PlaneGraph::from_data(GraphData data) {
    auto impl = std::make_shared<Impl>();
    const int nv = static_cast<int>(data.vertices.size());
    const int ne = static_cast<int>(data.edges.size());
    if (ne == 0) {
        fail(ErrorCode::NotConnected, "graph has no edges");
    }
    if (ne > kMaxEdges) {
        fail(ErrorCode::LimitExceeded, "at most 64 edges are supported");
    }
    {
        std::set<std::string> seen;
        for (const auto& v : data.vertices) {
            if (!seen.insert(v).second) {
                fail(ErrorCode::DuplicateId, "duplicate vertex id '" + v + "'");
            }
        }
        seen.clear();
        for (const auto& e : data.edges) {
            if (!seen.insert(e.name).second) {
                fail(ErrorCode::DuplicateId, "duplicate edge id '" + e.name + "'");
            }
            if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv) {
                fail(ErrorCode::InvalidArgument, "edge '" + e.name + "' has a bad endpoint");
            }
        }
    }
    if (static_cast<int>(data.rotation.size()) != nv) {
        fail(ErrorCode::BadRotation, "rotation system does not cover every vertex");
    }
    impl->data = std::move(data);
    const GraphData& d = impl->data;

    impl->dart_pos.assign(2 * ne, -1);
    for (int v = 0; v < nv; ++v) {
        const auto& rot = d.rotation[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            int dart = rot[i];
            if (dart < 0 || dart >= 2 * ne) {
                fail(ErrorCode::BadRotation, "unknown dart at vertex '" + d.vertices[v] + "'");
            }
            if (impl->dart_pos[dart] >= 0) {
                fail(ErrorCode::BadRotation, "dart " + impl->dart_name(dart) + " appears twice");
            }
            if (impl->start(dart) != v) {
                fail(ErrorCode::BadRotation, "dart " + impl->dart_name(dart) +
                                                 " does not start at '" + d.vertices[v] + "'");
            }
            impl->dart_pos[dart] = i;
        }
    }
    for (int dart = 0; dart < 2 * ne; ++dart) {
        if (impl->dart_pos[dart] < 0) {
            fail(ErrorCode::BadRotation, "dart " + impl->dart_name(dart) + " missing from rotation");
        }
    }
    if (d.exterior_dart < 0 || d.exterior_dart >= 2 * ne) {
        fail(ErrorCode::ParseError, "missing or invalid exterior dart");
    }

    // Connectivity.
    {
        std::vector<std::vector<int>> adj(nv);
        for (const auto& e : d.edges) {
            adj[e.src].push_back(e.dst);
            adj[e.dst].push_back(e.src);
        }
        std::vector<char> seen(nv, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int count = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
            }
        }
        if (count != nv) {
            fail(ErrorCode::NotConnected, "graph is not connected");
        }
    }

    // Face tracing, face on the right of every dart.
    impl->dart_face.assign(2 * ne, -1);
    for (int start = 0; start < 2 * ne; ++start) {
        if (impl->dart_face[start] >= 0) {
            continue;
        }
        Face f;
        const int id = static_cast<int>(impl->faces.size());
        int dart = start;
        do {
            impl->dart_face[dart] = id;
            f.boundary.push_back(dart);
            const int v = impl->end(dart);
            const auto& rot = d.rotation[v];
            const int n = static_cast<int>(rot.size());
            const int pos = impl->dart_pos[dart_rev(dart)];
            dart = rot[(pos + n - 1) % n];
            if (f.boundary.size() > static_cast<std::size_t>(2 * ne)) {
                fail(ErrorCode::BadRotation, "face tracing did not close");
            }
        } while (dart != start);
        impl->faces.push_back(std::move(f));
    }
    const int nf = static_cast<int>(impl->faces.size());
    if (nv - ne + nf != 2) {
        fail(ErrorCode::EulerMismatch, "V - E + F = " + std::to_string(nv - ne + nf) +
                                           " (rotation system is not planar)");
    }
    impl->exterior = impl->dart_face[d.exterior_dart];
    {
        int k = 0;
        for (int i = 0; i < nf; ++i) {
            Face& f = impl->faces[i];
            f.exterior = (i == impl->exterior);
            f.name = f.exterior ? "ext" : "f" + std::to_string(++k);
            auto dec = decompose_walk(f.boundary, [&](int x) { return impl->start(x); });
            int target = dec.globular ? impl->end(dart_of(dec.forward.back(), true)) : -1;
            fill_face(f, dec, target);
        }
        std::set<std::string> used;
        for (const auto& [name, dart] : d.face_names) {
            if (dart < 0 || dart >= 2 * ne) {
                fail(ErrorCode::ParseError, "face '" + name + "' names an unknown dart");
            }
            int fid = impl->dart_face[dart];
            if (fid == impl->exterior) {
                fail(ErrorCode::InvalidArgument, "face '" + name + "' is the exterior face");
            }
            impl->faces[fid].name = name;
        }
        for (const auto& f : impl->faces) {
            if (!used.insert(f.name).second) {
                fail(ErrorCode::DuplicateId, "duplicate face name '" + f.name + "'");
            }
        }
    }

    // Globularity, computed without throwing.
    auto set_error = [&](ErrorCode code, std::string msg) {
        impl->globular = false;
        impl->glob_error = code;
        impl->glob_message = std::move(msg);
    };
    [&] {
        // Directed cycles by DFS.
        std::vector<std::vector<int>> out(nv);
        std::vector<int> indeg(nv, 0), outdeg(nv, 0);
        for (int e = 0; e < ne; ++e) {
            out[d.edges[e].src].push_back(e);
            ++indeg[d.edges[e].dst];
            ++outdeg[d.edges[e].src];
        }
        std::vector<int> color(nv, 0);
        std::vector<int> stack_edges;
        std::string cycle;
        std::function<bool(int)> dfs = [&](int v) -> bool {
            color[v] = 1;
            for (int e : out[v]) {
                int w = d.edges[e].dst;
                stack_edges.push_back(e);
                if (color[w] == 1) {
                    // Report the cycle closed by e.
                    std::vector<int> cyc;
                    for (auto it = stack_edges.rbegin(); it != stack_edges.rend(); ++it) {
                        cyc.push_back(*it);
                        if (d.edges[*it].src == w) {
                            break;
                        }
                    }
                    std::reverse(cyc.begin(), cyc.end());
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        cycle += (i ? " " : "") + d.edges[cyc[i]].name;
                    }
                    return true;
                }
                if (color[w] == 0 && dfs(w)) {
                    return true;
                }
                stack_edges.pop_back();
            }
            color[v] = 2;
            return false;
        };
        for (int v = 0; v < nv; ++v) {
            if (color[v] == 0 && dfs(v)) {
                set_error(ErrorCode::HasDirectedCycle, "directed cycle: " + cycle);
                return;
            }
        }
        std::vector<int> sources, sinks;
        for (int v = 0; v < nv; ++v) {
            if (indeg[v] == 0) {
                sources.push_back(v);
            }
            if (outdeg[v] == 0) {
                sinks.push_back(v);
            }
        }
        if (sources.size() != 1) {
            set_error(ErrorCode::NotStGraph,
                      "expected a unique source, found " + std::to_string(sources.size()));
            return;
        }
        if (sinks.size() != 1) {
            set_error(ErrorCode::NotStGraph,
                      "expected a unique target, found " + std::to_string(sinks.size()));
            return;
        }
        const int s = sources[0];
        const int t = sinks[0];
        const Face& ext = impl->faces[impl->exterior];
        bool s_on = false, t_on = false;
        for (int dart : ext.boundary) {
            s_on = s_on || impl->start(dart) == s;
            t_on = t_on || impl->start(dart) == t;
        }
        if (!s_on || !t_on) {
            set_error(ErrorCode::NotStGraph, "vertex '" + d.vertices[s_on ? t : s] +
                                                 "' is not on the exterior face");
            return;
        }
        for (const Face& f : impl->faces) {
            if (!f.globular) {
                set_error(ErrorCode::FaceNotGlobular,
                          "face '" + f.name + "' boundary is not of the form p.q^op");
                return;
            }
        }
        for (int v = 0; v < nv; ++v) {
            const auto& rot = d.rotation[v];
            int changes = 0;
            for (std::size_t i = 0; i < rot.size(); ++i) {
                int prev = rot[(i + rot.size() - 1) % rot.size()];
                if (dart_forward(prev) != dart_forward(rot[i])) {
                    ++changes;
                }
            }
            if (changes > 2) {
                set_error(ErrorCode::BadRotation, "out-darts at '" + d.vertices[v] +
                                                      "' are not contiguous");
                return;
            }
        }
        GlobularityReport rep;
        rep.source = s;
        rep.target = t;
        auto mk = [&](const std::vector<int>& edges) {
            Path p;
            p.edges = edges;
            p.from = s;
            p.to = t;
            p.set = EdgeSet::of(edges);
            return p;
        };
        rep.dom = mk(ext.dom);
        rep.cod = mk(ext.cod);
        if (d.declared_dom) {
            if (*d.declared_dom == ext.cod && ext.cod != ext.dom) {
                set_error(ErrorCode::MirroredEmbedding,
                          "declared dom is the computed cod; the rotation system is mirrored");
                return;
            }
            if (*d.declared_dom != ext.dom) {
                set_error(ErrorCode::InvalidArgument, "declared dom does not match the embedding");
                return;
            }
        }
        impl->report = std::move(rep);
        impl->globular = true;
    }();

    if (impl->globular) {
        // Kahn with smallest index first.
        std::vector<int> indeg(nv, 0);
        std::vector<std::vector<int>> out(nv);
        for (const auto& e : d.edges) {
            ++indeg[e.dst];
            out[e.src].push_back(e.dst);
        }
        std::set<int> ready;
        for (int v = 0; v < nv; ++v) {
            if (indeg[v] == 0) {
                ready.insert(v);
            }
        }
        while (!ready.empty()) {
            int v = *ready.begin();
            ready.erase(ready.begin());
            impl->topo.push_back(v);
            for (int w : out[v]) {
                if (--indeg[w] == 0) {
                    ready.insert(w);
                }
            }
        }
        impl->topo_index.assign(nv, -1);
        for (int i = 0; i < nv; ++i) {
            impl->topo_index[impl->topo[i]] = i;
        }
        impl->reach.assign(nv, std::vector<char>(nv, 0));
        for (auto it = impl->topo.rbegin(); it != impl->topo.rend(); ++it) {
            int v = *it;
            impl->reach[v][v] = 1;
            for (int w : out[v]) {
                for (int u = 0; u < nv; ++u) {
                    impl->reach[v][u] |= impl->reach[w][u];
                }
            }
        }
    }

    PlaneGraph g;
    g.impl_ = std::move(impl);
    g.cache_ = std::make_shared<Cache>();
    return g;
}

PlaneGraph PlaneGraph::parse(std::string_view text) {
    GraphData data;
    struct VertexLine {
        std::string id;
        std::vector<std::string> darts;
        int line;
    };
    std::vector<VertexLine> vlines;
    struct EdgeLine {
        std::string id, src, dst;
        int line;
    };
    std::vector<EdgeLine> elines;
    std::string exterior;
    int exterior_line = 0;
    std::vector<std::tuple<std::string, std::string, int>> flines;
    std::optional<std::vector<std::string>> dom;
    bool header = false;

    int lineno = 0;
    for (std::string_view raw : text::split_lines(text)) {
        ++lineno;
        std::string_view line = text::trim(text::strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (!header) {
            if (line != "pastel-format 1") {
                parse_fail(lineno, "expected header 'pastel-format 1'");
            }
            header = true;
            continue;
        }
        auto [kw, rest] = text::split_keyword(line);
        if (kw == "graph") {
            data.name = std::string(text::trim(rest));
        }
        else if (kw == "vertex") {
            auto [id, body] = text::split_colon(rest);
            if (!id || id->empty()) {
                parse_fail(lineno, "expected 'vertex <id>: <darts>'");
            }
            vlines.push_back({*id, text::split_list(body, ','), lineno});
        }
        else if (kw == "edge") {
            auto [id, body] = text::split_colon(rest);
            if (!id || id->empty()) {
                parse_fail(lineno, "expected 'edge <id>: <src> -> <dst>'");
            }
            auto arrow = body.find("->");
            if (arrow == std::string_view::npos) {
                parse_fail(lineno, "expected '->' in edge statement");
            }
            std::string a(text::trim(body.substr(0, arrow)));
            std::string b(text::trim(body.substr(arrow + 2)));
            if (a.empty() || b.empty()) {
                parse_fail(lineno, "edge endpoints must be nonempty");
            }
            elines.push_back({*id, a, b, lineno});
        }
        else if (kw == "exterior" && text::trim(rest).starts_with(":")) {
            std::string_view body = text::trim(rest).substr(1);
            exterior = std::string(text::trim(body));
            exterior_line = lineno;
        }
        else if (kw == "face") {
            auto [id, body] = text::split_colon(rest);
            if (!id || id->empty()) {
                parse_fail(lineno, "expected 'face <name>: <dart>'");
            }
            flines.emplace_back(*id, std::string(text::trim(body)), lineno);
        }
        else if (kw == "dom" && text::trim(rest).starts_with(":")) {
            std::string_view body = text::trim(rest).substr(1);
            dom = text::split_list(body, ',');
        }
        else {
            parse_fail(lineno, "unknown statement '" + std::string(kw) + "'");
        }
    }
    if (!header) {
        parse_fail(lineno, "empty input");
    }

    std::map<std::string, int> vid, eid;
    for (const auto& vl : vlines) {
        if (!vid.emplace(vl.id, static_cast<int>(data.vertices.size())).second) {
            fail(ErrorCode::DuplicateId, "line " + std::to_string(vl.line) +
                                             ": duplicate vertex id '" + vl.id + "'");
        }
        data.vertices.push_back(vl.id);
    }
    for (const auto& el : elines) {
        if (!eid.emplace(el.id, static_cast<int>(data.edges.size())).second) {
            fail(ErrorCode::DuplicateId, "line " + std::to_string(el.line) +
                                             ": duplicate edge id '" + el.id + "'");
        }
        auto s = vid.find(el.src);
        auto t = vid.find(el.dst);
        if (s == vid.end() || t == vid.end()) {
            parse_fail(el.line, "edge '" + el.id + "' uses an undeclared vertex");
        }
        data.edges.push_back({el.id, s->second, t->second});
    }
    auto parse_dart = [&](const std::string& tok, int line) {
        if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) {
            parse_fail(line, "bad dart '" + tok + "' (expected <edge>+ or <edge>-)");
        }
        auto it = eid.find(tok.substr(0, tok.size() - 1));
        if (it == eid.end()) {
            parse_fail(line, "unknown edge in dart '" + tok + "'");
        }
        return dart_of(it->second, tok.back() == '+');
    };
    for (const auto& vl : vlines) {
        std::vector<int> rot;
        for (const auto& tok : vl.darts) {
            rot.push_back(parse_dart(tok, vl.line));
        }
        data.rotation.push_back(std::move(rot));
    }
    if (exterior.empty()) {
        parse_fail(lineno, "missing 'exterior:' statement");
    }
    data.exterior_dart = parse_dart(exterior, exterior_line);
    for (const auto& [name, dart, line] : flines) {
        data.face_names.emplace_back(name, parse_dart(dart, line));
    }
    if (dom) {
        std::vector<int> edges;
        for (const auto& tok : *dom) {
            auto it = eid.find(tok);
            if (it == eid.end()) {
                parse_fail(lineno, "unknown edge '" + tok + "' in dom");
            }
            edges.push_back(it->second);
        }
        data.declared_dom = std::move(edges);
    }
    return from_data(std::move(data));
}

std::string PlaneGraph::to_text() const {
    const GraphData& d = impl_->data;
    std::ostringstream out;
    out << "pastel-format 1\n";
    if (!d.name.empty()) {
        out << "graph " << d.name << "\n";
    }
    for (int v = 0; v < num_vertices(); ++v) {
        out << "vertex " << d.vertices[v] << ":";
        for (std::size_t i = 0; i < d.rotation[v].size(); ++i) {
            out << (i ? ", " : " ") << impl_->dart_name(d.rotation[v][i]);
        }
        out << "\n";
    }
    for (const auto& e : d.edges) {
        out << "edge " << e.name << ": " << d.vertices[e.src] << " -> " << d.vertices[e.dst]
            << "\n";
    }
    out << "exterior: " << impl_->dart_name(d.exterior_dart) << "\n";
    for (const Face& f : impl_->faces) {
        if (!f.exterior) {
            out << "face " << f.name << ": " << impl_->dart_name(f.boundary[0]) << "\n";
        }
    }
    if (d.declared_dom) {
        out << "dom:";
        for (std::size_t i = 0; i < d.declared_dom->size(); ++i) {
            out << (i ? ", " : " ") << d.edges[(*d.declared_dom)[i]].name;
        }
        out << "\n";
    }
    return out.str();
}

const std::string& PlaneGraph::name() const {
    return impl_->data.name;
}
int PlaneGraph::num_vertices() const {
    return static_cast<int>(impl_->data.vertices.size());
}
int PlaneGraph::num_edges() const {
    return static_cast<int>(impl_->data.edges.size());
}
const std::string& PlaneGraph::vertex_name(int v) const {
    return impl_->data.vertices.at(v);
}
const std::string& PlaneGraph::edge_name(int e) const {
    return impl_->data.edges.at(e).name;
}
std::optional<int> PlaneGraph::find_vertex(std::string_view name) const {
    const auto& vs = impl_->data.vertices;
    auto it = std::find(vs.begin(), vs.end(), name);
    if (it == vs.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - vs.begin());
}
std::optional<int> PlaneGraph::find_edge(std::string_view name) const {
    const auto& es = impl_->data.edges;
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        if (es[e].name == name) {
            return e;
        }
    }
    return std::nullopt;
}
int PlaneGraph::vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) {
        fail(ErrorCode::InvalidArgument, "unknown vertex '" + std::string(name) + "'");
    }
    return *v;
}
int PlaneGraph::edge(std::string_view name) const {
    auto e = find_edge(name);
    if (!e) {
        fail(ErrorCode::InvalidArgument, "unknown edge '" + std::string(name) + "'");
    }
    return *e;
}
int PlaneGraph::src(int e) const {
    return impl_->data.edges[e].src;
}
int PlaneGraph::dst(int e) const {
    return impl_->data.edges[e].dst;
}
int PlaneGraph::dart_start(int dart) const {
    return impl_->start(dart);
}
int PlaneGraph::dart_end(int dart) const {
    return impl_->end(dart);
}
std::string PlaneGraph::dart_name(int dart) const {
    return impl_->dart_name(dart);
}
const std::vector<int>& PlaneGraph::rotation(int v) const {
    return impl_->data.rotation[v];
}
int PlaneGraph::exterior_dart() const {
    return impl_->data.exterior_dart;
}
EdgeSet PlaneGraph::all_edges() const {
    return EdgeSet::first(num_edges());
}
const GraphData& PlaneGraph::data() const {
    return impl_->data;
}
const std::vector<Face>& PlaneGraph::faces() const {
    return impl_->faces;
}
int PlaneGraph::exterior_face() const {
    return impl_->exterior;
}
std::vector<int> PlaneGraph::interior_faces() const {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(impl_->faces.size()); ++i) {
        if (i != impl_->exterior) {
            result.push_back(i);
        }
    }
    return result;
}
int PlaneGraph::num_interior_faces() const {
    return static_cast<int>(impl_->faces.size()) - 1;
}
std::optional<int> PlaneGraph::find_face(std::string_view name) const {
    for (int i = 0; i < static_cast<int>(impl_->faces.size()); ++i) {
        if (impl_->faces[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}
int PlaneGraph::face_of_dart(int dart) const {
    return impl_->dart_face[dart];
}
int PlaneGraph::face_below(int e) const {
    return impl_->dart_face[dart_of(e, true)];
}
int PlaneGraph::face_above(int e) const {
    return impl_->dart_face[dart_of(e, false)];
}
bool PlaneGraph::is_globular() const {
    return impl_->globular;
}
const GlobularityReport& PlaneGraph::globular() const {
    if (!impl_->globular) {
        fail(impl_->glob_error, impl_->glob_message);
    }
    return impl_->report;
}
int PlaneGraph::source() const {
    return globular().source;
}
int PlaneGraph::target() const {
    return globular().target;
}
const std::vector<int>& PlaneGraph::topo_order() const {
    globular();
    return impl_->topo;
}
int PlaneGraph::topo_index(int v) const {
    globular();
    return impl_->topo_index[v];
}
bool PlaneGraph::reaches(int x, int y) const {
    globular();
    return impl_->reach[x][y] != 0;
}

std::string PlaneGraph::edges_to_string(EdgeSet s) const {
    std::string out = "{";
    bool first = true;
    for (int e : s.to_vector()) {
        out += (first ? "" : ",") + edge_name(e);
        first = false;
    }
    return out + "}";
}

std::string PlaneGraph::path_to_string(const std::vector<int>& edges) const {
    if (edges.empty()) {
        return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out += (i ? "." : "") + edge_name(edges[i]);
    }
    return out;
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.impl_ == b.impl_) {
        return true;
    }
    if (!a.impl_ || !b.impl_) {
        return false;
    }
    const GraphData& x = a.impl_->data;
    const GraphData& y = b.impl_->data;
    if (x.name != y.name || x.vertices != y.vertices || x.rotation != y.rotation ||
        x.edges.size() != y.edges.size() || x.declared_dom != y.declared_dom) {
        return false;
    }
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
        if (x.edges[i].name != y.edges[i].name || x.edges[i].src != y.edges[i].src ||
            x.edges[i].dst != y.edges[i].dst) {
            return false;
        }
    }
    if (a.exterior_face() != b.exterior_face() || a.faces().size() != b.faces().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.faces().size(); ++i) {
        if (a.faces()[i].name != b.faces()[i].name) {
            return false;
        }
    }
    return true;
}

std::vector<int> SubgraphInfo::interior_faces() const {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (i != exterior) {
            result.push_back(i);
        }
    }
    return result;
}

const SubgraphInfo& PlaneGraph::sub(EdgeSet h) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->subs.find(h.bits());
        if (it != cache_->subs.end()) {
            return *it->second;
        }
    }
    auto info = std::make_unique<SubgraphInfo>();
    info->edges = h;
    const Impl& im = *impl_;
    const int nv = num_vertices();
    const int nf = static_cast<int>(im.faces.size());
    std::vector<int> edges = h.to_vector();
    {
        std::vector<char> has(nv, 0);
        for (int e : edges) {
            has[src(e)] = 1;
            has[dst(e)] = 1;
        }
        for (int v = 0; v < nv; ++v) {
            if (has[v]) {
                info->vertices.push_back(v);
            }
        }
    }
    if (!edges.empty()) {
        // Connectivity via union-find on vertices.
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int e : edges) {
            parent[find(src(e))] = find(dst(e));
        }
        int root = find(info->vertices[0]);
        info->connected = std::all_of(info->vertices.begin(), info->vertices.end(),
                                      [&](int v) { return find(v) == root; });
    }

    // Faces of h as classes of ambient faces.
    {
        std::vector<int> parent(nf);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int e = 0; e < num_edges(); ++e) {
            if (!h.contains(e)) {
                parent[find(face_below(e))] = find(face_above(e));
            }
        }
        std::map<int, int> cls;
        info->face_of_gface.assign(nf, -1);
        for (int f = 0; f < nf; ++f) {
            auto [it, inserted] = cls.emplace(find(f), static_cast<int>(info->faces.size()));
            if (inserted) {
                info->faces.emplace_back();
            }
            info->face_of_gface[f] = it->second;
            info->faces[it->second].gfaces.push_back(f);
        }
        info->exterior = info->face_of_gface[im.exterior];
        info->faces[info->exterior].exterior = true;
    }

    if (info->connected) {
        std::vector<char> done(2 * num_edges(), 0);
        for (int e : edges) {
            for (int start : {dart_of(e, true), dart_of(e, false)}) {
                if (done[start]) {
                    continue;
                }
                std::vector<int> walk;
                int dart = start;
                do {
                    done[dart] = 1;
                    walk.push_back(dart);
                    const auto& rot = im.data.rotation[im.end(dart)];
                    const int n = static_cast<int>(rot.size());
                    int pos = im.dart_pos[dart_rev(dart)];
                    do {
                        pos = (pos + n - 1) % n;
                    } while (!h.contains(dart_edge(rot[pos])));
                    dart = rot[pos];
                } while (dart != start);
                SubFace& sf = info->faces[info->face_of_gface[im.dart_face[start]]];
                check(sf.boundary.empty(), "subgraph face has a single boundary walk");
                sf.boundary = std::move(walk);
            }
        }
        for (SubFace& sf : info->faces) {
            auto dec = decompose_walk(sf.boundary, [&](int x) { return im.start(x); });
            sf.globular = dec.globular;
            if (dec.globular) {
                if (sf.exterior) {
                    sf.cod = dec.forward;
                    sf.dom = dec.backward;
                }
                else {
                    sf.dom = dec.forward;
                    sf.cod = dec.backward;
                }
                sf.dom_set = EdgeSet::of(sf.dom);
                sf.cod_set = EdgeSet::of(sf.cod);
                sf.source = dec.source;
                sf.target = im.end(dart_of(dec.forward.back(), true));
            }
        }

        std::vector<int> indeg(nv, 0), outdeg(nv, 0);
        for (int e : edges) {
            ++outdeg[src(e)];
            ++indeg[dst(e)];
        }
        std::vector<int> sources, sinks;
        for (int v : info->vertices) {
            if (indeg[v] == 0) {
                sources.push_back(v);
            }
            if (outdeg[v] == 0) {
                sinks.push_back(v);
            }
        }
        const SubFace& ext = info->faces[info->exterior];
        if (sources.size() == 1 && sinks.size() == 1 && is_globular()) {
            bool s_on = false, t_on = false;
            for (int dart : ext.boundary) {
                s_on = s_on || im.start(dart) == sources[0];
                t_on = t_on || im.start(dart) == sinks[0];
            }
            if (s_on && t_on) {
                check(ext.globular, "globular subgraph has a decomposable exterior");
                info->globular = true;
                info->source = sources[0];
                info->target = sinks[0];
                info->dom.edges = ext.dom;
                info->dom.from = info->source;
                info->dom.to = info->target;
                info->dom.set = ext.dom_set;
                info->cod.edges = ext.cod;
                info->cod.from = info->source;
                info->cod.to = info->target;
                info->cod.set = ext.cod_set;
                EdgeSet on_ext;
                for (int dart : ext.boundary) {
                    on_ext.insert(dart_edge(dart));
                }
                info->glob = (on_ext == h);
            }
        }
    }

    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->subs.emplace(h.bits(), std::move(info));
    return *it->second;
}

std::shared_ptr<const void> PlaneGraph::memo(
    const std::string& key, const std::function<std::shared_ptr<const void>()>& make) const {
    // Recursive: builders may consult other memo entries.
    std::lock_guard<std::recursive_mutex> lock(cache_->memo_mutex);
    auto it = cache_->memo.find(key);
    if (it != cache_->memo.end()) {
        return it->second;
    }
    auto value = make();
    cache_->memo.emplace(key, value);
    return value;
}

std::vector<Face> trace_faces(const PlaneGraph& g) {
    return g.faces();
}

const GlobularityReport& check_globular(const PlaneGraph& g) {
    return g.globular();
}

Path make_path(const PlaneGraph& g, const std::vector<int>& edges) {
    if (edges.empty()) {
        fail(ErrorCode::InvalidArgument, "make_path needs at least one edge");
    }
    Path p;
    p.edges = edges;
    p.from = g.src(edges.front());
    p.to = g.dst(edges.back());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && g.dst(edges[i - 1]) != g.src(edges[i])) {
            fail(ErrorCode::InvalidArgument, "edges do not compose: " + g.path_to_string(edges));
        }
        p.set.insert(edges[i]);
    }
    return p;
}

Path empty_path(int vertex) {
    Path p;
    p.from = vertex;
    p.to = vertex;
    return p;
}

Path concat(const Path& a, const Path& b) {
    check(a.to == b.from, "concat of non-composable paths");
    Path p;
    p.edges = a.edges;
    p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
    p.from = a.from;
    p.to = b.to;
    p.set = a.set | b.set;
    return p;
}

std::optional<EdgeSet> subgraph_xy(const PlaneGraph& g, int x, int y) {
    if (!g.reaches(x, y)) {
        return std::nullopt;
    }
    EdgeSet result;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.reaches(x, g.src(e)) && g.reaches(g.dst(e), y)) {
            result.insert(e);
        }
    }
    return result;
}

EdgeSet subgraph_xy_or_empty(const PlaneGraph& g, int x, int y) {
    return subgraph_xy(g, x, y).value_or(EdgeSet());
}

PlaneGraph extract(const PlaneGraph& g, EdgeSet h, std::vector<int>* edge_map) {
    const SubgraphInfo& info = g.sub(h);
    if (!info.connected) {
        fail(ErrorCode::NotConnected, g.edges_to_string(h) + " is not connected");
    }
    GraphData d;
    d.name = g.name() + g.edges_to_string(h);
    std::vector<int> vmap(g.num_vertices(), -1);
    for (int v : info.vertices) {
        vmap[v] = static_cast<int>(d.vertices.size());
        d.vertices.push_back(g.vertex_name(v));
    }
    std::vector<int> emap(g.num_edges(), -1);
    std::vector<int> back;
    for (int e : h.to_vector()) {
        emap[e] = static_cast<int>(d.edges.size());
        back.push_back(e);
        d.edges.push_back({g.edge_name(e), vmap[g.src(e)], vmap[g.dst(e)]});
    }
    auto mapd = [&](int dart) { return dart_of(emap[dart_edge(dart)], dart_forward(dart)); };
    d.rotation.resize(d.vertices.size());
    for (int v : info.vertices) {
        for (int dart : g.rotation(v)) {
            if (h.contains(dart_edge(dart))) {
                d.rotation[vmap[v]].push_back(mapd(dart));
            }
        }
    }
    d.exterior_dart = mapd(info.faces[info.exterior].boundary[0]);
    for (const SubFace& f : info.faces) {
        if (f.exterior) {
            continue;
        }
        std::string name;
        for (int gf : f.gfaces) {
            name += (name.empty() ? "" : "|") + g.faces()[gf].name;
        }
        d.face_names.emplace_back(name, mapd(f.boundary[0]));
    }
    if (edge_map) {
        *edge_map = back;
    }
    return PlaneGraph::from_data(std::move(d));
}

PlaneGraph join(const PlaneGraph& g1, const PlaneGraph& g2) {
    const int t1 = g1.target();
    const int s2 = g2.source();
    GraphData d;
    d.name = g1.name() + "." + g2.name();
    std::set<std::string> vnames, enames, fnames;
    auto fresh = [](std::set<std::string>& used, std::string name) {
        while (used.count(name)) {
            name += "'";
        }
        used.insert(name);
        return name;
    };
    const int n1 = g1.num_vertices();
    const int e1 = g1.num_edges();
    for (int v = 0; v < n1; ++v) {
        d.vertices.push_back(fresh(vnames, g1.vertex_name(v)));
    }
    std::vector<int> vmap2(g2.num_vertices(), -1);
    vmap2[s2] = t1;
    for (int v = 0; v < g2.num_vertices(); ++v) {
        if (v != s2) {
            vmap2[v] = static_cast<int>(d.vertices.size());
            d.vertices.push_back(fresh(vnames, g2.vertex_name(v)));
        }
    }
    for (int e = 0; e < e1; ++e) {
        d.edges.push_back({fresh(enames, g1.edge_name(e)), g1.src(e), g1.dst(e)});
    }
    for (int e = 0; e < g2.num_edges(); ++e) {
        d.edges.push_back({fresh(enames, g2.edge_name(e)), vmap2[g2.src(e)], vmap2[g2.dst(e)]});
    }
    auto map2 = [&](int dart) { return dart + 2 * e1; };
    d.rotation.resize(d.vertices.size());
    for (int v = 0; v < n1; ++v) {
        if (v != t1) {
            d.rotation[v] = g1.rotation(v);
        }
    }
    for (int dart : g2.rotation(s2)) {
        d.rotation[t1].push_back(map2(dart));
    }
    for (int dart : g1.rotation(t1)) {
        d.rotation[t1].push_back(dart);
    }
    for (int v = 0; v < g2.num_vertices(); ++v) {
        if (v != s2) {
            for (int dart : g2.rotation(v)) {
                d.rotation[vmap2[v]].push_back(map2(dart));
            }
        }
    }
    d.exterior_dart = g1.exterior_dart();
    for (const Face& f : g1.faces()) {
        if (!f.exterior) {
            d.face_names.emplace_back(fresh(fnames, f.name), f.boundary[0]);
        }
    }
    for (const Face& f : g2.faces()) {
        if (!f.exterior) {
            d.face_names.emplace_back(fresh(fnames, f.name), map2(f.boundary[0]));
        }
    }
    PlaneGraph result = PlaneGraph::from_data(std::move(d));
    result.globular();
    return result;
}

std::optional<Glob> try_glob_between(const PlaneGraph& g, const Path& p, const Path& q) {
    if (p.from != q.from || p.to != q.to) {
        return std::nullopt;
    }
    if (p == q) {
        Glob glob;
        glob.carrier = p.set;
        glob.dom = p;
        glob.cod = q;
        glob.degenerate = true;
        glob.proper = false;
        return glob;
    }
    std::size_t pre = 0;
    while (pre < p.edges.size() && pre < q.edges.size() && p.edges[pre] == q.edges[pre]) {
        ++pre;
    }
    std::size_t suf = 0;
    while (suf + pre < p.edges.size() && suf + pre < q.edges.size() &&
           p.edges[p.edges.size() - 1 - suf] == q.edges[q.edges.size() - 1 - suf]) {
        ++suf;
    }
    std::vector<int> mp(p.edges.begin() + pre, p.edges.end() - suf);
    std::vector<int> mq(q.edges.begin() + pre, q.edges.end() - suf);
    if (mp.empty() || mq.empty()) {
        return std::nullopt;
    }
    EdgeSet carrier = EdgeSet::of(mp) | EdgeSet::of(mq);
    const SubgraphInfo& info = g.sub(carrier);
    if (!info.glob || info.dom.edges != mp || info.cod.edges != mq) {
        return std::nullopt;
    }
    Glob glob;
    glob.carrier = carrier;
    glob.dom = info.dom;
    glob.cod = info.cod;
    glob.degenerate = false;
    glob.proper = is_two_connected(g, carrier);
    return glob;
}

Glob glob_between(const PlaneGraph& g, const Path& p, const Path& q) {
    auto glob = try_glob_between(g, p, q);
    if (!glob) {
        fail(ErrorCode::NotComparable, g.path_to_string(p.edges) + " is not below-or-equal " +
                                           g.path_to_string(q.edges));
    }
    return *glob;
}

EdgeSet intersect_xy_joins(const PlaneGraph& g, int x, int y) {
    const int s = g.source();
    const int t = g.target();
    auto xy = [&](int a, int b) { return subgraph_xy_or_empty(g, a, b); };
    EdgeSet a = xy(s, x) | xy(x, t);
    EdgeSet b = xy(s, y) | xy(y, t);
    EdgeSet result = a & b;
    if (g.reaches(x, y)) {
        check(result == (xy(s, x) | xy(x, y) | xy(y, t)), "intersection of xy-joins");
    }
    else if (g.reaches(y, x)) {
        check(result == (xy(s, y) | xy(y, x) | xy(x, t)), "intersection of yx-joins");
    }
    return result;
}

std::vector<int> cut_vertices(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    if (!info.globular) {
        fail(ErrorCode::NotGlobularSubgraph, g.edges_to_string(h) + " is not globular");
    }
    std::vector<int> edges = h.to_vector();
    std::vector<int> result;
    for (int v : info.vertices) {
        if (v == info.source || v == info.target) {
            continue;
        }
        // Undirected reachability from source avoiding v.
        std::set<int> seen{info.source};
        std::deque<int> queue{info.source};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int e : edges) {
                int a = g.src(e), b = g.dst(e);
                int w = -1;
                if (a == u) {
                    w = b;
                }
                else if (b == u) {
                    w = a;
                }
                if (w >= 0 && w != v && seen.insert(w).second) {
                    queue.push_back(w);
                }
            }
        }
        if (!seen.count(info.target)) {
            result.push_back(v);
        }
    }
    std::sort(result.begin(), result.end(),
              [&](int a, int b) { return g.topo_index(a) < g.topo_index(b); });
    return result;
}

std::vector<EdgeSet> join_factors(const PlaneGraph& g, EdgeSet h) {
    std::vector<int> cuts = cut_vertices(g, h);
    std::vector<EdgeSet> result(cuts.size() + 1);
    for (int e : h.to_vector()) {
        int k = 0;
        for (int c : cuts) {
            if (g.reaches(c, g.src(e))) {
                ++k;
            }
        }
        result[k].insert(e);
    }
    return result;
}

bool is_two_connected(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    return info.globular && info.faces.size() > 1 && cut_vertices(g, h).empty();
}

bool is_path(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    return info.globular && info.faces.size() == 1;
}

Path path_of_set(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    if (!info.globular || info.faces.size() != 1) {
        fail(ErrorCode::InvalidArgument, g.edges_to_string(h) + " is not a path");
    }
    return info.dom;
}

} // namespace pastel
