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

#include "io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "text.hpp"

namespace pastel {

namespace {

constexpr std::string_view kHeader = "pastel-format 1";

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

// Non-empty, non-comment lines after the header, with line numbers.
std::vector<std::pair<int, std::string_view>> body_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    bool header = false;
    int lineno = 0;
    for (std::string_view raw : text::split_lines(text)) {
        ++lineno;
        std::string_view line = text::trim(text::strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (!header) {
            if (line != kHeader) {
                parse_fail(lineno, "expected header 'pastel-format 1'");
            }
            header = true;
            continue;
        }
        out.emplace_back(lineno, line);
    }
    if (!header) {
        parse_fail(lineno, "missing header 'pastel-format 1'");
    }
    return out;
}

std::string edge_list(const PlaneGraph& g, EdgeSet s) {
    std::string out;
    for (int e : s.to_vector()) {
        out += (out.empty() ? "" : ", ") + g.edge_name(e);
    }
    return out;
}

void need_token(const std::string& name) {
    if (name.empty() || name.find_first_of(" \t\n#") != std::string::npos) {
        fail(ErrorCode::InvalidArgument, "name '" + name + "' is not a single token");
    }
}

// Closes under subdivisions inside the carrier and, if asked, joins, until
// nothing changes.
PastingDiagram close_diagram(const PastingDiagram& d, bool complete_it, bool subdivisions_too) {
    PastingDiagram cur = d;
    for (;;) {
        PastingDiagram next = cur;
        if (subdivisions_too) {
            std::vector<EdgeSet> gens(cur.members().begin(), cur.members().end());
            for (EdgeSet m : cur.members()) {
                for (EdgeSet k : subdivisions(cur.graph(), m, cur.carrier())) {
                    gens.push_back(k);
                }
            }
            next = generate(cur.graph(), cur.carrier(), gens);
        }
        if (complete_it) {
            next = complete(next);
        }
        if (next == cur) {
            return cur;
        }
        cur = std::move(next);
    }
}

std::optional<int> try_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) {
            return v;
        }
    }
    catch (const std::logic_error&) {
    }
    return std::nullopt;
}

// A simplex of dimension n of h given by id or by label.
int simplex_by_token(const FiniteSSet& h, int n, const std::string& token, int line) {
    if (auto id = try_int(token)) {
        if (*id < 0 || *id >= h.count(n)) {
            parse_fail(line, "no " + std::to_string(n) + "-simplex " + token);
        }
        return *id;
    }
    for (int id = 0; id < h.count(n); ++id) {
        if (h.label(n, id) == token) {
            return id;
        }
    }
    parse_fail(line, "no " + std::to_string(n) + "-simplex labelled '" + token + "'");
}

// "<id>", "<label>" or "s0(<id or label>)" for a 1-simplex.
Simplex parse_face_value(const FiniteSSet& h, const std::string& t, int line) {
    if (t.starts_with("s0(") && t.ends_with(")")) {
        return Simplex{0, simplex_by_token(h, 0, t.substr(3, t.size() - 4), line), Op{0, 0}};
    }
    return nondegenerate(1, simplex_by_token(h, 1, t, line));
}

int parse_int(const std::string& s, int line) {
    if (auto v = try_int(s)) {
        return *v;
    }
    parse_fail(line, "expected an integer, got '" + s + "'");
}

// "<kw> <name> = <value>" statements of labeling files.
struct Assignment {
    int line;
    std::string kind;
    std::string name;
    std::string value;
};

std::vector<Assignment> parse_assignments(std::string_view text) {
    std::vector<Assignment> out;
    for (auto [line, body] : body_lines(text)) {
        auto tok = text::split_ws(body);
        if (tok.size() == 1 && tok[0] == "labeling") {
            continue;
        }
        if (tok.size() != 4 || tok[2] != "=" ||
            (tok[0] != "obj" && tok[0] != "edge" && tok[0] != "face")) {
            parse_fail(line, "expected 'obj|edge|face <name> = <value>'");
        }
        out.push_back({line, tok[0], tok[1], tok[3]});
    }
    return out;
}

template<typename L, typename Obj, typename Edge, typename FaceFn>
L fill_labeling(const PlaneGraph& g, std::string_view text, Obj&& obj, Edge&& edge,
                FaceFn&& face, L l) {
    std::vector<char> seen_v(g.num_vertices()), seen_e(g.num_edges()), seen_f(g.faces().size());
    auto items = parse_assignments(text);
    for (const auto& a : items) {
        if (a.kind != "obj") {
            continue;
        }
        auto v = g.find_vertex(a.name);
        if (!v) {
            parse_fail(a.line, "unknown vertex '" + a.name + "'");
        }
        if (seen_v[*v]++) {
            parse_fail(a.line, "vertex '" + a.name + "' labelled twice");
        }
        l.object[*v] = obj(a.value, a.line);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!seen_v[v]) {
            fail(ErrorCode::ParseError, "vertex '" + g.vertex_name(v) + "' has no label");
        }
    }
    for (const auto& a : items) {
        if (a.kind == "edge") {
            auto e = g.find_edge(a.name);
            if (!e) {
                parse_fail(a.line, "unknown edge '" + a.name + "'");
            }
            if (seen_e[*e]++) {
                parse_fail(a.line, "edge '" + a.name + "' labelled twice");
            }
            edge(l, *e, a.value, a.line);
        }
        else if (a.kind == "face") {
            auto f = g.find_face(a.name);
            if (!f || g.faces()[*f].exterior) {
                parse_fail(a.line, "unknown interior face '" + a.name + "'");
            }
            if (seen_f[*f]++) {
                parse_fail(a.line, "face '" + a.name + "' labelled twice");
            }
            face(l, *f, a.value, a.line);
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!seen_e[e]) {
            fail(ErrorCode::ParseError, "edge '" + g.edge_name(e) + "' has no label");
        }
    }
    for (int f : g.interior_faces()) {
        if (!seen_f[f]) {
            fail(ErrorCode::ParseError, "face '" + g.faces()[f].name + "' has no label");
        }
    }
    return l;
}

} // namespace

std::string text_hash(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

EdgeSet parse_edge_set(const PlaneGraph& g, std::string_view s) {
    s = text::trim(s);
    if (s.starts_with("{")) {
        if (!s.ends_with("}")) {
            fail(ErrorCode::ParseError, "unbalanced braces in edge set");
        }
        s = s.substr(1, s.size() - 2);
    }
    EdgeSet out;
    for (const std::string& name : text::split_list(s, ',')) {
        auto e = g.find_edge(name);
        if (!e) {
            fail(ErrorCode::ParseError, "unknown edge '" + name + "'");
        }
        out.insert(*e);
    }
    return out;
}

// Diagrams

PastingDiagram parse_diagram(std::string_view text, std::string* name) {
    std::string graph_text;
    std::optional<std::pair<int, std::string>> stmt;
    int lineno = 0;
    for (std::string_view raw : text::split_lines(text)) {
        ++lineno;
        std::string_view line = text::trim(text::strip_comment(raw));
        if (text::split_keyword(line).first == "diagram") {
            if (stmt) {
                parse_fail(lineno, "more than one diagram statement");
            }
            stmt.emplace(lineno, std::string(line));
            graph_text += "\n";
            continue;
        }
        graph_text += std::string(raw) + "\n";
    }
    if (!stmt) {
        fail(ErrorCode::ParseError, "no diagram statement");
    }
    PlaneGraph g = PlaneGraph::parse(graph_text);
    g.globular();
    const int line = stmt->first;
    std::string_view rest = text::split_keyword(stmt->second).second;
    auto [id, body] = text::split_colon(rest);
    if (!id || id->empty()) {
        parse_fail(line, "expected 'diagram <name>: generators = {...}'");
    }
    if (name) {
        *name = *id;
    }
    // Optional "carrier = {...}", then "generators = {...}", then flags.
    auto braced = [&](std::string_view& s, std::string_view kw) -> std::optional<std::string_view> {
        s = text::trim(s);
        if (!s.starts_with(kw)) {
            return std::nullopt;
        }
        s = text::trim(s.substr(kw.size()));
        if (!s.starts_with("=")) {
            parse_fail(line, "expected '=' after " + std::string(kw));
        }
        s = text::trim(s.substr(1));
        auto close = s.find('}');
        if (!s.starts_with("{") || close == std::string_view::npos) {
            parse_fail(line, "expected a braced list after " + std::string(kw));
        }
        std::string_view inside = s.substr(1, close - 1);
        s = s.substr(close + 1);
        return inside;
    };
    std::string_view s = body;
    EdgeSet carrier = g.all_edges();
    if (auto c = braced(s, "carrier")) {
        carrier = parse_edge_set(g, *c);
    }
    auto gens_text = braced(s, "generators");
    if (!gens_text) {
        parse_fail(line, "expected 'generators = {...}'");
    }
    std::vector<EdgeSet> gens;
    for (const std::string& piece : text::split_list(*gens_text, ';')) {
        gens.push_back(parse_edge_set(g, piece));
    }
    bool want_complete = false, want_subdiv = false;
    for (const std::string& flag : text::split_ws(s)) {
        if (flag == "complete") {
            want_complete = true;
        }
        else if (flag == "subdivision-closed") {
            want_subdiv = true;
        }
        else {
            parse_fail(line, "unknown flag '" + flag + "'");
        }
    }
    PastingDiagram d = generate(g, carrier, gens);
    if (want_complete || want_subdiv) {
        d = close_diagram(d, want_complete, want_subdiv);
    }
    return d;
}

std::string diagram_to_text(const PastingDiagram& d, const std::string& name) {
    need_token(name);
    const PlaneGraph& g = d.graph();
    std::string out = g.to_text() + "diagram " + name + ":";
    if (d.carrier() != g.all_edges()) {
        out += " carrier = {" + edge_list(g, d.carrier()) + "}";
    }
    out += " generators = {";
    bool first = true;
    for (EdgeSet m : d.members()) {
        out += (first ? "" : "; ") + edge_list(g, m);
        first = false;
    }
    return out + "}\n";
}

std::optional<PastingDiagram> named_diagram(const PlaneGraph& g, std::string_view name) {
    if (name == "min") {
        return sigma_min(g);
    }
    if (name == "min-complete") {
        return complete(sigma_min(g));
    }
    if (name == "max") {
        return pi_max(g);
    }
    return std::nullopt;
}

std::string diagram_hash(const PastingDiagram& d) {
    std::string s = d.graph().to_text() + "carrier " + d.graph().edges_to_string(d.carrier());
    for (EdgeSet m : d.members()) {
        s += ";" + d.graph().edges_to_string(m);
    }
    return text_hash(s);
}

// Labelings

Labeling parse_labeling(const PlaneGraph& g, const SCat& target, std::string_view text) {
    Labeling init;
    init.object.assign(g.num_vertices(), -1);
    init.edge.assign(g.num_edges(), Simplex{});
    init.face.assign(g.faces().size(), Simplex{});
    auto obj = [&](const std::string& v, int line) {
        auto o = target.find_object(v);
        if (!o) {
            parse_fail(line, "unknown object '" + v + "' of " + target.name());
        }
        return *o;
    };
    auto hom_of = [&](const Labeling& l, int from, int to, int line) {
        const FiniteSSet* h = target.hom(l.object[from], l.object[to]);
        if (!h) {
            parse_fail(line, "empty mapping space");
        }
        return h;
    };
    auto edge = [&](Labeling& l, int e, const std::string& v, int line) {
        const FiniteSSet* h = hom_of(l, g.src(e), g.dst(e), line);
        l.edge[e] = nondegenerate(0, simplex_by_token(*h, 0, v, line));
    };
    auto face = [&](Labeling& l, int f, const std::string& v, int line) {
        const Face& phi = g.faces()[f];
        const FiniteSSet* h = hom_of(l, phi.source, phi.target, line);
        l.face[f] = parse_face_value(*h, v, line);
    };
    Labeling l = fill_labeling<Labeling>(g, text, obj, edge, face, init);
    std::string why = check_labeling(g, target, l);
    if (!why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    return l;
}

std::string labeling_to_text(const PlaneGraph& g, const SCat& target, const Labeling& l) {
    std::ostringstream out;
    out << kHeader << "\nlabeling\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "obj " << g.vertex_name(v) << " = " << target.object_name(l.object.at(v)) << "\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        out << "edge " << g.edge_name(e) << " = " << l.edge.at(e).id << "\n";
    }
    for (int f : g.interior_faces()) {
        const Simplex& s = l.face.at(f);
        out << "face " << g.faces()[f].name << " = ";
        if (s.degenerate()) {
            out << "s0(" << s.id << ")\n";
        }
        else {
            out << s.id << "\n";
        }
    }
    return out.str();
}

TwoLabeling parse_two_labeling(const PlaneGraph& g, const FiniteTwoCategory& c,
                               std::string_view text) {
    TwoLabeling init;
    init.object.assign(g.num_vertices(), -1);
    init.cell1.assign(g.num_edges(), -1);
    init.cell2.assign(g.faces().size(), -1);
    auto find = [](auto found, const std::string& what, const std::string& v, int line) {
        if (!found) {
            parse_fail(line, "unknown " + what + " '" + v + "'");
        }
        return *found;
    };
    TwoLabeling l = fill_labeling<TwoLabeling>(
        g, text, [&](const std::string& v, int line) { return find(c.find_object(v), "object", v, line); },
        [&](TwoLabeling& l, int e, const std::string& v, int line) {
            l.cell1[e] = find(c.find1(v), "1-cell", v, line);
        },
        [&](TwoLabeling& l, int f, const std::string& v, int line) {
            l.cell2[f] = find(c.find2(v), "2-cell", v, line);
        },
        init);
    std::string why = check_two_labeling(g, c, l);
    if (!why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    return l;
}

TwoLabeling parse_two_labeling(const PlaneGraph& g, const FreeTwoCategory& c,
                               std::string_view text) {
    const Computad& cd = c.computad();
    auto index = [](const auto& list, const std::string& v) -> std::optional<int> {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] == v) {
                return static_cast<int>(i);
            }
        }
        return std::nullopt;
    };
    std::vector<std::string> g1, g2;
    for (const auto& gen : cd.gens1) {
        g1.push_back(gen.name);
    }
    for (const auto& gen : cd.gens2) {
        g2.push_back(gen.name);
    }
    TwoLabeling init;
    init.object.assign(g.num_vertices(), -1);
    init.cell1.assign(g.num_edges(), -1);
    init.cell2.assign(g.faces().size(), -1);
    auto find = [](std::optional<int> found, const std::string& what, const std::string& v,
                   int line) {
        if (!found) {
            parse_fail(line, "unknown " + what + " '" + v + "'");
        }
        return *found;
    };
    TwoLabeling l = fill_labeling<TwoLabeling>(
        g, text,
        [&](const std::string& v, int line) { return find(index(cd.objects, v), "object", v, line); },
        [&](TwoLabeling& l, int e, const std::string& v, int line) {
            int gen = find(index(g1, v), "1-cell generator", v, line);
            l.cell1[e] = c.word(cd.gens1[gen].src, {gen});
        },
        [&](TwoLabeling& l, int f, const std::string& v, int line) {
            l.cell2[f] = c.generator2(find(index(g2, v), "2-cell generator", v, line));
        },
        init);
    std::string why = check_two_labeling(g, c, l);
    if (!why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    return l;
}

std::string two_labeling_to_text(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l) {
    std::ostringstream out;
    out << kHeader << "\nlabeling\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "obj " << g.vertex_name(v) << " = " << c.object_name(l.object.at(v)) << "\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        out << "edge " << g.edge_name(e) << " = " << c.name1(l.cell1.at(e)) << "\n";
    }
    for (int f : g.interior_faces()) {
        out << "face " << g.faces()[f].name << " = " << c.name2(l.cell2.at(f)) << "\n";
    }
    return out.str();
}

// 2-categories

bool is_computad_text(std::string_view text) {
    auto lines = body_lines(text);
    return !lines.empty() && text::split_keyword(lines.front().second).first == "computad";
}

Computad parse_computad(std::string_view text) {
    Computad c;
    bool named = false;
    std::map<std::string, int> objects, gens1;
    std::set<std::string> gens2;
    auto lookup = [](const std::map<std::string, int>& m, const std::string& k, int line,
                     const char* what) {
        auto it = m.find(k);
        if (it == m.end()) {
            parse_fail(line, std::string("unknown ") + what + " '" + k + "'");
        }
        return it->second;
    };
    for (auto [line, body] : body_lines(text)) {
        auto tok = text::split_ws(body);
        const std::string& kw = tok[0];
        if (!named) {
            if (kw != "computad" || tok.size() != 2) {
                parse_fail(line, "expected 'computad <name>'");
            }
            c.name = tok[1];
            named = true;
        }
        else if (kw == "object" && tok.size() == 2) {
            if (!objects.emplace(tok[1], static_cast<int>(c.objects.size())).second) {
                fail(ErrorCode::DuplicateId, "duplicate object '" + tok[1] + "'");
            }
            c.objects.push_back(tok[1]);
        }
        else if (kw == "gen1" && tok.size() == 5 && tok[3] == "->") {
            if (!gens1.emplace(tok[1], static_cast<int>(c.gens1.size())).second) {
                fail(ErrorCode::DuplicateId, "duplicate generator '" + tok[1] + "'");
            }
            c.gens1.push_back({tok[1], lookup(objects, tok[2], line, "object"),
                               lookup(objects, tok[4], line, "object")});
        }
        else if (kw == "gen2" && tok.size() >= 5) {
            auto arrow = std::find(tok.begin(), tok.end(), "=>");
            if (arrow == tok.end()) {
                parse_fail(line, "expected '=>' in gen2");
            }
            if (!gens2.insert(tok[1]).second) {
                fail(ErrorCode::DuplicateId, "duplicate generator '" + tok[1] + "'");
            }
            Computad::Gen2 gen{tok[1], {}, {}};
            for (auto it = tok.begin() + 2; it != arrow; ++it) {
                gen.src.push_back(lookup(gens1, *it, line, "generator"));
            }
            for (auto it = arrow + 1; it != tok.end(); ++it) {
                gen.dst.push_back(lookup(gens1, *it, line, "generator"));
            }
            c.gens2.push_back(std::move(gen));
        }
        else {
            parse_fail(line, "unknown statement '" + kw + "'");
        }
    }
    if (!named) {
        fail(ErrorCode::ParseError, "expected 'computad <name>'");
    }
    return c;
}

std::string computad_to_text(const Computad& c) {
    need_token(c.name);
    std::ostringstream out;
    out << kHeader << "\ncomputad " << c.name << "\n";
    for (const auto& o : c.objects) {
        need_token(o);
        out << "object " << o << "\n";
    }
    for (const auto& g : c.gens1) {
        need_token(g.name);
        out << "gen1 " << g.name << " " << c.objects.at(g.src) << " -> " << c.objects.at(g.dst)
            << "\n";
    }
    for (const auto& g : c.gens2) {
        need_token(g.name);
        out << "gen2 " << g.name;
        for (int e : g.src) {
            out << " " << c.gens1.at(e).name;
        }
        out << " =>";
        for (int e : g.dst) {
            out << " " << c.gens1.at(e).name;
        }
        out << "\n";
    }
    return out.str();
}

FiniteTwoCategory parse_twocat(std::string_view text) {
    std::string name;
    std::vector<std::string> objects;
    std::vector<FiniteTwoCategory::Cell1> cells1;
    std::vector<FiniteTwoCategory::Cell2> cells2;
    std::map<std::string, int> obj_ix, c1_ix, c2_ix;
    std::map<int, int> id1, id2;
    std::map<std::pair<int, int>, int> comp1, vcomp, hcomp;
    bool named = false;
    auto lookup = [](const std::map<std::string, int>& m, const std::string& k, int line,
                     const char* what) {
        auto it = m.find(k);
        if (it == m.end()) {
            parse_fail(line, std::string("unknown ") + what + " '" + k + "'");
        }
        return it->second;
    };
    auto add = [](std::map<std::string, int>& m, const std::string& k) {
        if (!m.emplace(k, static_cast<int>(m.size())).second) {
            fail(ErrorCode::DuplicateId, "duplicate name '" + k + "'");
        }
    };
    for (auto [line, body] : body_lines(text)) {
        auto tok = text::split_ws(body);
        const std::string& kw = tok[0];
        if (!named) {
            if (kw != "twocat" || tok.size() != 2) {
                parse_fail(line, "expected 'twocat <name>'");
            }
            name = tok[1];
            named = true;
        }
        else if (kw == "object" && tok.size() == 2) {
            add(obj_ix, tok[1]);
            objects.push_back(tok[1]);
        }
        else if (kw == "cell1" && tok.size() == 5 && tok[3] == "->") {
            add(c1_ix, tok[1]);
            cells1.push_back({tok[1], lookup(obj_ix, tok[2], line, "object"),
                              lookup(obj_ix, tok[4], line, "object")});
        }
        else if (kw == "cell2" && tok.size() == 5 && tok[3] == "=>") {
            add(c2_ix, tok[1]);
            cells2.push_back({tok[1], lookup(c1_ix, tok[2], line, "1-cell"),
                              lookup(c1_ix, tok[4], line, "1-cell")});
        }
        else if (kw == "id1" && tok.size() == 4 && tok[2] == "=") {
            id1[lookup(obj_ix, tok[1], line, "object")] = lookup(c1_ix, tok[3], line, "1-cell");
        }
        else if (kw == "id2" && tok.size() == 4 && tok[2] == "=") {
            id2[lookup(c1_ix, tok[1], line, "1-cell")] = lookup(c2_ix, tok[3], line, "2-cell");
        }
        else if (kw == "comp1" && tok.size() == 5 && tok[3] == "=") {
            comp1[{lookup(c1_ix, tok[1], line, "1-cell"), lookup(c1_ix, tok[2], line, "1-cell")}] =
                lookup(c1_ix, tok[4], line, "1-cell");
        }
        else if ((kw == "vcomp" || kw == "hcomp") && tok.size() == 5 && tok[3] == "=") {
            auto& table = kw == "vcomp" ? vcomp : hcomp;
            table[{lookup(c2_ix, tok[1], line, "2-cell"), lookup(c2_ix, tok[2], line, "2-cell")}] =
                lookup(c2_ix, tok[4], line, "2-cell");
        }
        else {
            parse_fail(line, "unknown statement '" + kw + "'");
        }
    }
    if (!named) {
        fail(ErrorCode::ParseError, "expected 'twocat <name>'");
    }
    std::vector<int> identity1, identity2;
    for (int x = 0; x < static_cast<int>(objects.size()); ++x) {
        if (!id1.count(x)) {
            fail(ErrorCode::ParseError, "object '" + objects[x] + "' has no id1");
        }
        identity1.push_back(id1[x]);
    }
    for (int f = 0; f < static_cast<int>(cells1.size()); ++f) {
        if (!id2.count(f)) {
            fail(ErrorCode::ParseError, "1-cell '" + cells1[f].name + "' has no id2");
        }
        identity2.push_back(id2[f]);
    }
    auto table = [](const std::map<std::pair<int, int>, int>& t, const char* what,
                    const auto& names) {
        return [&t, what, &names](int a, int b) {
            auto it = t.find({a, b});
            if (it == t.end()) {
                fail(ErrorCode::ParseError, std::string("no ") + what + " entry for " +
                                                names[a].name + " " + names[b].name);
            }
            return it->second;
        };
    };
    return FiniteTwoCategory::tabulate(name, objects, cells1, cells2, identity1, identity2,
                                       table(comp1, "comp1", cells1), table(vcomp, "vcomp", cells2),
                                       table(hcomp, "hcomp", cells2));
}

std::string twocat_to_text(const FiniteTwoCategory& c) {
    need_token(c.name());
    std::ostringstream out;
    out << kHeader << "\ntwocat " << c.name() << "\n";
    for (int x = 0; x < c.num_objects(); ++x) {
        need_token(c.object_name(x));
        out << "object " << c.object_name(x) << "\n";
    }
    for (int f = 0; f < c.num_cells1(); ++f) {
        need_token(c.name1(f));
        out << "cell1 " << c.name1(f) << " " << c.object_name(c.src(f)) << " -> "
            << c.object_name(c.dst(f)) << "\n";
    }
    for (int a = 0; a < c.num_cells2(); ++a) {
        need_token(c.name2(a));
        out << "cell2 " << c.name2(a) << " " << c.name1(c.src2(a)) << " => "
            << c.name1(c.dst2(a)) << "\n";
    }
    for (int x = 0; x < c.num_objects(); ++x) {
        out << "id1 " << c.object_name(x) << " = " << c.name1(c.identity1(x)) << "\n";
    }
    for (int f = 0; f < c.num_cells1(); ++f) {
        out << "id2 " << c.name1(f) << " = " << c.name2(c.identity2(f)) << "\n";
    }
    for (int f = 0; f < c.num_cells1(); ++f) {
        for (int g = 0; g < c.num_cells1(); ++g) {
            if (c.dst(f) == c.src(g)) {
                out << "comp1 " << c.name1(f) << " " << c.name1(g) << " = "
                    << c.name1(c.compose1(f, g)) << "\n";
            }
        }
    }
    for (int a = 0; a < c.num_cells2(); ++a) {
        for (int b = 0; b < c.num_cells2(); ++b) {
            if (c.dst2(a) == c.src2(b)) {
                out << "vcomp " << c.name2(a) << " " << c.name2(b) << " = "
                    << c.name2(c.vcompose(a, b)) << "\n";
            }
        }
    }
    for (int a = 0; a < c.num_cells2(); ++a) {
        for (int b = 0; b < c.num_cells2(); ++b) {
            if (c.dst(c.src2(a)) == c.src(c.src2(b))) {
                out << "hcomp " << c.name2(a) << " " << c.name2(b) << " = "
                    << c.name2(c.hcompose(a, b)) << "\n";
            }
        }
    }
    return out.str();
}

// Certificates

std::string certificate_to_text(const AnodyneCertificate& cert, const PastingDiagram& sigma,
                                const PastingDiagram& pi) {
    const PlaneGraph& g = sigma.graph();
    std::ostringstream out;
    out << kHeader << "\ncertificate\n";
    out << "graph " << text_hash(g.to_text()) << "\n";
    out << "sigma " << diagram_hash(sigma) << "\n";
    out << "pi " << diagram_hash(pi) << "\n";
    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
        const CertificateStep& s = cert.steps[k];
        MarkedSubgraph m = simplex_to_marked(g, cert.carrier, nondegenerate(s.dim, s.filler));
        out << "step " << k << ": dim=" << s.dim << " horn=" << s.horn
            << " filler=" << marked_key(g, m) << "\n";
    }
    return out.str();
}

std::vector<CertificateStep> parse_certificate(std::string_view text, const PastingDiagram& sigma,
                                               const PastingDiagram& pi) {
    const PlaneGraph& g = sigma.graph();
    auto lines = body_lines(text);
    if (lines.size() < 4 || lines[0].second != "certificate") {
        fail(ErrorCode::ParseError, "expected 'certificate' and three hash lines");
    }
    const std::pair<const char*, std::string> expected[] = {
        {"graph", text_hash(g.to_text())},
        {"sigma", diagram_hash(sigma)},
        {"pi", diagram_hash(pi)}};
    for (int i = 0; i < 3; ++i) {
        auto tok = text::split_ws(lines[i + 1].second);
        if (tok.size() != 2 || tok[0] != expected[i].first) {
            parse_fail(lines[i + 1].first, std::string("expected '") + expected[i].first +
                                               " <hash>'");
        }
        if (tok[1] != expected[i].second) {
            fail(ErrorCode::InvalidCertificate,
                 std::string(expected[i].first) + " hash does not match the certificate");
        }
    }
    std::vector<CertificateStep> steps;
    for (std::size_t i = 4; i < lines.size(); ++i) {
        auto [line, body] = lines[i];
        const std::string prefix = "step " + std::to_string(steps.size()) + ":";
        if (!body.starts_with(prefix)) {
            parse_fail(line, "expected '" + prefix + "'");
        }
        std::string_view rest = text::trim(body.substr(prefix.size()));
        auto field = [&](std::string_view key) {
            if (!rest.starts_with(key)) {
                parse_fail(line, "expected '" + std::string(key) + "'");
            }
            rest = rest.substr(key.size());
            auto sp = rest.find(' ');
            std::string v(rest.substr(0, sp));
            rest = sp == std::string_view::npos ? std::string_view{} : text::trim(rest.substr(sp));
            return v;
        };
        int dim = parse_int(field("dim="), line);
        int horn = parse_int(field("horn="), line);
        if (!rest.starts_with("filler=")) {
            parse_fail(line, "expected 'filler='");
        }
        MarkedSubgraph m = parse_marked_key(g, rest.substr(7));
        Simplex s = marked_to_simplex(g, sigma.carrier(), m);
        if (s.degenerate() || s.dim() != dim) {
            fail(ErrorCode::InvalidCertificate,
                 "step " + std::to_string(steps.size()) + ": filler has the wrong dimension");
        }
        steps.push_back(CertificateStep{dim, horn, s.id});
    }
    return steps;
}

AnodyneCertificate load_certificate(std::string_view text, const PastingDiagram& sigma,
                                    const PastingDiagram& pi) {
    if (sigma.carrier() != pi.carrier()) {
        fail(ErrorCode::InvalidArgument, "sigma and pi have different carriers");
    }
    AnodyneCertificate cert;
    cert.graph = sigma.graph();
    cert.carrier = sigma.carrier();
    cert.ambient = nerve(cert.graph, cert.carrier);
    cert.base = nerve_pd(sigma);
    cert.top = nerve_pd(pi);
    cert.steps = parse_certificate(text, sigma, pi);
    return cert;
}

// Simplicial sets

nlohmann::ordered_json sset_to_json(const FiniteSSet& s) {
    nlohmann::ordered_json j;
    j["format"] = "pastel-sset 1";
    j["dim_bound"] = s.dim_bound();
    j["dims"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.top_dim(); ++n) {
        nlohmann::ordered_json dim;
        dim["dim"] = n;
        dim["simplices"] = nlohmann::ordered_json::array();
        for (int id = 0; id < s.count(n); ++id) {
            nlohmann::ordered_json x;
            x["id"] = id;
            x["key"] = s.key(n, id);
            x["label"] = s.label(n, id);
            x["faces"] = nlohmann::ordered_json::array();
            for (const Simplex& f : s.faces(n, id)) {
                x["faces"].push_back(nlohmann::ordered_json::array({f.nd_dim, f.id, f.sur}));
            }
            dim["simplices"].push_back(std::move(x));
        }
        j["dims"].push_back(std::move(dim));
    }
    return j;
}

FiniteSSet sset_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("format") != "pastel-sset 1") {
            fail(ErrorCode::ParseError, "unknown simplicial set format");
        }
        FiniteSSet s(j.at("dim_bound").get<int>());
        for (const auto& dim : j.at("dims")) {
            const int n = dim.at("dim").get<int>();
            for (const auto& x : dim.at("simplices")) {
                std::vector<Simplex> faces;
                for (const auto& f : x.at("faces")) {
                    faces.push_back(Simplex{f.at(0).get<int>(), f.at(1).get<int>(),
                                            f.at(2).get<Op>()});
                }
                int id = s.add(n, x.at("key").get<std::vector<int>>(),
                               x.at("label").get<std::string>(), std::move(faces));
                if (id != x.at("id").get<int>()) {
                    fail(ErrorCode::ParseError, "simplex ids are not consecutive");
                }
            }
        }
        return s;
    }
    catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad simplicial set dump: ") + e.what());
    }
}

std::string sset_table(const FiniteSSet& s) {
    std::ostringstream out;
    for (int n = 0; n <= s.top_dim(); ++n) {
        for (int id = 0; id < s.count(n); ++id) {
            out << n << " " << id << " " << s.label(n, id);
            if (n > 0) {
                out << " :";
                for (const Simplex& f : s.faces(n, id)) {
                    out << " " << s.simplex_to_string(f);
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string functor_table(const SCat& dom, const SCat& target, const SFunctor& f) {
    std::ostringstream out;
    for (int x = 0; x < dom.num_objects(); ++x) {
        out << "obj " << dom.object_name(x) << " -> " << target.object_name(f.object.at(x)) << "\n";
    }
    for (int x = 0; x < dom.num_objects(); ++x) {
        for (int y = 0; y < dom.num_objects(); ++y) {
            const FiniteSSet* h = dom.hom(x, y);
            if (!h || x == y) {
                continue;
            }
            const FiniteSSet& th = *target.hom(f.object[x], f.object[y]);
            out << "hom " << dom.object_name(x) << " " << dom.object_name(y) << "\n";
            for (int n = 0; n <= h->top_dim(); ++n) {
                for (int id = 0; id < h->count(n); ++id) {
                    out << "  " << n << " " << h->label(n, id) << " -> "
                        << th.simplex_to_string(f.apply(target, x, y, nondegenerate(n, id)))
                        << "\n";
                }
            }
        }
    }
    return out.str();
}

} // namespace pastel
