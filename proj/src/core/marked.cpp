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

#include "marked.hpp"

#include <algorithm>

#include "text.hpp"

namespace pastel {

std::shared_ptr<const FiniteSSet> nerve(const PlaneGraph& g, EdgeSet h) {
    return g.memo_as<FiniteSSet>("nerve:" + std::to_string(h.bits()), [&] {
        auto poset = poset_of(g, h);
        return std::make_shared<const FiniteSSet>(nerve_of_poset(
            poset->size(), [&](int a, int b) { return poset->less_equal(a, b); },
            [&](int a) { return g.path_to_string(poset->paths[a].edges); }));
    });
}

std::shared_ptr<const FiniteSSet> nerve(const PlaneGraph& g) {
    return nerve(g, g.all_edges());
}

std::vector<int> chain_of(const FiniteSSet& nerve, const Simplex& x) {
    std::vector<int> chain;
    for (int v : nerve.vertices_of(x)) {
        chain.push_back(nerve.key(0, v)[0]);
    }
    return chain;
}

Simplex simplex_of_chain(const FiniteSSet& nerve, const std::vector<int>& chain) {
    check(!chain.empty(), "chain is nonempty");
    std::vector<int> strict;
    Op sur;
    for (int v : chain) {
        if (strict.empty() || strict.back() != v) {
            strict.push_back(v);
        }
        sur.push_back(static_cast<int>(strict.size()) - 1);
    }
    const int k = static_cast<int>(strict.size()) - 1;
    auto id = nerve.find(k, strict);
    if (!id) {
        fail(ErrorCode::NotComparable, "chain is not increasing");
    }
    return Simplex{k, *id, sur};
}

std::vector<int> face_labels(const PlaneGraph& g, const MarkedSubgraph& m) {
    const SubgraphInfo& info = g.sub(m.p);
    std::vector<int> out;
    for (int f : info.interior_faces()) {
        out.push_back(m.label.at(info.faces[f].gfaces.at(0)));
    }
    return out;
}

namespace {

bool wide_in(const PlaneGraph& g, EdgeSet h, EdgeSet p) {
    if (!p.subset_of(h) || p.empty()) {
        return false;
    }
    const SubgraphInfo& hi = g.sub(h);
    const SubgraphInfo& pi = g.sub(p);
    return pi.globular && pi.source == hi.source && pi.target == hi.target;
}

bool labels_ordered(const SubgraphInfo& info, const std::vector<int>& lambda, std::string* why) {
    auto interior = info.interior_faces();
    for (std::size_t a = 0; a < interior.size(); ++a) {
        for (std::size_t b = 0; b < interior.size(); ++b) {
            const SubFace& phi = info.faces[interior[a]];
            const SubFace& psi = info.faces[interior[b]];
            if (a != b && phi.cod_set.intersects(psi.dom_set) && lambda[a] >= lambda[b]) {
                if (why) {
                    *why = "faces sharing an edge are labelled out of order";
                }
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_admissible(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m, std::string* why) {
    auto bad = [&](const std::string& reason) {
        if (why) {
            *why = reason;
        }
        return false;
    };
    if (m.n < 0) {
        return bad("negative dimension");
    }
    if (!wide_in(g, h, m.p)) {
        return bad("P = " + g.edges_to_string(m.p) + " is not a wide globular subgraph");
    }
    if (m.label.size() != g.faces().size()) {
        return bad("label vector has the wrong size");
    }
    const SubgraphInfo& info = g.sub(m.p);
    for (std::size_t gf = 0; gf < g.faces().size(); ++gf) {
        int hf = info.face_of_gface[gf];
        if (hf == info.exterior) {
            if (m.label[gf] != 0) {
                return bad("face " + g.faces()[gf].name + " lies outside P but is labelled");
            }
            continue;
        }
        int l = m.label[gf];
        if (l < 1 || l > m.n) {
            return bad("label of " + g.faces()[gf].name + " is outside 1.." + std::to_string(m.n));
        }
        if (m.label[info.faces[hf].gfaces[0]] != l) {
            return bad("a face of P carries two labels");
        }
    }
    return labels_ordered(info, face_labels(g, m), why);
}

MarkedSubgraph chain_to_marked(const PlaneGraph& g, EdgeSet h, const std::vector<int>& chain) {
    auto poset = poset_of(g, h);
    MarkedSubgraph m;
    m.n = static_cast<int>(chain.size()) - 1;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0 && !poset->less_equal(chain[i - 1], chain[i])) {
            fail(ErrorCode::NotComparable, "chain is not increasing");
        }
        m.p |= poset->paths[chain[i]].set;
    }
    m.label.assign(g.faces().size(), 0);
    const SubgraphInfo& info = g.sub(m.p);
    for (int f : info.interior_faces()) {
        const SubFace& face = info.faces[f];
        int l = 0;
        for (int i = 1; i <= m.n && l == 0; ++i) {
            if (face.cod_set.subset_of(poset->paths[chain[i]].set)) {
                l = i;
            }
        }
        check(l > 0, "every face of P is swept by the chain");
        for (int gf : face.gfaces) {
            m.label[gf] = l;
        }
    }
    return m;
}

std::vector<int> marked_to_chain(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m) {
    std::string why;
    if (!is_admissible(g, h, m, &why)) {
        fail(ErrorCode::NotAdmissible, why);
    }
    auto poset = poset_of(g, h);
    const SubgraphInfo& info = g.sub(m.p);
    auto interior = info.interior_faces();
    auto lambda = face_labels(g, m);
    std::vector<int> cur = info.dom.edges;
    std::vector<int> chain;
    auto push = [&] {
        int idx = poset->index_of(EdgeSet::of(cur));
        check(idx >= 0, "rewritten path lies in h");
        chain.push_back(idx);
    };
    push();
    for (int k = 1; k <= m.n; ++k) {
        std::vector<int> pending;
        for (std::size_t a = 0; a < interior.size(); ++a) {
            if (lambda[a] == k) {
                pending.push_back(interior[a]);
            }
        }
        while (!pending.empty()) {
            bool progress = false;
            for (auto it = pending.begin(); it != pending.end(); ++it) {
                const SubFace& f = info.faces[*it];
                auto pos = std::search(cur.begin(), cur.end(), f.dom.begin(), f.dom.end());
                if (pos == cur.end()) {
                    continue;
                }
                std::vector<int> next(cur.begin(), pos);
                next.insert(next.end(), f.cod.begin(), f.cod.end());
                next.insert(next.end(), pos + static_cast<long>(f.dom.size()), cur.end());
                cur = std::move(next);
                pending.erase(it);
                progress = true;
                break;
            }
            if (!progress) {
                fail(ErrorCode::NotAdmissible,
                     "no face labelled " + std::to_string(k) + " has its domain on the path");
            }
        }
        push();
    }
    return chain;
}

MarkedSubgraph simplex_to_marked(const PlaneGraph& g, EdgeSet h, const Simplex& x) {
    return chain_to_marked(g, h, chain_of(*nerve(g, h), x));
}

Simplex marked_to_simplex(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m) {
    return simplex_of_chain(*nerve(g, h), marked_to_chain(g, h, m));
}

MarkedSubgraph act_operator(const PlaneGraph& g, const MarkedSubgraph& m, const Op& alpha) {
    if (alpha.empty() || !is_monotone(alpha) || alpha.front() < 0 || alpha.back() > m.n) {
        fail(ErrorCode::InvalidArgument, "operator " + op_to_string(alpha) + " does not map into [" +
                                             std::to_string(m.n) + "]");
    }
    const int k = static_cast<int>(alpha.size()) - 1;
    const int lo = alpha.front();
    const int hi = alpha.back();
    auto hat = [&](int l) {
        int j = 0;
        while (alpha[j] < l) {
            ++j;
        }
        return j;
    };
    const SubgraphInfo& info = g.sub(m.p);
    auto interior = info.interior_faces();
    auto lambda = face_labels(g, m);
    EdgeSet removed;
    // Steps 1 and 2.
    for (std::size_t a = 0; a < interior.size(); ++a) {
        const SubFace& f = info.faces[interior[a]];
        if (lambda[a] <= lo) {
            removed |= f.dom_set;
        }
        if (lambda[a] > hi) {
            removed |= f.cod_set;
        }
    }
    // Steps 3 and 4: neighbours with equal new labels merge.
    for (std::size_t a = 0; a < interior.size(); ++a) {
        for (std::size_t b = 0; b < interior.size(); ++b) {
            bool in_a = lambda[a] > lo && lambda[a] <= hi;
            bool in_b = lambda[b] > lo && lambda[b] <= hi;
            if (a != b && in_a && in_b && hat(lambda[a]) == hat(lambda[b])) {
                removed |= info.faces[interior[a]].cod_set & info.faces[interior[b]].dom_set;
            }
        }
    }
    MarkedSubgraph out;
    out.p = m.p - removed;
    out.n = k;
    out.label.assign(g.faces().size(), 0);
    const SubgraphInfo& res = g.sub(out.p);
    check(res.globular, "residual subgraph is globular");
    for (int f : res.interior_faces()) {
        int l = -1;
        for (int gf : res.faces[f].gfaces) {
            int old = m.label[gf];
            check(old > lo && old <= hi, "merged face keeps only surviving labels");
            int nl = hat(old);
            check(l < 0 || l == nl, "merged faces share their new label");
            l = nl;
        }
        for (int gf : res.faces[f].gfaces) {
            out.label[gf] = l;
        }
    }
    return out;
}

std::vector<MarkedSubgraph> enumerate_marked(const PlaneGraph& g, EdgeSet h, int n) {
    std::vector<EdgeSet> carriers;
    for_each_subset(h, [&](EdgeSet p) {
        if (wide_in(g, h, p)) {
            carriers.push_back(p);
        }
    });
    std::sort(carriers.begin(), carriers.end());
    std::vector<MarkedSubgraph> out;
    for (EdgeSet p : carriers) {
        const SubgraphInfo& info = g.sub(p);
        auto interior = info.interior_faces();
        if (!interior.empty() && n == 0) {
            continue;
        }
        std::vector<int> lambda(interior.size(), 1);
        while (true) {
            if (labels_ordered(info, lambda, nullptr)) {
                MarkedSubgraph m{p, n, std::vector<int>(g.faces().size(), 0)};
                for (std::size_t a = 0; a < interior.size(); ++a) {
                    for (int gf : info.faces[interior[a]].gfaces) {
                        m.label[gf] = lambda[a];
                    }
                }
                out.push_back(std::move(m));
            }
            std::size_t pos = 0;
            while (pos < lambda.size() && lambda[pos] == n) {
                lambda[pos++] = 1;
            }
            if (pos == lambda.size()) {
                break;
            }
            ++lambda[pos];
        }
    }
    return out;
}

MarkedSubgraph join_marked(const MarkedSubgraph& a, const MarkedSubgraph& b) {
    if (a.n != b.n || a.label.size() != b.label.size() || a.p.intersects(b.p)) {
        fail(ErrorCode::InvalidArgument, "marked subgraphs cannot be joined");
    }
    MarkedSubgraph m{a.p | b.p, a.n, a.label};
    for (std::size_t i = 0; i < m.label.size(); ++i) {
        m.label[i] = std::max(a.label[i], b.label[i]);
    }
    return m;
}

MarkedSubgraph join_iso(const PlaneGraph& g1, const MarkedSubgraph& a, const PlaneGraph& g2,
                        const MarkedSubgraph& b, const PlaneGraph& joined) {
    if (a.n != b.n) {
        fail(ErrorCode::InvalidArgument, "join of simplices of different dimensions");
    }
    const int e1 = g1.num_edges();
    MarkedSubgraph m;
    m.n = a.n;
    m.p = a.p | EdgeSet(b.p.bits() << e1);
    m.label.assign(joined.faces().size(), 0);
    for (int f : joined.interior_faces()) {
        int dart = joined.faces()[f].boundary.at(0);
        if (dart_edge(dart) < e1) {
            m.label[f] = a.label[g1.face_of_dart(dart)];
        }
        else {
            m.label[f] = b.label[g2.face_of_dart(dart - 2 * e1)];
        }
    }
    return m;
}

std::pair<MarkedSubgraph, MarkedSubgraph> split_iso(const PlaneGraph& g1, const PlaneGraph& g2,
                                                    const PlaneGraph& joined,
                                                    const MarkedSubgraph& m) {
    const int e1 = g1.num_edges();
    MarkedSubgraph a{m.p & g1.all_edges(), m.n, std::vector<int>(g1.faces().size(), 0)};
    MarkedSubgraph b{EdgeSet(m.p.bits() >> e1) & g2.all_edges(), m.n,
                     std::vector<int>(g2.faces().size(), 0)};
    for (int f : joined.interior_faces()) {
        int dart = joined.faces()[f].boundary.at(0);
        if (dart_edge(dart) < e1) {
            a.label[g1.face_of_dart(dart)] = m.label[f];
        }
        else {
            b.label[g2.face_of_dart(dart - 2 * e1)] = m.label[f];
        }
    }
    return {a, b};
}

std::string marked_key(const PlaneGraph& g, const MarkedSubgraph& m) {
    std::string s = g.edges_to_string(m.p) + "|";
    bool first = true;
    for (std::size_t f = 0; f < m.label.size(); ++f) {
        if (m.label[f] > 0) {
            s += (first ? "" : ",") + g.faces()[f].name + "=" + std::to_string(m.label[f]);
            first = false;
        }
    }
    return s + "|" + std::to_string(m.n);
}

MarkedSubgraph parse_marked_key(const PlaneGraph& g, std::string_view key) {
    std::string_view edges_part, labels_part, n_part;
    auto bar1 = key.find('|');
    auto bar2 = key.rfind('|');
    if (bar1 == std::string_view::npos || bar1 == bar2) {
        fail(ErrorCode::ParseError, "marked key needs the form {edges}|labels|n");
    }
    edges_part = text::trim(key.substr(0, bar1));
    labels_part = text::trim(key.substr(bar1 + 1, bar2 - bar1 - 1));
    n_part = text::trim(key.substr(bar2 + 1));
    if (edges_part.size() < 2 || edges_part.front() != '{' || edges_part.back() != '}') {
        fail(ErrorCode::ParseError, "edge set must be braced");
    }
    MarkedSubgraph m;
    for (const auto& name : text::split_list(edges_part.substr(1, edges_part.size() - 2), ',')) {
        auto e = g.find_edge(name);
        if (!e) {
            fail(ErrorCode::ParseError, "unknown edge " + name);
        }
        m.p.insert(*e);
    }
    m.label.assign(g.faces().size(), 0);
    for (const auto& item : text::split_list(labels_part, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            fail(ErrorCode::ParseError, "label needs face=value");
        }
        auto f = g.find_face(text::trim(std::string_view(item).substr(0, eq)));
        if (!f) {
            fail(ErrorCode::ParseError, "unknown face in " + item);
        }
        try {
            m.label[*f] = std::stoi(item.substr(eq + 1));
        }
        catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad label in " + item);
        }
    }
    try {
        m.n = std::stoi(std::string(n_part));
    }
    catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad dimension in marked key");
    }
    return m;
}

} // namespace pastel
