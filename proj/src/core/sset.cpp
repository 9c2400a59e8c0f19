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

#include "sset.hpp"

#include <algorithm>
#include <numeric>

namespace pastel {

Op identity_op(int n) {
    Op a(n + 1);
    std::iota(a.begin(), a.end(), 0);
    return a;
}

Op coface(int n, int i) {
    Op a(n);
    for (int k = 0; k < n; ++k) {
        a[k] = k < i ? k : k + 1;
    }
    return a;
}

Op codegeneracy(int n, int i) {
    Op a(n + 2);
    for (int k = 0; k <= n + 1; ++k) {
        a[k] = k <= i ? k : k - 1;
    }
    return a;
}

Op compose_ops(const Op& a, const Op& b) {
    Op c(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        c[k] = a.at(b[k]);
    }
    return c;
}

bool is_monotone(const Op& a) {
    return std::is_sorted(a.begin(), a.end());
}

bool is_injective(const Op& a) {
    return std::adjacent_find(a.begin(), a.end()) == a.end();
}

bool is_surjective(const Op& a, int n) {
    if (a.empty() || a.front() != 0 || a.back() != n) {
        return false;
    }
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (a[k] - a[k - 1] > 1) {
            return false;
        }
    }
    return true;
}

std::pair<Op, Op> epi_mono(const Op& a) {
    Op mono;
    Op epi(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (mono.empty() || mono.back() != a[k]) {
            mono.push_back(a[k]);
        }
        epi[k] = static_cast<int>(mono.size()) - 1;
    }
    return {epi, mono};
}

std::vector<Op> surjections(int n, int k) {
    std::vector<Op> out;
    if (k > n || k < 0) {
        return out;
    }
    // Choose which of the n steps increment.
    Op cur(n + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int val) {
        if (pos == n) {
            if (val == k) {
                out.push_back(cur);
            }
            return;
        }
        for (int step : {0, 1}) {
            int next = val + step;
            if (next > k || k - next > n - pos - 1) {
                continue;
            }
            cur[pos + 1] = next;
            rec(pos + 1, next);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Op> monotone_maps(int m, int n) {
    std::vector<Op> out;
    Op cur(m + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

std::string op_to_string(const Op& a) {
    std::string s = "[";
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += (k ? "," : "") + std::to_string(a[k]);
    }
    return s + "]";
}

Simplex nondegenerate(int dim, int id) {
    return Simplex{dim, id, identity_op(dim)};
}

int FiniteSSet::top_dim() const {
    for (int n = static_cast<int>(cells_.size()) - 1; n >= 0; --n) {
        if (!cells_[n].empty()) {
            return n;
        }
    }
    return -1;
}

int FiniteSSet::count(int n) const {
    return n < static_cast<int>(cells_.size()) ? static_cast<int>(cells_[n].size()) : 0;
}

int FiniteSSet::total() const {
    int t = 0;
    for (const auto& c : cells_) {
        t += static_cast<int>(c.size());
    }
    return t;
}

int FiniteSSet::add(int n, std::vector<int> key, std::string label, std::vector<Simplex> faces) {
    if (dim_bound_ >= 0 && n > dim_bound_) {
        fail(ErrorCode::Internal, "simplex above the dimension bound");
    }
    if (static_cast<int>(faces.size()) != (n == 0 ? 0 : n + 1)) {
        fail(ErrorCode::Internal, "wrong number of faces");
    }
    for (const Simplex& f : faces) {
        check(f.dim() == n - 1 && f.id < count(f.nd_dim), "face of wrong dimension");
    }
    if (static_cast<int>(cells_.size()) <= n) {
        cells_.resize(n + 1);
        index_.resize(n + 1);
    }
    int id = static_cast<int>(cells_[n].size());
    if (!index_[n].emplace(key, id).second) {
        fail(ErrorCode::DuplicateId, "duplicate simplex key in dimension " + std::to_string(n));
    }
    cells_[n].push_back(Cell{std::move(key), std::move(label), std::move(faces)});
    return id;
}

std::optional<int> FiniteSSet::find(int n, const std::vector<int>& key) const {
    if (n >= static_cast<int>(index_.size())) {
        return std::nullopt;
    }
    auto it = index_[n].find(key);
    if (it == index_[n].end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::vector<int>& FiniteSSet::key(int n, int id) const {
    return cells_.at(n).at(id).key;
}

const std::string& FiniteSSet::label(int n, int id) const {
    return cells_.at(n).at(id).label;
}

const Simplex& FiniteSSet::face(int n, int id, int i) const {
    return cells_.at(n).at(id).faces.at(i);
}

const std::vector<Simplex>& FiniteSSet::faces(int n, int id) const {
    return cells_.at(n).at(id).faces;
}

Simplex FiniteSSet::apply(const Simplex& x, const Op& alpha) const {
    for (int v : alpha) {
        check(v >= 0 && v <= x.dim(), "operator out of range");
    }
    check(is_monotone(alpha), "operator is monotone");
    Op c = compose_ops(x.sur, alpha);
    auto [epi, mono] = epi_mono(c);
    // Resolve the injective part through stored faces.
    int k = x.nd_dim;
    int id = x.id;
    Simplex r = nondegenerate(k, id);
    if (static_cast<int>(mono.size()) != k + 1) {
        int i = 0;
        while (i < static_cast<int>(mono.size()) && mono[i] == i) {
            ++i;
        }
        // i is the smallest value missing from the image.
        Op rest(mono.size());
        for (std::size_t t = 0; t < mono.size(); ++t) {
            rest[t] = mono[t] < i ? mono[t] : mono[t] - 1;
        }
        r = apply(face(k, id, i), rest);
    }
    return Simplex{r.nd_dim, r.id, compose_ops(r.sur, epi)};
}

Simplex FiniteSSet::face_of(const Simplex& x, int i) const {
    return apply(x, coface(x.dim(), i));
}

Simplex FiniteSSet::degeneracy_of(const Simplex& x, int i) const {
    return apply(x, codegeneracy(x.dim(), i));
}

std::vector<int> FiniteSSet::vertices_of(const Simplex& x) const {
    std::vector<int> out;
    for (int k = 0; k <= x.dim(); ++k) {
        out.push_back(apply(x, Op{k}).id);
    }
    return out;
}

std::vector<Simplex> FiniteSSet::all_simplices(int n) const {
    std::vector<Simplex> out;
    for (int k = 0; k <= n; ++k) {
        auto surs = surjections(n, k);
        for (int id = 0; id < count(k); ++id) {
            for (const Op& s : surs) {
                out.push_back(Simplex{k, id, s});
            }
        }
    }
    return out;
}

std::string FiniteSSet::simplex_to_string(const Simplex& x) const {
    std::string s = label(x.nd_dim, x.id);
    if (x.degenerate()) {
        s += "*" + op_to_string(x.sur);
    }
    return s;
}

bool FiniteSSet::check_identities(std::string* why) const {
    for (int n = 2; n <= top_dim(); ++n) {
        for (int id = 0; id < count(n); ++id) {
            Simplex x = nondegenerate(n, id);
            for (int j = 0; j <= n; ++j) {
                for (int i = 0; i < j; ++i) {
                    Simplex a = face_of(face_of(x, j), i);
                    Simplex b = face_of(face_of(x, i), j - 1);
                    if (!(a == b)) {
                        if (why) {
                            *why = "simplicial identity fails on " + label(n, id);
                        }
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

FiniteSSet standard_simplex(int n) {
    return nerve_of_poset(n + 1, [](int a, int b) { return a <= b; },
                          [](int a) { return std::to_string(a); });
}

FiniteSSet nerve_of_poset(int size, const std::function<bool(int, int)>& leq,
                          const std::function<std::string(int)>& label, int max_dim) {
    FiniteSSet s(max_dim);
    auto name = [&](const std::vector<int>& chain) {
        std::string out;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            out += (k ? "<" : "") + (label ? label(chain[k]) : std::to_string(chain[k]));
        }
        return out;
    };
    std::vector<std::vector<int>> level;
    for (int v = 0; v < size; ++v) {
        level.push_back({v});
        s.add(0, {v}, name({v}), {});
    }
    for (int n = 1; max_dim < 0 || n <= max_dim; ++n) {
        std::vector<std::vector<int>> next;
        for (const auto& chain : level) {
            for (int v = 0; v < size; ++v) {
                if (v != chain.back() && leq(chain.back(), v)) {
                    auto c = chain;
                    c.push_back(v);
                    next.push_back(std::move(c));
                }
            }
        }
        if (next.empty()) {
            break;
        }
        std::sort(next.begin(), next.end());
        for (const auto& chain : next) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= n; ++i) {
                auto f = chain;
                f.erase(f.begin() + i);
                faces.push_back(nondegenerate(n - 1, *s.find(n - 1, f)));
            }
            s.add(n, chain, name(chain), std::move(faces));
        }
        level = std::move(next);
    }
    return s;
}

FiniteSSet nerve_of_category(const FiniteCategory& c, int max_dim) {
    FiniteSSet s(max_dim);
    auto mlabel = [&](int f) {
        return f < static_cast<int>(c.morphism_labels.size()) ? c.morphism_labels[f]
                                                               : "m" + std::to_string(f);
    };
    for (int x = 0; x < c.num_objects; ++x) {
        std::string l = x < static_cast<int>(c.object_labels.size()) ? c.object_labels[x]
                                                                     : std::to_string(x);
        s.add(0, {x}, l, {});
    }
    // Normal form of a string of morphisms that may contain identities.
    auto normalize = [&](const std::vector<int>& str, int start) {
        std::vector<int> kept;
        Op sur{0};
        for (int f : str) {
            if (!c.is_identity(f)) {
                kept.push_back(f);
            }
            sur.push_back(static_cast<int>(kept.size()));
        }
        int k = static_cast<int>(kept.size());
        int id = k == 0 ? *s.find(0, {start}) : *s.find(k, kept);
        return Simplex{k, id, sur};
    };
    std::vector<std::vector<int>> level;
    for (int n = 1; n <= max_dim; ++n) {
        std::vector<std::vector<int>> next;
        if (n == 1) {
            for (int f = 0; f < c.num_morphisms(); ++f) {
                if (!c.is_identity(f)) {
                    next.push_back({f});
                }
            }
        }
        else {
            for (const auto& str : level) {
                for (int f = 0; f < c.num_morphisms(); ++f) {
                    if (!c.is_identity(f) && c.src[f] == c.dst[str.back()]) {
                        auto t = str;
                        t.push_back(f);
                        next.push_back(std::move(t));
                    }
                }
            }
        }
        if (next.empty()) {
            break;
        }
        for (const auto& str : next) {
            std::vector<Simplex> faces;
            if (n == 1) {
                faces.push_back(nondegenerate(0, *s.find(0, {c.dst[str[0]]})));
                faces.push_back(nondegenerate(0, *s.find(0, {c.src[str[0]]})));
            }
            else {
                for (int i = 0; i <= n; ++i) {
                    std::vector<int> f;
                    int start = c.src[str[0]];
                    if (i == 0) {
                        f.assign(str.begin() + 1, str.end());
                        start = c.dst[str[0]];
                    }
                    else if (i == n) {
                        f.assign(str.begin(), str.end() - 1);
                    }
                    else {
                        f.assign(str.begin(), str.begin() + i - 1);
                        f.push_back(c.comp[str[i - 1]][str[i]]);
                        f.insert(f.end(), str.begin() + i + 1, str.end());
                    }
                    faces.push_back(normalize(f, start));
                }
            }
            std::string l;
            for (std::size_t k = 0; k < str.size(); ++k) {
                l += (k ? ";" : "") + mlabel(str[k]);
            }
            s.add(n, str, l, std::move(faces));
        }
        level = std::move(next);
    }
    return s;
}

bool is_simplicial(const FiniteSSet& a, const FiniteSSet& b, const SMap& f, int max_dim,
                   std::string* why) {
    int top = a.top_dim();
    if (max_dim >= 0) {
        top = std::min(top, max_dim);
    }
    for (int n = 0; n <= top; ++n) {
        if (static_cast<int>(f.images.size()) <= n ||
            static_cast<int>(f.images[n].size()) != a.count(n)) {
            if (why) {
                *why = "map does not cover dimension " + std::to_string(n);
            }
            return false;
        }
        for (int id = 0; id < a.count(n); ++id) {
            const Simplex& y = f.images[n][id];
            if (y.dim() != n || y.nd_dim > b.top_dim() || y.id >= b.count(y.nd_dim)) {
                if (why) {
                    *why = "bad image of " + a.label(n, id);
                }
                return false;
            }
            if (n == 0) {
                continue;
            }
            for (int i = 0; i <= n; ++i) {
                Simplex lhs = f.apply(b, a.face(n, id, i));
                Simplex rhs = b.face_of(y, i);
                if (!(lhs == rhs)) {
                    if (why) {
                        *why = "face " + std::to_string(i) + " of " + a.label(n, id) +
                               " is not preserved";
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

FiniteSSet sset_product(const FiniteSSet& a, const FiniteSSet& b) {
    int bound = -1;
    if (a.dim_bound() >= 0 && b.dim_bound() >= 0) {
        bound = std::min(a.dim_bound(), b.dim_bound());
    }
    else if (a.dim_bound() >= 0 || b.dim_bound() >= 0) {
        bound = std::max(a.dim_bound(), b.dim_bound());
    }
    FiniteSSet p(bound);
    int top = std::max(0, a.top_dim()) + std::max(0, b.top_dim());
    if (bound >= 0) {
        top = std::min(top, bound);
    }
    auto key_of = [](const Simplex& x, const Simplex& y) {
        std::vector<int> key{x.nd_dim, x.id, y.nd_dim, y.id};
        key.insert(key.end(), x.sur.begin(), x.sur.end());
        key.insert(key.end(), y.sur.begin(), y.sur.end());
        return key;
    };
    // Splits off the common degeneracy of a pair of equal-dimensional simplices.
    auto normalize = [&](const Simplex& x, const Simplex& y) {
        int d = x.dim();
        Op rho{0};
        for (int i = 0; i < d; ++i) {
            bool collapse = x.sur[i] == x.sur[i + 1] && y.sur[i] == y.sur[i + 1];
            rho.push_back(rho.back() + (collapse ? 0 : 1));
        }
        int dd = rho.back();
        Simplex xs{x.nd_dim, x.id, Op(dd + 1)};
        Simplex ys{y.nd_dim, y.id, Op(dd + 1)};
        for (int i = 0; i <= d; ++i) {
            xs.sur[rho[i]] = x.sur[i];
            ys.sur[rho[i]] = y.sur[i];
        }
        auto id = p.find(dd, key_of(xs, ys));
        check(id.has_value(), "product face is present");
        return Simplex{dd, *id, rho};
    };
    for (int n = 0; n <= top; ++n) {
        for (int pdim = 0; pdim <= n; ++pdim) {
            auto sa = surjections(n, pdim);
            for (int qdim = 0; qdim <= n; ++qdim) {
                auto sb = surjections(n, qdim);
                for (int xi = 0; xi < a.count(pdim); ++xi) {
                    for (int yi = 0; yi < b.count(qdim); ++yi) {
                        for (const Op& s : sa) {
                            for (const Op& t : sb) {
                                bool injective = true;
                                for (int i = 0; i < n && injective; ++i) {
                                    injective = !(s[i] == s[i + 1] && t[i] == t[i + 1]);
                                }
                                if (!injective) {
                                    continue;
                                }
                                Simplex x{pdim, xi, s};
                                Simplex y{qdim, yi, t};
                                std::vector<Simplex> faces;
                                if (n > 0) {
                                    for (int i = 0; i <= n; ++i) {
                                        faces.push_back(
                                            normalize(a.face_of(x, i), b.face_of(y, i)));
                                    }
                                }
                                std::string label = "(" + a.simplex_to_string(x) + ", " +
                                                    b.simplex_to_string(y) + ")";
                                p.add(n, key_of(x, y), label, std::move(faces));
                            }
                        }
                    }
                }
            }
        }
    }
    return p;
}

namespace {

std::vector<int> face_signature(const std::vector<Simplex>& faces,
                                const std::vector<std::vector<int>>& map) {
    std::vector<int> sig;
    for (const Simplex& f : faces) {
        sig.push_back(f.nd_dim);
        sig.push_back(map.empty() ? f.id : map[f.nd_dim][f.id]);
        sig.insert(sig.end(), f.sur.begin(), f.sur.end());
        sig.push_back(-1);
    }
    return sig;
}

} // namespace

std::optional<std::vector<std::vector<int>>> sset_iso(const FiniteSSet& a, const FiniteSSet& b) {
    if (a.dim_bound() != b.dim_bound() || a.top_dim() != b.top_dim()) {
        return std::nullopt;
    }
    const int top = a.top_dim();
    for (int n = 0; n <= top; ++n) {
        if (a.count(n) != b.count(n)) {
            return std::nullopt;
        }
    }
    if (top < 0) {
        return std::vector<std::vector<int>>{};
    }
    const int nv = a.count(0);
    auto edge_counts = [&](const FiniteSSet& s) {
        std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
        for (int id = 0; id < s.count(1); ++id) {
            int from = s.face(1, id, 1).id;
            int to = s.face(1, id, 0).id;
            ++m[from][to];
        }
        return m;
    };
    auto ea = edge_counts(a);
    auto eb = edge_counts(b);
    auto degree = [&](const std::vector<std::vector<int>>& m, int v) {
        int in = 0, out = 0;
        for (int w = 0; w < nv; ++w) {
            out += m[v][w];
            in += m[w][v];
        }
        return std::pair(in, out);
    };
    std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces(top + 1);
    for (int n = 1; n <= top; ++n) {
        for (int id = 0; id < b.count(n); ++id) {
            by_faces[n][face_signature(b.faces(n, id), {})].push_back(id);
        }
    }
    std::vector<std::pair<int, int>> items;
    std::vector<int> vorder(nv);
    std::iota(vorder.begin(), vorder.end(), 0);
    std::stable_sort(vorder.begin(), vorder.end(), [&](int x, int y) {
        auto [ix, ox] = degree(ea, x);
        auto [iy, oy] = degree(ea, y);
        return ix + ox > iy + oy;
    });
    for (int v : vorder) {
        items.emplace_back(0, v);
    }
    for (int n = 1; n <= top; ++n) {
        for (int id = 0; id < a.count(n); ++id) {
            items.emplace_back(n, id);
        }
    }
    std::vector<std::vector<int>> map(top + 1), used(top + 1);
    for (int n = 0; n <= top; ++n) {
        map[n].assign(a.count(n), -1);
        used[n].assign(b.count(n), 0);
    }
    std::vector<int> assigned_vertices;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == items.size()) {
            return true;
        }
        auto [n, id] = items[k];
        if (n == 0) {
            for (int w = 0; w < nv; ++w) {
                if (used[0][w] || degree(ea, id) != degree(eb, w) || ea[id][id] != eb[w][w]) {
                    continue;
                }
                bool ok = true;
                for (int u : assigned_vertices) {
                    int wu = map[0][u];
                    if (ea[u][id] != eb[wu][w] || ea[id][u] != eb[w][wu]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                map[0][id] = w;
                used[0][w] = 1;
                assigned_vertices.push_back(id);
                if (rec(k + 1)) {
                    return true;
                }
                assigned_vertices.pop_back();
                used[0][w] = 0;
                map[0][id] = -1;
            }
            return false;
        }
        auto it = by_faces[n].find(face_signature(a.faces(n, id), map));
        if (it == by_faces[n].end()) {
            return false;
        }
        for (int w : it->second) {
            if (used[n][w]) {
                continue;
            }
            map[n][id] = w;
            used[n][w] = 1;
            if (rec(k + 1)) {
                return true;
            }
            used[n][w] = 0;
            map[n][id] = -1;
        }
        return false;
    };
    if (!rec(0)) {
        return std::nullopt;
    }
    return map;
}

Subcomplex::Subcomplex(const FiniteSSet& ambient) {
    member_.resize(std::max(0, ambient.top_dim() + 1));
    for (int n = 0; n <= ambient.top_dim(); ++n) {
        member_[n].assign(ambient.count(n), 0);
    }
}

void Subcomplex::add_closed(const FiniteSSet& ambient, int n, int id) {
    if (member_[n][id]) {
        return;
    }
    member_[n][id] = 1;
    if (n == 0) {
        return;
    }
    for (const Simplex& f : ambient.faces(n, id)) {
        add_closed(ambient, f.nd_dim, f.id);
    }
}

int Subcomplex::count(int n) const {
    if (n >= static_cast<int>(member_.size())) {
        return 0;
    }
    return static_cast<int>(std::count(member_[n].begin(), member_[n].end(), 1));
}

int Subcomplex::total() const {
    int t = 0;
    for (int n = 0; n < dims(); ++n) {
        t += count(n);
    }
    return t;
}

bool Subcomplex::is_closed(const FiniteSSet& ambient) const {
    for (int n = 1; n < dims(); ++n) {
        for (int id = 0; id < static_cast<int>(member_[n].size()); ++id) {
            if (!member_[n][id]) {
                continue;
            }
            for (const Simplex& f : ambient.faces(n, id)) {
                if (!member_[f.nd_dim][f.id]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Subcomplex Subcomplex::operator|(const Subcomplex& o) const {
    Subcomplex r = *this;
    for (int n = 0; n < dims(); ++n) {
        for (std::size_t i = 0; i < member_[n].size(); ++i) {
            r.member_[n][i] = member_[n][i] | o.member_[n][i];
        }
    }
    return r;
}

Subcomplex Subcomplex::operator&(const Subcomplex& o) const {
    Subcomplex r = *this;
    for (int n = 0; n < dims(); ++n) {
        for (std::size_t i = 0; i < member_[n].size(); ++i) {
            r.member_[n][i] = member_[n][i] & o.member_[n][i];
        }
    }
    return r;
}

bool Subcomplex::subset_of(const Subcomplex& o) const {
    for (int n = 0; n < dims(); ++n) {
        for (std::size_t i = 0; i < member_[n].size(); ++i) {
            if (member_[n][i] && !o.member_[n][i]) {
                return false;
            }
        }
    }
    return true;
}

FiniteSSet restrict_to(const FiniteSSet& ambient, const Subcomplex& sub,
                       std::vector<std::vector<int>>* id_map) {
    FiniteSSet out(ambient.dim_bound());
    std::vector<std::vector<int>> map(std::max(0, ambient.top_dim() + 1));
    for (int n = 0; n <= ambient.top_dim(); ++n) {
        map[n].assign(ambient.count(n), -1);
        for (int id = 0; id < ambient.count(n); ++id) {
            if (!sub.contains(n, id)) {
                continue;
            }
            std::vector<Simplex> faces;
            if (n > 0) {
                for (Simplex f : ambient.faces(n, id)) {
                    f.id = map[f.nd_dim][f.id];
                    check(f.id >= 0, "subcomplex is closed under faces");
                    faces.push_back(f);
                }
            }
            map[n][id] = out.add(n, ambient.key(n, id), ambient.label(n, id), std::move(faces));
        }
    }
    if (id_map) {
        *id_map = std::move(map);
    }
    return out;
}

} // namespace pastel
