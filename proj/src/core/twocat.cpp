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

#include "twocat.hpp"

#include <algorithm>

#include "error.hpp"
#include "paths.hpp"

namespace pastel {

int TwoCategory::whisker(int f, int a, int g) const {
    int r = a;
    if (f >= 0) {
        r = hcompose(identity2(f), r);
    }
    if (g >= 0) {
        r = hcompose(r, identity2(g));
    }
    return r;
}

int TwoCategory::compose1(const std::vector<int>& fs) const {
    check(!fs.empty(), "nonempty list of 1-cells");
    int r = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) {
        r = compose1(r, fs[i]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// FiniteTwoCategory

namespace {

int table_at(const std::vector<int>& table, int n, int a, int b, const char* what) {
    if (a < 0 || b < 0 || a >= n || b >= n || table[a * n + b] < 0) {
        fail(ErrorCode::Incompatible, std::string("cells are not composable: ") + what);
    }
    return table[a * n + b];
}

} // namespace

int FiniteTwoCategory::compose1(int f, int g) const {
    return table_at(comp1_, num_cells1(), f, g, "1-cells");
}

int FiniteTwoCategory::vcompose(int a, int b) const {
    return table_at(vcomp_, num_cells2(), a, b, "vertical");
}

int FiniteTwoCategory::hcompose(int a, int b) const {
    return table_at(hcomp_, num_cells2(), a, b, "horizontal");
}

FiniteTwoCategory FiniteTwoCategory::tabulate(std::string name, std::vector<std::string> objects,
                                              std::vector<Cell1> cells1, std::vector<Cell2> cells2,
                                              std::vector<int> identity1,
                                              std::vector<int> identity2,
                                              const std::function<int(int, int)>& compose1,
                                              const std::function<int(int, int)>& vcompose,
                                              const std::function<int(int, int)>& hcompose) {
    FiniteTwoCategory c;
    c.name_ = std::move(name);
    c.objects_ = std::move(objects);
    c.cells1_ = std::move(cells1);
    c.cells2_ = std::move(cells2);
    c.identity1_ = std::move(identity1);
    c.identity2_ = std::move(identity2);
    const int n1 = c.num_cells1();
    const int n2 = c.num_cells2();
    c.comp1_.assign(static_cast<std::size_t>(n1) * n1, -1);
    c.vcomp_.assign(static_cast<std::size_t>(n2) * n2, -1);
    c.hcomp_.assign(static_cast<std::size_t>(n2) * n2, -1);
    for (int f = 0; f < n1; ++f) {
        for (int g = 0; g < n1; ++g) {
            if (c.cells1_[f].dst == c.cells1_[g].src) {
                c.comp1_[f * n1 + g] = compose1(f, g);
            }
        }
    }
    for (int a = 0; a < n2; ++a) {
        for (int b = 0; b < n2; ++b) {
            if (c.cells2_[a].dst == c.cells2_[b].src) {
                c.vcomp_[a * n2 + b] = vcompose(a, b);
            }
            if (c.dst(c.cells2_[a].src) == c.src(c.cells2_[b].src)) {
                c.hcomp_[a * n2 + b] = hcompose(a, b);
            }
        }
    }
    std::string why = c.check_axioms();
    if (!why.empty()) {
        fail(why.rfind("interchange", 0) == 0 ? ErrorCode::InterchangeViolation
                                              : ErrorCode::Incompatible,
             c.name_ + ": " + why);
    }
    return c;
}

std::optional<int> FiniteTwoCategory::find_object(std::string_view name) const {
    for (int x = 0; x < num_objects(); ++x) {
        if (objects_[x] == name) {
            return x;
        }
    }
    return std::nullopt;
}

std::optional<int> FiniteTwoCategory::find1(std::string_view name) const {
    for (int f = 0; f < num_cells1(); ++f) {
        if (cells1_[f].name == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::optional<int> FiniteTwoCategory::find2(std::string_view name) const {
    for (int a = 0; a < num_cells2(); ++a) {
        if (cells2_[a].name == name) {
            return a;
        }
    }
    return std::nullopt;
}

std::string FiniteTwoCategory::check_axioms() const {
    const int n0 = num_objects();
    const int n1 = num_cells1();
    const int n2 = num_cells2();
    auto c1 = [&](int f, int g) { return comp1_[f * n1 + g]; };
    auto v = [&](int a, int b) { return vcomp_[a * n2 + b]; };
    auto h = [&](int a, int b) { return hcomp_[a * n2 + b]; };
    if (static_cast<int>(identity1_.size()) != n0 || static_cast<int>(identity2_.size()) != n1) {
        return "identity tables have the wrong size";
    }
    for (int f = 0; f < n1; ++f) {
        const auto& cf = cells1_[f];
        if (cf.src < 0 || cf.src >= n0 || cf.dst < 0 || cf.dst >= n0) {
            return "1-cell " + cf.name + " has a bad boundary";
        }
    }
    for (int a = 0; a < n2; ++a) {
        const auto& ca = cells2_[a];
        if (ca.src < 0 || ca.src >= n1 || ca.dst < 0 || ca.dst >= n1 ||
            src(ca.src) != src(ca.dst) || dst(ca.src) != dst(ca.dst)) {
            return "2-cell " + ca.name + " has a bad boundary";
        }
    }
    for (int x = 0; x < n0; ++x) {
        int i = identity1_[x];
        if (src(i) != x || dst(i) != x) {
            return "identity of " + objects_[x] + " has the wrong boundary";
        }
    }
    for (int f = 0; f < n1; ++f) {
        if (c1(identity1_[src(f)], f) != f || c1(f, identity1_[dst(f)]) != f) {
            return "identity law fails for 1-cell " + cells1_[f].name;
        }
        int i = identity2_[f];
        if (src2(i) != f || dst2(i) != f) {
            return "identity 2-cell of " + cells1_[f].name + " has the wrong boundary";
        }
        for (int g = 0; g < n1; ++g) {
            if (dst(f) != src(g)) {
                continue;
            }
            int fg = c1(f, g);
            if (fg < 0 || src(fg) != src(f) || dst(fg) != dst(g)) {
                return "composite of " + cells1_[f].name + " and " + cells1_[g].name +
                       " is missing or misplaced";
            }
            if (h(identity2_[f], identity2_[g]) != identity2_[fg]) {
                return "horizontal composite of identities is not an identity";
            }
            for (int k = 0; k < n1; ++k) {
                if (dst(g) == src(k) && c1(fg, k) != c1(f, c1(g, k))) {
                    return "1-cell composition is not associative";
                }
            }
        }
    }
    for (int a = 0; a < n2; ++a) {
        if (v(identity2_[src2(a)], a) != a || v(a, identity2_[dst2(a)]) != a) {
            return "vertical identity law fails for " + cells2_[a].name;
        }
        int idl = identity2_[identity1_[src(src2(a))]];
        int idr = identity2_[identity1_[dst(src2(a))]];
        if (h(idl, a) != a || h(a, idr) != a) {
            return "horizontal identity law fails for " + cells2_[a].name;
        }
        for (int b = 0; b < n2; ++b) {
            if (dst2(a) == src2(b)) {
                int ab = v(a, b);
                if (ab < 0 || src2(ab) != src2(a) || dst2(ab) != dst2(b)) {
                    return "vertical composite is missing or misplaced";
                }
                for (int c = 0; c < n2; ++c) {
                    if (dst2(b) == src2(c) && v(ab, c) != v(a, v(b, c))) {
                        return "vertical composition is not associative";
                    }
                }
            }
            if (dst(src2(a)) == src(src2(b))) {
                int ab = h(a, b);
                if (ab < 0 || src2(ab) != c1(src2(a), src2(b)) ||
                    dst2(ab) != c1(dst2(a), dst2(b))) {
                    return "horizontal composite is missing or misplaced";
                }
                for (int c = 0; c < n2; ++c) {
                    if (dst(src2(b)) == src(src2(c)) && h(ab, c) != h(a, h(b, c))) {
                        return "horizontal composition is not associative";
                    }
                }
            }
        }
    }
    for (int a = 0; a < n2; ++a) {
        for (int b = 0; b < n2; ++b) {
            if (dst2(a) != src2(b)) {
                continue;
            }
            for (int c = 0; c < n2; ++c) {
                if (dst(src2(a)) != src(src2(c))) {
                    continue;
                }
                for (int d = 0; d < n2; ++d) {
                    if (dst2(c) != src2(d)) {
                        continue;
                    }
                    if (h(v(a, b), v(c, d)) != v(h(a, c), h(b, d))) {
                        return "interchange fails for " + cells2_[a].name + ", " +
                               cells2_[b].name + ", " + cells2_[c].name + ", " +
                               cells2_[d].name;
                    }
                }
            }
        }
    }
    return {};
}

FiniteCategory FiniteTwoCategory::hom_category(int x, int y, std::vector<int>* objects,
                                               std::vector<int>* morphisms) const {
    FiniteCategory cat;
    std::vector<int> obj_of(num_cells1(), -1);
    std::vector<int> objs;
    for (int f = 0; f < num_cells1(); ++f) {
        if (src(f) == x && dst(f) == y) {
            obj_of[f] = static_cast<int>(objs.size());
            objs.push_back(f);
            cat.object_labels.push_back(cells1_[f].name);
        }
    }
    cat.num_objects = static_cast<int>(objs.size());
    std::vector<int> mor_of(num_cells2(), -1);
    std::vector<int> mors;
    for (int a = 0; a < num_cells2(); ++a) {
        if (obj_of[src2(a)] >= 0) {
            mor_of[a] = static_cast<int>(mors.size());
            mors.push_back(a);
            cat.src.push_back(obj_of[src2(a)]);
            cat.dst.push_back(obj_of[dst2(a)]);
            cat.morphism_labels.push_back(cells2_[a].name);
        }
    }
    for (int f : objs) {
        cat.identity.push_back(mor_of[identity2_[f]]);
    }
    const int m = static_cast<int>(mors.size());
    cat.comp.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (dst2(mors[i]) == src2(mors[j])) {
                cat.comp[i][j] = mor_of[vcompose(mors[i], mors[j])];
            }
        }
    }
    if (objects) {
        *objects = objs;
    }
    if (morphisms) {
        *morphisms = mors;
    }
    return cat;
}

FiniteTwoCategory crossed_module_2cat() {
    // g = a + 2b for (a, b) in Z/2 x Z/2; a 2-cell (h, g) is stored at 4h + g
    // and goes from g to d(h) + g.
    auto gname = [](int g) { return "g" + std::to_string(g & 1) + std::to_string(g >> 1); };
    auto boundary = [](int h) { return h % 2; };
    auto act = [](int g, int h) { return (g >> 1) != 0 ? (6 - h) % 6 : h; };
    std::vector<FiniteTwoCategory::Cell1> cells1;
    for (int g = 0; g < 4; ++g) {
        cells1.push_back({gname(g), 0, 0});
    }
    std::vector<FiniteTwoCategory::Cell2> cells2;
    for (int h = 0; h < 6; ++h) {
        for (int g = 0; g < 4; ++g) {
            cells2.push_back({std::to_string(h) + ":" + gname(g), g, boundary(h) ^ g});
        }
    }
    std::vector<int> identity2;
    for (int g = 0; g < 4; ++g) {
        identity2.push_back(g);
    }
    return FiniteTwoCategory::tabulate(
        "crossed-module", {"*"}, cells1, cells2, {0}, identity2,
        [](int f, int g) { return f ^ g; },
        [](int a, int b) { return 4 * ((a / 4 + b / 4) % 6) + a % 4; },
        [&](int a, int b) {
            int h1 = a / 4;
            int g1 = a % 4;
            int h2 = b / 4;
            int g2 = b % 4;
            return 4 * ((h2 + act(g2, h1)) % 6) + (g1 ^ g2);
        });
}

FiniteTwoCategory chain_2cat() {
    std::vector<std::string> objects{"0", "1", "2"};
    std::vector<FiniteTwoCategory::Cell1> cells1;
    std::vector<int> identity1;
    // 1-cell ids: identities first, then (i, j, x) for i < j.
    std::map<std::tuple<int, int, int>, int> cell1_of;
    for (int i = 0; i < 3; ++i) {
        identity1.push_back(static_cast<int>(cells1.size()));
        cells1.push_back({"id" + objects[i], i, i});
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int x = 0; x < 2; ++x) {
                cell1_of[{i, j, x}] = static_cast<int>(cells1.size());
                cells1.push_back({objects[i] + objects[j] + ":" + std::to_string(x), i, j});
            }
        }
    }
    struct Info {
        int i, j, x, y, z; // x -> y in [1], z in Z/2; i == j for identities
    };
    std::vector<FiniteTwoCategory::Cell2> cells2;
    std::vector<Info> info;
    std::vector<int> identity2(cells1.size(), -1);
    std::map<std::tuple<int, int, int, int, int>, int> cell2_of;
    for (int i = 0; i < 3; ++i) {
        identity2[identity1[i]] = static_cast<int>(cells2.size());
        cell2_of[{i, i, 0, 0, 0}] = static_cast<int>(cells2.size());
        cells2.push_back({"id" + objects[i], identity1[i], identity1[i]});
        info.push_back({i, i, 0, 0, 0});
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int x = 0; x < 2; ++x) {
                for (int y = x; y < 2; ++y) {
                    for (int z = 0; z < 2; ++z) {
                        int id = static_cast<int>(cells2.size());
                        cell2_of[{i, j, x, y, z}] = id;
                        if (x == y && z == 0) {
                            identity2[cell1_of[{i, j, x}]] = id;
                        }
                        cells2.push_back({objects[i] + objects[j] + ":" + std::to_string(x) +
                                              std::to_string(y) + "/" + std::to_string(z),
                                          cell1_of[{i, j, x}], cell1_of[{i, j, y}]});
                        info.push_back({i, j, x, y, z});
                    }
                }
            }
        }
    }
    auto is_id1 = [&](int f) { return cells1[f].src == cells1[f].dst; };
    auto level = [&](int f) { return cells1[f].name.back() - '0'; };
    return FiniteTwoCategory::tabulate(
        "chain", objects, cells1, cells2, identity1, identity2,
        [&](int f, int g) {
            if (is_id1(f)) {
                return g;
            }
            if (is_id1(g)) {
                return f;
            }
            return cell1_of.at({cells1[f].src, cells1[g].dst, std::max(level(f), level(g))});
        },
        [&](int a, int b) {
            const Info& p = info[a];
            const Info& q = info[b];
            if (p.i == p.j) {
                return a;
            }
            return cell2_of.at({p.i, p.j, p.x, q.y, (p.z + q.z) % 2});
        },
        [&](int a, int b) {
            const Info& p = info[a];
            const Info& q = info[b];
            if (p.i == p.j) {
                return b;
            }
            if (q.i == q.j) {
                return a;
            }
            return cell2_of.at(
                {p.i, q.j, std::max(p.x, q.x), std::max(p.y, q.y), (p.z + q.z) % 2});
        });
}

// ---------------------------------------------------------------------------
// Free 2-categories

FiniteTwoCategory path_2cat(const PlaneGraph& g) {
    std::vector<std::string> objects;
    for (int v = 0; v < g.num_vertices(); ++v) {
        objects.push_back(g.vertex_name(v));
    }
    // A path is determined by its endpoints and edge set.
    std::vector<FiniteTwoCategory::Cell1> cells1;
    std::vector<EdgeSet> edges1;
    std::map<std::tuple<int, int, std::uint64_t>, int> cell1_of;
    std::vector<int> identity1;
    auto add1 = [&](int x, int y, EdgeSet e, std::string name) {
        cell1_of[{x, y, e.bits()}] = static_cast<int>(cells1.size());
        cells1.push_back({std::move(name), x, y});
        edges1.push_back(e);
    };
    for (int x = 0; x < g.num_vertices(); ++x) {
        identity1.push_back(static_cast<int>(cells1.size()));
        add1(x, x, EdgeSet(), "id_" + objects[x]);
    }
    std::vector<FiniteTwoCategory::Cell2> cells2;
    std::map<std::pair<int, int>, int> cell2_of;
    std::vector<int> identity2;
    for (int x = 0; x < g.num_vertices(); ++x) {
        identity2.push_back(static_cast<int>(cells2.size()));
        cell2_of[{x, x}] = static_cast<int>(cells2.size());
        cells2.push_back({"id_" + objects[x], x, x});
    }
    for (int x = 0; x < g.num_vertices(); ++x) {
        for (int y = 0; y < g.num_vertices(); ++y) {
            if (x == y || !g.reaches(x, y)) {
                continue;
            }
            auto poset = poset_of(g, *subgraph_xy(g, x, y));
            const int base = static_cast<int>(cells1.size());
            for (const Path& p : poset->paths) {
                add1(x, y, p.set, g.path_to_string(p.edges));
            }
            identity2.resize(cells1.size(), -1);
            for (int i = 0; i < poset->size(); ++i) {
                for (int j = 0; j < poset->size(); ++j) {
                    if (!poset->less_equal(i, j)) {
                        continue;
                    }
                    const int id = static_cast<int>(cells2.size());
                    cell2_of[{base + i, base + j}] = id;
                    if (i == j) {
                        identity2[base + i] = id;
                    }
                    cells2.push_back({cells1[base + i].name + "=>" + cells1[base + j].name,
                                      base + i, base + j});
                }
            }
        }
    }
    auto concat1 = [&](int f, int h) {
        return cell1_of.at({cells1[f].src, cells1[h].dst, (edges1[f] | edges1[h]).bits()});
    };
    return FiniteTwoCategory::tabulate(
        "paths(" + g.name() + ")", objects, cells1, cells2, identity1, identity2, concat1,
        [&](int a, int b) { return cell2_of.at({cells2[a].src, cells2[b].dst}); },
        [&](int a, int b) {
            return cell2_of.at({concat1(cells2[a].src, cells2[b].src),
                                concat1(cells2[a].dst, cells2[b].dst)});
        });
}

Computad computad_of_graph(const PlaneGraph& g) {
    Computad c;
    c.name = g.name();
    for (int v = 0; v < g.num_vertices(); ++v) {
        c.objects.push_back(g.vertex_name(v));
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        c.gens1.push_back({g.edge_name(e), g.src(e), g.dst(e)});
    }
    for (int f : g.interior_faces()) {
        const Face& face = g.faces()[f];
        c.gens2.push_back({face.name, face.dom, face.cod});
    }
    return c;
}

FreeTwoCategory::FreeTwoCategory(Computad c)
    : c_(std::move(c)) {
    const int n0 = num_objects();
    for (const auto& g : c_.gens1) {
        if (g.src < 0 || g.src >= n0 || g.dst < 0 || g.dst >= n0) {
            fail(ErrorCode::InvalidArgument, "1-cell generator " + g.name + " has a bad boundary");
        }
    }
    for (const auto& g : c_.gens2) {
        if (g.src.empty() || g.dst.empty()) {
            fail(ErrorCode::InvalidArgument,
                 "2-cell generator " + g.name + " needs nonempty source and target");
        }
        int s = c_.gens1.at(g.src.front()).src;
        int a = word(s, g.src);
        int b = word(s, g.dst);
        if (dst(a) != dst(b)) {
            fail(ErrorCode::InvalidArgument, "2-cell generator " + g.name + " is not parallel");
        }
    }
}

int FreeTwoCategory::word(int x, const std::vector<int>& gens) const {
    int at = x;
    for (int g : gens) {
        if (g < 0 || g >= static_cast<int>(c_.gens1.size()) || c_.gens1[g].src != at) {
            fail(ErrorCode::Incompatible, "word of 1-cell generators does not compose");
        }
        at = c_.gens1[g].dst;
    }
    Word w{x, at, gens};
    auto it = word_index_.find(w);
    if (it != word_index_.end()) {
        return it->second;
    }
    int id = static_cast<int>(words_.size());
    words_.push_back(w);
    word_index_.emplace(std::move(w), id);
    return id;
}

const std::vector<int>& FreeTwoCategory::word_of(int f) const {
    return words_.at(f).gens;
}

int FreeTwoCategory::src(int f) const {
    return words_.at(f).src;
}

int FreeTwoCategory::dst(int f) const {
    return words_.at(f).dst;
}

int FreeTwoCategory::identity1(int x) const {
    return word(x, {});
}

int FreeTwoCategory::compose1(int f, int g) const {
    if (dst(f) != src(g)) {
        fail(ErrorCode::Incompatible, "1-cells are not composable");
    }
    std::vector<int> w = words_.at(f).gens;
    const auto& wg = words_.at(g).gens;
    w.insert(w.end(), wg.begin(), wg.end());
    return word(src(f), w);
}

std::string FreeTwoCategory::name1(int f) const {
    const auto& w = words_.at(f);
    if (w.gens.empty()) {
        return "id_" + c_.objects[w.src];
    }
    std::string out;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        out += (i ? "." : "") + c_.gens1[w.gens[i]].name;
    }
    return out;
}

std::vector<int> FreeTwoCategory::apply_step(const std::vector<int>& w, const Step& s) const {
    const auto& gen = c_.gens2.at(s.gen);
    const int n = static_cast<int>(gen.src.size());
    if (s.pos < 0 || s.pos + n > static_cast<int>(w.size()) ||
        !std::equal(gen.src.begin(), gen.src.end(), w.begin() + s.pos)) {
        fail(ErrorCode::Incompatible, "rewrite step " + gen.name + " does not apply");
    }
    std::vector<int> out(w.begin(), w.begin() + s.pos);
    out.insert(out.end(), gen.dst.begin(), gen.dst.end());
    out.insert(out.end(), w.begin() + s.pos + n, w.end());
    return out;
}

std::vector<FreeTwoCategory::Step> FreeTwoCategory::normalize(const std::vector<int>& w,
                                                              std::vector<Step> steps) const {
    auto in_len = [&](const Step& s) { return static_cast<int>(c_.gens2[s.gen].src.size()); };
    auto out_len = [&](const Step& s) { return static_cast<int>(c_.gens2[s.gen].dst.size()); };
    // Moves rest[k] to the front by exchanging it with its predecessors, or
    // returns false when some exchange is blocked.
    auto bubble = [&](std::vector<Step> rest, int k, std::vector<Step>& out) {
        for (int j = k - 1; j >= 0; --j) {
            Step a = rest[j];
            Step b = rest[j + 1];
            if (b.pos + in_len(b) <= a.pos) {
                a.pos += out_len(b) - in_len(b);
            }
            else if (b.pos >= a.pos + out_len(a)) {
                b.pos += in_len(a) - out_len(a);
            }
            else {
                return false;
            }
            rest[j] = b;
            rest[j + 1] = a;
        }
        out = std::move(rest);
        return true;
    };
    std::vector<Step> result;
    std::vector<int> cur = w;
    while (!steps.empty()) {
        std::vector<Step> best;
        for (int k = 0; k < static_cast<int>(steps.size()); ++k) {
            std::vector<Step> moved;
            if (bubble(steps, k, moved) && (best.empty() || moved[0].pos < best[0].pos)) {
                best = std::move(moved);
            }
        }
        check(!best.empty(), "the first step can always stay first");
        cur = apply_step(cur, best[0]);
        result.push_back(best[0]);
        steps.assign(best.begin() + 1, best.end());
    }
    return result;
}

int FreeTwoCategory::cell2(int f, std::vector<Step> steps) const {
    std::vector<int> w = words_.at(f).gens;
    for (const Step& s : steps) {
        w = apply_step(w, s);
    }
    steps = normalize(words_.at(f).gens, std::move(steps));
    auto key = std::make_pair(f, steps);
    auto it = cell_index_.find(key);
    if (it != cell_index_.end()) {
        return it->second;
    }
    int id = static_cast<int>(cells_.size());
    cells_.push_back({f, word(src(f), w), steps});
    cell_index_.emplace(std::move(key), id);
    return id;
}

int FreeTwoCategory::generator2(int gen) const {
    const auto& g = c_.gens2.at(gen);
    return cell2(word(c_.gens1[g.src.front()].src, g.src), {Step{0, gen}});
}

const std::vector<FreeTwoCategory::Step>& FreeTwoCategory::steps_of(int a) const {
    return cells_.at(a).steps;
}

int FreeTwoCategory::src2(int a) const {
    return cells_.at(a).src;
}

int FreeTwoCategory::dst2(int a) const {
    return cells_.at(a).dst;
}

int FreeTwoCategory::identity2(int f) const {
    return cell2(f, {});
}

int FreeTwoCategory::vcompose(int a, int b) const {
    if (dst2(a) != src2(b)) {
        fail(ErrorCode::Incompatible, "2-cells are not vertically composable");
    }
    std::vector<Step> steps = cells_.at(a).steps;
    const auto& sb = cells_.at(b).steps;
    steps.insert(steps.end(), sb.begin(), sb.end());
    return cell2(src2(a), std::move(steps));
}

int FreeTwoCategory::hcompose(int a, int b) const {
    int f = src2(a);
    int g = src2(b);
    if (dst(f) != src(g)) {
        fail(ErrorCode::Incompatible, "2-cells are not horizontally composable");
    }
    std::vector<Step> steps = cells_.at(a).steps;
    const int shift = static_cast<int>(word_of(dst2(a)).size());
    for (Step s : cells_.at(b).steps) {
        s.pos += shift;
        steps.push_back(s);
    }
    return cell2(compose1(f, g), std::move(steps));
}

std::string FreeTwoCategory::name2(int a) const {
    const Cell& c = cells_.at(a);
    if (c.steps.empty()) {
        return "id(" + name1(c.src) + ")";
    }
    std::string out;
    std::vector<int> w = words_.at(c.src).gens;
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        const Step& s = c.steps[k];
        const auto& gen = c_.gens2[s.gen];
        std::vector<std::string> parts;
        for (int i = 0; i < s.pos; ++i) {
            parts.push_back(c_.gens1[w[i]].name);
        }
        parts.push_back(gen.name);
        for (std::size_t i = s.pos + gen.src.size(); i < w.size(); ++i) {
            parts.push_back(c_.gens1[w[i]].name);
        }
        if (k) {
            out += " ; ";
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? "." : "") + parts[i];
        }
        w = apply_step(w, s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Labelings and pasting

int path_cell(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l, int from,
              const std::vector<int>& edges) {
    if (edges.empty()) {
        return c.identity1(l.object.at(from));
    }
    std::vector<int> cells;
    for (int e : edges) {
        cells.push_back(l.cell1.at(e));
    }
    (void)g;
    return c.compose1(cells);
}

std::string check_two_labeling(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l) {
    if (static_cast<int>(l.object.size()) != g.num_vertices() ||
        static_cast<int>(l.cell1.size()) != g.num_edges() ||
        static_cast<int>(l.cell2.size()) != static_cast<int>(g.faces().size())) {
        return "labeling has the wrong shape";
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (l.object[v] < 0 || l.object[v] >= c.num_objects()) {
            return "vertex " + g.vertex_name(v) + " has no object";
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        int f = l.cell1[e];
        if (f < 0 || c.src(f) != l.object[g.src(e)] || c.dst(f) != l.object[g.dst(e)]) {
            return "edge " + g.edge_name(e) + " has a 1-cell with the wrong boundary";
        }
    }
    for (int fi : g.interior_faces()) {
        const Face& face = g.faces()[fi];
        int a = l.cell2[fi];
        if (a < 0) {
            return "face " + face.name + " has no 2-cell";
        }
        try {
            if (c.src2(a) != path_cell(g, c, l, face.source, face.dom) ||
                c.dst2(a) != path_cell(g, c, l, face.source, face.cod)) {
                return "face " + face.name + " has a 2-cell with the wrong boundary";
            }
        }
        catch (const Error& e) {
            return "face " + face.name + ": " + e.what();
        }
    }
    return {};
}

TwoLabeling canonical_labeling(const PlaneGraph& g, const FreeTwoCategory& free) {
    TwoLabeling l;
    for (int v = 0; v < g.num_vertices(); ++v) {
        l.object.push_back(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        l.cell1.push_back(free.word(g.src(e), {e}));
    }
    l.cell2.assign(g.faces().size(), -1);
    auto interior = g.interior_faces();
    for (std::size_t k = 0; k < interior.size(); ++k) {
        l.cell2[interior[k]] = free.generator2(static_cast<int>(k));
    }
    return l;
}

long long for_each_two_labeling(const PlaneGraph& g, const FiniteTwoCategory& c,
                                const std::function<void(const TwoLabeling&)>& fn) {
    TwoLabeling l;
    l.object.assign(g.num_vertices(), -1);
    l.cell1.assign(g.num_edges(), -1);
    l.cell2.assign(g.faces().size(), -1);
    const auto& order = g.topo_order();
    auto faces = g.interior_faces();
    long long count = 0;
    std::function<void(std::size_t)> assign_faces = [&](std::size_t k) {
        if (k == faces.size()) {
            ++count;
            fn(l);
            return;
        }
        const Face& face = g.faces()[faces[k]];
        int from = path_cell(g, c, l, face.source, face.dom);
        int to = path_cell(g, c, l, face.source, face.cod);
        for (int a = 0; a < c.num_cells2(); ++a) {
            if (c.src2(a) == from && c.dst2(a) == to) {
                l.cell2[faces[k]] = a;
                assign_faces(k + 1);
            }
        }
        l.cell2[faces[k]] = -1;
    };
    std::function<void(int)> assign_edges = [&](int e) {
        if (e == g.num_edges()) {
            assign_faces(0);
            return;
        }
        for (int f = 0; f < c.num_cells1(); ++f) {
            if (c.src(f) == l.object[g.src(e)] && c.dst(f) == l.object[g.dst(e)]) {
                l.cell1[e] = f;
                assign_edges(e + 1);
            }
        }
        l.cell1[e] = -1;
    };
    std::function<void(std::size_t)> assign_objects = [&](std::size_t k) {
        if (k == order.size()) {
            assign_edges(0);
            return;
        }
        for (int x = 0; x < c.num_objects(); ++x) {
            l.object[order[k]] = x;
            assign_objects(k + 1);
        }
        l.object[order[k]] = -1;
    };
    assign_objects(0);
    return count;
}

namespace {

// Position of `sub` as a contiguous block of `path`, or -1.
int find_block(const std::vector<int>& path, const std::vector<int>& sub) {
    if (sub.empty() || sub.size() > path.size()) {
        return -1;
    }
    for (std::size_t i = 0; i + sub.size() <= path.size(); ++i) {
        if (std::equal(sub.begin(), sub.end(), path.begin() + i)) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

// The whiskered 2-cell collapsing face f on `path` at block position pos, and
// the resulting path.
std::pair<int, std::vector<int>> collapse(const PlaneGraph& g, const TwoCategory& c,
                                          const TwoLabeling& l, const std::vector<int>& path,
                                          int f, int pos) {
    const Face& face = g.faces()[f];
    std::vector<int> prefix(path.begin(), path.begin() + pos);
    std::vector<int> suffix(path.begin() + pos + face.dom.size(), path.end());
    int left = prefix.empty() ? -1 : path_cell(g, c, l, g.src(prefix.front()), prefix);
    int right = suffix.empty() ? -1 : path_cell(g, c, l, g.src(suffix.front()), suffix);
    int step = c.whisker(left, l.cell2[f], right);
    std::vector<int> next = prefix;
    next.insert(next.end(), face.cod.begin(), face.cod.end());
    next.insert(next.end(), suffix.begin(), suffix.end());
    return {step, next};
}

} // namespace

int paste_2cat(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l) {
    std::string why = check_two_labeling(g, c, l);
    if (!why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    const auto& rep = g.globular();
    std::vector<int> path = rep.dom.edges;
    int cell = c.identity2(path_cell(g, c, l, g.source(), path));
    while (path != rep.cod.edges) {
        bool moved = false;
        for (int f : g.interior_faces()) {
            int pos = find_block(path, g.faces()[f].dom);
            if (pos >= 0) {
                auto [step, next] = collapse(g, c, l, path, f, pos);
                cell = c.vcompose(cell, step);
                path = std::move(next);
                moved = true;
                break;
            }
        }
        check(moved, "some face lies on every path below the codomain");
    }
    return cell;
}

std::set<int> exhaustive_composite_oracle(const PlaneGraph& g, const TwoCategory& c,
                                          const TwoLabeling& l, long long* chains) {
    std::string why = check_two_labeling(g, c, l);
    if (!why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    const auto& rep = g.globular();
    struct Entry {
        std::set<int> cells;
        long long chains = 0;
    };
    std::map<std::vector<int>, Entry> memo;
    std::function<const Entry&(const std::vector<int>&)> visit =
        [&](const std::vector<int>& path) -> const Entry& {
        auto it = memo.find(path);
        if (it != memo.end()) {
            return it->second;
        }
        Entry e;
        if (path == rep.cod.edges) {
            e.cells.insert(c.identity2(path_cell(g, c, l, g.source(), path)));
            e.chains = 1;
        }
        else {
            for (int f : g.interior_faces()) {
                int pos = find_block(path, g.faces()[f].dom);
                if (pos < 0) {
                    continue;
                }
                auto [step, next] = collapse(g, c, l, path, f, pos);
                const Entry& rest = visit(next);
                for (int r : rest.cells) {
                    e.cells.insert(c.vcompose(step, r));
                }
                e.chains += rest.chains;
            }
        }
        return memo.emplace(path, std::move(e)).first->second;
    };
    const Entry& top = visit(rep.dom.edges);
    if (chains) {
        *chains = top.chains;
    }
    return top.cells;
}

} // namespace pastel
