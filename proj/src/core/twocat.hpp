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

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plane_graph.hpp"
#include "sset.hpp"

namespace pastel {

/// A strict 2-category with integer handles for 1-cells and 2-cells.
/// Composition is written in diagrammatic order: compose1(f, g) is f then g.
class TwoCategory {
public:
    virtual ~TwoCategory() = default;

    virtual std::string name() const = 0;
    virtual int num_objects() const = 0;
    virtual std::string object_name(int x) const = 0;

    virtual int src(int f) const = 0;
    virtual int dst(int f) const = 0;
    virtual int identity1(int x) const = 0;
    virtual int compose1(int f, int g) const = 0;
    virtual std::string name1(int f) const = 0;

    virtual int src2(int a) const = 0;
    virtual int dst2(int a) const = 0;
    virtual int identity2(int f) const = 0;
    /// a then b, with dst2(a) == src2(b).
    virtual int vcompose(int a, int b) const = 0;
    /// a then b along objects, with dst(src2(a)) == src(src2(b)).
    virtual int hcompose(int a, int b) const = 0;
    virtual std::string name2(int a) const = 0;

    /// f . a . g for 1-cells f, g; either may be -1 for "none".
    int whisker(int f, int a, int g) const;
    /// Composite of a nonempty list of composable 1-cells.
    int compose1(const std::vector<int>& fs) const;
};

/// A finite strict 2-category with every composite tabulated.
class FiniteTwoCategory final : public TwoCategory {
public:
    struct Cell1 {
        std::string name;
        int src = -1;
        int dst = -1;
    };
    struct Cell2 {
        std::string name;
        int src = -1;
        int dst = -1;
    };

    FiniteTwoCategory() = default;

    /// Fills the tables by evaluating the given operations on every
    /// composable pair. Throws InterchangeViolation (or Incompatible) when
    /// the result is not a strict 2-category.
    static FiniteTwoCategory tabulate(std::string name, std::vector<std::string> objects,
                                      std::vector<Cell1> cells1, std::vector<Cell2> cells2,
                                      std::vector<int> identity1, std::vector<int> identity2,
                                      const std::function<int(int, int)>& compose1,
                                      const std::function<int(int, int)>& vcompose,
                                      const std::function<int(int, int)>& hcompose);

    std::string name() const override {
        return name_;
    }
    int num_objects() const override {
        return static_cast<int>(objects_.size());
    }
    std::string object_name(int x) const override {
        return objects_.at(x);
    }
    int src(int f) const override {
        return cells1_.at(f).src;
    }
    int dst(int f) const override {
        return cells1_.at(f).dst;
    }
    int identity1(int x) const override {
        return identity1_.at(x);
    }
    int compose1(int f, int g) const override;
    std::string name1(int f) const override {
        return cells1_.at(f).name;
    }
    int src2(int a) const override {
        return cells2_.at(a).src;
    }
    int dst2(int a) const override {
        return cells2_.at(a).dst;
    }
    int identity2(int f) const override {
        return identity2_.at(f);
    }
    int vcompose(int a, int b) const override;
    int hcompose(int a, int b) const override;
    std::string name2(int a) const override {
        return cells2_.at(a).name;
    }
    using TwoCategory::compose1;

    int num_cells1() const {
        return static_cast<int>(cells1_.size());
    }
    int num_cells2() const {
        return static_cast<int>(cells2_.size());
    }
    const std::vector<Cell1>& cells1() const {
        return cells1_;
    }
    const std::vector<Cell2>& cells2() const {
        return cells2_;
    }
    std::optional<int> find_object(std::string_view name) const;
    std::optional<int> find1(std::string_view name) const;
    std::optional<int> find2(std::string_view name) const;

    /// Units, associativity and interchange, checked on every composable
    /// tuple. Returns an empty string on success.
    std::string check_axioms() const;

    /// The hom category from x to y. `objects` and `morphisms` receive the
    /// 1-cell and 2-cell behind each object and morphism.
    FiniteCategory hom_category(int x, int y, std::vector<int>* objects = nullptr,
                                std::vector<int>* morphisms = nullptr) const;

private:
    friend FiniteTwoCategory parse_twocat(std::string_view text);

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Cell1> cells1_;
    std::vector<Cell2> cells2_;
    std::vector<int> identity1_;
    std::vector<int> identity2_;
    std::vector<int> comp1_;
    std::vector<int> vcomp_;
    std::vector<int> hcomp_;
};

/// One object, 1-cells Z/2 x Z/2, 2-cells from the crossed module
/// Z/6 -> Z/2 x Z/2, h |-> (h mod 2, 0), where (a, b) acts on Z/6 by the
/// sign (-1)^b. Horizontal composition twists by the action, so interchange
/// is not automatic.
FiniteTwoCategory crossed_module_2cat();

/// Objects 0 < 1 < 2; hom(i, j) for i < j is the category [1] x BZ/2,
/// hom(i, i) is trivial and hom(i, j) is empty for i > j. Horizontal
/// composition is max on [1] and addition on Z/2.
FiniteTwoCategory chain_2cat();

/// The free 2-category on a globular graph, tabulated: 1-cells are directed
/// paths, and there is one 2-cell p => q for each pair of parallel paths
/// with p <= q.
FiniteTwoCategory path_2cat(const PlaneGraph& g);

/// A 2-computad: objects, 1-cell generators and 2-cell generators between
/// nonempty words of 1-cell generators.
struct Computad {
    struct Gen1 {
        std::string name;
        int src = -1;
        int dst = -1;
    };
    struct Gen2 {
        std::string name;
        std::vector<int> src;
        std::vector<int> dst;
    };
    std::string name;
    std::vector<std::string> objects;
    std::vector<Gen1> gens1;
    std::vector<Gen2> gens2;
};

/// Objects the vertices, 1-cell generators the edges and 2-cell generators
/// the interior faces of g.
Computad computad_of_graph(const PlaneGraph& g);

/// The free strict 2-category on a computad. A 2-cell is a rewrite sequence
/// on words of generators, kept in a canonical order: at each stage the step
/// that can be moved first and acts furthest left goes first. Two sequences
/// give the same 2-cell iff they have the same canonical order. Cells are
/// interned on demand.
class FreeTwoCategory final : public TwoCategory {
public:
    struct Step {
        int pos = 0;
        int gen = 0;
        friend bool operator==(const Step&, const Step&) = default;
        friend auto operator<=>(const Step&, const Step&) = default;
    };

    explicit FreeTwoCategory(Computad c);

    const Computad& computad() const {
        return c_;
    }
    std::string name() const override {
        return c_.name;
    }
    int num_objects() const override {
        return static_cast<int>(c_.objects.size());
    }
    std::string object_name(int x) const override {
        return c_.objects.at(x);
    }
    int src(int f) const override;
    int dst(int f) const override;
    int identity1(int x) const override;
    int compose1(int f, int g) const override;
    std::string name1(int f) const override;
    int src2(int a) const override;
    int dst2(int a) const override;
    int identity2(int f) const override;
    int vcompose(int a, int b) const override;
    int hcompose(int a, int b) const override;
    std::string name2(int a) const override;
    using TwoCategory::compose1;

    /// The 1-cell of a word of generators from x.
    int word(int x, const std::vector<int>& gens) const;
    const std::vector<int>& word_of(int f) const;
    /// The generating 2-cell on its source word.
    int generator2(int gen) const;
    /// Canonical step sequence of a 2-cell.
    const std::vector<Step>& steps_of(int a) const;
    /// Cell of a step sequence on the word of `f`; throws Incompatible when
    /// a step does not apply.
    int cell2(int f, std::vector<Step> steps) const;

private:
    struct Word {
        int src;
        int dst;
        std::vector<int> gens;
        friend auto operator<=>(const Word&, const Word&) = default;
    };
    struct Cell {
        int src;
        int dst;
        std::vector<Step> steps;
    };
    std::vector<int> apply_step(const std::vector<int>& w, const Step& s) const;
    std::vector<Step> normalize(const std::vector<int>& w, std::vector<Step> steps) const;

    Computad c_;
    mutable std::vector<Word> words_;
    mutable std::map<Word, int> word_index_;
    mutable std::vector<Cell> cells_;
    mutable std::map<std::pair<int, std::vector<Step>>, int> cell_index_;
};

/// A labeling of a plane graph in a 2-category: an object per vertex, a
/// 1-cell per edge and a 2-cell per interior face (entries for the exterior
/// face are ignored).
struct TwoLabeling {
    std::vector<int> object;
    std::vector<int> cell1;
    std::vector<int> cell2;

    friend bool operator==(const TwoLabeling&, const TwoLabeling&) = default;
};

/// Empty string when the labeling is valid.
std::string check_two_labeling(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l);
/// Each edge and face labelled by its own generator.
TwoLabeling canonical_labeling(const PlaneGraph& g, const FreeTwoCategory& free);
/// Calls `fn` on every valid labeling of g in a finite 2-category; returns
/// their number.
long long for_each_two_labeling(const PlaneGraph& g, const FiniteTwoCategory& c,
                                const std::function<void(const TwoLabeling&)>& fn);

/// The 1-cell labelling a path.
int path_cell(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l, int from,
              const std::vector<int>& edges);

/// Composite 2-cell from dom g to cod g, collapsing faces in the order that
/// always takes the first face (by index) whose domain lies on the current
/// path. Throws InvalidLabeling.
int paste_2cat(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l);

/// Composite along every maximal chain of st-paths; the set of distinct
/// results. `chains` receives the number of maximal chains.
std::set<int> exhaustive_composite_oracle(const PlaneGraph& g, const TwoCategory& c,
                                          const TwoLabeling& l, long long* chains = nullptr);

} // namespace pastel
