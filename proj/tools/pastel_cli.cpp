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

// Command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pastel/pastel.h"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Thrown for bad input files or specs; reported with exit status 2.
struct UsageError {
    std::string message;
};

// Thrown for a failing library call; reported with exit status 1.
struct DomainError {
    pastel_status status;
    std::string message;
};

void ok(pastel_status s) {
    if (s != PASTEL_OK) {
        throw DomainError{s, pastel_last_error()};
    }
}

std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    pastel_string_free(s);
    return out;
}

// Runs a call producing a string and prints it.
void emit(const std::function<pastel_status(char**)>& call) {
    char* out = nullptr;
    ok(call(&out));
    std::cout << take(out);
}

std::optional<std::string> try_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path) {
    auto text = try_read(path);
    if (!text) {
        throw UsageError{"cannot read '" + path + "'"};
    }
    return *text;
}

struct GraphDeleter {
    void operator()(pastel_graph* g) const {
        pastel_graph_free(g);
    }
};
struct DiagramDeleter {
    void operator()(pastel_diagram* d) const {
        pastel_diagram_free(d);
    }
};
using Graph = std::unique_ptr<pastel_graph, GraphDeleter>;
using Diagram = std::unique_ptr<pastel_diagram, DiagramDeleter>;

// A catalog name or a graph file.
Graph load_graph(const std::string& arg) {
    pastel_graph* g = nullptr;
    if (pastel_catalog_contains(arg.c_str())) {
        ok(pastel_graph_catalog(arg.c_str(), &g));
    }
    else {
        ok(pastel_graph_parse(read_file(arg).c_str(), &g));
    }
    return Graph(g);
}

Diagram named(const pastel_graph* g, const std::string& name) {
    pastel_diagram* d = nullptr;
    ok(pastel_diagram_named(g, name.c_str(), &d));
    return Diagram(d);
}

// A diagram file, or <graph>:<min|min-complete|max>.
Diagram load_diagram(const std::string& arg) {
    if (auto text = try_read(arg)) {
        pastel_diagram* d = nullptr;
        ok(pastel_diagram_parse(text->c_str(), &d));
        return Diagram(d);
    }
    auto colon = arg.rfind(':');
    if (colon == std::string::npos) {
        throw UsageError{"'" + arg + "' is neither a diagram file nor <graph>:<name>"};
    }
    Graph g = load_graph(arg.substr(0, colon));
    return named(g.get(), arg.substr(colon + 1));
}

// Built-in target names pass through; anything else is a 2-category file.
std::string load_target(const std::string& arg) {
    if (arg == "chain" || arg == "crossed-module" || arg == "paths" || arg == "free") {
        return arg;
    }
    return read_file(arg);
}

struct Args {
    std::string graph;
    std::string diagram;
    std::string second;
    std::string third;
    std::string file;
    std::string format = "dot";
    std::string cert;
    std::vector<std::string> hom;
    int dim = -1;
    bool marked = false;
    bool json = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Globular graphs, pasting diagrams and their nerves", "pastel"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pastel_version()));
    Args a;
    std::function<void()> action;

    auto* check = app.add_subcommand("check", "Check globularity; print source, target, dom, cod");
    check->add_option("graph", a.graph, "Catalog name or graph file")->required();
    check->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            emit([&](char** o) { return pastel_graph_check(g.get(), o); });
        };
    });

    auto* faces = app.add_subcommand("faces", "List faces with their boundary walks");
    faces->add_option("graph", a.graph)->required();
    faces->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            emit([&](char** o) { return pastel_graph_faces(g.get(), o); });
        };
    });

    auto* paths = app.add_subcommand("paths", "List st-paths and the Hasse diagram of their order");
    paths->add_option("graph", a.graph)->required();
    paths->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            emit([&](char** o) { return pastel_graph_paths(g.get(), o); });
        };
    });

    auto* nerve = app.add_subcommand("nerve", "Print the nerve of a graph");
    nerve->add_option("graph", a.graph)->required();
    nerve->add_option("--dim", a.dim, "Highest dimension printed")->check(CLI::NonNegativeNumber);
    nerve->add_flag("--marked", a.marked, "Print simplices as marked subgraphs");
    nerve->add_flag("--json", a.json, "Dump as JSON");
    nerve->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            if (a.json) {
                emit([&](char** o) { return pastel_graph_nerve_json(g.get(), o); });
            }
            else {
                emit([&](char** o) { return pastel_graph_nerve(g.get(), a.dim, a.marked, o); });
            }
        };
    });

    auto* act = app.add_subcommand("act", "Act on a marked subgraph by a simplicial operator");
    act->add_option("graph", a.graph)->required();
    act->add_option("simplex", a.second, "Marked subgraph key, e.g. {e0,e1}|phi=1|1")->required();
    act->add_option("operator", a.third, "Images of 0..k, e.g. 0,0,1")->required();
    act->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            emit([&](char** o) {
                return pastel_graph_act(g.get(), a.second.c_str(), a.third.c_str(), o);
            });
        };
    });

    auto* pd_check = app.add_subcommand("pd-check", "Print a pasting diagram and its flags");
    pd_check->add_option("diagram", a.diagram, "Diagram file or <graph>:<min|min-complete|max>")
        ->required();
    pd_check->callback([&] {
        action = [&] {
            Diagram d = load_diagram(a.diagram);
            emit([&](char** o) { return pastel_diagram_check(d.get(), o); });
        };
    });

    auto* pd_nerve = app.add_subcommand("pd-nerve", "Print the nerve of a pasting diagram");
    pd_nerve->add_option("diagram", a.diagram)->required();
    pd_nerve->callback([&] {
        action = [&] {
            Diagram d = load_diagram(a.diagram);
            emit([&](char** o) { return pastel_diagram_nerve(d.get(), o); });
        };
    });

    auto* pd_hc = app.add_subcommand("pd-hc", "List the members of sigma hc pi missing from sigma");
    pd_hc->add_option("args", a.hom, "<sigma> <pi> or <graph> <sigma-name> <pi-name>")
        ->required()
        ->expected(2, 3);
    pd_hc->callback([&] {
        action = [&] {
            Diagram sigma;
            Diagram pi;
            if (a.hom.size() == 3) {
                Graph g = load_graph(a.hom[0]);
                sigma = named(g.get(), a.hom[1]);
                pi = named(g.get(), a.hom[2]);
            }
            else {
                sigma = load_diagram(a.hom[0]);
                pi = load_diagram(a.hom[1]);
            }
            emit([&](char** o) { return pastel_diagram_hc(sigma.get(), pi.get(), nullptr, o); });
        };
    });

    auto* scat = app.add_subcommand("scat", "Dump a mapping space of C[diagram]");
    scat->add_option("diagram", a.diagram)->required();
    scat->add_option("--hom", a.hom, "Source and target vertex")->expected(2)->required();
    scat->add_flag("--json", a.json);
    scat->callback([&] {
        action = [&] {
            Diagram d = load_diagram(a.diagram);
            emit([&](char** o) {
                return pastel_diagram_hom(d.get(), a.hom[0].c_str(), a.hom[1].c_str(), a.json, o);
            });
        };
    });

    auto* label = app.add_subcommand("label", "Check a labeling and print its functor");
    label->add_option("graph", a.graph)->required();
    label->add_option("labeling", a.file, "Labeling file")->required();
    label->add_option("target", a.third, "chain, crossed-module, paths or a 2-category file")
        ->required();
    label->add_option("--dim", a.dim, "Truncation of the target nerves")->check(CLI::PositiveNumber);
    label->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            std::string l = read_file(a.file);
            std::string t = load_target(a.third);
            emit([&](char** o) { return pastel_label(g.get(), l.c_str(), t.c_str(), a.dim, o); });
        };
    });

    auto* anodyne = app.add_subcommand("anodyne", "Build or validate an inner anodyne certificate");
    anodyne->add_option("sigma", a.diagram)->required();
    anodyne->add_option("pi", a.second)->required();
    anodyne->add_option("--validate-only", a.cert, "Certificate file to validate");
    anodyne->callback([&] {
        action = [&] {
            Diagram sigma = load_diagram(a.diagram);
            Diagram pi = load_diagram(a.second);
            if (a.cert.empty()) {
                emit([&](char** o) { return pastel_certificate_build(sigma.get(), pi.get(), o); });
            }
            else {
                std::string text = read_file(a.cert);
                emit([&](char** o) {
                    return pastel_certificate_validate(sigma.get(), pi.get(), text.c_str(), o);
                });
            }
        };
    });

    auto* paste = app.add_subcommand("paste", "Composite 2-cell of a labeling");
    paste->add_option("graph", a.graph)->required();
    paste->add_option("labeling", a.file, "Labeling file, or - for the generators of free")
        ->required();
    paste->add_option("twocat", a.third, "free or a 2-category or computad file")->required();
    paste->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            std::string l = a.file == "-" ? std::string() : read_file(a.file);
            std::string t = load_target(a.third);
            emit([&](char** o) { return pastel_paste(g.get(), l.c_str(), t.c_str(), o); });
        };
    });

    auto* extend = app.add_subcommand("extend", "Extend a labeling to C[Pi_max]");
    extend->add_option("graph", a.graph)->required();
    extend->add_option("labeling", a.file)->required();
    extend->add_option("target", a.third)->required();
    extend->add_option("--dim", a.dim)->check(CLI::PositiveNumber);
    extend->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            std::string l = read_file(a.file);
            std::string t = load_target(a.third);
            emit([&](char** o) { return pastel_extend(g.get(), l.c_str(), t.c_str(), a.dim, o); });
        };
    });

    auto* render = app.add_subcommand("render", "Draw a graph");
    render->add_option("graph", a.graph)->required();
    render->add_option("--format", a.format)->check(CLI::IsMember({"dot", "tikz", "svg"}));
    render->callback([&] {
        action = [&] {
            Graph g = load_graph(a.graph);
            emit([&](char** o) { return pastel_graph_render(g.get(), a.format.c_str(), o); });
        };
    });

    auto* catalog = app.add_subcommand("catalog", "Built-in graphs and 2-categories");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "List catalog graphs");
    cat_list->callback([&] {
        action = [&] { emit([](char** o) { return pastel_catalog_names(o); }); };
    });
    auto* cat_show = catalog->add_subcommand("show", "Print a catalog graph");
    cat_show->add_option("name", a.graph)->required();
    cat_show->callback([&] {
        action = [&] {
            if (!pastel_catalog_contains(a.graph.c_str())) {
                throw UsageError{"no catalog graph '" + a.graph + "'"};
            }
            Graph g = load_graph(a.graph);
            emit([&](char** o) { return pastel_graph_to_text(g.get(), o); });
        };
    });
    auto* cat_twocat = catalog->add_subcommand("twocat", "Print a built-in 2-category");
    cat_twocat->add_option("name", a.graph, "chain or crossed-module")
        ->required()
        ->check(CLI::IsMember({"chain", "crossed-module"}));
    cat_twocat->callback([&] {
        action = [&] { emit([&](char** o) { return pastel_catalog_twocat(a.graph.c_str(), o); }); };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        action();
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kUsageError;
    }
    catch (const DomainError& e) {
        std::cerr << "error: " << pastel_status_name(e.status) << ": " << e.message << "\n";
        return kDomainError;
    }
    std::cout.flush();
    return kOk;
}
