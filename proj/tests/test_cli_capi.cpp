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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pastel/pastel.h"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
    std::string cmd = std::string(PASTEL_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    pastel_string_free(s);
    return out;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

int count_lines_starting(const std::string& s, const std::string& prefix) {
    int n = 0;
    for (const auto& line : lines(s)) {
        n += line.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "pastel_cli_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and errors") {
    CHECK(std::string(pastel_status_name(PASTEL_OK)) == "Ok");
    CHECK(std::string(pastel_status_name(PASTEL_INVALID_LABELING)) == "InvalidLabeling");
    CHECK(std::string(pastel_status_name(PASTEL_INTERNAL)) == "Internal");
    pastel_graph* g = nullptr;
    CHECK(pastel_graph_parse("not a graph", &g) == PASTEL_PARSE_ERROR);
    CHECK(g == nullptr);
    CHECK(std::string(pastel_last_error()) != "");
    CHECK(pastel_graph_catalog(nullptr, &g) == PASTEL_INVALID_ARGUMENT);
    CHECK(pastel_graph_num_edges(nullptr) == -1);
}

TEST_CASE("graph handles") {
    char* names = nullptr;
    REQUIRE(pastel_catalog_names(&names) == PASTEL_OK);
    auto list = lines(take(names));
    CHECK(list.size() == 7);
    for (const auto& name : list) {
        CAPTURE(name);
        CHECK(pastel_catalog_contains(name.c_str()) == 1);
        pastel_graph* g = nullptr;
        REQUIRE(pastel_graph_catalog(name.c_str(), &g) == PASTEL_OK);
        char* text = nullptr;
        REQUIRE(pastel_graph_to_text(g, &text) == PASTEL_OK);
        std::string t = take(text);
        pastel_graph* h = nullptr;
        REQUIRE(pastel_graph_parse(t.c_str(), &h) == PASTEL_OK);
        CHECK(pastel_graph_num_vertices(h) == pastel_graph_num_vertices(g));
        CHECK(pastel_graph_num_edges(h) == pastel_graph_num_edges(g));
        CHECK(pastel_graph_num_faces(h) == pastel_graph_num_faces(g));
        REQUIRE(pastel_graph_to_text(h, &text) == PASTEL_OK);
        CHECK(take(text) == t);
        char* report = nullptr;
        CHECK(pastel_graph_check(g, &report) == PASTEL_OK);
        CHECK(take(report).find("source ") != std::string::npos);
        pastel_graph_free(h);
        pastel_graph_free(g);
    }
    CHECK(pastel_catalog_contains("nope") == 0);
}

TEST_CASE("nerve and operators") {
    pastel_graph* g = nullptr;
    REQUIRE(pastel_graph_catalog("B2", &g) == PASTEL_OK);
    char* out = nullptr;
    REQUIRE(pastel_graph_nerve(g, -1, 0, &out) == PASTEL_OK);
    std::string table = take(out);
    CHECK(count_lines_starting(table, "dim ") == 3);
    CHECK(table.find("dim 0: 3\n") != std::string::npos);
    CHECK(table.find("dim 1: 3\n") != std::string::npos);
    CHECK(table.find("dim 2: 1\n") != std::string::npos);
    REQUIRE(pastel_graph_nerve(g, 2, 1, &out) == PASTEL_OK);
    auto marked = lines(take(out));
    std::string top = marked.back().substr(marked.back().find('{'));
    // The top simplex of B2 at the degeneracy s0 of its first vertex.
    REQUIRE(pastel_graph_act(g, top.c_str(), "0,1,2", &out) == PASTEL_OK);
    CHECK(take(out) == top + "\n");
    REQUIRE(pastel_graph_act(g, top.c_str(), "0,0,1,2", &out) == PASTEL_OK);
    CHECK(take(out).find("|3\n") != std::string::npos);
    CHECK(pastel_graph_act(g, top.c_str(), "1,0", &out) != PASTEL_OK);
    CHECK(pastel_graph_act(g, top.c_str(), "x", &out) == PASTEL_PARSE_ERROR);
    REQUIRE(pastel_graph_nerve_json(g, &out) == PASTEL_OK);
    CHECK(take(out).rfind("{\n  \"format\": \"pastel-sset 1\"", 0) == 0);
    CHECK(pastel_graph_render(g, "png", &out) == PASTEL_INVALID_ARGUMENT);
    pastel_graph_free(g);
}

TEST_CASE("diagrams and certificates") {
    pastel_graph* g = nullptr;
    REQUIRE(pastel_graph_catalog("H", &g) == PASTEL_OK);
    pastel_diagram* sigma = nullptr;
    pastel_diagram* pi = nullptr;
    REQUIRE(pastel_diagram_named(g, "min-complete", &sigma) == PASTEL_OK);
    REQUIRE(pastel_diagram_named(g, "max", &pi) == PASTEL_OK);
    CHECK(pastel_diagram_named(g, "middle", &pi) == PASTEL_INVALID_ARGUMENT);
    char* out = nullptr;
    pastel_diagram* h = nullptr;
    REQUIRE(pastel_diagram_hc(sigma, pi, &h, &out) == PASTEL_OK);
    auto report = lines(take(out));
    CHECK(report.front() == "new 4");
    CHECK(pastel_diagram_num_members(h) ==
          pastel_diagram_num_members(sigma) + static_cast<int>(report.size()) - 1);
    CHECK(pastel_diagram_hc(pi, sigma, nullptr, &out) != PASTEL_OK);

    REQUIRE(pastel_diagram_to_text(pi, &out) == PASTEL_OK);
    std::string text = take(out);
    pastel_diagram* back = nullptr;
    REQUIRE(pastel_diagram_parse(text.c_str(), &back) == PASTEL_OK);
    CHECK(pastel_diagram_num_members(back) == pastel_diagram_num_members(pi));
    REQUIRE(pastel_diagram_to_text(back, &out) == PASTEL_OK);
    CHECK(take(out) == text);

    REQUIRE(pastel_certificate_build(sigma, pi, &out) == PASTEL_OK);
    std::string cert = take(out);
    REQUIRE(pastel_certificate_validate(sigma, pi, cert.c_str(), &out) == PASTEL_OK);
    CHECK(take(out).rfind("valid", 0) == 0);
    std::string broken = cert;
    broken.replace(broken.find("horn="), 6, "horn=0");
    CHECK(pastel_certificate_validate(sigma, pi, broken.c_str(), &out) ==
          PASTEL_INVALID_CERTIFICATE);
    CHECK(std::string(pastel_last_error()).find("InnerIndex") != std::string::npos);

    REQUIRE(pastel_diagram_hom(pi, "0", "2", 0, &out) == PASTEL_OK);
    CHECK(take(out).find("0 0 ") != std::string::npos);
    REQUIRE(pastel_diagram_hom(pi, "2", "0", 1, &out) == PASTEL_OK);
    CHECK(take(out) == "null\n");
    CHECK(pastel_diagram_hom(pi, "0", "q", 0, &out) == PASTEL_INVALID_ARGUMENT);

    pastel_diagram_free(back);
    pastel_diagram_free(h);
    pastel_diagram_free(pi);
    pastel_diagram_free(sigma);
    pastel_graph_free(g);
}

TEST_CASE("labelings, extension and pasting") {
    pastel_graph* g = nullptr;
    REQUIRE(pastel_graph_catalog("B2", &g) == PASTEL_OK);
    char* out = nullptr;
    REQUIRE(pastel_catalog_twocat("chain", &out) == PASTEL_OK);
    std::string chain = take(out);
    const char* labeling = "obj s = 0\nobj m = 1\nobj t = 2\n";
    CHECK(pastel_label(g, labeling, chain.c_str(), 3, &out) == PASTEL_PARSE_ERROR);
    CHECK(pastel_paste(g, "", "free", &out) == PASTEL_OK);
    CHECK(take(out) != "");
    pastel_graph_free(g);
}

} // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("catalog list prints seven names") {
    Run r = cli("catalog list");
    CHECK(r.status == 0);
    CHECK(lines(r.out).size() == 7);
}

TEST_CASE("nerve of B2 is a 2-simplex") {
    Run r = cli("nerve B2");
    CHECK(r.status == 0);
    CHECK(r.out.find("dim 2: 1\n") != std::string::npos);
    CHECK(r.out.find("dim 3") == std::string::npos);
    Run again = cli("nerve B2");
    CHECK(again.out == r.out);
}

TEST_CASE("pd-hc on H") {
    Run r = cli("pd-hc H min-complete max");
    CHECK(r.status == 0);
    auto out = lines(r.out);
    REQUIRE(!out.empty());
    CHECK(out.front() == "new 4");
    CHECK(r.out.find("{a,c0,c2}") != std::string::npos);
    Run same = cli("pd-hc H:min-complete H:max");
    CHECK(same.out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(cli("").status == 2);
    CHECK(cli("frobnicate").status == 2);
    CHECK(cli("nerve").status == 2);
    CHECK(cli("render B2 --format png").status == 2);
    CHECK(cli("check no_such_file.txt").status == 2);
    CHECK(cli("pd-check B2:middle").status == 1);
    CHECK(cli("pd-hc H max min-complete").status == 1);
    CHECK(cli("--help").status == 0);
    std::string bad = temp_file("bad.graph", "pastel-format 1\ngraph x\nvertex v: e+\n");
    CHECK(cli("check " + bad).status == 1);
    std::remove(bad.c_str());
}

TEST_CASE("round trips through files") {
    for (const auto& name : lines(cli("catalog list").out)) {
        CAPTURE(name);
        Run shown = cli("catalog show " + name);
        REQUIRE(shown.status == 0);
        std::string path = temp_file(name + ".graph", shown.out);
        Run again = cli("catalog show " + name);
        CHECK(again.out == shown.out);
        CHECK(cli("check " + path).out == cli("check " + name).out);
        CHECK(cli("faces " + path).out == cli("faces " + name).out);
        std::remove(path.c_str());
    }
    Run d = cli("pd-check B3:max");
    CHECK(d.status == 0);
    CHECK(d.out.find("complete yes") != std::string::npos);
}

TEST_CASE("certificates from the CLI") {
    Run cert = cli("anodyne B2:min-complete B2:max");
    REQUIRE(cert.status == 0);
    CHECK(count_lines_starting(cert.out, "step ") == 1);
    std::string path = temp_file("b2.cert", cert.out);
    CHECK(cli("anodyne B2:min-complete B2:max --validate-only " + path).status == 0);
    CHECK(cli("anodyne B3:min-complete B3:max --validate-only " + path).status == 1);
    std::remove(path.c_str());
}

TEST_CASE("paste and render") {
    Run p = cli("paste J - free");
    CHECK(p.status == 0);
    CHECK(p.out == "phi.d0 ; e1.psi\n");
    for (const char* fmt : {"dot", "tikz", "svg"}) {
        Run r = cli(std::string("render F --format ") + fmt);
        CHECK(r.status == 0);
        CHECK(!r.out.empty());
    }
    Run ct = cli("catalog twocat chain");
    CHECK(ct.status == 0);
    CHECK(ct.out.find("twocat") != std::string::npos);
}

} // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("labeling into the chain 2-category") {
    std::string lab = temp_file("b2.lab",
                                "pastel-format 1\nlabeling\nobj s = 0\nobj t = 1\n"
                                "edge e0 = 01:0\nedge e1 = 01:0\nedge e2 = 01:1\n"
                                "face phi1 = 01:00/1\nface phi2 = 01:01/0\n");
    Run label = cli("label B2 " + lab + " chain");
    CHECK(label.status == 0);
    CHECK(label.out.find("  1 e1<e2 -> 01:01/0\n") != std::string::npos);
    Run ext = cli("extend B2 " + lab + " chain");
    CHECK(ext.status == 0);
    CHECK(ext.out.find("  2 e0<e1<e2 -> 01:00/1;01:01/0\n") != std::string::npos);
    // Vertical composite of the two face labels.
    CHECK(cli("paste B2 " + lab + " chain").out == "01:01/1\n");
    std::string tc = temp_file("chain.tc", cli("catalog twocat chain").out);
    CHECK(cli("paste B2 " + lab + " " + tc).out == "01:01/1\n");
    std::string wrong = temp_file("b2_bad.lab",
                                  "pastel-format 1\nobj s = 0\nobj t = 1\n"
                                  "edge e0 = 01:1\nedge e1 = 01:0\nedge e2 = 01:1\n"
                                  "face phi1 = 01:00/1\nface phi2 = 01:01/0\n");
    CHECK(cli("label B2 " + wrong + " chain").status == 1);
    std::remove(lab.c_str());
    std::remove(tc.c_str());
    std::remove(wrong.c_str());
}

} // TEST_SUITE
