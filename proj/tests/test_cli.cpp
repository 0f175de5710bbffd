// Copyright 2026 The qdisc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qdisc/cli.hpp"

using nlohmann::json;
using qdisc::cli::run;

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Scratch directory removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("qdisc_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string write(const std::string &name, const std::string &content) const {
        const auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

double measure(const json &doc, const std::string &name) {
    for (const auto &m : doc.at("measures")) {
        if (m.at("name") == name) {
            return m.at("value").get<double>();
        }
    }
    FAIL("measure missing: " << name);
    return NAN;
}

} // namespace

TEST_CASE("compute on a symmetric file") {
    TempDir dir;
    SUBCASE("equal coefficients are orthonormal") {
        const auto path =
            dir.write("eq.json", R"({"kind": "symmetric", "n": 3, "coeffs": [1, 1, 1]})");
        const auto r = invoke({"compute", "--input", path, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(std::abs(measure(doc, "p_usd") - 1.0) <= 1e-12);
        CHECK(std::abs(measure(doc, "p_hyp") - 1.0) <= 1e-12);
        CHECK(std::abs(measure(doc, "entropy") - std::log2(3.0)) <= 1e-11);
        CHECK(doc.at("linearly_independent") == true);
        CHECK(doc.at("normalization_scale").get<double>() ==
              doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-11));
    }
    SUBCASE("lower-bound ensemble at P_USD = 0.5") {
        const double a = std::sqrt(1.0 / 6.0);
        const double b = std::sqrt(2.0 / 3.0);
        std::ostringstream text;
        text.precision(17);
        text << R"({"kind": "symmetric", "n": 3, "coeffs": [)" << a << ", " << a << ", "
             << b << "]}";
        const auto path = dir.write("e1.json", text.str());
        const auto r = invoke({"compute", "--input", path, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(std::abs(measure(doc, "p_usd") - 0.5) <= 1e-11);
        CHECK(std::abs(measure(doc, "p_hyp") - 8.0 / 9.0) <= 1e-11);
        for (const auto &m : doc.at("measures")) {
            if (m.at("name") == "p_hyp") {
                CHECK(m.at("certificate_ok") == true);
                CHECK(m.at("method") == "closed_form");
            }
        }
    }
    SUBCASE("text output") {
        const auto path =
            dir.write("eq.json", R"({"kind": "symmetric", "n": 2, "coeffs": [0.6, 0.8]})");
        const auto r = invoke({"compute", "--input", path});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("ensemble: symmetric, n = 2") != std::string::npos);
        CHECK(r.out.find("p_usd = ") != std::string::npos);
        CHECK(r.out.find("certificate ok") != std::string::npos);
    }
}

TEST_CASE("compute on explicit files") {
    TempDir dir;
    SUBCASE("two states use the closed forms") {
        // |0> and 0.6|0> + 0.8|1>, equal priors.
        const auto path = dir.write("pair.json", R"({
          "kind": "explicit",
          "priors": [0.5, 0.5],
          "states": [[[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]]]
        })");
        const auto r = invoke({"compute", "--input", path, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(std::abs(measure(doc, "p_usd") - 0.4) <= 1e-11);
        CHECK(std::abs(measure(doc, "p_hyp") - 0.9) <= 1e-11);
    }
    SUBCASE("three orthonormal states go through the oracles") {
        const auto path = dir.write("basis.json", R"({
          "kind": "explicit",
          "priors": [0.2, 0.3, 0.5],
          "states": [[[1, 0], [0, 0], [0, 0]],
                     [[0, 0], [0, 1], [0, 0]],
                     [[0, 0], [0, 0], [1, 0]]]
        })");
        const auto r = invoke({"compute", "--input", path, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(std::abs(measure(doc, "p_usd") - 1.0) <= 1e-6);
        CHECK(std::abs(measure(doc, "p_hyp") - 1.0) <= 1e-11);
        const double h = -(0.2 * std::log2(0.2) + 0.3 * std::log2(0.3) +
                           0.5 * std::log2(0.5));
        CHECK(std::abs(measure(doc, "entropy") - h) <= 1e-11);
    }
    SUBCASE("dependent states report zero P_USD") {
        const auto path = dir.write("dep.json", R"({
          "kind": "explicit",
          "priors": [0.25, 0.25, 0.5],
          "states": [[[1, 0], [0, 0]], [[0, 0], [1, 0]], [[0.6, 0], [0.8, 0]]]
        })");
        const auto r = invoke({"compute", "--input", path, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc.at("linearly_independent") == false);
        CHECK(measure(doc, "p_usd") == 0.0);
    }
}

TEST_CASE("compute input errors") {
    TempDir dir;
    SUBCASE("malformed JSON") {
        const auto path = dir.write("bad.json", "{\n  \"kind\": \"symmetric\",\n  n: 3\n}");
        const auto r = invoke({"compute", "--input", path});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("line 3") != std::string::npos);
    }
    SUBCASE("missing field") {
        const auto path = dir.write("miss.json", R"({"kind": "symmetric", "n": 3})");
        const auto r = invoke({"compute", "--input", path});
        CHECK(r.code == 2);
        CHECK(r.err.find("coeffs") != std::string::npos);
    }
    SUBCASE("missing file") {
        const auto r = invoke({"compute", "--input", (dir.path / "nope.json").string()});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
    SUBCASE("priors that do not sum to one") {
        const auto path = dir.write("priors.json", R"({
          "kind": "explicit",
          "priors": [0.5, 0.6],
          "states": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
        })");
        const auto r = invoke({"compute", "--input", path});
        CHECK(r.code == 3);
        CHECK(r.out.empty());
    }
    SUBCASE("zero coefficient") {
        const auto path =
            dir.write("zero.json", R"({"kind": "symmetric", "n": 3, "coeffs": [1, 0, 1]})");
        CHECK(invoke({"compute", "--input", path}).code == 3);
    }
    SUBCASE("unknown format") {
        const auto path =
            dir.write("eq.json", R"({"kind": "symmetric", "n": 3, "coeffs": [1, 1, 1]})");
        CHECK(invoke({"compute", "--input", path, "--format", "xml"}).code == 2);
    }
}

TEST_CASE("compute JSON output round-trips") {
    TempDir dir;
    for (const std::string src :
         {std::string(R"({"kind": "symmetric", "n": 4, "coeffs": [0.3, 0.5, 0.7, 0.4]})"),
          std::string(R"({"kind": "explicit", "priors": [0.3, 0.7],
                          "states": [[[1, 0], [0, 0]], [[0.6, 0], [0, 0.8]]]})")}) {
        const auto first = invoke({"compute", "--input", dir.write("a.json", src),
                                   "--format", "json"});
        REQUIRE(first.code == 0);
        const auto second = invoke({"compute", "--input", dir.write("b.json", first.out),
                                    "--format", "json"});
        REQUIRE(second.code == 0);
        const auto a = json::parse(first.out);
        const auto b = json::parse(second.out);
        REQUIRE(a.at("measures").size() == b.at("measures").size());
        for (const auto &m : a.at("measures")) {
            const std::string name = m.at("name");
            CHECK(std::abs(measure(a, name) - measure(b, name)) <= 1e-11);
        }
    }
}

TEST_CASE("bounds subcommand") {
    SUBCASE("json") {
        const auto r = invoke({"bounds", "--n", "3", "--p-usd", "0.5", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(std::abs(doc.at("lower").get<double>() - 8.0 / 9.0) <= 1e-11);
        CHECK(std::abs(doc.at("upper").get<double>() - 0.9624752955742645) <= 1e-11);
        CHECK(doc.at("profile").size() == 2);
    }
    SUBCASE("text") {
        const auto r = invoke({"bounds", "--n", "4", "--p-usd", "0.3"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("lower bound (n0 = 3)") != std::string::npos);
        CHECK(r.out.find("n0 = 2:") != std::string::npos);
    }
    SUBCASE("bad arguments") {
        CHECK(invoke({"bounds", "--n", "3", "--p-usd", "1.5"}).code == 2);
        CHECK(invoke({"bounds", "--n", "1", "--p-usd", "0.5"}).code == 2);
        CHECK(invoke({"bounds", "--n", "3"}).code == 2);
        CHECK(invoke({"bounds", "--n", "three", "--p-usd", "0.5"}).code == 2);
    }
}

TEST_CASE("scan subcommand") {
    TempDir dir;
    SUBCASE("csv to a file") {
        const auto path = (dir.path / "grid.csv").string();
        const auto r = invoke({"scan", "--n", "3", "--p-usd-steps", "2", "--epsilon-steps",
                               "2", "--output", path});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("4 valid cells") != std::string::npos);
        std::ifstream f(path);
        std::string line;
        std::size_t lines = 0;
        while (std::getline(f, line)) {
            ++lines;
        }
        CHECK(lines == 5);
        CHECK_FALSE(fs::exists(path + ".tmp"));
    }
    SUBCASE("json to stdout, summary on stderr") {
        const auto r = invoke({"scan", "--p-usd-steps", "10", "--epsilon-steps", "10",
                               "--format", "json"});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc.at("n") == 3);
        CHECK(r.err.find("max ratio") != std::string::npos);
    }
    SUBCASE("unwritable path") {
        const auto path = (dir.path / "missing_dir" / "grid.csv").string();
        const auto r = invoke({"scan", "--p-usd-steps", "2", "--epsilon-steps", "2",
                               "--output", path});
        CHECK(r.code == 4);
    }
    SUBCASE("bad sizes") {
        CHECK(invoke({"scan", "--n", "2"}).code == 2);
        CHECK(invoke({"scan", "--p-usd-steps", "1"}).code == 2);
    }
    SUBCASE("byte-deterministic") {
        const std::vector<std::string> args{"scan", "--p-usd-steps", "30",
                                            "--epsilon-steps", "30"};
        CHECK(invoke(args).out == invoke(args).out);
    }
}

TEST_CASE("reproduce and verify subcommands") {
    const auto rep = invoke({"reproduce"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("PASS") != std::string::npos);

    const auto w = qdisc::cli::reproduce_worked_example();
    CHECK(w.passed);
    CHECK(w.witness);
    CHECK(w.ratio > 1.0);

    const auto a = invoke({"verify", "--seed", "7", "--verbose"});
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out.find("all suites passed") != std::string::npos);
    CHECK(invoke({"verify", "--seed", "7", "--verbose"}).out == a.out);
    CHECK(invoke({"verify", "--seed", "11"}).code == 0);
}

TEST_CASE("argument handling") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("compute") != std::string::npos);
}
