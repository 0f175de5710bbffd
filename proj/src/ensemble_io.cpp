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

#include "qdisc/ensemble_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qdisc {

namespace {

using nlohmann::json;

const json &require(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return obj.at(key);
}

double number_at(const json &v, const std::string &where) {
    if (!v.is_number()) {
        throw SchemaError(where + ": expected a number");
    }
    return v.get<double>();
}

const json &array_at(const json &v, const std::string &where) {
    if (!v.is_array()) {
        throw SchemaError(where + ": expected an array");
    }
    return v;
}

std::size_t line_of(const std::string &text, std::size_t byte) {
    const auto end = text.begin() +
                     static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
    return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

LoadedEnsemble load_symmetric(const json &doc) {
    const json &n_field = require(doc, "n");
    if (!n_field.is_number_integer() || n_field.get<long long>() < 0) {
        throw SchemaError("n: expected a nonnegative integer");
    }
    const auto n = n_field.get<std::size_t>();
    const json &coeffs_field = array_at(require(doc, "coeffs"), "coeffs");
    std::vector<double> coeffs;
    coeffs.reserve(coeffs_field.size());
    for (std::size_t r = 0; r < coeffs_field.size(); ++r) {
        coeffs.push_back(
            number_at(coeffs_field[r], "coeffs[" + std::to_string(r) + "]"));
    }
    auto sym = make_symmetric(n, coeffs);
    const double scale = sym.scale();
    auto ens = realize(sym);
    return {std::move(sym), std::move(ens), scale};
}

LoadedEnsemble load_explicit(const json &doc) {
    const json &priors_field = array_at(require(doc, "priors"), "priors");
    const json &states_field = array_at(require(doc, "states"), "states");
    std::vector<double> priors;
    for (std::size_t j = 0; j < priors_field.size(); ++j) {
        priors.push_back(
            number_at(priors_field[j], "priors[" + std::to_string(j) + "]"));
    }
    std::vector<PureState> states;
    for (std::size_t j = 0; j < states_field.size(); ++j) {
        const std::string where = "states[" + std::to_string(j) + "]";
        const json &amps_field = array_at(states_field[j], where);
        ComplexVector amps;
        for (std::size_t i = 0; i < amps_field.size(); ++i) {
            const std::string at = where + "[" + std::to_string(i) + "]";
            const json &pair = array_at(amps_field[i], at);
            if (pair.size() != 2) {
                throw SchemaError(at + ": expected [re, im]");
            }
            amps.emplace_back(number_at(pair[0], at + "[0]"),
                              number_at(pair[1], at + "[1]"));
        }
        states.emplace_back(std::move(amps));
    }
    return {std::nullopt, Ensemble(std::move(states), std::move(priors)), 1.0};
}

} // namespace

LoadedEnsemble ensemble_from_json(const json &doc) {
    if (doc.is_object() && doc.contains("ensemble")) {
        return ensemble_from_json(doc.at("ensemble"));
    }
    const json &kind = require(doc, "kind");
    if (!kind.is_string()) {
        throw SchemaError("kind: expected a string");
    }
    const auto k = kind.get<std::string>();
    if (k == "symmetric") {
        return load_symmetric(doc);
    }
    if (k == "explicit") {
        return load_explicit(doc);
    }
    throw SchemaError("kind: unknown ensemble kind \"" + k + "\"");
}

LoadedEnsemble ensemble_from_string(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError("line " + std::to_string(line_of(text, e.byte)) +
                          ": " + e.what());
    }
    return ensemble_from_json(doc);
}

LoadedEnsemble load_ensemble_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return ensemble_from_string(buf.str());
}

json ensemble_to_json(const LoadedEnsemble &loaded) {
    if (loaded.symmetric) {
        const auto c = loaded.symmetric->coeffs();
        return {{"kind", "symmetric"},
                {"n", loaded.symmetric->n()},
                {"coeffs", std::vector<double>(c.begin(), c.end())}};
    }
    json states = json::array();
    for (const auto &s : loaded.ensemble.states()) {
        json amps = json::array();
        for (const auto &z : s.amplitudes()) {
            amps.push_back({z.real(), z.imag()});
        }
        states.push_back(std::move(amps));
    }
    return {{"kind", "explicit"},
            {"priors", loaded.ensemble.priors()},
            {"states", std::move(states)}};
}

} // namespace qdisc
