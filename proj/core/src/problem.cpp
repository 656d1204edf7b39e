// Copyright 2026 The qbound developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qbound/problem.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qbound::io {

using json = nlohmann::json;
using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;

namespace {

// Keeps desk-scale promises honest; the kernels are not sized beyond this.
constexpr std::size_t kMaxDim = 64;

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(where + ": expected a complex number as [re, im]");
    }
    const Complex c{j[0].get<double>(), j[1].get<double>()};
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw ParseError(where + ": non-finite component");
    }
    return c;
}

std::size_t parse_dim(const json& j, const std::string& where) {
    if (!j.contains("dim") || !j.at("dim").is_number_unsigned()) {
        throw ParseError(where + ": missing positive integer field \"dim\"");
    }
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim < 1 || dim > kMaxDim) {
        throw ParseError(where + ": dim must be in [1, " + std::to_string(kMaxDim) + "], got " +
                         std::to_string(dim));
    }
    return dim;
}

CVector parse_vector(const json& j, const std::string& where) {
    const std::size_t dim = parse_dim(j, where);
    if (!j.contains("vector") || !j.at("vector").is_array() || j.at("vector").size() != dim) {
        throw ParseError(where + ": expected \"vector\" with " + std::to_string(dim) +
                         " entries");
    }
    std::vector<Complex> entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        entries.push_back(
            parse_complex(j.at("vector")[i], where + ".vector[" + std::to_string(i) + "]"));
    }
    return CVector(std::move(entries));
}

Observable parse_observable(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return named_observable(j.get<std::string>());
        } catch (const ValidationError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (!j.is_object()) {
        throw ParseError(where + ": expected a named matrix or {\"dim\", \"matrix\"}");
    }
    const std::size_t dim = parse_dim(j, where);
    if (!j.contains("matrix") || !j.at("matrix").is_array() || j.at("matrix").size() != dim) {
        throw ParseError(where + ": expected \"matrix\" with " + std::to_string(dim) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = j.at("matrix")[i];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError(where + ".matrix row " + std::to_string(i) + ": expected " +
                             std::to_string(dim) + " entries");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            entries.push_back(parse_complex(
                row[k], where + ".matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        }
    }
    try {
        return Observable(CMatrix(dim, std::move(entries)));
    } catch (const ValidationError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

ProblemSpec parse_problem_json(const json& j) {
    if (!j.is_object()) throw ParseError("problem: top level must be an object");
    if (!j.contains("A") || !j.contains("B")) {
        throw ParseError("problem: fields \"A\" and \"B\" are required");
    }
    Observable a = parse_observable(j.at("A"), "A");
    Observable b = parse_observable(j.at("B"), "B");
    if (a.dim() != b.dim()) {
        throw ParseError("problem: A has dim " + std::to_string(a.dim()) + " but B has dim " +
                         std::to_string(b.dim()));
    }

    std::optional<std::variant<StateVector, EigenstateSelector>> state;
    if (j.contains("state")) {
        const json& s = j.at("state");
        if (s.is_object() && s.contains("of")) {
            const std::string of = s.at("of").is_string() ? s.at("of").get<std::string>() : "";
            if (of != "A" && of != "B") {
                throw ParseError("state.of: expected \"A\" or \"B\"");
            }
            if (!s.contains("index") || !s.at("index").is_number_unsigned()) {
                throw ParseError("state.index: expected a non-negative integer");
            }
            const std::size_t index = s.at("index").get<std::size_t>();
            if (index >= a.dim()) {
                throw ParseError("state.index: " + std::to_string(index) +
                                 " out of range for dimension " + std::to_string(a.dim()));
            }
            state = EigenstateSelector{of[0], index};
        } else if (s.is_object()) {
            CVector vec = parse_vector(s, "state");
            if (vec.dim() != a.dim()) {
                throw ParseError("state: dim " + std::to_string(vec.dim()) +
                                 " does not match the operators (dim " + std::to_string(a.dim()) +
                                 ")");
            }
            try {
                state = StateVector::normalized(vec);
            } catch (const DegenerateVectorError&) {
                throw ParseError("state: vector has (near-)zero norm");
            }
        } else {
            throw ParseError("state: expected a vector object or an eigenstate selector");
        }
    }

    ToleranceOverrides tols;
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (!t.is_object()) throw ParseError("tolerances: expected an object");
        for (const auto& [key, value] : t.items()) {
            if (!value.is_number() || !(value.get<double>() > 0.0)) {
                throw ParseError("tolerances." + key + ": expected a positive number");
            }
            if (key == "eps_eigen") {
                tols.eps_eigen = value.get<double>();
            } else if (key == "commutator_tol") {
                tols.commutator_tol = value.get<double>();
            } else {
                throw ParseError("tolerances." + key + ": unknown tolerance name");
            }
        }
    }

    return ProblemSpec{std::move(a), std::move(b), std::move(state), tols};
}

}  // namespace

Observable named_observable(const std::string& name) {
    if (name == "pauli_x") return Observable::pauli_x();
    if (name == "pauli_y") return Observable::pauli_y();
    if (name == "pauli_z") return Observable::pauli_z();
    if (name.starts_with("identity(") && name.ends_with(")")) {
        const std::string digits = name.substr(9, name.size() - 10);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const unsigned long dim = std::stoul(digits);
            if (dim >= 1 && dim <= kMaxDim) return Observable::identity(dim);
        }
        throw ValidationError("identity(d): d must be an integer in [1, " +
                              std::to_string(kMaxDim) + "]");
    }
    throw ValidationError("unknown matrix name \"" + name +
                          "\" (expected pauli_x, pauli_y, pauli_z or identity(d))");
}

ProblemSpec parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann messages carry "at line L, column C".
        throw ParseError(e.what());
    }
    return parse_problem_json(j);
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_problem_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

const std::vector<std::string>& builtin_problem_names() {
    static const std::vector<std::string> names = {"pauli-xy-equator", "pauli-xz-eigenstate"};
    return names;
}

ProblemSpec builtin_problem(const std::string& name) {
    if (name == "pauli-xy-equator") {
        // (|0> + e^{i pi/4} |1>) / sqrt(2): not an eigenstate of either
        // operator, yet <[pauli_x, pauli_y]> = 0 there.
        const double inv_sqrt2 = std::sqrt(0.5);
        CVector vec{Complex{inv_sqrt2, 0.0},
                    std::polar(inv_sqrt2, std::numbers::pi / 4.0)};
        return ProblemSpec{Observable::pauli_x(), Observable::pauli_y(),
                           StateVector::normalized(vec), {}};
    }
    if (name == "pauli-xz-eigenstate") {
        // The +1 eigenvector of pauli_z (ascending order puts it at index 1).
        return ProblemSpec{Observable::pauli_x(), Observable::pauli_z(),
                           EigenstateSelector{'B', 1}, {}};
    }
    throw ValidationError("unknown builtin problem \"" + name + "\"");
}

StateVector resolve_state(const ProblemSpec& problem) {
    if (!problem.state) {
        throw ParseError("problem: a \"state\" (vector or eigenstate selector) is required");
    }
    if (std::holds_alternative<StateVector>(*problem.state)) {
        return std::get<StateVector>(*problem.state);
    }
    const auto& sel = std::get<EigenstateSelector>(*problem.state);
    const Observable& op = sel.of == 'A' ? problem.A : problem.B;
    const auto es = linalg::hermitian_eigensystem(op.mat());
    return StateVector::normalized(es.eigenvectors.at(sel.index));
}

}  // namespace qbound::io
