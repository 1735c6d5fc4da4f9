// Copyright 2026 The Symket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "symket/errors.h"
#include "symket/integrate.h"
#include "symket/measure.h"
#include "symket/operator.h"

namespace symket::cli {

namespace {

std::string printf_number(const char *fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

std::string full_precision(double value) {
    return printf_number("%.17g", value + 0.0);
}

void demo_states(std::ostream &out) {
    auto states = povm::get_fock_states();
    out << "State is: " << states.phi << "\n\n";
    Scalar inner = states.phi.inner_product(states.phi);
    out << "inner product is: " << inner << "\n\n";
    out << "after simplify: " << simplify(inner) << "\n\n";
    out << "after integrate: " << integrate(inner) << "\n";
}

void demo_beam_splitter(std::ostream &out) {
    out << "Beam splitter:\n" << povm::construct_beam_splitter() << "\n";
}

void demo_projectors(std::ostream &out) {
    auto states = povm::get_fock_states();
    Operator p = povm::construct_projector(1, 0);
    out << integrate((p * states.phi).inner_product(states.phi)) << "\n";
}

void demo_measure(std::ostream &out, std::optional<std::uint64_t> seed) {
    State s0 = to_state(QuditBaseState("0"));
    State s1 = to_state(QuditBaseState("1"));
    State h0 = (s0 + s1) * Scalar(1.0 / std::sqrt(2.0));
    std::map<int, Operator> kraus_ops{{0, outer_product(s0, s0)}, {1, outer_product(s1, s1)}};

    std::mt19937_64 rng(seed ? *seed : std::random_device{}());
    for (const State *s : {&s0, &s1, &h0}) {
        out << measure(*s, kraus_ops, rng).str() << "\n";
    }
}

}  // namespace

std::string format_pretty(const Eigen::MatrixXd &matrix) {
    std::vector<std::string> whole;
    std::vector<std::string> frac;
    size_t whole_width = 0;
    size_t frac_width = 0;
    for (Eigen::Index i = 0; i < matrix.rows(); i++) {
        for (Eigen::Index j = 0; j < matrix.cols(); j++) {
            double v = matrix(i, j);
            std::string text = printf_number("%.4g", std::fabs(v) < 1e-12 ? 0.0 : v);
            if (text.find_first_of(".e") == std::string::npos) {
                text += ".";
            }
            size_t dot = text.find('.');
            if (dot == std::string::npos) {
                dot = text.size();
            }
            whole.push_back(text.substr(0, dot));
            frac.push_back(text.substr(dot));
            whole_width = std::max(whole_width, whole.back().size());
            frac_width = std::max(frac_width, frac.back().size());
        }
    }
    std::string out = "[";
    size_t k = 0;
    for (Eigen::Index i = 0; i < matrix.rows(); i++) {
        out += i ? "\n [" : "[";
        for (Eigen::Index j = 0; j < matrix.cols(); j++, k++) {
            if (j) {
                out += " ";
            }
            out += std::string(whole_width - whole[k].size(), ' ') + whole[k] + frac[k] +
                   std::string(frac_width - frac[k].size(), ' ');
        }
        out += "]";
    }
    return out + "]";
}

std::string format_json(const povm::PovmResult &result) {
    std::ostringstream out;
    out << "{\"projector\": [" << result.spec.num_left << ", " << result.spec.num_right << "], ";
    out << "\"visibility\": " << full_precision(result.spec.visibility) << ", ";
    out << "\"basis\": [";
    for (size_t k = 0; k < result.basis.size(); k++) {
        out << (k ? ", " : "") << '"' << result.basis[k] << '"';
    }
    out << "], \"matrix\": [";
    for (Eigen::Index i = 0; i < result.matrix.rows(); i++) {
        out << (i ? ", [" : "[");
        for (Eigen::Index j = 0; j < result.matrix.cols(); j++) {
            out << (j ? ", " : "") << full_precision(result.matrix(i, j));
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

std::string format_csv(const Eigen::MatrixXd &matrix) {
    std::string out;
    for (Eigen::Index i = 0; i < matrix.rows(); i++) {
        for (Eigen::Index j = 0; j < matrix.cols(); j++) {
            out += (j ? "," : "") + full_precision(matrix(i, j));
        }
        out += "\n";
    }
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symbolic bra-ket algebra: beam-splitter POVM elements and demos", "symket"};
    app.require_subcommand(1);

    povm::PovmSpec spec;
    std::string format = "pretty";
    auto *povm_cmd = app.add_subcommand("povm", "Effective POVM element for detector photon counts");
    povm_cmd->add_option("--left", spec.num_left, "Photons at detector c")->required();
    povm_cmd->add_option("--right", spec.num_right, "Photons at detector d")->required();
    povm_cmd->add_option("--visibility", spec.visibility, "Wave-packet overlap in [0, 1]")->capture_default_str();
    povm_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();

    std::string demo_name;
    std::optional<std::uint64_t> seed;
    auto *demo_cmd = app.add_subcommand("demo", "Print one of the worked examples");
    demo_cmd->add_option("name", demo_name, "states, beamsplitter, projectors or measure")
        ->required()
        ->check(CLI::IsMember({"states", "beamsplitter", "projectors", "measure"}));
    demo_cmd->add_option("--seed", seed, "Seed for the measurement demo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (povm_cmd->parsed()) {
            try {
                povm::validate(spec);
            } catch (const std::exception &e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            povm::PovmResult result = povm::compute_povm(spec);
            if (format == "json") {
                out << format_json(result) << "\n";
            } else if (format == "csv") {
                out << format_csv(result.matrix);
            } else {
                out << format_pretty(result.matrix) << "\n";
            }
            return 0;
        }
        if (demo_name == "states") {
            demo_states(out);
        } else if (demo_name == "beamsplitter") {
            demo_beam_splitter(out);
        } else if (demo_name == "projectors") {
            demo_projectors(out);
        } else {
            demo_measure(out, seed);
        }
        return 0;
    } catch (const symket::Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace symket::cli
