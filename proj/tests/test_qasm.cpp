// Copyright 2026 The icobat Authors
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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icobat/circuit.hpp"
#include "icobat/qasm.hpp"

namespace icobat {
namespace {

using circuit::build_ico_circuit;
using circuit::QuantumCircuit;

TEST(Qasm, RoundTripIsExact) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        const QuantumCircuit c = build_ico_circuit(angle(rng), angle(rng));
        const std::string text = qasm::emit_qasm(c);
        const QuantumCircuit back = qasm::parse_qasm(text);
        EXPECT_EQ(back, c);
        EXPECT_EQ(qasm::emit_qasm(back), text);
    }
}

TEST(Qasm, EmptyCircuitHasDeclarationsOnly) {
    const QuantumCircuit empty;
    const std::string text = qasm::emit_qasm(empty);
    EXPECT_NE(text.find("OPENQASM 3.0;"), std::string::npos);
    EXPECT_NE(text.find("qubit C2;"), std::string::npos);
    EXPECT_EQ(text.find("measure"), std::string::npos);
    EXPECT_EQ(text.find("gate rxx"), std::string::npos);
    EXPECT_EQ(qasm::parse_qasm(text), empty);
}

TEST(Qasm, RejectsMalformedInput) {
    const std::string good = qasm::emit_qasm(build_ico_circuit(0.2, 2.0));
    EXPECT_THROW((void)qasm::parse_qasm("OPENQASM 2.0;"), qasm::ParseError);
    std::string unknown = good;
    unknown.replace(unknown.find("h D;"), 4, "t D;");
    EXPECT_THROW((void)qasm::parse_qasm(unknown), qasm::ParseError);
    std::string bad_qubit = good;
    bad_qubit.replace(bad_qubit.find("x C1;"), 5, "x C9;");
    EXPECT_THROW((void)qasm::parse_qasm(bad_qubit), qasm::ParseError);
    std::string no_semicolon = good;
    no_semicolon.erase(no_semicolon.rfind(';'));
    EXPECT_THROW((void)qasm::parse_qasm(no_semicolon), qasm::ParseError);
}

TEST(Qasm, FormatDoubleRoundTrips) {
    for (double v : {0.0, -1.5, 0.1, std::numbers::pi, 1e-300, 6.02214076e23}) {
        EXPECT_EQ(std::stod(qasm::format_double(v)), v);
    }
}

// Minimal interpreter for the emitted subset. Custom gate bodies are read
// from the file itself and expanded on use; primitive gates are the
// stdgates.inc definitions.
class MiniQasm {
  public:
    explicit MiniQasm(const std::string& text) { run(text); }
    const std::vector<cplx>& state() const { return psi_; }

  private:
    struct Definition {
        std::string param;
        std::vector<std::string> args;
        std::vector<std::string> body;
    };

    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\n");
        if (b == std::string::npos) return "";
        return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
    }

    static std::vector<std::string> split(const std::string& s, char sep) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) {
            item = trim(item);
            if (!item.empty()) out.push_back(item);
        }
        return out;
    }

    double eval(const std::string& expr, const std::map<std::string, double>& env) const {
        std::string e = trim(expr);
        double sign = 1.0;
        if (!e.empty() && e[0] == '-') {
            sign = -1.0;
            e = trim(e.substr(1));
        }
        if (env.count(e)) return sign * env.at(e);
        if (e == "pi/2") return sign * std::numbers::pi / 2;
        if (e == "pi") return sign * std::numbers::pi;
        return sign * std::stod(e);
    }

    void one(int q, const std::array<cplx, 4>& g) {
        const std::size_t stride = std::size_t{1} << (3 - q);
        for (std::size_t i = 0; i < 16; ++i) {
            if (i & stride) continue;
            const cplx a = psi_[i];
            const cplx b = psi_[i | stride];
            psi_[i] = g[0] * a + g[1] * b;
            psi_[i | stride] = g[2] * a + g[3] * b;
        }
    }

    void controlled_phase(int a, int b, cplx phase) {
        for (std::size_t i = 0; i < 16; ++i) {
            if ((i >> (3 - a) & 1) && (i >> (3 - b) & 1)) psi_[i] *= phase;
        }
    }

    void cx(int c, int t) {
        const std::size_t sc = std::size_t{1} << (3 - c);
        const std::size_t st = std::size_t{1} << (3 - t);
        for (std::size_t i = 0; i < 16; ++i) {
            if ((i & sc) && !(i & st)) std::swap(psi_[i], psi_[i | st]);
        }
    }

    void apply(const std::string& name, double angle, const std::vector<int>& q) {
        const double r = 1.0 / std::sqrt(2.0);
        const cplx i{0.0, 1.0};
        if (name == "h") {
            one(q[0], {r, r, r, -r});
        } else if (name == "x") {
            one(q[0], {0.0, 1.0, 1.0, 0.0});
        } else if (name == "rz") {
            one(q[0], {std::exp(-i * angle / 2.0), 0.0, 0.0, std::exp(i * angle / 2.0)});
        } else if (name == "rx") {
            one(q[0], {std::cos(angle / 2), -i * std::sin(angle / 2), -i * std::sin(angle / 2), std::cos(angle / 2)});
        } else if (name == "cx") {
            cx(q[0], q[1]);
        } else if (name == "cz") {
            controlled_phase(q[0], q[1], -1.0);
        } else if (name == "cp") {
            controlled_phase(q[0], q[1], std::exp(i * angle));
        } else {
            FAIL() << "unknown primitive " << name;
        }
    }

    void statement(const std::string& st, const std::map<std::string, int>& qubits,
                   const std::map<std::string, double>& env) {
        const auto space = st.find(' ');
        std::string head = st.substr(0, space);
        const std::vector<std::string> arg_names = split(st.substr(space + 1), ',');
        double angle = 0.0;
        if (const auto lp = head.find('('); lp != std::string::npos) {
            angle = eval(head.substr(lp + 1, head.find(')') - lp - 1), env);
            head = head.substr(0, lp);
        }
        std::vector<int> q;
        for (const std::string& a : arg_names) q.push_back(qubits.at(a));
        if (const auto it = defs_.find(head); it != defs_.end()) {
            std::map<std::string, int> local;
            for (std::size_t k = 0; k < q.size(); ++k) local[it->second.args[k]] = q[k];
            std::map<std::string, double> local_env{{it->second.param, angle}};
            for (const std::string& s : it->second.body) statement(s, local, local_env);
            return;
        }
        apply(head, angle, q);
    }

    void run(const std::string& text) {
        psi_.assign(16, 0.0);
        psi_[0] = 1.0;
        std::map<std::string, int> qubits;
        std::stringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = trim(line);
            if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
                line.rfind("bit ", 0) == 0 || line.rfind("barrier", 0) == 0 || line.find("measure") != std::string::npos) {
                continue;
            }
            if (line.rfind("gate ", 0) == 0) {
                const auto lp = line.find('(');
                const auto rp = line.find(')');
                const auto lb = line.find('{');
                const auto rb = line.find('}');
                Definition d;
                d.param = line.substr(lp + 1, rp - lp - 1);
                d.args = split(line.substr(rp + 1, lb - rp - 1), ',');
                d.body = split(line.substr(lb + 1, rb - lb - 1), ';');
                defs_[trim(line.substr(5, lp - 5))] = d;
                continue;
            }
            if (line.rfind("qubit ", 0) == 0) {
                const std::string name = trim(line.substr(6, line.size() - 7));
                const int index = static_cast<int>(qubits.size());
                qubits[name] = index;
                continue;
            }
            ASSERT_EQ(line.back(), ';') << line;
            statement(line.substr(0, line.size() - 1), qubits, {});
        }
    }

    std::map<std::string, Definition> defs_;
    std::vector<cplx> psi_;
};

TEST(Qasm, IndependentInterpreterReproducesSimulatedOutcomes) {
    const ModelParams p{2, 1.0, 0.1};
    for (double t : {0.5, 2 * std::numbers::pi, 13.0, 4 * std::numbers::pi, 77.0}) {
        const auto a = circuit::angles_of_time(p, t);
        const QuantumCircuit c = build_ico_circuit(a.theta, a.phi);
        const MiniQasm vm(qasm::emit_qasm(c));
        std::array<double, 4> got{};
        for (std::size_t i = 0; i < 16; ++i) {
            const std::size_t d = i >> 3 & 1;
            const std::size_t q = i >> 2 & 1;
            got[2 * d + q] += std::norm(vm.state()[i]);
        }
        const auto want = circuit::outcome_probabilities(circuit::simulate(c, circuit::NoiseSpec{}));
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-6) << "t=" << t << " k=" << k;
    }
}

}  // namespace
}  // namespace icobat
