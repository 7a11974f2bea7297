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

#include "icobat/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace icobat::qasm {

using circuit::Gate;
using circuit::GateKind;
using circuit::QuantumCircuit;

namespace {

constexpr std::string_view kHeader = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";

constexpr std::string_view kRxxDefinition =
    "gate rxx(theta) a, b { h a; h b; cx a, b; rz(theta) b; cx a, b; h a; h b; }\n";
constexpr std::string_view kRyyDefinition =
    "gate ryy(theta) a, b { rx(pi/2) a; rx(pi/2) b; cx a, b; rz(theta) b; cx a, b; rx(-pi/2) a; rx(-pi/2) b; }\n";

constexpr std::string_view kBarrier = "barrier D, Q, C1, C2;";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Statement {
    int line;
    std::string text;  // without trailing ';'
};

// Splits into ';'-terminated statements, dropping comments and skipping
// brace-delimited gate definitions.
std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> out;
    std::string current;
    int line = 1;
    int start_line = 1;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) ++line;
            continue;
        }
        if (ch == '\n') ++line;
        if (depth > 0) {
            if (ch == '{') ++depth;
            if (ch == '}' && --depth == 0) {
                if (trim(current).substr(0, 5) != "gate ") throw ParseError(start_line, "unexpected block");
                current.clear();
            }
            continue;
        }
        if (ch == '{') {
            ++depth;
            continue;
        }
        if (ch == '}') throw ParseError(line, "unbalanced '}'");
        if (ch == ';') {
            out.push_back({start_line, std::string(trim(current))});
            current.clear();
            continue;
        }
        if (trim(current).empty() && !std::isspace(static_cast<unsigned char>(ch))) start_line = line;
        current.push_back(ch);
    }
    if (depth != 0) throw ParseError(line, "unterminated block");
    if (!trim(current).empty()) throw ParseError(start_line, "statement without ';'");
    return out;
}

int qubit_index(std::string_view name, int line) {
    static constexpr std::string_view kNames[] = {"D", "Q", "C1", "C2"};
    for (int q = 0; q < circuit::kNumQubits; ++q) {
        if (kNames[q] == name) return q;
    }
    throw ParseError(line, "unknown qubit '" + std::string(name) + "'");
}

double parse_number(std::string_view s, int line) {
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "bad angle '" + std::string(s) + "'");
    return v;
}

Gate parse_gate_call(const Statement& st) {
    std::string_view s = st.text;
    const std::size_t name_end = s.find_first_of(" (");
    if (name_end == std::string_view::npos) throw ParseError(st.line, "malformed statement");
    const std::string_view name = s.substr(0, name_end);
    const auto kind = circuit::gate_kind_from_name(name);
    if (!kind) throw ParseError(st.line, "unsupported gate '" + std::string(name) + "'");

    Gate g;
    g.kind = *kind;
    s.remove_prefix(name_end);
    if (!s.empty() && s.front() == '(') {
        const std::size_t close = s.find(')');
        if (close == std::string_view::npos) throw ParseError(st.line, "missing ')'");
        if (!circuit::gate_has_angle(g.kind)) throw ParseError(st.line, "gate takes no angle");
        g.angle = parse_number(s.substr(1, close - 1), st.line);
        s.remove_prefix(close + 1);
    } else if (circuit::gate_has_angle(g.kind)) {
        throw ParseError(st.line, "missing angle");
    }

    std::vector<int> qubits;
    std::string_view rest = trim(s);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        qubits.push_back(qubit_index(trim(rest.substr(0, comma)), st.line));
        if (comma == std::string_view::npos) break;
        rest = trim(rest.substr(comma + 1));
    }
    if (static_cast<int>(qubits.size()) != circuit::gate_arity(g.kind)) throw ParseError(st.line, "wrong number of qubits");
    g.q0 = qubits[0];
    if (qubits.size() == 2) g.q1 = qubits[1];
    return g;
}

bool uses(const QuantumCircuit& c, GateKind kind) {
    return std::any_of(c.gates.begin(), c.gates.end(), [&](const Gate& g) { return g.kind == kind; });
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string emit_qasm(const QuantumCircuit& c) {
    c.validate();
    std::ostringstream out;
    out << kHeader;
    if (uses(c, GateKind::XX)) out << kRxxDefinition;
    if (uses(c, GateKind::YY)) out << kRyyDefinition;
    out << "\n";
    for (const auto& label : c.labels) out << "qubit " << label << ";\n";
    out << "bit mD;\nbit mQ;\n";
    if (c.gates.empty()) return out.str();

    out << "\n";
    const auto emit_gate = [&](const Gate& g) {
        out << circuit::gate_name(g.kind);
        if (circuit::gate_has_angle(g.kind)) out << "(" << format_double(g.angle) << ")";
        out << " " << c.labels[static_cast<std::size_t>(g.q0)];
        if (g.q1 >= 0) out << ", " << c.labels[static_cast<std::size_t>(g.q1)];
        out << ";\n";
    };
    for (const Gate& g : c.preparation()) emit_gate(g);
    out << kBarrier << "\n";
    for (const Gate& g : c.charging()) emit_gate(g);
    out << kBarrier << "\n";
    out << "h D;\nmD = measure D;\nmQ = measure Q;\n";
    return out.str();
}

QuantumCircuit parse_qasm(std::string_view text) {
    const auto statements = split_statements(text);
    QuantumCircuit c;
    std::size_t pos = 0;

    const auto expect = [&](std::string_view want) {
        if (pos >= statements.size()) throw ParseError(statements.empty() ? 1 : statements.back().line, "unexpected end, wanted '" + std::string(want) + "'");
        if (statements[pos].text != want) throw ParseError(statements[pos].line, "expected '" + std::string(want) + "'");
        ++pos;
    };

    expect("OPENQASM 3.0");
    expect("include \"stdgates.inc\"");
    // Gate definitions were consumed by the splitter; their headers are dropped here.
    for (const auto& label : c.labels) expect("qubit " + label);
    expect("bit mD");
    expect("bit mQ");
    if (pos == statements.size()) return c;

    int segment = 0;
    while (pos < statements.size() && segment < 2) {
        const Statement& st = statements[pos++];
        if (st.text == kBarrier.substr(0, kBarrier.size() - 1)) {
            if (segment == 0) c.prep_gates = c.gates.size();
            ++segment;
            continue;
        }
        c.gates.push_back(parse_gate_call(st));
    }
    if (segment != 2) throw ParseError(statements.back().line, "missing barrier around the charging section");
    expect("h D");
    expect("mD = measure D");
    expect("mQ = measure Q");
    if (pos != statements.size()) throw ParseError(statements[pos].line, "trailing statements after measurement");
    c.validate();
    return c;
}

}  // namespace icobat::qasm
