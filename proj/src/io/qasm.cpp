// Copyright 2026 The qcopula Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcopula/io/qasm.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace qcopula::io {

using qsim::Control;
using qsim::Gate;
using qsim::GateKind;

namespace {

std::string angle_text(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::string q(int i) { return "q[" + std::to_string(i) + "]"; }

class Emitter {
  public:
    explicit Emitter(std::ostringstream &out) : out_(out) {}

    void gate(const Gate &g, const std::vector<Control> &outer) {
        if (g.kind == GateKind::Controlled) {
            auto controls = outer;
            for (const auto &c : g.controls) {
                bool clash = false;
                bool dup = false;
                for (const auto &o : controls) {
                    if (o.qubit == c.qubit) {
                        (o.value == c.value ? dup : clash) = true;
                    }
                }
                if (clash) {
                    return; // block can never fire
                }
                if (!dup) {
                    controls.push_back(c);
                }
            }
            for (const auto &b : g.body) {
                gate(b, controls);
            }
            return;
        }
        if (outer.empty()) {
            plain(g);
            return;
        }
        std::vector<int> positive;
        for (const auto &c : outer) {
            positive.push_back(c.qubit);
            if (!c.value) {
                line("x " + q(c.qubit));
            }
        }
        controlled(g, positive);
        for (const auto &c : outer) {
            if (!c.value) {
                line("x " + q(c.qubit));
            }
        }
    }

  private:
    void line(const std::string &s) { out_ << s << ";\n"; }

    void plain(const Gate &g) {
        const auto &t = g.targets;
        switch (g.kind) {
        case GateKind::X:
            line("x " + q(t[0]));
            break;
        case GateKind::H:
            line("h " + q(t[0]));
            break;
        case GateKind::Ry:
            line("ry(" + angle_text(g.angle) + ") " + q(t[0]));
            break;
        case GateKind::CNOT:
            line("cx " + q(t[0]) + "," + q(t[1]));
            break;
        case GateKind::SWAP:
            line("swap " + q(t[0]) + "," + q(t[1]));
            break;
        case GateKind::Phase:
            line("u1(" + angle_text(g.angle) + ") " + q(t[0]));
            break;
        case GateKind::Controlled:
            break;
        }
    }

    void controlled(const Gate &g, std::vector<int> p) {
        const auto &t = g.targets;
        switch (g.kind) {
        case GateKind::X:
            mcx(p, t[0]);
            break;
        case GateKind::CNOT:
            p.push_back(t[0]);
            mcx(p, t[1]);
            break;
        case GateKind::H:
            mcry(p, t[0], std::numbers::pi / 2);
            mcx(p, t[0]);
            break;
        case GateKind::Ry:
            mcry(p, t[0], g.angle);
            break;
        case GateKind::Phase:
            p.push_back(t[0]);
            mcphase(p, g.angle);
            break;
        case GateKind::SWAP:
            line("cx " + q(t[1]) + "," + q(t[0]));
            p.push_back(t[0]);
            mcx(p, t[1]);
            line("cx " + q(t[1]) + "," + q(t[0]));
            break;
        case GateKind::Controlled:
            break;
        }
    }

    void mcx(const std::vector<int> &p, int t) {
        if (p.size() == 1) {
            line("cx " + q(p[0]) + "," + q(t));
        } else if (p.size() == 2) {
            line("ccx " + q(p[0]) + "," + q(p[1]) + "," + q(t));
        } else {
            line("h " + q(t));
            auto all = p;
            all.push_back(t);
            mcphase(all, std::numbers::pi);
            line("h " + q(t));
        }
    }

    // Gray-code ladder: rotation j sees the target flipped by the parity of
    // the controls in gray(j).
    void mcry(const std::vector<int> &p, int t, double theta) {
        const std::size_t n = p.size();
        const std::size_t steps = std::size_t{1} << n;
        const double base = theta / static_cast<double>(steps);
        for (std::size_t j = 0; j < steps; ++j) {
            const std::size_t g = j ^ (j >> 1);
            const std::size_t next = ((j + 1) % steps) ^ (((j + 1) % steps) >> 1);
            const double phi = (std::popcount(g) % 2 ? -base : base);
            line("ry(" + angle_text(phi) + ") " + q(t));
            const int bit = std::countr_zero(g ^ next);
            line("cx " + q(p[static_cast<std::size_t>(bit)]) + "," + q(t));
        }
    }

    // e^{i lambda prod x} expanded over parities of every nonempty subset.
    void mcphase(const std::vector<int> &qs, double lambda) {
        const std::size_t n = qs.size();
        if (n == 1) {
            line("u1(" + angle_text(lambda) + ") " + q(qs[0]));
            return;
        }
        const double scale = lambda / static_cast<double>(std::size_t{1} << (n - 1));
        for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
            std::vector<int> members;
            for (std::size_t i = 0; i < n; ++i) {
                if ((s >> i) & 1u) {
                    members.push_back(qs[i]);
                }
            }
            const int last = members.back();
            for (std::size_t i = 0; i + 1 < members.size(); ++i) {
                line("cx " + q(members[i]) + "," + q(last));
            }
            const double coeff = members.size() % 2 ? scale : -scale;
            line("u1(" + angle_text(coeff) + ") " + q(last));
            for (std::size_t i = members.size() - 1; i-- > 0;) {
                line("cx " + q(members[i]) + "," + q(last));
            }
        }
    }

    std::ostringstream &out_;
};

// angle := term {(+|-) term}; term := factor {(*|/) factor};
// factor := -factor | number | pi | (angle)
class AngleParser {
  public:
    explicit AngleParser(std::string_view s) : s_(s) {}

    double parse() {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail();
        }
        return v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const {
        throw std::invalid_argument("bad angle expression '" + std::string(s_) + "'");
    }
    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                v /= factor();
            } else {
                return v;
            }
        }
    }
    double factor() {
        if (eat('-')) {
            return -factor();
        }
        if (eat('+')) {
            return factor();
        }
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) {
                fail();
            }
            return v;
        }
        skip();
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        const std::string rest(s_.substr(pos_));
        char *end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) {
            fail();
        }
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<int> qubit_list(const std::string &args, const std::string &reg) {
    std::vector<int> out;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        const auto open = item.find('[');
        const auto close = item.find(']');
        if (open == std::string::npos || close == std::string::npos ||
            trim(item.substr(0, open)) != reg) {
            throw std::invalid_argument("bad qubit operand '" + item + "'");
        }
        out.push_back(std::stoi(item.substr(open + 1, close - open - 1)));
    }
    return out;
}

} // namespace

std::string to_qasm(const qsim::Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    auto list = [](const std::vector<int> &qs) {
        std::string s;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            s += (i ? "," : "") + q(qs[i]);
        }
        return s;
    };
    for (const auto &v : circuit.layout().variables) {
        out << "// layout variable " << list(v) << "\n";
    }
    if (!circuit.layout().controls.empty()) {
        out << "// layout controls " << list(circuit.layout().controls) << "\n";
    }
    Emitter emit(out);
    for (const auto &g : circuit.gates()) {
        emit.gate(g, {});
    }
    return out.str();
}

qsim::Circuit parse_qasm(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int num_qubits = -1;
    std::string reg;
    qsim::Layout layout;
    std::vector<Gate> gates;
    std::string pending;
    auto error = [&](const std::string &what) {
        return std::invalid_argument("QASM line " + std::to_string(lineno) +
                                     ": " + what);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string lineText = raw;
        const auto comment = lineText.find("//");
        if (comment != std::string::npos) {
            const std::string note = trim(lineText.substr(comment + 2));
            if (note.rfind("layout ", 0) == 0) {
                std::istringstream ns(note.substr(7));
                std::string role;
                std::string rest;
                ns >> role;
                std::getline(ns, rest);
                const auto qs = qubit_list(trim(rest), "q");
                if (role == "variable") {
                    layout.variables.push_back(qs);
                } else if (role == "controls") {
                    layout.controls = qs;
                } else {
                    throw error("unknown layout role '" + role + "'");
                }
            }
            lineText = lineText.substr(0, comment);
        }
        pending += lineText + " ";
        std::size_t semi;
        while ((semi = pending.find(';')) != std::string::npos) {
            const std::string stmt = trim(pending.substr(0, semi));
            pending.erase(0, semi + 1);
            if (stmt.empty() || stmt.rfind("OPENQASM", 0) == 0 ||
                stmt.rfind("include", 0) == 0 || stmt.rfind("barrier", 0) == 0 ||
                stmt.rfind("creg", 0) == 0) {
                continue;
            }
            if (stmt.rfind("qreg", 0) == 0) {
                if (num_qubits >= 0) {
                    throw error("only one qreg is supported");
                }
                const std::string decl = trim(stmt.substr(4));
                const auto open = decl.find('[');
                const auto close = decl.find(']');
                if (open == std::string::npos || close == std::string::npos) {
                    throw error("malformed qreg");
                }
                reg = trim(decl.substr(0, open));
                num_qubits = std::stoi(decl.substr(open + 1, close - open - 1));
                continue;
            }
            if (num_qubits < 0) {
                throw error("gate before qreg");
            }
            std::size_t name_end = 0;
            while (name_end < stmt.size() &&
                   (std::isalnum(static_cast<unsigned char>(stmt[name_end])) ||
                    stmt[name_end] == '_')) {
                ++name_end;
            }
            const std::string name = stmt.substr(0, name_end);
            std::string rest = stmt.substr(name_end);
            double angle = 0.0;
            bool has_angle = false;
            if (!trim(rest).empty() && trim(rest)[0] == '(') {
                const auto open = rest.find('(');
                int depth = 0;
                std::size_t close = open;
                for (; close < rest.size(); ++close) {
                    depth += rest[close] == '(' ? 1 : rest[close] == ')' ? -1 : 0;
                    if (depth == 0) {
                        break;
                    }
                }
                if (close == rest.size()) {
                    throw error("unbalanced parentheses");
                }
                try {
                    angle = AngleParser(rest.substr(open + 1, close - open - 1)).parse();
                } catch (const std::invalid_argument &e) {
                    throw error(e.what());
                }
                has_angle = true;
                rest = rest.substr(close + 1);
            }
            std::vector<int> qs;
            try {
                qs = qubit_list(trim(rest), reg);
            } catch (const std::exception &e) {
                throw error(e.what());
            }
            auto expect = [&](std::size_t operands, bool param) {
                if (qs.size() != operands || has_angle != param) {
                    throw error("wrong operands for '" + name + "'");
                }
            };
            namespace gs = qsim::gates;
            if (name == "x") {
                expect(1, false);
                gates.push_back(gs::x(qs[0]));
            } else if (name == "h") {
                expect(1, false);
                gates.push_back(gs::h(qs[0]));
            } else if (name == "ry") {
                expect(1, true);
                gates.push_back(gs::ry(qs[0], angle));
            } else if (name == "u1") {
                expect(1, true);
                gates.push_back(gs::phase(qs[0], angle));
            } else if (name == "cx") {
                expect(2, false);
                gates.push_back(gs::cnot(qs[0], qs[1]));
            } else if (name == "swap") {
                expect(2, false);
                gates.push_back(gs::swap(qs[0], qs[1]));
            } else if (name == "ccx") {
                expect(3, false);
                gates.push_back(gs::controlled({{qs[0], true}, {qs[1], true}},
                                               {gs::x(qs[2])}));
            } else {
                throw error("unsupported gate '" + name + "'");
            }
        }
    }
    if (!trim(pending).empty()) {
        throw std::invalid_argument("QASM: trailing statement without ';'");
    }
    if (num_qubits < 0) {
        throw std::invalid_argument("QASM: no qreg declared");
    }
    qsim::Circuit c(num_qubits, layout);
    c.append(gates);
    return c;
}

} // namespace qcopula::io
