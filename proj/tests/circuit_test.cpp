// Copyright 2026 The cliffc Authors
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

#include "cliffc/circuit.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cliffc/errors.hpp"
#include "cliffc/random.hpp"
#include "cliffc/synthesis.hpp"
#include "cliffc/tableau.hpp"

namespace cliffc {
namespace {

Circuit tagged_example() {
    Circuit c(3);
    std::vector<Gate> cx{Gate::cnot(0, 1), Gate::cnot(2, 1)};
    std::vector<Gate> hall{Gate::h(0), Gate::h(1), Gate::h(2)};
    std::vector<Gate> cz{Gate::cz(0, 2)};
    std::vector<Gate> pauli{Gate::x(1), Gate::y(2)};
    c.add_segment(SegmentTag::CX, cx);
    c.add_segment(SegmentTag::H_all, hall);
    c.add_segment(SegmentTag::CZ, cz);
    c.add_segment(SegmentTag::PAULI, pauli);
    return c;
}

TEST(Gate, Validation) {
    Circuit c(2);
    EXPECT_THROW(c.append(Gate::h(2)), DimensionError);
    EXPECT_THROW(c.append(Gate::cnot(1, 1)), std::invalid_argument);
    EXPECT_THROW(Circuit::from_gates(2, {Gate::cz(0, 5)}), DimensionError);
}

TEST(Segments, TagLegality) {
    Circuit c(2);
    std::vector<Gate> bad{Gate::cz(0, 1)};
    EXPECT_THROW(c.add_segment(SegmentTag::CX, bad), std::invalid_argument);
    std::vector<Gate> two_q{Gate::cnot(0, 1)};
    EXPECT_THROW(c.add_segment(SegmentTag::F, two_q), std::invalid_argument);
    EXPECT_THROW(c.add_segment(SegmentTag::PAULI, two_q), std::invalid_argument);
    std::vector<Gate> partial{Gate::h(0)};
    EXPECT_THROW(c.add_segment(SegmentTag::H_all, partial), std::invalid_argument);
    std::vector<Gate> h{Gate::h(0), Gate::h(1)};
    EXPECT_THROW(c.add_segment(SegmentTag::P_all, h), std::invalid_argument);
    c.add_segment(SegmentTag::H_all, h);
    EXPECT_THROW(c.append(Gate::h(0)), std::invalid_argument);

    for (GateKind k : {GateKind::H, GateKind::P, GateKind::X, GateKind::Y, GateKind::Z}) {
        EXPECT_TRUE(segment_allows(SegmentTag::F, k));
        EXPECT_FALSE(segment_allows(SegmentTag::CX, k));
    }
    EXPECT_TRUE(segment_allows(SegmentTag::CX, GateKind::CNOT));
    EXPECT_FALSE(segment_allows(SegmentTag::PAULI, GateKind::H));
    EXPECT_TRUE(segment_allows(SegmentTag::PAULI, GateKind::Y));
}

TEST(Segments, PartitionTheGateList) {
    Circuit c = tagged_example();
    ASSERT_EQ(c.segments().size(), 4u);
    size_t next = 0;
    for (const Segment &s : c.segments()) {
        EXPECT_EQ(s.begin, next);
        next = s.end;
    }
    EXPECT_EQ(next, c.gates().size());
    EXPECT_EQ(c.segment_gates(1).size(), 3u);
    EXPECT_EQ(c.segment_tags(),
              (std::vector<SegmentTag>{SegmentTag::CX, SegmentTag::H_all, SegmentTag::CZ, SegmentTag::PAULI}));
}

TEST(Count, Examples) {
    GateCounts empty = count(Circuit(3));
    EXPECT_EQ(empty.total, 0u);
    EXPECT_EQ(empty.depth, 0u);
    EXPECT_EQ(empty.two_qubit_total, 0u);

    GateCounts one = count(Circuit::from_gates(2, {Gate::cnot(0, 1)}));
    EXPECT_EQ(one.two_qubit_total, 1u);
    EXPECT_EQ(one.depth, 1u);

    GateCounts hall = count(synth_hadamard_layer(F2Vector::ones(4), SegmentTag::H_all));
    EXPECT_EQ(hall.depth, 1u);
    EXPECT_EQ(hall.of(GateKind::H), 4u);

    GateCounts mixed = count(tagged_example());
    EXPECT_EQ(mixed.total, 8u);
    EXPECT_EQ(mixed.two_qubit_total, 3u);
    // CNOT(0,1), CNOT(2,1), {H0, H1, H2 after their CNOTs}, CZ(0,2), X1/Y2.
    EXPECT_EQ(mixed.depth, 5u);
}

TEST(Count, SumsOverConcat) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; trial++) {
        Circuit a = random_clifford_circuit(5, 40, rng);
        Circuit b = random_clifford_circuit(5, 40, rng);
        GateCounts ka = count(a);
        GateCounts kb = count(b);
        GateCounts kab = count(concat(a, b));
        EXPECT_EQ(kab.total, ka.total + kb.total);
        EXPECT_EQ(kab.two_qubit_total, ka.two_qubit_total + kb.two_qubit_total);
        for (GateKind k : {GateKind::H, GateKind::P, GateKind::CNOT, GateKind::X, GateKind::Y, GateKind::Z}) {
            EXPECT_EQ(kab.of(k), ka.of(k) + kb.of(k));
        }
        EXPECT_LE(kab.depth, ka.depth + kb.depth);
        size_t sum = 0;
        for (const auto &[kind, n] : kab.per_kind) {
            sum += n;
        }
        EXPECT_EQ(sum, kab.total);
    }
}

TEST(Concat, Examples) {
    Circuit c = tagged_example();
    EXPECT_EQ(concat(c, Circuit(3)), c);
    EXPECT_EQ(concat(Circuit(3), c), c);
    Circuit twice = concat(c, c);
    EXPECT_EQ(twice.segments().size(), 8u);
    EXPECT_EQ(twice.segment_tags()[4], SegmentTag::CX);
    EXPECT_THROW(concat(c, Circuit::from_gates(3, {Gate::h(0)})), std::invalid_argument);
    EXPECT_THROW(concat(c, Circuit(4)), DimensionError);
}

TEST(Concat, SimulatesAsComposition) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; trial++) {
        Circuit a = random_clifford_circuit(6, 100, rng);
        Circuit b = random_clifford_circuit(6, 100, rng);
        Tableau ta = simulate_circuit(a);
        Tableau tb = simulate_circuit(b);
        Tableau tab = simulate_circuit(concat(a, b));
        EXPECT_EQ(tab.s(), tb.s() * ta.s());
        Tableau manual = ta;
        manual.apply(b);
        EXPECT_EQ(tab.phases(), manual.phases());
    }
}

TEST(ReverseCnot, Examples) {
    Circuit one = Circuit::from_gates(3, {Gate::cnot(0, 2)});
    EXPECT_EQ(reverse_cnot_segment(one), one);
    EXPECT_TRUE(reverse_cnot_segment(Circuit(3)).empty());
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; trial++) {
        Circuit c = synth_cnot_gauss(random_invertible(8, rng));
        Tableau t = simulate_circuit(concat(c, reverse_cnot_segment(c)));
        EXPECT_TRUE(t.s().is_identity());
        EXPECT_EQ(t.phases(), PhaseVector(16, 0));
    }
    EXPECT_THROW(reverse_cnot_segment(Circuit::from_gates(2, {Gate::h(0)})), std::invalid_argument);
}

TEST(CircuitText, RoundTripTagged) {
    Circuit c = tagged_example();
    std::stringstream io;
    write_circuit(io, c);
    std::string text = io.str();
    Circuit back = read_circuit(io);
    EXPECT_EQ(back, c);
    std::stringstream again;
    write_circuit(again, back);
    EXPECT_EQ(again.str(), text);
}

TEST(CircuitText, RoundTripUntagged) {
    std::mt19937_64 rng(34);
    Circuit c = random_clifford_circuit(4, 50, rng);
    c.append(Gate::cz(3, 1));
    std::stringstream io;
    write_circuit(io, c);
    EXPECT_EQ(read_circuit(io), c);
}

TEST(CircuitText, Parsing) {
    std::istringstream ok("# comment\nn 2\nH 0\n\nCNOT 0 1\n# note\nCZ 1 0\nX 1\n");
    Circuit c = read_circuit(ok);
    EXPECT_EQ(c.gates().size(), 4u);
    EXPECT_FALSE(c.tagged());

    auto fails_at = [](const std::string &text, size_t line) {
        std::istringstream in(text);
        try {
            read_circuit(in);
        } catch (const ParseError &e) {
            EXPECT_EQ(e.line, line) << text;
            return;
        }
        ADD_FAILURE() << "no ParseError for: " << text;
    };
    fails_at("n 2\nH 0\nQ 1\n", 3);
    fails_at("n 2\nCNOT 0\n", 2);
    fails_at("n 2\nH 5\n", 2);
    fails_at("n 2\nCNOT 1 1\n", 2);
    fails_at("H 0\n", 1);
    fails_at("n 2\n# segment CX\nH 0\n", 3);
    fails_at("n 2\n# segment BOGUS\n", 2);
    fails_at("n 2\nH 0\n# segment H\nH 1\n", 3);
    fails_at("n 2\nH 0 1\n", 2);
}

TEST(Qasm, Export) {
    std::ostringstream out;
    write_qasm(out, tagged_example());
    std::string q = out.str();
    EXPECT_NE(q.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(q.find("qreg q[3];"), std::string::npos);
    EXPECT_NE(q.find("cx q[0],q[1];"), std::string::npos);
    EXPECT_NE(q.find("cz q[0],q[2];"), std::string::npos);
    EXPECT_NE(q.find("y q[2];"), std::string::npos);
    std::ostringstream p;
    write_qasm(p, Circuit::from_gates(1, {Gate::p(0)}));
    EXPECT_NE(p.str().find("s q[0];"), std::string::npos);
}

}  // namespace
}  // namespace cliffc
