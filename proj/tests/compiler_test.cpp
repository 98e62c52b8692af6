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

#include "cliffc/compiler.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cliffc/errors.hpp"
#include "cliffc/random.hpp"
#include "cliffc/synthesis.hpp"
#include "cliffc/tableau.hpp"
#include "dense_oracle.hpp"
#include "test_support.hpp"

namespace cliffc {
namespace {

const std::vector<SegmentTag> kNineTags{SegmentTag::CX, SegmentTag::P_all, SegmentTag::CX,
                                        SegmentTag::P,  SegmentTag::H_all, SegmentTag::P_all,
                                        SegmentTag::CX, SegmentTag::P,     SegmentTag::H};
const std::vector<SegmentTag> kOneCnotTags{SegmentTag::CX, SegmentTag::CZ, SegmentTag::P, SegmentTag::H_all,
                                           SegmentTag::CZ, SegmentTag::P,  SegmentTag::H};

void expect_compiles(const F2Matrix &s, const PhaseVector &p) {
    StepAudit audit;
    CompiledClifford cc = compile(s, p, {}, &audit);
    EXPECT_EQ(cc.nine_form.segment_tags(), kNineTags);
    EXPECT_EQ(cc.one_cnot_form.segment_tags(), kOneCnotTags);
    EXPECT_EQ(simulate_circuit(cc.nine_form).s(), s);
    EXPECT_EQ(simulate_circuit(cc.one_cnot_form).s(), s);
    Tableau fixed = simulate_circuit(cc.fixed_one_cnot_form());
    EXPECT_EQ(fixed.s(), s);
    EXPECT_EQ(fixed.phases(), p);
    Tableau nine = simulate_circuit(cc.fixed_nine_form());
    EXPECT_EQ(nine.phases(), p);
    EXPECT_EQ(cc.achieved_p, p);
    EXPECT_EQ(audit.symplectic_checks, 11u);
    EXPECT_GE(audit.block_checks, 3u);
}

TEST(HadamardFix, Examples) {
    F2Matrix hall = simulate_circuit(synth_hadamard_layer(F2Vector::ones(3), SegmentTag::H_all)).s();
    HadamardFix already = hadamard_fix(hall);
    EXPECT_FALSE(already.hset.any());
    HadamardFix forced = hadamard_fix(F2Matrix::identity(6));
    EXPECT_EQ(forced.hset, F2Vector::ones(3));
    EXPECT_TRUE(blocks(forced.s1).b.is_identity());
}

TEST(HadamardFix, ExhaustiveSpFour) {
    for (size_t n = 1; n <= 2; n++) {
        for (const auto &elem : testing::enumerate_symplectic_group(n)) {
            HadamardFix fix = hadamard_fix(elem.s);
            EXPECT_EQ(rank(blocks(fix.s1).b), n);
            F2Matrix s = elem.s;
            for (uint32_t q = 0; q < n; q++) {
                if (fix.hset.get(q)) {
                    apply_left(s, Gate::h(q));
                }
            }
            EXPECT_EQ(s, fix.s1);
        }
    }
}

TEST(Decompose, RejectsNonSymplectic) {
    EXPECT_THROW(decompose(F2Matrix::from_rows({"11", "11"})), NotSymplecticError);
    EXPECT_THROW(compile(F2Matrix::from_rows({"11", "11"}), std::nullopt), NotSymplecticError);
    EXPECT_THROW(compile(F2Matrix(3, 3), std::nullopt), NotSymplecticError);
}

TEST(Decompose, PartsInvariants) {
    std::mt19937_64 rng(61);
    for (size_t n : {1, 2, 3, 5, 8, 16, 33}) {
        for (int trial = 0; trial < 10; trial++) {
            testing::RandomClifford r = testing::random_clifford(n, testing::default_gate_count(n), rng);
            DecompositionParts parts = decompose(r.s);
            EXPECT_EQ(rank(parts.q), n);
            EXPECT_EQ(rank(parts.n_mat), n);
            EXPECT_EQ(rank(parts.m_mat), n);
            EXPECT_EQ(rank(parts.l_mat), n);
            EXPECT_EQ(parts.l_mat, invert(parts.m_mat) * transpose(parts.n_mat) * inverse_transpose(parts.q));
        }
    }
}

TEST(Decompose, Examples) {
    DecompositionParts id = decompose(F2Matrix::identity(4));
    EXPECT_TRUE(simulate_circuit(build_nine_form(id)).s().is_identity());
    F2Matrix h = gate_rep(Gate::h(0), 1).s;
    EXPECT_EQ(simulate_circuit(build_nine_form(decompose(h))).s(), h);
}

TEST(Decompose, ExhaustiveSmallGroups) {
    for (size_t n = 1; n <= 2; n++) {
        auto group = testing::enumerate_symplectic_group(n);
        EXPECT_EQ(group.size(), n == 1 ? 6u : 720u);
        for (const auto &elem : group) {
            DecompositionParts parts = decompose(elem.s);
            Circuit nine = build_nine_form(parts);
            ASSERT_EQ(simulate_circuit(nine).s(), elem.s);
            ASSERT_EQ(simulate_circuit(to_one_cnot_form(nine, parts)).s(), elem.s);
        }
    }
}

TEST(Decompose, RandomReconstruction) {
    std::mt19937_64 rng(62);
    for (size_t n : {3, 4, 5, 6, 7, 8, 16, 32, 64}) {
        int trials = n <= 16 ? 100 : n == 32 ? 50 : 20;
        for (int trial = 0; trial < trials; trial++) {
            testing::RandomClifford r = testing::random_clifford(n, testing::default_gate_count(n), rng);
            DecompositionParts parts = decompose(r.s);
            ASSERT_EQ(simulate_circuit(build_nine_form(parts)).s(), r.s) << "n=" << n;
        }
    }
}

TEST(BuildNineForm, Shape) {
    std::mt19937_64 rng(63);
    testing::RandomClifford r = testing::random_clifford(4, 500, rng);
    Circuit nine = build_nine_form(decompose(r.s));
    EXPECT_EQ(nine.segment_tags(), kNineTags);
    EXPECT_EQ(simulate_circuit(nine).s(), r.s);
}

TEST(RewritePCx, Examples) {
    std::mt19937_64 rng(64);
    F2Matrix m = random_invertible(5, rng);
    PCxRewrite zero = rewrite_p_cx(F2Vector(5), m);
    EXPECT_TRUE(zero.gamma.is_zero());
    EXPECT_FALSE(zero.d_out.any());
    EXPECT_EQ(zero.m_out, m);
    F2Vector d = F2Vector::from_string("10110");
    PCxRewrite id = rewrite_p_cx(d, F2Matrix::identity(5));
    EXPECT_TRUE(id.gamma.is_zero());
    EXPECT_EQ(id.d_out, d);
}

TEST(RewritePCx, RandomSimulatesIdentically) {
    std::mt19937_64 rng(65);
    for (size_t n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 20; trial++) {
            F2Vector d = random_matrix(1, n, rng).row_vector(0);
            F2Matrix m = random_invertible(n, rng);
            PCxRewrite rw = rewrite_p_cx(d, m);
            Circuit lhs = concat(synth_phase_layer(d), synth_cnot_gauss(m));
            Circuit rhs = concat(concat(synth_cnot_gauss(rw.m_out), synth_cz(rw.gamma)), synth_phase_layer(rw.d_out));
            EXPECT_EQ(simulate_circuit(lhs).s(), simulate_circuit(rhs).s());
        }
    }
}

TEST(CommuteCxHall, Examples) {
    EXPECT_TRUE(commute_cx_hall(F2Matrix::identity(3)).is_identity());
    F2Matrix m = F2Matrix::from_rows({"10", "11"});
    EXPECT_EQ(commute_cx_hall(m), F2Matrix::from_rows({"11", "01"}));
    std::mt19937_64 rng(66);
    for (size_t n : {1, 2, 4, 7}) {
        F2Matrix r = random_invertible(n, rng);
        EXPECT_EQ(commute_cx_hall(commute_cx_hall(r)), r);
        Circuit hall = synth_hadamard_layer(F2Vector::ones(n), SegmentTag::H_all);
        Circuit before = concat(synth_cnot_gauss(r), hall);
        Circuit after = concat(hall, synth_cnot_gauss(commute_cx_hall(r)));
        EXPECT_EQ(simulate_circuit(before).s(), simulate_circuit(after).s());
    }
}

TEST(ToOneCnotForm, IdentityAndRandom) {
    DecompositionParts id = decompose(F2Matrix::identity(6));
    Circuit one = to_one_cnot_form(build_nine_form(id), id);
    EXPECT_TRUE(simulate_circuit(one).s().is_identity());
    EXPECT_EQ(one.segment_tags(), kOneCnotTags);

    std::mt19937_64 rng(67);
    for (size_t n = 2; n <= 6; n++) {
        for (int trial = 0; trial < 20; trial++) {
            testing::RandomClifford r = testing::random_clifford(n, 500, rng);
            DecompositionParts parts = decompose(r.s);
            Circuit nine = build_nine_form(parts);
            Circuit one_cnot = to_one_cnot_form(nine, parts);
            EXPECT_EQ(simulate_circuit(one_cnot).s(), simulate_circuit(nine).s());
            EXPECT_EQ(one_cnot.segment_tags(), kOneCnotTags);
            for (size_t k = 0; k < one_cnot.segments().size(); k++) {
                SegmentTag tag = one_cnot.segment_tags()[k];
                for (const Gate &g : one_cnot.segment_gates(k)) {
                    if (is_two_qubit(g.kind)) {
                        EXPECT_TRUE(tag == SegmentTag::CX || tag == SegmentTag::CZ);
                    }
                }
            }
        }
    }
}

TEST(PauliFixup, Examples) {
    Circuit p = Circuit::single_segment(1, SegmentTag::P, std::vector<Gate>{Gate::p(0)});
    F2Matrix sp = F2Matrix::from_rows({"10", "11"});
    EXPECT_TRUE(pauli_fixup(p, PhaseVector{1, 0}, sp).empty());
    Circuit z = pauli_fixup(p, PhaseVector{3, 0}, sp);
    ASSERT_EQ(z.gates().size(), 1u);
    EXPECT_EQ(z.gates()[0], Gate::z(0));
    EXPECT_EQ(z.segment_tags(), std::vector<SegmentTag>{SegmentTag::PAULI});
    // X -> iX is not Hermitian, so no Pauli layer reaches it.
    EXPECT_THROW(pauli_fixup(Circuit(1), PhaseVector{1, 0}, F2Matrix::identity(2)), InvalidPhaseVectorError);
    EXPECT_THROW(pauli_fixup(p, PhaseVector{0, 0}, F2Matrix::identity(2)), std::invalid_argument);
}

TEST(PauliFixup, DenseOracle) {
    std::mt19937_64 rng(68);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 50; trial++) {
            testing::RandomClifford r = testing::random_clifford(n, 60, rng);
            CompiledClifford cc = compile(r.s, r.p);
            testing::Dense want = testing::circuit_unitary(r.circuit);
            testing::Dense got = testing::circuit_unitary(cc.fixed_one_cnot_form());
            EXPECT_LT(testing::phase_aligned_error(got, want), 1e-9);
            EXPECT_LT(testing::conjugation_error(got, r.s, r.p), 1e-9);
            EXPECT_LT(testing::phase_aligned_error(testing::circuit_unitary(cc.fixed_nine_form()), want), 1e-9);
        }
    }
}

TEST(Compile, Identity) {
    CompiledClifford cc = compile(F2Matrix::identity(4), PhaseVector(4, 0));
    EXPECT_TRUE(simulate_circuit(cc.fixed_one_cnot_form()).s().is_identity());
    EXPECT_EQ(cc.one_cnot_counts.two_qubit_total, 0u);
    EXPECT_TRUE(cc.pauli_layer.empty());
}

TEST(Compile, WithoutPhaseTarget) {
    std::mt19937_64 rng(69);
    testing::RandomClifford r = testing::random_clifford(5, 300, rng);
    CompiledClifford cc = compile(r.s, std::nullopt);
    EXPECT_TRUE(cc.pauli_layer.empty());
    Tableau t = simulate_circuit(cc.one_cnot_form);
    EXPECT_EQ(t.s(), r.s);
    EXPECT_EQ(t.phases(), cc.achieved_p);
}

TEST(Compile, RejectsBadPhases) {
    EXPECT_THROW(compile(F2Matrix::identity(2), PhaseVector{1, 0}), InvalidPhaseVectorError);
    EXPECT_THROW(compile(F2Matrix::identity(2), PhaseVector{0, 4}), InvalidPhaseVectorError);
    EXPECT_THROW(compile(F2Matrix::identity(2), PhaseVector{0}), InvalidPhaseVectorError);
}

TEST(Compile, ExhaustiveSpFour) {
    std::mt19937_64 rng(70);
    for (size_t n = 1; n <= 2; n++) {
        for (const auto &elem : testing::enumerate_symplectic_group(n)) {
            Tableau t = simulate_circuit(testing::with_random_paulis(elem.word, rng));
            expect_compiles(t.s(), t.phases());
        }
    }
}

TEST(Compile, RandomThirtyTwo) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; trial++) {
        testing::RandomClifford r = testing::random_clifford(32, 500, rng);
        expect_compiles(r.s, r.p);
    }
}

TEST(Compile, DeterministicAndGaussOption) {
    std::mt19937_64 rng(72);
    testing::RandomClifford r = testing::random_clifford(12, 800, rng);
    CompiledClifford a = compile(r.s, r.p);
    CompiledClifford b = compile(r.s, r.p);
    EXPECT_EQ(a.one_cnot_form, b.one_cnot_form);
    EXPECT_EQ(a.nine_form, b.nine_form);
    CompileOptions gauss;
    gauss.use_pmh = false;
    CompiledClifford g = compile(r.s, r.p, gauss);
    EXPECT_EQ(simulate_circuit(g.fixed_one_cnot_form()).phases(), r.p);
    CompileOptions block;
    block.pmh_block = 4;
    EXPECT_EQ(simulate_circuit(compile(r.s, r.p, block).fixed_one_cnot_form()).s(), r.s);
}

}  // namespace
}  // namespace cliffc
