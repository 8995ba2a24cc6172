/*
   Copyright 2026 The novpers authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <novpers/chain_level.hpp>
#include <novpers/rng.hpp>

using namespace novpers;

namespace {
const Group Z = Group::cyclic(1);
const Group T0 = Group::trivial();

GroupRing<Rational> gr(std::initializer_list<std::pair<long long, long long>> terms)
{
    GroupRing<Rational> r;
    for (auto [m, c] : terms) r.set(m, Rational(c));
    return r;
}
} // namespace

TEST_CASE("block homology pairs")
{
    // a matched rank-one block in degree 0
    auto pm = make_pm<Rational>(T0, Rational(0), Rational(3), 0);
    auto p = homology_fmp(pm, 0);
    REQUIRE(p.rank() == 1);
    REQUIRE(p.torsion_dim == 0);
    REQUIRE(basis_spectrum(p) == Spectrum{SpectrumEntry{Rational(0), Rational(3)}});

    // a point with the constant function: spectrum {(0,0)}
    auto pt = make_pm<Rational>(T0, Rational(0), Rational(0), 0);
    REQUIRE(basis_spectrum(homology_fmp(pt, 0)) ==
            Spectrum{SpectrumEntry{Rational(0), Rational(0)}});

    // torsion block: free rank 0, torsion dimension 1 in its degree
    auto prblock = make_pr<Rational>(Z, {gr({{1, 1}, {0, -1}})}, 2);
    auto hp = homology_fmp(prblock, 2);
    REQUIRE(hp.rank() == 0);
    REQUIRE(hp.torsion_dim == 1);
    REQUIRE(homology_fmp(prblock, 3).torsion_dim == 0);
}

TEST_CASE("elementary ascending block in a barcode")
{
    auto pe = make_pe_up<Rational>(Z, Rational(0), Rational(1), 0);
    auto fb = full_barcode(pe);
    REQUIRE(fb.torsion.empty());
    auto bars = fb.bars.bars();
    REQUIRE(bars.size() == 1);
    REQUIRE(bars[0] == Bar{0, BarKind::HalfUp, Rational(0), Rational(1)});

    // zero-length block contributes nothing
    auto pez = make_pe_up<Rational>(Z, Rational(0), Rational(0), 0);
    REQUIRE(full_barcode(pez).bars.empty());
}

TEST_CASE("block decomposition of direct sums is additive")
{
    auto cp = make_pm<Rational>(Z, Rational(0), Rational(3, 2), 0);
    cp.append(make_pe_up<Rational>(Z, Rational(1, 3), Rational(1, 2), 0));
    cp.append(make_pe_down<Rational>(Z, Rational(1), Rational(1, 4), 1));
    cp.append(make_pr<Rational>(Z, {gr({{1, 1}, {0, -1}})}, 1));

    auto blocks = block_decomposition(cp);
    std::vector<BlockSummand> expected{
        BlockSummand{BlockSummand::Kind::Torsion, 1, 1, Rational(0), Rational(0), 1},
        BlockSummand{BlockSummand::Kind::FinUp, 0, 0, Rational(1, 3), Rational(5, 6), 1},
        BlockSummand{BlockSummand::Kind::FinDown, 1, 1, Rational(3, 4), Rational(1), 1},
        BlockSummand{BlockSummand::Kind::EssClosed, 0, 0, Rational(0), Rational(3, 2), 1},
    };
    std::sort(expected.begin(), expected.end());
    REQUIRE(blocks == expected);

    // union with another block
    auto more = make_pm<Rational>(Z, Rational(1, 2), Rational(0), 2);
    ChainLevelFMP<Rational> sum = cp;
    sum.append(more);
    auto blocks2 = block_decomposition(sum);
    expected.push_back(BlockSummand{BlockSummand::Kind::EssOpen, 1, 2, Rational(1, 2), Rational(0), 1});
    std::sort(expected.begin(), expected.end());
    REQUIRE(blocks2 == expected);
}

TEST_CASE("two-parameter dimensions of the matched block")
{
    // matched block with levels (0, 1) in degree 0 over the trivial group
    auto pm = make_pm<Rational>(T0, Rational(0), Rational(1), 0);
    auto blocks = block_decomposition(pm);
    auto dim = [&](int k, Rational s, Rational t) { return hk_dim(blocks, T0, k, s, t); };
    // degree 0: nonzero iff s >= -1 and t >= 0
    REQUIRE(dim(0, Rational(0), Rational(0)) == 1);
    REQUIRE(dim(0, Rational(-1), Rational(5)) == 1);
    REQUIRE(dim(0, Rational(-2), Rational(5)) == 0);
    REQUIRE(dim(0, Rational(0), Rational(-1, 2)) == 0);
    // degree -1: nonzero iff s < -1 and t < 0
    REQUIRE(dim(-1, Rational(-3, 2), Rational(-1, 2)) == 1);
    REQUIRE(dim(-1, Rational(0), Rational(-1, 2)) == 0);
    REQUIRE(dim(-1, Rational(-3, 2), Rational(0)) == 0);

    // the cone oracle agrees on a grid
    for (int si = -8; si <= 8; si += 3)
        for (int ti = -8; ti <= 8; ti += 3) {
            Rational s(si, 3), t(ti, 3);
            for (int k = -2; k <= 1; ++k)
                REQUIRE(hk_cone_direct(pm, k, s, t) == dim(k, s, t));
        }
}

TEST_CASE("two-parameter dimensions of elementary blocks with translation")
{
    // ascending elementary block of length 2 over the integer group
    auto pe = make_pe_up<Rational>(Z, Rational(0), Rational(2), 0);
    auto blocks = block_decomposition(pe);
    for (int ti = -5; ti <= 5; ++ti) {
        REQUIRE(hk_dim(blocks, Z, 0, Rational(ti, 2), Rational(ti, 3)) == 2);
        REQUIRE(hk_dim(blocks, Z, 1, Rational(ti, 2), Rational(ti, 3)) == 0);
    }
}

TEST_CASE("cone oracle agrees on elementary blocks over the trivial group")
{
    auto pe = make_pe_up<Rational>(T0, Rational(0), Rational(2), 0);
    auto blocks = block_decomposition(pe);
    for (int si = -4; si <= 4; si += 2)
        for (int ti = -4; ti <= 5; ++ti) {
            Rational s(si), t(ti, 2);
            for (int k = -1; k <= 1; ++k)
                REQUIRE(hk_cone_direct(pe, k, s, t) == hk_dim(blocks, T0, k, s, t));
        }
    auto ped = make_pe_down<Rational>(T0, Rational(1), Rational(3, 2), 1);
    auto blocksd = block_decomposition(ped);
    for (int si = -4; si <= 4; ++si)
        for (int ti = -4; ti <= 4; ti += 2) {
            Rational s(si, 2), t(ti);
            for (int k = 0; k <= 2; ++k)
                REQUIRE(hk_cone_direct(ped, k, s, t) == hk_dim(blocksd, T0, k, s, t));
        }
}

TEST_CASE("dimension additivity and rank at equal corners")
{
    auto cp = make_pm<Rational>(T0, Rational(0), Rational(1), 0);
    cp.append(make_pe_up<Rational>(T0, Rational(1, 2), Rational(1), 0));
    auto blocks = block_decomposition(cp);

    auto pm_blocks = block_decomposition(make_pm<Rational>(T0, Rational(0), Rational(1), 0));
    auto pe_blocks = block_decomposition(make_pe_up<Rational>(T0, Rational(1, 2), Rational(1), 0));
    for (int si = -6; si <= 6; si += 2)
        for (int ti = -6; ti <= 6; ti += 2) {
            Rational s(si, 2), t(ti, 2);
            for (int k = -1; k <= 1; ++k) {
                REQUIRE(hk_dim(blocks, T0, k, s, t) ==
                        hk_dim(pm_blocks, T0, k, s, t) + hk_dim(pe_blocks, T0, k, s, t));
                REQUIRE(hk_rank(blocks, T0, k, s, t, s, t) == hk_dim(blocks, T0, k, s, t));
            }
        }
}

TEST_CASE("rank respects inclusions of corners")
{
    auto cp = make_pm<Rational>(T0, Rational(0), Rational(1), 0);
    auto blocks = block_decomposition(cp);
    // class alive at both corners
    REQUIRE(hk_rank(blocks, T0, 0, Rational(0), Rational(1), Rational(2), Rational(3)) == 1);
    // alive at the larger corner only
    REQUIRE(hk_rank(blocks, T0, 0, Rational(-2), Rational(1), Rational(2), Rational(3)) == 0);
    REQUIRE_THROWS_AS(hk_rank(blocks, T0, 0, Rational(0), Rational(0), Rational(-1), Rational(0)),
                      std::invalid_argument);
}

TEST_CASE("summing a zero-length block never changes the dimensions")
{
    Rng rng(5150);
    auto base = make_pm<Rational>(T0, Rational(0), Rational(1), 0);
    base.append(make_pe_up<Rational>(T0, Rational(1, 3), Rational(2), 1));
    auto with_zero = base;
    with_zero.append(make_pe_up<Rational>(T0, Rational(1, 2), Rational(0), 0));
    with_zero.append(make_pe_down<Rational>(T0, Rational(3, 4), Rational(0), 1));
    auto b0 = block_decomposition(base), b1 = block_decomposition(with_zero);
    for (int trial = 0; trial < 40; ++trial) {
        Rational s = rng.rational(-3, 3), t = rng.rational(-3, 3);
        for (int k = -1; k <= 2; ++k)
            REQUIRE(hk_dim(b0, T0, k, s, t) == hk_dim(b1, T0, k, s, t));
    }
}

TEST_CASE("torsion blocks are parameter independent")
{
    auto pr = make_pr<Rational>(Z, {gr({{1, 1}, {0, -1}}), gr({{2, 1}, {1, -2}, {0, 1}})}, 1);
    auto blocks = block_decomposition(pr);
    REQUIRE(blocks.size() == 1);
    REQUIRE(blocks[0].kind == BlockSummand::Kind::Torsion);
    REQUIRE(blocks[0].count == 3); // 1 + 2 exponent spans
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        Rational s = rng.rational(-5, 5), t = rng.rational(-5, 5);
        REQUIRE(hk_dim(blocks, Z, 1, s, t) == 3);
        REQUIRE(hk_dim(blocks, Z, 0, s, t) == 0);
        REQUIRE(hk_dim(blocks, Z, 2, s, t) == 0);
    }
}

TEST_CASE("euler characteristic is additive across degrees on strict sums")
{
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        ChainLevelFMP<Rational> cp(T0);
        cp.append(make_pm<Rational>(T0, rng.rational(-2, 2), rng.rational(-2, 2), 0));
        cp.append(make_pm<Rational>(T0, rng.rational(-2, 2), rng.rational(-2, 2), 1));
        cp.append(make_pe_up<Rational>(T0, rng.rational(-2, 2), Rational(1), 0));
        auto blocks = block_decomposition(cp);
        for (int probe = 0; probe < 5; ++probe) {
            Rational s = rng.rational(-3, 3), t = rng.rational(-3, 3);
            long long euler_blocks = 0, euler_cone = 0;
            for (int k = -2; k <= 3; ++k) {
                long long sign = (k % 2 == 0) ? 1 : -1;
                euler_blocks += sign * hk_dim(blocks, T0, k, s, t);
                euler_cone += sign * hk_cone_direct(cp, k, s, t);
            }
            REQUIRE(euler_blocks == euler_cone);
        }
    }
}

TEST_CASE("full barcode of a mixed sum")
{
    auto cp = make_pm<Rational>(T0, Rational(0), Rational(1), 0);   // closed [0,1] deg 0
    cp.append(make_pm<Rational>(T0, Rational(1), Rational(0), 1));  // open (0,1) deg 0
    cp.append(make_pe_up<Rational>(T0, Rational(0), Rational(1, 2), 1));
    auto fb = full_barcode(cp);
    auto bars = fb.bars.bars();
    REQUIRE(bars.size() == 3);
    REQUIRE(bars[0] == Bar{0, BarKind::Closed, Rational(0), Rational(1)});
    REQUIRE(bars[1] == Bar{0, BarKind::Open, Rational(0), Rational(1)});
    REQUIRE(bars[2] == Bar{1, BarKind::HalfUp, Rational(0), Rational(1, 2)});
}

TEST_CASE("cone oracle matches on random strict sums over the trivial group")
{
    Rng rng(112233);
    for (int trial = 0; trial < 8; ++trial) {
        ChainLevelFMP<Rational> cp(T0);
        int nblocks = 1 + static_cast<int>(rng.below(4));
        for (int i = 0; i < nblocks; ++i) {
            int kind = static_cast<int>(rng.below(3));
            int deg = static_cast<int>(rng.below(2));
            Rational a = rng.rational(-2, 2);
            Rational len = rng.rational(0, 2);
            if (kind == 0)
                cp.append(make_pm<Rational>(T0, a, rng.rational(-2, 2), deg));
            else if (kind == 1)
                cp.append(make_pe_up<Rational>(T0, a, len, deg));
            else
                cp.append(make_pe_down<Rational>(T0, a, len, deg));
        }
        auto blocks = block_decomposition(cp);
        for (int probe = 0; probe < 12; ++probe) {
            Rational s = rng.rational(-3, 3), t = rng.rational(-3, 3);
            for (int k = -2; k <= 2; ++k)
                REQUIRE(hk_cone_direct(cp, k, s, t) == hk_dim(blocks, T0, k, s, t));
        }
    }
}
