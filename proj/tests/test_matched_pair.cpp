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

#include <novpers/matched_pair.hpp>
#include <novpers/rng.hpp>

using namespace novpers;

namespace {
const Group Z = Group::cyclic(1);
const Group T0 = Group::trivial();

template <class K>
MatchedPair<K> pm_sum(const Group& g, const std::vector<std::pair<Rational, Rational>>& blocks)
{
    std::size_t d = blocks.size();
    MatchedPair<K> p;
    p.up_space = OrthoSpace<K>::up(g, {});
    p.down_space = OrthoSpace<K>::down(g, {});
    p.up_map = NovMat<K>::identity(d, Orient::Up);
    p.down_map = NovMat<K>::identity(d, Orient::Down);
    for (const auto& [a, b] : blocks) {
        p.up_space.values.push_back(a);
        p.down_space.values.push_back(b);
    }
    return p;
}

template <class K>
LMat<K> random_scramble(Rng& rng, const Group& g, std::size_t d)
{
    LMat<K> u = LMat<K>::identity(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (rng.flip()) u.at(i, j) = rng.group_ring_elem<K>(g, 2, 2);
        u.at(j, j) = rng.unit<K>(g, 2);
    }
    return u;
}

template <class K>
void check_doubly_orthogonal(const MatchedPair<K>& p, const DoublyOrthogonalBasis<K>& dob)
{
    std::vector<NovVec<K>> up_images, down_images;
    for (std::size_t j = 0; j < p.rank(); ++j) {
        up_images.push_back(p.up_image(dob.basis.col(j)));
        down_images.push_back(p.down_image(dob.basis.col(j)));
    }
    REQUIRE(is_orthogonal(p.up_space, up_images));
    REQUIRE(is_orthogonal(p.down_space, down_images));
    // the basis must generate the whole module over the group ring:
    // its determinant is a unit
    GroupRing<K> det = GroupRing<K>::one();
    {
        // expansion by elimination over the fraction field, then a unit test
        auto nov = dob.basis.to_nov(Orient::Up);
        Novikov<K> dd = determinant(nov);
        REQUIRE(!dd.is_zero());
        REQUIRE(dd.in_group_ring());
        REQUIRE(dd.as_group_ring().is_monomial());
    }
    (void)det;
}
} // namespace

TEST_CASE("misalignment formula")
{
    LabeledBCM<Rational> l;
    l.m = LMat<Rational>::identity(1);
    l.xi = {Rational(0)};
    l.eta = {Rational(5)};
    REQUIRE(misalignment(l) == Rational(0));

    l.m = LMat<Rational>::identity(2);
    l.xi = {Rational(0), Rational(0)};
    l.eta = {Rational(3), Rational(1)};
    REQUIRE(misalignment(l) == Rational(2));

    l.eta = {Rational(4), Rational(4)};
    REQUIRE(misalignment(l) == Rational(0));
}

TEST_CASE("triconstruct on an identity pair")
{
    auto p = pm_sum<Rational>(T0, {{Rational(0), Rational(3)}, {Rational(1), Rational(1)}});
    auto tri = triconstruct(p);
    REQUIRE(tri.x == LMat<Rational>::identity(2));
    REQUIRE(tri.y == LMat<Rational>::identity(2));
    REQUIRE(tri.lbcm.m == LMat<Rational>::identity(2));
    REQUIRE(tri.lbcm.xi == std::vector<Rational>{Rational(0), Rational(1)});
    REQUIRE(tri.lbcm.eta == std::vector<Rational>{Rational(3), Rational(1)});
}

TEST_CASE("triconstruct postconditions on scrambled pairs")
{
    Rng rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::vector<std::pair<Rational, Rational>> blocks;
        std::size_t d = 2 + rng.below(3);
        for (std::size_t i = 0; i < d; ++i)
            blocks.push_back({rng.rational(-2, 2), rng.rational(-2, 2)});
        auto p = pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, d));

        auto tri = triconstruct(p);
        tri.lbcm.check_unitriangular();
        std::vector<NovVec<Rational>> xs, ys;
        for (std::size_t j = 0; j < d; ++j) {
            xs.push_back(p.up_image(tri.x.col(j)));
            ys.push_back(p.down_image(tri.y.col(j)));
        }
        REQUIRE(is_orthogonal(p.up_space, xs));
        REQUIRE(is_orthogonal(p.down_space, ys));
        // x_j = sum_i M_ij y_i
        REQUIRE(tri.y * tri.lbcm.m == tri.x);
        // labels match the filtration values
        for (std::size_t j = 0; j < d; ++j) {
            REQUIRE(ExtRat(tri.lbcm.xi[j]) == rho(p.up_space, xs[j]));
            REQUIRE(ExtRat(tri.lbcm.eta[j]) == rho(p.down_space, ys[j]));
        }
    }
}

TEST_CASE("reduction of the identity matrix does nothing")
{
    LabeledBCM<Rational> l;
    l.m = LMat<Rational>::identity(3);
    l.xi = {Rational(0), Rational(1), Rational(2)};
    l.eta = {Rational(2), Rational(0), Rational(5)};
    auto red = reduce_lbcm(l, LMat<Rational>::identity(3), LMat<Rational>::identity(3), Z);
    REQUIRE(red.log.empty());
    REQUIRE(red.lbcm.xi == l.xi);
    REQUIRE(red.lbcm.eta == l.eta);
}

TEST_CASE("one off-diagonal constant clears in a single operation")
{
    // trivial group, M = [[1, c], [0, 1]] with labels xi = (0,1), eta = (0,0)
    LabeledBCM<Rational> l;
    l.m = LMat<Rational>::identity(2);
    l.m.at(0, 1) = GroupRing<Rational>(Rational(7));
    l.xi = {Rational(0), Rational(1)};
    l.eta = {Rational(0), Rational(0)};
    auto red = reduce_lbcm(l, l.m, LMat<Rational>::identity(2), T0);
    REQUIRE(red.lbcm.m == LMat<Rational>::identity(2));
    REQUIRE(red.lbcm.xi == l.xi);
    REQUIRE(red.lbcm.eta == l.eta);
    REQUIRE(red.log.size() == 1);
}

TEST_CASE("replaying the log reproduces the reduction")
{
    Rng rng(88);
    for (int trial = 0; trial < 15; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::size_t d = 2 + rng.below(3);
        std::vector<std::pair<Rational, Rational>> blocks;
        for (std::size_t i = 0; i < d; ++i)
            blocks.push_back({rng.rational(-2, 2), rng.rational(-2, 2)});
        auto p = pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, d));
        auto tri = triconstruct(p);
        auto red = reduce_lbcm(tri.lbcm, tri.x, tri.y, g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                REQUIRE(red.lbcm.m.at(i, j) ==
                        (i == j ? GroupRing<Rational>::one() : GroupRing<Rational>::zero()));

        LabeledBCM<Rational> replayed = replay_ops(tri.lbcm, red.log, g);
        REQUIRE(replayed.m == red.lbcm.m);
        REQUIRE(replayed.xi == red.lbcm.xi);
        REQUIRE(replayed.eta == red.lbcm.eta);

        // misalignment is non-increasing across events and drops at compressions
        LabeledBCM<Rational> cur = tri.lbcm;
        Rational mis = misalignment(cur);
        std::size_t pos = 0;
        while (pos < red.log.size()) {
            std::size_t ev = red.log[pos].event;
            bool compresses = false;
            std::vector<LbcmOp<Rational>> chunk;
            while (pos < red.log.size() && red.log[pos].event == ev) {
                compresses = compresses || red.log[pos].compression;
                chunk.push_back(red.log[pos]);
                ++pos;
            }
            cur = replay_ops(cur, chunk, g);
            Rational next = misalignment(cur);
            REQUIRE(next <= mis);
            mis = next;
        }
    }
}

TEST_CASE("planted spectra are recovered exactly")
{
    Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::size_t d = 1 + rng.below(5);
        std::vector<std::pair<Rational, Rational>> blocks;
        Spectrum planted;
        for (std::size_t i = 0; i < d; ++i) {
            Rational a = rng.rational(-2, 2), b = rng.rational(-2, 2);
            blocks.push_back({a, b});
            auto [rep, mult] = g.normalize(a);
            (void)mult;
            planted.push_back(SpectrumEntry{rep, b - a});
        }
        std::sort(planted.begin(), planted.end());
        auto p = pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, d));
        auto dob = doubly_orthogonal_basis(p);
        check_doubly_orthogonal(p, dob);
        REQUIRE(basis_spectrum(p) == planted);
    }
}

TEST_CASE("spectrum and gaps of a simple direct sum")
{
    auto p = pm_sum<Rational>(T0, {{Rational(0), Rational(3)}, {Rational(1), Rational(1)}});
    Spectrum s = basis_spectrum(p);
    REQUIRE(s == Spectrum{SpectrumEntry{Rational(0), Rational(3)},
                          SpectrumEntry{Rational(1), Rational(0)}});
    auto gs = gaps(p);
    REQUIRE(gs == std::vector<Rational>{Rational(3), Rational(0)});
}

TEST_CASE("self-paired module with a non-unit pairing has a negative gap")
{
    // rank-one module over the Laurent ring, descending map multiplied by
    // alpha = T + T^-1
    MatchedPair<Rational> p;
    p.up_space = OrthoSpace<Rational>::up(Z, {Rational(0)});
    p.down_space = OrthoSpace<Rational>::down(Z, {Rational(0)});
    p.up_map = NovMat<Rational>::identity(1, Orient::Up);
    p.down_map = NovMat<Rational>(1, 1, Orient::Down);
    GroupRing<Rational> alpha;
    alpha.set(1, Rational(1));
    alpha.set(-1, Rational(1));
    p.down_map.at(0, 0) = Novikov<Rational>::from_ring(Orient::Down, alpha);

    auto gs = gaps(p);
    REQUIRE(gs.size() == 1);
    REQUIRE(gs[0] == Rational(-1));
    Spectrum s = basis_spectrum(p);
    REQUIRE(s == Spectrum{SpectrumEntry{Rational(0), Rational(-1)}});
}

TEST_CASE("spectrum does not depend on the pivot order")
{
    Rng rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::size_t d = 2 + rng.below(3);
        std::vector<std::pair<Rational, Rational>> blocks;
        for (std::size_t i = 0; i < d; ++i)
            blocks.push_back({rng.rational(-2, 2), rng.rational(-2, 2)});
        auto p = pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, d));
        auto s1 = basis_spectrum(p, PivotOrder::shuffled(d, 17));
        auto s2 = basis_spectrum(p, PivotOrder::shuffled(d, 999331));
        REQUIRE(s1 == s2);
    }
}

TEST_CASE("dual pairs negate and reverse the spectrum")
{
    auto p = pm_sum<Rational>(T0, {{Rational(0), Rational(3)}});
    auto d = dual_pair(p);
    Spectrum s = basis_spectrum(d);
    REQUIRE(s == Spectrum{SpectrumEntry{Rational(3), Rational(-3)}});

    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::size_t dd = 1 + rng.below(3);
        std::vector<std::pair<Rational, Rational>> blocks;
        for (std::size_t i = 0; i < dd; ++i)
            blocks.push_back({rng.rational(-2, 2), rng.rational(-2, 2)});
        auto pair =
            pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, dd));

        // dual spectrum is {([a+l], -l)}
        Spectrum s0 = basis_spectrum(pair);
        Spectrum expect;
        for (const auto& e : s0) {
            auto [rep, mult] = g.normalize(e.a + e.ell);
            (void)mult;
            expect.push_back(SpectrumEntry{rep, -e.ell});
        }
        std::sort(expect.begin(), expect.end());
        REQUIRE(basis_spectrum(dual_pair(pair)) == expect);

        // double dual restores the spectrum
        REQUIRE(basis_spectrum(dual_pair(dual_pair(pair))) == s0);

        // gaps of the dual are the negated, reversed gaps
        auto g0 = gaps(pair), g1 = gaps(dual_pair(pair));
        REQUIRE(g0.size() == g1.size());
        for (std::size_t i = 0; i < g0.size(); ++i)
            REQUIRE(g0[i] == -g1[g1.size() - 1 - i]);
    }
}

TEST_CASE("strong matching decisions")
{
    Spectrum s{{Rational(0), Rational(3)}, {Rational(1), Rational(1)}};
    REQUIRE(check_strong_matching(s, s, Rational(0), T0));

    // uniform shift by epsilon in both endpoint coordinates
    Rational eps(1, 4);
    Spectrum shifted;
    for (const auto& e : s) shifted.push_back(SpectrumEntry{e.a + eps, e.ell});
    REQUIRE(check_strong_matching(s, shifted, eps, T0));
    REQUIRE_FALSE(check_strong_matching(s, shifted, Rational(1, 8), T0));

    Spectrum one{{Rational(0), Rational(3)}};
    Spectrum other{{Rational(0), Rational(0)}};
    REQUIRE_FALSE(check_strong_matching(one, other, Rational(1), T0));
    REQUIRE(check_strong_matching(one, other, Rational(3), T0));

    // with a nontrivial group, matching may use a translation
    Spectrum a{{Rational(0), Rational(2)}};
    Spectrum b{{Rational(9, 10), Rational(2)}};
    REQUIRE(check_strong_matching(a, b, Rational(1, 10), Z));

    // unequal sizes never match
    REQUIRE_FALSE(check_strong_matching(one, s, Rational(100), T0));
}

TEST_CASE("gap and spectrum stability under filtration perturbations")
{
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Group& g = trial % 2 == 0 ? Z : T0;
        std::size_t d = 1 + rng.below(4);
        std::vector<std::pair<Rational, Rational>> blocks;
        for (std::size_t i = 0; i < d; ++i)
            blocks.push_back({rng.rational(-2, 2), rng.rational(-2, 2)});
        auto p = pm_sum<Rational>(g, blocks).with_basis_change(random_scramble<Rational>(rng, g, d));

        Rational t(1, 7);
        MatchedPair<Rational> q = p;
        for (auto& v : q.up_space.values) v += Rational(rng.range(-7, 7), 49);
        for (auto& v : q.down_space.values) v += Rational(rng.range(-7, 7), 49);

        auto g0 = gaps(p), g1 = gaps(q);
        REQUIRE(g0.size() == g1.size());
        for (std::size_t i = 0; i < g0.size(); ++i) {
            Rational diff = g0[i] - g1[i];
            if (diff < 0) diff = -diff;
            REQUIRE(diff <= 2 * t);
        }
        REQUIRE(check_strong_matching(basis_spectrum(p), basis_spectrum(q), t, g));
    }
}

TEST_CASE("degenerate pairs are rejected")
{
    MatchedPair<Rational> p;
    p.up_space = OrthoSpace<Rational>::up(T0, {Rational(0), Rational(0)});
    p.down_space = OrthoSpace<Rational>::down(T0, {Rational(0), Rational(0)});
    p.up_map = NovMat<Rational>(2, 2, Orient::Up);
    p.up_map.at(0, 0) = Novikov<Rational>::one(Orient::Up);
    p.up_map.at(0, 1) = Novikov<Rational>::one(Orient::Up); // rank 1
    p.down_map = NovMat<Rational>::identity(2, Orient::Down);
    REQUIRE_THROWS_AS(triconstruct(p), std::invalid_argument);
}
