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

#include <novpers/fixtures.hpp>
#include <novpers/pl.hpp>

using namespace novpers;
using namespace novpers::fixtures;

namespace {
const Group T0 = Group::trivial();
}

TEST_CASE("validation catches winding cocycle failures")
{
    // full triangle with windings (0, 0, 1): inconsistent
    SimplicialComplex full;
    full.add_closed({0, 1, 2});
    PLFunction f;
    f.group = Group::cyclic(1);
    f.theta[0] = 0;
    f.theta[1] = Rational(1, 3);
    f.theta[2] = Rational(2, 3);
    f.winding[{0, 1}] = 0;
    f.winding[{1, 2}] = 0;
    f.winding[{0, 2}] = 1;
    auto diag = validate_pl(full, f);
    REQUIRE_FALSE(diag.valid);

    // same data on the hollow triangle: no condition to check
    SimplicialComplex hollow;
    hollow.add_closed({0, 1});
    hollow.add_closed({1, 2});
    hollow.add_closed({0, 2});
    REQUIRE(validate_pl(hollow, f).valid);

    // real-valued input is valid iff face closed
    auto in = circle_height();
    REQUIRE(validate_pl(in.complex, in.func).valid);
    REQUIRE(validate_pl(in.complex, in.func).vertex_levels ==
            std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
}

TEST_CASE("chain-level pair of a single edge")
{
    auto in = interval();
    auto cp = chain_level_fmp<Rational>(in.complex, in.func);
    REQUIRE(cp.dim(0) == 2);
    REQUIRE(cp.dim(1) == 1);
    REQUIRE(cp.up().space(1).values == std::vector<Rational>{Rational(1)});
    REQUIRE(cp.down().space(1).values == std::vector<Rational>{Rational(0)});
    REQUIRE(cp.strict());
    auto fb = full_barcode(cp);
    // contractible: one essential class [0, 1] in degree 0
    auto bars = fb.bars.bars();
    REQUIRE(bars.size() == 1);
    REQUIRE(bars[0] == Bar{0, BarKind::Closed, Rational(0), Rational(1)});
}

TEST_CASE("chain-level pair of the circle-valued identity")
{
    auto in = circle_identity();
    REQUIRE(validate_pl(in.complex, in.func).valid);
    auto cp = chain_level_fmp<Rational>(in.complex, in.func);
    cp.validate();

    // one entry of the degree-1 differential carries the deck translation
    LMat<Rational> d = cp.diff(1);
    int with_shift = 0;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (d.at(i, j).is_zero()) continue;
            if (d.at(i, j).min_mult() != 0) ++with_shift;
        }
    REQUIRE(with_shift == 1);

    // homology of the cover is all torsion: the line has one component
    auto an = ChainAnalysis<Rational>(cp);
    REQUIRE(an.torsion_at(0) == 1);
    REQUIRE(an.spectrum(0).empty());
    REQUIRE(an.spectrum(1).empty());
    REQUIRE(full_barcode(an).bars.empty());
}

TEST_CASE("level cuts preserve homology")
{
    auto in = octahedron();
    auto [cut, f] = cut_at_level(in.complex, in.func, Rational(1, 2));
    REQUIRE(cut.face_closed());
    auto before = simplicial_homology_dims<Rational>(in.complex, 2);
    auto after = simplicial_homology_dims<Rational>(cut, 2);
    REQUIRE(before == after);
    REQUIRE(before == std::vector<long long>{1, 0, 1});

    // a cut at a level nobody crosses changes nothing
    auto [cut2, f2] = cut_at_level(in.complex, in.func, Rational(7));
    REQUIRE(cut2.simplices() == in.complex.simplices());

    // iterated cuts at several levels keep the homology
    auto [cut3, f3] = cut_at_level(cut, f, Rational(3, 2));
    REQUIRE(simplicial_homology_dims<Rational>(cut3, 2) == before);
    // the spec example: a single edge cut in half
    auto edge = interval();
    auto [ecut, ef] = cut_at_level(edge.complex, edge.func, Rational(1, 2));
    REQUIRE(ecut.simplices_of_dim(1).size() == 2);
    REQUIRE(ecut.simplices_of_dim(0).size() == 3);
}

TEST_CASE("interlevel homology of the height circle")
{
    auto in = circle_height();
    // middle window: two arcs
    auto dims = interlevel_homology<Rational>(in.complex, in.func, Rational(1, 4), Rational(3, 4), 1);
    REQUIRE(dims == std::vector<long long>{2, 0});
    // full window: the whole circle
    dims = interlevel_homology<Rational>(in.complex, in.func, Rational(-1, 2), Rational(3, 2), 1);
    REQUIRE(dims == std::vector<long long>{1, 1});
    REQUIRE_THROWS_AS(
        interlevel_homology<Rational>(in.complex, in.func, Rational(0), Rational(2), 1),
        std::invalid_argument);
}

TEST_CASE("interlevel homology of the circle-valued identity")
{
    auto in = circle_identity();
    // any window of length below one period is an interval of the line
    auto dims = interlevel_homology<Rational>(in.complex, in.func, Rational(1, 10),
                                              Rational(9, 10), 1);
    REQUIRE(dims == std::vector<long long>{1, 0});
    dims = interlevel_homology<Rational>(in.complex, in.func, Rational(-5, 2), Rational(5, 2), 1);
    REQUIRE(dims == std::vector<long long>{1, 0});
    // periodic windows give the same answer
    auto shifted = interlevel_homology<Rational>(in.complex, in.func, Rational(1, 10) + 3,
                                                 Rational(9, 10) + 3, 1);
    REQUIRE(shifted == std::vector<long long>{1, 0});
}

TEST_CASE("extended persistence of tiny spaces")
{
    // a single point
    SimplicialComplex pt;
    pt.add_closed({0});
    PLFunction f;
    f.group = T0;
    f.theta[0] = 0;
    auto ep = extended_persistence<Rational>(pt, f);
    REQUIRE(ep.ordinary.empty());
    REQUIRE(ep.relative.empty());
    REQUIRE(ep.extended == std::vector<PersistencePoint>{{0, Rational(0), Rational(0)}});

    // two points at values 0 and 1
    SimplicialComplex two;
    two.add_closed({0});
    two.add_closed({1});
    PLFunction f2;
    f2.group = T0;
    f2.theta[0] = 0;
    f2.theta[1] = 1;
    auto ep2 = extended_persistence<Rational>(two, f2);
    REQUIRE(ep2.ordinary.empty());
    REQUIRE(ep2.relative.empty());
    REQUIRE(ep2.extended == std::vector<PersistencePoint>{{0, Rational(0), Rational(0)},
                                                          {0, Rational(1), Rational(1)}});
}

TEST_CASE("extended persistence of the height circle")
{
    auto in = circle_height();
    auto ep = extended_persistence<Rational>(in.complex, in.func);
    REQUIRE(ep.extended == std::vector<PersistencePoint>{{0, Rational(0), Rational(1)},
                                                         {1, Rational(1), Rational(0)}});
    for (const auto& p : ep.ordinary) REQUIRE(p.birth == p.death);
    for (const auto& p : ep.relative) REQUIRE(p.birth == p.death);
}

TEST_CASE("extended persistence of a wiggly path")
{
    // path with values 0, 3, 1, 4, 2: one ordinary and one relative pair
    SimplicialComplex path;
    for (int i = 0; i < 4; ++i) path.add_closed({i, i + 1});
    PLFunction f;
    f.group = T0;
    f.theta[0] = 0;
    f.theta[1] = 3;
    f.theta[2] = 1;
    f.theta[3] = 4;
    f.theta[4] = 2;
    auto ep = extended_persistence<Rational>(path, f);
    std::vector<PersistencePoint> ord;
    for (const auto& p : ep.ordinary)
        if (p.birth != p.death) ord.push_back(p);
    REQUIRE(ord == std::vector<PersistencePoint>{{0, Rational(1), Rational(3)},
                                                 {0, Rational(2), Rational(4)}});
    // one relative class: the superlevel set has two components for s in (1,3]
    std::vector<PersistencePoint> rel;
    for (const auto& p : ep.relative)
        if (p.birth != p.death) rel.push_back(p);
    REQUIRE(rel == std::vector<PersistencePoint>{{0, Rational(1), Rational(3)}});
    REQUIRE(ep.extended == std::vector<PersistencePoint>{{0, Rational(0), Rational(4)}});
}

TEST_CASE("fixture surfaces have the expected homology")
{
    auto sph = octahedron();
    REQUIRE(simplicial_homology_dims<Rational>(sph.complex, 2) ==
            std::vector<long long>{1, 0, 1});

    auto tor = torus_circle();
    REQUIRE(validate_pl(tor.complex, tor.func).valid);
    REQUIRE(simplicial_homology_dims<Rational>(tor.complex, 2) ==
            std::vector<long long>{1, 2, 1});

    auto kl = klein_circle();
    REQUIRE(validate_pl(kl.complex, kl.func).valid);
    REQUIRE(simplicial_homology_dims<Fp<2>>(kl.complex, 2) ==
            std::vector<long long>{1, 2, 1});
    // over the rationals the top class disappears
    REQUIRE(simplicial_homology_dims<Rational>(kl.complex, 2) ==
            std::vector<long long>{1, 1, 0});

    auto g2a = genus2_staggered();
    REQUIRE(g2a.complex.face_closed());
    REQUIRE(simplicial_homology_dims<Rational>(g2a.complex, 2) ==
            std::vector<long long>{1, 4, 1});
    auto g2b = genus2_nested();
    REQUIRE(simplicial_homology_dims<Rational>(g2b.complex, 2) ==
            std::vector<long long>{1, 4, 1});
}

TEST_CASE("spectra of the height circle match the minimax values")
{
    auto in = circle_height();
    auto cp = chain_level_fmp<Rational>(in.complex, in.func);
    ChainAnalysis<Rational> an(cp);
    REQUIRE(an.spectrum(0) == Spectrum{SpectrumEntry{Rational(0), Rational(1)}});
    REQUIRE(an.spectrum(1) == Spectrum{SpectrumEntry{Rational(1), Rational(-1)}});
    auto fb = full_barcode(an);
    auto bars = fb.bars.bars();
    REQUIRE(bars.size() == 2);
    REQUIRE(bars[0] == Bar{0, BarKind::Closed, Rational(0), Rational(1)});
    REQUIRE(bars[1] == Bar{0, BarKind::Open, Rational(0), Rational(1)});
}

TEST_CASE("interlevel dimensions equal the block evaluation on the height circle")
{
    auto in = circle_height();
    auto cp = chain_level_fmp<Rational>(in.complex, in.func);
    auto blocks = block_decomposition(cp);
    for (int si = -3; si <= 6; ++si)
        for (int ti = -3; ti <= 6; ++ti) {
            Rational s(2 * si - 1, 4), t(2 * ti - 1, 4);
            if (s + t < 0) continue;
            auto dims = interlevel_homology<Rational>(in.complex, in.func, -s, t, 2);
            for (int k = 0; k <= 2; ++k)
                REQUIRE(hk_dim(blocks, T0, k, s, t) == dims[static_cast<std::size_t>(k)]);
        }
}

TEST_CASE("extended persistence matches the homology spectra on fixtures")
{
    auto check = [](const PLInput& in, std::uint64_t seed) {
        PLFunction f = seed == 0 ? in.func : randomize_values(in.complex, seed);
        auto cp = chain_level_fmp<Rational>(in.complex, f);
        ChainAnalysis<Rational> an(cp);
        auto ep = extended_persistence<Rational>(in.complex, f);

        // extended points against the per-degree spectra
        std::map<int, Spectrum> by_degree;
        for (const auto& p : ep.extended)
            by_degree[p.degree].push_back(SpectrumEntry{p.birth, p.death - p.birth});
        for (auto& [k, s] : by_degree) std::sort(s.begin(), s.end());
        for (int k = 0; k <= in.complex.max_dim(); ++k) {
            Spectrum want = an.spectrum(k);
            Spectrum got = by_degree.count(k) ? by_degree[k] : Spectrum{};
            REQUIRE(got == want);
        }

        // ordinary pairs match the finite ascending bars, relative pairs the
        // finite descending bars
        auto up_bars = an.up_svd().concise_barcode();
        std::vector<PersistencePoint> up_points, ord;
        for (const auto& b : up_bars.bars())
            if (b.kind == BarKind::HalfUp) up_points.push_back({b.degree, b.a, b.b});
        for (const auto& p : ep.ordinary)
            if (p.birth != p.death) ord.push_back(p);
        std::sort(up_points.begin(), up_points.end());
        REQUIRE(ord == up_points);

        auto down_bars = an.down_svd().concise_barcode();
        std::vector<PersistencePoint> down_points, rel;
        for (const auto& b : down_bars.bars())
            if (b.kind == BarKind::HalfDown) down_points.push_back({b.degree, b.a, b.b});
        for (const auto& p : ep.relative)
            if (p.birth != p.death) rel.push_back(p);
        std::sort(down_points.begin(), down_points.end());
        REQUIRE(rel == down_points);
    };

    check(circle_height(), 0);
    check(octahedron(), 0);
    check(circle({Rational(0), Rational(2), Rational(1), Rational(3), Rational(1, 2),
                  Rational(5, 2)}),
          0);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        check(circle_height(), seed);
        check(octahedron(), seed);
    }
}
