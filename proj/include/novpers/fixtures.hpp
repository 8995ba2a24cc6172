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

#ifndef NOVPERS_FIXTURES_HPP
#define NOVPERS_FIXTURES_HPP

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "pl.hpp"
#include "rng.hpp"

namespace novpers {
namespace fixtures {

struct PLInput {
    SimplicialComplex complex;
    PLFunction func;
};

/// A single edge with values 0 and 1.
inline PLInput interval()
{
    PLInput in;
    in.complex.add_closed({0, 1});
    in.func.group = Group::trivial();
    in.func.theta[0] = 0;
    in.func.theta[1] = 1;
    return in;
}

/// A polygonal circle with the given vertex values.
inline PLInput circle(const std::vector<Rational>& values)
{
    if (values.size() < 3) throw std::invalid_argument("need at least three vertices");
    PLInput in;
    int n = static_cast<int>(values.size());
    for (int i = 0; i < n; ++i) {
        in.complex.add_closed({i, (i + 1) % n});
        in.func.theta[i] = values[static_cast<std::size_t>(i)];
    }
    in.func.group = Group::trivial();
    return in;
}

/// The standard height circle: one minimum at 0 and one maximum at 1.
inline PLInput circle_height()
{
    return circle({Rational(0), Rational(1, 2), Rational(1), Rational(1, 2)});
}

namespace detail_fix {

/// Adds a winding label computed from explicit lift values at the two ends.
inline void set_winding(PLFunction& f, int u, int v, const Rational& lift_u,
                        const Rational& lift_v)
{
    Rational diff = (lift_v - lift_u) - (f.value(v) - f.value(u));
    Rational n = diff / f.group.lambda0;
    Integer ni = rational_floor(n);
    if (Rational(ni) != n) throw std::logic_error("winding is not integral");
    int a = u, b = v;
    long long nn = ni.convert_to<long long>();
    if (a > b) {
        std::swap(a, b);
        nn = -nn;
    }
    auto it = f.winding.find({a, b});
    if (it != f.winding.end()) {
        if (it->second != nn) throw std::logic_error("inconsistent winding labels");
    } else {
        f.winding[{a, b}] = nn;
    }
}

} // namespace detail_fix

/// Degree-one circle-valued function on a triangulated circle: three
/// vertices at values 0, 1/3, 2/3, with the closing edge winding once.
inline PLInput circle_identity()
{
    PLInput in;
    in.func.group = Group::cyclic(1);
    in.func.theta[0] = 0;
    in.func.theta[1] = Rational(1, 3);
    in.func.theta[2] = Rational(2, 3);
    in.complex.add_closed({0, 1});
    in.complex.add_closed({1, 2});
    in.complex.add_closed({0, 2});
    detail_fix::set_winding(in.func, 0, 1, Rational(0), Rational(1, 3));
    detail_fix::set_winding(in.func, 1, 2, Rational(1, 3), Rational(2, 3));
    // the closing edge climbs from 2/3 up to 1, anchored at the lift of 0
    detail_fix::set_winding(in.func, 2, 0, Rational(2, 3), Rational(1));
    return in;
}

/// The octahedron sphere with height values (poles at 0 and 2).
inline PLInput octahedron()
{
    PLInput in;
    // 0 = bottom pole, 1..4 = equator, 5 = top pole
    in.func.group = Group::trivial();
    in.func.theta[0] = 0;
    for (int i = 1; i <= 4; ++i) in.func.theta[i] = 1;
    in.func.theta[5] = 2;
    const std::array<std::pair<int, int>, 4> eq{{{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
    for (auto [a, b] : eq) {
        in.complex.add_closed({0, a, b});
        in.complex.add_closed({5, a, b});
    }
    return in;
}

/// Circle-valued projection of the 3x3 grid torus; lambda0 = 1, vertex value
/// i/3 in the swept direction.
inline PLInput torus_circle()
{
    PLInput in;
    in.func.group = Group::cyclic(1);
    auto id = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) in.func.theta[id(i, j)] = Rational(i, 3);
    auto lift = [](int i) { return Rational(i, 3); }; // unwrapped sweep coordinate
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // square with corners (i,j),(i+1,j),(i,j+1),(i+1,j+1)
            int p00 = id(i, j), p10 = id(i + 1, j), p01 = id(i, j + 1), p11 = id(i + 1, j + 1);
            in.complex.add_closed({p00, p10, p11});
            in.complex.add_closed({p00, p01, p11});
            detail_fix::set_winding(in.func, p00, p10, lift(i), lift(i + 1));
            detail_fix::set_winding(in.func, p00, p01, lift(i), lift(i));
            detail_fix::set_winding(in.func, p00, p11, lift(i), lift(i + 1));
            detail_fix::set_winding(in.func, p10, p11, lift(i + 1), lift(i + 1));
            detail_fix::set_winding(in.func, p01, p11, lift(i), lift(i + 1));
        }
    return in;
}

/// Circle-valued projection of a 3x3 grid Klein bottle, swept along the base
/// circle (the gluing reverses the fiber).  Intended for characteristic two.
inline PLInput klein_circle()
{
    PLInput in;
    in.func.group = Group::cyclic(1);
    auto id = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + j; };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) in.func.theta[id(i, j)] = Rational(j, 3);
    auto lift = [](int j) { return Rational(j, 3); };
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) {
            int p00 = id(i, j), p10 = id(i + 1, j), p01 = id(i, j + 1), p11 = id(i + 1, j + 1);
            in.complex.add_closed({p00, p10, p11});
            in.complex.add_closed({p00, p01, p11});
            detail_fix::set_winding(in.func, p00, p10, lift(j), lift(j));
            detail_fix::set_winding(in.func, p00, p01, lift(j), lift(j + 1));
            detail_fix::set_winding(in.func, p00, p11, lift(j), lift(j + 1));
            detail_fix::set_winding(in.func, p10, p11, lift(j), lift(j + 1));
            detail_fix::set_winding(in.func, p01, p11, lift(j + 1), lift(j + 1));
        }
    // the gluing row: (i, 2) -- (-i, 0) with the fiber reversed
    for (int i = 0; i < 3; ++i) {
        int p00 = id(i, 2), p10 = id(i + 1, 2);
        int q0 = id(3 - i, 0), q1 = id(2 - i, 0); // image of i, i+1 upstairs
        in.complex.add_closed({p00, p10, q1});
        in.complex.add_closed({p00, q0, q1});
        detail_fix::set_winding(in.func, p00, p10, lift(2), lift(2));
        detail_fix::set_winding(in.func, p00, q0, lift(2), lift(3));
        detail_fix::set_winding(in.func, p00, q1, lift(2), lift(3));
        detail_fix::set_winding(in.func, p10, q1, lift(2), lift(3));
        detail_fix::set_winding(in.func, q0, q1, lift(3), lift(3));
    }
    return in;
}

// ---------------------------------------------------------------------------
// genus-two surfaces as boundaries of cube complexes

namespace detail_fix {

using Coord = std::array<int, 3>;

inline PLInput cube_boundary_surface(const std::set<Coord>& cubes)
{
    // boundary quads: faces of solid cubes counted once
    std::map<std::vector<Coord>, int> faces;
    for (const auto& c : cubes) {
        auto [x, y, z] = std::tuple{c[0], c[1], c[2]};
        std::vector<std::vector<Coord>> fs{
            {{x, y, z}, {x, y + 1, z}, {x, y, z + 1}, {x, y + 1, z + 1}},         // x = const
            {{x + 1, y, z}, {x + 1, y + 1, z}, {x + 1, y, z + 1}, {x + 1, y + 1, z + 1}},
            {{x, y, z}, {x + 1, y, z}, {x, y, z + 1}, {x + 1, y, z + 1}},         // y = const
            {{x, y + 1, z}, {x + 1, y + 1, z}, {x, y + 1, z + 1}, {x + 1, y + 1, z + 1}},
            {{x, y, z}, {x + 1, y, z}, {x, y + 1, z}, {x + 1, y + 1, z}},         // z = const
            {{x, y, z + 1}, {x + 1, y, z + 1}, {x, y + 1, z + 1}, {x + 1, y + 1, z + 1}},
        };
        for (auto& f : fs) {
            std::sort(f.begin(), f.end());
            ++faces[f];
        }
    }
    PLInput in;
    in.func.group = Group::trivial();
    std::map<Coord, int> ids;
    auto vid = [&](const Coord& p) {
        auto it = ids.find(p);
        if (it != ids.end()) return it->second;
        int v = static_cast<int>(ids.size());
        ids[p] = v;
        in.func.theta[v] = Rational(p[2]);
        return v;
    };
    for (const auto& [corners, count] : faces) {
        if (count != 1) continue;
        // corners are sorted; the quad is corners[0], corners[1], corners[3],
        // corners[2] in cyclic order, cut along the diagonal from corners[0]
        int a = vid(corners[0]), b = vid(corners[1]), c = vid(corners[2]), d = vid(corners[3]);
        in.complex.add_closed({a, b, d});
        in.complex.add_closed({a, c, d});
    }
    return in;
}

} // namespace detail_fix

/// Height function on a genus-two surface whose handle levels are the two
/// disjoint spans [1,2] and [3,4] (critical values 0,1,2,3,4,6).
inline PLInput genus2_staggered()
{
    std::set<detail_fix::Coord> cubes;
    for (int x = 0; x < 5; ++x)
        for (int z = 0; z < 6; ++z) cubes.insert({x, 0, z});
    cubes.erase({1, 0, 1}); // handle one: z in [1,2]
    cubes.erase({3, 0, 3}); // handle two: z in [3,4]
    return detail_fix::cube_boundary_surface(cubes);
}

/// Same critical values, but nested handle spans [1,4] and [2,3].
inline PLInput genus2_nested()
{
    std::set<detail_fix::Coord> cubes;
    for (int x = 0; x < 5; ++x)
        for (int z = 0; z < 6; ++z) cubes.insert({x, 0, z});
    cubes.erase({1, 0, 1});
    cubes.erase({1, 0, 2});
    cubes.erase({1, 0, 3}); // handle one: z in [1,4]
    cubes.erase({3, 0, 2}); // handle two: z in [2,3]
    return detail_fix::cube_boundary_surface(cubes);
}

/// Replaces the function values by seeded random rationals (used to sample
/// many PL functions on a fixed complex).  Values land in (-3, 3) on a fine
/// grid, so ties are rare but possible; the sweep order breaks them.
inline PLFunction randomize_values(const SimplicialComplex& x, std::uint64_t seed)
{
    PLFunction f;
    f.group = Group::trivial();
    Rng rng(seed);
    for (int v : x.vertex_ids()) f.theta[v] = Rational(rng.range(-36, 36), 12);
    return f;
}

} // namespace fixtures
} // namespace novpers

#endif
