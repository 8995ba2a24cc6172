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

#ifndef NOVPERS_PL_HPP
#define NOVPERS_PL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chain_level.hpp"

namespace novpers {

using Simplex = std::vector<int>; // sorted vertex ids

/// A finite abstract simplicial complex, closed under faces.
class SimplicialComplex {
public:
    void add_simplex(Simplex s)
    {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("simplex has a repeated vertex");
        if (s.empty()) throw std::invalid_argument("empty simplex");
        simplices_.insert(std::move(s));
    }

    /// Adds a simplex together with all of its faces.
    void add_closed(Simplex s)
    {
        std::sort(s.begin(), s.end());
        std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(s[i]);
            add_simplex(std::move(face));
        }
    }

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    const std::set<Simplex>& simplices() const { return simplices_; }

    std::vector<Simplex> simplices_of_dim(int k) const
    {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
        return out;
    }

    int max_dim() const
    {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

    std::vector<int> vertex_ids() const
    {
        std::set<int> ids;
        for (const auto& s : simplices_) ids.insert(s.begin(), s.end());
        return {ids.begin(), ids.end()};
    }

    bool face_closed() const
    {
        for (const auto& s : simplices_) {
            if (s.size() == 1) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                if (!contains(face)) return false;
            }
        }
        return true;
    }

private:
    std::set<Simplex> simplices_;
};

/// A piecewise linear function: rational vertex values, plus integer winding
/// labels on oriented edges for circle-valued inputs (rank-1 group).  The
/// lifted difference along an edge (u,v) is theta_v - theta_u + lambda0*n_uv.
struct PLFunction {
    Group group;
    std::map<int, Rational> theta;
    std::map<std::pair<int, int>, long long> winding; // keyed by u < v

    Rational value(int v) const
    {
        auto it = theta.find(v);
        if (it == theta.end()) throw std::invalid_argument("vertex has no value");
        return it->second;
    }

    long long winding_of(int u, int v) const
    {
        if (group.rank == 0) return 0;
        if (u < v) {
            auto it = winding.find({u, v});
            return it == winding.end() ? 0 : it->second;
        }
        auto it = winding.find({v, u});
        return it == winding.end() ? 0 : -it->second;
    }
};

struct PLDiagnostics {
    bool valid = true;
    std::vector<std::string> errors;
    std::vector<Rational> vertex_levels; // sorted distinct values (lift levels mod group)

    void fail(std::string msg)
    {
        valid = false;
        errors.push_back(std::move(msg));
    }
};

/// Face closure, winding cocycle, and the list of critical vertex levels.
inline PLDiagnostics validate_pl(const SimplicialComplex& x, const PLFunction& f)
{
    PLDiagnostics diag;
    if (!x.face_closed()) diag.fail("complex is not closed under faces");
    for (int v : x.vertex_ids())
        if (f.theta.find(v) == f.theta.end())
            diag.fail("vertex " + std::to_string(v) + " has no value");
    if (!diag.valid) return diag;

    if (f.group.rank == 1) {
        for (const auto& s : x.simplices_of_dim(2)) {
            long long closure = f.winding_of(s[0], s[1]) + f.winding_of(s[1], s[2]);
            if (closure != f.winding_of(s[0], s[2]))
                diag.fail("winding labels fail the cocycle condition on a 2-simplex");
        }
    }

    std::set<Rational> levels;
    for (int v : x.vertex_ids()) {
        Rational val = f.value(v);
        if (f.group.rank == 1) val = f.group.normalize(val).first;
        levels.insert(val);
    }
    diag.vertex_levels.assign(levels.begin(), levels.end());
    return diag;
}

namespace detail {

/// Lift values of the preferred lift of a simplex: the least-index vertex is
/// anchored at its representative value in [0, lambda0).
inline std::vector<Rational> preferred_lift(const Simplex& s, const PLFunction& f)
{
    std::vector<Rational> vals(s.size());
    if (f.group.rank == 0) {
        for (std::size_t i = 0; i < s.size(); ++i) vals[i] = f.value(s[i]);
        return vals;
    }
    Rational anchor = f.group.normalize(f.value(s[0])).first;
    vals[0] = anchor;
    for (std::size_t i = 1; i < s.size(); ++i)
        vals[i] = anchor + (f.value(s[i]) - f.value(s[0])) +
                  f.group.lambda0 * f.winding_of(s[0], s[i]);
    return vals;
}

} // namespace detail

/// The chain-level pair of a PL function: simplicial chains with the max/min
/// filtrations, over the group ring of the cover for circle-valued inputs.
template <class K>
ChainLevelFMP<K> chain_level_fmp(const SimplicialComplex& x, const PLFunction& f)
{
    PLDiagnostics diag = validate_pl(x, f);
    if (!diag.valid) throw std::invalid_argument("invalid input: " + diag.errors.front());

    ChainLevelFMP<K> cp(f.group);
    int top = x.max_dim();
    std::map<int, std::vector<Simplex>> by_dim;
    std::map<int, std::map<Simplex, std::size_t>> index;
    for (int k = 0; k <= top; ++k) {
        by_dim[k] = x.simplices_of_dim(k);
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = i;
    }

    std::map<int, std::vector<std::vector<Rational>>> lifts;
    for (int k = 0; k <= top; ++k) {
        std::vector<Rational> up_vals, down_vals;
        for (const auto& s : by_dim[k]) {
            auto lv = detail::preferred_lift(s, f);
            lifts[k].push_back(lv);
            up_vals.push_back(*std::max_element(lv.begin(), lv.end()));
            down_vals.push_back(*std::min_element(lv.begin(), lv.end()));
        }
        cp.set_dim(k, by_dim[k].size());
        cp.up().set_space(k, up_vals);
        cp.down().set_space(k, down_vals);
    }

    for (int k = 1; k <= top; ++k) {
        std::size_t rows = by_dim[k - 1].size(), cols = by_dim[k].size();
        LMat<K> d(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            const Simplex& s = by_dim[k][j];
            const auto& lift = lifts[k][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                std::size_t row = index[k - 1].at(face);
                long long shift = 0;
                if (f.group.rank == 1) {
                    // height of the face's least vertex inside this lift
                    std::size_t anchor_pos = i == 0 ? 1 : 0;
                    Rational h = lift[anchor_pos];
                    Rational pref = f.group.normalize(f.value(face[0])).first;
                    Rational diff = (pref - h) / f.group.lambda0;
                    shift = rational_floor(diff).convert_to<long long>();
                    if (Rational(shift) != diff)
                        throw std::logic_error("lift shift is not a group element");
                }
                K sign = field_traits<K>::from_int(i % 2 == 0 ? 1 : -1);
                d.at(row, j) += GroupRing<K>::monomial(sign, shift);
            }
        }
        cp.set_diff(k, d);
        cp.up().set_diff(k, d.to_nov(Orient::Up));
        cp.down().set_diff(k, d.to_nov(Orient::Down));
    }

    for (int k = 0; k <= top; ++k) {
        std::size_t n = by_dim[k].size();
        if (n == 0) continue;
        cp.set_up_map(k, NovMat<K>::identity(n, Orient::Up));
        cp.set_down_map(k, NovMat<K>::identity(n, Orient::Down));
    }
    return cp;
}

/// Subdivides every simplex crossing the level c, adding one new vertex per
/// crossing edge; the result is PL-homeomorphic and has no simplex with
/// values strictly on both sides of c.  Real-valued inputs only.
inline std::pair<SimplicialComplex, PLFunction> cut_at_level(const SimplicialComplex& x,
                                                             const PLFunction& f,
                                                             const Rational& c)
{
    if (f.group.rank != 0)
        throw std::invalid_argument("level cuts apply to real-valued functions");
    SimplicialComplex cur = x;
    PLFunction fc = f;
    int next_id = 0;
    for (int v : x.vertex_ids()) next_id = std::max(next_id, v + 1);

    while (true) {
        std::optional<std::pair<int, int>> crossing;
        for (const auto& s : cur.simplices_of_dim(1)) {
            Rational a = fc.value(s[0]), b = fc.value(s[1]);
            if ((a < c && c < b) || (b < c && c < a)) {
                crossing = {s[0], s[1]};
                break;
            }
        }
        if (!crossing) break;
        auto [u, v] = *crossing;
        int w = next_id++;
        fc.theta[w] = c;
        SimplicialComplex next;
        for (const auto& s : cur.simplices()) {
            bool has_u = std::binary_search(s.begin(), s.end(), u);
            bool has_v = std::binary_search(s.begin(), s.end(), v);
            if (has_u && has_v) {
                Simplex a = s, b = s;
                a.erase(std::find(a.begin(), a.end(), v));
                a.push_back(w);
                b.erase(std::find(b.begin(), b.end(), u));
                b.push_back(w);
                next.add_simplex(std::move(a));
                next.add_simplex(std::move(b));
                Simplex mid = s; // the shared face through the new vertex
                mid.erase(std::find(mid.begin(), mid.end(), u));
                mid.erase(std::find(mid.begin(), mid.end(), v));
                mid.push_back(w);
                next.add_simplex(std::move(mid));
            } else {
                next.add_simplex(s);
            }
        }
        cur = std::move(next);
    }
    return {cur, fc};
}

/// Homology dimensions of a simplicial complex over the field K, reported
/// for degrees 0..max_deg (inclusive).
template <class K>
std::vector<long long> simplicial_homology_dims(const SimplicialComplex& x, int max_deg)
{
    std::vector<long long> dims(static_cast<std::size_t>(max_deg) + 1, 0);
    if (x.empty()) return dims;
    int top = x.max_dim();
    std::map<int, std::vector<Simplex>> by_dim;
    std::map<int, std::map<Simplex, std::size_t>> index;
    for (int k = 0; k <= top; ++k) {
        by_dim[k] = x.simplices_of_dim(k);
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = i;
    }
    std::map<int, std::size_t> ranks;
    for (int k = 1; k <= top; ++k) {
        NovMat<K> d(by_dim[k - 1].size(), by_dim[k].size(), Orient::Up);
        for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
            const Simplex& s = by_dim[k][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                d.at(index[k - 1].at(face), j) =
                    Novikov<K>::scalar(Orient::Up, field_traits<K>::from_int(i % 2 == 0 ? 1 : -1));
            }
        }
        ranks[k] = LinSolver<K>(std::move(d)).rank();
    }
    for (int k = 0; k <= std::min(top, max_deg); ++k) {
        long long n = static_cast<long long>(by_dim[k].size());
        long long rk = k >= 1 ? static_cast<long long>(ranks[k]) : 0;
        long long rk1 = k + 1 <= top ? static_cast<long long>(ranks[k + 1]) : 0;
        dims[static_cast<std::size_t>(k)] = n - rk - rk1;
    }
    return dims;
}

/// Materializes the part of the infinite cyclic cover whose simplices meet
/// the window [a, b]; the result is a real-valued complex.  For rank-0
/// groups this is the identity.
inline std::pair<SimplicialComplex, PLFunction> materialize_cover(const SimplicialComplex& x,
                                                                  const PLFunction& f,
                                                                  const Rational& a,
                                                                  const Rational& b)
{
    if (f.group.rank == 0) return {x, f};
    // map (vertex, height) -> new id
    std::map<std::pair<int, Rational>, int> ids;
    SimplicialComplex out;
    PLFunction fr;
    fr.group = Group::trivial();
    int next = 0;
    auto vertex_at = [&](int v, const Rational& h) {
        auto it = ids.find({v, h});
        if (it != ids.end()) return it->second;
        ids[{v, h}] = next;
        fr.theta[next] = h;
        return next++;
    };

    for (const auto& s : x.simplices()) {
        auto lift = detail::preferred_lift(s, f);
        Rational lo = *std::min_element(lift.begin(), lift.end());
        Rational hi = *std::max_element(lift.begin(), lift.end());
        // translate by -m*lambda0: want [lo - m l0, hi - m l0] to meet [a, b]
        Integer m_lo = rational_ceil((lo - b) / f.group.lambda0);
        Integer m_hi = rational_floor((hi - a) / f.group.lambda0);
        for (Integer m = m_lo; m <= m_hi; ++m) {
            Simplex copy;
            Rational shift = f.group.lambda0 * Rational(m);
            for (std::size_t i = 0; i < s.size(); ++i)
                copy.push_back(vertex_at(s[i], lift[i] - shift));
            out.add_simplex(std::move(copy));
        }
    }
    // close under faces (faces of window-meeting lifts may hang outside)
    SimplicialComplex closed;
    for (const auto& s : out.simplices()) closed.add_closed(s);
    return {closed, fr};
}

/// Homology dimensions of the preimage of [a, b] (of the lift's preimage in
/// the circle-valued case), computed by cutting at both endpoints and taking
/// the full subcomplex between them.  Endpoints must be regular.
template <class K>
std::vector<long long> interlevel_homology(const SimplicialComplex& x, const PLFunction& f,
                                           const Rational& a, const Rational& b, int max_deg)
{
    if (a > b) throw std::invalid_argument("empty window");
    auto [mat, fm] = materialize_cover(x, f, a, b);
    for (const auto& [v, val] : fm.theta) {
        (void)v;
        if (val == a || val == b) throw std::invalid_argument("choose regular values");
    }
    auto [cut1, f1] = cut_at_level(mat, fm, a);
    auto [cut2, f2] = cut_at_level(cut1, f1, b);
    SimplicialComplex window;
    for (const auto& s : cut2.simplices()) {
        bool inside = true;
        for (int v : s) {
            Rational val = f2.value(v);
            if (val < a || val > b) {
                inside = false;
                break;
            }
        }
        if (inside) window.add_simplex(s);
    }
    return simplicial_homology_dims<K>(window, max_deg);
}

// ---------------------------------------------------------------------------
// extended persistence via the coned filtration

struct PersistencePoint {
    int degree;
    Rational birth, death;
    friend bool operator==(const PersistencePoint& x, const PersistencePoint& y)
    {
        return std::tie(x.degree, x.birth, x.death) == std::tie(y.degree, y.birth, y.death);
    }
    friend bool operator<(const PersistencePoint& x, const PersistencePoint& y)
    {
        return std::tie(x.degree, x.birth, x.death) < std::tie(y.degree, y.birth, y.death);
    }
};

struct ExtendedPersistence {
    std::vector<PersistencePoint> ordinary; // (birth, death) ascending phase
    std::vector<PersistencePoint> relative; // (death, birth] descending phase
    std::vector<PersistencePoint> extended; // bridges the two phases
};

/// Extended persistence of a real-valued PL function, computed by running
/// field-coefficient matrix reduction on the complex with a cone attached
/// along descending superlevels.
template <class K>
ExtendedPersistence extended_persistence(const SimplicialComplex& x, const PLFunction& f)
{
    if (f.group.rank != 0)
        throw std::invalid_argument("extended persistence needs a real-valued function");
    struct Cell {
        bool coned;
        Simplex s;
        // ordering keys
        Rational key;
        std::pair<Rational, int> lex;
        int dim;
    };
    auto vertex_key = [&](int v) { return std::make_pair(f.value(v), v); };
    auto max_key = [&](const Simplex& s) {
        auto best = vertex_key(s[0]);
        for (int v : s) best = std::max(best, vertex_key(v));
        return best;
    };
    auto min_key = [&](const Simplex& s) {
        auto best = vertex_key(s[0]);
        for (int v : s) best = std::min(best, vertex_key(v));
        return best;
    };

    std::vector<Cell> cells;
    for (const auto& s : x.simplices()) {
        auto mk = max_key(s);
        cells.push_back(Cell{false, s, mk.first, mk, static_cast<int>(s.size()) - 1});
    }
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
        if (a.lex != b.lex) return a.lex < b.lex;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s < b.s;
    });
    std::vector<Cell> cone_cells;
    for (const auto& s : x.simplices()) {
        auto mk = min_key(s);
        cone_cells.push_back(Cell{true, s, mk.first, mk, static_cast<int>(s.size())});
    }
    std::sort(cone_cells.begin(), cone_cells.end(), [&](const Cell& a, const Cell& b) {
        if (a.lex != b.lex) return a.lex > b.lex; // descending sweep
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s < b.s;
    });

    // global order: the cone point, the ascending phase, the descending phase
    std::size_t n_phase1 = cells.size();
    std::vector<Cell> order;
    order.reserve(1 + cells.size() + cone_cells.size());
    order.push_back(Cell{true, {}, Rational(0), {Rational(0), 0}, 0}); // the cone point
    order.insert(order.end(), cells.begin(), cells.end());
    order.insert(order.end(), cone_cells.begin(), cone_cells.end());

    std::map<Simplex, std::size_t> plain_index, cone_index;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0) continue;
        (order[i].coned ? cone_index : plain_index)[order[i].s] = i;
    }

    // boundaries as sparse columns over K
    using Col = std::map<std::size_t, K>;
    auto add_term = [](Col& col, std::size_t row, const K& coeff) {
        auto it = col.find(row);
        if (it == col.end()) {
            if (!field_traits<K>::is_zero(coeff)) col[row] = coeff;
        } else {
            it->second += coeff;
            if (field_traits<K>::is_zero(it->second)) col.erase(it);
        }
    };
    std::vector<Col> cols(order.size());
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Cell& cell = order[i];
        if (!cell.coned) {
            if (cell.s.size() == 1) continue;
            for (std::size_t j = 0; j < cell.s.size(); ++j) {
                Simplex face = cell.s;
                face.erase(face.begin() + static_cast<long>(j));
                add_term(cols[i], plain_index.at(face),
                         field_traits<K>::from_int(j % 2 == 0 ? 1 : -1));
            }
        } else {
            // cone on s, with the cone point in front: d(w*s) = s - w*(ds)
            add_term(cols[i], plain_index.at(cell.s), field_traits<K>::one());
            if (cell.s.size() == 1) {
                add_term(cols[i], 0, field_traits<K>::from_int(-1));
            } else {
                for (std::size_t j = 0; j < cell.s.size(); ++j) {
                    Simplex face = cell.s;
                    face.erase(face.begin() + static_cast<long>(j));
                    add_term(cols[i], cone_index.at(face),
                             field_traits<K>::from_int(j % 2 == 0 ? -1 : 1));
                }
            }
        }
    }

    // standard reduction
    std::vector<long long> owner(order.size(), -1); // pivot row -> column
    std::vector<long long> paired_with(order.size(), -1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        Col& col = cols[i];
        while (!col.empty()) {
            std::size_t pivot = col.rbegin()->first;
            if (owner[pivot] < 0) {
                owner[pivot] = static_cast<long long>(i);
                paired_with[pivot] = static_cast<long long>(i);
                paired_with[i] = static_cast<long long>(pivot);
                break;
            }
            const Col& other = cols[static_cast<std::size_t>(owner[pivot])];
            K factor = col.rbegin()->second / other.rbegin()->second;
            for (const auto& [row, coeff] : other) add_term(col, row, -(factor * coeff));
        }
    }

    ExtendedPersistence out;
    for (std::size_t i = 1; i < order.size(); ++i) {
        long long partner = paired_with[i];
        if (partner < 0 || static_cast<std::size_t>(partner) < i) continue;
        std::size_t j = static_cast<std::size_t>(partner);
        const Cell& birth = order[i];
        const Cell& death = order[j];
        if (!birth.coned && !death.coned)
            out.ordinary.push_back(PersistencePoint{birth.dim, birth.key, death.key});
        else if (!birth.coned && death.coned)
            out.extended.push_back(PersistencePoint{birth.dim, birth.key, death.key});
        else
            out.relative.push_back(
                PersistencePoint{birth.dim - 1, death.key, birth.key});
    }
    std::sort(out.ordinary.begin(), out.ordinary.end());
    std::sort(out.relative.begin(), out.relative.end());
    std::sort(out.extended.begin(), out.extended.end());
    return out;
}

} // namespace novpers

#endif
