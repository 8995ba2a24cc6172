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

#ifndef NOVPERS_MATCHED_PAIR_HPP
#define NOVPERS_MATCHED_PAIR_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "matrix.hpp"
#include "ortho.hpp"
#include "smith.hpp"

namespace novpers {

/// A free module of finite rank with valuation-compatible maps into an
/// ascending and a descending orthogonal space, both of which become
/// isomorphisms over the respective Novikov fields.  Torsion of the original
/// module is carried along as a dimension tag only.
template <class K>
struct MatchedPair {
    OrthoSpace<K> up_space;   // Orient::Up
    OrthoSpace<K> down_space; // Orient::Down
    NovMat<K> up_map;         // dim(up_space) x d
    NovMat<K> down_map;       // dim(down_space) x d
    long long torsion_dim = 0;

    std::size_t rank() const { return up_map.cols(); }
    const Group& group() const { return up_space.group; }

    void validate() const
    {
        if (up_space.orient != Orient::Up || down_space.orient != Orient::Down)
            throw std::invalid_argument("matched pair orientation mismatch");
        if (!(up_space.group == down_space.group))
            throw std::invalid_argument("matched pair group mismatch");
        if (up_map.cols() != down_map.cols() || up_map.rows() != up_space.dim() ||
            down_map.rows() != down_space.dim())
            throw std::invalid_argument("matched pair shape mismatch");
        if (up_map.rows() != up_map.cols() || down_map.rows() != down_map.cols() ||
            determinant(up_map).is_zero() || determinant(down_map).is_zero())
            throw std::invalid_argument("degenerate pair");
    }

    NovVec<K> up_image(const std::vector<GroupRing<K>>& col) const
    {
        NovVec<K> x(col.size(), Novikov<K>::zero(Orient::Up));
        for (std::size_t i = 0; i < col.size(); ++i)
            x[i] = Novikov<K>::from_ring(Orient::Up, col[i]);
        return up_map.apply(x);
    }
    NovVec<K> down_image(const std::vector<GroupRing<K>>& col) const
    {
        NovVec<K> x(col.size(), Novikov<K>::zero(Orient::Down));
        for (std::size_t i = 0; i < col.size(); ++i)
            x[i] = Novikov<K>::from_ring(Orient::Down, col[i]);
        return down_map.apply(x);
    }

    /// Direct sum (block diagonal on all data).
    void append(const MatchedPair& other)
    {
        auto merge_space = [](OrthoSpace<K>& a, const OrthoSpace<K>& b) {
            a.values.insert(a.values.end(), b.values.begin(), b.values.end());
        };
        auto merge_mat = [](NovMat<K>& a, const NovMat<K>& b) {
            NovMat<K> m(a.rows() + b.rows(), a.cols() + b.cols(), a.orient());
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
            a = std::move(m);
        };
        merge_space(up_space, other.up_space);
        merge_space(down_space, other.down_space);
        merge_mat(up_map, other.up_map);
        merge_mat(down_map, other.down_map);
        torsion_dim += other.torsion_dim;
    }

    /// Change of basis of the free module: columns of U are the new basis.
    MatchedPair with_basis_change(const LMat<K>& u) const
    {
        MatchedPair p = *this;
        p.up_map = up_map * u.to_nov(Orient::Up);
        p.down_map = down_map * u.to_nov(Orient::Down);
        return p;
    }
};

/// One element of the basis spectrum: the left endpoint class mod the group
/// (representative in [0, lambda0) for rank 1) and the signed bar length.
struct SpectrumEntry {
    Rational a;
    Rational ell;
    friend bool operator==(const SpectrumEntry& x, const SpectrumEntry& y)
    {
        return x.a == y.a && x.ell == y.ell;
    }
    friend bool operator<(const SpectrumEntry& x, const SpectrumEntry& y)
    {
        return std::tie(x.a, x.ell) < std::tie(y.a, y.ell);
    }
};

using Spectrum = std::vector<SpectrumEntry>; // kept sorted

/// Unitriangular change-of-basis matrix with filtration labels.
template <class K>
struct LabeledBCM {
    LMat<K> m; // unitriangular over the group ring
    std::vector<Rational> xi, eta;

    std::size_t dim() const { return xi.size(); }

    void check_unitriangular() const
    {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!(m.at(i, i) == GroupRing<K>::one()))
                throw std::invalid_argument("diagonal entry is not 1");
            for (std::size_t j = 0; j < i; ++j)
                if (!m.at(i, j).is_zero())
                    throw std::invalid_argument("matrix is not upper triangular");
        }
    }
};

template <class K>
Rational misalignment(const LabeledBCM<K>& l)
{
    Rational total = 0;
    std::size_t d = l.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational diff = (l.eta[i] - l.xi[i]) - (l.eta[j] - l.xi[j]);
            total += diff < 0 ? -diff : diff;
        }
    return total;
}

/// Elementary reduction operations, recorded for audit and replay.
template <class K>
struct LbcmOp {
    enum class Type { A1, A2, A3, A4, A5 };
    Type type;
    std::size_t i = 0, j = 0;
    GroupRing<K> mu;           // A2 unit / A3 mu / A4 mu / A5 mu
    GroupRing<K> lambda;       // A5 only
    GroupRing<K> di, dj;       // A5 only
    std::size_t event = 0;     // groups the ops of one elimination step
    bool compression = false;  // whether the event compresses the labels
};

namespace detail {

template <class K>
struct LbcmState {
    LabeledBCM<K> l;
    LMat<K> x, y; // columns = current bases in original coordinates
    std::vector<LbcmOp<K>> log;
    std::size_t event = 0;
    bool event_compresses = false;
    const Group* group = nullptr;

    Rational value_of(const GroupRing<K>& unit) const
    {
        return group->rank == 0 ? Rational(0) : group->lambda0 * unit.min_mult();
    }

    void push(typename LbcmOp<K>::Type t, std::size_t i, std::size_t j,
              GroupRing<K> mu = {}, GroupRing<K> lambda = {}, GroupRing<K> di = {},
              GroupRing<K> dj = {})
    {
        log.push_back(LbcmOp<K>{t, i, j, std::move(mu), std::move(lambda), std::move(di),
                                std::move(dj), event, event_compresses});
    }

    // (A1) swap basis elements y_i and y_j
    void a1(std::size_t i, std::size_t j)
    {
        std::size_t d = l.dim();
        for (std::size_t t = 0; t < d; ++t) std::swap(l.m.at(i, t), l.m.at(j, t));
        std::swap(l.eta[i], l.eta[j]);
        for (std::size_t t = 0; t < y.rows(); ++t) std::swap(y.at(t, i), y.at(t, j));
        push(LbcmOp<K>::Type::A1, i, j);
    }

    // (A2) scale x_j by a unit
    void a2(std::size_t j, const GroupRing<K>& unit)
    {
        if (!unit.is_monomial()) throw std::logic_error("A2 coefficient is not a unit");
        std::size_t d = l.dim();
        for (std::size_t t = 0; t < d; ++t) l.m.at(t, j) *= unit;
        for (std::size_t t = 0; t < x.rows(); ++t) x.at(t, j) *= unit;
        l.xi[j] -= value_of(unit);
        push(LbcmOp<K>::Type::A2, j, j, unit);
    }

    // (A3) y_j += mu * y_i; row_i of M -= mu * row_j
    void a3(std::size_t i, std::size_t j, const GroupRing<K>& mu)
    {
        if (mu.is_zero()) return;
        if (!(mu.val_down(*group) <= ExtRat(l.eta[i] - l.eta[j])))
            throw std::logic_error("A3 side condition violated");
        std::size_t d = l.dim();
        for (std::size_t t = 0; t < d; ++t) l.m.at(i, t) -= mu * l.m.at(j, t);
        for (std::size_t t = 0; t < y.rows(); ++t) y.at(t, j) += mu * y.at(t, i);
        push(LbcmOp<K>::Type::A3, i, j, mu);
    }

    // (A4) x_j += mu * x_i; col_j of M += mu * col_i
    void a4(std::size_t i, std::size_t j, const GroupRing<K>& mu)
    {
        if (mu.is_zero()) return;
        if (!(mu.val_up(*group) >= ExtRat(l.xi[i] - l.xi[j])))
            throw std::logic_error("A4 side condition violated");
        std::size_t d = l.dim();
        for (std::size_t t = 0; t < d; ++t) l.m.at(t, j) += mu * l.m.at(t, i);
        for (std::size_t t = 0; t < x.rows(); ++t) x.at(t, j) += mu * x.at(t, i);
        push(LbcmOp<K>::Type::A4, i, j, mu);
    }

    // (A5) two-column move by an invertible 2x2 block
    void a5(std::size_t i, std::size_t j, const GroupRing<K>& di, const GroupRing<K>& mu,
            const GroupRing<K>& lambda, const GroupRing<K>& dj)
    {
        if (!(di.val_up(*group) == ExtRat(Rational(0))) ||
            !(dj.val_up(*group) == ExtRat(Rational(0))))
            throw std::logic_error("A5 diagonal valuation condition violated");
        if (!(lambda.val_up(*group) > ExtRat(l.xi[j] - l.xi[i])))
            throw std::logic_error("A5 lambda condition violated");
        if (!(mu.val_up(*group) >= ExtRat(l.xi[i] - l.xi[j])))
            throw std::logic_error("A5 mu condition violated");
        GroupRing<K> det = di * dj - mu * lambda;
        if (!det.is_monomial()) throw std::logic_error("A5 block is not invertible");
        auto mix = [&](LMat<K>& mat) {
            for (std::size_t t = 0; t < mat.rows(); ++t) {
                GroupRing<K> ci = mat.at(t, i), cj = mat.at(t, j);
                mat.at(t, i) = ci * di + cj * lambda;
                mat.at(t, j) = ci * mu + cj * dj;
            }
        };
        mix(l.m);
        mix(x);
        push(LbcmOp<K>::Type::A5, i, j, mu, lambda, di, dj);
    }
};

/// One elimination step at (lo, cc): either clears the entry with labels
/// unchanged, or performs the swap move that compresses the labels and
/// returns the column whose lower-right block must be re-normalized.
template <class K>
std::optional<std::size_t> basis_step(LbcmState<K>& st, std::size_t lo, std::size_t cc)
{
    const Group& g = *st.group;
    GroupRing<K> f = st.l.m.at(lo, cc);
    Rational low = st.l.eta[lo] - st.l.eta[cc];
    Rational high = st.l.xi[lo] - st.l.xi[cc];

    GroupRing<K> fm, f0, fp;
    for (const auto& [m, c] : f.terms()) {
        Rational v = g.rank == 0 ? Rational(0) : g.lambda0 * m;
        if (v <= low)
            fm.set(m, c);
        else if (v >= high)
            fp.set(m, c);
        else
            f0.set(m, c);
    }
    st.a3(lo, cc, fm);
    st.a4(lo, cc, -fp);
    if (f0.is_zero()) return std::nullopt;

    // factor f0 = a T^g0 (1 - r) with the valuation of r positive
    st.event_compresses = true;
    long long g0 = f0.min_mult();
    K a = f0.coeff(g0);
    K ainv = field_traits<K>::inv(a);
    GroupRing<K> r = GroupRing<K>::one() - f0.shifted(-g0) * GroupRing<K>(ainv);
    Rational g0val = g.rank == 0 ? Rational(0) : g.lambda0 * g0;
    long long n = 0;
    if (!r.is_zero()) {
        Rational v = g.lambda0 * r.min_mult(); // positive
        Rational rhs = high - g0val;           // positive
        n = rational_floor(rhs / v).convert_to<long long>();
        if (n < 0) n = 0;
    }
    GroupRing<K> rpow = GroupRing<K>::one(), geom;
    for (long long q = 0; q <= n; ++q) {
        geom += rpow;
        rpow *= r;
    }
    // rpow = r^(n+1)
    GroupRing<K> di = -(GroupRing<K>(a) * (GroupRing<K>::one() - r));
    GroupRing<K> mu = rpow.shifted(g0);
    GroupRing<K> lambda = GroupRing<K>::monomial(field_traits<K>::one(), -g0);
    GroupRing<K> dj = geom * GroupRing<K>(ainv);
    st.a5(lo, cc, di, mu, lambda, dj);
    st.a1(lo, cc);
    st.a2(lo, GroupRing<K>::monomial(field_traits<K>::one(), g0));
    st.a2(cc, GroupRing<K>::monomial(field_traits<K>::one(), -g0));
    return cc;
}

/// Normalizes the lower-right block starting at `lo` to the identity.
template <class K>
void clear_block(LbcmState<K>& st, std::size_t lo)
{
    std::size_t d = st.l.dim();
    if (lo + 1 >= d) return;
    clear_block(st, lo + 1);
    std::size_t guard = 0;
    while (true) {
        if (++guard > 2000000) throw std::logic_error("reduction failed to terminate");
        std::optional<std::size_t> cc;
        for (std::size_t j = lo + 1; j < d; ++j)
            if (!st.l.m.at(lo, j).is_zero()) {
                cc = j;
                break;
            }
        if (!cc) return;
        ++st.event;
        st.event_compresses = false;
        Rational before = misalignment(st.l);
        auto redo = basis_step(st, lo, *cc);
        if (redo) {
            clear_block(st, *redo);
            Rational after = misalignment(st.l);
            if (!(after < before))
                throw std::logic_error("compression did not reduce misalignment");
        }
    }
}

} // namespace detail

/// Replays a recorded op log against a labeled matrix (audit tool).  The
/// basis matrices are optional; pass identity to track them.
template <class K>
LabeledBCM<K> replay_ops(const LabeledBCM<K>& start, const std::vector<LbcmOp<K>>& log,
                         const Group& g)
{
    detail::LbcmState<K> st;
    st.l = start;
    std::size_t d = start.dim();
    st.x = LMat<K>::identity(d);
    st.y = LMat<K>::identity(d);
    st.group = &g;
    for (const auto& op : log) {
        switch (op.type) {
        case LbcmOp<K>::Type::A1: st.a1(op.i, op.j); break;
        case LbcmOp<K>::Type::A2: st.a2(op.j, op.mu); break;
        case LbcmOp<K>::Type::A3: st.a3(op.i, op.j, op.mu); break;
        case LbcmOp<K>::Type::A4: st.a4(op.i, op.j, op.mu); break;
        case LbcmOp<K>::Type::A5: st.a5(op.i, op.j, op.di, op.mu, op.lambda, op.dj); break;
        }
    }
    return st.l;
}

/// Result of the triangular construction: bases x, y of the free module
/// (columns in the original coordinates) whose up/down images are orthogonal,
/// and the unitriangular labeled matrix with x_j = sum_i M_ij y_i.
template <class K>
struct TriconstructResult {
    LMat<K> x, y;
    LabeledBCM<K> lbcm;
};

template <class K>
TriconstructResult<K> triconstruct(const MatchedPair<K>& p, const PivotOrder& order = {})
{
    p.validate();
    const Group& g = p.group();
    std::size_t d = p.rank();

    // descending side: orthogonalize the images of the standard basis and
    // pull the (truncated) coefficients back to the module
    std::vector<NovVec<K>> down_cols;
    for (std::size_t j = 0; j < d; ++j) down_cols.push_back(p.down_map.col(j));
    auto tri_down = triangular_orthogonalize(p.down_space, down_cols, order);

    Rational a0;
    bool first = true;
    for (const auto& v : tri_down.vectors) {
        Rational lvl = rho(p.down_space, v).finite();
        if (first || lvl > a0) a0 = lvl;
        first = false;
    }
    Rational min_f;
    first = true;
    for (const auto& v : down_cols) {
        Rational lvl = rho(p.down_space, v).finite();
        if (first || lvl < min_f) min_f = lvl;
        first = false;
    }
    Rational d0 = min_f - a0;

    LMat<K> y = LMat<K>::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Novikov<K>& mu = tri_down.input_coeffs[i][j];
            if (mu.is_zero()) continue;
            y.at(j, i) = mu.truncate_hat_value(d0, g);
        }

    // ascending side, seeded with the y basis
    std::vector<NovVec<K>> up_cols;
    for (std::size_t j = 0; j < d; ++j) up_cols.push_back(p.up_image(y.col(j)));
    auto tri_up = triangular_orthogonalize(p.up_space, up_cols, order);

    Rational max_f;
    first = true;
    for (const auto& v : up_cols) {
        Rational lvl = rho(p.up_space, v).finite();
        if (first || lvl > max_f) max_f = lvl;
        first = false;
    }
    Rational min_w;
    first = true;
    for (const auto& v : tri_up.vectors) {
        Rational lvl = rho(p.up_space, v).finite();
        if (first || lvl < min_w) min_w = lvl;
        first = false;
    }
    Rational up_bound = max_f - min_w;

    LMat<K> coeffs = LMat<K>::identity(d); // x = y * coeffs
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Novikov<K>& lam = tri_up.input_coeffs[i][j];
            if (lam.is_zero()) continue;
            coeffs.at(j, i) = lam.truncate_hat_value(up_bound, g);
        }
    LMat<K> x = y * coeffs;

    TriconstructResult<K> out;
    out.x = std::move(x);
    out.y = std::move(y);
    out.lbcm.m = std::move(coeffs);
    out.lbcm.xi.resize(d);
    out.lbcm.eta.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        out.lbcm.xi[j] = rho(p.up_space, p.up_image(out.x.col(j))).finite();
        out.lbcm.eta[j] = rho(p.down_space, p.down_image(out.y.col(j))).finite();
    }
    return out;
}

/// Result of the full reduction to a common doubly-orthogonal basis.
template <class K>
struct ReduceResult {
    LabeledBCM<K> lbcm;      // identity matrix with final labels
    LMat<K> basis;           // the common basis e (columns)
    std::vector<LbcmOp<K>> log;
};

template <class K>
ReduceResult<K> reduce_lbcm(const LabeledBCM<K>& l, const LMat<K>& x, const LMat<K>& y,
                            const Group& g)
{
    l.check_unitriangular();
    detail::LbcmState<K> st;
    st.l = l;
    st.x = x;
    st.y = y;
    st.group = &g;
    detail::clear_block(st, 0);
    if (!(st.x == st.y)) throw std::logic_error("bases disagree after reduction");
    ReduceResult<K> out;
    out.lbcm = std::move(st.l);
    out.basis = std::move(st.x);
    out.log = std::move(st.log);
    return out;
}

/// A doubly-orthogonal basis together with the two filtration values of each
/// basis element.
template <class K>
struct DoublyOrthogonalBasis {
    LMat<K> basis; // columns, in original module coordinates
    std::vector<Rational> up_values, down_values;
};

template <class K>
DoublyOrthogonalBasis<K> doubly_orthogonal_basis(const MatchedPair<K>& p,
                                                 const PivotOrder& order = {})
{
    if (p.group().rank > 1) throw std::invalid_argument("group must be discrete");
    auto tri = triconstruct(p, order);
    auto red = reduce_lbcm(tri.lbcm, tri.x, tri.y, p.group());
    DoublyOrthogonalBasis<K> out;
    out.basis = std::move(red.basis);
    out.up_values.resize(p.rank());
    out.down_values.resize(p.rank());
    for (std::size_t j = 0; j < p.rank(); ++j) {
        out.up_values[j] = rho(p.up_space, p.up_image(out.basis.col(j))).finite();
        out.down_values[j] = rho(p.down_space, p.down_image(out.basis.col(j))).finite();
    }
    return out;
}

template <class K>
Spectrum basis_spectrum(const MatchedPair<K>& p, const PivotOrder& order = {})
{
    auto dob = doubly_orthogonal_basis(p, order);
    Spectrum s;
    for (std::size_t j = 0; j < p.rank(); ++j) {
        auto [rep, mult] = p.group().normalize(dob.up_values[j]);
        (void)mult;
        s.push_back(SpectrumEntry{rep, dob.down_values[j] - dob.up_values[j]});
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Gaps: the signed bar lengths sorted in descending order.
template <class K>
std::vector<Rational> gaps(const MatchedPair<K>& p, const PivotOrder& order = {})
{
    Spectrum s = basis_spectrum(p, order);
    std::vector<Rational> out;
    for (const auto& e : s) out.push_back(e.ell);
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return out;
}

/// The dual matched pair: dual module, dual spaces (same basis values), and
/// the conjugate-transposed inverse matrices as maps.
template <class K>
MatchedPair<K> dual_pair(const MatchedPair<K>& p)
{
    p.validate();
    MatchedPair<K> d;
    d.up_space = p.down_space.dual();
    d.down_space = p.up_space.dual();
    d.up_map = inverse(p.down_map).conj().transposed();
    d.down_map = inverse(p.up_map).conj().transposed();
    d.torsion_dim = 0;
    return d;
}

/// Decides existence of a strong t-matching between two spectra, i.e. a
/// bijection moving both endpoint coordinates by at most t after a per-pair
/// group translation.  Returns the witness matching when one exists.
inline std::optional<std::vector<std::size_t>> strong_matching(const Spectrum& s,
                                                               const Spectrum& s_hat,
                                                               const Rational& t,
                                                               const Group& g)
{
    if (s.size() != s_hat.size()) return std::nullopt;
    std::size_t n = s.size();
    if (n == 0) return std::vector<std::size_t>{};

    auto admissible = [&](const SpectrumEntry& x, const SpectrumEntry& y) {
        // need g0 with |g0 + y.a - x.a| <= t and |(g0 + y.a + y.ell) - (x.a + x.ell)| <= t
        if (g.rank == 0)
            return (y.a - x.a <= t && x.a - y.a <= t) &&
                   ((y.a + y.ell) - (x.a + x.ell) <= t && (x.a + x.ell) - (y.a + y.ell) <= t);
        // |g0| <= t + spread of representatives + lambda0 suffices
        Rational bound = t + g.lambda0;
        Rational diff = x.a - y.a;
        if (diff < 0) bound -= diff;
        else bound += diff;
        Integer lo = rational_ceil(-bound / g.lambda0), hi = rational_floor(bound / g.lambda0);
        for (Integer m = lo; m <= hi; ++m) {
            Rational g0 = g.lambda0 * Rational(m);
            Rational d1 = g0 + y.a - x.a;
            Rational d2 = d1 + y.ell - x.ell;
            if (d1 <= t && -d1 <= t && d2 <= t && -d2 <= t) return true;
        }
        return false;
    };

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (admissible(s[i], s_hat[j])) adj[i].push_back(j);

    // augmenting-path bipartite matching
    std::vector<long long> match_right(n, -1), match_left(n, -1);
    std::vector<bool> seen;
    std::function<bool(std::size_t)> try_match = [&](std::size_t i) -> bool {
        for (std::size_t j : adj[i]) {
            if (seen[j]) continue;
            seen[j] = true;
            if (match_right[j] < 0 || try_match(static_cast<std::size_t>(match_right[j]))) {
                match_right[j] = static_cast<long long>(i);
                match_left[i] = static_cast<long long>(j);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, false);
        if (!try_match(i)) return std::nullopt;
    }
    std::vector<std::size_t> witness(n);
    for (std::size_t i = 0; i < n; ++i) witness[i] = static_cast<std::size_t>(match_left[i]);
    return witness;
}

inline bool check_strong_matching(const Spectrum& s, const Spectrum& s_hat, const Rational& t,
                                  const Group& g)
{
    return strong_matching(s, s_hat, t, g).has_value();
}

} // namespace novpers

#endif
