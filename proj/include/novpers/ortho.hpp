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

#ifndef NOVPERS_ORTHO_HPP
#define NOVPERS_ORTHO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "novikov.hpp"
#include "rng.hpp"

namespace novpers {

/// A finite-dimensional space over one of the Novikov fields whose listed
/// basis is orthogonal for the filtration: the level of a combination
/// sum lambda_i u_i is max_i(values[i] - nu_up(lambda_i)) in the Up case and
/// the min with nu_down in the Down case.
template <class K>
struct OrthoSpace {
    Orient orient = Orient::Up;
    Group group;
    std::vector<Rational> values;

    std::size_t dim() const { return values.size(); }

    static OrthoSpace up(Group g, std::vector<Rational> vals)
    {
        return OrthoSpace{Orient::Up, std::move(g), std::move(vals)};
    }
    static OrthoSpace down(Group g, std::vector<Rational> vals)
    {
        return OrthoSpace{Orient::Down, std::move(g), std::move(vals)};
    }

    /// The dual space: a space of the opposite orientation whose (dual) basis
    /// carries the same filtration values.
    OrthoSpace<K> dual() const { return OrthoSpace<K>{flipped(orient), group, values}; }
};

template <class K>
using NovVec = std::vector<Novikov<K>>;

template <class K>
NovVec<K> zero_vec(const OrthoSpace<K>& sp)
{
    return NovVec<K>(sp.dim(), Novikov<K>::zero(sp.orient));
}

template <class K>
bool vec_is_zero(const NovVec<K>& v)
{
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

template <class K>
NovVec<K> vec_sub_scaled(const NovVec<K>& a, const Novikov<K>& c, const NovVec<K>& b)
{
    NovVec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * b[i];
    return r;
}

/// Filtration level of a coordinate vector.
template <class K>
ExtRat rho(const OrthoSpace<K>& sp, const NovVec<K>& v)
{
    if (v.size() != sp.dim()) throw std::invalid_argument("rho: dimension mismatch");
    ExtRat best = sp.orient == Orient::Up ? ExtRat::neg_inf() : ExtRat::pos_inf();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        ExtRat level = ExtRat(sp.values[i]) - v[i].valuation(sp.group);
        if (sp.orient == Orient::Up ? (level > best) : (level < best)) best = level;
    }
    return best;
}

/// Deterministic tie-breaking permutation for pivot searches.  priority[i]
/// gives the rank of index i; lower wins.  Empty means the identity order.
struct PivotOrder {
    std::vector<std::size_t> priority;

    std::size_t rank(std::size_t i) const { return priority.empty() ? i : priority.at(i); }

    static PivotOrder identity() { return {}; }
    static PivotOrder shuffled(std::size_t n, std::uint64_t seed)
    {
        Rng rng(seed);
        auto perm = rng.permutation(n);
        std::vector<std::size_t> pri(n);
        for (std::size_t r = 0; r < n; ++r) pri[perm[r]] = r;
        return PivotOrder{std::move(pri)};
    }
};

/// A list of vectors kept in reduced triangular form: vecs[j] vanishes on the
/// pivot coordinates of all vecs[i] with i < j, and each vecs[i] attains its
/// filtration level at its pivot.  Such a family is orthogonal, and
/// coordinates with respect to it are computable by forward reduction.
template <class K>
class OrthFamily {
public:
    explicit OrthFamily(const OrthoSpace<K>& sp, PivotOrder order = {})
        : space_(&sp), order_(std::move(order))
    {
    }

    const OrthoSpace<K>& space() const { return *space_; }
    std::size_t size() const { return vecs_.size(); }
    const NovVec<K>& vec(std::size_t i) const { return vecs_[i]; }
    const std::vector<NovVec<K>>& vecs() const { return vecs_; }
    std::size_t pivot(std::size_t i) const { return pivots_[i]; }
    ExtRat level(std::size_t i) const { return rho(*space_, vecs_[i]); }

    struct Reduction {
        NovVec<K> residual;
        NovVec<K> coeffs; // residual = v - sum coeffs[i] * vec(i)
    };

    /// Zeroes the pivot coordinates of v in family order.  After reduction the
    /// residual's level is the distance from v to the family's span.
    Reduction reduce(const NovVec<K>& v) const
    {
        Reduction r;
        r.residual = v;
        r.coeffs.assign(vecs_.size(), Novikov<K>::zero(space_->orient));
        for (std::size_t i = 0; i < vecs_.size(); ++i) {
            const auto& piv = r.residual[pivots_[i]];
            if (piv.is_zero()) continue;
            Novikov<K> c = piv / vecs_[i][pivots_[i]];
            r.residual = vec_sub_scaled(r.residual, c, vecs_[i]);
            r.coeffs[i] = c;
        }
        return r;
    }

    /// Coordinates of a vector known to lie in the span.
    NovVec<K> coordinates(const NovVec<K>& v) const
    {
        Reduction r = reduce(v);
        if (!vec_is_zero(r.residual))
            throw std::logic_error("coordinates: vector not in span");
        return r.coeffs;
    }

    /// Appends the reduction of v if it is nonzero.  Returns false when v is
    /// in the span already.
    bool try_extend(const NovVec<K>& v)
    {
        Reduction r = reduce(v);
        if (vec_is_zero(r.residual)) return false;
        append_reduced(std::move(r.residual));
        return true;
    }

    /// Appends a vector already known to vanish on existing pivots.
    void append_reduced(NovVec<K> v)
    {
        pivots_.push_back(select_pivot(v));
        vecs_.push_back(std::move(v));
    }

    /// Appends a vector with an externally chosen pivot coordinate; the
    /// caller guarantees the triangular invariant.
    void append_with_pivot(NovVec<K> v, std::size_t pivot)
    {
        if (v.at(pivot).is_zero()) throw std::logic_error("pivot entry is zero");
        pivots_.push_back(pivot);
        vecs_.push_back(std::move(v));
    }

private:
    std::size_t select_pivot(const NovVec<K>& v) const
    {
        ExtRat lvl = rho(*space_, v);
        if ((space_->orient == Orient::Up && lvl.is_neg_inf()) ||
            (space_->orient == Orient::Down && lvl.is_pos_inf()))
            throw std::logic_error("cannot pick pivot of the zero vector");
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (ExtRat(space_->values[i]) - v[i].valuation(space_->group) != lvl) continue;
            if (!best || order_.rank(i) < order_.rank(*best)) best = i;
        }
        return *best;
    }

    const OrthoSpace<K>* space_;
    PivotOrder order_;
    std::vector<NovVec<K>> vecs_;
    std::vector<std::size_t> pivots_;
};

struct OrthogonalizeResult;

/// Triangular orthogonalization: returns vectors w_i = v_i + sum_{j<i} c_ij v_j
/// forming an orthogonal list with the same span.  Throws on dependent input.
template <class K>
struct TriOrthResult {
    std::vector<NovVec<K>> vectors;
    // coeffs[i][j] (j < i) is the coefficient of the input v_j in w_i
    std::vector<NovVec<K>> input_coeffs;
};

template <class K>
TriOrthResult<K> triangular_orthogonalize(const OrthoSpace<K>& sp,
                                          const std::vector<NovVec<K>>& input,
                                          const PivotOrder& order = {})
{
    TriOrthResult<K> out;
    OrthFamily<K> fam(sp, order);
    for (std::size_t i = 0; i < input.size(); ++i) {
        auto red = fam.reduce(input[i]);
        if (vec_is_zero(red.residual))
            throw std::invalid_argument("not independent");
        // expand the subtracted family vectors back into input coordinates
        NovVec<K> in_coeffs(i, Novikov<K>::zero(sp.orient));
        for (std::size_t j = 0; j < fam.size(); ++j) {
            if (red.coeffs[j].is_zero()) continue;
            for (std::size_t l = 0; l < j; ++l)
                in_coeffs[l] -= red.coeffs[j] * out.input_coeffs[j][l];
            in_coeffs[j] -= red.coeffs[j];
        }
        fam.append_reduced(red.residual);
        out.vectors.push_back(fam.vec(fam.size() - 1));
        out.input_coeffs.push_back(std::move(in_coeffs));
    }
    return out;
}

/// Exact orthogonality test: each v_i must realize the best-approximation
/// distance to the span of the others.  Throws on dependent input.
template <class K>
bool is_orthogonal(const OrthoSpace<K>& sp, const std::vector<NovVec<K>>& vecs)
{
    for (const auto& v : vecs)
        if (vec_is_zero(v)) throw std::invalid_argument("not independent");
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        std::vector<NovVec<K>> others;
        for (std::size_t j = 0; j < vecs.size(); ++j)
            if (j != i) others.push_back(vecs[j]);
        OrthFamily<K> fam(sp);
        for (auto& o : triangular_orthogonalize(sp, others).vectors)
            fam.append_reduced(std::move(o));
        auto red = fam.reduce(vecs[i]);
        if (vec_is_zero(red.residual)) throw std::invalid_argument("not independent");
        if (rho(sp, red.residual) != rho(sp, vecs[i])) return false;
    }
    return true;
}

/// Triangular orthogonalization that returns the input unchanged (with zero
/// coefficients) when it is already orthogonal.
template <class K>
TriOrthResult<K> orthogonalize(const OrthoSpace<K>& sp, const std::vector<NovVec<K>>& input,
                               const PivotOrder& order = {})
{
    if (is_orthogonal(sp, input)) {
        TriOrthResult<K> out;
        out.vectors = input;
        for (std::size_t i = 0; i < input.size(); ++i)
            out.input_coeffs.emplace_back(i, Novikov<K>::zero(sp.orient));
        return out;
    }
    return triangular_orthogonalize(sp, input, order);
}

} // namespace novpers

#endif
