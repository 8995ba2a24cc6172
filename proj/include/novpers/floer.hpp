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

#ifndef NOVPERS_FLOER_HPP
#define NOVPERS_FLOER_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "barcode.hpp"
#include "matrix.hpp"
#include "ortho.hpp"

namespace novpers {

/// A graded chain complex over a Novikov field whose chain groups carry
/// orthogonal bases with filtration values and whose differential respects
/// the filtration (non-increasing for Up, non-decreasing for Down).
template <class K>
class FloerComplex {
public:
    FloerComplex(Orient o, Group g) : orient_(o), group_(std::move(g)) {}

    Orient orient() const { return orient_; }
    const Group& group() const { return group_; }

    void set_space(int degree, std::vector<Rational> values)
    {
        if (!values.empty()) values_[degree] = std::move(values);
    }

    /// diff maps degree k to k-1; columns are images of the degree-k basis.
    void set_diff(int degree, NovMat<K> d)
    {
        if (d.rows() != dim(degree - 1) || d.cols() != dim(degree))
            throw std::invalid_argument("differential shape mismatch");
        diffs_[degree] = std::move(d);
    }

    std::size_t dim(int degree) const
    {
        auto it = values_.find(degree);
        return it == values_.end() ? 0 : it->second.size();
    }

    OrthoSpace<K> space(int degree) const
    {
        auto it = values_.find(degree);
        std::vector<Rational> vals = it == values_.end() ? std::vector<Rational>{} : it->second;
        return OrthoSpace<K>{orient_, group_, std::move(vals)};
    }

    NovMat<K> diff(int degree) const
    {
        auto it = diffs_.find(degree);
        if (it != diffs_.end()) return it->second;
        return NovMat<K>(dim(degree - 1), dim(degree), orient_);
    }

    int min_degree() const { return values_.empty() ? 0 : values_.begin()->first; }
    int max_degree() const { return values_.empty() ? 0 : values_.rbegin()->first; }
    bool empty() const { return values_.empty(); }

    /// Checks d.d = 0 and filtration monotonicity on basis vectors.
    void validate() const
    {
        for (const auto& [k, vals] : values_) {
            NovMat<K> dk = diff(k);
            OrthoSpace<K> below = space(k - 1);
            for (std::size_t j = 0; j < vals.size(); ++j) {
                ExtRat lvl = rho(below, dk.col(j));
                bool ok = orient_ == Orient::Up ? (lvl <= ExtRat(vals[j]))
                                                : (lvl >= ExtRat(vals[j]));
                if (!ok) throw std::invalid_argument("differential violates filtration");
            }
            if (dim(k - 2) > 0) {
                NovMat<K> sq = diff(k - 1) * dk;
                for (std::size_t i = 0; i < sq.rows(); ++i)
                    for (std::size_t j = 0; j < sq.cols(); ++j)
                        if (!sq.at(i, j).is_zero())
                            throw std::invalid_argument("differential does not square to zero");
            }
        }
    }

    /// Direct sum, with the summand's basis appended after ours.
    void append(const FloerComplex& other)
    {
        if (other.orient_ != orient_ || !(other.group_ == group_))
            throw std::invalid_argument("direct sum of incompatible complexes");
        if (other.empty()) return;
        if (empty()) {
            values_ = other.values_;
            diffs_ = other.diffs_;
            return;
        }
        std::map<int, NovMat<K>> new_diffs;
        int lo = std::min(min_degree(), other.min_degree());
        int hi = std::max(max_degree(), other.max_degree());
        for (int k = lo; k <= hi + 1; ++k) {
            std::size_t r = dim(k - 1) + other.dim(k - 1);
            std::size_t c = dim(k) + other.dim(k);
            if (r == 0 || c == 0) continue;
            NovMat<K> d(r, c, orient_);
            NovMat<K> a = diff(k), b = other.diff(k);
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) d.at(i, j) = a.at(i, j);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    d.at(dim(k - 1) + i, dim(k) + j) = b.at(i, j);
            new_diffs[k] = std::move(d);
        }
        for (const auto& [k, vals] : other.values_) {
            auto& mine = values_[k];
            mine.insert(mine.end(), vals.begin(), vals.end());
        }
        diffs_ = std::move(new_diffs);
    }

private:
    Orient orient_;
    Group group_;
    std::map<int, std::vector<Rational>> values_;
    std::map<int, NovMat<K>> diffs_;
};

/// Singular value decomposition of a Floer-type complex: per degree an
/// orthogonal splitting C_k = B_k + H_k + F_k with the differential pairing
/// the F-basis one degree up with the B-basis.
template <class K>
class SvdData {
public:
    struct Degree {
        // Orthogonal basis of ker(d_k), as coordinate vectors in C_k.
        std::vector<NovVec<K>> kernel_vecs;
        std::vector<Rational> kernel_values;
        // Pairing produced by d_{k+1}: y_i lives in C_{k+1}, its image x_i is
        // stored in kernel coordinates of degree k.
        std::vector<NovVec<K>> y_vecs;
        std::vector<Rational> y_values;
        std::vector<NovVec<K>> x_kcoords;
        std::vector<std::size_t> x_pivots;
        std::vector<Rational> x_values;
        // Homology part, in kernel coordinates of degree k.
        std::vector<NovVec<K>> h_kcoords;
        std::vector<std::size_t> h_pivots;
        std::vector<Rational> h_values;
    };

    explicit SvdData(const FloerComplex<K>& c) : complex_(&c) {}

    const FloerComplex<K>& complex() const { return *complex_; }
    std::map<int, Degree> degrees;

    const Degree* degree(int k) const
    {
        auto it = degrees.find(k);
        return it == degrees.end() ? nullptr : &it->second;
    }

    /// Kernel-coordinate vectors back to chain coordinates.
    NovVec<K> kernel_to_chain(int k, const NovVec<K>& v) const
    {
        const Degree& d = degrees.at(k);
        NovVec<K> out(complex_->dim(k), Novikov<K>::zero(complex_->orient()));
        for (std::size_t i = 0; i < d.kernel_vecs.size(); ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t r = 0; r < out.size(); ++r)
                out[r] += v[i] * d.kernel_vecs[i][r];
        }
        return out;
    }

    std::vector<NovVec<K>> h_basis_chain(int k) const
    {
        std::vector<NovVec<K>> out;
        if (const Degree* d = degree(k))
            for (const auto& h : d->h_kcoords) out.push_back(kernel_to_chain(k, h));
        return out;
    }

    Barcode verbose_barcode() const
    {
        Barcode bc;
        const Group& g = complex_->group();
        bool up = complex_->orient() == Orient::Up;
        for (const auto& [k, d] : degrees) {
            for (std::size_t i = 0; i < d.x_values.size(); ++i) {
                Bar bar;
                bar.degree = k;
                bar.kind = up ? BarKind::HalfUp : BarKind::HalfDown;
                if (up) {
                    bar.a = d.x_values[i];
                    bar.b = d.y_values[i];
                } else {
                    bar.a = d.y_values[i];
                    bar.b = d.x_values[i];
                }
                bc.add(bar, g);
            }
            for (std::size_t i = 0; i < d.h_values.size(); ++i) {
                Bar bar;
                bar.degree = k;
                bar.kind = up ? BarKind::InfUp : BarKind::InfDown;
                if (up)
                    bar.a = d.h_values[i];
                else
                    bar.b = d.h_values[i];
                bc.add(bar, g);
            }
        }
        return bc;
    }

    Barcode concise_barcode() const
    {
        Barcode bc;
        const Group& g = complex_->group();
        Barcode verbose = verbose_barcode();
        for (const auto& bar : verbose.bars())
            if (!((bar.kind == BarKind::HalfUp || bar.kind == BarKind::HalfDown) && bar.a == bar.b))
                bc.add(bar, g);
        return bc;
    }

private:
    const FloerComplex<K>* complex_;
};

/// Computes a singular value decomposition of the whole complex.  The pivot
/// rule picks, among all remaining entries, the one whose image level exceeds
/// its column level the most; `order` only permutes tie-breaking.
template <class K>
SvdData<K> svd_floer(const FloerComplex<K>& c, const PivotOrder& order = {})
{
    c.validate();
    SvdData<K> out(c);
    if (c.empty()) return out;
    bool up = c.orient() == Orient::Up;
    auto better = [&](const ExtRat& a, const ExtRat& b) { return up ? a > b : a < b; };

    int lo = c.min_degree(), hi = c.max_degree();
    // kernel data of the degree below the current one
    out.degrees[lo - 1] = {};
    for (int k = lo; k <= hi + 1; ++k) {
        auto& below = out.degrees[k - 1];
        auto& here = out.degrees[k];

        std::size_t n = c.dim(k);
        std::size_t m = below.kernel_vecs.size();
        OrthoSpace<K> ck = c.space(k);
        OrthoSpace<K> dspace{c.orient(), c.group(), below.kernel_values};

        // Express the differential in kernel coordinates of degree k-1.
        NovMat<K> kmat(c.dim(k - 1), m, c.orient());
        for (std::size_t j = 0; j < m; ++j) kmat.set_col(j, below.kernel_vecs[j]);
        std::optional<LinSolver<K>> solver;
        if (m > 0) solver.emplace(kmat);
        NovMat<K> dk = c.diff(k);
        std::vector<NovVec<K>> cols(n);
        for (std::size_t j = 0; j < n; ++j) {
            NovVec<K> image = dk.col(j);
            if (m == 0) {
                if (!vec_is_zero(image))
                    throw std::logic_error("differential image misses the kernel below");
                cols[j] = NovVec<K>{};
            } else {
                cols[j] = solver->solve(std::move(image));
            }
        }

        std::vector<NovVec<K>> ybasis;
        for (std::size_t j = 0; j < n; ++j) {
            NovVec<K> e(n, Novikov<K>::zero(c.orient()));
            e[j] = Novikov<K>::one(c.orient());
            ybasis.push_back(std::move(e));
        }

        std::vector<bool> row_active(m, true), col_active(n, true);
        while (true) {
            std::optional<std::pair<std::size_t, std::size_t>> pick;
            std::optional<ExtRat> pick_gain;
            for (std::size_t j = 0; j < n; ++j) {
                if (!col_active[j]) continue;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!row_active[i] || cols[j][i].is_zero()) continue;
                    ExtRat gain = ExtRat(dspace.values[i]) -
                                  cols[j][i].valuation(c.group()) - ExtRat(ck.values[j]);
                    bool take = !pick || better(gain, *pick_gain);
                    if (!take && gain == *pick_gain) {
                        auto [pi, pj] = *pick;
                        take = order.rank(i) < order.rank(pi) ||
                               (order.rank(i) == order.rank(pi) && order.rank(j) < order.rank(pj));
                    }
                    if (take) {
                        pick = {i, j};
                        pick_gain = gain;
                    }
                }
            }
            if (!pick) break;
            auto [i0, j0] = *pick;
            // record the pair
            below.y_vecs.push_back(ybasis[j0]);
            below.y_values.push_back(ck.values[j0]);
            below.x_kcoords.push_back(cols[j0]);
            below.x_pivots.push_back(i0);
            below.x_values.push_back(rho(dspace, cols[j0]).finite());
            // eliminate row i0 from the other active columns
            for (std::size_t j = 0; j < n; ++j) {
                if (!col_active[j] || j == j0 || cols[j][i0].is_zero()) continue;
                Novikov<K> f = cols[j][i0] / cols[j0][i0];
                cols[j] = vec_sub_scaled(cols[j], f, cols[j0]);
                ybasis[j] = vec_sub_scaled(ybasis[j], f, ybasis[j0]);
            }
            row_active[i0] = false;
            col_active[j0] = false;
        }

        // remaining active columns span the kernel of d_k
        for (std::size_t j = 0; j < n; ++j) {
            if (!col_active[j]) continue;
            if (!vec_is_zero(cols[j]))
                throw std::logic_error("nonzero column left after pairing");
            here.kernel_vecs.push_back(ybasis[j]);
            here.kernel_values.push_back(rho(ck, ybasis[j]).finite());
        }

        // homology part one degree down: extend the image family
        OrthFamily<K> fam(dspace);
        for (std::size_t i = 0; i < below.x_kcoords.size(); ++i)
            fam.append_with_pivot(below.x_kcoords[i], below.x_pivots[i]);
        for (std::size_t i = 0; i < m; ++i) {
            NovVec<K> e(m, Novikov<K>::zero(c.orient()));
            e[i] = Novikov<K>::one(c.orient());
            auto red = fam.reduce(e);
            if (vec_is_zero(red.residual)) continue;
            fam.append_reduced(std::move(red.residual));
            below.h_kcoords.push_back(fam.vec(fam.size() - 1));
            below.h_pivots.push_back(fam.pivot(fam.size() - 1));
            below.h_values.push_back(rho(dspace, below.h_kcoords.back()).finite());
        }
    }
    return out;
}

/// The homology of a Floer-type complex in one degree, as an orthogonal
/// space of representing cycles together with a reduction map.
template <class K>
class HomologyOrtho {
public:
    HomologyOrtho(const SvdData<K>& svd, int degree)
        : orient_(svd.complex().orient()), group_(svd.complex().group())
    {
        const auto* d = svd.degree(degree);
        if (d == nullptr || d->kernel_vecs.empty()) {
            dspace_ = OrthoSpace<K>{orient_, group_, {}};
            return;
        }
        dspace_ = OrthoSpace<K>{orient_, group_, d->kernel_values};
        fam_.emplace(dspace_);
        n_boundary_ = d->x_kcoords.size();
        for (std::size_t i = 0; i < d->x_kcoords.size(); ++i)
            fam_->append_with_pivot(d->x_kcoords[i], d->x_pivots[i]);
        for (std::size_t i = 0; i < d->h_kcoords.size(); ++i) {
            fam_->append_with_pivot(d->h_kcoords[i], d->h_pivots[i]);
            values_.push_back(d->h_values[i]);
            cycles_.push_back(svd.kernel_to_chain(degree, d->h_kcoords[i]));
        }
        NovMat<K> kmat(svd.complex().dim(degree), d->kernel_vecs.size(), orient_);
        for (std::size_t j = 0; j < d->kernel_vecs.size(); ++j)
            kmat.set_col(j, d->kernel_vecs[j]);
        solver_ = std::make_shared<LinSolver<K>>(std::move(kmat));
    }

    std::size_t rank() const { return values_.size(); }

    /// Space of homology classes: the basis values realize the infimum of the
    /// chain filtration over representing cycles.
    OrthoSpace<K> space() const { return OrthoSpace<K>{orient_, group_, values_}; }

    /// A representing cycle for each basis class, in chain coordinates.
    const std::vector<NovVec<K>>& representatives() const { return cycles_; }

    /// Homology coordinates of an arbitrary cycle (chain coordinates in).
    NovVec<K> reduce_cycle(const NovVec<K>& z) const
    {
        if (rank() == 0 && !solver_) {
            if (!vec_is_zero(z)) throw std::invalid_argument("not a cycle of the zero space");
            return {};
        }
        NovVec<K> kc = solver_->solve(z);
        auto red = fam_->reduce(kc);
        if (!vec_is_zero(red.residual)) throw std::invalid_argument("not a cycle");
        NovVec<K> out(values_.size(), Novikov<K>::zero(orient_));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = red.coeffs[n_boundary_ + i];
        return out;
    }

private:
    Orient orient_;
    Group group_;
    OrthoSpace<K> dspace_;
    std::optional<OrthFamily<K>> fam_;
    std::shared_ptr<LinSolver<K>> solver_;
    std::size_t n_boundary_ = 0;
    std::vector<Rational> values_;
    std::vector<NovVec<K>> cycles_;
};

} // namespace novpers

#endif
