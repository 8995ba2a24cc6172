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

#ifndef NOVPERS_SMITH_HPP
#define NOVPERS_SMITH_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "novikov.hpp"
#include "ortho.hpp"

namespace novpers {

/// Dense matrix over the group ring (Laurent polynomials for rank-1 groups,
/// plain scalars for the trivial group).
template <class K>
class LMat {
public:
    LMat() : rows_(0), cols_(0) {}
    LMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static LMat identity(std::size_t n)
    {
        LMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GroupRing<K>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GroupRing<K>& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GroupRing<K>& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<GroupRing<K>> col(std::size_t j) const
    {
        std::vector<GroupRing<K>> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    friend LMat operator*(const LMat& a, const LMat& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
        LMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    std::vector<GroupRing<K>> apply(const std::vector<GroupRing<K>>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
        std::vector<GroupRing<K>> r(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
        }
        return r;
    }

    LMat conj() const
    {
        LMat m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
        return m;
    }

    LMat transposed() const
    {
        LMat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    NovMat<K> to_nov(Orient o) const
    {
        NovMat<K> m(rows_, cols_, o);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(i, j) = Novikov<K>::from_ring(o, at(i, j));
        return m;
    }

    friend bool operator==(const LMat& a, const LMat& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GroupRing<K>> data_;
};

namespace detail {

/// Width of the exponent support; the Euclidean size used for elimination.
template <class K>
long long span_of(const GroupRing<K>& a)
{
    return a.max_mult() - a.min_mult();
}

/// Canonical associate: least exponent 0 and least coefficient 1.  Returns
/// the unit u with a == u * canonical(a).
template <class K>
std::pair<GroupRing<K>, GroupRing<K>> split_unit(const GroupRing<K>& a)
{
    long long s = a.min_mult();
    K c = a.coeff(s);
    GroupRing<K> canon = a.shifted(-s) * GroupRing<K>(field_traits<K>::inv(c));
    return {GroupRing<K>::monomial(c, s), canon};
}

/// Exact division in the group ring; throws if it does not divide.
template <class K>
GroupRing<K> exact_div(const GroupRing<K>& a, const GroupRing<K>& b)
{
    if (a.is_zero()) return a;
    long long sa = a.min_mult(), sb = b.min_mult();
    auto [q, r] = poly_divmod(a.shifted(-sa), b.shifted(-sb));
    if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
    return q.shifted(sa - sb);
}

template <class K>
bool divides(const GroupRing<K>& b, const GroupRing<K>& a)
{
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    auto [q, r] = poly_divmod(a.shifted(-a.min_mult()), b.shifted(-b.min_mult()));
    (void)q;
    return r.is_zero();
}

} // namespace detail

/// Smith normal form over the group ring: input = U * D * V with U, V
/// unimodular and D diagonal with a divisibility chain.  Requires the
/// translation group to have rank at most 1 (so the ring is a PID).
template <class K>
struct SnfResult {
    LMat<K> u, d, v;
    LMat<K> u_inv, v_inv;
    std::vector<GroupRing<K>> invariant_factors; // canonicalized, nonzero
    std::size_t rank = 0;

    /// kappa-dimension of the direct sum of the cyclic torsion factors.
    long long torsion_dim(const Group& g) const
    {
        long long total = 0;
        for (const auto& f : invariant_factors) {
            if (g.rank == 0) continue; // units only over a field
            total += detail::span_of(f);
        }
        return total;
    }
};

template <class K>
SnfResult<K> smith_normal_form(const LMat<K>& input, const PivotOrder& order = {})
{
    std::size_t r = input.rows(), c = input.cols();
    SnfResult<K> out;
    out.d = input;
    out.u = LMat<K>::identity(r);
    out.u_inv = LMat<K>::identity(r);
    out.v = LMat<K>::identity(c);
    out.v_inv = LMat<K>::identity(c);
    LMat<K>& m = out.d;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t t = 0; t < c; ++t) std::swap(m.at(i, t), m.at(j, t));
        for (std::size_t t = 0; t < r; ++t) std::swap(out.u.at(t, i), out.u.at(t, j));
        for (std::size_t t = 0; t < r; ++t) std::swap(out.u_inv.at(i, t), out.u_inv.at(j, t));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t t = 0; t < r; ++t) std::swap(m.at(t, i), m.at(t, j));
        for (std::size_t t = 0; t < c; ++t) std::swap(out.v.at(i, t), out.v.at(j, t));
        for (std::size_t t = 0; t < c; ++t) std::swap(out.v_inv.at(t, i), out.v_inv.at(t, j));
    };
    // row_i -= f * row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const GroupRing<K>& f) {
        if (f.is_zero()) return;
        for (std::size_t t = 0; t < c; ++t) m.at(i, t) -= f * m.at(j, t);
        for (std::size_t t = 0; t < r; ++t) out.u.at(t, j) += f * out.u.at(t, i);
        for (std::size_t t = 0; t < r; ++t) out.u_inv.at(i, t) -= f * out.u_inv.at(j, t);
    };
    // col_j -= f * col_i
    auto col_sub = [&](std::size_t j, std::size_t i, const GroupRing<K>& f) {
        if (f.is_zero()) return;
        for (std::size_t t = 0; t < r; ++t) m.at(t, j) -= f * m.at(t, i);
        for (std::size_t t = 0; t < c; ++t) out.v.at(i, t) += f * out.v.at(j, t);
        for (std::size_t t = 0; t < c; ++t) out.v_inv.at(t, j) -= f * out.v_inv.at(t, i);
    };
    auto scale_row = [&](std::size_t i, const GroupRing<K>& unit) {
        GroupRing<K> inv_unit = GroupRing<K>::monomial(
            field_traits<K>::inv(unit.coeff(unit.min_mult())), -unit.min_mult());
        for (std::size_t t = 0; t < c; ++t) m.at(i, t) *= unit;
        for (std::size_t t = 0; t < r; ++t) out.u.at(t, i) *= inv_unit;
        for (std::size_t t = 0; t < r; ++t) out.u_inv.at(i, t) *= unit;
    };

    std::size_t t = 0;
    std::size_t limit = std::min(r, c);
    while (t < limit) {
        // pick the smallest-span nonzero entry in the remaining block
        std::optional<std::pair<std::size_t, std::size_t>> pick;
        long long best_span = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (m.at(i, j).is_zero()) continue;
                long long s = detail::span_of(m.at(i, j));
                bool take = !pick || s < best_span;
                if (!take && s == best_span) {
                    auto [pi, pj] = *pick;
                    take = order.rank(i) < order.rank(pi) ||
                           (order.rank(i) == order.rank(pi) && order.rank(j) < order.rank(pj));
                }
                if (take) {
                    pick = {i, j};
                    best_span = s;
                }
            }
        if (!pick) break;
        swap_rows(t, pick->first);
        swap_cols(t, pick->second);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (m.at(i, t).is_zero()) continue;
                const auto& p = m.at(t, t);
                auto [qq, rr] = detail::poly_divmod(m.at(i, t).shifted(-m.at(i, t).min_mult()),
                                                    p.shifted(-p.min_mult()));
                GroupRing<K> f = qq.shifted(m.at(i, t).min_mult() - p.min_mult());
                row_sub(i, t, f);
                if (!m.at(i, t).is_zero()) {
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (m.at(t, j).is_zero()) continue;
                const auto& p = m.at(t, t);
                auto [qq, rr] = detail::poly_divmod(m.at(t, j).shifted(-m.at(t, j).min_mult()),
                                                    p.shifted(-p.min_mult()));
                GroupRing<K> f = qq.shifted(m.at(t, j).min_mult() - p.min_mult());
                col_sub(j, t, f);
                if (!m.at(t, j).is_zero()) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (std::size_t i = t + 1; i < r && !redo; ++i)
            for (std::size_t j = t + 1; j < c && !redo; ++j) {
                if (detail::divides(m.at(t, t), m.at(i, j))) continue;
                GroupRing<K> minus_one = -GroupRing<K>::one();
                row_sub(t, i, minus_one); // row_t += row_i
                redo = true;
            }
        if (redo) continue;
        ++t;
    }

    // canonicalize the diagonal by unit row scalings
    for (std::size_t i = 0; i < limit; ++i) {
        if (m.at(i, i).is_zero()) break;
        auto [unit, canon] = detail::split_unit(m.at(i, i));
        GroupRing<K> inv_unit = GroupRing<K>::monomial(
            field_traits<K>::inv(unit.coeff(unit.min_mult())), -unit.min_mult());
        scale_row(i, inv_unit);
        out.invariant_factors.push_back(canon);
        ++out.rank;
    }
    return out;
}

/// Basis of the kernel of a group-ring matrix (a free submodule).
template <class K>
std::vector<std::vector<GroupRing<K>>> lambda_kernel(const LMat<K>& mtx,
                                                     const SnfResult<K>& snf)
{
    std::vector<std::vector<GroupRing<K>>> ker;
    for (std::size_t j = snf.rank; j < mtx.cols(); ++j) ker.push_back(snf.v_inv.col(j));
    return ker;
}

} // namespace novpers

#endif
