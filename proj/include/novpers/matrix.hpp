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

#ifndef NOVPERS_MATRIX_HPP
#define NOVPERS_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "novikov.hpp"

namespace novpers {

/// Dense matrix with entries in a Novikov field, stored row-major.
template <class K>
class NovMat {
public:
    NovMat() : rows_(0), cols_(0) {}
    NovMat(std::size_t rows, std::size_t cols, Orient o)
        : rows_(rows), cols_(cols), orient_(o),
          data_(rows * cols, Novikov<K>::zero(o))
    {
    }

    static NovMat identity(std::size_t n, Orient o)
    {
        NovMat m(n, n, o);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Novikov<K>::one(o);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Orient orient() const { return orient_; }

    Novikov<K>& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Novikov<K>& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Novikov<K>> col(std::size_t j) const
    {
        std::vector<Novikov<K>> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    void set_col(std::size_t j, const std::vector<Novikov<K>>& c)
    {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
    }

    NovMat conj() const
    {
        NovMat m(rows_, cols_, flipped(orient_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
        return m;
    }

    NovMat transposed() const
    {
        NovMat m(cols_, rows_, orient_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend NovMat operator*(const NovMat& a, const NovMat& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
        NovMat r(a.rows_, b.cols_, a.orient_);
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

    std::vector<Novikov<K>> apply(const std::vector<Novikov<K>>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
        std::vector<Novikov<K>> r(rows_, Novikov<K>::zero(orient_));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, j).is_zero()) continue;
                r[i] += at(i, j) * v[j];
            }
        }
        return r;
    }

    friend bool operator==(const NovMat& a, const NovMat& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    Orient orient_ = Orient::Up;
    std::vector<Novikov<K>> data_;
};

template <class K>
Novikov<K> determinant(NovMat<K> m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    Novikov<K> det = Novikov<K>::one(m.orient());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Novikov<K>::zero(m.orient());
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Novikov<K> f = m.at(r, c) / m.at(c, c);
            for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

/// One-time Gaussian factorization of a matrix, reusable for many solves.
template <class K>
class LinSolver {
public:
    explicit LinSolver(NovMat<K> a) : a_(std::move(a))
    {
        std::size_t n = a_.rows(), m = a_.cols();
        std::size_t r = 0;
        for (std::size_t c = 0; c < m && r < n; ++c) {
            std::size_t piv = r;
            while (piv < n && a_.at(piv, c).is_zero()) ++piv;
            if (piv == n) continue;
            row_swaps_.push_back({r, piv});
            if (piv != r)
                for (std::size_t j = 0; j < m; ++j) std::swap(a_.at(piv, j), a_.at(r, j));
            std::vector<std::pair<std::size_t, Novikov<K>>> elims;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a_.at(i, c).is_zero()) continue;
                Novikov<K> f = a_.at(i, c) / a_.at(r, c);
                for (std::size_t j = c; j < m; ++j) a_.at(i, j) -= f * a_.at(r, j);
                elims.push_back({i, f});
            }
            elim_steps_.push_back(std::move(elims));
            pivot_cols_.push_back(c);
            ++r;
        }
        rank_ = r;
    }

    std::size_t rank() const { return rank_; }

    /// Solves A x = b; throws if inconsistent.  Free coordinates are set to 0.
    std::vector<Novikov<K>> solve(std::vector<Novikov<K>> b) const
    {
        std::size_t n = a_.rows(), m = a_.cols();
        if (b.size() != n) throw std::invalid_argument("solve shape");
        for (std::size_t r = 0; r < rank_; ++r) {
            std::swap(b[row_swaps_[r].first], b[row_swaps_[r].second]);
            for (const auto& [i, f] : elim_steps_[r]) b[i] -= f * b[row_swaps_[r].first];
        }
        for (std::size_t i = rank_; i < n; ++i)
            if (!b[i].is_zero()) throw std::logic_error("inconsistent linear system");
        std::vector<Novikov<K>> x(m, Novikov<K>::zero(a_.orient()));
        for (std::size_t r = rank_; r-- > 0;) {
            std::size_t c = pivot_cols_[r];
            Novikov<K> acc = b[r];
            for (std::size_t j = c + 1; j < m; ++j)
                if (!a_.at(r, j).is_zero() && !x[j].is_zero()) acc -= a_.at(r, j) * x[j];
            x[c] = acc / a_.at(r, c);
        }
        return x;
    }

private:
    NovMat<K> a_;
    std::size_t rank_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> row_swaps_;
    std::vector<std::vector<std::pair<std::size_t, Novikov<K>>>> elim_steps_;
    std::vector<std::size_t> pivot_cols_;
};

template <class K>
NovMat<K> inverse(const NovMat<K>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    LinSolver<K> solver(a);
    if (solver.rank() != a.rows()) throw std::domain_error("singular matrix");
    NovMat<K> inv(a.rows(), a.cols(), a.orient());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<Novikov<K>> e(a.rows(), Novikov<K>::zero(a.orient()));
        e[j] = Novikov<K>::one(a.orient());
        inv.set_col(j, solver.solve(std::move(e)));
    }
    return inv;
}

} // namespace novpers

#endif
