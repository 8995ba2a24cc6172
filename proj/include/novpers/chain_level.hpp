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

#ifndef NOVPERS_CHAIN_LEVEL_HPP
#define NOVPERS_CHAIN_LEVEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "floer.hpp"
#include "matched_pair.hpp"
#include "smith.hpp"

namespace novpers {

/// A chain complex of free modules over the group ring together with an
/// ascending and a descending Floer-type complex and chain maps into both
/// that become equivalences over the Novikov fields.
template <class K>
class ChainLevelFMP {
public:
    ChainLevelFMP(Group g)
        : group_(std::move(g)), up_(Orient::Up, group_), down_(Orient::Down, group_)
    {
    }

    const Group& group() const { return group_; }
    FloerComplex<K>& up() { return up_; }
    const FloerComplex<K>& up() const { return up_; }
    FloerComplex<K>& down() { return down_; }
    const FloerComplex<K>& down() const { return down_; }

    void set_dim(int degree, std::size_t d)
    {
        if (d > 0) dims_[degree] = d;
    }
    std::size_t dim(int degree) const
    {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    void set_diff(int degree, LMat<K> d)
    {
        if (d.rows() != dim(degree - 1) || d.cols() != dim(degree))
            throw std::invalid_argument("chain differential shape mismatch");
        diffs_[degree] = std::move(d);
    }
    LMat<K> diff(int degree) const
    {
        auto it = diffs_.find(degree);
        if (it != diffs_.end()) return it->second;
        return LMat<K>(dim(degree - 1), dim(degree));
    }

    void set_up_map(int degree, NovMat<K> m)
    {
        if (m.rows() != up_.dim(degree) || m.cols() != dim(degree))
            throw std::invalid_argument("ascending map shape mismatch");
        up_maps_[degree] = std::move(m);
    }
    void set_down_map(int degree, NovMat<K> m)
    {
        if (m.rows() != down_.dim(degree) || m.cols() != dim(degree))
            throw std::invalid_argument("descending map shape mismatch");
        down_maps_[degree] = std::move(m);
    }
    NovMat<K> up_map(int degree) const
    {
        auto it = up_maps_.find(degree);
        if (it != up_maps_.end()) return it->second;
        return NovMat<K>(up_.dim(degree), dim(degree), Orient::Up);
    }
    NovMat<K> down_map(int degree) const
    {
        auto it = down_maps_.find(degree);
        if (it != down_maps_.end()) return it->second;
        return NovMat<K>(down_.dim(degree), dim(degree), Orient::Down);
    }

    /// True when every chain map sends each module basis vector to a
    /// distinct side basis vector (the coefficient-extension identity on
    /// bases, up to direct summands).  Such pairs admit the direct
    /// mapping-cone evaluation, with the transposed maps as inverses.
    bool strict() const
    {
        int lo = min_degree(), hi = max_degree();
        for (int k = lo; k <= hi; ++k) {
            if (!map_is_basis_injection(up_map(k))) return false;
            if (!map_is_basis_injection(down_map(k))) return false;
        }
        return true;
    }

    int min_degree() const
    {
        int lo = dims_.empty() ? 0 : dims_.begin()->first;
        if (!up_.empty()) lo = std::min(lo, up_.min_degree());
        if (!down_.empty()) lo = std::min(lo, down_.min_degree());
        return lo;
    }
    int max_degree() const
    {
        int hi = dims_.empty() ? 0 : dims_.rbegin()->first;
        if (!up_.empty()) hi = std::max(hi, up_.max_degree());
        if (!down_.empty()) hi = std::max(hi, down_.max_degree());
        return hi;
    }

    void validate() const
    {
        up_.validate();
        down_.validate();
        for (const auto& [k, d] : diffs_) {
            if (dim(k - 2) > 0) {
                LMat<K> sq = diff(k - 1) * d;
                for (std::size_t i = 0; i < sq.rows(); ++i)
                    for (std::size_t j = 0; j < sq.cols(); ++j)
                        if (!sq.at(i, j).is_zero())
                            throw std::invalid_argument("chain differential does not square to zero");
            }
        }
        // chain map conditions
        for (const auto& [k, d] : dims_) {
            (void)d;
            NovMat<K> lhs_up = up_.diff(k) * up_map(k);
            NovMat<K> rhs_up = up_map(k - 1) * diff(k).to_nov(Orient::Up);
            if (!(lhs_up == rhs_up)) throw std::invalid_argument("ascending map is not a chain map");
            NovMat<K> lhs_down = down_.diff(k) * down_map(k);
            NovMat<K> rhs_down = down_map(k - 1) * diff(k).to_nov(Orient::Down);
            if (!(lhs_down == rhs_down))
                throw std::invalid_argument("descending map is not a chain map");
        }
    }

    /// Direct sum.
    void append(const ChainLevelFMP& other)
    {
        if (!(other.group_ == group_)) throw std::invalid_argument("direct sum group mismatch");
        int lo = std::min(min_degree(), other.min_degree());
        int hi = std::max(max_degree(), other.max_degree());
        std::map<int, LMat<K>> new_diffs;
        std::map<int, NovMat<K>> new_ups, new_downs;
        for (int k = lo; k <= hi + 1; ++k) {
            std::size_t r = dim(k - 1) + other.dim(k - 1);
            std::size_t cc = dim(k) + other.dim(k);
            if (r > 0 && cc > 0) {
                LMat<K> d(r, cc);
                LMat<K> a = diff(k), b = other.diff(k);
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) d.at(i, j) = a.at(i, j);
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        d.at(dim(k - 1) + i, dim(k) + j) = b.at(i, j);
                new_diffs[k] = std::move(d);
            }
            std::size_t ur = up_.dim(k) + other.up_.dim(k);
            std::size_t uc = dim(k) + other.dim(k);
            if (ur > 0 && uc > 0) {
                NovMat<K> m(ur, uc, Orient::Up);
                NovMat<K> a = up_map(k), b = other.up_map(k);
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        m.at(up_.dim(k) + i, dim(k) + j) = b.at(i, j);
                new_ups[k] = std::move(m);
            }
            std::size_t dr = down_.dim(k) + other.down_.dim(k);
            if (dr > 0 && uc > 0) {
                NovMat<K> m(dr, uc, Orient::Down);
                NovMat<K> a = down_map(k), b = other.down_map(k);
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        m.at(down_.dim(k) + i, dim(k) + j) = b.at(i, j);
                new_downs[k] = std::move(m);
            }
        }
        for (const auto& [k, d] : other.dims_) dims_[k] += d;
        up_.append(other.up_);
        down_.append(other.down_);
        diffs_ = std::move(new_diffs);
        up_maps_ = std::move(new_ups);
        down_maps_ = std::move(new_downs);
    }

private:
    template <class M>
    static bool map_is_basis_injection(const M& m)
    {
        std::vector<bool> used(m.rows(), false);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::size_t hits = 0, row = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                const auto& e = m.at(i, j);
                if (e.is_zero()) continue;
                if (!(e == Novikov<K>::one(m.orient()))) return false;
                ++hits;
                row = i;
            }
            if (hits != 1 || used[row]) return false;
            used[row] = true;
        }
        return true;
    }

    Group group_;
    std::map<int, std::size_t> dims_;
    std::map<int, LMat<K>> diffs_;
    FloerComplex<K> up_, down_;
    std::map<int, NovMat<K>> up_maps_, down_maps_;
};

// ---------------------------------------------------------------------------
// building blocks

/// Two-term elementary complex dy = x on the ascending side only.
template <class K>
ChainLevelFMP<K> make_pe_up(const Group& g, const Rational& a, const Rational& len, int k)
{
    if (len < 0) throw std::invalid_argument("length must be nonnegative");
    ChainLevelFMP<K> cp(g);
    cp.up().set_space(k, {a});
    cp.up().set_space(k + 1, {a + len});
    NovMat<K> d(1, 1, Orient::Up);
    d.at(0, 0) = Novikov<K>::one(Orient::Up);
    cp.up().set_diff(k + 1, d);
    return cp;
}

/// Two-term elementary complex on the descending side only.
template <class K>
ChainLevelFMP<K> make_pe_down(const Group& g, const Rational& b, const Rational& len, int k)
{
    if (len < 0) throw std::invalid_argument("length must be nonnegative");
    ChainLevelFMP<K> cp(g);
    cp.down().set_space(k, {b});
    cp.down().set_space(k + 1, {b - len});
    NovMat<K> d(1, 1, Orient::Down);
    d.at(0, 0) = Novikov<K>::one(Orient::Down);
    cp.down().set_diff(k + 1, d);
    return cp;
}

/// Rank-one module matched into both sides by the coefficient-extension
/// inclusions, with levels a (ascending) and b (descending).
template <class K>
ChainLevelFMP<K> make_pm(const Group& g, const Rational& a, const Rational& b, int k)
{
    ChainLevelFMP<K> cp(g);
    cp.set_dim(k, 1);
    cp.up().set_space(k, {a});
    cp.down().set_space(k, {b});
    NovMat<K> up(1, 1, Orient::Up);
    up.at(0, 0) = Novikov<K>::one(Orient::Up);
    cp.set_up_map(k, up);
    NovMat<K> down(1, 1, Orient::Down);
    down.at(0, 0) = Novikov<K>::one(Orient::Down);
    cp.set_down_map(k, down);
    return cp;
}

/// Torsion block: a two-term free resolution of the direct sum of the cyclic
/// modules cut out by the given factors, concentrated at degrees k, k+1.
template <class K>
ChainLevelFMP<K> make_pr(const Group& g, const std::vector<GroupRing<K>>& factors, int k)
{
    for (const auto& f : factors) {
        if (f.is_zero()) throw std::invalid_argument("torsion factor must be nonzero");
        if (g.rank == 0 || f.is_monomial())
            throw std::invalid_argument("torsion factor must not be a unit");
    }
    ChainLevelFMP<K> cp(g);
    std::size_t n = factors.size();
    cp.set_dim(k, n);
    cp.set_dim(k + 1, n);
    LMat<K> d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = factors[i];
    cp.set_diff(k + 1, d);
    return cp;
}

// ---------------------------------------------------------------------------
// homology over the group ring

template <class K>
struct LambdaHomology {
    std::vector<std::vector<GroupRing<K>>> free_gens; // chain coordinates
    std::vector<GroupRing<K>> torsion_factors;        // canonical non-unit factors
    long long torsion_dim = 0;

    std::size_t free_rank() const { return free_gens.size(); }
};

template <class K>
LambdaHomology<K> lambda_homology(const ChainLevelFMP<K>& cp, int k)
{
    LambdaHomology<K> out;
    std::size_t n = cp.dim(k);
    if (n == 0) return out;
    const Group& g = cp.group();

    // kernel of the outgoing differential
    LMat<K> dk = cp.diff(k);
    auto snf_k = smith_normal_form(dk);
    std::size_t s = n - snf_k.rank;
    std::vector<std::vector<GroupRing<K>>> kernel;
    for (std::size_t j = snf_k.rank; j < n; ++j) kernel.push_back(snf_k.v_inv.col(j));

    // incoming differential expressed in kernel coordinates: (V x) tail
    LMat<K> dk1 = cp.diff(k + 1);
    LMat<K> incoming(s, dk1.cols());
    for (std::size_t j = 0; j < dk1.cols(); ++j) {
        auto vx = snf_k.v.apply(dk1.col(j));
        for (std::size_t i = 0; i < snf_k.rank; ++i)
            if (!vx[i].is_zero()) throw std::logic_error("image is not inside the kernel");
        for (std::size_t i = 0; i < s; ++i) incoming.at(i, j) = vx[snf_k.rank + i];
    }
    auto snf_n = smith_normal_form(incoming);

    // free generators: the kernel combinations given by the tail columns of U
    for (std::size_t j = snf_n.rank; j < s; ++j) {
        auto coeffs = snf_n.u.col(j);
        std::vector<GroupRing<K>> gen(n);
        for (std::size_t i = 0; i < s; ++i) {
            if (coeffs[i].is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) gen[r] += coeffs[i] * kernel[i][r];
        }
        out.free_gens.push_back(std::move(gen));
    }
    for (const auto& f : snf_n.invariant_factors) {
        bool unit = g.rank == 0 ? true : f.is_monomial();
        if (unit) continue;
        out.torsion_factors.push_back(f);
        out.torsion_dim += detail::span_of(f);
    }
    return out;
}

// ---------------------------------------------------------------------------
// passing to homology and the decomposition

/// Per-degree analysis of a chain-level pair: the homology matched pair, its
/// spectrum, the torsion dimension, and the concise barcodes of both sides.
template <class K>
class ChainAnalysis {
public:
    explicit ChainAnalysis(const ChainLevelFMP<K>& cp, const PivotOrder& order = {})
        : cp_(&cp), up_svd_(svd_floer(cp.up(), order)), down_svd_(svd_floer(cp.down(), order))
    {
        cp.validate();
        int lo = cp.min_degree(), hi = cp.max_degree();
        for (int k = lo; k <= hi; ++k) {
            LambdaHomology<K> lam = lambda_homology(cp, k);
            HomologyOrtho<K> hup(up_svd_, k);
            HomologyOrtho<K> hdown(down_svd_, k);
            if (hup.rank() != lam.free_rank() || hdown.rank() != lam.free_rank())
                throw std::invalid_argument("maps are not equivalences over the Novikov fields");
            torsion_[k] = lam.torsion_dim;
            if (lam.free_rank() == 0) {
                spectra_[k] = {};
                continue;
            }
            MatchedPair<K> pair;
            pair.up_space = hup.space();
            pair.down_space = hdown.space();
            pair.torsion_dim = lam.torsion_dim;
            std::size_t d = lam.free_rank();
            pair.up_map = NovMat<K>(d, d, Orient::Up);
            pair.down_map = NovMat<K>(d, d, Orient::Down);
            NovMat<K> phi_up = cp.up_map(k), phi_down = cp.down_map(k);
            for (std::size_t j = 0; j < d; ++j) {
                NovVec<K> gen_up(cp.dim(k), Novikov<K>::zero(Orient::Up));
                NovVec<K> gen_down(cp.dim(k), Novikov<K>::zero(Orient::Down));
                for (std::size_t i = 0; i < cp.dim(k); ++i) {
                    gen_up[i] = Novikov<K>::from_ring(Orient::Up, lam.free_gens[j][i]);
                    gen_down[i] = Novikov<K>::from_ring(Orient::Down, lam.free_gens[j][i]);
                }
                pair.up_map.set_col(j, hup.reduce_cycle(phi_up.apply(gen_up)));
                pair.down_map.set_col(j, hdown.reduce_cycle(phi_down.apply(gen_down)));
            }
            pair.validate(); // throws "degenerate pair" if not a quasi-isomorphism
            spectra_[k] = basis_spectrum(pair, order);
            pairs_.emplace(k, std::move(pair));
        }
    }

    const ChainLevelFMP<K>& chain() const { return *cp_; }
    const SvdData<K>& up_svd() const { return up_svd_; }
    const SvdData<K>& down_svd() const { return down_svd_; }

    const std::map<int, long long>& torsion() const { return torsion_; }
    long long torsion_at(int k) const
    {
        auto it = torsion_.find(k);
        return it == torsion_.end() ? 0 : it->second;
    }
    Spectrum spectrum(int k) const
    {
        auto it = spectra_.find(k);
        return it == spectra_.end() ? Spectrum{} : it->second;
    }
    const MatchedPair<K>* pair(int k) const
    {
        auto it = pairs_.find(k);
        return it == pairs_.end() ? nullptr : &it->second;
    }

private:
    const ChainLevelFMP<K>* cp_;
    SvdData<K> up_svd_, down_svd_;
    std::map<int, long long> torsion_;
    std::map<int, Spectrum> spectra_;
    std::map<int, MatchedPair<K>> pairs_;
};

/// The homology matched pair in one degree (plus the torsion dimension tag).
template <class K>
MatchedPair<K> homology_fmp(const ChainLevelFMP<K>& cp, int k)
{
    ChainAnalysis<K> an(cp);
    const MatchedPair<K>* p = an.pair(k);
    if (p != nullptr) return *p;
    MatchedPair<K> empty;
    empty.up_space = OrthoSpace<K>::up(cp.group(), {});
    empty.down_space = OrthoSpace<K>::down(cp.group(), {});
    empty.up_map = NovMat<K>(0, 0, Orient::Up);
    empty.down_map = NovMat<K>(0, 0, Orient::Down);
    empty.torsion_dim = an.torsion_at(k);
    return empty;
}

/// One summand of the block decomposition.  The essential kinds remember the
/// degree of the originating spectrum element so that both of their regions
/// can be evaluated.
struct BlockSummand {
    enum class Kind { Torsion, FinUp, FinDown, EssClosed, EssOpen };
    Kind kind;
    int degree = 0;        // display degree of the associated interval
    int origin_degree = 0; // spectrum degree for essential kinds
    Rational a = 0, b = 0; // interval data [a,b), (a,b], [a,b], (b,a)
    long long count = 1;   // multiplicity (torsion dimension for Torsion)

    friend bool operator==(const BlockSummand& x, const BlockSummand& y)
    {
        return std::tie(x.kind, x.degree, x.origin_degree, x.a, x.b, x.count) ==
               std::tie(y.kind, y.degree, y.origin_degree, y.a, y.b, y.count);
    }
    friend bool operator<(const BlockSummand& x, const BlockSummand& y)
    {
        auto ki = static_cast<int>(x.kind), kj = static_cast<int>(y.kind);
        return std::tie(ki, x.degree, x.origin_degree, x.a, x.b, x.count) <
               std::tie(kj, y.degree, y.origin_degree, y.a, y.b, y.count);
    }
};

template <class K>
std::vector<BlockSummand> block_decomposition(const ChainAnalysis<K>& an)
{
    const Group& g = an.chain().group();
    std::vector<BlockSummand> out;
    for (const auto& [k, dimt] : an.torsion())
        if (dimt > 0)
            out.push_back(BlockSummand{BlockSummand::Kind::Torsion, k, k, Rational(0), Rational(0), dimt});

    Barcode up_bars = an.up_svd().concise_barcode();
    for (const auto& bar : up_bars.bars())
        if (bar.kind == BarKind::HalfUp)
            out.push_back(BlockSummand{BlockSummand::Kind::FinUp, bar.degree, bar.degree, bar.a, bar.b, 1});
    Barcode down_bars = an.down_svd().concise_barcode();
    for (const auto& bar : down_bars.bars())
        if (bar.kind == BarKind::HalfDown)
            out.push_back(BlockSummand{BlockSummand::Kind::FinDown, bar.degree, bar.degree, bar.a, bar.b, 1});

    int lo = an.chain().min_degree(), hi = an.chain().max_degree();
    for (int k = lo; k <= hi; ++k) {
        for (const auto& e : an.spectrum(k)) {
            auto [rep, mult] = g.normalize(e.a);
            (void)mult;
            Rational a = rep, b = rep + e.ell;
            if (e.ell >= 0)
                out.push_back(BlockSummand{BlockSummand::Kind::EssClosed, k, k, a, b, 1});
            else
                out.push_back(BlockSummand{BlockSummand::Kind::EssOpen, k - 1, k, a, b, 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class K>
std::vector<BlockSummand> block_decomposition(const ChainLevelFMP<K>& cp)
{
    return block_decomposition(ChainAnalysis<K>(cp));
}

/// Full barcode plus the separately reported torsion dimensions.
struct FullBarcode {
    Barcode bars;
    std::map<int, long long> torsion;
};

template <class K>
FullBarcode full_barcode(const ChainAnalysis<K>& an)
{
    const Group& g = an.chain().group();
    FullBarcode out;
    for (const auto& s : block_decomposition(an)) {
        switch (s.kind) {
        case BlockSummand::Kind::Torsion: out.torsion[s.degree] += s.count; break;
        case BlockSummand::Kind::FinUp:
            out.bars.add(Bar{s.degree, BarKind::HalfUp, s.a, s.b}, g);
            break;
        case BlockSummand::Kind::FinDown:
            out.bars.add(Bar{s.degree, BarKind::HalfDown, s.a, s.b}, g);
            break;
        case BlockSummand::Kind::EssClosed:
            out.bars.add(Bar{s.degree, BarKind::Closed, s.a, s.b}, g);
            break;
        case BlockSummand::Kind::EssOpen:
            out.bars.add(Bar{s.degree, BarKind::Open, s.b, s.a}, g);
            break;
        }
    }
    return out;
}

template <class K>
FullBarcode full_barcode(const ChainLevelFMP<K>& cp)
{
    return full_barcode(ChainAnalysis<K>(cp));
}

/// Dimension of the two-parameter persistence module at (s, t), evaluated
/// from the block decomposition.
inline long long hk_dim(const std::vector<BlockSummand>& blocks, const Group& g, int k,
                        const Rational& s, const Rational& t)
{
    long long total = 0;
    for (const auto& blk : blocks) {
        switch (blk.kind) {
        case BlockSummand::Kind::Torsion:
            if (blk.degree == k) total += blk.count;
            break;
        case BlockSummand::Kind::FinUp:
            if (blk.degree == k)
                total += g.count_in_interval(blk.a - t, blk.b - t, false, true);
            break;
        case BlockSummand::Kind::FinDown:
            if (blk.degree == k)
                total += g.count_in_interval(-blk.b - s, -blk.a - s, false, true);
            break;
        case BlockSummand::Kind::EssClosed:
        case BlockSummand::Kind::EssOpen:
            if (blk.origin_degree == k)
                total += g.count_in_interval(blk.a - t, s + blk.b, false, false);
            if (blk.origin_degree - 1 == k)
                total += g.count_in_interval(s + blk.b, blk.a - t, true, true);
            break;
        }
    }
    return total;
}

/// Rank of the structure map between two comparable parameter pairs.
inline long long hk_rank(const std::vector<BlockSummand>& blocks, const Group& g, int k,
                         const Rational& s, const Rational& t, const Rational& s2,
                         const Rational& t2)
{
    if (s2 < s || t2 < t) throw std::invalid_argument("parameters are not comparable");
    long long total = 0;
    for (const auto& blk : blocks) {
        switch (blk.kind) {
        case BlockSummand::Kind::Torsion:
            if (blk.degree == k) total += blk.count;
            break;
        case BlockSummand::Kind::FinUp:
            if (blk.degree == k)
                total += g.count_in_interval(blk.a - t, blk.b - t2, false, true);
            break;
        case BlockSummand::Kind::FinDown:
            if (blk.degree == k)
                total += g.count_in_interval(-blk.b - s, -blk.a - s2, false, true);
            break;
        case BlockSummand::Kind::EssClosed:
        case BlockSummand::Kind::EssOpen:
            if (blk.origin_degree == k)
                total += g.count_in_interval(blk.a - t, s + blk.b, false, false);
            if (blk.origin_degree - 1 == k)
                total += g.count_in_interval(s2 + blk.b, blk.a - t2, true, true);
            break;
        }
    }
    return total;
}

template <class K>
long long hk_dim(const ChainLevelFMP<K>& cp, int k, const Rational& s, const Rational& t)
{
    return hk_dim(block_decomposition(cp), cp.group(), k, s, t);
}

// ---------------------------------------------------------------------------
// direct mapping-cone evaluation over the trivial group

/// Dimension of the degree-(k+1) homology of the cone of the difference map
/// restricted to the (s,t)-filtered part.  Requires the trivial group and a
/// strict pair (the homotopy inverses are identity-like or zero).
template <class K>
long long hk_cone_direct(const ChainLevelFMP<K>& cp, int k, const Rational& s, const Rational& t)
{
    if (cp.group().rank != 0) throw std::invalid_argument("cone evaluation needs the trivial group");
    if (!cp.strict()) throw std::invalid_argument("cone evaluation needs a strict pair");

    // psi is the transpose of the basis injection: side basis vectors in the
    // image go back to their chain basis vectors, the rest go to zero
    auto psi_target = [&](int degree, bool up_side, std::size_t row) -> std::optional<std::size_t> {
        auto m = up_side ? cp.up_map(degree) : cp.down_map(degree);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) return j;
        return std::nullopt;
    };

    // index sets of the filtered subcomplex in each degree
    auto down_keep = [&](int degree) {
        std::vector<std::size_t> keep;
        auto sp = cp.down().space(degree);
        for (std::size_t i = 0; i < sp.dim(); ++i)
            if (sp.values[i] >= -s) keep.push_back(i);
        return keep;
    };
    auto up_keep = [&](int degree) {
        std::vector<std::size_t> keep;
        auto sp = cp.up().space(degree);
        for (std::size_t i = 0; i < sp.dim(); ++i)
            if (sp.values[i] <= t) keep.push_back(i);
        return keep;
    };

    // cone chain groups: A_{i-1} + C_i with A = filtered (down + up)
    auto cone_dim = [&](int i) {
        return down_keep(i - 1).size() + up_keep(i - 1).size() + cp.dim(i);
    };

    // cone differential from degree i to i-1 as a field matrix
    auto cone_matrix = [&](int i) {
        std::vector<std::size_t> dk = down_keep(i - 1), uk = up_keep(i - 1);
        std::vector<std::size_t> dk1 = down_keep(i - 2), uk1 = up_keep(i - 2);
        std::size_t rows = dk1.size() + uk1.size() + cp.dim(i - 1);
        std::size_t cols = dk.size() + uk.size() + cp.dim(i);
        NovMat<K> m(rows, cols, Orient::Up);
        auto scalar = [&](const Novikov<K>& x) {
            if (x.is_zero()) return Novikov<K>::zero(Orient::Up);
            return Novikov<K>::scalar(Orient::Up, x.num().coeff(0) / x.den().coeff(0));
        };
        NovMat<K> ddown = cp.down().diff(i - 1);
        for (std::size_t cj = 0; cj < dk.size(); ++cj)
            for (std::size_t ri = 0; ri < dk1.size(); ++ri)
                m.at(ri, cj) = -scalar(ddown.at(dk1[ri], dk[cj]));
        NovMat<K> dup = cp.up().diff(i - 1);
        for (std::size_t cj = 0; cj < uk.size(); ++cj)
            for (std::size_t ri = 0; ri < uk1.size(); ++ri)
                m.at(dk1.size() + ri, dk.size() + cj) = -scalar(dup.at(uk1[ri], uk[cj]));
        // the difference map -psi_down + psi_up into the chain part
        for (std::size_t cj = 0; cj < dk.size(); ++cj)
            if (auto tgt = psi_target(i - 1, false, dk[cj]))
                m.at(dk1.size() + uk1.size() + *tgt, cj) = -Novikov<K>::one(Orient::Up);
        for (std::size_t cj = 0; cj < uk.size(); ++cj)
            if (auto tgt = psi_target(i - 1, true, uk[cj]))
                m.at(dk1.size() + uk1.size() + *tgt, dk.size() + cj) =
                    Novikov<K>::one(Orient::Up);
        // chain differential on the C part
        LMat<K> dc = cp.diff(i);
        for (std::size_t cj = 0; cj < dc.cols(); ++cj)
            for (std::size_t ri = 0; ri < dc.rows(); ++ri)
                m.at(dk1.size() + uk1.size() + ri, dk.size() + uk.size() + cj) =
                    Novikov<K>::from_ring(Orient::Up, dc.at(ri, cj));
        return m;
    };

    long long dim_here = static_cast<long long>(cone_dim(k + 1));
    long long rank_out = static_cast<long long>(LinSolver<K>(cone_matrix(k + 1)).rank());
    long long rank_in = static_cast<long long>(LinSolver<K>(cone_matrix(k + 2)).rank());
    return dim_here - rank_out - rank_in;
}

} // namespace novpers

#endif
