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

#ifndef NOVPERS_NOVIKOV_HPP
#define NOVPERS_NOVIKOV_HPP

#include <ostream>
#include <stdexcept>
#include <utility>

#include "group.hpp"

namespace novpers {

enum class Orient { Up, Down };

inline Orient flipped(Orient o) { return o == Orient::Up ? Orient::Down : Orient::Up; }

namespace detail {

/// Polynomial division a = q*b + r in K[x] with deg r < deg b, where the
/// group-ring elements are required to have nonnegative exponents.
template <class K>
std::pair<GroupRing<K>, GroupRing<K>> poly_divmod(GroupRing<K> a, const GroupRing<K>& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    GroupRing<K> q;
    long long db = b.max_mult();
    K lb = b.coeff(db);
    while (!a.is_zero() && a.max_mult() >= db) {
        long long shift = a.max_mult() - db;
        K c = a.coeff(a.max_mult()) / lb;
        q.set(shift, q.coeff(shift) + c);
        a -= b.shifted(shift) * GroupRing<K>(c);
    }
    return {q, a};
}

/// Monic gcd in K[x] (inputs may be any Laurent elements; they are shifted
/// to have exponent 0 as their least term first).
template <class K>
GroupRing<K> laurent_gcd(GroupRing<K> a, GroupRing<K> b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.min_mult());
    b = b.shifted(-b.min_mult());
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = b;
        if (!r.is_zero()) {
            r = r.shifted(-r.min_mult());
            // normalize leading coefficient to tame growth over Q
            K lead = r.coeff(r.max_mult());
            r = r * GroupRing<K>(field_traits<K>::inv(lead));
        }
        b = r;
    }
    return a;
}

} // namespace detail

/// Element of one of the two Novikov-field completions of the group ring,
/// stored exactly as a reduced fraction num/den of group-ring elements.  The
/// canonical form has den with least exponent 0 and least coefficient 1, and
/// gcd(num, den) = 1, so equality is structural.
template <class K>
class Novikov {
public:
    Novikov() : orient_(Orient::Up), num_(), den_(GroupRing<K>::one()) {}

    Novikov(Orient o, GroupRing<K> num, GroupRing<K> den)
        : orient_(o), num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw std::domain_error("Novikov: zero denominator");
        reduce();
    }

    static Novikov from_ring(Orient o, GroupRing<K> x)
    {
        return Novikov(o, std::move(x), GroupRing<K>::one());
    }
    static Novikov scalar(Orient o, const K& c) { return from_ring(o, GroupRing<K>(c)); }
    static Novikov zero(Orient o) { return from_ring(o, GroupRing<K>::zero()); }
    static Novikov one(Orient o) { return from_ring(o, GroupRing<K>::one()); }
    static Novikov monomial(Orient o, const K& c, long long m)
    {
        return from_ring(o, GroupRing<K>::monomial(c, m));
    }

    Orient orient() const { return orient_; }
    const GroupRing<K>& num() const { return num_; }
    const GroupRing<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True iff the element lies in the group ring itself.
    bool in_group_ring() const { return den_ == GroupRing<K>::one(); }

    const GroupRing<K>& as_group_ring() const
    {
        if (!in_group_ring()) throw std::logic_error("Novikov element not in group ring");
        return num_;
    }

    /// The valuation of the orientation: least exponent for Up, greatest for
    /// Down; +inf / -inf respectively on zero.
    ExtRat valuation(const Group& g) const
    {
        if (is_zero()) return orient_ == Orient::Up ? ExtRat::pos_inf() : ExtRat::neg_inf();
        if (orient_ == Orient::Up) return num_.val_up(g) - den_.val_up(g);
        return num_.val_down(g) - den_.val_down(g);
    }

    /// Valuation in multiplier units (rank-1; for rank-0 it is 0 on nonzero).
    long long valuation_mult() const
    {
        if (is_zero()) throw std::logic_error("valuation of zero");
        if (orient_ == Orient::Up) return num_.min_mult() - den_.min_mult();
        return num_.max_mult() - den_.max_mult();
    }

    Novikov conj() const
    {
        Novikov r;
        r.orient_ = flipped(orient_);
        r.num_ = num_.conj();
        r.den_ = den_.conj();
        r.reduce();
        return r;
    }

    friend Novikov operator+(const Novikov& a, const Novikov& b)
    {
        a.check_same(b);
        return Novikov(a.orient_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Novikov operator-(const Novikov& a, const Novikov& b)
    {
        a.check_same(b);
        return Novikov(a.orient_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Novikov operator*(const Novikov& a, const Novikov& b)
    {
        a.check_same(b);
        return Novikov(a.orient_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Novikov operator/(const Novikov& a, const Novikov& b)
    {
        a.check_same(b);
        if (b.is_zero()) throw std::domain_error("Novikov: division by zero");
        return Novikov(a.orient_, a.num_ * b.den_, a.den_ * b.num_);
    }
    Novikov operator-() const
    {
        Novikov r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Novikov& operator+=(const Novikov& o) { return *this = *this + o; }
    Novikov& operator-=(const Novikov& o) { return *this = *this - o; }
    Novikov& operator*=(const Novikov& o) { return *this = *this * o; }
    Novikov& operator/=(const Novikov& o) { return *this = *this / o; }

    friend bool operator==(const Novikov& a, const Novikov& b)
    {
        return a.orient_ == b.orient_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Novikov& a, const Novikov& b) { return !(a == b); }

    /// Terms of the canonical series expansion whose exponent multiplier lies
    /// in [lo, hi].  The expansion runs by increasing exponents for Up and
    /// decreasing for Down.
    GroupRing<K> series_window(long long lo, long long hi) const
    {
        if (lo > hi) throw std::invalid_argument("series_window: empty window");
        GroupRing<K> full = orient_ == Orient::Up ? expand_up_to(hi) : expand_down_to(lo);
        GroupRing<K> out;
        for (const auto& [m, c] : full.terms())
            if (m >= lo && m <= hi) out.set(m, c);
        return out;
    }

    /// Truncation to the group ring: for Up keeps the (finitely many) series
    /// terms with exponent multiplier <= bound, for Down those with exponent
    /// multiplier >= bound.  The discarded tail has valuation strictly beyond
    /// the bound.
    GroupRing<K> truncate_hat(long long bound) const
    {
        GroupRing<K> full =
            orient_ == Orient::Up ? expand_up_to(bound) : expand_down_to(bound);
        GroupRing<K> out;
        for (const auto& [m, c] : full.terms()) {
            if (orient_ == Orient::Up ? (m <= bound) : (m >= bound)) out.set(m, c);
        }
        return out;
    }

    /// Truncation with the bound given as a real number; exponents are kept
    /// while their lambda0-value stays on the near side of the bound.
    GroupRing<K> truncate_hat_value(const Rational& bound, const Group& g) const
    {
        if (is_zero()) return GroupRing<K>::zero();
        if (g.rank == 0) {
            bool keep = orient_ == Orient::Up ? (Rational(0) <= bound) : (Rational(0) >= bound);
            GroupRing<K> out;
            if (keep) out.set(0, num_.coeff(0) / den_.coeff(0));
            return out;
        }
        Integer m = orient_ == Orient::Up ? rational_floor(bound / g.lambda0)
                                          : rational_ceil(bound / g.lambda0);
        return truncate_hat(m.convert_to<long long>());
    }

    friend std::ostream& operator<<(std::ostream& os, const Novikov& a)
    {
        os << "(" << a.num_ << ")";
        if (!a.in_group_ring()) os << "/(" << a.den_ << ")";
        return os;
    }

private:
    void check_same(const Novikov& o) const
    {
        if (orient_ != o.orient_) throw std::logic_error("mixed Novikov orientations");
    }

    void reduce()
    {
        if (num_.is_zero()) {
            den_ = GroupRing<K>::one();
            return;
        }
        GroupRing<K> g = detail::laurent_gcd(num_, den_);
        if (!(g == GroupRing<K>::one())) {
            long long sn = num_.min_mult(), sd = den_.min_mult();
            auto [qn, rn] = detail::poly_divmod(num_.shifted(-sn), g);
            auto [qd, rd] = detail::poly_divmod(den_.shifted(-sd), g);
            if (!rn.is_zero() || !rd.is_zero()) throw std::logic_error("gcd does not divide");
            num_ = qn.shifted(sn);
            den_ = qd.shifted(sd);
        }
        // den gets least exponent 0 and least coefficient 1.
        long long s = den_.min_mult();
        K c = den_.coeff(s);
        den_ = den_.shifted(-s) * GroupRing<K>(field_traits<K>::inv(c));
        num_ = num_.shifted(-s) * GroupRing<K>(field_traits<K>::inv(c));
    }

    /// Series expansion by increasing exponents, complete through multiplier
    /// `hi` (may contain spurious higher terms, the caller filters).
    GroupRing<K> expand_up_to(long long hi) const
    {
        if (is_zero()) return GroupRing<K>::zero();
        long long mq = den_.min_mult();
        K c = den_.coeff(mq);
        K cinv = field_traits<K>::inv(c);
        // den = c*T^mq * (1 - r) with least exponent of r positive
        GroupRing<K> r = GroupRing<K>::one() - den_.shifted(-mq) * GroupRing<K>(cinv);
        GroupRing<K> base = num_.shifted(-mq) * GroupRing<K>(cinv);
        GroupRing<K> acc = base, out;
        while (!acc.is_zero() && acc.min_mult() <= hi) {
            for (const auto& [m, cc] : acc.terms())
                if (m <= hi) out.set(m, out.coeff(m) + cc);
            acc = acc * r;
        }
        return out;
    }

    GroupRing<K> expand_down_to(long long lo) const
    {
        if (is_zero()) return GroupRing<K>::zero();
        long long mq = den_.max_mult();
        K c = den_.coeff(mq);
        K cinv = field_traits<K>::inv(c);
        GroupRing<K> r = GroupRing<K>::one() - den_.shifted(-mq) * GroupRing<K>(cinv);
        GroupRing<K> base = num_.shifted(-mq) * GroupRing<K>(cinv);
        GroupRing<K> acc = base, out;
        while (!acc.is_zero() && acc.max_mult() >= lo) {
            for (const auto& [m, cc] : acc.terms())
                if (m >= lo) out.set(m, out.coeff(m) + cc);
            acc = acc * r;
        }
        return out;
    }

    Orient orient_;
    GroupRing<K> num_, den_;
};

} // namespace novpers

#endif
