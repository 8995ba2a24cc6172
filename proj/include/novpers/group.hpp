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

#ifndef NOVPERS_GROUP_HPP
#define NOVPERS_GROUP_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "rational.hpp"

namespace novpers {

/// The translation group: either trivial, or the infinite cyclic group
/// lambda0 * Z with lambda0 > 0.  Group elements are stored everywhere as
/// integer multiples of lambda0.
struct Group {
    int rank = 0;             // 0 or 1
    Rational lambda0 = 1;     // positive; meaningful only when rank == 1

    static Group trivial() { return Group{0, Rational(1)}; }
    static Group cyclic(Rational l0)
    {
        if (l0 <= 0) throw std::invalid_argument("group generator must be positive");
        return Group{1, std::move(l0)};
    }

    bool is_trivial() const { return rank == 0; }

    /// Real value of the element with multiplier m.
    Rational value(long long m) const
    {
        if (rank == 0) {
            if (m != 0) throw std::logic_error("trivial group has only 0");
            return Rational(0);
        }
        return lambda0 * m;
    }

    /// Number of group elements g with lo <= g <= hi (honoring openness flags).
    long long count_in_interval(const Rational& lo, const Rational& hi,
                                bool lo_open, bool hi_open) const
    {
        if (lo > hi || (lo == hi && (lo_open || hi_open))) return 0;
        if (rank == 0) {
            bool above = lo_open ? (0 > lo) : (0 >= lo);
            bool below = hi_open ? (0 < hi) : (0 <= hi);
            return (above && below) ? 1 : 0;
        }
        Integer mlo = rational_ceil(lo / lambda0);
        if (lo_open && Rational(mlo) * lambda0 == lo) ++mlo;
        Integer mhi = rational_floor(hi / lambda0);
        if (hi_open && Rational(mhi) * lambda0 == hi) --mhi;
        if (mhi < mlo) return 0;
        Integer n = mhi - mlo + 1;
        return n.convert_to<long long>();
    }

    /// Reduces a real number mod the group: returns (representative in
    /// [0, lambda0), multiplier m with x = rep + m*lambda0).  For the trivial
    /// group the representative is x itself.
    std::pair<Rational, long long> normalize(const Rational& x) const
    {
        if (rank == 0) return {x, 0};
        Integer m = rational_floor(x / lambda0);
        return {x - Rational(m) * lambda0, m.convert_to<long long>()};
    }

    friend bool operator==(const Group& a, const Group& b)
    {
        return a.rank == b.rank && (a.rank == 0 || a.lambda0 == b.lambda0);
    }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
};

/// Element of the group ring over the translation group: a finite sum of
/// terms c * T^(m*lambda0), keyed by the integer multiplier m.  Zero
/// coefficients are never stored.
template <class K>
class GroupRing {
public:
    using Terms = std::map<long long, K>;

    GroupRing() = default;
    explicit GroupRing(const K& scalar)
    {
        if (!field_traits<K>::is_zero(scalar)) terms_[0] = scalar;
    }

    static GroupRing zero() { return GroupRing(); }
    static GroupRing one() { return GroupRing(field_traits<K>::one()); }
    static GroupRing monomial(const K& c, long long m)
    {
        GroupRing r;
        if (!field_traits<K>::is_zero(c)) r.terms_[m] = c;
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void set(long long m, const K& c)
    {
        if (field_traits<K>::is_zero(c))
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    K coeff(long long m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_traits<K>::zero() : it->second;
    }

    /// Multiplier of the least exponent; only valid on nonzero elements.
    long long min_mult() const
    {
        if (is_zero()) throw std::logic_error("valuation of zero");
        return terms_.begin()->first;
    }
    long long max_mult() const
    {
        if (is_zero()) throw std::logic_error("valuation of zero");
        return terms_.rbegin()->first;
    }

    /// nu_up as a group element scaled by lambda0; +inf on zero.
    ExtRat val_up(const Group& g) const
    {
        if (is_zero()) return ExtRat::pos_inf();
        return ExtRat(g.rank == 0 ? Rational(0) : g.lambda0 * min_mult());
    }

    /// nu_down; -inf on zero.
    ExtRat val_down(const Group& g) const
    {
        if (is_zero()) return ExtRat::neg_inf();
        return ExtRat(g.rank == 0 ? Rational(0) : g.lambda0 * max_mult());
    }

    friend GroupRing operator+(const GroupRing& a, const GroupRing& b)
    {
        GroupRing r = a;
        for (const auto& [m, c] : b.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_[m] = c;
            } else {
                it->second += c;
                if (field_traits<K>::is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend GroupRing operator-(const GroupRing& a, const GroupRing& b) { return a + (-b); }

    GroupRing operator-() const
    {
        GroupRing r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend GroupRing operator*(const GroupRing& a, const GroupRing& b)
    {
        GroupRing r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                K prod = ca * cb;
                if (field_traits<K>::is_zero(prod)) continue;
                auto it = r.terms_.find(ma + mb);
                if (it == r.terms_.end()) {
                    r.terms_[ma + mb] = prod;
                } else {
                    it->second += prod;
                    if (field_traits<K>::is_zero(it->second)) r.terms_.erase(it);
                }
            }
        return r;
    }

    GroupRing& operator+=(const GroupRing& o) { return *this = *this + o; }
    GroupRing& operator-=(const GroupRing& o) { return *this = *this - o; }
    GroupRing& operator*=(const GroupRing& o) { return *this = *this * o; }

    /// Exponent negation g -> -g.
    GroupRing conj() const
    {
        GroupRing r;
        for (const auto& [m, c] : terms_) r.terms_[-m] = c;
        return r;
    }

    /// Multiplies by T^(m*lambda0).
    GroupRing shifted(long long m) const
    {
        GroupRing r;
        for (const auto& [mm, c] : terms_) r.terms_[mm + m] = c;
        return r;
    }

    /// True iff the element is a unit a*T^g of the group ring.
    bool is_monomial() const { return terms_.size() == 1; }

    friend bool operator==(const GroupRing& a, const GroupRing& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GroupRing& a, const GroupRing& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GroupRing& a)
    {
        if (a.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [m, c] : a.terms_) {
            if (!first) os << " + ";
            first = false;
            os << field_traits<K>::to_string(c);
            if (m != 0) os << "*T^" << m;
        }
        return os;
    }

private:
    Terms terms_;
};

} // namespace novpers

#endif
