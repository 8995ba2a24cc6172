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

#ifndef NOVPERS_RNG_HPP
#define NOVPERS_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "field.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace novpers {

/// splitmix64; deterministic across platforms, so seeded runs are
/// reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (next() & 1) != 0; }

    /// Uniform rational k/den with k in [lo*den, hi*den].
    Rational rational(long long lo, long long hi, long long den = 12)
    {
        return Rational(range(lo * den, hi * den), den);
    }

    template <class K>
    K field_elem()
    {
        return field_traits<K>::from_int(range(-6, 6));
    }

    template <class K>
    K nonzero_field_elem()
    {
        K v = field_elem<K>();
        while (field_traits<K>::is_zero(v)) v = field_elem<K>();
        return v;
    }

    /// Random group-ring element with up to `max_terms` terms and exponent
    /// multipliers in [-span, span] (0 for the trivial group).
    template <class K>
    GroupRing<K> group_ring_elem(const Group& g, int max_terms = 3, int span = 2)
    {
        GroupRing<K> r;
        int terms = static_cast<int>(below(static_cast<std::uint64_t>(max_terms))) + 1;
        for (int i = 0; i < terms; ++i) {
            long long m = g.rank == 0 ? 0 : range(-span, span);
            r.set(m, r.coeff(m) + field_elem<K>());
        }
        return r;
    }

    template <class K>
    GroupRing<K> nonzero_group_ring_elem(const Group& g, int max_terms = 3, int span = 2)
    {
        GroupRing<K> r = group_ring_elem<K>(g, max_terms, span);
        while (r.is_zero()) r = group_ring_elem<K>(g, max_terms, span);
        return r;
    }

    /// Random unit a*T^g of the group ring.
    template <class K>
    GroupRing<K> unit(const Group& g, int span = 2)
    {
        long long m = g.rank == 0 ? 0 : range(-span, span);
        return GroupRing<K>::monomial(nonzero_field_elem<K>(), m);
    }

    std::vector<std::size_t> permutation(std::size_t n)
    {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
        return p;
    }

private:
    std::uint64_t state_;
};

} // namespace novpers

#endif
