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

#ifndef NOVPERS_BARCODE_HPP
#define NOVPERS_BARCODE_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "group.hpp"
#include "rational.hpp"

namespace novpers {

/// Interval kinds appearing in barcodes.  Half-open intervals [a,b) come from
/// ascending complexes, (a,b] from descending ones; closed and open intervals
/// come from basis spectra.  Infinite bars keep their one finite endpoint.
enum class BarKind { HalfUp, HalfDown, InfUp, InfDown, Closed, Open };

inline const char* to_string(BarKind k)
{
    switch (k) {
    case BarKind::HalfUp: return "half_up";
    case BarKind::HalfDown: return "half_down";
    case BarKind::InfUp: return "inf_up";
    case BarKind::InfDown: return "inf_down";
    case BarKind::Closed: return "closed";
    case BarKind::Open: return "open";
    }
    return "?";
}

/// One interval class modulo translation: endpoints a <= b except that open
/// intervals store a < b and infinite ones use only the finite endpoint.
struct Bar {
    int degree = 0;
    BarKind kind = BarKind::Closed;
    Rational a = 0; // left endpoint (unused by InfDown)
    Rational b = 0; // right endpoint (unused by InfUp)

    friend bool operator==(const Bar& x, const Bar& y)
    {
        return std::tie(x.degree, x.kind, x.a, x.b) == std::tie(y.degree, y.kind, y.a, y.b);
    }
    friend bool operator<(const Bar& x, const Bar& y)
    {
        auto ki = static_cast<int>(x.kind), kj = static_cast<int>(y.kind);
        return std::tie(x.degree, ki, x.a, x.b) < std::tie(y.degree, kj, y.a, y.b);
    }
};

/// Shifts the bar so its anchoring endpoint lies in [0, lambda0) for rank-1
/// groups; identity for the trivial group.  InfDown bars anchor at b.
inline Bar normalized(Bar bar, const Group& g)
{
    if (g.rank == 0) return bar;
    Rational anchor = bar.kind == BarKind::InfDown ? bar.b : bar.a;
    auto [rep, mult] = g.normalize(anchor);
    Rational shift = g.lambda0 * mult;
    bar.a -= shift;
    bar.b -= shift;
    return bar;
}

/// A barcode as a sorted multiset of normalized bars.
class Barcode {
public:
    Barcode() = default;

    void add(Bar bar, const Group& g, long long multiplicity = 1)
    {
        Bar n = normalized(bar, g);
        for (long long i = 0; i < multiplicity; ++i) bars_.push_back(n);
        sorted_ = false;
    }

    const std::vector<Bar>& bars() const
    {
        if (!sorted_) {
            std::sort(bars_.begin(), bars_.end());
            sorted_ = true;
        }
        return bars_;
    }

    std::vector<Bar> bars_in_degree(int k) const
    {
        std::vector<Bar> out;
        for (const auto& b : bars())
            if (b.degree == k) out.push_back(b);
        return out;
    }

    bool empty() const { return bars_.empty(); }
    std::size_t size() const { return bars_.size(); }

    friend bool operator==(const Barcode& x, const Barcode& y)
    {
        return x.bars() == y.bars();
    }

    friend std::ostream& operator<<(std::ostream& os, const Barcode& bc)
    {
        for (const auto& b : bc.bars()) {
            os << "deg " << b.degree << " " << to_string(b.kind) << " ";
            switch (b.kind) {
            case BarKind::HalfUp: os << "[" << to_string(b.a) << "," << to_string(b.b) << ")"; break;
            case BarKind::HalfDown: os << "(" << to_string(b.a) << "," << to_string(b.b) << "]"; break;
            case BarKind::InfUp: os << "[" << to_string(b.a) << ",inf)"; break;
            case BarKind::InfDown: os << "(-inf," << to_string(b.b) << "]"; break;
            case BarKind::Closed: os << "[" << to_string(b.a) << "," << to_string(b.b) << "]"; break;
            case BarKind::Open: os << "(" << to_string(b.a) << "," << to_string(b.b) << ")"; break;
            }
            os << "\n";
        }
        return os;
    }

private:
    mutable std::vector<Bar> bars_;
    mutable bool sorted_ = true;
};

} // namespace novpers

#endif
