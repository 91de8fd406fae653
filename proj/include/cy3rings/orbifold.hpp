#ifndef CY3RINGS_ORBIFOLD_HPP
#define CY3RINGS_ORBIFOLD_HPP

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "cy3rings/series.hpp"

namespace cy3 {

/// Isolated cyclic quotient singularity 1/r(a,b,c), weights sorted ascending.
/// Construction checks positivity and gcd(a_i, r) = 1; whether the type has a
/// registered Riemann-Roch contribution is a separate question.
struct QuotientSingularity {
    int r;
    std::array<int, 3> abc;

    QuotientSingularity(int r_, int a, int b, int c);

    /// (a+b+c) ≡ 0 mod r; holds for every registered type.
    bool satisfies_cy_condition() const;

    std::string str() const;  // "1/3(1,1,1)"
    auto operator<=>(const QuotientSingularity&) const = default;
};

/// Multiset of quotient singularities.
class Basket {
public:
    Basket() = default;

    Basket& add(const QuotientSingularity& q, int multiplicity = 1);
    bool empty() const { return entries_.empty(); }
    int total() const;
    const std::map<QuotientSingularity, int>& entries() const { return entries_; }

    /// Text syntax "4x1/3(1,1,1),1x1/5(1,1,3)"; whitespace ignored; empty
    /// string is the empty basket.
    static Basket parse(std::string_view text);
    std::string str() const;

private:
    std::map<QuotientSingularity, int> entries_;
};

/// P1 = h^0(X,A), P2 = h^0(X,2A).
struct InitialData {
    int p1 = 0;
    int p2 = 0;
};

/// (1 + (P1-4)t + (P2-4P1+6)t^2 + (P1-4)t^3 + t^4) / (1-t)^4
RationalSeries initial_series(const InitialData& d);

/// Per-singularity Riemann-Roch contribution from the registry.
/// Throws domain_error "no registered contribution" for unknown types.
RationalSeries orbifold_term(const QuotientSingularity& q);
bool orbifold_term_registered(const QuotientSingularity& q);

/// initial_series(d) + sum over the basket (with multiplicity).
RationalSeries assemble(const InitialData& d, const Basket& b);

}  // namespace cy3

#endif
