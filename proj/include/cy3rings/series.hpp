#ifndef CY3RINGS_SERIES_HPP
#define CY3RINGS_SERIES_HPP

#include <string>
#include <vector>

#include "cy3rings/poly.hpp"

namespace cy3 {

/// Multiset of positive integers a_i, kept sorted ascending.  Stands for the
/// denominator product ∏ (1 - t^{a_i}) of a RationalSeries, or for the
/// ambient weights of a weighted projective space.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> weights);
    static WeightVector repeated(int a, int count);

    bool empty() const { return w_.empty(); }
    int size() const { return static_cast<int>(w_.size()); }
    int sum() const;
    const std::vector<int>& values() const { return w_; }
    int operator[](int i) const { return w_[static_cast<size_t>(i)]; }
    bool operator==(const WeightVector& o) const { return w_ == o.w_; }

    int multiplicity_of(int a) const;
    WeightVector with(int a) const;
    /// Per factor value, the max of the two multiplicities.
    WeightVector merged_max(const WeightVector& o) const;
    /// Multiset difference; requires *this to contain o.
    WeightVector minus(const WeightVector& o) const;

    /// ∏ (1 - t^{a_i}) expanded as a polynomial.
    IntPolynomial product_poly() const;

    /// "1,1,1,3,3" form.
    std::string str() const;
    /// "(1-t)^3 (1-t^3)^2" form.
    std::string factor_str() const;

private:
    std::vector<int> w_;
};

/// Exact rational function  numerator / ∏ (1 - t^{a_i}).  Equality is by
/// cross-multiplication, not by any canonical form.
struct RationalSeries {
    IntPolynomial numerator;
    WeightVector denominator;

    std::string str() const;
};

/// Power-series coefficients c_0..c_order, exact.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Int> coefficients);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coefficients() const { return c_; }
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
};

/// Formal power-series expansion of r up to t^order.
TruncatedSeries expand(const RationalSeries& r, int order);

/// s * (1 - t^a)^m, truncated to the same order.
TruncatedSeries mul_factor(const TruncatedSeries& s, int a, int m);

/// Exact sum over the merged denominator (per-factor max multiplicity).
RationalSeries add(const RationalSeries& r1, const RationalSeries& r2);
RationalSeries scale(const RationalSeries& r, const Int& s);

/// True iff cross-multiplied numerators agree as polynomials.
bool equals(const RationalSeries& r1, const RationalSeries& r2);

/// Order of the pole at t=1: (#denominator factors) - (vanishing order of the
/// numerator at 1).  May be <= 0 for a polynomial series.
int pole_order_at_one(const RationalSeries& r);

struct LeadingCoefficient {
    int pole_order;
    Rat value;  // lim_{t->1} (1-t)^pole_order * r(t)
};

/// Exact leading behaviour at t=1.  Rejects series without a pole there.
LeadingCoefficient leading_coefficient_at_one(const RationalSeries& r);

}  // namespace cy3

#endif
