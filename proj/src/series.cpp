#include "cy3rings/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cy3 {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
    for (int a : w_)
        if (a < 1) throw domain_error("WeightVector: weights must be >= 1");
    std::sort(w_.begin(), w_.end());
}

WeightVector WeightVector::repeated(int a, int count) {
    return WeightVector(std::vector<int>(static_cast<size_t>(count), a));
}

int WeightVector::sum() const {
    int s = 0;
    for (int a : w_) s += a;
    return s;
}

int WeightVector::multiplicity_of(int a) const {
    return static_cast<int>(std::count(w_.begin(), w_.end(), a));
}

WeightVector WeightVector::with(int a) const {
    std::vector<int> v = w_;
    v.push_back(a);
    return WeightVector(std::move(v));
}

WeightVector WeightVector::merged_max(const WeightVector& o) const {
    std::map<int, int> mult;
    for (int a : w_) mult[a]++;
    std::map<int, int> om;
    for (int a : o.w_) om[a]++;
    for (const auto& [a, m] : om) mult[a] = std::max(mult[a], m);
    std::vector<int> v;
    for (const auto& [a, m] : mult) v.insert(v.end(), static_cast<size_t>(m), a);
    return WeightVector(std::move(v));
}

WeightVector WeightVector::minus(const WeightVector& o) const {
    std::map<int, int> mult;
    for (int a : w_) mult[a]++;
    for (int a : o.w_) {
        if (--mult[a] < 0) throw domain_error("WeightVector::minus: not a submultiset");
    }
    std::vector<int> v;
    for (const auto& [a, m] : mult) v.insert(v.end(), static_cast<size_t>(m), a);
    return WeightVector(std::move(v));
}

IntPolynomial WeightVector::product_poly() const {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int a : w_) p = p * IntPolynomial::one_minus_tk(a);
    return p;
}

std::string WeightVector::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) out << ",";
        out << w_[i];
    }
    return out.str();
}

std::string WeightVector::factor_str() const {
    if (w_.empty()) return "1";
    std::ostringstream out;
    std::map<int, int> mult;
    for (int a : w_) mult[a]++;
    for (const auto& [a, m] : mult) {
        out << "(1-t";
        if (a != 1) out << "^" << a;
        out << ")";
        if (m != 1) out << "^" << m;
    }
    return out.str();
}

std::string RationalSeries::str() const {
    return "(" + numerator.str() + ") / " + denominator.factor_str();
}

TruncatedSeries::TruncatedSeries(int order) : c_(static_cast<size_t>(order) + 1, Int(0)) {
    if (order < 0) throw domain_error("TruncatedSeries: negative order");
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw domain_error("TruncatedSeries: empty coefficient list");
}

TruncatedSeries expand(const RationalSeries& r, int order) {
    if (order < 0) throw domain_error("expand: order must be >= 0");
    TruncatedSeries s(order);
    for (const auto& [e, c] : r.numerator.terms())
        if (e <= order) s[e] = c;
    // dividing by (1 - t^a) is a prefix sum with stride a
    for (int a : r.denominator.values())
        for (int i = a; i <= order; ++i) s[i] += s[i - a];
    return s;
}

TruncatedSeries mul_factor(const TruncatedSeries& s, int a, int m) {
    if (a < 1 || m < 1) throw domain_error("mul_factor: need a >= 1 and m >= 1");
    TruncatedSeries r = s;
    int order = r.order();
    for (int rep = 0; rep < m; ++rep)
        for (int i = order; i >= a; --i) r[i] -= r[i - a];
    return r;
}

RationalSeries add(const RationalSeries& r1, const RationalSeries& r2) {
    WeightVector merged = r1.denominator.merged_max(r2.denominator);
    IntPolynomial n1 = r1.numerator * merged.minus(r1.denominator).product_poly();
    IntPolynomial n2 = r2.numerator * merged.minus(r2.denominator).product_poly();
    return RationalSeries{n1 + n2, merged};
}

RationalSeries scale(const RationalSeries& r, const Int& s) {
    return RationalSeries{r.numerator * s, r.denominator};
}

bool equals(const RationalSeries& r1, const RationalSeries& r2) {
    return r1.numerator * r2.denominator.product_poly() ==
           r2.numerator * r1.denominator.product_poly();
}

int pole_order_at_one(const RationalSeries& r) {
    if (r.numerator.is_zero()) return 0;
    return r.denominator.size() - r.numerator.vanishing_order_at_one();
}

LeadingCoefficient leading_coefficient_at_one(const RationalSeries& r) {
    if (r.numerator.is_zero()) throw domain_error("leading_coefficient_at_one: zero series");
    // write numerator = (t-1)^v M with M(1) != 0 and each denominator factor
    // (1-t^a) = (1-t)(1 + t + ... + t^{a-1}); at t=1 the cyclotomic-like part
    // contributes a.
    IntPolynomial m = r.numerator;
    int v = 0;
    while (m.value_at_one() == 0) {
        m = m.divided_by_t_minus_one();
        ++v;
    }
    int p = r.denominator.size() - v;
    if (p <= 0)
        throw domain_error("leading_coefficient_at_one: series has no pole at t=1 (order " +
                           std::to_string(p) + ")");
    Rat value(m.value_at_one());
    if (v % 2 != 0) value = -value;
    for (int a : r.denominator.values()) value /= a;
    return LeadingCoefficient{p, value};
}

}  // namespace cy3
