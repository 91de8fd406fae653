#ifndef CY3RINGS_POLY_HPP
#define CY3RINGS_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "cy3rings/bigint.hpp"

namespace cy3 {

/// Sparse univariate polynomial in t with arbitrary-precision integer
/// coefficients.  Zero coefficients are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(int exponent, Int c);
    /// 1 - t^a
    static IntPolynomial one_minus_tk(int a);

    bool is_zero() const { return coef_.empty(); }
    /// Maximum stored exponent; 0 for the zero polynomial by convention.
    int degree() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }
    Int coefficient(int exponent) const;

    IntPolynomial& add_term(int exponent, const Int& c);

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial& o) const { return coef_ == o.coef_; }

    /// t^k * p(1/t).  Requires degree() <= k.
    IntPolynomial reversed(int k) const;

    /// p(1); the sum of all coefficients.
    Int value_at_one() const;
    /// Largest v with (t-1)^v dividing p.  Undefined for the zero polynomial.
    int vanishing_order_at_one() const;
    /// Synthetic division by (t-1); requires value_at_one() == 0.
    IntPolynomial divided_by_t_minus_one() const;

    const std::map<int, Int>& terms() const { return coef_; }

    /// Text rendering, e.g. "1 - 2t^3 - 6t^4 + t^12".
    std::string str() const;

private:
    std::map<int, Int> coef_;
};

/// Number of sign alternations in the sequence of nonzero coefficients
/// ordered by exponent.  Rejects the zero polynomial.
int sign_changes(const IntPolynomial& n);

}  // namespace cy3

#endif
