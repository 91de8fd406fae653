#include "cy3rings/poly.hpp"

#include <sstream>

namespace cy3 {

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    p.add_term(0, c);
    return p;
}

IntPolynomial IntPolynomial::monomial(int exponent, Int c) {
    IntPolynomial p;
    p.add_term(exponent, c);
    return p;
}

IntPolynomial IntPolynomial::one_minus_tk(int a) {
    IntPolynomial p;
    p.add_term(0, 1);
    p.add_term(a, -1);
    return p;
}

Int IntPolynomial::coefficient(int exponent) const {
    auto it = coef_.find(exponent);
    return it == coef_.end() ? Int(0) : it->second;
}

IntPolynomial& IntPolynomial::add_term(int exponent, const Int& c) {
    if (c == 0) return *this;
    auto it = coef_.find(exponent);
    if (it == coef_.end()) {
        coef_.emplace(exponent, c);
    } else {
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r;
    for (const auto& [e, c] : coef_) r.coef_.emplace(e, -c);
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, c);
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.coef_) r.add_term(e, -c);
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    for (const auto& [e1, c1] : coef_)
        for (const auto& [e2, c2] : o.coef_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    IntPolynomial r;
    if (s == 0) return r;
    for (const auto& [e, c] : coef_) r.coef_.emplace(e, c * s);
    return r;
}

IntPolynomial IntPolynomial::reversed(int k) const {
    IntPolynomial r;
    for (const auto& [e, c] : coef_) {
        if (e > k) throw domain_error("reversed: polynomial degree exceeds k");
        r.coef_.emplace(k - e, c);
    }
    return r;
}

Int IntPolynomial::value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coef_) s += c;
    return s;
}

IntPolynomial IntPolynomial::divided_by_t_minus_one() const {
    // synthetic division: p = (t-1) q + p(1), exact when p(1) = 0
    if (value_at_one() != 0) throw domain_error("divided_by_t_minus_one: nonzero remainder");
    int deg = degree();
    std::vector<Int> dense(static_cast<size_t>(deg) + 1, Int(0));
    for (const auto& [e, c] : coef_) dense[static_cast<size_t>(e)] = c;
    IntPolynomial q;
    Int acc = 0;
    for (int i = deg; i >= 1; --i) {
        acc += dense[static_cast<size_t>(i)];
        q.add_term(i - 1, acc);
    }
    return q;
}

int IntPolynomial::vanishing_order_at_one() const {
    if (is_zero()) throw domain_error("vanishing_order_at_one: zero polynomial");
    IntPolynomial p = *this;
    int v = 0;
    while (p.value_at_one() == 0) {
        p = p.divided_by_t_minus_one();
        ++v;
    }
    return v;
}

std::string IntPolynomial::str() const {
    if (coef_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coef_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

int sign_changes(const IntPolynomial& n) {
    if (n.is_zero()) throw domain_error("sign_changes: zero polynomial");
    int changes = 0;
    int prev = 0;
    for (const auto& [e, c] : n.terms()) {
        int s = c > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace cy3
