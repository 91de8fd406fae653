#include "cy3rings/orbifold.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cy3 {

QuotientSingularity::QuotientSingularity(int r_, int a, int b, int c) : r(r_), abc{a, b, c} {
    if (r < 1) throw domain_error("QuotientSingularity: index must be positive");
    for (int x : abc) {
        if (x < 1) throw domain_error("QuotientSingularity: weights must be positive");
        if (std::gcd(x, r) != 1)
            throw domain_error("QuotientSingularity: weight " + std::to_string(x) +
                               " not coprime to index " + std::to_string(r));
    }
    std::sort(abc.begin(), abc.end());
}

bool QuotientSingularity::satisfies_cy_condition() const {
    return (abc[0] + abc[1] + abc[2]) % r == 0;
}

std::string QuotientSingularity::str() const {
    std::ostringstream out;
    out << "1/" << r << "(" << abc[0] << "," << abc[1] << "," << abc[2] << ")";
    return out.str();
}

Basket& Basket::add(const QuotientSingularity& q, int multiplicity) {
    if (multiplicity < 1) throw domain_error("Basket::add: multiplicity must be positive");
    entries_[q] += multiplicity;
    return *this;
}

int Basket::total() const {
    int t = 0;
    for (const auto& [q, m] : entries_) t += m;
    return t;
}

namespace {

struct Cursor {
    std::string s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char take() { return s[i++]; }
    void expect(char c, const char* what) {
        if (done() || take() != c)
            throw parse_error(std::string("basket: expected '") + c + "' " + what);
    }
    int number(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(std::string("basket: expected number ") + what);
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > 1000000) throw parse_error("basket: number out of range");
        }
        return static_cast<int>(v);
    }
};

}  // namespace

Basket Basket::parse(std::string_view text) {
    // "<mult>x1/<r>(<a>,<b>,<c>)", comma separated, whitespace ignored
    Cursor cur;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cur.s.push_back(c);
    Basket b;
    if (cur.s.empty()) return b;
    for (;;) {
        int mult = cur.number("for multiplicity");
        cur.expect('x', "after multiplicity");
        cur.expect('1', "in '1/r'");
        cur.expect('/', "in '1/r'");
        int r = cur.number("for index r");
        cur.expect('(', "before weights");
        int a = cur.number("for first weight");
        cur.expect(',', "between weights");
        int w2 = cur.number("for second weight");
        cur.expect(',', "between weights");
        int w3 = cur.number("for third weight");
        cur.expect(')', "after weights");
        try {
            b.add(QuotientSingularity(r, a, w2, w3), mult);
        } catch (const domain_error& e) {
            throw parse_error(std::string("basket: ") + e.what());
        }
        if (cur.done()) break;
        cur.expect(',', "between basket entries");
        if (cur.done()) throw parse_error("basket: trailing comma");
    }
    return b;
}

std::string Basket::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [q, m] : entries_) {
        if (!first) out << ",";
        out << m << "x" << q.str();
        first = false;
    }
    return out.str();
}

RationalSeries initial_series(const InitialData& d) {
    if (d.p1 < 0 || d.p2 < 0) throw domain_error("initial_series: P1, P2 must be >= 0");
    IntPolynomial n;
    n.add_term(0, 1);
    n.add_term(1, d.p1 - 4);
    n.add_term(2, d.p2 - 4 * d.p1 + 6);
    n.add_term(3, d.p1 - 4);
    n.add_term(4, 1);
    return RationalSeries{n, WeightVector::repeated(1, 4)};
}

bool orbifold_term_registered(const QuotientSingularity& q) {
    if (q.r == 3 && q.abc == std::array<int, 3>{1, 1, 1}) return true;
    if (q.r == 5 && q.abc == std::array<int, 3>{1, 1, 3}) return true;
    return false;
}

RationalSeries orbifold_term(const QuotientSingularity& q) {
    // Contributions are registered per type; the two types below cover every
    // basket in scope.  Denominators follow the series expansions they must
    // reproduce, not the misprinted display forms.
    if (q.r == 3 && q.abc == std::array<int, 3>{1, 1, 1}) {
        // t^3 / ((1-t)^3 (1-t^3))
        return RationalSeries{IntPolynomial::monomial(3, 1), WeightVector({1, 1, 1, 3})};
    }
    if (q.r == 5 && q.abc == std::array<int, 3>{1, 1, 3}) {
        // (t^3 + t^5) / ((1-t)^3 (1-t^5))
        IntPolynomial n;
        n.add_term(3, 1);
        n.add_term(5, 1);
        return RationalSeries{n, WeightVector({1, 1, 1, 5})};
    }
    throw domain_error("no registered contribution for " + q.str());
}

RationalSeries assemble(const InitialData& d, const Basket& b) {
    RationalSeries p = initial_series(d);
    for (const auto& [q, mult] : b.entries()) p = add(p, scale(orbifold_term(q), mult));
    return p;
}

}  // namespace cy3
