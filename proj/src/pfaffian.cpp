#include "cy3rings/pfaffian.hpp"

#include <algorithm>
#include <sstream>

namespace cy3 {

namespace {
// index into the packed upper triangle, 1-based a < b
int tri_index(int a, int b) {
    static constexpr int row_start[5] = {0, 4, 7, 9, 10};
    if (a < 1 || b > 5 || a >= b) throw domain_error("skew matrix: bad entry index");
    return row_start[a - 1] + (b - a - 1);
}
}  // namespace

SkewDegreeMatrix5::SkewDegreeMatrix5(std::array<int, 4> r1, std::array<int, 3> r2,
                                     std::array<int, 2> r3, int b45)
    : b_{r1[0], r1[1], r1[2], r1[3], r2[0], r2[1], r2[2], r3[0], r3[1], b45} {}

SkewDegreeMatrix5::SkewDegreeMatrix5(const std::array<int, 10>& upper) : b_(upper) {}

int SkewDegreeMatrix5::at(int a, int b) const {
    if (a > b) std::swap(a, b);
    return b_[static_cast<size_t>(tri_index(a, b))];
}

EntryWeightSolution solve_entry_weights(const SkewDegreeMatrix5& d) {
    // q1 from the leading 3x3 block, the rest by elimination; then verify all
    // ten equations b_ab = q_a + q_b and report any violations
    EntryWeightSolution sol;
    sol.q[0] = Rat(d.at(1, 2) + d.at(1, 3) - d.at(2, 3), 2);
    sol.q[1] = Rat(d.at(1, 2)) - sol.q[0];
    sol.q[2] = Rat(d.at(1, 3)) - sol.q[0];
    sol.q[3] = Rat(d.at(1, 4)) - sol.q[0];
    sol.q[4] = Rat(d.at(1, 5)) - sol.q[0];

    std::vector<std::pair<int, int>> violated;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            if (sol.q[static_cast<size_t>(a - 1)] + sol.q[static_cast<size_t>(b - 1)] !=
                Rat(d.at(a, b)))
                violated.emplace_back(a, b);
    if (!violated.empty()) {
        std::ostringstream out;
        out << "inconsistent degree matrix; violated entries:";
        for (auto [a, b] : violated) out << " (" << a << "," << b << ")";
        throw domain_error(out.str());
    }

    Rat total = 0;
    for (const Rat& q : sol.q) total += q;
    Rat k2 = total * 2;
    if (denominator(k2) != 1) throw domain_error("inconsistent degree matrix: k not integral");
    sol.k = static_cast<int>(numerator(k2));
    for (int i = 0; i < 5; ++i) {
        Rat di = total - sol.q[static_cast<size_t>(i)];
        if (denominator(di) != 1)
            throw domain_error("inconsistent degree matrix: Pfaffian degree not integral");
        sol.pfaffian_degrees[static_cast<size_t>(i)] = static_cast<int>(numerator(di));
    }
    return sol;
}

IntPolynomial pfaffian_numerator(const std::array<int, 5>& d, int k) {
    IntPolynomial n;
    n.add_term(0, 1);
    n.add_term(k, -1);
    for (int di : d) {
        if (di >= k) throw domain_error("pfaffian_numerator: requires d_i < k");
        n.add_term(di, -1);
        n.add_term(k - di, 1);
    }
    return n;
}

SkewMatrix5::SkewMatrix5(RingPtr ring, std::array<SparsePoly, 10> upper)
    : ring_(std::move(ring)), m_(std::move(upper)) {}

const SparsePoly& SkewMatrix5::upper_entry(int a, int b) const {
    return m_[static_cast<size_t>(tri_index(a, b))];
}

SparsePoly SkewMatrix5::entry(int a, int b) const {
    if (a == b) return SparsePoly::zero(ring_);
    if (a < b) return upper_entry(a, b);
    return -upper_entry(b, a);
}

namespace {

// Pfaffian of the skew submatrix on `rows` (even size), by expansion along
// the first remaining index: Pf = sum_j (-1)^j m_{r0, rj} Pf(rest).
SparsePoly pfaffian_of(const SkewMatrix5& m, std::vector<int> rows) {
    if (rows.empty()) return SparsePoly::constant(m.ring(), 1);
    SparsePoly acc = SparsePoly::zero(m.ring());
    int r0 = rows.front();
    for (size_t j = 1; j < rows.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 1; t < rows.size(); ++t)
            if (t != j) rest.push_back(rows[t]);
        SparsePoly sub = m.entry(r0, rows[j]) * pfaffian_of(m, rest);
        if (j % 2 == 1)
            acc = acc + sub;
        else
            acc = acc - sub;
    }
    return acc;
}

}  // namespace

std::array<SparsePoly, 5> SkewMatrix5::maximal_pfaffians() const {
    std::array<SparsePoly, 5> out{SparsePoly::zero(ring_), SparsePoly::zero(ring_),
                                  SparsePoly::zero(ring_), SparsePoly::zero(ring_),
                                  SparsePoly::zero(ring_)};
    for (int i = 1; i <= 5; ++i) {
        std::vector<int> rows;
        for (int r = 1; r <= 5; ++r)
            if (r != i) rows.push_back(r);
        out[static_cast<size_t>(i - 1)] = pfaffian_of(*this, rows);
    }
    return out;
}

void SkewMatrix5::check_degrees(const SkewDegreeMatrix5& d) const {
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            const SparsePoly& entry = upper_entry(a, b);
            if (entry.is_zero()) continue;
            auto deg = entry.homogeneous_degree();
            if (!deg || *deg != d.at(a, b)) {
                std::ostringstream out;
                out << "entry (" << a << "," << b << ") is not homogeneous of degree "
                    << d.at(a, b);
                throw domain_error(out.str());
            }
        }
}

bool is_tom(const SkewMatrix5& m, const TriangularIdeal& ideal, int i) {
    if (i < 1 || i > 5) throw domain_error("is_tom: row index out of range");
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            if (a == i || b == i) continue;
            if (!ideal.contains(m.upper_entry(a, b))) return false;
        }
    return true;
}

bool is_jerry(const SkewMatrix5& m, const TriangularIdeal& ideal, int i, int j) {
    if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
        throw domain_error("is_jerry: need distinct row indices in 1..5");
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            if (a != i && b != i && a != j && b != j) continue;
            if (!ideal.contains(m.upper_entry(a, b))) return false;
        }
    return true;
}

std::vector<std::pair<int, int>> tom_infeasible_entries(const SkewDegreeMatrix5& d,
                                                        int min_gen_degree, int i) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            if (a == i || b == i) continue;
            if (d.at(a, b) < min_gen_degree) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<int, int>> jerry_infeasible_entries(const SkewDegreeMatrix5& d,
                                                          int min_gen_degree, int i, int j) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            if (a != i && b != i && a != j && b != j) continue;
            if (d.at(a, b) < min_gen_degree) out.emplace_back(a, b);
        }
    return out;
}

}  // namespace cy3
