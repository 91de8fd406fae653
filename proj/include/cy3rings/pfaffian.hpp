#ifndef CY3RINGS_PFAFFIAN_HPP
#define CY3RINGS_PFAFFIAN_HPP

#include <array>
#include <optional>
#include <vector>

#include "cy3rings/multipoly.hpp"
#include "cy3rings/poly.hpp"

namespace cy3 {

/// Degree-only shadow of an antisymmetric 5x5 matrix: the ten upper-triangle
/// entry degrees b_ab, 1 <= a < b <= 5.
class SkewDegreeMatrix5 {
public:
    /// Row lists (b12,b13,b14,b15; b23,b24,b25; b34,b35; b45).
    SkewDegreeMatrix5(std::array<int, 4> r1, std::array<int, 3> r2,
                      std::array<int, 2> r3, int b45);
    explicit SkewDegreeMatrix5(const std::array<int, 10>& upper);

    int at(int a, int b) const;  // 1-based, a != b
    const std::array<int, 10>& upper() const { return b_; }

private:
    std::array<int, 10> b_;
};

struct EntryWeightSolution {
    std::array<Rat, 5> q;                 // b_ab = q_a + q_b; may be half-integral
    std::array<int, 5> pfaffian_degrees;  // d_i = (sum q) - q_i
    int k = 0;                            // adjunction number 2*(sum q)
};

/// Solve b_ab = q_a + q_b exactly; throws domain_error listing violated
/// entries when the matrix is inconsistent.
EntryWeightSolution solve_entry_weights(const SkewDegreeMatrix5& d);

/// 1 - t^{d_1} - ... - t^{d_5} + t^{k-d_5} + ... + t^{k-d_1} - t^k,
/// like terms combined.  Requires every d_i < k.
IntPolynomial pfaffian_numerator(const std::array<int, 5>& d, int k);

/// Antisymmetric 5x5 matrix of polynomials, stored as the strict upper
/// triangle; m_ba = -m_ab and m_aa = 0 by convention.
class SkewMatrix5 {
public:
    SkewMatrix5(RingPtr ring, std::array<SparsePoly, 10> upper);

    const RingPtr& ring() const { return ring_; }
    /// Entry m_ab with the sign convention applied (a > b gives -m_ba).
    SparsePoly entry(int a, int b) const;
    const SparsePoly& upper_entry(int a, int b) const;  // requires a < b

    /// Pf_i = m_jk m_lm - m_jl m_km + m_jm m_kl for (j,k,l,m) the indices
    /// != i in increasing order.  Computed by the general even-dimensional
    /// Pfaffian expansion.
    std::array<SparsePoly, 5> maximal_pfaffians() const;

    /// Check entry homogeneity against a degree matrix; throws domain_error
    /// on the first mismatch.
    void check_degrees(const SkewDegreeMatrix5& d) const;

private:
    RingPtr ring_;
    std::array<SparsePoly, 10> m_;
};

/// Tom_i: every entry outside row/column i lies in I.
bool is_tom(const SkewMatrix5& m, const TriangularIdeal& ideal, int i);
/// Jer_ij: every entry of rows/columns i and j lies in I.
bool is_jerry(const SkewMatrix5& m, const TriangularIdeal& ideal, int i, int j);

/// Degree-feasibility advisory: upper-triangle positions whose required
/// membership in an ideal with minimum generator degree min_gen_degree is
/// impossible because the entry degree is smaller.
std::vector<std::pair<int, int>> tom_infeasible_entries(const SkewDegreeMatrix5& d,
                                                        int min_gen_degree, int i);
std::vector<std::pair<int, int>> jerry_infeasible_entries(const SkewDegreeMatrix5& d,
                                                          int min_gen_degree, int i, int j);

}  // namespace cy3

#endif
