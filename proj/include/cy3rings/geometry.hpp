#ifndef CY3RINGS_GEOMETRY_HPP
#define CY3RINGS_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

#include "cy3rings/series.hpp"

namespace cy3 {

/// P(w1,w2,w3); P(1,1,1) is the ordinary plane.
struct WeightedPlane {
    std::array<int, 3> w{1, 1, 1};
    Int product() const { return Int(w[0]) * w[1] * w[2]; }
    std::string str() const;
};

struct BezoutCount {
    Rat value;
    bool integral = false;
};

/// d*e / (w1*w2*w3), integrality flagged.
BezoutCount weighted_bezout(int d, int e, const WeightedPlane& p);

/// 2x3 matrix of forms on a weighted plane: entry degrees r_i + c_j.
struct DeterminantalData {
    std::array<int, 2> row_degrees{0, 0};
    std::array<int, 3> col_degrees{0, 0, 0};
    WeightedPlane plane;
};

/// Hilbert-Burch series of the rank-drop locus:
/// (1 - Σ_{i<j} t^{R+c_i+c_j} + t^{R+Σc+r_1} + t^{R+Σc+r_2}) / ∏(1-t^{w_i}).
RationalSeries determinantal_series(const DeterminantalData& dd);

/// Length of the rank-drop locus, via the pole at t=1.  Throws domain_error
/// when the locus is not zero-dimensional (pole order != 1, reported) or the
/// length is not integral.
Int determinantal_length(const DeterminantalData& dd);

/// One divisor of a standard-choice configuration: complete-intersection
/// pieces (d,e) on a weighted plane.
struct DivisorPattern {
    std::string name;
    WeightedPlane plane;
    std::vector<std::pair<int, int>> pairs;
};

struct NodeReport {
    std::vector<std::pair<std::string, Int>> per_divisor;
    Int shared = 0;
    Int total = 0;  // sum of counts minus shared
};

/// Sum the weighted-Bezout counts per divisor and subtract the declared
/// shared points.  Throws domain_error on a non-integral Bezout count.
NodeReport standard_choice_nodes(const std::vector<DivisorPattern>& divisors, const Int& shared);

/// Kustin-Miller unprojection step on the Hilbert series:
/// t^s / ((1-t^s) ∏(1-t^{w_i})).
RationalSeries unproject_term(const WeightedPlane& p, int s);

/// Complete-intersection series ∏(1-t^{d_j}) / ∏(1-t^{a_i}).
RationalSeries ci_series(const WeightVector& ambient, const std::vector<int>& eq_degrees);

/// Conifold transition: small resolution of n nodes raises chi by 2n.
Int chi_conifold(const Int& chi, const Int& nodes);
/// Crepant resolution of 1/3(1,1,1) (exceptional P^2): +2.
Int chi_crepant_third(const Int& chi);
/// Contraction of a plane to a point: -2.
Int chi_contract_plane(const Int& chi);

struct ConifoldStep {
    enum class Kind { resolve_nodes, crepant_blowup_third, contract_plane };
    Kind kind;
    Int nodes;      // for resolve_nodes
    Int chi_after;  // running value
};

std::string step_name(ConifoldStep::Kind k);

/// Running Euler-characteristic bookkeeping.  Absolute values are
/// convention-dependent; differences between parallel ledgers are the
/// meaningful outputs.
class ConifoldLedger {
public:
    explicit ConifoldLedger(Int chi_smooth);

    ConifoldLedger& resolve_nodes(const Int& n);
    ConifoldLedger& crepant_blowup_third();
    ConifoldLedger& contract_plane();

    const Int& chi() const { return chi_; }
    const Int& chi_smooth() const { return chi0_; }
    const std::vector<ConifoldStep>& steps() const { return steps_; }

private:
    Int chi0_;
    Int chi_;
    std::vector<ConifoldStep> steps_;
};

}  // namespace cy3

#endif
