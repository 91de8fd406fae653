#include "cy3rings/geometry.hpp"

#include <sstream>

namespace cy3 {

std::string WeightedPlane::str() const {
    std::ostringstream out;
    out << "P(" << w[0] << "," << w[1] << "," << w[2] << ")";
    return out.str();
}

BezoutCount weighted_bezout(int d, int e, const WeightedPlane& p) {
    if (d < 1 || e < 1) throw domain_error("weighted_bezout: degrees must be >= 1");
    for (int wi : p.w)
        if (wi < 1) throw domain_error("weighted_bezout: weights must be >= 1");
    Rat value(Int(d) * e, p.product());
    return BezoutCount{value, denominator(value) == 1};
}

RationalSeries determinantal_series(const DeterminantalData& dd) {
    // Hilbert-Burch shape for the 2x2 minors of a 2x3 matrix of forms
    const auto& r = dd.row_degrees;
    const auto& c = dd.col_degrees;
    int R = r[0] + r[1];
    int csum = c[0] + c[1] + c[2];
    IntPolynomial n;
    n.add_term(0, 1);
    n.add_term(R + c[0] + c[1], -1);
    n.add_term(R + c[0] + c[2], -1);
    n.add_term(R + c[1] + c[2], -1);
    n.add_term(R + csum + r[0], 1);
    n.add_term(R + csum + r[1], 1);
    return RationalSeries{n, WeightVector({dd.plane.w[0], dd.plane.w[1], dd.plane.w[2]})};
}

Int determinantal_length(const DeterminantalData& dd) {
    RationalSeries s = determinantal_series(dd);
    if (s.numerator.is_zero())
        throw domain_error("not zero-dimensional by degree count: empty rank-drop locus");
    LeadingCoefficient lead = leading_coefficient_at_one(s);
    if (lead.pole_order != 1)
        throw domain_error("not zero-dimensional by degree count: pole order at t=1 is " +
                           std::to_string(lead.pole_order) + ", expected 1");
    if (denominator(lead.value) != 1)
        throw domain_error("determinantal length is not integral: " + to_string(lead.value));
    return numerator(lead.value);
}

NodeReport standard_choice_nodes(const std::vector<DivisorPattern>& divisors, const Int& shared) {
    if (divisors.empty()) throw domain_error("standard_choice_nodes: no divisors");
    NodeReport report;
    report.shared = shared;
    Int sum = 0;
    for (const auto& div : divisors) {
        Int count = 0;
        for (auto [d, e] : div.pairs) {
            BezoutCount bz = weighted_bezout(d, e, div.plane);
            if (!bz.integral)
                throw domain_error("non-integral Bezout count " + to_string(bz.value) + " on " +
                                   div.name);
            count += numerator(bz.value);
        }
        report.per_divisor.emplace_back(div.name, count);
        sum += count;
    }
    report.total = sum - shared;
    return report;
}

RationalSeries unproject_term(const WeightedPlane& p, int s) {
    if (s < 1) throw domain_error("unproject_term: s must be >= 1");
    return RationalSeries{IntPolynomial::monomial(s, 1),
                          WeightVector({p.w[0], p.w[1], p.w[2], s})};
}

RationalSeries ci_series(const WeightVector& ambient, const std::vector<int>& eq_degrees) {
    IntPolynomial n = IntPolynomial::constant(1);
    for (int d : eq_degrees) {
        if (d < 1) throw domain_error("ci_series: equation degrees must be >= 1");
        n = n * IntPolynomial::one_minus_tk(d);
    }
    return RationalSeries{n, ambient};
}

Int chi_conifold(const Int& chi, const Int& nodes) { return chi + 2 * nodes; }
Int chi_crepant_third(const Int& chi) { return chi + 2; }
Int chi_contract_plane(const Int& chi) { return chi - 2; }

std::string step_name(ConifoldStep::Kind k) {
    switch (k) {
        case ConifoldStep::Kind::resolve_nodes: return "resolve-nodes";
        case ConifoldStep::Kind::crepant_blowup_third: return "crepant-blowup-1/3";
        case ConifoldStep::Kind::contract_plane: return "contract-plane";
    }
    return "?";
}

ConifoldLedger::ConifoldLedger(Int chi_smooth) : chi0_(chi_smooth), chi_(std::move(chi_smooth)) {}

ConifoldLedger& ConifoldLedger::resolve_nodes(const Int& n) {
    chi_ = chi_conifold(chi_, n);
    steps_.push_back({ConifoldStep::Kind::resolve_nodes, n, chi_});
    return *this;
}

ConifoldLedger& ConifoldLedger::crepant_blowup_third() {
    chi_ = chi_crepant_third(chi_);
    steps_.push_back({ConifoldStep::Kind::crepant_blowup_third, 0, chi_});
    return *this;
}

ConifoldLedger& ConifoldLedger::contract_plane() {
    chi_ = chi_contract_plane(chi_);
    steps_.push_back({ConifoldStep::Kind::contract_plane, 0, chi_});
    return *this;
}

}  // namespace cy3
