#ifndef CY3RINGS_MULTIPOLY_HPP
#define CY3RINGS_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cy3rings/bigint.hpp"

namespace cy3 {

struct GradedVariable {
    std::string name;
    int weight = 1;
};

/// Declared list of graded variables; shared immutably by all polynomials
/// built over it.
class Ring {
public:
    explicit Ring(std::vector<GradedVariable> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const GradedVariable& var(int i) const { return vars_[static_cast<size_t>(i)]; }
    int index_of(std::string_view name) const;  // -1 if absent
    bool operator==(const Ring& o) const;

private:
    std::vector<GradedVariable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over a Ring, integer coefficients.
class SparsePoly {
public:
    static SparsePoly zero(RingPtr ring);
    static SparsePoly constant(RingPtr ring, Int c);
    static SparsePoly variable(RingPtr ring, int index);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    SparsePoly& add_term(const Exponents& e, const Int& c);

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Int& s) const;
    bool operator==(const SparsePoly& o) const;

    SparsePoly pow(int e) const;

    int weighted_degree(const Exponents& e) const;
    /// Degree if every term shares one weighted degree (zero counts as
    /// homogeneous of any degree).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;

    bool depends_on(int var_index) const;
    /// Replace the variable by g, fully expanding.
    SparsePoly substituted(int var_index, const SparsePoly& g) const;

    std::string str() const;

private:
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}
    RingPtr ring_;
    std::map<Exponents, Int> terms_;
};

/// Ideal whose generators can each be oriented as (variable - tail), the
/// tails forming an acyclic substitution system.  Covers every ideal used
/// here -- coordinate ideals and shifted ones like (x, u + p3, t + q3) --
/// and gives a normal form by substitution, so membership needs no Groebner
/// machinery.
class TriangularIdeal {
public:
    /// Orient each generator; throws domain_error when some generator has no
    /// usable leading variable or no acyclic orientation exists.
    static TriangularIdeal from_generators(const std::vector<SparsePoly>& gens);

    const RingPtr& ring() const { return ring_; }
    /// (leading variable index, tail) pairs in substitution order.
    const std::vector<std::pair<int, SparsePoly>>& oriented() const { return gens_; }
    const std::vector<SparsePoly>& generators() const { return raw_; }

    /// Substitute every leading variable by its tail, in order.
    SparsePoly reduce(const SparsePoly& p) const;
    bool contains(const SparsePoly& p) const { return reduce(p).is_zero(); }

    /// Smallest weighted degree of a generator (for degree-feasibility advisories).
    int min_generator_degree() const;

private:
    RingPtr ring_;
    std::vector<std::pair<int, SparsePoly>> gens_;
    std::vector<SparsePoly> raw_;
};

}  // namespace cy3

#endif
