#ifndef CY3RINGS_RECOGNIZE_HPP
#define CY3RINGS_RECOGNIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cy3rings/orbifold.hpp"
#include "cy3rings/series.hpp"

namespace cy3 {

struct RecognitionConfig {
    int expansion_order = 80;
    int max_weights = 10;
    std::vector<int> hint_weights;  // cleared first, one factor per entry
};

/// Minimal free resolution shape read off a Hilbert numerator.
struct ResolutionShape {
    std::vector<int> equation_degrees;       // |D| = 5 (codim 3) or 9 (codim 4)
    std::vector<int> syzygy_degrees;         // |E| = 16 for codim 4; k - D for codim 3
    long solution_count = 1;                 // how many fits exist
};

/// A recognised weighted-projective embedding candidate.
struct EmbeddingCandidate {
    WeightVector weights;          // ambient P(a_0,...,a_n)
    IntPolynomial numerator;       // Hilbert numerator over those weights
    int k = 0;                     // adjunction number = sum of weights
    int codim_estimate = 0;
    std::vector<int> equation_degrees;
    std::vector<int> syzygy_degrees;         // codim 3 and 4 only
    Rat degree_a3;                           // 0 unless pole order at t=1 is 4
    int pole_order = 0;
    bool a3_at_most_1_15 = false;            // projection heuristic, advisory
    long shape_fit_multiplicity = 1;
    bool via_unprojection_route = false;     // codim-4 degrees refined by projection
};

struct RecognitionFailure {
    std::string reason;
    WeightVector partial_weights;
    IntPolynomial partial_numerator;  // residual state when the attempt stopped
};

struct RecognitionOutcome {
    std::optional<EmbeddingCandidate> candidate;
    std::optional<RecognitionFailure> failure;
    bool ok() const { return candidate.has_value(); }
};

/// One run of the weight-guessing game: clear hint weights, then repeatedly
/// clear the smallest positive coefficient, closing when a negative one
/// appears.  Closure verifies zero tail, Gorenstein symmetry and exact
/// cross-multiplied equality with the input.
RecognitionOutcome recognize(const RationalSeries& p, const RecognitionConfig& cfg = {});

/// Fit of the codim-3 Pfaffian numerator 1 - Σt^d + Σt^{k-d} - t^k or the
/// codim-4 shape 1 - Σ_D t^d + Σ_E t^e - Σ_D t^{k-d} + t^k.  Returns nullopt
/// when no fit exists; ties are broken by fewest masked equation/syzygy pairs,
/// then lexicographically, and the number of fits is reported.
std::optional<ResolutionShape> try_fit_resolution_shape(const IntPolynomial& n, int k, int codim);

/// Throwing wrapper; domain_error("no shape fit ...") carries the residual.
ResolutionShape fit_resolution_shape(const IntPolynomial& n, int k, int codim);

struct LadderAttempt {
    std::vector<int> hints;
    std::string outcome;  // "ok" or the failure reason
};

struct BasketRecognition {
    std::optional<EmbeddingCandidate> candidate;
    std::vector<int> hints_used;
    int attempts = 0;
    std::vector<LadderAttempt> log;
    bool ok() const { return candidate.has_value(); }
};

/// recognize() plus the basket-driven retry ladder: the plain attempt first,
/// then hint packs {r}, {r,r}, ... and {r, smallest weight ≡ c mod r} per
/// basket type.  A candidate must also be able to host the basket (enough
/// ambient weights divisible by r, residue classes present).  When
/// cfg.hint_weights is nonempty only that single attempt runs.
BasketRecognition recognize_with_basket(const RationalSeries& p, const Basket& b,
                                        const RecognitionConfig& cfg = {});

struct IntRange {
    int lo = 0;
    int hi = 0;  // inclusive
};

struct SearchRow {
    int p1 = 0, p2 = 0, n = 0, m = 0;
    std::string status;  // "ok" | "non-arising" | "codim>=5" | "failed"
    std::string detail;
    std::optional<EmbeddingCandidate> candidate;
    std::vector<int> hints_used;
    int attempts = 0;
};

/// The (P1,P2,n,m) candidate search with baskets {n x 1/3(1,1,1), m x 1/5(1,1,3)}.
/// Rows whose series has no pole of order 4 at t=1 are flagged non-arising;
/// weight-budget overflows are reported as codimension >= 5.
std::vector<SearchRow> search(IntRange p1, IntRange p2, IntRange n, IntRange m,
                              const RecognitionConfig& cfg = {});

SearchRow search_one(int p1, int p2, int n, int m, const RecognitionConfig& cfg = {});

Basket standard_basket(int n, int m);

}  // namespace cy3

#endif
