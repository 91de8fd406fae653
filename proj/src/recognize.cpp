#include "cy3rings/recognize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cy3 {

namespace {

IntPolynomial numerator_from(const TruncatedSeries& s, int upto) {
    IntPolynomial n;
    for (int i = 0; i <= upto && i <= s.order(); ++i) n.add_term(i, s[i]);
    return n;
}

// Symmetry sign eps with n(t) = eps * t^k * n(1/t), or 0 if neither sign fits.
int symmetry_sign(const IntPolynomial& n, int k) {
    IntPolynomial rev = n.reversed(k);
    if (rev == n) return 1;
    if (rev == -n) return -1;
    return 0;
}

// Leading negative block: exponents (with multiplicity) of the first run of
// negative coefficients after the constant term.
std::vector<int> negative_block(const IntPolynomial& n) {
    std::vector<int> out;
    bool in_block = false;
    for (const auto& [e, c] : n.terms()) {
        if (e == 0) continue;
        if (c < 0) {
            in_block = true;
            for (Int i = 0; i < -c; ++i) out.push_back(e);
        } else if (in_block) {
            break;
        }
    }
    return out;
}

}  // namespace

RecognitionOutcome recognize(const RationalSeries& p, const RecognitionConfig& cfg) {
    RecognitionOutcome out;
    TruncatedSeries c = expand(p, cfg.expansion_order);
    if (c[0] != 1) {
        out.failure = RecognitionFailure{"constant term is not 1", WeightVector(), numerator_from(c, 8)};
        return out;
    }

    std::vector<int> weights;
    auto fail = [&](const std::string& reason) {
        out.failure = RecognitionFailure{reason, WeightVector(weights),
                                         numerator_from(c, std::min(cfg.expansion_order, 24))};
        return out;
    };

    std::vector<int> hints = cfg.hint_weights;
    std::sort(hints.begin(), hints.end());
    for (int h : hints) {
        if (h < 1) return fail("hint weight must be >= 1");
        c = mul_factor(c, h, 1);
        weights.push_back(h);
    }

    for (;;) {
        int d = 0;
        for (int i = 1; i <= cfg.expansion_order; ++i) {
            if (c[i] != 0) {
                d = i;
                break;
            }
        }
        if (d == 0) {
            // residual is exactly 1: the free ring over the cleared weights
            EmbeddingCandidate cand;
            cand.weights = WeightVector(weights);
            cand.numerator = IntPolynomial::constant(1);
            cand.k = cand.weights.sum();
            cand.codim_estimate = 0;
            out.candidate = std::move(cand);
            break;
        }
        Int cd = c[d];
        if (cd > 0) {
            if (cd > cfg.max_weights || static_cast<int>(weights.size()) + static_cast<int>(cd) >
                                            cfg.max_weights)
                return fail("weight budget exceeded");
            int mult = static_cast<int>(cd);
            c = mul_factor(c, d, mult);
            weights.insert(weights.end(), static_cast<size_t>(mult), d);
            continue;
        }

        // negative coefficient: attempt closure
        int k = 0;
        for (int w : weights) k += w;
        if (k + 4 > cfg.expansion_order)
            return fail("expansion order too small for closure at k=" + std::to_string(k));
        IntPolynomial numerator = numerator_from(c, k);
        for (int i = k + 1; i <= cfg.expansion_order; ++i)
            if (c[i] != 0) return fail("closure failed: residual tail");
        int eps = symmetry_sign(numerator, k);
        if (eps == 0) return fail("closure failed: asymmetric numerator");
        if (!equals(RationalSeries{numerator, WeightVector(weights)}, p))
            return fail("closure failed: cross-multiplication mismatch");

        EmbeddingCandidate cand;
        cand.weights = WeightVector(weights);
        cand.numerator = numerator;
        cand.k = k;
        // codim = #weights - 4 for a 3-fold; a symmetry sign of the other
        // parity means the series is one dimension short of that reading.
        int c0 = cand.weights.size() - 4;
        int parity = (c0 % 2 == 0) ? 1 : -1;
        cand.codim_estimate = (parity == eps) ? c0 : c0 + 1;
        out.candidate = std::move(cand);
        break;
    }

    EmbeddingCandidate& cand = *out.candidate;
    LeadingCoefficient lead{0, Rat(0)};
    try {
        lead = leading_coefficient_at_one(p);
    } catch (const domain_error&) {
        // polynomial series; leave pole data zero
    }
    cand.pole_order = lead.pole_order;
    if (lead.pole_order == 4) {
        cand.degree_a3 = lead.value;
        cand.a3_at_most_1_15 = lead.value <= Rat(1, 15);
    }

    int codim = cand.codim_estimate;
    if (codim == 1) {
        cand.equation_degrees = {cand.k};
    } else if (codim == 2) {
        cand.equation_degrees = negative_block(cand.numerator);
    } else if (codim == 3 || codim == 4) {
        auto shape = try_fit_resolution_shape(cand.numerator, cand.k, codim);
        if (!shape) {
            RecognitionFailure f{"no shape fit for codim " + std::to_string(codim),
                                 cand.weights, cand.numerator};
            out.candidate.reset();
            out.failure = std::move(f);
            return out;
        }
        cand.equation_degrees = shape->equation_degrees;
        cand.syzygy_degrees = shape->syzygy_degrees;
        cand.shape_fit_multiplicity = shape->solution_count;
    } else if (codim >= 5) {
        cand.equation_degrees = negative_block(cand.numerator);
    }
    return out;
}

namespace {

struct ShapeSolution {
    std::vector<int> d;
    std::vector<int> e;
};

// codim 3: coefficient at j (0<j<k, j != k/2) is -D_j + D_{k-j}; degree-k/2
// equations are invisible.  Forced assignment from the visible coefficients,
// completion at k/2, plus hidden mirror pairs when still short.
std::vector<ShapeSolution> fit_codim3(const IntPolynomial& n, int k) {
    std::map<int, int> forced;
    for (int j = 1; 2 * j < k; ++j) {
        Int cj = n.coefficient(j);
        if (cj < 0)
            forced[j] += static_cast<int>(-cj);
        else if (cj > 0)
            forced[k - j] += static_cast<int>(cj);
    }
    int count = 0;
    for (const auto& [d, m] : forced) count += m;
    std::vector<std::map<int, int>> raw;
    int rem = 5 - count;
    if (rem < 0) return {};
    if (rem == 0) {
        raw.push_back(forced);
    } else {
        if (k % 2 == 0) {
            auto s = forced;
            s[k / 2] += rem;
            raw.push_back(s);
        }
        if (rem % 2 == 0) {
            for (int j = 1; 2 * j < k; ++j) {
                auto s = forced;
                s[j] += rem / 2;
                s[k - j] += rem / 2;
                raw.push_back(s);
            }
        }
    }
    std::vector<ShapeSolution> good;
    for (const auto& s : raw) {
        IntPolynomial test;
        test.add_term(0, 1);
        test.add_term(k, -1);
        for (const auto& [d, m] : s) {
            test.add_term(d, -m);
            test.add_term(k - d, m);
        }
        if (!(test == n)) continue;
        ShapeSolution sol;
        for (const auto& [d, m] : s) sol.d.insert(sol.d.end(), static_cast<size_t>(m), d);
        for (auto it = s.rbegin(); it != s.rend(); ++it)
            sol.e.insert(sol.e.end(), static_cast<size_t>(it->second), k - it->first);
        std::sort(sol.e.begin(), sol.e.end());
        good.push_back(std::move(sol));
    }
    return good;
}

// codim 4: with G = n - 1 - t^k, at each j < k/2 the count E_j of syzygies
// and s_j of equations (at j or its mirror k-j) satisfy E_j - s_j = G_j;
// at j = k/2, E_h - 2 D_h = G_h.  Residual equations beyond the forced
// minimum are placed by bounded search; a placement at j < k/2 masks an
// equation/syzygy pair that the numerator cannot see.
std::vector<ShapeSolution> fit_codim4(const IntPolynomial& n, int k) {
    IntPolynomial g = n;
    g.add_term(0, -1);
    g.add_term(k, -1);
    int half = (k + 1) / 2;  // slots are 1 .. half-1, plus k/2 when k is even
    std::map<int, int> s0, e0;
    for (int j = 1; j < half; ++j) {
        Int gj = g.coefficient(j);
        if (gj < 0)
            s0[j] = static_cast<int>(-gj);
        else if (gj > 0)
            e0[j] = static_cast<int>(gj);
    }
    int forced = 0;
    for (const auto& [j, m] : s0) forced += m;
    int residual = 9 - forced;
    if (residual < 0) return {};

    std::vector<int> slots;
    for (int j = 1; j < half; ++j) slots.push_back(j);
    if (k % 2 == 0) slots.push_back(k / 2);

    std::vector<ShapeSolution> good;
    std::map<int, int> s = s0, e = e0;

    auto emit = [&]() {
        std::map<int, int> efull = e;
        if (k % 2 == 0) {
            int h = k / 2;
            Int eh = g.coefficient(h) + 2 * s[h];
            if (eh < 0) return;
            if (eh > 0) efull[h] = static_cast<int>(eh);
        }
        int etotal = 0;
        for (const auto& [j, m] : efull) etotal += (2 * j == k) ? m : 2 * m;
        if (etotal != 16) return;
        ShapeSolution sol;
        for (const auto& [j, m] : s)
            if (m > 0) sol.d.insert(sol.d.end(), static_cast<size_t>(m), j);
        if (sol.d.empty()) return;
        for (const auto& [j, m] : efull) {
            sol.e.insert(sol.e.end(), static_cast<size_t>(m), j);
            if (2 * j != k) sol.e.insert(sol.e.end(), static_cast<size_t>(m), k - j);
        }
        std::sort(sol.e.begin(), sol.e.end());
        // minimal-resolution sanity: a syzygy involves equations of strictly
        // smaller degree
        if (!sol.e.empty() && sol.e.front() <= sol.d.front()) return;
        good.push_back(std::move(sol));
    };

    // distribute `residual` equations over the slots; at j < k/2 each unit
    // also adds a masked syzygy at j
    auto place = [&](auto&& self, size_t idx, int rem) -> void {
        if (rem == 0) {
            emit();
            return;
        }
        if (idx == slots.size()) return;
        int j = slots[idx];
        for (int put = rem; put >= 0; --put) {
            s[j] += put;
            if (2 * j != k) e[j] += put;
            self(self, idx + 1, rem - put);
            s[j] -= put;
            if (2 * j != k) e[j] -= put;
        }
    };
    place(place, 0, residual);
    return good;
}

long hidden_pairs(const ShapeSolution& sol, const IntPolynomial& n, int k, int codim) {
    // units of equation/syzygy (or mirror-pair) mass invisible in the numerator
    std::map<int, int> d;
    for (int x : sol.d) d[x]++;
    long hidden = 0;
    if (codim == 3) {
        for (const auto& [j, m] : d) {
            if (2 * j == k) continue;
            Int cj = n.coefficient(std::min(j, k - j));
            int visible = (2 * j < k) ? static_cast<int>(std::max<Int>(-cj, 0))
                                      : static_cast<int>(std::max<Int>(cj, 0));
            if (m > visible && 2 * j < k) hidden += m - visible;
        }
    } else {
        IntPolynomial g = n;
        g.add_term(0, -1);
        g.add_term(k, -1);
        std::map<int, int> sj;
        for (const auto& [x, m] : d) sj[std::min(x, k - x)] += m;
        for (const auto& [j, m] : sj) {
            if (2 * j == k) continue;
            Int gj = g.coefficient(j);
            int visible = static_cast<int>(std::max<Int>(-gj, 0));
            if (m > visible) hidden += m - visible;
        }
    }
    return hidden;
}

}  // namespace

std::optional<ResolutionShape> try_fit_resolution_shape(const IntPolynomial& n, int k, int codim) {
    if (codim != 3 && codim != 4) throw domain_error("fit_resolution_shape: codim must be 3 or 4");
    std::vector<ShapeSolution> sols = (codim == 3) ? fit_codim3(n, k) : fit_codim4(n, k);
    if (sols.empty()) return std::nullopt;
    std::stable_sort(sols.begin(), sols.end(), [&](const ShapeSolution& a, const ShapeSolution& b) {
        long ha = hidden_pairs(a, n, k, codim), hb = hidden_pairs(b, n, k, codim);
        if (ha != hb) return ha < hb;
        if (a.d != b.d) return a.d < b.d;
        return a.e < b.e;
    });
    std::set<std::pair<std::vector<int>, std::vector<int>>> uniq;
    for (const auto& s : sols) uniq.emplace(s.d, s.e);
    ResolutionShape shape;
    shape.equation_degrees = sols.front().d;
    shape.syzygy_degrees = sols.front().e;
    shape.solution_count = static_cast<long>(uniq.size());
    return shape;
}

ResolutionShape fit_resolution_shape(const IntPolynomial& n, int k, int codim) {
    auto shape = try_fit_resolution_shape(n, k, codim);
    if (!shape)
        throw domain_error("no shape fit: codim " + std::to_string(codim) + ", k " +
                           std::to_string(k) + ", residual " + n.str());
    return *shape;
}

namespace {

// Basket singularities must arise as restrictions of the ambient orbifold
// strata.  For each index r: at least one ambient weight divisible by r
// (two when the basket carries several such points, so the index-r stratum
// is positive-dimensional), and each weight residue a,b,c mod r must occur
// among the ambient weights.
bool basket_supportable(const WeightVector& weights, const Basket& b) {
    std::map<int, int> mults;
    std::map<int, std::set<int>> residues;
    for (const auto& [q, m] : b.entries()) {
        mults[q.r] += m;
        for (int x : q.abc) residues[q.r].insert(x % q.r);
    }
    for (const auto& [r, mu] : mults) {
        int divisible = 0;
        for (int w : weights.values())
            if (w % r == 0) ++divisible;
        if (divisible < (mu >= 2 ? 2 : 1)) return false;
        for (int rho : residues[r]) {
            if (rho == 0) continue;
            bool found = false;
            for (int w : weights.values())
                if (w % r == rho) found = true;
            if (!found) return false;
        }
    }
    return true;
}

// Codim-4 equation degrees via the construction the candidates come from:
// project a 1/3(1,1,1) point, fit the codim-3 Pfaffian shape of the image
// Y, and add
// back the four unprojection equations s*g_i with deg s = 3 and g_i the
// generators of the P^2 divisor's ideal in the Y ambient.
std::optional<ShapeSolution> unprojection_route(const RationalSeries& p,
                                                const EmbeddingCandidate& cand) {
    const WeightVector& w = cand.weights;
    if (w.multiplicity_of(3) < 1 || w.multiplicity_of(1) < 3) return std::nullopt;
    WeightVector wy = w.minus(WeightVector({3}));
    if (wy.size() != 7) return std::nullopt;

    RationalSeries up3{IntPolynomial::monomial(3, 1), WeightVector({1, 1, 1, 3})};
    RationalSeries py = add(p, scale(up3, -1));
    int ky = wy.sum();
    TruncatedSeries c = expand(py, ky + 25);
    for (int a : wy.values()) c = mul_factor(c, a, 1);
    for (int i = ky + 1; i <= c.order(); ++i)
        if (c[i] != 0) return std::nullopt;
    IntPolynomial ny;
    for (int i = 0; i <= ky; ++i) ny.add_term(i, c[i]);
    auto fit3 = try_fit_resolution_shape(ny, ky, 3);
    if (!fit3) return std::nullopt;

    std::vector<int> d4 = fit3->equation_degrees;
    WeightVector gens = wy.minus(WeightVector({1, 1, 1}));
    for (int gdeg : gens.values()) d4.push_back(3 + gdeg);
    std::sort(d4.begin(), d4.end());
    if (d4.size() != 9) return std::nullopt;

    // syzygies forced by the numerator identity; validate before accepting
    IntPolynomial e = cand.numerator;
    e.add_term(0, -1);
    e.add_term(cand.k, -1);
    for (int d : d4) {
        e.add_term(d, 1);
        e.add_term(cand.k - d, 1);
    }
    Int total = 0;
    std::vector<int> elist;
    for (const auto& [exp, coeff] : e.terms()) {
        if (coeff < 0) return std::nullopt;
        total += coeff;
        for (Int i = 0; i < coeff; ++i) elist.push_back(exp);
    }
    if (total != 16) return std::nullopt;
    if (!(e.reversed(cand.k) == e)) return std::nullopt;
    return ShapeSolution{std::move(d4), std::move(elist)};
}

std::vector<std::vector<int>> hint_ladder(const Basket& b) {
    std::vector<std::vector<int>> out;
    std::map<int, int> mults;
    std::map<int, std::set<int>> residues;
    for (const auto& [q, m] : b.entries()) {
        mults[q.r] += m;
        for (int x : q.abc)
            if (x % q.r != 0) residues[q.r].insert(x % q.r);
    }
    for (const auto& [r, mu] : mults)
        for (int j = 1; j <= std::min(mu, 3); ++j)
            out.push_back(std::vector<int>(static_cast<size_t>(j), r));
    for (const auto& [r, res] : residues)
        for (int rho : res) out.push_back({r, rho});
    std::vector<std::vector<int>> dedup;
    for (auto& h : out)
        if (std::find(dedup.begin(), dedup.end(), h) == dedup.end()) dedup.push_back(h);
    return dedup;
}

}  // namespace

BasketRecognition recognize_with_basket(const RationalSeries& p, const Basket& b,
                                        const RecognitionConfig& cfg) {
    std::vector<std::vector<int>> attempts;
    if (!cfg.hint_weights.empty()) {
        attempts.push_back(cfg.hint_weights);
    } else {
        attempts.push_back({});
        auto ladder = hint_ladder(b);
        attempts.insert(attempts.end(), ladder.begin(), ladder.end());
    }

    BasketRecognition result;
    for (const auto& hints : attempts) {
        ++result.attempts;
        RecognitionConfig attempt_cfg = cfg;
        attempt_cfg.hint_weights = hints;
        RecognitionOutcome outcome = recognize(p, attempt_cfg);
        if (!outcome.ok()) {
            result.log.push_back({hints, outcome.failure->reason});
            continue;
        }
        EmbeddingCandidate cand = *outcome.candidate;
        if (!basket_supportable(cand.weights, b)) {
            result.log.push_back({hints, "ambient cannot host basket"});
            continue;
        }
        if (cand.codim_estimate == 4 && cand.shape_fit_multiplicity > 1) {
            if (auto route = unprojection_route(p, cand)) {
                cand.equation_degrees = route->d;
                cand.syzygy_degrees = route->e;
                cand.via_unprojection_route = true;
            }
        }
        result.log.push_back({hints, "ok"});
        result.hints_used = hints;
        result.candidate = std::move(cand);
        return result;
    }
    return result;
}

Basket standard_basket(int n, int m) {
    Basket b;
    if (n > 0) b.add(QuotientSingularity(3, 1, 1, 1), n);
    if (m > 0) b.add(QuotientSingularity(5, 1, 1, 3), m);
    return b;
}

SearchRow search_one(int p1, int p2, int n, int m, const RecognitionConfig& cfg) {
    if (n < 0 || m < 0) throw domain_error("search: n and m must be >= 0");
    SearchRow row;
    row.p1 = p1;
    row.p2 = p2;
    row.n = n;
    row.m = m;
    Basket b = standard_basket(n, m);
    RationalSeries series = assemble(InitialData{p1, p2}, b);
    if (pole_order_at_one(series) != 4) {
        row.status = "non-arising";
        row.detail = "no order-4 pole at t=1";
        return row;
    }
    BasketRecognition rec = recognize_with_basket(series, b, cfg);
    row.attempts = rec.attempts;
    row.hints_used = rec.hints_used;
    if (rec.ok()) {
        row.status = "ok";
        row.candidate = rec.candidate;
        return row;
    }
    bool budget = false;
    std::string last;
    for (const auto& att : rec.log) {
        if (att.outcome.find("weight budget") != std::string::npos) budget = true;
        last = att.outcome;
    }
    row.status = budget ? "codim>=5" : "failed";
    row.detail = last;
    return row;
}

std::vector<SearchRow> search(IntRange p1, IntRange p2, IntRange n, IntRange m,
                              const RecognitionConfig& cfg) {
    std::vector<SearchRow> rows;
    for (int a = p1.lo; a <= p1.hi; ++a)
        for (int b = p2.lo; b <= p2.hi; ++b)
            for (int x = n.lo; x <= n.hi; ++x)
                for (int y = m.lo; y <= m.hi; ++y) rows.push_back(search_one(a, b, x, y, cfg));
    return rows;
}

}  // namespace cy3
