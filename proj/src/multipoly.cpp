#include "cy3rings/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cy3 {

Ring::Ring(std::vector<GradedVariable> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw domain_error("Ring: empty variable name");
        if (v.weight < 1) throw domain_error("Ring: variable weight must be positive");
        if (!seen.insert(v.name).second) throw domain_error("Ring: duplicate variable " + v.name);
    }
}

int Ring::index_of(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Ring::operator==(const Ring& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
    return true;
}

namespace {
void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw domain_error("SparsePoly: mixed rings");
}
}  // namespace

SparsePoly SparsePoly::zero(RingPtr ring) { return SparsePoly(std::move(ring)); }

SparsePoly SparsePoly::constant(RingPtr ring, Int c) {
    SparsePoly p(std::move(ring));
    if (c != 0) p.terms_.emplace(Exponents(static_cast<size_t>(p.ring_->size()), 0), std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(RingPtr ring, int index) {
    SparsePoly p(std::move(ring));
    if (index < 0 || index >= p.ring_->size()) throw domain_error("SparsePoly: bad variable index");
    Exponents e(static_cast<size_t>(p.ring_->size()), 0);
    e[static_cast<size_t>(index)] = 1;
    p.terms_.emplace(std::move(e), Int(1));
    return p;
}

SparsePoly& SparsePoly::add_term(const Exponents& e, const Int& c) {
    if (static_cast<int>(e.size()) != ring_->size())
        throw domain_error("SparsePoly: exponent vector size mismatch");
    if (c == 0) return *this;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_same_ring(ring_, o.ring_);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    check_same_ring(ring_, o.ring_);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_same_ring(ring_, o.ring_);
    SparsePoly r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SparsePoly SparsePoly::operator*(const Int& s) const {
    SparsePoly r(ring_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    check_same_ring(ring_, o.ring_);
    return terms_ == o.terms_;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw domain_error("SparsePoly::pow: negative exponent");
    SparsePoly r = constant(ring_, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

int SparsePoly::weighted_degree(const Exponents& e) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * ring_->var(static_cast<int>(i)).weight;
    return d;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = weighted_degree(e);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

bool SparsePoly::is_homogeneous() const { return homogeneous_degree().has_value(); }

bool SparsePoly::depends_on(int var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<size_t>(var_index)] > 0) return true;
    return false;
}

SparsePoly SparsePoly::substituted(int var_index, const SparsePoly& g) const {
    check_same_ring(ring_, g.ring_);
    SparsePoly r(ring_);
    for (const auto& [e, c] : terms_) {
        int power = e[static_cast<size_t>(var_index)];
        Exponents rest = e;
        rest[static_cast<size_t>(var_index)] = 0;
        SparsePoly term(ring_);
        term.add_term(rest, c);
        r = r + term * g.pow(power);
    }
    return r;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        bool any_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << ring_->var(static_cast<int>(i)).name;
            if (e[i] != 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << mono.str();
        }
        first = false;
    }
    return out.str();
}

TriangularIdeal TriangularIdeal::from_generators(const std::vector<SparsePoly>& gens) {
    if (gens.empty()) throw domain_error("TriangularIdeal: no generators");
    TriangularIdeal ideal;
    ideal.ring_ = gens.front().ring();
    ideal.raw_ = gens;

    // candidate leading variables per generator: v occurring exactly once,
    // linearly, with unit coefficient
    int nvars = ideal.ring_->size();
    std::vector<std::vector<std::pair<int, SparsePoly>>> options;
    for (const auto& g : gens) {
        check_same_ring(ideal.ring_, g.ring());
        std::vector<std::pair<int, SparsePoly>> opts;
        for (int v = 0; v < nvars; ++v) {
            Exponents unit(static_cast<size_t>(nvars), 0);
            unit[static_cast<size_t>(v)] = 1;
            auto it = g.terms().find(unit);
            if (it == g.terms().end()) continue;
            if (it->second != 1 && it->second != -1) continue;
            SparsePoly rest = g;
            rest.add_term(unit, -it->second);
            if (rest.depends_on(v)) continue;
            // g = coeff * v + rest, so v = -rest/coeff; tail = -rest * coeff
            SparsePoly tail = (it->second == 1) ? -rest : rest;
            opts.emplace_back(v, tail);
        }
        if (opts.empty())
            throw domain_error("TriangularIdeal: generator not orientable as variable minus tail: " +
                               g.str());
        options.push_back(std::move(opts));
    }

    // choose distinct leading variables admitting an acyclic substitution
    // order (tail of an earlier generator may mention later leading vars only
    // if we substitute in dependency order; we search for any valid choice)
    size_t n = gens.size();
    std::vector<int> chosen(n, -1);
    std::vector<SparsePoly> tails(n, SparsePoly::zero(ideal.ring_));
    std::vector<bool> used(static_cast<size_t>(nvars), false);

    auto acyclic_order = [&]() -> std::optional<std::vector<size_t>> {
        // edge i -> j when tail_i depends on leading var of j; topo-sort so
        // dependencies are substituted after their dependents
        std::vector<std::set<size_t>> deps(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && tails[i].depends_on(chosen[j])) deps[i].insert(j);
        std::vector<size_t> order;
        std::vector<int> state(n, 0);
        auto visit = [&](auto&& self, size_t i) -> bool {
            if (state[i] == 1) return false;  // cycle
            if (state[i] == 2) return true;
            state[i] = 1;
            for (size_t j : deps[i])
                if (!self(self, j)) return false;
            state[i] = 2;
            order.push_back(i);
            return true;
        };
        for (size_t i = 0; i < n; ++i)
            if (!visit(visit, i)) return std::nullopt;
        // substitute dependents first: reverse postorder
        std::reverse(order.begin(), order.end());
        return order;
    };

    auto assign = [&](auto&& self, size_t i) -> bool {
        if (i == n) return acyclic_order().has_value();
        for (const auto& [v, tail] : options[i]) {
            if (used[static_cast<size_t>(v)]) continue;
            if (tail.depends_on(v)) continue;
            used[static_cast<size_t>(v)] = true;
            chosen[i] = v;
            tails[i] = tail;
            if (self(self, i + 1)) return true;
            used[static_cast<size_t>(v)] = false;
        }
        return false;
    };
    if (!assign(assign, 0))
        throw domain_error("TriangularIdeal: no acyclic orientation of the generators exists");

    auto order = acyclic_order();
    for (size_t idx : *order) ideal.gens_.emplace_back(chosen[idx], tails[idx]);
    return ideal;
}

SparsePoly TriangularIdeal::reduce(const SparsePoly& p) const {
    check_same_ring(ring_, p.ring());
    SparsePoly r = p;
    for (const auto& [v, tail] : gens_) r = r.substituted(v, tail);
    return r;
}

int TriangularIdeal::min_generator_degree() const {
    int best = -1;
    for (const auto& g : raw_) {
        auto d = g.homogeneous_degree();
        int gd;
        if (d) {
            gd = *d;
        } else {
            gd = 0;
            bool first = true;
            for (const auto& [e, c] : g.terms()) {
                int t = g.weighted_degree(e);
                if (first || t < gd) gd = t;
                first = false;
            }
        }
        if (best < 0 || gd < best) best = gd;
    }
    return best;
}

}  // namespace cy3
