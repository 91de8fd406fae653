// Python bindings for the main pipeline operations.  Exact integers cross
// the boundary as Python ints (via decimal strings), rationals as (num, den)
// pairs ready for fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cy3rings/geometry.hpp"
#include "cy3rings/matrix_doc.hpp"
#include "cy3rings/orbifold.hpp"
#include "cy3rings/pfaffian.hpp"
#include "cy3rings/recognize.hpp"
#include "cy3rings/web.hpp"

namespace py = pybind11;
using namespace cy3;

namespace {

py::int_ big(const Int& v) { return py::int_(py::str(v.str())); }

py::tuple rat(const Rat& v) { return py::make_tuple(big(numerator(v)), big(denominator(v))); }

py::dict poly_dict(const IntPolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = big(c);
    return d;
}

py::dict series_dict(const RationalSeries& r) {
    py::dict d;
    d["numerator"] = poly_dict(r.numerator);
    d["denominator_factors"] = r.denominator.values();
    d["string"] = r.str();
    return d;
}

py::list expansion_list(const TruncatedSeries& t) {
    py::list out;
    for (int i = 0; i <= t.order(); ++i) out.append(big(t[i]));
    return out;
}

py::dict candidate_dict(const EmbeddingCandidate& c) {
    py::dict d;
    d["weights"] = c.weights.values();
    d["numerator"] = poly_dict(c.numerator);
    d["numerator_string"] = c.numerator.str();
    d["k"] = c.k;
    d["codim"] = c.codim_estimate;
    d["equation_degrees"] = c.equation_degrees;
    d["syzygy_degrees"] = c.syzygy_degrees;
    d["degree_A3"] = rat(c.degree_a3);
    d["pole_order"] = c.pole_order;
    d["A3_at_most_1_15"] = c.a3_at_most_1_15;
    d["shape_fit_multiplicity"] = c.shape_fit_multiplicity;
    d["via_unprojection_route"] = c.via_unprojection_route;
    return d;
}

py::dict row_dict(const SearchRow& row) {
    py::dict d;
    d["p1"] = row.p1;
    d["p2"] = row.p2;
    d["n"] = row.n;
    d["m"] = row.m;
    d["status"] = row.status;
    if (!row.detail.empty()) d["detail"] = row.detail;
    if (row.candidate) d["candidate"] = candidate_dict(*row.candidate);
    d["hints_used"] = row.hints_used;
    d["attempts"] = row.attempts;
    return d;
}

RationalSeries assemble_from(int p1, int p2, const std::string& basket) {
    return assemble(InitialData{p1, p2}, Basket::parse(basket));
}

WeightedPlane plane_from(const std::vector<int>& w) {
    if (w.size() != 3) throw domain_error("plane needs exactly three weights");
    return WeightedPlane{{w[0], w[1], w[2]}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graded-ring constructions of polarised Calabi-Yau 3-fold orbifolds";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    m.def(
        "assemble",
        [](int p1, int p2, const std::string& basket) {
            return series_dict(assemble_from(p1, p2, basket));
        },
        py::arg("p1"), py::arg("p2"), py::arg("basket") = "",
        "Hilbert series of the candidate with the given initial data and basket");

    m.def(
        "expand",
        [](int p1, int p2, const std::string& basket, int order) {
            return expansion_list(expand(assemble_from(p1, p2, basket), order));
        },
        py::arg("p1"), py::arg("p2"), py::arg("basket"), py::arg("order"),
        "coefficients of the assembled series up to the given order");

    m.def(
        "recognize",
        [](int p1, int p2, const std::string& basket, const std::vector<int>& hints, int order,
           int max_weights) {
            Basket b = Basket::parse(basket);
            RecognitionConfig cfg;
            cfg.expansion_order = order;
            cfg.max_weights = max_weights;
            cfg.hint_weights = hints;
            BasketRecognition rec = recognize_with_basket(assemble(InitialData{p1, p2}, b), b, cfg);
            py::dict d;
            d["ok"] = rec.ok();
            d["attempts"] = rec.attempts;
            d["hints_used"] = rec.hints_used;
            if (rec.ok()) {
                d["candidate"] = candidate_dict(*rec.candidate);
            } else {
                py::list log;
                for (const auto& att : rec.log)
                    log.append(py::make_tuple(att.hints, att.outcome));
                d["log"] = log;
            }
            return d;
        },
        py::arg("p1"), py::arg("p2"), py::arg("basket") = "",
        py::arg("hints") = std::vector<int>{}, py::arg("order") = 80,
        py::arg("max_weights") = 10,
        "recognise a weighted-projective embedding, with the basket-driven retry ladder");

    m.def(
        "search",
        [](std::pair<int, int> p1, std::pair<int, int> p2, std::pair<int, int> n,
           std::pair<int, int> m) {
            py::list out;
            for (const SearchRow& row : search(IntRange{p1.first, p1.second},
                                               IntRange{p2.first, p2.second},
                                               IntRange{n.first, n.second},
                                               IntRange{m.first, m.second}))
                out.append(row_dict(row));
            return out;
        },
        py::arg("p1"), py::arg("p2"), py::arg("n"), py::arg("m"),
        "scan inclusive (lo, hi) ranges of (P1, P2, n, m)");

    m.def(
        "sign_changes",
        [](const py::dict& coeffs) {
            IntPolynomial p;
            for (const auto& item : coeffs)
                p.add_term(py::cast<int>(item.first), Int(py::cast<std::string>(py::str(item.second))));
            return sign_changes(p);
        },
        py::arg("numerator"), "sign alternations in a sparse {exponent: coefficient} polynomial");

    m.def(
        "fit_resolution_shape",
        [](const py::dict& coeffs, int k, int codim) {
            IntPolynomial p;
            for (const auto& item : coeffs)
                p.add_term(py::cast<int>(item.first), Int(py::cast<std::string>(py::str(item.second))));
            ResolutionShape s = fit_resolution_shape(p, k, codim);
            py::dict d;
            d["equation_degrees"] = s.equation_degrees;
            d["syzygy_degrees"] = s.syzygy_degrees;
            d["solution_count"] = s.solution_count;
            return d;
        },
        py::arg("numerator"), py::arg("k"), py::arg("codim"));

    m.def(
        "pfaffian_degrees",
        [](const std::vector<int>& upper) {
            if (upper.size() != 10)
                throw domain_error("need the ten upper-triangle degrees b12..b45");
            std::array<int, 10> b;
            std::copy(upper.begin(), upper.end(), b.begin());
            EntryWeightSolution sol = solve_entry_weights(SkewDegreeMatrix5(b));
            py::dict d;
            py::list q;
            for (const Rat& qi : sol.q) q.append(rat(qi));
            d["q"] = q;
            d["pfaffian_degrees"] =
                std::vector<int>(sol.pfaffian_degrees.begin(), sol.pfaffian_degrees.end());
            d["k"] = sol.k;
            IntPolynomial n = pfaffian_numerator(sol.pfaffian_degrees, sol.k);
            d["numerator"] = poly_dict(n);
            d["numerator_string"] = n.str();
            return d;
        },
        py::arg("upper_degrees"),
        "entry-weight solve and Pfaffian numerator for a 5x5 degree matrix");

    m.def(
        "check_format",
        [](const std::string& document) {
            MatrixDocument doc = parse_matrix_document(document);
            if (!doc.matrix) throw domain_error("document has no matrix");
            if (!doc.ideal) throw domain_error("document has no ideal");
            py::dict d;
            for (int i = 1; i <= 5; ++i)
                d[py::str("tom_" + std::to_string(i))] = is_tom(*doc.matrix, *doc.ideal, i);
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    d[py::str("jerry_" + std::to_string(i) + std::to_string(j))] =
                        is_jerry(*doc.matrix, *doc.ideal, i, j);
            return d;
        },
        py::arg("document"), "all Tom/Jerry verdicts for a matrix/ideal document");

    m.def(
        "maximal_pfaffians",
        [](const std::string& document) {
            MatrixDocument doc = parse_matrix_document(document);
            if (!doc.matrix) throw domain_error("document has no matrix");
            std::vector<std::string> out;
            for (const SparsePoly& p : doc.matrix->maximal_pfaffians()) out.push_back(p.str());
            return out;
        },
        py::arg("document"));

    m.def(
        "weighted_bezout",
        [](int d, int e, const std::vector<int>& plane) {
            return rat(weighted_bezout(d, e, plane_from(plane)).value);
        },
        py::arg("d"), py::arg("e"), py::arg("plane"));

    m.def(
        "determinantal_length",
        [](const std::vector<int>& rows, const std::vector<int>& cols,
           const std::vector<int>& plane) {
            if (rows.size() != 2 || cols.size() != 3)
                throw domain_error("need two row degrees and three column degrees");
            DeterminantalData dd{{rows[0], rows[1]}, {cols[0], cols[1], cols[2]},
                                 plane_from(plane)};
            return big(determinantal_length(dd));
        },
        py::arg("rows"), py::arg("cols"), py::arg("plane"));

    m.def(
        "standard_choice_nodes",
        [](const std::vector<std::tuple<std::string, std::vector<int>,
                                        std::vector<std::pair<int, int>>>>& divisors,
           long shared) {
            std::vector<DivisorPattern> ds;
            for (const auto& [name, plane, pairs] : divisors)
                ds.push_back({name, plane_from(plane), pairs});
            NodeReport rep = standard_choice_nodes(ds, Int(shared));
            py::dict d;
            py::dict per;
            for (const auto& [name, count] : rep.per_divisor) per[py::str(name)] = big(count);
            d["per_divisor"] = per;
            d["shared"] = big(rep.shared);
            d["total"] = big(rep.total);
            return d;
        },
        py::arg("divisors"), py::arg("shared") = 0,
        "divisors are (name, [w1,w2,w3], [(d,e), ...]) triples");

    m.def(
        "unproject_term",
        [](const std::vector<int>& plane, int s) {
            return series_dict(unproject_term(plane_from(plane), s));
        },
        py::arg("plane"), py::arg("s"));

    m.def(
        "ci_series",
        [](const std::vector<int>& ambient, const std::vector<int>& degrees) {
            return series_dict(ci_series(WeightVector(ambient), degrees));
        },
        py::arg("ambient"), py::arg("equation_degrees"));

    m.def(
        "series_equal",
        [](int p1a, int p2a, const std::string& ba, int p1b, int p2b, const std::string& bb) {
            return equals(assemble_from(p1a, p2a, ba), assemble_from(p1b, p2b, bb));
        },
        py::arg("p1_left"), py::arg("p2_left"), py::arg("basket_left"), py::arg("p1_right"),
        py::arg("p2_right"), py::arg("basket_right"));

    m.def("chi_conifold",
          [](long chi, long nodes) { return big(chi_conifold(Int(chi), Int(nodes))); });
    m.def("chi_crepant_third", [](long chi) { return big(chi_crepant_third(Int(chi))); });
    m.def("chi_contract_plane", [](long chi) { return big(chi_contract_plane(Int(chi))); });

    m.def(
        "build_web",
        [](std::pair<int, int> p1, std::pair<int, int> p2, std::pair<int, int> n,
           std::pair<int, int> m, const std::map<std::pair<int, int>, int>& families,
           int max_codim) {
            std::vector<SearchRow> all =
                search(IntRange{p1.first, p1.second}, IntRange{p2.first, p2.second},
                       IntRange{n.first, n.second}, IntRange{m.first, m.second});
            std::vector<SearchRow> rows;
            for (const SearchRow& row : all)
                if (row.status == "ok" && row.candidate->codim_estimate <= max_codim)
                    rows.push_back(row);
            WebGraph g = build_web(rows, families);
            py::dict d;
            py::list nodes;
            for (const WebNode& node : g.nodes) {
                py::dict nd;
                nd["n"] = node.n;
                nd["m"] = node.m;
                nd["codim"] = node.codim;
                if (node.families) nd["families"] = *node.families;
                nodes.append(nd);
            }
            d["nodes"] = nodes;
            py::list edges;
            for (const WebEdge& e : g.edges)
                edges.append(py::make_tuple(e.from, e.to, e.label));
            d["edges"] = edges;
            d["connected"] = g.connected;
            d["dot"] = to_dot(g);
            return d;
        },
        py::arg("p1"), py::arg("p2"), py::arg("n"), py::arg("m"),
        py::arg("families") = std::map<std::pair<int, int>, int>{}, py::arg("max_codim") = 4);
}
