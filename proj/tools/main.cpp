// Command-line surface for the graded-ring pipeline: assemble Hilbert
// series, recognise weighted-projective embeddings, search candidate tables,
// run the Pfaffian degree calculus and format checks, and audit node counts
// and Euler characteristics.  All output is deterministic; exact values are
// serialised as decimal strings.
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cy3rings/geometry.hpp"
#include "cy3rings/matrix_doc.hpp"
#include "cy3rings/orbifold.hpp"
#include "cy3rings/pfaffian.hpp"
#include "cy3rings/recognize.hpp"
#include "cy3rings/web.hpp"

using json = nlohmann::ordered_json;
using namespace cy3;

namespace {

json poly_json(const IntPolynomial& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.str();
    return json{{"string", p.str()}, {"coefficients", coeffs}};
}

json series_json(const RationalSeries& r) {
    json den = json::array();
    for (int a : r.denominator.values()) den.push_back(std::to_string(a));
    return json{{"numerator", poly_json(r.numerator)},
                {"denominator_factors", den},
                {"string", r.str()}};
}

json int_list_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(std::to_string(x));
    return out;
}

json candidate_json(const EmbeddingCandidate& c) {
    json out;
    out["weights"] = int_list_json(c.weights.values());
    out["numerator"] = poly_json(c.numerator);
    out["k"] = std::to_string(c.k);
    out["codim"] = std::to_string(c.codim_estimate);
    out["equation_degrees"] = int_list_json(c.equation_degrees);
    out["syzygy_degrees"] = int_list_json(c.syzygy_degrees);
    out["degree_A3"] = to_string(c.degree_a3);
    out["pole_order"] = std::to_string(c.pole_order);
    out["A3_at_most_1_15"] = c.a3_at_most_1_15;
    out["shape_fit_multiplicity"] = std::to_string(c.shape_fit_multiplicity);
    out["via_unprojection_route"] = c.via_unprojection_route;
    return out;
}

void emit(const json& payload, const std::string& fmt, const std::string& pretty_text) {
    if (fmt == "json") {
        json doc;
        doc["schema_version"] = "1";
        for (const auto& [k, v] : payload.items()) doc[k] = v;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << pretty_text;
    }
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

IntRange parse_range(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return IntRange{v, v};
        }
        IntRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (r.lo > r.hi) throw parse_error("range lower bound exceeds upper: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad range '" + text + "' (use A or A..B)");
    } catch (const std::out_of_range&) {
        throw parse_error("range out of range: " + text);
    }
}

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        try {
            out.push_back(std::stoi(cur));
        } catch (...) {
            throw parse_error("bad integer '" + cur + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw parse_error("empty integer list");
    return out;
}

WeightedPlane parse_plane(const std::string& text) {
    std::vector<int> w = parse_int_list(text);
    if (w.size() != 3) throw parse_error("plane needs three weights, got '" + text + "'");
    return WeightedPlane{{w[0], w[1], w[2]}};
}

// "NAME:w1,w2,w3:d1,e1;d2,e2;..."
DivisorPattern parse_divisor(const std::string& text) {
    size_t c1 = text.find(':');
    size_t c2 = (c1 == std::string::npos) ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw parse_error("divisor needs NAME:plane:pairs, got '" + text + "'");
    DivisorPattern div;
    div.name = text.substr(0, c1);
    div.plane = parse_plane(text.substr(c1 + 1, c2 - c1 - 1));
    std::istringstream in(text.substr(c2 + 1));
    std::string piece;
    while (std::getline(in, piece, ';')) {
        std::vector<int> de = parse_int_list(piece);
        if (de.size() != 2) throw parse_error("divisor pair needs two degrees: '" + piece + "'");
        div.pairs.emplace_back(de[0], de[1]);
    }
    if (div.pairs.empty()) throw parse_error("divisor has no (d,e) pairs");
    return div;
}

Int parse_big(const std::string& text, const char* what) {
    std::string t = text;
    size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() == start) throw parse_error(std::string("bad ") + what + ": '" + text + "'");
    for (size_t i = start; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw parse_error(std::string("bad ") + what + ": '" + text + "'");
    return Int(t);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

int run(int argc, char** argv) {
    CLI::App app{"graded-ring constructions of polarised Calabi-Yau 3-fold orbifolds"};
    app.require_subcommand(1);
    std::string fmt = "pretty";

    // ---- rr ----
    auto* rr = app.add_subcommand("rr", "assemble a Hilbert series from (P1,P2) and a basket");
    int p1 = 0, p2 = 0, expand_order = -1;
    std::string basket_text;
    rr->add_option("--p1", p1, "h^0(A)")->required();
    rr->add_option("--p2", p2, "h^0(2A)")->required();
    rr->add_option("--basket", basket_text, "e.g. \"4x1/3(1,1,1),1x1/5(1,1,3)\"")->required();
    rr->add_option("--expand", expand_order, "also print coefficients up to this order");
    rr->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- recognize ----
    auto* rec = app.add_subcommand("recognize", "recognise an embedding from series data");
    std::string hints_text;
    int max_weights = 10, order = 80;
    rec->add_option("--p1", p1)->required();
    rec->add_option("--p2", p2)->required();
    rec->add_option("--basket", basket_text)->required();
    rec->add_option("--hints", hints_text, "comma list of weights to clear first");
    rec->add_option("--max-weights", max_weights);
    rec->add_option("--order", order, "expansion order");
    rec->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- search ----
    auto* sc = app.add_subcommand("search", "scan (P1,P2,n,m) tuples for candidates");
    std::string p1r = "3", p2r = "6", nr = "0..6", mr = "0..3";
    sc->add_option("--p1", p1r, "range A..B or single value")->required();
    sc->add_option("--p2", p2r)->required();
    sc->add_option("--n", nr, "count of 1/3(1,1,1) points")->required();
    sc->add_option("--m", mr, "count of 1/5(1,1,3) points")->required();
    sc->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json", "tsv"}));

    // ---- pfaffian ----
    auto* pf = app.add_subcommand("pfaffian", "degree calculus for an antisymmetric 5x5 matrix");
    std::string degrees_text;
    pf->add_option("--degrees", degrees_text, "\"b12,b13,b14,b15;b23,b24,b25;b34,b35;b45\"")
        ->required();
    pf->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- format ----
    auto* fc = app.add_subcommand("format", "Tom/Jerry membership checks on a matrix file");
    std::string file_path, check = "all";
    int opt_i = 0, opt_j = 0;
    fc->add_option("--file", file_path, "matrix/ideal document")->required();
    fc->add_option("--check", check)->check(CLI::IsMember({"tom", "jerry", "all"}));
    fc->add_option("--i", opt_i, "row index (tom/jerry)");
    fc->add_option("--j", opt_j, "second row index (jerry)");
    fc->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- nodes ----
    auto* nodes = app.add_subcommand("nodes", "node counting");
    nodes->require_subcommand(1);
    auto* nb = nodes->add_subcommand("bezout", "weighted Bezout count");
    int deg_d = 0, deg_e = 0;
    std::string plane_text = "1,1,1";
    nb->add_option("--d", deg_d)->required();
    nb->add_option("--e", deg_e)->required();
    nb->add_option("--plane", plane_text, "w1,w2,w3");
    nb->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));
    auto* nd = nodes->add_subcommand("determinantal", "Hilbert-Burch length of a rank-drop locus");
    std::string rows_text = "0,0", cols_text;
    nd->add_option("--rows", rows_text, "r1,r2");
    nd->add_option("--cols", cols_text, "c1,c2,c3")->required();
    nd->add_option("--plane", plane_text, "w1,w2,w3");
    nd->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));
    auto* ns = nodes->add_subcommand("standard-choice", "per-divisor Bezout unions");
    std::vector<std::string> divisor_texts;
    std::string shared_text = "0";
    ns->add_option("--divisor", divisor_texts, "NAME:w1,w2,w3:d1,e1;d2,e2;...")->required();
    ns->add_option("--shared", shared_text, "nodes shared between divisors");
    ns->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- unproject ----
    auto* up = app.add_subcommand("unproject", "Hilbert-series term of one unprojection step");
    int s_degree = 0;
    up->add_option("--plane", plane_text, "w1,w2,w3")->required();
    up->add_option("--s", s_degree, "degree of the unprojection variable")->required();
    up->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- chi ----
    auto* chi = app.add_subcommand("chi", "Euler-characteristic ledger");
    std::string chi_start, steps_text;
    chi->add_option("--start", chi_start, "chi of the smooth model")->required();
    chi->add_option("--steps", steps_text, "comma list: nodes:N | crepant | contract");
    chi->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json"}));

    // ---- web ----
    auto* web = app.add_subcommand("web", "projection graph between families");
    std::string families_text;
    int max_codim = 4;
    web->add_option("--p1", p1r)->required();
    web->add_option("--p2", p2r)->required();
    web->add_option("--n", nr)->required();
    web->add_option("--m", mr)->required();
    web->add_option("--families", families_text, "\"n,m=count;...\" node attributes");
    web->add_option("--max-codim", max_codim, "drop candidates above this codimension");
    web->add_option("--format", fmt)->check(CLI::IsMember({"pretty", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (rr->parsed()) {
        Basket basket = Basket::parse(basket_text);
        RationalSeries series = assemble({p1, p2}, basket);
        json out;
        out["p1"] = std::to_string(p1);
        out["p2"] = std::to_string(p2);
        out["basket"] = basket.str();
        out["series"] = series_json(series);
        std::ostringstream pretty;
        pretty << "P = " << series.str() << "\n";
        if (expand_order >= 0) {
            TruncatedSeries t = expand(series, expand_order);
            json coeffs = json::array();
            pretty << "coefficients:";
            for (int i = 0; i <= t.order(); ++i) {
                coeffs.push_back(t[i].str());
                pretty << " " << t[i].str();
            }
            pretty << "\n";
            out["expansion"] = coeffs;
        }
        emit(out, fmt, pretty.str());
        return 0;
    }

    if (rec->parsed()) {
        Basket basket = Basket::parse(basket_text);
        RationalSeries series = assemble({p1, p2}, basket);
        RecognitionConfig cfg;
        cfg.max_weights = max_weights;
        cfg.expansion_order = order;
        if (!hints_text.empty()) cfg.hint_weights = parse_int_list(hints_text);
        BasketRecognition result = recognize_with_basket(series, basket, cfg);
        if (!result.ok()) {
            std::cerr << "recognition failed after " << result.attempts << " attempt(s):\n";
            for (const auto& att : result.log)
                std::cerr << "  hints [" << join(att.hints) << "]: " << att.outcome << "\n";
            throw domain_error("no embedding recognised");
        }
        const EmbeddingCandidate& c = *result.candidate;
        json out;
        out["p1"] = std::to_string(p1);
        out["p2"] = std::to_string(p2);
        out["basket"] = basket.str();
        out["candidate"] = candidate_json(c);
        out["hints_used"] = int_list_json(result.hints_used);
        out["attempts"] = std::to_string(result.attempts);
        std::ostringstream pretty;
        pretty << "X in P(" << c.weights.str() << ")  codim " << c.codim_estimate << "\n"
               << "numerator: " << c.numerator.str() << "\n"
               << "k = " << c.k << "\n"
               << "equation degrees: " << join(c.equation_degrees) << "\n";
        if (!c.syzygy_degrees.empty())
            pretty << "syzygy degrees: " << join(c.syzygy_degrees) << "\n";
        pretty << "A^3 = " << to_string(c.degree_a3)
               << (c.a3_at_most_1_15 ? "  (<= 1/15: no further projection expected)" : "") << "\n";
        if (!result.hints_used.empty())
            pretty << "hints used: " << join(result.hints_used) << " (attempt " << result.attempts
                   << ")\n";
        emit(out, fmt, pretty.str());
        return 0;
    }

    if (sc->parsed()) {
        IntRange rn = parse_range(nr), rm = parse_range(mr);
        if (rn.lo < 0 || rm.lo < 0) throw parse_error("--n and --m must be >= 0");
        std::vector<SearchRow> rows = search(parse_range(p1r), parse_range(p2r), rn, rm);
        if (fmt == "tsv") {
            std::cout << "P1\tP2\tn\tm\tweights\tequation_degrees\tcodim\tstatus\n";
            for (const SearchRow& row : rows) {
                std::cout << row.p1 << "\t" << row.p2 << "\t" << row.n << "\t" << row.m << "\t";
                if (row.candidate)
                    std::cout << row.candidate->weights.str() << "\t"
                              << join(row.candidate->equation_degrees) << "\t"
                              << row.candidate->codim_estimate << "\t" << row.status;
                else
                    std::cout << "-\t-\t-\t" << row.status;
                if (!row.hints_used.empty()) std::cout << " [hints " << join(row.hints_used) << "]";
                std::cout << "\n";
            }
            return 0;
        }
        json rows_json = json::array();
        std::ostringstream pretty;
        for (const SearchRow& row : rows) {
            json r;
            r["p1"] = std::to_string(row.p1);
            r["p2"] = std::to_string(row.p2);
            r["n"] = std::to_string(row.n);
            r["m"] = std::to_string(row.m);
            r["status"] = row.status;
            if (!row.detail.empty()) r["detail"] = row.detail;
            if (row.candidate) r["candidate"] = candidate_json(*row.candidate);
            r["hints_used"] = int_list_json(row.hints_used);
            r["attempts"] = std::to_string(row.attempts);
            rows_json.push_back(r);
            pretty << "(" << row.p1 << "," << row.p2 << " | n=" << row.n << ",m=" << row.m << ") ";
            if (row.candidate) {
                pretty << "X_{" << join(row.candidate->equation_degrees) << "} in P("
                       << row.candidate->weights.str() << "), codim "
                       << row.candidate->codim_estimate;
                if (!row.hints_used.empty()) pretty << "  [hints " << join(row.hints_used) << "]";
            } else {
                pretty << row.status;
                if (!row.detail.empty()) pretty << " (" << row.detail << ")";
            }
            pretty << "\n";
        }
        emit(json{{"rows", rows_json}}, fmt, pretty.str());
        return 0;
    }

    if (pf->parsed()) {
        std::vector<std::string> row_texts;
        {
            std::istringstream in(degrees_text);
            std::string piece;
            while (std::getline(in, piece, ';')) row_texts.push_back(piece);
        }
        if (row_texts.size() != 4) throw parse_error("--degrees needs four ';'-separated rows");
        std::vector<std::vector<int>> rows;
        for (const std::string& rt : row_texts) rows.push_back(parse_int_list(rt));
        if (rows[0].size() != 4 || rows[1].size() != 3 || rows[2].size() != 2 ||
            rows[3].size() != 1)
            throw parse_error("--degrees rows need lengths 4;3;2;1");
        SkewDegreeMatrix5 dm({rows[0][0], rows[0][1], rows[0][2], rows[0][3]},
                             {rows[1][0], rows[1][1], rows[1][2]}, {rows[2][0], rows[2][1]},
                             rows[3][0]);
        EntryWeightSolution sol = solve_entry_weights(dm);
        IntPolynomial numerator = pfaffian_numerator(sol.pfaffian_degrees, sol.k);
        json out;
        json q = json::array();
        for (const Rat& qi : sol.q) q.push_back(to_string(qi));
        out["q"] = q;
        json d = json::array();
        for (int di : sol.pfaffian_degrees) d.push_back(std::to_string(di));
        out["pfaffian_degrees"] = d;
        out["k"] = std::to_string(sol.k);
        out["numerator"] = poly_json(numerator);
        std::ostringstream pretty;
        pretty << "q = (";
        for (int i = 0; i < 5; ++i)
            pretty << (i ? "," : "") << to_string(sol.q[static_cast<size_t>(i)]);
        pretty << ")\nPfaffian degrees: ";
        for (int i = 0; i < 5; ++i)
            pretty << (i ? "," : "") << sol.pfaffian_degrees[static_cast<size_t>(i)];
        pretty << "\nk = " << sol.k << "\nnumerator: " << numerator.str() << "\n";
        emit(out, fmt, pretty.str());
        return 0;
    }

    if (fc->parsed()) {
        MatrixDocument doc = parse_matrix_document(read_file(file_path));
        if (!doc.matrix) throw domain_error("document has no matrix");
        if (!doc.ideal) throw domain_error("document has no ideal");
        json verdicts = json::object();
        std::ostringstream pretty;
        auto report_tom = [&](int i) {
            bool v = is_tom(*doc.matrix, *doc.ideal, i);
            verdicts["tom_" + std::to_string(i)] = v;
            pretty << "Tom_" << i << ": " << (v ? "yes" : "no") << "\n";
        };
        auto report_jerry = [&](int i, int j) {
            bool v = is_jerry(*doc.matrix, *doc.ideal, i, j);
            verdicts["jerry_" + std::to_string(i) + std::to_string(j)] = v;
            pretty << "Jer_" << i << j << ": " << (v ? "yes" : "no") << "\n";
        };
        if (check == "tom") {
            if (opt_i < 1) throw parse_error("--check tom needs --i");
            report_tom(opt_i);
        } else if (check == "jerry") {
            if (opt_i < 1 || opt_j < 1) throw parse_error("--check jerry needs --i and --j");
            report_jerry(opt_i, opt_j);
        } else {
            for (int i = 1; i <= 5; ++i) report_tom(i);
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) report_jerry(i, j);
        }
        emit(json{{"file", file_path}, {"verdicts", verdicts}}, fmt, pretty.str());
        return 0;
    }

    if (nodes->parsed()) {
        if (nb->parsed()) {
            BezoutCount count = weighted_bezout(deg_d, deg_e, parse_plane(plane_text));
            json out{{"count", to_string(count.value)}, {"integral", count.integral}};
            std::ostringstream pretty;
            pretty << to_string(count.value) << (count.integral ? "" : " (non-integral)") << "\n";
            emit(out, fmt, pretty.str());
            return 0;
        }
        if (nd->parsed()) {
            std::vector<int> r = parse_int_list(rows_text), c = parse_int_list(cols_text);
            if (r.size() != 2 || c.size() != 3)
                throw parse_error("determinantal needs --rows r1,r2 and --cols c1,c2,c3");
            DeterminantalData dd{{r[0], r[1]}, {c[0], c[1], c[2]}, parse_plane(plane_text)};
            RationalSeries series = determinantal_series(dd);
            Int length = determinantal_length(dd);
            json out{{"series", series_json(series)}, {"length", length.str()}};
            std::ostringstream pretty;
            pretty << "series: " << series.str() << "\nlength: " << length.str() << "\n";
            emit(out, fmt, pretty.str());
            return 0;
        }
        // standard-choice
        std::vector<DivisorPattern> divisors;
        for (const std::string& text : divisor_texts) divisors.push_back(parse_divisor(text));
        NodeReport report = standard_choice_nodes(divisors, parse_big(shared_text, "--shared"));
        json per = json::object();
        std::ostringstream pretty;
        for (const auto& [name, count] : report.per_divisor) {
            per[name] = count.str();
            pretty << name << ": " << count.str() << "\n";
        }
        pretty << "shared: " << report.shared.str() << "\ntotal: " << report.total.str() << "\n";
        emit(json{{"per_divisor", per},
                  {"shared", report.shared.str()},
                  {"total", report.total.str()}},
             fmt, pretty.str());
        return 0;
    }

    if (up->parsed()) {
        RationalSeries term = unproject_term(parse_plane(plane_text), s_degree);
        emit(json{{"series", series_json(term)}}, fmt, "P += " + term.str() + "\n");
        return 0;
    }

    if (chi->parsed()) {
        ConifoldLedger ledger{parse_big(chi_start, "--start")};
        if (!steps_text.empty()) {
            std::istringstream in(steps_text);
            std::string step;
            while (std::getline(in, step, ',')) {
                if (step.rfind("nodes:", 0) == 0) {
                    ledger.resolve_nodes(parse_big(step.substr(6), "chi node count"));
                } else if (step == "crepant") {
                    ledger.crepant_blowup_third();
                } else if (step == "contract") {
                    ledger.contract_plane();
                } else {
                    throw parse_error("unknown chi step '" + step + "'");
                }
            }
        }
        json steps = json::array();
        std::ostringstream pretty;
        pretty << "start: " << ledger.chi_smooth().str() << "\n";
        for (const ConifoldStep& st : ledger.steps()) {
            json s{{"step", step_name(st.kind)}, {"chi", st.chi_after.str()}};
            if (st.kind == ConifoldStep::Kind::resolve_nodes) s["nodes"] = st.nodes.str();
            steps.push_back(s);
            pretty << step_name(st.kind);
            if (st.kind == ConifoldStep::Kind::resolve_nodes)
                pretty << "(" << st.nodes.str() << ")";
            pretty << " -> " << st.chi_after.str() << "\n";
        }
        emit(json{{"start", ledger.chi_smooth().str()},
                  {"steps", steps},
                  {"chi", ledger.chi().str()}},
             fmt, pretty.str());
        return 0;
    }

    if (web->parsed()) {
        IntRange rn = parse_range(nr), rm = parse_range(mr);
        if (rn.lo < 0 || rm.lo < 0) throw parse_error("--n and --m must be >= 0");
        std::vector<SearchRow> all = search(parse_range(p1r), parse_range(p2r), rn, rm);
        std::vector<SearchRow> rows;
        for (const SearchRow& row : all)
            if (row.status == "ok" && row.candidate->codim_estimate <= max_codim)
                rows.push_back(row);
        std::map<std::pair<int, int>, int> families;
        if (!families_text.empty()) {
            std::istringstream in(families_text);
            std::string item;
            while (std::getline(in, item, ';')) {
                size_t eq = item.find('=');
                if (eq == std::string::npos)
                    throw parse_error("families items look like n,m=count");
                std::vector<int> nm = parse_int_list(item.substr(0, eq));
                if (nm.size() != 2) throw parse_error("families key needs n,m");
                try {
                    families[{nm[0], nm[1]}] = std::stoi(item.substr(eq + 1));
                } catch (...) {
                    throw parse_error("bad families count in '" + item + "'");
                }
            }
        }
        WebGraph g = build_web(rows, families);
        if (fmt == "dot") {
            std::cout << to_dot(g);
            return 0;
        }
        json nodes_json = json::array();
        std::ostringstream pretty;
        for (const WebNode& node : g.nodes) {
            json n{{"n", std::to_string(node.n)},
                   {"m", std::to_string(node.m)},
                   {"codim", std::to_string(node.codim)}};
            if (node.families) n["families"] = std::to_string(*node.families);
            nodes_json.push_back(n);
            pretty << "(" << node.n << "," << node.m << ") codim " << node.codim;
            if (node.families) pretty << ", " << *node.families << " families";
            pretty << "\n";
        }
        json edges_json = json::array();
        for (const WebEdge& e : g.edges) {
            edges_json.push_back(
                json{{"from", {std::to_string(e.from.first), std::to_string(e.from.second)}},
                     {"to", {std::to_string(e.to.first), std::to_string(e.to.second)}},
                     {"label", e.label}});
            pretty << "(" << e.from.first << "," << e.from.second << ") -> (" << e.to.first << ","
                   << e.to.second << ")  " << e.label << "\n";
        }
        pretty << (g.connected ? "connected" : "NOT connected") << "\n";
        emit(json{{"nodes", nodes_json}, {"edges", edges_json}, {"connected", g.connected}}, fmt,
             pretty.str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
