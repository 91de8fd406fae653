#include "cy3rings/matrix_doc.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace cy3 {

namespace {

// recursive-descent parser for EXPR := term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := base ('^' INT)?,
// base := INT | NAME | '(' EXPR ')' | '-' factor
class ExprParser {
public:
    ExprParser(std::string_view text, const RingPtr& ring,
               const std::map<std::string, SparsePoly>& named)
        : s_(text), ring_(ring), named_(named) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("expression: unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SparsePoly expr() {
        SparsePoly p = term();
        for (;;) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    SparsePoly term() {
        SparsePoly p = factor();
        for (;;) {
            if (eat('*')) {
                p = p * factor();
            } else {
                // implicit product when a name/number/parenthesis follows
                char c = peek();
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                    p = p * factor();
                else
                    return p;
            }
        }
    }

    SparsePoly factor() {
        SparsePoly base_poly = base();
        if (eat('^')) {
            int e = integer();
            if (e < 0) throw parse_error("expression: negative exponent");
            return base_poly.pow(e);
        }
        return base_poly;
    }

    SparsePoly base() {
        if (eat('-')) return -factor();
        if (eat('(')) {
            SparsePoly p = expr();
            if (!eat(')')) throw parse_error("expression: missing ')'");
            return p;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return SparsePoly::constant(ring_, Int(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            int idx = ring_->index_of(name);
            if (idx >= 0) return SparsePoly::variable(ring_, idx);
            auto it = named_.find(name);
            if (it != named_.end()) return it->second;
            throw parse_error("expression: unknown name '" + name + "'");
        }
        throw parse_error("expression: expected a value");
    }

    int integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expression: expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000000) throw parse_error("expression: integer out of range");
        }
        return static_cast<int>(v);
    }

    std::string identifier() {
        skip_ws();
        std::string name;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            name.push_back(s_[pos_++]);
        if (name.empty()) throw parse_error("expression: expected name");
        return name;
    }

    std::string_view s_;
    size_t pos_ = 0;
    RingPtr ring_;
    const std::map<std::string, SparsePoly>& named_;
};

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(std::string s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

SparsePoly parse_poly_expr(std::string_view expr, const RingPtr& ring,
                           const std::map<std::string, SparsePoly>& named) {
    return ExprParser(expr, ring, named).parse();
}

MatrixDocument parse_matrix_document(std::string_view text) {
    std::vector<GradedVariable> vars;
    std::vector<std::pair<std::string, std::string>> poly_lines;
    std::string matrix_line, ideal_line;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("var ", 0) == 0) {
            std::istringstream ls(line.substr(4));
            std::string name;
            int weight = 0;
            if (!(ls >> name >> weight) || weight < 1)
                throw parse_error("matrix document: bad var line: " + line);
            vars.push_back({name, weight});
        } else if (line.rfind("poly ", 0) == 0) {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error("matrix document: poly line needs '=': " + line);
            std::string name = trim(line.substr(5, eq - 5));
            if (name.empty()) throw parse_error("matrix document: poly line needs a name");
            poly_lines.emplace_back(name, trim(line.substr(eq + 1)));
        } else if (line.rfind("matrix", 0) == 0) {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error("matrix document: matrix line needs '='");
            if (!matrix_line.empty()) throw parse_error("matrix document: repeated matrix line");
            matrix_line = trim(line.substr(eq + 1));
        } else if (line.rfind("ideal", 0) == 0) {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error("matrix document: ideal line needs '='");
            if (!ideal_line.empty()) throw parse_error("matrix document: repeated ideal line");
            ideal_line = trim(line.substr(eq + 1));
        } else {
            throw parse_error("matrix document: unrecognised line: " + line);
        }
    }
    if (vars.empty()) throw parse_error("matrix document: no variables declared");

    MatrixDocument doc;
    try {
        doc.ring = std::make_shared<Ring>(std::move(vars));
    } catch (const domain_error& e) {
        throw parse_error(std::string("matrix document: ") + e.what());
    }

    for (const auto& [name, expr] : poly_lines) {
        if (doc.ring->index_of(name) >= 0 || doc.named.count(name))
            throw parse_error("matrix document: name '" + name + "' already in use");
        doc.named.emplace(name, parse_poly_expr(expr, doc.ring, doc.named));
    }

    if (!matrix_line.empty()) {
        std::string body = matrix_line;
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw parse_error("matrix document: matrix must be bracketed [ ... ]");
        body = body.substr(1, body.size() - 2);
        std::vector<std::string> rows = split(body, ';');
        if (rows.size() != 4)
            throw parse_error("matrix document: matrix needs 4 rows (upper triangle)");
        std::array<SparsePoly, 10> upper{
            SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring),
            SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring),
            SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring), SparsePoly::zero(doc.ring),
            SparsePoly::zero(doc.ring)};
        size_t idx = 0;
        for (size_t r = 0; r < 4; ++r) {
            std::vector<std::string> entries = split(rows[r], ',');
            if (entries.size() != 4 - r)
                throw parse_error("matrix document: row " + std::to_string(r + 1) + " needs " +
                                  std::to_string(4 - r) + " entries");
            for (const std::string& e : entries)
                upper[idx++] = parse_poly_expr(e, doc.ring, doc.named);
        }
        doc.matrix.emplace(doc.ring, std::move(upper));
    }

    if (!ideal_line.empty()) {
        std::vector<SparsePoly> gens;
        for (const std::string& g : split(ideal_line, ','))
            gens.push_back(parse_poly_expr(g, doc.ring, doc.named));
        doc.ideal = TriangularIdeal::from_generators(gens);
    }
    return doc;
}

}  // namespace cy3
