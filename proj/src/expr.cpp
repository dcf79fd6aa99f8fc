#include "riocalc/expr.hpp"

#include <cctype>
#include <sstream>

#include "riocalc/errors.hpp"
#include "riocalc/families.hpp"
#include "riocalc/transforms.hpp"

namespace riocalc {

namespace {

struct Lexer {
    std::string text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw Error(std::string("expected '") + c + "' in expression: " + text);
    }
    bool number(long& out) {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            out = std::stol(text.substr(start, pos - start));
            return true;
        }
        return false;
    }
    bool ident(std::string& out) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) return false;
        out = text.substr(start, pos - start);
        return true;
    }
};

class SeriesParser {
public:
    SeriesParser(const std::string& text, int order) : lex_{text}, order_(order) {}

    RatSeries parse_full() {
        RatSeries r = parse_expr();
        if (!lex_.eof()) throw Error("trailing content in expression: " + lex_.text);
        return r;
    }

    RatSeries parse_expr() {
        RatSeries r = parse_term();
        while (true) {
            if (lex_.accept('+')) {
                r = r + parse_term();
            } else if (lex_.accept('-')) {
                r = r - parse_term();
            } else {
                return r;
            }
        }
    }

    Lexer& lexer() { return lex_; }

private:
    RatSeries parse_term() {
        RatSeries r = parse_unary();
        while (true) {
            if (lex_.accept('*')) {
                r = r * parse_unary();
            } else if (lex_.accept('/')) {
                r = div_shifted(r, parse_unary());
            } else {
                return r;
            }
        }
    }

    RatSeries parse_unary() {
        if (lex_.accept('-')) return -parse_unary();
        return parse_power();
    }

    RatSeries parse_power() {
        RatSeries base = parse_atom();
        if (lex_.accept('^')) {
            bool neg = lex_.accept('-');
            long e;
            if (!lex_.number(e)) throw Error("expected integer exponent: " + lex_.text);
            if (e > 64) throw Error("exponent too large");
            return series_pow(base, neg ? -e : e);
        }
        return base;
    }

    RatSeries parse_atom() {
        long n;
        if (lex_.number(n)) return RatSeries::constant(Rational(n), order_);
        if (lex_.accept('(')) {
            RatSeries inner = parse_expr();
            lex_.expect(')');
            return inner;
        }
        std::string name;
        if (!lex_.ident(name)) throw Error("unexpected character in expression: " + lex_.text);
        if (name == "x") return RatSeries::x(order_);
        if (name == "c" || name == "t") {
            RatSeries fn = name == "c" ? catalan_series<Rational>(order_)
                                       : ternary_series<Rational>(order_);
            if (lex_.accept('(')) {
                RatSeries arg = parse_expr();
                lex_.expect(')');
                if (arg == RatSeries::x(arg.order())) return fn.truncated(arg.order());
                return compose(fn, arg);
            }
            return fn;
        }
        if (name == "sqrt1") {
            lex_.expect('(');
            RatSeries arg = parse_expr();
            lex_.expect(')');
            return sqrt1(arg);
        }
        throw Error("unknown name in expression: " + name);
    }

    Lexer lex_;
    int order_;
};

std::string trimmed(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = text.find_last_not_of(" \t\r\n");
    return text.substr(b, e - b + 1);
}

std::vector<Rational> split_params(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(Rational::from_string(cur));
    return out;
}

long as_long(const Rational& q, const char* what) {
    if (!q.is_integer()) throw Error(std::string(what) + " must be an integer");
    return q.numerator().get_si();
}

}  // namespace

Series<Rational> eval_series_expr(const std::string& text, int order) {
    // evaluate with head-room so shift-downs keep enough coefficients
    RatSeries r = SeriesParser(text, order + 8).parse_full();
    if (r.order() < order) throw Error("expression loses too many orders: " + text);
    return r.truncated(order);
}

bool is_family_name(const std::string& raw) {
    std::string text = trimmed(raw);
    if (text == "rna") return true;
    for (const char* prefix : {"main-theorem:", "general:", "k-theorem:", "gen-cheb:", "corollary:"})
        if (text.rfind(prefix, 0) == 0) return true;
    return false;
}

RiordanPair<Rational> family_involution(const std::string& raw, int order) {
    std::string name = trimmed(raw);
    if (name == "rna") return rna_involution(order);
    size_t colon = name.find(':');
    std::string kind = name.substr(0, colon);
    auto params = split_params(name.substr(colon + 1));
    auto want = [&](size_t n) {
        if (params.size() != n) throw Error("family " + kind + " expects " + std::to_string(n) + " parameters");
    };
    if (kind == "main-theorem") {
        want(1);
        return gk_involution(2, static_cast<int>(as_long(params[0], "m")), order);
    }
    if (kind == "general") {
        want(2);
        return general_moment_involution(params[0], params[1], order);
    }
    if (kind == "k-theorem") {
        want(2);
        return gk_involution(static_cast<int>(as_long(params[0], "k")),
                             static_cast<int>(as_long(params[1], "m")), order);
    }
    if (kind == "gen-cheb") {
        want(4);
        return gen_cheb_pair(params[0], params[1], params[2], params[3], order);
    }
    if (kind == "corollary") {
        want(2);
        return associated_involution(params[0], params[1], order);
    }
    throw Error("unknown family: " + name);
}

RiordanPair<Poly<Rational>> family_source(const std::string& raw, int order) {
    std::string name = trimmed(raw);
    size_t colon = name.find(':');
    if (colon == std::string::npos) throw Error("family has no parameterized source: " + name);
    std::string kind = name.substr(0, colon);
    auto params = split_params(name.substr(colon + 1));
    if (kind == "main-theorem" && params.size() == 1)
        return chebyshev_moment_family(static_cast<int>(as_long(params[0], "m")), order);
    if (kind == "general" && params.size() == 2)
        return general_moment_family(params[0], params[1], order);
    if (kind == "k-theorem" && params.size() == 2)
        return gk_moment_family(static_cast<int>(as_long(params[0], "k")),
                                static_cast<int>(as_long(params[1], "m")), order);
    throw Error("family has no parameterized source: " + name);
}

RiordanPair<Rational> eval_pair_expr(const std::string& text, int order) {
    if (is_family_name(text)) return family_involution(text, order);
    int work = order + 8;
    SeriesParser p(text, work);
    Lexer& lex = p.lexer();
    lex.expect('(');
    RatSeries g = p.parse_expr();
    lex.expect(',');
    RatSeries f = p.parse_expr();
    lex.expect(')');
    if (!lex.eof()) throw Error("trailing content in pair expression: " + text);
    int n = std::min({g.order(), f.order(), order});
    return RiordanPair<Rational>(g.truncated(n), f.truncated(n));
}

std::vector<Rational> eval_seq_expr(const std::string& text, int terms) {
    Lexer lex{text};
    std::string head;
    size_t mark = lex.pos;
    if (!lex.ident(head)) head.clear();

    auto rest = [&]() { return text.substr(lex.pos); };
    if (head == "coeffs") {
        RatSeries s = eval_series_expr(rest(), std::max(terms - 1, 0));
        return s.coeffs();
    }
    if (head == "diagsums" || head == "rowsums" || head == "absrowsums") {
        int n = head == "diagsums" ? 2 * terms : terms;
        RatPair pair = eval_pair_expr(rest(), n);
        RatMatrix m = pair.to_matrix(n);
        if (head == "diagsums") return diagonal_sums(m);
        if (head == "rowsums") return row_sums(m);
        return abs_row_sums(m);
    }
    if (head == "col") {
        long k;
        if (!lex.number(k)) throw Error("col expects an index: " + text);
        int n = terms + static_cast<int>(k);
        RatPair pair = eval_pair_expr(rest(), n);
        RatMatrix m = pair.to_matrix(n);
        std::vector<Rational> out;
        for (int i = static_cast<int>(k); i < n; ++i) out.push_back(m.entry(i, static_cast<int>(k)));
        return out;
    }
    lex.pos = mark;
    RatSeries s = eval_series_expr(text, std::max(terms - 1, 0));
    return s.coeffs();
}

}  // namespace riocalc
