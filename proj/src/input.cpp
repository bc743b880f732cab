#include "morsify/input.hpp"

#include <cctype>
#include <sstream>

namespace morsify {

namespace {

struct Cursor {
    std::string text;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) fail(std::string("'") + c + "'");
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) != 0) return false;
        size_t after = pos + kw.size();
        if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) ||
                                    text[after] == '_'))
            return false;
        pos = after;
        return true;
    }
    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw syntax_error(line, static_cast<int>(pos) + 1, expected);
    }

    mpz_class digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("a digit");
        return mpz_class(text.substr(start, pos - start), 10);
    }

    // Unsigned rational literal: digits or digits/digits.
    Rational unsigned_rational() {
        mpz_class num = digits();
        mpz_class den(1);
        if (try_consume('/')) den = digits();
        if (den == 0) fail("a non-zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    unsigned long unsigned_integer() {
        mpz_class v = digits();
        if (!v.fits_ulong_p()) fail("a smaller integer");
        return v.get_ui();
    }
};

enum class TermContext { RealRoot, ComplexRoot, Unit, FieldPoly };

struct Parser {
    std::shared_ptr<const NumberField> field;
    bool field_declared = false;

    // Exponent after '^': either a plain unsigned integer or a
    // parenthesized non-negative rational.
    Rational exponent(Cursor& c) {
        if (c.try_consume('(')) {
            Rational e = c.unsigned_rational();
            c.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mpq_class q(c.digits());
            return Rational(std::move(q));
        }
        c.fail("an integer exponent or a parenthesized rational");
    }

    FieldElement t_power(Cursor& c) {
        // 't' already consumed
        unsigned long e = 1;
        if (c.try_consume('^')) e = c.unsigned_integer();
        FieldElement acc = field->one();
        FieldElement t = field->generator();
        for (unsigned long k = 0; k < e; ++k) acc = acc * t;
        return acc;
    }

    // Sum of products of rationals and powers of t, e.g. "t^2+t+1".
    FieldElement t_sum(Cursor& c) {
        FieldElement acc = field->zero();
        bool first = true;
        while (true) {
            int sign = 1;
            if (c.try_consume('-'))
                sign = -1;
            else if (c.try_consume('+')) {
                if (first) c.fail("a term");
            } else if (!first) {
                break;
            }
            FieldElement term = field->one();
            bool any = false;
            while (true) {
                if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                    term = term * c.unsigned_rational();
                    any = true;
                } else if (c.try_keyword("t")) {
                    term = term * t_power(c);
                    any = true;
                } else {
                    break;
                }
                if (!c.try_consume('*')) break;
            }
            if (!any) c.fail("a rational or a power of t");
            if (sign < 0) term = -term;
            acc = acc + term;
            first = false;
        }
        return acc;
    }

    // One product of factors: rational literals, t (complex roots only,
    // field required), parenthesized t-polynomials, x powers and, in
    // units, y powers. Accumulates coefficient, x exponent and y degree.
    struct Term {
        FieldElement coeff;
        Rational x_exp;
        unsigned long y_deg = 0;
    };

    Term term(Cursor& c, TermContext ctx) {
        Term t{field->one(), Rational(0), 0};
        bool any = false;
        while (true) {
            if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                t.coeff = t.coeff * c.unsigned_rational();
                any = true;
            } else if (c.try_keyword("x")) {
                Rational e(1);
                if (c.try_consume('^')) e = exponent(c);
                if (ctx == TermContext::Unit && !e.is_integer())
                    c.fail("an integer exponent (the unit is a power series in x and y)");
                t.x_exp += e;
                any = true;
            } else if (ctx == TermContext::Unit && c.try_keyword("y")) {
                unsigned long e = 1;
                if (c.try_consume('^')) e = c.unsigned_integer();
                t.y_deg += e;
                any = true;
            } else if (c.peek() == 't') {
                if (ctx != TermContext::ComplexRoot)
                    c.fail("a rational coefficient (t is only allowed in complex roots)");
                if (!field_declared)
                    throw field_required_error("complex coefficients mention t but no field is declared (line " +
                                               std::to_string(c.line) + ")");
                if (!c.try_keyword("t")) c.fail("a term");
                t.coeff = t.coeff * t_power(c);
                any = true;
            } else if (c.peek() == '(') {
                if (ctx != TermContext::ComplexRoot)
                    c.fail("a rational coefficient");
                c.expect('(');
                size_t before = c.pos;
                if (!field_declared) {
                    // Only complain about the field if these parens hold a t.
                    size_t close = c.text.find(')', before);
                    size_t tpos = c.text.find('t', before);
                    if (tpos != std::string::npos &&
                        (close == std::string::npos || tpos < close))
                        throw field_required_error(
                            "complex coefficients mention t but no field is declared (line " +
                            std::to_string(c.line) + ")");
                }
                t.coeff = t.coeff * t_sum(c);
                c.expect(')');
                any = true;
            } else {
                break;
            }
            if (!c.try_consume('*')) break;
        }
        if (!any) c.fail(ctx == TermContext::Unit ? "a term in x and y" : "a term");
        return t;
    }

    // sum := ['-'] term { ('+'|'-') term }
    template <typename Sink>
    void sum(Cursor& c, TermContext ctx, Sink&& sink) {
        bool first = true;
        while (true) {
            int sign = 1;
            if (c.try_consume('-'))
                sign = -1;
            else if (c.try_consume('+')) {
                if (first) c.fail("a term");
            } else if (!first) {
                break;
            }
            Term t = term(c, ctx);
            if (sign < 0) t.coeff = -t.coeff;
            sink(t);
            first = false;
        }
    }

    PuiseuxPoly root_poly(Cursor& c, TermContext ctx) {
        PuiseuxPoly p = PuiseuxPoly::zero(field);
        sum(c, ctx, [&](const Term& t) {
            p = p + PuiseuxPoly::monomial(t.x_exp, t.coeff);
        });
        return p;
    }

    BivarPoly unit_poly(Cursor& c) {
        std::vector<PuiseuxPoly> y_coeffs;
        sum(c, TermContext::Unit, [&](const Term& t) {
            if (y_coeffs.size() <= t.y_deg) y_coeffs.resize(t.y_deg + 1, PuiseuxPoly::zero(field));
            y_coeffs[t.y_deg] = y_coeffs[t.y_deg] + PuiseuxPoly::monomial(t.x_exp, t.coeff);
        });
        return BivarPoly::from_y_coeffs(field, std::move(y_coeffs));
    }
};

std::vector<Rational> field_poly_coeffs(Cursor& c) {
    // Sum of signed rational multiples of powers of t, kept as a plain
    // coefficient vector (the field does not exist yet while its own
    // minimal polynomial is being read).
    std::vector<Rational> coeffs;
    bool first = true;
    while (true) {
        int sign = 1;
        if (c.try_consume('-'))
            sign = -1;
        else if (c.try_consume('+')) {
            if (first) c.fail("a term");
        } else if (!first) {
            break;
        }
        Rational coeff(1);
        unsigned long deg = 0;
        bool any = false;
        while (true) {
            if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                coeff = coeff * c.unsigned_rational();
                any = true;
            } else if (c.try_keyword("t")) {
                unsigned long e = 1;
                if (c.try_consume('^')) e = c.unsigned_integer();
                deg += e;
                any = true;
            } else {
                break;
            }
            if (!c.try_consume('*')) break;
        }
        if (!any) c.fail("a rational or a power of t");
        if (sign < 0) coeff = -coeff;
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += coeff;
        first = false;
    }
    return coeffs;
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t last = raw.find_last_not_of(" \t\r");
        if (last == std::string::npos) continue;
        raw.erase(last + 1);
        lines.push_back({number, raw});
    }
    return lines;
}

}  // namespace

ProblemSpec parse_input(const std::string& text) {
    auto lines = split_lines(text);

    // First pass: the field declaration, wherever it is.
    Parser parser;
    parser.field = NumberField::rationals();
    bool seen_field = false;
    for (const auto& line : lines) {
        Cursor c{line.text, line.number};
        if (!c.try_keyword("field")) continue;
        if (seen_field) c.fail("at most one field declaration");
        if (!c.try_keyword("t")) c.fail("'t'");
        c.expect(':');
        if (!c.try_keyword("minpoly")) c.fail("'minpoly'");
        c.expect('=');
        std::vector<Rational> minpoly = field_poly_coeffs(c);
        c.expect(';');
        if (!c.try_keyword("conj")) c.fail("'conj'");
        c.expect('=');
        std::vector<Rational> conj = field_poly_coeffs(c);
        if (!c.at_end()) c.fail("end of line");
        parser.field = NumberField::make(std::move(minpoly), std::move(conj));
        parser.field_declared = true;
        seen_field = true;
    }

    ProblemSpec spec{parser.field, parser.field_declared,
                     BivarPoly::constant(parser.field, Rational(1)), {}, {}, {}};
    bool seen_unit = false;

    for (const auto& line : lines) {
        Cursor c{line.text, line.number};
        if (c.try_keyword("field")) continue;  // handled above
        if (c.try_keyword("unit")) {
            if (seen_unit) c.fail("at most one unit declaration");
            c.expect('=');
            spec.unit = parser.unit_poly(c);
            if (!c.at_end()) c.fail("end of line");
            seen_unit = true;
        } else if (c.try_keyword("real_root")) {
            c.expect('=');
            spec.real_roots.push_back(parser.root_poly(c, TermContext::RealRoot));
            if (!c.at_end()) c.fail("end of line");
        } else if (c.try_keyword("complex_root")) {
            c.expect('=');
            PuiseuxPoly series = parser.root_poly(c, TermContext::ComplexRoot);
            int mult = 1;
            if (c.try_consume(';')) {
                if (!c.try_keyword("mult")) c.fail("'mult'");
                c.expect('=');
                unsigned long m = c.unsigned_integer();
                if (m == 0) c.fail("a positive multiplicity");
                mult = static_cast<int>(m);
            }
            if (!c.at_end()) c.fail("end of line");
            spec.complex_roots.push_back({std::move(series), mult});
        } else {
            c.fail("'field', 'unit', 'real_root' or 'complex_root'");
        }
    }

    if (spec.real_roots.empty())
        throw error("input declares no real root");
    to_root_system(spec);  // full validation: valuations, closure, reducedness
    return spec;
}

RootSystem to_root_system(const ProblemSpec& spec) {
    return RootSystem(spec.field, spec.real_roots, spec.complex_roots);
}

}  // namespace morsify
