#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "morsify/cli.hpp"
#include "morsify/dot.hpp"
#include "morsify/input.hpp"
#include "morsify/oracle.hpp"
#include "morsify/report.hpp"
#include "support/fixtures.hpp"

using namespace morsify;
using namespace morsify::testing;

namespace {

const char* THREE_CUSPS_C2 = R"(# three cusps, c = 2
field t: minpoly = t^2+t+1; conj = -1-t

real_root = -2*x^(3/2)
real_root = -1*x^(3/2)
real_root = x^(3/2)
real_root = 2*x^(3/2)
real_root = x^(2/3)

complex_root = t*x^(2/3)
complex_root = (-1-t)*x^(2/3)
)";

// Joins term strings with '+' except where a leading '-' already
// separates them.
void append_term(std::string& sum, const std::string& term) {
    if (!sum.empty() && term[0] != '-') sum += "+";
    sum += term;
}

// Canonical text emitter, the inverse of parse_input on its image.
std::string emit_problem_text(const ProblemSpec& spec) {
    std::string out;
    auto poly_in_t = [](const std::vector<Rational>& coeffs) {
        std::string s;
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            std::string term = coeffs[k].to_string();
            if (k >= 1) term += "*t";
            if (k >= 2) term += "^" + std::to_string(k);
            append_term(s, term);
        }
        return s.empty() ? std::string("0") : s;
    };
    if (spec.field_declared)
        out += "field t: minpoly = " + poly_in_t(spec.field->min_poly()) +
               "; conj = " + poly_in_t(spec.field->conj_image()) + "\n";

    std::string unit_text;
    for (int yd = 0; yd <= spec.unit.degree_y(); ++yd) {
        const PuiseuxPoly coeff = spec.unit.y_coeff(yd);
        for (const auto& [e, c] : coeff.terms()) {
            std::string term = c.rational_value().to_string();
            if (!e.is_zero()) term += "*x^(" + e.to_string() + ")";
            if (yd >= 1) term += "*y";
            if (yd >= 2) term += "^" + std::to_string(yd);
            append_term(unit_text, term);
        }
    }
    if (!unit_text.empty()) out += "unit = " + unit_text + "\n";

    for (const auto& root : spec.real_roots) {
        std::string line;
        for (const auto& [e, c] : root.terms()) {
            std::string term = c.rational_value().to_string();
            if (!e.is_zero()) term += "*x^(" + e.to_string() + ")";
            append_term(line, term);
        }
        out += "real_root = " + (line.empty() ? "0*x^(1)" : line) + "\n";
    }
    for (const auto& [series, mult] : spec.complex_roots) {
        std::string line;
        for (const auto& [e, c] : series.terms())
            append_term(line, "(" + poly_in_t(c.coeffs()) + ")*x^(" + e.to_string() + ")");
        out += "complex_root = " + line + "; mult = " + std::to_string(mult) + "\n";
    }
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("morsify_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::filesystem::path file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("parsing single roots") {
    auto spec = parse_input("real_root = -1*x^(1/2)\nreal_root = x^(1/2)\n");
    REQUIRE(spec.real_roots.size() == 2);
    CHECK(spec.real_roots[0] == poly(spec.field, {{q(1, 2), q(-1)}}));
    CHECK(spec.real_roots[1] == poly(spec.field, {{q(1, 2), q(1)}}));
    CHECK(!spec.field_declared);
}

TEST_CASE("parsing the three cusps file") {
    auto spec = parse_input(THREE_CUSPS_C2);
    CHECK(spec.field_declared);
    CHECK(spec.field->degree() == 2);
    CHECK(spec.real_roots.size() == 5);
    REQUIRE(spec.complex_roots.size() == 2);
    CHECK(spec.complex_roots[0].series ==
          PuiseuxPoly::monomial(q(2, 3), spec.field->generator()));
    CHECK(spec.complex_roots[1].series == spec.complex_roots[0].series.conj());

    auto rep = analyze(to_root_system(spec), spec.unit, {});
    CHECK(rep.snake->target_ranks == std::vector<int>{4, 5, 2, 3, 1});
}

TEST_CASE("parse errors carry positions and expectations") {
    SUBCASE("constant terms violate positivity") {
        CHECK_THROWS_AS(parse_input("real_root = 1 + x\n"), non_positive_valuation_error);
    }
    SUBCASE("missing conjugate") {
        CHECK_THROWS_AS(parse_input("field t: minpoly = t^2+1; conj = -1*t\n"
                                    "real_root = x\n"
                                    "complex_root = t*x\n"),
                        conjugation_closure_error);
    }
    SUBCASE("t without a field") {
        CHECK_THROWS_AS(parse_input("real_root = x\ncomplex_root = t*x\n"), field_required_error);
        CHECK_THROWS_AS(parse_input("real_root = x\ncomplex_root = (1-t)*x\n"),
                        field_required_error);
    }
    SUBCASE("repeated real roots") {
        CHECK_THROWS_AS(parse_input("real_root = x\nreal_root = x\n"), not_right_reduced_error);
    }
    SUBCASE("unknown directive") {
        try {
            parse_input("real_root = x\nbogus = 1\n");
            FAIL("expected syntax error");
        } catch (const syntax_error& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 1);
        }
    }
    SUBCASE("malformed exponent") {
        try {
            parse_input("real_root = x^(\n");
            FAIL("expected syntax error");
        } catch (const syntax_error& e) {
            CHECK(e.line() == 1);
            CHECK(e.expected().find("digit") != std::string::npos);
        }
    }
    SUBCASE("fractional exponents need parentheses") {
        CHECK_THROWS_AS(parse_input("real_root = x^1/2\n"), syntax_error);
    }
    SUBCASE("no real root") {
        CHECK_THROWS_AS(parse_input("# empty\n"), error);
    }
    SUBCASE("t in a real root") {
        CHECK_THROWS_AS(parse_input("field t: minpoly = t^2+1; conj = -1*t\nreal_root = t*x\n"),
                        syntax_error);
    }
}

TEST_CASE("parse round trip through the canonical emitter") {
    for (const char* text :
         {THREE_CUSPS_C2, "real_root = -1*x^(1/2)\nreal_root = x^(1/2)\nunit = 3\n",
          "unit = 2+1*x*y^2\nreal_root = 1/2*x^(4/3)-1*x^(5/3)\nreal_root = x\n"}) {
        auto spec = parse_input(text);
        auto spec2 = parse_input(emit_problem_text(spec));
        CHECK(spec.real_roots == spec2.real_roots);
        CHECK(spec.unit == spec2.unit);
        REQUIRE(spec.complex_roots.size() == spec2.complex_roots.size());
        for (size_t l = 0; l < spec.complex_roots.size(); ++l) {
            CHECK(spec.complex_roots[l].series == spec2.complex_roots[l].series);
            CHECK(spec.complex_roots[l].multiplicity == spec2.complex_roots[l].multiplicity);
        }
    }
}

TEST_CASE("json report") {
    SUBCASE("whitney values and determinism") {
        auto [rs, unit] = whitney_cusp();
        auto rep = analyze(rs, unit, {});
        std::string text = emit_report(rep);
        CHECK(text == emit_report(rep));

        auto j = nlohmann::json::parse(text);
        CHECK(j["snake"] == nlohmann::json({2, 1}));
        CHECK(j["sigma"] == nlohmann::json({"3/2"}));
        CHECK(j["s"] == nlohmann::json({"-4"}));
        CHECK(j["injectivity"]["pass"] == true);
        CHECK(j["theorem_b"] == true);
        CHECK(!j.contains("oracle"));

        // every serialized rational parses back
        for (const auto& s : j["sigma"])
            CHECK(Rational::from_string(s.get<std::string>()) == q(3, 2));
        for (const auto& table : j["tables"])
            for (const auto& entry : table["sums"])
                CHECK_NOTHROW(Rational::from_string(entry.get<std::string>()));
    }
    SUBCASE("failure witness shape") {
        auto [rs, unit] = five_roots_symmetric(q(1, 2));
        auto rep = analyze(rs, unit, {});
        auto j = nlohmann::json::parse(emit_report(rep));
        CHECK(j["injectivity"]["pass"] == false);
        CHECK(j["injectivity"]["vertex_E"] == "1");
        CHECK(j["injectivity"]["zero_sum_range"] == nlohmann::json({1, 3}));
        CHECK(!j.contains("snake"));
        CHECK(j.contains("signs"));
        bool found_indeterminate = false;
        for (const auto& e : j["signs"])
            if (e["i"] == 1 && e["j"] == 5) {
                CHECK(e["sign"] == "indeterminate");
                found_indeterminate = true;
            }
        CHECK(found_indeterminate);
    }
    SUBCASE("oracle section appears when run") {
        auto [rs, unit] = whitney_cusp();
        AnalyzeOptions opt;
        opt.run_oracle = true;
        auto rep = analyze(rs, unit, opt);
        auto j = nlohmann::json::parse(emit_report(rep));
        CHECK(j["oracle"]["snake"] == nlohmann::json({2, 1}));
        CHECK(j["oracle"]["agrees"] == true);
    }
}

TEST_CASE("dot output") {
    SUBCASE("two leaves make four nodes and three edges") {
        auto [rs, unit] = whitney_cusp();
        auto tree = build_contact_tree(rs.real_roots());
        std::string dot = emit_dot(tree);
        size_t nodes = 0;
        for (size_t p = dot.find("label="); p != std::string::npos; p = dot.find("label=", p + 1))
            ++nodes;
        CHECK(nodes == 4);
        size_t edges = 0;
        for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
        CHECK(edges == 3);
    }
    SUBCASE("integer exponents print bare") {
        const auto rats = NumberField::rationals();
        auto tree = build_contact_tree(
            {poly(rats, {{q(1), q(-1)}}), poly(rats, {{q(1), q(1)}}),
             poly(rats, {{q(1), q(1)}, {q(3), q(1)}}), poly(rats, {{q(1), q(1)}, {q(3), q(2)}})});
        std::string dot = emit_dot(tree);
        CHECK(dot.find("label=\"x^1\"") != std::string::npos);
        CHECK(dot.find("label=\"x^3\"") != std::string::npos);
    }
    SUBCASE("complex leaves are dotted") {
        auto [rs, unit] = three_cusps(q(2));
        auto tree = build_embedded_trees(rs);
        std::string dot = emit_dot(tree);
        CHECK(dot.find("eta_1") != std::string::npos);
        CHECK(dot.find("style=dotted") != std::string::npos);
        CHECK(dot.find("[style=dotted]") != std::string::npos);  // on edges
    }
}

TEST_CASE("cli") {
    TempDir dir;
    SUBCASE("whitney exits zero and writes the report") {
        auto input = dir.file("whitney.mrs",
                              "unit = 3\nreal_root = -1*x^(1/2)\nreal_root = x^(1/2)\n");
        auto out = dir.path / "out.json";
        int code = run_cli({"analyze", input.string(), "--json", out.string(), "--quiet"});
        CHECK(code == 0);
        auto j = nlohmann::json::parse(slurp(out));
        CHECK(j["snake"] == nlohmann::json({2, 1}));
    }
    SUBCASE("injectivity failure exits two but still reports") {
        auto input = dir.file("ex63.mrs",
                              "real_root = -1*x\nreal_root = -1*x^2\nreal_root = 0*x\n"
                              "real_root = x^2\nreal_root = x+1/2*x^2\n");
        auto out = dir.path / "out.json";
        int code = run_cli({"analyze", input.string(), "--json", out.string(), "--quiet"});
        CHECK(code == 2);
        auto j = nlohmann::json::parse(slurp(out));
        CHECK(j["injectivity"]["pass"] == false);
    }
    SUBCASE("three cusps with the oracle") {
        auto input = dir.file("threecusps_c2.mrs", THREE_CUSPS_C2);
        auto dots = dir.path / "dots";
        int code = run_cli({"analyze", input.string(), "--oracle", "--quiet", "--dot-dir",
                            dots.string()});
        CHECK(code == 0);
        CHECK(std::filesystem::exists(dots / "real_tree.dot"));
        CHECK(std::filesystem::exists(dots / "complex_tree.dot"));
        CHECK(std::filesystem::exists(dots / "integrated_tree.dot"));
        CHECK(std::filesystem::exists(dots / "discriminant_tree.dot"));
    }
    SUBCASE("missing file exits three") {
        CHECK(run_cli({"analyze", (dir.path / "nope.mrs").string()}) == 3);
    }
    SUBCASE("invalid input exits three") {
        auto input = dir.file("bad.mrs", "real_root = 1 + x\n");
        CHECK(run_cli({"analyze", input.string(), "--quiet"}) == 3);
    }
    SUBCASE("usage errors exit three") {
        CHECK(run_cli({"analyze"}) == 3);
        CHECK(run_cli({}) == 3);
    }
}
