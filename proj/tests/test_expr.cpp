#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rtgw/catalog.hpp>
#include <rtgw/expr.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

using namespace rtgw;
namespace fs = std::filesystem;

namespace {

Polynomial pc(const RingContext& ctx, long long k) {
    return Polynomial::constant(ctx.p, Coefficient(k));
}

Polynomial pv(const RingContext& ctx, const std::string& name) {
    return Polynomial::variable(ctx.p, ctx.var_index(name));
}

AlgebraElement scal(const Datum& d, Polynomial f) {
    return alg_scalar(d, RationalElement(std::move(f)));
}

AlgebraElement scal(const Datum& d, const Coefficient& k) {
    return alg_scalar(d, RationalElement(Polynomial::constant(d.ctx().p, k)));
}

// captures the message of the InputError the text is expected to raise
std::string error_of(const std::string& text, const Datum& d) {
    try {
        parse_expr(text, d);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

fs::path fixture_path(const std::string& name, const std::string& body) {
    fs::path dir = fs::temp_directory_path() / "rtgw-expr-fixtures";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

std::string load_error_of(const std::string& name, const std::string& body) {
    fs::path p = fixture_path(name, body);
    try {
        load_datum(p.string());
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

fs::path repo_data_dir() {
    return fs::path(__FILE__).parent_path().parent_path() / "data";
}

// minimal valid single-variable datum used as the base for defect fixtures
const char* kWeylBody = R"({
  "name": "weyl",
  "p": 1,
  "q": 1,
  "vars": ["l11"],
  "zeta": [0],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "t": ["l11^2 + l11"],
  "mu_xx": [["1"]]
})";

}  // namespace

TEST_CASE("numbers and field constants parse") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();
    Coefficient iu = Coefficient::imag_unit();

    AlgebraElement zero = parse_expr("0", d);
    CHECK(zero.is_zero());
    CHECK(parse_expr("42", d) == scal(d, pc(ctx, 42)));
    CHECK(parse_expr("1/2", d) == scal(d, Coefficient(Rat(1, 2))));
    CHECK(parse_expr("i", d) == scal(d, iu));
    CHECK(parse_expr("sqrt3", d) == scal(d, Coefficient::sqrt3()));
    CHECK(parse_expr("i*sqrt3", d) == scal(d, iu * Coefficient::sqrt3()));
    CHECK(parse_expr("2 + 3*i - sqrt3", d) ==
          scal(d, Coefficient(Rat(2), Rat(3), Rat(-1), Rat(0))));
    CHECK(parse_expr("i^2", d) == scal(d, pc(ctx, -1)));
    CHECK(parse_expr("sqrt3^2", d) == scal(d, pc(ctx, 3)));
    CHECK(parse_expr("(1 + i)^2", d) == scal(d, Coefficient(2) * iu));
    CHECK(parse_expr("2^10", d) == scal(d, pc(ctx, 1024)));
    CHECK(parse_expr("2^-1", d) == scal(d, Coefficient(Rat(1, 2))));
    CHECK(parse_expr("1 - (-3)", d) == scal(d, pc(ctx, 4)));
    CHECK(parse_expr(" \t 1+ 2 \n", d) == scal(d, pc(ctx, 3)));
}

TEST_CASE("variables and scalar polynomials parse") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();
    Polynomial l11 = pv(ctx, "l11"), l21 = pv(ctx, "l21"), l22 = pv(ctx, "l22");

    CHECK(parse_expr("l11", d) == scal(d, l11));
    CHECK(parse_expr("l21^3", d) == scal(d, l21 * l21 * l21));
    CHECK(parse_expr("2*l11 - l21 - l22 + 1", d) ==
          scal(d, pc(ctx, 2) * l11 - l21 - l22 + pc(ctx, 1)));
    CHECK(parse_expr("-l11", d) == scal(d, -l11));
    CHECK(parse_expr("-(l11 + 1)", d) == scal(d, -(l11 + pc(ctx, 1))));
    CHECK(parse_expr("(l11 + l21)*(l11 - l21)", d) == scal(d, l11 * l11 - l21 * l21));

    CHECK(error_of("l99", d).find("unknown") != std::string::npos);
    CHECK(error_of("x99", d).find("unknown") != std::string::npos);
    CHECK(error_of("foo", d).find("unknown") != std::string::npos);
}

TEST_CASE("generator words reduce to normal form") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();

    CHECK(parse_expr("y11*x11", d) == alg_scalar(d, d.t(0)));
    CHECK(parse_expr("x11*y11", d) == alg_scalar(d, d.t_bar(0)));
    CHECK(parse_expr("x11", d) == alg_generator(d, 0, false));
    CHECK(parse_expr("y22", d) == alg_generator(d, 2, true));

    AlgebraElement u = parse_expr("x11 + y11", d);
    std::set<GradeVector> want = {{1, 0, 0}, {-1, 0, 0}};
    CHECK(grade(u) == want);

    RationalElement one(pc(ctx, 1));
    CHECK(parse_expr("x21*x11", d) ==
          reduce_word(d, Word{Letter{1, false}, Letter{0, false}}, one));
    CHECK(parse_expr("x11^2", d) ==
          reduce_word(d, Word{Letter{0, false}, Letter{0, false}}, one));
    CHECK(parse_expr("x21^2*y21", d) ==
          reduce_word(d, Word{Letter{1, false}, Letter{1, false}, Letter{1, true}}, one));
    CHECK(parse_expr("x11^0", d) == scal(d, pc(ctx, 1)));

    CHECK(error_of("x11^-1", d).find("negative") != std::string::npos);
    CHECK(error_of("y21^-2", d).find("negative") != std::string::npos);

    // the commutator behind the first Cartan element, rendered exactly
    AlgebraElement h = commutator(d, parse_expr("y11", d), parse_expr("x11", d));
    CHECK(h.str(ctx) == "2*l11 - l21 - l22 + 1");
}

TEST_CASE("involution, shifts, and permutations apply") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();
    Polynomial one = pc(ctx, 1);
    Polynomial l11 = pv(ctx, "l11"), l21 = pv(ctx, "l21"), l22 = pv(ctx, "l22");

    CHECK(parse_expr("star(x11)", d) == alg_generator(d, 0, true));
    CHECK(parse_expr("star(i)", d) == scal(d, -Coefficient::imag_unit()));
    CHECK(parse_expr("star(l21)", d) == scal(d, one - l21));
    CHECK(parse_expr("star(i*x11*x21)", d) ==
          alg_star(d, parse_expr("i*x11*x21", d)));
    CHECK(parse_expr("star(star(x21*y22))", d) == parse_expr("x21*y22", d));

    CHECK(parse_expr("s11(l11)", d) == scal(d, l11 - one));
    CHECK(parse_expr("s11^2(l11)", d) == scal(d, l11 - pc(ctx, 2)));
    CHECK(parse_expr("s11^-1(l11)", d) == scal(d, l11 + one));
    CHECK(parse_expr("s21(l11)", d) == scal(d, l11));
    CHECK(parse_expr("s11(l11*l21)", d) == scal(d, (l11 - one) * l21));
    {
        ShiftVector s(ctx.p, 0);
        s[ctx.var_index("l21")] = 1;
        RationalElement inv =
            frac_inv(RationalElement(l21 - l22), ctx, d.spec());
        CHECK(parse_expr("s21(1/(l21 - l22))", d) ==
              alg_scalar(d, frac_shift(s, inv)));
    }
    CHECK(error_of("s11(x11)", d).find("scalar") != std::string::npos);

    CHECK(parse_expr("perm{21,22}(l21)", d) == scal(d, l22));
    CHECK(parse_expr("perm{21,22}(x21)", d) == alg_generator(d, 2, false));
    CHECK(parse_expr("perm{21,22}(l21 + x22)", d) ==
          scal(d, l22) + alg_generator(d, 1, false));
    CHECK(error_of("perm{11,21}(l11)", d).find("block") != std::string::npos);
    CHECK(error_of("perm{21,99}(l21)", d).find("unknown") != std::string::npos);
}

TEST_CASE("quotients enforce the multiplicative set") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();
    Polynomial one = pc(ctx, 1);
    Polynomial l11 = pv(ctx, "l11"), l21 = pv(ctx, "l21");

    CHECK(parse_expr("(l11 - l21 + 1) * (1/(l11 - l21 + 1))", d) == scal(d, one));
    CHECK(parse_expr("(l11 - l21 + 1)^-1 * (l11 - l21 + 1)", d) == scal(d, one));
    {
        RationalElement inv = frac_inv(RationalElement(l11 - l21 + one), ctx, d.spec());
        CHECK(parse_expr("x11/(l11 - l21 + 1)", d) ==
              alg_mul(d, alg_generator(d, 0, false), alg_scalar(d, inv)));
        CHECK(parse_expr("(y11*x11)/(l11 - l21 + 1)", d) ==
              alg_scalar(d, d.t(0) * inv));
    }

    CHECK(error_of("1/(l11 + l21 + 1)", d).find("not in multiplicative set") !=
          std::string::npos);
    CHECK(error_of("1/(l11+l21+1)", d).find("not in multiplicative set") !=
          std::string::npos);
    CHECK(error_of("(l11 + l21)^-1", d).find("not in multiplicative set") !=
          std::string::npos);
    CHECK(error_of("1/x11", d).find("scalar") != std::string::npos);
    CHECK(error_of("1/0", d).find("zero") != std::string::npos);
    CHECK(error_of("1/(l11 - l11)", d).find("zero") != std::string::npos);

    Datum s = so3_datum();
    Polynomial sl21 = pv(s.ctx(), "l21");
    CHECK(parse_expr("(2*l21 + 1) * (1/(2*l21 + 1))", s) ==
          alg_scalar(s, RationalElement(pc(s.ctx(), 1))));
}

TEST_CASE("syntax errors carry a position") {
    Datum d = su3_datum();
    CHECK(error_of("l11 +", d).find("position") != std::string::npos);
    CHECK(error_of("(l11", d).find("position") != std::string::npos);
    CHECK(error_of(")", d).find("position") != std::string::npos);
    CHECK(error_of("l11 ~ 2", d).find("position") != std::string::npos);
    CHECK(error_of("perm{21 22}(l21)", d).find("position") != std::string::npos);
    CHECK(error_of("", d).find("position") != std::string::npos);
    CHECK(error_of("x11^2^3", d).find("position") != std::string::npos);
}

TEST_CASE("rendered forms reparse to equal elements") {
    Datum su3 = su3_datum();
    Datum so3 = so3_datum();
    int checked = 0;
    auto roundtrip = [&](const Datum& d, const std::string& text) {
        CAPTURE(text);
        AlgebraElement a = parse_expr(text, d);
        std::string rendered = render_expr(a, d.ctx());
        AlgebraElement b = parse_expr(rendered, d);
        CHECK(b == a);
        ++checked;
    };

    const std::vector<std::string> su3_corpus = {
        "0",
        "1",
        "-7",
        "2/3",
        "i",
        "sqrt3",
        "i*sqrt3",
        "1 + i",
        "(1 + i)^3",
        "1/2 - 3/4*i + sqrt3 - 2*i*sqrt3",
        "l11",
        "l21 - l22",
        "2*l11 - l21 - l22 + 1",
        "l11^3 - l31*l32*l33",
        "(l11 + l21)^2",
        "1/(l11 - l21 + 1)",
        "(l11 + 1)/(l11 - l22 + 1)",
        "1/((l11 - l21)*(l11 - l21 + 1))",
        "(l21 - l22)/(l21 - l22 - 1)",
        "1/(l21 - l22)^2",
        "l11/(l31 - l21)",
        "x11",
        "y22",
        "x11*x21",
        "x21*x22",
        "y11*y21*y22",
        "x11^2*y11",
        "x11*y11 + y11*x11",
        "x21*x22 - x22*x21",
        "i*x11 + sqrt3*y11",
        "(l11 + 1)*x11",
        "x11*(l11 + 1)",
        "(1/(l11 - l21))*x11*x21",
        "star(x11*x21)",
        "s11^-2(l11)*x11",
        "perm{21,22}(x21*y22)",
        "star(1/(l11 - l21))",
        "x11 - x11",
        "(x11 + y11)^2",
        "y21*x21/(l21 - l22)",
        "x11*y11*x11",
        "(2 - i)*(x22 + y22)",
        "s11(s21(l11 + l21))",
        "x21^3",
        "(x11 + y11 + 1)^2",
    };
    for (const auto& text : su3_corpus) roundtrip(su3, text);

    const std::vector<std::string> so3_corpus = {
        "x11 + y11",
        "x21*y21",
        "1/(2*l21 - 1)",
        "1/(2*l21 + 1)",
        "l31*l32",
        "star(x21)",
        "perm{31,32}(l31)",
        "1/(l21 + l11)",
        "(l21 - l31)/(l21 + l31)",
        "s21(1/l21)",
        "x11*x21 + y11*y21",
        "y21^2",
    };
    for (const auto& text : so3_corpus) roundtrip(so3, text);

    // rendered library elements, fraction coefficients included, reparse too
    for (const auto& [name, elem] : sl3_generators(su3)) {
        CAPTURE(name);
        CHECK(parse_expr(render_expr(elem, su3.ctx()), su3) == elem);
        ++checked;
    }
    for (const auto& [name, elem] : so3_generators(so3)) {
        CAPTURE(name);
        CHECK(parse_expr(render_expr(elem, so3.ctx()), so3) == elem);
        ++checked;
    }

    CHECK(checked >= 50);
}

TEST_CASE("builtin names and repository datum files load") {
    Datum cat = su3_datum();
    Datum b = load_datum("su3");
    CHECK(b.name() == "su3");
    CHECK(b.ctx() == cat.ctx());
    for (int i = 0; i < 3; ++i) CHECK(value_equal(b.t(i), cat.t(i)));
    CHECK_FALSE(b.has_mu_override());

    Datum f = load_datum((repo_data_dir() / "su3.json").string());
    CHECK(f.ctx() == cat.ctx());
    for (int i = 0; i < 3; ++i) CHECK(value_equal(f.t(i), cat.t(i)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(value_equal(f.mu_xx(i, j), cat.mu_xx(i, j)));
    CHECK_FALSE(f.has_mu_override());

    Datum scat = so3_datum();
    Datum s = load_datum((repo_data_dir() / "so3.json").string());
    CHECK(s.ctx() == scat.ctx());
    for (int i = 0; i < 2; ++i) CHECK(value_equal(s.t(i), scat.t(i)));
    REQUIRE(s.has_mu_override());
    const MuTable& sm = s.mu();
    const MuTable& cm = scat.mu();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(value_equal(sm.xx[i][j], cm.xx[i][j]));
            CHECK(value_equal(sm.xy[i][j], cm.xy[i][j]));
            CHECK(value_equal(sm.yx[i][j], cm.yx[i][j]));
            CHECK(value_equal(sm.yy[i][j], cm.yy[i][j]));
        }
}

TEST_CASE("datum files load and reject structural defects") {
    // the good base fixture loads and passes the relation checks
    fs::path good = fixture_path("weyl.json", kWeylBody);
    Datum d = load_datum(good.string());
    CHECK(d.name() == "weyl");
    CHECK(d.q() == 1);
    Polynomial l = pv(d.ctx(), "l11");
    CHECK(d.t(0) == RationalElement(l * l + l));
    CHECK(validate(d).all_pass());

    // expressions in the file go through the same parser
    CHECK(parse_expr("y11*x11", d) == alg_scalar(d, d.t(0)));

    {
        std::string msg = load_error_of("bad_mu_pair.json", R"({
  "p": 2, "q": 2,
  "vars": ["l11", "l21"],
  "zeta": [0, 0],
  "blocks": [[0], [1]],
  "mult_set": ["l11", "l21"],
  "t": ["l11^2 + l11", "l21^2 + l21"],
  "mu_xx": [["1", "2"], ["1", "1"]]
})");
        CHECK(msg.find("mu_xx[0][1]") != std::string::npos);
        CHECK(msg.find("mu_xx[1][0]") != std::string::npos);
    }
    {
        std::string msg = load_error_of("missing_t.json", R"({
  "p": 1, "q": 1,
  "vars": ["l11"],
  "zeta": [0],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "mu_xx": [["1"]]
})");
        CHECK(msg.find("t") != std::string::npos);
    }
    {
        std::string msg = load_error_of("bad_zeta.json", R"({
  "p": 1, "q": 1,
  "vars": ["l11"],
  "zeta": [2],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "t": ["l11^2 + l11"],
  "mu_xx": [["1"]]
})");
        CHECK(msg.find("zeta") != std::string::npos);
    }
    {
        std::string msg = load_error_of("bad_expr.json", R"({
  "p": 1, "q": 1,
  "vars": ["l11"],
  "zeta": [0],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "t": ["l11 +"],
  "mu_xx": [["1"]]
})");
        CHECK(msg.find("t[0]") != std::string::npos);
    }
    {
        std::string msg = load_error_of("bad_denominator.json", R"json({
  "p": 2, "q": 1,
  "vars": ["l11", "l21"],
  "zeta": [0, 0],
  "blocks": [[0], [1]],
  "mult_set": ["l11"],
  "t": ["(l11^2 + l11)/(l11 + l21)"],
  "mu_xx": [["1"]]
})json");
        CHECK(msg.find("t[0]") != std::string::npos);
        CHECK(msg.find("not in multiplicative set") != std::string::npos);
    }
    {
        std::string msg = load_error_of("bad_shape.json", R"({
  "p": 2, "q": 2,
  "vars": ["l11", "l21"],
  "zeta": [0, 0],
  "blocks": [[0], [1]],
  "mult_set": ["l11", "l21"],
  "t": ["l11^2 + l11", "l21^2 + l21"],
  "mu_xx": [["1"]]
})");
        CHECK(msg.find("mu_xx") != std::string::npos);
    }
    {
        std::string msg = load_error_of("bad_diag.json", R"({
  "p": 1, "q": 1,
  "vars": ["l11"],
  "zeta": [0],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "t": ["l11^2 + l11"],
  "mu_xx": [["2"]]
})");
        CHECK(msg.find("mu_xx[0][0]") != std::string::npos);
    }
    CHECK(load_error_of("not_json.json", "{ nope").find("JSON") != std::string::npos);
    {
        // overrides must come as a complete set of tables
        std::string msg = load_error_of("partial_override.json", R"({
  "p": 1, "q": 1,
  "vars": ["l11"],
  "zeta": [0],
  "blocks": [[0]],
  "mult_set": ["l11"],
  "t": ["l11^2 + l11"],
  "mu_xx": [["1"]],
  "mu_xy": [["1"]]
})");
        CHECK(msg.find("mu_xy") != std::string::npos);
    }
    try {
        load_datum("/nonexistent/rtgw/datum.json");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("open") != std::string::npos);
    }
}

TEST_CASE("scalar parsing stands alone for loader fields") {
    Datum d = su3_datum();
    const RingContext& ctx = d.ctx();
    Polynomial l11 = pv(ctx, "l11");
    RationalElement got = parse_scalar("(l11 + 1)^2", ctx, d.spec());
    CHECK(got == RationalElement((l11 + pc(ctx, 1)) * (l11 + pc(ctx, 1))));
    try {
        parse_scalar("x11 + 1", ctx, d.spec());
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("scalar") != std::string::npos);
    }
}
