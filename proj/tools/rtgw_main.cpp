// Command-line front end: datum validation, normal forms, commutators, the
// worked verification suites, Casimir comparisons, and invariance verdicts.

#include <rtgw/catalog.hpp>
#include <rtgw/expr.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <string>

using namespace rtgw;

namespace {

// exit codes: 0 every check passed, 1 a mathematical check failed, 2 bad input
constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kBadInput = 2;

void sort_records(Report& r) {
    std::stable_sort(r.records.begin(), r.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         if (a.id != b.id) return a.id < b.id;
                         return a.indices < b.indices;
                     });
}

int finish(const Report& r, bool as_json) {
    if (as_json)
        std::cout << r.json().dump(2) << "\n";
    else
        std::cout << r.text();
    return r.all_pass() ? kOk : kMathFail;
}

int table_mismatches(const std::vector<std::vector<RationalElement>>& a,
                     const std::vector<std::vector<RationalElement>>& b) {
    int n = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (!value_equal(a[i][j], b[i][j])) ++n;
    return n;
}

// Rebuild the factor table from t and the x-x entries alone and compare it
// against the table the datum actually carries. Catches hand-entered tables
// that drift from the defining relations.
Report mu_cross_check(const Datum& d) {
    Report r;
    r.title = "factor table cross-check (" + d.name() + ")";
    try {
        MuTable derived = derive_mu(d);
        r.add({"mu-derivation", "", true, "", "",
               "both closed formulas agree and the corollary dependencies hold"});
        MuTable held = d.mu();
        const std::vector<std::vector<RationalElement>> MuTable::* slots[4] = {
            &MuTable::xx, &MuTable::xy, &MuTable::yx, &MuTable::yy};
        const char* names[4] = {"xx", "xy", "yx", "yy"};
        for (int k = 0; k < 4; ++k) {
            int bad = table_mismatches(derived.*slots[k], held.*slots[k]);
            CheckRecord rec;
            rec.id = "mu-derived-match";
            rec.indices = std::string("table=") + names[k];
            rec.pass = bad == 0;
            if (bad != 0) rec.note = std::to_string(bad) + " entries differ";
            r.add(rec);
        }
    } catch (const MathError& e) {
        r.add({"mu-derivation", "", false, "", "", e.what()});
    }
    return r;
}

Report verify_one(const std::string& which) {
    Datum d = which == "su3" ? su3_datum() : so3_datum();
    Report r;
    r.merge(validate(d));
    r.merge(tgwa_identities(d));
    r.merge(mu_cross_check(d));
    if (which == "su3") {
        r.merge(verify_sl3_table(d));
        r.merge(matrix_sl3_oracle(d));
        r.merge(gell_mann_check(d));
    } else {
        r.merge(verify_so3(d));
    }
    return r;
}

int run_verify(const std::string& which, bool as_json) {
    Report r;
    r.title = "verify " + which;
    if (which == "all") {
        r.merge(verify_one("su3"));
        r.merge(verify_one("so3"));
    } else {
        r.merge(verify_one(which));
    }
    sort_records(r);
    return finish(r, as_json);
}

int run_casimir(int order, bool as_json) {
    Datum d = su3_datum();
    CasimirResult res = casimir(order, d);
    sort_records(res.report);
    if (as_json) {
        nlohmann::json out;
        out["order"] = order;
        out["equal"] = res.equal;
        out["central"] = res.central;
        out["sum_form"] = render_expr(res.sum_form, d.ctx());
        out["closed_form"] = render_expr(res.closed_form, d.ctx());
        out["report"] = res.report.json();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << res.report.text();
        std::cout << "sum form:    " << res.sum_form.str(d.ctx()) << "\n";
        std::cout << "closed form: " << res.closed_form.str(d.ctx()) << "\n";
    }
    return res.report.all_pass() ? kOk : kMathFail;
}

int run_invariant(const Datum& d, const std::string& expr_text) {
    AlgebraElement a = parse_expr(expr_text, d);
    Report r;
    r.title = "invariance of " + expr_text + " (" + d.name() + ")";
    for (const auto& [label, g] : symmetry_generators(d)) {
        CheckRecord rec;
        rec.id = "invariance";
        rec.indices = "gen=" + label;
        rec.pass = g_invariant(d, g, a);
        if (!rec.pass) {
            rec.lhs = render_expr(g_apply(d, g, a), d.ctx());
            rec.rhs = render_expr(a, d.ctx());
        }
        r.add(rec);
    }
    std::cout << r.text();
    return r.all_pass() ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in rational twisted generalized Weyl algebras"};
    app.require_subcommand(1);

    std::string datum_name;
    std::string expr_a;
    std::string expr_b;
    std::string verify_which;
    int casimir_order = 2;
    bool as_json = false;

    CLI::App* c_validate = app.add_subcommand("validate", "check a datum against the defining relations");
    c_validate->add_option("-d,--datum", datum_name, "builtin name or datum file path")->required();
    c_validate->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* c_nf = app.add_subcommand("nf", "normal form of an expression");
    c_nf->add_option("-d,--datum", datum_name, "builtin name or datum file path")->required();
    c_nf->add_option("expr", expr_a, "expression to normalize")->required();
    c_nf->add_flag("--json", as_json, "emit input, normal form and a reparseable form as JSON");

    CLI::App* c_comm = app.add_subcommand("comm", "commutator of two expressions");
    c_comm->add_option("-d,--datum", datum_name, "builtin name or datum file path")->required();
    c_comm->add_option("lhs", expr_a, "first expression")->required();
    c_comm->add_option("rhs", expr_b, "second expression")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run the recorded verification suites");
    c_verify->add_option("which", verify_which, "su3, so3 or all")
        ->required()
        ->check(CLI::IsMember({"su3", "so3", "all"}));
    c_verify->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* c_casimir = app.add_subcommand("casimir", "Casimir comparison in the su3 instance");
    c_casimir->add_option("order", casimir_order, "2 or 3")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    c_casimir->add_flag("--json", as_json, "emit forms and report as JSON");

    CLI::App* c_invariant = app.add_subcommand("invariant", "symmetry invariance of an expression");
    c_invariant->add_option("-d,--datum", datum_name, "builtin name or datum file path")->required();
    c_invariant->add_option("expr", expr_a, "expression to test")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (c_validate->parsed()) {
            Datum d = load_datum(datum_name);
            return finish(validate(d), as_json);
        }
        if (c_nf->parsed()) {
            Datum d = load_datum(datum_name);
            AlgebraElement a = parse_expr(expr_a, d);
            if (as_json) {
                nlohmann::json out;
                out["input"] = expr_a;
                out["normal_form"] = a.str(d.ctx());
                out["expr"] = render_expr(a, d.ctx());
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << a.str(d.ctx()) << "\n";
            }
            return kOk;
        }
        if (c_comm->parsed()) {
            Datum d = load_datum(datum_name);
            AlgebraElement a = parse_expr(expr_a, d);
            AlgebraElement b = parse_expr(expr_b, d);
            std::cout << commutator(d, a, b).str(d.ctx()) << "\n";
            return kOk;
        }
        if (c_verify->parsed()) return run_verify(verify_which, as_json);
        if (c_casimir->parsed()) return run_casimir(casimir_order, as_json);
        if (c_invariant->parsed()) return run_invariant(load_datum(datum_name), expr_a);
        std::cerr << "error: no subcommand\n";
        return kBadInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFail;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kBadInput;
    }
}
