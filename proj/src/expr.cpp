#include <rtgw/expr.hpp>

#include <rtgw/catalog.hpp>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rtgw {

namespace {

struct Token {
    enum Kind { Number, Ident, Symbol, End } kind = End;
    std::string text;
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t start = i;
            while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
            out.push_back({Token::Number, text.substr(start, i - start), start});
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            size_t start = i;
            while (i < n && ((text[i] >= 'a' && text[i] <= 'z') ||
                             (text[i] >= '0' && text[i] <= '9')))
                ++i;
            out.push_back({Token::Ident, text.substr(start, i - start), start});
            continue;
        }
        if (std::string("+-*/^(){},").find(c) != std::string::npos) {
            out.push_back({Token::Symbol, std::string(1, c), i});
            ++i;
            continue;
        }
        throw InputError("unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
    out.push_back({Token::End, "", n});
    return out;
}

// Parsed values stay scalar fractions until a generator letter forces the
// element representation; the split keeps the loader path (no datum in
// scope) on pure coefficient arithmetic.
struct Value {
    bool is_elem = false;
    RationalElement f;
    AlgebraElement e;
};

class Parser {
public:
    Parser(const std::string& text, const RingContext& ctx, const MultSetSpec& spec,
           const Datum* datum)
        : ctx_(ctx), spec_(spec), datum_(datum), tokens_(tokenize(text)) {}

    Value run() {
        Value v = parse_expr_rule();
        const Token& t = peek();
        if (t.kind != Token::End)
            throw InputError("unexpected '" + t.text + "' at position " +
                             std::to_string(t.pos));
        return v;
    }

private:
    const RingContext& ctx_;
    const MultSetSpec& spec_;
    const Datum* datum_;
    std::vector<Token> tokens_;
    size_t at_ = 0;

    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }

    bool accept_symbol(const char* s) {
        if (peek().kind == Token::Symbol && peek().text == s) {
            ++at_;
            return true;
        }
        return false;
    }

    void expect_symbol(const char* s) {
        const Token& t = peek();
        if (t.kind != Token::Symbol || t.text != s)
            throw InputError("expected '" + std::string(s) + "' at position " +
                             std::to_string(t.pos));
        ++at_;
    }

    [[noreturn]] void fail_here(const std::string& what) const {
        throw InputError(what + " at position " + std::to_string(peek().pos));
    }

    long long number_value(const Token& t) const {
        try {
            return std::stoll(t.text);
        } catch (const std::exception&) {
            throw InputError("number too large at position " + std::to_string(t.pos));
        }
    }

    long long signed_int() {
        bool neg = accept_symbol("-");
        const Token& t = peek();
        if (t.kind != Token::Number) fail_here("expected an integer");
        ++at_;
        long long v = number_value(t);
        return neg ? -v : v;
    }

    // label after a letter prefix, resolved against the variable names
    int var_of_label(const std::string& label, size_t pos) const {
        int v = ctx_.var_index("l" + label);
        if (v < 0)
            throw InputError("unknown variable l" + label + " at position " +
                             std::to_string(pos));
        return v;
    }

    Value scalar_value(RationalElement f) const {
        Value v;
        v.f = std::move(f);
        return v;
    }

    Value const_value(const Coefficient& k) const {
        return scalar_value(RationalElement(Polynomial::constant(ctx_.p, k)));
    }

    AlgebraElement promote(const Value& v) const {
        if (v.is_elem) return v.e;
        return alg_scalar(*datum_, v.f);
    }

    std::optional<RationalElement> as_scalar(const Value& v) const {
        if (!v.is_elem) return v.f;
        if (v.e.terms.empty())
            return RationalElement(Polynomial::constant(ctx_.p, Coefficient(0)));
        if (v.e.terms.size() == 1) {
            const auto& [g, f] = *v.e.terms.begin();
            if (std::all_of(g.begin(), g.end(), [](int k) { return k == 0; })) return f;
        }
        return std::nullopt;
    }

    RationalElement inverted(const RationalElement& f) const {
        if (f.num().is_zero()) throw InputError("division by a zero denominator");
        try {
            return frac_inv(f, ctx_, spec_);
        } catch (const MathError&) {
            throw InputError("denominator not in multiplicative set: " +
                             f.str_parseable(ctx_));
        }
    }

    Value val_neg(Value v) const {
        if (v.is_elem)
            v.e = -v.e;
        else
            v.f = -v.f;
        return v;
    }

    Value val_add(Value a, const Value& b) const {
        if (!a.is_elem && !b.is_elem) {
            a.f = a.f + b.f;
            return a;
        }
        Value out;
        out.is_elem = true;
        out.e = promote(a) + promote(b);
        return out;
    }

    Value val_sub(Value a, const Value& b) const { return val_add(std::move(a), val_neg(b)); }

    Value val_mul(Value a, const Value& b) const {
        if (!a.is_elem && !b.is_elem) {
            a.f = a.f * b.f;
            return a;
        }
        Value out;
        out.is_elem = true;
        out.e = alg_mul(*datum_, promote(a), promote(b));
        return out;
    }

    Value val_div(Value a, const Value& b) const {
        std::optional<RationalElement> s = as_scalar(b);
        if (!s) throw InputError("division requires a scalar denominator");
        return val_mul(std::move(a), scalar_value(inverted(*s)));
    }

    Value val_pow(Value base, long long n) const {
        if (n > 1000 || n < -1000) throw InputError("exponent out of range");
        if (n == 0) return const_value(Coefficient(1));
        Value factor = std::move(base);
        if (n < 0) {
            std::optional<RationalElement> s = as_scalar(factor);
            if (!s) throw InputError("negative powers require a scalar base");
            factor = scalar_value(inverted(*s));
            n = -n;
        }
        Value out = factor;
        for (long long k = 1; k < n; ++k) out = val_mul(std::move(out), factor);
        return out;
    }

    Value val_star(Value v) const {
        if (v.is_elem)
            v.e = alg_star(*datum_, v.e);
        else
            v.f = frac_star(ctx_, v.f);
        return v;
    }

    Value val_shift(int var, long long n, const Value& v) const {
        std::optional<RationalElement> s = as_scalar(v);
        if (!s) throw InputError("shifts apply only to scalar expressions");
        ShiftVector sv(ctx_.p, 0);
        sv[var] = n;
        return scalar_value(frac_shift(sv, *s));
    }

    Value val_perm(int a, int b, Value v) const {
        GroupElement g;
        g.perm.resize(ctx_.p);
        std::iota(g.perm.begin(), g.perm.end(), 0);
        std::swap(g.perm[a], g.perm[b]);
        g.check(ctx_);
        if (v.is_elem)
            v.e = g_apply(*datum_, g, v.e);
        else
            v.f = frac_perm(ctx_, g, v.f);
        return v;
    }

    Value parenthesized() {
        expect_symbol("(");
        Value v = parse_expr_rule();
        expect_symbol(")");
        return v;
    }

    Value parse_expr_rule() {
        bool neg = accept_symbol("-");
        Value v = parse_term();
        if (neg) v = val_neg(std::move(v));
        for (;;) {
            if (accept_symbol("+"))
                v = val_add(std::move(v), parse_term());
            else if (accept_symbol("-"))
                v = val_sub(std::move(v), parse_term());
            else
                return v;
        }
    }

    Value parse_term() {
        Value v = parse_factor();
        for (;;) {
            if (accept_symbol("*"))
                v = val_mul(std::move(v), parse_factor());
            else if (accept_symbol("/"))
                v = val_div(std::move(v), parse_factor());
            else
                return v;
        }
    }

    Value parse_factor() {
        auto [v, bare_generator] = parse_atom();
        if (accept_symbol("^")) {
            long long n = signed_int();
            if (bare_generator && n < 0)
                throw InputError(
                    "negative generator powers are rejected; write the opposite letter");
            v = val_pow(std::move(v), n);
        }
        return v;
    }

    std::pair<Value, bool> parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            ++at_;
            return {const_value(Coefficient(number_value(t))), false};
        }
        if (t.kind == Token::Symbol && t.text == "(") return {parenthesized(), false};
        if (t.kind == Token::Ident) return parse_ident();
        fail_here("unexpected '" + (t.kind == Token::End ? "end of input" : t.text) + "'");
    }

    std::pair<Value, bool> parse_ident() {
        const Token t = advance();
        const std::string& w = t.text;
        if (w == "i") return {const_value(Coefficient::imag_unit()), false};
        if (w == "sqrt3") return {const_value(Coefficient::sqrt3()), false};
        if (w == "star") return {val_star(parenthesized()), false};
        if (w == "perm") {
            expect_symbol("{");
            const Token& ta = peek();
            if (ta.kind != Token::Number) fail_here("expected a variable label");
            ++at_;
            expect_symbol(",");
            const Token& tb = peek();
            if (tb.kind != Token::Number) fail_here("expected a variable label");
            ++at_;
            expect_symbol("}");
            int a = var_of_label(ta.text, ta.pos);
            int b = var_of_label(tb.text, tb.pos);
            return {val_perm(a, b, parenthesized()), false};
        }
        char head = w[0];
        std::string label = w.substr(1);
        bool label_ok = !label.empty() &&
                        std::all_of(label.begin(), label.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
        if (head == 'l' && label_ok) {
            int v = var_of_label(label, t.pos);
            return {scalar_value(RationalElement(Polynomial::variable(ctx_.p, v))), false};
        }
        if ((head == 'x' || head == 'y') && label_ok) {
            if (!datum_)
                throw InputError(
                    "generator letters are not allowed in scalar expressions "
                    "(position " +
                    std::to_string(t.pos) + ")");
            int v = var_of_label(label, t.pos);
            if (v >= ctx_.q)
                throw InputError("unknown generator " + w + " at position " +
                                 std::to_string(t.pos));
            Value out;
            out.is_elem = true;
            out.e = alg_generator(*datum_, v, head == 'y');
            return {std::move(out), true};
        }
        if (head == 's' && label_ok) {
            int v = var_of_label(label, t.pos);
            long long n = 1;
            if (accept_symbol("^")) n = signed_int();
            return {val_shift(v, n, parenthesized()), false};
        }
        throw InputError("unknown identifier '" + w + "' at position " +
                         std::to_string(t.pos));
    }
};

}  // namespace

AlgebraElement parse_expr(const std::string& text, const Datum& d) {
    Parser p(text, d.ctx(), d.spec(), &d);
    Value v = p.run();
    if (v.is_elem) return v.e;
    return alg_scalar(d, std::move(v.f));
}

RationalElement parse_scalar(const std::string& text, const RingContext& ctx,
                             const MultSetSpec& spec) {
    Parser p(text, ctx, spec, nullptr);
    return p.run().f;
}

std::string render_expr(const AlgebraElement& a, const RingContext& ctx) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (const auto& [v, f] : a.terms) {
        std::string letters;
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            if (!letters.empty()) letters += "*";
            letters += (v[k] > 0 ? "x" : "y");
            letters += ctx.var_names[k].substr(1);
            int mag = v[k] > 0 ? v[k] : -v[k];
            if (mag > 1) letters += "^" + std::to_string(mag);
        }
        std::string piece = "(" + f.str_parseable(ctx) + ")";
        if (!letters.empty()) piece += "*" + letters;
        if (!out.empty()) out += " + ";
        out += piece;
    }
    return out;
}

namespace {

using nlohmann::json;

const json& field(const json& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw InputError("datum file: missing field '" + key + "'");
    return *it;
}

int int_field(const json& doc, const std::string& key) {
    const json& j = field(doc, key);
    if (!j.is_number_integer())
        throw InputError("field '" + key + "': expected an integer");
    return j.get<int>();
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError("field '" + path + "': expected an array");
    std::vector<std::string> out;
    for (size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_string())
            throw InputError(path + "[" + std::to_string(k) + "]: expected a string");
        out.push_back(j[k].get<std::string>());
    }
    return out;
}

RationalElement parse_field(const std::string& text, const std::string& path,
                            const RingContext& ctx, const MultSetSpec& spec) {
    try {
        return parse_scalar(text, ctx, spec);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::vector<RationalElement>> parse_table(const json& doc,
                                                      const std::string& key, int q,
                                                      const RingContext& ctx,
                                                      const MultSetSpec& spec) {
    const json& j = field(doc, key);
    if (!j.is_array() || static_cast<int>(j.size()) != q)
        throw InputError("field '" + key + "': expected a " + std::to_string(q) + "x" +
                         std::to_string(q) + " table of strings");
    std::vector<std::vector<RationalElement>> out;
    for (int i = 0; i < q; ++i) {
        std::string row_path = key + "[" + std::to_string(i) + "]";
        std::vector<std::string> row = string_list(j[i], row_path);
        if (static_cast<int>(row.size()) != q)
            throw InputError(row_path + ": expected " + std::to_string(q) + " entries");
        std::vector<RationalElement> parsed;
        for (int c = 0; c < q; ++c)
            parsed.push_back(parse_field(row[c], row_path + "[" + std::to_string(c) + "]",
                                         ctx, spec));
        out.push_back(std::move(parsed));
    }
    return out;
}

// reciprocal-pair condition forced by reading the same exchange relation in
// both orders
void check_reciprocal(const std::vector<std::vector<RationalElement>>& a,
                      const std::string& a_name,
                      const std::vector<std::vector<RationalElement>>& b,
                      const std::string& b_name, bool include_diagonal,
                      const RingContext& ctx) {
    RationalElement one(Polynomial::constant(ctx.p, Coefficient(1)));
    int q = static_cast<int>(a.size());
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            if (i == j && !include_diagonal) continue;
            if (i > j && a_name == b_name) continue;
            if (!value_equal(a[i][j] * b[j][i], one))
                throw InputError(a_name + "[" + std::to_string(i) + "][" +
                                 std::to_string(j) + "] * " + b_name + "[" +
                                 std::to_string(j) + "][" + std::to_string(i) +
                                 "] must multiply to 1");
        }
}

}  // namespace

Datum load_datum(const std::string& name_or_path) {
    if (name_or_path == "su3") return su3_datum();
    if (name_or_path == "so3") return so3_datum();

    std::ifstream in(name_or_path);
    if (!in) throw InputError("cannot open datum file: " + name_or_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(name_or_path + ": JSON parse error: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw InputError(name_or_path + ": expected a JSON object");

    RingContext ctx;
    ctx.p = int_field(doc, "p");
    ctx.q = int_field(doc, "q");
    if (ctx.p < 1 || ctx.q < 1 || ctx.q > ctx.p)
        throw InputError("fields 'p'/'q': need 1 <= q <= p");
    ctx.var_names = string_list(field(doc, "vars"), "vars");
    if (static_cast<int>(ctx.var_names.size()) != ctx.p)
        throw InputError("field 'vars': expected " + std::to_string(ctx.p) + " names");
    {
        const json& jz = field(doc, "zeta");
        if (!jz.is_array() || static_cast<int>(jz.size()) != ctx.p)
            throw InputError("field 'zeta': expected " + std::to_string(ctx.p) +
                             " integers");
        for (const json& z : jz) {
            if (!z.is_number_integer())
                throw InputError("field 'zeta': expected integer entries");
            ctx.zeta.push_back(z.get<int>());
        }
    }
    {
        const json& jb = field(doc, "blocks");
        if (!jb.is_array()) throw InputError("field 'blocks': expected an array");
        for (size_t b = 0; b < jb.size(); ++b) {
            if (!jb[b].is_array())
                throw InputError("blocks[" + std::to_string(b) +
                                 "]: expected an index list");
            std::vector<int> blk;
            for (const json& v : jb[b]) {
                if (!v.is_number_integer())
                    throw InputError("blocks[" + std::to_string(b) +
                                     "]: expected integer entries");
                blk.push_back(v.get<int>());
            }
            ctx.blocks.push_back(std::move(blk));
        }
    }
    ctx.check();

    MultSetSpec bare;
    std::vector<Atom> gens;
    {
        std::vector<std::string> entries = string_list(field(doc, "mult_set"), "mult_set");
        for (size_t k = 0; k < entries.size(); ++k) {
            std::string path = "mult_set[" + std::to_string(k) + "]";
            RationalElement f = parse_field(entries[k], path, ctx, bare);
            if (!f.den().empty())
                throw InputError(path + ": expected a polynomial, found a quotient");
            try {
                gens.push_back(atom_normalize(ctx, f.num()).second);
            } catch (const InputError& e) {
                throw InputError(path + ": " + e.what());
            } catch (const MathError& e) {
                throw InputError(path + ": " + e.what());
            }
        }
    }
    MultSetSpec spec(ctx, std::move(gens));

    std::vector<RationalElement> t;
    {
        std::vector<std::string> entries = string_list(field(doc, "t"), "t");
        if (static_cast<int>(entries.size()) != ctx.q)
            throw InputError("field 't': expected " + std::to_string(ctx.q) + " entries");
        for (size_t k = 0; k < entries.size(); ++k)
            t.push_back(parse_field(entries[k], "t[" + std::to_string(k) + "]", ctx, spec));
    }

    std::vector<std::vector<RationalElement>> mu_xx =
        parse_table(doc, "mu_xx", ctx.q, ctx, spec);
    {
        RationalElement one(Polynomial::constant(ctx.p, Coefficient(1)));
        for (int i = 0; i < ctx.q; ++i)
            if (!value_equal(mu_xx[i][i], one))
                throw InputError("mu_xx[" + std::to_string(i) + "][" + std::to_string(i) +
                                 "] must equal 1");
        check_reciprocal(mu_xx, "mu_xx", mu_xx, "mu_xx", false, ctx);
    }

    std::optional<MuTable> over;
    bool has_xy = doc.contains("mu_xy");
    bool has_yx = doc.contains("mu_yx");
    bool has_yy = doc.contains("mu_yy");
    if (has_xy || has_yx || has_yy) {
        if (!(has_xy && has_yx && has_yy))
            throw InputError("fields mu_xy, mu_yx, mu_yy must be supplied together");
        MuTable table;
        table.xx = mu_xx;
        table.xy = parse_table(doc, "mu_xy", ctx.q, ctx, spec);
        table.yx = parse_table(doc, "mu_yx", ctx.q, ctx, spec);
        table.yy = parse_table(doc, "mu_yy", ctx.q, ctx, spec);
        RationalElement one(Polynomial::constant(ctx.p, Coefficient(1)));
        for (int i = 0; i < ctx.q; ++i)
            if (!value_equal(table.yy[i][i], one))
                throw InputError("mu_yy[" + std::to_string(i) + "][" + std::to_string(i) +
                                 "] must equal 1");
        check_reciprocal(table.yy, "mu_yy", table.yy, "mu_yy", false, ctx);
        check_reciprocal(table.xy, "mu_xy", table.yx, "mu_yx", true, ctx);
        over = std::move(table);
    }

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw InputError("field 'name': expected a string");
        name = doc["name"].get<std::string>();
    } else {
        name = std::filesystem::path(name_or_path).stem().string();
    }

    return Datum(std::move(name), std::move(ctx), std::move(spec), std::move(t),
                 std::move(mu_xx), std::move(over));
}

}  // namespace rtgw
