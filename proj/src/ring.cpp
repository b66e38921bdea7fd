#include <rtgw/ring.hpp>

#include <algorithm>
#include <numeric>

namespace rtgw {

int RingContext::var_index(const std::string& name) const {
    for (int v = 0; v < p; ++v)
        if (var_names[v] == name) return v;
    return -1;
}

int RingContext::block_of(int v) const {
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int w : blocks[b])
            if (w == v) return static_cast<int>(b);
    throw InputError("variable index outside every block");
}

void RingContext::check() const {
    if (p <= 0) throw InputError("ring needs at least one variable");
    if (q < 0 || q > p) throw InputError("generator count out of range");
    if (static_cast<int>(var_names.size()) != p) throw InputError("variable name list has wrong length");
    if (static_cast<int>(zeta.size()) != p) throw InputError("zeta vector has wrong length");
    for (int z : zeta)
        if (z != 0 && z != 1) throw InputError("zeta entries must be 0 or 1");

    std::vector<int> seen(p, 0);
    for (const auto& blk : blocks) {
        if (blk.empty()) throw InputError("empty block in partition");
        for (int v : blk) {
            if (v < 0 || v >= p) throw InputError("block entry out of range");
            if (seen[v]++) throw InputError("variable repeated across blocks");
            if (zeta[v] != zeta[blk.front()]) throw InputError("zeta must be constant on each block");
        }
    }
    for (int v = 0; v < p; ++v)
        if (!seen[v]) throw InputError("blocks do not cover every variable");

    // The leading blocks must cover exactly the generator indices 0..q-1.
    int covered = 0;
    for (const auto& blk : blocks) {
        if (covered == q) break;
        for (int v : blk)
            if (v >= q) throw InputError("generator indices must be covered by whole leading blocks");
        covered += static_cast<int>(blk.size());
        if (covered > q) throw InputError("generator indices must be covered by whole leading blocks");
    }
    if (covered != q) throw InputError("generator indices must be covered by whole leading blocks");
}

bool GrlexLess::operator()(const ExpVec& u, const ExpVec& v) const {
    int du = std::accumulate(u.begin(), u.end(), 0);
    int dv = std::accumulate(v.begin(), v.end(), 0);
    if (du != dv) return du < dv;
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

Polynomial Polynomial::constant(int nvars, const Coefficient& k) {
    Polynomial f(nvars);
    f.add_term(ExpVec(nvars, 0), k);
    return f;
}

Polynomial Polynomial::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw InputError("variable index out of range");
    Polynomial f(nvars);
    ExpVec e(nvars, 0);
    e[v] = 1;
    f.add_term(e, Coefficient(1));
    return f;
}

Coefficient Polynomial::constant_value() const {
    if (terms_.empty()) return Coefficient(0);
    if (degree() != 0) throw MathError("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& top = terms_.rbegin()->first;
    return std::accumulate(top.begin(), top.end(), 0);
}

Coefficient Polynomial::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

void Polynomial::add_term(const ExpVec& e, const Coefficient& k) {
    if (static_cast<int>(e.size()) != p_) throw InputError("exponent vector length mismatch");
    if (k.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, k);
    if (!fresh) {
        it->second += k;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(p_);
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, -k);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (p_ != o.p_) throw InputError("polynomials live in different rings");
    for (const auto& [e, k] : o.terms_) add_term(e, k);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (p_ != o.p_) throw InputError("polynomials live in different rings");
    for (const auto& [e, k] : o.terms_) add_term(e, -k);
    return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.p_ != y.p_) throw InputError("polynomials live in different rings");
    Polynomial r(x.p_);
    for (const auto& [ex, kx] : x.terms_) {
        for (const auto& [ey, ky] : y.terms_) {
            ExpVec e(x.p_);
            for (int v = 0; v < x.p_; ++v) e[v] = ex[v] + ey[v];
            r.add_term(e, kx * ky);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Coefficient& k, Polynomial f) {
    if (k.is_zero()) return Polynomial(f.p_);
    for (auto& [e, c] : f.terms_) c *= k;
    return f;
}

void GroupElement::check(const RingContext& ctx) const {
    if (static_cast<int>(perm.size()) != ctx.p) throw InputError("permutation has wrong length");
    std::vector<int> seen(ctx.p, 0);
    for (int v = 0; v < ctx.p; ++v) {
        int w = perm[v];
        if (w < 0 || w >= ctx.p || seen[w]++) throw InputError("not a permutation");
        if (ctx.block_of(v) != ctx.block_of(w)) throw InputError("permutation crosses blocks");
    }
}

namespace {

// Common engine for the three ring actions: substitute
// lambda_v -> sign_v * lambda_{target_v} + offset_v, optionally conjugating
// coefficients first.
Polynomial substitute_affine(const Polynomial& f, const std::vector<int>& target,
                             const std::vector<int>& sign,
                             const std::vector<Coefficient>& offset, bool conj) {
    int p = f.nvars();
    Polynomial result(p);
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power = [&](int v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Polynomial base(p);
        base.add_term([&] { ExpVec u(p, 0); u[target[v]] = 1; return u; }(),
                      Coefficient(sign[v]));
        if (!offset[v].is_zero()) base.add_term(ExpVec(p, 0), offset[v]);
        Polynomial acc = Polynomial::constant(p, Coefficient(1));
        for (int k = 0; k < e; ++k) acc *= base;
        return powers.emplace(key, std::move(acc)).first->second;
    };
    for (const auto& [e, k] : f.terms()) {
        Polynomial term = Polynomial::constant(p, conj ? k.conj() : k);
        for (int v = 0; v < p; ++v)
            if (e[v] > 0) term *= power(v, e[v]);
        result += term;
    }
    return result;
}

}  // namespace

Polynomial shift_apply(const ShiftVector& s, const Polynomial& f) {
    int p = f.nvars();
    if (static_cast<int>(s.size()) != p) throw InputError("shift vector length mismatch");
    std::vector<int> target(p), sign(p, 1);
    std::vector<Coefficient> offset(p, Coefficient(0));
    for (int v = 0; v < p; ++v) {
        target[v] = v;
        offset[v] = Coefficient(-s[v]);
    }
    return substitute_affine(f, target, sign, offset, false);
}

Polynomial star(const RingContext& ctx, const Polynomial& f) {
    if (f.nvars() != ctx.p) throw InputError("polynomial does not match the ring context");
    std::vector<int> target(ctx.p), sign(ctx.p, -1);
    std::vector<Coefficient> offset(ctx.p);
    for (int v = 0; v < ctx.p; ++v) {
        target[v] = v;
        offset[v] = Coefficient(ctx.zeta[v]);
    }
    return substitute_affine(f, target, sign, offset, true);
}

Polynomial perm_apply(const RingContext& ctx, const GroupElement& g, const Polynomial& f) {
    g.check(ctx);
    if (f.nvars() != ctx.p) throw InputError("polynomial does not match the ring context");
    std::vector<int> sign(ctx.p, 1);
    std::vector<Coefficient> offset(ctx.p, Coefficient(0));
    Polynomial r = substitute_affine(f, g.perm, sign, offset, false);
    return g.star ? star(ctx, r) : r;
}

Polynomial elem_sym(const RingContext& ctx, int block, int alpha, bool hatted) {
    if (block < 0 || block >= static_cast<int>(ctx.blocks.size()))
        throw InputError("block index out of range");
    const auto& vars = ctx.blocks[block];
    int m = static_cast<int>(vars.size());
    if (alpha < 1 || alpha > m) throw InputError("symmetric degree out of range for block");

    std::vector<Polynomial> e(alpha + 1, Polynomial(ctx.p));
    e[0] = Polynomial::constant(ctx.p, Coefficient(1));
    for (int v : vars) {
        Polynomial u = Polynomial::variable(ctx.p, v);
        if (ctx.zeta[v] != 0)
            u -= Polynomial::constant(ctx.p, Coefficient(Rat(ctx.zeta[v], 2)));
        for (int a = std::min(alpha, m); a >= 1; --a) e[a] += e[a - 1] * u;
    }
    return hatted ? Coefficient::i_pow(alpha) * e[alpha] : e[alpha];
}

std::optional<Polynomial> exact_div(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw MathError("division by the zero polynomial");
    if (f.nvars() != d.nvars()) throw InputError("polynomials live in different rings");
    int p = f.nvars();
    const auto& [lead_e, lead_k] = *d.terms().rbegin();

    Polynomial rem = f;
    Polynomial quot(p);
    while (!rem.is_zero()) {
        const auto& [top_e, top_k] = *rem.terms().rbegin();
        ExpVec e(p);
        for (int v = 0; v < p; ++v) {
            e[v] = top_e[v] - lead_e[v];
            if (e[v] < 0) return std::nullopt;
        }
        Coefficient k = top_k / lead_k;
        Polynomial piece(p);
        piece.add_term(e, k);
        quot += piece;
        rem -= piece * d;
    }
    return quot;
}

namespace {

// Renders one monomial body (without sign), given the positive-or-complex
// coefficient text pieces.
std::string var_block(const RingContext& ctx, const ExpVec& e) {
    std::string out;
    for (int v = 0; v < ctx.p; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.var_names[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

}  // namespace

std::string Polynomial::str(const RingContext& ctx) const {
    if (static_cast<int>(ctx.var_names.size()) != p_)
        throw InputError("polynomial does not match the ring context");
    if (terms_.empty()) return "0";

    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, k] = *it;
        std::string vars = var_block(ctx, e);
        bool negative = false;
        std::string body;
        if (k.component_count() > 1) {
            body = "(" + k.str() + ")";
            if (!vars.empty()) body += "*" + vars;
        } else {
            Coefficient mag = k;
            // Single basis component: pull the sign out of the rational part.
            const Rat* comp = nullptr;
            if (k.rat_part() != 0) comp = &k.rat_part();
            else if (k.i_part() != 0) comp = &k.i_part();
            else if (k.sqrt3_part() != 0) comp = &k.sqrt3_part();
            else comp = &k.i_sqrt3_part();
            if (*comp < 0) {
                negative = true;
                mag = -k;
            }
            std::string coeff_text = mag.str();
            if (vars.empty()) {
                body = coeff_text;
            } else if (coeff_text == "1") {
                body = vars;
            } else {
                body = coeff_text + "*" + vars;
            }
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

}  // namespace rtgw
