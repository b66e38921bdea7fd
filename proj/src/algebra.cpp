#include <rtgw/algebra.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>

namespace rtgw {

namespace {

GradeVector vec_add(const GradeVector& a, const GradeVector& b) {
    GradeVector out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ShiftVector unit_shift(int p, int i, int val) {
    ShiftVector s(p, 0);
    s[i] = val;
    return s;
}

std::string gen_label_str(const RingContext& ctx, int i) {
    const std::string& name = ctx.var_names.at(i);
    return name.size() > 1 && name[0] == 'l' ? name.substr(1) : name;
}

RationalElement frac_one(const RingContext& ctx) {
    return RationalElement(Polynomial::constant(ctx.p, Coefficient(1)));
}

}  // namespace

Word letters_of(const GradeVector& k) {
    Word w;
    for (size_t i = 0; i < k.size(); ++i) {
        for (int j = 0; j < k[i]; ++j) w.push_back({static_cast<int>(i), false});
        for (int j = 0; j < -k[i]; ++j) w.push_back({static_cast<int>(i), true});
    }
    return w;
}

GradeVector grade_of_word(int q, const Word& w) {
    GradeVector k(q, 0);
    for (const Letter& l : w) k.at(l.idx) += l.y ? -1 : 1;
    return k;
}

ShiftVector grade_shift(const RingContext& ctx, const GradeVector& k) {
    ShiftVector s(ctx.p, 0);
    for (size_t i = 0; i < k.size(); ++i) s[i] = k[i];
    return s;
}

const RationalElement& MuTable::entry(bool first_y, bool second_y, int i, int j) const {
    const auto& m = first_y ? (second_y ? yy : yx) : (second_y ? xy : xx);
    return m.at(i).at(j);
}

Datum::Datum(std::string name, RingContext ctx, MultSetSpec spec, std::vector<RationalElement> t,
             std::vector<std::vector<RationalElement>> mu_xx, std::optional<MuTable> mu_override)
    : name_(std::move(name)),
      ctx_(std::move(ctx)),
      spec_(std::move(spec)),
      t_(std::move(t)),
      mu_xx_(std::move(mu_xx)),
      override_(std::move(mu_override)) {
    if (static_cast<int>(t_.size()) != ctx_.q)
        throw InputError("datum needs one t per generator index");
    if (static_cast<int>(mu_xx_.size()) != ctx_.q)
        throw InputError("mu matrix must be q by q");
    for (const auto& row : mu_xx_)
        if (static_cast<int>(row.size()) != ctx_.q) throw InputError("mu matrix must be q by q");
}

RationalElement Datum::t_bar(int i) const {
    return frac_shift(unit_shift(ctx_.p, i, 1), t_.at(i));
}

const MuTable& Datum::mu() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (override_) return *override_;
    if (!derived_) {
        int n = ctx_.q;
        MuTable m;
        m.xx = mu_xx_;
        m.xy = m.yx = m.yy =
            std::vector<std::vector<RationalElement>>(n, std::vector<RationalElement>(n, frac_one(ctx_)));
        for (int i = 0; i < n; ++i) {
            RationalElement tb = t_bar(i);
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    m.xy[i][i] = tb * frac_inv(t_.at(i), ctx_, spec_);
                } else {
                    RationalElement shifted_back = frac_shift(unit_shift(ctx_.p, j, -1), tb);
                    m.xy[i][j] = frac_shift(unit_shift(ctx_.p, i, 1), mu_xx_[i][j]) * tb *
                                 frac_inv(shifted_back, ctx_, spec_);
                }
                m.yy[i][j] = frac_star(ctx_, m.xx[i][j]);
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.yx[i][j] = frac_star(ctx_, m.xy[i][j]);
        derived_ = std::move(m);
    }
    return *derived_;
}

RationalElement Datum::cocycle(const GradeVector& v, const GradeVector& w) const {
    const char* env = std::getenv("RTGW_MEMO");
    bool memoize = !(env != nullptr && std::string(env) == "0");
    std::pair<GradeVector, GradeVector> key(v, w);
    if (memoize) {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cocycle_cache_.find(key);
        if (it != cocycle_cache_.end()) return it->second;
    }
    Word joined = letters_of(v);
    Word tail = letters_of(w);
    joined.insert(joined.end(), tail.begin(), tail.end());
    AlgebraElement r = reduce_word(*this, joined, frac_one(ctx_));
    RationalElement c = r.terms.at(vec_add(v, w));
    if (memoize) {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cocycle_cache_.emplace(std::move(key), c);
    }
    return c;
}

std::string Datum::gen_label(int i) const { return gen_label_str(ctx_, i); }

void AlgebraElement::add_term(const GradeVector& v, RationalElement f) {
    if (f.is_zero()) return;
    auto it = terms.find(v);
    if (it == terms.end()) {
        terms.emplace(v, std::move(f));
    } else {
        it->second += f;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out;
    for (const auto& [v, f] : terms) out.terms.emplace(v, -f);
    return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out(*this);
    for (const auto& [v, f] : o.terms) out.add_term(v, f);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out(*this);
    for (const auto& [v, f] : o.terms) out.add_term(v, -f);
    return out;
}

AlgebraElement alg_scalar(const Datum& d, RationalElement f) {
    AlgebraElement out;
    out.add_term(GradeVector(d.q(), 0), std::move(f));
    return out;
}

AlgebraElement alg_generator(const Datum& d, int idx, bool y) {
    GradeVector v(d.q(), 0);
    v.at(idx) = y ? -1 : 1;
    AlgebraElement out;
    out.add_term(v, frac_one(d.ctx()));
    return out;
}

AlgebraElement left_mul(const RationalElement& f, AlgebraElement a) {
    AlgebraElement out;
    for (auto& [v, g] : a.terms) out.add_term(v, f * g);
    return out;
}

namespace {

// One rewriting state: coeff * z_{w[0]} ... z_{w[n-1]}. A defect is either an
// adjacent same-index x/y pair (collapses to a shifted t factor) or an
// adjacent out-of-order pair (swaps against the factor table). Every rewrite
// multiplies the coefficient by the factor conjugated through the prefix
// shift, so the coefficient always stays on the far left.
struct RewriteState {
    RationalElement coeff;
    Word w;
};

std::vector<size_t> defect_positions(const Word& w) {
    std::vector<size_t> out;
    for (size_t pos = 0; pos + 1 < w.size(); ++pos) {
        const Letter& a = w[pos];
        const Letter& b = w[pos + 1];
        if ((a.idx == b.idx && a.y != b.y) || a.idx > b.idx) out.push_back(pos);
    }
    return out;
}

ShiftVector prefix_shift(const RingContext& ctx, const Word& w, size_t pos) {
    ShiftVector s(ctx.p, 0);
    for (size_t a = 0; a < pos; ++a) s[w[a].idx] += w[a].y ? -1 : 1;
    return s;
}

void apply_defect(const Datum& d, RewriteState& st, size_t pos) {
    const RingContext& ctx = d.ctx();
    Letter a = st.w[pos];
    Letter b = st.w[pos + 1];
    ShiftVector prefix = prefix_shift(ctx, st.w, pos);
    if (a.idx == b.idx && a.y != b.y) {
        RationalElement factor = a.y ? d.t(a.idx) : d.t_bar(a.idx);
        st.coeff *= frac_shift(prefix, factor);
        st.w.erase(st.w.begin() + pos, st.w.begin() + pos + 2);
    } else {
        const RationalElement& factor = d.mu().entry(a.y, b.y, a.idx, b.idx);
        st.coeff *= frac_shift(prefix, factor);
        std::swap(st.w[pos], st.w[pos + 1]);
    }
}

AlgebraElement reduce_with(const Datum& d, const Word& w, const RationalElement& coeff,
                           const std::function<size_t(const std::vector<size_t>&)>& pick) {
    AlgebraElement out;
    if (coeff.is_zero()) return out;
    RewriteState st{coeff, w};
    for (;;) {
        std::vector<size_t> defects = defect_positions(st.w);
        if (defects.empty()) break;
        apply_defect(d, st, pick(defects));
    }
    out.add_term(grade_of_word(d.q(), st.w), std::move(st.coeff));
    return out;
}

}  // namespace

AlgebraElement reduce_word(const Datum& d, const Word& w, const RationalElement& coeff) {
    return reduce_with(d, w, coeff, [](const std::vector<size_t>& defects) { return defects[0]; });
}

AlgebraElement reduce_word_random(const Datum& d, const Word& w, const RationalElement& coeff,
                                  unsigned seed) {
    std::mt19937 rng(seed);
    return reduce_with(d, w, coeff, [&rng](const std::vector<size_t>& defects) {
        return defects[rng() % defects.size()];
    });
}

AlgebraElement alg_mul(const Datum& d, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    const RingContext& ctx = d.ctx();
    for (const auto& [va, fa] : a.terms) {
        ShiftVector sa = grade_shift(ctx, va);
        for (const auto& [vb, fb] : b.terms)
            out.add_term(vec_add(va, vb), fa * frac_shift(sa, fb) * d.cocycle(va, vb));
    }
    return out;
}

AlgebraElement commutator(const Datum& d, const AlgebraElement& a, const AlgebraElement& b) {
    return alg_mul(d, a, b) - alg_mul(d, b, a);
}

AlgebraElement anticommutator(const Datum& d, const AlgebraElement& a, const AlgebraElement& b) {
    return alg_mul(d, a, b) + alg_mul(d, b, a);
}

AlgebraElement alg_star(const Datum& d, const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [v, f] : a.terms) {
        GradeVector nv(v);
        for (int& k : nv) k = -k;
        out.add_term(nv, frac_star(d.ctx(), f));
    }
    return out;
}

std::set<GradeVector> grade(const AlgebraElement& a) {
    std::set<GradeVector> out;
    for (const auto& [v, f] : a.terms) out.insert(v);
    return out;
}

bool is_homogeneous(const AlgebraElement& a) { return a.terms.size() <= 1; }

bool is_central(const Datum& d, const AlgebraElement& a) {
    for (int v = 0; v < d.q(); ++v) {
        AlgebraElement lam = alg_scalar(d, RationalElement(Polynomial::variable(d.ctx().p, v)));
        if (!commutator(d, a, lam).is_zero()) return false;
    }
    for (int i = 0; i < d.q(); ++i) {
        if (!commutator(d, a, alg_generator(d, i, false)).is_zero()) return false;
        if (!commutator(d, a, alg_generator(d, i, true)).is_zero()) return false;
    }
    return true;
}

AlgebraElement g_apply(const Datum& d, const GroupElement& g, const AlgebraElement& a) {
    const RingContext& ctx = d.ctx();
    g.check(ctx);
    for (int i = 0; i < ctx.q; ++i)
        if (g.perm.at(i) >= ctx.q)
            throw InputError("permutation must keep generator variables among the first q");
    GroupElement perm_only{g.perm, false};
    AlgebraElement out;
    for (const auto& [v, f] : a.terms) {
        Word w = letters_of(v);
        for (Letter& l : w) l.idx = g.perm[l.idx];
        AlgebraElement piece = reduce_word(d, w, frac_perm(ctx, perm_only, f));
        for (const auto& [nv, nf] : piece.terms) out.add_term(nv, nf);
    }
    return g.star ? alg_star(d, out) : out;
}

bool g_invariant(const Datum& d, const GroupElement& g, const AlgebraElement& a) {
    return g_apply(d, g, a) == a;
}

std::vector<std::pair<std::string, GroupElement>> symmetry_generators(const Datum& d) {
    const RingContext& ctx = d.ctx();
    std::vector<std::pair<std::string, GroupElement>> out;
    std::vector<int> identity(ctx.p);
    for (int v = 0; v < ctx.p; ++v) identity[v] = v;
    for (const std::vector<int>& block : ctx.blocks)
        for (size_t j = 0; j + 1 < block.size(); ++j) {
            GroupElement g{identity, false};
            std::swap(g.perm[block[j]], g.perm[block[j + 1]]);
            out.push_back({"perm{" + ctx.var_names[block[j]] + "," + ctx.var_names[block[j + 1]] + "}", g});
        }
    out.push_back({"star", GroupElement{identity, true}});
    return out;
}

Report g_orbit_check(const Datum& d, const AlgebraElement& a) {
    Report r;
    r.title = d.name() + " symmetry orbit";
    for (const auto& [label, g] : symmetry_generators(d)) {
        AlgebraElement image = g_apply(d, g, a);
        bool pass = image == a;
        r.add({label, "", pass, pass ? "" : a.str(d.ctx()), pass ? "" : image.str(d.ctx()),
               pass ? "fixed" : "moved"});
    }
    return r;
}

AlgebraElement symmetric_bracket(const Datum& d, int block, int alpha, const AlgebraElement& a) {
    Polynomial gamma = elem_sym(d.ctx(), block, alpha, false);
    return commutator(d, alg_scalar(d, RationalElement(gamma)), a);
}

namespace {

std::string pair_label(const Datum& d, int i, int j) {
    return "i=" + d.gen_label(i) + " j=" + d.gen_label(j);
}

void add_eq(Report& r, const Datum& d, const std::string& id, const std::string& indices,
            const RationalElement& lhs, const RationalElement& rhs, const std::string& note) {
    bool pass = lhs == rhs;
    r.add({id, indices, pass, pass ? "" : lhs.str_display(d.ctx()),
           pass ? "" : rhs.str_display(d.ctx()), note});
}

}  // namespace

Report validate(const Datum& d) {
    const RingContext& ctx = d.ctx();
    Report r;
    r.title = d.name() + " relation check";
    int n = d.q();
    RationalElement one = frac_one(ctx);

    {
        bool pass = true;
        std::string note = "involution offsets constant on blocks";
        for (const std::vector<int>& block : ctx.blocks)
            for (size_t j = 1; j < block.size(); ++j)
                if (ctx.zeta[block[j]] != ctx.zeta[block[0]]) {
                    pass = false;
                    note = "offset differs inside a block starting at " + ctx.var_names[block[0]];
                }
        r.add({"zeta-blocks", "", pass, "", "", note});
    }

    for (int i = 0; i < n; ++i) {
        std::string indices = "i=" + d.gen_label(i);
        bool pass = true;
        std::string note = "t is a unit of the localization";
        for (const auto& [atom, mult] : d.t(i).den())
            if (!d.spec().member(atom)) {
                pass = false;
                note = "denominator atom outside the multiplicative set: " + atom.str(ctx);
            }
        if (pass) {
            try {
                frac_inv(d.t(i), ctx, d.spec());
            } catch (const MathError& e) {
                pass = false;
                note = e.what();
            }
        }
        r.add({"t-invertible", indices, pass, pass ? "" : d.t(i).str_display(ctx), "", note});

        add_eq(r, d, "t-star-shift", indices, frac_star(ctx, d.t(i)), d.t_bar(i),
               "involution of t equals its unit shift");
        add_eq(r, d, "mu-diagonal", indices, d.mu_xx(i, i), one, "diagonal factor is 1");
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            add_eq(r, d, "mu-reciprocal", pair_label(d, i, j), d.mu_xx(i, j) * d.mu_xx(j, i), one,
                   "opposite factors multiply to 1");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::string indices = pair_label(d, i, j);
            const RationalElement& mu = d.mu_xx(i, j);

            bool in_l = true;
            for (const auto& [atom, mult] : mu.den())
                if (!d.spec().member(atom)) in_l = false;
            RationalElement starred = frac_star(ctx, mu);
            bool pass = in_l && mu * starred == one;
            r.add({"mu-star-inverse", indices, pass, pass ? "" : (mu * starred).str_display(ctx),
                   pass ? "" : one.str_display(ctx),
                   "involution image is the inverse, inside the localization"});

            add_eq(r, d, "mu-joint-shift", indices,
                   frac_shift(unit_shift(ctx.p, i, 1), frac_shift(unit_shift(ctx.p, j, 1), mu)), mu,
                   "fixed by the joint shift");
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                add_eq(r, d, "mu-spectator-shift", indices + " k=" + d.gen_label(k),
                       frac_shift(unit_shift(ctx.p, k, 1), mu), mu, "fixed by spectator shifts");
            }

            RationalElement tbi = d.t_bar(i);
            RationalElement tbj = d.t_bar(j);
            RationalElement si_mu = frac_shift(unit_shift(ctx.p, i, 1), mu);
            add_eq(r, d, "t-mu-compat-a", indices,
                   si_mu * frac_shift(unit_shift(ctx.p, j, 1), mu) * tbi *
                       frac_shift(unit_shift(ctx.p, i, -1), tbj),
                   frac_shift(unit_shift(ctx.p, j, -1), tbi) * tbj,
                   "first joint condition on t and mu, cross-multiplied");
            add_eq(r, d, "t-mu-compat-b", indices,
                   si_mu * frac_shift(unit_shift(ctx.p, j, -1), mu) * tbi * d.t(j),
                   frac_shift(unit_shift(ctx.p, j, -1), tbi) *
                       frac_shift(unit_shift(ctx.p, i, 1), d.t(j)),
                   "second joint condition on t and mu, cross-multiplied");
        }

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (int s : {1, -1}) {
                    std::string indices = "i=" + d.gen_label(i) + " j=" + d.gen_label(j) +
                                          " k=" + d.gen_label(k) +
                                          (s == 1 ? " shift=+1" : " shift=-1");
                    RationalElement tj = d.t(j);
                    RationalElement sk_tj = frac_shift(unit_shift(ctx.p, k, s), tj);
                    add_eq(r, d, "t-triple-exchange", indices,
                           frac_shift(unit_shift(ctx.p, i, 1), tj) * sk_tj,
                           tj * frac_shift(unit_shift(ctx.p, i, 1), sk_tj),
                           "shifts of t in distinct directions exchange");
                }
            }

    return r;
}

MuTable derive_mu(const Datum& d) {
    const RingContext& ctx = d.ctx();
    int n = d.q();
    MuTable m;
    m.xx = std::vector<std::vector<RationalElement>>(n, std::vector<RationalElement>(n, frac_one(ctx)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.xx[i][j] = d.mu_xx(i, j);
    m.xy = m.yx = m.yy =
        std::vector<std::vector<RationalElement>>(n, std::vector<RationalElement>(n, frac_one(ctx)));

    for (int i = 0; i < n; ++i) {
        RationalElement tbi = d.t_bar(i);
        m.xy[i][i] = tbi * frac_inv(d.t(i), ctx, d.spec());
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const RationalElement& mu_ij = d.mu_xx(i, j);
            const RationalElement& mu_ji = d.mu_xx(j, i);
            RationalElement si_mu = frac_shift(unit_shift(ctx.p, i, 1), mu_ij);
            RationalElement tbi_back = frac_shift(unit_shift(ctx.p, j, -1), tbi);

            // both closed formulas must give the same mixed factor
            RationalElement lhs = si_mu * tbi * d.t(j);
            RationalElement rhs = frac_shift(unit_shift(ctx.p, j, -1), mu_ji) *
                                  frac_shift(unit_shift(ctx.p, i, 1), d.t(j)) * tbi_back;
            if (lhs != rhs)
                throw MathError("mixed factor routes disagree at " + pair_label(d, i, j));

            m.xy[i][j] = si_mu * tbi * frac_inv(tbi_back, ctx, d.spec());
            m.yy[i][j] = frac_star(ctx, mu_ij);
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.yx[i][j] = frac_star(ctx, m.xy[i][j]);
            if (i == j) continue;
            if (m.xy[i][j] != m.xy[j][i])
                throw MathError("mixed factor is not symmetric at " + pair_label(d, i, j));
            // dependency of the y-x factor on t
            if (m.yx[i][j] * frac_shift(unit_shift(ctx.p, j, 1), d.t(i)) !=
                d.t(i) * frac_shift(unit_shift(ctx.p, i, -1), d.mu_xx(j, i)))
                throw MathError("y-x factor dependency fails at " + pair_label(d, i, j));
            // dependency of the y-y factor on t
            if (m.yy[i][j] * frac_shift(unit_shift(ctx.p, j, -1), d.t(i)) * d.t(j) !=
                d.t(i) * frac_shift(unit_shift(ctx.p, i, -1), d.t(j)) * d.mu_xx(i, j))
                throw MathError("y-y factor dependency fails at " + pair_label(d, i, j));
        }

    return m;
}

Report tgwa_identities(const Datum& d) {
    const RingContext& ctx = d.ctx();
    Report r;
    r.title = d.name() + " product identities";
    int n = d.q();

    const MuTable* table = nullptr;
    try {
        table = &d.mu();
    } catch (const MathError& e) {
        r.add({"factor-table", "", false, "", "", e.what()});
        return r;
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            RationalElement titj = d.t(i) * d.t(j);
            RationalElement lhs = frac_shift(unit_shift(ctx.p, i, 1),
                                             frac_shift(unit_shift(ctx.p, j, 1), titj));
            RationalElement rhs = frac_shift(unit_shift(ctx.p, j, 1), table->xy[i][j]) *
                                  frac_shift(unit_shift(ctx.p, i, 1), table->xy[j][i]) *
                                  d.t_bar(i) * d.t_bar(j);
            add_eq(r, d, "tgwa-two-index", pair_label(d, i, j), lhs, rhs,
                   "joint shift of t's against the mixed factors");
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (int s : {1, -1}) {
                    std::string indices = "i=" + d.gen_label(i) + " j=" + d.gen_label(j) +
                                          " k=" + d.gen_label(k) +
                                          (s == 1 ? " shift=+1" : " shift=-1");
                    ShiftVector sk = unit_shift(ctx.p, k, s);

                    RationalElement quot = frac_shift(unit_shift(ctx.p, j, -1), d.mu_xx(i, j)) *
                                           table->xy[i][j];
                    RationalElement tj = d.t(j);
                    add_eq(r, d, "tgwa-quotient-t", indices,
                           frac_shift(unit_shift(ctx.p, i, 1), tj) * frac_shift(sk, tj) *
                               frac_shift(sk, quot),
                           tj * frac_shift(unit_shift(ctx.p, i, 1), frac_shift(sk, tj)) * quot,
                           "spectator shift quotient for t");

                    RationalElement quot_bar = d.mu_xx(i, j) *
                                               frac_shift(unit_shift(ctx.p, j, 1), table->xy[i][j]);
                    RationalElement tbj = d.t_bar(j);
                    add_eq(r, d, "tgwa-quotient-tbar", indices,
                           frac_shift(unit_shift(ctx.p, i, 1), tbj) * frac_shift(sk, tbj) *
                               frac_shift(sk, quot_bar),
                           tbj * frac_shift(unit_shift(ctx.p, i, 1), frac_shift(sk, tbj)) * quot_bar,
                           "spectator shift quotient for the shifted t");
                }
            }

    return r;
}

namespace {

bool grade_is_zero(const GradeVector& v) {
    return std::all_of(v.begin(), v.end(), [](int k) { return k == 0; });
}

std::string letters_str(const RingContext& ctx, const GradeVector& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += (v[i] > 0 ? "x" : "y") + gen_label_str(ctx, static_cast<int>(i));
        int mag = v[i] > 0 ? v[i] : -v[i];
        if (mag > 1) out += "^" + std::to_string(mag);
    }
    return out;
}

std::string term_str(const RingContext& ctx, const GradeVector& v, const RationalElement& f) {
    std::string letters = letters_str(ctx, v);
    if (letters.empty()) {
        if (f.den().empty() && f.num().terms().size() <= 1) return f.str_display(ctx);
        return "(" + f.str_parseable(ctx) + ")";
    }
    if (f.is_one()) return letters;
    if ((-f).is_one()) return "-" + letters;
    if (f.den().empty() && f.num().terms().size() == 1) return f.str_display(ctx) + "*" + letters;
    return "(" + f.str_parseable(ctx) + ")*" + letters;
}

}  // namespace

std::string AlgebraElement::str(const RingContext& ctx) const {
    if (terms.empty()) return "0";
    if (terms.size() == 1 && grade_is_zero(terms.begin()->first))
        return terms.begin()->second.str_display(ctx);
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string piece = term_str(ctx, it->first, it->second);
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace rtgw
