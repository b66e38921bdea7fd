#include <rtgw/localize.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace rtgw {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

long long to_ll(const Int& n) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi) throw MathError("integer out of range in atom normalization");
    return n.convert_to<long long>();
}

Polynomial poly_var(int nvars, int v) { return Polynomial::variable(nvars, v); }

Polynomial poly_const(int nvars, const Coefficient& k) { return Polynomial::constant(nvars, k); }

}  // namespace

Polynomial Atom::to_poly() const {
    int p = static_cast<int>(coeffs.size());
    Polynomial f = poly_const(p, Coefficient(constant));
    for (int v = 0; v < p; ++v)
        if (coeffs[v] != 0) f += Coefficient(coeffs[v]) * poly_var(p, v);
    return f;
}

std::string Atom::str(const RingContext& ctx) const { return to_poly().str(ctx); }

int Atom::coeff_gcd() const {
    int g = 0;
    for (int c : coeffs) g = static_cast<int>(std::gcd(g, c));
    return g;
}

Atom Atom::shifted(const ShiftVector& s) const {
    Atom out = *this;
    for (size_t v = 0; v < coeffs.size(); ++v) out.constant -= coeffs[v] * s[v];
    return out;
}

std::pair<Coefficient, Atom> atom_normalize(const RingContext& ctx, const Polynomial& f) {
    if (f.nvars() != ctx.p) throw InputError("atom lives in the wrong ring");
    std::vector<Coefficient> lin(ctx.p, Coefficient(0));
    Coefficient cst(0);
    for (const auto& [e, k] : f.terms()) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (deg == 0) {
            cst = k;
        } else if (deg == 1) {
            int v = static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin());
            lin[v] = k;
        } else {
            throw InputError("atom candidate has degree above one: " + f.str(ctx));
        }
    }
    int first = -1;
    for (int v = 0; v < ctx.p; ++v)
        if (!lin[v].is_zero()) { first = v; break; }
    if (first < 0) throw InputError("atom candidate has no variable part: " + f.str(ctx));

    Coefficient unit = lin[first];
    Coefficient inv = unit.inverse();
    std::vector<Rat> rat(ctx.p, Rat(0));
    for (int v = 0; v < ctx.p; ++v) {
        if (lin[v].is_zero()) continue;
        Coefficient r = lin[v] * inv;
        if (!r.is_rational()) throw InputError("atom coefficients are not proportional over the rationals: " + f.str(ctx));
        rat[v] = r.rat_part();
    }
    Coefficient rc = cst * inv;
    if (!rc.is_rational()) throw InputError("atom constant is not proportional over the rationals: " + f.str(ctx));
    Rat rcst = rc.rat_part();

    Int den(1);
    for (const Rat& r : rat) den = lcm(den, denominator(r));
    den = lcm(den, denominator(rcst));
    Int g(0);
    std::vector<Int> ic(ctx.p);
    for (int v = 0; v < ctx.p; ++v) {
        ic[v] = numerator(rat[v]) * (den / denominator(rat[v]));
        g = gcd(g, ic[v]);
    }
    Int icst = numerator(rcst) * (den / denominator(rcst));
    g = gcd(g, icst);

    Atom a;
    a.coeffs.resize(ctx.p, 0);
    std::vector<int> support;
    for (int v = 0; v < ctx.p; ++v) {
        Int c = ic[v] / g;
        if (c != 0) support.push_back(v);
        if (abs(c) > 2) throw InputError("atom variable coefficient out of range: " + f.str(ctx));
        a.coeffs[v] = static_cast<int>(c.convert_to<long long>());
    }
    a.constant = to_ll(icst / g);

    if (support.size() == 1) {
        int c = a.coeffs[support[0]];
        if (c != 1 && c != 2) throw InputError("invalid single-variable atom shape: " + f.str(ctx));
    } else if (support.size() == 2) {
        if (a.coeffs[support[0]] != 1 || std::abs(a.coeffs[support[1]]) != 1)
            throw InputError("invalid two-variable atom shape: " + f.str(ctx));
    } else {
        throw InputError("atom touches more than two variables: " + f.str(ctx));
    }
    // unit * (g/den) * atom reproduces the input
    return {unit * Coefficient(Rat(g, den)), a};
}

MultSetSpec::MultSetSpec(const RingContext& ctx, std::vector<Atom> gens) : gens_(std::move(gens)) {
    std::set<Atom> seen;
    for (const Atom& g : gens_) {
        seen.insert(g);
        seen.insert(atom_normalize(ctx, star(ctx, g.to_poly())).second);
    }
    seeds_.assign(seen.begin(), seen.end());
}

bool MultSetSpec::member(const Atom& a) const {
    for (const Atom& s : seeds_) {
        if (s.coeffs != a.coeffs) continue;
        long long g = s.coeff_gcd();
        if ((a.constant - s.constant) % g == 0) return true;
    }
    return false;
}

RationalElement::RationalElement(Polynomial num, std::map<Atom, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& [a, m] : den_) {
        if (static_cast<int>(a.coeffs.size()) != num_.nvars())
            throw InputError("denominator atom lives in the wrong ring");
        if (m <= 0) throw InputError("denominator multiplicities must be positive");
    }
    normalize();
}

void RationalElement::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progress = true;
    while (progress && !den_.empty()) {
        progress = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = exact_div(num_, it->first.to_poly())) {
                num_ = std::move(*q);
                if (--it->second == 0) den_.erase(it);
                progress = true;
                break;
            }
        }
    }
}

Polynomial RationalElement::den_poly() const {
    Polynomial d = poly_const(num_.nvars(), Coefficient(1));
    for (const auto& [a, m] : den_) {
        Polynomial ap = a.to_poly();
        for (int k = 0; k < m; ++k) d *= ap;
    }
    return d;
}

RationalElement RationalElement::operator-() const {
    RationalElement out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalElement& RationalElement::operator*=(const RationalElement& o) {
    num_ *= o.num_;
    for (const auto& [a, m] : o.den_) den_[a] += m;
    normalize();
    return *this;
}

RationalElement& RationalElement::operator+=(const RationalElement& o) {
    std::map<Atom, int> common = den_;
    for (const auto& [a, m] : o.den_) {
        auto it = common.find(a);
        if (it == common.end())
            common[a] = m;
        else
            it->second = std::max(it->second, m);
    }
    auto cofactor = [&](const std::map<Atom, int>& d) {
        Polynomial c = poly_const(num_.nvars(), Coefficient(1));
        for (const auto& [a, m] : common) {
            int have = 0;
            if (auto it = d.find(a); it != d.end()) have = it->second;
            Polynomial ap = a.to_poly();
            for (int k = have; k < m; ++k) c *= ap;
        }
        return c;
    };
    num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    den_ = std::move(common);
    normalize();
    return *this;
}

RationalElement& RationalElement::operator-=(const RationalElement& o) { return *this += -o; }

bool value_equal(const RationalElement& a, const RationalElement& b) {
    return a.num() * b.den_poly() == b.num() * a.den_poly();
}

RationalElement reduce(RationalElement a) { return a; }

RationalElement frac_shift(const ShiftVector& s, const RationalElement& a) {
    std::map<Atom, int> den;
    for (const auto& [atom, m] : a.den()) den[atom.shifted(s)] = m;
    return RationalElement(shift_apply(s, a.num()), std::move(den));
}

namespace {

RationalElement map_fraction(const RingContext& ctx, const RationalElement& a,
                             const std::function<Polynomial(const Polynomial&)>& act) {
    Polynomial num = act(a.num());
    std::map<Atom, int> den;
    Coefficient scale(1);
    for (const auto& [atom, m] : a.den()) {
        auto [unit, image] = atom_normalize(ctx, act(atom.to_poly()));
        den[image] += m;
        Coefficient inv = unit.inverse();
        for (int k = 0; k < m; ++k) scale = scale * inv;
    }
    return RationalElement(scale * num, std::move(den));
}

}  // namespace

RationalElement frac_star(const RingContext& ctx, const RationalElement& a) {
    return map_fraction(ctx, a, [&](const Polynomial& f) { return star(ctx, f); });
}

RationalElement frac_perm(const RingContext& ctx, const GroupElement& g, const RationalElement& a) {
    return map_fraction(ctx, a, [&](const Polynomial& f) { return perm_apply(ctx, g, f); });
}

namespace {

// ---- numerator factorization into atoms -----------------------------------

// Substitute integers for every variable except v; returns the coefficient
// list of the resulting univariate polynomial, indexed by the power of v.
std::vector<Coefficient> specialize(const Polynomial& f, int v, const std::vector<long long>& assign) {
    std::vector<Coefficient> out(static_cast<size_t>(f.degree()) + 1, Coefficient(0));
    for (const auto& [e, k] : f.terms()) {
        Rat factor(1);
        for (size_t u = 0; u < e.size(); ++u) {
            if (static_cast<int>(u) == v) continue;
            for (int j = 0; j < e[u]; ++j) factor *= Rat(assign[u]);
        }
        out[e[v]] += Coefficient(factor) * k;
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    if (n > Int("1000000000000000")) throw MathError("coefficient too large for factor search");
    std::vector<Int> out;
    for (Int d(1); d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

// Rational roots of a univariate polynomial with coefficients in the field;
// candidates come from one nonzero rational component and are verified
// against the full polynomial.
std::vector<Rat> rational_roots(const std::vector<Coefficient>& cs) {
    auto component = [&](int which, const Coefficient& k) -> Rat {
        switch (which) {
            case 0: return k.rat_part();
            case 1: return k.i_part();
            case 2: return k.sqrt3_part();
            default: return k.i_sqrt3_part();
        }
    };
    int which = -1;
    for (int w = 0; w < 4 && which < 0; ++w)
        for (const Coefficient& k : cs)
            if (component(w, k) != 0) { which = w; break; }
    if (which < 0) return {};

    std::vector<Rat> rc(cs.size());
    Int den(1);
    for (size_t j = 0; j < cs.size(); ++j) {
        rc[j] = component(which, cs[j]);
        den = lcm(den, denominator(rc[j]));
    }
    std::vector<Int> ic(cs.size());
    Int content(0);
    for (size_t j = 0; j < cs.size(); ++j) {
        ic[j] = numerator(rc[j]) * (den / denominator(rc[j]));
        content = gcd(content, ic[j]);
    }
    for (Int& c : ic) c /= content;

    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    size_t high = ic.size() - 1;
    while (high > low && ic[high] == 0) --high;

    std::set<Rat> candidates;
    if (low > 0) candidates.insert(Rat(0));
    for (const Int& p : positive_divisors(ic[low]))
        for (const Int& q : positive_divisors(ic[high])) {
            candidates.insert(Rat(p, q));
            candidates.insert(Rat(-p, q));
        }

    auto eval = [&](const Rat& x) {
        Coefficient acc(0);
        Coefficient cx{Rat(x)};
        for (size_t j = cs.size(); j-- > 0;) acc = acc * cx + cs[j];
        return acc;
    };
    std::vector<Rat> roots;
    for (const Rat& x : candidates)
        if (eval(x).is_zero()) roots.push_back(x);
    return roots;
}

// Integer constants c such that the atom with the given variable pattern and
// constant c could divide f, found by specializing all other variables.
std::vector<long long> constant_candidates(const Polynomial& f, const std::vector<int>& pattern) {
    int p = f.nvars();
    int v = -1;
    for (int u = 0; u < p; ++u)
        if (pattern[u] != 0) { v = u; break; }
    int alpha = pattern[v];
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<long long> assign(p);
        for (int u = 0; u < p; ++u) assign[u] = 101 + attempt * 37 + u * (u + 13);
        std::vector<Coefficient> uni = specialize(f, v, assign);
        bool zero = true;
        for (const Coefficient& k : uni)
            if (!k.is_zero()) { zero = false; break; }
        if (zero) continue;
        Rat offset(0);
        for (int u = 0; u < p; ++u)
            if (u != v && pattern[u] != 0) offset += Rat(pattern[u]) * Rat(assign[u]);
        std::vector<long long> out;
        for (const Rat& root : rational_roots(uni)) {
            Rat c = -Rat(alpha) * root - offset;
            if (denominator(c) == 1) out.push_back(to_ll(numerator(c)));
        }
        return out;
    }
    throw MathError("could not find a non-degenerate specialization while factoring");
}

struct Factoring {
    Coefficient unit{1};
    std::map<Atom, int> atoms;
};

// Factor a nonzero polynomial as unit * product of atoms, if possible.
std::optional<Factoring> factor_linear(const RingContext& ctx, Polynomial f) {
    Factoring out;
    std::vector<std::vector<int>> patterns;
    for (int v = 0; v < ctx.p; ++v) {
        for (int c : {1, 2}) {
            std::vector<int> pat(ctx.p, 0);
            pat[v] = c;
            patterns.push_back(std::move(pat));
        }
    }
    for (int v = 0; v < ctx.p; ++v)
        for (int w = v + 1; w < ctx.p; ++w)
            for (int s : {1, -1}) {
                std::vector<int> pat(ctx.p, 0);
                pat[v] = 1;
                pat[w] = s;
                patterns.push_back(std::move(pat));
            }

    for (const auto& pat : patterns) {
        if (f.is_constant()) break;
        bool progress = true;
        while (progress && !f.is_constant()) {
            progress = false;
            for (long long c : constant_candidates(f, pat)) {
                Atom a;
                a.coeffs = pat;
                a.constant = c;
                Polynomial ap = a.to_poly();
                while (auto q = exact_div(f, ap)) {
                    f = std::move(*q);
                    ++out.atoms[a];
                    progress = true;
                }
            }
        }
    }
    if (!f.is_constant()) return std::nullopt;
    out.unit = f.constant_value();
    return out;
}

}  // namespace

RationalElement frac_inv(const RationalElement& a, const RingContext& ctx, const MultSetSpec& spec) {
    if (a.is_zero()) throw MathError("zero is not invertible");
    auto fac = factor_linear(ctx, a.num());
    if (!fac) throw MathError("element is not invertible in this localization");
    for (const auto& [atom, m] : fac->atoms) {
        (void)m;
        if (!spec.member(atom))
            throw MathError("element is not invertible in this localization: factor " + atom.str(ctx) +
                            " lies outside the multiplicative set");
    }
    Polynomial num = fac->unit.inverse() * a.den_poly();
    return RationalElement(std::move(num), fac->atoms);
}

std::string RationalElement::str_display(const RingContext& ctx) const {
    std::string n = num_.str(ctx);
    if (den_.empty()) return n;
    std::ostringstream os;
    if (num_.terms().size() > 1)
        os << "(" << n << ")";
    else
        os << n;
    os << " / [";
    bool first = true;
    for (const auto& [a, m] : den_) {
        if (!first) os << " * ";
        first = false;
        Polynomial ap = a.to_poly();
        std::string s = ap.str(ctx);
        if (ap.terms().size() > 1)
            os << "(" << s << ")";
        else
            os << s;
        if (m > 1) os << "^" << m;
    }
    os << "]";
    return os.str();
}

std::string RationalElement::str_parseable(const RingContext& ctx) const {
    std::string n = num_.str(ctx);
    if (den_.empty()) return n;
    std::ostringstream os;
    os << "(" << n << ")/(";
    bool first = true;
    for (const auto& [a, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << a.to_poly().str(ctx) << ")";
        if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

Polynomial defining_factor(const RingContext& ctx, int v) {
    Polynomial l = poly_var(ctx.p, v);
    Polynomial lbar = poly_const(ctx.p, Coefficient(ctx.zeta[v])) - l;
    return l * lbar * (l - lbar) * (lbar - l);
}

namespace {

Polynomial pair_factor(const RingContext& ctx, int v, int w) {
    Polynomial lv = poly_var(ctx.p, v), lw = poly_var(ctx.p, w);
    Polynomial bv = poly_const(ctx.p, Coefficient(ctx.zeta[v])) - lv;
    Polynomial bw = poly_const(ctx.p, Coefficient(ctx.zeta[w])) - lw;
    return (lv + lw) * (lv + bw) * (bv + lw) * (bv + bw);
}

bool pair_admissible(const RingContext& ctx, int v, int w, bool partial) {
    if (!partial) return true;
    return std::abs(ctx.block_of(v) - ctx.block_of(w)) <= 1;
}

}  // namespace

Polynomial defining_polynomial(const RingContext& ctx, bool partial) {
    Polynomial d = poly_const(ctx.p, Coefficient(1));
    for (int v = 0; v < ctx.p; ++v) d *= defining_factor(ctx, v);
    for (int v = 0; v < ctx.p; ++v)
        for (int w = v + 1; w < ctx.p; ++w)
            if (pair_admissible(ctx, v, w, partial)) d *= pair_factor(ctx, v, w);
    return d;
}

MultSetSpec generating_atoms(const RingContext& ctx, bool partial) {
    std::vector<Atom> gens;
    for (int v = 0; v < ctx.p; ++v) {
        Atom single;
        single.coeffs.assign(ctx.p, 0);
        single.coeffs[v] = 1;
        gens.push_back(single);
        Atom odd = single;
        odd.coeffs[v] = 2;
        odd.constant = -1;
        gens.push_back(odd);
    }
    for (int v = 0; v < ctx.p; ++v)
        for (int w = v + 1; w < ctx.p; ++w) {
            if (!pair_admissible(ctx, v, w, partial)) continue;
            for (int s : {1, -1}) {
                Atom pair;
                pair.coeffs.assign(ctx.p, 0);
                pair.coeffs[v] = 1;
                pair.coeffs[w] = s;
                gens.push_back(pair);
            }
        }
    return MultSetSpec(ctx, gens);
}

}  // namespace rtgw
