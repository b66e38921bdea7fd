#pragma once

// Localization of the polynomial ring at a multiplicative set generated by
// degree-one "atoms". Elements are kept as a polynomial numerator over a
// multiset of atoms, reduced so that no denominator atom divides the
// numerator; that form is canonical, so equality is structural.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <rtgw/ring.hpp>

namespace rtgw {

// A normalized linear polynomial from the admissible shapes: c*lambda_v + m
// with c in {1, 2}, or lambda_v +- lambda_w + m (v < w), with integer m and
// the whole coefficient tuple primitive. Sign is fixed so the first nonzero
// variable coefficient is positive.
struct Atom {
    std::vector<int> coeffs;  // one slot per ring variable, at most two nonzero
    long long constant = 0;

    Polynomial to_poly() const;
    std::string str(const RingContext& ctx) const;

    // gcd of the nonzero variable coefficients; this is the step of the
    // lattice of constants reachable from a fixed atom by shift operators
    int coeff_gcd() const;

    // image under the shift sigma^s: constants move by -sum(coeffs[v]*s[v])
    Atom shifted(const ShiftVector& s) const;

    auto operator<=>(const Atom&) const = default;
};

// Split a degree-one polynomial into (unit, atom). Throws InputError when the
// input does not match any admissible atom shape up to a scalar.
std::pair<Coefficient, Atom> atom_normalize(const RingContext& ctx, const Polynomial& f);

// A multiplicative set described by finitely many atoms, closed under the
// shift operators and the involution. Membership only depends on the
// variable pattern and the constant modulo the pattern's coefficient gcd.
class MultSetSpec {
public:
    MultSetSpec() = default;
    MultSetSpec(const RingContext& ctx, std::vector<Atom> gens);

    const std::vector<Atom>& generators() const { return gens_; }
    bool member(const Atom& a) const;

private:
    std::vector<Atom> gens_;
    // generators plus their involution images, deduplicated
    std::vector<Atom> seeds_;
};

class RationalElement {
public:
    RationalElement() = default;
    explicit RationalElement(Polynomial num, std::map<Atom, int> den = {});

    const Polynomial& num() const { return num_; }
    const std::map<Atom, int>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_constant() && num_.constant_value().is_one(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }

    Polynomial den_poly() const;

    RationalElement operator-() const;
    RationalElement& operator+=(const RationalElement& o);
    RationalElement& operator-=(const RationalElement& o);
    RationalElement& operator*=(const RationalElement& o);
    friend RationalElement operator+(RationalElement a, const RationalElement& b) { return a += b; }
    friend RationalElement operator-(RationalElement a, const RationalElement& b) { return a -= b; }
    friend RationalElement operator*(RationalElement a, const RationalElement& b) { return a *= b; }
    friend RationalElement operator*(const Coefficient& k, RationalElement a) {
        a.num_ = k * a.num_;
        a.normalize();
        return a;
    }
    bool operator==(const RationalElement&) const = default;

    // human-oriented form: num / [atom * atom^2 * ...]
    std::string str_display(const RingContext& ctx) const;
    // form accepted back by the expression parser
    std::string str_parseable(const RingContext& ctx) const;

private:
    void normalize();

    Polynomial num_{0};
    std::map<Atom, int> den_;
};

// numerator/denominator comparison without assuming reduced form
bool value_equal(const RationalElement& a, const RationalElement& b);

// cancel denominator atoms that exactly divide the numerator (idempotent;
// constructors and arithmetic already keep elements in this form)
RationalElement reduce(RationalElement a);

// Invert an element whose numerator is a unit times a product of atoms from
// the given multiplicative set. Throws MathError when the numerator has any
// other factor, i.e. the element is not invertible in this localization.
RationalElement frac_inv(const RationalElement& a, const RingContext& ctx, const MultSetSpec& spec);

RationalElement frac_shift(const ShiftVector& s, const RationalElement& a);
RationalElement frac_star(const RingContext& ctx, const RationalElement& a);
RationalElement frac_perm(const RingContext& ctx, const GroupElement& g, const RationalElement& a);

// The single-variable factor of the defining polynomial: with lbar = zeta - l
// this is l*lbar*(l - lbar)*(lbar - l).
Polynomial defining_factor(const RingContext& ctx, int v);
// Product of all single-variable factors and the pair factors
// (l_v + l_w)(l_v + lbar_w)(lbar_v + l_w)(lbar_v + lbar_w); the partial
// variant keeps only pairs whose storeys differ by at most one.
Polynomial defining_polynomial(const RingContext& ctx, bool partial);

// Finite generating set of the multiplicative closure: lambda_v and
// 2*lambda_v - 1 for every variable, lambda_v +- lambda_w for admissible
// pairs (all pairs, or storey-adjacent pairs for the partial variant).
MultSetSpec generating_atoms(const RingContext& ctx, bool partial);

}  // namespace rtgw
