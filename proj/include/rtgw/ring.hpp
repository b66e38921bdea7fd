#pragma once
// The base commutative ring: sparse multivariate polynomials over
// Q(i, sqrt(3)) in p named variables, together with the three actions the
// algebra needs on it: integer shift automorphisms of each variable, the
// conjugate-linear involution lambda -> zeta - lambda, and block-preserving
// variable permutations.

#include <rtgw/coeff.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rtgw {

struct RingContext {
    int p = 0;                              // number of variables
    int q = 0;                              // leading variables carrying generators
    std::vector<std::string> var_names;     // display names in index order
    std::vector<int> zeta;                  // involution offset per variable, 0 or 1
    std::vector<std::vector<int>> blocks;   // partition of {0..p-1}; trailing block central

    int var_index(const std::string& name) const;
    int block_of(int v) const;
    // Structural validation: names/zeta sized p, zeta in {0,1} and constant
    // per block, blocks a partition whose leading blocks cover {0..q-1}.
    void check() const;
    bool operator==(const RingContext&) const = default;
};

using ExpVec = std::vector<int>;
using ShiftVector = std::vector<long long>;

// Graded-lexicographic term order: lower total degree first, ties broken by
// plain lexicographic comparison. Map iteration in reverse therefore yields
// the canonical display order.
struct GrlexLess {
    bool operator()(const ExpVec& u, const ExpVec& v) const;
};

class Polynomial {
public:
    using TermMap = std::map<ExpVec, Coefficient, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : p_(nvars) {}

    static Polynomial constant(int nvars, const Coefficient& k);
    static Polynomial variable(int nvars, int v);

    int nvars() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || degree() == 0; }
    Coefficient constant_value() const;
    int degree() const;
    const TermMap& terms() const { return terms_; }
    Coefficient coeff(const ExpVec& e) const;

    void add_term(const ExpVec& e, const Coefficient& k);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator*(const Coefficient& k, Polynomial f);
    friend bool operator==(const Polynomial& x, const Polynomial& y) {
        return x.p_ == y.p_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

    // Canonical text form: terms in descending graded-lex order, "^" for
    // powers, coefficients per Coefficient::str. Bit-stable across runs.
    std::string str(const RingContext& ctx) const;

private:
    int p_ = 0;
    TermMap terms_;
};

// A symmetry of the ring: a block-preserving permutation of the variables,
// optionally followed by the involution.
struct GroupElement {
    std::vector<int> perm;   // perm[v] is the image of variable v
    bool star = false;
    void check(const RingContext& ctx) const;
};

// Applies prod_v sigma_v^{s_v}, i.e. substitutes lambda_v -> lambda_v - s_v.
Polynomial shift_apply(const ShiftVector& s, const Polynomial& f);

// The involution: lambda_v -> zeta_v - lambda_v with coefficients conjugated.
Polynomial star(const RingContext& ctx, const Polynomial& f);

// Permutes variables, then applies the involution when g.star is set.
Polynomial perm_apply(const RingContext& ctx, const GroupElement& g, const Polynomial& f);

// alpha-th elementary symmetric polynomial of the block, taken in the
// centered variables lambda_v - zeta_v/2; hatted scales by i^alpha, which
// makes the result a fixed point of the involution as well.
Polynomial elem_sym(const RingContext& ctx, int block, int alpha, bool hatted);

// Exact division: f/d when d divides f exactly, nullopt otherwise.
std::optional<Polynomial> exact_div(const Polynomial& f, const Polynomial& d);

}  // namespace rtgw
