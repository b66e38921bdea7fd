#pragma once

// The algebra core: a datum (coefficient ring, multiplicative set, t's and
// mu's), the graded normal form over bimonomials, multiplication by
// rewriting, the involution, brackets, and the relation validators.
//
// Generator index i (0 <= i < q) acts on the ring by the shift of the i-th
// variable: sigma_i(lambda_j) = lambda_j - delta_ij. Variables with index
// >= q are fixed by every shift.

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <rtgw/localize.hpp>
#include <rtgw/report.hpp>

namespace rtgw {

// exponent vector of a bimonomial: k_i > 0 means x_i^{k_i}, k_i < 0 means
// y_i^{-k_i}
using GradeVector = std::vector<int>;

struct Letter {
    int idx = 0;
    bool y = false;
    bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// canonical letter sequence: ascending indices, x for positive exponents
Word letters_of(const GradeVector& k);
GradeVector grade_of_word(int q, const Word& w);
// composite shift of the bimonomial, as a shift vector over all p variables
ShiftVector grade_shift(const RingContext& ctx, const GradeVector& k);

// Skew-commutation factors: z^A_i z^B_j = entry(A,B,i,j) * z^B_j z^A_i where
// a type flag true means a y-letter.
struct MuTable {
    std::vector<std::vector<RationalElement>> xx, xy, yx, yy;
    const RationalElement& entry(bool first_y, bool second_y, int i, int j) const;
};

class Datum {
public:
    Datum(std::string name, RingContext ctx, MultSetSpec spec, std::vector<RationalElement> t,
          std::vector<std::vector<RationalElement>> mu_xx,
          std::optional<MuTable> mu_override = std::nullopt);

    const std::string& name() const { return name_; }
    const RingContext& ctx() const { return ctx_; }
    const MultSetSpec& spec() const { return spec_; }
    int q() const { return ctx_.q; }

    const RationalElement& t(int i) const { return t_.at(i); }
    RationalElement t_bar(int i) const;  // sigma_i(t_i)
    const RationalElement& mu_xx(int i, int j) const { return mu_xx_.at(i).at(j); }
    bool has_mu_override() const { return override_.has_value(); }

    // full factor table: the override when present, otherwise derived once
    // from mu_xx and t by the closed formulas (no cross-checking here; see
    // derive_mu for the checked variant)
    const MuTable& mu() const;

    // coefficient of the basis product: w(v) * w(w) = cocycle(v,w) * w(v+w);
    // memoized unless the environment variable RTGW_MEMO is set to 0
    RationalElement cocycle(const GradeVector& v, const GradeVector& w) const;

    // label of generator i for report output, e.g. "11" for variable l11
    std::string gen_label(int i) const;

private:
    std::string name_;
    RingContext ctx_;
    MultSetSpec spec_;
    std::vector<RationalElement> t_;
    std::vector<std::vector<RationalElement>> mu_xx_;
    std::optional<MuTable> override_;

    mutable std::mutex cache_mutex_;
    mutable std::optional<MuTable> derived_;
    mutable std::map<std::pair<GradeVector, GradeVector>, RationalElement> cocycle_cache_;
};

// normal form: finite sum of coefficient * bimonomial
struct AlgebraElement {
    std::map<GradeVector, RationalElement> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const GradeVector& v, RationalElement f);

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement&) const = default;

    std::string str(const RingContext& ctx) const;
};

AlgebraElement alg_scalar(const Datum& d, RationalElement f);
AlgebraElement alg_generator(const Datum& d, int idx, bool y);
// multiplication by a grade-zero coefficient from the left
AlgebraElement left_mul(const RationalElement& f, AlgebraElement a);

// Rewrite a word times a coefficient into normal form: coefficients move
// left through letters by the shift rule, out-of-order adjacent letters swap
// with the mu factor, and adjacent same-index x/y pairs collapse to t or its
// shift. The default strategy picks the leftmost defect; the seeded variant
// picks uniformly among all defects, for confluence testing.
AlgebraElement reduce_word(const Datum& d, const Word& w, const RationalElement& coeff);
AlgebraElement reduce_word_random(const Datum& d, const Word& w, const RationalElement& coeff,
                                  unsigned seed);

AlgebraElement alg_mul(const Datum& d, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const Datum& d, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement anticommutator(const Datum& d, const AlgebraElement& a, const AlgebraElement& b);

// conjugate-linear homomorphism of order two: x_i <-> y_i, coefficients via
// frac_star
AlgebraElement alg_star(const Datum& d, const AlgebraElement& a);

std::set<GradeVector> grade(const AlgebraElement& a);
bool is_homogeneous(const AlgebraElement& a);

// commutes with the generator-block variables and with every x_i, y_i
bool is_central(const Datum& d, const AlgebraElement& a);

// group action: permute variables (generator letters follow their variable),
// then apply the involution when g.star is set
AlgebraElement g_apply(const Datum& d, const GroupElement& g, const AlgebraElement& a);
bool g_invariant(const Datum& d, const GroupElement& g, const AlgebraElement& a);
// symmetry generators of the datum: in-block adjacent transpositions plus
// the involution, each labeled
std::vector<std::pair<std::string, GroupElement>> symmetry_generators(const Datum& d);
Report g_orbit_check(const Datum& d, const AlgebraElement& a);

// commutator with the elementary symmetric polynomial gamma_alpha of a block
AlgebraElement symmetric_bracket(const Datum& d, int block, int alpha, const AlgebraElement& a);

// One verdict per relation instance; failures are records, not exceptions.
Report validate(const Datum& d);

// Derived factor table with cross-checks: the two closed formulas for mu_xy
// must agree, and both corollary dependencies for mu_yx and mu_yy must hold.
// Throws MathError on any disagreement.
MuTable derive_mu(const Datum& d);

// the product identities satisfied by every consistent datum; three-index
// instances require q >= 3
Report tgwa_identities(const Datum& d);

}  // namespace rtgw
