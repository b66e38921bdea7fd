#pragma once

// The two worked parameter sets (su3 and so3), the Lie-algebra generator
// families built inside them, and verification suites that replay the
// recorded bracket tables against an independent 3x3 matrix model.

#include <array>
#include <string>
#include <vector>

#include <rtgw/algebra.hpp>

namespace rtgw {

// Dense 3x3 matrix over the coefficient field: the classical side of every
// oracle comparison in this module.
struct Matrix3 {
    std::array<std::array<Coefficient, 3>, 3> m{};

    static Matrix3 zero();
    // E_{rc}: single 1 at row r, column c (1-indexed)
    static Matrix3 unit(int r, int c);

    Coefficient trace() const;
    bool is_zero() const;

    Matrix3 operator-() const;
    friend Matrix3 operator+(Matrix3 a, const Matrix3& b);
    friend Matrix3 operator-(Matrix3 a, const Matrix3& b);
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator*(const Coefficient& k, Matrix3 a);
    bool operator==(const Matrix3&) const = default;

    std::string str() const;
};

Matrix3 mat_comm(const Matrix3& a, const Matrix3& b);
Matrix3 mat_anticomm(const Matrix3& a, const Matrix3& b);

struct NamedElement {
    std::string name;
    AlgebraElement elem;
};
using NamedList = std::vector<NamedElement>;
const AlgebraElement& find_named(const NamedList& list, const std::string& name);

// Worked instances. Both pass validate() with zero failing records.
Datum su3_datum();
Datum so3_datum();

// X1, Y1, X2, Y2, X3, Y3 and the Cartan elements H1, H2, H3 (coefficients of
// grade zero). Cheap construction-time identities are rechecked and throw
// MathError when violated.
NamedList sl3_generators(const Datum& d);

// The self-adjoint combinations U1, V1, U2, V2, U3, V3, iH1, iH2, iH3.
NamedList su3_generators(const Datum& d);

// U1, U2, U3 for the so3 instance.
NamedList so3_generators(const Datum& d);

// Replays every cell of the recorded 6x8 bracket table, the four two-letter
// products, the two vanishing cross brackets, the star identity for X3, and
// the Jacobi identity over all basis multisets. Cells whose computed value
// is the negative of the recorded entry pass with an explanatory note and
// are listed in a summary record.
Report verify_sl3_table(const Datum& d);

// Cross-checks algebra brackets against 3x3 matrix brackets through the
// recorded generator correspondence. The recorded assignment is scored
// as-is, then all 256 sign twists are searched; the canonical consistent
// twist is reported and used for the per-pair verdicts.
Report matrix_sl3_oracle(const Datum& d);

// F1..F8
std::vector<Matrix3> gell_mann_matrices();
// f^{abc} = -(i/4) tr(F_a [F_b, F_c]), 1-indexed
Coefficient gm_antisymmetric_constant(int a, int b, int c);
// d^{abc} = (1/4) tr({F_a, F_b} F_c), 1-indexed
Coefficient gm_symmetric_constant(int a, int b, int c);

// Bracket-consistent octet images psi(F1)..psi(F8): the matrix expansion of
// each F transported through the canonical sign twist found by
// matrix_sl3_oracle. These are the images used by the Casimir sums.
NamedList gell_mann_images(const Datum& d);

// Structure-constant compatibility for the octet correspondence: the
// recorded images are scored pair by pair (mismatches reported with both
// sides rendered), the bracket-consistent corrected images are derived from
// the matrix-side expansion, and every U, V, iH is checked for invariance
// under the full symmetry group.
Report gell_mann_check(const Datum& d);

struct CasimirResult {
    AlgebraElement sum_form;
    AlgebraElement closed_form;
    bool equal = false;
    bool central = false;
    Report report;
};
// order 2: quadratic sum (1/4) sum_k psi(F_k)^2; order 3: cubic sum
// (1/8) sum_{jkl} d^{jkl} psi(F_j) psi(F_k) psi(F_l) over all index triples.
// Both are compared against the recorded closed forms in the central
// variables and tested for centrality against all eight generators.
CasimirResult casimir(int order, const Datum& d);

// so3 suite: the three recorded brackets of U1, U2, U3, Jacobi, symmetry
// invariance, centrality of the top-block variables, the scalar collapse of
// the recorded Q coefficient, and the 3x3 antisymmetric matrix oracle over
// all six basis assignments.
Report verify_so3(const Datum& d);

struct NamedPoly {
    std::string name;
    Polynomial poly;
};
// Generators of the invariant subring: per block, the centered elementary
// symmetric polynomials, scaled by i at odd degrees. Each is fixed by every
// symmetry generator.
std::vector<NamedPoly> invariant_ring_generators(const Datum& d);

}  // namespace rtgw
