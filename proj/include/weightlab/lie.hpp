#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "weightlab/errors.hpp"
#include "weightlab/matrix.hpp"
#include "weightlab/rational.hpp"

namespace weightlab {

// The four algebras handled by this library.  W1/W2 are the Lie algebras of
// polynomial vector fields in one/two variables; A1/A2 extend them by the
// abelian ideal of scalar (polynomial) multipliers.
enum class Algebra { W1, W2, A1, A2 };

int algebra_rank(Algebra alg);           // number of variables: 1 or 2
bool algebra_has_scalars(Algebra alg);   // true for A1, A2
std::string algebra_name(Algebra alg);   // "W1", "W2", "A1", "A2"

// A weight (or root) written in the (eps1, eps2) coordinate basis.  Rank-1
// objects use c2 = 0.
struct Weight2 {
    Rational c1;
    Rational c2;

    Weight2() = default;
    Weight2(Rational a, Rational b) : c1(std::move(a)), c2(std::move(b)) {}

    Weight2 operator+(const Weight2& o) const { return {c1 + o.c1, c2 + o.c2}; }
    Weight2 operator-(const Weight2& o) const { return {c1 - o.c1, c2 - o.c2}; }
    Weight2 scaled(const Rational& s) const { return {c1 * s, c2 * s}; }
    bool operator==(const Weight2& o) const { return c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Weight2& o) const { return !(*this == o); }
    bool operator<(const Weight2& o) const {
        if (c1 != o.c1) return c1 < o.c1;
        return c2 < o.c2;
    }
    std::string str() const { return "(" + c1.str() + "," + c2.str() + ")"; }
};

// An integer root of W2 (or a candidate for one).
struct Root2 {
    long a1 = 0;
    long a2 = 0;

    bool operator==(const Root2& o) const { return a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const Root2& o) const { return !(*this == o); }
    bool operator<(const Root2& o) const {
        if (a1 != o.a1) return a1 < o.a1;
        return a2 < o.a2;
    }
    std::string str() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
    }
};

// Valid exponent for a W2 basis vector field (0 allowed): all entries >= -1,
// at most one entry equal to -1.
bool is_valid_w2_exponent(long a1, long a2);
// Nonzero valid exponent, i.e. a genuine root of W2.
bool is_w2_root(long a1, long a2);

// One basis monomial of the chosen algebra.
//   axis in {1..rank}: vector field x^a (x_axis d_axis); for rank 1 this is
//     the operator D_i with i = a[0] (so D_i = x^{i+1} d/dx).
//   axis == 0: scalar monomial x^a (A1/A2 only); for rank 1 this is I_j.
// Validity: vector fields need a[j] >= -1 with at most one -1, and a -1 entry
// forces axis == that coordinate (so the monomial stays polynomial); scalars
// need a[j] >= 0.  Rank-1 monomials keep a[1] == 0.
struct BasisMonomial {
    Algebra alg = Algebra::W2;
    std::array<long, 2> a{0, 0};
    int axis = 1;

    static BasisMonomial vf(Algebra alg, long a1, long a2, int axis);
    static BasisMonomial scalar_mono(Algebra alg, long j1, long j2);
    static BasisMonomial D(Algebra alg, long i);  // W1 or A1
    static BasisMonomial I(long j);               // A1

    bool is_scalar() const { return axis == 0; }
    std::string str() const;

    bool operator==(const BasisMonomial& o) const {
        return alg == o.alg && a == o.a && axis == o.axis;
    }
    bool operator<(const BasisMonomial& o) const {
        if (a[0] != o.a[0]) return a[0] < o.a[0];
        if (a[1] != o.a[1]) return a[1] < o.a[1];
        return axis < o.axis;
    }
};

// A finite rational linear combination of basis monomials of one algebra.
struct LieElement {
    Algebra alg = Algebra::W2;
    std::map<BasisMonomial, Rational> terms;  // no zero coefficients stored

    static LieElement zero(Algebra alg) { return LieElement{alg, {}}; }
    static LieElement monomial(const BasisMonomial& m, const Rational& c = Rational(1));

    LieElement& add_term(const BasisMonomial& m, const Rational& c);
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement scaled(const Rational& s) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const LieElement& o) const {
        return alg == o.alg && terms == o.terms;
    }
    bool operator!=(const LieElement& o) const { return !(*this == o); }
    std::string str() const;
};

// Exact Lie bracket.  Vector fields are composed as derivations acting on the
// polynomial coefficients and the result is re-expanded in the monomial
// basis; scalars form an abelian ideal acted on by derivation.
LieElement bracket(const LieElement& x, const LieElement& y);

// The root (ad-weight under the Cartan span{x_i d_i}) of a basis monomial.
Weight2 root_of(const BasisMonomial& m);

// The involution swapping the two variables (W2/A2 only).
LieElement sigma(const LieElement& x);
BasisMonomial sigma(const BasisMonomial& m);

// All valid W2 vector-field monomials whose exponent height a1+a2 lies in
// [-1, max_height], in canonical order.
std::vector<BasisMonomial> w2_monomials_up_to_height(long max_height);

// ---------------------------------------------------------------------------
// sl3 and its embedding into A2 (image inside W2 + scalars' complement; all
// images are pure vector fields, so they live in W2).

// Basis of sl3 used throughout: the six off-diagonal units E_ij (i != j) and
// the two diagonal differences H01 = E00 - E11, H12 = E11 - E22.
enum class SL3BasisId { E01, E02, E10, E12, E20, E21, H01, H12 };

const std::vector<SL3BasisId>& sl3_basis_ids();
std::string sl3_basis_name(SL3BasisId id);

// 3x3 matrix of a basis element / of the unit E_ij (indices 0..2).
RationalMatrix sl3_matrix(SL3BasisId id);
RationalMatrix sl3_unit(int i, int j);

// Coefficients of a traceless 3x3 matrix in the basis above, in the order of
// sl3_basis_ids().  Throws BadGenerator if the matrix is not 3x3 traceless.
std::vector<Rational> sl3_decompose(const RationalMatrix& m);

// The embedding into vector fields on the coordinates x1, x2:
//   E_ij |-> x_i d_j (1 <= i, j <= 2),  E_0k |-> -d_k,
//   E_k0 |-> x_k * (x1 d1 + x2 d2),
// the unique homomorphic extension of the middle-block convention; the
// Cartan differences follow (H01 |-> -2 x1 d1 - x2 d2, H12 |-> x1 d1 - x2 d2).
LieElement sl3_embed(SL3BasisId id);
LieElement sl3_embed_unit(int i, int j);             // i != j, 0..2; BadGenerator otherwise
LieElement sl3_embed_traceless(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Parabolic subsets of the W2 root lattice.

// A vector in the span of eps0, eps1, eps2 (orthonormal pairing).
struct EpsVector {
    long e0 = 0;
    long e1 = 0;
    long e2 = 0;

    bool operator==(const EpsVector& o) const {
        return e0 == o.e0 && e1 == o.e1 && e2 == o.e2;
    }
    std::string str() const;
};

// P(J) = { alpha in Delta_W2 : (alpha, s) <= 0 for every s in J }, where a
// W2 root (a1, a2) embeds with zero eps0 coordinate.  The Levi part is the
// zero-pairing locus and the nilradical the strictly negative one.
struct ParabolicSet {
    std::string tag;  // "P(1+)", "P(1-,2+)", ...; empty when J is unnamed
    std::vector<EpsVector> J;

    long pairing_sign_bound(const Root2& r) const;  // max over s in J of sign((r,s))
    bool contains(const Root2& r) const;
    bool in_levi(const Root2& r) const;
    bool in_nilrad(const Root2& r) const;

    // Enumeration of the respective root sets within max-norm radius.
    std::vector<Root2> roots_within(long radius) const;
    std::vector<Root2> levi_within(long radius) const;
    std::vector<Root2> nilrad_within(long radius) const;
};

// Build P(J) from an explicit list of eps-vectors; the tag is filled in when
// J coincides (as a set) with one of the twelve named configurations.
ParabolicSet parabolic_set(const std::vector<EpsVector>& J);

// Build P(J) from a comma-separated tag such as "1+", "2-", "12+", "1-,2+".
// Throws UnknownTag on anything else.
ParabolicSet parabolic_from_tag(const std::string& inner_tag);

// The twelve named parabolic subsets, in their standard order:
// 1+, 1-, 2+, 2-, 12+, 12-, (1+,2-), (1-,2+), (2-,12-), (1+,12+), (1-,12-),
// (2+,12+).
std::vector<ParabolicSet> enumerate_parabolics();

// All roots of W2 within max-norm radius (a1, a2 in [-radius, radius]).
std::vector<Root2> w2_roots_within(long radius);

}  // namespace weightlab
