#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weightlab/modules.hpp"

namespace weightlab {

// One admissible twisting element: a single graded monomial whose action is
// inverted, together with a (generally non-integer) exponent.  Admissible
// monomials are D_-1 and I_j (j >= 0) in rank 1, and d1, d2, x1 d2, x2 d1 in
// rank 2; their ad-action on any graded monomial is nilpotent, which keeps
// the twisted-action sum finite.
struct TwistData {
    BasisMonomial a;
    Rational x;

    TwistData(const BasisMonomial& a_, const Rational& x_);
};

// The element a^x . payload of the twisted localized module.  No new basis is
// materialized: the payload stays in the original module's window basis and
// every assertion about the localized module goes through twisted_act.
struct TwistedVector {
    TwistData twist;
    ModuleVector payload;
};

bool is_admissible_twist(const BasisMonomial& a);

// The integer root of a single graded monomial (its weight shift).
std::pair<long, long> monomial_root(const BasisMonomial& a);

// Exact preimage under the action of a: solves a . z = m weight space by
// weight space (the per-weight matrices have bandwidth <= 2, so each solve is
// a short triangular/bidiagonal system).  Throws Singular when a per-weight
// solve has no solution (integral-parameter degeneracy) and WindowOverflow
// when a preimage offset falls outside the window.
ModuleVector inv_act(const BasisMonomial& a, const ModuleVector& m,
                     const TensorModuleSpec& spec, const WeightWindow& window);

// u . (a^x m) = a^x ( sum_{i>=0} binom(-x, i) (ad a)^i(u) . a^{-i} m ).
// Returns the twisted vector with the same tag and the bracketed payload; the
// sum is finite because ad(a) is nilpotent on every graded monomial.
TwistedVector twisted_act(const LieElement& u, const TwistedVector& tv,
                          const TensorModuleSpec& spec, const WeightWindow& window);

// Parameters of one localization-isomorphism check.  Rank-1 cases read
// lambda.c1, c, nu (and eta for the shift case); rank-2 cases read s and the
// dominant integral lambda, deriving the twist exponent internally.
struct LocIsoParams {
    Weight2 lambda;
    Rational c;
    Rational nu;
    Rational eta;
    Weight2 s;
};

struct LocIsoViolation {
    std::string generator;
    std::string vector;
    std::string lhs;
    std::string rhs;
};

struct LocIsoReport {
    std::string iso_id;
    std::vector<std::pair<std::string, std::string>> params;
    long generators_checked = 0;
    long vectors_checked = 0;
    std::vector<LocIsoViolation> violations;

    bool ok() const { return violations.empty(); }
};

// The six named isomorphism checks:
//   A1_I1_plus        D^nu_<I1>   T(l, l, c, +)        ~ T(l+nu, l, c),  c != 0
//   A1_Dm1_minus      D^-nu_<D-1> T(l, l, c, -)        ~ T(l+nu, l, c)
//   A1_Dm1_shift      D^(nu-eta)_<D-1> T(l+nu, l, c)   ~ T(l+eta, l, c)
//   W2_reverse_2minus D^n2_<x1d2> T(s-n2 a, l, 2-)     ~ T(s, l),  n2 = l2-s2-1
//   W2_reverse_1plus  D^n1_<x1d2> T(s-n1 a, l, 1+)     ~ T(s, l),  n1 = s1-l1
//   W2_reverse_mixed  D^n_<x1d2>  T(s-n a, l, (1+,2-)) ~ T(s, l),  n  = s1-l1
// (a = e1 - e2).  The explicit rank-1 maps are built from gamma_ratio and
// powers of c; the rank-2 maps are grown from a matched pair of x2d1-kernel
// seed vectors by propagating phi(u.m) = u.phi(m) over the root-height <= 2
// generators, with incremental row reduction certifying well-definedness.
// Every check asserts the intertwining relation for each generator in the
// fixed set (rank 1: D_-1, D_0, D_1, D_2, I_0, I_1, I_2; rank 2: all 20
// monomials of root height <= 2) against each interior basis vector.
const std::vector<std::string>& loc_iso_ids();

LocIsoReport loc_iso_check(const std::string& iso_id, const LocIsoParams& params,
                           const WeightWindow& window);

std::string loc_iso_report_json(const LocIsoReport& report);

}  // namespace weightlab
