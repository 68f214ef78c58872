#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weightlab/lie.hpp"
#include "weightlab/matrix.hpp"
#include "weightlab/rational.hpp"

namespace weightlab {

// The simple gl2 module L(lambda) with dominant integral highest weight
// (lambda1, lambda2): basis v_0..v_n, n = lambda1 - lambda2, where v_i has
// gl2-weight (lambda1 - i, lambda2 + i).
struct GL2Module {
    Rational lambda1;
    Rational lambda2;
    long n = 0;

    GL2Module(const Rational& l1, const Rational& l2);
    Weight2 weight_of(long i) const;
};

enum class GL2Gen { E11, E12, E21, E22 };
std::string gl2_gen_name(GL2Gen g);

// e . v_i as a sparse vector over the basis indices.
std::map<long, Rational> gl2_act(GL2Gen e, long i, const GL2Module& mod);

// Sign choice per integral direction of a tensor-module spec.
enum class JSign { Plus, Minus };

// A box of integer offsets relative to the spec's nu.  The interior is the
// box shrunk by margin on every side (rank-1 windows only consult the first
// axis); all verification claims are asserted on interiors only.
struct WeightWindow {
    long lo1 = 0, lo2 = 0;
    long hi1 = 0, hi2 = 0;
    long margin = 0;

    static WeightWindow square(long lo, long hi, long margin);
    static WeightWindow parse(const std::string& text);  // "lo1,lo2:hi1,hi2:margin"

    bool contains(long o1, long o2, int rank = 2) const;
    bool interior(long o1, long o2, int rank = 2) const;
    WeightWindow widened_margin(long extra) const;
    std::vector<std::pair<long, long>> offsets(int rank, bool interior_only) const;
    std::string str() const;
};

// Parameters of a tensor module: the dense module over the chosen algebra,
// its submodule/quotient selected by J, optionally with central charge c
// (A1/A2), or the one-dimensional trivial module when `trivial` is set.
struct TensorModuleSpec {
    Algebra alg = Algebra::W2;
    Weight2 nu;
    Weight2 lambda;              // rank 1 stores lambda in c1, c2 == 0
    std::map<int, JSign> J;      // directions with an integral offset and a sign
    std::optional<Rational> c;   // central charge, present iff the algebra has scalars
    bool trivial = false;

    static TensorModuleSpec make(Algebra alg, Weight2 nu, Weight2 lambda,
                                 std::map<int, JSign> J,
                                 std::optional<Rational> c = std::nullopt,
                                 bool trivial = false);

    int rank() const { return algebra_rank(alg); }
    long n() const;                  // top fiber index (0 for rank 1)
    GL2Module fiber() const;
    bool has_plus() const;
    bool has_minus() const;
    long t(int dir) const;           // lambda_dir - nu_dir as an integer
    Weight2 weight_at(long o1, long o2) const;
    std::string j_str() const;
    std::string str() const;
};

// Key of one term of a module vector: integer offset relative to nu plus the
// fiber basis index.
struct MVKey {
    long o1 = 0;
    long o2 = 0;
    long i = 0;

    bool operator<(const MVKey& k) const {
        if (o1 != k.o1) return o1 < k.o1;
        if (o2 != k.o2) return o2 < k.o2;
        return i < k.i;
    }
    bool operator==(const MVKey& k) const {
        return o1 == k.o1 && o2 == k.o2 && i == k.i;
    }
};

struct ModuleVector {
    std::map<MVKey, Rational> terms;  // no zero coefficients stored

    static ModuleVector basis(long o1, long o2, long i);
    ModuleVector& add_term(const MVKey& k, const Rational& c);
    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const Rational& s) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ModuleVector& o) const { return terms == o.terms; }
    bool operator!=(const ModuleVector& o) const { return !(*this == o); }
    std::string str(const TensorModuleSpec& spec) const;
};

// Classification of the basis vector x^{nu+o} (x) v_i relative to the
// sub/quotient structure selected by J:
//   InSubmodule     -- satisfies every plus condition and (when J has a minus
//                      part) at least one minus condition; for quotient-type
//                      specs this is the killed region.
//   InQuotientBasis -- satisfies every plus condition and fails all minus
//                      conditions: the canonical quotient representatives.
//   Out             -- fails some plus condition.
// Throws NoJ when the spec has empty J.
enum class Membership { InSubmodule, InQuotientBasis, Out };
std::string membership_name(Membership m);

Membership membership_J(const TensorModuleSpec& spec, long o1, long o2, long i);

// Whether the basis vector is one of the realized module's canonical basis
// members (dense: all; all-plus J: the submodule; minus J: the quotient
// representatives; trivial: the single vector at weight zero).
bool in_carrier(const TensorModuleSpec& spec, long o1, long o2, long i);

// Fiber indices present in the carrier at one offset, ascending.
std::vector<long> carrier_basis(const TensorModuleSpec& spec, long o1, long o2);

// Exact action of a Lie element; quotient-type specs reduce the result by
// dropping killed representatives.
ModuleVector tensor_act(const LieElement& w, const ModuleVector& m,
                        const TensorModuleSpec& spec);

// The common root of all monomials of a homogeneous element (throws
// HypothesisViolated when u mixes roots or is zero).
Root2 homogeneous_root(const LieElement& u);

// Matrix of a root-homogeneous element u from the weight space at offset o
// to the one at o + root(u): rows indexed by the target carrier basis,
// columns by the source carrier basis.
RationalMatrix weight_matrix(const LieElement& u, const TensorModuleSpec& spec,
                             long o1, long o2);

// Weight-multiplicity table over the window interior.
std::map<Weight2, long> character(const TensorModuleSpec& spec, const WeightWindow& win);
std::map<std::pair<long, long>, long> character_by_offset(const TensorModuleSpec& spec,
                                                          const WeightWindow& win);

// Closed-form character expansions.  Ids: "(1+,2+)", "(1+,2-)", "(1-,2+)",
// "(1-,2-)" (corner types, need both directions integral) and "2-" (the
// half-plane type, needs direction 2 integral).  Throws UnknownFormula for
// other ids and HypothesisViolated when the required integrality fails.
std::map<Weight2, long> char_series_expand(const std::string& formula_id,
                                           const Weight2& nu, const Weight2& lambda,
                                           const WeightWindow& win);

std::set<Weight2> support(const TensorModuleSpec& spec, const WeightWindow& win);

// JSON wire format, e.g.
//   {"algebra":"W2","nu":["1/2","1/3"],"lambda":["2","0"],"J":["1+","2-"],
//    "c":"0","trivial":false,"window":{"lo":[-6,-6],"hi":[6,6],"margin":2}}
// Rank-1 specs use one-element arrays and J entries "+"/"-".
TensorModuleSpec spec_from_json_text(const std::string& text,
                                     std::optional<WeightWindow>* window_out = nullptr);
std::string spec_to_json_text(const TensorModuleSpec& spec);

// Parse a module vector like "3/2 x^(1/2,1/3) v0 + x^(3/2,1/3) v1" (terms
// joined by '+'; coefficient and fiber index optional).  Weights must lie in
// the spec's coset nu + Z^rank.
ModuleVector module_vector_parse(const std::string& text, const TensorModuleSpec& spec);

}  // namespace weightlab
