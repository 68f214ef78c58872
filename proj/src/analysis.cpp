#include "weightlab/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "weightlab/errors.hpp"
#include "weightlab/rng.hpp"

namespace weightlab {

namespace {

// ---------------------------------------------------------------------------
// Small shared helpers
// ---------------------------------------------------------------------------

long fiber_dim(const TensorModuleSpec& spec) {
    return spec.trivial ? 1 : spec.n() + 1;
}

bool fiber_full(const TensorModuleSpec& spec, long o1, long o2) {
    return static_cast<long>(carrier_basis(spec, o1, o2).size()) == fiber_dim(spec);
}

// Column-echelon span of fiber vectors at one offset, used for closure
// orbits.  Vectors are dense coordinate rows over the carrier basis.
struct FiberSpan {
    std::vector<std::vector<Rational>> rows;  // reduced, each with a pivot

    // Gaussian insert; returns true when the rank grew.
    bool insert(std::vector<Rational> v) {
        for (const auto& r : rows) {
            std::size_t p = 0;
            while (p < r.size() && r[p].is_zero()) ++p;
            if (p < v.size() && !v[p].is_zero()) {
                Rational f = v[p] / r[p];
                for (std::size_t j = p; j < v.size(); ++j) v[j] = v[j] - f * r[j];
            }
        }
        bool nonzero = false;
        for (const auto& c : v)
            if (!c.is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) return false;
        rows.push_back(std::move(v));
        return true;
    }

    long dim() const { return static_cast<long>(rows.size()); }
};

std::vector<Rational> matrix_times(const RationalMatrix& m,
                                   const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !v[c].is_zero())
                out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

// (ad a)^k(u) until it vanishes; returns the last nonzero power k (depth).
long ad_depth(const BasisMonomial& a, const LieElement& u) {
    LieElement am = LieElement::monomial(a);
    LieElement cur = u;
    long depth = 0;
    for (long k = 1; k <= 16; ++k) {
        cur = bracket(am, cur);
        if (cur.is_zero()) return depth;
        depth = k;
    }
    throw HypothesisViolated("ad-chain of the twist element did not terminate");
}

// Matrix of the twisted action of u from the carrier at (mo1, mo2) into the
// carrier at (to1, to2); u must be weight-homogeneous so every image lands at
// the single target offset.
RationalMatrix twisted_offset_matrix(const TensorModuleSpec& spec,
                                     const TwistData& twist, const LieElement& u,
                                     long mo1, long mo2, long to1, long to2,
                                     const WeightWindow& window) {
    std::vector<long> src = carrier_basis(spec, mo1, mo2);
    std::vector<long> dst = carrier_basis(spec, to1, to2);
    std::map<long, std::size_t> dst_pos;
    for (std::size_t r = 0; r < dst.size(); ++r) dst_pos[dst[r]] = r;
    RationalMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        TwistedVector tv{twist, ModuleVector::basis(mo1, mo2, src[c])};
        TwistedVector out = twisted_act(u, tv, spec, window);
        for (const auto& [key, coeff] : out.payload.terms) {
            if (key.o1 != to1 || key.o2 != to2)
                throw HypothesisViolated(
                    "twisted image of a homogeneous operator left its target "
                    "offset");
            m.at(dst_pos.at(key.i), c) = coeff;
        }
    }
    return m;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Strip regions
// ---------------------------------------------------------------------------

StripRegion StripRegion::horizontal(const Rational& anchor, const Rational& z1,
                                    const Rational& z2) {
    Rational len = z1 - z2;
    if (!len.is_integer() || len.sign() < 0)
        throw HypothesisViolated("strip ladder [z1,z2] needs z1 - z2 in Z>=0");
    StripRegion s;
    s.kind = StripKind::Horizontal;
    s.anchor = anchor;
    s.z1 = z1;
    s.z2 = z2;
    return s;
}

StripRegion StripRegion::vertical(const Rational& z1, const Rational& z2,
                                  const Rational& anchor) {
    StripRegion s = horizontal(anchor, z1, z2);
    s.kind = StripKind::Vertical;
    return s;
}

bool StripRegion::contains(const Weight2& w) const {
    const Rational& free_c = (kind == StripKind::Horizontal) ? w.c1 : w.c2;
    const Rational& bound_c = (kind == StripKind::Horizontal) ? w.c2 : w.c1;
    if (!(free_c - anchor).is_integer()) return false;
    if (!(z1 - bound_c).is_integer()) return false;
    if ((z1 - bound_c).sign() < 0) return false;
    if ((bound_c - z2).sign() < 0) return false;
    return true;
}

std::string StripRegion::str() const {
    std::string ladder = "[" + z1.str() + "," + z2.str() + "]";
    if (kind == StripKind::Horizontal)
        return "Hor(" + anchor.str() + "," + ladder + ")";
    return "Ver(" + ladder + "," + anchor.str() + ")";
}

std::set<Weight2> strip_weights_in_window(const std::vector<StripRegion>& regions,
                                          const TensorModuleSpec& spec,
                                          const WeightWindow& window) {
    std::set<Weight2> out;
    for (const auto& [o1, o2] : window.offsets(spec.rank(), true)) {
        Weight2 w = spec.weight_at(o1, o2);
        for (const auto& reg : regions)
            if (reg.contains(w)) {
                out.insert(w);
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Primitive weights
// ---------------------------------------------------------------------------

std::string WPReport::str() const {
    std::vector<std::string> ws;
    for (const auto& w : weights) ws.push_back(w.str());
    std::vector<std::string> es;
    for (const auto& r : expected) es.push_back(r.str());
    std::string out = "WP(" + op.str() + ") = {" + join(ws, ", ") + "}";
    if (!es.empty())
        out += " vs " + join(es, " u ") +
               (equals_expected ? " [equal]"
                                : (contained_in_expected ? " [contained]"
                                                         : " [differs]"));
    return out;
}

WPReport primitive_weights(const TensorModuleSpec& spec, const LieElement& u,
                           const WeightWindow& window) {
    Root2 beta = homogeneous_root(u);
    WPReport rep;
    rep.op = u;
    for (const auto& [o1, o2] : window.offsets(spec.rank(), true)) {
        std::vector<long> src = carrier_basis(spec, o1, o2);
        if (src.empty()) continue;
        long t1 = o1 + beta.a1;
        long t2 = o2 + beta.a2;
        if (!window.contains(t1, t2, spec.rank()))
            throw WindowOverflow("primitive-weight target offset (" +
                                 std::to_string(t1) + "," + std::to_string(t2) +
                                 ") outside the window");
        RationalMatrix m = weight_matrix(u, spec, o1, o2);
        if (!kernel_basis(m).empty()) rep.weights.insert(spec.weight_at(o1, o2));
    }
    return rep;
}

WPReport primitive_weights(const TensorModuleSpec& spec, const TwistData& twist,
                           const LieElement& u, const WeightWindow& window) {
    Root2 beta = homogeneous_root(u);
    auto [r1, r2] = monomial_root(twist.a);
    long depth = ad_depth(twist.a, u);
    long cap = (window.hi1 - window.lo1) + (window.hi2 - window.lo2) + 2;
    WPReport rep;
    rep.op = u;
    rep.shift = Weight2(twist.x * Rational(r1), twist.x * Rational(r2));
    for (const auto& [o1, o2] : window.offsets(spec.rank(), true)) {
        // Find a representative level k (smallest |k|, positive side first)
        // at which the whole inverse chain and the image fiber are full
        // inside the window.  The kernel below does not depend on which
        // valid level is chosen.
        bool found = false;
        long k = 0;
        for (long step = 0; step <= 2 * cap && !found; ++step) {
            long kk = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
            bool ok = true;
            for (long j = kk - depth; j <= kk && ok; ++j) {
                long q1 = o1 + j * r1;
                long q2 = o2 + j * r2;
                ok = window.contains(q1, q2, spec.rank()) &&
                     fiber_full(spec, q1, q2);
            }
            long t1 = o1 + beta.a1 + kk * r1;
            long t2 = o2 + beta.a2 + kk * r2;
            ok = ok && window.contains(t1, t2, spec.rank()) &&
                 fiber_full(spec, t1, t2);
            if (ok) {
                k = kk;
                found = true;
            }
        }
        if (!found)
            throw WindowOverflow("no representative level for offset (" +
                                 std::to_string(o1) + "," + std::to_string(o2) +
                                 ") fits the window");
        TwistData eff(twist.a, twist.x - Rational(k));
        RationalMatrix m =
            twisted_offset_matrix(spec, eff, u, o1 + k * r1, o2 + k * r2,
                                  o1 + beta.a1 + k * r1, o2 + beta.a2 + k * r2,
                                  window);
        if (!kernel_basis(m).empty())
            rep.weights.insert(spec.weight_at(o1, o2) + rep.shift);
    }
    return rep;
}

void evaluate_against(WPReport& rep, const std::vector<StripRegion>& regions,
                      const TensorModuleSpec& spec, const WeightWindow& window) {
    rep.expected = regions;
    std::set<Weight2> predicted;
    for (const auto& w : rep.weights) {
        for (const auto& reg : regions)
            if (reg.contains(w)) {
                predicted.insert(w);
                break;
            }
    }
    rep.contained_in_expected = (predicted == rep.weights);
    // Equality additionally needs every interior weight of the (shifted)
    // coset that lies in a region to have been reported.
    std::set<Weight2> interior_strip;
    for (const auto& [o1, o2] : window.offsets(spec.rank(), true)) {
        Weight2 w = spec.weight_at(o1, o2) + rep.shift;
        for (const auto& reg : regions)
            if (reg.contains(w)) {
                interior_strip.insert(w);
                break;
            }
    }
    rep.equals_expected =
        rep.contained_in_expected && (interior_strip == rep.weights);
}

// ---------------------------------------------------------------------------
// Composed-operator matrix and conventions
// ---------------------------------------------------------------------------

RationalMatrix operator_matrix_M(const Weight2& s, const Weight2& lambda) {
    Rational diff = lambda.c1 - lambda.c2;
    if (!diff.is_integer() || diff.sign() < 0)
        throw NotDominant("fiber weight needs lambda1 - lambda2 in Z>=0");
    TensorModuleSpec spec = TensorModuleSpec::make(Algebra::W2, s, lambda, {});
    LieElement down =
        LieElement::monomial(BasisMonomial::vf(Algebra::W2, -1, 1, 1));
    LieElement up =
        LieElement::monomial(BasisMonomial::vf(Algebra::W2, 1, -1, 2));
    RationalMatrix first = weight_matrix(down, spec, 0, 0);
    RationalMatrix second = weight_matrix(up, spec, -1, 1);
    return second * first;
}

std::pair<RationalMatrix, RationalMatrix> an_bn(long n, const Rational& x,
                                                const Rational& y) {
    if (n < 0) throw IndexOutOfRange("bidiagonal size needs n >= 0");
    std::size_t sz = static_cast<std::size_t>(n) + 1;
    RationalMatrix a(sz, sz);
    RationalMatrix b(sz, sz);
    for (long i = 0; i <= n; ++i) {
        a.at(i, i) = x - Rational(i);
        b.at(i, i) = y - Rational(n - i);
        if (i > 0) {
            a.at(i, i - 1) = Rational(i);
            b.at(i, i - 1) = Rational(n - i + 1);
        }
    }
    return {a, b};
}

std::vector<CharpolySample> charpoly_default_samples(long n, long count,
                                                     std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CharpolySample> out;
    for (long i = 0; i < count; ++i) {
        Rational l2 = rng.rational(9, 7);
        Rational s1 = rng.rational(9, 7);
        Rational s2 = rng.rational(9, 7);
        out.push_back({Weight2(s1, s2), Weight2(l2 + Rational(n), l2)});
    }
    // Integral edge cases, including coincident parameters.
    out.push_back({Weight2(0, 0), Weight2(Rational(n), 0)});
    out.push_back({Weight2(1, 0), Weight2(Rational(n), 0)});
    out.push_back({Weight2(1, 1), Weight2(Rational(n + 1), 1)});
    return out;
}

CharpolyCheck charpoly_identity_check(long n,
                                      const std::vector<CharpolySample>& samples) {
    static const std::vector<std::string> names = {"An*Bn",    "Bn*An",
                                                   "An^T*Bn",  "Bn*An^T",
                                                   "An*Bn^T",  "Bn^T*An"};
    CharpolyCheck out;
    out.n = n;
    out.identity_ok = true;
    std::set<std::string> mat_ok(names.begin(), names.end());
    std::set<std::string> cp_ok(names.begin(), names.end());
    for (const auto& sample : samples) {
        RationalMatrix m = operator_matrix_M(sample.s, sample.lambda);
        const UniPoly cp = charpoly(m);
        Rational x = sample.s.c2 - sample.lambda.c2 + 1;
        Rational y = sample.s.c1 - sample.lambda.c2;
        UniPoly target = UniPoly::constant(Rational(1));
        for (long i = 0; i <= n; ++i)
            target = target * UniPoly::linear_root((x - Rational(i)) *
                                                   (y - Rational(i)));
        if (cp != target) {
            out.identity_ok = false;
            out.failures.push_back(sample.s.str() + ";" + sample.lambda.str());
        }
        auto [a, b] = an_bn(n, x, y);
        std::vector<RationalMatrix> prods = {a * b,
                                             b * a,
                                             a.transpose() * b,
                                             b * a.transpose(),
                                             a * b.transpose(),
                                             b.transpose() * a};
        for (std::size_t ci = 0; ci < names.size(); ++ci) {
            if (!(prods[ci] == m)) mat_ok.erase(names[ci]);
            if (!(charpoly(prods[ci]) == cp)) cp_ok.erase(names[ci]);
        }
        ++out.samples_checked;
    }
    for (const auto& name : names) {
        if (mat_ok.count(name)) out.matrix_conventions.push_back(name);
        if (cp_ok.count(name)) out.charpoly_conventions.push_back(name);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Twisted primitive criterion
// ---------------------------------------------------------------------------

bool twisted_primitive_criterion(const Weight2& s, const Weight2& lambda,
                                 const Rational& nu) {
    if (!lambda.c1.is_integer() || !lambda.c2.is_integer() ||
        (lambda.c1 - lambda.c2).sign() < 0)
        throw NotDominant("criterion needs a dominant integral fiber weight");
    RationalMatrix m = operator_matrix_M(s, lambda);
    const UniPoly cp = charpoly(m);
    Rational value = (Rational(0) - nu) * (s.c1 - s.c2 - nu - Rational(1));
    bool by_spectrum = cp.eval(value).is_zero();

    // Independent cross-check: kernel of the twisted action over the fiber.
    TensorModuleSpec spec = TensorModuleSpec::make(Algebra::W2, s, lambda, {});
    TwistData twist(BasisMonomial::vf(Algebra::W2, 1, -1, 2), Rational(0) - nu);
    LieElement down =
        LieElement::monomial(BasisMonomial::vf(Algebra::W2, -1, 1, 1));
    WeightWindow win = WeightWindow::square(-6, 6, 0);
    RationalMatrix tm =
        twisted_offset_matrix(spec, twist, down, 0, 0, -1, 1, win);
    bool by_kernel = !kernel_basis(tm).empty();
    if (by_spectrum != by_kernel)
        throw HypothesisViolated(
            "spectral criterion and twisted kernel disagree at s=" + s.str() +
            ", lambda=" + lambda.str() + ", exponent " + nu.str());
    return by_spectrum;
}

// ---------------------------------------------------------------------------
// Nilradical invariants
// ---------------------------------------------------------------------------

std::map<Weight2, long> nplus_invariants(const TensorModuleSpec& spec,
                                         const ParabolicSet& p,
                                         const WeightWindow& window) {
    if (spec.rank() != 2)
        throw AlgebraMismatch("nilradical invariants need a rank-2 module");
    auto interior = window.offsets(2, true);
    if (interior.empty()) throw WindowOverflow("window interior is empty");
    long diam = std::max(window.hi1 - window.lo1, window.hi2 - window.lo2);
    std::vector<LieElement> gens;
    for (const Root2& r : p.nilrad_within(diam)) {
        for (int axis = 1; axis <= 2; ++axis) {
            if (!is_valid_w2_exponent(r.a1, r.a2)) continue;
            if ((r.a1 == -1 && axis != 1) || (r.a2 == -1 && axis != 2)) continue;
            gens.push_back(LieElement::monomial(
                BasisMonomial::vf(spec.alg, r.a1, r.a2, axis)));
        }
        if (algebra_has_scalars(spec.alg) && r.a1 >= 0 && r.a2 >= 0)
            gens.push_back(
                LieElement::monomial(BasisMonomial::scalar_mono(spec.alg, r.a1, r.a2)));
    }
    std::map<Weight2, long> out;
    for (const auto& [o1, o2] : interior) {
        std::vector<long> src = carrier_basis(spec, o1, o2);
        if (src.empty()) continue;
        // Stack the action matrices of every generator whose image offset
        // stays inside the window.
        std::vector<std::vector<Rational>> stacked;
        for (const auto& g : gens) {
            Root2 root = homogeneous_root(g);
            if (!window.contains(o1 + root.a1, o2 + root.a2, 2)) continue;
            RationalMatrix m = weight_matrix(g, spec, o1, o2);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::vector<Rational> row(m.cols());
                for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
                stacked.push_back(std::move(row));
            }
        }
        RationalMatrix joint(stacked.size(), src.size());
        for (std::size_t r = 0; r < stacked.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c)
                joint.at(r, c) = stacked[r][c];
        long dim = static_cast<long>(src.size()) -
                   static_cast<long>(rank(joint));
        if (dim > 0) out[spec.weight_at(o1, o2)] += dim;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closure profiles
// ---------------------------------------------------------------------------

std::vector<LieElement> canonical_generators(Algebra alg) {
    std::vector<LieElement> gens;
    if (algebra_rank(alg) == 2) {
        for (const BasisMonomial& m : w2_monomials_up_to_height(2))
            gens.push_back(LieElement::monomial(
                BasisMonomial::vf(alg, m.a[0], m.a[1], m.axis)));
        if (algebra_has_scalars(alg))
            for (long j1 = 0; j1 <= 2; ++j1)
                for (long j2 = 0; j2 + j1 <= 2; ++j2)
                    gens.push_back(LieElement::monomial(
                        BasisMonomial::scalar_mono(alg, j1, j2)));
    } else {
        for (long i = -1; i <= 2; ++i)
            gens.push_back(LieElement::monomial(BasisMonomial::D(alg, i)));
        if (algebra_has_scalars(alg))
            for (long j = 0; j <= 2; ++j)
                gens.push_back(LieElement::monomial(BasisMonomial::I(j)));
    }
    return gens;
}

std::map<Weight2, long> closure_profile(const TensorModuleSpec& spec, long o1,
                                        long o2, long i,
                                        const WeightWindow& window) {
    int rank2 = spec.rank();
    if (!window.contains(o1, o2, rank2))
        throw WindowOverflow("closure seed lies outside the window");
    std::vector<long> seed_carrier = carrier_basis(spec, o1, o2);
    auto pos = std::find(seed_carrier.begin(), seed_carrier.end(), i);
    if (pos == seed_carrier.end())
        throw IndexOutOfRange("closure seed is not a carrier basis vector");

    std::vector<LieElement> gens = canonical_generators(spec.alg);
    std::vector<Root2> roots;
    roots.reserve(gens.size());
    for (const auto& g : gens) roots.push_back(homogeneous_root(g));

    std::map<std::pair<long, long>, FiberSpan> spans;
    std::vector<Rational> seed(seed_carrier.size(), Rational(0));
    seed[static_cast<std::size_t>(pos - seed_carrier.begin())] = Rational(1);
    spans[{o1, o2}].insert(std::move(seed));

    std::vector<std::pair<long, long>> work = {{o1, o2}};
    while (!work.empty()) {
        auto [q1, q2] = work.back();
        work.pop_back();
        // Copy: inserts below may grow other spans, never this offset's rows
        // mid-iteration (self-root generators are weight-preserving and can
        // add rows here too, so iterate over a snapshot).
        std::vector<std::vector<Rational>> snapshot = spans[{q1, q2}].rows;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            long t1 = q1 + roots[gi].a1;
            long t2 = q2 + roots[gi].a2;
            if (!window.contains(t1, t2, rank2)) continue;
            if (carrier_basis(spec, t1, t2).empty()) continue;
            RationalMatrix m = weight_matrix(gens[gi], spec, q1, q2);
            bool grew = false;
            for (const auto& v : snapshot) {
                std::vector<Rational> img = matrix_times(m, v);
                if (spans[{t1, t2}].insert(std::move(img))) grew = true;
            }
            if (grew) work.push_back({t1, t2});
        }
    }

    std::map<Weight2, long> out;
    for (const auto& [off, span] : spans) {
        if (span.dim() == 0) continue;
        if (!window.interior(off.first, off.second, rank2)) continue;
        out[spec.weight_at(off.first, off.second)] += span.dim();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Boundedness predicates
// ---------------------------------------------------------------------------

namespace {
bool nonneg_integer(const Rational& r) { return r.is_integer() && r.sign() >= 0; }
}  // namespace

bool hw_bounded_check(const Weight2& lambda, const std::string& borel_tag) {
    Rational d12 = lambda.c1 - lambda.c2;
    if (borel_tag == "2+,12+" || borel_tag == "1-,12-")
        return nonneg_integer(d12);
    if (borel_tag == "1+,12+" || borel_tag == "2-,12-")
        return nonneg_integer(Rational(0) - d12);
    if (borel_tag == "1-,2+") return nonneg_integer(d12 + Rational(1));
    if (borel_tag == "1+,2-") return nonneg_integer(Rational(1) - d12);
    throw UnknownTag("unknown Borel tag: " + borel_tag);
}

bool sl3_bounded_weight_check(const Rational& mu0, const Rational& mu1,
                              const Rational& mu2,
                              const std::vector<EpsVector>& positive_roots) {
    if (positive_roots.size() != 3)
        throw HypothesisViolated("a positive system consists of three roots");
    for (const auto& r : positive_roots) {
        if (r.e0 + r.e1 + r.e2 != 0)
            throw HypothesisViolated("roots must have coordinate sum zero");
        if (r.e0 == 0 && r.e1 == 0 && r.e2 == 0)
            throw HypothesisViolated("roots must be nonzero");
    }
    auto is_sum = [&](int k, int a, int b) {
        return positive_roots[k].e0 ==
                   positive_roots[a].e0 + positive_roots[b].e0 &&
               positive_roots[k].e1 ==
                   positive_roots[a].e1 + positive_roots[b].e1 &&
               positive_roots[k].e2 ==
                   positive_roots[a].e2 + positive_roots[b].e2;
    };
    if (!is_sum(0, 1, 2) && !is_sum(1, 0, 2) && !is_sum(2, 0, 1))
        throw HypothesisViolated(
            "one root must be the sum of the other two");
    Rational rho0(positive_roots[0].e0 + positive_roots[1].e0 +
                      positive_roots[2].e0,
                  2);
    Rational rho1(positive_roots[0].e1 + positive_roots[1].e1 +
                      positive_roots[2].e1,
                  2);
    Rational rho2(positive_roots[0].e2 + positive_roots[1].e2 +
                      positive_roots[2].e2,
                  2);
    for (const auto& r : positive_roots) {
        Rational pairing = (mu0 + rho0) * Rational(r.e0) +
                           (mu1 + rho1) * Rational(r.e1) +
                           (mu2 + rho2) * Rational(r.e2);
        if (nonneg_integer(pairing)) return true;
    }
    return false;
}

bool half_plane_bounded_check(const Rational& nu, const Rational& lambda,
                              const Rational& c, const std::string& tag) {
    if ((lambda - nu).is_integer())
        throw HypothesisViolated(
            "the half-plane criterion needs lambda - nu non-integral");
    if (tag == "1+" || tag == "2+") return nonneg_integer(lambda - c);
    if (tag == "1-" || tag == "2-") return nonneg_integer(c + Rational(1) - lambda);
    throw UnknownTag("unknown direction tag: " + tag);
}

// ---------------------------------------------------------------------------
// Support shapes
// ---------------------------------------------------------------------------

namespace {

long eps_pairing(const Root2& r, const EpsVector& s) {
    return r.a1 * s.e1 + r.a2 * s.e2;
}

// Solve pairing(b, s) = m for every s in J (tight base); underdetermined
// coordinates default to zero.  Entries of named J-vectors lie in {0, +-1}.
// Returns false when no integer solution exists.
bool tight_base(const std::vector<EpsVector>& J, const std::vector<long>& m,
                long& b1, long& b2) {
    if (J.size() == 1) {
        long c1 = J[0].e1, c2 = J[0].e2;
        b1 = 0;
        b2 = 0;
        if (c1 != 0)
            b1 = m[0] / c1;  // exact: c1 is +-1
        else if (c2 != 0)
            b2 = m[0] / c2;
        else
            return false;
        return c1 * b1 + c2 * b2 == m[0];
    }
    // Two equations; the named configurations are unimodular.
    long a = J[0].e1, b = J[0].e2, c = J[1].e1, d = J[1].e2;
    long det = a * d - b * c;
    if (det == 0) return false;
    long num1 = m[0] * d - b * m[1];
    long num2 = a * m[1] - m[0] * c;
    if (num1 % det != 0 || num2 % det != 0) return false;
    b1 = num1 / det;
    b2 = num2 / det;
    return true;
}

}  // namespace

std::string SupportShape::str() const {
    std::string out = tag;
    if (base) out += " base " + base->str();
    if (twin_base) out += " / " + twin_base->str();
    return out;
}

SupportShape support_shape(const TensorModuleSpec& spec,
                           const WeightWindow& window) {
    if (spec.rank() != 2)
        throw AlgebraMismatch("support classification covers rank-2 modules");
    std::set<std::pair<long, long>> observed;
    auto interior = window.offsets(2, true);
    for (const auto& [o1, o2] : interior)
        if (!carrier_basis(spec, o1, o2).empty()) observed.insert({o1, o2});

    if (observed.empty())
        throw Unclassifiable("no support inside the window interior");

    if (observed.size() == 1) {
        if (spec.trivial) {
            SupportShape s;
            s.tag = "point";
            s.base = spec.weight_at(observed.begin()->first,
                                    observed.begin()->second);
            return s;
        }
        throw Unclassifiable("single observed weight in a nontrivial module");
    }

    if (observed.size() == interior.size()) {
        SupportShape s;
        s.tag = "dense";
        return s;
    }

    // Single shifted cones, most permissive first (enumeration order).
    for (const ParabolicSet& p : enumerate_parabolics()) {
        std::vector<long> tight(p.J.size(), 0);
        for (std::size_t si = 0; si < p.J.size(); ++si) {
            bool first = true;
            for (const auto& q : observed) {
                long v = eps_pairing(Root2{q.first, q.second}, p.J[si]);
                if (first || v > tight[si]) tight[si] = v;
                first = false;
            }
        }
        long b1 = 0, b2 = 0;
        if (!tight_base(p.J, tight, b1, b2)) continue;
        bool match = true;
        for (const auto& [o1, o2] : interior) {
            bool inside =
                p.pairing_sign_bound(Root2{o1 - b1, o2 - b2}) <= 0;
            if (inside != (observed.count({o1, o2}) > 0)) {
                match = false;
                break;
            }
        }
        if (match) {
            SupportShape s;
            s.tag = "cone:" + (p.tag.empty() ? "?" : p.tag);
            s.base = spec.weight_at(b1, b2);
            return s;
        }
    }

    // Twin templates: an intersection of two swapped shifted cones; needs
    // the two coordinates of nu to lie in a common integer coset.
    Rational dd = spec.nu.c1 - spec.nu.c2;
    if (dd.is_integer()) {
        long d = dd.to_long();
        const std::vector<std::pair<std::string, std::string>> twin_tags = {
            {"2-,12-", "1-,12-"}, {"1+,12+", "2+,12+"}};
        for (const auto& [tag1, tag2] : twin_tags) {
            ParabolicSet p1 = parabolic_from_tag(tag1);
            ParabolicSet p2 = parabolic_from_tag(tag2);
            std::vector<long> tight(p1.J.size(), 0);
            for (std::size_t si = 0; si < p1.J.size(); ++si) {
                bool first = true;
                for (const auto& q : observed) {
                    long v = eps_pairing(Root2{q.first, q.second}, p1.J[si]);
                    if (first || v > tight[si]) tight[si] = v;
                    first = false;
                }
            }
            long b1 = 0, b2 = 0;
            if (!tight_base(p1.J, tight, b1, b2)) continue;
            long c1 = b2 - d, c2 = b1 + d;  // swapped base
            bool match = true;
            for (const auto& [o1, o2] : interior) {
                bool inside =
                    p1.pairing_sign_bound(Root2{o1 - b1, o2 - b2}) <= 0 &&
                    p2.pairing_sign_bound(Root2{o1 - c1, o2 - c2}) <= 0;
                if (inside != (observed.count({o1, o2}) > 0)) {
                    match = false;
                    break;
                }
            }
            if (match) {
                SupportShape s;
                s.tag = "twin:P(" + tag1 + ")&P(" + tag2 + ")";
                s.base = spec.weight_at(b1, b2);
                s.twin_base = spec.weight_at(c1, c2);
                return s;
            }
        }
    }

    throw Unclassifiable("support matches no template on this window");
}

// ---------------------------------------------------------------------------
// Isomorphism keys
// ---------------------------------------------------------------------------

namespace {
Rational frac_part(const Rational& r) { return r - Rational(r.floor_long()); }
}  // namespace

std::string iso_invariant(const TensorModuleSpec& spec) {
    if (spec.trivial) return "class:trivial";
    std::string alg = algebra_name(spec.alg);
    if (spec.rank() == 2) {
        bool int1 = (spec.lambda.c1 - spec.nu.c1).is_integer();
        bool int2 = (spec.lambda.c2 - spec.nu.c2).is_integer();
        if (int1 != (spec.J.count(1) > 0) || int2 != (spec.J.count(2) > 0))
            throw NotSimple(
                "J must select exactly the integral directions");
        if (spec.lambda == Weight2(1, 0))
            throw NotSimple("fiber weight (1,0) is excluded");
        if (spec.lambda == Weight2(0, 0) && spec.J.size() == 2 &&
            spec.J.at(1) == JSign::Plus && spec.J.at(2) == JSign::Plus)
            throw NotSimple("corner module at weight (0,0) is excluded");
        if (spec.lambda == Weight2(1, 1) && spec.J.size() == 2 &&
            spec.J.at(1) == JSign::Minus && spec.J.at(2) == JSign::Minus)
            throw NotSimple("corner module at weight (1,1) is excluded");
        std::string key = alg + "|nu~(" + frac_part(spec.nu.c1).str() + "," +
                          frac_part(spec.nu.c2).str() + ")|lambda=" +
                          spec.lambda.str() + "|J=" + spec.j_str();
        if (spec.c) key += "|c=" + spec.c->str();
        return key;
    }
    // Rank 1.
    Rational lam = spec.lambda.c1;
    bool integral = (lam - spec.nu.c1).is_integer();
    if (integral != !spec.J.empty())
        throw NotSimple("J must be present exactly in the integral case");
    if (integral && !spec.J.empty()) {
        JSign sign = spec.J.begin()->second;
        if (sign == JSign::Plus && lam == Rational(0))
            throw NotSimple("the polynomial module at weight 0 is excluded");
        if (sign == JSign::Minus && lam == Rational(1))
            throw NotSimple("the co-polynomial module at weight 1 is excluded");
    }
    bool fold = !integral && (lam == Rational(0) || lam == Rational(1)) &&
                (!spec.c || spec.c->is_zero());
    Rational lam_key = fold ? Rational(0) : lam;
    std::string key = alg + "|nu~" + frac_part(spec.nu.c1).str() +
                      "|lambda=" + lam_key.str() + "|J=" + spec.j_str();
    if (spec.c) key += "|c=" + spec.c->str();
    return key;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

std::string analysis_report_json(const std::vector<AnalysisReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["claim"] = r.claim;
        obj["params"] = r.params;
        obj["status"] = r.status;
        obj["details"] = r.details;
        arr.push_back(obj);
    }
    return arr.dump(2);
}

}  // namespace weightlab
