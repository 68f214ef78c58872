#include "weightlab/lie.hpp"

#include <algorithm>
#include <sstream>

namespace weightlab {

int algebra_rank(Algebra alg) {
    return (alg == Algebra::W1 || alg == Algebra::A1) ? 1 : 2;
}

bool algebra_has_scalars(Algebra alg) {
    return alg == Algebra::A1 || alg == Algebra::A2;
}

std::string algebra_name(Algebra alg) {
    switch (alg) {
        case Algebra::W1: return "W1";
        case Algebra::W2: return "W2";
        case Algebra::A1: return "A1";
        case Algebra::A2: return "A2";
    }
    return "?";
}

bool is_valid_w2_exponent(long a1, long a2) {
    if (a1 < -1 || a2 < -1) return false;
    return !(a1 == -1 && a2 == -1);
}

bool is_w2_root(long a1, long a2) {
    return is_valid_w2_exponent(a1, a2) && !(a1 == 0 && a2 == 0);
}

BasisMonomial BasisMonomial::vf(Algebra alg, long a1, long a2, int axis) {
    const int rank = algebra_rank(alg);
    if (axis < 1 || axis > rank)
        throw InvalidMonomial("vector field axis " + std::to_string(axis) +
                              " out of range for " + algebra_name(alg));
    if (rank == 1 && a2 != 0)
        throw InvalidMonomial("rank-1 monomial with nonzero second exponent");
    if (!is_valid_w2_exponent(a1, a2))
        throw InvalidMonomial("invalid vector-field exponent (" + std::to_string(a1) +
                              "," + std::to_string(a2) + ")");
    if ((a1 == -1 && axis != 1) || (a2 == -1 && axis != 2))
        throw InvalidMonomial("exponent -1 must sit on the derivation axis");
    BasisMonomial m;
    m.alg = alg;
    m.a = {a1, a2};
    m.axis = axis;
    return m;
}

BasisMonomial BasisMonomial::scalar_mono(Algebra alg, long j1, long j2) {
    if (!algebra_has_scalars(alg))
        throw InvalidMonomial("scalar monomial in an algebra without scalars");
    if (algebra_rank(alg) == 1 && j2 != 0)
        throw InvalidMonomial("rank-1 scalar with nonzero second exponent");
    if (j1 < 0 || j2 < 0)
        throw InvalidMonomial("scalar monomial needs nonnegative exponents");
    BasisMonomial m;
    m.alg = alg;
    m.a = {j1, j2};
    m.axis = 0;
    return m;
}

BasisMonomial BasisMonomial::D(Algebra alg, long i) {
    if (alg != Algebra::W1 && alg != Algebra::A1)
        throw InvalidMonomial("D generators live in W1/A1");
    return vf(alg, i, 0, 1);
}

BasisMonomial BasisMonomial::I(long j) {
    return scalar_mono(Algebra::A1, j, 0);
}

std::string BasisMonomial::str() const {
    const int rank = algebra_rank(alg);
    std::ostringstream out;
    if (rank == 1) {
        if (is_scalar())
            out << "I_" << a[0];
        else
            out << "D_" << a[0];
        return out.str();
    }
    if (is_scalar()) {
        if (a[0] == 0 && a[1] == 0) return "1";
        out << "x^(" << a[0] << "," << a[1] << ")";
        return out.str();
    }
    if (!(a[0] == 0 && a[1] == 0))
        out << "x^(" << a[0] << "," << a[1] << ") ";
    out << "x" << axis << "d" << axis;
    return out.str();
}

LieElement LieElement::monomial(const BasisMonomial& m, const Rational& c) {
    LieElement e;
    e.alg = m.alg;
    if (!c.is_zero()) e.terms.emplace(m, c);
    return e;
}

LieElement& LieElement::add_term(const BasisMonomial& m, const Rational& c) {
    if (m.alg != alg)
        throw AlgebraMismatch("term algebra " + algebra_name(m.alg) +
                              " vs element algebra " + algebra_name(alg));
    if (c.is_zero()) return *this;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (alg != o.alg) throw AlgebraMismatch("adding elements of different algebras");
    LieElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    if (alg != o.alg) throw AlgebraMismatch("subtracting elements of different algebras");
    LieElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

LieElement LieElement::scaled(const Rational& s) const {
    LieElement r = LieElement::zero(alg);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, c * s);
    return r;
}

std::string LieElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent first.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string piece = (mag == Rational(1)) ? m.str() : mag.str() + " " + m.str();
        if (first) {
            out << (neg ? "-" : "") << piece;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << piece;
        }
    }
    return out.str();
}

namespace {

// A monomial in "derivation form": coefficient exponent f (componentwise
// >= 0) and derivation axis d (0 = plain scalar).  A basis monomial
// x^a (x_i d_i) has f = a + e_i, d = i; scalars keep f = a, d = 0.
struct DerivTerm {
    std::array<long, 2> f{0, 0};
    int d = 0;
};

DerivTerm to_deriv(const BasisMonomial& m) {
    DerivTerm t;
    t.f = m.a;
    t.d = m.axis;
    if (m.axis > 0) t.f[m.axis - 1] += 1;
    return t;
}

BasisMonomial from_deriv(Algebra alg, std::array<long, 2> f, int d) {
    if (d == 0) return BasisMonomial::scalar_mono(alg, f[0], f[1]);
    f[d - 1] -= 1;
    return BasisMonomial::vf(alg, f[0], f[1], d);
}

// Accumulate c * [x^f d_{di}, x^g d_{dj}] into out, where d = 0 means the
// scalar x^f itself:  [f d_i, g d_j] = f (d_i g) d_j - g (d_j f) d_i,
// with d_0(anything) = 0.
void bracket_terms(LieElement& out, const DerivTerm& s, const DerivTerm& t,
                   const Rational& c) {
    if (s.d > 0 && t.f[s.d - 1] != 0) {
        std::array<long, 2> e = {s.f[0] + t.f[0], s.f[1] + t.f[1]};
        e[s.d - 1] -= 1;
        out.add_term(from_deriv(out.alg, e, t.d), c * Rational(t.f[s.d - 1]));
    }
    if (t.d > 0 && s.f[t.d - 1] != 0) {
        std::array<long, 2> e = {s.f[0] + t.f[0], s.f[1] + t.f[1]};
        e[t.d - 1] -= 1;
        out.add_term(from_deriv(out.alg, e, s.d), -(c * Rational(s.f[t.d - 1])));
    }
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.alg != y.alg)
        throw AlgebraMismatch("bracket of elements over " + algebra_name(x.alg) +
                              " and " + algebra_name(y.alg));
    LieElement out = LieElement::zero(x.alg);
    for (const auto& [mx, cx] : x.terms) {
        const DerivTerm s = to_deriv(mx);
        for (const auto& [my, cy] : y.terms) {
            bracket_terms(out, s, to_deriv(my), cx * cy);
        }
    }
    return out;
}

Weight2 root_of(const BasisMonomial& m) {
    return Weight2{Rational(m.a[0]), Rational(m.a[1])};
}

BasisMonomial sigma(const BasisMonomial& m) {
    if (m.alg != Algebra::W2 && m.alg != Algebra::A2)
        throw AlgebraMismatch("sigma is defined on W2/A2 only");
    if (m.is_scalar()) return BasisMonomial::scalar_mono(m.alg, m.a[1], m.a[0]);
    return BasisMonomial::vf(m.alg, m.a[1], m.a[0], m.axis == 1 ? 2 : 1);
}

LieElement sigma(const LieElement& x) {
    if (x.alg != Algebra::W2 && x.alg != Algebra::A2)
        throw AlgebraMismatch("sigma is defined on W2/A2 only");
    LieElement out = LieElement::zero(x.alg);
    for (const auto& [m, c] : x.terms) out.add_term(sigma(m), c);
    return out;
}

std::vector<BasisMonomial> w2_monomials_up_to_height(long max_height) {
    std::vector<BasisMonomial> out;
    for (long a1 = -1; a1 <= max_height + 1; ++a1) {
        for (long a2 = -1; a1 + a2 <= max_height; ++a2) {
            if (!is_valid_w2_exponent(a1, a2)) continue;
            for (int axis = 1; axis <= 2; ++axis) {
                if ((a1 == -1 && axis != 1) || (a2 == -1 && axis != 2)) continue;
                out.push_back(BasisMonomial::vf(Algebra::W2, a1, a2, axis));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// sl3

const std::vector<SL3BasisId>& sl3_basis_ids() {
    static const std::vector<SL3BasisId> ids = {
        SL3BasisId::E01, SL3BasisId::E02, SL3BasisId::E10, SL3BasisId::E12,
        SL3BasisId::E20, SL3BasisId::E21, SL3BasisId::H01, SL3BasisId::H12};
    return ids;
}

std::string sl3_basis_name(SL3BasisId id) {
    switch (id) {
        case SL3BasisId::E01: return "E01";
        case SL3BasisId::E02: return "E02";
        case SL3BasisId::E10: return "E10";
        case SL3BasisId::E12: return "E12";
        case SL3BasisId::E20: return "E20";
        case SL3BasisId::E21: return "E21";
        case SL3BasisId::H01: return "H01";
        case SL3BasisId::H12: return "H12";
    }
    return "?";
}

RationalMatrix sl3_unit(int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2)
        throw BadGenerator("matrix unit index out of range");
    RationalMatrix m(3, 3);
    m.at(i, j) = Rational(1);
    return m;
}

RationalMatrix sl3_matrix(SL3BasisId id) {
    switch (id) {
        case SL3BasisId::E01: return sl3_unit(0, 1);
        case SL3BasisId::E02: return sl3_unit(0, 2);
        case SL3BasisId::E10: return sl3_unit(1, 0);
        case SL3BasisId::E12: return sl3_unit(1, 2);
        case SL3BasisId::E20: return sl3_unit(2, 0);
        case SL3BasisId::E21: return sl3_unit(2, 1);
        case SL3BasisId::H01: return sl3_unit(0, 0) - sl3_unit(1, 1);
        case SL3BasisId::H12: return sl3_unit(1, 1) - sl3_unit(2, 2);
    }
    throw BadGenerator("unknown sl3 basis id");
}

std::vector<Rational> sl3_decompose(const RationalMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw BadGenerator("sl3 element must be a 3x3 matrix");
    Rational tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    if (!tr.is_zero()) throw BadGenerator("sl3 element must be traceless");
    return {m.at(0, 1), m.at(0, 2), m.at(1, 0), m.at(1, 2),
            m.at(2, 0), m.at(2, 1), m.at(0, 0), -m.at(2, 2)};
}

LieElement sl3_embed(SL3BasisId id) {
    using BM = BasisMonomial;
    const Algebra W = Algebra::W2;
    LieElement e = LieElement::zero(W);
    // The images realize the infinitesimal projective action on the affine
    // chart: row-0 units act by -d_k, column-0 units by x_k * E with
    // E = x1 d1 + x2 d2, and the middle block by x_i d_j.  This is the unique
    // assignment extending the block convention to a Lie algebra homomorphism
    // (certified pairwise by the test suite); it fixes the Cartan images too.
    switch (id) {
        case SL3BasisId::E01:  // -d1
            e.add_term(BM::vf(W, -1, 0, 1), Rational(-1));
            break;
        case SL3BasisId::E02:  // -d2
            e.add_term(BM::vf(W, 0, -1, 2), Rational(-1));
            break;
        case SL3BasisId::E10:  // x1 * (x1 d1 + x2 d2)
            e.add_term(BM::vf(W, 1, 0, 1), Rational(1));
            e.add_term(BM::vf(W, 1, 0, 2), Rational(1));
            break;
        case SL3BasisId::E20:  // x2 * (x1 d1 + x2 d2)
            e.add_term(BM::vf(W, 0, 1, 1), Rational(1));
            e.add_term(BM::vf(W, 0, 1, 2), Rational(1));
            break;
        case SL3BasisId::E12:  // x1 d2
            e.add_term(BM::vf(W, 1, -1, 2), Rational(1));
            break;
        case SL3BasisId::E21:  // x2 d1
            e.add_term(BM::vf(W, -1, 1, 1), Rational(1));
            break;
        case SL3BasisId::H01:  // -2 x1 d1 - x2 d2  (= [E01, E10] image)
            e.add_term(BM::vf(W, 0, 0, 1), Rational(-2));
            e.add_term(BM::vf(W, 0, 0, 2), Rational(-1));
            break;
        case SL3BasisId::H12:  // x1 d1 - x2 d2
            e.add_term(BM::vf(W, 0, 0, 1), Rational(1));
            e.add_term(BM::vf(W, 0, 0, 2), Rational(-1));
            break;
    }
    return e;
}

LieElement sl3_embed_unit(int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
        throw BadGenerator("elementary generator must be E_ij with distinct indices 0..2");
    if (i == 0 && j == 1) return sl3_embed(SL3BasisId::E01);
    if (i == 0 && j == 2) return sl3_embed(SL3BasisId::E02);
    if (i == 1 && j == 0) return sl3_embed(SL3BasisId::E10);
    if (i == 1 && j == 2) return sl3_embed(SL3BasisId::E12);
    if (i == 2 && j == 0) return sl3_embed(SL3BasisId::E20);
    return sl3_embed(SL3BasisId::E21);
}

LieElement sl3_embed_traceless(const RationalMatrix& m) {
    const std::vector<Rational> coeffs = sl3_decompose(m);
    LieElement out = LieElement::zero(Algebra::W2);
    const auto& ids = sl3_basis_ids();
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        out = out + sl3_embed(ids[k]).scaled(coeffs[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parabolic subsets

std::string EpsVector::str() const {
    return "(" + std::to_string(e0) + "," + std::to_string(e1) + "," +
           std::to_string(e2) + ")";
}

namespace {

long pairing(const Root2& r, const EpsVector& s) {
    // W2 roots embed with zero eps0 coordinate.
    return r.a1 * s.e1 + r.a2 * s.e2;
}

struct NamedTag {
    const char* name;
    EpsVector s;
};

const std::vector<NamedTag>& elementary_tags() {
    static const std::vector<NamedTag> tags = {
        {"1+", {-1, 1, 0}},  {"1-", {1, -1, 0}},  {"2+", {-1, 0, 1}},
        {"2-", {1, 0, -1}},  {"12+", {0, 1, 1}},  {"12-", {0, -1, -1}},
    };
    return tags;
}

const std::vector<std::string>& named_configs() {
    static const std::vector<std::string> configs = {
        "1+", "1-", "2+", "2-", "12+", "12-",
        "1+,2-", "1-,2+", "2-,12-", "1+,12+", "1-,12-", "2+,12+"};
    return configs;
}

std::vector<EpsVector> sorted_copy(std::vector<EpsVector> v) {
    std::sort(v.begin(), v.end(), [](const EpsVector& a, const EpsVector& b) {
        if (a.e0 != b.e0) return a.e0 < b.e0;
        if (a.e1 != b.e1) return a.e1 < b.e1;
        return a.e2 < b.e2;
    });
    return v;
}

}  // namespace

long ParabolicSet::pairing_sign_bound(const Root2& r) const {
    long bound = -1;
    for (const auto& s : J) {
        const long p = pairing(r, s);
        if (p > 0) return 1;
        if (p == 0) bound = std::max(bound, 0L);
    }
    return bound;
}

bool ParabolicSet::contains(const Root2& r) const {
    if (!is_w2_root(r.a1, r.a2)) return false;
    for (const auto& s : J)
        if (pairing(r, s) > 0) return false;
    return true;
}

bool ParabolicSet::in_levi(const Root2& r) const {
    if (!is_w2_root(r.a1, r.a2)) return false;
    for (const auto& s : J)
        if (pairing(r, s) != 0) return false;
    return true;
}

bool ParabolicSet::in_nilrad(const Root2& r) const {
    return contains(r) && !in_levi(r);
}

std::vector<Root2> ParabolicSet::roots_within(long radius) const {
    std::vector<Root2> out;
    for (const Root2& r : w2_roots_within(radius))
        if (contains(r)) out.push_back(r);
    return out;
}

std::vector<Root2> ParabolicSet::levi_within(long radius) const {
    std::vector<Root2> out;
    for (const Root2& r : w2_roots_within(radius))
        if (in_levi(r)) out.push_back(r);
    return out;
}

std::vector<Root2> ParabolicSet::nilrad_within(long radius) const {
    std::vector<Root2> out;
    for (const Root2& r : w2_roots_within(radius))
        if (in_nilrad(r)) out.push_back(r);
    return out;
}

ParabolicSet parabolic_from_tag(const std::string& inner_tag) {
    ParabolicSet p;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : inner_tag) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    for (const auto& part : parts) {
        bool found = false;
        for (const auto& t : elementary_tags()) {
            if (part == t.name) {
                p.J.push_back(t.s);
                found = true;
                break;
            }
        }
        if (!found) throw UnknownTag("unknown parabolic tag component '" + part + "'");
    }
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) joined += ",";
        joined += parts[i];
    }
    p.tag = "P(" + joined + ")";
    return p;
}

ParabolicSet parabolic_set(const std::vector<EpsVector>& J) {
    ParabolicSet p;
    p.J = J;
    const auto mine = sorted_copy(J);
    for (const auto& name : named_configs()) {
        const ParabolicSet named = parabolic_from_tag(name);
        if (sorted_copy(named.J) == mine) {
            p.tag = named.tag;
            break;
        }
    }
    return p;
}

std::vector<ParabolicSet> enumerate_parabolics() {
    std::vector<ParabolicSet> out;
    out.reserve(named_configs().size());
    for (const auto& name : named_configs()) out.push_back(parabolic_from_tag(name));
    return out;
}

std::vector<Root2> w2_roots_within(long radius) {
    std::vector<Root2> out;
    for (long a1 = -radius; a1 <= radius; ++a1)
        for (long a2 = -radius; a2 <= radius; ++a2)
            if (is_w2_root(a1, a2)) out.push_back(Root2{a1, a2});
    return out;
}

}  // namespace weightlab
