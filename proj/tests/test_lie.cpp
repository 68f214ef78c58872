#include <doctest.h>

#include <vector>

#include "weightlab/lie.hpp"
#include "weightlab/matrix.hpp"
#include "weightlab/rng.hpp"

using namespace weightlab;

namespace {

// Independent oracle for brackets of basis monomials, computed from the
// closed-form structure constants (worked out by hand, separately from the
// derivation-composition route the library uses):
//
//   [x^a (x_i d_i), x^b (x_j d_j)] = (b_i + [i==j]) x^{a+b} (x_j d_j)
//                                  - (a_j + [i==j]) x^{a+b} (x_i d_i)
//   [x^a (x_i d_i), x^b]           = b_i x^{a+b}
//   [x^a, x^b]                     = 0
//
// Whenever a target exponent is invalid for its slot, the corresponding
// coefficient provably vanishes; the oracle asserts that instead of
// constructing the monomial.
void oracle_add(LieElement& out, long c, std::array<long, 2> e, int axis) {
    if (c == 0) return;
    if (axis == 0) {
        REQUIRE(e[0] >= 0);
        REQUIRE(e[1] >= 0);
        out.add_term(BasisMonomial::scalar_mono(out.alg, e[0], e[1]), Rational(c));
        return;
    }
    REQUIRE(is_valid_w2_exponent(e[0], e[1]));
    for (int k = 0; k < 2; ++k) REQUIRE((e[k] != -1 || axis == k + 1));
    out.add_term(BasisMonomial::vf(out.alg, e[0], e[1], axis), Rational(c));
}

LieElement oracle_bracket(const BasisMonomial& x, const BasisMonomial& y) {
    LieElement out = LieElement::zero(x.alg);
    std::array<long, 2> sum = {x.a[0] + y.a[0], x.a[1] + y.a[1]};
    if (x.is_scalar() && y.is_scalar()) return out;
    if (!x.is_scalar() && y.is_scalar()) {
        oracle_add(out, y.a[x.axis - 1], sum, 0);
        return out;
    }
    if (x.is_scalar() && !y.is_scalar()) {
        oracle_add(out, -x.a[y.axis - 1], sum, 0);
        return out;
    }
    const int i = x.axis, j = y.axis;
    const long delta = (i == j) ? 1 : 0;
    oracle_add(out, y.a[i - 1] + delta, sum, j);
    oracle_add(out, -(x.a[j - 1] + delta), sum, i);
    return out;
}

std::vector<BasisMonomial> sample_monomials(Algebra alg) {
    std::vector<BasisMonomial> out;
    const int rank = algebra_rank(alg);
    if (rank == 2) {
        for (long a1 = -1; a1 <= 3; ++a1)
            for (long a2 = -1; a2 <= 3; ++a2) {
                if (!is_valid_w2_exponent(a1, a2)) continue;
                for (int axis = 1; axis <= 2; ++axis) {
                    if (a1 == -1 && axis != 1) continue;
                    if (a2 == -1 && axis != 2) continue;
                    out.push_back(BasisMonomial::vf(alg, a1, a2, axis));
                }
            }
        if (algebra_has_scalars(alg))
            for (long j1 = 0; j1 <= 3; ++j1)
                for (long j2 = 0; j2 <= 3; ++j2)
                    out.push_back(BasisMonomial::scalar_mono(alg, j1, j2));
    } else {
        for (long i = -1; i <= 4; ++i) out.push_back(BasisMonomial::D(alg, i));
        if (algebra_has_scalars(alg))
            for (long j = 0; j <= 4; ++j) out.push_back(BasisMonomial::I(j));
    }
    return out;
}

LieElement random_element(Algebra alg, const std::vector<BasisMonomial>& pool, Rng& rng) {
    LieElement e = LieElement::zero(alg);
    const int nterms = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < nterms; ++k)
        e.add_term(pool[rng.below(pool.size())], rng.rational(5, 3));
    return e;
}

}  // namespace

TEST_SUITE("lie_core") {

TEST_CASE("monomial validity rules") {
    CHECK(is_valid_w2_exponent(0, 0));
    CHECK(is_valid_w2_exponent(-1, 2));
    CHECK_FALSE(is_valid_w2_exponent(-1, -1));
    CHECK_FALSE(is_valid_w2_exponent(-2, 0));
    CHECK(is_w2_root(-1, 2));
    CHECK_FALSE(is_w2_root(0, 0));

    CHECK_NOTHROW(BasisMonomial::vf(Algebra::W2, -1, 3, 1));
    CHECK_THROWS_AS(BasisMonomial::vf(Algebra::W2, -1, 3, 2), InvalidMonomial);
    CHECK_THROWS_AS(BasisMonomial::vf(Algebra::W2, -2, 0, 1), InvalidMonomial);
    CHECK_THROWS_AS(BasisMonomial::vf(Algebra::W2, 0, 0, 3), InvalidMonomial);
    CHECK_THROWS_AS(BasisMonomial::scalar_mono(Algebra::A2, -1, 0), InvalidMonomial);
    CHECK_THROWS_AS(BasisMonomial::scalar_mono(Algebra::W2, 1, 0), InvalidMonomial);
    CHECK_THROWS_AS(BasisMonomial::D(Algebra::A1, -2), InvalidMonomial);
    CHECK_NOTHROW(BasisMonomial::I(0));
    CHECK_THROWS_AS(BasisMonomial::I(-1), InvalidMonomial);
}

TEST_CASE("printing format") {
    CHECK(BasisMonomial::D(Algebra::A1, -1).str() == "D_-1");
    CHECK(BasisMonomial::I(2).str() == "I_2");
    CHECK(BasisMonomial::vf(Algebra::W2, 1, 0, 2).str() == "x^(1,0) x2d2");
    CHECK(BasisMonomial::vf(Algebra::W2, 0, 0, 1).str() == "x1d1");
    CHECK(BasisMonomial::scalar_mono(Algebra::A2, 0, 0).str() == "1");
    CHECK(BasisMonomial::scalar_mono(Algebra::A2, 2, 1).str() == "x^(2,1)");

    LieElement e = LieElement::zero(Algebra::W2);
    e.add_term(BasisMonomial::vf(Algebra::W2, 1, 0, 2), Rational(3));
    e.add_term(BasisMonomial::vf(Algebra::W2, -1, 1, 1), Rational(-1, 2));
    CHECK(e.str() == "3 x^(1,0) x2d2 - 1/2 x^(-1,1) x1d1");
    CHECK(LieElement::zero(Algebra::W2).str() == "0");
}

TEST_CASE("element arithmetic") {
    BasisMonomial m = BasisMonomial::vf(Algebra::W2, 1, 0, 1);
    LieElement a = LieElement::monomial(m, Rational(2));
    LieElement b = LieElement::monomial(m, Rational(-2));
    CHECK((a + b).is_zero());
    CHECK(a - a == LieElement::zero(Algebra::W2));
    CHECK(a.scaled(Rational(1, 2)) == LieElement::monomial(m, Rational(1)));
    CHECK(a.scaled(Rational(0)).is_zero());
    LieElement other = LieElement::monomial(BasisMonomial::D(Algebra::W1, 0));
    CHECK_THROWS_AS(a + other, AlgebraMismatch);
}

TEST_CASE("bracket matches closed-form structure constants") {
    for (Algebra alg : {Algebra::W2, Algebra::A2, Algebra::W1, Algebra::A1}) {
        auto pool = sample_monomials(alg);
        for (const auto& x : pool)
            for (const auto& y : pool) {
                LieElement got =
                    bracket(LieElement::monomial(x), LieElement::monomial(y));
                CHECK(got == oracle_bracket(x, y));
            }
    }
}

TEST_CASE("bracket frozen examples") {
    auto vf = [](long a1, long a2, int axis) {
        return LieElement::monomial(BasisMonomial::vf(Algebra::W2, a1, a2, axis));
    };
    // [x1d1, x1^2 d1] = x1^2 d1 (Euler weight of a degree-one field).
    CHECK(bracket(vf(0, 0, 1), vf(1, 0, 1)) == vf(1, 0, 1));
    // [x2d1, x1d2] = x2d2 - x1d1.
    CHECK(bracket(vf(-1, 1, 1), vf(1, -1, 2)) == vf(0, 0, 2) - vf(0, 0, 1));
    // [d1, x1d1] = d1.
    CHECK(bracket(vf(-1, 0, 1), vf(0, 0, 1)) == vf(-1, 0, 1));

    auto D = [](long i) { return LieElement::monomial(BasisMonomial::D(Algebra::A1, i)); };
    auto I = [](long j) { return LieElement::monomial(BasisMonomial::I(j)); };
    // Witt relations [D_i, D_j] = (j - i) D_{i+j}.
    CHECK(bracket(D(1), D(2)) == D(3));
    CHECK(bracket(D(-1), D(1)) == D(0).scaled(Rational(2)));
    CHECK(bracket(D(0), D(0)).is_zero());
    // [D_i, I_j] = j I_{i+j}.
    CHECK(bracket(D(-1), I(1)) == I(0));
    CHECK(bracket(D(2), I(0)).is_zero());
    CHECK(bracket(D(1), I(3)) == I(4).scaled(Rational(3)));
    CHECK(bracket(I(2), I(5)).is_zero());

    CHECK_THROWS_AS(bracket(D(0), vf(0, 0, 1)), AlgebraMismatch);
}

TEST_CASE("bracket is bilinear, antisymmetric, and satisfies Jacobi") {
    Rng rng(99);
    for (Algebra alg : {Algebra::W2, Algebra::A2, Algebra::A1}) {
        auto pool = sample_monomials(alg);
        for (int trial = 0; trial < 25; ++trial) {
            LieElement x = random_element(alg, pool, rng);
            LieElement y = random_element(alg, pool, rng);
            LieElement z = random_element(alg, pool, rng);
            CHECK(bracket(x, y) == LieElement::zero(alg) - bracket(y, x));
            Rational s = rng.rational(5, 3);
            CHECK(bracket(x.scaled(s), y) == bracket(x, y).scaled(s));
            CHECK(bracket(x + y, z) == bracket(x, z) + bracket(y, z));
            LieElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                             bracket(z, bracket(x, y));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("roots and the weight grading") {
    CHECK(root_of(BasisMonomial::vf(Algebra::W2, -1, 3, 1)) ==
          Weight2(Rational(-1), Rational(3)));
    CHECK(root_of(BasisMonomial::scalar_mono(Algebra::A2, 2, 0)) ==
          Weight2(Rational(2), Rational(0)));
    // [x_k d_k, m] = (root_of m)_k * m for every sampled monomial.
    for (Algebra alg : {Algebra::W2, Algebra::A2}) {
        for (const auto& m : sample_monomials(alg)) {
            LieElement em = LieElement::monomial(m);
            Weight2 r = root_of(m);
            CHECK(bracket(LieElement::monomial(BasisMonomial::vf(alg, 0, 0, 1)), em) ==
                  em.scaled(r.c1));
            CHECK(bracket(LieElement::monomial(BasisMonomial::vf(alg, 0, 0, 2)), em) ==
                  em.scaled(r.c2));
        }
    }
}

TEST_CASE("coordinate swap is an involutive automorphism") {
    CHECK(sigma(BasisMonomial::vf(Algebra::W2, -1, 2, 1)) ==
          BasisMonomial::vf(Algebra::W2, 2, -1, 2));
    CHECK(sigma(BasisMonomial::scalar_mono(Algebra::A2, 1, 3)) ==
          BasisMonomial::scalar_mono(Algebra::A2, 3, 1));
    Rng rng(31);
    auto pool = sample_monomials(Algebra::A2);
    for (int trial = 0; trial < 20; ++trial) {
        LieElement x = random_element(Algebra::A2, pool, rng);
        LieElement y = random_element(Algebra::A2, pool, rng);
        CHECK(sigma(sigma(x)) == x);
        CHECK(sigma(bracket(x, y)) == bracket(sigma(x), sigma(y)));
    }
    CHECK_THROWS_AS(sigma(LieElement::zero(Algebra::A1)), AlgebraMismatch);
}

TEST_CASE("monomial enumeration by principal degree") {
    auto ms = w2_monomials_up_to_height(4);
    CHECK(ms.size() == 42);
    for (const auto& m : ms) {
        CHECK_FALSE(m.is_scalar());
        CHECK(m.a[0] + m.a[1] <= 4);
        CHECK(is_valid_w2_exponent(m.a[0], m.a[1]));
    }
    // height <= 2 pool used by the localization generator sets
    CHECK(w2_monomials_up_to_height(2).size() == 20);
    // the lowest layer alone
    CHECK(w2_monomials_up_to_height(-1).size() == 2);
}

TEST_CASE("sl3 basis matrices and coordinates") {
    const auto& ids = sl3_basis_ids();
    REQUIRE(ids.size() == 8);
    for (auto id : ids) {
        RationalMatrix m = sl3_matrix(id);
        REQUIRE(m.rows() == 3);
        REQUIRE(m.cols() == 3);
        Rational tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
        CHECK(tr.is_zero());
        // decompose . matrix = unit coefficient vector
        auto coeffs = sl3_decompose(m);
        REQUIRE(coeffs.size() == 8);
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(coeffs[k] == (ids[k] == id ? Rational(1) : Rational(0)));
    }
    // decompose is a two-sided inverse of coordinates on random traceless m.
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = rng.rational(5, 3);
        m.at(2, 2) = -(m.at(0, 0) + m.at(1, 1));
        auto coeffs = sl3_decompose(m);
        RationalMatrix back(3, 3);
        for (std::size_t k = 0; k < 8; ++k)
            back = back + sl3_matrix(ids[k]).scaled(coeffs[k]);
        CHECK(back == m);
    }
    RationalMatrix bad(3, 3);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(sl3_decompose(bad), BadGenerator);
    CHECK_THROWS_AS(sl3_decompose(RationalMatrix(2, 2)), BadGenerator);
}

TEST_CASE("sl3 embedding: images of the generators") {
    auto vf = [](long a1, long a2, int axis) {
        return LieElement::monomial(BasisMonomial::vf(Algebra::W2, a1, a2, axis));
    };
    CHECK(sl3_embed(SL3BasisId::E12) == vf(1, -1, 2));
    CHECK(sl3_embed(SL3BasisId::E21) == vf(-1, 1, 1));
    CHECK(sl3_embed(SL3BasisId::E01) == vf(-1, 0, 1).scaled(Rational(-1)));
    CHECK(sl3_embed(SL3BasisId::E02) == vf(0, -1, 2).scaled(Rational(-1)));
    CHECK(sl3_embed(SL3BasisId::E10) == vf(1, 0, 1) + vf(1, 0, 2));
    CHECK(sl3_embed(SL3BasisId::E20) == vf(0, 1, 1) + vf(0, 1, 2));
    CHECK(sl3_embed(SL3BasisId::H01) ==
          vf(0, 0, 1).scaled(Rational(-2)) + vf(0, 0, 2).scaled(Rational(-1)));
    CHECK(sl3_embed(SL3BasisId::H12) == vf(0, 0, 1) - vf(0, 0, 2));
    CHECK(sl3_embed_unit(1, 0) == sl3_embed(SL3BasisId::E10));
    CHECK_THROWS_AS(sl3_embed_unit(1, 1), BadGenerator);
    CHECK_THROWS_AS(sl3_embed_unit(3, 0), BadGenerator);
}

TEST_CASE("sl3 embedding is a Lie algebra homomorphism") {
    const auto& ids = sl3_basis_ids();
    for (auto a : ids)
        for (auto b : ids) {
            RationalMatrix comm =
                sl3_matrix(a) * sl3_matrix(b) - sl3_matrix(b) * sl3_matrix(a);
            CHECK(sl3_embed_traceless(comm) ==
                  bracket(sl3_embed(a), sl3_embed(b)));
        }
    // Linearity on random traceless matrices.
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(3, 3), n(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                m.at(r, c) = rng.rational(4, 3);
                n.at(r, c) = rng.rational(4, 3);
            }
        m.at(2, 2) = -(m.at(0, 0) + m.at(1, 1));
        n.at(2, 2) = -(n.at(0, 0) + n.at(1, 1));
        CHECK(sl3_embed_traceless(m * n - n * m) ==
              bracket(sl3_embed_traceless(m), sl3_embed_traceless(n)));
    }
}

TEST_CASE("parabolic families: the twelve named configurations") {
    auto all = enumerate_parabolics();
    REQUIRE(all.size() == 12);
    const std::vector<std::string> tags = {
        "P(1+)",  "P(1-)",  "P(2+)",     "P(2-)",     "P(12+)",     "P(12-)",
        "P(1+,2-)", "P(1-,2+)", "P(2-,12-)", "P(1+,12+)", "P(1-,12-)", "P(2+,12+)"};
    for (std::size_t k = 0; k < 12; ++k) CHECK(all[k].tag == tags[k]);
    CHECK_THROWS_AS(parabolic_from_tag("3+"), UnknownTag);
    CHECK_THROWS_AS(parabolic_from_tag("1*"), UnknownTag);
}

TEST_CASE("parabolic membership: half-space conditions") {
    ParabolicSet p1 = parabolic_from_tag("1+");
    // x-degree <= 0 characterizes this family.
    CHECK(p1.contains(Root2{-1, 3}));
    CHECK(p1.contains(Root2{0, -1}));
    CHECK_FALSE(p1.contains(Root2{1, 0}));
    for (const Root2& r : w2_roots_within(4))
        CHECK(p1.contains(r) == (r.a1 <= 0));

    // Levi = first coordinate zero; nilradical = first coordinate negative.
    auto levi = p1.levi_within(3);
    std::vector<Root2> expect_levi = {{0, -1}, {0, 1}, {0, 2}, {0, 3}};
    CHECK(levi == expect_levi);
    auto nil = p1.nilrad_within(3);
    std::vector<Root2> expect_nil = {{-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}};
    CHECK(nil == expect_nil);
}

TEST_CASE("parabolic membership: diagonal family") {
    ParabolicSet p = parabolic_from_tag("12+");
    // Condition: a1 + a2 <= 0.
    for (const Root2& r : w2_roots_within(5))
        CHECK(p.contains(r) == (r.a1 + r.a2 <= 0));
    auto levi = p.levi_within(5);
    std::vector<Root2> expect_levi = {{-1, 1}, {1, -1}};
    CHECK(levi == expect_levi);
    auto nil = p.nilrad_within(5);
    std::vector<Root2> expect_nil = {{-1, 0}, {0, -1}};
    CHECK(nil == expect_nil);
}

TEST_CASE("parabolic membership: two-condition family") {
    ParabolicSet p = parabolic_from_tag("1+,2-");
    // Conditions: a1 <= 0 and -a2 <= 0, i.e. a1 <= 0 <= a2.
    for (const Root2& r : w2_roots_within(4))
        CHECK(p.contains(r) == (r.a1 <= 0 && r.a2 >= 0));
    for (const Root2& r : p.levi_within(4))
        CHECK((r.a1 == 0 && r.a2 == 0));  // empty: no root has both zero
    CHECK(p.levi_within(4).empty());
}

TEST_CASE("parabolic sets recognized from raw direction vectors") {
    // {eps1 - eps0} is the first family; {eps0 - eps2, -eps1 - eps2} the ninth.
    ParabolicSet a = parabolic_set({EpsVector{-1, 1, 0}});
    CHECK(a.tag == "P(1+)");
    ParabolicSet b = parabolic_set({EpsVector{1, 0, -1}, EpsVector{0, -1, -1}});
    CHECK(b.tag == "P(2-,12-)");
    // Order does not matter.
    ParabolicSet c = parabolic_set({EpsVector{0, -1, -1}, EpsVector{1, 0, -1}});
    CHECK(c.tag == "P(2-,12-)");
}

}  // TEST_SUITE
