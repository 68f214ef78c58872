#include <doctest.h>

#include "weightlab/binomials.hpp"
#include "weightlab/localization.hpp"

using namespace weightlab;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const WeightWindow win1 = WeightWindow::square(-12, 12, 3);
const WeightWindow win2 = WeightWindow::square(-7, 7, 3);
const WeightWindow win3 = WeightWindow::square(-9, 9, 3);

TensorModuleSpec dense_a1() {
    return TensorModuleSpec::make(Algebra::A1, Weight2(q(1, 3), q(0)),
                                  Weight2(q(5, 7), q(0)), {}, q(2));
}

TensorModuleSpec dense_w2() {
    return TensorModuleSpec::make(Algebra::W2, Weight2(q(1, 3), q(1, 7)),
                                  Weight2(q(2), q(0)), {});
}

LieElement elt(const BasisMonomial& m) { return LieElement::monomial(m); }

// ad(a)^i(u), i = 0.. while nonzero.
std::vector<LieElement> ads_of(const BasisMonomial& a, const LieElement& u) {
    std::vector<LieElement> out;
    LieElement cur = u;
    while (!cur.terms.empty()) {
        out.push_back(cur);
        cur = bracket(elt(a), cur);
    }
    return out;
}

}  // namespace

TEST_SUITE("localization") {
    TEST_CASE("admissible twist monomials") {
        CHECK(is_admissible_twist(BasisMonomial::D(Algebra::A1, -1)));
        CHECK(is_admissible_twist(BasisMonomial::I(0)));
        CHECK(is_admissible_twist(BasisMonomial::I(3)));
        CHECK_FALSE(is_admissible_twist(BasisMonomial::D(Algebra::A1, 0)));
        CHECK_FALSE(is_admissible_twist(BasisMonomial::D(Algebra::A1, 1)));

        CHECK(is_admissible_twist(BasisMonomial::vf(Algebra::W2, -1, 0, 1)));  // d1
        CHECK(is_admissible_twist(BasisMonomial::vf(Algebra::W2, 0, -1, 2)));  // d2
        CHECK(is_admissible_twist(BasisMonomial::vf(Algebra::W2, -1, 1, 1)));  // x2 d1
        CHECK(is_admissible_twist(BasisMonomial::vf(Algebra::W2, 1, -1, 2)));  // x1 d2
        CHECK_FALSE(is_admissible_twist(BasisMonomial::vf(Algebra::W2, 2, -1, 2)));
        CHECK_FALSE(is_admissible_twist(BasisMonomial::vf(Algebra::W2, 0, 0, 1)));

        CHECK_THROWS_AS(TwistData(BasisMonomial::D(Algebra::A1, 0), q(1, 2)),
                        HypothesisViolated);
        CHECK_THROWS_AS(TwistData(BasisMonomial::vf(Algebra::W2, 2, -1, 2), q(1, 2)),
                        HypothesisViolated);

        CHECK(monomial_root(BasisMonomial::D(Algebra::A1, -1)).first == -1);
        CHECK(monomial_root(BasisMonomial::I(2)).first == 2);
        CHECK(monomial_root(BasisMonomial::vf(Algebra::W2, 1, -1, 2)) ==
              std::pair<long, long>{1, -1});
    }

    TEST_CASE("inverse contract on the dense rank-1 module") {
        const auto spec = dense_a1();
        ModuleVector m;
        m.add_term(MVKey{2, 0, 0}, q(3));
        m.add_term(MVKey{0, 0, 0}, q(-1, 2));

        for (const BasisMonomial& a :
             {BasisMonomial::D(Algebra::A1, -1), BasisMonomial::I(0),
              BasisMonomial::I(1), BasisMonomial::I(2)}) {
            const ModuleVector z = inv_act(a, m, spec, win1);
            CHECK(tensor_act(elt(a), z, spec) == m);
            const ModuleVector am = tensor_act(elt(a), m, spec);
            CHECK(inv_act(a, am, spec, win1) == m);
        }
    }

    TEST_CASE("inverse contract on the dense rank-2 module") {
        const auto spec = dense_w2();
        ModuleVector m;
        m.add_term(MVKey{0, 0, 1}, q(3));
        m.add_term(MVKey{2, -1, 0}, q(-1));
        m.add_term(MVKey{2, -1, 2}, q(1, 5));

        for (const BasisMonomial& a :
             {BasisMonomial::vf(Algebra::W2, 1, -1, 2),
              BasisMonomial::vf(Algebra::W2, -1, 1, 1),
              BasisMonomial::vf(Algebra::W2, -1, 0, 1),
              BasisMonomial::vf(Algebra::W2, 0, -1, 2)}) {
            const ModuleVector z = inv_act(a, m, spec, win2);
            CHECK(tensor_act(elt(a), z, spec) == m);
            const ModuleVector am = tensor_act(elt(a), m, spec);
            CHECK(inv_act(a, am, spec, win2) == m);
        }
    }

    TEST_CASE("inverse errors: window escape") {
        const auto spec = dense_a1();
        const ModuleVector m = ModuleVector::basis(-12, 0, 0);
        // The preimage under I_1 sits at offset -13, outside the window.
        CHECK_THROWS_AS(inv_act(BasisMonomial::I(1), m, spec, win1), WindowOverflow);
    }

    TEST_CASE("inverse errors: empty preimage space") {
        // Submodule with carrier l >= 0: the preimage of the vector at 0
        // under I_1 would sit at offset -1, which the carrier excludes.
        const auto spec = TensorModuleSpec::make(
            Algebra::A1, Weight2(q(5, 7), q(0)), Weight2(q(5, 7), q(0)),
            {{1, JSign::Plus}}, q(2));
        const ModuleVector m = ModuleVector::basis(0, 0, 0);
        CHECK_THROWS_AS(inv_act(BasisMonomial::I(1), m, spec, win1), Singular);
    }

    TEST_CASE("zero twist exponent reduces to the plain action") {
        const auto spec = dense_w2();
        const TwistData t(BasisMonomial::vf(Algebra::W2, 1, -1, 2), q(0));
        const ModuleVector m = ModuleVector::basis(1, 1, 1);
        for (const BasisMonomial& g : w2_monomials_up_to_height(2)) {
            const auto out = twisted_act(elt(g), TwistedVector{t, m}, spec, win2);
            CHECK(out.payload == tensor_act(elt(g), m, spec));
        }
    }

    TEST_CASE("twisted Euler eigenvalue shifts by the twist exponent") {
        const auto spec = dense_w2();
        const TwistData t(BasisMonomial::vf(Algebra::W2, 1, -1, 2), q(1, 2));
        const ModuleVector m = ModuleVector::basis(2, -1, 1);
        // x1 d1 acts on the basis vector at offset o by nu_1 + o_1; under the
        // twist by (x1 d2)^{1/2} the eigenvalue gains x * 1.
        const auto e1 = twisted_act(elt(BasisMonomial::vf(Algebra::W2, 0, 0, 1)),
                                    TwistedVector{t, m}, spec, win2);
        CHECK(e1.payload == m.scaled(q(1, 3) + q(2) + q(1, 2)));
        // x2 d2 gains x * (-1).
        const auto e2 = twisted_act(elt(BasisMonomial::vf(Algebra::W2, 0, 0, 2)),
                                    TwistedVector{t, m}, spec, win2);
        CHECK(e2.payload == m.scaled(q(1, 7) + q(-1) - q(1, 2)));
    }

    TEST_CASE("commutation of D_-1 past a power of I_1") {
        // D_-1 I_1^x = I_1^x (D_-1 + x c I_1^{-1}) since ad(I_1)(D_-1) = -I_0
        // and I_0 acts by c.
        const auto spec = dense_a1();
        const Rational x = q(3, 5);
        const TwistData t(BasisMonomial::I(1), x);
        ModuleVector m;
        m.add_term(MVKey{1, 0, 0}, q(2));
        m.add_term(MVKey{-2, 0, 0}, q(7));
        const auto out =
            twisted_act(elt(BasisMonomial::D(Algebra::A1, -1)), TwistedVector{t, m},
                        spec, win1);
        const ModuleVector want =
            tensor_act(elt(BasisMonomial::D(Algebra::A1, -1)), m, spec) +
            inv_act(BasisMonomial::I(1), m, spec, win1).scaled(x * q(2));
        CHECK(out.payload == want);
    }

    TEST_CASE("integer twist equals literal conjugation") {
        const auto spec = dense_w2();
        const BasisMonomial a = BasisMonomial::vf(Algebra::W2, 1, -1, 2);
        const TwistData t(a, q(2));
        const ModuleVector m = ModuleVector::basis(0, 1, 2);
        for (const BasisMonomial& g :
             {BasisMonomial::vf(Algebra::W2, -1, 0, 1),
              BasisMonomial::vf(Algebra::W2, 0, 0, 1),
              BasisMonomial::vf(Algebra::W2, 1, 0, 2),
              BasisMonomial::vf(Algebra::W2, -1, 1, 1)}) {
            // u (a^2 m) = a^2 (a^{-2} u a^2 m): push m through a twice, act,
            // then pull back twice.
            const ModuleVector a2m =
                tensor_act(elt(a), tensor_act(elt(a), m, spec), spec);
            const ModuleVector conj = inv_act(
                a, inv_act(a, tensor_act(elt(g), a2m, spec), spec, win2), spec, win2);
            const auto out = twisted_act(elt(g), TwistedVector{t, m}, spec, win2);
            CHECK(out.payload == conj);
        }
    }

    TEST_CASE("twist additivity") {
        const auto spec = dense_w2();
        const BasisMonomial a = BasisMonomial::vf(Algebra::W2, 1, -1, 2);
        const Rational x1 = q(1, 2), x2 = q(1, 3);
        const ModuleVector m = ModuleVector::basis(1, 0, 1);
        const TwistData tsum(a, x1 + x2), t2(a, x2);
        for (const BasisMonomial& gm :
             {BasisMonomial::vf(Algebra::W2, -1, 0, 1),
              BasisMonomial::vf(Algebra::W2, 0, 0, 2),
              BasisMonomial::vf(Algebra::W2, -1, 1, 1)}) {
            const LieElement g = elt(gm);
            const auto whole = twisted_act(g, TwistedVector{tsum, m}, spec, win2);
            ModuleVector sum;
            ModuleVector shifted = m;
            const auto chain = ads_of(a, g);
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i > 0) shifted = inv_act(a, shifted, spec, win2);
                const auto part =
                    twisted_act(chain[i], TwistedVector{t2, shifted}, spec, win2);
                sum = sum + part.payload.scaled(binom_general(-x1, static_cast<long>(i)));
            }
            CHECK(whole.payload == sum);
        }
    }

    TEST_CASE("twisted action respects brackets") {
        const auto spec = dense_w2();
        const TwistData t(BasisMonomial::vf(Algebra::W2, 1, -1, 2), q(2, 7));
        const ModuleVector m = ModuleVector::basis(0, 0, 1);
        const LieElement u = elt(BasisMonomial::vf(Algebra::W2, -1, 1, 1));
        const LieElement v = elt(BasisMonomial::vf(Algebra::W2, 1, 0, 1));
        const auto act = [&](const LieElement& g, const ModuleVector& p) {
            return twisted_act(g, TwistedVector{t, p}, spec, win2).payload;
        };
        const ModuleVector lhs = act(bracket(u, v), m);
        const ModuleVector rhs = act(u, act(v, m)) - act(v, act(u, m));
        CHECK(lhs == rhs);
    }

    TEST_CASE("iso ids are published") {
        const auto& ids = loc_iso_ids();
        REQUIRE(ids.size() == 6);
        CHECK(ids[0] == "A1_I1_plus");
        CHECK(ids[5] == "W2_reverse_mixed");
    }

    TEST_CASE("scalar tower localization (rank 1, plus family)") {
        LocIsoParams p;
        p.lambda = Weight2(q(1, 3), q(0));
        p.c = q(2);
        p.nu = q(1, 2);
        const auto rep = loc_iso_check("A1_I1_plus", p, win1);
        CHECK(rep.ok());
        CHECK(rep.generators_checked == 7);
        CHECK(rep.vectors_checked == 15);  // 9 swept offsets + 6 power relations
    }

    TEST_CASE("lowering tower localization (rank 1, minus family)") {
        LocIsoParams p;
        p.lambda = Weight2(q(1, 3), q(0));
        p.c = q(2);
        p.nu = q(1, 2);
        const auto rep = loc_iso_check("A1_Dm1_minus", p, win1);
        CHECK(rep.ok());
        CHECK(rep.generators_checked == 7);
        CHECK(rep.vectors_checked == 12);  // 6 swept offsets + 6 power relations
    }

    TEST_CASE("lowering tower localization survives the degenerate point") {
        LocIsoParams p;
        p.lambda = Weight2(q(1), q(0));
        p.c = q(0);
        p.nu = q(1, 2);
        const auto rep = loc_iso_check("A1_Dm1_minus", p, win1);
        CHECK(rep.ok());
    }

    TEST_CASE("exponent shift localization (rank 1)") {
        LocIsoParams p;
        p.lambda = Weight2(q(1, 3), q(0));
        p.c = q(2);
        p.nu = q(1, 2);
        p.eta = q(-3, 7);
        const auto rep = loc_iso_check("A1_Dm1_shift", p, win1);
        CHECK(rep.ok());
        CHECK(rep.vectors_checked == 19);
    }

    TEST_CASE("reverse localization, second direction lowered") {
        LocIsoParams p;
        p.lambda = Weight2(q(2), q(0));
        p.s = Weight2(q(1, 3), q(1, 7));
        const auto rep = loc_iso_check("W2_reverse_2minus", p, win3);
        CHECK(rep.ok());
        CHECK(rep.generators_checked == 20);
        CHECK(rep.vectors_checked >= 40);
    }

    TEST_CASE("reverse localization, first direction raised") {
        LocIsoParams p;
        p.lambda = Weight2(q(2), q(0));
        p.s = Weight2(q(1, 3), q(1, 7));
        const auto rep = loc_iso_check("W2_reverse_1plus", p, win3);
        CHECK(rep.ok());
        CHECK(rep.vectors_checked >= 40);
    }

    TEST_CASE("reverse localization, mixed pair") {
        LocIsoParams p;
        p.lambda = Weight2(q(2), q(0));
        p.s = Weight2(q(1, 3), q(-19, 3));
        const auto rep = loc_iso_check("W2_reverse_mixed", p, win3);
        CHECK(rep.ok());
        CHECK(rep.vectors_checked >= 40);
    }

    TEST_CASE("hypothesis guards") {
        LocIsoParams p;
        p.lambda = Weight2(q(1, 3), q(0));
        p.c = q(2);
        p.nu = q(2);  // integral twist exponent
        CHECK_THROWS_AS(loc_iso_check("A1_I1_plus", p, win1), HypothesisViolated);

        p.nu = q(1, 2);
        p.c = q(0);  // the scalar tower needs c != 0
        CHECK_THROWS_AS(loc_iso_check("A1_I1_plus", p, win1), HypothesisViolated);

        LocIsoParams w;
        w.lambda = Weight2(q(1), q(0));  // excluded highest weight
        w.s = Weight2(q(1, 3), q(1, 7));
        CHECK_THROWS_AS(loc_iso_check("W2_reverse_2minus", w, win2), HypothesisViolated);

        w.lambda = Weight2(q(2), q(0));
        w.s = Weight2(q(1), q(1, 7));  // lambda_1 - s_1 integral
        CHECK_THROWS_AS(loc_iso_check("W2_reverse_2minus", w, win2), HypothesisViolated);

        w.s = Weight2(q(1, 3), q(-10, 3));  // cross sum integral: wrong family
        CHECK_THROWS_AS(loc_iso_check("W2_reverse_2minus", w, win2), HypothesisViolated);

        w.s = Weight2(q(1, 3), q(1, 7));  // cross sum non-integral: wrong family
        CHECK_THROWS_AS(loc_iso_check("W2_reverse_mixed", w, win2), HypothesisViolated);

        CHECK_THROWS_AS(loc_iso_check("no_such_map", w, win2), UnknownTag);

        const WeightWindow thin = WeightWindow::square(-7, 7, 2);
        CHECK_THROWS_AS(loc_iso_check("W2_reverse_2minus", w, thin), WindowOverflow);
    }

    TEST_CASE("report serialization") {
        LocIsoParams p;
        p.lambda = Weight2(q(1, 3), q(0));
        p.c = q(2);
        p.nu = q(1, 2);
        const auto rep = loc_iso_check("A1_I1_plus", p, win1);
        const std::string js = loc_iso_report_json(rep);
        CHECK(js.find("\"iso_id\": \"A1_I1_plus\"") != std::string::npos);
        CHECK(js.find("\"violations\": []") != std::string::npos);
        CHECK(js.find("\"nu\": \"1/2\"") != std::string::npos);
    }
}
