#include <doctest.h>

#include "weightlab/binomials.hpp"
#include "weightlab/matrix.hpp"
#include "weightlab/rational.hpp"
#include "weightlab/rng.hpp"

using namespace weightlab;

TEST_SUITE("exact_arith") {

TEST_CASE("rational parse, normalization, printing") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("  -2 ") == Rational(-2));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK(a < Rational(1, 5));
    CHECK(Rational(-3, 2) < Rational(-1, 2));
    CHECK(Rational(7, 7).is_integer());
    CHECK_FALSE(Rational(7, 5).is_integer());
    CHECK(Rational(-4, 2).sign() == -1);
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
}

TEST_CASE("floor and integer extraction") {
    CHECK(Rational(7, 2).floor_long() == 3);
    CHECK(Rational(-7, 2).floor_long() == -4);
    CHECK(Rational(5).floor_long() == 5);
    CHECK(Rational(-5).floor_long() == -5);
    CHECK(Rational(0).floor_long() == 0);
    CHECK(Rational(12).to_long() == 12);
}

TEST_CASE("generalized binomial coefficients: frozen values") {
    // Hand-computed from the falling-factorial definition before implementation:
    //   C(1/2, 3)  = (1/2)(-1/2)(-3/2)/6 = 1/16
    //   C(-1, 4)   = (-1)(-2)(-3)(-4)/24 = 1
    //   C(5/2, 2)  = (5/2)(3/2)/2        = 15/8
    //   C(3, 5)    = 0 (falling factorial crosses zero)
    CHECK(binom_general(Rational(1, 2), 3) == Rational(1, 16));
    CHECK(binom_general(Rational(-1), 4) == Rational(1));
    CHECK(binom_general(Rational(5, 2), 2) == Rational(15, 8));
    CHECK(binom_general(Rational(3), 5) == Rational(0));
    CHECK(binom_general(Rational(-7, 3), 0) == Rational(1));
    CHECK(binom_general(Rational(4), 4) == Rational(1));
    CHECK_THROWS_AS(binom_general(Rational(1), -1), IndexOutOfRange);
}

TEST_CASE("generalized binomial: Pascal recurrence on random rationals") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Rational x = rng.rational(9, 7);
        for (long i = 1; i <= 12; ++i) {
            CHECK(binom_general(x, i) ==
                  binom_general(x - Rational(1), i) + binom_general(x - Rational(1), i - 1));
        }
    }
}

TEST_CASE("gamma-style shift ratios: frozen values") {
    // Hand-computed before implementation:
    //   g(1/2, 2)  = 1/((3/2)(5/2))        = 4/15
    //   g(1/2,-2)  = (1/2)(-1/2)           = -1/4
    //   g(-5/2, 3) = 1/((-3/2)(-1/2)(1/2)) = 8/3
    //   g(2, 1)    = 1/3
    CHECK(gamma_ratio(Rational(1, 2), 2) == Rational(4, 15));
    CHECK(gamma_ratio(Rational(1, 2), -2) == Rational(-1, 4));
    CHECK(gamma_ratio(Rational(-5, 2), 3) == Rational(8, 3));
    CHECK(gamma_ratio(Rational(2), 1) == Rational(1, 3));
    CHECK(gamma_ratio(Rational(5, 3), 0) == Rational(1));
    // Poles: a zero factor appears in the denominator product.
    CHECK_THROWS_AS(gamma_ratio(Rational(-2), 2), DivisionByZero);
    CHECK_THROWS_AS(gamma_ratio(Rational(-1), 1), DivisionByZero);
}

TEST_CASE("gamma-style shift ratios: cocycle identity") {
    // g(nu, a + b) = g(nu, a) * g(nu + a, b) whenever all three are defined.
    Rng rng(77);
    int checked = 0;
    while (checked < 40) {
        Rational nu = rng.non_integer_rational(9, 7);
        long a = rng.range(-4, 4);
        long b = rng.range(-4, 4);
        CHECK(gamma_ratio(nu, a + b) ==
              gamma_ratio(nu, a) * gamma_ratio(nu + Rational(a), b));
        ++checked;
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(1) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("matrix basics") {
    RationalMatrix m(2, 3);
    m.at(0, 0) = Rational(1);
    m.at(1, 2) = Rational(-2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.transpose().at(2, 1) == Rational(-2));
    RationalMatrix i2 = RationalMatrix::identity(2);
    CHECK(i2 * i2 == i2);
    CHECK((i2 - i2).is_zero());
    CHECK_THROWS_AS(m * m, NotSquare);
}

TEST_CASE("anti-transpose flips across the anti-diagonal") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3);
    m.at(1, 1) = Rational(4);
    RationalMatrix f = m.anti_transpose();
    CHECK(f.at(0, 0) == Rational(4));
    CHECK(f.at(0, 1) == Rational(2));
    CHECK(f.at(1, 0) == Rational(3));
    CHECK(f.at(1, 1) == Rational(1));
}

TEST_CASE("rank via fraction-free elimination") {
    RationalMatrix m(3, 3);
    // Rows: (1,2,3), (2,4,6), (1,0,1) -- rank 2.
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    m.at(2, 0) = 1; m.at(2, 1) = 0; m.at(2, 2) = 1;
    CHECK(rank(m) == 2);
    CHECK(rank(RationalMatrix::identity(4)) == 4);
    CHECK(rank(RationalMatrix(3, 5)) == 0);
}

TEST_CASE("kernel basis, first nonzero entry normalized to 1") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 2; m.at(1, 1) = 4;
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Rational(1));
    CHECK(ker[0][1] == Rational(-1, 2));
    // Every kernel vector is annihilated.
    for (const auto& v : ker) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
            CHECK(acc.is_zero());
        }
    }
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST_CASE("characteristic polynomial: frozen values") {
    // [[2,1],[0,3]] has charpoly (t-2)(t-3) = 6 - 5t + t^2.
    RationalMatrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 1) = 3;
    UniPoly pa = charpoly(a);
    CHECK(pa.degree() == 2);
    CHECK(pa.coeff(0) == Rational(6));
    CHECK(pa.coeff(1) == Rational(-5));
    CHECK(pa.coeff(2) == Rational(1));

    // [[0,-1],[1,0]] has charpoly t^2 + 1.
    RationalMatrix b(2, 2);
    b.at(0, 1) = -1; b.at(1, 0) = 1;
    UniPoly pb = charpoly(b);
    CHECK(pb.coeff(0) == Rational(1));
    CHECK(pb.coeff(1) == Rational(0));
    CHECK(pb.coeff(2) == Rational(1));

    CHECK_THROWS_AS(charpoly(RationalMatrix(2, 3)), NotSquare);
}

TEST_CASE("characteristic polynomial annihilates its matrix") {
    Rng rng(5150);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t n = 1 + rng.below(4);
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.rational(5, 3);
        UniPoly p = charpoly(m);
        RationalMatrix acc(n, n);
        RationalMatrix power = RationalMatrix::identity(n);
        for (long k = 0; k <= p.degree(); ++k) {
            acc = acc + power.scaled(p.coeff(static_cast<std::size_t>(k)));
            power = power * m;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("linear solve") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 3;
    std::vector<Rational> x;
    REQUIRE(solve_linear(a, {Rational(5), Rational(10)}, x));
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));

    // Inconsistent system.
    RationalMatrix s(2, 2);
    s.at(0, 0) = 1; s.at(0, 1) = 2;
    s.at(1, 0) = 2; s.at(1, 1) = 4;
    CHECK_FALSE(solve_linear(s, {Rational(1), Rational(3)}, x));
    // Consistent singular system: any solution is acceptable.
    REQUIRE(solve_linear(s, {Rational(1), Rational(2)}, x));
    CHECK(x[0] + Rational(2) * x[1] == Rational(1));
}

TEST_CASE("polynomial arithmetic") {
    UniPoly p({Rational(1), Rational(2)});   // 1 + 2t
    UniPoly q({Rational(-1), Rational(1)});  // -1 + t
    UniPoly prod = p * q;                    // -1 + t + 2t^2... check: (1+2t)(t-1) = -1 - t + 2t^2
    CHECK(prod.coeff(0) == Rational(-1));
    CHECK(prod.coeff(1) == Rational(-1));
    CHECK(prod.coeff(2) == Rational(2));
    CHECK(p.eval(Rational(3)) == Rational(7));
    CHECK(UniPoly::linear_root(Rational(5)).eval(Rational(5)).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("deterministic random generator") {
    Rng a(42), b(42);
    for (int i = 0; i < 20; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    for (int i = 0; i < 50; ++i) {
        CHECK(c.below(10) < 10);
        long v = c.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        CHECK_FALSE(c.non_integer_rational(9, 7).is_integer());
    }
}

}  // TEST_SUITE
