#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "weightlab/errors.hpp"
#include "weightlab/rational.hpp"

namespace weightlab {

// Univariate polynomial with rational coefficients, stored lowest degree first.
// Trailing zero coefficients are trimmed; the zero polynomial has empty storage.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    // x - r
    static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& x) const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    std::string str(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Dense rational matrix.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& s) const;
    RationalMatrix transpose() const;
    // Flip across the anti-diagonal: result(i,j) = this(n-1-j, n-1-i). Square only.
    RationalMatrix anti_transpose() const;
    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Row echelon rank via fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

// Basis of the right null space { v : M v = 0 }. Each vector is normalized so its
// first nonzero coordinate is 1. Count always equals cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// Monic characteristic polynomial det(tI - M) via the Faddeev-LeVerrier recursion.
UniPoly charpoly(const RationalMatrix& m);

// Solve M x = b. Returns false if the system is inconsistent; when the solution
// space is positive-dimensional the minimal (free vars = 0) solution is produced.
bool solve_linear(const RationalMatrix& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x);

}  // namespace weightlab
