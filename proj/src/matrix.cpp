#include "weightlab/matrix.hpp"

#include <sstream>

namespace weightlab {

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << (c_[k].sign() > 0 ? " + " : " - ");
        Rational mag = c_[k].sign() > 0 ? c_[k] : -c_[k];
        if (first && c_[k].sign() < 0) os << "-";
        first = false;
        if (k == 0 || mag != Rational(1)) os << mag.str();
        if (k > 0) {
            if (mag != Rational(1)) os << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw NotSquare("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw NotSquare("matrix difference shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw NotSquare("matrix sum shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RationalMatrix RationalMatrix::anti_transpose() const {
    if (rows_ != cols_) throw NotSquare("anti_transpose needs a square matrix");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - 1 - j, cols_ - 1 - i);
    return r;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

namespace {

// Fraction-free Bareiss elimination with column pivoting. Returns the echelon
// form, the pivot column of each eliminated row, and the rank.
struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> pivot_cols;
};

Echelon bareiss_echelon(RationalMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e{m, {}};
    Rational prev_pivot(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && e.m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.m.at(piv, j), e.m.at(r, j));
        const Rational pivot = e.m.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            // Bareiss step: exact division by the previous pivot keeps entries
            // as true minors instead of exploding fractions.
            for (std::size_t j = c + 1; j < cols; ++j)
                e.m.at(i, j) = (pivot * e.m.at(i, j) - e.m.at(i, c) * e.m.at(r, j)) / prev_pivot;
            e.m.at(i, c) = Rational(0);
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    Echelon e = bareiss_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = Rational(1);
        // Back-substitute through the echelon rows.
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            std::size_t pc = e.pivot_cols[k];
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero()) s += e.m.at(k, j) * v[j];
            v[pc] = -s / e.m.at(k, pc);
        }
        // Normalize: first nonzero coordinate = 1.
        for (const auto& x : v) {
            if (!x.is_zero()) {
                Rational inv = Rational(1) / x;
                for (auto& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

UniPoly charpoly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("charpoly needs a square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr M_1,
    // M_{k+1} = M (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1})/(k+1).
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = Rational(1);
    RationalMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RationalMatrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeff[n - k + 1];
            mk = m * shifted;
        }
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        coeff[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(coeff));
}

bool solve_linear(const RationalMatrix& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RationalMatrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    Echelon e = bareiss_echelon(aug);
    // Inconsistent iff some pivot lands in the augmented column.
    for (std::size_t c : e.pivot_cols)
        if (c == cols) return false;

    x.assign(cols, Rational(0));
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::size_t pc = e.pivot_cols[k];
        Rational s = e.m.at(k, cols);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (!x[j].is_zero()) s -= e.m.at(k, j) * x[j];
        x[pc] = s / e.m.at(k, pc);
    }
    return true;
}

}  // namespace weightlab
