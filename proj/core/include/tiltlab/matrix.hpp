#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tiltlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

// Dense row-major matrix over the rationals. All operations are exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_integers(std::size_t rows, std::size_t cols, std::span<const long long> values);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] QMatrix transpose() const;
    [[nodiscard]] QMatrix operator*(const QMatrix& rhs) const;
    [[nodiscard]] QMatrix operator+(const QMatrix& rhs) const;
    [[nodiscard]] QMatrix operator-(const QMatrix& rhs) const;
    [[nodiscard]] QMatrix operator-() const;
    [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> v) const;

    // Submatrix of the given rows [r0, r0+nr) and cols [c0, c0+nc).
    [[nodiscard]] QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    [[nodiscard]] bool is_zero() const;
    bool operator==(const QMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

// Reduced row echelon form; pivot columns returned in increasing order.
struct EchelonForm {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};
EchelonForm row_reduce(QMatrix m);

std::size_t rank(const QMatrix& m);

// Columns form a basis of {x : m x = 0}; shape cols(m) x nullity.
QMatrix kernel_basis(const QMatrix& m);

// Rows form a linear map pi with ker(pi) = im(m); shape (rows(m) - rank) x rows(m).
QMatrix cokernel_projection(const QMatrix& m);

Rational determinant(QMatrix m);

// Throws InvariantError if singular or not square.
QMatrix inverse(const QMatrix& m);

}  // namespace tiltlab
