#include "tiltlab/matrix.hpp"

#include "tiltlab/errors.hpp"

#include <ostream>
#include <utility>

namespace tiltlab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_digit = false;
    bool seen_slash = false;
    bool digit_after_slash = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            seen_digit = true;
            if (seen_slash) digit_after_slash = true;
        } else if (ch == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            throw InputError("malformed rational literal '" + text + "'");
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash))
        throw InputError("malformed rational literal '" + text + "'");
    Rational value;
    if (value.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
        throw InputError("malformed rational literal '" + text + "'");
    if (seen_slash && value.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_integers(std::size_t rows, std::size_t cols, std::span<const long long> values) {
    if (values.size() != rows * cols) throw InputError("matrix value count does not match shape");
    QMatrix m(rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.data_[k] = Rational(static_cast<long>(values[k]));
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                if (sgn(rhs(k, c)) != 0) out(r, c) += a * rhs(k, c);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum shape mismatch");
    QMatrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const { return *this + (-rhs); }

QMatrix QMatrix::operator-() const {
    QMatrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
}

std::vector<Rational> QMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("matrix block out of range");
    QMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c).get_str();
        }
    }
    return os << ']';
}

EchelonForm row_reduce(QMatrix m) {
    EchelonForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
        const Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(m(r, c)) == 0) continue;
            const Rational factor = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(lead, k)) != 0) m(r, k) -= factor * m(lead, k);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) {
    if (m.empty()) return 0;
    // Forward elimination only; cheaper than the full reduced form.
    QMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t k = c; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));
        for (std::size_t r = lead + 1; r < rows; ++r) {
            if (sgn(a(r, c)) == 0) continue;
            const Rational factor = a(r, c) / a(lead, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(a(lead, k)) != 0) a(r, k) -= factor * a(lead, k);
        }
        ++lead;
    }
    return lead;
}

QMatrix kernel_basis(const QMatrix& m) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0) return QMatrix::identity(cols);
    const EchelonForm ef = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ef.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(cols, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        basis(f, j) = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) basis(ef.pivots[r], j) = -ef.reduced(r, f);
    }
    return basis;
}

QMatrix cokernel_projection(const QMatrix& m) {
    // Left null space: rows y with y m = 0.
    if (m.cols() == 0) return QMatrix::identity(m.rows());
    return kernel_basis(m.transpose()).transpose();
}

Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(m(pivot, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m(r, c)) == 0) continue;
            const Rational factor = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw_invariant("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const EchelonForm ef = row_reduce(std::move(aug));
    if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) throw_invariant("inverse of a singular matrix");
    return ef.reduced.block(0, n, n, n);
}

}  // namespace tiltlab
