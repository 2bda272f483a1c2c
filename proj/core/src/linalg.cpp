#include "disrank/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace disrank {

bool RatVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const BigRational& e) { return e.is_zero(); });
}

std::string RatVector::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i];
    }
    os << ']';
    return os.str();
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("RatMatrix::row: index out of range");
    RatVector v(Orientation::row, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

RatVector RatMatrix::column(std::size_t j) const {
    if (j >= cols_) throw std::out_of_range("RatMatrix::column: index out of range");
    RatVector v(Orientation::column, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RatVector mat_mul(const RatVector& v, const RatMatrix& m) {
    if (v.orientation() != Orientation::row) {
        throw std::invalid_argument("mat_mul: vector must be row-oriented");
    }
    if (v.size() != m.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch (" +
                                    std::to_string(v.size()) + " vs " +
                                    std::to_string(m.rows()) + ")");
    }
    RatVector out(Orientation::row, m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[j] += v[k] * m(k, j);
        }
    }
    return out;
}

BigRational column_sum(const RatMatrix& m, std::size_t col) {
    if (col >= m.cols()) throw std::out_of_range("column_sum: column index out of range");
    BigRational sum;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, col);
    return sum;
}

RowReduceResult row_reduce(const RatMatrix& m) {
    RatMatrix r = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pivot_row, j));
        }
        BigRational inv = BigRational(1) / r(pivot_row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r(i, col).is_zero()) continue;
            BigRational factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r(i, j) -= factor * r(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    return {std::move(r), pivot_row};
}

BigRational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    BigRational sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
    for (const RatVector& b : basis) {
        if (b.size() != v.size() || b.orientation() != v.orientation()) {
            throw std::invalid_argument("in_span: mismatched vector shapes");
        }
    }
    RatMatrix without(basis.size(), v.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) without(i, j) = basis[i][j];
    }
    RatMatrix with(basis.size() + 1, v.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) with(i, j) = basis[i][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) with(basis.size(), j) = v[j];
    return row_reduce(without).rank == row_reduce(with).rank;
}

}  // namespace disrank
