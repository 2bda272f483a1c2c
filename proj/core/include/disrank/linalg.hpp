#ifndef DISRANK_LINALG_HPP
#define DISRANK_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "disrank/rational.hpp"

namespace disrank {

enum class Orientation { row, column };

/// Dense exact vector with a fixed orientation.
class RatVector {
public:
    RatVector() : orientation_(Orientation::row) {}
    RatVector(Orientation o, std::size_t n) : orientation_(o), entries_(n) {}
    RatVector(Orientation o, std::vector<BigRational> entries)
        : orientation_(o), entries_(std::move(entries)) {}

    Orientation orientation() const { return orientation_; }
    std::size_t size() const { return entries_.size(); }

    BigRational& operator[](std::size_t i) { return entries_[i]; }
    const BigRational& operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<BigRational>& entries() const { return entries_; }

    bool is_zero() const;

    /// "[a, b, c]" with entries in p/q form.
    std::string to_string() const;

    friend bool operator==(const RatVector& a, const RatVector& b) {
        return a.orientation_ == b.orientation_ && a.entries_ == b.entries_;
    }

private:
    Orientation orientation_;
    std::vector<BigRational> entries_;
};

/// Dense exact matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;

    /// Row-major bracketed text, e.g. "[[0, 1], [1, 0]]" (test goldens).
    std::string to_string() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<BigRational> entries_;
};

/// Exact product; throws std::invalid_argument on inner-dimension mismatch.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Row-vector times matrix; requires v row-oriented with v.size() == m.rows().
RatVector mat_mul(const RatVector& v, const RatMatrix& m);

/// Sum of one column; throws std::out_of_range on a bad index.
BigRational column_sum(const RatMatrix& m, std::size_t col);

struct RowReduceResult {
    RatMatrix reduced;  // reduced row echelon form
    std::size_t rank;
};

/// Deterministic RREF: pivot on the first nonzero entry in column order,
/// scale to 1, eliminate above and below. The input is left untouched.
RowReduceResult row_reduce(const RatMatrix& m);

/// Exact inner product; requires equal lengths.
BigRational dot(const RatVector& a, const RatVector& b);

/// True iff v lies in span(basis), decided by comparing rank(basis) with
/// rank(basis ∪ {v}). All vectors must share length and orientation.
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

}  // namespace disrank

#endif
