#pragma once

#include <optional>
#include <vector>

#include "imagcone/field.hpp"

namespace imagcone {

/// Dense vector of field scalars.
class Vec {
public:
    Vec() = default;
    Vec(const Field& f, std::size_t n) : entries_(n, Scalar(f)) {}
    explicit Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }

    Vec& operator+=(const Vec& rhs);
    Vec& operator-=(const Vec& rhs);
    Vec& operator*=(const Scalar& c);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& c, Vec v) { return v *= c; }
    Vec operator-() const;

    bool operator==(const Vec& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const Vec& rhs) const { return !(*this == rhs); }

    bool is_zero() const;

    /// Lexicographic exact comparison, for deterministic ordering.
    static int compare(const Vec& a, const Vec& b);

    const std::vector<Scalar>& entries() const { return entries_; }

private:
    std::vector<Scalar> entries_;
};

Scalar dot(const Vec& a, const Vec& b);

/// Dense matrix of field scalars (row major).
class Mat {
public:
    Mat() = default;
    Mat(const Field& f, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

    static Mat identity(const Field& f, std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    Mat transposed() const;
    bool is_symmetric() const;

    Vec apply(const Vec& v) const;           // M v
    Mat operator*(const Mat& rhs) const;

    bool operator==(const Mat& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// One solution of M x = b by exact Gaussian elimination, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Basis of the kernel of M (deterministic order; empty if injective).
std::vector<Vec> kernel_basis(const Mat& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};

/// Signature of a symmetric matrix via exact symmetric congruence reduction.
Signature signature(const Mat& m);

std::size_t rank(const Mat& m);

/// Reduced row echelon form; also reports pivot columns.
Mat rref(const Mat& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Canonical basis of the row span of the given vectors (RREF rows,
/// each canonically scaled), for syntactic subspace comparison.
std::vector<Vec> canonical_span_basis(const std::vector<Vec>& vectors, const Field& f,
                                      std::size_t dim);

} // namespace imagcone
