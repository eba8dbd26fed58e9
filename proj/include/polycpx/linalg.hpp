#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polycpx {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    void append_row(const IntVector& r);
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix scaled(const IntMatrix& a, long k);

struct SnfResult {
    IntMatrix diag;  // same shape as the input
    IntMatrix left;  // L, rows x rows
    IntMatrix right;  // R, cols x cols
    IntMatrix left_inverse;
    IntMatrix right_inverse;
    std::size_t rank = 0;
    std::vector<BigInt> diagonal() const;
};

// L * M * R = diag with d_1 | d_2 | ... and nonnegative diagonal.
SnfResult smith_normal_form(const IntMatrix& m);

// Integer solutions of A x = b, reusing one SNF for many right-hand sides.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntMatrix& a);
    std::optional<IntVector> solve(const IntVector& b) const;
    // columns spanning the integer kernel
    IntMatrix kernel_basis() const;
    const SnfResult& snf() const { return snf_; }

private:
    std::size_t rows_, cols_;
    SnfResult snf_;
};

// A basis (as columns) of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

}  // namespace polycpx
