#pragma once

#include <optional>
#include <vector>

#include "qqg/cyclo.hpp"

namespace qqg {

// Dense matrix over Q(zeta_{n^2}).  All eliminations are exact; there are
// no tolerances anywhere.
class Mat {
public:
    Mat() = default;
    Mat(const CycloContext* ctx, int rows, int cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_((size_t)rows * cols, ctx->zero()) {}

    static Mat identity(const CycloContext* ctx, int n);

    const CycloContext* ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycloNum& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const CycloNum& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const CycloNum& s) const;
    Mat pow(int e) const;  // e >= 0

    Mat transpose() const;
    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;

    // Kronecker product; row/col index of the result is i*o.rows()+k etc.
    Mat kron(const Mat& o) const;

    Mat hcat(const Mat& o) const;
    Mat column(int c) const;

    // True if every entry is a rational multiple of a power of zeta and
    // off-diagonal entries vanish.
    bool is_diagonal() const;

private:
    const CycloContext* ctx_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<CycloNum> a_;
};

int rank(Mat m);

// Basis of the right kernel {x : M x = 0}; columns of the result.
Mat kernel_basis(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

// Solves A X = B for A with full column rank; throws if inconsistent.
Mat solve_exact(const Mat& a, const Mat& b);

// Column space basis (echelonized, as columns).
Mat column_space(const Mat& m);

}  // namespace qqg
