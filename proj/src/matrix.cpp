#include "qqg/matrix.hpp"

#include <stdexcept>

namespace qqg {

Mat Mat::identity(const CycloContext* ctx, int n) {
    Mat m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ctx->one();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycloNum& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CycloNum& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::scaled(const CycloNum& s) const {
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat Mat::pow(int e) const {
    Mat acc = identity(ctx_, rows_);
    Mat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat Mat::transpose() const {
    Mat r(ctx_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<CycloNum> Mat::apply(const std::vector<CycloNum>& v) const {
    std::vector<CycloNum> r(rows_, ctx_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(ctx_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) {
                    if (o.at(k, l).is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
                }
        }
    return r;
}

Mat Mat::hcat(const Mat& o) const {
    Mat r(ctx_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::column(int c) const {
    Mat r(ctx_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

bool Mat::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

namespace {

// In-place row echelon; returns pivot columns.  Operates on a copy held by
// the callers below.
std::vector<int> echelonize(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        CycloNum inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            CycloNum f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) {
    return (int)echelonize(m).size();
}

Mat kernel_basis(const Mat& m) {
    Mat e = m;
    std::vector<int> pivots = echelonize(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    int k = m.cols() - (int)pivots.size();
    Mat basis(m.ctx(), m.cols(), k);
    int col = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, col) = m.ctx()->one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(pivots[pi], col) = -e.at((int)pi, free);
        ++col;
    }
    return basis;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Mat aug = m.hcat(Mat::identity(m.ctx(), m.rows()));
    std::vector<int> pivots = echelonize(aug);
    if ((int)pivots.size() != m.rows() || pivots.back() != m.rows() - 1) return std::nullopt;
    Mat inv(m.ctx(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.rows() + j);
    return inv;
}

Mat solve_exact(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact shape mismatch");
    Mat aug = a.hcat(b);
    std::vector<int> pivots = echelonize(aug);
    for (int c : pivots)
        if (c >= a.cols()) throw std::domain_error("solve_exact: inconsistent system");
    if ((int)pivots.size() != a.cols())
        throw std::domain_error("solve_exact: matrix does not have full column rank");
    Mat x(a.ctx(), a.cols(), b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[pi], j) = aug.at((int)pi, a.cols() + j);
    return x;
}

Mat column_space(const Mat& m) {
    Mat e = m.transpose();
    std::vector<int> pivots = echelonize(e);
    Mat r(m.ctx(), m.rows(), (int)pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < m.rows(); ++j) r.at(j, (int)i) = e.at((int)i, j);
    return r;
}

}  // namespace qqg
