#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace vra {

// Dense row-major matrix of doubles. Sized for the feed-forward nets used
// here (a few thousand rows at most); kernels below are blocked enough to
// stay cache-resident at those shapes.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    size_t size() const { return a.size(); }
    void zero() { std::fill(a.begin(), a.end(), 0.0); }
};

using Vec = std::vector<double>;

// C (M x N) = A (M x K) * B^T with B stored (N x K), optionally accumulating.
void gemm_nt(const Mat& A, const Mat& B, Mat& C, bool accumulate = false);

// C (M x N) = A (M x K) * B (K x N), optionally accumulating.
void gemm_nn(const Mat& A, const Mat& B, Mat& C, bool accumulate = false);

// C (M x N) = A^T * B with A stored (K x M), B stored (K x N), optionally accumulating.
void gemm_tn(const Mat& A, const Mat& B, Mat& C, bool accumulate = false);

// y (n) = W (n x m) * x (m) + b (n)
void gemv(const Mat& W, const double* x, const Vec& b, double* y);

double dot(const double* a, const double* b, int n);
void axpy(double alpha, const double* x, double* y, int n);

}  // namespace vra
