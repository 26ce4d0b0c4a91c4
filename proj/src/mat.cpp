#include "vra/mat.hpp"

#include <algorithm>

namespace vra {

double dot(const double* a, const double* b, int n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
}

void axpy(double alpha, const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

namespace {
constexpr int kRowBlock = 64;  // rows of A per tile, keeps B panel reuse in L2
}

void gemm_nt(const Mat& A, const Mat& B, Mat& C, bool accumulate) {
    const int K = A.cols, N = B.rows;
    assert(B.cols == K && C.rows == A.rows && C.cols == N);
    // The broadcast-axpy inner loop needs B in K x N layout; transposing once
    // is far cheaper than the dot-product form's serial reductions.
    Mat Bt(K, N);
    for (int j = 0; j < N; ++j) {
        const double* bj = B.row(j);
        for (int k = 0; k < K; ++k) Bt.at(k, j) = bj[k];
    }
    gemm_nn(A, Bt, C, accumulate);
}

void gemm_nn(const Mat& A, const Mat& B, Mat& C, bool accumulate) {
    const int M = A.rows, K = A.cols, N = B.cols;
    assert(B.rows == K && C.rows == M && C.cols == N);
    if (!accumulate) C.zero();
    for (int i = 0; i < M; ++i) {
        const double* ai = A.row(i);
        double* ci = C.row(i);
        for (int k = 0; k < K; ++k) {
            const double av = ai[k];
            if (av != 0.0) axpy(av, B.row(k), ci, N);
        }
    }
}

void gemm_tn(const Mat& A, const Mat& B, Mat& C, bool accumulate) {
    const int K = A.rows, M = A.cols, N = B.cols;
    assert(B.rows == K && C.rows == M && C.cols == N);
    if (!accumulate) C.zero();
    // Walk the common dimension in blocks so the C panel being accumulated
    // stays cache-resident while we stream A and B.
    for (int kb = 0; kb < K; kb += kRowBlock) {
        const int ke = std::min(kb + kRowBlock, K);
        for (int i = 0; i < M; ++i) {
            double* ci = C.row(i);
            for (int k = kb; k < ke; ++k) {
                const double av = A.at(k, i);
                if (av != 0.0) axpy(av, B.row(k), ci, N);
            }
        }
    }
}

void gemv(const Mat& W, const double* x, const Vec& b, double* y) {
    for (int i = 0; i < W.rows; ++i) y[i] = dot(W.row(i), x, W.cols) + b[i];
}

}  // namespace vra
