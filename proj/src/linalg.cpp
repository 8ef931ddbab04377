#include "relquiv/linalg.hpp"

#include <stdexcept>

namespace relquiv {

std::int64_t fmod_p(std::int64_t x) {
    std::int64_t r = x % FIELD_P;
    return r < 0 ? r + FIELD_P : r;
}

std::int64_t finv(std::int64_t x) {
    x = fmod_p(x);
    if (x == 0) throw std::domain_error("finv(0)");
    // Fermat: x^(p-2)
    std::int64_t base = x, e = FIELD_P - 2, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % FIELD_P;
        base = base * base % FIELD_P;
        e >>= 1;
    }
    return acc;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            std::int64_t v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = (C.at(i, j) + v * B.at(k, j)) % FIELD_P;
        }
    return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("mat_add: shape mismatch");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = fmod_p(A.a[i] + B.a[i]);
    return C;
}

Mat mat_scale(const Mat& A, std::int64_t s) {
    Mat C(A.rows, A.cols);
    s = fmod_p(s);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] * s % FIELD_P;
    return C;
}

bool mat_is_zero(const Mat& A) {
    for (auto v : A.a)
        if (v != 0) return false;
    return true;
}

Mat mat_vstack(const Mat& A, const Mat& B) {
    if (A.cols != B.cols) throw std::invalid_argument("mat_vstack: column mismatch");
    Mat C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Mat mat_hstack(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw std::invalid_argument("mat_hstack: row mismatch");
    Mat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(Mat& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
        std::int64_t inv = finv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = A.at(r, j) * inv % FIELD_P;
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            std::int64_t f = A.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = fmod_p(A.at(i, j) - f * A.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int mat_rank(Mat A) { return static_cast<int>(echelon(A).size()); }

Mat kernel_basis(Mat A) {
    int n = A.cols;
    std::vector<int> pivots = echelon(A);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], static_cast<int>(k)) = fmod_p(-A.at(static_cast<int>(r), fc));
    }
    return K;
}

SolveResult solve(Mat A, std::vector<std::int64_t> b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: rhs size");
    Mat Ab = mat_hstack(A, Mat(A.rows, 1));
    for (int i = 0; i < A.rows; ++i) Ab.at(i, A.cols) = fmod_p(b[i]);
    std::vector<int> pivots = echelon(Ab);
    SolveResult res;
    for (int c : pivots)
        if (c == A.cols) return res;  // inconsistent
    res.ok = true;
    res.x.assign(A.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        res.x[pivots[r]] = Ab.at(static_cast<int>(r), A.cols);
    return res;
}

}  // namespace relquiv
