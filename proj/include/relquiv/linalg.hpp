#pragma once

#include <cstdint>
#include <vector>

namespace relquiv {

// Dense matrices over the prime field F_p, p = 32003. Everything in this
// project stays small (a few hundred rows at most), so plain Gaussian
// elimination is all we need.

inline constexpr std::int64_t FIELD_P = 32003;

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;  // row-major, values in [0, p)

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

std::int64_t fmod_p(std::int64_t x);
std::int64_t finv(std::int64_t x);

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_scale(const Mat& A, std::int64_t s);
bool mat_is_zero(const Mat& A);

// Stack B below A (column counts must match).
Mat mat_vstack(const Mat& A, const Mat& B);
// Place B to the right of A (row counts must match).
Mat mat_hstack(const Mat& A, const Mat& B);

int mat_rank(Mat A);

// Basis of the right kernel {x : A x = 0}; each column of the result is one
// basis vector.
Mat kernel_basis(Mat A);

// One solution of A x = b, or empty if inconsistent. Free variables are set
// to zero.
struct SolveResult {
    bool ok = false;
    std::vector<std::int64_t> x;
};
SolveResult solve(Mat A, std::vector<std::int64_t> b);

}  // namespace relquiv
