// Dense complex vector/matrix algebra for small Hilbert spaces (dims <= 64):
// Kronecker products, partial trace/transpose over a subsystem list,
// Hermitian eigendecomposition (cyclic Jacobi), PSD square root, and the
// unitary exponential exp(i*H) of a Hermitian generator.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qsym {

using Cx = std::complex<double>;

// max|A - A^dagger| allowed before a matrix stops counting as Hermitian
inline constexpr double kHermitianTol = 1e-12;

// eigenvalues below -kPsdTol are an error in PSD operations; above it they
// are clamped to zero
inline constexpr double kPsdTol = 1e-12;

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : a_(dim) {}
    Vec(std::initializer_list<Cx> entries) : a_(entries) {}

    std::size_t dim() const { return a_.size(); }
    Cx& operator[](std::size_t i) { return a_[i]; }
    const Cx& operator[](std::size_t i) const { return a_[i]; }

    const std::vector<Cx>& entries() const { return a_; }
    std::vector<Cx>& entries() { return a_; }

    double norm() const;
    double max_abs() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(Cx s);

private:
    std::vector<Cx> a_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(Cx s, Vec v);

// <u|v>; conjugates the first argument
Cx inner(const Vec& u, const Vec& v);

// Row-major dense complex matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::initializer_list<Cx> entries);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Cx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<Cx>& entries() const { return a_; }

    Mat dagger() const;
    Mat conjugate() const;
    Mat transpose() const;
    Cx trace() const;
    double max_abs() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(Cx s);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cx> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(Cx s, Mat m);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& m, const Vec& v);

// |u><v|
Mat outer(const Vec& u, const Vec& v);

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

double max_abs_diff(const Mat& a, const Mat& b);
double max_abs_diff(const Vec& a, const Vec& b);

// max|A - A^dagger| over entries
double hermiticity_error(const Mat& a);

struct EigHermitian {
    std::vector<double> values; // descending
    Mat vectors;                // eigenvector k in column k, H v_k = values[k] v_k
};

// Cyclic Jacobi for complex Hermitian matrices. Throws std::invalid_argument
// if hermiticity_error(h) > kHermitianTol.
EigHermitian eig_hermitian(const Mat& h);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-kPsdTol, 0) are clamped to zero; below -kPsdTol throws std::domain_error.
Mat sqrtm_psd(const Mat& h);

// exp(i*h) for Hermitian h, via eigendecomposition; unitary by construction.
Mat expm_skew(const Mat& h);

// Trace out every subsystem not listed in keep. dims lists the subsystem
// dimensions left to right; keep holds strictly increasing subsystem indices.
Mat partial_trace(const Mat& rho, const std::vector<std::size_t>& dims,
                  const std::vector<std::size_t>& keep);

// Transpose one subsystem in place; an involution.
Mat partial_transpose(const Mat& rho, const std::vector<std::size_t>& dims,
                      std::size_t subsystem);

} // namespace qsym
