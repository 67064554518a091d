#include "qsym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsym {

namespace {

std::size_t checked_total_dim(const Mat& rho, const std::vector<std::size_t>& dims,
                              const char* who) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (rho.rows() != rho.cols() || rho.rows() != total)
        throw std::invalid_argument(std::string(who) + ": matrix size does not match subsystem dimensions");
    return total;
}

} // namespace

double Vec::norm() const {
    double s = 0;
    for (const Cx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double Vec::max_abs() const {
    double m = 0;
    for (const Cx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

Vec& Vec::operator+=(const Vec& o) {
    if (o.dim() != dim()) throw std::invalid_argument("Vec: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (o.dim() != dim()) throw std::invalid_argument("Vec: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Vec& Vec::operator*=(Cx s) {
    for (Cx& z : a_) z *= s;
    return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator*(Cx s, Vec v) { return v *= s; }

Cx inner(const Vec& u, const Vec& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    Cx s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

Mat::Mat(std::size_t rows, std::size_t cols, std::initializer_list<Cx> entries)
    : rows_(rows), cols_(cols), a_(entries) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Mat: entry count does not match shape");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::dagger() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Mat Mat::conjugate() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Cx Mat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    Cx t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Mat::max_abs() const {
    double m = 0;
    for (const Cx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("Mat: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("Mat: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat& Mat::operator*=(Cx s) {
    for (Cx& z : a_) z *= s;
    return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Cx s, Mat m) { return m *= s; }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Mat*Mat: shape mismatch");
    Mat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cx aik = a(i, k);
            if (aik == Cx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Vec operator*(const Mat& m, const Vec& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("Mat*Vec: shape mismatch");
    Vec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Cx s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat outer(const Vec& u, const Vec& v) {
    Mat r(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) r(i, j) = u[i] * std::conj(v[j]);
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Cx aij = a(i, j);
            if (aij == Cx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
    return r;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double max_abs_diff(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double hermiticity_error(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("hermiticity_error: matrix not square");
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

// One complex Jacobi rotation zeroing A(p,q), accumulating into V.
// The 2x2 block [[app, |apq| e^{i phi}], [|apq| e^{-i phi}, aqq]] reduces to a
// real rotation after pulling out the phase of A(p,q).
namespace {

void jacobi_rotate(Mat& a, Mat& v, std::size_t p, std::size_t q) {
    const Cx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;

    const Cx phase = apq / abs_apq;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Cx sp = s * phase;        // J(p,q) entry
    const Cx spc = s * std::conj(phase);

    const std::size_t n = a.rows();

    // columns: A <- A J with J = [[c, sp], [-conj(sp), c]] on (p,q)
    for (std::size_t k = 0; k < n; ++k) {
        const Cx akp = a(k, p);
        const Cx akq = a(k, q);
        a(k, p) = c * akp - spc * akq;
        a(k, q) = sp * akp + c * akq;
    }
    // rows: A <- J^dagger A
    for (std::size_t k = 0; k < n; ++k) {
        const Cx apk = a(p, k);
        const Cx aqk = a(q, k);
        a(p, k) = c * apk - sp * aqk;
        a(q, k) = spc * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Cx(a(p, p).real(), 0.0);
    a(q, q) = Cx(a(q, q).real(), 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const Cx vkp = v(k, p);
        const Cx vkq = v(k, q);
        v(k, p) = c * vkp - spc * vkq;
        v(k, q) = sp * vkp + c * vkq;
    }
}

double offdiag_max(const Mat& a) {
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

} // namespace

EigHermitian eig_hermitian(const Mat& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
    if (hermiticity_error(h) > kHermitianTol)
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");

    const std::size_t n = h.rows();

    // work on the exactly-Hermitian average (H + H^dagger)/2
    Mat a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Cx(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Cx z = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    Mat v = Mat::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = 1e-16 * scale;
    for (int sweep = 0; sweep < 60 && offdiag_max(a) > stop; ++sweep)
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > stop) jacobi_rotate(a, v, p, q);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigHermitian out;
    out.values.resize(n);
    out.vectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

Mat sqrtm_psd(const Mat& h) {
    EigHermitian e = eig_hermitian(h);
    const std::size_t n = h.rows();
    for (double lam : e.values)
        if (lam < -kPsdTol) throw std::domain_error("sqrtm_psd: matrix has a negative eigenvalue");
    Mat r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::max(e.values[k], 0.0));
        if (s == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += s * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return r;
}

Mat expm_skew(const Mat& h) {
    EigHermitian e = eig_hermitian(h);
    const std::size_t n = h.rows();
    Mat r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Cx ph = std::exp(Cx(0.0, e.values[k]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += ph * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return r;
}

Mat partial_trace(const Mat& rho, const std::vector<std::size_t>& dims,
                  const std::vector<std::size_t>& keep) {
    checked_total_dim(rho, dims, "partial_trace");
    const std::size_t ns = dims.size();
    for (std::size_t k : keep)
        if (k >= ns) throw std::invalid_argument("partial_trace: invalid subsystem index");
    for (std::size_t i = 1; i < keep.size(); ++i)
        if (keep[i] <= keep[i - 1])
            throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");

    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < ns; ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

    // right-to-left strides of the full index
    std::vector<std::size_t> stride(ns, 1);
    for (std::size_t s = ns; s-- > 1;) stride[s - 1] = stride[s] * dims[s];

    std::size_t kd = 1, td = 1;
    for (std::size_t s : keep) kd *= dims[s];
    for (std::size_t s : traced) td *= dims[s];

    auto expand = [&](std::size_t flat, const std::vector<std::size_t>& subs) {
        std::size_t idx = 0;
        for (std::size_t s = subs.size(); s-- > 0;) {
            idx += (flat % dims[subs[s]]) * stride[subs[s]];
            flat /= dims[subs[s]];
        }
        return idx;
    };

    Mat out(kd, kd);
    for (std::size_t r = 0; r < kd; ++r) {
        const std::size_t rbase = expand(r, keep);
        for (std::size_t c = 0; c < kd; ++c) {
            const std::size_t cbase = expand(c, keep);
            Cx s = 0;
            for (std::size_t t = 0; t < td; ++t) {
                const std::size_t off = expand(t, traced);
                s += rho(rbase + off, cbase + off);
            }
            out(r, c) = s;
        }
    }
    return out;
}

Mat partial_transpose(const Mat& rho, const std::vector<std::size_t>& dims,
                      std::size_t subsystem) {
    const std::size_t total = checked_total_dim(rho, dims, "partial_transpose");
    if (subsystem >= dims.size())
        throw std::invalid_argument("partial_transpose: invalid subsystem index");

    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t s = dims.size(); s-- > 1;) stride[s - 1] = stride[s] * dims[s];
    const std::size_t d = dims[subsystem];
    const std::size_t st = stride[subsystem];

    Mat out(total, total);
    for (std::size_t r = 0; r < total; ++r) {
        const std::size_t rdig = (r / st) % d;
        const std::size_t rrest = r - rdig * st;
        for (std::size_t c = 0; c < total; ++c) {
            const std::size_t cdig = (c / st) % d;
            const std::size_t crest = c - cdig * st;
            out(rrest + cdig * st, crest + rdig * st) = rho(r, c);
        }
    }
    return out;
}

} // namespace qsym
