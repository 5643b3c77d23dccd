#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace sa {

using cdouble = std::complex<double>;

// dense complex matrix, just large enough for genus <= 8 work
class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c, cdouble(0, 0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cdouble& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cdouble& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    friend CMat operator*(const CMat& x, const CMat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("CMat: shape mismatch");
        CMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                cdouble v = x(i, k);
                if (v == cdouble(0, 0)) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend CMat operator+(const CMat& x, const CMat& y) {
        CMat r = x;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }
    friend CMat operator-(const CMat& x, const CMat& y) {
        CMat r = x;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
        return r;
    }

    CMat transpose() const {
        CMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }
    double inf_norm() const {
        double m = 0;
        for (int i = 0; i < rows_; ++i) {
            double row = 0;
            for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
            m = std::max(m, row);
        }
        return m;
    }

private:
    int rows_, cols_;
    std::vector<cdouble> a_;
};

// Gauss-Jordan inverse with partial pivoting; reports the pivot-based
// near-singularity through the returned condition estimate.
inline CMat inverse(const CMat& m, double* condition_estimate = nullptr) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    CMat a = m, inv = CMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        cdouble d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            cdouble f = a(r, col);
            if (f == cdouble(0, 0)) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    if (condition_estimate) *condition_estimate = m.inf_norm() * inv.inf_norm();
    return inv;
}

// solves the Hermitian positive semidefinite normal system A x = b in place
inline std::vector<cdouble> solve_dense(CMat a, std::vector<cdouble> b) {
    int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) throw std::domain_error("solve_dense: singular system");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            cdouble f = a(r, col) / a(col, col);
            if (f == cdouble(0, 0)) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<cdouble> x(n);
    for (int i = n - 1; i >= 0; --i) {
        cdouble acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

// eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q2 = p + 1; q2 < n; ++q2) off += a[p][q2] * a[p][q2];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q2 = p + 1; q2 < n; ++q2) {
                if (std::abs(a[p][q2]) < 1e-300) continue;
                double theta = (a[q2][q2] - a[p][p]) / (2 * a[p][q2]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q2];
                    a[k][p] = c * akp - s * akq;
                    a[k][q2] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q2][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q2][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

// numerical rank via column-pivoted elimination
inline int matrix_rank(CMat a, double rel_tol = 1e-8) {
    int rows = a.rows(), cols = a.cols();
    double scale = a.max_abs();
    if (scale == 0) return 0;
    int rank = 0;
    std::vector<bool> used(rows, false);
    for (int col = 0; col < cols; ++col) {
        int piv = -1;
        double best = 0;
        for (int r = 0; r < rows; ++r) {
            if (used[r]) continue;
            double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (piv < 0 || best < rel_tol * scale) continue;
        used[piv] = true;
        ++rank;
        for (int r = 0; r < rows; ++r) {
            if (r == piv) continue;
            cdouble f = a(r, col) / a(piv, col);
            if (f == cdouble(0, 0)) continue;
            for (int j = col; j < cols; ++j) a(r, j) -= f * a(piv, j);
        }
    }
    return rank;
}

}  // namespace sa
