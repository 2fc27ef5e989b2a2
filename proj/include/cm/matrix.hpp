#pragma once

#include "cm/errors.hpp"
#include "cm/gauss_rational.hpp"

#include <vector>

namespace cm {

/// Small dense square matrix over the Gaussian rationals.  Sized for the
/// n x n linear parts of maps (n is the CR dimension, single digits).
class GMatrix {
public:
    GMatrix() = default;
    explicit GMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static GMatrix identity(int n) {
        GMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = GaussRational(1);
        return m;
    }

    int dim() const { return n_; }

    GaussRational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const GaussRational& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    friend bool operator==(const GMatrix& x, const GMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const GMatrix& x, const GMatrix& y) { return !(x == y); }

    GMatrix operator*(const GMatrix& o) const {
        if (n_ != o.n_) throw dimension_mismatch("matrix product dimension mismatch");
        GMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k)
                for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        return r;
    }

    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const {
        if (static_cast<int>(v.size()) != n_) throw dimension_mismatch("matrix-vector mismatch");
        std::vector<GaussRational> r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    GMatrix conj_transpose() const {
        GMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i).conj();
        return r;
    }

    GMatrix scaled(const GaussRational& c) const {
        GMatrix r(n_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    GaussRational det() const {
        GMatrix m(*this);
        GaussRational d(1);
        for (int c = 0; c < n_; ++c) {
            int p = -1;
            for (int r = c; r < n_; ++r)
                if (!m(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return GaussRational(0);
            if (p != c) {
                for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            const GaussRational inv = m(c, c).inverse();
            for (int r = c + 1; r < n_; ++r) {
                if (m(r, c).is_zero()) continue;
                const GaussRational f = m(r, c) * inv;
                for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return d;
    }

    GMatrix inverse() const {
        GMatrix m(*this);
        GMatrix inv = identity(n_);
        for (int c = 0; c < n_; ++c) {
            int p = -1;
            for (int r = c; r < n_; ++r)
                if (!m(r, c).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) throw error("singular matrix");
            if (p != c)
                for (int j = 0; j < n_; ++j) {
                    std::swap(m(p, j), m(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            const GaussRational piv = m(c, c).inverse();
            for (int j = 0; j < n_; ++j) {
                m(c, j) *= piv;
                inv(c, j) *= piv;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == c || m(r, c).is_zero()) continue;
                const GaussRational f = m(r, c);
                for (int j = 0; j < n_; ++j) {
                    m(r, j) -= f * m(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

private:
    int n_ = 0;
    std::vector<GaussRational> a_;
};

} // namespace cm
