#pragma once

// Dense symmetric coefficient tensors for the dimension >= 5 tests:
// extraction from bidegree components (with multiplicity division) and
// index contractions against the signature metric.

#include "cm/series.hpp"
#include "cm/hermitian.hpp"

#include <array>
#include <functional>
#include <vector>

namespace cmtest {

using namespace cm;

/// T[i1..i_ru | j1..j_rb] with unbarred then barred index groups, each
/// symmetric.  n is the coordinate dimension.
struct Tensor {
    int n = 2;
    int ru = 0;
    int rb = 0;
    std::vector<GaussRational> v;

    Tensor(int n_, int ru_, int rb_) : n(n_), ru(ru_), rb(rb_) {
        size_t size = 1;
        for (int i = 0; i < ru + rb; ++i) size *= n;
        v.assign(size, GaussRational());
    }

    size_t flat(const std::vector<int>& idx) const {
        size_t f = 0;
        for (int i : idx) f = f * n + i;
        return f;
    }
    GaussRational& at(const std::vector<int>& idx) { return v[flat(idx)]; }
    const GaussRational& at(const std::vector<int>& idx) const { return v[flat(idx)]; }
};

inline void for_each_index(int n, int rank, const std::function<void(std::vector<int>&)>& fn) {
    std::vector<int> idx(rank, 0);
    for (;;) {
        fn(idx);
        int p = rank - 1;
        while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
        if (p < 0) break;
    }
}

inline Rational multiplicity(const Exponents& e) {
    // number of distinct orderings of the multiset: total! / prod e_i!
    int total = 0;
    for (int x : e) total += x;
    Rational m(1);
    for (int k = 2; k <= total; ++k) m *= Rational(k);
    for (int x : e)
        for (int k = 2; k <= x; ++k) m /= Rational(k);
    return m;
}

/// Extract the symmetric coefficient tensor of the (s,t) bidegree part at a
/// fixed u power: part = sum T_{I|J} z^I zbar^J (summed over ordered index
/// tuples).
inline Tensor tensor_of(const SeriesC& part, int s, int t, int upow) {
    const int n = part.dim();
    Tensor T(n, s, t);
    for_each_index(n, s + t, [&](std::vector<int>& idx) {
        RealMonomial m{Exponents(n, 0), Exponents(n, 0), upow};
        for (int i = 0; i < s; ++i) m.zp[idx[i]] += 1;
        for (int i = s; i < s + t; ++i) m.zbp[idx[i]] += 1;
        const GaussRational c = part.coeff(m);
        if (c.is_zero()) return;
        T.at(idx) = c / GaussRational(multiplicity(m.zp) * multiplicity(m.zbp));
    });
    return T;
}

} // namespace cmtest
