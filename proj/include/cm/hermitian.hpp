#pragma once

#include "cm/errors.hpp"
#include "cm/series.hpp"

namespace cm {

/// Signature of the Hermitian form <z,z> = sum_{a<=e} |z^a|^2 - sum_{a>e} |z^a|^2.
struct Signature {
    int n;
    int e;

    Signature(int n_, int e_) : n(n_), e(e_) {
        if (n < 1) throw precondition_error("dimension must be positive");
        if (e < 1 || e > n || 2 * e < n)
            throw precondition_error("signature requires n/2 <= e <= n, e >= 1");
    }

    /// +1 for a < e, -1 otherwise (0-based index).
    int eps(int a) const { return a < e ? 1 : -1; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.n == b.n && a.e == b.e;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

/// The form <z,z> as a real series, truncated at trunc (>= 2).
RealSeries hermitian_form(const Signature& sig, int trunc = 2);

/// <A, B> = sum_a eps_a A^a conj(B^a) for component series.
SeriesC hermitian_pairing(const Signature& sig, const std::vector<SeriesC>& A,
                          const std::vector<SeriesC>& B);

/// Trace operator sum_a eps_a d^2/dz^a dzbar^a.  Truncation drops by 2.
SeriesC laplacian(const SeriesC& F, const Signature& sig);

} // namespace cm
