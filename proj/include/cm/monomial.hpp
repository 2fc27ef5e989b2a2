#pragma once

#include <numeric>
#include <vector>

namespace cm {

/// Exponent vector over the n coordinates z^1..z^n.
using Exponents = std::vector<int>;

inline int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Monomial z^I zbar^J u^k.  Weight grading: wt(z) = wt(zbar) = 1, wt(u) = 2.
struct RealMonomial {
    Exponents zp, zbp;
    int up = 0;

    int weight() const { return degree(zp) + degree(zbp) + 2 * up; }
    std::pair<int, int> bidegree() const { return {degree(zp), degree(zbp)}; }
    RealMonomial conjugate() const { return {zbp, zp, up}; }
    bool is_self_conjugate() const { return zp == zbp; }

    friend bool operator==(const RealMonomial& a, const RealMonomial& b) {
        return a.up == b.up && a.zp == b.zp && a.zbp == b.zbp;
    }
    friend bool operator!=(const RealMonomial& a, const RealMonomial& b) { return !(a == b); }
};

/// Canonical term order: ascending (weight, |I|, I lex, J lex, k).
struct RealMonomialLess {
    bool operator()(const RealMonomial& a, const RealMonomial& b) const {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        const int da = degree(a.zp), db = degree(b.zp);
        if (da != db) return da < db;
        if (a.zp != b.zp) return a.zp < b.zp;
        if (a.zbp != b.zbp) return a.zbp < b.zbp;
        return a.up < b.up;
    }
};

/// Holomorphic monomial z^I w^m with wt(w) = 2.
struct HoloMonomial {
    Exponents zp;
    int wp = 0;

    int weight() const { return degree(zp) + 2 * wp; }

    friend bool operator==(const HoloMonomial& a, const HoloMonomial& b) {
        return a.wp == b.wp && a.zp == b.zp;
    }
    friend bool operator!=(const HoloMonomial& a, const HoloMonomial& b) { return !(a == b); }
};

struct HoloMonomialLess {
    bool operator()(const HoloMonomial& a, const HoloMonomial& b) const {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        const int da = degree(a.zp), db = degree(b.zp);
        if (da != db) return da < db;
        if (a.zp != b.zp) return a.zp < b.zp;
        return a.wp < b.wp;
    }
};

} // namespace cm
