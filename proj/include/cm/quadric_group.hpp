#pragma once

#include "cm/initial_value.hpp"
#include "cm/normalize.hpp"

namespace cm {

/// Series expansion of the fractional-linear hyperquadric automorphism
///   z* = C(z - aw) / (1 + 2i<z,a> - w(r + i<a,a>)),
///   w* = rho w / (1 + 2i<z,a> - w(r + i<a,a>)),
/// truncated multiplicatively at K.
HoloMap phi_sigma_series(const InitialValue& sigma, int K);

/// Group product, read off the jets of the composed series.
InitialValue sigma_compose(const InitialValue& s1, const InitialValue& s2);

/// True iff the normalization with initial value sigma carries the
/// normal-form surface M to itself through weight K.
bool stabilizes(const Hypersurface& M, const InitialValue& sigma, int K);

} // namespace cm
