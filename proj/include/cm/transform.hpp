#pragma once

#include "cm/holo_map.hpp"
#include "cm/hypersurface.hpp"

namespace cm {

/// h evaluated at w = u + i F(z, zbar, u), expanded and truncated.
SeriesC substitute_w(const HoloSeries& h, const Hypersurface& M);

/// Defining series of the image surface phi(M): the unique truncated real
/// series F* with Im g(z, u+iF) = F*(f(z,u+iF), conj, Re g(z,u+iF)), solved
/// coefficient-by-coefficient in increasing weight.  Errors if the image
/// weight-2 part is not the signature form.
Hypersurface transform_hypersurface(const HoloMap& phi, const Hypersurface& M);

/// Residual of the defining identity for an explicit output candidate.
RealSeries transform_residual(const HoloMap& phi, const Hypersurface& M,
                              const RealSeries& F_out);

} // namespace cm
