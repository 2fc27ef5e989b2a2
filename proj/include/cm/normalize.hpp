#pragma once

#include "cm/hypersurface.hpp"
#include "cm/holo_map.hpp"
#include "cm/initial_value.hpp"

#include <vector>

namespace cm {

struct SolveLogEntry {
    int weight = 0;
    int unknowns = 0;
    int equations = 0;
    int rank = 0;
};

/// Result of the order-by-order normalization: the map with initial value
/// sigma, the transformed surface in normal form, and the per-weight solve
/// log.
struct NormalizationResult {
    HoloMap map;
    Hypersurface surface;
    InitialValue sigma;
    std::vector<SolveLogEntry> log;
};

/// Unique normalization of M with initial value sigma, through weight K.
NormalizationResult normalize(const Hypersurface& M, const InitialValue& sigma, int K);

/// Exact difference of the two sides of the defining identity for a
/// normalization result; zero by construction.
RealSeries verify_identity_residual(const Hypersurface& M, const NormalizationResult& result);

/// The weight-k operator
///   L_k(f, g, F*) = [Re{2<f(z,w), Cz> + i g(z,w)} - F*(Cz, conj Cz, rho u)]
/// at w = u + i<z,z>, for weighted-homogeneous inputs (f of weight k-1, g of
/// weight k, F* of weight k).
RealSeries apply_L(int k, const std::vector<HoloSeries>& f, const HoloSeries& g,
                   const RealSeries& Fstar, const Signature& sig, const GMatrix& C,
                   const Rational& rho);

struct LAnalysis {
    int weight = 0;
    int domain_dim = 0;    // real dimension of (f, g, NP_k)
    int codomain_dim = 0;  // real dimension of the weight-k target space
    int rank = 0;
    int kernel_dim = 0;
    bool surjective = false;
};

/// Exact rank/kernel analysis of L_k with F* constrained to the normal-form
/// subspace NP_k.
LAnalysis analyze_L(int k, const Signature& sig);

/// Kernel dimension of L_k for the definite signature (n, n).
int kernel_dimension(int k, int n);

} // namespace cm
