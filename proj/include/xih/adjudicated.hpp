#pragma once

// Pinned outcomes of cross-route adjudication.
//
// Several identities in this library exist in two algebraic dress-ups: the
// display form we started from and a self-consistent form fixed by comparing
// independent evaluation routes (direct quadrature vs. series). Whenever the
// two disagreed, both were implemented, evaluated side by side, and the
// variant agreeing with the independent route to near machine precision was
// pinned here. Verification reports carry the rejected variant's deviation in
// `variant_notes` so the adjudication stays visible at run time.

#include "xih/types.hpp"

namespace xih {

// Middle term of the completed-zeta series identity.
//   GAMMA_ZETA : pi^{-s/2} Gamma(s/2) zeta(s)        (self-consistent)
//   XI_QUOTIENT: xi(s) / (s (s - 1))                 (display; low by 2x)
// GAMMA_ZETA equals 2 xi(s) / (s (s - 1)) and matches the contour integral
// to ~1e-15 relative; XI_QUOTIENT is off by 0.15..1.07 absolute on the
// reference points.
enum class MiddleTermVariant { GAMMA_ZETA, XI_QUOTIENT };
inline constexpr MiddleTermVariant kMiddleTerm = MiddleTermVariant::GAMMA_ZETA;

// Transform-side normalization of the n-dimensional boundary integral.
//   BRIDGED: per-axis factor pi * h(2 pi z_l), no outer power of y; equals
//            the convolution route with global constant exactly 1.
//   PRINTED: per-axis factor h(z_l) with outer y^{1-n}; the implied constant
//            is not constant across (y, n) (0.411 vs 0.358 on the reference
//            pairs), so no single normalization can reconcile it.
enum class TransformVariant { BRIDGED, PRINTED };
inline constexpr TransformVariant kTransform = TransformVariant::BRIDGED;
inline constexpr double kTransformConstant = 1.0;  // pinned global constant

// Leading term and term scaling of the binomial resolvent chain.
//   DERIVED        : 1/(s - n/2) leading; k-term scale (pi m)^{-A_k} with
//                    A_k = s/2 + (2k - n)/4. Matches the Laplace-transform
//                    route to ~1e-9 absolute for n = 1, 2, 3.
//   PRINTED_LEADING: derived k-terms but 1/(s - 1/2) leading (display).
//   PRINTED_SCALE  : display final form, m^{-A_k} scale (pi only inside the
//                    incomplete gamma).
//   PRINTED_TPOWER : display middle form; the k-independent t-power collapses
//                    every k-term to (1/2) m^{-B} gammainc_lower(B, m) with
//                    B = (s + n/2)/2.
// All three display variants disagree with the Laplace route for n >= 2 by
// O(0.1..1); deviations are recorded in variant_notes.
enum class ChainVariant { DERIVED, PRINTED_LEADING, PRINTED_SCALE, PRINTED_TPOWER };
inline constexpr ChainVariant kChain = ChainVariant::DERIVED;

// Half-plane series convention. Under TWO_PI the bridged evaluator reproduces
// the Poisson integral at the original point (x, y); under PLAIN it lands on
// the rescaled point (2 pi x, 2 pi y). TWO_PI is pinned as the continuation
// of the boundary data at face value.
inline constexpr Convention kConvention = Convention::TWO_PI;

// Discrete-Laplacian budget constant: |Lap u| <= C h^2 + stencil quadrature
// slack. Calibrated once on the n = 1 extension at (x, y) = (0, 2) and kept
// fixed for every dimension.
inline constexpr double kHarmonicityC = 1.0;

}  // namespace xih
