#pragma once

#include <cstddef>
#include <cstdint>

#include "projframe/desargues.hpp"
#include "projframe/frames.hpp"
#include "projframe/group.hpp"
#include "projframe/random.hpp"

namespace projframe {

/// Resampling loops give up after this many draws.
inline constexpr int kMaxResamples = 1000;

/// Adapted frame centered at (1:0:...:0): generating basis e_0 plus random
/// integer vectors with entries in [-bound, bound], resampled until
/// nonsingular. Throws Error{InvalidArgument} for n < 2 or an exhausted cap.
AdaptedFrame gen_adapted_frame(std::size_t n, Rng& rng, std::int64_t bound);

/// Frame generated by A''_0 = A_0, A''_i = a_i A_0 + h A_i over r's
/// generating basis. Throws Error{InvalidH} when h = 0.
AdaptedFrame gen_perspective_mate(const AdaptedFrame& r, const Rational& h, const Vec& a);

enum class HChoice { Any, One, NotOne };

/// Random strict coefficients: every a_i nonzero, h nonzero (and fixed by
/// `choice`), e nonzero.
PerspectiveCoeffs gen_strict_coeffs(std::size_t n, Rng& rng, std::int64_t bound, HChoice choice);

/// Random element of G in block form relative to `ref`.
GroupElement gen_group_element(const AdaptedFrame& ref, Rng& rng, std::int64_t bound);

/// Random element of H relative to `ref` (covector entries may be zero).
GroupElement gen_h_element(const AdaptedFrame& ref, Rng& rng, std::int64_t bound);

/// Random point inside the charts of both frames.
ProjPoint gen_chart_point(const AdaptedFrame& f1, const AdaptedFrame& f2, Rng& rng, std::int64_t bound);

/// Random n x n integer matrix, resampled until invertible.
Mat gen_invertible(std::size_t n, Rng& rng, std::int64_t bound);

}  // namespace projframe
