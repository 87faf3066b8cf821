#pragma once

#include <cstdint>

#include "affinemc/motion_vector.hpp"

namespace affinemc {

/// Signed exp-Golomb (se(v)) code length in bits; a zero component costs 1.
int eg_signed_len(std::int32_t v);

/// Mode flag + candidate index + one quarter-pel MVD.
int bits_translational(const MotionVector& mvd);

/// Two mode flags + candidate index + two quarter-pel MVDs.
int bits_affine_aamvp(const MotionVector& mvd0, const MotionVector& mvd1);

/// Two mode flags + skip flag; the single AMM candidate needs no index.
int bits_affine_amm();

/// lambda = 0.85 * 2^((qp-12)/3)
double lambda_from_qp(int qp);

/// cost = sse + lambda * bits
double rd_cost(std::uint64_t sse, int bits, double lambda);

}  // namespace affinemc
