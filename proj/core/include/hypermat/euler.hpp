#pragma once

#include <array>
#include <cstdint>

#include "hypermat/weights.hpp"

namespace hypermat {

/// Which entry of a weight receives the shift r: (r, 0) or (0, r).
enum class ShiftSlot { First, Second };

/// The shift pattern (I, J, K) together with r.
struct ShiftIndex {
  ShiftSlot i = ShiftSlot::First;
  ShiftSlot j = ShiftSlot::First;
  ShiftSlot k = ShiftSlot::First;
  std::int64_t r = 0;
};

/// (r, 0) for ShiftSlot::First, (0, r) for ShiftSlot::Second.
Weight2 shift_vector(ShiftSlot slot, std::int64_t r);

/// All eight shift patterns at a given r.
std::array<ShiftIndex, 8> shift_patterns(std::int64_t r);

/// Signed contribution of one pattern at finite r: every factor (x - (4,4)) + shift
/// is Bott-straightened and the product of signs multiplies mult_SymV of the result.
std::int64_t euler_term(const TripleWeight& w, const ShiftIndex& shift);

/// Multiplicity of w in the Euler characteristic of the pushforward of the
/// structure sheaf from the desingularization of the Segre cone:
/// lim_r ( - sum over the eight patterns of euler_term ). The minus sign is
/// applied once, after the sum. Requires w componentwise dominant.
std::int64_t euler_mult(const TripleWeight& w);

}  // namespace hypermat
