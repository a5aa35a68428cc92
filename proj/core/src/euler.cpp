#include "hypermat/euler.hpp"

#include <stdexcept>

#include "hypermat/characters.hpp"

namespace hypermat {

Weight2 shift_vector(ShiftSlot slot, std::int64_t r) { return slot == ShiftSlot::First ? Weight2{r, 0} : Weight2{0, r}; }

std::array<ShiftIndex, 8> shift_patterns(std::int64_t r) {
  std::array<ShiftIndex, 8> out;
  for (int bits = 0; bits < 8; ++bits) {
    auto slot = [bits](int k) { return (bits >> k) & 1 ? ShiftSlot::Second : ShiftSlot::First; };
    out[bits] = {slot(2), slot(1), slot(0), r};
  }
  return out;
}

std::int64_t euler_term(const TripleWeight& w, const ShiftIndex& shift) {
  auto straighten = [r = shift.r](const Weight2& x, ShiftSlot slot) {
    const Weight2 moved = shift_vector(slot, r);
    return bott_normalize({checked_add(checked_sub(x.a, 4), moved.a), checked_add(checked_sub(x.b, 4), moved.b)});
  };
  const BottResult a = straighten(w.lam, shift.i);
  const BottResult b = straighten(w.mu, shift.j);
  const BottResult c = straighten(w.nu, shift.k);
  const int sign = a.sign * b.sign * c.sign;
  if (sign == 0) return 0;
  return sign * mult_SymV({a.normalized, b.normalized, c.normalized});
}

std::int64_t euler_mult(const TripleWeight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("euler_mult needs a dominant weight, got " + to_string(w));
  return stabilized_limit(
      [&w](std::int64_t r) {
        std::int64_t sum = 0;
        for (const auto& shift : shift_patterns(r)) sum = checked_add(sum, euler_term(w, shift));
        return checked_neg(sum);
      },
      w.max_abs_entry());
}

}  // namespace hypermat
