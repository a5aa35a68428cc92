#include "hypermat/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypermat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("weight arithmetic overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("weight arithmetic overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("weight arithmetic overflow");
  return out;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t TripleWeight::max_abs_entry() const {
  std::int64_t m = 0;
  for (std::int64_t v : {lam.a, lam.b, mu.a, mu.b, nu.a, nu.b}) m = std::max(m, v < 0 ? checked_neg(v) : v);
  return m;
}

bool is_dominant(const Weight2& w) { return w.a >= w.b; }

bool is_dominant(const TripleWeight& w) { return is_dominant(w.lam) && is_dominant(w.mu) && is_dominant(w.nu); }

Weight2 dual(const Weight2& w) { return {checked_neg(w.b), checked_neg(w.a)}; }

BottResult bott_normalize(const Weight2& w) {
  const std::int64_t first = checked_add(w.a, 1);
  if (first > w.b) return {+1, w};
  if (first == w.b) return {0, {}};
  // sort(w + rho) swaps the two entries; subtract rho again.
  return {-1, {checked_sub(w.b, 1), first}};
}

Weight2 fourier(const Weight2& w) { return {checked_sub(4, w.b), checked_sub(4, w.a)}; }

TripleWeight fourier(const TripleWeight& w) { return {fourier(w.lam), fourier(w.mu), fourier(w.nu)}; }

std::string to_string(const Weight2& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string to_string(const TripleWeight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight2& w) { return os << '[' << w.a << ',' << w.b << ']'; }

std::ostream& operator<<(std::ostream& os, const TripleWeight& w) {
  return os << '[' << w.lam << ',' << w.mu << ',' << w.nu << ']';
}

}  // namespace hypermat
