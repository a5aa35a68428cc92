#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hypermat {

/// Overflow-checked integer helpers. Weight arithmetic never wraps; an
/// overflow throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// A weight (a, b) of GL_2, indexing the Schur functor S_{(a,b)}.
struct Weight2 {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Weight2&, const Weight2&) = default;
  friend bool operator==(const Weight2&, const Weight2&) = default;

  std::int64_t size() const { return checked_add(a, b); }
  Weight2 shifted(std::int64_t by) const { return {checked_add(a, by), checked_add(b, by)}; }
};

/// Index (lambda, mu, nu) of an irreducible representation of GL(A) x GL(B) x GL(C).
/// Ordering is lexicographic on the 6-tuple (lam.a, lam.b, mu.a, mu.b, nu.a, nu.b).
struct TripleWeight {
  Weight2 lam;
  Weight2 mu;
  Weight2 nu;

  friend auto operator<=>(const TripleWeight&, const TripleWeight&) = default;
  friend bool operator==(const TripleWeight&, const TripleWeight&) = default;

  /// Adds `by` to every one of the six entries.
  TripleWeight shifted(std::int64_t by) const { return {lam.shifted(by), mu.shifted(by), nu.shifted(by)}; }

  /// The weight (a, a) in all three factors.
  static TripleWeight diagonal(std::int64_t a) { return {{a, a}, {a, a}, {a, a}}; }

  std::int64_t max_abs_entry() const;
};

struct BottResult {
  int sign = 0;        // -1, 0 or +1
  Weight2 normalized;  // meaningful only when sign != 0
};

bool is_dominant(const Weight2& w);
bool is_dominant(const TripleWeight& w);

/// (a, b) -> (-b, -a), the weight of the dual representation.
Weight2 dual(const Weight2& w);

/// Straightens a possibly non-dominant weight with rho = (1, 0).
/// Sign 0 exactly on the line b = a + 1.
BottResult bott_normalize(const Weight2& w);

/// (a, b) -> (4 - b, 4 - a): dualize, then twist by det^4.
Weight2 fourier(const Weight2& w);
TripleWeight fourier(const TripleWeight& w);

std::string to_string(const Weight2& w);
std::string to_string(const TripleWeight& w);
std::ostream& operator<<(std::ostream& os, const Weight2& w);
std::ostream& operator<<(std::ostream& os, const TripleWeight& w);

}  // namespace hypermat
