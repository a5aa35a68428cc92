#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermat/weights.hpp"

namespace hypermat {

/// Thrown when a limit over r did not settle before the hard cap.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest r at which stabilized_limit will evaluate a sequence.
inline constexpr std::int64_t kStabilizationCap = 512;

/// Value of an eventually constant integer sequence r -> seq(r).
///
/// Starts at r0 = 3 * max_abs_entry + 8 and accepts the first window of three
/// consecutive equal values r0, r0 + 1, r0 + 2, stepping r0 by 8 otherwise.
/// Throws StabilizationError("stabilization not reached") past r = 512.
std::int64_t stabilized_limit(const std::function<std::int64_t(std::int64_t)>& seq, std::int64_t max_abs_entry);

/// Characters of the polynomial ring and its relatives.
enum class NamedCharacter { S, SymV, E, S_h, S_h_sqrt };

std::string_view name(NamedCharacter c);
std::optional<NamedCharacter> parse_named_character(std::string_view s);

/// Polynomial functions on V. Only non-positive weights occur.
std::int64_t mult_S(const TripleWeight& w);
/// Polynomials on the dual space: two-row partitions of a common size.
std::int64_t mult_SymV(const TripleWeight& w);
/// SymV twisted by det(V), i.e. shifted by (4,4) in every factor.
std::int64_t mult_E(const TripleWeight& w);
/// Localization at the hyperdeterminant: lim_r mult_S(w - 2r).
std::int64_t mult_Sh(const TripleWeight& w);
/// mult_Sh(w + (1,1)^3).
std::int64_t mult_Sh_sqrt(const TripleWeight& w);

std::int64_t mult(NamedCharacter c, const TripleWeight& w);

/// A box of triple weights: every entry in [lo, hi], every factor dominant,
/// optionally with |lam|, |mu|, |nu| restricted to [min_size, max_size].
struct WeightWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::optional<std::int64_t> min_size;
  std::optional<std::int64_t> max_size;

  bool contains(const TripleWeight& w) const;
};

/// Calls fn on every weight of the window in increasing TripleWeight order.
void for_each_weight(const WeightWindow& window, const std::function<void(const TripleWeight&)>& fn);

/// A finitely supported element of the representation ring, restricted to a window.
struct GLClass {
  std::map<TripleWeight, std::int64_t> coeffs;
  std::optional<WeightWindow> window;

  void add(const TripleWeight& w, std::int64_t c);
  std::int64_t at(const TripleWeight& w) const;
  /// Sum of coefficient * dim over the support (dominant keys only).
  std::int64_t total_dimension() const;
};

GLClass dump_window(NamedCharacter c, const WeightWindow& window);

}  // namespace hypermat
