#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermat/weights.hpp"

namespace hypermat {

/// Three two-row partitions of a common size d.
class TwoRowTriple {
 public:
  /// Throws std::invalid_argument("not a two-row triple of equal size") unless
  /// every weight satisfies a >= b >= 0 and all three sizes agree.
  TwoRowTriple(Weight2 lam, Weight2 mu, Weight2 nu);
  explicit TwoRowTriple(const TripleWeight& w) : TwoRowTriple(w.lam, w.mu, w.nu) {}

  static bool admissible(const TripleWeight& w);

  const Weight2& lam() const { return lam_; }
  const Weight2& mu() const { return mu_; }
  const Weight2& nu() const { return nu_; }
  std::int64_t d() const { return lam_.size(); }
  /// Largest second row.
  std::int64_t f() const;
  /// Sum of the second rows.
  std::int64_t e() const;

 private:
  Weight2 lam_, mu_, nu_;
};

/// Invariant dimension for two-row shapes by the piecewise closed form. A
/// negative branch value means the case analysis was misapplied and throws
/// std::logic_error instead of being clamped.
std::int64_t m_closed_form(const TwoRowTriple& t);

/// All two-row triples of size d, each weight written as (a, b) with a >= b >= 0.
std::vector<TripleWeight> two_row_triples(std::int64_t d);

struct OracleMismatch {
  TripleWeight triple;
  std::int64_t closed_form = 0;
  std::int64_t oracle = 0;
};

struct OracleReport {
  std::int64_t d_max = 0;
  std::int64_t checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Compares m_closed_form with the character-sum oracle on every two-row
/// triple of every size 0..d_max.
OracleReport verify_against_oracle(std::int64_t d_max);

/// sum over two-row triples of size d of m * dim S_lam * dim S_mu * dim S_nu.
std::int64_t graded_dimension(std::int64_t d);

/// C(d + 7, 7): the dimension of degree-d polynomials in eight variables.
std::int64_t polynomial_space_dimension(std::int64_t d);

}  // namespace hypermat
