#include "hypermat/multiplicities.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypermat/symchar.hpp"

namespace hypermat {

namespace {

bool two_row(const Weight2& w) { return w.b >= 0 && w.a >= w.b; }

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

TwoRowTriple::TwoRowTriple(Weight2 lam, Weight2 mu, Weight2 nu) : lam_(lam), mu_(mu), nu_(nu) {
  if (!admissible({lam, mu, nu})) throw std::invalid_argument("not a two-row triple of equal size");
}

bool TwoRowTriple::admissible(const TripleWeight& w) {
  return two_row(w.lam) && two_row(w.mu) && two_row(w.nu) && w.lam.size() == w.mu.size() &&
         w.lam.size() == w.nu.size();
}

std::int64_t TwoRowTriple::f() const { return std::max({lam_.b, mu_.b, nu_.b}); }

std::int64_t TwoRowTriple::e() const { return checked_add(checked_add(lam_.b, mu_.b), nu_.b); }

std::int64_t m_closed_form(const TwoRowTriple& t) {
  const std::int64_t d = t.d();
  const std::int64_t e = t.e();
  const std::int64_t f = t.f();
  const bool e_odd = (e % 2) != 0;

  if (e < 2 * f) return 0;

  std::int64_t m = 0;
  if (e >= d - 1) {
    m = floor_half(d) - f + 1;
    if (e_odd && d % 2 == 0) m -= 1;
  } else {
    m = floor_half(e + 1) - f + 1;
    if (e_odd) m -= 1;
  }
  if (m < 0) throw std::logic_error("internal inconsistency: closed form negative at " + to_string(TripleWeight{t.lam(), t.mu(), t.nu()}));
  return m;
}

std::vector<TripleWeight> two_row_triples(std::int64_t d) {
  std::vector<Weight2> shapes;
  for (std::int64_t b = 0; 2 * b <= d; ++b) shapes.push_back({d - b, b});
  std::vector<TripleWeight> out;
  out.reserve(shapes.size() * shapes.size() * shapes.size());
  for (const auto& x : shapes)
    for (const auto& y : shapes)
      for (const auto& z : shapes) out.push_back({x, y, z});
  return out;
}

OracleReport verify_against_oracle(std::int64_t d_max) {
  if (d_max > default_characters().max_degree()) throw std::domain_error("d_max exceeds the configured degree cap");

  OracleReport report;
  report.d_max = d_max;
  for (std::int64_t d = 0; d <= d_max; ++d) {
    for (const auto& w : two_row_triples(d)) {
      const std::int64_t closed = m_closed_form(TwoRowTriple(w));
      const std::int64_t oracle = kron_invariant_dim(to_partition(w.lam), to_partition(w.mu), to_partition(w.nu));
      ++report.checked;
      if (closed != oracle) report.mismatches.push_back({w, closed, oracle});
    }
  }
  return report;
}

std::int64_t graded_dimension(std::int64_t d) {
  std::int64_t total = 0;
  for (const auto& w : two_row_triples(d)) {
    const std::int64_t m = m_closed_form(TwoRowTriple(w));
    if (m == 0) continue;
    total = checked_add(total, checked_mul(m, checked_mul(schur_dim_gl2(w.lam),
                                                          checked_mul(schur_dim_gl2(w.mu), schur_dim_gl2(w.nu)))));
  }
  return total;
}

std::int64_t polynomial_space_dimension(std::int64_t d) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d + 7), 7);
  if (!out.fits_slong_p()) throw std::overflow_error("binomial coefficient too large");
  return out.get_si();
}

}  // namespace hypermat
