#include "hypermat/characters.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "hypermat/multiplicities.hpp"
#include "hypermat/symchar.hpp"

namespace hypermat {

std::int64_t stabilized_limit(const std::function<std::int64_t(std::int64_t)>& seq, std::int64_t max_abs_entry) {
  for (std::int64_t r0 = checked_add(checked_mul(3, max_abs_entry), 8); checked_add(r0, 2) <= kStabilizationCap;
       r0 += 8) {
    const std::int64_t first = seq(r0);
    if (seq(r0 + 1) == first && seq(r0 + 2) == first) return first;
  }
  throw StabilizationError("stabilization not reached");
}

namespace {

constexpr std::array<std::pair<NamedCharacter, std::string_view>, 5> kNames{{
    {NamedCharacter::S, "S"},
    {NamedCharacter::SymV, "SymV"},
    {NamedCharacter::E, "E"},
    {NamedCharacter::S_h, "S_h"},
    {NamedCharacter::S_h_sqrt, "S_h_sqrt"},
}};

}  // namespace

std::string_view name(NamedCharacter c) {
  for (const auto& [id, text] : kNames)
    if (id == c) return text;
  return "?";
}

std::optional<NamedCharacter> parse_named_character(std::string_view s) {
  for (const auto& [id, text] : kNames)
    if (text == s) return id;
  return std::nullopt;
}

std::int64_t mult_SymV(const TripleWeight& w) {
  if (!TwoRowTriple::admissible(w)) return 0;
  return m_closed_form(TwoRowTriple(w));
}

std::int64_t mult_S(const TripleWeight& w) { return mult_SymV({dual(w.lam), dual(w.mu), dual(w.nu)}); }

std::int64_t mult_E(const TripleWeight& w) { return mult_SymV(w.shifted(-4)); }

std::int64_t mult_Sh(const TripleWeight& w) {
  return stabilized_limit([&w](std::int64_t r) { return mult_S(w.shifted(checked_mul(-2, r))); }, w.max_abs_entry());
}

std::int64_t mult_Sh_sqrt(const TripleWeight& w) { return mult_Sh(w.shifted(1)); }

std::int64_t mult(NamedCharacter c, const TripleWeight& w) {
  switch (c) {
    case NamedCharacter::S: return mult_S(w);
    case NamedCharacter::SymV: return mult_SymV(w);
    case NamedCharacter::E: return mult_E(w);
    case NamedCharacter::S_h: return mult_Sh(w);
    case NamedCharacter::S_h_sqrt: return mult_Sh_sqrt(w);
  }
  throw std::invalid_argument("unknown character");
}

bool WeightWindow::contains(const TripleWeight& w) const {
  for (const Weight2* x : {&w.lam, &w.mu, &w.nu}) {
    if (!is_dominant(*x) || x->b < lo || x->a > hi) return false;
    if (min_size && x->size() < *min_size) return false;
    if (max_size && x->size() > *max_size) return false;
  }
  return true;
}

void for_each_weight(const WeightWindow& window, const std::function<void(const TripleWeight&)>& fn) {
  std::vector<Weight2> factors;
  for (std::int64_t a = window.lo; a <= window.hi; ++a)
    for (std::int64_t b = window.lo; b <= a; ++b) {
      const Weight2 x{a, b};
      if (window.min_size && x.size() < *window.min_size) continue;
      if (window.max_size && x.size() > *window.max_size) continue;
      factors.push_back(x);
    }
  std::sort(factors.begin(), factors.end());
  for (const auto& x : factors)
    for (const auto& y : factors)
      for (const auto& z : factors) fn({x, y, z});
}

void GLClass::add(const TripleWeight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
  }
}

std::int64_t GLClass::at(const TripleWeight& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? 0 : it->second;
}

std::int64_t GLClass::total_dimension() const {
  std::int64_t total = 0;
  for (const auto& [w, c] : coeffs) {
    const std::int64_t dim = checked_mul(schur_dim_gl2(w.lam), checked_mul(schur_dim_gl2(w.mu), schur_dim_gl2(w.nu)));
    total = checked_add(total, checked_mul(c, dim));
  }
  return total;
}

GLClass dump_window(NamedCharacter c, const WeightWindow& window) {
  GLClass out;
  out.window = window;
  for_each_weight(window, [&](const TripleWeight& w) { out.add(w, mult(c, w)); });
  return out;
}

}  // namespace hypermat
