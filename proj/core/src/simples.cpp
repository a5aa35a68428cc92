#include "hypermat/simples.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypermat/characters.hpp"
#include "hypermat/euler.hpp"
#include "hypermat/symchar.hpp"

namespace hypermat {

namespace {

constexpr std::array<std::pair<ModuleId, std::string_view>, 15> kModuleNames{{
    {ModuleId::E, "E"},
    {ModuleId::D1, "D1"},
    {ModuleId::D122, "D122"},
    {ModuleId::D212, "D212"},
    {ModuleId::D221, "D221"},
    {ModuleId::D5, "D5"},
    {ModuleId::S, "S"},
    {ModuleId::G6, "G6"},
    {ModuleId::S_h, "S_h"},
    {ModuleId::S_h_sqrt, "S_h_sqrt"},
    {ModuleId::h_inv1, "h_inv1"},
    {ModuleId::F_mod, "F_mod"},
    {ModuleId::Sh_mod_S, "Sh_mod_S"},
    {ModuleId::Shs_mod_G6, "Shs_mod_G6"},
    {ModuleId::Zero, "Zero"},
}};

Partition partition_or_throw(const std::vector<std::int64_t>& parts) {
  std::vector<int> narrow;
  for (auto p : parts) {
    if (p > std::numeric_limits<int>::max()) throw std::overflow_error("partition part too large");
    narrow.push_back(static_cast<int>(p));
  }
  return Partition(std::move(narrow));
}

}  // namespace

std::string_view name(ModuleId m) {
  for (const auto& [id, text] : kModuleNames)
    if (id == m) return text;
  return "?";
}

std::string_view name(SimpleId s) { return name(to_module(s)); }

std::optional<ModuleId> parse_module(std::string_view s) {
  if (s == "D0") return ModuleId::E;
  for (const auto& [id, text] : kModuleNames)
    if (text == s) return id;
  return std::nullopt;
}

std::optional<SimpleId> parse_simple(std::string_view s) {
  auto m = parse_module(s);
  if (!m) return std::nullopt;
  return as_simple(*m);
}

ModuleId to_module(SimpleId s) { return static_cast<ModuleId>(static_cast<int>(s)); }

std::optional<SimpleId> as_simple(ModuleId m) {
  if (static_cast<int>(m) <= static_cast<int>(ModuleId::G6)) return static_cast<SimpleId>(static_cast<int>(m));
  return std::nullopt;
}

int subspace_factor(SimpleId s) {
  switch (s) {
    case SimpleId::D122: return 0;
    case SimpleId::D212: return 1;
    case SimpleId::D221: return 2;
    default: throw std::invalid_argument(std::string(name(s)) + " is not a subspace-variety simple");
  }
}

TripleWeight witness_weight(SimpleId s) {
  switch (s) {
    case SimpleId::S: return TripleWeight::diagonal(0);
    case SimpleId::G6: return TripleWeight::diagonal(1);
    case SimpleId::D5: return TripleWeight::diagonal(2);
    case SimpleId::D1: return TripleWeight::diagonal(3);
    case SimpleId::E: return TripleWeight::diagonal(4);
    case SimpleId::D122: return {{3, 1}, {2, 2}, {2, 2}};
    case SimpleId::D212: return {{2, 2}, {3, 1}, {2, 2}};
    case SimpleId::D221: return {{2, 2}, {2, 2}, {3, 1}};
  }
  throw std::invalid_argument("unknown simple");
}

bool in_subspace_highest_weights(const Weight2& lam) { return is_dominant(lam) && lam.a >= 3 && lam.b <= 1; }

std::int64_t subspace_simple_mult(const Weight2& a, const Weight2& b, const Weight2& c) {
  if (!in_subspace_highest_weights(a)) return 0;
  if (a.size() != b.size() || a.size() != c.size()) return 0;

  // S_{(k_1..k_4) + t(1,1,1,1)}(B (x) C) = S_k(B (x) C) (x) det(B (x) C)^t and
  // det(B (x) C) = S_{(2,2)}B (x) S_{(2,2)}C, so a negative last part is
  // moved onto the other two factors.
  const std::int64_t t = std::min<std::int64_t>(a.b, 0);
  const std::vector<std::int64_t> shape{checked_sub(checked_sub(a.a, 2), t), checked_sub(1, t), checked_sub(1, t),
                                        checked_sub(a.b, t)};
  const Weight2 b_shifted = b.shifted(checked_mul(-2, t));
  const Weight2 c_shifted = c.shifted(checked_mul(-2, t));
  if (b_shifted.b < 0 || c_shifted.b < 0) return 0;
  return kron_invariant_dim(partition_or_throw(shape), to_partition(b_shifted), to_partition(c_shifted));
}

std::optional<std::int64_t> mult_simple(SimpleId s, const TripleWeight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("weight " + to_string(w) + " is not dominant");
  switch (s) {
    case SimpleId::S: return mult_S(w);
    case SimpleId::E: return mult_E(w);
    case SimpleId::D122: return subspace_simple_mult(w.lam, w.mu, w.nu);
    case SimpleId::D212: return subspace_simple_mult(w.mu, w.lam, w.nu);
    case SimpleId::D221: return subspace_simple_mult(w.nu, w.lam, w.mu);
    case SimpleId::D5: {
      const std::int64_t value = mult_Sh(w) - mult_S(w) - mult_E(w);
      if (value < 0) throw std::logic_error("negative D5 multiplicity at " + to_string(w));
      return value;
    }
    case SimpleId::D1:
      if (mult_E(w) != 0) return std::nullopt;
      return euler_mult(w);
    case SimpleId::G6: return mult_simple(SimpleId::D1, fourier(w));
  }
  throw std::invalid_argument("unknown simple");
}

std::vector<SimpleId> CompositionSeries::flattened() const {
  std::vector<SimpleId> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

CompositionSeries composition_series(ModuleId m) {
  using enum SimpleId;
  const std::vector<SimpleId> subspaces{D122, D212, D221};
  switch (m) {
    case ModuleId::S_h: return {m, {{S}, {D5}, {E}}};
    case ModuleId::h_inv1: return {m, {{S}, {D5}}};
    case ModuleId::Sh_mod_S: return {m, {{D5}, {E}}};
    case ModuleId::S_h_sqrt: return {m, {{G6}, subspaces, {D1}}};
    case ModuleId::F_mod: return {m, {{G6}, subspaces}};
    case ModuleId::Shs_mod_G6: return {m, {subspaces, {D1}}};
    default: throw std::invalid_argument("no composition series recorded for module " + std::string(name(m)));
  }
}

SimpleId fourier_on_simples(SimpleId s) {
  switch (s) {
    case SimpleId::S: return SimpleId::E;
    case SimpleId::E: return SimpleId::S;
    case SimpleId::G6: return SimpleId::D1;
    case SimpleId::D1: return SimpleId::G6;
    default: return s;
  }
}

SimpleId duality_on_simples(SimpleId s) { return s; }

}  // namespace hypermat
