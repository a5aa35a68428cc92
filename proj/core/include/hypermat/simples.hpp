#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypermat/weights.hpp"

namespace hypermat {

/// The eight simple equivariant D-modules on 2x2x2 hypermatrices.
/// D0 is accepted as another name for E when parsing.
enum class SimpleId { E, D1, D122, D212, D221, D5, S, G6 };

inline constexpr std::array<SimpleId, 8> kAllSimples{SimpleId::E,    SimpleId::D1, SimpleId::D122, SimpleId::D212,
                                                     SimpleId::D221, SimpleId::D5, SimpleId::S,    SimpleId::G6};

/// Simples together with the composite modules that local cohomology and the
/// localization filtrations produce.
enum class ModuleId {
  E, D1, D122, D212, D221, D5, S, G6,
  S_h,         // localization at the hyperdeterminant
  S_h_sqrt,    // S_h * sqrt(h)
  h_inv1,      // D-submodule of S_h generated by 1/h
  F_mod,       // extension of D122 + D212 + D221 by G6 inside S_h * sqrt(h)
  Sh_mod_S,    // S_h / S
  Shs_mod_G6,  // (S_h * sqrt(h)) / G6
  Zero,
};

std::string_view name(SimpleId s);
std::string_view name(ModuleId m);
std::optional<SimpleId> parse_simple(std::string_view s);
std::optional<ModuleId> parse_module(std::string_view s);

ModuleId to_module(SimpleId s);
std::optional<SimpleId> as_simple(ModuleId m);

/// D122, D212, D221 in that order, and the factor (0 = A, 1 = B, 2 = C) whose
/// flattening has rank one on the corresponding orbit.
inline constexpr std::array<SimpleId, 3> kSubspaceSimples{SimpleId::D122, SimpleId::D212, SimpleId::D221};
int subspace_factor(SimpleId s);

/// Weight occurring with multiplicity one in s and in no other simple.
TripleWeight witness_weight(SimpleId s);

/// lam in the set {lam_1 >= 3, lam_2 <= 1}, the highest weights of the rank-one
/// factor occurring in the subspace-variety simples.
bool in_subspace_highest_weights(const Weight2& lam);

/// Multiplicity of (rank-one factor weight `a`, other weights `b`, `c`) in the
/// subspace-variety simple, from S_a A (x) S_{a(1)}(B (x) C) with
/// a(1) = (a_1 - 2, 1, 1, a_2) and the Kronecker rule for GL(B (x) C).
std::int64_t subspace_simple_mult(const Weight2& a, const Weight2& b, const Weight2& c);

/// Multiplicity of w in the simple s, or nullopt where it is not determined:
/// D1 on weights shared with E, and G6 on the Fourier image of those weights.
std::optional<std::int64_t> mult_simple(SimpleId s, const TripleWeight& w);

struct CompositionSeries {
  ModuleId module;
  std::vector<std::vector<SimpleId>> layers;  // bottom (socle side) first

  std::vector<SimpleId> flattened() const;
};

/// Layered composition factors of the composite modules S_h, S_h_sqrt, h_inv1,
/// F_mod, Sh_mod_S and Shs_mod_G6. Throws std::invalid_argument otherwise.
CompositionSeries composition_series(ModuleId m);

/// S <-> E, G6 <-> D1, the rest fixed.
SimpleId fourier_on_simples(SimpleId s);
/// Holonomic duality fixes every simple.
SimpleId duality_on_simples(SimpleId s);

/// A root p/q of the Bernstein-Sato polynomial with its multiplicity.
struct BFunctionRoot {
  std::int64_t numerator;
  std::int64_t denominator;
  int multiplicity;
};

/// b_h(s) = (s + 1)(s + 3/2)^2(s + 2) for the hyperdeterminant. Stored, not computed.
inline constexpr std::array<BFunctionRoot, 3> kHyperdeterminantBFunction{{{-1, 1, 1}, {-3, 2, 2}, {-2, 1, 1}}};

}  // namespace hypermat
