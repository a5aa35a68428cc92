#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypermat/report.hpp"
#include "hypermat/simples.hpp"

namespace hypermat {

/// GL-orbits in 2x2x2 hypermatrices: the origin, pure tensors, the three
/// subspace-variety orbits, the hyperdeterminant hypersurface and the dense orbit.
enum class OrbitId { O0, O1, O122, O212, O221, O5, O6 };

inline constexpr std::array<OrbitId, 7> kAllOrbits{OrbitId::O0,   OrbitId::O1, OrbitId::O122, OrbitId::O212,
                                                   OrbitId::O221, OrbitId::O5, OrbitId::O6};
inline constexpr std::array<OrbitId, 6> kProperOrbits{OrbitId::O0,   OrbitId::O1, OrbitId::O122,
                                                      OrbitId::O212, OrbitId::O221, OrbitId::O5};

std::string_view name(OrbitId z);
std::optional<OrbitId> parse_orbit(std::string_view s);
int orbit_dim(OrbitId z);
int codim(OrbitId z);

/// closure(a) is contained in closure(b).
bool closure_contains(OrbitId b, OrbitId a);

/// Irreducible components of the support, as orbits whose closures cover it.
std::vector<OrbitId> support(ModuleId m);

using ModuleMultiset = std::map<ModuleId, std::int64_t>;
using DegreeMap = std::map<int, ModuleMultiset>;

struct LCResult {
  DegreeMap degrees;
  std::string basis;  // which rule or table row produced it
};

class NotDerivable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// H^*_{closure(z)}(m). Throws NotDerivable outside the tabulated domain.
LCResult lc(ModuleId m, OrbitId z);

using IteratedLC = std::map<std::vector<int>, ModuleMultiset>;

/// H^{i_t}_{Z_t}( ... H^{i_1}_{Z_1}(m) ... ) for supports = (Z_1, ..., Z_t),
/// keyed by (i_1, ..., i_t). Direct sums are expanded degreewise.
IteratedLC iterated_lc(ModuleId m, const std::vector<OrbitId>& supports);

/// Class in the Grothendieck group of simples: composites are replaced by their
/// composition factors.
std::map<SimpleId, std::int64_t> grothendieck_class(const ModuleMultiset& ms);

/// sum_j (-1)^j [H^j], in the Grothendieck group of simples.
std::map<SimpleId, std::int64_t> euler_class(const DegreeMap& degrees);

/// lc(S, Z) vanishes below codim Z and not at codim Z, for the six proper orbits.
Report check_codim_vanishing();

/// Every simple and every support sequence of length <= max_length stays in the domain.
Report check_iteration_closure(std::size_t max_length = 3);

/// chi(F) = chi(G6) + chi(D122 + D212 + D221) at O1 and at each O_ijk.
Report check_extension_euler_identity();

}  // namespace hypermat
