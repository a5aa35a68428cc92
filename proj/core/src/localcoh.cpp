#include "hypermat/localcoh.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hypermat {

namespace {

constexpr std::array<std::pair<OrbitId, std::string_view>, 7> kOrbitNames{{
    {OrbitId::O0, "O0"},
    {OrbitId::O1, "O1"},
    {OrbitId::O122, "O122"},
    {OrbitId::O212, "O212"},
    {OrbitId::O221, "O221"},
    {OrbitId::O5, "O5"},
    {OrbitId::O6, "O6"},
}};

bool is_subspace_orbit(OrbitId z) { return z == OrbitId::O122 || z == OrbitId::O212 || z == OrbitId::O221; }

SimpleId subspace_simple_of_orbit(OrbitId z) {
  switch (z) {
    case OrbitId::O122: return SimpleId::D122;
    case OrbitId::O212: return SimpleId::D212;
    case OrbitId::O221: return SimpleId::D221;
    default: throw std::invalid_argument("not a subspace-variety orbit");
  }
}

ModuleMultiset one(ModuleId m, std::int64_t count = 1) { return {{m, count}}; }

DegreeMap shifted_down(const DegreeMap& d) {
  DegreeMap out;
  for (const auto& [deg, ms] : d)
    if (deg >= 1) out[deg - 1] = ms;
  return out;
}

}  // namespace

std::string_view name(OrbitId z) {
  for (const auto& [id, text] : kOrbitNames)
    if (id == z) return text;
  return "?";
}

std::optional<OrbitId> parse_orbit(std::string_view s) {
  for (const auto& [id, text] : kOrbitNames)
    if (text == s) return id;
  return std::nullopt;
}

int orbit_dim(OrbitId z) {
  switch (z) {
    case OrbitId::O0: return 0;
    case OrbitId::O1: return 4;
    case OrbitId::O122:
    case OrbitId::O212:
    case OrbitId::O221: return 5;
    case OrbitId::O5: return 7;
    case OrbitId::O6: return 8;
  }
  return -1;
}

int codim(OrbitId z) { return 8 - orbit_dim(z); }

bool closure_contains(OrbitId b, OrbitId a) {
  if (a == b || a == OrbitId::O0 || b == OrbitId::O6) return true;
  if (a == OrbitId::O1) return b != OrbitId::O0;
  if (is_subspace_orbit(a)) return b == OrbitId::O5;
  return false;
}

std::vector<OrbitId> support(ModuleId m) {
  switch (m) {
    case ModuleId::Zero: return {};
    case ModuleId::E: return {OrbitId::O0};
    case ModuleId::D1: return {OrbitId::O1};
    case ModuleId::D122: return {OrbitId::O122};
    case ModuleId::D212: return {OrbitId::O212};
    case ModuleId::D221: return {OrbitId::O221};
    case ModuleId::D5:
    case ModuleId::Sh_mod_S: return {OrbitId::O5};
    case ModuleId::Shs_mod_G6: return {OrbitId::O122, OrbitId::O212, OrbitId::O221};
    default: return {OrbitId::O6};
  }
}

LCResult lc(ModuleId m, OrbitId z) {
  if (m == ModuleId::Zero) return {{}, "zero module"};

  const auto components = support(m);
  if (std::all_of(components.begin(), components.end(), [z](OrbitId c) { return closure_contains(z, c); }))
    return {{{0, one(m)}}, "module supported in the closure"};

  using M = ModuleId;
  if (m == M::Sh_mod_S) return {shifted_down(lc(M::S, z).degrees), "shift rule from S_h/S to S"};
  if (m == M::Shs_mod_G6) return {shifted_down(lc(M::G6, z).degrees), "shift rule from (S_h*sqrt h)/G6 to G6"};

  // From here on z != O6, since everything is supported in V.
  switch (m) {
    case M::S_h:
    case M::S_h_sqrt: return {{}, "localization at h has no cohomology along proper orbit closures"};
    case M::h_inv1: return {{{1, one(M::E)}}, "submodule generated by 1/h"};
    case M::F_mod:
      if (z == OrbitId::O0) return {{{5, one(M::E)}}, "extension module F at the origin"};
      return {{{1, one(M::D1)}}, "extension module F along a positive-dimensional orbit closure"};
    case M::D1:
      if (z == OrbitId::O0) return {{{4, one(M::E)}}, "D1 at the origin"};
      break;
    case M::D122:
    case M::D212:
    case M::D221:
      if (z == OrbitId::O0) return {{{3, one(M::E)}, {5, one(M::E)}}, "subspace-variety simple at the origin"};
      if (z == OrbitId::O1 || is_subspace_orbit(z))
        return {{{1, one(M::D1)}, {3, one(M::E)}}, "subspace-variety simple along the Segre cone or another subspace variety"};
      break;
    case M::D5:
      if (z == OrbitId::O0) return {{{1, one(M::E)}, {7, one(M::E)}}, "D5 at the origin"};
      if (z == OrbitId::O1) return {{{1, one(M::E)}, {3, one(M::D1)}}, "D5 along the Segre cone"};
      if (is_subspace_orbit(z))
        return {{{1, one(M::E)}, {2, one(to_module(subspace_simple_of_orbit(z)))}, {4, one(M::E)}},
                "D5 along a subspace variety"};
      break;
    case M::S:
      if (z == OrbitId::O0) return {{{8, one(M::E)}}, "polynomial ring at the origin"};
      if (z == OrbitId::O1) return {{{4, one(M::D1)}}, "polynomial ring along the Segre cone"};
      if (is_subspace_orbit(z))
        return {{{3, one(to_module(subspace_simple_of_orbit(z)))}, {5, one(M::E)}},
                "polynomial ring along a subspace variety"};
      if (z == OrbitId::O5) return {{{1, one(M::Sh_mod_S)}}, "polynomial ring along the hyperdeterminant hypersurface"};
      break;
    case M::G6:
      if (z == OrbitId::O0) return {{{4, one(M::E, 3)}, {6, one(M::E, 2)}}, "G6 at the origin"};
      if (z == OrbitId::O1 || is_subspace_orbit(z))
        return {{{2, one(M::D1, 2)}, {4, one(M::E, 3)}}, "G6 along the Segre cone or a subspace variety"};
      if (z == OrbitId::O5) return {{{1, one(M::Shs_mod_G6)}}, "G6 along the hyperdeterminant hypersurface"};
      break;
    default: break;
  }
  throw NotDerivable("local cohomology of " + std::string(name(m)) + " along " + std::string(name(z)) +
                     " is not derivable from the tabulated data");
}

IteratedLC iterated_lc(ModuleId m, const std::vector<OrbitId>& supports) {
  IteratedLC current{{{}, one(m)}};
  for (OrbitId z : supports) {
    IteratedLC next;
    for (const auto& [key, modules] : current)
      for (const auto& [module, count] : modules)
        for (const auto& [deg, outputs] : lc(module, z).degrees) {
          auto extended = key;
          extended.push_back(deg);
          for (const auto& [out, c] : outputs) next[extended][out] += count * c;
        }
    current = std::move(next);
  }
  return current;
}

std::map<SimpleId, std::int64_t> grothendieck_class(const ModuleMultiset& ms) {
  std::map<SimpleId, std::int64_t> out;
  for (const auto& [m, count] : ms) {
    if (m == ModuleId::Zero) continue;
    if (auto s = as_simple(m)) {
      out[*s] += count;
      continue;
    }
    for (SimpleId s : composition_series(m).flattened()) out[s] += count;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<SimpleId, std::int64_t> euler_class(const DegreeMap& degrees) {
  std::map<SimpleId, std::int64_t> out;
  for (const auto& [deg, ms] : degrees)
    for (const auto& [s, c] : grothendieck_class(ms)) out[s] += (deg % 2 == 0 ? c : -c);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

std::string describe(const std::map<SimpleId, std::int64_t>& cls) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : cls) {
    os << (first ? "" : " ") << (c < 0 ? "-" : (first ? "" : "+")) << (std::abs(c) == 1 ? "" : std::to_string(std::abs(c)))
       << name(s);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

Report check_codim_vanishing() {
  Report report;
  for (OrbitId z : kProperOrbits) {
    const auto degrees = lc(ModuleId::S, z).degrees;
    const int c = codim(z);
    const bool below_empty =
        std::all_of(degrees.begin(), degrees.end(), [c](const auto& kv) { return kv.first >= c || kv.second.empty(); });
    const bool at_nonempty = degrees.count(c) && !degrees.at(c).empty();
    const int first = degrees.empty() ? -1 : degrees.begin()->first;
    report.add("codim vanishing along " + std::string(name(z)), below_empty && at_nonempty,
               "codim " + std::to_string(c) + ", first nonzero degree " + std::to_string(first));
  }
  return report;
}

Report check_iteration_closure(std::size_t max_length) {
  Report report;
  for (SimpleId s : kAllSimples) {
    std::size_t sequences = 0;
    std::string failure;
    std::vector<OrbitId> seq;
    std::function<void()> walk = [&] {
      try {
        iterated_lc(to_module(s), seq);
        ++sequences;
      } catch (const NotDerivable& e) {
        if (failure.empty()) failure = e.what();
      }
      if (seq.size() == max_length) return;
      for (OrbitId z : kAllOrbits) {
        seq.push_back(z);
        walk();
        seq.pop_back();
      }
    };
    walk();
    report.add("iterated local cohomology of " + std::string(name(s)) + " stays in the domain", failure.empty(),
               failure.empty() ? std::to_string(sequences) + " support sequences" : failure);
  }
  return report;
}

Report check_extension_euler_identity() {
  Report report;
  for (OrbitId z : {OrbitId::O1, OrbitId::O122, OrbitId::O212, OrbitId::O221}) {
    auto lhs = euler_class(lc(ModuleId::F_mod, z).degrees);
    auto rhs = euler_class(lc(ModuleId::G6, z).degrees);
    for (SimpleId d : kSubspaceSimples)
      for (const auto& [s, c] : euler_class(lc(to_module(d), z).degrees)) rhs[s] += c;
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    report.add("Euler identity for 0 -> G6 -> F -> D122+D212+D221 -> 0 along " + std::string(name(z)), lhs == rhs,
               "chi(F) = " + describe(lhs) + ", chi(G6) + chi(D) = " + describe(rhs));
  }
  return report;
}

}  // namespace hypermat
