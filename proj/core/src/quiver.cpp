#include "hypermat/quiver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "hypermat/linalg.hpp"

namespace hypermat {

std::size_t Quiver::add_vertex(std::string name) {
  if (std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end())
    throw std::invalid_argument("duplicate vertex " + name);
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  for (const auto& a : arrows_)
    if (a.name == name) throw std::invalid_argument("duplicate arrow " + name);
  arrows_.push_back({std::move(name), vertex(source), vertex(target)});
  return arrows_.size() - 1;
}

std::size_t Quiver::vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw std::invalid_argument("unknown vertex " + std::string(name));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  throw std::invalid_argument("unknown arrow " + std::string(name));
}

std::size_t Quiver::arrow_count(std::size_t from, std::size_t to) const {
  return static_cast<std::size_t>(
      std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == from && a.target == to; }));
}

std::string format_path(const Quiver& q, const Path& p, std::size_t at_vertex) {
  if (p.empty()) return "e_" + q.vertices().at(at_vertex);
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrows()[*it].name;
  }
  return out;
}

Path path_from_product(const Quiver& q, const std::vector<std::string>& written) {
  Path p;
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    const std::size_t a = q.arrow(*it);
    if (!p.empty() && q.arrows()[p.back()].target != q.arrows()[a].source)
      throw std::invalid_argument("arrows do not compose: " + *it);
    p.push_back(a);
  }
  return p;
}

Relation make_relation(const Quiver& q, const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty relation");
  Relation r;
  for (const auto& [coeff, written] : terms) {
    Path p = path_from_product(q, written);
    if (p.size() < 2) throw std::invalid_argument("relation terms need length at least two");
    const std::size_t source = q.arrows()[p.front()].source;
    const std::size_t target = q.arrows()[p.back()].target;
    if (r.terms.empty()) {
      r.source = source;
      r.target = target;
      r.length = p.size();
    } else if (source != r.source || target != r.target || p.size() != r.length) {
      throw std::invalid_argument("relation terms do not share endpoints and length");
    }
    r.terms.push_back({coeff, std::move(p)});
  }
  return r;
}

std::vector<Path> paths_between(const Quiver& q, std::size_t v, std::size_t w, std::size_t length) {
  std::vector<Path> out;
  Path current;
  auto extend = [&](auto&& self, std::size_t at) -> void {
    if (current.size() == length) {
      if (at == w) out.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrows()[a].source != at) continue;
      current.push_back(a);
      self(self, q.arrows()[a].target);
      current.pop_back();
    }
  };
  extend(extend, v);
  return out;
}

std::size_t PathSpace::dimension() const {
  std::size_t total = 0;
  for (const auto& b : basis) total += b.size();
  return total;
}

std::int64_t PathSpace::max_nonzero_length() const {
  for (std::size_t n = basis.size(); n-- > 0;)
    if (!basis[n].empty()) return static_cast<std::int64_t>(n);
  return -1;
}

namespace {

std::vector<Path> quotient_block(const QuiverWithRelations& qr, std::size_t v, std::size_t w, std::size_t n) {
  const Quiver& q = qr.quiver;
  const std::vector<Path> all = paths_between(q, v, w, n);
  if (all.empty()) return {};
  std::map<Path, std::size_t> column;
  for (std::size_t i = 0; i < all.size(); ++i) column.emplace(all[i], i);

  RationalMatrix rows;
  for (const auto& rel : qr.relations) {
    if (rel.length > n) continue;
    for (std::size_t before = 0; before + rel.length <= n; ++before) {
      const std::size_t after = n - rel.length - before;
      for (const auto& prefix : paths_between(q, v, rel.source, before))
        for (const auto& suffix : paths_between(q, rel.target, w, after)) {
          std::vector<mpq_class> row(all.size());
          for (const auto& term : rel.terms) {
            Path p = prefix;
            p.insert(p.end(), term.path.begin(), term.path.end());
            p.insert(p.end(), suffix.begin(), suffix.end());
            row[column.at(p)] += term.coeff;
          }
          rows.push_back(std::move(row));
        }
    }
  }

  const std::vector<std::size_t> pivots = rref(rows, all.size());
  std::vector<Path> basis;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!std::binary_search(pivots.begin(), pivots.end(), i)) basis.push_back(all[i]);
  return basis;
}

}  // namespace

PathSpace path_basis(const QuiverWithRelations& qr, std::size_t v, std::size_t w, std::size_t length_cap) {
  if (length_cap < 1) throw std::invalid_argument("length_cap must be at least 1");
  PathSpace space{v, w, length_cap, {}};
  for (std::size_t n = 0; n <= length_cap; ++n) space.basis.push_back(quotient_block(qr, v, w, n));
  if (!space.basis[length_cap].empty() || !space.basis[length_cap - 1].empty())
    throw PathSpaceError("did not stabilize");
  return space;
}

namespace {

constexpr std::array<std::string_view, 3> kLabels{"122", "212", "221"};

QuiverWithRelations build_hypermatrix_quiver() {
  QuiverWithRelations qr;
  Quiver& q = qr.quiver;
  for (auto v : {"s", "d5", "e", "g6", "d122", "d212", "d221", "d1"}) q.add_vertex(v);
  q.add_arrow("phi0", "s", "d5");
  q.add_arrow("psi0", "d5", "s");
  q.add_arrow("phi1", "d5", "e");
  q.add_arrow("psi1", "e", "d5");
  for (auto l : kLabels) {
    const std::string d = "d" + std::string(l);
    q.add_arrow("alpha_" + std::string(l), d, "g6");
    q.add_arrow("beta_" + std::string(l), "g6", d);
    q.add_arrow("gamma_" + std::string(l), d, "d1");
    q.add_arrow("delta_" + std::string(l), "d1", d);
  }

  auto add = [&](std::vector<std::pair<std::int64_t, std::vector<std::string>>> terms) {
    qr.relations.push_back(make_relation(q, terms));
  };
  auto named = [](std::string_view letter, std::string_view label) {
    return std::string(letter) + "_" + std::string(label);
  };

  add({{1, {"phi0", "psi0"}}});
  add({{1, {"psi0", "phi0"}}});
  add({{1, {"phi1", "psi1"}}});
  add({{1, {"psi1", "phi1"}}});
  for (std::size_t i = 0; i < kLabels.size(); ++i)
    for (std::size_t j = i + 1; j < kLabels.size(); ++j) {
      add({{1, {named("alpha", kLabels[i]), named("delta", kLabels[i])}},
           {-1, {named("alpha", kLabels[j]), named("delta", kLabels[j])}}});
    }
  for (std::size_t i = 0; i < kLabels.size(); ++i)
    for (std::size_t j = i + 1; j < kLabels.size(); ++j) {
      add({{1, {named("gamma", kLabels[i]), named("beta", kLabels[i])}},
           {-1, {named("gamma", kLabels[j]), named("beta", kLabels[j])}}});
    }
  for (auto pqr : kLabels)
    for (auto ijk : kLabels) add({{1, {named("beta", pqr), named("alpha", ijk)}}});
  for (auto pqr : kLabels)
    for (auto ijk : kLabels) add({{1, {named("delta", pqr), named("gamma", ijk)}}});
  for (auto l : kLabels) add({{1, {named("alpha", l), named("beta", l)}}});
  for (auto l : kLabels) add({{1, {named("gamma", l), named("delta", l)}}});
  return qr;
}

constexpr std::array<std::pair<SimpleId, std::string_view>, 8> kVertexNames{{
    {SimpleId::S, "s"},
    {SimpleId::D5, "d5"},
    {SimpleId::E, "e"},
    {SimpleId::G6, "g6"},
    {SimpleId::D122, "d122"},
    {SimpleId::D212, "d212"},
    {SimpleId::D221, "d221"},
    {SimpleId::D1, "d1"},
}};

}  // namespace

const QuiverWithRelations& hypermatrix_quiver() {
  static const QuiverWithRelations qr = build_hypermatrix_quiver();
  return qr;
}

std::string_view vertex_name(SimpleId s) {
  for (const auto& [id, v] : kVertexNames)
    if (id == s) return v;
  throw std::invalid_argument("unknown simple");
}

SimpleId simple_of_vertex(std::string_view vertex) {
  for (const auto& [id, v] : kVertexNames)
    if (v == vertex) return id;
  throw std::invalid_argument("unknown vertex " + std::string(vertex));
}

std::int64_t ext1_dim(SimpleId m, SimpleId n) {
  const Quiver& q = hypermatrix_quiver().quiver;
  return static_cast<std::int64_t>(q.arrow_count(q.vertex(vertex_name(m)), q.vertex(vertex_name(n))));
}

std::map<SimpleId, std::int64_t> injective_hull_factors(SimpleId m) {
  const auto& qr = hypermatrix_quiver();
  const std::size_t target = qr.quiver.vertex(vertex_name(m));
  std::map<SimpleId, std::int64_t> out;
  for (SimpleId n : kAllSimples) {
    const auto dim = path_basis(qr, qr.quiver.vertex(vertex_name(n)), target).dimension();
    if (dim != 0) out[n] = static_cast<std::int64_t>(dim);
  }
  return out;
}

namespace {

std::map<SimpleId, std::int64_t> as_multiset(const std::vector<SimpleId>& xs) {
  std::map<SimpleId, std::int64_t> out;
  for (auto x : xs) ++out[x];
  return out;
}

std::string describe(const std::map<SimpleId, std::int64_t>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, c] : m) {
    os << (first ? "" : ", ") << name(s) << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

SimpleId rotate_labels(SimpleId s) {
  switch (s) {
    case SimpleId::D122: return SimpleId::D212;
    case SimpleId::D212: return SimpleId::D221;
    case SimpleId::D221: return SimpleId::D122;
    default: return s;
  }
}

}  // namespace

Report check_hypermatrix_quiver() {
  Report report;
  const auto& qr = hypermatrix_quiver();
  const Quiver& q = qr.quiver;

  report.add("vertex count", q.vertices().size() == 8, std::to_string(q.vertices().size()));
  report.add("arrow count", q.arrows().size() == 16, std::to_string(q.arrows().size()));
  report.add("relation count", qr.relations.size() == 34, std::to_string(qr.relations.size()));

  std::map<std::pair<SimpleId, SimpleId>, std::size_t> dims;
  bool all_stable = true;
  std::int64_t longest = -1;
  std::string failure;
  for (SimpleId a : kAllSimples)
    for (SimpleId b : kAllSimples) {
      try {
        const auto space = path_basis(qr, q.vertex(vertex_name(a)), q.vertex(vertex_name(b)));
        dims[{a, b}] = space.dimension();
        longest = std::max(longest, space.max_nonzero_length());
      } catch (const PathSpaceError& e) {
        all_stable = false;
        failure = std::string(vertex_name(a)) + "->" + std::string(vertex_name(b)) + ": " + e.what();
      }
    }
  report.add("all path spaces stabilize", all_stable, failure);
  report.add("max nonzero path length is 2", all_stable && longest == 2, "max length " + std::to_string(longest));
  if (!all_stable) return report;

  auto dim = [&](SimpleId a, SimpleId b) { return dims.at({a, b}); };
  report.add("paths d1 -> g6", dim(SimpleId::D1, SimpleId::G6) == 1, std::to_string(dim(SimpleId::D1, SimpleId::G6)));
  report.add("paths d5 -> g6", dim(SimpleId::D5, SimpleId::G6) == 0, std::to_string(dim(SimpleId::D5, SimpleId::G6)));
  report.add("paths s -> s", dim(SimpleId::S, SimpleId::S) == 1, std::to_string(dim(SimpleId::S, SimpleId::S)));

  for (auto [m, module] : {std::pair{SimpleId::S, ModuleId::S_h}, std::pair{SimpleId::G6, ModuleId::S_h_sqrt}}) {
    const auto hull = injective_hull_factors(m);
    const auto expected = as_multiset(composition_series(module).flattened());
    report.add("injective hull of " + std::string(name(m)) + " matches " + std::string(name(module)), hull == expected,
               describe(hull));
  }
  const auto hull_d5 = injective_hull_factors(SimpleId::D5);
  report.add("injective hull of D5 contains S once", hull_d5.count(SimpleId::S) && hull_d5.at(SimpleId::S) == 1,
             describe(hull_d5));

  for (SimpleId d : kSubspaceSimples) {
    report.add("ext1(" + std::string(name(d)) + ", G6) = 1", ext1_dim(d, SimpleId::G6) == 1);
    report.add("ext1(" + std::string(name(d)) + ", D5) = 0", ext1_dim(d, SimpleId::D5) == 0);
  }
  report.add("ext1(D1, G6) = 0", ext1_dim(SimpleId::D1, SimpleId::G6) == 0);

  bool symmetric = true;
  bool fourier_ok = true;
  for (SimpleId a : kAllSimples)
    for (SimpleId b : kAllSimples) {
      if (dim(a, b) != dim(rotate_labels(a), rotate_labels(b))) symmetric = false;
      if (ext1_dim(a, b) != ext1_dim(fourier_on_simples(a), fourier_on_simples(b))) fourier_ok = false;
    }
  report.add("path dimensions invariant under relabelling 122 -> 212 -> 221", symmetric);
  report.add("arrow counts compatible with Fourier", fourier_ok);
  return report;
}

}  // namespace hypermat
