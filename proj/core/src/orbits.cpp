#include "hypermat/orbits.hpp"

#include <sstream>
#include <stdexcept>

#include "hypermat/linalg.hpp"

namespace hypermat {

bool Tensor222::is_zero() const {
  for (const auto& v : x_)
    if (v != 0) return false;
  return true;
}

Tensor222 Tensor222::basis(int i, int j, int k) {
  Tensor222 t;
  t.at(i - 1, j - 1, k - 1) = 1;
  return t;
}

Tensor222& Tensor222::operator+=(const Tensor222& other) {
  for (std::size_t n = 0; n < x_.size(); ++n) x_[n] += other.x_[n];
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Tensor222 act(const GroupElement& g, const Tensor222& t) {
  Tensor222 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        mpq_class sum = 0;
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r) sum += g.x(i, p) * g.y(j, q) * g.z(k, r) * t.at(p, q, r);
        out.at(i, j, k) = sum;
      }
  return out;
}

Tensor222 act_factorwise(const GroupElement& g, const Tensor222& t) {
  Tensor222 a, b, c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) a.at(i, j, k) = g.x(i, 0) * t.at(0, j, k) + g.x(i, 1) * t.at(1, j, k);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) b.at(i, j, k) = g.y(j, 0) * a.at(i, 0, k) + g.y(j, 1) * a.at(i, 1, k);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c.at(i, j, k) = g.z(k, 0) * b.at(i, j, 0) + g.z(k, 1) * b.at(i, j, 1);
  return c;
}

mpq_class hyperdet(const Tensor222& t) {
  auto x = [&t](int i, int j, int k) { return t.at(i - 1, j - 1, k - 1); };
  mpq_class h = 0;
  h += x(1, 1, 1) * x(1, 1, 1) * x(2, 2, 2) * x(2, 2, 2);
  h += x(1, 1, 2) * x(1, 1, 2) * x(2, 2, 1) * x(2, 2, 1);
  h += x(1, 2, 1) * x(1, 2, 1) * x(2, 1, 2) * x(2, 1, 2);
  h += x(2, 1, 1) * x(2, 1, 1) * x(1, 2, 2) * x(1, 2, 2);
  h -= 2 * x(1, 1, 1) * x(1, 1, 2) * x(2, 2, 1) * x(2, 2, 2);
  h -= 2 * x(1, 1, 1) * x(1, 2, 1) * x(2, 1, 2) * x(2, 2, 2);
  h -= 2 * x(1, 1, 1) * x(1, 2, 2) * x(2, 1, 1) * x(2, 2, 2);
  h -= 2 * x(1, 1, 2) * x(1, 2, 1) * x(2, 1, 2) * x(2, 2, 1);
  h -= 2 * x(1, 1, 2) * x(1, 2, 2) * x(2, 2, 1) * x(2, 1, 1);
  h -= 2 * x(1, 2, 1) * x(1, 2, 2) * x(2, 1, 2) * x(2, 1, 1);
  h += 4 * x(1, 1, 1) * x(1, 2, 2) * x(2, 1, 2) * x(2, 2, 1);
  h += 4 * x(1, 1, 2) * x(1, 2, 1) * x(2, 1, 1) * x(2, 2, 2);
  return h;
}

FlatteningRanks flattening_ranks(const Tensor222& t) {
  RationalMatrix fa(2, std::vector<mpq_class>(4)), fb = fa, fc = fa;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        fa[i][2 * j + k] = t.at(i, j, k);
        fb[j][2 * i + k] = t.at(i, j, k);
        fc[k][2 * i + j] = t.at(i, j, k);
      }
  return {static_cast<int>(rank(fa)), static_cast<int>(rank(fb)), static_cast<int>(rank(fc))};
}

OrbitId classify_orbit(const Tensor222& t) {
  if (t.is_zero()) return OrbitId::O0;
  const auto r = flattening_ranks(t);
  const int ones = (r.a == 1) + (r.b == 1) + (r.c == 1);
  if (ones == 3) return OrbitId::O1;
  if (ones == 1) {
    if (r.a == 1) return OrbitId::O122;
    if (r.b == 1) return OrbitId::O212;
    return OrbitId::O221;
  }
  if (ones == 2)
    throw std::logic_error("inconsistent flattening ranks (" + std::to_string(r.a) + "," + std::to_string(r.b) + "," +
                           std::to_string(r.c) + ")");
  return hyperdet(t) == 0 ? OrbitId::O5 : OrbitId::O6;
}

int orbit_dim(const Tensor222& t) {
  RationalMatrix tangent;
  for (int factor = 0; factor < 3; ++factor)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        // E_pq acting on one factor: index p receives the entry at index q.
        std::vector<mpq_class> row(8);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
              const int idx[3] = {i, j, k};
              if (idx[factor] != p) continue;
              int src[3] = {i, j, k};
              src[factor] = q;
              row[4 * i + 2 * j + k] = t.at(src[0], src[1], src[2]);
            }
        tangent.push_back(std::move(row));
      }
  return static_cast<int>(rank(std::move(tangent)));
}

Tensor222 representative(OrbitId z) {
  using T = Tensor222;
  switch (z) {
    case OrbitId::O0: return {};
    case OrbitId::O1: return T::basis(1, 1, 1);
    case OrbitId::O122: return T::basis(1, 1, 1) + T::basis(1, 2, 2);
    case OrbitId::O212: return T::basis(1, 1, 1) + T::basis(2, 1, 2);
    case OrbitId::O221: return T::basis(1, 1, 1) + T::basis(2, 2, 1);
    case OrbitId::O5: return T::basis(1, 1, 1) + T::basis(1, 2, 2) + T::basis(2, 1, 2);
    case OrbitId::O6: return T::basis(1, 1, 1) + T::basis(2, 2, 2);
  }
  throw std::invalid_argument("unknown orbit");
}

Tensor222 random_tensor(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Tensor222 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) t.at(i, j, k) = dist(rng);
  return t;
}

GroupElement random_group_element(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  auto matrix = [&] {
    for (;;) {
      Mat2 m{{dist(rng), dist(rng), dist(rng), dist(rng)}};
      if (m.det() != 0) return m;
    }
  };
  GroupElement g;
  g.x = matrix();
  g.y = matrix();
  g.z = matrix();
  return g;
}

namespace {

mpq_class random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 7), sign(0, 1);
  mpq_class q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  q.canonicalize();
  return q;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

struct O5Point {
  mpq_class x11, x12, x22, y11, y12, y22, z11, z21, z22;

  GroupElement element() const { return {{{x11, x12, 0, x22}}, {{y11, y12, 0, y22}}, {{z11, 0, z21, z22}}}; }
  bool satisfies_equations() const {
    return x11 * y11 * z11 == 1 && x11 * y22 * z22 == 1 && x22 * y11 * z22 == 1 &&
           x11 * y11 * z21 + x11 * y12 * z22 + x12 * y11 * z22 == 0;
  }
};

O5Point o5_point(const mpq_class& x11, const mpq_class& x12, const mpq_class& y11, const mpq_class& y12,
                 const mpq_class& z22) {
  O5Point p;
  p.x11 = x11;
  p.x12 = x12;
  p.y11 = y11;
  p.y12 = y12;
  p.z22 = z22;
  p.x22 = 1 / (y11 * z22);
  p.y22 = 1 / (x11 * z22);
  p.z11 = 1 / (x11 * y11);
  p.z21 = -(x11 * y12 * z22 + x12 * y11 * z22) / (x11 * y11);
  return p;
}

}  // namespace

Report isotropy_spot_checks(std::uint64_t seed, int samples) {
  Report report;
  std::mt19937_64 rng(seed);
  const std::string seed_note = "seed " + std::to_string(seed);

  const Tensor222 v6 = representative(OrbitId::O6);
  bool diagonal_ok = true, antidiagonal_ok = true;
  for (int n = 0; n < samples; ++n) {
    const mpq_class x11 = random_nonzero_rational(rng), y11 = random_nonzero_rational(rng);
    const mpq_class x22 = random_nonzero_rational(rng), y22 = random_nonzero_rational(rng);
    const GroupElement diag{{{x11, 0, 0, x22}}, {{y11, 0, 0, y22}}, {{1 / (x11 * y11), 0, 0, 1 / (x22 * y22)}}};
    diagonal_ok = diagonal_ok && act(diag, v6) == v6;

    const mpq_class x12 = random_nonzero_rational(rng), y12 = random_nonzero_rational(rng);
    const mpq_class x21 = random_nonzero_rational(rng), y21 = random_nonzero_rational(rng);
    const GroupElement anti{{{0, x12, x21, 0}}, {{0, y12, y21, 0}}, {{0, 1 / (x12 * y12), 1 / (x21 * y21), 0}}};
    antidiagonal_ok = antidiagonal_ok && act(anti, v6) == v6;
  }
  const GroupElement worked{{{2, 0, 0, 1}}, {{3, 0, 0, 1}}, {{mpq_class(1, 6), 0, 0, 1}}};
  report.add("dense orbit: worked diagonal sample fixes v", act(worked, v6) == v6);
  report.add("dense orbit: diagonal isotropy family fixes v", diagonal_ok,
             std::to_string(samples) + " samples, " + seed_note);
  report.add("dense orbit: antidiagonal isotropy family fixes v", antidiagonal_ok,
             std::to_string(samples) + " samples, " + seed_note);

  const Tensor222 v5 = representative(OrbitId::O5);
  const O5Point identity_point{1, 0, 1, 1, 0, 1, 1, 0, 1};
  report.add("hypersurface orbit: identity solves the isotropy equations",
             identity_point.satisfies_equations() && act(identity_point.element(), v5) == v5);
  bool params_ok = true, paths_ok = true;
  for (int n = 0; n < samples; ++n) {
    const O5Point p = o5_point(random_nonzero_rational(rng), random_rational(rng), random_nonzero_rational(rng),
                               random_rational(rng), random_nonzero_rational(rng));
    params_ok = params_ok && p.satisfies_equations() && act(p.element(), v5) == v5;

    // A point on the first path (off-diagonal entries scaled by 1 - t) and on the
    // second path (diagonal entries moved linearly towards 1).
    mpq_class t(n + 1, samples + 2);
    t.canonicalize();
    O5Point q = p;
    q.x12 *= 1 - t;
    q.y12 *= 1 - t;
    q.z21 *= 1 - t;
    paths_ok = paths_ok && q.satisfies_equations();
    auto towards_one = [&t](const mpq_class& a) -> mpq_class { return a * (1 - t) + t; };
    const mpq_class a = towards_one(p.x11), b = towards_one(p.y11), c = towards_one(p.z22);
    if (a != 0 && b != 0 && c != 0) {
      const O5Point r{a, 0, 1 / (b * c), b, 0, 1 / (a * c), 1 / (a * b), 0, c};
      paths_ok = paths_ok && r.satisfies_equations() && act(r.element(), v5) == v5;
    }
  }
  report.add("hypersurface orbit: parametrized isotropy points fix v", params_ok,
             std::to_string(samples) + " samples, " + seed_note);
  report.add("hypersurface orbit: connecting paths stay in the isotropy", paths_ok,
             std::to_string(samples) + " samples, " + seed_note);

  const Tensor222 v122 = representative(OrbitId::O122);
  bool subspace_ok = true;
  for (int n = 0; n < samples; ++n) {
    const mpq_class x11 = random_nonzero_rational(rng), x12 = random_rational(rng), x22 = random_nonzero_rational(rng);
    Mat2 y;
    do {
      y = Mat2{{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)}};
    } while (y.det() == 0);
    // Z with Y^T Z = Id / x11.
    const mpq_class d = y.det() * x11;
    const Mat2 z{{y(1, 1) / d, -y(1, 0) / d, -y(0, 1) / d, y(0, 0) / d}};
    const GroupElement g{{{x11, x12, 0, x22}}, y, z};
    subspace_ok = subspace_ok && act(g, v122) == v122;
  }
  report.add("subspace orbit O122: isotropy parametrization fixes v", subspace_ok,
             std::to_string(samples) + " samples, " + seed_note);

  bool two_ways = true, composed = true, identity_ok = true;
  for (int n = 0; n < samples; ++n) {
    const Tensor222 t = random_tensor(rng);
    const GroupElement g = random_group_element(rng), h = random_group_element(rng);
    two_ways = two_ways && act(g, t) == act_factorwise(g, t);
    composed = composed && act(g, act(h, t)) == act(g * h, t);
    identity_ok = identity_ok && act(GroupElement::identity(), t) == t;
  }
  report.add("action: one-pass and factorwise evaluation agree", two_ways, seed_note);
  report.add("action: g.(h.t) = (gh).t", composed, seed_note);
  report.add("action: identity fixes every tensor", identity_ok, seed_note);
  return report;
}

Report geometry_checks(std::uint64_t seed, int samples) {
  Report report;
  std::mt19937_64 rng(seed);
  const std::string seed_note = "seed " + std::to_string(seed);

  bool classified = true, dims_ok = true;
  std::string dims;
  for (OrbitId z : kAllOrbits) {
    const Tensor222 t = representative(z);
    classified = classified && classify_orbit(t) == z;
    const int d = orbit_dim(t);
    dims += (dims.empty() ? "" : ",") + std::to_string(d);
    dims_ok = dims_ok && d == hypermat::orbit_dim(z);
  }
  report.add("representatives classify to their orbits", classified);
  report.add("orbit dimensions of the representatives", dims_ok, "(" + dims + ")");

  bool equivariant = true;
  for (int n = 0; n < samples; ++n) {
    const GroupElement g = random_group_element(rng);
    const Tensor222 t = random_tensor(rng);
    const mpq_class scale = g.x.det() * g.y.det() * g.z.det();
    equivariant = equivariant && hyperdet(act(g, t)) == scale * scale * hyperdet(t);
  }
  report.add("h(g.t) = (det X det Y det Z)^2 h(t)", equivariant, std::to_string(samples) + " pairs, " + seed_note);

  bool constant = true;
  for (int n = 0; n < samples; ++n) {
    const OrbitId z = kAllOrbits[static_cast<std::size_t>(n) % kAllOrbits.size()];
    const Tensor222 t = act(random_group_element(rng), representative(z));
    const GroupElement g = random_group_element(rng);
    const Tensor222 moved = act(g, t);
    constant = constant && classify_orbit(t) == z && classify_orbit(moved) == z && orbit_dim(moved) == orbit_dim(t);
  }
  report.add("classification and orbit dimension are constant on orbits", constant,
             std::to_string(samples) + " pairs, " + seed_note);

  bool vanishing = true;
  for (int n = 0; n < samples; ++n) {
    const Tensor222 t = random_tensor(rng, 1);
    vanishing = vanishing && ((hyperdet(t) == 0) == (classify_orbit(t) != OrbitId::O6));
  }
  report.add("h vanishes exactly off the dense orbit", vanishing, seed_note);
  return report;
}

std::string to_string(const Tensor222& t) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 2; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 2; ++j) os << (j ? ",[" : "[") << t.at(i, j, 0) << ',' << t.at(i, j, 1) << ']';
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace hypermat
