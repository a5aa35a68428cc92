#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "hypermat/localcoh.hpp"
#include "hypermat/report.hpp"

namespace hypermat {

/// An element of A (x) B (x) C with dim A = dim B = dim C = 2, entries x_{ijk}
/// for i, j, k in {0, 1}.
class Tensor222 {
 public:
  Tensor222() = default;

  mpq_class& at(int i, int j, int k) { return x_[index(i, j, k)]; }
  const mpq_class& at(int i, int j, int k) const { return x_[index(i, j, k)]; }
  bool is_zero() const;

  /// e_{ijk} with 1-based indices, as in a_i (x) b_j (x) c_k.
  static Tensor222 basis(int i, int j, int k);

  friend bool operator==(const Tensor222&, const Tensor222&) = default;
  Tensor222& operator+=(const Tensor222& other);
  friend Tensor222 operator+(Tensor222 a, const Tensor222& b) { return a += b; }

 private:
  static int index(int i, int j, int k) { return 4 * i + 2 * j + k; }
  std::array<mpq_class, 8> x_;
};

struct Mat2 {
  std::array<mpq_class, 4> m;  // row-major: m[0] m[1] / m[2] m[3]

  const mpq_class& operator()(int r, int c) const { return m[2 * r + c]; }
  mpq_class det() const { return m[0] * m[3] - m[1] * m[2]; }
  static Mat2 identity() { return {{1, 0, 0, 1}}; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// g = (X, Y, Z) in GL(A) x GL(B) x GL(C).
struct GroupElement {
  Mat2 x, y, z;

  static GroupElement identity() { return {Mat2::identity(), Mat2::identity(), Mat2::identity()}; }
  bool invertible() const { return x.det() != 0 && y.det() != 0 && z.det() != 0; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {a.x * b.x, a.y * b.y, a.z * b.z};
  }
};

/// (g.t)_{ijk} = sum X_{ii'} Y_{jj'} Z_{kk'} t_{i'j'k'}, evaluated in one pass.
Tensor222 act(const GroupElement& g, const Tensor222& t);
/// The same action applied one factor at a time.
Tensor222 act_factorwise(const GroupElement& g, const Tensor222& t);

/// Cayley's hyperdeterminant, evaluated term by term (12 terms).
mpq_class hyperdet(const Tensor222& t);

struct FlatteningRanks {
  int a = 0, b = 0, c = 0;
  friend bool operator==(const FlatteningRanks&, const FlatteningRanks&) = default;
};

/// Ranks of the 2 x 4 flattenings along A, B and C.
FlatteningRanks flattening_ranks(const Tensor222& t);

OrbitId classify_orbit(const Tensor222& t);

/// Rank of the infinitesimal action of gl_2 x gl_2 x gl_2 at t.
int orbit_dim(const Tensor222& t);

/// The normal-form representative of each orbit.
Tensor222 representative(OrbitId z);

/// Integer tensor with entries in [-bound, bound].
Tensor222 random_tensor(std::mt19937_64& rng, int bound = 3);
/// Invertible integer group element with entries in [-bound, bound].
GroupElement random_group_element(std::mt19937_64& rng, int bound = 3);

/// Isotropy families for the dense orbit, the parametrized isotropy of the
/// hypersurface orbit, the subspace-variety isotropy and consistency of the action.
Report isotropy_spot_checks(std::uint64_t seed, int samples = 20);

/// Representatives, dimensions, equivariance of h and orbit constancy of the classifier.
Report geometry_checks(std::uint64_t seed, int samples = 100);

std::string to_string(const Tensor222& t);

}  // namespace hypermat
