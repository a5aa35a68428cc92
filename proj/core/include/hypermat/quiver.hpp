#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypermat/report.hpp"
#include "hypermat/simples.hpp"

namespace hypermat {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(std::string name);
  /// Throws std::invalid_argument on a duplicate name or a missing endpoint.
  std::size_t add_arrow(std::string name, std::string_view source, std::string_view target);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex(std::string_view name) const;
  std::size_t arrow(std::string_view name) const;
  std::size_t arrow_count(std::size_t from, std::size_t to) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path as arrow indices in traversal order. The empty path stands for the
/// trivial path at a vertex and needs the vertex to be supplied separately.
using Path = std::vector<std::size_t>;

/// Path written in composition order, e.g. "alpha_122*delta_122" (first delta,
/// then alpha), or "e_<vertex>" for a trivial path.
std::string format_path(const Quiver& q, const Path& p, std::size_t at_vertex);

/// Resolves arrow names written right-to-left into a traversal-order path.
Path path_from_product(const Quiver& q, const std::vector<std::string>& written);

struct Relation {
  struct Term {
    std::int64_t coeff = 0;
    Path path;
  };
  std::vector<Term> terms;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t length = 0;
};

/// Builds a relation from written products (right-to-left). All terms must
/// have length >= 2, equal length and common endpoints; throws otherwise.
Relation make_relation(const Quiver& q, const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& terms);

struct QuiverWithRelations {
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Every path of exactly `length` arrows from v to w, lexicographic in arrow indices.
std::vector<Path> paths_between(const Quiver& q, std::size_t v, std::size_t w, std::size_t length);

class PathSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultLengthCap = 6;

struct PathSpace {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t length_cap = 0;
  /// basis[n] holds representatives of a basis of the degree-n part of the quotient.
  std::vector<std::vector<Path>> basis;

  std::size_t dimension() const;
  /// Largest n with a nonzero degree-n part, or -1 for the zero space.
  std::int64_t max_nonzero_length() const;
};

/// Basis of e_w (kQ / I) e_v by degree, computed block by block with exact
/// Gaussian elimination. Throws PathSpaceError("did not stabilize") if either
/// of the two top degrees below the cap is nonzero.
PathSpace path_basis(const QuiverWithRelations& qr, std::size_t v, std::size_t w,
                     std::size_t length_cap = kDefaultLengthCap);

/// Eight vertices s, d5, e, g6, d122, d212, d221, d1; sixteen arrows; and
/// the relations of the quiver for 2x2x2 hypermatrices.
const QuiverWithRelations& hypermatrix_quiver();

std::string_view vertex_name(SimpleId s);
SimpleId simple_of_vertex(std::string_view vertex);

/// Number of arrows m -> n.
std::int64_t ext1_dim(SimpleId m, SimpleId n);

/// Multiplicity of each simple n in the injective hull of m: dim of paths n -> m.
std::map<SimpleId, std::int64_t> injective_hull_factors(SimpleId m);

/// Finite-quotient, hull, symmetry and Fourier checks on the hypermatrix quiver.
Report check_hypermatrix_quiver();

}  // namespace hypermat
