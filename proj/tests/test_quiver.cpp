#include <gtest/gtest.h>

#include "hypermat/linalg.hpp"
#include "hypermat/quiver.hpp"

using namespace hypermat;

namespace {

const QuiverWithRelations& qr() { return hypermatrix_quiver(); }
std::size_t v(std::string_view name) { return qr().quiver.vertex(name); }

// Integer rank by plain fraction-free elimination on small matrices.
int integer_rank(std::vector<std::vector<std::int64_t>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && m[r][c] != 0) {
        const auto f = m[r][c], g = m[rank][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * g - m[rank][k] * f;
      }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Quiver, Counts) {
  EXPECT_EQ(qr().quiver.vertices().size(), 8u);
  EXPECT_EQ(qr().quiver.arrows().size(), 16u);
  EXPECT_EQ(qr().relations.size(), 34u);
}

TEST(Quiver, PathDimensions) {
  EXPECT_EQ(path_basis(qr(), v("s"), v("s")).dimension(), 1u);
  EXPECT_EQ(path_basis(qr(), v("d1"), v("g6")).dimension(), 1u);
  EXPECT_EQ(path_basis(qr(), v("d5"), v("g6")).dimension(), 0u);
}

// d1 -> g6: the three length-two paths modulo the relations living in that block.
TEST(Quiver, DOneToGSixByHand) {
  const auto& q = qr().quiver;
  const auto paths = paths_between(q, v("d1"), v("g6"), 2);
  ASSERT_EQ(paths.size(), 3u);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& rel : qr().relations) {
    if (rel.source != v("d1") || rel.target != v("g6")) continue;
    std::vector<std::int64_t> row(paths.size(), 0);
    for (const auto& term : rel.terms) {
      const auto it = std::find(paths.begin(), paths.end(), term.path);
      ASSERT_NE(it, paths.end());
      row[it - paths.begin()] += term.coeff;
    }
    rows.push_back(row);
  }
  const int expected = 3 - integer_rank(rows);
  EXPECT_EQ(expected, 1);
  const auto ps = path_basis(qr(), v("d1"), v("g6"));
  EXPECT_EQ(ps.max_nonzero_length(), 2);
  EXPECT_EQ(static_cast<int>(ps.basis[2].size()), expected);
  EXPECT_EQ(static_cast<int>(ps.dimension()), expected);
}

TEST(Quiver, ExtOne) {
  EXPECT_EQ(ext1_dim(SimpleId::D122, SimpleId::G6), 1);
  EXPECT_EQ(ext1_dim(SimpleId::D1, SimpleId::G6), 0);
  EXPECT_EQ(ext1_dim(SimpleId::D122, SimpleId::D5), 0);
}

TEST(Quiver, InjectiveHulls) {
  using F = std::map<SimpleId, std::int64_t>;
  EXPECT_EQ(injective_hull_factors(SimpleId::S), (F{{SimpleId::S, 1}, {SimpleId::D5, 1}, {SimpleId::E, 1}}));
  EXPECT_EQ(injective_hull_factors(SimpleId::G6), (F{{SimpleId::G6, 1},
                                                     {SimpleId::D122, 1},
                                                     {SimpleId::D212, 1},
                                                     {SimpleId::D221, 1},
                                                     {SimpleId::D1, 1}}));
  EXPECT_EQ(injective_hull_factors(SimpleId::D5).at(SimpleId::S), 1);
}

TEST(Quiver, AllPathSpacesStopAtLengthTwo) {
  std::int64_t longest = -1;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) longest = std::max(longest, path_basis(qr(), a, b).max_nonzero_length());
  EXPECT_EQ(longest, 2);
}

TEST(Quiver, SmallCapDetectsMissingStabilization) {
  EXPECT_THROW(path_basis(qr(), v("d1"), v("g6"), 2), PathSpaceError);
  EXPECT_NO_THROW(path_basis(qr(), v("d1"), v("g6"), 4));
}

TEST(Quiver, CheckSuitePasses) {
  const auto r = check_hypermatrix_quiver();
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Quiver, Construction) {
  Quiver q;
  q.add_vertex("a");
  q.add_vertex("b");
  q.add_arrow("x", "a", "b");
  q.add_arrow("y", "b", "a");
  EXPECT_THROW(q.add_arrow("x", "a", "b"), std::invalid_argument);
  EXPECT_THROW(q.add_arrow("z", "a", "c"), std::invalid_argument);
  EXPECT_EQ(q.arrow_count(0, 1), 1u);
  // "x*y" is first y then x
  const auto p = path_from_product(q, {"x", "y"});
  EXPECT_EQ(p, (Path{q.arrow("y"), q.arrow("x")}));
  EXPECT_EQ(format_path(q, p, 1), "x*y");
  EXPECT_EQ(format_path(q, {}, 0), "e_a");
  EXPECT_THROW(path_from_product(q, {"x", "x"}), std::invalid_argument);
}

TEST(Quiver, TwoCycleWithZeroRelation) {
  QuiverWithRelations small;
  small.quiver.add_vertex("a");
  small.quiver.add_vertex("b");
  small.quiver.add_arrow("x", "a", "b");
  small.quiver.add_arrow("y", "b", "a");
  small.relations.push_back(make_relation(small.quiver, {{1, {"y", "x"}}}));
  // e_a kQ/I e_a = span(e_a), b <- a = span(x)
  EXPECT_EQ(path_basis(small, 0, 0).dimension(), 1u);
  EXPECT_EQ(path_basis(small, 0, 1).dimension(), 1u);
  EXPECT_EQ(path_basis(small, 1, 1).dimension(), 2u);  // e_b and x*y
}

TEST(LinearAlgebra, RankAndEchelonForm) {
  RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank(m), 2u);
  const auto pivots = rref(m, 3);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0][2], 1);
  EXPECT_EQ(rank({{mpq_class(1, 3), mpq_class(1, 2)}, {mpq_class(2, 3), 1}}), 1u);
}
