#include "hypermat/linalg.hpp"

#include <utility>

namespace hypermat {

std::vector<std::size_t> rref(RationalMatrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);

    const mpq_class lead = rows[next][col];
    for (auto& x : rows[next]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const mpq_class factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) rows[r][c] -= factor * rows[next][c];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t rank(RationalMatrix rows) {
  const std::size_t columns = rows.empty() ? 0 : rows.front().size();
  return rref(rows, columns).size();
}

}  // namespace hypermat
