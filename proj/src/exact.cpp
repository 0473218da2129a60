#include "cayley/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

int rational_rank(const std::vector<std::vector<long long>>& rows) {
  using Q = boost::multiprecision::cpp_rational;
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  std::vector<std::vector<Q>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    bool nonzero = false;
    for (long long v : r) nonzero |= v != 0;
    if (!nonzero) continue;
    a.emplace_back(r.begin(), r.end());
  }
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    size_t piv = a.size();
    for (size_t i = static_cast<size_t>(rank); i < a.size(); ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[piv], a[static_cast<size_t>(rank)]);
    const auto& p = a[static_cast<size_t>(rank)];
    for (size_t i = static_cast<size_t>(rank) + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Q factor = a[i][c] / p[c];
      for (size_t k = c; k < cols; ++k)
        if (p[k] != 0) a[i][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cayley
