#ifndef LIEDEFORM_COMBINATORICS_HPP
#define LIEDEFORM_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace liedeform {

using IndexTuple = std::vector<int>;

constexpr std::size_t binomial(int n, int k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// All strictly increasing k-tuples from {0..n-1}, in lexicographic order.
inline std::vector<IndexTuple> increasing_tuples(int n, int k)
{
  std::vector<IndexTuple> out;
  if (k < 0 || k > n)
    return out;
  out.reserve(binomial(n, k));
  IndexTuple c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Lexicographic rank of a strictly increasing tuple among k-subsets of {0..n-1}.
inline std::size_t tuple_rank(std::span<const int> c, int n)
{
  const int k = static_cast<int>(c.size());
  std::size_t r = 0;
  int start = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = start; j < c[static_cast<std::size_t>(i)]; ++j)
      r += binomial(n - 1 - j, k - 1 - i);
    start = c[static_cast<std::size_t>(i)] + 1;
  }
  return r;
}

/// Sorts `idx` in place; returns the sign of the sorting permutation, or 0
/// if an index repeats.
inline int sort_with_sign(std::span<int> idx)
{
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j])
        return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

} // namespace liedeform

#endif
