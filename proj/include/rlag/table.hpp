#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rlag {

/// Dense row-major table of ring elements.
template <class R>
using Table = std::vector<std::vector<R>>;

template <class R>
Table<R> make_table(std::size_t rows, std::size_t cols)
{
  return Table<R>(rows, std::vector<R>(cols));
}

template <class R>
Table<R> transpose(const Table<R>& a)
{
  if (a.empty())
    return {};
  Table<R> t = make_table<R>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

template <class R>
Table<R> matmul(const Table<R>& a, const Table<R>& b)
{
  const std::size_t inner = a.empty() ? 0 : a[0].size();
  if (inner != b.size())
    throw std::invalid_argument("matmul: inner dimensions differ");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Table<R> c = make_table<R>(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero())
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

template <class R>
std::vector<R> matvec(const Table<R>& a, const std::vector<R>& v)
{
  std::vector<R> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() > v.size())
      throw std::invalid_argument("matvec: column shorter than matrix width");
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!a[i][j].is_zero())
        out[i] = out[i] + a[i][j] * v[j];
  }
  return out;
}

} // namespace rlag
