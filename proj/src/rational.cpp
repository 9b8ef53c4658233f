#include "cvg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cvg {

RatVec multiply(const RationalMatrix& m, const RatVec& x) {
  const int n = m.order();
  RatVec out(std::size_t(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * x[std::size_t(j)];
    out[std::size_t(i)] = acc;
  }
  return out;
}

Rat product_entry(const RationalMatrix& a, const RationalMatrix& b, int i,
                  int j) {
  Rat acc(0);
  for (int k = 0; k < a.order(); ++k) acc += a.at(i, k) * b.at(k, j);
  return acc;
}

bool nowhere_zero(const RatVec& v) {
  for (const Rat& r : v)
    if (r == 0) return false;
  return !v.empty();
}

std::vector<RatVec> nullspace_basis(std::vector<RatVec> rows, int cols) {
  // Gauss-Jordan to reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][std::size_t(c)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rat inv = 1 / rows[rank][std::size_t(c)];
    for (int j = c; j < cols; ++j) {
      Rat scaled = rows[rank][std::size_t(j)] * inv;
      scaled.canonicalize();
      rows[rank][std::size_t(j)] = scaled;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][std::size_t(c)] == 0) continue;
      const Rat factor = rows[r][std::size_t(c)];
      for (int j = c; j < cols; ++j)
        rows[r][std::size_t(j)] -= factor * rows[rank][std::size_t(j)];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(std::size_t(cols), false);
  for (int c : pivot_col) is_pivot[std::size_t(c)] = true;

  std::vector<RatVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    RatVec v(std::size_t(cols), Rat(0));
    v[std::size_t(free)] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[std::size_t(pivot_col[r])] = -rows[r][std::size_t(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string rat_to_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  return v.get_str();
}

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '/'))
      throw std::invalid_argument("bad rational: " + text);
  Rat v;
  try {
    v = Rat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + text);
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  v.canonicalize();
  return v;
}

}  // namespace cvg
