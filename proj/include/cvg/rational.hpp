#ifndef CVG_RATIONAL_HPP
#define CVG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cvg {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Symmetric matrix of exact rationals; set() mirrors across the diagonal.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), data_(std::size_t(n) * n, Rat(0)) {}

  int order() const { return n_; }

  const Rat& at(int i, int j) const { return data_[std::size_t(i) * n_ + j]; }

  void set(int i, int j, const Rat& value) {
    data_[std::size_t(i) * n_ + j] = value;
    data_[std::size_t(j) * n_ + i] = value;
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Rat> data_;
};

RatVec multiply(const RationalMatrix& m, const RatVec& x);

// Entry (i, j) of the (generally asymmetric) product a*b.
Rat product_entry(const RationalMatrix& a, const RationalMatrix& b, int i,
                  int j);

bool nowhere_zero(const RatVec& v);

// Basis of {y : rows * y = 0}; `rows` are dense coefficient vectors of equal
// length.  Exact Gauss-Jordan elimination.
std::vector<RatVec> nullspace_basis(std::vector<RatVec> rows, int cols);

// "p" or "p/q", canonical lowest terms.
std::string rat_to_string(const Rat& value);
Rat rat_from_string(const std::string& text);  // throws std::invalid_argument

}  // namespace cvg

#endif
