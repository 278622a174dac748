#pragma once

#include <cstddef>
#include <vector>

#include "nogosig/common.hpp"

namespace nogosig {

/// Minimal dense square matrix, row-major. Used for Gram matrices,
/// isometry defects and eigensolver input; not a linear-algebra library.
template <typename T>
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T{}) {}
  SquareMatrix(std::size_t n, std::vector<T> entries)
      : n_(n), a_(std::move(entries)) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<T>& entries() const { return a_; }
  std::vector<T>& entries() { return a_; }

private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using ComplexMatrix = SquareMatrix<cplx>;
using RealMatrix = SquareMatrix<double>;

} // namespace nogosig
