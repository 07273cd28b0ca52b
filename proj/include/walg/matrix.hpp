#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "walg/semiring.hpp"

namespace walg {

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over one semiring instance.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Kind k, std::size_t rows, std::size_t cols);

  static Matrix identity(Kind k, std::size_t n);

  Kind kind() const { return kind_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Value& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool operator==(const Matrix& o) const {
    return kind_ == o.kind_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::boolean;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

/// M^omega and M^{omega,t} live in V^{n x 1}; with V = S a plain vector.
using OmegaVector = std::vector<Value>;

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
OmegaVector mat_vec_mul(const Matrix& a, const OmegaVector& v);
OmegaVector vec_add(const OmegaVector& a, const OmegaVector& b);
Matrix column(const OmegaVector& v, Kind k);

/// Block recursion with the 1 / (n-1) split.
Matrix mat_star(const Matrix& m);
OmegaVector mat_omega(const Matrix& m);
OmegaVector mat_omega_t(const Matrix& m, std::size_t t);
/// Same vector computed with a k x k upper-left block, t <= k <= n.
OmegaVector mat_omega_t_alt(const Matrix& m, std::size_t t, std::size_t k);

enum class StarForm { first, second };

/// The closed block formulas evaluated literally at split point n1 (0 < n1 < n),
/// sub-blocks through mat_star / mat_omega.  Used to test split independence.
Matrix mat_star_split(const Matrix& m, std::size_t n1, StarForm form);
OmegaVector mat_omega_split(const Matrix& m, std::size_t n1);

/// Rows and columns reordered so that new index i is old index perm[i].
Matrix permute(const Matrix& m, const std::vector<std::size_t>& perm);

}  // namespace walg
