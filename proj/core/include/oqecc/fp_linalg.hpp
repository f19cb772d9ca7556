#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oqecc {

// A vector over the prime field F_p, one digit per entry.
using FpRow = std::vector<std::uint8_t>;

// Dense matrix over F_p stored row-wise. Row reduction produces the canonical
// reduced row-echelon form: pivots equal to 1, pivot columns otherwise zero,
// rows sorted by pivot column, zero rows dropped.
class FpMatrix {
 public:
  FpMatrix(unsigned p, std::size_t cols) : p_(p), cols_(cols) {}

  unsigned p() const { return p_; }
  std::size_t cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<FpRow>& rows() const { return rows_; }
  const FpRow& row(std::size_t i) const { return rows_[i]; }

  void add_row(FpRow row);
  void append(const FpMatrix& other);

  // Returns the rank.
  std::size_t reduce();

  // Basis of {x : row . x = 0 for every row}, in canonical form.
  FpMatrix nullspace() const;

  // Requires the matrix to be in canonical form.
  bool in_row_space(const FpRow& v) const;

  // Pivot column of each row; requires canonical form.
  std::vector<std::size_t> pivots() const;

  bool operator==(const FpMatrix& other) const = default;

 private:
  unsigned p_;
  std::size_t cols_;
  std::vector<FpRow> rows_;
};

unsigned fp_inverse(unsigned x, unsigned p);

// Dot product over F_p.
unsigned fp_dot(const FpRow& u, const FpRow& v, unsigned p);

// u + c*v over F_p, in place.
void fp_axpy(FpRow& u, unsigned c, const FpRow& v, unsigned p);

}  // namespace oqecc
