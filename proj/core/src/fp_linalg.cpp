#include "oqecc/fp_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace oqecc {

unsigned fp_inverse(unsigned x, unsigned p) {
  assert(x % p != 0);
  for (unsigned y = 1; y < p; ++y) {
    if ((x * y) % p == 1) return y;
  }
  return 0;
}

unsigned fp_dot(const FpRow& u, const FpRow& v, unsigned p) {
  assert(u.size() == v.size());
  unsigned acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = (acc + u[i] * v[i]) % p;
  return acc;
}

void fp_axpy(FpRow& u, unsigned c, const FpRow& v, unsigned p) {
  c %= p;
  if (c == 0) return;
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = static_cast<std::uint8_t>((u[i] + c * v[i]) % p);
  }
}

void FpMatrix::add_row(FpRow row) {
  assert(row.size() == cols_);
  rows_.push_back(std::move(row));
}

void FpMatrix::append(const FpMatrix& other) {
  assert(other.cols_ == cols_ && other.p_ == p_);
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::size_t FpMatrix::reduce() {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_.size() && rows_[pivot][col] == 0) ++pivot;
    if (pivot == rows_.size()) continue;
    std::swap(rows_[rank], rows_[pivot]);
    const unsigned inv = fp_inverse(rows_[rank][col], p_);
    for (auto& x : rows_[rank]) x = static_cast<std::uint8_t>((x * inv) % p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == rank || rows_[r][col] == 0) continue;
      fp_axpy(rows_[r], p_ - rows_[r][col], rows_[rank], p_);
    }
    ++rank;
  }
  rows_.resize(rank);
  return rank;
}

std::vector<std::size_t> FpMatrix::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    const auto it = std::find_if(row.begin(), row.end(), [](std::uint8_t x) { return x != 0; });
    out.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return out;
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix reduced = *this;
  reduced.reduce();
  const auto piv = reduced.pivots();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;

  FpMatrix out(p_, cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FpRow v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rows_.size(); ++r) {
      v[piv[r]] = static_cast<std::uint8_t>((p_ - reduced.rows_[r][free]) % p_);
    }
    out.add_row(std::move(v));
  }
  out.reduce();
  return out;
}

bool FpMatrix::in_row_space(const FpRow& v) const {
  assert(v.size() == cols_);
  FpRow w = v;
  const auto piv = pivots();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (w[piv[r]] != 0) fp_axpy(w, p_ - w[piv[r]], rows_[r], p_);
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

}  // namespace oqecc
