#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oqecc/fp_linalg.hpp"
#include "oqecc/galois.hpp"

namespace oqecc {

// Symplectic: vectors (a|b) in F_q^{2n}. Hermitian: vectors in F_{q^2}^n.
enum class Layout { Symplectic, Hermitian };

const char* to_string(Layout layout);

// Digits of F_p per coordinate: m for symplectic, 2m for hermitian. Either
// way a vector expands to 2*n*m digits.
unsigned digits_per_coordinate(const GfContext& ctx, Layout layout);

class CodeVector {
 public:
  // Symplectic coords are (a_1..a_n | b_1..b_n); hermitian coords are n
  // elements of GF(q^2). Throws OutOfRange on bad encodings and
  // DimensionMismatch on an odd symplectic length.
  CodeVector(GfContextPtr ctx, Layout layout, std::vector<Elem> coords);

  static CodeVector symplectic(GfContextPtr ctx, std::span<const Elem> a, std::span<const Elem> b);
  static CodeVector zero(GfContextPtr ctx, Layout layout, std::size_t n);
  static CodeVector from_digits(GfContextPtr ctx, Layout layout, std::size_t n, const FpRow& digits);

  const GfContextPtr& ctx() const { return ctx_; }
  Layout layout() const { return layout_; }
  std::size_t n() const { return layout_ == Layout::Symplectic ? coords_.size() / 2 : coords_.size(); }
  const std::vector<Elem>& coords() const { return coords_; }

  // Symplectic only.
  std::span<const Elem> a() const;
  std::span<const Elem> b() const;

  // F_p expansion, coordinate-major then digit (little-endian).
  FpRow digits() const;

  bool is_zero() const;

  bool operator==(const CodeVector& other) const {
    return layout_ == other.layout_ && coords_ == other.coords_ && ctx_->p() == other.ctx_->p() &&
           ctx_->m() == other.ctx_->m();
  }

 private:
  GfContextPtr ctx_;
  Layout layout_;
  std::vector<Elem> coords_;
};

// An F_p-linear subspace in either layout, kept as a canonical basis so that
// equal codes compare equal.
class AdditiveCode {
 public:
  // Span of `gens`; an empty list yields the zero code.
  static AdditiveCode from_generators(GfContextPtr ctx, std::size_t n, Layout layout,
                                      std::span<const CodeVector> gens);
  static AdditiveCode from_rows(GfContextPtr ctx, std::size_t n, Layout layout, FpMatrix rows);
  static AdditiveCode zero(GfContextPtr ctx, std::size_t n, Layout layout);
  static AdditiveCode whole(GfContextPtr ctx, std::size_t n, Layout layout);

  const GfContextPtr& ctx() const { return ctx_; }
  std::size_t n() const { return n_; }
  Layout layout() const { return layout_; }
  const FpMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.row_count(); }
  std::size_t columns() const { return basis_.cols(); }
  bool is_zero() const { return rank() == 0; }

  // |X| = p^rank; throws CapExceeded when it does not fit in 64 bits.
  std::uint64_t size() const;

  std::vector<CodeVector> generators() const;

  // Calls `fn` with the digit expansion of every codeword, in the order of
  // the base-p counter over basis coefficients (first basis row fastest).
  void for_each_codeword(const std::function<void(const FpRow&)>& fn) const;

  bool operator==(const AdditiveCode& other) const;

 private:
  AdditiveCode(GfContextPtr ctx, std::size_t n, Layout layout, FpMatrix basis);

  GfContextPtr ctx_;
  std::size_t n_;
  Layout layout_;
  FpMatrix basis_;
};

// tr(b.a' - a.b') for u = (a|b), v = (a'|b'). This is the exponent of the
// commutator phase of the operators X(a)Z(b) and X(a')Z(b').
Elem symplectic_form(const CodeVector& u, const CodeVector& v);

// tr_{q/p}((v.w^q - v^q.w) / (beta^{2q} - beta^2)) on F_{q^2}^n. Equals
// symplectic_form on preimages under phi_map.
Elem trace_alternating_form(const CodeVector& v, const CodeVector& w);

// Dispatches on the common layout; LayoutMismatch otherwise.
Elem layout_form(const CodeVector& u, const CodeVector& v);

// Matrix of the layout's form on the F_p unit vectors, so that
// form(u, v) = digits(u)^T * G * digits(v) mod p.
FpMatrix gram_matrix(const GfContextPtr& ctx, std::size_t n, Layout layout);

AdditiveCode dual(const AdditiveCode& x);
AdditiveCode intersect(const AdditiveCode& x, const AdditiveCode& z);
AdditiveCode code_sum(const AdditiveCode& x, const AdditiveCode& z);
bool contains(const AdditiveCode& x, const CodeVector& v);
AdditiveCode hull(const AdditiveCode& x);

CodeVector phi_map(const CodeVector& c);
CodeVector phi_inverse(const CodeVector& v);
AdditiveCode phi_map(const AdditiveCode& x);
AdditiveCode phi_inverse(const AdditiveCode& x);

// Symplectic view of a code in either layout.
AdditiveCode as_symplectic(const AdditiveCode& x);

}  // namespace oqecc
