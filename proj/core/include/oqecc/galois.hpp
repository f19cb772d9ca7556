#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace oqecc {

// A field element encoded as an integer whose little-endian base-p digits are
// the coefficients in the polynomial basis 1, x, x^2, ... of the field.
using Elem = std::uint32_t;

// Largest field size accepted for GF(p^m). The quadratic extension is then at
// most 4096 elements, which keeps every table and exhaustive scan small.
inline constexpr unsigned kMaxFieldSize = 64;

bool is_prime(unsigned n);

// Lexicographically least monic irreducible polynomial of the given degree
// over F_p, returned as coefficients from x^0 up to the leading 1. The order
// compares the non-leading coefficients as a base-p integer.
std::vector<unsigned> least_irreducible(unsigned p, unsigned degree);

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

// GF(p^degree) with log/antilog multiplication tables.
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned degree);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned size() const { return size_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }

  bool contains(Elem x) const { return x < size_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;  // x != 0
  Elem pow(Elem x, std::uint64_t e) const;
  Elem scale(Elem x, unsigned c) const;  // c in F_p

  unsigned digit(Elem x, unsigned i) const { return digits_[x * degree_ + i]; }
  Elem from_digits(const unsigned* d) const;

 private:
  Elem slow_mul(Elem x, Elem y) const;

  unsigned p_;
  unsigned degree_;
  unsigned size_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
  Elem primitive_ = 1;
};

// GF(q), q = p^m, together with its quadratic extension GF(q^2), the
// embedding of GF(q) into GF(q^2) and a normal element beta of GF(q^2)/GF(q).
// Immutable once built.
class GfContext {
 public:
  // Throws NotPrime or FieldTooLarge.
  static std::shared_ptr<const GfContext> make(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return base_.size(); }

  const FiniteField& base() const { return base_; }
  const FiniteField& ext() const { return ext_; }

  // Checked arithmetic on GF(q); OutOfRange for encodings >= q.
  Elem mul(Elem x, Elem y) const;
  Elem add(Elem x, Elem y) const;

  // Absolute trace GF(q) -> F_p.
  Elem trace(Elem x) const;

  // Trace of an element of GF(q^2) that lies in the embedded copy of GF(q).
  // Throws NotInSubfield otherwise.
  Elem ext_trace_to_base(Elem x) const;

  Elem embed(Elem x) const;
  std::optional<Elem> pull_back(Elem x) const;

  Elem beta() const { return beta_; }
  Elem beta_q() const { return beta_q_; }

  // Embedded image of the root of the base modulus used to build `embed`.
  Elem embedding_root() const { return root_; }

 private:
  GfContext(unsigned p, unsigned m);

  unsigned p_;
  unsigned m_;
  FiniteField base_;
  FiniteField ext_;
  Elem root_ = 0;
  std::vector<Elem> embed_;
  std::vector<std::int32_t> pull_back_;
  std::vector<Elem> trace_;
  Elem beta_ = 0;
  Elem beta_q_ = 0;

  friend Elem find_normal_beta(const GfContext& ctx);
};

// Least element beta of GF(q^2), in encoding order, such that beta and
// beta^q are linearly independent over the embedded GF(q).
Elem find_normal_beta(const GfContext& ctx);

using GfContextPtr = std::shared_ptr<const GfContext>;

}  // namespace oqecc
