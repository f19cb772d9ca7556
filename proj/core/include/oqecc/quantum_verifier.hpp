#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oqecc/additive_code.hpp"

namespace oqecc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kMatrixTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-6;
inline constexpr double kSingularValueCutoff = 1e-7;

// Cap on q^n for building operators and projectors: 4096, or OQECC_MAX_DIM.
std::size_t verifier_max_dim();

// Cap on q^n for the exhaustive detectability and tensor sweeps, whose cost
// grows like q^{5n}: 64, or OQECC_MAX_DIM when set.
std::size_t sweep_max_dim();

// phase * X(a) Z(b) on (C^q)^{tensor n}, with X(a)|x> = |x+a> and
// Z(b)|x> = omega^{tr(b.x)}|x>. The phase is i^phase_exp for p = 2 and
// omega^phase_exp otherwise. Basis states are indexed with the first tensor
// factor most significant.
//
// The matrix is monomial, so it is stored as one target row and one
// coefficient per column.
class ErrorOperator {
 public:
  ErrorOperator(GfContextPtr ctx, std::vector<Elem> a, std::vector<Elem> b, unsigned phase_exp = 0);

  // Phase-0 lift of a symplectic vector.
  static ErrorOperator lift(const CodeVector& c);

  const GfContextPtr& ctx() const { return ctx_; }
  std::size_t n() const { return a_.size(); }
  const std::vector<Elem>& a() const { return a_; }
  const std::vector<Elem>& b() const { return b_; }
  unsigned phase_exp() const { return phase_exp_; }
  unsigned phase_modulus() const;
  std::size_t dim() const { return target_.size(); }

  std::uint32_t target(std::size_t col) const { return target_[col]; }
  Complex coefficient(std::size_t col) const { return coeff_[col]; }

  ComplexMatrix realization() const;

  // Exact group product, tracking the phase exponent.
  ErrorOperator operator*(const ErrorOperator& rhs) const;
  ErrorOperator power(unsigned e) const;

  ComplexMatrix left_apply(const ComplexMatrix& m) const;   // U * M
  ComplexMatrix right_apply(const ComplexMatrix& m) const;  // M * U
  Complex trace_product(const ComplexMatrix& m) const;      // Tr(U * M)
  Complex trace() const;

 private:
  GfContextPtr ctx_;
  std::vector<Elem> a_;
  std::vector<Elem> b_;
  unsigned phase_exp_;
  std::vector<std::uint32_t> target_;
  std::vector<Complex> coeff_;
};

// Throws CapExceeded when q^n exceeds verifier_max_dim().
ErrorOperator pauli_matrix(const GfContextPtr& ctx, std::span<const Elem> a, std::span<const Elem> b);

// Exponent k with U_c U_d U_c^{-1} U_d^{-1} = omega^k I, measured on dense
// matrices. Returns nullopt when the commutator is not such a scalar.
std::optional<unsigned> measured_commutator_exponent(const CodeVector& c, const CodeVector& d);

struct Projector {
  ComplexMatrix matrix;
  AdditiveCode source_code;  // symplectic layout
  AdditiveCode hull;
  std::vector<CodeVector> hull_basis;
  std::vector<Complex> eigenvalues;  // one selected eigenvalue per hull generator
  std::vector<unsigned> eigenvalue_choices;  // index into the generator's candidates
  std::size_t rank = 0;  // eigenvalues above 0.5
  std::vector<CodeVector> logical_basis;  // basis of dual(source_code)
};

// Candidate eigenvalues of the phase-0 lift of `y`: the p-th roots of the
// scalar U^p, in increasing argument.
std::vector<Complex> lift_eigenvalue_candidates(const CodeVector& y);

// P = prod_i (1/p) sum_j (lambda_i^{-1} U_i)^j over a basis of hull(X), with
// eigenvalues chosen by largest multiplicity, then smallest argument, and
// backtracking past unrealizable tuples. Throws ZeroCode, CapExceeded,
// NonCommutingLift, RankMismatch (rank != q^n/|hull|) and InvariantViolation
// (P not an orthogonal projector).
Projector build_projector(const AdditiveCode& x);

// Projector for an explicit tuple of candidate indices, or nullopt when the
// tuple is unrealizable (the product vanishes). No rank check.
std::optional<Projector> build_projector_with_choices(const AdditiveCode& x, const std::vector<unsigned>& choices);

struct Detection {
  bool detectable = false;
  std::optional<Complex> lambda;
  double deviation = 0;  // max |[PeP, L]| over logical generators L
};

// Detectable by the logical subsystem A: with C = A (x) B, PeP = I_A (x) B_e,
// i.e. PeP commutes with the lifts of a basis of dual(X) (which commute with
// P) within kMatrixTolerance. For stabilizer codes this is PeP = lambda P.
// lambda = Tr(PeP)/rank(P) is returned for detectable errors.
Detection check_detectable(const Projector& proj, const ErrorOperator& e);

struct Witness {
  std::vector<Elem> vector;  // (a|b) encodings
  std::string note;
  Complex value{0, 0};
};

struct VerifierReport {
  std::string check;
  bool pass = true;
  std::size_t examined = 0;
  std::size_t mismatches = 0;
  double tolerance = 0;
  std::string summary;
  std::vector<Witness> witnesses;  // capped; a failing report has at least one

  void fail(Witness w);
};

// rank(P) = q^n / |hull(X)| plus projector invariants.
VerifierReport verify_rank(const AdditiveCode& x);

// Numeric P e P = lambda P agrees with the predicate e not in hull^perp - X for
// every e in F_q^{2n}; every e of weight below d is detectable, and some e of
// weight d is not.
VerifierReport verify_detectability(const AdditiveCode& x, unsigned threads = 0);

// Restricted gauge (X) and logical (X^perp) operators commute and span
// algebras of dimension dimB^2 and dimA^2.
VerifierReport verify_tensor_factorization(const AdditiveCode& x, unsigned threads = 0);

// |Tr(e P)| > kTraceTolerance exactly when e is in hull(X).
VerifierReport verify_character_support(const AdditiveCode& x, unsigned threads = 0);

}  // namespace oqecc
