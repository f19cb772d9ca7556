#include "oqecc/quantum_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "oqecc/code_params.hpp"
#include "oqecc/error.hpp"
#include "oqecc/parallel.hpp"

namespace oqecc {

namespace {

constexpr std::size_t kMaxWitnesses = 8;
constexpr std::size_t kSweepChunks = 32;

Complex unit_root(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

std::optional<std::size_t> env_max_dim() {
  const char* raw = std::getenv("OQECC_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

// q^n, or CapExceeded beyond `cap`.
std::size_t hilbert_dim(const GfContext& ctx, std::size_t n, std::size_t cap, const char* what) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < n; ++i) {
    d *= ctx.q();
    if (d > cap) {
      throw Error(ErrorCode::CapExceeded, std::string(what) + ": q^n exceeds " + std::to_string(cap));
    }
  }
  return d;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

AdditiveCode require_nonzero_symplectic(const AdditiveCode& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroCode, "the verifier needs X != {0}");
  return as_symplectic(x);
}

CodeVector vector_at(const GfContextPtr& ctx, std::size_t n, std::uint64_t index) {
  FpRow digits(2 * n * ctx->m());
  for (auto& d : digits) {
    d = static_cast<std::uint8_t>(index % ctx->p());
    index /= ctx->p();
  }
  return CodeVector::from_digits(ctx, Layout::Symplectic, n, digits);
}

std::size_t numeric_rank(const ComplexMatrix& rows) {
  if (rows.rows() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > kSingularValueCutoff * sv(0);
  return r;
}

std::size_t eigen_rank(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r += es.eigenvalues()(i) > 0.5;
  return r;
}

std::uint64_t space_size(const GfContext& ctx, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) s *= ctx.q();
  return s;
}

struct Lifts {
  std::vector<CodeVector> basis;
  std::vector<ErrorOperator> ops;
};

Lifts hull_lifts(const AdditiveCode& hull_code) {
  Lifts out;
  out.basis = hull_code.generators();
  for (const auto& y : out.basis) out.ops.push_back(ErrorOperator::lift(y));
  for (std::size_t i = 0; i < out.ops.size(); ++i) {
    for (std::size_t j = i + 1; j < out.ops.size(); ++j) {
      const ErrorOperator ij = out.ops[i] * out.ops[j];
      const ErrorOperator ji = out.ops[j] * out.ops[i];
      if (ij.phase_exp() != ji.phase_exp()) {
        throw Error(ErrorCode::NonCommutingLift, "hull generators " + std::to_string(i) + " and " +
                                                     std::to_string(j) + " do not commute");
      }
    }
  }
  return out;
}

// Multiplicity of eigenvalue lambda of U: Tr of its eigenprojector.
double eigen_multiplicity(const ErrorOperator& u, Complex lambda) {
  const unsigned p = u.ctx()->p();
  Complex acc = 0;
  Complex li = 1;
  for (unsigned j = 0; j < p; ++j) {
    acc += li * u.power(j).trace();
    li /= lambda;
  }
  return acc.real() / p;
}

// P * (1/p) sum_j (lambda^{-1} U)^j.
ComplexMatrix apply_eigenprojector(const ComplexMatrix& proj, const ErrorOperator& u, Complex lambda) {
  const unsigned p = u.ctx()->p();
  ComplexMatrix out = ComplexMatrix::Zero(proj.rows(), proj.cols());
  Complex li = 1;
  for (unsigned j = 0; j < p; ++j) {
    out += li * u.power(j).right_apply(proj);
    li /= lambda;
  }
  return out / static_cast<double>(p);
}

Projector assemble(const AdditiveCode& sym, AdditiveCode hull_code, const Lifts& lifts,
                   const std::vector<unsigned>& choices, ComplexMatrix matrix) {
  Projector proj{std::move(matrix), sym, std::move(hull_code), lifts.basis, {}, choices, 0};
  for (std::size_t i = 0; i < choices.size(); ++i) {
    proj.eigenvalues.push_back(lift_eigenvalue_candidates(lifts.basis[i])[choices[i]]);
  }
  proj.rank = eigen_rank(proj.matrix);
  proj.logical_basis = dual(sym).generators();
  return proj;
}

}  // namespace

std::size_t verifier_max_dim() { return env_max_dim().value_or(4096); }

std::size_t sweep_max_dim() { return env_max_dim().value_or(64); }

ErrorOperator::ErrorOperator(GfContextPtr ctx, std::vector<Elem> a, std::vector<Elem> b, unsigned phase_exp)
    : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)), phase_exp_(0) {
  if (a_.size() != b_.size()) throw Error(ErrorCode::DimensionMismatch, "a and b differ in length");
  const unsigned q = ctx_->q();
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] >= q || b_[i] >= q) throw Error(ErrorCode::OutOfRange, "operator label >= q");
  }
  phase_exp_ = phase_exp % phase_modulus();

  const FiniteField& f = ctx_->base();
  const std::size_t n = a_.size();
  const std::size_t dim = hilbert_dim(*ctx_, n, verifier_max_dim(), "pauli_matrix");
  const unsigned p = ctx_->p();
  const Complex scalar = unit_root(static_cast<double>(phase_exp_) / phase_modulus());

  target_.resize(dim);
  coeff_.resize(dim);
  std::vector<Elem> x(n);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rem = col;
    for (std::size_t i = n; i-- > 0;) {
      x[i] = static_cast<Elem>(rem % q);
      rem /= q;
    }
    Elem bx = 0;
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bx = f.add(bx, f.mul(b_[i], x[i]));
      row = row * q + f.add(x[i], a_[i]);
    }
    target_[col] = static_cast<std::uint32_t>(row);
    coeff_[col] = scalar * unit_root(static_cast<double>(ctx_->trace(bx)) / p);
  }
}

ErrorOperator ErrorOperator::lift(const CodeVector& c) {
  if (c.layout() != Layout::Symplectic) throw Error(ErrorCode::LayoutMismatch, "lifts need (a|b) vectors");
  const auto a = c.a(), b = c.b();
  return ErrorOperator(c.ctx(), {a.begin(), a.end()}, {b.begin(), b.end()});
}

unsigned ErrorOperator::phase_modulus() const { return ctx_->p() == 2 ? 4 : ctx_->p(); }

ComplexMatrix ErrorOperator::realization() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t col = 0; col < dim(); ++col) m(target_[col], col) = coeff_[col];
  return m;
}

ErrorOperator ErrorOperator::operator*(const ErrorOperator& rhs) const {
  if (rhs.n() != n() || rhs.ctx_->q() != ctx_->q()) throw Error(ErrorCode::DimensionMismatch, "operator sizes differ");
  // X(a)Z(b) X(a')Z(b') = omega^{tr(a'.b)} X(a+a') Z(b+b').
  const FiniteField& f = ctx_->base();
  Elem cross = 0;
  std::vector<Elem> a(n()), b(n());
  for (std::size_t i = 0; i < n(); ++i) {
    cross = f.add(cross, f.mul(rhs.a_[i], b_[i]));
    a[i] = f.add(a_[i], rhs.a_[i]);
    b[i] = f.add(b_[i], rhs.b_[i]);
  }
  const unsigned omega_step = ctx_->p() == 2 ? 2 : 1;
  const unsigned phase = phase_exp_ + rhs.phase_exp_ + omega_step * ctx_->trace(cross);
  return ErrorOperator(ctx_, std::move(a), std::move(b), phase);
}

ErrorOperator ErrorOperator::power(unsigned e) const {
  ErrorOperator acc(ctx_, std::vector<Elem>(n(), 0), std::vector<Elem>(n(), 0));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

ComplexMatrix ErrorOperator::left_apply(const ComplexMatrix& m) const {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t x = 0; x < dim(); ++x) out.row(target_[x]) = coeff_[x] * m.row(x);
  return out;
}

ComplexMatrix ErrorOperator::right_apply(const ComplexMatrix& m) const {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < dim(); ++c) out.col(c) = coeff_[c] * m.col(target_[c]);
  return out;
}

Complex ErrorOperator::trace_product(const ComplexMatrix& m) const {
  Complex acc = 0;
  for (std::size_t x = 0; x < dim(); ++x) acc += coeff_[x] * m(x, target_[x]);
  return acc;
}

Complex ErrorOperator::trace() const {
  Complex acc = 0;
  for (std::size_t x = 0; x < dim(); ++x) {
    if (target_[x] == x) acc += coeff_[x];
  }
  return acc;
}

ErrorOperator pauli_matrix(const GfContextPtr& ctx, std::span<const Elem> a, std::span<const Elem> b) {
  return ErrorOperator(ctx, {a.begin(), a.end()}, {b.begin(), b.end()});
}

std::optional<unsigned> measured_commutator_exponent(const CodeVector& c, const CodeVector& d) {
  const ComplexMatrix uc = ErrorOperator::lift(c).realization();
  const ComplexMatrix ud = ErrorOperator::lift(d).realization();
  const ComplexMatrix comm = uc * ud * uc.adjoint() * ud.adjoint();
  const unsigned p = c.ctx()->p();
  const ComplexMatrix id = ComplexMatrix::Identity(comm.rows(), comm.cols());
  for (unsigned k = 0; k < p; ++k) {
    if (max_abs(comm - unit_root(static_cast<double>(k) / p) * id) <= kMatrixTolerance) return k;
  }
  return std::nullopt;
}

std::vector<Complex> lift_eigenvalue_candidates(const CodeVector& y) {
  const ErrorOperator u = ErrorOperator::lift(y);
  const unsigned p = y.ctx()->p();
  // U^p is the scalar i^e (p = 2) or omega^e.
  const ErrorOperator up = u.power(p);
  const double turns = static_cast<double>(up.phase_exp()) / up.phase_modulus();
  std::vector<Complex> out;
  for (unsigned k = 0; k < p; ++k) out.push_back(unit_root((turns + k) / p));
  return out;
}

std::optional<Projector> build_projector_with_choices(const AdditiveCode& x, const std::vector<unsigned>& choices) {
  const AdditiveCode sym = require_nonzero_symplectic(x);
  const std::size_t dim = hilbert_dim(*sym.ctx(), sym.n(), verifier_max_dim(), "build_projector");
  AdditiveCode hull_code = hull(sym);
  const Lifts lifts = hull_lifts(hull_code);
  if (choices.size() != lifts.ops.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one eigenvalue choice per hull generator");
  }
  ComplexMatrix proj = ComplexMatrix::Identity(dim, dim);
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const auto candidates = lift_eigenvalue_candidates(lifts.basis[i]);
    if (choices[i] >= candidates.size()) throw Error(ErrorCode::OutOfRange, "eigenvalue choice out of range");
    proj = apply_eigenprojector(proj, lifts.ops[i], candidates[choices[i]]);
    if (proj.trace().real() < 0.5) return std::nullopt;
  }
  return assemble(sym, std::move(hull_code), lifts, choices, std::move(proj));
}

Projector build_projector(const AdditiveCode& x) {
  const AdditiveCode sym = require_nonzero_symplectic(x);
  const std::size_t dim = hilbert_dim(*sym.ctx(), sym.n(), verifier_max_dim(), "build_projector");
  AdditiveCode hull_code = hull(sym);
  const Lifts lifts = hull_lifts(hull_code);
  const std::size_t t = lifts.ops.size();

  // Per generator: candidate indices by decreasing multiplicity, then by
  // increasing argument.
  std::vector<std::vector<Complex>> candidates(t);
  std::vector<std::vector<unsigned>> order(t);
  for (std::size_t i = 0; i < t; ++i) {
    candidates[i] = lift_eigenvalue_candidates(lifts.basis[i]);
    std::vector<long> mult;
    for (const auto& lambda : candidates[i]) mult.push_back(std::lround(eigen_multiplicity(lifts.ops[i], lambda)));
    order[i].resize(candidates[i].size());
    for (unsigned k = 0; k < order[i].size(); ++k) order[i][k] = k;
    std::stable_sort(order[i].begin(), order[i].end(), [&](unsigned l, unsigned r) { return mult[l] > mult[r]; });
  }

  // Depth-first search over eigenvalue tuples; stack[i] is the projector
  // after applying generators 0..i-1.
  std::vector<ComplexMatrix> stack;
  stack.push_back(ComplexMatrix::Identity(dim, dim));
  std::vector<std::size_t> cursor(t, 0);
  std::size_t level = 0;
  while (level < t) {
    if (cursor[level] == order[level].size()) {
      if (level == 0) throw Error(ErrorCode::RankMismatch, "no realizable eigenvalue tuple");
      cursor[level] = 0;
      stack.pop_back();
      --level;
      ++cursor[level];
      continue;
    }
    const unsigned k = order[level][cursor[level]];
    ComplexMatrix next = apply_eigenprojector(stack.back(), lifts.ops[level], candidates[level][k]);
    if (next.trace().real() < 0.5) {
      ++cursor[level];
      continue;
    }
    stack.push_back(std::move(next));
    ++level;
  }

  std::vector<unsigned> choices(t);
  for (std::size_t i = 0; i < t; ++i) choices[i] = order[i][cursor[i]];
  Projector proj = assemble(sym, std::move(hull_code), lifts, choices, std::move(stack.back()));

  const double herm = max_abs(proj.matrix - proj.matrix.adjoint());
  const double idem = max_abs(proj.matrix * proj.matrix - proj.matrix);
  if (herm > kMatrixTolerance || idem > kMatrixTolerance) {
    std::ostringstream msg;
    msg << "projector invariants fail: |P - P^+| = " << herm << ", |P^2 - P| = " << idem;
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
  const std::size_t expected = dim / static_cast<std::size_t>(proj.hull.size());
  if (proj.rank != expected) {
    throw Error(ErrorCode::RankMismatch,
                "rank(P) = " + std::to_string(proj.rank) + ", expected q^n/y = " + std::to_string(expected));
  }
  return proj;
}

Detection check_detectable(const Projector& proj, const ErrorOperator& e) {
  if (static_cast<Eigen::Index>(e.dim()) != proj.matrix.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "error operator and projector sizes differ");
  }
  const ComplexMatrix pep = e.right_apply(proj.matrix) * proj.matrix;
  const Complex lambda = pep.trace() / static_cast<double>(proj.rank);
  Detection out;
  for (const auto& l : proj.logical_basis) {
    const ErrorOperator u = ErrorOperator::lift(l);
    out.deviation = std::max(out.deviation, max_abs(u.left_apply(pep) - u.right_apply(pep)));
  }
  out.detectable = out.deviation <= kMatrixTolerance;
  if (out.detectable) out.lambda = lambda;
  return out;
}

void VerifierReport::fail(Witness w) {
  pass = false;
  ++mismatches;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

VerifierReport verify_rank(const AdditiveCode& x) {
  VerifierReport report;
  report.check = "rank";
  report.tolerance = kMatrixTolerance;
  report.examined = 1;
  const AdditiveCode sym = require_nonzero_symplectic(x);
  const std::size_t dim = hilbert_dim(*sym.ctx(), sym.n(), verifier_max_dim(), "verify rank");
  const std::size_t expected = dim / static_cast<std::size_t>(hull(sym).size());
  try {
    const Projector proj = build_projector(sym);
    report.summary = "rank(P) = " + std::to_string(proj.rank) + " = q^n/y";
  } catch (const Error& err) {
    if (!is_theory_violation(err.code())) throw;
    report.fail({{}, err.what(), Complex(static_cast<double>(expected), 0)});
    report.summary = err.what();
  }
  return report;
}

VerifierReport verify_detectability(const AdditiveCode& x, unsigned threads) {
  VerifierReport report;
  report.check = "detect";
  report.tolerance = kMatrixTolerance;
  const AdditiveCode sym = require_nonzero_symplectic(x);
  hilbert_dim(*sym.ctx(), sym.n(), sweep_max_dim(), "verify detect");
  const Projector proj = build_projector(sym);
  const AdditiveCode y_perp = dual(proj.hull);
  const Distance dist = min_distance(sym, DistanceMethod::BasisEnumeration, threads);

  const std::uint64_t total = space_size(*sym.ctx(), sym.n());
  std::vector<VerifierReport> parts(kSweepChunks);
  std::vector<char> weight_d_undetectable(kSweepChunks, 0);
  parallel_chunks(total, kSweepChunks, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const CodeVector ebar = vector_at(sym.ctx(), sym.n(), idx);
      const Detection det = check_detectable(proj, ErrorOperator::lift(ebar));
      const bool predicted = !(contains(y_perp, ebar) && !contains(sym, ebar));
      const std::size_t w = swt(ebar);
      ++parts[chunk].examined;
      if (det.detectable != predicted) {
        parts[chunk].fail({ebar.coords(), predicted ? "predicted detectable, numerically not"
                                                    : "predicted undetectable, numerically detectable",
                           Complex(det.deviation, 0)});
      } else if (dist.d && w < *dist.d && !det.detectable) {
        parts[chunk].fail({ebar.coords(), "weight below d but undetectable", Complex(det.deviation, 0)});
      }
      if (dist.d && w == *dist.d && !det.detectable) weight_d_undetectable[chunk] = 1;
    }
  });
  for (auto& part : parts) {
    report.examined += part.examined;
    for (auto& w : part.witnesses) report.fail(std::move(w));
    report.mismatches += part.mismatches - part.witnesses.size();
  }
  const bool has_weight_d = std::any_of(weight_d_undetectable.begin(), weight_d_undetectable.end(),
                                        [](char c) { return c != 0; });
  if (dist.d && !has_weight_d) {
    report.fail({dist.witness->coords(), "no undetectable error of weight d", {}});
  }
  report.summary = std::to_string(report.examined) + " errors classified, " + std::to_string(report.mismatches) +
                   " mismatches, d = " + dist.str();
  return report;
}

VerifierReport verify_tensor_factorization(const AdditiveCode& x, unsigned threads) {
  VerifierReport report;
  report.check = "tensor";
  report.tolerance = kMatrixTolerance;
  const AdditiveCode sym = require_nonzero_symplectic(x);
  const std::size_t dim = hilbert_dim(*sym.ctx(), sym.n(), sweep_max_dim(), "verify tensor");
  const SubsystemParams params = subsystem_params(sym, DistanceMethod::BasisEnumeration, threads);
  const Projector proj = build_projector(sym);

  auto restricted = [&](const AdditiveCode& set, std::vector<std::vector<Elem>>& labels) {
    std::vector<FpRow> words;
    set.for_each_codeword([&](const FpRow& w) { words.push_back(w); });
    std::vector<ComplexMatrix> ops(words.size());
    labels.resize(words.size());
    parallel_chunks(words.size(), kSweepChunks, threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        const CodeVector v = CodeVector::from_digits(sym.ctx(), Layout::Symplectic, sym.n(), words[i]);
        labels[i] = v.coords();
        ops[i] = ErrorOperator::lift(v).right_apply(proj.matrix) * proj.matrix;
      }
    });
    return ops;
  };
  std::vector<std::vector<Elem>> gauge_labels, logical_labels;
  const auto gauge = restricted(sym, gauge_labels);
  const auto logical = restricted(dual(sym), logical_labels);

  std::vector<VerifierReport> parts(kSweepChunks);
  parallel_chunks(gauge.size(), kSweepChunks, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t g = begin; g < end; ++g) {
      for (std::size_t l = 0; l < logical.size(); ++l) {
        ++parts[chunk].examined;
        const double dev = max_abs(gauge[g] * logical[l] - logical[l] * gauge[g]);
        if (dev > kMatrixTolerance) {
          auto label = gauge_labels[g];
          label.insert(label.end(), logical_labels[l].begin(), logical_labels[l].end());
          parts[chunk].fail({std::move(label), "gauge/logical pair fails to commute", Complex(dev, 0)});
        }
      }
    }
  });
  for (auto& part : parts) {
    report.examined += part.examined;
    for (auto& w : part.witnesses) report.fail(std::move(w));
    report.mismatches += part.mismatches - part.witnesses.size();
  }

  auto span_dim = [&](const std::vector<ComplexMatrix>& ops) {
    ComplexMatrix rows(static_cast<Eigen::Index>(ops.size()), static_cast<Eigen::Index>(dim * dim));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      rows.row(static_cast<Eigen::Index>(i)) = ops[i].reshaped().transpose();
    }
    return numeric_rank(rows);
  };
  const std::size_t gauge_span = span_dim(gauge);
  const std::size_t logical_span = span_dim(logical);
  const std::uint64_t db = params.dim_b(), da = params.dim_a();
  if (gauge_span != db * db) {
    report.fail({{}, "gauge span " + std::to_string(gauge_span) + " != dimB^2 = " + std::to_string(db * db),
                 Complex(static_cast<double>(gauge_span), 0)});
  }
  if (logical_span != da * da) {
    report.fail({{}, "logical span " + std::to_string(logical_span) + " != dimA^2 = " + std::to_string(da * da),
                 Complex(static_cast<double>(logical_span), 0)});
  }
  report.summary = "gauge span " + std::to_string(gauge_span) + ", logical span " + std::to_string(logical_span) +
                   ", " + std::to_string(report.examined) + " commutators checked";
  return report;
}

VerifierReport verify_character_support(const AdditiveCode& x, unsigned threads) {
  VerifierReport report;
  report.check = "support";
  report.tolerance = kTraceTolerance;
  const AdditiveCode sym = require_nonzero_symplectic(x);
  const Projector proj = build_projector(sym);

  const std::uint64_t total = space_size(*sym.ctx(), sym.n());
  std::vector<VerifierReport> parts(kSweepChunks);
  std::vector<std::size_t> support(kSweepChunks, 0);
  parallel_chunks(total, kSweepChunks, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const CodeVector ebar = vector_at(sym.ctx(), sym.n(), idx);
      const Complex tr = ErrorOperator::lift(ebar).trace_product(proj.matrix);
      const bool nonzero = std::abs(tr) > kTraceTolerance;
      ++parts[chunk].examined;
      support[chunk] += nonzero;
      if (nonzero != contains(proj.hull, ebar)) {
        parts[chunk].fail({ebar.coords(), nonzero ? "nonzero trace outside hull" : "vanishing trace on hull", tr});
      }
    }
  });
  std::size_t support_size = 0;
  for (std::size_t c = 0; c < kSweepChunks; ++c) {
    report.examined += parts[c].examined;
    for (auto& w : parts[c].witnesses) report.fail(std::move(w));
    report.mismatches += parts[c].mismatches - parts[c].witnesses.size();
    support_size += support[c];
  }
  report.summary = std::to_string(support_size) + " of " + std::to_string(report.examined) +
                   " errors with nonzero trace, |hull| = " + std::to_string(proj.hull.size());
  return report;
}

}  // namespace oqecc
