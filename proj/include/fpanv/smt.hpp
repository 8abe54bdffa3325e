#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpanv/lemmas.hpp"
#include "fpanv/network.hpp"

namespace fpanv {

struct PropertyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What to prove about a network: fixed-point preconditions on input pairs
/// plus a conjunction of goals. Goal operands name outputs (preferred) or
/// wires, resolved against the network's final segments; preconditions name
/// wires, resolved against input segments.
struct PropertySpec {
  struct FixedPointPre {
    std::string hi, lo;  // wire names: hi = RNE(hi + lo)
  };
  struct Goal {
    enum class Kind { Dominance, ErrorBound };
    Kind kind = Kind::ErrorBound;
    DomRel rel = DomRel::QD;  // Dominance: a dominates b
    long long k = 0;          // ErrorBound: |a| < 2^-k |b|
    std::string a, b;
  };
  std::vector<FixedPointPre> fixed_point_inputs;
  std::vector<Goal> goals;

  /// The double-word accuracy property: inputs (x0,x1) and (y0,y1) are
  /// TwoSum fixed points, and the combined error w0 satisfies
  /// |w0| < 2^-k |z0|.
  static PropertySpec relerr(long long k);

  std::string describe() const;
};

/// Sufficient condition for |num| < 2^-k |den| over slots (X=num, Y=den).
Constraint encode_error_goal(long long k, Slot num = Slot::X, Slot den = Slot::Y);

struct SmtAssertion {
  std::string tag;
  std::vector<int> slots;  // slot index -> segment id
  Constraint body;
};

struct SmtProblem {
  Domain domain = Domain::SETZ;
  FormatParams fmt;
  Fpan net;
  SegmentTable segs;
  std::vector<SmtAssertion> assertions;
  std::string property;
  long long k = 0;
  std::string catalog_hash;

  /// Abstract variables: one per segment and domain field (the 6n + 12g
  /// budget in the SELTZO domain). Bounded-case Skolem constants are not
  /// counted here.
  int variable_count() const { return domain_arity(domain) * segs.count(); }
  std::string var_name(int segment, Field f) const;
  /// segment ids in declaration order paired with their field names
  std::vector<std::string> variable_names() const;
};

struct EncodeOptions {
  SeltzoExtension seltzo_ext = SeltzoExtension::SetzCompat;
};

SmtProblem encode(const Fpan& net, Domain domain, const PropertySpec& prop,
                  const FormatParams& fmt, const EncodeOptions& opt = {});

/// Deterministic SMT-LIB 2 text (QF_LIA); identical problems produce
/// identical bytes.
std::string emit_smtlib(const SmtProblem& prob);

struct SolverResult {
  enum class Verdict { Unsat, Sat, Unknown, Timeout, Error };
  Verdict verdict = Verdict::Error;
  std::map<int, AbstractVal> model;  // per segment, present iff Sat
  double wall_seconds = 0;
  std::string detail;  // error text or raw verdict line
};

std::string_view verdict_name(SolverResult::Verdict v);

/// Independent re-check of a decoded model against every assertion and the
/// per-segment consistency predicate.
bool validate_model(const SmtProblem& prob, const std::map<int, AbstractVal>& model,
                    std::string* why = nullptr);

/// Runs the external solver on the emitted problem. The command template
/// must contain "{file}". Sat models are decoded and independently
/// re-checked against every assertion; a model that fails re-validation is
/// reported as Error, never as Sat.
SolverResult solve(const SmtProblem& prob, const std::string& solver_cmd, double timeout_s);

/// Environment/driver plumbing: FPANV_SOLVER, then z3 or cvc5 on PATH, then
/// a node shim for the z3 wasm package. Throws if nothing is found.
std::string default_solver_command();
std::optional<std::string> try_default_solver_command();

struct MaxKProbe {
  long long k;
  SolverResult::Verdict verdict;
  double seconds;
};

struct MaxKResult {
  std::optional<long long> k;  // largest k with unsat, if any
  bool inconclusive = false;   // solver returned unknown/timeout/error
  std::vector<MaxKProbe> probes;
};

/// Binary search for the largest k in [k_lo, k_hi] whose problem is unsat,
/// using unsat-downward monotonicity of the error-bound property.
MaxKResult max_provable_k(const Fpan& net, Domain domain, const FormatParams& fmt,
                          long long k_lo, long long k_hi, const std::string& solver_cmd,
                          double timeout_s, const EncodeOptions& opt = {});

/// Floating-point-theory (QF_BVFP) problem asserting a violation of the
/// lemma over the six-operation TwoSum sequence; unsat means the lemma
/// holds for the format. Only named IEEE-style formats are supported.
std::string emit_lemma_qffp(const Lemma& lemma, const FormatParams& fmt);

}  // namespace fpanv
