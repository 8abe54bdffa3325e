#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fpanv/abstract.hpp"

namespace fpanv {

// ---------------------------------------------------------------------------
// Linear expressions and constraints over abstract variables.
//
// Lemma statements are data, not code: the same constraint trees drive the
// brute-force checkers and the SMT-LIB emitter, so the catalog cannot drift
// between the two. Atoms are fields of operand slots (inputs x, y and
// outputs s, e of one TwoSum gate), the precision p, e_min, and bounded
// integer variables introduced by a handful of lemma cases.
// ---------------------------------------------------------------------------

enum class Slot : uint8_t { X = 0, Y = 1, S = 2, E = 3 };

enum class Field : uint8_t { Sign, Exp, Ntz, Nlz, Nlo, Nto, TrailExp };

std::string_view field_name(Field f);  // "s", "e", "ntz", ...

struct LinTerm {
  enum class Kind : uint8_t { Field, P, Emin, BoundVar };
  Kind kind = Kind::P;
  uint8_t slot = 0;
  Field field = Field::Exp;
  int var = 0;
  long long coeff = 1;
};

struct LinExpr {
  std::vector<LinTerm> terms;
  long long constant = 0;

  LinExpr() = default;
  LinExpr(long long c) : constant(c) {}  // NOLINT: implicit by design
  LinExpr(int c) : constant(c) {}        // NOLINT

  LinExpr operator-() const;
  friend LinExpr operator+(LinExpr a, const LinExpr& b);
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return std::move(a) + (-b); }
  friend LinExpr operator*(long long k, LinExpr a);
};

struct Constraint {
  enum class Kind : uint8_t { True, Cmp, And, Or, Not, Implies, OpEq, Exists };
  enum class CmpOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

  Kind kind = Kind::True;
  CmpOp op = CmpOp::Eq;
  LinExpr lhs, rhs;                // Cmp; Exists bounds (lo, hi)
  std::vector<Constraint> kids;    // And/Or children; Not/Exists body; Implies (2)
  uint8_t slot_a = 0, slot_b = 0;  // OpEq
  int var = 0;                     // Exists bound variable index
};

// Expression/constraint builders.
namespace cdsl {

LinExpr sym(Slot s, Field f);
/// Slot indices beyond X/Y/S/E are legal; property encodings bind goal
/// operands to extra slots.
LinExpr sym_at(int slot, Field f);
Constraint is_zero_at(int slot);
inline LinExpr s_(Slot s) { return sym(s, Field::Sign); }
inline LinExpr e_(Slot s) { return sym(s, Field::Exp); }
inline LinExpr ntz_(Slot s) { return sym(s, Field::Ntz); }
inline LinExpr nlz_(Slot s) { return sym(s, Field::Nlz); }
inline LinExpr nlo_(Slot s) { return sym(s, Field::Nlo); }
inline LinExpr nto_(Slot s) { return sym(s, Field::Nto); }
inline LinExpr f_(Slot s) { return sym(s, Field::TrailExp); }
LinExpr p_sym();
LinExpr emin_sym();
LinExpr bvar(int idx);

Constraint cmp(LinExpr a, Constraint::CmpOp op, LinExpr b);
inline Constraint operator==(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Eq, std::move(b)); }
inline Constraint operator!=(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Ne, std::move(b)); }
inline Constraint operator<(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Lt, std::move(b)); }
inline Constraint operator<=(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Le, std::move(b)); }
inline Constraint operator>(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Gt, std::move(b)); }
inline Constraint operator>=(LinExpr a, LinExpr b) { return cmp(std::move(a), Constraint::CmpOp::Ge, std::move(b)); }

Constraint operator&&(Constraint a, Constraint b);
Constraint operator||(Constraint a, Constraint b);
Constraint operator!(Constraint a);
Constraint implies(Constraint a, Constraint b);
Constraint truth();

/// lo <= mid <= hi
inline Constraint between(LinExpr lo, LinExpr mid, LinExpr hi) {
  return (lo <= mid) && (LinExpr(mid) <= hi);
}

Constraint is_zero(Slot s);       // value is +-0.0 (e == e_min - 1)
Constraint is_pos_zero(Slot s);
Constraint is_neg_zero(Slot s);
Constraint nonzero(Slot s);
inline Constraint same_sign(Slot a, Slot b) { return s_(a) == s_(b); }
inline Constraint diff_sign(Slot a, Slot b) { return s_(a) != s_(b); }

/// Whole-tuple equality of two operands, expanded per domain at use.
Constraint op_eq(Slot a, Slot b);
/// s = x and e = y.
inline Constraint identity() { return op_eq(Slot::S, Slot::X) && op_eq(Slot::E, Slot::Y); }

Constraint exists(int var, LinExpr lo, LinExpr hi, Constraint body);

}  // namespace cdsl

/// Binding of operand slots to abstract values for evaluation.
struct EvalContext {
  std::span<const AbstractVal> vals;
  const FormatParams* fmt = nullptr;
  long long bound[4] = {0, 0, 0, 0};
  Domain op_eq_domain = Domain::SETZ;  // vocabulary used to expand OpEq
};

long long eval_lin(const LinExpr& e, const EvalContext& ctx);
bool eval_constraint(const Constraint& c, EvalContext& ctx);

/// Rewrites bounded existentials whose body pins the variable with an
/// equality (as in the "for each k" lemma cases, where e_s = k) into the
/// equivalent quantifier-free form. Valid in any polarity, unlike
/// Skolemization.
Constraint eliminate_bounded_exists(Constraint c);

std::string to_string(const LinExpr& e);
std::string to_string(const Constraint& c);

// ---------------------------------------------------------------------------
// Lemmas: hypothesis -> disjunction of conclusion cases, over one gate.
// ---------------------------------------------------------------------------

struct LemmaCase {
  std::string label;
  Constraint body;
};

struct Lemma {
  std::string name;
  std::string family;
  Domain vocabulary;  // fields the statement uses (SE or SETZ)
  bool supports_se = false, supports_setz = false, supports_seltzo = false;
  Constraint hypothesis;
  std::vector<LemmaCase> cases;
  int min_p = 4;  // smallest precision where the lemma is known sound

  bool supports(Domain d) const {
    switch (d) {
      case Domain::SE: return supports_se;
      case Domain::SETZ: return supports_setz;
      case Domain::SELTZO: return supports_seltzo;
    }
    return false;
  }
};

/// Extension policy for the SELTZO catalog. The appendix prints no
/// SELTZO-specific lemmas for the exact-sum and equal-trailing-exponent
/// input classes; SetzCompat fills those classes with the SETZ lemmas
/// (sound in SELTZO, weaker than the unprinted originals).
enum class SeltzoExtension { None, SetzCompat };

const std::vector<Lemma>& full_lemma_list();
std::vector<const Lemma*> catalog(Domain d,
                                  SeltzoExtension ext = SeltzoExtension::None);
const Lemma* find_lemma(std::string_view name);

/// Stable hash of the lemma statements in a catalog; changes iff any lemma
/// text changes.
std::string catalog_fingerprint(std::span<const Lemma* const> lemmas);

// ---------------------------------------------------------------------------
// Brute-force checkers over exhaustive small-precision windows.
// ---------------------------------------------------------------------------

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowSpec {
  long long lo = 0, hi = 0;   // exponent range for nonzero values
  bool include_zero = true;
  bool canonical = true;      // pin the first nonzero operand at exponent 0
  unsigned long long budget = 1000000000ULL;

  static WindowSpec default_for(const FormatParams& fmt) {
    return {-(2LL * fmt.p + 4), 0, true, true, 1000000000ULL};
  }
};

/// All concrete values with exponents in the window, in canonical order:
/// sign-major, exponent ascending (zero first), fraction ascending.
std::vector<FloatVal> window_values(const FormatParams& fmt, const WindowSpec& w);

struct SoundnessViolation {
  FloatVal x, y, s, e;
  bool swapped;  // hypothesis matched with roles reversed
};

struct SoundnessReport {
  std::string lemma;
  std::string format;
  WindowSpec window;
  unsigned long long pairs_checked = 0;
  unsigned long long hypothesis_matches = 0;
  std::vector<unsigned long long> case_witnesses;
  std::vector<SoundnessViolation> violations;  // capped
  unsigned long long violation_count = 0;
  bool sound() const { return violation_count == 0; }
};

SoundnessReport check_soundness(const Lemma& lemma, const FormatParams& fmt, const WindowSpec& w);

/// Abstract input pairs (x, y) in the window matched by no catalog
/// hypothesis in either orientation. Empty means the catalog covers the
/// window.
std::vector<std::pair<AbstractVal, AbstractVal>> check_coverage(
    Domain d, const FormatParams& fmt, const WindowSpec& w,
    SeltzoExtension ext = SeltzoExtension::None);

struct TightnessReport {
  std::string lemma;
  struct CaseWitness {
    std::string label;
    unsigned long long count = 0;
    bool vacuous = false;
    FloatVal x, y;  // one witness when count > 0
  };
  std::vector<CaseWitness> cases;
};

TightnessReport check_tightness(const Lemma& lemma, const FormatParams& fmt, const WindowSpec& w);

/// The exact set of abstract (s, e) output pairs witnessed by concrete
/// inputs in the given class (a constraint over slots X and Y).
std::set<std::pair<AbstractVal, AbstractVal>> mine_transfer(const Constraint& input_class,
                                                            Domain d, const FormatParams& fmt,
                                                            const WindowSpec& w);

/// Prop-2 fixed-point condition over slots (X, Y) in the given vocabulary;
/// the SE form is the sound relaxation that drops the ntz sub-conditions.
Constraint fixed_point_constraint(Domain d);

}  // namespace fpanv
