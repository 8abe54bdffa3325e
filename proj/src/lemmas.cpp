#include "fpanv/lemmas.hpp"

#include <sstream>

namespace fpanv {

std::string_view field_name(Field f) {
  switch (f) {
    case Field::Sign: return "s";
    case Field::Exp: return "e";
    case Field::Ntz: return "ntz";
    case Field::Nlz: return "nlz";
    case Field::Nlo: return "nlo";
    case Field::Nto: return "nto";
    case Field::TrailExp: return "f";
  }
  return "?";
}

LinExpr LinExpr::operator-() const {
  LinExpr r = *this;
  for (auto& t : r.terms) t.coeff = -t.coeff;
  r.constant = -r.constant;
  return r;
}

LinExpr operator+(LinExpr a, const LinExpr& b) {
  for (const auto& t : b.terms) a.terms.push_back(t);
  a.constant += b.constant;
  return a;
}

LinExpr operator*(long long k, LinExpr a) {
  for (auto& t : a.terms) t.coeff *= k;
  a.constant *= k;
  return a;
}

namespace cdsl {

LinExpr sym(Slot s, Field f) { return sym_at(static_cast<int>(s), f); }

LinExpr sym_at(int slot, Field f) {
  LinExpr e;
  e.terms.push_back({LinTerm::Kind::Field, static_cast<uint8_t>(slot), f, 0, 1});
  return e;
}

Constraint is_zero_at(int slot) { return sym_at(slot, Field::Exp) == emin_sym() - 1; }

LinExpr p_sym() {
  LinExpr e;
  e.terms.push_back({LinTerm::Kind::P, 0, Field::Exp, 0, 1});
  return e;
}

LinExpr emin_sym() {
  LinExpr e;
  e.terms.push_back({LinTerm::Kind::Emin, 0, Field::Exp, 0, 1});
  return e;
}

LinExpr bvar(int idx) {
  LinExpr e;
  e.terms.push_back({LinTerm::Kind::BoundVar, 0, Field::Exp, idx, 1});
  return e;
}

Constraint cmp(LinExpr a, Constraint::CmpOp op, LinExpr b) {
  Constraint c;
  c.kind = Constraint::Kind::Cmp;
  c.op = op;
  c.lhs = std::move(a);
  c.rhs = std::move(b);
  return c;
}

Constraint operator&&(Constraint a, Constraint b) {
  // Flatten nested conjunctions for readable output.
  Constraint c;
  c.kind = Constraint::Kind::And;
  auto push = [&](Constraint&& k) {
    if (k.kind == Constraint::Kind::And)
      for (auto& kk : k.kids) c.kids.push_back(std::move(kk));
    else
      c.kids.push_back(std::move(k));
  };
  push(std::move(a));
  push(std::move(b));
  return c;
}

Constraint operator||(Constraint a, Constraint b) {
  Constraint c;
  c.kind = Constraint::Kind::Or;
  auto push = [&](Constraint&& k) {
    if (k.kind == Constraint::Kind::Or)
      for (auto& kk : k.kids) c.kids.push_back(std::move(kk));
    else
      c.kids.push_back(std::move(k));
  };
  push(std::move(a));
  push(std::move(b));
  return c;
}

Constraint operator!(Constraint a) {
  Constraint c;
  c.kind = Constraint::Kind::Not;
  c.kids.push_back(std::move(a));
  return c;
}

Constraint implies(Constraint a, Constraint b) {
  Constraint c;
  c.kind = Constraint::Kind::Implies;
  c.kids.push_back(std::move(a));
  c.kids.push_back(std::move(b));
  return c;
}

Constraint truth() { return {}; }

Constraint is_zero(Slot s) { return e_(s) == emin_sym() - 1; }
Constraint is_pos_zero(Slot s) { return is_zero(s) && (s_(s) == 0); }
Constraint is_neg_zero(Slot s) { return is_zero(s) && (s_(s) == 1); }
Constraint nonzero(Slot s) { return e_(s) >= emin_sym(); }

Constraint op_eq(Slot a, Slot b) {
  Constraint c;
  c.kind = Constraint::Kind::OpEq;
  c.slot_a = static_cast<uint8_t>(a);
  c.slot_b = static_cast<uint8_t>(b);
  return c;
}

Constraint exists(int var, LinExpr lo, LinExpr hi, Constraint body) {
  Constraint c;
  c.kind = Constraint::Kind::Exists;
  c.var = var;
  c.lhs = std::move(lo);
  c.rhs = std::move(hi);
  c.kids.push_back(std::move(body));
  return c;
}

}  // namespace cdsl

long long eval_lin(const LinExpr& e, const EvalContext& ctx) {
  long long v = e.constant;
  for (const auto& t : e.terms) {
    long long a = 0;
    switch (t.kind) {
      case LinTerm::Kind::P: a = ctx.fmt->p; break;
      case LinTerm::Kind::Emin: a = ctx.fmt->e_min; break;
      case LinTerm::Kind::BoundVar: a = ctx.bound[t.var]; break;
      case LinTerm::Kind::Field: {
        const AbstractVal& av = ctx.vals[t.slot];
        switch (t.field) {
          case Field::Sign: a = av.sign(); break;
          case Field::Exp: a = av.exp(); break;
          case Field::Ntz: a = av.ntz(); break;
          case Field::Nlz: a = av.nlz(); break;
          case Field::Nlo: a = av.nlo(); break;
          case Field::Nto: a = av.nto(); break;
          case Field::TrailExp: a = av.trail_exp(*ctx.fmt); break;
        }
        break;
      }
    }
    v += t.coeff * a;
  }
  return v;
}

namespace {

bool abstract_equal(const AbstractVal& a, const AbstractVal& b, Domain vocab) {
  if (a.sign() != b.sign() || a.exp() != b.exp()) return false;
  if (vocab == Domain::SE) return true;
  if (a.ntz() != b.ntz()) return false;
  if (vocab == Domain::SETZ) return true;
  return a.nlz() == b.nlz() && a.nlo() == b.nlo() && a.nto() == b.nto();
}

}  // namespace

bool eval_constraint(const Constraint& c, EvalContext& ctx) {
  switch (c.kind) {
    case Constraint::Kind::True:
      return true;
    case Constraint::Kind::Cmp: {
      long long a = eval_lin(c.lhs, ctx), b = eval_lin(c.rhs, ctx);
      switch (c.op) {
        case Constraint::CmpOp::Eq: return a == b;
        case Constraint::CmpOp::Ne: return a != b;
        case Constraint::CmpOp::Lt: return a < b;
        case Constraint::CmpOp::Le: return a <= b;
        case Constraint::CmpOp::Gt: return a > b;
        case Constraint::CmpOp::Ge: return a >= b;
      }
      return false;
    }
    case Constraint::Kind::And:
      for (const auto& k : c.kids)
        if (!eval_constraint(k, ctx)) return false;
      return true;
    case Constraint::Kind::Or:
      for (const auto& k : c.kids)
        if (eval_constraint(k, ctx)) return true;
      return false;
    case Constraint::Kind::Not:
      return !eval_constraint(c.kids[0], ctx);
    case Constraint::Kind::Implies:
      return !eval_constraint(c.kids[0], ctx) || eval_constraint(c.kids[1], ctx);
    case Constraint::Kind::OpEq:
      return abstract_equal(ctx.vals[c.slot_a], ctx.vals[c.slot_b], ctx.op_eq_domain);
    case Constraint::Kind::Exists: {
      long long lo = eval_lin(c.lhs, ctx), hi = eval_lin(c.rhs, ctx);
      for (long long k = lo; k <= hi; ++k) {
        ctx.bound[c.var] = k;
        if (eval_constraint(c.kids[0], ctx)) return true;
      }
      return false;
    }
  }
  return false;
}

namespace {

bool is_bare_bvar(const LinExpr& e, int var) {
  return e.constant == 0 && e.terms.size() == 1 &&
         e.terms[0].kind == LinTerm::Kind::BoundVar && e.terms[0].var == var &&
         e.terms[0].coeff == 1;
}

void substitute_bvar(LinExpr& e, int var, const LinExpr& witness) {
  LinExpr out;
  out.constant = e.constant;
  for (const auto& t : e.terms) {
    if (t.kind == LinTerm::Kind::BoundVar && t.var == var) {
      LinExpr scaled = t.coeff * witness;
      for (const auto& wt : scaled.terms) out.terms.push_back(wt);
      out.constant += scaled.constant;
    } else {
      out.terms.push_back(t);
    }
  }
  e = std::move(out);
}

void substitute_bvar(Constraint& c, int var, const LinExpr& witness) {
  substitute_bvar(c.lhs, var, witness);
  substitute_bvar(c.rhs, var, witness);
  for (auto& k : c.kids) substitute_bvar(k, var, witness);
}

// Finds an equality conjunct of the form k = expr (or expr = k) in the body.
const LinExpr* find_pin(const Constraint& body, int var, LinExpr& storage) {
  if (body.kind == Constraint::Kind::Cmp && body.op == Constraint::CmpOp::Eq) {
    if (is_bare_bvar(body.lhs, var)) {
      storage = body.rhs;
      return &storage;
    }
    if (is_bare_bvar(body.rhs, var)) {
      storage = body.lhs;
      return &storage;
    }
  }
  if (body.kind == Constraint::Kind::And) {
    for (const auto& k : body.kids)
      if (find_pin(k, var, storage)) return &storage;
  }
  return nullptr;
}

}  // namespace

Constraint eliminate_bounded_exists(Constraint c) {
  for (auto& k : c.kids) k = eliminate_bounded_exists(std::move(k));
  if (c.kind != Constraint::Kind::Exists) return c;
  LinExpr witness;
  if (!find_pin(c.kids[0], c.var, witness)) return c;  // leave for Skolemization
  Constraint body = std::move(c.kids[0]);
  substitute_bvar(body, c.var, witness);
  using namespace cdsl;
  return (LinExpr(c.lhs) <= witness) && (LinExpr(witness) <= c.rhs) && std::move(body);
}

namespace {

const char* kSlotNames[4] = {"x", "y", "s", "e"};

std::string term_str(const LinTerm& t) {
  std::string base;
  switch (t.kind) {
    case LinTerm::Kind::P: base = "p"; break;
    case LinTerm::Kind::Emin: base = "e_min"; break;
    case LinTerm::Kind::BoundVar: base = "k" + std::to_string(t.var); break;
    case LinTerm::Kind::Field: {
      std::string slot =
          t.slot < 4 ? std::string(kSlotNames[t.slot]) : "v" + std::to_string(t.slot);
      base = std::string(field_name(t.field)) + "_" + slot;
      break;
    }
  }
  if (t.coeff == 1) return base;
  if (t.coeff == -1) return "-" + base;
  return std::to_string(t.coeff) + "*" + base;
}

}  // namespace

std::string to_string(const LinExpr& e) {
  std::string s;
  for (size_t i = 0; i < e.terms.size(); ++i) {
    std::string t = term_str(e.terms[i]);
    if (i == 0) {
      s = t;
    } else if (t.starts_with("-")) {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  if (e.terms.empty()) return std::to_string(e.constant);
  if (e.constant > 0) s += " + " + std::to_string(e.constant);
  if (e.constant < 0) s += " - " + std::to_string(-e.constant);
  return s;
}

std::string to_string(const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::True:
      return "true";
    case Constraint::Kind::Cmp: {
      const char* ops[] = {"=", "!=", "<", "<=", ">", ">="};
      return to_string(c.lhs) + " " + ops[static_cast<int>(c.op)] + " " + to_string(c.rhs);
    }
    case Constraint::Kind::And: {
      std::string s;
      for (size_t i = 0; i < c.kids.size(); ++i)
        s += (i ? " /\\ " : "") + to_string(c.kids[i]);
      return "(" + s + ")";
    }
    case Constraint::Kind::Or: {
      std::string s;
      for (size_t i = 0; i < c.kids.size(); ++i)
        s += (i ? " \\/ " : "") + to_string(c.kids[i]);
      return "(" + s + ")";
    }
    case Constraint::Kind::Not:
      return "!" + to_string(c.kids[0]);
    case Constraint::Kind::Implies:
      return "(" + to_string(c.kids[0]) + " -> " + to_string(c.kids[1]) + ")";
    case Constraint::Kind::OpEq:
      return std::string(kSlotNames[c.slot_a]) + " == " + kSlotNames[c.slot_b];
    case Constraint::Kind::Exists:
      return "(exists k" + std::to_string(c.var) + " in [" + to_string(c.lhs) + ", " +
             to_string(c.rhs) + "]: " + to_string(c.kids[0]) + ")";
  }
  return "?";
}

std::vector<const Lemma*> catalog(Domain d, SeltzoExtension ext) {
  std::vector<const Lemma*> out;
  for (const Lemma& l : full_lemma_list()) {
    if (l.supports(d)) {
      out.push_back(&l);
    } else if (d == Domain::SELTZO && ext == SeltzoExtension::SetzCompat && l.supports_setz) {
      out.push_back(&l);
    }
  }
  return out;
}

const Lemma* find_lemma(std::string_view name) {
  for (const Lemma& l : full_lemma_list())
    if (l.name == name) return &l;
  return nullptr;
}

std::string catalog_fingerprint(std::span<const Lemma* const> lemmas) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const Lemma* l : lemmas) {
    mix(l->name);
    mix("|");
    mix(domain_name(l->vocabulary));
    mix(to_string(l->hypothesis));
    for (const auto& cs : l->cases) {
      mix(";");
      mix(to_string(cs.body));
    }
    mix("\n");
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Constraint fixed_point_constraint(Domain d) {
  using namespace cdsl;
  const Slot X = Slot::X, Y = Slot::Y;
  const LinExpr P = p_sym();
  if (d == Domain::SE) {
    // Sound relaxation: every nonzero-error fixed point has e_x - e_y >= p.
    return is_zero(Y) || (e_(X) - e_(Y) >= P);
  }
  return is_zero(Y) || (e_(X) - e_(Y) > P + 1) ||
         ((e_(X) - e_(Y) == P + 1) &&
          (same_sign(X, Y) || (ntz_(X) < P - 1) || (ntz_(Y) == P - 1))) ||
         ((e_(X) - e_(Y) == P) && (ntz_(Y) == P - 1) && (ntz_(X) >= 1) &&
          (same_sign(X, Y) || (ntz_(X) < P - 1)));
}

}  // namespace fpanv
