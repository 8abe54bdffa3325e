#include "fpanv/smt.hpp"

#include <algorithm>
#include <sstream>

namespace fpanv {

using namespace cdsl;

PropertySpec PropertySpec::relerr(long long k) {
  PropertySpec p;
  p.fixed_point_inputs = {{"x0", "x1"}, {"y0", "y1"}};
  Goal g;
  g.kind = Goal::Kind::ErrorBound;
  g.k = k;
  g.a = "w0";
  g.b = "z0";
  p.goals = {g};
  return p;
}

std::string PropertySpec::describe() const {
  std::ostringstream os;
  for (const auto& fp : fixed_point_inputs) os << "fixedpoint(" << fp.hi << "," << fp.lo << ") ";
  for (const auto& g : goals) {
    if (g.kind == Goal::Kind::ErrorBound)
      os << "errbound(k=" << g.k << ": |" << g.a << "| < 2^-k |" << g.b << "|) ";
    else
      os << "dominates(" << dom_rel_name(g.rel) << ", " << g.a << ", " << g.b << ") ";
  }
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

Constraint encode_error_goal(long long k, Slot num, Slot den) {
  return is_zero(num) || (e_(den) - e_(num) > LinExpr(k));
}

namespace {

Constraint consistency_constraint(Domain d) {
  const Slot V = Slot::X;
  const LinExpr P = p_sym();
  Constraint base =
      ((s_(V) == LinExpr(0)) || (s_(V) == LinExpr(1))) && (e_(V) >= emin_sym() - 1);
  if (d == Domain::SE) return base;
  if (d == Domain::SETZ) {
    return base && (ntz_(V) >= LinExpr(0)) && (ntz_(V) <= P - 1) &&
           implies(is_zero(V), ntz_(V) == P - 1);
  }
  return base &&
         implies(is_zero(V), (nlz_(V) == P - 1) && (ntz_(V) == P - 1) &&
                                 (nlo_(V) == LinExpr(0)) && (nto_(V) == LinExpr(0))) &&
         (((nlz_(V) > LinExpr(0)) && (nlo_(V) == LinExpr(0))) ||
          ((nlz_(V) == LinExpr(0)) && (nlo_(V) > LinExpr(0)))) &&
         (((ntz_(V) > LinExpr(0)) && (nto_(V) == LinExpr(0))) ||
          ((ntz_(V) == LinExpr(0)) && (nto_(V) > LinExpr(0)))) &&
         (((nlz_(V) == P - 1) && (ntz_(V) == P - 1)) || (nlz_(V) + ntz_(V) < P - 1)) &&
         (((nlo_(V) == P - 1) && (nto_(V) == P - 1)) || (nlo_(V) + nto_(V) < P - 1)) &&
         ((nlz_(V) + nto_(V) == P - 1) || (nlz_(V) + nto_(V) < P - 2)) &&
         ((ntz_(V) + nlo_(V) == P - 1) || (ntz_(V) + nlo_(V) < P - 2));
}

Constraint dominance_goal(DomRel rel, Domain domain) {
  // slot 0 dominates slot 1
  const LinExpr P = p_sym();
  LinExpr e_v = sym_at(0, Field::Exp), e_w = sym_at(1, Field::Exp);
  Constraint w_zero = is_zero_at(1);
  switch (rel) {
    case DomRel::P:
      return w_zero || (e_v - e_w >= P);
    case DomRel::S:
      if (domain == Domain::SE)
        throw PropertyError("S-dominance needs ntz; unsupported in the SE domain");
      return w_zero || (e_v - e_w >= P - sym_at(0, Field::Ntz));
    case DomRel::Ulp:
      if (domain == Domain::SE)
        throw PropertyError("ulp-dominance needs ntz; unsupported in the SE domain");
      return w_zero || (e_v - e_w > P - 1) ||
             ((e_v - e_w == P - 1) && (sym_at(1, Field::Ntz) == P - 1));
    case DomRel::QD:
      if (domain == Domain::SE)
        throw PropertyError("QD-dominance needs ntz; unsupported in the SE domain");
      return w_zero || (e_v - e_w > P) ||
             ((e_v - e_w == P) && (sym_at(1, Field::Ntz) == P - 1));
  }
  throw PropertyError("unknown dominance relation");
}

Constraint error_bound_goal(long long k) {
  LinExpr e_num = sym_at(0, Field::Exp), e_den = sym_at(1, Field::Exp);
  return is_zero_at(0) || (e_den - e_num > LinExpr(k));
}

Constraint or_cases(const Lemma& l) {
  if (l.cases.size() == 1) return l.cases[0].body;
  Constraint c;
  c.kind = Constraint::Kind::Or;
  for (const auto& cs : l.cases) c.kids.push_back(cs.body);
  return c;
}

void rebase_slots(Constraint& c, int base) {
  auto fix = [&](LinExpr& e) {
    for (auto& t : e.terms)
      if (t.kind == LinTerm::Kind::Field) t.slot = static_cast<uint8_t>(t.slot + base);
  };
  fix(c.lhs);
  fix(c.rhs);
  if (c.kind == Constraint::Kind::OpEq) {
    c.slot_a = static_cast<uint8_t>(c.slot_a + base);
    c.slot_b = static_cast<uint8_t>(c.slot_b + base);
  }
  for (auto& k : c.kids) rebase_slots(k, base);
}

}  // namespace

SmtProblem encode(const Fpan& net, Domain domain, const PropertySpec& prop,
                  const FormatParams& fmt, const EncodeOptions& opt) {
  SmtProblem pb;
  pb.domain = domain;
  pb.fmt = fmt;
  pb.net = net;
  pb.segs = build_segments(net);
  pb.property = prop.describe();
  auto lemmas = catalog(domain, opt.seltzo_ext);
  pb.catalog_hash = catalog_fingerprint(lemmas);
  for (const auto& g : prop.goals)
    if (g.kind == PropertySpec::Goal::Kind::ErrorBound) pb.k = g.k;

  // (1) consistency conditions per wire segment
  Constraint cons = consistency_constraint(domain);
  for (int s = 0; s < pb.segs.count(); ++s)
    pb.assertions.push_back({"consistency " + pb.segs.label(net, s), {s}, cons});

  // (2) execution conditions per gate: both orientations of every catalog
  // lemma, and the outputs form a TwoSum fixed point
  Constraint fp = fixed_point_constraint(domain);
  for (int g = 0; g < net.gate_count(); ++g) {
    const auto& gs = pb.segs.gate_segs[g];
    for (const Lemma* l : lemmas) {
      Constraint body = implies(l->hypothesis, or_cases(*l));
      pb.assertions.push_back({"gate" + std::to_string(g) + " " + l->name,
                               {gs.in_a, gs.in_b, gs.out_sum, gs.out_err},
                               body});
      pb.assertions.push_back({"gate" + std::to_string(g) + " " + l->name + " swapped",
                               {gs.in_b, gs.in_a, gs.out_sum, gs.out_err},
                               std::move(body)});
    }
    pb.assertions.push_back({"gate" + std::to_string(g) + " outputs are a fixed point",
                             {gs.out_sum, gs.out_err},
                             fp});
  }

  // (3) counterexample conditions: preconditions asserted, goal negated
  auto wire_index = [&](const std::string& name) {
    int w = net.wire_index(name);
    if (w < 0) throw PropertyError("property references unknown wire '" + name + "'");
    return w;
  };
  for (const auto& pre : prop.fixed_point_inputs) {
    int hi = wire_index(pre.hi), lo = wire_index(pre.lo);
    pb.assertions.push_back(
        {"precondition: (" + pre.hi + "," + pre.lo + ") is a TwoSum fixed point",
         {pb.segs.input_seg[hi], pb.segs.input_seg[lo]},
         fp});
  }

  if (!prop.goals.empty()) {
    auto resolve = [&](const std::string& name) {
      for (const auto& [out, w] : net.outputs)
        if (out == name) return pb.segs.final_seg[w];
      int w = net.wire_index(name);
      if (w >= 0) return pb.segs.final_seg[w];
      throw PropertyError("goal references unknown output '" + name + "'");
    };
    std::vector<int> slots;
    std::vector<Constraint> goals;
    for (const auto& g : prop.goals) {
      Constraint c = g.kind == PropertySpec::Goal::Kind::ErrorBound
                         ? error_bound_goal(g.k)
                         : dominance_goal(g.rel, domain);
      rebase_slots(c, static_cast<int>(slots.size()));
      slots.push_back(resolve(g.a));
      slots.push_back(resolve(g.b));
      goals.push_back(std::move(c));
    }
    Constraint all;
    if (goals.size() == 1) {
      all = std::move(goals[0]);
    } else {
      all.kind = Constraint::Kind::And;
      all.kids = std::move(goals);
    }
    Constraint neg;
    neg.kind = Constraint::Kind::Not;
    neg.kids.push_back(std::move(all));
    pb.assertions.push_back({"negated property goal", std::move(slots), std::move(neg)});
  }
  return pb;
}

namespace {

const Field kSeFields[] = {Field::Sign, Field::Exp};
const Field kSetzFields[] = {Field::Sign, Field::Exp, Field::Ntz};
const Field kSeltzoFields[] = {Field::Sign, Field::Exp, Field::Nlz,
                               Field::Nlo,  Field::Ntz, Field::Nto};

std::span<const Field> domain_fields(Domain d) {
  switch (d) {
    case Domain::SE: return kSeFields;
    case Domain::SETZ: return kSetzFields;
    case Domain::SELTZO: return kSeltzoFields;
  }
  return {};
}

std::string int_literal(long long v) {
  return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v);
}

// Monomial accumulator used by the QF_LIA printer; TrailExp expands to
// e - p + ntz + 1 in place.
struct Monomials {
  std::vector<std::pair<std::string, long long>> atoms;
  long long constant = 0;

  void add(const std::string& name, long long coeff) {
    if (coeff == 0) return;
    for (auto& [n, c] : atoms)
      if (n == name) {
        c += coeff;
        return;
      }
    atoms.emplace_back(name, coeff);
  }

  std::string render() const {
    std::vector<std::string> parts;
    for (const auto& [name, coeff] : atoms) {
      if (coeff == 0) continue;
      if (coeff == 1) parts.push_back(name);
      else if (coeff == -1) parts.push_back("(- " + name + ")");
      else parts.push_back("(* " + int_literal(coeff) + " " + name + ")");
    }
    if (constant != 0 || parts.empty()) parts.push_back(int_literal(constant));
    if (parts.size() == 1) return parts[0];
    std::string s = "(+";
    for (const auto& p : parts) s += " " + p;
    return s + ")";
  }
};

struct LiaEmitter {
  const SmtProblem& prob;
  const std::vector<int>* slots = nullptr;
  int skolem_counter = 0;
  std::vector<std::string> skolem_decls;
  std::vector<std::string> bound_names;

  std::string seg_var(int slot, Field f) const {
    int seg = (*slots)[slot];
    return std::string(field_name(f)) + "_" + prob.segs.label(prob.net, seg);
  }

  Monomials expand(const LinExpr& e) const {
    Monomials m;
    m.constant = e.constant;
    for (const auto& t : e.terms) {
      switch (t.kind) {
        case LinTerm::Kind::P:
          m.add("p", t.coeff);
          break;
        case LinTerm::Kind::Emin:
          m.add("e_min", t.coeff);
          break;
        case LinTerm::Kind::BoundVar:
          m.add(bound_names.at(t.var), t.coeff);
          break;
        case LinTerm::Kind::Field:
          if (t.field == Field::TrailExp) {
            m.add(seg_var(t.slot, Field::Exp), t.coeff);
            m.add("p", -t.coeff);
            m.add(seg_var(t.slot, Field::Ntz), t.coeff);
            m.constant += t.coeff;
          } else {
            m.add(seg_var(t.slot, t.field), t.coeff);
          }
          break;
      }
    }
    return m;
  }

  std::string emit(const Constraint& c, bool positive) {
    switch (c.kind) {
      case Constraint::Kind::True:
        return "true";
      case Constraint::Kind::Cmp: {
        std::string a = expand(c.lhs).render(), b = expand(c.rhs).render();
        switch (c.op) {
          case Constraint::CmpOp::Eq: return "(= " + a + " " + b + ")";
          case Constraint::CmpOp::Ne: return "(not (= " + a + " " + b + "))";
          case Constraint::CmpOp::Lt: return "(< " + a + " " + b + ")";
          case Constraint::CmpOp::Le: return "(<= " + a + " " + b + ")";
          case Constraint::CmpOp::Gt: return "(> " + a + " " + b + ")";
          case Constraint::CmpOp::Ge: return "(>= " + a + " " + b + ")";
        }
        return "false";
      }
      case Constraint::Kind::And:
      case Constraint::Kind::Or: {
        std::string op = c.kind == Constraint::Kind::And ? "and" : "or";
        std::string s = "(" + op;
        for (const auto& k : c.kids) s += " " + emit(k, positive);
        return s + ")";
      }
      case Constraint::Kind::Not:
        return "(not " + emit(c.kids[0], !positive) + ")";
      case Constraint::Kind::Implies:
        return "(=> " + emit(c.kids[0], !positive) + " " + emit(c.kids[1], positive) + ")";
      case Constraint::Kind::OpEq: {
        std::string s = "(and";
        for (Field f : domain_fields(prob.domain))
          s += " (= " + seg_var(c.slot_a, f) + " " + seg_var(c.slot_b, f) + ")";
        return s + ")";
      }
      case Constraint::Kind::Exists: {
        // only reachable for unpinned existentials
        if (!positive) throw std::logic_error("bounded existential in negative polarity");
        std::string name = "k_" + std::to_string(skolem_counter++);
        skolem_decls.push_back(name);
        if (static_cast<int>(bound_names.size()) <= c.var) bound_names.resize(c.var + 1);
        std::string saved = bound_names[c.var];
        bound_names[c.var] = name;
        std::string lo = expand(c.lhs).render(), hi = expand(c.rhs).render();
        std::string body = emit(c.kids[0], positive);
        bound_names[c.var] = saved;
        return "(and (<= " + lo + " " + name + ") (<= " + name + " " + hi + ") " + body + ")";
      }
    }
    return "false";
  }
};

}  // namespace

std::string SmtProblem::var_name(int segment, Field f) const {
  return std::string(field_name(f)) + "_" + segs.label(net, segment);
}

std::vector<std::string> SmtProblem::variable_names() const {
  std::vector<std::string> names;
  for (int s = 0; s < segs.count(); ++s)
    for (Field f : domain_fields(domain)) names.push_back(var_name(s, f));
  return names;
}

std::string emit_smtlib(const SmtProblem& prob) {
  LiaEmitter em{prob};
  std::vector<std::pair<std::string, std::string>> asserts;
  for (const auto& a : prob.assertions) {
    em.slots = &a.slots;
    asserts.emplace_back(a.tag, em.emit(eliminate_bounded_exists(a.body), true));
  }

  std::ostringstream os;
  os << "; FPAN abstract-execution encoding\n";
  os << "; network: " << prob.net.name << "\n";
  os << "; domain: " << domain_name(prob.domain) << "\n";
  os << "; format: " << prob.fmt.spec_string() << "\n";
  os << "; property: " << prob.property << "\n";
  os << "; catalog: " << prob.catalog_hash << "\n";
  os << "(set-option :produce-models true)\n";
  os << "(set-logic QF_LIA)\n";
  os << "(define-fun p () Int " << int_literal(prob.fmt.p) << ")\n";
  os << "(define-fun e_min () Int " << int_literal(prob.fmt.e_min) << ")\n";
  for (const std::string& v : prob.variable_names()) os << "(declare-const " << v << " Int)\n";
  for (const std::string& k : em.skolem_decls) os << "(declare-const " << k << " Int)\n";
  for (const auto& [tag, text] : asserts) {
    os << "; " << tag << "\n";
    os << "(assert " << text << ")\n";
  }
  os << "(check-sat)\n";
  os << "(get-model)\n";
  return os.str();
}

std::string_view verdict_name(SolverResult::Verdict v) {
  switch (v) {
    case SolverResult::Verdict::Unsat: return "unsat";
    case SolverResult::Verdict::Sat: return "sat";
    case SolverResult::Verdict::Unknown: return "unknown";
    case SolverResult::Verdict::Timeout: return "timeout";
    case SolverResult::Verdict::Error: return "error";
  }
  return "?";
}

bool validate_model(const SmtProblem& prob, const std::map<int, AbstractVal>& model,
                    std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(model.size()) != prob.segs.count())
    return fail("model does not assign every segment");
  for (const auto& [seg, val] : model) {
    if (!is_consistent(val, prob.fmt))
      return fail("inconsistent abstract value for segment " + prob.segs.label(prob.net, seg) +
                  ": " + val.to_string());
  }
  std::vector<AbstractVal> vals;
  for (const auto& a : prob.assertions) {
    vals.clear();
    for (int seg : a.slots) vals.push_back(model.at(seg));
    EvalContext ctx;
    ctx.fmt = &prob.fmt;
    ctx.vals = vals;
    ctx.op_eq_domain = prob.domain;
    if (!eval_constraint(a.body, ctx)) return fail("model violates assertion: " + a.tag);
  }
  return true;
}

// ---------------------------------------------------------------------------
// QF_BVFP emission: single-lemma violation search over the six-operation
// TwoSum sequence. Exponent fields map to zero-extended biased exponent
// bitvectors; lemma inequalities compare only exponent differences, so the
// bias cancels (checked during emission).
// ---------------------------------------------------------------------------

namespace {

struct FpDims {
  int eb, sb;
};

FpDims fp_dims(const FormatParams& fmt) {
  if (fmt.name == "binary16") return {5, 11};
  if (fmt.name == "bfloat16") return {8, 8};
  if (fmt.name == "binary32") return {8, 24};
  if (fmt.name == "binary64") return {11, 53};
  if (fmt.name == "binary128") return {15, 113};
  throw std::invalid_argument("QF_FP emission needs a named format");
}

struct BvEmitter {
  const FormatParams& fmt;
  FpDims d;
  int we;

  std::string bv(long long v) const {
    return "(_ bv" + std::to_string(v) + " " + std::to_string(we) + ")";
  }

  static const char* op_name(int slot) {
    static const char* names[4] = {"x", "y", "s", "e"};
    return names[slot];
  }

  struct Sides {
    std::vector<std::string> pos, neg;
    long long constant = 0;
    long long bias_balance = 0;
  };

  Sides expand(const LinExpr& e) const {
    Sides s;
    s.constant = e.constant;
    for (const auto& t : e.terms) {
      auto add_atom = [&](const std::string& name, long long coeff) {
        if (coeff == 1) s.pos.push_back(name);
        else if (coeff == -1) s.neg.push_back(name);
        else throw std::logic_error("QF_FP emission supports only unit coefficients");
      };
      switch (t.kind) {
        case LinTerm::Kind::P:
          s.constant += t.coeff * fmt.p;
          break;
        case LinTerm::Kind::Emin:
          s.constant += t.coeff;  // biased(e_min) = 1
          s.bias_balance += t.coeff;
          break;
        case LinTerm::Kind::BoundVar:
          throw std::logic_error("unexpected bound variable in QF_FP emission");
        case LinTerm::Kind::Field:
          switch (t.field) {
            case Field::Exp:
              add_atom(std::string("E_") + op_name(t.slot), t.coeff);
              s.bias_balance += t.coeff;
              break;
            case Field::Ntz:
              add_atom(std::string("ntz_") + op_name(t.slot), t.coeff);
              break;
            case Field::TrailExp:
              add_atom(std::string("E_") + op_name(t.slot), t.coeff);
              add_atom(std::string("ntz_") + op_name(t.slot), t.coeff);
              s.constant += t.coeff * (1 - fmt.p);
              s.bias_balance += t.coeff;
              break;
            default:
              throw std::logic_error("unsupported field in QF_FP emission");
          }
          break;
      }
    }
    return s;
  }

  std::string render_side(std::vector<std::string> atoms, long long c) const {
    if (c != 0 || atoms.empty()) atoms.push_back(bv(c));
    if (atoms.size() == 1) return atoms[0];
    std::string s = "(bvadd";
    for (const auto& p : atoms) s += " " + p;
    return s + ")";
  }

  std::string cmp(const LinExpr& le, Constraint::CmpOp op, const LinExpr& re) const {
    Sides l = expand(le), r = expand(re);
    if (l.bias_balance != r.bias_balance)
      throw std::logic_error("exponent bias does not cancel in QF_FP comparison");
    // move negated monomials and constants across the comparison
    std::vector<std::string> la = l.pos, ra = r.pos;
    la.insert(la.end(), r.neg.begin(), r.neg.end());
    ra.insert(ra.end(), l.neg.begin(), l.neg.end());
    long long lc = l.constant, rc = r.constant;
    if (lc < 0) {
      rc += -lc;
      lc = 0;
    }
    if (rc < 0) {
      lc += -rc;
      rc = 0;
    }
    std::string a = render_side(std::move(la), lc), b = render_side(std::move(ra), rc);
    switch (op) {
      case Constraint::CmpOp::Eq: return "(= " + a + " " + b + ")";
      case Constraint::CmpOp::Ne: return "(not (= " + a + " " + b + "))";
      case Constraint::CmpOp::Lt: return "(bvult " + a + " " + b + ")";
      case Constraint::CmpOp::Le: return "(bvule " + a + " " + b + ")";
      case Constraint::CmpOp::Gt: return "(bvugt " + a + " " + b + ")";
      case Constraint::CmpOp::Ge: return "(bvuge " + a + " " + b + ")";
    }
    return "false";
  }

  static bool is_sign_expr(const LinExpr& e) {
    for (const auto& t : e.terms)
      if (t.kind == LinTerm::Kind::Field && t.field == Field::Sign) return true;
    return false;
  }

  std::string sign_cmp(const LinExpr& le, Constraint::CmpOp op, const LinExpr& re) const {
    auto atom = [&](const LinExpr& e) -> std::string {
      if (e.terms.empty()) {
        if (e.constant == 0) return "#b0";
        if (e.constant == 1) return "#b1";
        throw std::logic_error("sign constant must be 0 or 1");
      }
      if (e.terms.size() != 1 || e.constant != 0 || e.terms[0].coeff != 1 ||
          e.terms[0].field != Field::Sign)
        throw std::logic_error("sign comparisons must be between bare sign bits");
      return std::string("sign_") + op_name(e.terms[0].slot);
    };
    std::string eq = "(= " + atom(le) + " " + atom(re) + ")";
    if (op == Constraint::CmpOp::Eq) return eq;
    if (op == Constraint::CmpOp::Ne) return "(not " + eq + ")";
    throw std::logic_error("sign bits support only equality comparisons");
  }

  std::string emit(const Constraint& c) {
    switch (c.kind) {
      case Constraint::Kind::True:
        return "true";
      case Constraint::Kind::Cmp:
        if (is_sign_expr(c.lhs) || is_sign_expr(c.rhs)) return sign_cmp(c.lhs, c.op, c.rhs);
        return cmp(c.lhs, c.op, c.rhs);
      case Constraint::Kind::And:
      case Constraint::Kind::Or: {
        std::string op = c.kind == Constraint::Kind::And ? "and" : "or";
        std::string s = "(" + op;
        for (const auto& k : c.kids) s += " " + emit(k);
        return s + ")";
      }
      case Constraint::Kind::Not:
        return "(not " + emit(c.kids[0]) + ")";
      case Constraint::Kind::Implies:
        return "(=> " + emit(c.kids[0]) + " " + emit(c.kids[1]) + ")";
      case Constraint::Kind::OpEq:
        return std::string("(= bv_") + op_name(c.slot_a) + " bv_" + op_name(c.slot_b) + ")";
      case Constraint::Kind::Exists:
        throw std::logic_error("unpinned bounded existential in QF_FP emission");
    }
    return "false";
  }
};

}  // namespace

std::string emit_lemma_qffp(const Lemma& lemma, const FormatParams& fmt) {
  FpDims d = fp_dims(fmt);
  BvEmitter em{fmt, d, d.eb + 3};
  const int w = d.eb + d.sb;
  const std::string fp_sort =
      "(_ FloatingPoint " + std::to_string(d.eb) + " " + std::to_string(d.sb) + ")";
  const std::string bv_sort = "(_ BitVec " + std::to_string(w) + ")";

  std::ostringstream os;
  os << "; violation search for lemma " << lemma.name << " over " << fmt.spec_string() << "\n";
  os << "(set-logic QF_BVFP)\n";
  os << "(declare-const bv_x " << bv_sort << ")\n";
  os << "(declare-const bv_y " << bv_sort << ")\n";
  os << "(declare-const bv_s " << bv_sort << ")\n";
  os << "(declare-const bv_e " << bv_sort << ")\n";
  os << "(declare-const x " << fp_sort << ")\n";
  os << "(declare-const y " << fp_sort << ")\n";
  os << "(declare-const s " << fp_sort << ")\n";
  os << "(declare-const x_eff " << fp_sort << ")\n";
  os << "(declare-const y_eff " << fp_sort << ")\n";
  os << "(declare-const dx " << fp_sort << ")\n";
  os << "(declare-const dy " << fp_sort << ")\n";
  os << "(declare-const e " << fp_sort << ")\n";
  auto to_fp = [&](const char* bvn) {
    return "((_ to_fp " + std::to_string(d.eb) + " " + std::to_string(d.sb) + ") " +
           std::string(bvn) + ")";
  };
  os << "(assert (= x " << to_fp("bv_x") << "))\n";
  os << "(assert (= y " << to_fp("bv_y") << "))\n";
  os << "(assert (= s (fp.add RNE x y)))\n";
  os << "(assert (= x_eff (fp.sub RNE s y)))\n";
  os << "(assert (= y_eff (fp.sub RNE s x_eff)))\n";
  os << "(assert (= dx (fp.sub RNE x x_eff)))\n";
  os << "(assert (= dy (fp.sub RNE y y_eff)))\n";
  os << "(assert (= e (fp.add RNE dx dy)))\n";
  os << "(assert (= s " << to_fp("bv_s") << "))\n";
  os << "(assert (= e " << to_fp("bv_e") << "))\n";
  for (const char* v : {"x", "y", "s", "e"})
    os << "(assert (or (fp.isNormal " << v << ") (fp.isZero " << v << ")))\n";
  for (const char* v : {"x", "y", "s", "e"}) {
    os << "(define-fun sign_" << v << " () (_ BitVec 1) ((_ extract " << (w - 1) << " "
       << (w - 1) << ") bv_" << v << "))\n";
    os << "(define-fun ebits_" << v << " () (_ BitVec " << d.eb << ") ((_ extract " << (w - 2)
       << " " << (d.sb - 1) << ") bv_" << v << "))\n";
    os << "(define-fun E_" << v << " () (_ BitVec " << em.we << ") ((_ zero_extend 3) ebits_"
       << v << "))\n";
    os << "(define-fun m_" << v << " () (_ BitVec " << (d.sb - 1) << ") ((_ extract "
       << (d.sb - 2) << " 0) bv_" << v << "))\n";
    std::string ladder = em.bv(fmt.p - 1);
    for (int i = d.sb - 2; i >= 0; --i)
      ladder = "(ite (= ((_ extract " + std::to_string(i) + " " + std::to_string(i) + ") m_" +
               v + ") #b1) " + em.bv(i) + " " + ladder + ")";
    os << "(define-fun ntz_" << v << " () (_ BitVec " << em.we << ") " << ladder << ")\n";
  }
  os << "; lemma hypothesis holds\n";
  os << "(assert " << em.emit(eliminate_bounded_exists(lemma.hypothesis)) << ")\n";
  os << "; but no conclusion case does\n";
  std::string cases = "(or";
  for (const auto& c : lemma.cases) cases += " " + em.emit(eliminate_bounded_exists(c.body));
  cases += ")";
  os << "(assert (not " << cases << "))\n";
  os << "(check-sat)\n";
  os << "(get-model)\n";
  return os.str();
}

}  // namespace fpanv
