#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "fpanv/lemmas.hpp"

namespace fpanv {

std::vector<FloatVal> window_values(const FormatParams& fmt, const WindowSpec& w) {
  if (w.lo < fmt.e_min)
    throw std::invalid_argument("window reaches below e_min; widen the format");
  if (fmt.e_max && w.hi > *fmt.e_max)
    throw std::invalid_argument("window reaches above e_max");
  std::vector<FloatVal> out;
  const FloatVal::Frac nfrac = FloatVal::Frac(1) << (fmt.p - 1);
  for (int sign = 0; sign <= 1; ++sign) {
    if (w.include_zero) out.push_back(FloatVal::zero(fmt, sign));
    for (long long e = w.lo; e <= w.hi; ++e)
      for (FloatVal::Frac f = 0; f < nfrac; ++f) out.push_back(FloatVal::make(fmt, sign, e, f));
  }
  return out;
}

namespace {

struct FloatKey {
  int sign;
  bool zero;
  long long e;
  unsigned long long frac_lo, frac_hi;
  bool operator<(const FloatKey& o) const {
    return std::tie(sign, zero, e, frac_lo, frac_hi) <
           std::tie(o.sign, o.zero, o.e, o.frac_lo, o.frac_hi);
  }
};

FloatKey key_of(const FloatVal& v) {
  return {v.sign(), v.is_zero(), v.exponent(),
          static_cast<unsigned long long>(v.fraction() & ~0ULL),
          static_cast<unsigned long long>(v.fraction() >> 64)};
}

/// Interned concrete pair table over a window: every pair, its TwoSum
/// result, and cached SELTZO abstractions (a superset of every domain's
/// fields, so one cache serves all vocabularies).
struct PairTable {
  FormatParams fmt;
  WindowSpec window;
  std::vector<FloatVal> uniq;
  std::vector<AbstractVal> abs_seltzo;
  struct Pair {
    int x, y, s, e;
  };
  std::vector<Pair> pairs;

  int intern(const FloatVal& v, std::map<FloatKey, int>& idx) {
    auto [it, fresh] = idx.try_emplace(key_of(v), static_cast<int>(uniq.size()));
    if (fresh) {
      uniq.push_back(v);
      abs_seltzo.push_back(abstract(v, Domain::SELTZO, fmt));
    }
    return it->second;
  }
};

std::shared_ptr<const PairTable> pair_table(const FormatParams& fmt, const WindowSpec& w) {
  using Key = std::tuple<int, long long, long long, long long, bool, bool>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const PairTable>> cache;
  Key key{fmt.p, fmt.e_min, w.lo, w.hi, w.include_zero, w.canonical};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  auto t = std::make_shared<PairTable>();
  t->fmt = fmt;
  t->window = w;
  std::map<FloatKey, int> idx;

  std::vector<FloatVal> lhs, rhs;
  if (w.canonical) {
    // First operand pinned at exponent 0 (plus the all-zero pairs); the
    // second ranges over the whole window. Both orientations of each pair
    // are evaluated by the checkers, which covers every exponent gap.
    WindowSpec top = w;
    top.lo = top.hi = 0;
    top.include_zero = false;
    lhs = window_values(fmt, top);
    rhs = window_values(fmt, w);
    if (w.include_zero)
      for (int sx = 0; sx <= 1; ++sx)
        for (int sy = 0; sy <= 1; ++sy) {
          FloatVal zx = FloatVal::zero(fmt, sx), zy = FloatVal::zero(fmt, sy);
          TwoSumResult r = two_sum(zx, zy, fmt);
          t->pairs.push_back({t->intern(zx, idx), t->intern(zy, idx), t->intern(r.sum, idx),
                              t->intern(r.err, idx)});
        }
  } else {
    lhs = window_values(fmt, w);
    rhs = lhs;
  }
  unsigned long long total = t->pairs.size() + static_cast<unsigned long long>(lhs.size()) *
                                                   rhs.size();
  if (total > w.budget)
    throw BudgetError("window enumerates " + std::to_string(total) + " pairs, budget " +
                      std::to_string(w.budget));
  for (const FloatVal& x : lhs)
    for (const FloatVal& y : rhs) {
      TwoSumResult r = two_sum(x, y, fmt);
      t->pairs.push_back(
          {t->intern(x, idx), t->intern(y, idx), t->intern(r.sum, idx), t->intern(r.err, idx)});
    }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace(key, std::move(t));
  (void)fresh;
  return it->second;
}

}  // namespace

SoundnessReport check_soundness(const Lemma& lemma, const FormatParams& fmt,
                                const WindowSpec& w) {
  auto table = pair_table(fmt, w);
  SoundnessReport rep;
  rep.lemma = lemma.name;
  rep.format = fmt.spec_string();
  rep.window = w;
  rep.case_witnesses.assign(lemma.cases.size(), 0);

  EvalContext ctx;
  ctx.fmt = &fmt;
  ctx.op_eq_domain = lemma.vocabulary;
  AbstractVal vals[4];
  ctx.vals = {vals, 4};

  for (const auto& pr : table->pairs) {
    ++rep.pairs_checked;
    for (int swap = 0; swap <= 1; ++swap) {
      if (swap && pr.x == pr.y) continue;
      vals[0] = table->abs_seltzo[swap ? pr.y : pr.x];
      vals[1] = table->abs_seltzo[swap ? pr.x : pr.y];
      vals[2] = table->abs_seltzo[pr.s];
      vals[3] = table->abs_seltzo[pr.e];
      if (!eval_constraint(lemma.hypothesis, ctx)) continue;
      ++rep.hypothesis_matches;
      bool any = false;
      for (size_t ci = 0; ci < lemma.cases.size(); ++ci) {
        if (eval_constraint(lemma.cases[ci].body, ctx)) {
          ++rep.case_witnesses[ci];
          any = true;
        }
      }
      if (!any) {
        ++rep.violation_count;
        if (rep.violations.size() < 16)
          rep.violations.push_back({table->uniq[swap ? pr.y : pr.x],
                                    table->uniq[swap ? pr.x : pr.y], table->uniq[pr.s],
                                    table->uniq[pr.e], swap != 0});
      }
    }
  }
  return rep;
}

std::vector<std::pair<AbstractVal, AbstractVal>> check_coverage(Domain d,
                                                                const FormatParams& fmt,
                                                                const WindowSpec& w,
                                                                SeltzoExtension ext) {
  auto table = pair_table(fmt, w);
  auto lemmas = catalog(d, ext);

  EvalContext ctx;
  ctx.fmt = &fmt;
  AbstractVal vals[4];
  ctx.vals = {vals, 4};

  std::set<std::pair<AbstractVal, AbstractVal>> missing;
  for (const auto& pr : table->pairs) {
    bool covered = false;
    for (int swap = 0; swap <= 1 && !covered; ++swap) {
      vals[0] = table->abs_seltzo[swap ? pr.y : pr.x];
      vals[1] = table->abs_seltzo[swap ? pr.x : pr.y];
      vals[2] = table->abs_seltzo[pr.s];
      vals[3] = table->abs_seltzo[pr.e];
      for (const Lemma* l : lemmas) {
        ctx.op_eq_domain = l->vocabulary;
        if (eval_constraint(l->hypothesis, ctx)) {
          covered = true;
          break;
        }
      }
    }
    if (!covered)
      missing.emplace(abstract(table->uniq[pr.x], d, fmt), abstract(table->uniq[pr.y], d, fmt));
  }
  return {missing.begin(), missing.end()};
}

TightnessReport check_tightness(const Lemma& lemma, const FormatParams& fmt,
                                const WindowSpec& w) {
  auto table = pair_table(fmt, w);
  TightnessReport rep;
  rep.lemma = lemma.name;
  rep.cases.resize(lemma.cases.size());
  for (size_t i = 0; i < lemma.cases.size(); ++i) rep.cases[i].label = lemma.cases[i].label;

  EvalContext ctx;
  ctx.fmt = &fmt;
  ctx.op_eq_domain = lemma.vocabulary;
  AbstractVal vals[4];
  ctx.vals = {vals, 4};

  for (const auto& pr : table->pairs) {
    for (int swap = 0; swap <= 1; ++swap) {
      if (swap && pr.x == pr.y) continue;
      vals[0] = table->abs_seltzo[swap ? pr.y : pr.x];
      vals[1] = table->abs_seltzo[swap ? pr.x : pr.y];
      vals[2] = table->abs_seltzo[pr.s];
      vals[3] = table->abs_seltzo[pr.e];
      if (!eval_constraint(lemma.hypothesis, ctx)) continue;
      for (size_t ci = 0; ci < lemma.cases.size(); ++ci) {
        if (eval_constraint(lemma.cases[ci].body, ctx)) {
          auto& cw = rep.cases[ci];
          if (cw.count++ == 0) {
            cw.x = table->uniq[swap ? pr.y : pr.x];
            cw.y = table->uniq[swap ? pr.x : pr.y];
          }
        }
      }
    }
  }
  for (auto& cw : rep.cases) cw.vacuous = cw.count == 0;
  return rep;
}

std::set<std::pair<AbstractVal, AbstractVal>> mine_transfer(const Constraint& input_class,
                                                            Domain d, const FormatParams& fmt,
                                                            const WindowSpec& w) {
  auto table = pair_table(fmt, w);
  EvalContext ctx;
  ctx.fmt = &fmt;
  ctx.op_eq_domain = d;
  AbstractVal vals[4];
  ctx.vals = {vals, 4};

  std::set<std::pair<AbstractVal, AbstractVal>> out;
  for (const auto& pr : table->pairs) {
    for (int swap = 0; swap <= 1; ++swap) {
      if (swap && pr.x == pr.y) continue;
      vals[0] = table->abs_seltzo[swap ? pr.y : pr.x];
      vals[1] = table->abs_seltzo[swap ? pr.x : pr.y];
      vals[2] = table->abs_seltzo[pr.s];
      vals[3] = table->abs_seltzo[pr.e];
      if (!eval_constraint(input_class, ctx)) continue;
      out.emplace(abstract(table->uniq[pr.s], d, fmt), abstract(table->uniq[pr.e], d, fmt));
    }
  }
  return out;
}

}  // namespace fpanv
