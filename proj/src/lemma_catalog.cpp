#include "fpanv/lemmas.hpp"

// The TwoSum transfer-relation catalog. Each lemma constrains the outputs
// (s, e) = TwoSum(x, y) for one class of abstract inputs; the swapped
// orientation is instantiated mechanically by every consumer, so the
// statements here are oriented with x as the written first operand.

namespace fpanv {

namespace {

using namespace cdsl;

constexpr Slot X = Slot::X, Y = Slot::Y, S = Slot::S, E = Slot::E;

struct CatalogBuilder {
  std::vector<Lemma> lemmas;

  void add(std::string name, std::string family, std::string supports, Domain vocab,
           Constraint hyp, std::vector<Constraint> cases, int min_p = 4) {
    Lemma l;
    l.name = std::move(name);
    l.family = std::move(family);
    l.vocabulary = vocab;
    l.supports_se = supports.find("SE,") != std::string::npos || supports == "SE";
    l.supports_setz = supports.find("SETZ") != std::string::npos;
    l.supports_seltzo = supports.find("SELTZO") != std::string::npos;
    l.hypothesis = std::move(hyp);
    l.min_p = min_p;
    int i = 0;
    for (auto& c : cases) l.cases.push_back({"case" + std::to_string(++i), std::move(c)});
    lemmas.push_back(std::move(l));
  }
};

std::vector<Lemma> build_catalog() {
  CatalogBuilder cb;

  const LinExpr P = p_sym();
  const LinExpr e_x = e_(X), e_y = e_(Y), e_s = e_(S), e_e = e_(E);
  const LinExpr f_x = f_(X), f_y = f_(Y), f_s = f_(S), f_e = f_(E);

  auto nz = [&] { return nonzero(X) && nonzero(Y); };
  auto ss = [&] { return same_sign(X, Y); };
  auto ds = [&] { return diff_sign(X, Y); };
  auto s_keeps_x = [&] { return same_sign(S, X); };
  auto e_like_y = [&] { return same_sign(E, Y); };
  auto e_unlike_y = [&] { return diff_sign(E, Y); };

  // ---- Family Z: one or both inputs zero ------------------------------
  cb.add("Z1", "Z", "SE,SETZ,SELTZO", Domain::SE, is_zero(X) && is_zero(Y),
         {
             (s_(X) == 0) && (s_(Y) == 0) && is_pos_zero(S) && is_pos_zero(E),
             (s_(X) != s_(Y)) && is_pos_zero(S) && is_pos_zero(E),
             (s_(X) == 1) && (s_(Y) == 1) && is_neg_zero(S) && is_pos_zero(E),
         },
         2);
  cb.add("Z2", "Z", "SE,SETZ,SELTZO", Domain::SE, nonzero(X) && is_zero(Y),
         {op_eq(S, X) && is_pos_zero(E)}, 2);

  // ---- Family SE-I: sufficient identity condition ---------------------
  cb.add("SE-I", "SE-I", "SE", Domain::SE,
         nz() && ((e_x - e_y > P + 1) || ((e_x - e_y == P + 1) && ss())),
         {identity()}, 2);

  // ---- Family SE-S: same signs ----------------------------------------
  cb.add("SE-S1", "SE-S", "SE", Domain::SE, nz() && ss() && (e_x == e_y + P),
         {
             s_keeps_x() && between(e_x, e_s, e_x + 1) && e_unlike_y() &&
                 between(e_y - (P - 1), e_e, e_x - P),
             identity(),
         });
  cb.add("SE-S2", "SE-S", "SE", Domain::SE, nz() && ss() && (e_x == e_y + (P - 1)),
         {
             s_keeps_x() && between(e_x, e_s, e_x + 1) && is_pos_zero(E),
             s_keeps_x() && between(e_x, e_s, e_x + 1) &&
                 between(e_y - (P - 1), e_e, e_x - P),
         });
  cb.add("SE-S3", "SE-S", "SE", Domain::SE, nz() && ss() && (e_x == e_y + (P - 2)),
         {
             s_keeps_x() && between(e_x, e_s, e_x + 1) && is_pos_zero(E),
             s_keeps_x() && between(e_x, e_s, e_x + 1) && e_unlike_y() &&
                 between(e_y - (P - 1), e_e, e_x - P),
             s_keeps_x() && (e_s == e_x) && e_like_y() &&
                 between(e_y - (P - 1), e_e, e_x - P),
             s_keeps_x() && (e_s == e_x + 1) && e_like_y() &&
                 between(e_y - (P - 1), e_e, e_x - (P - 1)),
         });
  cb.add("SE-S4", "SE-S", "SE", Domain::SE,
         nz() && ss() && (e_x > e_y) && (e_x < e_y + (P - 2)),
         {
             s_keeps_x() && between(e_x, e_s, e_x + 1) && is_pos_zero(E),
             s_keeps_x() && (e_s == e_x) && between(e_y - (P - 1), e_e, e_x - P),
             s_keeps_x() && (e_s == e_x + 1) && between(e_y - (P - 1), e_e, e_x - (P - 1)),
         });
  cb.add("SE-S5", "SE-S", "SE", Domain::SE, nz() && ss() && (e_x == e_y),
         {
             s_keeps_x() && (e_s == e_x + 1) && is_pos_zero(E),
             s_keeps_x() && (e_s == e_x + 1) && (e_e == e_x - (P - 1)),
         });

  // ---- Family SE-D: different signs -----------------------------------
  cb.add("SE-D1", "SE-D", "SE", Domain::SE, nz() && ds() && (e_x == e_y + (P + 1)),
         {
             s_keeps_x() && (e_s == e_x - 1) && e_unlike_y() &&
                 between(e_y - (P - 1), e_e, e_x - (P + 2)),
             identity(),
         });
  cb.add("SE-D2", "SE-D", "SE", Domain::SE, nz() && ds() && (e_x == e_y + P),
         {
             s_keeps_x() && (e_s == e_x - 1) && is_pos_zero(E),
             s_keeps_x() && (e_s == e_x - 1) && e_like_y() &&
                 between(e_y - (P - 1), e_e, e_x - (P + 2)),
             s_keeps_x() && (e_s == e_x - 1) && e_unlike_y() &&
                 between(e_y - (P - 1), e_e, e_x - (P + 1)),
             s_keeps_x() && (e_s == e_x) && e_unlike_y() &&
                 between(e_y - (P - 1), e_e, e_x - P),
             identity(),
         });
  cb.add("SE-D3", "SE-D", "SE", Domain::SE,
         nz() && ds() && (e_x > e_y + 1) && (e_x < e_y + P),
         {
             s_keeps_x() && between(e_x - 1, e_s, e_x) && is_pos_zero(E),
             s_keeps_x() && (e_s == e_x - 1) && between(e_y - (P - 1), e_e, e_x - (P + 1)),
             s_keeps_x() && (e_s == e_x) && between(e_y - (P - 1), e_e, e_x - P),
         });
  cb.add("SE-D4", "SE-D", "SE", Domain::SE, nz() && ds() && (e_x == e_y + 1),
         {
             s_keeps_x() && between(e_x - P, e_s, e_x) && is_pos_zero(E),
             s_keeps_x() && (e_s == e_x) && (e_e == e_x - P),
         });
  cb.add("SE-D5", "SE-D", "SE", Domain::SE, nz() && ds() && (e_x == e_y),
         {
             is_pos_zero(S) && is_pos_zero(E),
             between(e_x - (P - 1), e_s, e_x - 1) && is_pos_zero(E),
         });

  // ---- Lemma SETZ-I: exact identity characterization ------------------
  cb.add("SETZ-I", "SETZ-I", "SETZ,SELTZO", Domain::SETZ,
         nz() && ((e_x > e_y + (P + 1)) ||
                  ((e_x == e_y + (P + 1)) && ((e_y == f_y) || ss() || (e_x > f_x))) ||
                  ((e_x == e_y + P) && (e_y == f_y) && (e_x < f_x + (P - 1)) &&
                   (ss() || (e_x > f_x)))),
         {identity()}, 2);

  // ---- Family SETZ-F: equal trailing exponents ------------------------
  auto fam_f = [&](const char* name, Constraint hyp, std::vector<Constraint> cases) {
    cb.add(name, "SETZ-F", "SETZ", Domain::SETZ, nz() && std::move(hyp), std::move(cases));
  };
  fam_f("SETZ-FS0", ss() && (f_x == f_y) && (e_x > e_y + 1),
        {
            s_keeps_x() && (e_s == e_x) && between(f_x + 1, f_s, e_x - 1) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(f_x + 1, f_s, e_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && is_pos_zero(E),
        });
  fam_f("SETZ-FS1", ss() && (f_x == f_y) && (e_x == e_y + 1),
        {
            s_keeps_x() && (e_s == e_x) && between(f_x + 1, f_s, e_x - 2) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(f_x + 1, f_s, e_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && is_pos_zero(E),
        });
  fam_f("SETZ-FS2", ss() && (f_x == f_y) && (e_x == e_y) && (e_x > f_x),
        {
            s_keeps_x() && (e_s == e_x + 1) && between(f_x + 1, f_s, e_x) && is_pos_zero(E),
        });
  fam_f("SETZ-FS3", ss() && (f_x == f_y) && (e_x == e_y) && (e_x == f_x),
        {
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && is_pos_zero(E),
        });
  fam_f("SETZ-FD0", ds() && (f_x == f_y) && (e_x > e_y + 1),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(f_x + 1, f_s, e_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(f_x + 1, f_s, e_x) && is_pos_zero(E),
        });
  fam_f("SETZ-FD1", ds() && (f_x == f_y) && (e_x == e_y + 1),
        {
            exists(0, f_x + 1, e_x - 1,
                   s_keeps_x() && (e_s == bvar(0)) && between(f_x + 1, f_s, bvar(0)) &&
                       is_pos_zero(E)),
            s_keeps_x() && (e_s == e_x) && between(f_x + 1, f_s, e_x - 2) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && is_pos_zero(E),
        });
  fam_f("SETZ-FD2", ds() && (f_x == f_y) && (e_x == e_y),
        {
            is_pos_zero(S) && is_pos_zero(E),
            exists(0, f_x + 1, e_x - 1,
                   between(f_x + 1, f_s, bvar(0)) && (e_s == bvar(0)) && is_pos_zero(E)),
        });

  // ---- Family SETZ-E: exact sums with different trailing exponents ----
  auto fam_e = [&](const char* name, Constraint hyp, std::vector<Constraint> cases,
                   int min_p = 4) {
    cb.add(name, "SETZ-E", "SETZ", Domain::SETZ, nz() && std::move(hyp), std::move(cases),
           min_p);
  };
  fam_e("SETZ-EN0", (ss() || (e_x > f_x)) && (f_x > e_y) && (e_x < f_y + P),
        {s_keeps_x() && (e_s == e_x) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-EN1",
        ds() && (((e_x == f_x) && (f_x > e_y + 1) && (e_x < f_y + (P + 1))) ||
                 ((e_x == f_x + 1) && (f_x == e_y) && (e_y > f_y))),
        {s_keeps_x() && (e_s == e_x - 1) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-ESP0",
        ss() &&
            (((e_x > e_y) && (e_y > f_x) && (f_x > f_y)) ||
             ((e_x > e_y + 1) && (e_y + 1 > f_x) && (f_x > f_y))) &&
            (e_x < f_y + (P - 1)),
        {s_keeps_x() && between(e_x, e_s, e_x + 1) && (f_s == f_y) && is_pos_zero(E)}, 5);
  fam_e("SETZ-ESP1",
        ss() && (e_x == e_y + 1) && (e_y == f_x) && (f_x > f_y) && (e_x < f_y + (P - 1)),
        {s_keeps_x() && (e_s == e_x + 1) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-ESC", ss() && (e_x > e_y) && (f_x < f_y) && (e_x < f_x + (P - 1)),
        {s_keeps_x() && between(e_x, e_s, e_x + 1) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-ESS",
        ss() && (e_x == e_y) && (f_x < f_y) && (e_x < f_x + (P - 1)) && (e_y < f_y + (P - 1)),
        {s_keeps_x() && (e_s == e_x + 1) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-EDP0",
        ds() && (e_x > e_y + 1) && (e_y + 1 > f_x) && (f_x > f_y) && (e_x < f_y + P),
        {s_keeps_x() && between(e_x - 1, e_s, e_x) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-EDP1",
        ds() && (e_x == e_y + 1) && (e_y > f_x) && (f_x > f_y) && (e_x < f_y + P),
        {s_keeps_x() && between(f_x, e_s, e_x) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-EDP2", ds() && (e_x == e_y + 1) && (e_y + 1 == f_x) && (f_x > f_y + 1),
        {s_keeps_x() && between(f_y, e_s, e_x - 2) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-EDP3", ds() && (e_x == e_y + 1) && (e_x == f_x) && (e_x == f_y + 1),
        {s_keeps_x() && between(f_y, e_s, e_x - 1) && (f_s == f_y) && is_pos_zero(E)});
  fam_e("SETZ-EDC0", ds() && (e_x > e_y + 1) && (f_x < f_y),
        {s_keeps_x() && between(e_x - 1, e_s, e_x) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-EDC1", ds() && (e_x == e_y + 1) && (f_x < f_y),
        {s_keeps_x() && between(f_y, e_s, e_x) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-EDC2", ds() && (e_x == e_y) && (e_y == f_y) && (f_x < f_y),
        {s_keeps_x() && between(f_x, e_s, e_x - 1) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-EDS0",
        ds() && (e_x == e_y) && (f_x < f_y) && (e_x > f_x + 1) && (e_y > f_y + 1),
        {between(f_x, e_s, e_x - 1) && (f_s == f_x) && is_pos_zero(E)});
  fam_e("SETZ-EDS1", ds() && (e_x == e_y) && (e_x > f_x + 1) && (e_y == f_y + 1),
        {between(f_x, e_s, e_x - 2) && (f_s == f_x) && is_pos_zero(E)});

  // ---- Family SETZ-O: fully overlapping mantissas, inexact sum --------
  auto fam_o = [&](const char* name, Constraint hyp, std::vector<Constraint> cases) {
    cb.add(name, "SETZ-O", "SETZ,SELTZO", Domain::SETZ, nz() && std::move(hyp),
           std::move(cases));
  };
  fam_o("SETZ-O0",
        ss() && (e_x == f_x + (P - 1)) && (e_x > e_y) && (e_y > f_y) && (f_y > f_x),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_x) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y) &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
        });
  fam_o("SETZ-O1",
        ss() && (e_x == f_x + (P - 1)) && (e_x > e_y) && (e_y == f_y) && (f_y > f_x + 1),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_x) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y - 1) &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
        });
  fam_o("SETZ-O2", ss() && (e_x == f_x + (P - 1)) && (e_y == f_y) && (f_y == f_x + 1),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_x) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_x, e_e, e_x - (P - 1)) && (f_e == f_x),
        });

  // ---- Family SETZ-1: gap between the mantissas, y on top of e --------
  auto fam_1 = [&](const char* name, Constraint hyp, std::vector<Constraint> cases) {
    cb.add(name, "SETZ-1", "SETZ,SELTZO", Domain::SETZ, nz() && std::move(hyp),
           std::move(cases));
  };
  fam_1("SETZ-1",
        (e_x < e_y + P) && (e_x > f_y + P) && (f_x > e_y + 1) && ((e_x > f_x) || ss()),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_1("SETZ-1A",
        (e_x == e_y + P) && (e_x > f_y + P) && (f_x > e_y + 1) && ((e_x > f_x) || ss()),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_1("SETZ-1B0",
        (e_x < e_y + (P - 1)) && (e_x == f_y + P) && (f_x > e_y + 1) && ((e_x > f_x) || ss()),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_1("SETZ-1B1",
        (e_x == e_y + (P - 1)) && (e_x == f_y + P) && (f_x > e_y + 1) && ((e_x > f_x) || ss()),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });

  // ---- Family SETZ-2: same signs, interleaved mantissas ---------------
  auto fam_2 = [&](const char* name, Constraint hyp, std::vector<Constraint> cases,
                   int min_p = 4) {
    cb.add(name, "SETZ-2", "SETZ,SELTZO", Domain::SETZ, nz() && ss() && std::move(hyp),
           std::move(cases), min_p);
  };
  fam_2("SETZ-2", (e_x > f_y + P) && (f_x < e_y),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_x - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2A0", (e_x == f_y + P) && (f_x < e_y) && (e_y < f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_x - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2A1", (e_x == f_y + P) && (f_x + 1 < e_y) && (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_x - 2) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2A2", (e_x == f_y + P) && (f_x + 1 == e_y) && (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 2) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2B0", (e_x > f_y + P) && (f_x == e_y) && (e_x < f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2B1", (e_x > f_y + P) && (f_x == e_y) && (e_x == f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2C0",
        (e_x == f_y + (P - 1)) && (f_x < e_y) && (e_x < f_x + (P - 1)) &&
            (e_y < f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y) &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2C1",
        (e_x == f_y + (P - 1)) && (f_x < e_y) && (e_x < f_x + (P - 1)) &&
            (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y) &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2D0", (e_x > f_y + P) && (f_x == e_y + 1) && (e_x < f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x - 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2D1", (e_x > f_y + P) && (f_x == e_y + 1) && (e_x == f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x - 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2AB0",
        (e_x == f_y + P) && (f_x == e_y) && (e_x < f_x + (P - 1)) && (e_y < f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2AB1", (e_x == f_y + P) && (f_x == e_y) && (e_x == f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2AB2", (e_x == f_y + P) && (f_x == e_y) && (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2BC0",
        (e_x == f_y + (P - 1)) && (f_x == e_y) && (e_y > f_y + 1) && (e_y < f_y + (P - 2)),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
        },
        5);
  fam_2("SETZ-2BC1", (e_x == f_y + (P - 1)) && (f_x == e_y) && (e_y > f_y + (P - 3)),
        {
            s_keeps_x() && (e_s == e_x + 1) && between(e_x - (P - 3), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2BC2", (e_x == f_y + (P - 1)) && (f_x == e_y) && (e_y == f_y + 1),
        {
            s_keeps_x() && (e_s == e_x) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P - 1)) && (f_e == f_y),
        });
  fam_2("SETZ-2AD0", (e_x == f_y + P) && (f_x == e_y + 1) && (e_x < f_x + (P - 2)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x - 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_2("SETZ-2AD1", (e_x == f_y + P) && (f_x == e_y + 1) && (e_x > f_x + (P - 3)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x - 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x + 1) && (f_s == e_x + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });

  // ---- Family SETZ-3: different signs, interleaved mantissas ----------
  auto fam_3 = [&](const char* name, Constraint hyp, std::vector<Constraint> cases,
                   int min_p = 4) {
    cb.add(name, "SETZ-3", "SETZ,SELTZO", Domain::SETZ, nz() && ds() && std::move(hyp),
           std::move(cases), min_p);
  };
  fam_3("SETZ-3", (e_x > f_y + (P + 1)) && (f_x < e_y),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - P, f_s, e_y) &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_x - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        },
        5);
  fam_3("SETZ-3A", (e_x == f_y + (P + 1)) && (f_x < e_y),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - (P - 1), f_s, e_y) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_x) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_3("SETZ-3B", (e_x > f_y + (P + 1)) && (f_x == e_y),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - P, f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
        });
  fam_3("SETZ-3C0", (e_x == f_y + P) && (f_x < e_y) && (e_y < f_y + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x - 1) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_x - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3C1", (e_x == f_y + P) && (f_x + 1 < e_y) && (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && between(f_x, e_s, e_x - 1) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_x - 2) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3C2", (e_x == f_y + P) && (f_x + 1 == e_y) && (e_y == f_y + (P - 1)),
        {
            s_keeps_x() && between(e_x - 2, e_s, e_x - 1) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 2) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3D0", (e_x > f_y + P) && (f_x == e_y + 1) && (e_x < f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_3("SETZ-3D1", (e_x > f_y + P) && (f_x == e_y + 1) && (e_x == f_x + (P - 1)),
        {
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_3("SETZ-3AB", (e_x == f_y + (P + 1)) && (f_x == e_y),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_3("SETZ-3BC0", (e_x == f_y + P) && (f_x == e_y) && (e_x > f_x + 1) && (e_y > f_y + 1),
        {
            s_keeps_x() && (e_s == e_x - 1) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3BC1", (e_x == f_y + P) && (f_x == e_y) && (e_y == f_y + 1),
        {
            s_keeps_x() && (e_s == e_x - 1) && (f_s == f_y) && is_pos_zero(E),
            s_keeps_x() && (e_s == e_x) && between(e_y + 1, f_s, e_x - 1) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3CD0", (e_x == f_y + P) && (f_x == e_y + 1) && (e_x > f_x) && (e_y > f_y + 1),
        {
            s_keeps_x() && (e_s == e_x) && between(e_x - (P - 2), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });
  fam_3("SETZ-3CD1", (e_x == f_y + P) && (f_x == e_y + 1) && (e_y < f_y + 2),
        {
            s_keeps_x() && (e_s == e_x) && between(e_y + 2, f_s, e_x) && e_unlike_y() &&
                between(f_y, e_e, e_x - P) && (f_e == f_y),
        });

  // ---- Family SETZ-4: different signs, x a power of two ---------------
  auto fam_4 = [&](const char* name, Constraint hyp, std::vector<Constraint> cases) {
    cb.add(name, "SETZ-4", "SETZ,SELTZO", Domain::SETZ, nz() && ds() && std::move(hyp),
           std::move(cases));
  };
  // Case 3 of SETZ-4 is printed as the bare "f_y + 1"; read as f_s = e_y + 1
  // by analogy with SETZ-4A0, and validated by the exhaustive checkers.
  fam_4("SETZ-4", (e_x > f_y + (P + 1)) && (f_x < e_y + (P + 1)) && (e_x == f_x),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - P, f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
        });
  fam_4("SETZ-4A0", (e_x == f_y + (P + 1)) && (f_x < e_y + P) && (e_x == f_x),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - (P - 1), f_s, e_y - 1) &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y) && e_like_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
            s_keeps_x() && (e_s == e_x - 1) && (f_s == e_y + 1) && e_unlike_y() &&
                between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_4("SETZ-4A1", (e_x == f_y + (P + 1)) && (f_x == e_y + P) && (e_x == f_x),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - (P - 1), f_s, e_y + 1) &&
                e_unlike_y() && between(f_y, e_e, e_x - (P + 1)) && (f_e == f_y),
        });
  fam_4("SETZ-4B", (e_x > f_y + (P + 1)) && (f_x == e_y + (P + 1)) && (e_x == f_x),
        {
            s_keeps_x() && (e_s == e_x - 1) && between(e_x - P, f_s, e_y + 1) &&
                e_unlike_y() && between(f_y, e_e, e_x - (P + 2)) && (f_e == f_y),
        });

  return cb.lemmas;
}

}  // namespace

const std::vector<Lemma>& full_lemma_list() {
  static const std::vector<Lemma> lemmas = build_catalog();
  return lemmas;
}

}  // namespace fpanv
