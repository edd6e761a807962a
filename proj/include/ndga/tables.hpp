#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ndga/dga.hpp"
#include "ndga/sampling.hpp"

namespace ndga {

enum class AbsSpec { Zero, Pos, Any, EqualsRho };

// one row of the f¹ table: constraint columns, f¹ class, admissible underlying algebras
struct F1Row {
  std::string f1;
  Sign epsilon, abs_rho;
  int rank_x;  // -1: unconstrained
  Sign abs_delta1, abs_delta2, disc;
  int d;  // -1: unconstrained
  AbsSpec abs_b, abs_c;
  std::vector<std::string> g;
};

inline const std::vector<F1Row>& f1_table() {
  using S = Sign;
  using A = AbsSpec;
  static const std::vector<F1Row> rows = {
      {"h1", S::Zero, S::Zero, 0, S::Zero, S::Zero, S::Zero, 0, A::Zero, A::Zero, {"h1"}},
      {"h8", S::Zero, S::Zero, 1, S::Zero, S::Zero, S::Zero, 1, A::Any, A::Any, {"h8"}},
      {"h8", S::Zero, S::Zero, 1, S::Zero, S::Pos, S::Neg, 2, A::Any, A::Any, {"h5"}},
      {"h6", S::Zero, S::Zero, 2, S::Pos, S::Any, S::Any, -1, A::Any, A::Any, {"h2", "h3", "h4", "h5"}},
      {"h8", S::Zero, S::Pos, 0, S::Zero, S::Pos, S::Neg, 2, A::Zero, A::Zero, {"h5"}},
      {"h6", S::Zero, S::Pos, 1, S::Zero, S::Zero, S::Zero, 2, A::Any, A::Any, {"h6"}},
      {"h6", S::Zero, S::Pos, 1, S::Zero, S::Pos, S::Neg, 2, A::Any, A::Any, {"h5"}},
      {"h7", S::Zero, S::Pos, 2, S::Pos, S::Pos, S::Pos, 2, A::Any, A::Any, {"h2"}},
      {"h7", S::Zero, S::Pos, 2, S::Pos, S::Pos, S::Zero, 2, A::Any, A::Any, {"h4"}},
      {"h7", S::Zero, S::Pos, 2, S::Pos, S::Any, S::Neg, 2, A::Any, A::Any, {"h5"}},
      {"h3", S::Pos, S::Zero, 1, S::Zero, S::Pos, S::Neg, 2, A::Pos, A::Zero, {"h15"}},
      {"h17", S::Pos, S::Zero, 1, S::Zero, S::Pos, S::Neg, 2, A::Zero, A::Pos, {"h15"}},
      {"h9", S::Pos, S::Zero, 2, S::Pos, S::Pos, S::Zero, 1, A::Pos, A::Pos, {"h9"}},
      {"h9", S::Pos, S::Zero, 2, S::Any, S::Pos, S::Neg, 2, A::Pos, A::Pos, {"h15"}},
      {"h6", S::Pos, S::Pos, 0, S::Zero, S::Pos, S::Neg, 2, A::Zero, A::Zero, {"h15"}},
      {"h4", S::Pos, S::Pos, 1, S::Zero, S::Zero, S::Zero, 2, A::EqualsRho, A::Zero, {"h7", "h16"}},
      {"h4", S::Pos, S::Pos, 1, S::Zero, S::Pos, S::Neg, 2, A::Pos, A::Zero, {"h15"}},
      {"h10", S::Pos, S::Pos, 1, S::Zero, S::Zero, S::Zero, 2, A::Zero, A::EqualsRho, {"h10"}},
      {"h10", S::Pos, S::Pos, 1, S::Zero, S::Any, S::Neg, 2, A::Zero, A::Pos, {"h15"}},
      {"h11", S::Pos, S::Pos, 2, S::Pos, S::Any, S::Pos, 2, A::Pos, A::Pos, {"h12", "h13"}},
      {"h11", S::Pos, S::Pos, 2, S::Pos, S::Pos, S::Zero, 2, A::Pos, A::Pos, {"h11", "h14"}},
      {"h11", S::Pos, S::Pos, 2, S::Pos, S::Pos, S::Neg, 2, A::Pos, A::Pos, {"h15"}},
  };
  return rows;
}

// checkmarks of the incidence table: (g, f¹)
inline const std::set<std::pair<std::string, std::string>>& incidence_table() {
  static const std::set<std::pair<std::string, std::string>> marks = {
      {"h1", "h1"},   {"h2", "h6"},   {"h2", "h7"},   {"h3", "h6"},   {"h4", "h6"},   {"h4", "h7"},
      {"h5", "h6"},   {"h5", "h7"},   {"h5", "h8"},   {"h6", "h6"},   {"h7", "h4"},   {"h8", "h8"},
      {"h9", "h9"},   {"h10", "h10"}, {"h11", "h11"}, {"h12", "h11"}, {"h13", "h11"}, {"h14", "h11"},
      {"h15", "h3"},  {"h15", "h4"},  {"h15", "h6"},  {"h15", "h9"},  {"h15", "h10"}, {"h15", "h11"},
      {"h15", "h17"}, {"h16", "h4"},
  };
  return marks;
}

inline bool abs_matches(AbsSpec spec, const GR& x, const GR& rho) {
  switch (spec) {
    case AbsSpec::Zero: return x.is_zero();
    case AbsSpec::Pos: return !x.is_zero();
    case AbsSpec::Any: return true;
    case AbsSpec::EqualsRho: return abs2(x) == abs2(rho);
  }
  return false;
}

inline bool f1_row_matches(const F1Row& r, const ComplexStructureEq& e) {
  InvariantProfile p = invariants(e);
  return sign_matches(r.epsilon, e.epsilon.is_zero() ? 0 : 1) && sign_matches(r.abs_rho, e.rho.is_zero() ? 0 : 1) &&
         (r.rank_x < 0 || r.rank_x == p.rank_x) && sign_matches(r.abs_delta1, p.delta1.is_zero() ? 0 : 1) &&
         sign_matches(r.abs_delta2, sgn(p.delta2) ? 1 : 0) && sign_matches(r.disc, p.sign_disc) &&
         (r.d < 0 || r.d == p.d_span) && abs_matches(r.abs_b, e.B, e.rho) && abs_matches(r.abs_c, e.C, e.rho);
}

namespace detail {

inline GR real_nz(ScalarSampler& s) { return GR(s.nonzero_rational(5, 3)); }
inline GR cplx_nz(ScalarSampler& s) { return s.nonzero_gaussian(5, 3); }
inline GR non_real(ScalarSampler& s) { return GR(s.rational(5, 3), s.nonzero_rational(5, 3)); }

inline ComplexStructureEq eps0(GR rho, GR a, GR b, GR c, GR d) { return {GR(0), rho, a, b, c, d}; }
inline ComplexStructureEq eps1(GR rho, GR b, GR c) { return {GR(1), rho, GR(0), b, c, GR(0)}; }

// hides a normal form behind a random admissible coframe change (only when ε = 0)
inline ComplexStructureEq scramble(const ComplexStructureEq& e, ScalarSampler& s) {
  if (!e.epsilon.is_zero()) return e;
  return reduce(transform(e, random_basis_change(s, e.epsilon)));
}

template <class Gen, class Accept>
ComplexStructureEq until(ScalarSampler& s, Gen gen, Accept ok) {
  for (int t = 0; t < 5000; ++t) {
    ComplexStructureEq e = gen(s);
    if (ok(e)) return e;
  }
  throw Error(ErrorCode::EmptyFamily, "rejection sampling exhausted");
}

inline ComplexStructureEq rank_one(ScalarSampler& s, GR rho) {
  GR x = s.gaussian(4, 3), y = s.gaussian(4, 3), p = s.gaussian(4, 3), q = s.gaussian(4, 3);
  return eps0(rho, x * p, x * q, y * p, y * q);
}

inline ComplexStructureEq full(ScalarSampler& s, GR rho) {
  return eps0(rho, s.gaussian(4, 3), s.gaussian(4, 3), s.gaussian(4, 3), s.gaussian(4, 3));
}

}  // namespace detail

// a sample of the given row aimed at the given underlying algebra of that row
inline ComplexStructureEq sample_f1_row(std::size_t row, const std::string& target, ScalarSampler& s) {
  using namespace detail;
  GR one(1), zero(0);
  auto nz_rank = [](int k) { return [k](const ComplexStructureEq& e) { return rank_x(e) == k; }; };
  switch (row) {
    case 0: return eps0(zero, zero, zero, zero, zero);
    case 1: {
      GR x = s.gaussian(4, 3), y = s.nonzero_gaussian(4, 3);
      GR c = s.integer(0, 1) ? real_nz(s) : GR(Rational(0), s.nonzero_rational(5, 3));
      return scramble(eps0(zero, c * x * conj(x), c * x * conj(y), c * y * conj(x), c * y * conj(y)), s);
    }
    case 2:
      return scramble(until(s, [&](ScalarSampler& r) { return rank_one(r, zero); },
                            [&](const ComplexStructureEq& e) { return nz_rank(1)(e) && sgn(delta2(e)) != 0; }),
                      s);
    case 3: {
      if (target == "h3") {
        GR a = real_nz(s), d = real_nz(s), b = GR(s.rational(5, 3));
        if (a * d == b * b) d += one;
        return scramble(eps0(zero, a, b, b, d), s);
      }
      if (target == "h4") {
        GR b = GR(s.rational(5, 3)), c = GR(s.rational(5, 3)), d = real_nz(s);
        if (b == c) c += one;
        return scramble(eps0(zero, (b + c) * (b + c) * (GR(4) * d).inverse(), b, c, d), s);
      }
      int want = target == "h2" ? 1 : -1;
      return scramble(until(s, [&](ScalarSampler& r) { return full(r, zero); },
                            [&](const ComplexStructureEq& e) { return nz_rank(2)(e) && disc_sign(e) == want; }),
                      s);
    }
    case 4: return eps0(one, zero, zero, zero, zero);
    case 5: {
      ComplexStructureEq base = s.integer(0, 1) ? eps0(one, zero, s.unit(), zero, zero) : eps0(one, zero, zero, s.unit(), zero);
      return scramble(base, s);
    }
    case 6:
      return scramble(until(s, [&](ScalarSampler& r) { return rank_one(r, one); },
                            [&](const ComplexStructureEq& e) { return nz_rank(1)(e) && sgn(delta2(e)) != 0; }),
                      s);
    case 7:
      return scramble(until(s, [&](ScalarSampler& r) { return full(r, one); },
                            [&](const ComplexStructureEq& e) {
                              return nz_rank(2)(e) && sgn(delta2(e)) != 0 && disc_sign(e) > 0;
                            }),
                      s);
    case 8: {
      GR b = GR(s.rational(5, 3)), c = GR(s.rational(5, 3)), d = real_nz(s);
      if ((b - c) * (b - c) == one) c += GR(3);
      return scramble(eps0(one, ((b + c) * (b + c) - one) * (GR(4) * d).inverse(), b, c, d), s);
    }
    case 9:
      return scramble(until(s, [&](ScalarSampler& r) { return full(r, one); },
                            [&](const ComplexStructureEq& e) { return nz_rank(2)(e) && disc_sign(e) < 0; }),
                      s);
    case 10: return eps1(zero, cplx_nz(s), zero);
    case 11: return eps1(zero, zero, cplx_nz(s));
    case 12: {
      GR b = cplx_nz(s);
      return eps1(zero, b, b * s.unit());
    }
    case 13:
      return until(s, [&](ScalarSampler& r) { return eps1(zero, cplx_nz(r), cplx_nz(r)); },
                   [](const ComplexStructureEq& e) { return abs2(e.B) != abs2(e.C); });
    case 14: return eps1(one, zero, zero);
    case 15: return eps1(one, target == "h7" ? one : s.unit_not_one(), zero);
    case 16:
      return until(s, [&](ScalarSampler& r) { return eps1(one, cplx_nz(r), zero); },
                   [](const ComplexStructureEq& e) { return abs2(e.B) != 1; });
    case 17: return eps1(one, zero, s.unit());
    case 18:
      return until(s, [&](ScalarSampler& r) { return eps1(one, zero, cplx_nz(r)); },
                   [](const ComplexStructureEq& e) { return abs2(e.C) != 1; });
    case 19: {
      if (target == "h12") {
        GR b = non_real(s);
        return eps1(one, b, (b - one) * s.unit());
      }
      return until(s, [&](ScalarSampler& r) { return eps1(one, cplx_nz(r), cplx_nz(r)); },
                   [](const ComplexStructureEq& e) {
                     return disc_sign(e) > 0 && abs2(e.C) != abs2(e.B - GR(1));
                   });
    }
    case 20: {
      if (target == "h11") {
        GR b = real_nz(s);
        if (b.is_one()) b += one;
        return eps1(one, b, (b - one) * s.unit());
      }
      GR r = GR(s.positive_rational(5, 3)), u = s.unit();
      while (u.is_real()) u = s.unit();
      return eps1(one, r * u, (r + one) * s.unit());
    }
    case 21:
      return until(s, [&](ScalarSampler& r) { return eps1(one, cplx_nz(r), cplx_nz(r)); },
                   [](const ComplexStructureEq& e) { return disc_sign(e) < 0; });
    default: throw Error(ErrorCode::InvalidArgument, "no such row");
  }
}

struct RowReport {
  std::size_t row = 0;
  std::string expected;
  int samples = 0;
  int constraint_ok = 0;
  int class_ok = 0;
  int underlying_ok = 0;
  std::set<std::string> underlying_seen;
  std::vector<std::string> failures;

  bool passed() const {
    return samples > 0 && constraint_ok == samples && class_ok == samples && underlying_ok == samples;
  }
};

struct F1TableReport {
  std::vector<RowReport> rows;
  std::set<std::pair<std::string, std::string>> incidence;

  bool rows_pass(int min_samples) const {
    for (auto& r : rows)
      if (!r.passed() || r.samples < min_samples) return false;
    return !rows.empty();
  }
  bool incidence_matches() const { return incidence == incidence_table(); }
};

inline F1TableReport verify_f1_table(int samples_per_row, std::uint64_t seed) {
  F1TableReport rep;
  const auto& table = f1_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const F1Row& row = table[i];
    ScalarSampler s(seed * 1000003 + i);
    RowReport r;
    r.row = i;
    r.expected = row.f1;
    for (int k = 0; k < samples_per_row; ++k) {
      const std::string& target = row.g[k % row.g.size()];
      ComplexStructureEq e = sample_f1_row(i, target, s);
      ++r.samples;
      bool ok_c = f1_row_matches(row, e);
      std::string f1 = classify_f1(e);
      std::string g = identify_underlying(e);
      bool ok_f = f1 == row.f1;
      bool ok_g = std::find(row.g.begin(), row.g.end(), g) != row.g.end();
      r.constraint_ok += ok_c;
      r.class_ok += ok_f;
      r.underlying_ok += ok_g;
      r.underlying_seen.insert(g);
      rep.incidence.insert({g, f1});
      if (!(ok_c && ok_f && ok_g) && r.failures.size() < 5)
        r.failures.push_back(to_string(e) + " gives f1=" + f1 + ", g=" + g);
    }
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

struct Table1Report {
  std::vector<RowReport> rows;
  bool passed(int min_samples) const {
    for (auto& r : rows)
      if (!r.passed() || r.samples < min_samples) return false;
    return !rows.empty();
  }
};

// Table 1 rows are sampled through the f¹ families that reach the same underlying algebra
inline Table1Report verify_table1(int samples_per_row, std::uint64_t seed) {
  Table1Report rep;
  const auto& rows = table1();
  const auto& f1rows = f1_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& row = rows[i];
    std::vector<std::size_t> sources;
    for (std::size_t j = 0; j < f1rows.size(); ++j)
      if (std::find(f1rows[j].g.begin(), f1rows[j].g.end(), row.name) != f1rows[j].g.end()) sources.push_back(j);
    ScalarSampler s(seed * 7919 + i);
    RowReport r;
    r.row = i;
    r.expected = row.name;
    for (int k = 0; k < samples_per_row; ++k) {
      ComplexStructureEq e = sample_f1_row(sources[k % sources.size()], row.name, s);
      ++r.samples;
      bool ok_c = row_matches(row, invariants(e), e);
      std::string id = identify_underlying(e);
      std::string cl = classify(realify(e));
      r.constraint_ok += ok_c;
      r.class_ok += cl == row.name;
      r.underlying_ok += id == row.name;
      r.underlying_seen.insert(id);
      if (!(ok_c && cl == row.name && id == row.name) && r.failures.size() < 5)
        r.failures.push_back(to_string(e) + " gives table=" + id + ", classify=" + cl);
    }
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace ndga
