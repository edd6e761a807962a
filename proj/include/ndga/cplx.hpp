#pragma once

#include <array>
#include <string>
#include <vector>

#include "ndga/notation.hpp"

namespace ndga {

// dω¹ = 0, dω² = ε ω¹ω̄¹, dω³ = ρ ω¹ω² + A ω¹ω̄¹ + B ω¹ω̄² + C ω²ω̄¹ + D ω²ω̄²
struct ComplexStructureEq {
  GR epsilon, rho, A, B, C, D;

  bool d_omega3_zero() const { return rho.is_zero() && A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero(); }

  void validate() const {
    if (!(D * epsilon).is_zero()) throw Error(ErrorCode::InvalidStructure, "D·epsilon must vanish");
    if (!epsilon.is_zero() && d_omega3_zero())
      throw Error(ErrorCode::InvalidStructure, "epsilon nonzero with dω³ = 0 is excluded");
  }

  friend bool operator==(const ComplexStructureEq&, const ComplexStructureEq&) = default;
};

// coframe space indices: 0..2 are ω¹..ω³, 3..5 are ω̄¹..ω̄³
inline constexpr int kOmega = 0;
inline constexpr int kOmegaBar = 3;

inline Mask pair_mask(int a, int b) { return bit(a) | bit(b); }

// complex conjugation on forms in the coframe space: ω ↔ ω̄
inline Multivector bar(const Multivector& a) {
  Multivector out(a.dim());
  for (auto& [m, c] : a.terms()) {
    std::vector<int> idx;
    for (int i : indices(m)) idx.push_back(i < 3 ? i + 3 : i - 3);
    out += Multivector::monomial(a.dim(), idx, conj(c));
  }
  return out;
}

inline std::vector<Multivector> coframe_differentials(const ComplexStructureEq& eq) {
  Multivector d1(6), d2(6), d3(6);
  d2.add_term(pair_mask(0, 3), eq.epsilon);
  d3.add_term(pair_mask(0, 1), eq.rho);
  d3.add_term(pair_mask(0, 3), eq.A);
  d3.add_term(pair_mask(0, 4), eq.B);
  d3.add_term(pair_mask(1, 3), eq.C);
  d3.add_term(pair_mask(1, 4), eq.D);
  return {d1, d2, d3, bar(d1), bar(d2), bar(d3)};
}

// g_C written in the coframe (ω, ω̄)
inline LieAlgebra complexified(const ComplexStructureEq& eq) {
  return LieAlgebra(coframe_differentials(eq), ScalarField::Complex);
}

// columns: ω¹, ω², ω³, ω̄¹, ω̄², ω̄³ in the real basis, ω^k = e^{2k-1} + i e^{2k}
inline Matrix standard_coframe_matrix() {
  Matrix m(6, 6);
  for (int k = 0; k < 3; ++k) {
    m(2 * k, k) = GR(1);
    m(2 * k + 1, k) = GR::i();
    m(2 * k, 3 + k) = GR(1);
    m(2 * k + 1, 3 + k) = -GR::i();
  }
  return m;
}

using Coframe = std::vector<Vec>;

inline Coframe standard_coframe() {
  Matrix m = standard_coframe_matrix();
  return {m.column(0), m.column(1), m.column(2)};
}

inline LieAlgebra realify(const ComplexStructureEq& eq) {
  eq.validate();
  auto cd = coframe_differentials(eq);
  Matrix m = standard_coframe_matrix();
  std::vector<Multivector> diffs;
  for (int k = 0; k < 3; ++k) {
    Multivector w = apply_linear(m, cd[k]);
    diffs.push_back(w.real_part());
    diffs.push_back(w.imag_part());
  }
  return LieAlgebra(diffs, ScalarField::Real);
}

inline Matrix coframe_matrix(const Coframe& w) {
  std::vector<Vec> cols = w;
  for (auto& v : w) {
    Vec c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = conj(v[i]);
    cols.push_back(c);
  }
  return Matrix::from_columns(cols, w.front().size());
}

// rewrite a form given in the real basis in terms of (ω, ω̄)
inline Multivector in_coframe(const Multivector& a, const Coframe& w) {
  return apply_linear(inverse(coframe_matrix(w)), a);
}

inline Multivector coframe_form(const Vec& v) { return Multivector::from_vector(static_cast<int>(v.size()), v); }

// structure equations of an adapted coframe
inline ComplexStructureEq structure_equations(const LieAlgebra& g, const Coframe& w) {
  std::vector<Multivector> dw;
  for (auto& v : w) dw.push_back(in_coframe(g.d(coframe_form(v)), w));
  auto only = [](const Multivector& m, std::initializer_list<Mask> allowed) {
    for (auto& [mask, c] : m.terms())
      if (std::find(allowed.begin(), allowed.end(), mask) == allowed.end()) return false;
    return true;
  };
  if (!dw[0].is_zero() || !only(dw[1], {pair_mask(0, 3)}) ||
      !only(dw[2], {pair_mask(0, 1), pair_mask(0, 3), pair_mask(0, 4), pair_mask(1, 3), pair_mask(1, 4)}))
    throw Error(ErrorCode::InvalidStructure, "coframe is not in structure-equation form");
  ComplexStructureEq eq{dw[1].coeff(pair_mask(0, 3)), dw[2].coeff(pair_mask(0, 1)), dw[2].coeff(pair_mask(0, 3)),
                        dw[2].coeff(pair_mask(0, 4)), dw[2].coeff(pair_mask(1, 3)), dw[2].coeff(pair_mask(1, 4))};
  eq.validate();
  return eq;
}

struct InvariantProfile {
  int n1 = 0, n2 = 0;
  GR delta1;
  Rational delta2;
  int d_span = 0;
  int rank_x = 0;
  Rational abs_b2, abs_c2;
  int sign_disc = 0;
  bool abelian = false;
};

inline GR delta1(const ComplexStructureEq& e) { return e.A * e.D - e.B * e.C; }

inline Rational delta2(const ComplexStructureEq& e) {
  GR t = GR(abs2(e.B) + abs2(e.C)) - e.A * conj(e.D) - conj(e.A) * e.D - GR(abs2(e.rho));
  return Rational(t.re() / 2);
}

inline int disc_sign(const ComplexStructureEq& e) {
  Rational d2 = delta2(e);
  return sgn(Rational(abs2(delta1(e)) - d2 * d2));
}

inline int d_span(const ComplexStructureEq& e) {
  auto cd = coframe_differentials(e);
  return static_cast<int>(rank(Matrix::from_rows({cd[2].coordinates(2), cd[5].coordinates(2)}, 15)));
}

inline int rank_x(const ComplexStructureEq& e) {
  return static_cast<int>(rank(Matrix::from_rows({{e.A, e.B}, {e.C, e.D}}, 2)));
}

inline std::pair<int, int> n_invariant(const ComplexStructureEq& e) {
  auto seq = dual_sequence(realify(e));
  int n1 = seq.at(0);
  int n2 = seq.size() > 1 ? seq[1] : n1;
  return {n1, n2};
}

inline InvariantProfile invariants(const ComplexStructureEq& e) {
  e.validate();
  InvariantProfile p;
  std::tie(p.n1, p.n2) = n_invariant(e);
  p.delta1 = delta1(e);
  p.delta2 = delta2(e);
  p.d_span = d_span(e);
  p.rank_x = rank_x(e);
  p.abs_b2 = abs2(e.B);
  p.abs_c2 = abs2(e.C);
  p.sign_disc = disc_sign(e);
  p.abelian = e.rho.is_zero();
  return p;
}

// the five conditions equivalent to d ≤ 1
inline bool span_conditions(const ComplexStructureEq& e) {
  return e.rho.is_zero() && abs2(e.B) == abs2(e.C) && e.A * conj(e.D) == conj(e.A) * e.D &&
         e.A * conj(e.B) == conj(e.A) * e.C && e.D * conj(e.B) == conj(e.D) * e.C;
}

// θ^j = Σ_k σ(j,k) ω^k with θ¹, θ² free of ω³
struct BasisChange {
  Matrix sigma = Matrix::identity(3);

  GR delta_prime() const {
    GR det = sigma(0, 0) * sigma(1, 1) - sigma(0, 1) * sigma(1, 0);
    return det.inverse();
  }
};

inline void check_basis_change(const ComplexStructureEq& eq, const BasisChange& s) {
  const Matrix& m = s.sigma;
  if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorCode::IncompatibleBasisChange, "sigma must be 3x3");
  if (!m(0, 2).is_zero() || !m(1, 2).is_zero())
    throw Error(ErrorCode::IncompatibleBasisChange, "θ¹, θ² may not involve ω³");
  if (!(eq.epsilon * m(0, 1)).is_zero()) throw Error(ErrorCode::IncompatibleBasisChange, "epsilon·σ¹₂ ≠ 0");
  if (determinant(m).is_zero()) throw Error(ErrorCode::IncompatibleBasisChange, "sigma not invertible");
}

inline ComplexStructureEq eq_from_coframe_differentials(const std::vector<Multivector>& d) {
  auto only = [](const Multivector& m, std::initializer_list<Mask> allowed) {
    for (auto& [mask, c] : m.terms())
      if (std::find(allowed.begin(), allowed.end(), mask) == allowed.end()) return false;
    return true;
  };
  if (!d[0].is_zero() || !only(d[1], {pair_mask(0, 3)}) ||
      !only(d[2], {pair_mask(0, 1), pair_mask(0, 3), pair_mask(0, 4), pair_mask(1, 3), pair_mask(1, 4)}))
    throw Error(ErrorCode::IncompatibleBasisChange, "new coframe leaves structure-equation form");
  return {d[1].coeff(pair_mask(0, 3)), d[2].coeff(pair_mask(0, 1)), d[2].coeff(pair_mask(0, 3)),
          d[2].coeff(pair_mask(0, 4)), d[2].coeff(pair_mask(1, 3)), d[2].coeff(pair_mask(1, 4))};
}

inline ComplexStructureEq transform(const ComplexStructureEq& eq, const BasisChange& s) {
  eq.validate();
  check_basis_change(eq, s);
  Matrix p(6, 6);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      p(j, k) = s.sigma(j, k);
      p(3 + j, 3 + k) = conj(s.sigma(j, k));
    }
  LieAlgebra g = change_coframe(complexified(eq), p);
  ComplexStructureEq out = eq_from_coframe_differentials(g.differentials());
  out.validate();
  return out;
}

inline BasisChange diagonal_change(const GR& a, const GR& b, const GR& c) {
  BasisChange s;
  s.sigma(0, 0) = a;
  s.sigma(1, 1) = b;
  s.sigma(2, 2) = c;
  return s;
}

inline ComplexStructureEq reduce(const ComplexStructureEq& input) {
  input.validate();
  ComplexStructureEq e = input;
  if (!e.epsilon.is_zero() && !e.epsilon.is_one()) e = transform(e, diagonal_change(1, e.epsilon.inverse(), 1));
  if (e.epsilon.is_one() && !e.A.is_zero()) {
    BasisChange s;
    s.sigma(2, 1) = -e.A;
    ComplexStructureEq shifted = e;
    shifted.A = 0;
    if (shifted.d_omega3_zero()) {
      // dω³ = A dω² only: swap ω², ω³ to reach ε = 0, A = 1
      return {GR(0), GR(0), GR(1), GR(0), GR(0), GR(0)};
    }
    e = transform(e, s);
  }
  if (!e.rho.is_zero() && !e.rho.is_one()) e = transform(e, diagonal_change(1, 1, e.rho.inverse()));
  return e;
}

inline bool is_reduced(const ComplexStructureEq& e) {
  return (e.epsilon.is_zero() || e.epsilon.is_one()) && (e.rho.is_zero() || e.rho.is_one()) &&
         (!e.epsilon.is_one() || (e.A.is_zero() && e.D.is_zero()));
}

enum class Sign { Zero, Pos, Neg, Any };

inline bool sign_matches(Sign p, int s) {
  switch (p) {
    case Sign::Zero: return s == 0;
    case Sign::Pos: return s > 0;
    case Sign::Neg: return s < 0;
    case Sign::Any: return true;
  }
  return false;
}

inline const char* sign_symbol(Sign p) {
  switch (p) {
    case Sign::Zero: return "0";
    case Sign::Pos: return "+";
    case Sign::Neg: return "-";
    case Sign::Any: return "*";
  }
  return "?";
}

struct Table1Row {
  std::string name;
  int n1, n2;
  Sign disc, abs_delta1, abs_delta2, epsilon, abs_rho;
  int d;
};

inline const std::vector<Table1Row>& table1() {
  using S = Sign;
  static const std::vector<Table1Row> rows = {
      {"h1", 6, 6, S::Zero, S::Zero, S::Zero, S::Zero, S::Zero, 0},
      {"h8", 5, 6, S::Zero, S::Zero, S::Zero, S::Zero, S::Zero, 1},
      {"h3", 5, 6, S::Zero, S::Pos, S::Pos, S::Zero, S::Zero, 1},
      {"h6", 4, 6, S::Zero, S::Zero, S::Zero, S::Zero, S::Pos, 2},
      {"h4", 4, 6, S::Zero, S::Pos, S::Pos, S::Zero, S::Any, 2},
      {"h2", 4, 6, S::Pos, S::Pos, S::Any, S::Zero, S::Any, 2},
      {"h5", 4, 6, S::Neg, S::Any, S::Pos, S::Zero, S::Any, 2},
      {"h9", 4, 5, S::Zero, S::Pos, S::Pos, S::Pos, S::Zero, 1},
      {"h7", 3, 6, S::Zero, S::Zero, S::Zero, S::Pos, S::Pos, 2},
      {"h10", 3, 5, S::Zero, S::Zero, S::Zero, S::Pos, S::Pos, 2},
      {"h11", 3, 5, S::Zero, S::Pos, S::Pos, S::Pos, S::Pos, 2},
      {"h12", 3, 5, S::Pos, S::Pos, S::Any, S::Pos, S::Pos, 2},
      {"h16", 3, 4, S::Zero, S::Zero, S::Zero, S::Pos, S::Pos, 2},
      {"h13", 3, 4, S::Pos, S::Pos, S::Any, S::Pos, S::Pos, 2},
      {"h14", 3, 4, S::Zero, S::Pos, S::Pos, S::Pos, S::Pos, 2},
      {"h15", 3, 4, S::Neg, S::Any, S::Pos, S::Pos, S::Any, 2},
  };
  return rows;
}

inline bool row_matches(const Table1Row& r, const InvariantProfile& p, const ComplexStructureEq& e) {
  return r.n1 == p.n1 && r.n2 == p.n2 && sign_matches(r.disc, p.sign_disc) &&
         sign_matches(r.abs_delta1, p.delta1.is_zero() ? 0 : 1) && sign_matches(r.abs_delta2, sgn(p.delta2) ? 1 : 0) &&
         sign_matches(r.epsilon, e.epsilon.is_zero() ? 0 : 1) && sign_matches(r.abs_rho, e.rho.is_zero() ? 0 : 1) &&
         r.d == p.d_span;
}

inline std::vector<std::string> matching_table1_rows(const ComplexStructureEq& e) {
  InvariantProfile p = invariants(e);
  std::vector<std::string> out;
  for (auto& r : table1())
    if (row_matches(r, p, e)) out.push_back(r.name);
  return out;
}

inline std::string identify_underlying(const ComplexStructureEq& e) {
  auto names = matching_table1_rows(e);
  if (names.size() != 1)
    throw Error(names.empty() ? ErrorCode::ProfileNotInTable : ErrorCode::Ambiguous,
                "equations match " + std::to_string(names.size()) + " rows of the decision table");
  return names.front();
}

// forms of the coframe written in the real basis of g, with their differentials
inline std::vector<Multivector> forms_of(const Coframe& w) {
  std::vector<Multivector> out;
  for (auto& v : w) out.push_back(coframe_form(v));
  return out;
}

inline Multivector conj_form(const Multivector& a) { return a.conjugate_coefficients(); }

inline bool is_abelian_basis(const LieAlgebra& g, const Coframe& w) {
  auto f = forms_of(w);
  int n = g.dim();
  for (std::size_t p = 0; p < f.size(); ++p) {
    Multivector t = Multivector::scalar(n, GR(1));
    for (std::size_t q = 0; q < p; ++q) t = wedge(t, conj_form(f[q]));
    t = wedge(t, f[p]);
    if (!g.d(t).is_zero()) return false;
  }
  return true;
}

inline bool is_nilpotent_basis(const LieAlgebra& g, const Coframe& w) {
  int m = static_cast<int>(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) {
    Multivector dw = in_coframe(g.d(coframe_form(w[p])), w);
    Mask allowed = 0;
    for (std::size_t q = 0; q < p; ++q) allowed |= bit(static_cast<int>(q)) | bit(m + static_cast<int>(q));
    for (auto& [mask, c] : dw.terms())
      if (mask & ~allowed) return false;
  }
  return true;
}

inline bool is_integrable_basis(const LieAlgebra& g, const Coframe& w) {
  auto f = forms_of(w);
  Multivector t = Multivector::scalar(g.dim(), GR(1));
  for (auto& x : f) {
    t = wedge(t, x);
    if (!g.d(t).is_zero()) return false;
  }
  return true;
}

inline bool is_abelian(const ComplexStructureEq& e) { return is_abelian_basis(realify(e), standard_coframe()); }

// J e_{2k-1} = e_{2k}, matching ω^k = e^{2k-1} + i e^{2k}
inline Matrix standard_J(int m = 3) {
  Matrix j(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    j(2 * k + 1, 2 * k) = GR(1);
    j(2 * k, 2 * k + 1) = GR(-1);
  }
  return j;
}

inline bool nijenhuis_vanishes(const LieAlgebra& g, const Matrix& J) {
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec x = unit_vector(n, a), y = unit_vector(n, b);
      Vec jx = J * x, jy = J * y;
      Vec t1 = g.bracket(jx, jy), t2 = J * g.bracket(jx, y), t3 = J * g.bracket(x, jy), t4 = g.bracket(x, y);
      for (int k = 0; k < n; ++k)
        if (!(t1[k] - t2[k] - t3[k] - t4[k]).is_zero()) return false;
    }
  return true;
}

inline bool is_abelian_J(const LieAlgebra& g, const Matrix& J) {
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec x = unit_vector(n, a), y = unit_vector(n, b);
      if (g.bracket(J * x, J * y) != g.bracket(x, y)) return false;
    }
  return true;
}

// (1,0)-forms: α with α(Jx) = i α(x)
inline std::vector<Vec> forms_10(const Matrix& J) {
  std::size_t n = J.rows();
  Matrix m = J.transpose() - GR::i() * Matrix::identity(n);
  return kernel(m);
}

inline Coframe find_adapted_basis(const LieAlgebra& g, const Matrix& J) {
  int n = g.dim();
  if (n % 2 || static_cast<int>(J.rows()) != n || static_cast<int>(J.cols()) != n)
    throw Error(ErrorCode::InvalidArgument, "J must be a square matrix of even size matching g");
  if (J * J != GR(-1) * Matrix::identity(n)) throw Error(ErrorCode::InvalidArgument, "J² ≠ −1");
  if (!nijenhuis_vanishes(g, J)) throw Error(ErrorCode::NotIntegrable, "Nijenhuis tensor does not vanish");
  int m = n / 2;
  std::vector<Vec> beta = forms_10(J);
  std::vector<Multivector> dbeta;
  for (auto& b : beta) dbeta.push_back(g.d(coframe_form(b)));
  std::vector<Subspace> layers;
  Subspace prev(n);
  while (static_cast<int>(prev.dim()) < m) {
    std::vector<Vec> w = prev.basis();
    for (auto& v : prev.basis()) {
      Vec c(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) c[i] = conj(v[i]);
      w.push_back(c);
    }
    Subspace lam2 = wedge_square(Subspace::span(w, n), n);
    auto ann = lam2.annihilator();
    // coefficients c with Σ c_i dβ_i in Λ²(A ⊕ Ā)
    Matrix cond(ann.size(), beta.size());
    for (std::size_t j = 0; j < beta.size(); ++j) {
      Vec coords = dbeta[j].coordinates(2);
      for (std::size_t r = 0; r < ann.size(); ++r) {
        GR s;
        for (std::size_t k = 0; k < coords.size(); ++k)
          if (!coords[k].is_zero()) s += ann[r][k] * coords[k];
        cond(r, j) = s;
      }
    }
    std::vector<Vec> forms;
    for (auto& c : ann.empty() ? kernel(Matrix(0, beta.size())) : kernel(cond)) {
      Vec f(n);
      for (std::size_t j = 0; j < beta.size(); ++j)
        for (int i = 0; i < n; ++i) f[i] += c[j] * beta[j][i];
      forms.push_back(f);
    }
    Subspace next = Subspace::span(forms, n);
    if (next.dim() == prev.dim()) throw Error(ErrorCode::NotNilpotent, "(1,0)-filtration stabilizes below full rank");
    layers.push_back(next);
    prev = next;
  }
  // extend bases layer by layer
  Coframe w;
  for (auto& layer : layers)
    for (auto& v : layer.basis()) {
      std::vector<Vec> trial = w;
      trial.push_back(v);
      if (Subspace::span(trial, n).dim() == trial.size()) w.push_back(v);
    }
  return w;
}

inline std::string to_string(const ComplexStructureEq& e) {
  return "{epsilon=" + e.epsilon.to_string() + ", rho=" + e.rho.to_string() + ", A=" + e.A.to_string() +
         ", B=" + e.B.to_string() + ", C=" + e.C.to_string() + ", D=" + e.D.to_string() + "}";
}

}  // namespace ndga
