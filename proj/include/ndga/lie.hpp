#pragma once

#include <string>
#include <vector>

#include "ndga/exterior.hpp"

namespace ndga {

enum class ScalarField { Real, Complex };

// structure equations de^k; brackets follow d alpha(x,y) = -alpha([x,y])
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<Multivector> differentials, ScalarField field = ScalarField::Real)
      : dim_(static_cast<int>(differentials.size())), diffs_(std::move(differentials)), field_(field) {
    if (dim_ < 1 || dim_ > kMaxDim) throw Error(ErrorCode::InvalidArgument, "dimension out of range");
    for (auto& m : diffs_) {
      if (m.dim() != dim_) throw Error(ErrorCode::SpaceMismatch, "differential in wrong space");
      if (!m.is_zero() && m.homogeneous_degree() != 2)
        throw Error(ErrorCode::NotHomogeneous, "differential of a generator must be a 2-form");
    }
    if (field_ == ScalarField::Real)
      for (auto& m : diffs_)
        if (!m.is_real()) throw Error(ErrorCode::InvalidArgument, "real algebra with complex constants");
  }

  static LieAlgebra abelian(int dim, ScalarField field = ScalarField::Real) {
    return LieAlgebra(std::vector<Multivector>(dim, Multivector(dim)), field);
  }

  // brackets[i][j] = [e_i, e_j] as a coordinate vector
  static LieAlgebra from_brackets(const std::vector<std::vector<Vec>>& brackets, ScalarField field) {
    int n = static_cast<int>(brackets.size());
    std::vector<Multivector> diffs(n, Multivector(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!brackets[i][j][k].is_zero()) diffs[k].add_term(bit(i) | bit(j), -brackets[i][j][k]);
    return LieAlgebra(diffs, field);
  }

  int dim() const { return dim_; }
  ScalarField field() const { return field_; }
  const std::vector<Multivector>& differentials() const { return diffs_; }
  const Multivector& differential(int k) const { return diffs_[k]; }

  LieAlgebra with_field(ScalarField f) const { return LieAlgebra(diffs_, f); }

  Multivector d(const Multivector& a) const { return extend_odd_derivation(diffs_, a); }

  Vec bracket(int i, int j) const {
    Vec v(dim_);
    if (i == j) return v;
    Mask m = bit(i) | bit(j);
    for (int k = 0; k < dim_; ++k) {
      GR c = diffs_[k].coeff(m);
      v[k] = i < j ? -c : c;
    }
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j].is_zero() || i == j) continue;
        GR c = x[i] * y[j];
        Vec b = bracket(i, j);
        for (int k = 0; k < dim_; ++k)
          if (!b[k].is_zero()) out[k] += c * b[k];
      }
    }
    return out;
  }

  // matrix of d from degree p to p+1
  Matrix d_matrix(int p) const {
    return degree_matrix(dim_, p, p + 1, [this](const Multivector& a) { return d(a); });
  }

  bool is_malcev() const {
    for (int k = 0; k < dim_; ++k)
      for (const auto& [m, c] : diffs_[k].terms())
        if (m >> k) return false;
    return true;
  }

  bool has_real_constants() const {
    for (auto& m : diffs_)
      if (!m.is_real()) return false;
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.diffs_ == b.diffs_;
  }

 private:
  int dim_ = 0;
  std::vector<Multivector> diffs_;
  ScalarField field_ = ScalarField::Real;
};

inline Vec unit_vector(int n, int i) {
  Vec v(n);
  v[i] = GR(1);
  return v;
}

inline bool check_jacobi(const LieAlgebra& g) {
  for (int k = 0; k < g.dim(); ++k)
    if (!g.d(g.differential(k)).is_zero()) return false;
  return true;
}

// new coframe f^i = sum_j p(i, j) e^j
inline LieAlgebra change_coframe(const LieAlgebra& g, const Matrix& p) {
  Matrix q = inverse(p);
  Matrix sub = q.transpose();
  int n = g.dim();
  std::vector<Multivector> diffs;
  for (int i = 0; i < n; ++i) {
    Multivector de(n);
    for (int j = 0; j < n; ++j)
      if (!p(i, j).is_zero()) de += p(i, j) * g.differential(j);
    diffs.push_back(apply_linear(sub, de));
  }
  return LieAlgebra(diffs, g.field());
}

// span of wedge products of a subspace of degree one, as a subspace of degree two coordinates
inline Subspace wedge_square(const Subspace& v, int dim) {
  std::vector<Vec> vs;
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      vs.push_back(wedge(Multivector::from_vector(dim, b[i]), Multivector::from_vector(dim, b[j])).coordinates(2));
  return Subspace::span(vs, masks_of_degree(dim, 2).size());
}

// V_1 ⊂ V_2 ⊂ ... with V_p = {alpha : d alpha in Λ² V_{p-1}}, until it stabilizes
inline std::vector<Subspace> dual_filtration(const LieAlgebra& g) {
  int n = g.dim();
  Matrix d1 = g.d_matrix(1);
  std::vector<Subspace> out;
  Subspace prev(n);
  for (;;) {
    Subspace w = wedge_square(prev, n);
    auto ann = w.annihilator();
    Subspace next;
    if (ann.empty()) {
      next = Subspace::full(n);
    } else {
      Matrix cond = Matrix::from_rows(ann, d1.rows()) * d1;
      next = Subspace::span(kernel(cond), n);
    }
    if (next.dim() == prev.dim()) break;
    out.push_back(next);
    prev = next;
    if (static_cast<int>(next.dim()) == n) break;
  }
  return out;
}

inline std::vector<int> dual_sequence(const LieAlgebra& g) {
  std::vector<int> out;
  for (auto& s : dual_filtration(g)) out.push_back(static_cast<int>(s.dim()));
  return out;
}

inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs;
  for (auto& x : a.basis())
    for (auto& y : b.basis()) vs.push_back(g.bracket(x, y));
  return Subspace::span(vs, g.dim());
}

// g = g_0 ⊃ g_1 ⊃ ... down to 0
inline std::vector<Subspace> lower_central_filtration(const LieAlgebra& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  Subspace all = out.front();
  while (out.back().dim() > 0) {
    Subspace next = bracket_span(g, out.back(), all);
    if (next.dim() == out.back().dim()) throw Error(ErrorCode::NotNilpotent, "lower central series stabilizes");
    out.push_back(next);
  }
  return out;
}

inline std::vector<int> lower_central(const LieAlgebra& g) {
  std::vector<int> out;
  for (auto& s : lower_central_filtration(g)) out.push_back(static_cast<int>(s.dim()));
  return out;
}

// Z_1 ⊂ Z_2 ⊂ ... with Z_k = {x : [x, g] ⊂ Z_{k-1}}
inline std::vector<Subspace> ascending_filtration(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<Subspace> out;
  Subspace prev(n);
  for (;;) {
    auto ann = prev.annihilator();
    Subspace next;
    if (ann.empty()) {
      next = Subspace::full(n);
    } else {
      std::vector<Vec> rows;
      for (int j = 0; j < n; ++j) {
        // x -> [x, e_j] as a matrix
        Matrix ad(n, n);
        for (int i = 0; i < n; ++i) {
          Vec b = g.bracket(i, j);
          for (int k = 0; k < n; ++k) ad(k, i) = b[k];
        }
        Matrix c = Matrix::from_rows(ann, n) * ad;
        for (std::size_t r = 0; r < c.rows(); ++r) rows.push_back(c.row(r));
      }
      next = Subspace::span(kernel(Matrix::from_rows(rows, n)), n);
    }
    if (next.dim() == prev.dim()) break;
    out.push_back(next);
    prev = next;
    if (static_cast<int>(next.dim()) == n) break;
  }
  return out;
}

inline std::vector<int> ascending_series(const LieAlgebra& g) {
  std::vector<int> out;
  for (auto& s : ascending_filtration(g)) out.push_back(static_cast<int>(s.dim()));
  return out;
}

inline std::vector<Subspace> derived_filtration(const LieAlgebra& g) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (out.back().dim() > 0) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(next);
  }
  return out;
}

inline std::vector<int> derived_series(const LieAlgebra& g) {
  std::vector<int> out;
  for (auto& s : derived_filtration(g)) out.push_back(static_cast<int>(s.dim()));
  return out;
}

inline int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int betti(const LieAlgebra& g, int k) {
  int n = g.dim();
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "degree out of range");
  int rank_out = k < n ? static_cast<int>(rank(g.d_matrix(k))) : 0;
  int rank_in = k > 0 ? static_cast<int>(rank(g.d_matrix(k - 1))) : 0;
  return binomial(n, k) - rank_out - rank_in;
}

// basis of d(Λ¹) as 2-forms
inline std::vector<Multivector> exact_two_forms(const LieAlgebra& g) {
  Matrix d1 = g.d_matrix(1);
  Subspace img = Subspace::span([&] {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < d1.cols(); ++j) cols.push_back(d1.column(j));
    return cols;
  }(), d1.rows());
  std::vector<Multivector> out;
  for (auto& v : img.basis()) out.push_back(Multivector::from_coordinates(g.dim(), 2, v));
  return out;
}

inline int wedge_pencil_rank(const LieAlgebra& g) {
  auto b = exact_two_forms(g);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) vs.push_back(wedge(b[i], b[j]).coordinates(4));
  if (vs.empty()) return 0;
  return static_cast<int>(Subspace::span(vs, vs.front().size()).dim());
}

// characteristic polynomial coefficients c_0..c_n (monic), Faddeev-LeVerrier
inline std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += GR(c[n - k + 1]);
    m = am;
    Matrix t = a * m;
    GR tr;
    for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
    c[n - k] = Rational(-tr.re() / Rational(static_cast<long>(k)));
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// (positive, negative) eigenvalue counts of a real symmetric matrix
inline std::pair<int, int> inertia(const Matrix& q) {
  auto c = characteristic_polynomial(q);
  int pos = sign_changes(c);
  std::vector<Rational> neg = c;
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  return {pos, sign_changes(neg)};
}

struct PencilForm {
  int rank = -1;
  int gap = -1;
};

// when d(Λ¹) wedges into a single 4-form line, the quadratic form w -> w^w on d(Λ¹)
inline PencilForm pencil_form(const LieAlgebra& g) {
  PencilForm out;
  if (wedge_pencil_rank(g) != 1) return out;
  auto b = exact_two_forms(g);
  Mask line = 0;
  for (std::size_t i = 0; i < b.size() && !line; ++i)
    for (std::size_t j = i; j < b.size() && !line; ++j) {
      auto w = wedge(b[i], b[j]);
      if (!w.is_zero()) line = w.terms().begin()->first;
    }
  Matrix q(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) q(i, j) = wedge(b[i], b[j]).coeff(line);
  out.rank = static_cast<int>(rank(q));
  if (g.field() == ScalarField::Real && q.is_real()) {
    auto [p, n] = inertia(q);
    out.gap = p > n ? p - n : n - p;
  }
  return out;
}

struct Fingerprint {
  int dim = 0;
  std::vector<int> dual;
  std::vector<int> lower_central;
  std::vector<int> ascending;
  std::vector<int> derived;
  std::vector<int> betti;
  int exact_dim = 0;
  int pencil_rank = 0;
  int pencil_form_rank = -1;
  int pencil_form_gap = -1;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const LieAlgebra& g) {
  Fingerprint f;
  f.dim = g.dim();
  f.dual = dual_sequence(g);
  f.lower_central = lower_central(g);
  f.ascending = ascending_series(g);
  f.derived = derived_series(g);
  for (int k = 1; k <= 3 && k <= g.dim(); ++k) f.betti.push_back(betti(g, k));
  f.exact_dim = static_cast<int>(exact_two_forms(g).size());
  f.pencil_rank = wedge_pencil_rank(g);
  PencilForm pf = pencil_form(g);
  f.pencil_form_rank = pf.rank;
  f.pencil_form_gap = pf.gap;
  return f;
}

inline std::string to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace ndga
