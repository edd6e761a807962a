#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ndga/cplx.hpp"

namespace ndga {

using BracketTable = std::vector<std::vector<Vec>>;

struct AxiomReport {
  bool graded_commutativity = true;
  bool jacobi = true;
  bool distributivity = true;
  bool leibniz = true;
  bool compatibility = true;
  bool d_squared = true;
  std::string first_failure;

  bool all() const { return graded_commutativity && jacobi && distributivity && leibniz && compatibility && d_squared; }
};

// exterior algebra on degree-one generators with a differential and a Schouten-type bracket
class DGAlgebra {
 public:
  DGAlgebra() = default;
  DGAlgebra(BasisSpace space, std::vector<Multivector> d, BracketTable brackets)
      : space_(std::move(space)), d_(std::move(d)), br_(std::move(brackets)) {
    int n = space_.dim();
    if (static_cast<int>(d_.size()) != n || static_cast<int>(br_.size()) != n)
      throw Error(ErrorCode::SpaceMismatch, "table sizes do not match the generator space");
    for (auto& m : d_) {
      if (m.dim() != n) throw Error(ErrorCode::SpaceMismatch, "differential in wrong space");
      if (!m.is_zero() && m.homogeneous_degree() != 2)
        throw Error(ErrorCode::NotHomogeneous, "differential of a generator must have degree two");
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(br_[i].size()) != n) throw Error(ErrorCode::SpaceMismatch, "bracket table not square");
      for (int j = 0; j < n; ++j)
        if (static_cast<int>(br_[i][j].size()) != n) throw Error(ErrorCode::SpaceMismatch, "bracket entry size");
    }
  }

  int dim() const { return space_.dim(); }
  const BasisSpace& space() const { return space_; }
  const std::vector<Multivector>& d_table() const { return d_; }
  const BracketTable& bracket_table() const { return br_; }
  const Vec& bracket(int i, int j) const { return br_[i][j]; }

  Multivector generator(int i) const { return Multivector::generator(dim(), i); }

  Multivector d(const Multivector& a) const { return extend_odd_derivation(d_, a); }

  Multivector bracket(const Multivector& a, const Multivector& b) const {
    a.check(b);
    Multivector out(dim());
    for (auto& [s, c] : a.terms())
      for (auto& [t, e] : b.terms()) {
        Multivector m = bracket_masks(s, t);
        if (!m.is_zero()) out += (c * e) * m;
      }
    return out;
  }

  // the degree-one Lie algebra, recorded through its structure equations
  LieAlgebra degree_one_algebra() const { return LieAlgebra::from_brackets(br_, ScalarField::Complex); }

  // (A¹, d) read as the structure equations of a Lie algebra on the dual
  LieAlgebra differential_algebra() const { return LieAlgebra(d_, ScalarField::Complex); }

  friend bool operator==(const DGAlgebra& a, const DGAlgebra& b) { return a.d_ == b.d_ && a.br_ == b.br_; }

 private:
  Multivector bracket_masks(Mask s, Mask t) const {
    int n = dim();
    int ds = popcount(s), dt = popcount(t);
    if (ds == 0 || dt == 0) return Multivector(n);
    auto key = std::make_pair(s, t);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Multivector out(n);
    if (ds == 1 && dt == 1) {
      out = Multivector::from_vector(n, br_[std::countr_zero(s)][std::countr_zero(t)]);
    } else if (dt >= 2) {
      Mask first = t & (~t + 1);
      Mask rest = t & ~first;
      Multivector lead = Multivector::basis(n, first), tail = Multivector::basis(n, rest);
      out = wedge(bracket_masks(s, first), tail);
      Multivector second = wedge(lead, bracket_masks(s, rest));
      out += (((ds + 1) & 1) ? GR(-1) : GR(1)) * second;
    } else {
      out = -bracket_masks(t, s);
    }
    cache_.emplace(key, out);
    return out;
  }

  BasisSpace space_;
  std::vector<Multivector> d_;
  BracketTable br_;
  mutable std::map<std::pair<Mask, Mask>, Multivector> cache_;
};

inline BracketTable zero_bracket_table(int n) { return BracketTable(n, std::vector<Vec>(n, Vec(n))); }

inline int degree_of(const Multivector& a) { return a.is_zero() ? 0 : a.require_degree(); }

inline GR sign_power(int e) { return (e & 1) ? GR(-1) : GR(1); }

inline AxiomReport check_axioms(const DGAlgebra& a, int samples = 60, std::uint64_t seed = 7) {
  AxiomReport r;
  int n = a.dim();
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && r.first_failure.empty()) r.first_failure = what;
    flag = false;
  };
  auto g = [&](int i) { return a.generator(i); };
  for (int i = 0; i < n; ++i) {
    if (!a.d(a.d(g(i))).is_zero()) fail(r.d_squared, "d² ≠ 0 on generator " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      Multivector ab = a.bracket(g(i), g(j));
      if (ab != -a.bracket(g(j), g(i)))
        fail(r.graded_commutativity, "antisymmetry on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (a.d(ab) != a.bracket(a.d(g(i)), g(j)) + a.bracket(g(i), a.d(g(j))))
        fail(r.compatibility, "d-bracket compatibility on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      for (int k = 0; k < n; ++k) {
        Multivector jac = a.bracket(ab, g(k)) + a.bracket(a.bracket(g(j), g(k)), g(i)) +
                          a.bracket(a.bracket(g(k), g(i)), g(j));
        if (!jac.is_zero())
          fail(r.jacobi, "Jacobi on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ")");
      }
    }
  }
  // higher degrees on sampled monomials
  ScalarSampler s(seed);
  auto monomial = [&](int maxdeg) {
    int k = static_cast<int>(s.integer(1, maxdeg));
    auto ms = masks_of_degree(n, k);
    return Multivector::basis(n, ms[s.integer(0, static_cast<long>(ms.size()) - 1)], s.nonzero_gaussian(2, 1));
  };
  for (int t = 0; t < samples; ++t) {
    Multivector x = monomial(3), y = monomial(3), z = monomial(2);
    int p = degree_of(x), q = degree_of(y), m = degree_of(z);
    if (a.bracket(x, y) != -sign_power((p + 1) * (q + 1)) * a.bracket(y, x))
      fail(r.graded_commutativity, "graded commutativity in degrees " + std::to_string(p) + "," + std::to_string(q));
    Multivector jac = sign_power((p + 1) * (m + 1)) * a.bracket(a.bracket(x, y), z) +
                      sign_power((q + 1) * (p + 1)) * a.bracket(a.bracket(y, z), x) +
                      sign_power((m + 1) * (q + 1)) * a.bracket(a.bracket(z, x), y);
    if (!jac.is_zero()) fail(r.jacobi, "graded Jacobi in degrees " + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(m));
    if (a.bracket(x, wedge(y, z)) != wedge(a.bracket(x, y), z) + sign_power((p + 1) * q) * wedge(y, a.bracket(x, z)))
      fail(r.distributivity, "distributivity in degrees " + std::to_string(p) + "," + std::to_string(q));
    if (a.d(wedge(x, y)) != wedge(a.d(x), y) + sign_power(p) * wedge(x, a.d(y)))
      fail(r.leibniz, "Leibniz in degrees " + std::to_string(p) + "," + std::to_string(q));
    if (a.d(a.bracket(x, y)) != a.bracket(a.d(x), y) + sign_power(p + 1) * a.bracket(x, a.d(y)))
      fail(r.compatibility, "d-bracket compatibility in degrees " + std::to_string(p) + "," + std::to_string(q));
    if (!a.d(a.d(x)).is_zero()) fail(r.d_squared, "d² ≠ 0 in degree " + std::to_string(p));
  }
  return r;
}

// new generators are the columns of p, written in the old generators
inline DGAlgebra change_basis(const DGAlgebra& a, const Matrix& p, BasisSpace space) {
  int n = a.dim();
  Matrix q = inverse(p);
  std::vector<Multivector> d;
  BracketTable br = zero_bracket_table(n);
  std::vector<Multivector> cols;
  for (int j = 0; j < n; ++j) cols.push_back(Multivector::from_vector(n, p.column(j)));
  for (int j = 0; j < n; ++j) d.push_back(apply_linear(q, a.d(cols[j])));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) br[i][j] = q * a.bracket(cols[i], cols[j]).coordinates(1);
  return DGAlgebra(std::move(space), std::move(d), std::move(br));
}

struct MorphismReport {
  bool bijective = false;
  bool intertwines_d = true;
  bool intertwines_bracket = true;
  std::string first_failure;

  bool isomorphism() const { return bijective && intertwines_d && intertwines_bracket; }
};

// phi: column j is the image of generator j of a, in the generators of b
inline MorphismReport check_morphism(const DGAlgebra& a, const DGAlgebra& b, const Matrix& phi) {
  MorphismReport r;
  int n = a.dim();
  if (b.dim() != n || phi.rows() != static_cast<std::size_t>(n) || phi.cols() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::SpaceMismatch, "morphism between algebras of different size");
  r.bijective = !determinant(phi).is_zero();
  auto img = [&](int j) { return Multivector::from_vector(n, phi.column(j)); };
  for (int j = 0; j < n; ++j)
    if (apply_linear(phi, a.d(a.generator(j))) != b.d(img(j))) {
      r.intertwines_d = false;
      if (r.first_failure.empty()) r.first_failure = "d on " + a.space().names()[j];
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (phi * a.bracket(i, j) != b.bracket(img(i), img(j)).coordinates(1)) {
        r.intertwines_bracket = false;
        if (r.first_failure.empty()) r.first_failure = "bracket of " + a.space().names()[i] + ", " + a.space().names()[j];
      }
  return r;
}

// elements x + α of g ⊕ g*, with x a vector and α a one-form
struct CourantElement {
  Vec x;
  Multivector alpha;
};

inline CourantElement courant_bracket(const CourantElement& a, const CourantElement& b, const LieAlgebra& g) {
  CourantElement out{g.bracket(a.x, b.x), contract(a.x, g.d(b.alpha)) - contract(b.x, g.d(a.alpha))};
  return out;
}

inline const BasisSpace& f1_space() {
  static const BasisSpace s(6, {"T1", "T2", "T3", "wb1", "wb2", "wb3"});
  return s;
}

// position of the generator of f¹ paired with the conjugate of generator p
inline int dual_partner(int p) { return p < 3 ? p + 3 : p - 3; }

inline Matrix partner_permutation() {
  Matrix m(6, 6);
  for (int p = 0; p < 6; ++p) m(dual_partner(p), p) = GR(1);
  return m;
}

// f¹ = g^{1,0} ⊕ g*^{0,1}: T_k is vector k of g_C, ω̄^k is form 3+k of the coframe
inline DGAlgebra build_f1(const ComplexStructureEq& eq) {
  eq.validate();
  LieAlgebra g = complexified(eq);
  auto element = [](int p) {
    CourantElement e{Vec(6), Multivector(6)};
    if (p < 3)
      e.x[p] = GR(1);
    else
      e.alpha = Multivector::generator(6, p);
    return e;
  };
  BracketTable br = zero_bracket_table(6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      CourantElement c = courant_bracket(element(p), element(q), g);
      Vec v(6);
      for (int k = 0; k < 3; ++k) {
        if (!c.x[3 + k].is_zero() || !c.alpha.coeff(bit(k)).is_zero())
          throw Error(ErrorCode::AxiomViolation, "Courant bracket leaves f¹");
        v[k] = c.x[k];
        v[3 + k] = c.alpha.coeff(bit(3 + k));
      }
      br[p][q] = v;
    }
  std::vector<Multivector> dbar;
  for (int p = 0; p < 3; ++p) {
    // ∂̄T = Σ_ℓ ω̄^ℓ ∧ [T̄_ℓ, T]^{1,0}
    Multivector out(6);
    for (int l = 0; l < 3; ++l) {
      Vec b = g.bracket(3 + l, p);
      Vec v(6);
      for (int k = 0; k < 3; ++k) v[k] = b[k];
      out += wedge(Multivector::generator(6, 3 + l), Multivector::from_vector(6, v));
    }
    dbar.push_back(out);
  }
  for (int p = 3; p < 6; ++p) {
    Multivector dw = g.d(Multivector::generator(6, p)), out(6);
    for (auto& [m, c] : dw.terms())
      if ((m & 0b111) == 0) out.add_term(m, c);
    dbar.push_back(out);
  }
  DGAlgebra f(f1_space(), dbar, br);
  return f;
}

inline DGAlgebra build_f1_checked(const ComplexStructureEq& eq) {
  DGAlgebra f = build_f1(eq);
  AxiomReport r = check_axioms(f, 20);
  if (!r.all()) throw Error(ErrorCode::AxiomViolation, r.first_failure);
  return f;
}

// ∂̄ on f¹ is the C-E differential of the conjugate algebra, transported through the pairing
inline std::vector<Multivector> reconstruct_dbar(const BracketTable& br) {
  LieAlgebra l = LieAlgebra::from_brackets(br, ScalarField::Complex);
  Matrix s = partner_permutation();
  std::vector<Multivector> out(6, Multivector(6));
  for (int p = 0; p < 6; ++p) out[p] = apply_linear(s, l.differential(dual_partner(p)).conjugate_coefficients());
  return out;
}

inline BracketTable reconstruct_bracket(const std::vector<Multivector>& dbar) {
  Matrix s = partner_permutation();
  std::vector<Multivector> back(6, Multivector(6));
  for (int p = 0; p < 6; ++p) back[dual_partner(p)] = apply_linear(s, dbar[p]).conjugate_coefficients();
  LieAlgebra l(back, ScalarField::Complex);
  BracketTable br = zero_bracket_table(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) br[i][j] = l.bracket(i, j);
  return br;
}

// η-basis (ω̄¹, T₃, ω̄², T₂, ω̄³, T₁)
struct F1Presentation {
  static constexpr std::array<int, 6> order{3, 2, 4, 1, 5, 0};
  DGAlgebra dga;
};

inline F1Presentation f1_presentation(const ComplexStructureEq& eq) {
  DGAlgebra f = build_f1(eq);
  Matrix p(6, 6);
  for (int k = 0; k < 6; ++k) p(F1Presentation::order[k], k) = GR(1);
  return {change_basis(f, p, BasisSpace::standard(6, "eta"))};
}

inline std::string classify_f1(const ComplexStructureEq& eq) { return classify(build_f1(eq).degree_one_algebra()); }

// O = ψ*∘φ for a Lie isomorphism φ: h → f¹ (column j = image of x_j in f¹ generators)
inline Matrix build_O(const LieAlgebra& h, const DGAlgebra& f1, const Matrix& phi) {
  int n = h.dim();
  if (!h.has_real_constants()) throw Error(ErrorCode::NotCompatible, "h has no evident real structure");
  if (determinant(phi).is_zero()) throw Error(ErrorCode::NotCompatible, "phi is not invertible");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = phi * h.bracket(i, j);
      Vec rhs = f1.bracket(Multivector::from_vector(n, phi.column(i)), Multivector::from_vector(n, phi.column(j)))
                    .coordinates(1);
      if (lhs != rhs) throw Error(ErrorCode::NotCompatible, "phi is not a Lie algebra homomorphism");
    }
  return phi.adjoint() * partner_permutation() * phi;
}

// O(x_j) = Σ_i O(i, j) x^i; bracket on h* is O[O⁻¹α, O⁻¹β]
inline DGAlgebra dga_from_O(const LieAlgebra& h, const Matrix& o, BasisSpace space) {
  int n = h.dim();
  if (determinant(o).is_zero()) throw Error(ErrorCode::Incompatible, "O is not invertible");
  Matrix oi = inverse(o);
  BracketTable br = zero_bracket_table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) br[i][j] = o * h.bracket(oi.column(i), oi.column(j));
  DGAlgebra a(std::move(space), h.differentials(), std::move(br));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Multivector x = a.generator(i), y = a.generator(j);
      if (a.d(a.bracket(x, y)) != a.bracket(a.d(x), y) + a.bracket(x, a.d(y)))
        throw Error(ErrorCode::Incompatible, "O is not compatible with d on (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
    }
  return a;
}

inline DGAlgebra dga_from_O(const LieAlgebra& h, const Matrix& o) {
  return dga_from_O(h, o, BasisSpace::standard(h.dim(), "x"));
}

}  // namespace ndga
