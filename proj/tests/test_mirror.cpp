#include <gtest/gtest.h>

#include <chrono>

#include "ndga/mirror.hpp"

using namespace ndga;

namespace {

Multivector e(int a, int b) { return detail::e2(a, b); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// identity plus a few small off-diagonal entries
Matrix sparse_invertible(ScalarSampler& s) {
  for (;;) {
    Matrix p = Matrix::identity(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j && s.integer(0, 3) == 0) p(i, j) = GR(s.integer(-2, 2));
    if (!determinant(p).is_zero()) return p;
  }
}

}  // namespace

TEST(IsoSearch, SolvesSmallSystems) {
  ScalarSampler s(1);
  Poly x = Poly::var(0), y = Poly::var(1);
  auto any = [](const std::vector<GR>&) { return true; };
  SystemSolution r = solve_system({x * y - Poly(GR(1)), x - Poly(GR(2))}, 2, s, 5, any);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.values[0], GR(2));
  EXPECT_EQ(r.values[1], GR(Rational(1, 2)));

  r = solve_system({x * x + Poly(GR(1))}, 1, s, 5, any);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.values[0] * r.values[0], GR(-1));

  r = solve_system({x - Poly(GR(1)), x - Poly(GR(2))}, 1, s, 5, any);
  EXPECT_FALSE(r.found);
}

TEST(IsoSearch, RecoversRandomBasisChanges) {
  ScalarSampler s(2);
  for (auto e : {ComplexStructureEq{GR(0), GR(1), GR(0), GR(1), GR(0), GR(0)},
                 ComplexStructureEq{GR(1), GR(1), GR(0), GR(0), GR(1), GR(0)},
                 ComplexStructureEq{GR(0), GR(0), GR(1), GR(0), GR(0), GR(0)},
                 ComplexStructureEq{GR(1), GR(1), GR(0), GR(3), GR(2), GR(0)}}) {
    DGAlgebra f = build_f1(e);
    DGAlgebra h = change_basis(f, sparse_invertible(s), f.space());
    EXPECT_TRUE(find_dga_isomorphism(f, f).found);
    IsoSearchResult r = find_dga_isomorphism(f, h);
    ASSERT_TRUE(r.found) << to_string(e) << " " << r.reason;
    EXPECT_TRUE(check_morphism(f, h, r.phi).isomorphism());
  }
}

TEST(IsoSearch, DifferentFiltrationsAreRejectedQuickly) {
  DGAlgebra a = build_f1({GR(0), GR(0), GR(0), GR(0), GR(0), GR(0)});
  DGAlgebra b = build_f1({GR(0), GR(0), GR(1), GR(0), GR(0), GR(0)});
  IsoSearchResult r = find_dga_isomorphism(a, b);
  EXPECT_FALSE(r.found);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Symplectic, ClosedFormDimensions) {
  EXPECT_EQ(closed_two_forms(catalog_lookup("h1")).size(), 15u);
  EXPECT_EQ(closed_two_forms(catalog_lookup("h8")).size(), 12u);
  EXPECT_EQ(closed_two_forms(catalog_lookup("h16")).size(), 8u);
}

TEST(Symplectic, ExistenceWithWitnesses) {
  auto t0 = std::chrono::steady_clock::now();
  for (auto n : {"h1", "h6", "h8", "h9", "h10", "h11"}) {
    LieAlgebra g = catalog_lookup(n);
    SymplecticReport r = symplectic_report(g);
    ASSERT_TRUE(r.exists) << n;
    EXPECT_TRUE(g.d(r.witness).is_zero()) << n;
    EXPECT_TRUE(nondegenerate(r.witness)) << n;
  }
  EXPECT_FALSE(symplectic_exists(catalog_lookup("h16")));
  EXPECT_LT(seconds_since(t0), 5.0);
}

TEST(Symplectic, H17CarriesAnExplicitSymplecticForm) {
  // (0,0,0,0,12,15) is the filiform four-dimensional algebra plus R²
  LieAlgebra g = catalog_lookup("h17");
  Multivector w = e(1, 6) + e(2, 5) + e(3, 4);
  EXPECT_TRUE(g.d(w).is_zero());
  EXPECT_TRUE(nondegenerate(w));
  EXPECT_TRUE(symplectic_exists(g));
}

TEST(Symplectic, FormValidation) {
  LieAlgebra h8 = catalog_lookup("h8");
  EXPECT_THROW(SymplecticForm(h8, e(1, 2) + e(3, 4) + e(5, 6)), Error);  // not closed
  EXPECT_THROW(SymplecticForm(h8, e(1, 2) + e(3, 4)), Error);            // degenerate
  EXPECT_NO_THROW(SymplecticForm(h8, e(1, 6) - e(2, 5) + e(3, 4)));
}

TEST(Symplectic, ContractionMatrixIsSkew) {
  Multivector w = e(1, 2) + GR(3) * e(3, 4) - e(1, 6) + e(2, 5);
  Matrix o = contraction_matrix(w);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(o(i, j), -o(j, i));
  EXPECT_FALSE(determinant(o).is_zero());
}

TEST(Symplectic, AxiomsOnRandomOutputs) {
  ScalarSampler s(3);
  for (int k = 0; k < 100; ++k) {
    AxiomReport r = check_axioms(random_symplectic_dga(s), 5, k);
    EXPECT_TRUE(r.all()) << r.first_failure;
  }
}

TEST(Families, Dimensions) {
  EXPECT_EQ(compatible_11_family({GR(0), GR(1), GR(0), GR(1), GR(0), GR(0)}).dim(), 5);
  EXPECT_EQ(compatible_11_family({GR(0), GR(0), GR(1), GR(0), GR(0), GR(0)}).dim(), 6);
  EXPECT_EQ(compatible_11_family(h11_equations(GR(3), GR(2))).dim(), 4);
}

TEST(Families, RealifiedMembersAreReal) {
  ScalarSampler s(4);
  ComplexStructureEq eq{GR(0), GR(1), GR(0), GR(1), GR(0), GR(0)};
  Matrix cf = standard_coframe_matrix();
  LieAlgebra real = realify_in(eq, cf);
  PKFamily fam = compatible_11_family(eq);
  for (int k = 0; k < 10; ++k) {
    std::vector<Rational> t;
    for (int i = 0; i < fam.dim(); ++i) t.push_back(s.rational());
    Multivector w = to_real_basis(fam.member(t), cf);
    for (auto& [m, c] : w.terms()) EXPECT_TRUE(c.is_real());
    EXPECT_TRUE(real.d(w).is_zero());
  }
}

TEST(Families, H6NondegeneracyIsOneMonomial) {
  Poly p = compatible_11_family({GR(0), GR(1), GR(0), GR(1), GR(0), GR(0)}).nondegeneracy();
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.variables().size(), 2u);
}

TEST(Families, H11NondegeneracyDependsOnA3Only) {
  ScalarSampler s(5);
  for (int k = 0; k < 20; ++k) {
    H11Sample p = sample_h11(s);
    GR top = cube_top(h11_omega(p.B, p.a1, p.a2, p.a3));
    EXPECT_FALSE(top.is_zero());
    EXPECT_EQ(cube_top(h11_omega(p.B, GR(0), p.a2, p.a3)), top);
    EXPECT_EQ(cube_top(h11_omega(p.B, GR(0), GR(0), p.a3)), top);
    EXPECT_TRUE(cube_top(h11_omega(GR(-1), p.a1, p.a2, p.a3)).is_zero());
    EXPECT_TRUE(cube_top(h11_omega(p.B, p.a1, p.a2, GR(0))).is_zero());
  }
  Poly q = compatible_11_family(h11_equations(GR(3), GR(2))).nondegeneracy();
  EXPECT_EQ(q.terms().size(), 1u);
  EXPECT_EQ(q.variables().size(), 1u);
}

TEST(Mirror, SymplecticBracketExamples) {
  // h8: [−ue5 − ve6, ve5 − ue6] = −(ue2 + ve1)
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, -1}}) {
    MirrorCase c = h8_case(GR(1), GR(2), GR(3), GR(1), GR(u), GR(v));
    DGAlgebra sym = dga_from_symplectic(SymplecticForm(c.real, c.omega));
    Multivector p = GR(-u) * Multivector::generator(6, 4) - GR(v) * Multivector::generator(6, 5);
    Multivector q = GR(v) * Multivector::generator(6, 4) - GR(u) * Multivector::generator(6, 5);
    EXPECT_EQ(sym.bracket(p, q), -(GR(u) * Multivector::generator(6, 1) + GR(v) * Multivector::generator(6, 0)));
  }
  // h6: b[e4, e5] = e2, b[e4, e6] = e3, bℓ[e5, e6] = −ce2 + ke3
  GR a(1), b(2), c(3), k(Rational(1, 2)), l(-1);
  MirrorCase h6 = h6_case(a, b, c, k, l);
  DGAlgebra sym = dga_from_symplectic(SymplecticForm(h6.real, h6.omega));
  auto gen = [](int i) { return Multivector::generator(6, i - 1); };
  EXPECT_EQ(b * sym.bracket(gen(4), gen(5)), gen(2));
  EXPECT_EQ(b * sym.bracket(gen(4), gen(6)), gen(3));
  EXPECT_EQ(b * l * sym.bracket(gen(5), gen(6)), -c * gen(2) + k * gen(3));
}

TEST(Mirror, RealFormsMatchCatalog) {
  EXPECT_EQ(classify(h6_case(GR(0), GR(1), GR(0), GR(0), GR(1)).real), "h6");
  EXPECT_EQ(classify(h8_case(GR(0), GR(1), GR(0), GR(0), GR(0), GR(1)).real), "h8");
  EXPECT_EQ(classify(h9_case().real), "h9");
  EXPECT_EQ(classify(h10_case().real), "h10");
  EXPECT_EQ(classify(realify_in(h11_equations(GR(3), GR(2)), standard_coframe_matrix())), "h11");
}

TEST(Mirror, ExplicitIsomorphisms) {
  EXPECT_TRUE(h1_case().verified());
  EXPECT_TRUE(h9_case().verified());
  EXPECT_TRUE(h10_case().verified());
  ScalarSampler s(6);
  for (int k = 0; k < 20; ++k) {
    EXPECT_TRUE(mirror_case("h6", s).verified());
    EXPECT_TRUE(mirror_case("h8", s).verified());
  }
  EXPECT_TRUE(h8_case(GR(1), GR(1), GR(0), GR(0), GR(0), GR(-3)).verified());
}

TEST(Mirror, DegenerateParameters) {
  try {
    h6_case(GR(1), GR(0), GR(1), GR(1), GR(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamsDegenerate);
  }
  EXPECT_THROW(h6_case(GR(1), GR(1), GR(1), GR(1), GR(0)), Error);
  EXPECT_THROW(h8_case(GR(1), GR(0), GR(1), GR(1), GR(1), GR(1)), Error);
  EXPECT_THROW(h8_case(GR(1), GR(1), GR(1), GR(1), GR(0), GR(0)), Error);
}

TEST(Mirror, H11Preconditions) {
  GR i = GR::i();
  auto code = [&](const GR& B, const GR& C, const GR& a1, const GR& a3) {
    try {
      h11_obstruction(B, C, a1, GR(0), a3);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code(GR(-1), GR(2), i, i), ErrorCode::PreconditionViolated);  // Ω degenerate
  EXPECT_EQ(code(GR(3), GR(1), i, i), ErrorCode::PreconditionViolated);   // |C| ≠ |B − 1|
  EXPECT_EQ(code(GR(3), GR(2), GR(1), i), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code(GR(3), GR(2), i, GR(0)), ErrorCode::PreconditionViolated);
  EXPECT_EQ(h11_obstruction(GR(3), GR(2), GR(0), GR(0), i).verdict, "Contradiction");
}

TEST(Mirror, H11ObstructionChain) {
  GR i = GR::i();
  ObstructionReport r = h11_obstruction(GR(3), GR(2), i, GR(0), i);
  EXPECT_EQ(r.verdict, "Contradiction");
  EXPECT_TRUE(r.factorization_residual.is_zero());
  EXPECT_EQ(r.forced, r.expected);
  EXPECT_EQ(r.forced.terms().size(), 1u);
  EXPECT_EQ(r.forced.degree(), 2);
  for (auto& st : r.steps) EXPECT_TRUE(st.in_raw_span) << st.label;

  ScalarSampler s(7);
  for (int k = 0; k < 30; ++k) {
    H11Sample p = sample_h11(s);
    EXPECT_EQ(h11_obstruction(p.B, p.C, p.a1, p.a2, p.a3).verdict, "Contradiction");
  }
}

TEST(Mirror, H11GenericSearchFindsNothing) {
  GR i = GR::i();
  ComplexStructureEq eq = h11_equations(GR(3), GR(2));
  DGAlgebra f = build_f1(eq);
  DGAlgebra sym = dga_from_symplectic(SymplecticForm(complexified(eq), h11_omega(GR(3), i, GR(0), i)));
  EXPECT_EQ(classify(f.degree_one_algebra()), classify(sym.degree_one_algebra()));
  IsoSearchResult r = mirror_iso_search(f, sym);
  EXPECT_FALSE(r.found);
}

TEST(Mirror, TheoremVerdicts) {
  TheoremOptions o;
  o.h6_samples = 5;
  o.h8_samples = 5;
  o.h11_samples = 10;
  o.corroborate_search = false;
  TheoremReport r = verify_theorem_main(o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.candidates, (std::vector<std::string>{"h1", "h6", "h8", "h9", "h10", "h11"}));
  std::map<std::string, std::string> verdict;
  for (auto& row : r.rows) verdict[row.name] = row.verdict;
  EXPECT_EQ(verdict["h11"], "Obstructed");
  EXPECT_EQ(verdict["h9"], "SelfMirror");
  EXPECT_EQ(verdict["h17"], "Excluded");
  EXPECT_EQ(verdict["h7"], "Excluded");
}
