#include <gtest/gtest.h>

#include "ndga/notation.hpp"

using namespace ndga;

namespace {

Multivector e(std::initializer_list<int> one_based, int dim = 6) {
  std::vector<int> idx;
  for (int i : one_based) idx.push_back(i - 1);
  return Multivector::monomial(dim, idx);
}

// lower triangular with nonzero diagonal keeps a Malcev presentation
Matrix random_change(ScalarSampler& s, int n, bool filtered) {
  for (;;) {
    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (filtered && j > i) continue;
        p(i, j) = GR(s.rational(3, 2));
      }
    if (!determinant(p).is_zero()) return p;
  }
}

}  // namespace

TEST(Lie, Differential) {
  LieAlgebra h6 = parse("(0,0,0,0,12,13)");
  EXPECT_EQ(h6.d(e({5, 6})), wedge(e({1, 2}), e({6})) - wedge(e({5}), e({1, 3})));
  LieAlgebra h1 = parse("(0,0,0,0,0,0)");
  EXPECT_TRUE(h1.d_matrix(2).is_zero());
  EXPECT_EQ(parse("(0,0,0,0,0,12)").d(e({6})), e({1, 2}));
}

TEST(Lie, BracketConvention) {
  LieAlgebra h8 = parse("(0,0,0,0,0,12)");
  Vec b = h8.bracket(0, 1);
  EXPECT_EQ(b[5], GR(-1));
  // d alpha(x, y) = -alpha([x, y])
  EXPECT_EQ(h8.differential(5).coeff(bit(0) | bit(1)), -b[5]);
}

TEST(Lie, Jacobi) {
  EXPECT_TRUE(check_jacobi(parse("(0,0,0,12,13+42,14+23)")));
  EXPECT_TRUE(check_jacobi(parse("(0,0,0,0,0,0)")));
  // d(d e6) = d(e15) = -e1^e12... nonzero here
  LieAlgebra bad = parse("(0,0,0,12,34,15)");
  EXPECT_FALSE(check_jacobi(bad));
}

TEST(Lie, JacobiEquivalentToDSquared) {
  // brute force: bracket Jacobi identity versus d^2 = 0 on random constants
  ScalarSampler s(21);
  int passing = 0, failing = 0;
  for (int k = 0; k < 300; ++k) {
    int n = 5;
    std::vector<Multivector> diffs(n, Multivector(n));
    for (int t = 2; t < n; ++t)
      for (Mask m : masks_of_degree(t, 2))
        if (s.integer(0, 2) == 0) diffs[t].add_term(m, GR(s.integer(-1, 1)));
    LieAlgebra g(diffs);
    bool jac = true;
    for (int a = 0; a < n && jac; ++a)
      for (int b = 0; b < n && jac; ++b)
        for (int c = 0; c < n && jac; ++c) {
          Vec x = unit_vector(n, a), y = unit_vector(n, b), z = unit_vector(n, c);
          Vec j1 = g.bracket(g.bracket(x, y), z), j2 = g.bracket(g.bracket(y, z), x), j3 = g.bracket(g.bracket(z, x), y);
          for (int q = 0; q < n; ++q)
            if (!(j1[q] + j2[q] + j3[q]).is_zero()) jac = false;
        }
    EXPECT_EQ(jac, check_jacobi(g));
    (jac ? passing : failing)++;
  }
  EXPECT_GT(passing, 0);
  EXPECT_GT(failing, 0);
}

TEST(Lie, DualSequence) {
  EXPECT_EQ(dual_sequence(catalog_lookup("h1")), (std::vector<int>{6}));
  EXPECT_EQ(dual_sequence(catalog_lookup("h9")), (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(dual_sequence(catalog_lookup("h7")), (std::vector<int>{3, 6}));
}

TEST(Lie, Series) {
  EXPECT_EQ(lower_central(catalog_lookup("h1")), (std::vector<int>{6, 0}));
  EXPECT_EQ(lower_central(catalog_lookup("h8")), (std::vector<int>{6, 1, 0}));
  EXPECT_EQ(lower_central(catalog_lookup("h7")), (std::vector<int>{6, 3, 0}));
  EXPECT_EQ(derived_series(catalog_lookup("h1")), (std::vector<int>{6, 0}));
  EXPECT_EQ(derived_series(catalog_lookup("h7")), (std::vector<int>{6, 3, 0}));
  EXPECT_EQ(derived_series(catalog_lookup("h8")), (std::vector<int>{6, 1, 0}));
  EXPECT_EQ(ascending_series(catalog_lookup("h1")), (std::vector<int>{6}));
}

TEST(Lie, AnnihilatorDuality) {
  for (auto& entry : catalog()) {
    LieAlgebra g = parse(entry.equations);
    auto n = dual_sequence(g);
    auto l = lower_central(g);
    for (std::size_t p = 1; p < l.size(); ++p) EXPECT_EQ(l[p] + n[p - 1], g.dim()) << entry.name;
  }
}

TEST(Lie, NonNilpotentDetected) {
  // [e1, e2] = e2 is solvable but not nilpotent
  LieAlgebra g({Multivector(2), -e({1, 2}, 2)});
  EXPECT_TRUE(check_jacobi(g));
  EXPECT_THROW(lower_central(g), Error);
}

TEST(Lie, Betti) {
  EXPECT_EQ(betti(catalog_lookup("h1"), 1), 6);
  EXPECT_EQ(betti(catalog_lookup("h7"), 1), 3);
  EXPECT_EQ(betti(catalog_lookup("h8"), 2), 11);
  for (auto& entry : catalog()) {
    LieAlgebra g = parse(entry.equations);
    EXPECT_EQ(betti(g, 1), dual_sequence(g).front()) << entry.name;
    // Poincare duality for nilpotent algebras
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(betti(g, k), betti(g, 6 - k)) << entry.name;
  }
}

TEST(Lie, PencilRank) {
  EXPECT_EQ(wedge_pencil_rank(catalog_lookup("h8")), 0);
  EXPECT_EQ(wedge_pencil_rank(catalog_lookup("h2")), 1);
  EXPECT_EQ(wedge_pencil_rank(catalog_lookup("h1")), 0);
}

TEST(Lie, Inertia) {
  Matrix q = Matrix::from_rows({{GR(0), GR(1)}, {GR(1), GR(0)}}, 2);
  EXPECT_EQ(inertia(q), (std::pair<int, int>{1, 1}));
  Matrix r = Matrix::from_rows({{GR(2), GR(1), GR(0)}, {GR(1), GR(2), GR(0)}, {GR(0), GR(0), GR(0)}}, 3);
  EXPECT_EQ(inertia(r), (std::pair<int, int>{2, 0}));
}

TEST(Lie, FingerprintExamples) {
  Fingerprint f1 = fingerprint(catalog_lookup("h1"));
  EXPECT_EQ(f1.dual, (std::vector<int>{6}));
  EXPECT_EQ(f1.lower_central, (std::vector<int>{6, 0}));
  EXPECT_EQ(f1.betti.front(), 6);
  EXPECT_EQ(f1.pencil_rank, 0);
  EXPECT_EQ(fingerprint(catalog_lookup("h9")).dual, (std::vector<int>{4, 5, 6}));
  Fingerprint f7 = fingerprint(catalog_lookup("h7"));
  EXPECT_EQ(f7.dual, (std::vector<int>{3, 6}));
  EXPECT_EQ(f7.lower_central, (std::vector<int>{6, 3, 0}));
}

TEST(Lie, FingerprintInvariantUnderBasisChange) {
  ScalarSampler s(77);
  for (auto& entry : catalog()) {
    LieAlgebra g = parse(entry.equations);
    Fingerprint f = fingerprint(g);
    for (int k = 0; k < 10; ++k) {
      LieAlgebra h = change_coframe(g, random_change(s, 6, k % 2 == 0));
      EXPECT_TRUE(check_jacobi(h));
      EXPECT_EQ(fingerprint(h), f) << entry.name;
      EXPECT_EQ(classify(h), entry.name);
    }
  }
}

TEST(Lie, FilteredChangeKeepsMalcev) {
  ScalarSampler s(2);
  LieAlgebra g = catalog_lookup("h15");
  EXPECT_TRUE(change_coframe(g, random_change(s, 6, true)).is_malcev());
}
