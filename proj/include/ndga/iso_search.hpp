#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ndga/dga.hpp"
#include "ndga/poly.hpp"

namespace ndga {

struct SystemSolution {
  bool found = false;
  std::vector<GR> values;
  std::vector<Poly> residual;  // equations left standing by the last failed attempt
  std::string reason;
};

namespace detail {

// v appears in p only through the monomial v itself
inline bool solvable_for(const Poly& p, int v) {
  bool seen = false;
  for (auto& [m, c] : p.terms())
    for (auto& [w, e] : m)
      if (w == v) {
        if (m.size() != 1 || e != 1) return false;
        seen = true;
      }
  return seen;
}

struct Attempt {
  std::map<int, Poly> expr;
  std::vector<Poly> eqs;

  void assign(int v, const Poly& q) {
    for (auto& [w, p] : expr) p = p.substitute(v, q);
    expr[v] = q;
    for (auto& e : eqs) e = e.substitute(v, q);
  }

  // drop satisfied equations; false when a nonzero constant survives
  bool clean() {
    std::vector<Poly> keep;
    std::set<std::string> seen;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return false;
      Poly m = e.monic();
      if (seen.insert(m.to_string()).second) keep.push_back(std::move(m));
    }
    eqs = std::move(keep);
    return true;
  }
};

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

// a square root inside the Gaussian rationals, when there is one
inline std::optional<GR> gaussian_sqrt(const GR& z) {
  auto m = rational_sqrt(abs2(z));
  if (!m) return std::nullopt;
  auto x = rational_sqrt(Rational((*m + z.re()) / 2));
  auto y = rational_sqrt(Rational((*m - z.re()) / 2));
  if (!x || !y) return std::nullopt;
  GR r(*x, sgn(z.im()) < 0 ? Rational(-*y) : *y);
  if (r * r != z) return std::nullopt;
  return r;
}

// Gaussian-rational roots of a univariate polynomial of degree at most two in v
inline std::vector<GR> small_roots(const Poly& p, int v) {
  GR a = p.coeff({{v, 2}}), b = p.coeff({{v, 1}}), c = p.constant_term();
  if (a.is_zero()) {
    if (b.is_zero()) return {};
    return {-c / b};
  }
  auto r = gaussian_sqrt(b * b - GR(4) * a * c);
  if (!r) return {};
  GR inv = (GR(2) * a).inverse();
  return {(-b + *r) * inv, (-b - *r) * inv};
}

}  // namespace detail

namespace detail {

struct Search {
  ScalarSampler& rng;
  int nvars;
  const std::function<bool(const std::vector<GR>&)>& accept;
  const std::function<bool(const std::vector<GR>&)>& viable;
  long budget;
  std::vector<Poly> residual;
  std::string reason;
  std::vector<GR> values;

  bool fail(const Attempt& t, const char* why) {
    if (residual.empty() || t.eqs.size() < residual.size()) {
      residual = t.eqs;
      reason = why;
    }
    return false;
  }

  // row-reduces the degree-one equations together; 0 none, 1 progress, -1 inconsistent
  int eliminate_linear(Attempt& t) {
    std::map<int, std::size_t> col;
    std::vector<const Poly*> lin;
    for (auto& e : t.eqs)
      if (e.degree() == 1) {
        lin.push_back(&e);
        for (int v : e.variables()) col.emplace(v, 0);
      }
    if (lin.empty()) return 0;
    std::vector<int> var;
    for (auto& [v, j] : col) {
      j = var.size();
      var.push_back(v);
    }
    std::size_t k = var.size();
    Matrix m(lin.size(), k + 1);
    for (std::size_t r = 0; r < lin.size(); ++r) {
      for (auto& [v, j] : col) m(r, j) = lin[r]->linear_coeff(v);
      m(r, k) = lin[r]->constant_term();
    }
    RowEchelon red = rref(std::move(m));
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      std::size_t c = red.pivots[r];
      if (c == k) return -1;
      Poly q(-red.reduced(r, k));
      for (std::size_t j = c + 1; j < k; ++j)
        if (!red.reduced(r, j).is_zero()) q -= Poly(red.reduced(r, j)) * Poly::var(var[j]);
      t.assign(var[c], q);
    }
    return 1;
  }

  // row reduction over the monomial basis, highest degree first, so that low-degree consequences surface
  static bool reduce_over_monomials(Attempt& t) {
    auto before = [](const Monomial& a, const Monomial& b) {
      int da = monomial_degree(a), db = monomial_degree(b);
      return da != db ? da > db : a < b;
    };
    std::map<Monomial, std::size_t, decltype(before)> col(before);
    for (auto& e : t.eqs)
      for (auto& [m, c] : e.terms()) col.emplace(m, 0);
    std::vector<Monomial> mono;
    for (auto& [m, j] : col) {
      j = mono.size();
      mono.push_back(m);
    }
    Matrix a(t.eqs.size(), mono.size());
    for (std::size_t r = 0; r < t.eqs.size(); ++r)
      for (auto& [m, c] : t.eqs[r].terms()) a(r, col.at(m)) = c;
    RowEchelon red = rref(std::move(a));
    std::vector<Poly> out;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      Poly p;
      for (std::size_t j = red.pivots[r]; j < mono.size(); ++j)
        p.add_term(mono[j], red.reduced(r, j));
      out.push_back(std::move(p));
    }
    t.eqs = std::move(out);
    return t.clean();
  }

  // linear elimination and exact univariate solving until nothing is forced
  bool propagate(Attempt& t) {
    for (;;) {
      if (!t.clean()) return fail(t, "inconsistent constant equation");
      if (t.eqs.empty()) return true;
      if (!reduce_over_monomials(t)) return fail(t, "inconsistent constant equation");
      int lin = eliminate_linear(t);
      if (lin < 0) return fail(t, "inconsistent linear equations");
      if (lin > 0) continue;
      std::optional<std::pair<std::size_t, int>> pick;
      std::size_t best = SIZE_MAX;
      for (std::size_t i = 0; i < t.eqs.size(); ++i) {
        if (t.eqs[i].terms().size() >= best) continue;
        for (int v : t.eqs[i].variables())
          if (solvable_for(t.eqs[i], v)) {
            pick = {i, v};
            best = t.eqs[i].terms().size();
            break;
          }
      }
      if (pick) {
        auto [i, v] = *pick;
        Poly e = t.eqs[i];
        GR c = e.linear_coeff(v);
        t.assign(v, Poly(-c.inverse()) * (e - Poly(c) * Poly::var(v)));
        continue;
      }
      auto uni = std::find_if(t.eqs.begin(), t.eqs.end(), [](const Poly& p) { return p.variables().size() == 1; });
      if (uni == t.eqs.end()) return true;
      int v = *uni->variables().begin();
      Poly p = *uni;
      if (p.degree() > 2) return fail(t, "univariate equation of high degree");
      auto roots = small_roots(p, v);
      if (roots.empty()) return fail(t, "no Gaussian-rational root");
      t.assign(v, Poly(roots[static_cast<std::size_t>(rng.integer(0, static_cast<long>(roots.size()) - 1))]));
    }
  }

  // the current expressions at random values of the unassigned variables
  std::vector<GR> sample(const Attempt& t) {
    std::map<int, GR> free;
    for (int v = 0; v < nvars; ++v)
      if (!t.expr.count(v)) free[v] = rng.nonzero_gaussian(3, 2);
    std::vector<GR> vals(nvars);
    for (int v = 0; v < nvars; ++v) vals[v] = t.expr.count(v) ? t.expr.at(v).evaluate(free) : free[v];
    return vals;
  }

  bool finish(const Attempt& t) {
    std::vector<GR> vals = sample(t);
    if (!accept(vals)) return fail(t, "solution rejected (singular or failed verification)");
    values = std::move(vals);
    return true;
  }

  bool dfs(Attempt t) {
    if (--budget < 0) return false;
    if (!propagate(t)) return false;
    if (t.eqs.empty()) return finish(t);
    if (viable && !viable(sample(t)) && !viable(sample(t))) return fail(t, "branch is degenerate");
    // a single monomial: one of its variables vanishes
    auto mono = std::find_if(t.eqs.begin(), t.eqs.end(), [](const Poly& p) { return p.terms().size() == 1; });
    if (mono != t.eqs.end()) {
      std::vector<int> vars;
      for (auto& [v, e] : mono->terms().begin()->first) vars.push_back(v);
      std::shuffle(vars.begin(), vars.end(), rng.engine());
      for (int v : vars) {
        Attempt u = t;
        u.assign(v, Poly());
        if (dfs(std::move(u))) return true;
      }
      return false;
    }
    // seed variables occurring in many nonlinear monomials first
    std::map<int, int> count;
    for (auto& e : t.eqs)
      for (auto& [m, c] : e.terms())
        if (monomial_degree(m) > 1)
          for (auto& [v, k] : m) ++count[v];
    std::vector<std::pair<int, int>> order;
    for (auto& [v, c] : count) order.emplace_back(-c, v);
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });
    int tries = 0;
    for (auto& [c, v] : order) {
      if (++tries > 4) break;
      Attempt u = t;
      u.assign(v, Poly(rng.nonzero_gaussian(3, 2)));
      if (dfs(std::move(u))) return true;
      Attempt z = t;
      z.assign(v, Poly());
      if (dfs(std::move(z))) return true;
    }
    return false;
  }
};

}  // namespace detail

// exact elimination where an equation is linear in some variable, exact roots of univariate quadratics,
// and random Gaussian seeding with backtracking otherwise; accept() gets the full assignment and decides
// viable(), when given, sees the branch at a random point and prunes it on false
inline SystemSolution solve_system(const std::vector<Poly>& equations, int nvars, ScalarSampler& s, int attempts,
                                   const std::function<bool(const std::vector<GR>&)>& accept,
                                   const std::function<bool(const std::vector<GR>&)>& viable = {}) {
  SystemSolution out;
  detail::Search search{s, nvars, accept, viable, 0, {}, {}, {}};
  for (int a = 0; a < attempts; ++a) {
    search.budget = 400;
    detail::Attempt t;
    t.eqs = equations;
    if (search.dfs(std::move(t))) {
      out.found = true;
      out.values = search.values;
      return out;
    }
  }
  out.residual = search.residual;
  out.reason = search.reason.empty() ? "search budget exhausted" : search.reason;
  return out;
}

struct IsoSearchResult {
  bool found = false;
  Matrix phi;
  std::vector<Poly> obstruction;
  std::string reason;
};

struct IsoSearchOptions {
  int attempts = 40;
  std::uint64_t seed = 1;
  std::map<int, Vec> fixed;  // prescribed images of some generators
  bool use_filtrations = true;
};

inline std::string phi_name(int r, int c) { return "phi_" + std::to_string(r + 1) + "_" + std::to_string(c + 1); }

inline Poly phi_var(int n, int r, int c) { return Poly::var(r * n + c); }

using PolyMatrix = std::vector<std::vector<Poly>>;

inline PolyMatrix variable_matrix(int n) {
  PolyMatrix x(n, std::vector<Poly>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) x[r][c] = phi_var(n, r, c);
  return x;
}

// polynomial conditions for Φ (column j = image of generator j of a) to be a DGA morphism a → b
inline std::vector<Poly> morphism_equations(const DGAlgebra& a, const DGAlgebra& b, const PolyMatrix& x) {
  int n = a.dim();
  std::vector<Poly> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        Poly e;
        for (int k = 0; k < n; ++k)
          if (!a.bracket(i, j)[k].is_zero()) e += Poly(a.bracket(i, j)[k]) * x[r][k];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            if (p != q && !b.bracket(p, q)[r].is_zero()) e -= Poly(b.bracket(p, q)[r]) * x[p][i] * x[q][j];
        if (!e.is_zero()) eqs.push_back(e);
      }
  for (int j = 0; j < n; ++j) {
    const Multivector& da = a.d_table()[j];
    for (Mask m : masks_of_degree(n, 2)) {
      auto pq = indices(m);
      int p = pq[0], q = pq[1];
      Poly e;
      for (auto& [mk, c] : da.terms()) {
        auto kl = indices(mk);
        int k = kl[0], l = kl[1];
        e += Poly(c) * (x[p][k] * x[q][l] - x[q][k] * x[p][l]);
      }
      for (int r = 0; r < n; ++r) {
        GR c = b.d_table()[r].coeff(m);
        if (!c.is_zero()) e -= Poly(c) * x[r][j];
      }
      if (!e.is_zero()) eqs.push_back(e);
    }
  }
  return eqs;
}

inline std::vector<Poly> morphism_equations(const DGAlgebra& a, const DGAlgebra& b) {
  return morphism_equations(a, b, variable_matrix(a.dim()));
}

// Φ(S_a) ⊂ S_b, as linear equations
inline std::vector<Poly> subspace_equations(int n, const Subspace& sa, const Subspace& sb) {
  std::vector<Poly> eqs;
  auto ann = sb.annihilator();
  for (auto& v : sa.basis())
    for (auto& w : ann) {
      Poly e;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (!w[r].is_zero() && !v[c].is_zero()) e += Poly(w[r] * v[c]) * phi_var(n, r, c);
      if (!e.is_zero()) eqs.push_back(e);
    }
  return eqs;
}

struct FiltrationData {
  std::vector<Subspace> dual, lcs, ascending;
};

inline FiltrationData filtrations(const DGAlgebra& a) {
  LieAlgebra l = a.degree_one_algebra();
  return {dual_filtration(a.differential_algebra()), lower_central_filtration(l), ascending_filtration(l)};
}

inline IsoSearchResult find_dga_isomorphism(const DGAlgebra& a, const DGAlgebra& b, const IsoSearchOptions& opt = {}) {
  IsoSearchResult res;
  int n = a.dim();
  if (b.dim() != n) {
    res.reason = "dimensions differ";
    return res;
  }
  std::vector<Poly> plain = morphism_equations(a, b), eqs = plain;
  if (opt.use_filtrations) {
    FiltrationData fa, fb;
    try {
      fa = filtrations(a);
      fb = filtrations(b);
    } catch (const Error& e) {
      res.reason = std::string("filtrations unavailable: ") + e.what();
      return res;
    }
    auto add = [&](const std::vector<Subspace>& x, const std::vector<Subspace>& y, const char* what) {
      if (x.size() != y.size()) return std::string(what) + " lengths differ";
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].dim() != y[k].dim()) return std::string(what) + " dimensions differ";
        auto e = subspace_equations(n, x[k], y[k]);
        eqs.insert(eqs.end(), e.begin(), e.end());
      }
      return std::string();
    };
    for (auto& msg : {add(fa.dual, fb.dual, "dual filtration"), add(fa.lcs, fb.lcs, "lower central series"),
                      add(fa.ascending, fb.ascending, "ascending series")})
      if (!msg.empty()) {
        res.reason = msg;
        return res;
      }
  }
  for (auto& [c, v] : opt.fixed)
    for (int r = 0; r < n; ++r) {
      eqs.push_back(phi_var(n, r, c) - Poly(v[r]));
      plain.push_back(eqs.back());
    }
  auto to_matrix = [n](const std::vector<GR>& vals) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = vals[r * n + c];
    return m;
  };
  // attempts alternate between the filtration ansatz and the bare intertwining equations; an isomorphism
  // preserves the filtrations either way
  ScalarSampler s(opt.seed);
  SystemSolution sol;
  for (int k = 0; k < opt.attempts && !sol.found; ++k) {
    sol = solve_system(
        k % 2 ? plain : eqs, n * n, s, 1,
        [&](const std::vector<GR>& vals) { return check_morphism(a, b, to_matrix(vals)).isomorphism(); },
        [&](const std::vector<GR>& vals) { return !determinant(to_matrix(vals)).is_zero(); });
    if (k == 0 && !sol.found) {
      res.obstruction = sol.residual;
      res.reason = sol.reason;
    }
  }
  if (sol.found) {
    res.found = true;
    res.phi = to_matrix(sol.values);
  }
  return res;
}

}  // namespace ndga
