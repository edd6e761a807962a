#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ndga/scalars.hpp"

namespace ndga {

// sorted (variable, exponent) pairs
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

class Poly {
 public:
  using Terms = std::map<Monomial, GR>;

  Poly() = default;
  Poly(const GR& c) { add_term({}, c); }
  Poly(int c) : Poly(GR(c)) {}

  static Poly var(int v) {
    Poly p;
    p.add_term({{v, 1}}, GR(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const GR& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return terms_.empty() ? -1 : d;
  }

  bool is_constant() const { return degree() <= 0; }

  GR constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GR(0) : it->second;
  }

  GR coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GR(0) : it->second;
  }

  GR linear_coeff(int v) const { return coeff({{v, 1}}); }

  std::set<int> variables() const {
    std::set<int> out;
    for (auto& [m, c] : terms_)
      for (auto& [v, e] : m) out.insert(v);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return Poly() - *this; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [m, c] : a.terms_)
      for (auto& [n, d] : b.terms_) out.add_term(monomial_product(m, n), c * d);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const {
    Poly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  // replace variable v by q
  Poly substitute(int v, const Poly& q) const {
    Poly out;
    std::vector<Poly> powers{Poly(1)};
    for (auto& [m, c] : terms_) {
      Monomial rest;
      int e = 0;
      for (auto& [w, k] : m) {
        if (w == v)
          e = k;
        else
          rest.emplace_back(w, k);
      }
      if (e == 0) {
        out.add_term(m, c);
        continue;
      }
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * q);
      Poly t;
      t.add_term(rest, c);
      out += t * powers[e];
    }
    return out;
  }

  Poly substitute(const std::map<int, GR>& values) const {
    Poly out;
    for (auto& [m, c] : terms_) {
      Monomial rest;
      GR k = c;
      for (auto& [w, e] : m) {
        auto it = values.find(w);
        if (it == values.end()) {
          rest.emplace_back(w, e);
        } else {
          for (int i = 0; i < e; ++i) k *= it->second;
        }
      }
      out.add_term(rest, k);
    }
    return out;
  }

  GR evaluate(const std::map<int, GR>& values) const {
    Poly p = substitute(values);
    if (!p.is_constant()) throw Error(ErrorCode::InvalidArgument, "unassigned variable in evaluation");
    return p.constant_term();
  }

  std::complex<double> evaluate_numeric(const std::vector<std::complex<double>>& x) const {
    std::complex<double> s = 0;
    for (auto& [m, c] : terms_) {
      std::complex<double> t(c.re().get_d(), c.im().get_d());
      for (auto& [w, e] : m)
        for (int i = 0; i < e; ++i) t *= x[w];
      s += t;
    }
    return s;
  }

  Poly derivative(int v) const {
    Poly out;
    for (auto& [m, c] : terms_) {
      Monomial rest;
      int e = 0;
      for (auto& [w, k] : m) {
        if (w == v) {
          e = k;
          if (k > 1) rest.emplace_back(w, k - 1);
        } else {
          rest.emplace_back(w, k);
        }
      }
      if (e) out.add_term(rest, c * GR(e));
    }
    return out;
  }

  Poly conjugate_coefficients() const {
    Poly out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, conj(c));
    return out;
  }

  // divide by the leading coefficient so equal ideals of rank one compare equal
  Poly monic() const {
    if (terms_.empty()) return *this;
    GR inv = terms_.rbegin()->second.inverse();
    Poly out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, c * inv);
    return out;
  }

  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::string coef = c.to_string();
      bool wrap = !c.is_real() && sgn(c.re()) != 0;
      if (!first) out += " + ";
      first = false;
      if (m.empty()) {
        out += wrap ? "(" + coef + ")" : coef;
        continue;
      }
      if (!c.is_one()) out += (wrap ? "(" + coef + ")" : coef) + "*";
      bool f = true;
      for (auto& [w, e] : m) {
        if (!f) out += "*";
        out += names ? (*names)[w] : "x" + std::to_string(w);
        if (e > 1) out += "^" + std::to_string(e);
        f = false;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace ndga
