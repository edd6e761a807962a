#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ndga/linalg.hpp"

namespace ndga {

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 8;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask(1) << i; }

inline std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// sign of e_S ^ e_T for disjoint S, T: (-1)^(pairs s in S, t in T with s > t)
inline int wedge_sign(Mask s, Mask t) {
  int inversions = 0;
  for (Mask rest = t; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += popcount(s >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// all subsets of {0..dim-1} of size k, ascending
inline std::vector<Mask> masks_of_degree(int dim, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << dim); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

class BasisSpace {
 public:
  BasisSpace() = default;
  BasisSpace(int dim, std::vector<std::string> names) : dim_(dim), names_(std::move(names)) {
    if (dim_ < 1 || dim_ > kMaxDim) throw Error(ErrorCode::InvalidArgument, "dimension out of range");
    if (static_cast<int>(names_.size()) != dim_) throw Error(ErrorCode::InvalidArgument, "name count");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (static_cast<int>(seen.size()) != dim_) throw Error(ErrorCode::InvalidArgument, "duplicate names");
  }

  static BasisSpace standard(int dim, const std::string& prefix = "e") {
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) names.push_back(prefix + std::to_string(i));
    return BasisSpace(dim, names);
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  int dim_ = 0;
  std::vector<std::string> names_;
};

class Multivector {
 public:
  using Terms = std::map<Mask, GR>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw Error(ErrorCode::InvalidArgument, "dimension out of range");
  }

  static Multivector scalar(int dim, const GR& c) {
    Multivector m(dim);
    m.add_term(0, c);
    return m;
  }
  static Multivector basis(int dim, Mask mask, const GR& c = GR(1)) {
    Multivector m(dim);
    m.add_term(mask, c);
    return m;
  }
  static Multivector generator(int dim, int i, const GR& c = GR(1)) { return basis(dim, bit(i), c); }
  // e_{i1} ^ e_{i2} ^ ... with the given (possibly unsorted) zero-based indices
  static Multivector monomial(int dim, const std::vector<int>& idx, const GR& c = GR(1));
  static Multivector from_vector(int dim, const Vec& v) {
    Multivector m(dim);
    for (int i = 0; i < dim; ++i) m.add_term(bit(i), v[i]);
    return m;
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GR coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GR(0) : it->second;
  }

  void add_term(Mask m, const GR& c) {
    if (c.is_zero()) return;
    if (m >> dim_) throw Error(ErrorCode::SpaceMismatch, "mask outside space");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::set<int> degrees() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) out.insert(popcount(m));
    return out;
  }

  // degree of a homogeneous element; zero counts as homogeneous of every degree
  std::optional<int> homogeneous_degree() const {
    auto d = degrees();
    if (d.size() == 1) return *d.begin();
    return std::nullopt;
  }

  int require_degree() const {
    auto d = homogeneous_degree();
    if (!d) throw Error(ErrorCode::NotHomogeneous, "element is not homogeneous");
    return *d;
  }

  Multivector part_of_degree(int k) const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_)
      if (popcount(m) == k) out.terms_.emplace(m, c);
    return out;
  }

  // coordinates in the ascending basis of degree k
  Vec coordinates(int k) const {
    auto ms = masks_of_degree(dim_, k);
    Vec v(ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) v[j] = coeff(ms[j]);
    return v;
  }
  static Multivector from_coordinates(int dim, int k, const Vec& v) {
    auto ms = masks_of_degree(dim, k);
    Multivector out(dim);
    for (std::size_t j = 0; j < ms.size(); ++j) out.add_term(ms[j], v[j]);
    return out;
  }

  bool is_real() const {
    for (const auto& [m, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  Multivector real_part() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.add_term(m, GR(c.re()));
    return out;
  }
  Multivector imag_part() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.add_term(m, GR(c.im()));
    return out;
  }
  Multivector conjugate_coefficients() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, conj(c));
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Multivector& operator*=(const GR& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const GR& s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, const GR& s) { return a *= s; }
  Multivector operator-() const { return GR(-1) * *this; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  void check(const Multivector& o) const {
    if (o.dim_ != dim_) throw Error(ErrorCode::SpaceMismatch, "multivectors live in different spaces");
  }

  std::string to_string(const BasisSpace* space = nullptr) const;

 private:
  int dim_ = 0;
  Terms terms_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  a.check(b);
  Multivector out(a.dim());
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) {
      if (s & t) continue;
      GR c = x * y;
      if (wedge_sign(s, t) < 0) c = -c;
      out.add_term(s | t, c);
    }
  return out;
}

inline Multivector Multivector::monomial(int dim, const std::vector<int>& idx, const GR& c) {
  Multivector out = scalar(dim, c);
  for (int i : idx) out = wedge(out, generator(dim, i));
  return out;
}

// interior product with the i-th dual basis vector
inline Multivector contract(int i, const Multivector& a) {
  Multivector out(a.dim());
  Mask b = bit(i);
  for (const auto& [s, c] : a.terms()) {
    if (!(s & b)) continue;
    int below = popcount(s & (b - 1));
    out.add_term(s & ~b, (below & 1) ? -c : c);
  }
  return out;
}

inline Multivector contract(const Vec& x, const Multivector& a) {
  Multivector out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    if (!x[i].is_zero()) out += x[i] * contract(i, a);
  return out;
}

// extends a degree-one table of images (table[i] = image of e_i) to an odd derivation
inline Multivector extend_odd_derivation(const std::vector<Multivector>& table, const Multivector& a) {
  Multivector out(a.dim());
  for (const auto& [s, c] : a.terms()) {
    auto idx = indices(s);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const Multivector& img = table[idx[r]];
      if (img.is_zero()) continue;
      Mask before = 0, after = 0;
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q < r) before |= bit(idx[q]);
        if (q > r) after |= bit(idx[q]);
      }
      Multivector t = wedge(wedge(Multivector::basis(a.dim(), before), img), Multivector::basis(a.dim(), after));
      out += ((r & 1) ? -c : c) * t;
    }
  }
  return out;
}

// algebra map induced by a linear map on degree one; column j of m is the image of e_j
inline Multivector apply_linear(const Matrix& m, const Multivector& a, int target_dim) {
  std::vector<Multivector> images;
  for (std::size_t j = 0; j < m.cols(); ++j) images.push_back(Multivector::from_vector(target_dim, m.column(j)));
  Multivector out(target_dim);
  for (const auto& [s, c] : a.terms()) {
    Multivector t = Multivector::scalar(target_dim, c);
    for (int i : indices(s)) {
      t = wedge(t, images[i]);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

inline Multivector apply_linear(const Matrix& m, const Multivector& a) {
  return apply_linear(m, a, static_cast<int>(m.rows()));
}

struct LinearMap {
  Matrix matrix;

  std::size_t domain_dim() const { return matrix.cols(); }
  std::size_t codomain_dim() const { return matrix.rows(); }
  std::size_t rank() const { return ndga::rank(matrix); }
  std::vector<Vec> kernel() const { return ndga::kernel(matrix); }
};

// matrix of a linear map on Multivectors from degree p to degree q, columns indexed by the source basis
template <class F>
Matrix degree_matrix(int dim, int p, int q, F&& f) {
  auto src = masks_of_degree(dim, p);
  auto dst = masks_of_degree(dim, q);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Multivector img = f(Multivector::basis(dim, src[j]));
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = img.coeff(dst[i]);
  }
  return m;
}

inline std::string coefficient_prefix(const GR& c, bool first) {
  std::string s;
  if (c.is_real()) {
    Rational r = c.re();
    bool neg = sgn(r) < 0;
    if (neg) r = -r;
    s = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (r != 1) s += r.get_str() + "*";
    return s;
  }
  return (first ? "(" : " + (") + c.to_string() + ")*";
}

inline bool salamon_printable(const Multivector& a) {
  if (a.dim() > 9) return false;
  for (const auto& [m, c] : a.terms()) {
    if (popcount(m) != 2 || !c.is_real() || c.re().get_den() != 1) return false;
  }
  return true;
}

inline std::string salamon_string(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<std::vector<int>, GR>> sorted;
  for (const auto& [m, c] : a.terms()) sorted.emplace_back(indices(m), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : sorted) {
    mpz_class n = c.re().get_num();
    if (n < 0) {
      out += "-";
      n = -n;
    } else if (!first) {
      out += "+";
    }
    if (n != 1) out += n.get_str();
    out += std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1);
    first = false;
  }
  return out;
}

inline std::string Multivector::to_string(const BasisSpace* space) const {
  if (salamon_printable(*this) && !is_zero() && space == nullptr) return salamon_string(*this);
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (m == 0) {
      out += first ? c.to_string() : " + (" + c.to_string() + ")";
      first = false;
      continue;
    }
    out += coefficient_prefix(c, first);
    bool f = true;
    for (int i : indices(m)) {
      if (!f) out += "^";
      out += space ? space->names()[i] : "e" + std::to_string(i + 1);
      f = false;
    }
    first = false;
  }
  return out;
}

}  // namespace ndga
