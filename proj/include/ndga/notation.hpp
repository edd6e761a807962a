#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ndga/lie.hpp"

namespace ndga {

namespace detail {

inline void skip_blanks(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace detail

// "(0,0,0,12,13+42,14+23)"; with malcev set, entry k may only cite indices below k
inline LieAlgebra parse(std::string_view text, bool malcev = true) {
  std::size_t pos = 0;
  detail::skip_blanks(text, pos);
  if (pos >= text.size() || text[pos] != '(') throw Error(ErrorCode::SyntaxError, "expected '('", pos);
  ++pos;
  struct Term {
    long coeff;
    int i, j;
    std::size_t at;
  };
  std::vector<std::vector<Term>> entries;
  for (;;) {
    detail::skip_blanks(text, pos);
    std::vector<Term> entry;
    bool first = true;
    bool zero_entry = false;
    for (;;) {
      detail::skip_blanks(text, pos);
      long sg = 1;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (first && text[pos] == '+') throw Error(ErrorCode::SyntaxError, "leading '+'", pos);
        sg = text[pos] == '-' ? -1 : 1;
        ++pos;
        detail::skip_blanks(text, pos);
      } else if (!first) {
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string digits(text.substr(start, pos - start));
      if (digits.empty()) throw Error(ErrorCode::SyntaxError, "expected term", pos);
      if (first && sg == 1 && digits == "0") {
        zero_entry = true;
        first = false;
        break;
      }
      if (digits.size() < 2) throw Error(ErrorCode::SyntaxError, "term needs an index pair", start);
      long coeff = 1;
      if (digits.size() > 2) {
        std::string c = digits.substr(0, digits.size() - 2);
        if (c.size() > 9) throw Error(ErrorCode::SyntaxError, "coefficient too large", start);
        coeff = std::stol(c);
        if (coeff == 0) throw Error(ErrorCode::SyntaxError, "zero coefficient", start);
      }
      int i = digits[digits.size() - 2] - '0';
      int j = digits[digits.size() - 1] - '0';
      if (i == 0 || j == 0) throw Error(ErrorCode::SyntaxError, "index 0 is not allowed", pos - 2);
      if (i == j) throw Error(ErrorCode::SyntaxError, "repeated index", pos - 2);
      entry.push_back({sg * coeff, i, j, pos - 2});
      first = false;
    }
    if (zero_entry) {
      detail::skip_blanks(text, pos);
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
        throw Error(ErrorCode::SyntaxError, "'0' entry cannot continue", pos);
    }
    entries.push_back(std::move(entry));
    detail::skip_blanks(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    throw Error(ErrorCode::SyntaxError, "expected ',' or ')'", pos);
  }
  detail::skip_blanks(text, pos);
  if (pos != text.size()) throw Error(ErrorCode::SyntaxError, "trailing characters", pos);
  int n = static_cast<int>(entries.size());
  if (n > 9) throw Error(ErrorCode::SyntaxError, "more than nine entries", 0);
  if (n > kMaxDim) throw Error(ErrorCode::InvalidArgument, "dimension above " + std::to_string(kMaxDim));
  std::vector<Multivector> diffs(n, Multivector(n));
  for (int k = 0; k < n; ++k) {
    for (auto& t : entries[k]) {
      if (t.i > n || t.j > n) {
        if (malcev) throw Error(ErrorCode::ForwardReference, "index beyond dimension", t.at);
        throw Error(ErrorCode::SyntaxError, "index beyond dimension", t.at);
      }
      if (malcev && (t.i > k || t.j > k))
        throw Error(ErrorCode::ForwardReference, "entry " + std::to_string(k + 1) + " cites a later index", t.at);
      diffs[k] += Multivector::monomial(n, {t.i - 1, t.j - 1}, GR(t.coeff));
    }
  }
  return LieAlgebra(diffs, ScalarField::Real);
}

inline std::string print(const LieAlgebra& g) {
  if (g.dim() > 9) throw Error(ErrorCode::InvalidArgument, "shorthand needs dimension at most 9");
  std::string out = "(";
  for (int k = 0; k < g.dim(); ++k) {
    const Multivector& m = g.differential(k);
    for (auto& [mask, c] : m.terms())
      if (!c.is_real() || c.re().get_den() != 1)
        throw Error(ErrorCode::NonIntegerCoefficient, "coefficient " + c.to_string());
    out += (k ? "," : "") + salamon_string(m);
  }
  return out + ")";
}

struct CatalogEntry {
  std::string name;
  std::string equations;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"h1", "(0,0,0,0,0,0)"},
      {"h2", "(0,0,0,0,12,34)"},
      {"h3", "(0,0,0,0,0,12+34)"},
      {"h4", "(0,0,0,0,12,14+23)"},
      {"h5", "(0,0,0,0,13+42,14+23)"},
      {"h6", "(0,0,0,0,12,13)"},
      {"h7", "(0,0,0,12,13,23)"},
      {"h8", "(0,0,0,0,0,12)"},
      {"h9", "(0,0,0,0,12,14+25)"},
      {"h10", "(0,0,0,12,13,14)"},
      {"h11", "(0,0,0,12,13,14+23)"},
      {"h12", "(0,0,0,12,13,24)"},
      {"h13", "(0,0,0,12,13+14,24)"},
      {"h14", "(0,0,0,12,14,13+42)"},
      {"h15", "(0,0,0,12,13+42,14+23)"},
      {"h16", "(0,0,0,12,14,24)"},
      {"h17", "(0,0,0,0,12,15)"},
  };
  return entries;
}

inline int catalog_index(const std::string& name) {
  const auto& c = catalog();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].name == name) return static_cast<int>(i) + 1;
  throw Error(ErrorCode::UnknownName, "no catalog algebra named '" + name + "'");
}

inline LieAlgebra catalog_lookup(const std::string& name) {
  return parse(catalog()[catalog_index(name) - 1].equations);
}

struct ClassifierTable {
  std::vector<std::pair<Fingerprint, std::string>> real;
  // complex classes: fingerprint, lowest-index member, all members
  std::vector<std::pair<Fingerprint, std::vector<std::string>>> complex;
};

// real classes merging over C; each pair is witnessed by an explicit isomorphism in the tests
inline const std::vector<std::vector<std::string>>& complex_merges() {
  static const std::vector<std::vector<std::string>> m = {{"h2", "h5"}, {"h13", "h15"}};
  return m;
}

inline const ClassifierTable& classifier_table() {
  static const ClassifierTable table = [] {
    ClassifierTable t;
    for (auto& e : catalog()) {
      LieAlgebra g = parse(e.equations);
      Fingerprint f = fingerprint(g);
      for (auto& [other, name] : t.real)
        if (other == f) throw Error(ErrorCode::Ambiguous, "catalog fingerprints of " + name + " and " + e.name + " coincide");
      t.real.emplace_back(f, e.name);
      Fingerprint fc = fingerprint(g.with_field(ScalarField::Complex));
      bool merged = false;
      for (auto& [other, names] : t.complex)
        if (other == fc) {
          names.push_back(e.name);
          merged = true;
        }
      if (!merged) t.complex.push_back({fc, {e.name}});
    }
    for (auto& [f, names] : t.complex) {
      if (names.size() == 1) continue;
      if (std::find(complex_merges().begin(), complex_merges().end(), names) == complex_merges().end())
        throw Error(ErrorCode::Ambiguous, "unexpected complex fingerprint collision among " + names.front());
    }
    return t;
  }();
  return table;
}

// real algebras match one catalog entry; complex ones match a complex class, named by its lowest index member
inline std::string classify(const LieAlgebra& g) {
  if (g.dim() != 6) throw Error(ErrorCode::NoMatch, "catalog covers dimension 6 only");
  Fingerprint f = fingerprint(g);
  const auto& t = classifier_table();
  if (g.field() == ScalarField::Real) {
    for (auto& [fp, name] : t.real)
      if (fp == f) return name;
  } else {
    for (auto& [fp, names] : t.complex)
      if (fp == f) return names.front();
  }
  throw Error(ErrorCode::NoMatch, "no catalog algebra has this fingerprint");
}

inline std::vector<std::string> complex_class(const std::string& name) {
  catalog_index(name);
  for (auto& m : complex_merges())
    if (std::find(m.begin(), m.end(), name) != m.end()) return m;
  return {name};
}

}  // namespace ndga
