#pragma once

#include <vector>

#include "core.hpp"

namespace bqk {

inline bool is_quandle_automorphism(const FiniteQuandle& q, const Permutation& f) {
  return f.degree() == q.size() && preserves(q.table(), f);
}

inline AxiomReport validate_structure(const FiniteQuandle& q, const std::vector<Permutation>& betas) {
  const Elem n = static_cast<Elem>(q.size());
  if (betas.size() != q.size()) throw MalformedInput("structure needs one permutation per element");
  for (const auto& b : betas)
    if (b.degree() != q.size()) throw MalformedInput("structure permutation has wrong degree");
  AxiomReport rep;
  for (Elem y = 0; y < n; ++y)
    for (Elem a = 0; a < n && !rep.has("automorphism"); ++a)
      for (Elem b = 0; b < n; ++b)
        if (betas[y](q.op(a, b)) != q.op(betas[y](a), betas[y](b))) {
          rep.add("automorphism", {y, a, b});
          break;
        }
  for (Elem x = 0; x < n && !rep.has("condition1"); ++x)
    for (Elem y = 0; y < n; ++y) {
      const Permutation& l = betas[betas[y](q.op(x, y))];
      const Permutation& r = betas[betas[x](y)];
      bool ok = true;
      for (Elem z = 0; z < n && ok; ++z) ok = l(betas[y](z)) == r(betas[x](z));
      if (!ok) {
        rep.add("condition1", {x, y});
        break;
      }
    }
  std::vector<char> seen(n, 0);
  for (Elem y = 0; y < n; ++y) {
    Elem v = betas[y](y);
    if (seen[v]) {
      rep.add("condition2", {y});
      break;
    }
    seen[v] = 1;
  }
  return rep;
}

struct BiquandleStructure {
  FiniteQuandle base;
  std::vector<Permutation> betas;

  BiquandleStructure() = default;
  BiquandleStructure(FiniteQuandle q, std::vector<Permutation> b) : base(std::move(q)), betas(std::move(b)) {
    AxiomReport rep = validate_structure(base, betas);
    if (!rep.passed()) throw DomainError("not a biquandle structure: " + rep.summary());
  }
  std::size_t size() const noexcept { return base.size(); }
  friend bool operator==(const BiquandleStructure& a, const BiquandleStructure& b) {
    return a.base == b.base && a.betas == b.betas;
  }
};

// x _* y = beta_y(x*y),  x ^* y = beta_y(x)
inline FiniteBiquandle biquandle_from_structure(const BiquandleStructure& s) {
  return FiniteBiquandle::from_ops(
      s.size(), [&](Elem x, Elem y) { return s.betas[y](s.base.op(x, y)); }, [&](Elem x, Elem y) { return s.betas[y](x); });
}

inline BiquandleStructure structure_of_biquandle(const FiniteBiquandle& b) {
  std::vector<Permutation> betas;
  for (Elem y = 0; y < static_cast<Elem>(b.size()); ++y) betas.push_back(b.beta(y));
  return BiquandleStructure(associated_quandle(b), std::move(betas));
}

inline BiquandleStructure constant_structure(const FiniteQuandle& q, const Permutation& f) {
  if (!is_quandle_automorphism(q, f)) throw DomainError("constant structure: map is not an automorphism");
  return BiquandleStructure(q, std::vector<Permutation>(q.size(), f));
}

// beta_x = S_x^{-1}
inline BiquandleStructure inverse_inner_structure(const FiniteQuandle& q) {
  std::vector<Permutation> b;
  for (const auto& s : q.translations()) b.push_back(s.inverse());
  return BiquandleStructure(q, std::move(b));
}

}  // namespace bqk

#include "morphism_search.hpp"

namespace bqk {

// sorted list of all automorphisms; identity first
inline std::vector<Permutation> quandle_automorphisms(const FiniteQuandle& q) {
  return all_automorphisms(Signature{&q.table()});
}

inline std::vector<Permutation> biquandle_automorphisms(const FiniteBiquandle& b) {
  return all_automorphisms(Signature{&b.under_table(), &b.over_table()});
}

}  // namespace bqk
