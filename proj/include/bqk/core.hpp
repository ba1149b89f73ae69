#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "axiom_report.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "table.hpp"

namespace bqk {

// ---------------------------------------------------------------- quandles

inline AxiomReport check_quandle(const Table& t) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(t.size());
  for (Elem a = 0; a < n; ++a)
    if (t(a, a) != a) rep.add("q1", {a});
  for (Elem b = 0; b < n; ++b)
    if (!t.column_is_bijective(b)) rep.add("r1", {b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(t(a, c), t(b, c))) {
          rep.add("r2", {a, b, c});
          goto done;
        }
done:
  return rep;
}

// raw rows: range problems are reported as an axiom, shape problems throw
inline AxiomReport check_quandle(const std::vector<std::vector<long long>>& rows) {
  std::size_t n = rows.size();
  if (n == 0) throw MalformedInput("empty table");
  for (const auto& r : rows)
    if (r.size() != n) throw MalformedInput("table is not square");
  AxiomReport rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rows[a][b] < 0 || rows[a][b] >= static_cast<long long>(n))
        rep.add("range", {static_cast<long long>(a), static_cast<long long>(b)});
  if (!rep.passed()) return rep;
  return check_quandle(Table::from_rows(rows));
}

class FiniteQuandle {
 public:
  FiniteQuandle() = default;
  explicit FiniteQuandle(Table t) : t_(std::move(t)) {
    if (t_.size() == 0) throw MalformedInput("empty quandle");
    AxiomReport rep = check_quandle(t_);
    if (!rep.passed()) throw DomainError("not a quandle: " + rep.summary());
    build();
  }
  template <class F>
  static FiniteQuandle from_op(std::size_t n, F&& f) { return FiniteQuandle(Table::generate(n, std::forward<F>(f))); }

  std::size_t size() const noexcept { return t_.size(); }
  Elem op(Elem a, Elem b) const { return t_(a, b); }
  Elem op_inv(Elem a, Elem b) const { return inv_(a, b); }  // c with c*b = a
  const Table& table() const noexcept { return t_; }
  const Permutation& S(Elem x) const { return S_[x]; }
  const std::vector<Permutation>& translations() const noexcept { return S_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) { return a.t_ == b.t_; }

 private:
  void build() {
    inv_ = t_.column_inverse();
    S_.clear();
    for (Elem x = 0; x < static_cast<Elem>(size()); ++x) S_.push_back(Permutation::trusted(t_.column(x)));
  }
  Table t_, inv_;
  std::vector<Permutation> S_;
};

inline PermutationGroup inner_group(const FiniteQuandle& q) {
  return PermutationGroup::generated_by(q.translations(), q.size());
}

// orbits of Inn(Q), each sorted, listed by smallest member
inline std::vector<std::vector<Elem>> orbits(const FiniteQuandle& q) {
  const Elem n = static_cast<Elem>(q.size());
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem y = 0; y < n; ++y)
    for (Elem x = 0; x < n; ++x) {
      Elem a = find(x), b = find(q.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> slot(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<Elem>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

inline bool is_connected(const FiniteQuandle& q) { return orbits(q).size() == 1; }

inline bool is_faithful(const FiniteQuandle& q) {
  std::vector<Permutation> s = q.translations();
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline bool is_involutory_quandle(const FiniteQuandle& q) {
  for (const auto& s : q.translations())
    if (!(s * s).is_identity()) return false;
  return true;
}

// ---------------------------------------------------------------- biquandles

inline AxiomReport check_biquandle(const Table& under, const Table& over) {
  if (under.size() != over.size()) throw MalformedInput("under/over size mismatch");
  if (under.size() == 0) throw MalformedInput("empty table");
  AxiomReport rep;
  const Elem n = static_cast<Elem>(under.size());
  for (Elem a = 0; a < n; ++a)
    if (under(a, a) != over(a, a)) rep.add("axiom1", {a});
  for (Elem b = 0; b < n; ++b) {
    if (!under.column_is_bijective(b)) rep.add("axiom2.under", {b});
    if (!over.column_is_bijective(b)) rep.add("axiom2.over", {b});
  }
  {
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (Elem x = 0; x < n && !rep.has("axiom2.S"); ++x)
      for (Elem y = 0; y < n; ++y) {
        std::size_t k = static_cast<std::size_t>(over(y, x)) * n + under(x, y);
        if (seen[k]) {
          rep.add("axiom2.S", {x, y});
          break;
        }
        seen[k] = 1;
      }
  }
  bool a3 = false, b3 = false, c3 = false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (!a3 && under(under(x, y), under(z, y)) != under(under(x, z), over(y, z))) {
          rep.add("axiom3a", {x, y, z});
          a3 = true;
        }
        if (!b3 && over(under(x, y), under(z, y)) != under(over(x, z), over(y, z))) {
          rep.add("axiom3b", {x, y, z});
          b3 = true;
        }
        if (!c3 && over(over(x, y), over(z, y)) != over(over(x, z), under(y, z))) {
          rep.add("axiom3c", {x, y, z});
          c3 = true;
        }
      }
  return rep;
}

class FiniteBiquandle {
 public:
  FiniteBiquandle() = default;
  FiniteBiquandle(Table under, Table over) : u_(std::move(under)), o_(std::move(over)) {
    AxiomReport rep = check_biquandle(u_, o_);
    if (!rep.passed()) throw DomainError("not a biquandle: " + rep.summary());
    uinv_ = u_.column_inverse();
    oinv_ = o_.column_inverse();
    const std::size_t n = size();
    s_inv_.assign(n * n, {0, 0});
    for (Elem x = 0; x < static_cast<Elem>(n); ++x)
      for (Elem y = 0; y < static_cast<Elem>(n); ++y) s_inv_[o_(y, x) * n + u_(x, y)] = {x, y};
  }
  template <class U, class O>
  static FiniteBiquandle from_ops(std::size_t n, U&& u, O&& o) {
    return FiniteBiquandle(Table::generate(n, std::forward<U>(u)), Table::generate(n, std::forward<O>(o)));
  }

  std::size_t size() const noexcept { return u_.size(); }
  Elem under(Elem a, Elem b) const { return u_(a, b); }
  Elem over(Elem a, Elem b) const { return o_(a, b); }
  Elem under_inv(Elem c, Elem b) const { return uinv_(c, b); }  // a with a _* b = c
  Elem over_inv(Elem c, Elem b) const { return oinv_(c, b); }   // a with a ^* b = c
  const Table& under_table() const noexcept { return u_; }
  const Table& over_table() const noexcept { return o_; }

  // S(x, y) = (y ^* x, x _* y) and its inverse
  std::pair<Elem, Elem> S(Elem x, Elem y) const { return {o_(y, x), u_(x, y)}; }
  std::pair<Elem, Elem> S_inv(Elem p, Elem q) const { return s_inv_[static_cast<std::size_t>(p) * size() + q]; }

  Permutation alpha(Elem y) const { return Permutation::trusted(u_.column(y)); }
  Permutation beta(Elem y) const { return Permutation::trusted(o_.column(y)); }

  friend bool operator==(const FiniteBiquandle& a, const FiniteBiquandle& b) {
    return a.u_ == b.u_ && a.o_ == b.o_;
  }

 private:
  Table u_, o_, uinv_, oinv_;
  std::vector<std::pair<Elem, Elem>> s_inv_;
};

inline bool is_involutory_biquandle(const FiniteBiquandle& b) {
  const Elem n = static_cast<Elem>(b.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (b.under(x, b.over(y, x)) != b.under(x, y)) return false;
      if (b.over(x, b.under(y, x)) != b.over(x, y)) return false;
      if (b.under(b.under(x, y), y) != x) return false;
      if (b.over(b.over(x, y), y) != x) return false;
    }
  return true;
}

// x*y = (x _* y) ^*^{-1} y
inline FiniteQuandle associated_quandle(const FiniteBiquandle& b) {
  return FiniteQuandle::from_op(b.size(), [&](Elem x, Elem y) { return b.over_inv(b.under(x, y), y); });
}

inline FiniteBiquandle biquandle_of_quandle(const FiniteQuandle& q) {
  return FiniteBiquandle(q.table(), Table::generate(q.size(), [](Elem x, Elem) { return x; }));
}

// ---------------------------------------------------------------- Yang-Baxter

// r(u, v) = (w, u _* w) with w ^* u = v; stored row-major over pairs
struct YangBaxterMap {
  std::size_t n = 0;
  std::vector<std::pair<Elem, Elem>> r;
  std::pair<Elem, Elem> operator()(Elem u, Elem v) const { return r[static_cast<std::size_t>(u) * n + v]; }
};

inline YangBaxterMap yang_baxter_map(const FiniteBiquandle& b) {
  YangBaxterMap m;
  m.n = b.size();
  m.r.resize(m.n * m.n);
  for (Elem u = 0; u < static_cast<Elem>(m.n); ++u)
    for (Elem v = 0; v < static_cast<Elem>(m.n); ++v) {
      Elem w = b.over_inv(v, u);
      m.r[u * m.n + v] = {w, b.under(u, w)};
    }
  return m;
}

inline AxiomReport check_ybe(const YangBaxterMap& m) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(m.n);
  std::vector<char> seen(m.n * m.n, 0);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      auto [p, q] = m(u, v);
      auto& s = seen[static_cast<std::size_t>(p) * m.n + q];
      if (s) rep.add("r.bijective", {u, v});
      s = 1;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        // left: (r x id)(id x r)(r x id), applied right to left
        auto [a1, b1] = m(a, b);
        auto [b2, c2] = m(b1, c);
        auto [a3, b3] = m(a1, b2);
        // right: (id x r)(r x id)(id x r)
        auto [y1, z1] = m(b, c);
        auto [x2, y2] = m(a, y1);
        auto [y3, z3] = m(y2, z1);
        if (a3 != x2 || b3 != y3 || c2 != z3) {
          rep.add("ybe", {a, b, c});
          return rep;
        }
      }
  return rep;
}

inline AxiomReport check_ybe(const FiniteBiquandle& b) { return check_ybe(yang_baxter_map(b)); }

// ybe on raw tables, for candidates that were never validated
inline AxiomReport check_ybe(const Table& under, const Table& over) {
  AxiomReport rep;
  for (Elem y = 0; y < static_cast<Elem>(over.size()); ++y)
    if (!over.column_is_bijective(y)) {
      rep.add("axiom2.over", {y});
      return rep;
    }
  Table oinv = over.column_inverse();
  YangBaxterMap m;
  m.n = under.size();
  m.r.resize(m.n * m.n);
  for (Elem u = 0; u < static_cast<Elem>(m.n); ++u)
    for (Elem v = 0; v < static_cast<Elem>(m.n); ++v) {
      Elem w = oinv(v, u);
      m.r[u * m.n + v] = {w, under(u, w)};
    }
  return check_ybe(m);
}

}  // namespace bqk
