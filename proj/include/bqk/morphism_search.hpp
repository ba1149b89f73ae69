#pragma once

// Isomorphism search between finite algebras given by one or more binary
// tables. Color refinement prunes candidate images; a greedy generating set
// is mapped by backtracking and every other image follows from closure.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "permutation.hpp"
#include "table.hpp"

namespace bqk {

using Signature = std::vector<const Table*>;

namespace detail {

// preimage-count profile of a self map, plus cycle type when bijective
inline std::vector<long long> map_profile(const std::vector<Elem>& f) {
  const std::size_t n = f.size();
  std::vector<long long> pre(n, 0);
  long long fixed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++pre[f[i]];
    if (f[i] == static_cast<Elem>(i)) ++fixed;
  }
  std::vector<long long> out{fixed};
  bool bij = std::all_of(pre.begin(), pre.end(), [](long long c) { return c == 1; });
  if (bij) {
    std::vector<char> seen(n, 0);
    std::vector<long long> cyc;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (std::size_t j = i; !seen[j]; j = f[j]) seen[j] = 1, ++len;
      cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end());
    out.push_back(-1);
    out.insert(out.end(), cyc.begin(), cyc.end());
  } else {
    std::sort(pre.begin(), pre.end());
    out.push_back(-2);
    out.insert(out.end(), pre.begin(), pre.end());
  }
  return out;
}

// joint refinement so that colors are comparable across the two algebras
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const Signature& A, const Signature& B) {
  const std::size_t n = A[0]->size();
  auto initial = [&](const Signature& S, Elem x) {
    std::vector<long long> sig;
    for (const Table* t : S) {
      sig.push_back((*t)(x, x) == x ? 1 : 0);
      std::vector<Elem> col(n), row(n);
      for (std::size_t y = 0; y < n; ++y) {
        col[y] = (*t)(static_cast<Elem>(y), x);
        row[y] = (*t)(x, static_cast<Elem>(y));
      }
      auto c = map_profile(col), r = map_profile(row);
      sig.push_back(-7);
      sig.insert(sig.end(), c.begin(), c.end());
      sig.push_back(-8);
      sig.insert(sig.end(), r.begin(), r.end());
    }
    return sig;
  };
  std::map<std::vector<long long>, int> ids;
  std::vector<int> ca(n), cb(n);
  auto intern = [&](std::vector<long long> s) {
    auto it = ids.emplace(std::move(s), static_cast<int>(ids.size())).first;
    return it->second;
  };
  for (std::size_t x = 0; x < n; ++x) ca[x] = intern(initial(A, static_cast<Elem>(x)));
  for (std::size_t x = 0; x < n; ++x) cb[x] = intern(initial(B, static_cast<Elem>(x)));

  auto count = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> v(a);
    v.insert(v.end(), b.begin(), b.end());
    std::sort(v.begin(), v.end());
    return std::unique(v.begin(), v.end()) - v.begin();
  };
  auto classes = count(ca, cb);
  for (std::size_t round = 0; round < n; ++round) {
    ids.clear();
    auto step = [&](const Signature& S, const std::vector<int>& c, Elem x) {
      std::vector<long long> sig{c[x]};
      for (const Table* t : S) {
        std::vector<long long> l, r;
        for (std::size_t y = 0; y < n; ++y) {
          l.push_back(static_cast<long long>(c[y]) * 1000003 + c[(*t)(x, static_cast<Elem>(y))]);
          r.push_back(static_cast<long long>(c[y]) * 1000003 + c[(*t)(static_cast<Elem>(y), x)]);
        }
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        sig.push_back(-9);
        sig.insert(sig.end(), l.begin(), l.end());
        sig.push_back(-10);
        sig.insert(sig.end(), r.begin(), r.end());
      }
      return sig;
    };
    std::vector<int> na(n), nb(n);
    for (std::size_t x = 0; x < n; ++x) na[x] = intern(step(A, ca, static_cast<Elem>(x)));
    for (std::size_t x = 0; x < n; ++x) nb[x] = intern(step(B, cb, static_cast<Elem>(x)));
    auto k = count(na, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (k == classes) break;
    classes = k;
  }
  return {ca, cb};
}

// elements reachable from `gens` under all tables
inline std::vector<char> closure(const Signature& S, const std::vector<Elem>& gens) {
  const std::size_t n = S[0]->size();
  std::vector<char> in(n, 0);
  std::vector<Elem> list;
  for (Elem g : gens)
    if (!in[g]) in[g] = 1, list.push_back(g);
  for (std::size_t p = 0; p < list.size(); ++p)
    for (std::size_t j = 0; j <= p; ++j)
      for (const Table* t : S)
        for (Elem c : {(*t)(list[p], list[j]), (*t)(list[j], list[p])})
          if (!in[c]) in[c] = 1, list.push_back(c);
  return in;
}

}  // namespace detail

// Calls `visit` on every isomorphism A -> B (as a permutation of indices)
// until it returns false. Tables are matched positionally.
inline void for_each_isomorphism(const Signature& A, const Signature& B,
                                 const std::function<bool(const Permutation&)>& visit) {
  if (A.empty() || A.size() != B.size()) return;
  const std::size_t n = A[0]->size();
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i]->size() != n || B[i]->size() != n) return;
  auto [ca, cb] = detail::refine_colors(A, B);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  std::map<int, std::vector<Elem>> by_color_b;
  std::map<int, std::size_t> class_size;
  for (std::size_t x = 0; x < n; ++x) {
    by_color_b[cb[x]].push_back(static_cast<Elem>(x));
    ++class_size[ca[x]];
  }

  // greedy generators, rarest color first
  std::vector<Elem> order(n);
  for (std::size_t x = 0; x < n; ++x) order[x] = static_cast<Elem>(x);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return class_size[ca[a]] < class_size[ca[b]]; });
  std::vector<Elem> gens;
  std::vector<char> reached(n, 0);
  for (Elem x : order) {
    if (reached[x]) continue;
    gens.push_back(x);
    reached = detail::closure(A, gens);
  }

  std::vector<Elem> f(n, -1), finv(n, -1), mapped;
  mapped.reserve(n);
  std::size_t processed = 0;

  auto assign = [&](Elem a, Elem b) -> bool {
    if (f[a] >= 0) return f[a] == b;
    if (finv[b] >= 0 || ca[a] != cb[b]) return false;
    f[a] = b;
    finv[b] = a;
    mapped.push_back(a);
    return true;
  };
  auto propagate = [&]() -> bool {
    while (processed < mapped.size()) {
      Elem a = mapped[processed];
      for (std::size_t j = 0; j <= processed; ++j) {
        Elem b = mapped[j];
        for (std::size_t k = 0; k < A.size(); ++k) {
          if (!assign((*A[k])(a, b), (*B[k])(f[a], f[b]))) return false;
          if (!assign((*A[k])(b, a), (*B[k])(f[b], f[a]))) return false;
        }
      }
      ++processed;
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (mapped.size() > mark) {
      Elem a = mapped.back();
      mapped.pop_back();
      finv[f[a]] = -1;
      f[a] = -1;
    }
    processed = std::min(processed, mark);
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (stop) return;
    if (gi == gens.size()) {
      if (mapped.size() == n && !visit(Permutation::trusted(f))) stop = true;
      return;
    }
    Elem g = gens[gi];
    if (f[g] >= 0) {
      rec(gi + 1);
      return;
    }
    for (Elem cand : by_color_b[ca[g]]) {
      if (finv[cand] >= 0) continue;
      std::size_t mark = mapped.size(), pmark = processed;
      if (assign(g, cand) && propagate()) rec(gi + 1);
      undo_to(mark);
      processed = pmark;
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<Permutation> all_isomorphisms(const Signature& A, const Signature& B) {
  std::vector<Permutation> out;
  for_each_isomorphism(A, B, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<Permutation> find_isomorphism(const Signature& A, const Signature& B) {
  std::optional<Permutation> out;
  for_each_isomorphism(A, B, [&](const Permutation& p) {
    out = p;
    return false;
  });
  return out;
}

inline std::vector<Permutation> all_automorphisms(const Signature& A) { return all_isomorphisms(A, A); }

}  // namespace bqk
