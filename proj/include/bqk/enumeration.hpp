#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "core.hpp"
#include "morphism_search.hpp"
#include "structures.hpp"
#include "verbal.hpp"

namespace bqk {

inline std::size_t& enumeration_cap() {
  static std::size_t cap = 5;
  return cap;
}

// S_n in lexicographic order of image lists
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(Permutation::trusted(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// beta-tuples on T_n: beta_{beta_y(x)} beta_y = beta_{beta_x(y)} beta_x and y -> beta_y(y) bijective.
// Output in lexicographic order of index tuples into all_permutations(n).
inline std::vector<std::vector<Permutation>> enumerate_trivial_structure_tuples(std::size_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > enumeration_cap()) throw ResourceError("n exceeds enumeration cap " + std::to_string(enumeration_cap()));
  const auto perms = all_permutations(n);
  const Elem N = static_cast<Elem>(n);
  std::vector<const Permutation*> beta(n, nullptr);
  std::vector<char> diag_used(n, 0);
  std::vector<std::vector<Permutation>> out;

  // condition 1 for the pair (x, y), if every beta it touches is set
  auto pair_ok = [&](Elem x, Elem y) {
    const Permutation *bx = beta[x], *by = beta[y];
    if (!bx || !by) return true;
    const Permutation* l = beta[(*by)(x)];
    const Permutation* r = beta[(*bx)(y)];
    if (!l || !r) return true;
    for (Elem z = 0; z < N; ++z)
      if ((*l)((*by)(z)) != (*r)((*bx)(z))) return false;
    return true;
  };

  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == N) {
      std::vector<Permutation> t;
      for (auto* p : beta) t.push_back(*p);
      out.push_back(std::move(t));
      return;
    }
    for (const auto& p : perms) {
      Elem d = p(k);
      if (diag_used[d]) continue;
      beta[k] = &p;
      diag_used[d] = 1;
      bool ok = true;
      // pairs whose check may have just become decidable
      for (Elem x = 0; x < N && ok; ++x)
        for (Elem y = 0; y < N && ok; ++y) ok = pair_ok(x, y);
      if (ok) rec(k + 1);
      diag_used[d] = 0;
      beta[k] = nullptr;
    }
  };
  rec(0);
  return out;
}

inline std::vector<BiquandleStructure> enumerate_trivial_structures(std::size_t n) {
  std::vector<BiquandleStructure> out;
  FiniteQuandle t = FiniteQuandle::from_op(n, [](Elem x, Elem) { return x; });
  for (auto& tup : enumerate_trivial_structure_tuples(n)) out.emplace_back(t, std::move(tup));
  return out;
}

// simultaneous relabeling: beta'_{s(y)} = s beta_y s^{-1}
inline std::vector<Permutation> relabel_tuple(const std::vector<Permutation>& betas, const Permutation& s) {
  std::vector<Permutation> r(betas.size());
  Permutation si = s.inverse();
  for (Elem y = 0; y < static_cast<Elem>(betas.size()); ++y) r[s(y)] = s * betas[y] * si;
  return r;
}

// S_n-relabeling orbits of a tuple list; each orbit listed by its smallest member
inline std::vector<std::vector<Permutation>> relabeling_orbit_representatives(
    const std::vector<std::vector<Permutation>>& tuples) {
  if (tuples.empty()) return {};
  const auto perms = all_permutations(tuples[0].size());
  std::set<std::vector<Permutation>> seen;
  std::vector<std::vector<Permutation>> reps;
  for (const auto& t : tuples) {
    if (seen.count(t)) continue;
    std::vector<Permutation> best = t;
    for (const auto& s : perms) {
      auto r = relabel_tuple(t, s);
      if (r < best) best = r;
      seen.insert(std::move(r));
    }
    reps.push_back(std::move(best));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// the m!k! union structures on T_{m+k}: beta_y = g on the second block for y in
// the first block, f on the first block for y in the second
inline std::vector<std::vector<Permutation>> union_structures_on_trivial(std::size_t m, std::size_t k) {
  std::vector<std::vector<Permutation>> out;
  for (const auto& f : all_permutations(m))
    for (const auto& g : all_permutations(k)) {
      std::vector<Elem> on1(m + k), on2(m + k);
      for (Elem x = 0; x < static_cast<Elem>(m); ++x) on1[x] = x, on2[x] = f(x);
      for (Elem x = 0; x < static_cast<Elem>(k); ++x) {
        on1[m + x] = static_cast<Elem>(m) + g(x);
        on2[m + x] = static_cast<Elem>(m) + x;
      }
      std::vector<Permutation> t;
      for (std::size_t y = 0; y < m + k; ++y) t.push_back(Permutation::trusted(y < m ? on1 : on2));
      out.push_back(std::move(t));
    }
  return out;
}

// ---------------------------------------------------------------- free-base check

// Elements of FQ_n are conjugates w^{-1} x_i w in F(x_0..x_{n-1}); the truncated
// model keeps those with |w| <= L letters. alpha_a permutes generators by beta_i,
// where x_i is the generator a is conjugate to.
inline bool lift_structure_to_free_base_check(const BiquandleStructure& s, std::size_t L = 3) {
  const std::size_t n = s.size();
  for (Elem a = 0; a < static_cast<Elem>(n); ++a)
    for (Elem b = 0; b < static_cast<Elem>(n); ++b)
      if (s.base.op(a, b) != a) throw DomainError("free-base check needs a structure on a trivial quandle");
  if (!validate_structure(s.base, s.betas).passed()) return false;

  // conjugating words of length <= L
  std::vector<FreeWord> words{FreeWord()};
  std::vector<FreeWord> layer{FreeWord()};
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : layer)
      for (int l = 0; l < static_cast<int>(n); ++l)
        for (int e : {-1, 1}) {
          FreeWord c = w * FreeWord::letter(l, e);
          if (c.length() == len) next.push_back(c);
        }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  struct Elt {
    FreeWord word;
    int gen;
  };
  std::vector<Elt> elts;
  std::set<FreeWord> seen;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (const auto& w : words) {
      FreeWord c = w.inverse() * FreeWord::letter(i) * w;
      if (seen.insert(c).second) elts.push_back({c, i});
    }
  auto act = [&](const Permutation& p, const FreeWord& w) {
    std::vector<FreeWord> img;
    for (int l = 0; l < static_cast<int>(n); ++l) img.push_back(FreeWord::letter(p(l)));
    return w.substitute(img);
  };
  // p * q = q^{-1} p q keeps the generator class of p
  for (const auto& p : elts)
    for (const auto& q : elts) {
      // alpha_q = beta_{gen(q)}; condition 1 on the generator level
      int ax = s.betas[q.gen](p.gen);  // class of alpha_y(x*y) = class of alpha_y(x)
      int bx = s.betas[p.gen](q.gen);
      Permutation l = s.betas[ax] * s.betas[q.gen];
      Permutation r = s.betas[bx] * s.betas[p.gen];
      if (l != r) return false;
      // alpha_q is a homomorphism on this pair
      FreeWord pq = q.word.inverse() * p.word * q.word;
      const Permutation& al = s.betas[q.gen];
      FreeWord lhs = act(al, pq);
      FreeWord aq = act(al, q.word);
      FreeWord rhs = aq.inverse() * act(al, p.word) * aq;
      if (lhs != rhs) return false;
    }
  // condition 2: y -> alpha_y(y) injective and onto the truncated set
  std::set<FreeWord> images;
  for (const auto& p : elts) {
    FreeWord im = act(s.betas[p.gen], p.word);
    if (!seen.count(im) || !images.insert(im).second) return false;
  }
  return images.size() == elts.size();
}

// ---------------------------------------------------------------- quandles

// all quandle tables on {0..n-1}, lexicographic in row-major order
inline std::vector<FiniteQuandle> enumerate_quandles(std::size_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > enumeration_cap()) throw ResourceError("n exceeds enumeration cap " + std::to_string(enumeration_cap()));
  const Elem N = static_cast<Elem>(n);
  Table t(n, -1);
  for (Elem a = 0; a < N; ++a) t.at(a, a) = a;
  std::vector<std::vector<char>> col_used(n, std::vector<char>(n, 0));
  for (Elem a = 0; a < N; ++a) col_used[a][a] = 1;
  std::vector<FiniteQuandle> out;

  // r2 on every triple whose five lookups are known
  auto consistent = [&]() {
    for (Elem a = 0; a < N; ++a)
      for (Elem b = 0; b < N; ++b) {
        Elem ab = t(a, b);
        if (ab < 0) continue;
        for (Elem c = 0; c < N; ++c) {
          Elem l = t(ab, c), ac = t(a, c), bc = t(b, c);
          if (l < 0 || ac < 0 || bc < 0) continue;
          Elem r = t(ac, bc);
          if (r >= 0 && r != l) return false;
        }
      }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == n * n) {
      out.emplace_back(t);
      return;
    }
    Elem a = static_cast<Elem>(cell / n), b = static_cast<Elem>(cell % n);
    if (a == b) {
      rec(cell + 1);
      return;
    }
    for (Elem v = 0; v < N; ++v) {
      if (col_used[b][v]) continue;
      col_used[b][v] = 1;
      t.at(a, b) = v;
      if (consistent()) rec(cell + 1);
      t.at(a, b) = -1;
      col_used[b][v] = 0;
    }
  };
  rec(0);
  return out;
}

inline std::size_t count_connected(std::size_t n) {
  std::size_t c = 0;
  for (const auto& q : enumerate_quandles(n)) c += is_connected(q) ? 1 : 0;
  return c;
}

inline std::optional<Permutation> are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  return find_isomorphism(Signature{&a.table()}, Signature{&b.table()});
}

inline std::optional<Permutation> are_isomorphic(const FiniteBiquandle& a, const FiniteBiquandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  return find_isomorphism(Signature{&a.under_table(), &a.over_table()}, Signature{&b.under_table(), &b.over_table()});
}

}  // namespace bqk
