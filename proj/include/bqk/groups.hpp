#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "morphism_search.hpp"
#include "permutation.hpp"
#include "table.hpp"

namespace bqk {

inline std::size_t& group_order_cap() {
  static std::size_t cap = 64;
  return cap;
}

class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(Table mul) : mul_(std::move(mul)) {
    const Elem n = static_cast<Elem>(mul_.size());
    if (n == 0) throw MalformedInput("empty group table");
    if (mul_.size() > group_order_cap())
      throw ResourceError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(group_order_cap()));
    e_ = -1;
    for (Elem a = 0; a < n && e_ < 0; ++a) {
      bool ok = true;
      for (Elem b = 0; b < n && ok; ++b) ok = mul_(a, b) == b && mul_(b, a) == b;
      if (ok) e_ = a;
    }
    if (e_ < 0) throw DomainError("group table has no identity");
    inv_.assign(n, -1);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (mul_(a, b) == e_ && mul_(b, a) == e_) inv_[a] = b;
    for (Elem a = 0; a < n; ++a)
      if (inv_[a] < 0) throw DomainError("element " + std::to_string(a) + " has no inverse");
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c)))
            throw DomainError("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ")");
  }

  std::size_t order() const noexcept { return mul_.size(); }
  Elem mul(Elem a, Elem b) const { return mul_(a, b); }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem e() const noexcept { return e_; }
  const Table& table() const noexcept { return mul_; }

  Elem pow(Elem a, long long k) const {
    if (k < 0) {
      a = inv_[a];
      k = -k;
    }
    Elem r = e_;
    for (long long i = 0; i < k; ++i) r = mul_(r, a);
    return r;
  }
  long long element_order(Elem a) const {
    long long k = 1;
    for (Elem p = a; p != e_; p = mul_(p, a)) ++k;
    return k;
  }
  long long exponent() const {
    long long l = 1;
    for (Elem a = 0; a < static_cast<Elem>(order()); ++a) l = std::lcm(l, element_order(a));
    return l;
  }
  bool is_abelian() const {
    for (Elem a = 0; a < static_cast<Elem>(order()); ++a)
      for (Elem b = 0; b < a; ++b)
        if (mul_(a, b) != mul_(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

 private:
  Table mul_;
  Elem e_ = 0;
  std::vector<Elem> inv_;
};

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  return FiniteGroup(Table::generate(n, [n](Elem a, Elem b) { return (a + b) % static_cast<Elem>(n); }));
}

// S_k with elements in lexicographic order of image lists; element 0 is id
inline FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 5) throw DomainError("symmetric_group supports 1 <= k <= 5");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<Elem>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  return FiniteGroup(Table::generate(perms.size(), [&](Elem a, Elem b) {
    // (ab)(x) = a(b(x))
    std::vector<Elem> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
    return index(c);
  }));
}

// (g, h) indexed g*|H| + h
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const Elem m = static_cast<Elem>(H.order());
  if (G.order() * H.order() > group_order_cap()) throw ResourceError("direct product exceeds group order cap");
  return FiniteGroup(Table::generate(G.order() * H.order(), [&](Elem a, Elem b) {
    return G.mul(a / m, b / m) * m + H.mul(a % m, b % m);
  }));
}

// order 2n, r^a s^b indexed a + n*b, s r s = r^-1
inline FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw DomainError("dihedral group needs n >= 1");
  const Elem N = static_cast<Elem>(n);
  return FiniteGroup(Table::generate(2 * n, [N](Elem x, Elem y) {
    Elem a = x % N, b = x / N, c = y % N, d = y / N;
    Elem r = ((b ? a - c : a + c) % N + N) % N;
    return r + N * ((b + d) % 2);
  }));
}

// +-1, +-i, +-j, +-k indexed 4*sign + unit, units 1 i j k
inline FiniteGroup quaternion_group() {
  // unit products as (sign, unit)
  static const int prod[4][4][2] = {{{0, 0}, {0, 1}, {0, 2}, {0, 3}},
                                    {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
                                    {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
                                    {{0, 3}, {0, 2}, {1, 1}, {1, 0}}};
  return FiniteGroup(Table::generate(8, [](Elem x, Elem y) {
    const int* p = prod[x % 4][y % 4];
    return static_cast<Elem>(4 * ((x / 4 + y / 4 + p[0]) % 2) + p[1]);
  }));
}

// one group per isomorphism type, orders up to 8
inline std::vector<std::pair<std::string, FiniteGroup>> small_groups(std::size_t max_order) {
  if (max_order > 8) throw DomainError("small_groups lists orders up to 8 only");
  std::vector<std::pair<std::string, FiniteGroup>> out;
  auto z = [](std::size_t n) { return cyclic_group(n); };
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back({"Z" + std::to_string(n), z(n)});
    if (n == 4) out.push_back({"Z2xZ2", direct_product(z(2), z(2))});
    if (n == 6) out.push_back({"S3", symmetric_group(3)});
    if (n == 8) {
      out.push_back({"Z4xZ2", direct_product(z(4), z(2))});
      out.push_back({"Z2xZ2xZ2", direct_product(direct_product(z(2), z(2)), z(2))});
      out.push_back({"D4", dihedral_group(4)});
      out.push_back({"Q8", quaternion_group()});
    }
  }
  return out;
}

// all automorphisms, sorted; identity first
inline std::vector<Permutation> automorphism_group(const FiniteGroup& G) {
  Signature s{&G.table()};
  return all_automorphisms(s);
}

inline bool is_group_automorphism(const FiniteGroup& G, const Permutation& f) {
  return f.degree() == G.order() && preserves(G.table(), f);
}

inline std::vector<Elem> center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem a = 0; a < static_cast<Elem>(G.order()); ++a) {
    bool ok = true;
    for (Elem b = 0; b < static_cast<Elem>(G.order()) && ok; ++b) ok = G.mul(a, b) == G.mul(b, a);
    if (ok) z.push_back(a);
  }
  return z;
}

// x^{-1} phi(x) central for every x
inline bool is_central_automorphism(const FiniteGroup& G, const Permutation& phi) {
  auto z = center(G);
  for (Elem x = 0; x < static_cast<Elem>(G.order()); ++x)
    if (!std::binary_search(z.begin(), z.end(), G.mul(G.inv(x), phi(x)))) return false;
  return true;
}

inline std::vector<Elem> fixed_points(const Permutation& phi) {
  std::vector<Elem> v;
  for (Elem x = 0; x < static_cast<Elem>(phi.degree()); ++x)
    if (phi(x) == x) v.push_back(x);
  return v;
}

inline bool is_fixed_point_free(const FiniteGroup& G, const Permutation& phi) {
  auto f = fixed_points(phi);
  return f.size() == 1 && f[0] == G.e();
}

inline bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

// elements of `ambient` commuting with every member of `set`
inline std::vector<Permutation> centralizer_of_set(const std::vector<Permutation>& ambient,
                                                   const std::vector<Permutation>& set) {
  std::vector<Permutation> out;
  for (const auto& g : ambient)
    if (std::all_of(set.begin(), set.end(), [&](const Permutation& s) { return commute(g, s); })) out.push_back(g);
  return out;
}

// x -> k x on Z_n, a helper for the cyclic examples
inline Permutation multiplication_map(std::size_t n, long long k) {
  std::vector<Elem> v(n);
  for (std::size_t x = 0; x < n; ++x)
    v[x] = static_cast<Elem>((((k % static_cast<long long>(n)) + static_cast<long long>(n)) * static_cast<long long>(x)) %
                             static_cast<long long>(n));
  return Permutation(std::move(v));
}

}  // namespace bqk
