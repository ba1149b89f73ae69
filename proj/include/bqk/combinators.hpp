#pragma once

#include <string>
#include <vector>

#include "core.hpp"
#include "structures.hpp"

namespace bqk {

namespace detail {

inline std::string wit(std::initializer_list<long long> v) {
  std::string s = "(";
  bool first = true;
  for (long long x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

// h : Q -> Aut(target) with h(x*y) = h(y) h(x) h(y)^{-1}
inline void require_conj_hom(const FiniteQuandle& q, const std::vector<Permutation>& h, const FiniteQuandle& target,
                             const char* name) {
  if (h.size() != q.size()) throw MalformedInput(std::string(name) + ": need one automorphism per element");
  for (Elem x = 0; x < static_cast<Elem>(q.size()); ++x)
    if (!is_quandle_automorphism(target, h[x]))
      throw DomainError(std::string(name) + ": image of " + std::to_string(x) + " is not an automorphism");
  for (Elem x = 0; x < static_cast<Elem>(q.size()); ++x)
    for (Elem y = 0; y < static_cast<Elem>(q.size()); ++y)
      if (h[q.op(x, y)] != h[y] * h[x] * h[y].inverse())
        throw DomainError(std::string(name) + ": not a homomorphism into Conj_{-1}(Aut) at " + wit({x, y}));
}

inline std::vector<Permutation> constant_map(std::size_t n, const Permutation& f) { return std::vector<Permutation>(n, f); }

}  // namespace detail

// Q1 first, Q2 offset by |Q1|. sigma: Q1 -> Aut(Q2), tau: Q2 -> Aut(Q1).
inline FiniteQuandle union_quandle(const FiniteQuandle& q1, const FiniteQuandle& q2, std::vector<Permutation> sigma = {},
                                   std::vector<Permutation> tau = {}) {
  const Elem m = static_cast<Elem>(q1.size()), k = static_cast<Elem>(q2.size());
  if (sigma.empty()) sigma = detail::constant_map(m, Permutation::identity(k));
  if (tau.empty()) tau = detail::constant_map(k, Permutation::identity(m));
  detail::require_conj_hom(q1, sigma, q2, "sigma");
  detail::require_conj_hom(q2, tau, q1, "tau");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < k; ++z)
        if (q1.op(tau[z](x), y) != tau[sigma[y](z)](q1.op(x, y)))
          throw DomainError("union condition fails at " + detail::wit({x, y, z}));
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b)
      for (Elem x = 0; x < m; ++x)
        if (q2.op(sigma[x](a), b) != sigma[tau[b](x)](q2.op(a, b)))
          throw DomainError("union condition fails at " + detail::wit({a, b, x}));
  Table t = Table::generate(m + k, [&](Elem x, Elem y) -> Elem {
    if (x < m && y < m) return q1.op(x, y);
    if (x >= m && y >= m) return q2.op(x - m, y - m) + m;
    if (x < m) return tau[y - m](x);
    return sigma[y](x - m) + m;
  });
  AxiomReport rep = check_quandle(t);
  if (!rep.passed()) throw DomainError("union is not a quandle: " + rep.summary());
  return FiniteQuandle(std::move(t));
}

// structure on Q1 ⊔ Q2: beta_a acts by phi_a on Q2 for a in Q1, by psi_a on Q1 for a in Q2
inline BiquandleStructure union_biquandle_general(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                                  const std::vector<Permutation>& phi,
                                                  const std::vector<Permutation>& psi) {
  const Elem m = static_cast<Elem>(q1.size()), k = static_cast<Elem>(q2.size());
  detail::require_conj_hom(q1, phi, q2, "phi");
  detail::require_conj_hom(q2, psi, q1, "psi");
  for (Elem x1 = 0; x1 < m; ++x1)
    for (Elem x2 = 0; x2 < k; ++x2) {
      if (phi[x1] != phi[psi[x2](x1)]) throw DomainError("phi_x1 != phi_{psi_x2(x1)} at " + detail::wit({x1, x2}));
      if (psi[x2] != psi[phi[x1](x2)]) throw DomainError("psi_x2 != psi_{phi_x1(x2)} at " + detail::wit({x1, x2}));
    }
  std::vector<Permutation> betas;
  for (Elem a = 0; a < m + k; ++a) {
    std::vector<Elem> img(m + k);
    for (Elem x = 0; x < m; ++x) img[x] = a < m ? x : psi[a - m](x);
    for (Elem x = 0; x < k; ++x) img[m + x] = m + (a < m ? phi[a](x) : x);
    betas.push_back(Permutation::trusted(std::move(img)));
  }
  return BiquandleStructure(union_quandle(q1, q2), std::move(betas));
}

// B(Q1 _g⊔_f Q2): f in Aut(Q1), g in Aut(Q2)
inline FiniteBiquandle union_biquandle_constant(const FiniteQuandle& q1, const FiniteQuandle& q2, const Permutation& f,
                                                const Permutation& g) {
  if (!is_quandle_automorphism(q1, f) || !is_quandle_automorphism(q2, g))
    throw DomainError("unionbq: f and g must be automorphisms of Q1 and Q2");
  return biquandle_from_structure(
      union_biquandle_general(q1, q2, detail::constant_map(q1.size(), g), detail::constant_map(q2.size(), f)));
}

inline bool involutory_union_check(const FiniteQuandle& q1, const FiniteQuandle& q2, const std::vector<Permutation>& phi,
                                   const std::vector<Permutation>& psi) {
  if (!is_involutory_quandle(q1) || !is_involutory_quandle(q2)) return false;
  for (const auto& p : phi)
    if (!(p * p).is_identity()) return false;
  for (const auto& p : psi)
    if (!(p * p).is_identity()) return false;
  return true;
}

// (x,a) indexed x*|Q2| + a.
// (x,a) _* (y,b) = (psi_b(x *1 y), phi_y(a)),  (x,a) ^* (y,b) = (psi_b(x), phi_y(a *2 b))
inline FiniteBiquandle product_biquandle(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                         const std::vector<Permutation>& phi, const std::vector<Permutation>& psi,
                                         int which_case) {
  const Elem m = static_cast<Elem>(q1.size()), k = static_cast<Elem>(q2.size());
  if (phi.size() != q1.size() || psi.size() != q2.size()) throw MalformedInput("product: map lengths do not match");
  for (const auto& p : phi)
    if (!is_quandle_automorphism(q2, p)) throw DomainError("product: phi takes a non-automorphism value");
  for (const auto& p : psi)
    if (!is_quandle_automorphism(q1, p)) throw DomainError("product: psi takes a non-automorphism value");
  if (which_case == 1) {
    for (Elem b = 1; b < k; ++b)
      if (psi[b] != psi[0]) throw DomainError("product case 1 needs psi constant");
    const Permutation& f = psi[0];
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y)
        if (phi[f(q1.op(x, y))] != phi[f(y)] * phi[x] * phi[y].inverse())
          throw DomainError("product case 1 condition fails at " + detail::wit({x, y}));
  } else if (which_case == 2) {
    for (Elem x = 1; x < m; ++x)
      if (phi[x] != phi[0]) throw DomainError("product case 2 needs phi constant");
    const Permutation& g = phi[0];
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        if (psi[g(q2.op(a, b))] != psi[g(b)] * psi[a] * psi[b].inverse())
          throw DomainError("product case 2 condition fails at " + detail::wit({a, b}));
  } else {
    throw MalformedInput("product case must be 1 or 2");
  }
  return FiniteBiquandle::from_ops(
      static_cast<std::size_t>(m) * k,
      [&](Elem p, Elem q) {
        Elem x = p / k, a = p % k, y = q / k, b = q % k;
        return psi[b](q1.op(x, y)) * k + phi[y](a);
      },
      [&](Elem p, Elem q) {
        Elem x = p / k, a = p % k, y = q / k, b = q % k;
        return psi[b](x) * k + phi[y](q2.op(a, b));
      });
}

// B(Q1 x_psi Q2): (psi_b(x *1 y), a) and (psi_b(x), a *2 b)
inline FiniteBiquandle semidirect_biquandle(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                            const std::vector<Permutation>& psi) {
  const Elem k = static_cast<Elem>(q2.size());
  detail::require_conj_hom(q2, psi, q1, "psi");
  return FiniteBiquandle::from_ops(
      q1.size() * q2.size(),
      [&](Elem p, Elem q) { return psi[q % k](q1.op(p / k, q / k)) * k + p % k; },
      [&](Elem p, Elem q) { return psi[q % k](p / k) * k + q2.op(p % k, q % k); });
}

// Conj_{-1} on an automorphism list: f * g = g f g^{-1}
inline FiniteQuandle conj_inverse_quandle(const std::vector<Permutation>& autos) {
  return FiniteQuandle::from_op(autos.size(), [&](Elem f, Elem g) {
    Permutation c = autos[g] * autos[f] * autos[g].inverse();
    return static_cast<Elem>(std::lower_bound(autos.begin(), autos.end(), c) - autos.begin());
  });
}

struct Holomorph {
  FiniteBiquandle biquandle;
  std::vector<Permutation> autos;  // sorted Aut(Q); (x, autos[i]) has index x*|Aut| + i
};

// (x,f) _* (y,g) = (g(x*y), f),  (x,f) ^* (y,g) = (g(x), g f g^{-1})
inline Holomorph holomorph_biquandle(const FiniteQuandle& q) {
  Holomorph h;
  h.autos = quandle_automorphisms(q);
  FiniteQuandle a = conj_inverse_quandle(h.autos);
  h.biquandle = semidirect_biquandle(q, a, h.autos);
  return h;
}

// (x,a)*(y,b) = (x *1 y, a *2 b), indexed x*|Q2| + a
inline FiniteQuandle product_quandle(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  const Elem k = static_cast<Elem>(q2.size());
  return FiniteQuandle::from_op(q1.size() * q2.size(),
                                [&](Elem p, Elem q) { return q1.op(p / k, q / k) * k + q2.op(p % k, q % k); });
}

}  // namespace bqk
