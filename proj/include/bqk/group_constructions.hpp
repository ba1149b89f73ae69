#pragma once

#include <numeric>

#include "core.hpp"
#include "groups.hpp"

namespace bqk {

// x*y = y^{-n} x y^n
inline FiniteQuandle conj_quandle(const FiniteGroup& G, long long n) {
  return FiniteQuandle::from_op(G.order(), [&](Elem x, Elem y) { return G.mul(G.mul(G.pow(y, -n), x), G.pow(y, n)); });
}

// x*y = y x^{-1} y
inline FiniteQuandle core_quandle(const FiniteGroup& G) {
  return FiniteQuandle::from_op(G.order(), [&](Elem x, Elem y) { return G.mul(G.mul(y, G.inv(x)), y); });
}

inline FiniteQuandle takasaki(const FiniteGroup& G) {
  if (!G.is_abelian()) throw DomainError("takasaki quandle needs an abelian group");
  return core_quandle(G);
}

// R_n: 2y - x mod n
inline FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw DomainError("dihedral quandle of order 0");
  const Elem m = static_cast<Elem>(n);
  return FiniteQuandle::from_op(n, [m](Elem x, Elem y) { return ((2 * y - x) % m + m) % m; });
}

inline FiniteQuandle trivial_quandle(std::size_t n) {
  if (n == 0) throw DomainError("trivial quandle of order 0");
  return FiniteQuandle::from_op(n, [](Elem x, Elem) { return x; });
}

// x*y = phi(x y^{-1}) y
inline FiniteQuandle alexander_quandle(const FiniteGroup& G, const Permutation& phi) {
  if (!is_group_automorphism(G, phi)) throw DomainError("alexander quandle: map is not a group automorphism");
  return FiniteQuandle::from_op(G.order(), [&](Elem x, Elem y) { return G.mul(phi(G.mul(x, G.inv(y))), y); });
}

// x _* y = y^{-1} x^{-1} y,  x ^* y = y^{-2} x
inline FiniteBiquandle wada_biquandle(const FiniteGroup& G) {
  return FiniteBiquandle::from_ops(
      G.order(), [&](Elem x, Elem y) { return G.mul(G.mul(G.inv(y), G.inv(x)), y); },
      [&](Elem x, Elem y) { return G.mul(G.pow(y, -2), x); });
}

// B(G, phi): x _* y = phi(y) x^{-1} y,  x ^* y = phi(x)
inline FiniteBiquandle gen_dihedral_biquandle(const FiniteGroup& G, const Permutation& phi) {
  if (!is_group_automorphism(G, phi)) throw DomainError("gendihedral: map is not a group automorphism");
  if (!is_central_automorphism(G, phi)) throw DomainError("gendihedral: automorphism is not central");
  return FiniteBiquandle::from_ops(
      G.order(), [&](Elem x, Elem y) { return G.mul(G.mul(phi(y), G.inv(x)), y); }, [&](Elem x, Elem) { return phi(x); });
}

// A_{psi,phi}(G): x _* y = phi(x y^{-1}) psi(y),  x ^* y = psi(x)
inline FiniteBiquandle gen_alexander_biquandle(const FiniteGroup& G, const Permutation& phi, const Permutation& psi) {
  if (!is_group_automorphism(G, phi) || !is_group_automorphism(G, psi))
    throw DomainError("genalex: maps must be group automorphisms");
  if (!commute(phi, psi)) throw DomainError("genalex: phi and psi do not commute");
  return FiniteBiquandle::from_ops(
      G.order(), [&](Elem x, Elem y) { return G.mul(phi(G.mul(x, G.inv(y))), psi(y)); },
      [&](Elem x, Elem) { return psi(x); });
}

// on Z_n: x _* y = t x + (s - t) y,  x ^* y = s x
inline FiniteBiquandle alexander_biquandle(std::size_t n, long long s, long long t) {
  if (n == 0) throw DomainError("alexander biquandle of order 0");
  const long long m = static_cast<long long>(n);
  if (std::gcd(((s % m) + m) % m, m) != 1 || std::gcd(((t % m) + m) % m, m) != 1)
    throw DomainError("alexbq: s and t must be units mod n");
  auto md = [m](long long v) { return static_cast<Elem>(((v % m) + m) % m); };
  return FiniteBiquandle::from_ops(
      n, [&](Elem x, Elem y) { return md(t * x + (s - t) * y); }, [&](Elem x, Elem) { return md(s * x); });
}

}  // namespace bqk
