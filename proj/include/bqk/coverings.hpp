#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "automorphisms.hpp"
#include "structures.hpp"

namespace bqk {

struct CoveringCheck {
  bool covering = false;
  std::string reason;  // first failure, empty when covering
  explicit operator bool() const noexcept { return covering; }
};

inline CoveringCheck is_quandle_covering(const std::vector<Elem>& p, const FiniteQuandle& qt, const FiniteQuandle& q) {
  const Elem m = static_cast<Elem>(qt.size()), n = static_cast<Elem>(q.size());
  auto fail = [](std::string r) { return CoveringCheck{false, std::move(r)}; };
  if (p.size() != qt.size()) return fail("map length " + std::to_string(p.size()) + " != " + std::to_string(m));
  std::vector<char> hit(n, 0);
  for (Elem x = 0; x < m; ++x) {
    if (p[x] < 0 || p[x] >= n) return fail("p(" + std::to_string(x) + ") out of range");
    hit[p[x]] = 1;
  }
  for (Elem y = 0; y < n; ++y)
    if (!hit[y]) return fail("not surjective: " + std::to_string(y) + " missed");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (p[qt.op(x, y)] != q.op(p[x], p[y]))
        return fail("not a homomorphism at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  for (Elem x = 0; x < m; ++x)
    for (Elem y = x + 1; y < m; ++y)
      if (p[x] == p[y] && qt.S(x) != qt.S(y))
        return fail("S differs on the fiber pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return {true, {}};
}

struct ImageQuandle {
  FiniteQuandle quandle;
  std::vector<Elem> projection;
  std::vector<Permutation> translations;  // element i of the image is translations[i]
};

// the distinct S_x, numbered by first occurrence; S_x o S_y := S_y S_x S_y^-1
inline ImageQuandle image_quandle_SQ(const FiniteQuandle& q) {
  std::vector<Permutation> reps;
  std::vector<Elem> proj(q.size());
  for (Elem x = 0; x < static_cast<Elem>(q.size()); ++x) {
    auto it = std::find(reps.begin(), reps.end(), q.S(x));
    proj[x] = static_cast<Elem>(it - reps.begin());
    if (it == reps.end()) reps.push_back(q.S(x));
  }
  auto index = [&](const Permutation& s) { return static_cast<Elem>(std::find(reps.begin(), reps.end(), s) - reps.begin()); };
  FiniteQuandle img = FiniteQuandle::from_op(reps.size(), [&](Elem a, Elem b) {
    return index(reps[b] * reps[a] * reps[b].inverse());
  });
  return {std::move(img), std::move(proj), std::move(reps)};
}

// candidates for alpha over y: automorphisms a of Qt with p a = beta_y p
inline std::vector<Permutation> lifts_of(const std::vector<Elem>& p, const std::vector<Permutation>& aut_qt,
                                         const Permutation& beta) {
  std::vector<Permutation> out;
  for (const auto& a : aut_qt) {
    bool ok = true;
    for (Elem x = 0; x < static_cast<Elem>(p.size()) && ok; ++x) ok = p[a(x)] == beta(p[x]);
    if (ok) out.push_back(a);
  }
  return out;
}

// First fiber-constant lift in lex order of (candidate index per base element).
// nullopt means none was found among fiber-constant families, not that no lift exists.
inline std::optional<BiquandleStructure> lift_structure_search(const std::vector<Elem>& p, const FiniteQuandle& qt,
                                                               const BiquandleStructure& a) {
  auto cov = is_quandle_covering(p, qt, a.base);
  if (!cov) throw DomainError("lift: not a covering: " + cov.reason);
  const Elem m = static_cast<Elem>(qt.size()), n = static_cast<Elem>(a.size());
  const auto aut = quandle_automorphisms(qt);
  std::vector<std::vector<Permutation>> cand(n);
  for (Elem y = 0; y < n; ++y) {
    cand[y] = lifts_of(p, aut, a.betas[y]);
    if (cand[y].empty()) return std::nullopt;
  }
  std::vector<int> pick(n, -1);
  auto alpha = [&](Elem xt) -> const Permutation& { return cand[p[xt]][pick[p[xt]]]; };
  auto set = [&](Elem xt) { return pick[p[xt]] >= 0; };
  // condition 1 on every pair of Qt whose four fibers are decided
  auto consistent = [&]() {
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y) {
        if (!set(x) || !set(y)) continue;
        Elem l = alpha(y)(qt.op(x, y)), r = alpha(x)(y);
        if (!set(l) || !set(r)) continue;
        if (alpha(l) * alpha(y) != alpha(r) * alpha(x)) return false;
      }
    return true;
  };
  std::function<bool(Elem)> go = [&](Elem y) {
    if (y == n) {
      std::vector<Permutation> betas;
      for (Elem x = 0; x < m; ++x) betas.push_back(alpha(x));
      return validate_structure(qt, betas).passed();
    }
    for (int i = 0; i < static_cast<int>(cand[y].size()); ++i) {
      pick[y] = i;
      if (consistent() && go(y + 1)) return true;
    }
    pick[y] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::vector<Permutation> betas;
  for (Elem x = 0; x < m; ++x) betas.push_back(alpha(x));
  return BiquandleStructure(qt, std::move(betas));
}

inline bool verify_covering_biquandle_hom(const std::vector<Elem>& p, const BiquandleStructure& lifted,
                                          const BiquandleStructure& a) {
  const FiniteBiquandle bt = biquandle_from_structure(lifted), b = biquandle_from_structure(a);
  const Elem m = static_cast<Elem>(bt.size());
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (p[bt.under(x, y)] != b.under(p[x], p[y]) || p[bt.over(x, y)] != b.over(p[x], p[y])) return false;
  return true;
}

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
  }
}

struct LiftNormalizerCheck {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t aut_b_order = 0;
  std::size_t lifted = 0;  // automorphisms of B with at least one lift
};

// each phi in Aut(B) needs some lift phi~ (p phi~ = phi p) normalizing {alpha_y~}
inline LiftNormalizerCheck verify_lift_normalizer(const std::vector<Elem>& p, const BiquandleStructure& lifted,
                                                  const BiquandleStructure& a) {
  const auto aut_b = biquandle_automorphisms(biquandle_from_structure(a));
  const auto aut_qt = quandle_automorphisms(lifted.base);
  auto in_family = [&](const Permutation& g) {
    return std::find(lifted.betas.begin(), lifted.betas.end(), g) != lifted.betas.end();
  };
  LiftNormalizerCheck r;
  r.aut_b_order = aut_b.size();
  bool all_normalize = true;
  for (const auto& phi : aut_b) {
    auto ls = lifts_of(p, aut_qt, phi);
    if (ls.empty()) continue;
    ++r.lifted;
    bool some = false;
    for (const auto& l : ls) {
      bool ok = true;
      for (const auto& al : lifted.betas)
        if (!in_family(l * al * l.inverse())) {
          ok = false;
          break;
        }
      if (ok) {
        some = true;
        break;
      }
    }
    all_normalize = all_normalize && some;
  }
  if (!all_normalize) r.verdict = Verdict::Fails;
  else r.verdict = r.lifted == r.aut_b_order ? Verdict::Holds : Verdict::Inconclusive;
  return r;
}

}  // namespace bqk
