#pragma once

#include <array>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace bqk {

// Crossing relations, with UI/UO the under strand in/out and OI/OO the over strand:
//   positive:  S(UI, OO) = (OI, UO),  i.e. UO = UI _* OO and OI = OO ^* UI
//   negative:  S(UO, OI) = (OO, UI),  i.e. UI = UO _* OI and OO = OI ^* UO
// where S(x, y) = (y ^* x, x _* y). For B(Q) this is UO = UI * O (positive) and
// UI = UO * O (negative).
struct ClassicalCrossing {
  int sign;  // +1 or -1
  int in_under, in_over, out_under, out_over;
};

struct VirtualCrossing {
  int in1, in2, out1, out2;  // in1 continues as out1, in2 as out2
};

struct Closure {
  int out, in;  // the strand on arc `out` continues as arc `in`
};

inline std::size_t& arc_cap() {
  static std::size_t cap = 64;
  return cap;
}

class VirtualLinkDiagram {
 public:
  std::vector<std::string> arc_names;
  std::vector<ClassicalCrossing> classical;
  std::vector<VirtualCrossing> virtuals;
  std::vector<Closure> closures;

  std::size_t arc_count() const noexcept { return arc_names.size(); }
  int components() const noexcept { return components_; }

  // next[a] = arc continuing the strand after the end of a
  std::vector<int> successor() const {
    std::vector<int> next(arc_count(), -1);
    for (const auto& c : classical) {
      next[c.in_under] = c.out_under;
      next[c.in_over] = c.out_over;
    }
    for (const auto& v : virtuals) {
      next[v.in1] = v.out1;
      next[v.in2] = v.out2;
    }
    for (const auto& c : closures) next[c.out] = c.in;
    return next;
  }

  // checks incidences and counts components; lines index the arc's first use
  void finalize(const std::vector<int>& first_line = {}) {
    const std::size_t n = arc_count();
    if (n > arc_cap()) throw ResourceError("diagram has more arcs than the cap " + std::to_string(arc_cap()));
    std::vector<int> as_in(n, 0), as_out(n, 0);
    for (const auto& c : classical) {
      ++as_in[c.in_under], ++as_in[c.in_over];
      ++as_out[c.out_under], ++as_out[c.out_over];
    }
    for (const auto& v : virtuals) {
      ++as_in[v.in1], ++as_in[v.in2];
      ++as_out[v.out1], ++as_out[v.out2];
    }
    for (const auto& c : closures) ++as_in[c.out], ++as_out[c.in];
    for (std::size_t a = 0; a < n; ++a) {
      int line = a < first_line.size() ? first_line[a] : 0;
      if (as_in[a] != 1 || as_out[a] != 1)
        throw ParseError(line, "arc '" + arc_names[a] + "' ends " + std::to_string(as_in[a]) + " times and starts " +
                                   std::to_string(as_out[a]) + " times (need 1 and 1)");
    }
    auto next = successor();
    std::vector<char> seen(n, 0);
    components_ = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[a]) continue;
      ++components_;
      for (int b = static_cast<int>(a); !seen[b]; b = next[b]) seen[b] = 1;
    }
  }

 private:
  int components_ = 0;
};

// One item per line: "X + a b c d" (in_under in_over out_under out_over),
// "V a b c d" (in1 in2 out1 out2), "= a b". '#' starts a comment.
inline VirtualLinkDiagram parse_diagram(const std::string& text) {
  VirtualLinkDiagram d;
  std::map<std::string, int> ids;
  std::vector<int> first_line;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto arc = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<int>(d.arc_names.size()));
    if (fresh) {
      d.arc_names.push_back(name);
      first_line.push_back(lineno);
    }
    return it->second;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "X") {
      if (tok.size() != 6 || (tok[1] != "+" && tok[1] != "-"))
        throw ParseError(lineno, "expected 'X +|- in_under in_over out_under out_over'");
      d.classical.push_back({tok[1] == "+" ? 1 : -1, arc(tok[2]), arc(tok[3]), arc(tok[4]), arc(tok[5])});
    } else if (tok[0] == "V") {
      if (tok.size() != 5) throw ParseError(lineno, "expected 'V in1 in2 out1 out2'");
      d.virtuals.push_back({arc(tok[1]), arc(tok[2]), arc(tok[3]), arc(tok[4])});
    } else if (tok[0] == "=") {
      if (tok.size() != 3) throw ParseError(lineno, "expected '= out in'");
      d.closures.push_back({arc(tok[1]), arc(tok[2])});
    } else {
      throw ParseError(lineno, "unknown item '" + tok[0] + "'");
    }
  }
  d.finalize(first_line);
  return d;
}

inline std::string to_text(const VirtualLinkDiagram& d) {
  std::ostringstream o;
  auto nm = [&](int a) { return d.arc_names[a]; };
  for (const auto& c : d.classical)
    o << "X " << (c.sign > 0 ? '+' : '-') << ' ' << nm(c.in_under) << ' ' << nm(c.in_over) << ' ' << nm(c.out_under)
      << ' ' << nm(c.out_over) << '\n';
  for (const auto& v : d.virtuals) o << "V " << nm(v.in1) << ' ' << nm(v.in2) << ' ' << nm(v.out1) << ' ' << nm(v.out2) << '\n';
  for (const auto& c : d.closures) o << "= " << nm(c.out) << ' ' << nm(c.in) << '\n';
  return o.str();
}

// ---------------------------------------------------------------- counting

namespace detail {

// Equalities are merged into classes first; the rest is DFS with propagation.
// A rule sees the values of its variables (-1 = unknown), may fill some in,
// and returns false on a contradiction.
struct ColoringEngine {
  using Rule = std::function<bool(std::array<Elem, 4>&)>;
  struct Con {
    std::array<int, 4> vars;
    int arity;
    int kind;
  };
  std::size_t domain = 0;
  int nvars = 0;
  std::vector<Con> cons;
  std::vector<Rule> rules;                  // by kind
  std::vector<std::vector<int>> incident;   // var -> constraint ids

  void build_incidence() {
    incident.assign(nvars, {});
    for (std::size_t i = 0; i < cons.size(); ++i)
      for (int k = 0; k < cons[i].arity; ++k) incident[cons[i].vars[k]].push_back(static_cast<int>(i));
  }

  // count completions of `val`, which must already be propagated
  unsigned long long count(std::vector<Elem> val) const {
    std::vector<int> trail;
    return dfs(val, trail);
  }

  bool propagate(std::vector<Elem>& val, std::vector<int>& trail, std::vector<int> queue) const {
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int ci : incident[v]) {
        const Con& c = cons[ci];
        std::array<Elem, 4> x{-1, -1, -1, -1};
        for (int k = 0; k < c.arity; ++k) x[k] = val[c.vars[k]];
        if (!rules[c.kind](x)) return false;
        for (int k = 0; k < c.arity; ++k) {
          int w = c.vars[k];
          if (val[w] < 0 && x[k] >= 0) {
            val[w] = x[k];
            trail.push_back(w);
            queue.push_back(w);
          } else if (val[w] >= 0 && x[k] != val[w]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  unsigned long long dfs(std::vector<Elem>& val, std::vector<int>& trail) const {
    int pick = -1;
    for (int v = 0; v < nvars; ++v)
      if (val[v] < 0) {
        pick = v;
        break;
      }
    if (pick < 0) return 1;
    unsigned long long total = 0;
    for (Elem c = 0; c < static_cast<Elem>(domain); ++c) {
      std::size_t mark = trail.size();
      val[pick] = c;
      trail.push_back(pick);
      if (propagate(val, trail, {pick})) total += dfs(val, trail);
      while (trail.size() > mark) {
        val[trail.back()] = -1;
        trail.pop_back();
      }
    }
    return total;
  }

  unsigned long long count_all(int jobs) const {
    if (nvars == 0) return 1;
    if (jobs <= 1) return count(std::vector<Elem>(nvars, -1));
    // split on the first variable's color
    std::vector<std::future<unsigned long long>> parts;
    for (Elem c = 0; c < static_cast<Elem>(domain); ++c)
      parts.push_back(std::async(std::launch::async, [this, c] {
        std::vector<Elem> val(nvars, -1);
        std::vector<int> trail;
        val[0] = c;
        if (!propagate(val, trail, {0})) return 0ull;
        return count(std::move(val));
      }));
    unsigned long long total = 0;
    for (auto& p : parts) total += p.get();
    return total;
  }
};

struct ArcClasses {
  std::vector<int> cls;  // arc -> class
  int count = 0;
};

inline ArcClasses merge_arcs(std::size_t n, const std::vector<std::pair<int, int>>& eq) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : eq) parent[find(a)] = find(b);
  ArcClasses r;
  r.cls.assign(n, -1);
  std::vector<int> id(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    int root = find(static_cast<int>(a));
    if (id[root] < 0) id[root] = r.count++;
    r.cls[a] = id[root];
  }
  return r;
}

inline std::vector<std::pair<int, int>> pass_through_equalities(const VirtualLinkDiagram& d) {
  std::vector<std::pair<int, int>> eq;
  for (const auto& v : d.virtuals) {
    eq.push_back({v.in1, v.out1});
    eq.push_back({v.in2, v.out2});
  }
  for (const auto& c : d.closures) eq.push_back({c.out, c.in});
  return eq;
}

}  // namespace detail

inline unsigned long long coloring_count_biquandle(const VirtualLinkDiagram& d, const FiniteBiquandle& b, int jobs = 1) {
  auto cls = detail::merge_arcs(d.arc_count(), detail::pass_through_equalities(d));
  detail::ColoringEngine e;
  e.domain = b.size();
  e.nvars = cls.count;
  // vars (x, y, p, q) with S(x, y) = (p, q)
  e.rules.push_back([&b](std::array<Elem, 4>& v) {
    Elem &x = v[0], &y = v[1], &p = v[2], &q = v[3];
    for (int round = 0; round < 2; ++round) {
      if (x >= 0 && y >= 0) {
        auto [pp, qq] = b.S(x, y);
        if ((p >= 0 && p != pp) || (q >= 0 && q != qq)) return false;
        p = pp, q = qq;
        return true;
      }
      if (p >= 0 && q >= 0) {
        auto [xx, yy] = b.S_inv(p, q);
        if ((x >= 0 && x != xx) || (y >= 0 && y != yy)) return false;
        x = xx, y = yy;
        return true;
      }
      if (x >= 0 && p >= 0 && y < 0) y = b.over_inv(p, x);  // p = y ^* x
      else if (y >= 0 && q >= 0 && x < 0) x = b.under_inv(q, y);  // q = x _* y
      else return true;
    }
    return true;
  });
  for (const auto& c : d.classical) {
    std::array<int, 4> v;
    if (c.sign > 0) v = {cls.cls[c.in_under], cls.cls[c.out_over], cls.cls[c.in_over], cls.cls[c.out_under]};
    else v = {cls.cls[c.out_under], cls.cls[c.in_over], cls.cls[c.out_over], cls.cls[c.in_under]};
    e.cons.push_back({v, 4, 0});
  }
  e.build_incidence();
  return e.count_all(jobs);
}

inline unsigned long long coloring_count_quandle(const VirtualLinkDiagram& d, const FiniteQuandle& q, int jobs = 1) {
  auto eq = detail::pass_through_equalities(d);
  for (const auto& c : d.classical) eq.push_back({c.in_over, c.out_over});
  auto cls = detail::merge_arcs(d.arc_count(), eq);
  detail::ColoringEngine e;
  e.domain = q.size();
  e.nvars = cls.count;
  // vars (a, o, r) with r = a * o
  e.rules.push_back([&q](std::array<Elem, 4>& v) {
    Elem &a = v[0], &o = v[1], &r = v[2];
    if (a >= 0 && o >= 0) {
      Elem rr = q.op(a, o);
      if (r >= 0 && r != rr) return false;
      r = rr;
    } else if (r >= 0 && o >= 0) {
      a = q.op_inv(r, o);
    }
    return true;
  });
  for (const auto& c : d.classical) {
    int o = cls.cls[c.in_over];
    if (c.sign > 0) e.cons.push_back({{cls.cls[c.in_under], o, cls.cls[c.out_under], -1}, 3, 0});
    else e.cons.push_back({{cls.cls[c.out_under], o, cls.cls[c.in_under], -1}, 3, 0});
  }
  e.build_incidence();
  return e.count_all(jobs);
}

// ---------------------------------------------------------------- builtins

inline VirtualLinkDiagram unlink_diagram(std::size_t k) {
  std::string t;
  for (std::size_t i = 0; i < k; ++i) t += "= u" + std::to_string(i) + " u" + std::to_string(i) + "\n";
  return parse_diagram(t);
}

// name -> diagram text
inline std::map<std::string, std::string> builtin_diagram_texts() {
  return {
      {"unknot", "= a a\n"},
      {"unlink2", "= a a\n= b b\n"},
      {"unlink3", "= a a\n= b b\n= c c\n"},
      // one crossing, the strand passes under first and then over itself
      {"kink+", "X + a b b a\n"},
      {"kink-", "X - a b b a\n"},
      // over first, then under
      {"kink+over", "X + b a a b\n"},
      {"kink-over", "X - b a a b\n"},
      // components: a0 a1 over/under, b0 b1 under/over
      {"hopf", "X + b1 a1 b0 a0\nX + a0 b0 a1 b1\n"},
      // Gauss code O1 U2 O3 U1 O2 U3, all crossings positive
      {"trefoil", "X + s2 s5 s3 s0\nX + s0 s3 s1 s4\nX + s4 s1 s5 s2\n"},
      // under strand b -> c, over strand d -> a, closed through a virtual crossing
      {"vhopf", "X + b d c a\nV c a b d\n"},
  };
}

inline std::map<std::string, VirtualLinkDiagram> builtin_diagrams() {
  std::map<std::string, VirtualLinkDiagram> out;
  for (const auto& [name, text] : builtin_diagram_texts()) out.emplace(name, parse_diagram(text));
  return out;
}

}  // namespace bqk
