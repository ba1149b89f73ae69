#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "groups.hpp"

namespace bqk {

// letters: 0 = x, 1 = y, 2 = z
struct Syllable {
  int letter;
  long long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Syllable> s) {
    for (const auto& x : s) {
      if (x.exp == 0) throw MalformedInput("zero exponent in word");
      if (x.letter < 0) throw MalformedInput("bad letter in word");
    }
    syl_ = std::move(s);
    normalize();
  }
  static FreeWord letter(int l, long long e = 1) { return FreeWord({{l, e}}); }
  static FreeWord x() { return letter(0); }
  static FreeWord y() { return letter(1); }
  static FreeWord z() { return letter(2); }

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  std::size_t length() const {
    std::size_t l = 0;
    for (const auto& s : syl_) l += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
    return l;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r;
    r.syl_ = a.syl_;
    r.syl_.insert(r.syl_.end(), b.syl_.begin(), b.syl_.end());
    r.normalize();
    return r;
  }
  FreeWord inverse() const {
    FreeWord r;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->letter, -it->exp});
    return r;
  }
  FreeWord pow(long long k) const {
    FreeWord base = k < 0 ? inverse() : *this, r;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
    return r;
  }

  // replace each letter l by images[l]
  FreeWord substitute(const std::vector<FreeWord>& images) const {
    FreeWord r;
    for (const auto& s : syl_) {
      if (static_cast<std::size_t>(s.letter) >= images.size()) throw DomainError("substitution misses a letter");
      r = r * images[s.letter].pow(s.exp);
    }
    return r;
  }

  std::string str() const {
    if (syl_.empty()) return "1";
    static const char* names = "xyz";
    std::string out;
    for (const auto& s : syl_) {
      if (!out.empty()) out += ' ';
      out += s.letter < 3 ? std::string(1, names[s.letter]) : "g" + std::to_string(s.letter);
      if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
  }

  // "y^-2 x y^1"; whitespace separated, "1" is the identity
  static FreeWord parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Syllable> s;
    while (in >> tok) {
      if (tok == "1") continue;
      int l;
      switch (tok[0]) {
        case 'x': l = 0; break;
        case 'y': l = 1; break;
        case 'z': l = 2; break;
        default: throw MalformedInput("bad letter in word token '" + tok + "'");
      }
      long long e = 1;
      if (tok.size() > 1) {
        if (tok[1] != '^' || tok.size() < 3) throw MalformedInput("bad word token '" + tok + "'");
        std::size_t used = 0;
        try {
          e = std::stoll(tok.substr(2), &used);
        } catch (const std::exception&) {
          throw MalformedInput("bad exponent in '" + tok + "'");
        }
        if (used != tok.size() - 2) throw MalformedInput("bad exponent in '" + tok + "'");
      }
      s.push_back({l, e});
    }
    return FreeWord(std::move(s));
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.syl_ <=> b.syl_; }

 private:
  void normalize() {
    std::vector<Syllable> st;
    for (const auto& s : syl_) {
      if (!st.empty() && st.back().letter == s.letter) {
        st.back().exp += s.exp;
        if (st.back().exp == 0) st.pop_back();
      } else {
        st.push_back(s);
      }
    }
    syl_ = std::move(st);
  }
  std::vector<Syllable> syl_;
};

inline FreeWord reduce(const FreeWord& w) { return w; }  // construction already reduces
inline FreeWord multiply(const FreeWord& a, const FreeWord& b) { return a * b; }
inline FreeWord invert(const FreeWord& w) { return w.inverse(); }
inline FreeWord substitute(const FreeWord& w, const FreeWord& x_img, const FreeWord& y_img) {
  return w.substitute({x_img, y_img, FreeWord::z()});
}

// y^a x^e y^b with e = +-1; a or b may be 0
struct WordShape {
  long long a = 0;
  int e = 1;
  long long b = 0;
};

inline std::optional<WordShape> word_shape(const FreeWord& w) {
  const auto& s = w.syllables();
  WordShape sh;
  std::size_t i = 0;
  if (i < s.size() && s[i].letter == 1) sh.a = s[i++].exp;
  if (i >= s.size() || s[i].letter != 0 || (s[i].exp != 1 && s[i].exp != -1)) return std::nullopt;
  sh.e = static_cast<int>(s[i++].exp);
  if (i < s.size() && s[i].letter == 1) sh.b = s[i++].exp;
  if (i != s.size()) return std::nullopt;
  return sh;
}

inline FreeWord shape_word(long long a, int e, long long b) {
  return FreeWord::y().pow(a) * FreeWord::x().pow(e) * FreeWord::y().pow(b);
}

inline bool is_verbal_quandle_word(const FreeWord& w) {
  if (!word_shape(w)) return false;
  const FreeWord X = FreeWord::x(), Y = FreeWord::y(), Z = FreeWord::z();
  auto op = [&](const FreeWord& a, const FreeWord& b) { return w.substitute({a, b, Z}); };
  if (op(X, X) != X) return false;
  return op(op(X, Y), Z) == op(op(X, Z), op(Y, Z));
}

struct VerbalQuandleClass {
  enum Kind { None, Conj, Core } kind = None;
  long long n = 0;
};

inline VerbalQuandleClass classify_verbal_quandle(const FreeWord& w) {
  auto sh = word_shape(w);
  if (!sh) return {};
  if (sh->e == 1 && sh->a == -sh->b) return {VerbalQuandleClass::Conj, sh->b};
  if (sh->e == -1 && sh->a == 1 && sh->b == 1) return {VerbalQuandleClass::Core, 0};
  return {};
}

// u = x ^* y, v = x _* y
inline bool is_verbal_birack(const FreeWord& u, const FreeWord& v) {
  if (!word_shape(u) || !word_shape(v)) return false;
  const FreeWord X = FreeWord::x(), Y = FreeWord::y(), Z = FreeWord::z();
  auto O = [&](const FreeWord& a, const FreeWord& b) { return u.substitute({a, b, Z}); };
  auto U = [&](const FreeWord& a, const FreeWord& b) { return v.substitute({a, b, Z}); };
  if (U(U(X, Y), U(Z, Y)) != U(U(X, Z), O(Y, Z))) return false;
  if (O(U(X, Y), U(Z, Y)) != U(O(X, Z), O(Y, Z))) return false;
  if (O(O(X, Y), O(Z, Y)) != O(O(X, Z), U(Y, Z))) return false;
  return O(X, X) == U(X, X);
}

struct VerbalBiquandleClass {
  int family = 0;  // 0 = none
  long long param = 0;
};

// first matching family wins; (x, x) reports family 1 with parameter 0
inline VerbalBiquandleClass classify_verbal_biquandle(const FreeWord& u, const FreeWord& v) {
  auto su = word_shape(u), sv = word_shape(v);
  if (!su || !sv) return {};
  auto is = [](const WordShape& s, long long a, int e, long long b) { return s.a == a && s.e == e && s.b == b; };
  if (is(*su, 0, 1, 0) && sv->e == 1 && sv->a == -sv->b) return {1, sv->a};
  if (is(*sv, 0, 1, 0) && su->e == 1 && su->a == -su->b) return {2, su->a};
  if (is(*su, -1, 1, -1) && is(*sv, 0, -1, 0)) return {3, 0};
  if (is(*su, 1, -1, 1) && is(*sv, 0, 1, 0)) return {4, 0};
  if (is(*su, 0, 1, -2) && is(*sv, 1, -1, -1)) return {5, 0};
  if (is(*su, -2, 1, 0) && is(*sv, -1, -1, 1)) return {6, 0};
  if (is(*su, 0, 1, 0) && is(*sv, 1, -1, 1)) return {7, 0};
  if (is(*su, 0, -1, 0) && is(*sv, -1, -1, -1)) return {8, 0};
  return {};
}

// the displayed family members, parameters in [-bound, bound], deduplicated
inline std::vector<std::pair<FreeWord, FreeWord>> verbal_family_instances(long long bound) {
  std::vector<std::pair<FreeWord, FreeWord>> v;
  for (long long g = -bound; g <= bound; ++g) v.push_back({shape_word(0, 1, 0), shape_word(g, 1, -g)});
  for (long long a = -bound; a <= bound; ++a) v.push_back({shape_word(a, 1, -a), shape_word(0, 1, 0)});
  v.push_back({shape_word(-1, 1, -1), shape_word(0, -1, 0)});
  v.push_back({shape_word(1, -1, 1), shape_word(0, 1, 0)});
  v.push_back({shape_word(0, 1, -2), shape_word(1, -1, -1)});
  v.push_back({shape_word(-2, 1, 0), shape_word(-1, -1, 1)});
  v.push_back({shape_word(0, 1, 0), shape_word(1, -1, 1)});
  v.push_back({shape_word(0, -1, 0), shape_word(-1, -1, -1)});
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// every shape-admissible pair with exponents in [-bound, bound] that passes, sorted
inline std::vector<std::pair<FreeWord, FreeWord>> enumerate_verbal_biracks(long long bound) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  std::vector<FreeWord> shapes;
  for (long long a = -bound; a <= bound; ++a)
    for (int e : {-1, 1})
      for (long long b = -bound; b <= bound; ++b) shapes.push_back(shape_word(a, e, b));
  std::vector<std::pair<FreeWord, FreeWord>> out;
  for (const auto& u : shapes)
    for (const auto& v : shapes)
      if (is_verbal_birack(u, v)) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

inline Elem evaluate_word(const FreeWord& w, const FiniteGroup& G, const std::map<int, Elem>& assignment) {
  Elem r = G.e();
  for (const auto& s : w.syllables()) {
    auto it = assignment.find(s.letter);
    if (it == assignment.end()) throw DomainError("word letter has no assigned group element");
    r = G.mul(r, G.pow(it->second, s.exp));
  }
  return r;
}

inline Table verbal_table(const FreeWord& w, const FiniteGroup& G) {
  return Table::generate(G.order(), [&](Elem x, Elem y) { return evaluate_word(w, G, {{0, x}, {1, y}}); });
}

inline FiniteQuandle verbal_quandle(const FreeWord& w, const FiniteGroup& G) { return FiniteQuandle(verbal_table(w, G)); }

// over from u, under from v
inline FiniteBiquandle verbal_biquandle(const FreeWord& u, const FreeWord& v, const FiniteGroup& G) {
  return FiniteBiquandle(verbal_table(v, G), verbal_table(u, G));
}

// concrete sanity layer: tables from (u, v) pass the biquandle axioms on each group
inline AxiomReport dynamic_birack_check(const FreeWord& u, const FreeWord& v, const std::vector<FiniteGroup>& groups) {
  AxiomReport rep;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    AxiomReport r = check_biquandle(verbal_table(v, groups[i]), verbal_table(u, groups[i]));
    for (const auto& viol : r.violations) {
      auto w = viol.witness;
      w.insert(w.begin(), static_cast<long long>(i));
      rep.add(viol.axiom, w);
    }
  }
  return rep;
}

}  // namespace bqk
