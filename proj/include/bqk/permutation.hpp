#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace bqk {

using Elem = std::int32_t;

// A bijection of {0..n-1}. Composition follows functions: (g*f)(x) = g(f(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Elem> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (Elem v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
        throw DomainError("not a permutation");
      seen[v] = 1;
    }
  }
  static Permutation identity(std::size_t n) {
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>(i);
    return Permutation(std::move(v), Unchecked{});
  }
  // caller guarantees bijectivity
  static Permutation trusted(std::vector<Elem> images) {
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t degree() const noexcept { return img_.size(); }
  Elem operator()(Elem x) const { return img_[x]; }
  const std::vector<Elem>& images() const noexcept { return img_; }

  Permutation inverse() const {
    std::vector<Elem> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<Elem>(i);
    return Permutation(std::move(v), Unchecked{});
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<Elem>(i)) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& g, const Permutation& f) {
    std::vector<Elem> v(f.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.img_[f.img_[i]];
    return Permutation(std::move(v), Unchecked{});
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

  // cycle notation on 0-based points, "()" for identity
  std::string cycles() const {
    std::string out;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<Elem>(i)) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) out += ',';
        out += std::to_string(j);
        first = false;
        j = img_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Elem> v, Unchecked) : img_(std::move(v)) {}
  std::vector<Elem> img_;
};

inline Permutation conjugate(const Permutation& g, const Permutation& f) { return g * f * g.inverse(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Concrete permutation group: generators plus the explicit sorted element list.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  static PermutationGroup generated_by(std::vector<Permutation> gens, std::size_t degree) {
    PermutationGroup g;
    g.degree_ = degree;
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& p : frontier)
        for (const auto& s : gens) {
          Permutation q = s * p;
          if (seen.insert(q).second) next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    g.elements_.assign(seen.begin(), seen.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    std::vector<Permutation> kept;
    for (auto& s : gens)
      if (!s.is_identity()) kept.push_back(std::move(s));
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    g.gens_ = std::move(kept);
    return g;
  }

  // Elements already known to form a group (callers re-check with is_closed()).
  // A short generating list is picked greedily.
  static PermutationGroup from_elements(std::vector<Permutation> elems, std::size_t degree) {
    PermutationGroup g;
    g.degree_ = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.elements_ = std::move(elems);
    std::vector<Permutation> gens;
    std::set<Permutation> span{Permutation::identity(degree)};
    for (const auto& e : g.elements_) {
      if (span.count(e)) continue;
      gens.push_back(e);
      auto h = generated_by(gens, degree);
      span = std::set<Permutation>(h.elements_.begin(), h.elements_.end());
      if (span.size() == g.elements_.size()) break;
    }
    g.gens_ = std::move(gens);
    return g;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  // post-hoc group check: identity present, closed under products and inverses
  bool is_closed() const {
    if (elements_.empty() || !contains(Permutation::identity(degree_))) return false;
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const auto& b : gens_)
        if (!contains(a * b)) return false;
    }
    // the set contains <gens>; equal size means it is exactly that group
    return generated_by(gens_, degree_).order() == order();
  }

  bool same_elements(const PermutationGroup& o) const { return elements_ == o.elements_; }
  bool subset_of(const PermutationGroup& o) const {
    return std::includes(o.elements_.begin(), o.elements_.end(), elements_.begin(), elements_.end());
  }

  PermutationGroup subgroup_where(const std::function<bool(const Permutation&)>& keep) const {
    std::vector<Permutation> v;
    for (const auto& e : elements_)
      if (keep(e)) v.push_back(e);
    return from_elements(std::move(v), degree_);
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
};

}  // namespace bqk
