#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace bqk {

// n x n operation table, row-major: at(a, b) = a o b
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), d_(n * n, fill) {}

  template <class F>
  static Table generate(std::size_t n, F&& f) {
    Table t(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.d_[a * n + b] = static_cast<Elem>(f(static_cast<Elem>(a), static_cast<Elem>(b)));
    return t;
  }

  // rows must be square with entries in range; anything else is malformed
  static Table from_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t n = rows.size();
    if (n == 0) throw MalformedInput("empty table");
    Table t(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n) throw MalformedInput("table is not square");
      for (std::size_t b = 0; b < n; ++b) {
        long long v = rows[a][b];
        if (v < 0 || v >= static_cast<long long>(n))
          throw MalformedInput("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        t.d_[a * n + b] = static_cast<Elem>(v);
      }
    }
    return t;
  }

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem a, Elem b) const { return d_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem& at(Elem a, Elem b) { return d_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<Elem>& data() const noexcept { return d_; }

  std::vector<std::vector<long long>> rows() const {
    std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) r[a][b] = d_[a * n_ + b];
    return r;
  }

  // column b as a map a -> a o b; caller checks bijectivity
  std::vector<Elem> column(Elem b) const {
    std::vector<Elem> c(n_);
    for (std::size_t a = 0; a < n_; ++a) c[a] = d_[a * n_ + b];
    return c;
  }
  bool column_is_bijective(Elem b) const {
    std::vector<char> seen(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      Elem v = d_[a * n_ + b];
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
  // inv(c, b) = the a with a o b = c; only valid when every column is a bijection
  Table column_inverse() const {
    Table t(n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t.d_[d_[a * n_ + b] * n_ + b] = static_cast<Elem>(a);
    return t;
  }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> d_;
};

// Relabel a table along a bijection p: result(p(a), p(b)) = p(t(a, b)).
inline Table transport(const Table& t, const Permutation& p) {
  Table r(t.size());
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      r.at(p(static_cast<Elem>(a)), p(static_cast<Elem>(b))) = p(t(static_cast<Elem>(a), static_cast<Elem>(b)));
  return r;
}

inline bool preserves(const Table& t, const Permutation& p) {
  std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p(t(static_cast<Elem>(a), static_cast<Elem>(b))) != t(p(static_cast<Elem>(a)), p(static_cast<Elem>(b)))) return false;
  return true;
}

}  // namespace bqk
