#pragma once
// Brute-force reference code for the unit tests. Works on plain vectors and
// avoids the library's search and propagation paths.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline bool is_quandle(const Rows& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    if (t[a][a] != a) return false;
  for (int b = 0; b < n; ++b) {
    std::vector<int> seen(n, 0);
    for (int a = 0; a < n; ++a)
      if (seen[t[a][b]]++) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
  return true;
}

// every n x n table with entries < n, filtered
inline std::vector<Rows> all_quandles(int n) {
  std::vector<Rows> out;
  const int cells = n * n;
  std::vector<int> v(cells, 0);
  while (true) {
    Rows t(n, std::vector<int>(n));
    for (int i = 0; i < cells; ++i) t[i / n][i % n] = v[i];
    if (is_quandle(t)) out.push_back(t);
    int i = cells - 1;
    while (i >= 0 && ++v[i] == n) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// permutations f with f(t(a,b)) = t(f a, f b) for every table given
inline std::vector<std::vector<int>> automorphisms(const std::vector<Rows>& tables) {
  const int n = static_cast<int>(tables.at(0).size());
  std::vector<std::vector<int>> out;
  for (const auto& f : all_perms(n)) {
    bool ok = true;
    for (const auto& t : tables)
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) ok = f[t[a][b]] == t[f[a]][f[b]];
    if (ok) out.push_back(f);
  }
  return out;
}

inline std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

// beta tuples on the trivial quandle of order n, generate-and-filter over (n!)^n
inline std::size_t count_trivial_structures(int n) {
  auto perms = all_perms(n);
  const std::size_t P = perms.size();
  std::vector<std::size_t> idx(n, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<const std::vector<int>*> b(n);
    for (int y = 0; y < n; ++y) b[y] = &perms[idx[y]];
    bool ok = true;
    std::vector<int> diag(n, 0);
    for (int y = 0; y < n && ok; ++y) ok = !diag[(*b[y])[y]]++;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = compose(*b[(*b[y])[x]], *b[y]) == compose(*b[(*b[x])[y]], *b[x]);
    if (ok) ++count;
    int i = n - 1;
    while (i >= 0 && ++idx[i] == P) idx[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

// ---------------------------------------------------------------- diagrams

struct Crossing {
  char kind;  // 'X' or 'V' or '='
  int sign;
  std::vector<std::string> arcs;
};

inline std::vector<Crossing> read_items(const std::string& text) {
  std::vector<Crossing> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    Crossing c{tok[0][0], 0, {}};
    std::size_t from = 1;
    if (c.kind == 'X') {
      c.sign = tok[1] == "+" ? 1 : -1;
      from = 2;
    }
    c.arcs.assign(tok.begin() + static_cast<long>(from), tok.end());
    out.push_back(c);
  }
  return out;
}

// count labelings by brute force. Relations with S(x,y) = (over[y][x], under[x][y]):
// positive S(in_under, out_over) = (in_over, out_under); negative S(out_under, in_over) = (out_over, in_under)
inline unsigned long long count_colorings(const std::string& text, const Rows& under, const Rows& over) {
  auto items = read_items(text);
  std::map<std::string, int> id;
  for (const auto& c : items)
    for (const auto& a : c.arcs) id.emplace(a, static_cast<int>(id.size()));
  const int n = static_cast<int>(under.size()), arcs = static_cast<int>(id.size());
  std::vector<int> col(arcs, 0);
  unsigned long long count = 0;
  auto S = [&](int x, int y) { return std::pair<int, int>{over[y][x], under[x][y]}; };
  while (true) {
    bool ok = true;
    for (const auto& c : items) {
      std::vector<int> v;
      for (const auto& a : c.arcs) v.push_back(col[id[a]]);
      if (c.kind == '=') ok = v[0] == v[1];
      else if (c.kind == 'V') ok = v[0] == v[2] && v[1] == v[3];
      else if (c.sign > 0) ok = S(v[0], v[3]) == std::pair<int, int>{v[1], v[2]};
      else ok = S(v[2], v[1]) == std::pair<int, int>{v[3], v[0]};
      if (!ok) break;
    }
    if (ok) ++count;
    int i = arcs - 1;
    while (i >= 0 && ++col[i] == n) col[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

// Closure of a braid word on `strands` strands. Letter +i / -i is sigma_i^{+-1}:
// the strands at positions i-1 and i swap, the left one passing over for +i.
// Letter 'v' with index i (encoded as 1000+i) is a virtual crossing.
inline std::string braid_closure(int strands, const std::vector<int>& word) {
  std::vector<std::string> cur(strands);
  int fresh = 0;
  auto name = [&]() { return "s" + std::to_string(fresh++); };
  for (auto& c : cur) c = name();
  const std::vector<std::string> start = cur;
  std::ostringstream o;
  for (int letter : word) {
    bool virt = letter > 900;
    int i = virt ? letter - 1000 : (letter > 0 ? letter : -letter);
    std::string l = cur[i - 1], r = cur[i], l2 = name(), r2 = name();
    // l2 continues l (now at position i), r2 continues r (now at i-1)
    if (virt) o << "V " << l << ' ' << r << ' ' << l2 << ' ' << r2 << '\n';
    else if (letter > 0) o << "X + " << r << ' ' << l << ' ' << r2 << ' ' << l2 << '\n';
    else o << "X - " << l << ' ' << r << ' ' << l2 << ' ' << r2 << '\n';
    cur[i - 1] = r2;
    cur[i] = l2;
  }
  for (int k = 0; k < strands; ++k) o << "= " << cur[k] << ' ' << start[k] << '\n';
  return o.str();
}

}  // namespace oracle
