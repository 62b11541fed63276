#pragma once

// Brute-force reference computations for small inputs. Nothing here calls
// into the library's algorithms; matrices are plain long long arrays.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;
using Set = std::vector<int>;

// Cofactor expansion; fine up to 6x6.
inline long long det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const long long term = a[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// gcd of all k x k minors (the k-th determinantal divisor).
inline long long determinantal_divisor(const Mat& a, std::size_t k) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  long long g = 0;
  for (const auto& rs : combinations(rows, k))
    for (const auto& cs : combinations(cols, k)) {
      Mat sub;
      for (auto r : rs) {
        std::vector<long long> row;
        for (auto c : cs) row.push_back(a[r][c]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(det(sub)));
    }
  return g;
}

// Invariant factors d_k / d_{k-1}, stopping at the rank.
inline std::vector<long long> invariant_factors(const Mat& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const long long d = determinantal_divisor(a, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline long long maximal_minor_gcd(const Mat& a) {
  return determinantal_divisor(a, a.size());
}

inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_face(const std::vector<Set>& maximal, const Set& f) {
  return std::any_of(maximal.begin(), maximal.end(),
                     [&](const Set& m) { return subset(f, m); });
}

// All subsets of {1..m} that are not faces but whose proper subsets are.
inline std::set<Set> minimal_non_faces(int m, const std::vector<Set>& maximal) {
  std::set<Set> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Set s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    if (is_face(maximal, s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      Set t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!is_face(maximal, t)) minimal = false;
    }
    if (minimal) out.insert(s);
  }
  return out;
}

inline Set image(const std::vector<int>& perm, const Set& f) {
  Set out;
  for (int v : f) out.push_back(perm[static_cast<std::size_t>(v - 1)]);
  std::sort(out.begin(), out.end());
  return out;
}

// Every permutation of {1..m} carrying one maximal-face list onto the other.
inline std::vector<std::vector<int>> isomorphisms(int m, const std::vector<Set>& a,
                                                  const std::vector<Set>& b) {
  std::set<Set> target(b.begin(), b.end());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::set<Set> moved;
    for (const auto& f : a) moved.insert(image(perm, f));
    if (moved == target) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Searches the box [-r, r]^k for y with b * y = x.
inline std::optional<std::vector<long long>> solve_in_box(const Mat& b,
                                                          const std::vector<long long>& x,
                                                          long long r) {
  const std::size_t k = b.empty() ? 0 : b[0].size();
  std::vector<long long> y(k, -r);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < k; ++j) s += b[i][j] * y[j];
      ok = s == x[i];
    }
    if (ok) return y;
    std::size_t pos = 0;
    while (pos < k && y[pos] == r) y[pos++] = -r;
    if (pos == k) return std::nullopt;
    ++y[pos];
  }
}

inline Mat multiply(const Mat& a, const Mat& b) {
  Mat c(a.size(), std::vector<long long>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Same row lattice for two full-rank n x m integer matrices whose columns
// `basis` form a unimodular block in `a`: b = delta * a with delta in GL(n, Z).
inline bool same_row_lattice(const Mat& a, const Mat& b, const std::vector<std::size_t>& basis) {
  const std::size_t n = a.size();
  Mat block(n, std::vector<long long>(n)), target(n, std::vector<long long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block[r][c] = a[r][basis[c]];
      target[r][c] = b[r][basis[c]];
    }
  const long long d = det(block);
  if (d != 1 && d != -1) return false;
  // Adjugate inverse.
  Mat inv(n, std::vector<long long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Mat minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c) continue;
        std::vector<long long> row;
        for (std::size_t j = 0; j < n; ++j)
          if (j != r) row.push_back(block[i][j]);
        minor.push_back(row);
      }
      const long long cof = ((r + c) % 2 ? -1 : 1) * det(minor);
      inv[r][c] = cof * d;  // d = +-1 so 1/d = d
    }
  const Mat delta = multiply(target, inv);
  const long long dd = det(delta);
  return (dd == 1 || dd == -1) && multiply(delta, a) == b;
}

}  // namespace oracle
