// Shared test-side oracles.  Everything here recomputes expectations through
// code paths disjoint from the library implementation under test (Bareiss
// determinants, plain modular arithmetic, exhaustive enumeration).
#pragma once

#include "dk/matrix.hpp"

#include <random>
#include <vector>

namespace oracle {

inline long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline dk::IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int mag) {
  dk::IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_in(rng, -mag, mag);
  return m;
}

inline dk::Int gcd_int(dk::Int a, dk::Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    dk::Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void enumerate_subsets(int n, int k, int start, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor characterization of the invariant factors,
// via Bareiss determinants only.
inline std::vector<dk::Int> invariant_factors_by_minors(const dk::IntMatrix& m) {
  std::vector<dk::Int> divisors;
  int maxk = std::min(m.rows(), m.cols());
  for (int k = 1; k <= maxk; ++k) {
    std::vector<std::vector<int>> rsets, csets;
    std::vector<int> cur;
    enumerate_subsets(m.rows(), k, 0, cur, rsets);
    enumerate_subsets(m.cols(), k, 0, cur, csets);
    dk::Int g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        dk::IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
        g = gcd_int(g, dk::determinant(sub));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<dk::Int> factors;
  dk::Int prev = 1;
  for (const auto& d : divisors) {
    factors.push_back(d / prev);
    prev = d;
  }
  return factors;
}

// A finite abelian group in fully explicit form: Z/m_1 + ... + Z/m_k with
// every m_i >= 1.  Elements are tuples reduced componentwise; all arithmetic
// is plain long long.
struct FiniteGroup {
  std::vector<long long> moduli;

  long long order() const {
    long long n = 1;
    for (long long m : moduli) n *= m;
    return n;
  }
  std::vector<long long> reduce(std::vector<long long> v) const {
    for (size_t i = 0; i < moduli.size(); ++i) {
      v[i] %= moduli[i];
      if (v[i] < 0) v[i] += moduli[i];
    }
    return v;
  }
  std::vector<std::vector<long long>> elements() const {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(moduli.size(), 0);
    for (;;) {
      out.push_back(cur);
      size_t p = 0;
      while (p < moduli.size() && cur[p] == moduli[p] - 1) cur[p++] = 0;
      if (p == moduli.size()) break;
      ++cur[p];
    }
    if (moduli.empty()) out.assign(1, {});
    return out;
  }
};

}  // namespace oracle
