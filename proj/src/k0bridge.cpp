#include "dk/k0bridge.hpp"

#include <stdexcept>
#include <string>

namespace dk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

void validate_simplex(const ChainComplexFp& b, const K0Simplex& s) {
  if (s.n < 0 || s.n > b.truncation) fail("nerve simplex: dimension beyond truncation");
  auto subsets = nonempty_subsets(s.n);
  if (s.classes.size() != subsets.size()) fail("nerve simplex: wrong index set");
  for (const auto& sub : subsets) {
    auto it = s.classes.find(sub);
    if (it == s.classes.end()) fail("nerve simplex: subset missing");
    int k = static_cast<int>(sub.size()) - 1;
    if (static_cast<int>(it->second.size()) != b.level(k).generators)
      fail("nerve simplex: class size");
  }
}

}  // namespace

bool check_nerve_simplex(const ChainComplexFp& b, const K0Simplex& s) {
  validate_simplex(b, s);
  for (const auto& [subset, cls] : s.classes) {
    int k = static_cast<int>(subset.size()) - 1;
    if (k == 0) continue;
    std::vector<Int> lhs = b.diff(k).matrix.apply(cls);
    std::vector<Int> rhs(b.level(k - 1).generators, Int(0));
    for (int i = 0; i <= k; ++i) {
      std::vector<int> face = subset;
      face.erase(face.begin() + i);
      const std::vector<Int>& bf = s.classes.at(face);
      for (size_t r = 0; r < rhs.size(); ++r) rhs[r] += (i % 2 == 0) ? bf[r] : -bf[r];
    }
    if (!elements_equal(b.level(k - 1), lhs, rhs)) return false;
  }
  return true;
}

bool check_relative_s(const ChainComplexFp& b, const RankTriangle& t) {
  if (b.truncation < 1) fail("relative data: complex needs degrees 0 and 1");
  for (int k = 2; k <= b.truncation; ++k)
    for (int g = 0; g < b.level(k).generators; ++g) {
      std::vector<Int> e(b.level(k).generators, Int(0));
      e[g] = 1;
      if (!is_zero_element(b.level(k), e)) fail("relative data: content above degree 1");
    }
  if (t.n < 0) fail("relative data: negative dimension");
  if (static_cast<int>(t.vertices.size()) != t.n + 1) fail("relative data: vertex count");
  if (static_cast<int>(t.edges.size()) != (t.n + 1) * (t.n + 2) / 2)
    fail("relative data: edge count");
  for (int i = 0; i <= t.n; ++i) {
    if (static_cast<int>(t.vertices[i].size()) != b.level(0).generators)
      fail("relative data: vertex class size");
    for (int j = i; j <= t.n; ++j) {
      auto it = t.edges.find({i, j});
      if (it == t.edges.end()) fail("relative data: edge missing");
      if (static_cast<int>(it->second.size()) != b.level(1).generators)
        fail("relative data: edge class size");
    }
  }
  for (int i = 0; i <= t.n; ++i)
    if (!is_zero_element(b.level(1), t.edges.at({i, i}))) return false;
  for (int i = 0; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j) {
      std::vector<Int> lhs = b.diff(1).matrix.apply(t.edges.at({i, j}));
      if (!elements_equal(b.level(0), lhs, sub(t.vertices[j], t.vertices[i]))) return false;
    }
  for (int i = 0; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j)
      for (int k = j + 1; k <= t.n; ++k)
        if (!elements_equal(b.level(1), t.edges.at({i, k}),
                            add(t.edges.at({i, j}), t.edges.at({j, k}))))
          return false;
  return true;
}

K0Simplex decategorify_relative_s(const RankTriangle& t, const ChainComplexFp& b) {
  if (!check_relative_s(b, t)) fail("decategorify: relative conditions fail");
  if (b.truncation < t.n) fail("decategorify: truncation below dimension");
  K0Simplex s;
  s.n = t.n;
  for (const auto& subset : nonempty_subsets(t.n)) {
    if (subset.size() == 1)
      s.classes[subset] = t.vertices[subset[0]];
    else if (subset.size() == 2)
      s.classes[subset] = t.edges.at({subset[0], subset[1]});
    else
      s.classes[subset] =
          std::vector<Int>(b.level(static_cast<int>(subset.size()) - 1).generators, Int(0));
  }
  return s;
}

std::vector<Int> euler_totalization(const FpAbelianGroup& g, int k,
                                    const std::vector<std::vector<Int>>& cube) {
  if (k < 1) fail("euler: dimension must be at least 1");
  if (static_cast<int>(cube.size()) != (1 << k)) fail("euler: wrong number of vertices");
  std::vector<Int> acc(g.generators, Int(0));
  for (int idx = 0; idx < (1 << k); ++idx) {
    if (static_cast<int>(cube[idx].size()) != g.generators) fail("euler: class size");
    int ones = 0;
    for (int i = 0; i < k; ++i) ones += (idx >> i) & 1;
    bool positive = (k - ones) % 2 == 0;
    for (int r = 0; r < g.generators; ++r)
      acc[r] += positive ? cube[idx][r] : -cube[idx][r];
  }
  return acc;
}

}  // namespace dk
