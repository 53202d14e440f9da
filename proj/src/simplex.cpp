#include "dk/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dk {

MonotoneMap::MonotoneMap(int src_dim, int dst_dim, std::vector<int> values)
    : src_dim_(src_dim), dst_dim_(dst_dim), values_(std::move(values)) {
  if (src_dim_ < 0 || dst_dim_ < 0)
    throw std::invalid_argument("MonotoneMap: negative ordinal");
  if (static_cast<int>(values_.size()) != src_dim_ + 1)
    throw std::invalid_argument("MonotoneMap: value count mismatch");
  for (int i = 0; i <= src_dim_; ++i) {
    if (values_[i] < 0 || values_[i] > dst_dim_)
      throw std::invalid_argument("MonotoneMap: value out of range");
    if (i > 0 && values_[i] < values_[i - 1])
      throw std::invalid_argument("MonotoneMap: not monotone");
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::face(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face: bad index");
  std::vector<int> v(n);
  for (int t = 0; t < n; ++t) v[t] = t < i ? t : t + 1;
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap MonotoneMap::degeneracy(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("degeneracy: bad index");
  std::vector<int> v(n + 2);
  for (int t = 0; t <= n + 1; ++t) v[t] = t <= i ? t : t - 1;
  return MonotoneMap(n + 1, n, std::move(v));
}

MonotoneMap MonotoneMap::vertex(int v, int n) { return MonotoneMap(0, n, {v}); }

MonotoneMap MonotoneMap::constant(int src_dim, int dst_dim, int value) {
  return MonotoneMap(src_dim, dst_dim, std::vector<int>(src_dim + 1, value));
}

bool MonotoneMap::is_identity() const {
  if (src_dim_ != dst_dim_) return false;
  for (int i = 0; i <= src_dim_; ++i)
    if (values_[i] != i) return false;
  return true;
}

bool MonotoneMap::is_injective() const {
  for (int i = 1; i <= src_dim_; ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  int next = 0;
  for (int v : values_)
    if (v == next) ++next;
  return next == dst_dim_ + 1;
}

bool MonotoneMap::operator==(const MonotoneMap& o) const {
  return src_dim_ == o.src_dim_ && dst_dim_ == o.dst_dim_ && values_ == o.values_;
}

bool MonotoneMap::operator<(const MonotoneMap& o) const {
  if (src_dim_ != o.src_dim_) return src_dim_ < o.src_dim_;
  if (dst_dim_ != o.dst_dim_) return dst_dim_ < o.dst_dim_;
  return values_ < o.values_;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i <= src_dim_; ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << "):[" << src_dim_ << "]->[" << dst_dim_ << ']';
  return os.str();
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.dst_dim() != f.src_dim()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(g.src_dim() + 1);
  for (int i = 0; i <= g.src_dim(); ++i) v[i] = f(g(i));
  return MonotoneMap(g.src_dim(), f.dst_dim(), std::move(v));
}

EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f) {
  std::vector<int> image;
  for (int i = 0; i <= f.src_dim(); ++i)
    if (image.empty() || image.back() != f(i)) image.push_back(f(i));
  int mid = static_cast<int>(image.size()) - 1;
  std::vector<int> ev(f.src_dim() + 1);
  for (int i = 0, pos = 0; i <= f.src_dim(); ++i) {
    while (image[pos] != f(i)) ++pos;
    ev[i] = pos;
  }
  return {MonotoneMap(f.src_dim(), mid, std::move(ev)),
          MonotoneMap(mid, f.dst_dim(), std::move(image))};
}

namespace {

void enumerate(int m, int n, bool strict, std::vector<int>& cur,
               std::vector<MonotoneMap>& out) {
  if (static_cast<int>(cur.size()) == m + 1) {
    out.push_back(MonotoneMap(m, n, cur));
    return;
  }
  int lo = cur.empty() ? 0 : (strict ? cur.back() + 1 : cur.back());
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    enumerate(m, n, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> cur;
  enumerate(m, n, false, cur, out);
  return out;
}

std::vector<MonotoneMap> all_injections(int m, int n) {
  std::vector<MonotoneMap> out;
  if (m > n) return out;
  std::vector<int> cur;
  enumerate(m, n, true, cur, out);
  return out;
}

std::vector<MonotoneMap> all_surjections(int m, int n) {
  std::vector<MonotoneMap> out;
  for (const auto& f : all_monotone_maps(m, n))
    if (f.is_surjective()) out.push_back(f);
  return out;
}

MonotoneMap f_vertex(int k, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != k) throw std::invalid_argument("f_vertex: need k bits");
  std::vector<int> v(k + 1);
  v[0] = 0;  // j_0 = 1 by convention
  for (int i = 1; i <= k; ++i) v[i] = i - 1 + bits[i - 1];
  return MonotoneMap(k, k, std::move(v));
}

MonotoneMap b_vertex(int k, const std::vector<int>& bits) {
  if (k < 1) throw std::invalid_argument("b_vertex: k must be positive");
  if (static_cast<int>(bits.size()) != k) throw std::invalid_argument("b_vertex: need k bits");
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i + bits[i];
  return MonotoneMap(k - 1, k, std::move(v));
}

MonotoneMap q_vertex(int k, int j0, const std::vector<int>& bits) {
  if (j0 != 0 && j0 != 1) throw std::invalid_argument("q_vertex: j0 must be a bit");
  return j0 == 0 ? b_vertex(k, bits) : f_vertex(k, bits);
}

std::vector<std::vector<int>> all_bit_vectors(int length) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(1) << length);
  for (int mask = 0; mask < (1 << length); ++mask) {
    std::vector<int> bits(length);
    for (int i = 0; i < length; ++i) bits[i] = (mask >> (length - 1 - i)) & 1;
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace dk
