#include "dk/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

// Rewrap validation failures from library checkers as input errors.
template <typename F>
void as_input_error(F&& f) {
  try {
    f();
  } catch (const std::logic_error& e) {
    fail(e.what());
  }
}

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::string> string_vector(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(std::string(what) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<int> subset_from_key(const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(std::stoi(piece));
    } catch (...) {
      fail("bad subset key '" + key + "'");
    }
  }
  if (out.empty()) fail("empty subset key");
  return out;
}

std::string key_of_subset(const std::vector<int>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (...) {
      fail("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  fail("expected an integer or a decimal string");
}

json ints_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

std::vector<Int> ints_from_json(const json& j) {
  if (!j.is_array()) fail("expected an array of integers");
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(int_from_json(v));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const json& j) {
  int rows, cols;
  const json* entries;
  if (j.is_array()) {
    rows = static_cast<int>(j.size());
    cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    entries = &j;
  } else {
    rows = int_field(j, "rows");
    cols = int_field(j, "cols");
    entries = &field(j, "entries");
  }
  if (rows < 0 || cols < 0) fail("matrix: negative shape");
  if (!entries->is_array() || static_cast<int>(entries->size()) != rows)
    fail("matrix: wrong number of rows");
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries->at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail("matrix: wrong row length");
    for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(row.at(c));
  }
  return m;
}

json group_to_json(const FpAbelianGroup& g) {
  return json{{"generators", g.generators}, {"relations", matrix_to_json(g.relations)}};
}

FpAbelianGroup group_from_json(const json& j) {
  int gens = int_field(j, "generators");
  IntMatrix rels = matrix_from_json(field(j, "relations"));
  if (gens < 0) fail("group: negative generator count");
  if (rels.rows() != gens) fail("group: relation rows must match generators");
  return FpAbelianGroup(gens, std::move(rels));
}

json complex_to_json(const ChainComplexFp& b) {
  json levels = json::array(), diffs = json::array();
  for (const auto& g : b.levels) levels.push_back(group_to_json(g));
  for (const auto& d : b.differentials) diffs.push_back(matrix_to_json(d.matrix));
  return json{{"truncation", b.truncation}, {"levels", levels}, {"differentials", diffs}};
}

ChainComplexFp complex_from_json(const json& j) {
  ChainComplexFp b;
  b.truncation = int_field(j, "truncation");
  const json& levels = field(j, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != b.truncation + 1)
    fail("complex: need truncation + 1 levels");
  for (const auto& g : levels) b.levels.push_back(group_from_json(g));
  const json& diffs = field(j, "differentials");
  if (!diffs.is_array() || static_cast<int>(diffs.size()) != b.truncation)
    fail("complex: need one differential per positive level");
  as_input_error([&] {
    for (int k = 1; k <= b.truncation; ++k)
      b.differentials.emplace_back(b.levels[k], b.levels[k - 1],
                                   matrix_from_json(diffs.at(k - 1)));
    check_chain_complex(b);
  });
  return b;
}

json simplicial_group_to_json(const SimplicialAbGroup& a) {
  json levels = json::array(), faces = json::array(), degens = json::array();
  for (const auto& g : a.levels) levels.push_back(group_to_json(g));
  for (int k = 1; k <= a.truncation; ++k) {
    json per = json::array();
    for (int i = 0; i <= k; ++i) per.push_back(matrix_to_json(a.face(k, i).matrix));
    faces.push_back(per);
  }
  for (int k = 0; k < a.truncation; ++k) {
    json per = json::array();
    for (int i = 0; i <= k; ++i) per.push_back(matrix_to_json(a.degen(k, i).matrix));
    degens.push_back(per);
  }
  return json{{"truncation", a.truncation},
              {"levels", levels},
              {"faces", faces},
              {"degens", degens}};
}

SimplicialAbGroup simplicial_group_from_json(const json& j) {
  SimplicialAbGroup a;
  a.truncation = int_field(j, "truncation");
  const json& levels = field(j, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != a.truncation + 1)
    fail("simplicial group: need truncation + 1 levels");
  for (const auto& g : levels) a.levels.push_back(group_from_json(g));
  const json& faces = field(j, "faces");
  const json& degens = field(j, "degens");
  if (!faces.is_array() || static_cast<int>(faces.size()) != a.truncation)
    fail("simplicial group: face table size");
  if (!degens.is_array() || static_cast<int>(degens.size()) != a.truncation)
    fail("simplicial group: degeneracy table size");
  a.faces.resize(a.truncation + 1);
  a.degens.resize(a.truncation + 1);
  as_input_error([&] {
    for (int k = 1; k <= a.truncation; ++k) {
      const json& per = faces.at(k - 1);
      if (!per.is_array() || static_cast<int>(per.size()) != k + 1)
        fail("simplicial group: need k + 1 faces at level k");
      for (int i = 0; i <= k; ++i)
        a.faces[k].emplace_back(a.levels[k], a.levels[k - 1], matrix_from_json(per.at(i)));
    }
    for (int k = 0; k < a.truncation; ++k) {
      const json& per = degens.at(k);
      if (!per.is_array() || static_cast<int>(per.size()) != k + 1)
        fail("simplicial group: need k + 1 degeneracies at level k");
      for (int i = 0; i <= k; ++i)
        a.degens[k].emplace_back(a.levels[k], a.levels[k + 1], matrix_from_json(per.at(i)));
    }
    check_simplicial_group(a);
  });
  return a;
}

SimplicialMap simplicial_map_from_json(const json& j) {
  SimplicialMap m;
  m.source = simplicial_group_from_json(field(j, "source"));
  m.target = simplicial_group_from_json(field(j, "target"));
  const json& levels = field(j, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != m.source.truncation + 1)
    fail("simplicial map: need one matrix per level");
  as_input_error([&] {
    for (int k = 0; k <= m.source.truncation; ++k)
      m.level_maps.emplace_back(m.source.levels[k], m.target.levels[k],
                                matrix_from_json(levels.at(k)));
  });
  if (!is_simplicial_map(m)) fail("simplicial map: does not commute with structure maps");
  return m;
}

json sset_to_json(const TruncSset& x) {
  int M = x.truncation();
  json labels = json::array(), face = json::array(), degen = json::array();
  for (int k = 0; k <= M; ++k) {
    json per = json::array();
    for (int i = 0; i < x.size(k); ++i) per.push_back(x.label(k, i));
    labels.push_back(per);
  }
  for (int k = 1; k <= M; ++k) {
    json per = json::array();
    for (int i = 0; i <= k; ++i) {
      json col = json::array();
      for (int s = 0; s < x.size(k); ++s) col.push_back(x.face_of(k, i, s));
      per.push_back(col);
    }
    face.push_back(per);
  }
  for (int k = 0; k < M; ++k) {
    json per = json::array();
    for (int i = 0; i <= k; ++i) {
      json col = json::array();
      for (int s = 0; s < x.size(k); ++s) col.push_back(x.degen_of(k, i, s));
      per.push_back(col);
    }
    degen.push_back(per);
  }
  json marked = json::array(), thin = json::array();
  for (int e : x.marked_edges()) marked.push_back(e);
  for (int t : x.thin_triangles()) thin.push_back(t);
  return json{{"truncation", M},    {"labels", labels},       {"face", face},
              {"degen", degen},     {"marked_edges", marked}, {"thin_triangles", thin}};
}

TruncSset sset_from_json(const json& j) {
  int M = int_field(j, "truncation");
  if (M < 0) fail("simplicial set: negative truncation");
  const json& jl = field(j, "labels");
  if (!jl.is_array() || static_cast<int>(jl.size()) != M + 1)
    fail("simplicial set: need truncation + 1 label levels");
  std::vector<std::vector<std::string>> labels;
  for (const auto& per : jl) labels.push_back(string_vector(per, "labels"));
  const json& jf = field(j, "face");
  const json& jd = field(j, "degen");
  if (!jf.is_array() || static_cast<int>(jf.size()) != M) fail("simplicial set: face table");
  if (!jd.is_array() || static_cast<int>(jd.size()) != M) fail("simplicial set: degen table");
  std::vector<std::vector<std::vector<int>>> face(M + 1), degen(M + 1);
  for (int k = 1; k <= M; ++k) {
    const json& per = jf.at(k - 1);
    if (!per.is_array() || static_cast<int>(per.size()) != k + 1)
      fail("simplicial set: need k + 1 face maps at level k");
    for (const auto& col : per) face[k].push_back(int_vector(col, "face"));
  }
  for (int k = 0; k < M; ++k) {
    const json& per = jd.at(k);
    if (!per.is_array() || static_cast<int>(per.size()) != k + 1)
      fail("simplicial set: need k + 1 degeneracies at level k");
    for (const auto& col : per) degen[k].push_back(int_vector(col, "degen"));
  }
  TruncSset x;
  as_input_error([&] {
    x = TruncSset(M, std::move(labels), std::move(face), std::move(degen));
    for (int e : int_vector(field(j, "marked_edges"), "marked_edges"))
      x.marked_edges().insert(e);
    for (int t : int_vector(field(j, "thin_triangles"), "thin_triangles"))
      x.thin_triangles().insert(t);
    check_simplicial_identities(x);
  });
  return x;
}

json sset_map_to_json(const SsetMap& f) {
  json out = json::array();
  for (const auto& level : f.level) {
    json per = json::array();
    for (int v : level) per.push_back(v);
    out.push_back(per);
  }
  return out;
}

SsetMap sset_map_from_json(const json& j) {
  if (!j.is_array()) fail("simplicial-set map: expected an array of levels");
  SsetMap f;
  for (const auto& per : j) f.level.push_back(int_vector(per, "map level"));
  return f;
}

json fibered_to_json(const FiberedSset& f) {
  return json{{"total", sset_to_json(f.total)},
              {"base", sset_to_json(f.base)},
              {"projection", sset_map_to_json(f.projection)}};
}

FiberedSset fibered_from_json(const json& j) {
  FiberedSset f;
  f.total = sset_from_json(field(j, "total"));
  f.base = sset_from_json(field(j, "base"));
  f.projection = sset_map_from_json(field(j, "projection"));
  if (!is_simplicial_map(f.total, f.base, f.projection))
    fail("fibered set: projection is not simplicial");
  return f;
}

json category_to_json(const FinCategory& c) {
  json arrows = json::array();
  for (const auto& a : c.arrows)
    arrows.push_back(json{{"src", a.src}, {"tgt", a.tgt}, {"label", a.label}});
  json after = json::array();
  for (const auto& row : c.after) {
    json per = json::array();
    for (int v : row) per.push_back(v);
    after.push_back(per);
  }
  json identity = json::array();
  for (int v : c.identity) identity.push_back(v);
  json objects = json::array();
  for (const auto& o : c.objects) objects.push_back(o);
  return json{{"objects", objects}, {"arrows", arrows}, {"identity", identity},
              {"after", after}};
}

FinCategory category_from_json(const json& j) {
  FinCategory c;
  c.objects = string_vector(field(j, "objects"), "objects");
  const json& arrows = field(j, "arrows");
  if (!arrows.is_array()) fail("category: arrows must be an array");
  for (const auto& a : arrows) {
    FinArrow arr;
    arr.src = int_field(a, "src");
    arr.tgt = int_field(a, "tgt");
    const json& l = field(a, "label");
    if (!l.is_string()) fail("category: arrow label must be a string");
    arr.label = l.get<std::string>();
    c.arrows.push_back(arr);
  }
  c.identity = int_vector(field(j, "identity"), "identity");
  const json& after = field(j, "after");
  if (!after.is_array()) fail("category: after must be an array");
  for (const auto& row : after) c.after.push_back(int_vector(row, "after row"));
  as_input_error([&] { check_fin_category(c); });
  return c;
}

json functor_to_json(const FinFunctor& f) {
  json obj = json::array(), arr = json::array();
  for (int v : f.obj) obj.push_back(v);
  for (int v : f.arr) arr.push_back(v);
  return json{{"obj", obj}, {"arr", arr}};
}

FinFunctor functor_from_json(const json& j) {
  FinFunctor f;
  f.obj = int_vector(field(j, "obj"), "obj");
  f.arr = int_vector(field(j, "arr"), "arr");
  return f;
}

CatValuedFunctor cat_valued_from_json(const json& j) {
  CatValuedFunctor f;
  f.base = category_from_json(field(j, "base"));
  const json& fibers = field(j, "fibers");
  if (!fibers.is_array()) fail("functor data: fibers must be an array");
  for (const auto& c : fibers) f.fiber.push_back(category_from_json(c));
  const json& trans = field(j, "transitions");
  if (!trans.is_array()) fail("functor data: transitions must be an array");
  for (const auto& t : trans) f.transition.push_back(functor_from_json(t));
  as_input_error([&] { check_cat_valued_functor(f); });
  return f;
}

json two_cat_to_json(const PosetEnriched2Cat& c) {
  int n = c.num_objects();
  json objects = json::array();
  for (const auto& o : c.objects) objects.push_back(o);
  json hom = json::array(), comp = json::array();
  for (int x = 0; x < n; ++x) {
    json hrow = json::array(), crow = json::array();
    for (int y = 0; y < n; ++y) {
      json labels = json::array();
      for (const auto& l : c.hom[x][y].labels) labels.push_back(l);
      json leq = json::array();
      for (const auto& r : c.hom[x][y].leq) {
        json per = json::array();
        for (bool b : r) per.push_back(b);
        leq.push_back(per);
      }
      hrow.push_back(json{{"labels", labels}, {"leq", leq}});
      json ctab = json::array();
      for (int z = 0; z < n; ++z) {
        json table = json::array();
        for (const auto& r : c.comp[x][y][z]) {
          json per = json::array();
          for (int v : r) per.push_back(v);
          table.push_back(per);
        }
        ctab.push_back(table);
      }
      crow.push_back(ctab);
    }
    hom.push_back(hrow);
    comp.push_back(crow);
  }
  json ids = json::array();
  for (int v : c.identities) ids.push_back(v);
  return json{{"objects", objects}, {"hom", hom}, {"identities", ids}, {"comp", comp}};
}

PosetEnriched2Cat two_cat_from_json(const json& j) {
  PosetEnriched2Cat c;
  c.objects = string_vector(field(j, "objects"), "objects");
  int n = static_cast<int>(c.objects.size());
  const json& hom = field(j, "hom");
  const json& comp = field(j, "comp");
  if (!hom.is_array() || static_cast<int>(hom.size()) != n) fail("two-category: hom shape");
  if (!comp.is_array() || static_cast<int>(comp.size()) != n) fail("two-category: comp shape");
  c.hom.assign(n, std::vector<HomPoset>(n));
  c.comp.assign(n, std::vector<std::vector<std::vector<std::vector<int>>>>(n));
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(hom.at(x).size()) != n || static_cast<int>(comp.at(x).size()) != n)
      fail("two-category: ragged hom/comp");
    for (int y = 0; y < n; ++y) {
      const json& h = hom.at(x).at(y);
      c.hom[x][y].labels = string_vector(field(h, "labels"), "hom labels");
      const json& leq = field(h, "leq");
      if (!leq.is_array()) fail("two-category: leq must be an array");
      for (const auto& row : leq) {
        if (!row.is_array()) fail("two-category: leq rows");
        std::vector<bool> r;
        for (const auto& b : row) {
          if (!b.is_boolean()) fail("two-category: leq entries must be booleans");
          r.push_back(b.get<bool>());
        }
        c.hom[x][y].leq.push_back(r);
      }
      const json& ctab = comp.at(x).at(y);
      if (!ctab.is_array() || static_cast<int>(ctab.size()) != n)
        fail("two-category: comp tables");
      c.comp[x][y].resize(n);
      for (int z = 0; z < n; ++z)
        for (const auto& row : ctab.at(z))
          c.comp[x][y][z].push_back(int_vector(row, "comp row"));
    }
  }
  c.identities = int_vector(field(j, "identities"), "identities");
  as_input_error([&] { check_two_category(c); });
  return c;
}

LaxCatValuedFunctor lax_cat_valued_from_json(const json& j) {
  LaxCatValuedFunctor f;
  f.base = two_cat_from_json(field(j, "two_cat"));
  const json& fibers = field(j, "fibers");
  if (!fibers.is_array()) fail("lax data: fibers must be an array");
  for (const auto& c : fibers) f.fiber.push_back(category_from_json(c));
  const json& trans = field(j, "transitions");
  int n = f.base.num_objects();
  if (!trans.is_array() || static_cast<int>(trans.size()) != n) fail("lax data: transitions shape");
  f.transition.resize(n);
  for (int x = 0; x < n; ++x) {
    if (!trans.at(x).is_array() || static_cast<int>(trans.at(x).size()) != n)
      fail("lax data: transitions shape");
    f.transition[x].resize(n);
    for (int y = 0; y < n; ++y)
      for (const auto& t : trans.at(x).at(y))
        f.transition[x][y].push_back(functor_from_json(t));
  }
  as_input_error([&] { check_lax_cat_valued_functor(f); });
  return f;
}

json poset_to_json(const FinPoset& p) {
  json labels = json::array(), leq = json::array();
  for (const auto& l : p.labels) labels.push_back(l);
  for (const auto& row : p.leq) {
    json per = json::array();
    for (bool b : row) per.push_back(b);
    leq.push_back(per);
  }
  return json{{"labels", labels}, {"leq", leq}};
}

FinPoset poset_from_json(const json& j) {
  FinPoset p;
  p.labels = string_vector(field(j, "labels"), "labels");
  const json& leq = field(j, "leq");
  if (!leq.is_array()) fail("poset: leq must be an array");
  for (const auto& row : leq) {
    if (!row.is_array()) fail("poset: leq rows");
    std::vector<bool> r;
    for (const auto& b : row) {
      if (!b.is_boolean()) fail("poset: leq entries must be booleans");
      r.push_back(b.get<bool>());
    }
    p.leq.push_back(r);
  }
  as_input_error([&] { p.validate(); });
  return p;
}

json k0_simplex_to_json(const K0Simplex& s) {
  json classes = json::object();
  for (const auto& [subset, cls] : s.classes) classes[key_of_subset(subset)] = ints_to_json(cls);
  return json{{"n", s.n}, {"classes", classes}};
}

K0Simplex k0_simplex_from_json(const json& j) {
  K0Simplex s;
  s.n = int_field(j, "n");
  const json& classes = field(j, "classes");
  if (!classes.is_object()) fail("nerve simplex: classes must be an object");
  for (auto it = classes.begin(); it != classes.end(); ++it)
    s.classes[subset_from_key(it.key())] = ints_from_json(it.value());
  return s;
}

json rank_triangle_to_json(const RankTriangle& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices) vertices.push_back(ints_to_json(v));
  json edges = json::object();
  for (const auto& [key, cls] : t.edges)
    edges[std::to_string(key.first) + "," + std::to_string(key.second)] = ints_to_json(cls);
  return json{{"n", t.n}, {"vertices", vertices}, {"edges", edges}};
}

RankTriangle rank_triangle_from_json(const json& j) {
  RankTriangle t;
  t.n = int_field(j, "n");
  const json& vertices = field(j, "vertices");
  if (!vertices.is_array()) fail("rank triangle: vertices must be an array");
  for (const auto& v : vertices) t.vertices.push_back(ints_from_json(v));
  const json& edges = field(j, "edges");
  if (!edges.is_object()) fail("rank triangle: edges must be an object");
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    std::vector<int> pair = subset_from_key(it.key());
    if (pair.size() != 2) fail("rank triangle: edge keys are 'i,j'");
    t.edges[{pair[0], pair[1]}] = ints_from_json(it.value());
  }
  return t;
}

json obligation_report_to_json(const NerveConditionReport& r) {
  auto cubes = [](const std::vector<CubeObligation>& v) {
    json out = json::array();
    for (const auto& c : v) {
      json verts = json::array();
      for (const auto& s : c.vertices) verts.push_back(s);
      out.push_back(json{{"sigma", value_string(c.sigma)}, {"vertices", verts}});
    }
    return out;
  };
  json zeros = json::array();
  for (const auto& s : r.zero_obligations) zeros.push_back(s);
  json edges = json::array();
  for (const auto& e : r.cartesian_edges)
    edges.push_back(json{{"from", e.from}, {"to", e.to}, {"via", e.via}});
  return json{{"n", r.n},
              {"zero_obligations", zeros},
              {"limit_cubes", cubes(r.limit_cubes)},
              {"bicartesian_cubes", cubes(r.bicartesian_cubes)},
              {"cartesian_edges", edges}};
}

std::string dot_of_sset(const TruncSset& x) {
  std::string out = "digraph skeleton {\n";
  for (int v = 0; v < x.size(0); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(x.label(0, v)) + "\"];\n";
  if (x.truncation() >= 1)
    for (int e : x.nondegenerate(1)) {
      out += "  v" + std::to_string(x.face_of(1, 1, e)) + " -> v" +
             std::to_string(x.face_of(1, 0, e)) + " [label=\"" + dot_escape(x.label(1, e)) +
             "\"";
      if (x.edge_marked(e)) out += ", style=bold";
      out += "];\n";
    }
  out += "}\n";
  return out;
}

std::string dot_of_poset(const FinPoset& p) {
  int n = p.size();
  std::string out = "digraph poset {\n";
  for (int v = 0; v < n; ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(p.labels[v]) + "\"];\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool covering = true;
      for (int c = 0; c < n && covering; ++c)
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) covering = false;
      if (covering) out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
    }
  out += "}\n";
  return out;
}

std::string dot_of_cube(const Cube& c, const SlicePoset& p) {
  std::string out = "digraph cube {\n";
  int total = 1 << c.dimension;
  for (int i = 0; i < total; ++i)
    out += "  v" + std::to_string(i) + " [label=\"" +
           dot_escape(p.poset.labels[c.vertices[i]]) + "\"];\n";
  for (int i = 0; i < total; ++i)
    for (int b = 0; b < c.dimension; ++b)
      if (!(i & (1 << b))) out += "  v" + std::to_string(i) + " -> v" +
                                  std::to_string(i | (1 << b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dk
