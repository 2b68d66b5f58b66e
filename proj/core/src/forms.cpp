#include "plumb/forms.hpp"

#include <array>
#include <set>
#include <sstream>

#include "plumb/error.hpp"
#include "plumb/linalg.hpp"

namespace plumb {

SymmetricForm::SymmetricForm(IntMatrix m) : entries(std::move(m)) {
  if (entries.rows() != entries.cols()) {
    throw error("symmetric form: not square");
  }
  if (!entries.is_symmetric()) throw error("symmetric form: not symmetric");
}

SeifertMatrix::SeifertMatrix(IntMatrix m) : entries(std::move(m)) {
  if (entries.rows() != entries.cols()) {
    throw error("seifert matrix: not square");
  }
}

Inertia inertia(const SymmetricForm& s) { return inertia(s.entries); }

int signature(const SymmetricForm& s) { return inertia(s).signature(); }

namespace {

SymmetricForm forest_form(const Forest& f, const mpz_class& diag) {
  int n = f.vertex_count();
  IntMatrix m(n, n);
  int offset = 0;
  for (const Tree& t : f.components) {
    validate_tree(t);
    for (int i = 0; i < t.vertex_count; ++i) m(offset + i, offset + i) = diag;
    for (auto [u, v] : t.edges) {
      m(offset + u, offset + v) = 1;
      m(offset + v, offset + u) = 1;
    }
    offset += t.vertex_count;
  }
  return SymmetricForm(std::move(m));
}

}  // namespace

SymmetricForm symmetrized_form(const Forest& f) { return forest_form(f, 2); }

SymmetricForm symmetrized_form(const Tree& t) {
  return symmetrized_form(Forest{{t}});
}

SymmetricForm coxeter_form(const Forest& f) { return forest_form(f, -2); }

SymmetricForm coxeter_form(const Tree& t) { return coxeter_form(Forest{{t}}); }

SeifertMatrix seifert_matrix(const Forest& f) {
  int n = f.vertex_count();
  IntMatrix m(n, n);
  int offset = 0;
  for (const Tree& t : f.components) {
    validate_tree(t);
    for (int i = 0; i < t.vertex_count; ++i) m(offset + i, offset + i) = 1;
    // Orient edges away from the component's vertex 0.
    auto adj = adjacency(t);
    std::vector<int> parent(static_cast<size_t>(t.vertex_count), -2);
    if (t.vertex_count > 0) {
      std::vector<int> queue{0};
      parent[0] = -1;
      for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : adj[static_cast<size_t>(u)]) {
          if (parent[static_cast<size_t>(w)] == -2) {
            parent[static_cast<size_t>(w)] = u;
            queue.push_back(w);
          }
        }
      }
    }
    for (auto [u, v] : t.edges) {
      int child = parent[static_cast<size_t>(v)] == u ? v : u;
      int par = child == v ? u : v;
      m(offset + par, offset + child) = 1;
    }
    offset += t.vertex_count;
  }
  return SeifertMatrix(std::move(m));
}

SeifertMatrix seifert_matrix(const Tree& t) {
  return seifert_matrix(Forest{{t}});
}

SeifertMatrix upper_seifert_lift(const SymmetricForm& s) {
  const int n = s.dimension();
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    if (s.entries(i, i) % 2 != 0) {
      throw error("upper_seifert_lift: odd diagonal entry");
    }
    a(i, i) = s.entries(i, i) / 2;
    for (int j = i + 1; j < n; ++j) a(i, j) = s.entries(i, j);
  }
  return SeifertMatrix(std::move(a));
}

SpiralBlocks spiral_blocks(int n) {
  if (n < 1) throw error("spiral_blocks: need n >= 1");
  SpiralBlocks blocks{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n)};
  for (int i = 0; i < n; ++i) {
    blocks.a(i, i) = 2;
    blocks.b(i, i) = 1;
    if (i + 1 < n) blocks.b(i, i + 1) = 2;
    if (i + 2 < n) blocks.b(i, i + 2) = 1;
    blocks.d(i, i) = 2;
    if (i + 1 < n) {
      mpz_class off = (i == 0) ? 1 : 2;
      blocks.d(i, i + 1) = off;
      blocks.d(i + 1, i) = off;
    }
  }
  return blocks;
}

SymmetricForm spiral_form(int n) {
  SpiralBlocks blocks = spiral_blocks(n);
  IntMatrix s(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s(i, j) = blocks.a(i, j);
      s(i, n + j) = blocks.b(i, j);
      s(n + i, j) = blocks.b(j, i);
      s(n + i, n + j) = blocks.d(i, j);
    }
  }
  return SymmetricForm(std::move(s));
}

DivideCombinatorics parse_divide(const std::string& text) {
  std::istringstream in(text);
  DivideCombinatorics dc;
  bool have_dp = false, have_faces = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&]() -> error {
      return error("divide parse: malformed line " + std::to_string(lineno) +
                   ": '" + line + "'");
    };
    if (kind == "dp") {
      if (!(ls >> dc.double_points) || dc.double_points < 0) throw fail();
      have_dp = true;
    } else if (kind == "faces") {
      if (!(ls >> dc.inner_faces) || dc.inner_faces < 0) throw fail();
      have_faces = true;
    } else if (kind == "ff" || kind == "df") {
      int a, b, mult;
      if (!(ls >> a >> b >> mult)) throw fail();
      if (kind == "ff") {
        dc.face_face.push_back({a, b, mult});
      } else {
        dc.dp_face.push_back({a, b, mult});
      }
    } else {
      throw fail();
    }
    std::string extra;
    if (ls >> extra) throw fail();
  }
  if (!have_dp || !have_faces) {
    throw error("divide parse: missing dp or faces section");
  }
  return dc;
}

SymmetricForm divide_form(const DivideCombinatorics& dc) {
  if (dc.double_points < 0 || dc.inner_faces < 0) {
    throw error("divide_form: negative count");
  }
  const int d = dc.double_points;
  const int dim = d + dc.inner_faces;
  IntMatrix s(dim, dim);
  for (int i = 0; i < dim; ++i) s(i, i) = 2;
  std::set<std::pair<int, int>> declared;
  auto set_entry = [&](int i, int j, int mult, const char* what) {
    if (mult < 0) {
      throw error(std::string("divide_form: negative multiplicity on ") + what);
    }
    auto key = std::minmax(i, j);
    if (!declared.insert(key).second) {
      throw error(std::string("divide_form: duplicate adjacency on ") + what);
    }
    s(i, j) = mult;
    s(j, i) = mult;
  };
  for (auto [i, j, mult] : dc.face_face) {
    if (i < 0 || j < 0 || i >= dc.inner_faces || j >= dc.inner_faces || i == j) {
      throw error("divide_form: bad face pair");
    }
    set_entry(d + i, d + j, mult, "faces");
  }
  for (auto [k, j, mult] : dc.dp_face) {
    if (k < 0 || j < 0 || k >= d || j >= dc.inner_faces) {
      throw error("divide_form: bad double-point/face pair");
    }
    set_entry(k, d + j, mult, "double point/face");
  }
  return SymmetricForm(std::move(s));
}

SymmetricForm plumb_band(const SymmetricForm& s,
                         const std::vector<mpz_class>& coupling,
                         const mpz_class& self_pairing) {
  const int n = s.dimension();
  if (static_cast<int>(coupling.size()) != n) {
    throw error("plumb_band: coupling length mismatch");
  }
  IntMatrix out(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = s.entries(i, j);
    out(i, n) = coupling[static_cast<size_t>(i)];
    out(n, i) = coupling[static_cast<size_t>(i)];
  }
  out(n, n) = self_pairing;
  return SymmetricForm(std::move(out));
}

SymmetricForm plumb_trefoil(const SymmetricForm& s,
                            const std::vector<mpz_class>& coupling) {
  SymmetricForm once = plumb_band(s, coupling);
  std::vector<mpz_class> second(static_cast<size_t>(once.dimension()));
  second.back() = 1;
  return plumb_band(once, second);
}

SymmetricForm example1_form() {
  IntMatrix m(4, 4);
  const int rows[4][4] = {
      {2, 1, 3, 2}, {1, 2, 2, 3}, {3, 2, 2, 4}, {2, 3, 4, 2}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  }
  return SymmetricForm(std::move(m));
}

}  // namespace plumb
