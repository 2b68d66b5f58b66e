#include "plumb/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "plumb/error.hpp"

namespace plumb {

void validate_tree(const Tree& t) {
  if (t.vertex_count < 0) throw error("tree: negative vertex count");
  if (static_cast<int>(t.edges.size()) != t.vertex_count - 1 &&
      !(t.vertex_count == 0 && t.edges.empty())) {
    throw error("tree: " + std::to_string(t.vertex_count) + " vertices need " +
                std::to_string(t.vertex_count - 1) + " edges, got " +
                std::to_string(t.edges.size()));
  }
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : t.edges) {
    if (u < 0 || v < 0 || u >= t.vertex_count || v >= t.vertex_count) {
      throw error("tree: edge index out of range");
    }
    if (u == v) throw error("tree: self loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw error("tree: duplicate edge " + std::to_string(key.first) + " " +
                  std::to_string(key.second));
    }
  }
  if (t.root && (*t.root < 0 || *t.root >= t.vertex_count)) {
    throw error("tree: root out of range");
  }
  if (t.vertex_count == 0) return;
  // Edge count is right and there are no duplicates, so connectivity is the
  // remaining tree condition (it also rules out cycles).
  auto adj = adjacency(t);
  std::vector<char> visited(static_cast<size_t>(t.vertex_count), 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(u)]) {
      if (!visited[static_cast<size_t>(w)]) {
        visited[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != t.vertex_count) {
    throw error(t.edges.size() == static_cast<size_t>(t.vertex_count) - 1
                    ? "tree: disconnected (cycle elsewhere)"
                    : "tree: disconnected");
  }
}

std::vector<std::vector<int>> adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(t.vertex_count));
  for (auto [u, v] : t.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

bool is_path(const Tree& t) {
  for (const auto& nbrs : adjacency(t)) {
    if (nbrs.size() > 2) return false;
  }
  return true;
}

namespace {

// Breadth-first distances from a start vertex.
std::vector<int> bfs_depths(const std::vector<std::vector<int>>& adj,
                            int start) {
  std::vector<int> depth(adj.size(), -1);
  std::vector<int> queue{start};
  depth[static_cast<size_t>(start)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : adj[static_cast<size_t>(u)]) {
      if (depth[static_cast<size_t>(w)] < 0) {
        depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return depth;
}

}  // namespace

std::vector<int> tree_centers(const Tree& t) {
  if (t.vertex_count == 0) return {};
  if (t.vertex_count == 1) return {0};
  auto adj = adjacency(t);
  auto d0 = bfs_depths(adj, 0);
  int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_depths(adj, a);
  int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
  auto db = bfs_depths(adj, b);
  int diameter = da[static_cast<size_t>(b)];
  // Centers are the vertices in the middle of the a--b path.
  std::vector<int> centers;
  for (int v = 0; v < t.vertex_count; ++v) {
    if (da[static_cast<size_t>(v)] + db[static_cast<size_t>(v)] == diameter &&
        std::abs(da[static_cast<size_t>(v)] - db[static_cast<size_t>(v)]) <= 1) {
      centers.push_back(v);
    }
  }
  return centers;
}

namespace {

std::string code_below(const std::vector<std::vector<int>>& adj, int v,
                       int parent) {
  std::vector<std::string> child_codes;
  for (int w : adj[static_cast<size_t>(v)]) {
    if (w != parent) child_codes.push_back(code_below(adj, w, v));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const std::string& c : child_codes) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string rooted_code(const Tree& t, int r) {
  if (r < 0 || r >= t.vertex_count) throw error("rooted_code: bad root");
  return code_below(adjacency(t), r, -1);
}

std::string canonical_code(const Tree& t) {
  if (t.vertex_count == 0) return "";
  auto centers = tree_centers(t);
  std::string best = rooted_code(t, centers[0]);
  if (centers.size() == 2) {
    std::string other = rooted_code(t, centers[1]);
    if (other < best) best = other;
  }
  return best;
}

namespace {

// Root choice canonical_form and the decomposition agree on: the center
// with the lexicographically smaller rooted code.
int primary_center(const Tree& t) {
  auto centers = tree_centers(t);
  if (centers.size() == 1) return centers[0];
  return rooted_code(t, centers[1]) < rooted_code(t, centers[0]) ? centers[1]
                                                                 : centers[0];
}

void relabel_preorder(const std::vector<std::vector<int>>& adj, int v,
                      int parent, int parent_new, int& next, Tree& out) {
  int v_new = next++;
  if (parent_new >= 0) out.edges.emplace_back(parent_new, v_new);
  std::vector<std::pair<std::string, int>> children;
  for (int w : adj[static_cast<size_t>(v)]) {
    if (w != parent) children.emplace_back(code_below(adj, w, v), w);
  }
  std::sort(children.begin(), children.end());
  for (const auto& [code, w] : children) {
    relabel_preorder(adj, w, v, v_new, next, out);
  }
}

}  // namespace

Tree canonical_form(const Tree& t) {
  Tree out;
  out.vertex_count = t.vertex_count;
  if (t.vertex_count == 0) return out;
  auto adj = adjacency(t);
  int next = 0;
  relabel_preorder(adj, primary_center(t), -1, -1, next, out);
  return out;
}

Tree parse_tree(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Tree t;
  int lineno = 0;
  bool have_count = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    auto reject_trailing = [&] {
      std::string extra;
      if (ls >> extra) {
        throw error("tree parse: malformed line " + std::to_string(lineno) +
                    ": '" + line + "'");
      }
    };
    if (!have_count) {
      try {
        t.vertex_count = std::stoi(first);
      } catch (const std::exception&) {
        throw error("tree parse: malformed line 1: '" + line + "'");
      }
      reject_trailing();
      have_count = true;
      continue;
    }
    if (first == "root") {
      int r;
      if (!(ls >> r)) {
        throw error("tree parse: malformed root line: '" + line + "'");
      }
      reject_trailing();
      if (r < 0 || r >= t.vertex_count) {
        throw error("tree parse: root index out of range");
      }
      t.root = r;
      continue;
    }
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw error("tree parse: malformed line " + std::to_string(lineno) +
                  ": '" + line + "'");
    }
    if (!(ls >> v)) {
      throw error("tree parse: malformed line " + std::to_string(lineno) +
                  ": '" + line + "'");
    }
    reject_trailing();
    if (u < 0 || v < 0 || u >= t.vertex_count || v >= t.vertex_count) {
      throw error("tree parse: edge index out of range on line " +
                  std::to_string(lineno));
    }
    if (u >= v) {
      throw error("tree parse: edges must satisfy u < v, got line " +
                  std::to_string(lineno));
    }
    t.edges.emplace_back(u, v);
  }
  if (!have_count) throw error("tree parse: empty input");
  validate_tree(t);  // reports cycles, disconnectedness, duplicates
  return t;
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  out << t.vertex_count << "\n";
  if (t.root) out << "root " << *t.root << "\n";
  for (auto [u, v] : t.edges) out << u << " " << v << "\n";
  return out.str();
}

namespace {

// Rooted trees as depth sequences in preorder, lexicographically decreasing,
// starting from the path.  Each canonical sequence appears exactly once per
// rooted isomorphism class.
class LevelSequences {
 public:
  explicit LevelSequences(int n) : levels_(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) levels_[static_cast<size_t>(i)] = i;
    done_ = (n == 0);
  }

  bool done() const { return done_; }
  const std::vector<int>& current() const { return levels_; }

  void advance() {
    int p = -1;
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
      if (levels_[static_cast<size_t>(i)] >= 2) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      done_ = true;
      return;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (levels_[static_cast<size_t>(i)] == levels_[static_cast<size_t>(p)] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < static_cast<int>(levels_.size()); ++i) {
      levels_[static_cast<size_t>(i)] = levels_[static_cast<size_t>(i - (p - q))];
    }
  }

 private:
  std::vector<int> levels_;
  bool done_ = false;
};

Tree tree_from_levels(const std::vector<int>& levels) {
  Tree t;
  t.vertex_count = static_cast<int>(levels.size());
  for (int i = 1; i < t.vertex_count; ++i) {
    int parent = -1;
    for (int j = i - 1; j >= 0; --j) {
      if (levels[static_cast<size_t>(j)] == levels[static_cast<size_t>(i)] - 1) {
        parent = j;
        break;
      }
    }
    t.edges.emplace_back(parent, i);
  }
  return t;
}

}  // namespace

std::vector<Tree> enumerate_free_trees(int n) {
  std::vector<Tree> out;
  if (n < 1) return out;
  std::unordered_set<std::string> seen;
  for (LevelSequences seq(n); !seq.done(); seq.advance()) {
    Tree t = tree_from_levels(seq.current());
    if (seen.insert(canonical_code(t)).second) {
      out.push_back(canonical_form(t));
    }
  }
  return out;
}

std::vector<Tree> enumerate_planted_trees(int n) {
  std::vector<Tree> out;
  if (n < 2) return out;
  // A degree-1 root plus any rooted tree on the remaining n-1 vertices;
  // level sequences already give one representative per rooted class.
  for (LevelSequences seq(n - 1); !seq.done(); seq.advance()) {
    Tree inner = tree_from_levels(seq.current());
    Tree t;
    t.vertex_count = n;
    t.root = 0;
    t.edges.emplace_back(0, 1);
    for (auto [u, v] : inner.edges) t.edges.emplace_back(u + 1, v + 1);
    out.push_back(t);
  }
  return out;
}

namespace {

// Multisets of free trees: components non-increasing by size, and within one
// size the catalogue index never decreases.
void forests_rec(const std::vector<std::vector<Tree>>& by_size, int remaining, int max_size,
                 int min_idx, Forest& cur, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int s = std::min(remaining, max_size); s >= 1; --s) {
    const std::vector<Tree>& trees = by_size[static_cast<size_t>(s)];
    const int start = s == max_size ? min_idx : 0;
    for (int i = start; i < static_cast<int>(trees.size()); ++i) {
      cur.components.push_back(trees[static_cast<size_t>(i)]);
      forests_rec(by_size, remaining - s, s, i, cur, out);
      cur.components.pop_back();
    }
  }
}

}  // namespace

std::vector<Forest> enumerate_forests(int n) {
  if (n < 1) throw error("forest enumeration needs n >= 1");
  std::vector<std::vector<Tree>> by_size(static_cast<size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) by_size[static_cast<size_t>(s)] = enumerate_free_trees(s);
  std::vector<Forest> out;
  Forest cur;
  forests_rec(by_size, n, n, 0, cur, out);
  return out;
}

Tree subdivide(const Tree& t) {
  Tree out;
  out.vertex_count = t.vertex_count + static_cast<int>(t.edges.size());
  out.root = t.root;
  int next = t.vertex_count;
  for (auto [u, v] : t.edges) {
    out.edges.emplace_back(std::min(u, next), std::max(u, next));
    out.edges.emplace_back(std::min(v, next), std::max(v, next));
    ++next;
  }
  return out;
}

Tree slalom_transform(const Tree& t) {
  if (!t.root) throw error("slalom_transform: tree has no root");
  if (t.vertex_count < 2) throw error("slalom_transform: need >= 2 vertices");
  auto adj = adjacency(t);
  if (adj[static_cast<size_t>(*t.root)].size() != 1) {
    throw error("slalom_transform: root degree must be 1");
  }
  Tree sub = subdivide(t);
  const int r = *sub.root;
  // Drop r and its single edge (to the subdivision vertex of the root edge),
  // shifting indices above r down by one.
  Tree out;
  out.vertex_count = sub.vertex_count - 1;
  for (auto [u, v] : sub.edges) {
    if (u == r || v == r) continue;
    int uu = u > r ? u - 1 : u;
    int vv = v > r ? v - 1 : v;
    out.edges.emplace_back(std::min(uu, vv), std::max(uu, vv));
  }
  return out;
}

Tree glue(const Tree& base, int at, const Tree& attachment, int at2) {
  if (at < 0 || at >= base.vertex_count) {
    throw error("glue: index out of range in base");
  }
  if (at2 < 0 || at2 >= attachment.vertex_count) {
    throw error("glue: index out of range in attachment");
  }
  Tree out;
  out.vertex_count = base.vertex_count + attachment.vertex_count;
  out.root = base.root;
  out.edges = base.edges;
  for (auto [u, v] : attachment.edges) {
    out.edges.emplace_back(u + base.vertex_count, v + base.vertex_count);
  }
  int b = at2 + base.vertex_count;
  out.edges.emplace_back(std::min(at, b), std::max(at, b));
  return out;
}

Tree spider(const std::vector<int>& leg_lengths) {
  Tree t;
  t.vertex_count = 1;
  for (int len : leg_lengths) {
    if (len < 1) throw error("spider: leg length must be >= 1");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      int v = t.vertex_count++;
      t.edges.emplace_back(std::min(prev, v), std::max(prev, v));
      prev = v;
    }
  }
  return t;
}

std::vector<std::vector<int>> components_without(
    const Tree& t, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<size_t>(t.vertex_count), 0);
  for (int v : removed) gone[static_cast<size_t>(v)] = 1;
  auto adj = adjacency(t);
  std::vector<char> visited = gone;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < t.vertex_count; ++s) {
    if (visited[static_cast<size_t>(s)]) continue;
    std::vector<int> comp{s};
    visited[static_cast<size_t>(s)] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (int w : adj[static_cast<size_t>(comp[head])]) {
        if (!visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Tree induced(const Tree& t, const std::vector<int>& vertices) {
  std::vector<int> position(static_cast<size_t>(t.vertex_count), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    position[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
  }
  Tree out;
  out.vertex_count = static_cast<int>(vertices.size());
  for (auto [u, v] : t.edges) {
    int pu = position[static_cast<size_t>(u)];
    int pv = position[static_cast<size_t>(v)];
    if (pu >= 0 && pv >= 0) {
      out.edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
  }
  validate_tree(out);
  return out;
}

}  // namespace plumb
