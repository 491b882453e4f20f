#include "tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schro {

int RootedTree::vertex_count() const {
  int n = 1;
  for (const RootedTree& c : children) n += c.vertex_count();
  return n;
}

namespace {

struct TermCursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at byte " + std::to_string(pos) + ": " + what);
  }
};

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_label(TermCursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && label_char(c.s[c.pos])) ++c.pos;
  if (c.pos == start) c.fail("expected colour label after ':'");
  return c.s.substr(start, c.pos - start);
}

void maybe_colour(TermCursor& c, RootedTree& t) {
  if (c.peek() == ':') {
    ++c.pos;
    t.colour = parse_label(c);
  }
}

RootedTree parse_term(TermCursor& c) {
  char head = c.peek();
  if (head == 'V') {
    ++c.pos;
    RootedTree t;
    maybe_colour(c, t);
    return t;
  }
  if (head == 'E') {
    ++c.pos;
    c.expect('(');
    RootedTree child = parse_term(c);
    c.expect(')');
    RootedTree t;
    t.children.push_back(std::move(child));
    maybe_colour(c, t);
    return t;
  }
  if (head == 'M') {
    ++c.pos;
    c.expect('{');
    std::vector<RootedTree> parts;
    parts.push_back(parse_term(c));
    while (c.peek() == ',') {
      ++c.pos;
      parts.push_back(parse_term(c));
    }
    c.expect('}');
    if (parts.size() < 2) c.fail("merge needs at least two components");
    // The roots of all components become one vertex.
    RootedTree t;
    for (RootedTree& p : parts) {
      if (!p.colour.empty()) {
        if (!t.colour.empty() && t.colour != p.colour)
          c.fail("conflicting root colours in merge: " + t.colour + " vs " + p.colour);
        t.colour = p.colour;
      }
      for (RootedTree& ch : p.children) t.children.push_back(std::move(ch));
    }
    return t;
  }
  c.fail("expected V, E or M");
}

}  // namespace

RootedTree parse_tree(const std::string& text) {
  TermCursor c{text};
  if (c.peek() == '\0') c.fail("empty input");
  RootedTree t = parse_term(c);
  if (c.peek() != '\0') c.fail("trailing input");
  return t;
}

namespace {

void render_term(const RootedTree& t, std::string& out) {
  if (t.children.empty()) {
    out += "V";
    if (!t.colour.empty()) out += ":" + t.colour;
    return;
  }
  if (t.children.size() == 1) {
    out += "E(";
    render_term(t.children[0], out);
    out += ")";
    if (!t.colour.empty()) out += ":" + t.colour;
    return;
  }
  // k >= 2 children render as a merge of single-edge extensions; the root
  // colour, if any, rides on the first component so the string stays inside
  // the grammar (suffixes only after V or a closing parenthesis).
  out += "M{";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += "E(";
    render_term(t.children[i], out);
    out += ")";
    if (i == 0 && !t.colour.empty()) out += ":" + t.colour;
  }
  out += "}";
}

}  // namespace

std::string render_tree(const RootedTree& t) {
  std::string out;
  render_term(t, out);
  return out;
}

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("loop edge");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it != edges.end() && *it == std::make_pair(i, j)) throw std::invalid_argument("duplicate edge");
  edges.insert(it, {i, j});
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [i, j] : edges) {
    ++d[i];
    ++d[j];
  }
  return d;
}

bool Graph::is_tree() const {
  if (n == 0 || static_cast<int>(edges.size()) != n - 1) return false;
  auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

namespace {

void number_preorder(const RootedTree& t, int parent_id, int& next_id, Graph& g) {
  int my = next_id++;
  g.colours[my] = t.colour;
  if (parent_id >= 0) g.add_edge(parent_id, my);
  for (const RootedTree& c : t.children) number_preorder(c, my, next_id, g);
}

}  // namespace

Graph tree_to_graph(const RootedTree& t) {
  Graph g;
  g.n = t.vertex_count();
  g.colours.assign(g.n, "");
  int next = 0;
  number_preorder(t, -1, next, g);
  return g;
}

namespace {

RootedTree build_rooted(const std::vector<std::vector<int>>& adj,
                        const std::vector<std::string>& colours, int v, int parent) {
  RootedTree t;
  if (!colours.empty()) t.colour = colours[v];
  for (int w : adj[v])
    if (w != parent) t.children.push_back(build_rooted(adj, colours, w, v));
  return t;
}

}  // namespace

RootedTree reroot(const Graph& g, int v) {
  if (!g.is_tree()) throw std::invalid_argument("reroot: graph is not a tree");
  if (v < 0 || v >= g.n) throw std::invalid_argument("reroot: vertex out of range");
  return build_rooted(g.adjacency(), g.colours, v, -1);
}

namespace {

// Rooted trees on k vertices, one per isomorphism class, generated in a
// deterministic order; index pairs (size, position) give the global key used
// to keep child multisets canonical (nonincreasing keys).
struct RootedEnum {
  std::vector<std::vector<RootedTree>> by_size;  // by_size[k], k <= n

  explicit RootedEnum(int n) : by_size(n + 1) {
    by_size[1] = {RootedTree{}};
    for (int s = 2; s <= n; ++s) {
      std::vector<RootedTree> acc;
      RootedTree partial;
      extend(s - 1, s - 1, static_cast<int>(by_size.size()), partial, acc);
      by_size[s] = std::move(acc);
    }
  }

  // Add children totalling `remaining` vertices, each with key <=
  // (max_size, max_idx), to `partial`.
  void extend(int remaining, int max_size, int max_idx, RootedTree& partial,
              std::vector<RootedTree>& acc) {
    if (remaining == 0) {
      acc.push_back(partial);
      return;
    }
    for (int size = std::min(remaining, max_size); size >= 1; --size) {
      int idx_cap = (size == max_size) ? std::min<int>(max_idx, static_cast<int>(by_size[size].size()))
                                       : static_cast<int>(by_size[size].size());
      for (int idx = 0; idx < idx_cap; ++idx) {
        partial.children.push_back(by_size[size][idx]);
        extend(remaining - size, size, idx + 1, partial, acc);
        partial.children.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 10");
  RootedEnum rooted(n);
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const RootedTree& t : rooted.by_size[n]) {
    Graph g = tree_to_graph(t);
    std::string key = tree_canonical_form(g);
    if (seen.insert(key).second) out.push_back(std::move(g));
  }
  return out;
}

Graph subdivide(const Graph& g, std::pair<int, int> edge, int parts) {
  if (parts < 1) throw std::invalid_argument("subdivide: parts must be >= 1");
  int a = edge.first, b = edge.second;
  if (a > b) std::swap(a, b);
  if (!g.has_edge(a, b)) throw std::invalid_argument("subdivide: edge absent");
  if (parts == 1) return g;
  Graph out;
  out.n = g.n + parts - 1;
  out.colours = g.colours;
  out.colours.resize(out.n, "");
  for (auto [i, j] : g.edges)
    if (!(i == a && j == b)) out.add_edge(i, j);
  int prev = a;
  for (int t = 0; t < parts - 1; ++t) {
    int fresh = g.n + t;
    out.add_edge(prev, fresh);
    prev = fresh;
  }
  out.add_edge(prev, b);
  return out;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Graph g;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (!have_n) {
      try {
        size_t used = 0;
        g.n = std::stoi(tok, &used);
        if (used != tok.size() || g.n < 0) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("graph parse error line " + std::to_string(lineno) +
                                    ": expected vertex count");
      }
      std::string extra;
      if (ls >> extra)
        throw std::invalid_argument("graph parse error line " + std::to_string(lineno) +
                                    ": trailing tokens after vertex count");
      g.colours.assign(g.n, "");
      have_n = true;
      continue;
    }
    int i, j;
    std::istringstream es(line);
    if (!(es >> i >> j))
      throw std::invalid_argument("graph parse error line " + std::to_string(lineno) +
                                  ": expected edge 'i j'");
    std::string extra;
    if (es >> extra)
      throw std::invalid_argument("graph parse error line " + std::to_string(lineno) +
                                  ": trailing tokens after edge");
    try {
      g.add_edge(i, j);
    } catch (const std::exception& e) {
      throw std::invalid_argument("graph parse error line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_n) throw std::invalid_argument("graph parse error: empty input");
  return g;
}

std::string render_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n << "\n";
  for (auto [i, j] : g.edges) os << i << " " << j << "\n";
  return os.str();
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> parts;
  for (int w : adj[v])
    if (w != parent) parts.push_back(ahu(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("tree_canonical_form: graph is not a tree");
  auto adj = g.adjacency();
  // Centroid(s): vertices minimizing the largest component of g - v.
  std::vector<int> size(g.n, 0);
  std::vector<int> best(g.n, 0);
  // Iterative post-order from vertex 0.
  std::vector<std::pair<int, int>> stack = {{0, -1}};
  std::vector<std::pair<int, int>> order;
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    order.push_back({v, p});
    for (int w : adj[v])
      if (w != p) stack.push_back({w, v});
  }
  for (size_t i = order.size(); i-- > 0;) {
    auto [v, p] = order[i];
    size[v] += 1;
    best[v] = std::max(best[v], g.n - size[v]);
    if (p >= 0) {
      size[p] += size[v];
      best[p] = std::max(best[p], size[v]);
    }
  }
  int m = *std::min_element(best.begin(), best.end());
  std::string result;
  for (int v = 0; v < g.n; ++v) {
    if (best[v] != m) continue;
    std::string s = ahu(adj, v, -1);
    if (result.empty() || s < result) result = s;
  }
  return result;
}

Graph petersen_graph() {
  Graph g;
  g.n = 10;
  g.colours.assign(10, "");
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g;
  g.n = n;
  g.colours.assign(n, "");
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g;
  g.n = n;
  g.colours.assign(n, "");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  Graph g;
  g.n = n;
  g.colours.assign(n, "");
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace schro
