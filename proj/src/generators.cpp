#include "timeline/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace timeline {

TemporalGraph gen_random(int n, int T, double p, uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("gen_random: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<Edge>> snaps(T);
  for (auto& es : snaps)
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (coin(rng) < p) es.emplace_back(u, v);
  return TemporalGraph(n, std::move(snaps));
}

namespace {

// Misra-Gries edge coloring state. Colors run 1..palette; at_[v][c] is the
// neighbor joined to v by color c, or 0.
class EdgeColorer {
 public:
  explicit EdgeColorer(const StaticGraph& g)
      : g_(g), palette_(g.max_degree() + 1),
        at_(g.num_vertices() + 1, std::vector<Vertex>(palette_ + 1, 0)) {}

  std::vector<std::vector<Edge>> run() {
    for (const auto& e : g_.edges()) color_edge(e.u, e.v);
    std::vector<std::vector<Edge>> classes(palette_);
    for (const auto& e : g_.edges()) classes[color(e.u, e.v) - 1].push_back(e);
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    return classes;
  }

 private:
  int color(Vertex x, Vertex y) const {
    for (int c = 1; c <= palette_; ++c)
      if (at_[x][c] == y) return c;
    return 0;
  }
  int free_color(Vertex x) const {
    for (int c = 1; c <= palette_; ++c)
      if (at_[x][c] == 0) return c;
    throw std::logic_error("edge coloring: no free color");
  }
  bool is_free(Vertex x, int c) const { return at_[x][c] == 0; }
  void set(Vertex x, Vertex y, int c) {
    at_[x][c] = y;
    at_[y][c] = x;
  }
  void unset(Vertex x, Vertex y) {
    const int c = color(x, y);
    if (c == 0) return;
    at_[x][c] = 0;
    at_[y][c] = 0;
  }

  void color_edge(Vertex x, Vertex f) {
    // Maximal fan of x starting at f.
    std::vector<Vertex> fan{f};
    std::vector<char> in_fan(g_.num_vertices() + 1, 0);
    in_fan[f] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      for (Vertex w : g_.neighbors(x)) {
        if (in_fan[w]) continue;
        const int cw = color(x, w);
        if (cw != 0 && is_free(fan.back(), cw)) {
          fan.push_back(w);
          in_fan[w] = 1;
          grown = true;
          break;
        }
      }
    }
    const int c = free_color(x);
    const int d = free_color(fan.back());

    // Invert the cd-path leaving x along d.
    if (c != d) {
      std::vector<std::pair<Vertex, Vertex>> path;
      Vertex cur = x;
      int want = d;
      while (at_[cur][want] != 0) {
        const Vertex nxt = at_[cur][want];
        path.push_back({cur, nxt});
        cur = nxt;
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (auto [a, b] : path) old.push_back(color(a, b));
      for (auto [a, b] : path) unset(a, b);
      for (size_t j = 0; j < path.size(); ++j) set(path[j].first, path[j].second, old[j] == d ? c : d);
    }

    // Shortest fan prefix ending at a vertex where d is free.
    size_t w = 0;
    for (; w < fan.size(); ++w) {
      if (w > 0 && !is_free(fan[w - 1], color(x, fan[w]))) {
        w = fan.size();
        break;
      }
      if (is_free(fan[w], d)) break;
    }
    if (w == fan.size()) throw std::logic_error("edge coloring: fan rotation failed");

    std::vector<int> shifted;
    for (size_t j = 0; j < w; ++j) shifted.push_back(color(x, fan[j + 1]));
    for (size_t j = 1; j <= w; ++j) unset(x, fan[j]);
    for (size_t j = 0; j < w; ++j) set(x, fan[j], shifted[j]);
    set(x, fan[w], d);
  }

  const StaticGraph& g_;
  int palette_;
  std::vector<std::vector<Vertex>> at_;
};

void require_degree(const StaticGraph& g, int max_deg, const char* who) {
  if (g.num_vertices() < 1) throw std::invalid_argument(std::string(who) + ": empty source graph");
  if (g.max_degree() > max_deg)
    throw std::invalid_argument(std::string(who) + ": source maximum degree exceeds " +
                                std::to_string(max_deg));
}

void require_coloring(const StaticGraph& g, const Coloring& colors) {
  if (static_cast<int>(colors.size()) != g.num_vertices() + 1)
    throw std::invalid_argument("coloring: wrong length");
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (colors[v] < 0 || colors[v] > 2) throw std::invalid_argument("coloring: color out of range");
  for (const auto& e : g.edges())
    if (colors[e.u] == colors[e.v]) throw std::invalid_argument("coloring: not proper");
}

ProblemInstance make_instance(int n, std::vector<std::vector<Edge>> snaps, ProblemKind kind, int k,
                              int ell, Count t) {
  ProblemInstance inst;
  inst.graph = TemporalGraph(n, std::move(snaps));
  inst.kind = kind;
  inst.k = k;
  inst.ell = ell;
  inst.t = t;
  return inst;
}

std::vector<std::vector<Edge>> five_classes(const StaticGraph& g) {
  auto classes = vizing_edge_coloring(g);
  if (classes.size() > 5) throw std::logic_error("edge coloring used more than five colors");
  classes.resize(5);
  return classes;
}

constexpr Step kTvcBlockStart[3] = {1, 10, 19};
constexpr Step kTdsBlockStart[3] = {15, 22, 29};

// 0-based position of each edge among the incident edges of each endpoint,
// in edge-list order: slot[e] = {position at e.u, position at e.v}.
std::vector<std::pair<int, int>> incidence_slots(const StaticGraph& g) {
  std::vector<int> seen(g.num_vertices() + 1, 0);
  std::vector<std::pair<int, int>> slot;
  for (const auto& e : g.edges()) slot.push_back({seen[e.u]++, seen[e.v]++});
  return slot;
}

}  // namespace

std::vector<std::vector<Edge>> vizing_edge_coloring(const StaticGraph& g) {
  return EdgeColorer(g).run();
}

void check_3sat22(const CnfFormula& f) {
  if (f.num_vars < 1) throw std::invalid_argument("3-SAT-(2,2): no variables");
  std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
  for (const auto& cl : f.clauses) {
    if (cl.size() != 3) throw std::invalid_argument("3-SAT-(2,2): clause without exactly 3 literals");
    for (size_t a = 0; a < 3; ++a) {
      const int lit = cl[a];
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw std::invalid_argument("3-SAT-(2,2): literal out of range");
      for (size_t b = a + 1; b < 3; ++b)
        if (std::abs(cl[b]) == std::abs(lit))
          throw std::invalid_argument("3-SAT-(2,2): repeated variable in a clause");
      (lit > 0 ? pos : neg)[std::abs(lit)]++;
    }
  }
  for (int x = 1; x <= f.num_vars; ++x)
    if (pos[x] != 2 || neg[x] != 2)
      throw std::invalid_argument("3-SAT-(2,2): variable " + std::to_string(x) +
                                  " does not occur exactly twice per sign");
}

ProblemInstance reduce_3col_to_tvc(const StaticGraph& g) {
  require_degree(g, 4, "3-coloring to vertex cover");
  const auto classes = five_classes(g);
  std::vector<std::vector<Edge>> snaps(23);
  for (Step s : kTvcBlockStart)
    for (int j = 0; j < 5; ++j) snaps[s - 1 + j] = classes[j];
  return make_instance(g.num_vertices(), std::move(snaps), ProblemKind::VC, 2, 4, 0);
}

Timeline witness_3col_tvc(const StaticGraph& g, const Coloring& colors) {
  require_coloring(g, colors);
  Timeline tl;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    for (int b = 0; b < 3; ++b)
      if (b != colors[v]) tl.add(v, kTvcBlockStart[b], kTvcBlockStart[b] + 4);
  tl.normalize();
  return tl;
}

Vertex tds_vertex(int source_vertex, int role) { return 5 * (source_vertex - 1) + role + 1; }

ProblemInstance reduce_3col_to_tds(const StaticGraph& g) {
  require_degree(g, 4, "3-coloring to dominating set");
  const int n = g.num_vertices();
  const auto classes = five_classes(g);
  enum { V = 0, V1 = 1, U = 2, U1 = 3, U2 = 4 };
  std::vector<std::vector<Edge>> snaps(35);
  for (Step s = 1; s <= 14; ++s)
    for (int i = 1; i <= n; ++i) {
      snaps[s - 1].emplace_back(tds_vertex(i, V), tds_vertex(i, U));
      snaps[s - 1].emplace_back(tds_vertex(i, U1), tds_vertex(i, U2));
    }
  // Which gadget vertex plays u, u', u'' in each color block.
  const int roles[3][3] = {{U, U1, U2}, {U1, U, U2}, {U2, U1, U}};
  for (int b = 0; b < 3; ++b) {
    const Step s = kTdsBlockStart[b];
    const int ru = roles[b][0], ru1 = roles[b][1], ru2 = roles[b][2];
    for (int i = 1; i <= n; ++i)
      for (Step x : {s, s + 6}) {
        snaps[x - 1].emplace_back(tds_vertex(i, V), tds_vertex(i, V1));
        snaps[x - 1].emplace_back(tds_vertex(i, ru1), tds_vertex(i, ru2));
      }
    for (int j = 0; j < 5; ++j) {
      auto& es = snaps[s + j];  // step s + j + 1
      std::vector<char> covered(n + 1, 0);
      for (const auto& e : classes[j]) {
        es.emplace_back(tds_vertex(e.u, V), tds_vertex(e.v, V));
        covered[e.u] = covered[e.v] = 1;
      }
      for (int i = 1; i <= n; ++i) {
        es.emplace_back(tds_vertex(i, ru1), tds_vertex(i, ru2));
        if (covered[i])
          es.emplace_back(tds_vertex(i, V1), tds_vertex(i, ru));
        else
          es.emplace_back(tds_vertex(i, V), tds_vertex(i, V1));
      }
    }
  }
  return make_instance(5 * n, std::move(snaps), ProblemKind::DS, 3, 6, 0);
}

Timeline witness_3col_tds(const StaticGraph& g, const Coloring& colors) {
  require_coloring(g, colors);
  enum { V = 0, V1 = 1, U = 2, U1 = 3, U2 = 4 };
  Timeline tl;
  auto block = [&](int i, int role, Step s) { tl.add(tds_vertex(i, role), s, s + 6); };
  for (int i = 1; i <= g.num_vertices(); ++i) {
    block(i, V, 1);
    for (int b = 0; b < 3; ++b)
      if (b != colors[i]) block(i, V, kTdsBlockStart[b]);
    block(i, V1, 1);
    block(i, V1, 8);
    block(i, V1, kTdsBlockStart[colors[i]]);
    block(i, U, 8);
    block(i, U, 15);
    block(i, U, 22);
    block(i, U1, 1);
    block(i, U1, 22);
    block(i, U1, 29);
    block(i, U2, 8);
    block(i, U2, 15);
    block(i, U2, 29);
  }
  tl.normalize();
  return tl;
}

ProblemInstance reduce_ds_to_tpds(const StaticGraph& g, int k_ds) {
  if (g.num_vertices() < 1) throw std::invalid_argument("dominating set to partial: empty graph");
  if (k_ds < 0) throw std::invalid_argument("dominating set to partial: negative budget");
  std::vector<std::vector<Edge>> snaps{g.edges(), {}};
  const Count t = std::max<Count>(0, 2 * Count(g.num_vertices()) - k_ds);
  return make_instance(g.num_vertices(), std::move(snaps), ProblemKind::PDS, 1, 0, t);
}

Timeline witness_ds_tpds(const StaticGraph& g, const std::vector<Vertex>& dominating_set) {
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (Vertex v : dominating_set) in.at(v) = 1;
  Timeline tl;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) tl.add(v, in[v] ? 1 : 2, in[v] ? 1 : 2);
  tl.normalize();
  return tl;
}

Vertex imw4_color_vertex(int source_vertex, int color, int index) {
  return 16 * (source_vertex - 1) + 4 * color + index;
}

Vertex imw4_hub_vertex(int source_vertex, int index) { return 16 * (source_vertex - 1) + 12 + index; }

namespace {

Step imw4_star_step(int v, int color, int index) { return 12 * (v - 1) + 4 * color + index; }

Step imw4_edge_step(int n, int edge, int color) { return 12 * n + 3 * edge + color + 1; }

}  // namespace

ProblemInstance reduce_3col_to_tvc_imw4(const StaticGraph& g) {
  require_degree(g, 4, "3-coloring to vertex cover (imw 4)");
  const int n = g.num_vertices();
  const int m = static_cast<int>(g.edges().size());
  std::vector<std::vector<Edge>> snaps(12 * n + 3 * m);
  for (int v = 1; v <= n; ++v)
    for (int c = 0; c < 3; ++c)
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
          snaps[imw4_star_step(v, c, i) - 1].emplace_back(imw4_hub_vertex(v, i), imw4_color_vertex(v, c, j));
  const auto slot = incidence_slots(g);
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edges()[e];
    for (int c = 0; c < 3; ++c)
      snaps[imw4_edge_step(n, e, c) - 1].emplace_back(imw4_color_vertex(ed.u, c, slot[e].first + 1),
                                                      imw4_color_vertex(ed.v, c, slot[e].second + 1));
  }
  return make_instance(16 * n, std::move(snaps), ProblemKind::VC, 2, 0, 0);
}

Timeline witness_3col_tvc_imw4(const StaticGraph& g, const Coloring& colors) {
  require_coloring(g, colors);
  const int n = g.num_vertices();
  Timeline tl;
  auto at = [&](Vertex x, Step s) { tl.add(x, s, s); };
  std::vector<std::vector<int>> incident(n + 1);  // edge indices per vertex, in order
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    incident[g.edges()[e].u].push_back(e);
    incident[g.edges()[e].v].push_back(e);
  }
  for (int v = 1; v <= n; ++v) {
    const int c = colors[v];
    int other[2], o = 0;
    for (int x = 0; x < 3; ++x)
      if (x != c) other[o++] = x;
    const int alpha = other[0], beta = other[1];
    for (int i = 1; i <= 4; ++i) {
      at(imw4_color_vertex(v, c, i), imw4_star_step(v, c, 1));
      at(imw4_color_vertex(v, c, i), imw4_star_step(v, c, 2));
    }
    at(imw4_hub_vertex(v, 1), imw4_star_step(v, alpha, 1));
    at(imw4_hub_vertex(v, 1), imw4_star_step(v, beta, 1));
    at(imw4_hub_vertex(v, 2), imw4_star_step(v, alpha, 2));
    at(imw4_hub_vertex(v, 2), imw4_star_step(v, beta, 2));
    at(imw4_hub_vertex(v, 3), imw4_star_step(v, c, 3));
    at(imw4_hub_vertex(v, 3), imw4_star_step(v, alpha, 3));
    at(imw4_hub_vertex(v, 4), imw4_star_step(v, c, 4));
    at(imw4_hub_vertex(v, 4), imw4_star_step(v, beta, 4));
    for (int i = 1; i <= 4; ++i) {
      at(imw4_color_vertex(v, alpha, i), imw4_star_step(v, alpha, 4));
      at(imw4_color_vertex(v, beta, i), imw4_star_step(v, beta, 3));
    }
    // The other-colored copies also cover the edge snapshots they touch.
    for (int i = 1; i <= static_cast<int>(incident[v].size()); ++i)
      for (int x : {alpha, beta}) at(imw4_color_vertex(v, x, i), imw4_edge_step(n, incident[v][i - 1], x));
  }
  tl.normalize();
  return tl;
}

Vertex sat_variable_vertex(int variable, int copy, int role) {
  return 14 * (variable - 1) + 7 * (copy - 1) + role + 1;
}

Vertex sat_clause_vertex(int num_vars, int clause, int slot) { return 14 * num_vars + 6 * clause + slot + 1; }

namespace {

enum SatRole { kX = 0, kNotX = 1, kP = 2, kQ = 3, kR = 4, kS = 5, kT = 6 };

// Gadget vertex standing for each literal occurrence: lit_vertex[j][s].
std::vector<std::vector<Vertex>> literal_vertices(const CnfFormula& f) {
  std::vector<int> pos_seen(f.num_vars + 1, 0), neg_seen(f.num_vars + 1, 0);
  std::vector<std::vector<Vertex>> out;
  for (const auto& cl : f.clauses) {
    std::vector<Vertex> row;
    for (int lit : cl) {
      const int x = std::abs(lit);
      const int copy = lit > 0 ? ++pos_seen[x] : ++neg_seen[x];
      row.push_back(sat_variable_vertex(x, copy, lit > 0 ? kX : kNotX));
    }
    out.push_back(row);
  }
  return out;
}

void crown(std::vector<Edge>& es, int x, int excluded_role) {
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      if (a != b && a != excluded_role && b != excluded_role)
        es.emplace_back(sat_variable_vertex(x, 1, a), sat_variable_vertex(x, 2, b));
}

}  // namespace

ProblemInstance reduce_3sat22_to_tpds(const CnfFormula& f) {
  check_3sat22(f);
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  std::vector<std::vector<Edge>> snaps(6 * n + 7 * m);
  for (int x = 1; x <= n; ++x)
    for (int s = 0; s < 6; ++s) crown(snaps[6 * (x - 1) + s], x, s < 3 ? kNotX : kX);
  const auto lits = literal_vertices(f);
  for (int j = 0; j < m; ++j) {
    auto& es = snaps[6 * n + j];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) es.emplace_back(lits[j][a], lits[j][b]);
      es.emplace_back(lits[j][a], sat_clause_vertex(n, j, 2 * a));
      es.emplace_back(lits[j][a], sat_clause_vertex(n, j, 2 * a + 1));
    }
    for (int d = 0; d < 6; ++d) {
      auto& ds = snaps[6 * n + m + 6 * j + d];
      const int offset = d < 3 ? 0 : 1;  // a, b, c then a', b', c'
      ds.emplace_back(sat_clause_vertex(n, j, offset), sat_clause_vertex(n, j, 2 + offset));
      ds.emplace_back(sat_clause_vertex(n, j, offset), sat_clause_vertex(n, j, 4 + offset));
      ds.emplace_back(sat_clause_vertex(n, j, 2 + offset), sat_clause_vertex(n, j, 4 + offset));
    }
  }
  return make_instance(14 * n + 6 * m, std::move(snaps), ProblemKind::PDS, 1, 0,
                       76 * Count(n) + 21 * Count(m));
}

Timeline witness_3sat22_tpds(const CnfFormula& f, const Assignment& values) {
  check_3sat22(f);
  const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
  if (static_cast<int>(values.size()) != n + 1) throw std::invalid_argument("assignment: wrong length");
  Timeline tl;
  auto pair_at = [&](int x, int role, Step s) {
    tl.add(sat_variable_vertex(x, 1, role), s, s);
    tl.add(sat_variable_vertex(x, 2, role), s, s);
  };
  for (int x = 1; x <= n; ++x) {
    const Step base = 6 * (x - 1);
    const int order_true[6] = {kP, kQ, kR, kNotX, kS, kT};
    const int order_false[6] = {kX, kP, kQ, kR, kS, kT};
    const int* order = values[x] ? order_true : order_false;
    for (int s = 0; s < 6; ++s) pair_at(x, order[s], base + s + 1);
  }
  const auto lits = literal_vertices(f);
  for (int j = 0; j < m; ++j) {
    for (int a = 0; a < 3; ++a) {
      const int lit = f.clauses[j][a];
      if (values[std::abs(lit)] == (lit > 0)) tl.add(lits[j][a], 6 * n + j + 1, 6 * n + j + 1);
    }
    const int dummy_order[6] = {0, 2, 4, 1, 3, 5};
    for (int d = 0; d < 6; ++d) {
      const Step s = 6 * n + m + 6 * j + d + 1;
      tl.add(sat_clause_vertex(n, j, dummy_order[d]), s, s);
    }
  }
  tl.normalize();
  return tl;
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

StaticGraph parse_static_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("static graph: missing vertex count");
  int n = 0;
  {
    std::istringstream ls(lines[0]);
    if (!(ls >> n) || n < 1) throw std::invalid_argument("static graph: bad vertex count");
  }
  std::vector<Edge> edges;
  for (size_t j = 1; j < lines.size(); ++j) {
    std::istringstream ls(lines[j]);
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw std::invalid_argument("static graph: bad edge line '" + lines[j] + "'");
    edges.emplace_back(u, v);
  }
  return StaticGraph(n, std::move(edges));
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool header = false;
  int declared = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf")
        throw std::invalid_argument("dimacs: bad problem line");
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("dimacs: clause before problem line");
    for (std::istringstream rest(line); rest >> tok;) {
      const int lit = std::stoi(tok);
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) f.clauses.push_back(current);
  if (!header) throw std::invalid_argument("dimacs: missing problem line");
  if (static_cast<int>(f.clauses.size()) != declared)
    throw std::invalid_argument("dimacs: clause count differs from the problem line");
  return f;
}

}  // namespace timeline
