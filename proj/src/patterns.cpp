#include "kron/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>

#include "kron/errors.hpp"
#include "kron/predict.hpp"

namespace kron {
namespace {

constexpr unsigned kMaxLabeledEdges = 20;
constexpr double kMaxExactTerms = 1e8;

unsigned parse_count(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used == text.size() && value >= 0 && value <= 1000) {
      return static_cast<unsigned>(value);
    }
  } catch (const std::exception&) {
  }
  throw FormatError("bad number '" + text + "' in " + context);
}

}  // namespace

PatternGraph::PatternGraph(unsigned vertex_count,
                           std::vector<PatternEdge> edges)
    : vertices_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count > kMaxVertices) {
    throw ParameterError("patterns are limited to " +
                         std::to_string(kMaxVertices) + " vertices");
  }
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count || v >= vertex_count) {
      throw ParameterError("pattern edge endpoint out of range");
    }
    if (u == v) throw ParameterError("pattern graphs may not contain loops");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ParameterError("pattern graphs may not contain duplicate edges");
  }
}

bool PatternGraph::has_edge(unsigned u, unsigned v) const noexcept {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), PatternEdge{u, v});
}

std::vector<unsigned> PatternGraph::degrees() const {
  std::vector<unsigned> deg(vertices_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<unsigned>> PatternGraph::adjacency() const {
  std::vector<std::vector<unsigned>> adj(vertices_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool PatternGraph::is_connected() const {
  if (vertices_ == 0) return true;
  const auto adj = adjacency();
  std::vector<bool> seen(vertices_, false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  unsigned reached = 1;
  while (!stack.empty()) {
    const unsigned v = stack.back();
    stack.pop_back();
    for (unsigned w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices_;
}

bool PatternGraph::is_tree() const {
  return vertices_ >= 1 && edge_count() + 1 == vertices_ && is_connected();
}

PatternGraph PatternGraph::relabeled(const std::vector<unsigned>& perm) const {
  std::vector<PatternEdge> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_) mapped.emplace_back(perm.at(u), perm.at(v));
  return {vertices_, std::move(mapped)};
}

PatternGraph PatternGraph::single_edge() { return {2, {{0, 1}}}; }

PatternGraph PatternGraph::star(unsigned leaves) {
  if (leaves < 1) throw ParameterError("a star needs at least one leaf");
  std::vector<PatternEdge> edges;
  for (unsigned i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return {leaves + 1, std::move(edges)};
}

PatternGraph PatternGraph::path(unsigned edge_count) {
  if (edge_count < 1) throw ParameterError("a path needs at least one edge");
  std::vector<PatternEdge> edges;
  for (unsigned i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return {edge_count + 1, std::move(edges)};
}

PatternGraph PatternGraph::cycle(unsigned length) {
  if (length < 3) throw ParameterError("a cycle needs at least 3 vertices");
  std::vector<PatternEdge> edges;
  for (unsigned i = 0; i < length; ++i) {
    edges.emplace_back(i, (i + 1) % length);
  }
  return {length, std::move(edges)};
}

PatternGraph PatternGraph::complete(unsigned vertices) {
  std::vector<PatternEdge> edges;
  for (unsigned u = 0; u < vertices; ++u) {
    for (unsigned v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return {vertices, std::move(edges)};
}

PatternGraph PatternGraph::overlapping_cycles(unsigned k, unsigned l) {
  // l = k-1 would force the two closing edges to coincide.
  if (k < 3 || l == 0 || l + 1 >= k) {
    throw ParameterError("overlapping cycles need k >= 3 and 0 < l < k-1");
  }
  // Hubs 0 and 1; three internally disjoint hub-to-hub paths.
  std::vector<PatternEdge> edges;
  unsigned next = 2;
  auto add_path = [&](unsigned length) {
    unsigned prev = 0;
    for (unsigned step = 1; step < length; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  };
  add_path(l);
  add_path(k - l);
  add_path(k - l);
  return {next, std::move(edges)};
}

PatternGraph parse_pattern(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos && text.find('\n') == std::string::npos) {
    const std::string name = text.substr(0, colon);
    if (!name.empty() &&
        name.find_first_not_of("0123456789") == std::string::npos) {
      // One-line form `v:u-v,u-v,...` as printed by describe_pattern.
      std::string rewritten = name + ' ';
      for (char ch : text.substr(colon + 1)) {
        rewritten += (ch == ',' || ch == '-') ? ' ' : ch;
      }
      return parse_pattern(rewritten + "\n");
    }
    const unsigned k = parse_count(text.substr(colon + 1), "pattern " + text);
    if (name == "star") return PatternGraph::star(k);
    if (name == "cycle") return PatternGraph::cycle(k);
    if (name == "path") return PatternGraph::path(k);
    if (name == "complete") return PatternGraph::complete(k);
    throw FormatError("unknown builtin pattern '" + name + "'");
  }
  if (text == "edge") return PatternGraph::single_edge();

  std::istringstream in(text);
  std::string token;
  if (!(in >> token)) throw FormatError("empty pattern");
  const unsigned vertices = parse_count(token, "pattern vertex count");
  std::vector<PatternGraph::PatternEdge> edges;
  std::string u_text;
  while (in >> u_text) {
    std::string v_text;
    if (!(in >> v_text)) throw FormatError("pattern edge line needs two ends");
    edges.emplace_back(parse_count(u_text, "pattern edge"),
                       parse_count(v_text, "pattern edge"));
  }
  try {
    return {vertices, std::move(edges)};
  } catch (const ParameterError& e) {
    throw FormatError(std::string("invalid pattern: ") + e.what());
  }
}

std::string describe_pattern(const PatternGraph& g) {
  const unsigned v = g.vertex_count();
  const unsigned e = g.edge_count();
  if (v >= 2 && e == v - 1) {
    if (v == 2) return "edge";
    if (isomorphic(g, PatternGraph::star(e))) return "star:" + std::to_string(e);
    if (isomorphic(g, PatternGraph::path(e))) return "path:" + std::to_string(e);
  }
  if (v >= 3 && e == v && isomorphic(g, PatternGraph::cycle(v))) {
    return "cycle:" + std::to_string(v);
  }
  if (v >= 4 && 2 * e == v * (v - 1)) return "complete:" + std::to_string(v);
  std::string out = std::to_string(v) + ":";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(g.edges()[i].first) + "-" +
           std::to_string(g.edges()[i].second);
  }
  return out;
}

PatternGraph disjoint_union(const PatternGraph& a, const PatternGraph& b) {
  std::vector<PatternGraph::PatternEdge> edges = a.edges();
  for (auto [u, v] : b.edges()) {
    edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  }
  return {a.vertex_count() + b.vertex_count(), std::move(edges)};
}

std::vector<PatternGraph> nonisomorphic_trees(unsigned vertices) {
  if (vertices < 2) throw ParameterError("trees here have >= 2 vertices");
  if (vertices > kMaxBaseValueVertices) {
    throw CapacityError("tree enumeration is limited to 10 vertices");
  }
  std::map<std::vector<PatternGraph::PatternEdge>, PatternGraph> seen;
  const unsigned len = vertices - 2;
  std::vector<unsigned> code(len, 0);
  // Walk all Pruefer sequences.
  for (;;) {
    std::vector<unsigned> degree(vertices, 1);
    for (unsigned x : code) ++degree[x];
    std::vector<PatternGraph::PatternEdge> edges;
    for (unsigned x : code) {
      unsigned leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<unsigned> last;
    for (unsigned v = 0; v < vertices; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    PatternGraph tree(vertices, std::move(edges));
    auto form = canonical_form(tree).graph;
    seen.emplace(form.edges(), form);

    unsigned pos = 0;
    while (pos < len && ++code[pos] == vertices) code[pos++] = 0;
    if (pos == len) break;
  }
  std::vector<PatternGraph> out;
  for (auto& [key, graph] : seen) out.push_back(graph);
  return out;
}

std::vector<PatternGraph> all_graphs(unsigned vertices) {
  if (vertices > 6) throw CapacityError("graph enumeration limited to 6");
  std::vector<PatternGraph::PatternEdge> slots;
  for (unsigned u = 0; u < vertices; ++u) {
    for (unsigned v = u + 1; v < vertices; ++v) slots.emplace_back(u, v);
  }
  std::map<std::vector<PatternGraph::PatternEdge>, PatternGraph> seen;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<PatternGraph::PatternEdge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) edges.push_back(slots[i]);
    }
    auto form = canonical_form(PatternGraph(vertices, std::move(edges))).graph;
    seen.emplace(form.edges(), form);
  }
  std::vector<PatternGraph> out;
  for (auto& [key, graph] : seen) out.push_back(graph);
  return out;
}

double base_value(const KroneckerParams& p, const PatternGraph& g) {
  const unsigned v = g.vertex_count();
  if (v > kMaxBaseValueVertices) {
    throw CapacityError("base_value enumerates 2^v labelings; v <= " +
                        std::to_string(kMaxBaseValueVertices) + " required");
  }
  const unsigned e = g.edge_count();
  std::vector<double> pow_a(e + 1, 1.0), pow_b(e + 1, 1.0),
      pow_g(e + 1, 1.0);
  for (unsigned i = 1; i <= e; ++i) {
    pow_a[i] = pow_a[i - 1] * p.alpha();
    pow_b[i] = pow_b[i - 1] * p.beta();
    pow_g[i] = pow_g[i - 1] * p.gamma();
  }
  double total = 0.0;
  for (VertexLabeling labels = 0; labels < (1u << v); ++labels) {
    unsigned ones = 0;
    unsigned zeros = 0;
    for (auto [x, y] : g.edges()) {
      const unsigned lx = (labels >> x) & 1u;
      const unsigned ly = (labels >> y) & 1u;
      if (lx & ly) {
        ++ones;
      } else if ((lx | ly) == 0) {
        ++zeros;
      }
    }
    total += pow_a[ones] * pow_b[e - ones - zeros] * pow_g[zeros];
  }
  return total;
}

double log_expected_copies_asymptotic(const KroneckerParams& p,
                                      const PatternGraph& g) {
  return p.n() * std::log(base_value(p, g));
}

double expected_copies_asymptotic(const KroneckerParams& p,
                                  const PatternGraph& g) {
  return std::exp(log_expected_copies_asymptotic(p, g));
}

double expected_copies_exact(const KroneckerParams& p, const PatternGraph& g) {
  const unsigned v = g.vertex_count();
  if (p.n() >= 32 ||
      std::pow(static_cast<double>(p.vertex_count()), v) > kMaxExactTerms) {
    throw CapacityError("expected_copies_exact needs (2^n)^v(G) <= 1e8");
  }
  const unsigned n = p.n();
  const auto count = static_cast<std::uint32_t>(p.vertex_count());
  std::vector<double> table((n + 1) * (n + 1));
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned c = 0; a + c <= n; ++c) {
      table[a * (n + 1) + c] = class_probability(p, {a, n - a - c, c});
    }
  }
  // Edges grouped by their later endpoint so each partial map can be
  // scored as soon as both ends are placed.
  std::vector<std::vector<unsigned>> earlier(v);
  for (auto [x, y] : g.edges()) earlier[std::max(x, y)].push_back(std::min(x, y));

  std::vector<std::uint32_t> image(v);
  std::vector<bool> used(count, false);
  std::function<double(unsigned, double)> place = [&](unsigned i,
                                                      double weight) {
    if (i == v) return weight;
    double sum = 0.0;
    for (std::uint32_t x = 0; x < count; ++x) {
      if (used[x]) continue;
      double w = weight;
      for (unsigned j : earlier[i]) {
        const PairClass cls = pair_class_bits(x, image[j], n);
        w *= table[cls.both_one * (n + 1) + cls.both_zero];
      }
      image[i] = x;
      used[x] = true;
      sum += place(i + 1, w);
      used[x] = false;
    }
    return sum;
  };
  return place(0, 1.0);
}

double star_base_value(const KroneckerParams& p, unsigned k) {
  if (k < 1) throw ParameterError("star_base_value needs k >= 1");
  return std::pow(p.alpha() + p.beta(), k) + std::pow(p.beta() + p.gamma(), k);
}

double tree_base_value(const KroneckerParams& p, unsigned e) {
  require_symmetric(p, "tree_base_value");
  if (e < 1) throw ParameterError("tree_base_value needs e >= 1");
  return 2.0 * std::pow(p.alpha() + p.beta(), e);
}

double cycle_base_value(const KroneckerParams& p, unsigned k) {
  require_symmetric(p, "cycle_base_value");
  if (k < 3) throw ParameterError("cycle_base_value needs k >= 3");
  return std::pow(p.alpha() + p.beta(), k) + std::pow(p.alpha() - p.beta(), k);
}

double overlap_cycle_base_value(const KroneckerParams& p, unsigned k,
                                unsigned l) {
  require_symmetric(p, "overlap_cycle_base_value");
  if (k < 3 || l == 0 || l >= k) {
    throw ParameterError("overlap_cycle_base_value needs 0 < l < k, k >= 3");
  }
  const double s = p.alpha() + p.beta();
  const double d = p.alpha() - p.beta();
  return 0.5 * (std::pow(s, 2 * k - l) + std::pow(s, l) * std::pow(d, 2 * k - 2 * l) +
                2.0 * std::pow(s, k - l) * std::pow(d, k));
}

EdgeLabeling edge_labeling_of(const PatternGraph& g, VertexLabeling labels) {
  EdgeLabeling out = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [x, y] = g.edges()[i];
    if (((labels >> x) ^ (labels >> y)) & 1u) out |= EdgeLabeling{1} << i;
  }
  return out;
}

std::vector<EdgeLabeling> valid_edge_labelings(const PatternGraph& g) {
  if (!g.is_connected()) {
    throw UnsupportedError(
        "valid_edge_labelings requires a connected pattern");
  }
  const unsigned e = g.edge_count();
  if (e > kMaxLabeledEdges) {
    throw CapacityError("valid_edge_labelings supports at most 20 edges");
  }
  const unsigned v = g.vertex_count();
  // Spanning tree by BFS from vertex 0; tree edges fix the vertex labels,
  // every other edge must agree with the parity they induce.
  std::vector<int> parent_edge(v, -1);
  std::vector<unsigned> order{0};
  std::vector<bool> seen(v, false);
  if (v > 0) seen[0] = true;
  std::vector<bool> is_tree_edge(e, false);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const unsigned x = order[head];
    for (unsigned i = 0; i < e; ++i) {
      const auto [a, b] = g.edges()[i];
      if (a != x && b != x) continue;
      const unsigned y = a == x ? b : a;
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = static_cast<int>(i);
      is_tree_edge[i] = true;
      order.push_back(y);
    }
  }

  std::vector<EdgeLabeling> valid;
  for (EdgeLabeling labels = 0; labels < (EdgeLabeling{1} << e); ++labels) {
    std::vector<unsigned> vertex_label(v, 0);
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
      const unsigned y = order[idx];
      const auto i = static_cast<unsigned>(parent_edge[y]);
      const auto [a, b] = g.edges()[i];
      const unsigned x = a == y ? b : a;
      vertex_label[y] = vertex_label[x] ^ ((labels >> i) & 1u);
    }
    bool ok = true;
    for (unsigned i = 0; i < e && ok; ++i) {
      if (is_tree_edge[i]) continue;
      const auto [a, b] = g.edges()[i];
      ok = (vertex_label[a] ^ vertex_label[b]) == ((labels >> i) & 1u);
    }
    if (ok) valid.push_back(labels);
  }
  return valid;
}

double edge_labeling_base_value(const KroneckerParams& p,
                                const PatternGraph& g) {
  require_symmetric(p, "edge_labeling_base_value");
  const unsigned e = g.edge_count();
  double total = 0.0;
  for (EdgeLabeling labels : valid_edge_labelings(g)) {
    const auto ones = static_cast<unsigned>(std::popcount(labels));
    total += std::pow(p.alpha(), e - ones) * std::pow(p.beta(), ones);
  }
  return 2.0 * total;
}

namespace {

std::vector<UnionPattern> compute_pair_unions(const PatternGraph& g) {
  const unsigned v = g.vertex_count();
  using EdgeSet = std::vector<PatternGraph::PatternEdge>;
  const EdgeSet& first_edges = g.edges();
  std::vector<unsigned> identity(v);
  std::iota(identity.begin(), identity.end(), 0u);

  std::map<std::pair<unsigned, EdgeSet>, UnionPattern> found;
  std::vector<unsigned> image(v);
  std::vector<bool> used(v, false);
  // Second copy: each vertex goes to an unused vertex of the first copy or
  // to the next fresh vertex, so fresh vertices appear in order.
  std::function<void(unsigned, unsigned)> extend = [&](unsigned i,
                                                       unsigned fresh) {
    if (i == v) {
      EdgeSet second;
      for (auto [x, y] : first_edges) {
        second.emplace_back(std::min(image[x], image[y]),
                            std::max(image[x], image[y]));
      }
      std::sort(second.begin(), second.end());
      if (second == first_edges) return;
      EdgeSet shared;
      std::set_intersection(first_edges.begin(), first_edges.end(),
                            second.begin(), second.end(),
                            std::back_inserter(shared));
      if (shared.empty()) return;
      EdgeSet all;
      std::set_union(first_edges.begin(), first_edges.end(), second.begin(),
                     second.end(), std::back_inserter(all));
      PatternGraph graph(fresh, std::move(all));
      CanonicalForm form = canonical_form(graph);
      if (found.count({fresh, form.graph.edges()}) != 0) return;
      UnionPattern u;
      u.first_map.resize(v);
      u.second_map.resize(v);
      for (unsigned x = 0; x < v; ++x) {
        u.first_map[x] = form.labeling[x];
        u.second_map[x] = form.labeling[image[x]];
      }
      u.graph = form.graph;
      found.emplace(std::pair{fresh, u.graph.edges()}, std::move(u));
      return;
    }
    for (unsigned target = 0; target < v; ++target) {
      if (used[target]) continue;
      used[target] = true;
      image[i] = target;
      extend(i + 1, fresh);
      used[target] = false;
    }
    image[i] = fresh;
    extend(i + 1, fresh + 1);
  };
  extend(0, v);

  std::vector<UnionPattern> out;
  for (auto& [key, u] : found) out.push_back(std::move(u));
  std::stable_sort(out.begin(), out.end(),
                   [](const UnionPattern& a, const UnionPattern& b) {
                     return a.graph.edge_count() < b.graph.edge_count();
                   });
  return out;
}

}  // namespace

std::vector<UnionPattern> enumerate_pair_unions(const PatternGraph& g) {
  if (g.vertex_count() > kMaxUnionSourceVertices) {
    throw CapacityError("enumerate_pair_unions supports v(G) <= 6");
  }
  // Certificates over parameter grids ask for the same family repeatedly.
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::vector<PatternGraph::PatternEdge>>,
                  std::vector<UnionPattern>>
      cache;
  const auto key = std::pair{g.vertex_count(), g.edges()};
  {
    const std::lock_guard lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<UnionPattern> out = compute_pair_unions(g);
  const std::lock_guard lock(mutex);
  cache.emplace(key, out);
  return out;
}

std::string to_string(CertificateVerdict verdict) {
  switch (verdict) {
    case CertificateVerdict::kPass:
      return "pass";
    case CertificateVerdict::kFail:
      return "fail";
    case CertificateVerdict::kBoundary:
      break;
  }
  return "boundary";
}

CertificateReport second_moment_certificate(const KroneckerParams& p,
                                            const PatternGraph& g) {
  CertificateReport report;
  report.pattern = g;
  report.base_value = base_value(p, g);
  report.squared_base_value = report.base_value * report.base_value;
  bool any_boundary = false;
  bool any_fail = false;
  for (UnionPattern& u : enumerate_pair_unions(g)) {
    CertificateEntry entry;
    entry.base_value = base_value(p, u.graph);
    entry.margin = report.squared_base_value - entry.base_value;
    if (std::abs(entry.margin) <= kCertificateBoundary) {
      entry.verdict = CertificateVerdict::kBoundary;
      any_boundary = true;
    } else if (entry.margin < 0.0) {
      entry.verdict = CertificateVerdict::kFail;
      any_fail = true;
    }
    entry.pattern = std::move(u);
    report.entries.push_back(std::move(entry));
  }
  report.verdict = any_fail       ? CertificateVerdict::kFail
                   : any_boundary ? CertificateVerdict::kBoundary
                                  : CertificateVerdict::kPass;
  return report;
}

std::optional<PatternGraph> identify_vertices(const PatternGraph& h,
                                              unsigned keep, unsigned drop) {
  const unsigned v = h.vertex_count();
  if (keep >= v || drop >= v || keep == drop) {
    throw ParameterError("identify_vertices needs two distinct vertices");
  }
  if (h.has_edge(keep, drop)) return std::nullopt;
  auto rename = [&](unsigned x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  std::vector<PatternGraph::PatternEdge> edges;
  for (auto [x, y] : h.edges()) {
    const unsigned a = rename(x);
    const unsigned b = rename(y);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    return std::nullopt;
  }
  return PatternGraph(v - 1, std::move(edges));
}

bool is_edge_injective_surjection(const PatternGraph& from,
                                  const PatternGraph& to,
                                  const std::vector<unsigned>& phi) {
  if (phi.size() != from.vertex_count()) return false;
  std::vector<bool> hit(to.vertex_count(), false);
  for (unsigned x : phi) {
    if (x >= to.vertex_count()) return false;
    hit[x] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  std::vector<PatternGraph::PatternEdge> images;
  for (auto [x, y] : from.edges()) {
    const unsigned a = phi[x];
    const unsigned b = phi[y];
    if (a == b || !to.has_edge(a, b)) return false;
    images.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace kron
