#include <algorithm>
#include <numeric>
#include <vector>

#include "kron/patterns.hpp"

namespace kron {
namespace {

using Colors = std::vector<unsigned>;
using Adjacency = std::vector<std::vector<unsigned>>;

// Re-ranks keys so that equal keys share a color and colors count the
// number of strictly smaller keys.
template <typename Key>
Colors rank_keys(const std::vector<Key>& keys) {
  std::vector<unsigned> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](unsigned x, unsigned y) { return keys[x] < keys[y]; });
  Colors colors(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i]] == keys[order[i - 1]]) {
      colors[order[i]] = colors[order[i - 1]];
    } else {
      colors[order[i]] = static_cast<unsigned>(i);
    }
  }
  return colors;
}

std::size_t cell_count(const Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Colour refinement to the coarsest equitable partition finer than the
// input.
Colors refine(const Adjacency& adj, Colors colors) {
  std::size_t cells = cell_count(colors);
  for (;;) {
    std::vector<std::vector<unsigned>> keys(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
      keys[v].push_back(colors[v]);
      std::vector<unsigned> around;
      for (unsigned w : adj[v]) around.push_back(colors[w]);
      std::sort(around.begin(), around.end());
      keys[v].insert(keys[v].end(), around.begin(), around.end());
    }
    Colors next = rank_keys(keys);
    const std::size_t next_cells = cell_count(next);
    colors = std::move(next);
    if (next_cells == cells) return colors;
    cells = next_cells;
  }
}

struct Search {
  const PatternGraph& graph;
  Adjacency adj;
  bool have_best = false;
  std::vector<PatternGraph::PatternEdge> best_code;
  Colors best_labels;

  void leaf(const Colors& labels) {
    std::vector<PatternGraph::PatternEdge> code;
    code.reserve(graph.edge_count());
    for (auto [u, v] : graph.edges()) {
      code.emplace_back(std::min(labels[u], labels[v]),
                        std::max(labels[u], labels[v]));
    }
    std::sort(code.begin(), code.end());
    if (!have_best || code < best_code) {
      have_best = true;
      best_code = std::move(code);
      best_labels = labels;
    }
  }

  void run(Colors colors) {
    colors = refine(adj, std::move(colors));
    const auto n = static_cast<unsigned>(colors.size());
    // First (lowest colour) non-singleton cell.
    std::vector<unsigned> sizes(n, 0);
    for (unsigned c : colors) ++sizes[c];
    unsigned target = n;
    for (unsigned c = 0; c < n; ++c) {
      if (sizes[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n) {
      leaf(colors);
      return;
    }
    for (unsigned v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::pair<unsigned, unsigned>> keys(n);
      for (unsigned w = 0; w < n; ++w) {
        keys[w] = {colors[w], (colors[w] == target && w != v) ? 1u : 0u};
      }
      run(rank_keys(keys));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const PatternGraph& g) {
  Search search{g, g.adjacency(), false, {}, {}};
  search.run(Colors(g.vertex_count(), 0));
  CanonicalForm form;
  form.labeling = search.best_labels;
  form.graph = g.relabeled(form.labeling);
  return form;
}

bool isomorphic(const PatternGraph& a, const PatternGraph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace kron
