#include "kron/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kron/errors.hpp"

namespace kron {
namespace {

std::string format_probability(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string header_field(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw FormatError("edge-list header: expected '" + prefix + "...', got '" +
                      token + "'");
  }
  return token.substr(prefix.size());
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw FormatError("edge-list header: bad number '" + text + "'");
}

}  // namespace

std::string vertex_to_binary(Vertex v, unsigned n) {
  std::string s(n, '0');
  for (unsigned k = 0; k < n; ++k) {
    if ((v >> k) & 1u) s[n - 1 - k] = '1';
  }
  return s;
}

Vertex vertex_from_binary(const std::string& text, unsigned n) {
  if (text.size() != n) {
    throw FormatError("vertex '" + text + "' is not " + std::to_string(n) +
                      " digits long");
  }
  Vertex v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw FormatError("vertex '" + text + "' is not a binary string");
    }
    v = (v << 1) | static_cast<Vertex>(ch - '0');
  }
  return v;
}

void write_edge_list(std::ostream& out, const SampledGraph& g) {
  const KroneckerParams& p = g.params;
  const unsigned n = p.n();
  out << "kron n=" << n << " alpha=" << format_probability(p.alpha())
      << " beta=" << format_probability(p.beta())
      << " gamma=" << format_probability(p.gamma())
      << " loops=" << (g.include_loops ? 1 : 0) << '\n';

  // Merge loops into the sorted edge sequence.
  auto edge = g.edges.begin();
  auto loop = g.loops.begin();
  while (edge != g.edges.end() || loop != g.loops.end()) {
    const bool take_loop =
        edge == g.edges.end() ||
        (loop != g.loops.end() && Edge{*loop, *loop} < *edge);
    const Edge e = take_loop ? Edge{*loop, *loop} : *edge;
    out << vertex_to_binary(e.first, n) << ' ' << vertex_to_binary(e.second, n)
        << '\n';
    if (take_loop) {
      ++loop;
    } else {
      ++edge;
    }
  }
}

SampledGraph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("edge list is empty");
  std::istringstream header(line);
  std::string magic, n_tok, a_tok, b_tok, g_tok, l_tok;
  header >> magic >> n_tok >> a_tok >> b_tok >> g_tok >> l_tok;
  if (magic != "kron" || l_tok.empty()) {
    throw FormatError("edge-list header must start with 'kron n=...'");
  }
  unsigned n = 0;
  const std::string n_text = header_field(n_tok, "n");
  auto [ptr, ec] =
      std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc{} || ptr != n_text.data() + n_text.size() || n == 0 ||
      n > 32) {
    throw FormatError("edge-list header: bad digit count '" + n_text + "'");
  }
  const double alpha = parse_double(header_field(a_tok, "alpha"));
  const double beta = parse_double(header_field(b_tok, "beta"));
  const double gamma = parse_double(header_field(g_tok, "gamma"));
  const std::string loops_text = header_field(l_tok, "loops");
  if (loops_text != "0" && loops_text != "1") {
    throw FormatError("edge-list header: loops must be 0 or 1");
  }

  SampledGraph g{KroneckerParams(alpha, beta, gamma, n), loops_text == "1",
                 {}, {}};
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string u_text, v_text, extra;
    fields >> u_text >> v_text;
    if (v_text.empty() || (fields >> extra)) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": expected two vertices");
    }
    const Vertex u = vertex_from_binary(u_text, n);
    const Vertex v = vertex_from_binary(v_text, n);
    if (u > v) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": endpoints must satisfy u <= v");
    }
    if (u == v) {
      g.loops.push_back(u);
    } else {
      g.edges.emplace_back(u, v);
    }
  }
  const std::size_t before = g.edges.size() + g.loops.size();
  normalize(g);
  if (g.edges.size() + g.loops.size() != before) {
    throw FormatError("edge list contains duplicate pairs");
  }
  if (!g.include_loops && !g.loops.empty()) {
    throw FormatError("edge list has loops but its header says loops=0");
  }
  return g;
}

}  // namespace kron
