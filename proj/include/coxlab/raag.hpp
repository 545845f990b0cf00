#ifndef COXLAB_RAAG_HPP_
#define COXLAB_RAAG_HPP_

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_product.hpp"
#include "system.hpp"
#include "word.hpp"

namespace coxlab {

  struct SimpleGraph {
    std::vector<std::string>         vertices;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int u, int v) const {
      for (auto const& [a, b] : edges) {
        if ((a == u && b == v) || (a == v && b == u)) {
          return true;
        }
      }
      return false;
    }
  };

  // Lines "vertices <name>+" and "edge <u> <v>".
  inline SimpleGraph parse_graph(std::string const& text) {
    SimpleGraph        g;
    std::istringstream in(text);
    std::string        line;
    size_t             lineno = 0;
    bool               have   = false;
    auto fail = [&](std::string const& msg) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + msg);
    };
    auto index = [&](std::string const& n) {
      auto it = std::find(g.vertices.begin(), g.vertices.end(), n);
      if (it == g.vertices.end()) {
        fail("unknown vertex '" + n + "'");
      }
      return static_cast<int>(it - g.vertices.begin());
    };
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != line.npos) {
        line.resize(hash);
      }
      auto tok = split_ws(line);
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "vertices") {
        if (have) {
          fail("second 'vertices' line");
        }
        have = true;
        for (size_t i = 1; i < tok.size(); ++i) {
          if (std::find(g.vertices.begin(), g.vertices.end(), tok[i])
              != g.vertices.end()) {
            fail("duplicate vertex '" + tok[i] + "'");
          }
          g.vertices.push_back(tok[i]);
        }
        if (g.vertices.empty()) {
          fail("'vertices' needs at least one name");
        }
      } else if (tok[0] == "edge") {
        if (!have || tok.size() != 3) {
          fail("expected 'edge <u> <v>' after 'vertices'");
        }
        int u = index(tok[1]), v = index(tok[2]);
        if (u == v) {
          fail("loops are not allowed");
        }
        if (!g.adjacent(u, v)) {
          g.edges.emplace_back(u, v);
        }
      } else {
        fail("unknown directive '" + tok[0] + "'");
      }
    }
    if (!have) {
      throw InvalidInput("missing 'vertices' line");
    }
    return g;
  }

  inline SimpleGraph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }

  // Right-angled Coxeter group of the doubled graph: generators
  // s_1..s_n, r_1..r_n with s_i ~ s_j iff i ~ j, all r's pairwise
  // adjacent, and s_i ~ r_j iff i != j.
  class GammaPlus {
   public:
    explicit GammaPlus(SimpleGraph g)
        : _g(std::move(g)),
          _raag(GraphProduct::raag(_g.vertices, _g.edges)),
          _sys(build(_g)),
          _racg(GraphProduct::racg(_sys)) {}

    SimpleGraph const& graph() const noexcept {
      return _g;
    }
    size_t size() const noexcept {
      return _g.vertices.size();
    }
    GraphProduct const& raag() const noexcept {
      return _raag;
    }
    CoxeterSystem const& system() const noexcept {
      return _sys;
    }
    GraphProduct const& racg() const noexcept {
      return _racg;
    }

    int s(size_t i) const {
      return static_cast<int>(i);
    }
    int r(size_t i) const {
      return static_cast<int>(size() + i);
    }

    // g_i -> r_i s_i, g_i^-1 -> s_i r_i
    Word beta(Word const& raag_word) const {
      Word out;
      for (int l : raag_word) {
        auto i = static_cast<size_t>(_raag.vertex_of(l));
        bool inv = l != _raag.letter_of_vertex(static_cast<int>(i));
        out.push_back(inv ? s(i) : r(i));
        out.push_back(inv ? r(i) : s(i));
      }
      return _racg.normalize(out);
    }

    // theta(s_i) = theta(r_i) = i-th unit vector mod 2
    std::vector<int> theta(Word const& w) const {
      std::vector<int> v(size(), 0);
      for (int l : w) {
        v[static_cast<size_t>(l) % size()] ^= 1;
      }
      return v;
    }

    bool in_kernel(Word const& w) const {
      auto v = theta(w);
      return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    }

    // Distinct theta labels met by the ball of the given radius.
    size_t coset_count(size_t radius) const {
      std::set<std::vector<int>> labels;
      for (auto const& w : _racg.ball(radius)) {
        labels.insert(theta(w));
      }
      return labels.size();
    }

   private:
    static CoxeterSystem build(SimpleGraph const& g) {
      size_t                   n = g.vertices.size();
      std::vector<std::string> names;
      for (auto const& v : g.vertices) {
        names.push_back("s_" + v);
      }
      for (auto const& v : g.vertices) {
        names.push_back("r_" + v);
      }
      std::vector<std::pair<int, int>> e;
      for (auto const& [a, b] : g.edges) {
        e.emplace_back(a, b);
      }
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          if (i < j) {
            e.emplace_back(static_cast<int>(n + i), static_cast<int>(n + j));
          }
          if (i != j) {
            e.emplace_back(static_cast<int>(i), static_cast<int>(n + j));
          }
        }
      }
      return racg_from_graph(names, e);
    }

    SimpleGraph   _g;
    GraphProduct  _raag;
    CoxeterSystem _sys;
    GraphProduct  _racg;
  };

}  // namespace coxlab

#endif  // COXLAB_RAAG_HPP_
