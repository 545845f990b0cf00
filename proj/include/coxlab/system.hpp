#ifndef COXLAB_SYSTEM_HPP_
#define COXLAB_SYSTEM_HPP_

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace coxlab {

  // Coxeter matrix entries; 0 encodes infinity.
  inline constexpr int kInf = 0;

  inline std::string m_to_string(int m) {
    return m == kInf ? std::string("inf") : std::to_string(m);
  }

  class CoxeterSystem {
   public:
    CoxeterSystem() = default;

    CoxeterSystem(std::vector<std::string>      names,
                  std::vector<std::vector<int>> matrix)
        : _names(std::move(names)), _m(std::move(matrix)) {
      validate();
    }

    size_t rank() const noexcept {
      return _names.size();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(size_t i) const {
      return _names.at(i);
    }

    int m(size_t i, size_t j) const {
      return _m.at(i).at(j);
    }

    std::vector<std::vector<int>> const& matrix() const noexcept {
      return _m;
    }

    int index_of(std::string const& nm) const {
      for (size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == nm) {
          return static_cast<int>(i);
        }
      }
      throw InvalidInput("unknown generator '" + nm + "'");
    }

    bool has_generator(std::string const& nm) const {
      return std::find(_names.begin(), _names.end(), nm) != _names.end();
    }

    bool right_angled() const {
      for (size_t i = 0; i < rank(); ++i) {
        for (size_t j = i + 1; j < rank(); ++j) {
          if (_m[i][j] != 2 && _m[i][j] != kInf) {
            return false;
          }
        }
      }
      return true;
    }

    // Every off-diagonal entry even or infinite.
    bool even() const {
      for (size_t i = 0; i < rank(); ++i) {
        for (size_t j = i + 1; j < rank(); ++j) {
          if (_m[i][j] != kInf && _m[i][j] % 2 != 0) {
            return false;
          }
        }
      }
      return true;
    }

    int max_finite_entry() const {
      int mx = 1;
      for (auto const& row : _m) {
        for (int x : row) {
          mx = std::max(mx, x);
        }
      }
      return mx;
    }

    // Coxeter graph: adjacency iff m < inf (off the diagonal).
    bool graph_adjacent(size_t i, size_t j) const {
      return i != j && _m[i][j] != kInf;
    }

    // Coxeter diagram: adjacency iff m >= 3 (inf included).
    bool diagram_adjacent(size_t i, size_t j) const {
      return i != j && (_m[i][j] == kInf || _m[i][j] >= 3);
    }

    bool operator==(CoxeterSystem const& other) const {
      return _names == other._names && _m == other._m;
    }

    CoxeterSystem restrict_to(std::vector<int> const& gens) const {
      std::vector<std::string>      nm;
      std::vector<std::vector<int>> mat;
      for (int i : gens) {
        nm.push_back(_names.at(static_cast<size_t>(i)));
        std::vector<int> row;
        for (int j : gens) {
          row.push_back(_m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        mat.push_back(row);
      }
      return CoxeterSystem(nm, mat);
    }

   private:
    void validate() const {
      if (_names.empty()) {
        throw InvalidInput("a system needs at least one generator");
      }
      std::set<std::string> seen;
      for (auto const& n : _names) {
        if (n.empty() || n == "e" || n.find_first_of(" \t^") != n.npos) {
          throw InvalidInput("bad generator name '" + n + "'");
        }
        if (!seen.insert(n).second) {
          throw InvalidInput("duplicate generator name '" + n + "'");
        }
      }
      if (_m.size() != _names.size()) {
        throw InvalidInput("matrix size does not match generator count");
      }
      for (size_t i = 0; i < _m.size(); ++i) {
        if (_m[i].size() != _names.size()) {
          throw InvalidInput("matrix is not square");
        }
        for (size_t j = 0; j < _m.size(); ++j) {
          int v = _m[i][j];
          if (v < 0) {
            throw InvalidInput("negative matrix entry");
          }
          if (i == j && v != 1) {
            throw InvalidInput("m(" + _names[i] + "," + _names[i]
                               + ") must be 1");
          }
          if (i != j && v == 1) {
            throw InvalidInput("m(" + _names[i] + "," + _names[j]
                               + ") = 1 off the diagonal");
          }
          if (_m[j][i] != v) {
            throw InvalidInput("matrix is not symmetric at (" + _names[i]
                               + "," + _names[j] + ")");
          }
        }
      }
    }

    std::vector<std::string>      _names;
    std::vector<std::vector<int>> _m;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction helpers
  ////////////////////////////////////////////////////////////////////////

  // Single letters skipping 'e', which names the identity.
  inline std::vector<std::string> default_names(size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
      if (n <= 25) {
        out.emplace_back(1, static_cast<char>('a' + i + (i >= 4 ? 1 : 0)));
      } else {
        out.push_back("s" + std::to_string(i));
      }
    }
    return out;
  }

  inline CoxeterSystem uniform_system(size_t n, int m) {
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, m));
    for (size_t i = 0; i < n; ++i) {
      mat[i][i] = 1;
    }
    return CoxeterSystem(default_names(n), mat);
  }

  // All off-diagonal entries infinite.
  inline CoxeterSystem universal_system(size_t n) {
    return uniform_system(n, kInf);
  }

  // Right-angled system whose commutation graph has the given edges.
  inline CoxeterSystem
  racg_from_graph(std::vector<std::string> const&         names,
                  std::vector<std::pair<int, int>> const& edges) {
    size_t                        n = names.size();
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, kInf));
    for (size_t i = 0; i < n; ++i) {
      mat[i][i] = 1;
    }
    for (auto [a, b] : edges) {
      mat[static_cast<size_t>(a)][static_cast<size_t>(b)] = 2;
      mat[static_cast<size_t>(b)][static_cast<size_t>(a)] = 2;
    }
    return CoxeterSystem(names, mat);
  }

  inline CoxeterSystem path_racg(size_t n) {
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i + 1 < n; ++i) {
      e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    }
    return racg_from_graph(default_names(n), e);
  }

  inline CoxeterSystem cycle_racg(size_t n) {
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i < n; ++i) {
      e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
    }
    return racg_from_graph(default_names(n), e);
  }

  ////////////////////////////////////////////////////////////////////////
  // .cox text format
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> split_ws(std::string const& line) {
    std::istringstream       in(line);
    std::vector<std::string> out;
    std::string              tok;
    while (in >> tok) {
      out.push_back(tok);
    }
    return out;
  }

  inline CoxeterSystem parse_system(std::string const& text) {
    std::istringstream                 in(text);
    std::string                        line;
    std::vector<std::string>           names;
    bool                               have_gens = false;
    std::map<std::pair<int, int>, int> entries;
    size_t                             lineno = 0;
    auto fail = [&](std::string const& why) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + why);
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
      if (tok[0] == "generators") {
        if (have_gens) {
          fail("second 'generators' line");
        }
        have_gens = true;
        names.assign(tok.begin() + 1, tok.end());
        std::set<std::string> seen;
        for (auto const& n : names) {
          if (!seen.insert(n).second) {
            fail("duplicate generator name '" + n + "'");
          }
        }
        if (names.empty()) {
          fail("'generators' needs at least one name");
        }
      } else if (tok[0] == "m") {
        if (!have_gens) {
          fail("'m' before 'generators'");
        }
        if (tok.size() != 4) {
          fail("expected 'm <a> <b> <k|inf>'");
        }
        auto find = [&](std::string const& n) {
          auto it = std::find(names.begin(), names.end(), n);
          if (it == names.end()) {
            fail("unknown symbol '" + n + "'");
          }
          return static_cast<int>(it - names.begin());
        };
        int a = find(tok[1]);
        int b = find(tok[2]);
        int v = 0;
        if (tok[3] == "inf") {
          v = kInf;
        } else {
          try {
            size_t used = 0;
            v           = std::stoi(tok[3], &used);
            if (used != tok[3].size()) {
              fail("bad entry '" + tok[3] + "'");
            }
          } catch (std::logic_error const&) {
            fail("bad entry '" + tok[3] + "'");
          }
          if (v < 1) {
            fail("entry must be a positive integer or inf");
          }
        }
        if (a == b && v != 1) {
          fail("m(" + tok[1] + "," + tok[1] + ") must be 1");
        }
        if (a != b && v == 1) {
          fail("m(" + tok[1] + "," + tok[2] + ") = 1 off the diagonal");
        }
        auto key = std::minmax(a, b);
        if (entries.count(key) != 0) {
          if (entries[key] != v) {
            fail("non-symmetric or conflicting entry for (" + tok[1] + ","
                 + tok[2] + ")");
          }
          fail("duplicate entry for (" + tok[1] + "," + tok[2] + ")");
        }
        entries[key] = v;
      } else {
        fail("unknown directive '" + tok[0] + "'");
      }
    }
    if (!have_gens) {
      throw InvalidInput("missing 'generators' line");
    }
    size_t                        n = names.size();
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, kInf));
    for (size_t i = 0; i < n; ++i) {
      mat[i][i] = 1;
    }
    for (auto const& [key, v] : entries) {
      auto [a, b]                                           = key;
      mat[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
      mat[static_cast<size_t>(b)][static_cast<size_t>(a)] = v;
    }
    return CoxeterSystem(names, mat);
  }

  inline CoxeterSystem load_system(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
  }

  // Normalized text: infinite entries are left implicit.
  inline std::string serialize_system(CoxeterSystem const& sys) {
    std::string out = "generators";
    for (auto const& n : sys.names()) {
      out += " " + n;
    }
    out += "\n";
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        if (sys.m(i, j) != kInf) {
          out += "m " + sys.name(i) + " " + sys.name(j) + " "
                 + std::to_string(sys.m(i, j)) + "\n";
        }
      }
    }
    return out;
  }

  // Words: whitespace separated names; a token that is not a name is split
  // into characters when all names are single characters.
  inline Word parse_coxeter_word(CoxeterSystem const& sys,
                                 std::string const&   text) {
    bool single = true;
    for (auto const& n : sys.names()) {
      single = single && n.size() == 1;
    }
    Word w;
    for (auto const& tok : split_ws(text)) {
      if (tok == "e") {
        continue;
      }
      if (tok.find('^') != tok.npos) {
        throw InvalidInput("exponent suffix is only allowed in RAAG words");
      }
      if (sys.has_generator(tok)) {
        w.push_back(sys.index_of(tok));
      } else if (single) {
        for (char c : tok) {
          w.push_back(sys.index_of(std::string(1, c)));
        }
      } else {
        throw InvalidInput("unknown generator '" + tok + "'");
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Components and classification
  ////////////////////////////////////////////////////////////////////////

  enum class ComponentKind { spherical, affine, other };

  inline char const* to_string(ComponentKind k) {
    switch (k) {
      case ComponentKind::spherical:
        return "spherical";
      case ComponentKind::affine:
        return "affine";
      default:
        return "other";
    }
  }

  struct ComponentType {
    ComponentKind kind = ComponentKind::other;
    std::string   name;  // e.g. "A3", "I2(5)", "A2~"; empty for other
  };

  struct ComponentReport {
    std::vector<std::vector<int>> components;
    std::vector<ComponentType>    types;
  };

  // Connected components of the diagram restricted to `subset`.
  inline std::vector<std::vector<int>>
  diagram_components(CoxeterSystem const& sys, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    std::vector<std::vector<int>> out;
    std::vector<bool>             done(sys.rank(), false);
    for (int start : subset) {
      if (done[static_cast<size_t>(start)]) {
        continue;
      }
      std::vector<int> comp{start}, stack{start};
      done[static_cast<size_t>(start)] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : subset) {
          if (!done[static_cast<size_t>(u)]
              && sys.diagram_adjacent(static_cast<size_t>(v),
                                      static_cast<size_t>(u))) {
            done[static_cast<size_t>(u)] = true;
            comp.push_back(u);
            stack.push_back(u);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(comp);
    }
    return out;
  }

  inline std::vector<std::vector<int>>
  diagram_components(CoxeterSystem const& sys) {
    std::vector<int> all(sys.rank());
    std::iota(all.begin(), all.end(), 0);
    return diagram_components(sys, all);
  }

  inline bool irreducible(CoxeterSystem const& sys) {
    return diagram_components(sys).size() == 1;
  }

  namespace detail {

    // Classify one connected diagram by its shape. Vertices are 0..n-1.
    inline ComponentType classify_connected(CoxeterSystem const& c) {
      using K   = ComponentKind;
      size_t n  = c.rank();
      auto   sp = [](std::string nm) {
        return ComponentType{K::spherical, std::move(nm)};
      };
      auto af = [](std::string nm) {
        return ComponentType{K::affine, std::move(nm)};
      };
      if (n == 1) {
        return sp("A1");
      }
      if (n == 2) {
        int m = c.m(0, 1);
        if (m == kInf) {
          return af("A1~");
        }
        if (m == 3) {
          return sp("A2");
        }
        if (m == 4) {
          return sp("B2");
        }
        if (m == 6) {
          return sp("G2");
        }
        return sp("I2(" + std::to_string(m) + ")");
      }
      // rank >= 3: labels must lie in {3,4,5,6}
      std::vector<std::vector<int>>    nbr(n);
      std::vector<std::pair<int, int>> edges;
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
          int m = c.m(i, j);
          if (m == 2) {
            continue;
          }
          if (m == kInf || m > 6) {
            return {};
          }
          nbr[i].push_back(static_cast<int>(j));
          nbr[j].push_back(static_cast<int>(i));
          edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
      }
      std::vector<int> labels;
      for (auto [i, j] : edges) {
        labels.push_back(c.m(static_cast<size_t>(i), static_cast<size_t>(j)));
      }
      auto count = [&](int lab) {
        return std::count(labels.begin(), labels.end(), lab);
      };
      std::string ns = std::to_string(n);
      std::string nm = std::to_string(n - 1);  // affine index
      if (edges.size() == n) {
        // a cycle with all labels 3
        for (auto const& v : nbr) {
          if (v.size() != 2) {
            return {};
          }
        }
        if (count(3) == static_cast<long>(n)) {
          return af("A" + nm + "~");
        }
        return {};
      }
      if (edges.size() != n - 1) {
        return {};
      }
      // a tree
      std::vector<int> branch;
      for (size_t i = 0; i < n; ++i) {
        if (nbr[i].size() >= 3) {
          branch.push_back(static_cast<int>(i));
        }
      }
      auto label = [&](int a, int b) {
        return c.m(static_cast<size_t>(a), static_cast<size_t>(b));
      };
      if (branch.empty()) {
        // path: read labels end to end
        int start = 0;
        for (size_t i = 0; i < n; ++i) {
          if (nbr[i].size() == 1) {
            start = static_cast<int>(i);
            break;
          }
        }
        std::vector<int> seq;
        int              prev = -1, cur = start;
        while (true) {
          int next = -1;
          for (int u : nbr[static_cast<size_t>(cur)]) {
            if (u != prev) {
              next = u;
            }
          }
          if (next < 0) {
            break;
          }
          seq.push_back(label(cur, next));
          prev = cur;
          cur  = next;
        }
        auto rev = std::vector<int>(seq.rbegin(), seq.rend());
        auto is  = [&](std::vector<int> const& pat) {
          return seq == pat || rev == pat;
        };
        std::vector<int> threes(n - 1, 3);
        if (seq == threes) {
          return sp("A" + ns);
        }
        auto one_end = [&](int lab) {
          std::vector<int> p = threes;
          p.back()           = lab;
          return is(p);
        };
        if (one_end(4)) {
          return sp("B" + ns);
        }
        if (n == 3 && one_end(5)) {
          return sp("H3");
        }
        if (n == 4 && one_end(5)) {
          return sp("H4");
        }
        if (n == 4 && is({3, 4, 3})) {
          return sp("F4");
        }
        if (n == 3 && one_end(6)) {
          return af("G2~");
        }
        if (n == 5 && is({3, 3, 4, 3})) {
          return af("F4~");
        }
        std::vector<int> c_tilde = threes;
        c_tilde.front()          = 4;
        c_tilde.back()           = 4;
        if (is(c_tilde)) {
          return af("C" + nm + "~");
        }
        return {};
      }
      // branched trees: all labels 3 except the B~ family
      auto arm = [&](int center, int first) {
        // returns (length, label of the last edge)
        int len = 1, prev = center, cur = first, last = label(center, first);
        while (nbr[static_cast<size_t>(cur)].size() == 2) {
          int next = nbr[static_cast<size_t>(cur)][0] == prev
                         ? nbr[static_cast<size_t>(cur)][1]
                         : nbr[static_cast<size_t>(cur)][0];
          last     = label(cur, next);
          prev     = cur;
          cur      = next;
          ++len;
        }
        return std::make_tuple(len, last, nbr[static_cast<size_t>(cur)].size());
      };
      if (branch.size() == 1) {
        int    ctr = branch[0];
        size_t deg = nbr[static_cast<size_t>(ctr)].size();
        if (deg == 4) {
          if (n == 5 && count(3) == 4) {
            return af("D4~");
          }
          return {};
        }
        if (deg != 3) {
          return {};
        }
        std::vector<int> lens;
        int              fours = 0;
        for (int u : nbr[static_cast<size_t>(ctr)]) {
          auto [len, last, enddeg] = arm(ctr, u);
          lens.push_back(len);
          if (last == 4) {
            ++fours;
          }
          (void) enddeg;
        }
        std::sort(lens.begin(), lens.end());
        if (count(3) == static_cast<long>(n - 1)) {
          if (lens[0] == 1 && lens[1] == 1) {
            return sp("D" + ns);
          }
          if (lens == std::vector<int>{1, 2, 2}) {
            return sp("E6");
          }
          if (lens == std::vector<int>{1, 2, 3}) {
            return sp("E7");
          }
          if (lens == std::vector<int>{1, 2, 4}) {
            return sp("E8");
          }
          if (lens == std::vector<int>{2, 2, 2}) {
            return af("E6~");
          }
          if (lens == std::vector<int>{1, 3, 3}) {
            return af("E7~");
          }
          if (lens == std::vector<int>{1, 2, 5}) {
            return af("E8~");
          }
          return {};
        }
        if (fours == 1 && count(4) == 1 && lens[0] == 1 && lens[1] == 1) {
          // the 4 must sit on the terminal edge of the longest arm
          for (int u : nbr[static_cast<size_t>(ctr)]) {
            auto [len, last, enddeg] = arm(ctr, u);
            (void) enddeg;
            if (last == 4 && len == lens[2] && (lens[2] > 1 || n == 4)) {
              return af("B" + nm + "~");
            }
          }
        }
        return {};
      }
      if (branch.size() == 2 && count(3) == static_cast<long>(n - 1)) {
        for (int b : branch) {
          if (nbr[static_cast<size_t>(b)].size() != 3) {
            return {};
          }
          int leaves = 0;
          for (int u : nbr[static_cast<size_t>(b)]) {
            leaves += nbr[static_cast<size_t>(u)].size() == 1 ? 1 : 0;
          }
          if (leaves < 2) {
            return {};
          }
        }
        return af("D" + nm + "~");
      }
      return {};
    }

  }  // namespace detail

  inline ComponentReport classify(CoxeterSystem const& sys) {
    ComponentReport rep;
    rep.components = diagram_components(sys);
    for (auto const& comp : rep.components) {
      rep.types.push_back(detail::classify_connected(sys.restrict_to(comp)));
    }
    return rep;
  }

  // Finite iff every diagram component is spherical.
  inline bool is_spherical(CoxeterSystem const& sys) {
    for (auto const& t : classify(sys).types) {
      if (t.kind != ComponentKind::spherical) {
        return false;
      }
    }
    return true;
  }

  inline bool is_spherical_subset(CoxeterSystem const&    sys,
                                  std::vector<int> const& subset) {
    if (subset.empty()) {
      return true;
    }
    return is_spherical(sys.restrict_to(subset));
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  struct AbelianizationMap {
    std::vector<int> class_of;  // generator -> class index
    size_t           target_rank = 0;

    std::vector<int> image(Word const& w) const {
      std::vector<int> v(target_rank, 0);
      for (int x : w) {
        v[static_cast<size_t>(class_of.at(static_cast<size_t>(x)))] ^= 1;
      }
      return v;
    }
  };

  inline AbelianizationMap abelianization(CoxeterSystem const& sys) {
    size_t           n = sys.rank();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        int m = sys.m(i, j);
        if (m != kInf && m % 2 == 1) {
          parent[static_cast<size_t>(find(static_cast<int>(j)))]
              = find(static_cast<int>(i));
        }
      }
    }
    AbelianizationMap  out;
    std::map<int, int> idx;
    out.class_of.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int r = find(static_cast<int>(i));
      if (idx.count(r) == 0) {
        int k  = static_cast<int>(idx.size());
        idx[r] = k;
      }
      out.class_of[i] = idx[r];
    }
    out.target_rank = idx.size();
    return out;
  }

  inline std::vector<int> abelianize(CoxeterSystem const& sys, Word const& w) {
    for (int x : w) {
      if (x < 0 || static_cast<size_t>(x) >= sys.rank()) {
        throw InvalidInput("unknown letter in word");
      }
    }
    return abelianization(sys).image(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph predicates (right-angled systems)
  ////////////////////////////////////////////////////////////////////////

  struct GraphPredicates {
    bool                          star_property  = false;
    bool                          star_connected = false;
    std::vector<std::vector<int>> closed_star;  // N*(v), sorted
  };

  inline void require_right_angled(CoxeterSystem const& sys,
                                   char const*          what) {
    if (!sys.right_angled()) {
      throw InvalidInput(std::string(what)
                         + " needs a right-angled system (all m in {2, inf})");
    }
  }

  inline std::vector<int> closed_star(CoxeterSystem const& sys, size_t v) {
    std::vector<int> out;
    for (size_t u = 0; u < sys.rank(); ++u) {
      if (u == v || sys.graph_adjacent(u, v)) {
        out.push_back(static_cast<int>(u));
      }
    }
    return out;
  }

  // Components of Gamma minus `removed`, as sorted vertex lists.
  inline std::vector<std::vector<int>>
  graph_components_without(CoxeterSystem const&    sys,
                           std::vector<int> const& removed) {
    std::vector<bool> gone(sys.rank(), false);
    for (int r : removed) {
      gone[static_cast<size_t>(r)] = true;
    }
    std::vector<std::vector<int>> out;
    std::vector<bool>             seen(sys.rank(), false);
    for (size_t s = 0; s < sys.rank(); ++s) {
      if (gone[s] || seen[s]) {
        continue;
      }
      std::vector<int> comp{static_cast<int>(s)}, stack{static_cast<int>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        auto v = static_cast<size_t>(stack.back());
        stack.pop_back();
        for (size_t u = 0; u < sys.rank(); ++u) {
          if (!gone[u] && !seen[u] && sys.graph_adjacent(u, v)) {
            seen[u] = true;
            comp.push_back(static_cast<int>(u));
            stack.push_back(static_cast<int>(u));
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(comp);
    }
    return out;
  }

  inline GraphPredicates graph_predicates(CoxeterSystem const& sys) {
    require_right_angled(sys, "graph predicates");
    GraphPredicates out;
    size_t          n = sys.rank();
    for (size_t v = 0; v < n; ++v) {
      out.closed_star.push_back(closed_star(sys, v));
    }
    out.star_property = true;
    for (size_t v = 0; v < n && out.star_property; ++v) {
      for (size_t w = 0; w < n; ++w) {
        if (v != w
            && std::includes(out.closed_star[w].begin(),
                             out.closed_star[w].end(),
                             out.closed_star[v].begin(),
                             out.closed_star[v].end())) {
          out.star_property = false;
          break;
        }
      }
    }
    out.star_connected = true;
    for (size_t v = 0; v < n; ++v) {
      if (graph_components_without(sys, out.closed_star[v]).size() > 1) {
        out.star_connected = false;
      }
    }
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_SYSTEM_HPP_
