#ifndef COXLAB_GRAPH_PRODUCT_HPP_
#define COXLAB_GRAPH_PRODUCT_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "system.hpp"
#include "word.hpp"

namespace coxlab {

  // Graph products of Z/2 (involutive vertices) and Z (free vertices).
  // Letters are ids into an alphabet; each letter sits on a vertex and has
  // an inverse letter. Right-angled Coxeter groups use one letter per
  // vertex, right-angled Artin groups two (g and g^-1).
  class GraphProduct {
   public:
    GraphProduct() = default;

    static GraphProduct racg(CoxeterSystem const& sys) {
      require_right_angled(sys, "graph-product normal forms");
      GraphProduct g;
      size_t       n = sys.rank();
      g._vertex_names = sys.names();
      g._adj.assign(n, std::vector<bool>(n, false));
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          g._adj[i][j] = sys.graph_adjacent(i, j);
        }
        g._letter_names.push_back(sys.name(i));
        g._vertex_of.push_back(static_cast<int>(i));
        g._inverse_of.push_back(static_cast<int>(i));
        g._involutive.push_back(true);
      }
      g._all_involutive = true;
      return g;
    }

    // Letter 2i is g_i, letter 2i+1 is g_i^-1.
    static GraphProduct raag(std::vector<std::string> const&         names,
                             std::vector<std::pair<int, int>> const& edges) {
      GraphProduct g;
      size_t       n  = names.size();
      g._vertex_names = names;
      g._adj.assign(n, std::vector<bool>(n, false));
      for (auto [a, b] : edges) {
        if (a == b) {
          throw InvalidInput("graph loops are not allowed");
        }
        g._adj.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)) = true;
        g._adj.at(static_cast<size_t>(b)).at(static_cast<size_t>(a)) = true;
      }
      for (size_t i = 0; i < n; ++i) {
        g._letter_names.push_back(names[i]);
        g._letter_names.push_back(names[i] + "^-1");
        g._vertex_of.push_back(static_cast<int>(i));
        g._vertex_of.push_back(static_cast<int>(i));
        g._inverse_of.push_back(static_cast<int>(2 * i + 1));
        g._inverse_of.push_back(static_cast<int>(2 * i));
        g._involutive.push_back(false);
      }
      g._all_involutive = false;
      return g;
    }

    size_t num_vertices() const noexcept {
      return _vertex_names.size();
    }
    size_t num_letters() const noexcept {
      return _letter_names.size();
    }
    std::vector<std::string> const& letter_names() const noexcept {
      return _letter_names;
    }
    std::vector<std::string> const& vertex_names() const noexcept {
      return _vertex_names;
    }
    int vertex_of(int letter) const {
      return _vertex_of[static_cast<size_t>(letter)];
    }
    int inverse_letter(int letter) const {
      return _inverse_of[static_cast<size_t>(letter)];
    }
    bool adjacent(int u, int v) const {
      return _adj[static_cast<size_t>(u)][static_cast<size_t>(v)];
    }
    bool all_involutive() const noexcept {
      return _all_involutive;
    }

    // The positive letter of vertex v.
    int letter_of_vertex(int v) const {
      return all_involutive() ? v : 2 * v;
    }

    // Letters of distinct vertices that commute.
    bool letters_commute(int x, int y) const {
      return adjacent(vertex_of(x), vertex_of(y));
    }

    ////////////////////////////////////////////////////////////////////
    // Normal forms
    ////////////////////////////////////////////////////////////////////

    void check_letters(Word const& w) const {
      for (int x : w) {
        if (x < 0 || static_cast<size_t>(x) >= num_letters()) {
          throw InvalidInput("unknown letter id " + std::to_string(x));
        }
      }
    }

    // Free reduction modulo commutations: the result spells the same
    // element and has no cancelling pair.
    Word reduce(Word const& w) const {
      Word r;
      r.reserve(w.size());
      for (int x : w) {
        append_letter(r, x);
      }
      return r;
    }

    // Shortlex-least commutation-equivalent rearrangement of a reduced
    // word: repeatedly pull the smallest letter that can reach the front.
    Word lex_sort(Word w) const {
      size_t n = w.size();
      auto   conflict = [&](size_t j, size_t i) {
        return vertex_of(w[j]) == vertex_of(w[i])
               || !letters_commute(w[j], w[i]);
      };
      // blockers[i]: unplaced earlier letters that cannot pass w[i]
      std::vector<size_t> blockers(n, 0);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < i; ++j) {
          blockers[i] += conflict(j, i) ? 1 : 0;
        }
      }
      Word out;
      out.reserve(n);
      std::vector<bool> used(n, false);
      for (size_t step = 0; step < n; ++step) {
        int    best     = -1;
        size_t best_pos = 0;
        for (size_t i = 0; i < n; ++i) {
          if (!used[i] && blockers[i] == 0 && (best < 0 || w[i] < best)) {
            best     = w[i];
            best_pos = i;
          }
        }
        used[best_pos] = true;
        out.push_back(best);
        for (size_t k = best_pos + 1; k < n; ++k) {
          if (!used[k] && conflict(best_pos, k)) {
            --blockers[k];
          }
        }
      }
      return out;
    }

    Word normalize(Word const& w) const {
      check_letters(w);
      return lex_sort(reduce(w));
    }

    Word multiply(Word const& x, Word const& y) const {
      Word r = reduce(x);
      for (int l : y) {
        append_letter(r, l);
      }
      return lex_sort(std::move(r));
    }

    Word multiply(std::initializer_list<Word> parts) const {
      Word r;
      for (auto const& p : parts) {
        for (int l : p) {
          append_letter(r, l);
        }
      }
      return lex_sort(std::move(r));
    }

    Word inverse(Word const& x) const {
      Word r;
      r.reserve(x.size());
      for (auto it = x.rbegin(); it != x.rend(); ++it) {
        r.push_back(inverse_letter(*it));
      }
      return normalize(r);
    }

    // g x g^-1
    Word conjugate(Word const& x, Word const& g) const {
      return multiply({g, x, inverse(g)});
    }

    Word commutator(Word const& x, Word const& y) const {
      return multiply({x, y, inverse(x), inverse(y)});
    }

    Word power(Word const& x, long k) const {
      Word base = k < 0 ? inverse(x) : x;
      Word r;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        for (int l : base) {
          append_letter(r, l);
        }
      }
      return lex_sort(std::move(r));
    }

    bool commute(Word const& x, Word const& y) const {
      return multiply(x, y) == multiply(y, x);
    }

    std::string format(Word const& w) const {
      if (all_involutive()) {
        return format_word(w, _letter_names);
      }
      // RAAG: print syllables g^k
      if (w.empty()) {
        return "e";
      }
      std::string out;
      size_t      i = 0;
      while (i < w.size()) {
        int  v   = vertex_of(w[i]);
        long exp = 0;
        while (i < w.size() && vertex_of(w[i]) == v) {
          exp += (w[i] % 2 == 0) ? 1 : -1;
          ++i;
        }
        if (!out.empty()) {
          out += ' ';
        }
        out += _vertex_names[static_cast<size_t>(v)];
        if (exp != 1) {
          out += "^" + std::to_string(exp);
        }
      }
      return out;
    }

    // Whitespace separated names. RAAG tokens may carry ^k; RACG tokens
    // are split into characters when all names are single characters.
    Word parse(std::string const& text) const {
      bool single = true;
      for (auto const& n : _vertex_names) {
        single = single && n.size() == 1;
      }
      auto find_vertex = [&](std::string const& nm) {
        for (size_t i = 0; i < _vertex_names.size(); ++i) {
          if (_vertex_names[i] == nm) {
            return static_cast<int>(i);
          }
        }
        return -1;
      };
      Word w;
      for (auto const& tok : split_ws(text)) {
        if (tok == "e") {
          continue;
        }
        auto        caret = tok.find('^');
        std::string base  = tok.substr(0, caret);
        long        exp   = 1;
        if (caret != tok.npos) {
          if (all_involutive()) {
            throw InvalidInput("exponent suffix is only allowed in RAAG words");
          }
          try {
            size_t used = 0;
            exp         = std::stol(tok.substr(caret + 1), &used);
            if (used != tok.size() - caret - 1) {
              throw InvalidInput("bad exponent in '" + tok + "'");
            }
          } catch (std::logic_error const&) {
            throw InvalidInput("bad exponent in '" + tok + "'");
          }
        }
        int v = find_vertex(base);
        if (v >= 0) {
          int letter = letter_of_vertex(v);
          int inv    = inverse_letter(letter);
          for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) {
            w.push_back(exp < 0 ? inv : letter);
          }
        } else if (single && caret == tok.npos) {
          for (char c : tok) {
            int cv = find_vertex(std::string(1, c));
            if (cv < 0) {
              throw InvalidInput("unknown generator '" + std::string(1, c)
                                 + "'");
            }
            w.push_back(letter_of_vertex(cv));
          }
        } else {
          throw InvalidInput("unknown generator '" + base + "'");
        }
      }
      return w;
    }

    ////////////////////////////////////////////////////////////////////
    // Support, link, cyclic structure
    ////////////////////////////////////////////////////////////////////

    std::vector<int> support(Word const& x) const {
      std::vector<bool> in(num_vertices(), false);
      for (int l : x) {
        in[static_cast<size_t>(vertex_of(l))] = true;
      }
      std::vector<int> out;
      for (size_t v = 0; v < num_vertices(); ++v) {
        if (in[v]) {
          out.push_back(static_cast<int>(v));
        }
      }
      return out;
    }

    // Common neighbours of the support (all vertices when x = e).
    std::vector<int> link(Word const& x) const {
      auto             sp = support(x);
      std::vector<int> out;
      for (size_t v = 0; v < num_vertices(); ++v) {
        bool ok = true;
        for (int s : sp) {
          ok = ok && adjacent(static_cast<int>(v), s);
        }
        if (ok) {
          out.push_back(static_cast<int>(v));
        }
      }
      return out;
    }

    bool is_clique(std::vector<int> const& vs) const {
      for (size_t i = 0; i < vs.size(); ++i) {
        for (size_t j = i + 1; j < vs.size(); ++j) {
          if (!adjacent(vs[i], vs[j])) {
            return false;
          }
        }
      }
      return true;
    }

    // Non-commutation components of a vertex set.
    std::vector<std::vector<int>>
    noncommuting_components(std::vector<int> const& vs) const {
      std::vector<std::vector<int>> out;
      std::vector<bool>             seen(vs.size(), false);
      for (size_t i = 0; i < vs.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::vector<int>    comp{vs[i]};
        std::vector<size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
          size_t k = stack.back();
          stack.pop_back();
          for (size_t j = 0; j < vs.size(); ++j) {
            if (!seen[j] && !adjacent(vs[k], vs[j])) {
              seen[j] = true;
              comp.push_back(vs[j]);
              stack.push_back(j);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
      }
      return out;
    }

    bool irreducible() const {
      std::vector<int> all(num_vertices());
      for (size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<int>(i);
      }
      return noncommuting_components(all).size() == 1;
    }

    struct CyclicForm {
      Word h;     // conjugator
      Word core;  // cyclically reduced, x = h core h^-1
    };

    // Conjugate away letters that cancel at both ends.
    CyclicForm cyclic_reduce(Word const& x) const {
      CyclicForm out{{}, normalize(x)};
      bool       changed = true;
      while (changed) {
        changed = false;
        for (size_t l = 0; l < num_letters(); ++l) {
          int  a    = static_cast<int>(l);
          Word cand = multiply({Word{inverse_letter(a)}, out.core, Word{a}});
          if (cand.size() < out.core.size()) {
            out.core = std::move(cand);
            out.h    = multiply(out.h, Word{a});
            changed  = true;
            break;
          }
        }
      }
      return out;
    }

    // Left divisors of a reduced element with a given length.
    std::vector<Word> prefixes_of_length(Word const& x, size_t len) const {
      WordSet           seen;
      std::vector<Word> out;
      std::vector<std::pair<Word, Word>> stack{{Word{}, x}};
      while (!stack.empty()) {
        auto [pre, rest] = stack.back();
        stack.pop_back();
        if (pre.size() == len) {
          Word p = lex_sort(pre);
          if (seen.insert(p).second) {
            out.push_back(p);
          }
          continue;
        }
        for (size_t i = 0; i < rest.size(); ++i) {
          bool free = true;
          for (size_t j = 0; j < i && free; ++j) {
            free = vertex_of(rest[j]) != vertex_of(rest[i])
                   && letters_commute(rest[j], rest[i]);
          }
          if (!free) {
            continue;
          }
          Word np = pre;
          np.push_back(rest[i]);
          Word nr = rest;
          nr.erase(nr.begin() + static_cast<long>(i));
          stack.emplace_back(std::move(np), std::move(nr));
        }
      }
      return out;
    }

    struct RootForm {
      Word r;
      long n = 1;
    };

    // Maximal n with core = r^n. Finite-order cores are their own root.
    RootForm root_of_core(Word const& core) const {
      if (core.empty()) {
        return {core, 1};
      }
      if (all_involutive() && is_clique(support(core))) {
        return {core, 1};
      }
      size_t L = core.size();
      for (size_t n = L; n >= 2; --n) {
        if (L % n != 0) {
          continue;
        }
        for (auto const& p : prefixes_of_length(core, L / n)) {
          if (power(p, static_cast<long>(n)) == core) {
            return {p, static_cast<long>(n)};
          }
        }
      }
      return {core, 1};
    }

    ////////////////////////////////////////////////////////////////////
    // Balls
    ////////////////////////////////////////////////////////////////////

    // Elements of length <= radius, grouped by sphere.
    // Only letters on `vertices` are used when it is given.
    std::vector<std::vector<Word>>
    spheres(size_t                         radius,
            std::optional<std::vector<int>> vertices = std::nullopt,
            size_t                          limit    = 5'000'000) const {
      std::vector<int> letters;
      for (size_t l = 0; l < num_letters(); ++l) {
        if (!vertices
            || std::find(vertices->begin(),
                         vertices->end(),
                         vertex_of(static_cast<int>(l)))
                   != vertices->end()) {
          letters.push_back(static_cast<int>(l));
        }
      }
      std::vector<std::vector<Word>> out{{Word{}}};
      WordSet                        seen{Word{}};
      for (size_t r = 1; r <= radius; ++r) {
        std::vector<Word> next;
        for (auto const& w : out.back()) {
          for (int l : letters) {
            Word x = multiply(w, Word{l});
            if (x.size() == r && seen.insert(x).second) {
              next.push_back(std::move(x));
            }
          }
        }
        if (seen.size() > limit) {
          throw Inconclusive("ball enumeration exceeded "
                             + std::to_string(limit) + " elements");
        }
        std::sort(next.begin(), next.end(), shortlex_less);
        out.push_back(std::move(next));
      }
      return out;
    }

    std::vector<Word>
    ball(size_t                          radius,
         std::optional<std::vector<int>> vertices = std::nullopt) const {
      std::vector<Word> out;
      for (auto& s : spheres(radius, vertices)) {
        out.insert(out.end(), s.begin(), s.end());
      }
      return out;
    }

   private:
    void append_letter(Word& r, int x) const {
      for (size_t k = r.size(); k-- > 0;) {
        int y = r[k];
        if (vertex_of(y) == vertex_of(x)) {
          if (y == inverse_letter(x)) {
            r.erase(r.begin() + static_cast<long>(k));
            return;
          }
          break;
        }
        if (!letters_commute(x, y)) {
          break;
        }
      }
      r.push_back(x);
    }

    std::vector<std::string>       _vertex_names;
    std::vector<std::string>       _letter_names;
    std::vector<int>               _vertex_of;
    std::vector<int>               _inverse_of;
    std::vector<bool>              _involutive;
    std::vector<std::vector<bool>> _adj;
    bool                           _all_involutive = true;
  };

}  // namespace coxlab

#endif  // COXLAB_GRAPH_PRODUCT_HPP_
