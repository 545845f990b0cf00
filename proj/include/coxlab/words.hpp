#ifndef COXLAB_WORDS_HPP_
#define COXLAB_WORDS_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_product.hpp"
#include "system.hpp"
#include "word.hpp"

namespace coxlab {

  struct Order {
    enum class Kind { finite, infinite, unknown };
    Kind kind  = Kind::unknown;
    long value = 0;  // the order when finite, the cutoff when unknown

    static Order finite(long k) {
      return {Kind::finite, k};
    }
    static Order infinite() {
      return {Kind::infinite, 0};
    }
    static Order unknown(long cutoff) {
      return {Kind::unknown, cutoff};
    }
    bool operator==(Order const&) const = default;

    std::string str() const {
      switch (kind) {
        case Kind::finite:
          return std::to_string(value);
        case Kind::infinite:
          return "inf";
        default:
          return "unknown(" + std::to_string(value) + ")";
      }
    }
  };

  // Finite order only for cliques of involutions; everything else in a
  // graph product of Z/2 and Z is torsion free.
  inline Order element_order(GraphProduct const& gp, Word const& x) {
    auto cf = gp.cyclic_reduce(x);
    if (cf.core.empty()) {
      return Order::finite(1);
    }
    if (gp.all_involutive() && gp.is_clique(gp.support(cf.core))) {
      return Order::finite(2);
    }
    return Order::infinite();
  }

  struct CyclicDecomposition {
    Word h;
    Word core;
    Word root;
    long n = 1;
  };

  inline CyclicDecomposition cyclic_root(GraphProduct const& gp,
                                         Word const&         x) {
    if (!gp.irreducible()) {
      throw InvalidInput("cyclic roots need an irreducible system");
    }
    auto cf = gp.cyclic_reduce(x);
    auto rf = gp.root_of_core(cf.core);
    return {cf.h, cf.core, rf.r, rf.n};
  }

  inline bool is_reflection(GraphProduct const& gp, Word const& x) {
    if (!gp.all_involutive()) {
      throw InvalidInput("reflections live in right-angled Coxeter groups");
    }
    return gp.cyclic_reduce(x).core.size() == 1;
  }

  // x = w s w^-1 for some s and w in B_radius, by direct search.
  inline bool is_reflection_bounded(GraphProduct const& gp,
                                    Word const&         x,
                                    size_t              radius) {
    Word nx = gp.normalize(x);
    for (auto const& w : gp.ball(radius)) {
      for (size_t v = 0; v < gp.num_vertices(); ++v) {
        if (gp.conjugate(Word{static_cast<int>(v)}, w) == nx) {
          return true;
        }
      }
    }
    return false;
  }

  // Generating data of a centralizer: h (F_1 x ... x F_k x <L>) h^-1 where
  // each F_i is cyclic, generated by roots[i] (of order 2 when
  // finite_root[i]), and <L> is the special subgroup on the vertices L.
  struct CentralizerData {
    Word              h;
    std::vector<Word> roots;
    std::vector<bool> finite_root;
    std::vector<int>  link;

    std::vector<Word> generators(GraphProduct const& gp) const {
      std::vector<Word> out;
      for (auto const& r : roots) {
        out.push_back(gp.conjugate(r, h));
      }
      for (int v : link) {
        out.push_back(gp.conjugate(Word{gp.letter_of_vertex(v)}, h));
      }
      return out;
    }
  };

  // Centralizer of x: the cyclic core splits along the non-commutation
  // components of its support; each piece contributes its root, and the
  // link of the core contributes a special subgroup.
  inline CentralizerData centralizer_generators(GraphProduct const& gp,
                                                Word const&         x) {
    auto            cf = gp.cyclic_reduce(x);
    CentralizerData out;
    out.h    = cf.h;
    out.link = gp.link(cf.core);
    for (auto const& comp : gp.noncommuting_components(gp.support(cf.core))) {
      Word piece;
      for (int l : cf.core) {
        if (std::binary_search(comp.begin(), comp.end(), gp.vertex_of(l))) {
          piece.push_back(l);
        }
      }
      piece   = gp.normalize(piece);
      auto rf = gp.root_of_core(piece);
      out.roots.push_back(rf.r);
      out.finite_root.push_back(gp.all_involutive() && comp.size() == 1);
    }
    return out;
  }

  // The single-root form h (<root(core)> x <lk(core)>) h^-1.
  inline CentralizerData single_root_centralizer(GraphProduct const& gp,
                                                 Word const&         x) {
    auto            cf = gp.cyclic_reduce(x);
    CentralizerData out;
    out.h    = cf.h;
    out.link = gp.link(cf.core);
    if (!cf.core.empty()) {
      auto rf = gp.root_of_core(cf.core);
      out.roots.push_back(rf.r);
      out.finite_root.push_back(gp.all_involutive()
                                && gp.is_clique(gp.support(cf.core)));
    }
    return out;
  }

  // Elements of the described subgroup with length <= radius. Pieces have
  // pairwise disjoint commuting supports, so the length of
  // r_1^k_1 ... r_m^k_m y is sum |k_i| l(r_i) + l(y).
  inline WordSet centralizer_in_ball(GraphProduct const&    gp,
                                     CentralizerData const& c,
                                     size_t                 radius) {
    size_t budget = radius + 2 * c.h.size();
    WordSet out;
    auto    link_ball = gp.ball(budget, c.link);
    // enumerate exponent vectors recursively
    std::vector<std::pair<Word, size_t>> partial{{Word{}, 0}};
    for (size_t i = 0; i < c.roots.size(); ++i) {
      std::vector<std::pair<Word, size_t>> next;
      Word const&                          r = c.roots[i];
      if (r.empty()) {
        next = partial;
      } else {
        for (auto const& [w, used] : partial) {
          if (c.finite_root[i]) {
            next.emplace_back(w, used);
            if (used + r.size() <= budget) {
              next.emplace_back(gp.multiply(w, r), used + r.size());
            }
            continue;
          }
          long kmax = static_cast<long>((budget - used) / r.size());
          for (long k = -kmax; k <= kmax; ++k) {
            next.emplace_back(gp.multiply(w, gp.power(r, k)),
                              used + static_cast<size_t>(k < 0 ? -k : k)
                                         * r.size());
          }
        }
      }
      partial = std::move(next);
    }
    Word hinv = gp.inverse(c.h);
    for (auto const& [w, used] : partial) {
      for (auto const& y : link_ball) {
        if (used + y.size() > budget) {
          continue;
        }
        Word z = gp.multiply({c.h, w, y, hinv});
        if (z.size() <= radius) {
          out.insert(std::move(z));
        }
      }
    }
    return out;
  }

  inline WordSet brute_force_centralizer(GraphProduct const&      gp,
                                         Word const&              x,
                                         std::vector<Word> const& ball) {
    WordSet out;
    for (auto const& y : ball) {
      if (gp.commute(x, y)) {
        out.insert(y);
      }
    }
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_WORDS_HPP_
