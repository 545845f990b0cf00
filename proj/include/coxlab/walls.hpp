#ifndef COXLAB_WALLS_HPP_
#define COXLAB_WALLS_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_product.hpp"
#include "word.hpp"
#include "words.hpp"

namespace coxlab {

  // A reflection w s w^-1 together with the chamber w of its wall closest
  // to the identity (the gate) and the letter s.
  struct Reflection {
    Word element;
    Word gate;
    int  letter = -1;

    bool operator==(Reflection const& o) const {
      return element == o.element;
    }
  };

  inline Reflection make_reflection(GraphProduct const& gp, Word const& x) {
    if (!gp.all_involutive()) {
      throw InvalidInput("walls need a right-angled Coxeter group");
    }
    auto cf = gp.cyclic_reduce(x);
    if (cf.core.size() != 1) {
      throw InvalidInput("'" + gp.format(gp.normalize(x))
                         + "' is not a reflection");
    }
    return {gp.normalize(x), cf.h, cf.core[0]};
  }

  inline std::vector<Reflection> make_reflections(GraphProduct const&      gp,
                                                  std::vector<Word> const& xs) {
    std::vector<Reflection> out;
    for (auto const& x : xs) {
      out.push_back(make_reflection(gp, x));
    }
    return out;
  }

  // +1 when l(t w) > l(w), -1 otherwise (never equal: parity).
  inline int side_of(GraphProduct const& gp, Word const& t, Word const& w) {
    return gp.multiply(t, w).size() > gp.normalize(w).size() ? 1 : -1;
  }

  // w is a chamber of the wall of t: w^-1 t w is a generator.
  inline bool on_wall(GraphProduct const& gp, Word const& t, Word const& w) {
    return gp.multiply({gp.inverse(w), t, w}).size() == 1;
  }

  // 1, 2 or 0 (infinite) for the order of t u.
  inline int pair_order(GraphProduct const& gp,
                        Reflection const&   t,
                        Reflection const&   u) {
    if (t.element == u.element) {
      return 1;
    }
    return gp.commute(t.element, u.element) ? 2 : kInf;
  }

  // Side of the wall of t containing the whole wall of u (o(tu) infinite).
  inline int side_of_wall(GraphProduct const& gp,
                          Reflection const&   t,
                          Reflection const&   u) {
    return side_of(gp, t.element, u.gate);
  }

  // Walls crossed by the geodesic gallery from chamber x to chamber y.
  inline std::vector<Word> walls_between(GraphProduct const& gp,
                                         Word const&         x,
                                         Word const&         y) {
    Word              path = gp.multiply(gp.inverse(x), y);
    std::vector<Word> out;
    Word              cur = gp.normalize(x);
    for (int s : path) {
      out.push_back(gp.conjugate(Word{s}, cur));
      cur = gp.multiply(cur, Word{s});
    }
    return out;
  }

  // Gallery distance between the walls of t and u: the number of walls
  // separating them. Distances between convex chamber sets in a right-angled
  // building are counted by separating walls, and every separating wall
  // crosses the gallery between the two gates.
  inline size_t wall_distance(GraphProduct const& gp,
                              Reflection const&   t,
                              Reflection const&   u) {
    if (pair_order(gp, t, u) != kInf) {
      return 0;
    }
    size_t count = 0;
    for (auto const& r : walls_between(gp, t.gate, u.gate)) {
      Reflection rr = make_reflection(gp, r);
      if (pair_order(gp, rr, t) == kInf && pair_order(gp, rr, u) == kInf
          && side_of_wall(gp, rr, t) != side_of_wall(gp, rr, u)) {
        ++count;
      }
    }
    return count;
  }

  // Breadth-first distance from the chambers of t's wall inside B_radius
  // to the nearest chamber of u's wall.
  inline std::optional<size_t> wall_distance_bfs(GraphProduct const& gp,
                                                 Reflection const&   t,
                                                 Reflection const&   u,
                                                 size_t              radius,
                                                 size_t limit = 200'000) {
    std::deque<std::pair<Word, size_t>> queue;
    WordSet                             seen;
    for (auto const& w : gp.ball(radius)) {
      if (on_wall(gp, t.element, w)) {
        queue.emplace_back(w, 0);
        seen.insert(w);
      }
    }
    while (!queue.empty()) {
      auto [w, d] = queue.front();
      queue.pop_front();
      if (on_wall(gp, u.element, w)) {
        return d;
      }
      for (size_t s = 0; s < gp.num_letters(); ++s) {
        Word x = gp.multiply(w, Word{static_cast<int>(s)});
        if (seen.insert(x).second) {
          queue.emplace_back(std::move(x), d + 1);
        }
      }
      if (seen.size() > limit) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Geometric sets
  ////////////////////////////////////////////////////////////////////////

  struct GeometricSetReport {
    bool                                     geometric = true;
    std::optional<std::tuple<int, int, int>> failing;  // indices (t,u,v)
    std::vector<int>                         root_sign;  // chosen H_t
  };

  inline GeometricSetReport
  is_geometric_set(GraphProduct const& gp, std::vector<Reflection> const& T) {
    GeometricSetReport rep;
    size_t             n = T.size();
    rep.root_sign.assign(n, 1);
    std::vector<std::vector<int>> ord(n, std::vector<int>(n, 1));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        ord[i][j] = pair_order(gp, T[i], T[j]);
      }
    }
    for (size_t t = 0; t < n; ++t) {
      std::optional<int> side;
      int                first = -1;
      for (size_t u = 0; u < n; ++u) {
        if (u == t || ord[t][u] != kInf) {
          continue;
        }
        int s = side_of_wall(gp, T[t], T[u]);
        if (!side) {
          side  = s;
          first = static_cast<int>(u);
        } else if (*side != s) {
          rep.geometric = false;
          rep.failing   = std::make_tuple(
              static_cast<int>(t), first, static_cast<int>(u));
          return rep;
        }
      }
      rep.root_sign[t] = side.value_or(1);
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical generators and folding
  ////////////////////////////////////////////////////////////////////////

  struct CanonicalGenerators {
    std::vector<Reflection> R;
    // R[i] is the product of T[expr[i][0]] T[expr[i][1]] ...
    std::vector<std::vector<int>> expr;
    size_t                        steps     = 0;
    bool                          validated = false;
  };

  // Subgroup membership for a set R whose roots all contain the chamber
  // `base`; D is the intersection of those roots.
  class Folder {
   public:
    Folder(GraphProduct const& gp, std::vector<Reflection> R, Word base = {})
        : _gp(&gp), _R(std::move(R)), _base(std::move(base)) {}

    std::vector<Reflection> const& generators() const noexcept {
      return _R;
    }

    bool in_domain(Word const& w) const {
      for (auto const& t : _R) {
        if (side_relative(t.element, w) < 0) {
          return false;
        }
      }
      return true;
    }

    // w = u d with u in U and d in D; returns d and the indices of the
    // reflections t_1, ..., t_k applied, so that d = t_k ... t_1 w.
    std::pair<Word, std::vector<int>> fold(Word const& w) const {
      Word             cur = _gp->normalize(w);
      std::vector<int> used;
      while (true) {
        bool moved = false;
        for (size_t i = 0; i < _R.size(); ++i) {
          if (side_relative(_R[i].element, cur) < 0) {
            cur = _gp->multiply(_R[i].element, cur);
            used.push_back(static_cast<int>(i));
            moved = true;
            break;
          }
        }
        if (!moved) {
          return {cur, used};
        }
        if (used.size() > 100'000) {
          throw Inconclusive("folding did not terminate");
        }
      }
    }

    Word representative(Word const& w) const {
      return fold(w).first;
    }

    // w and e lie in the same U-orbit of chambers.
    bool contains(Word const& w) const {
      return representative(w) == representative(Word{});
    }

   private:
    // Sign of w relative to the root of t that contains the base chamber.
    int side_relative(Word const& t, Word const& w) const {
      return side_of(*_gp, t, w) * side_of(*_gp, t, _base);
    }

    GraphProduct const*     _gp;
    std::vector<Reflection> _R;
    Word                    _base;
  };

  // Canonical generators at the identity: descend by conjugating a
  // generator t by another generator r whenever the wall of t lies on the
  // far side of r (its distance to e then drops); then validate.
  inline CanonicalGenerators
  canonical_generators_at_identity(GraphProduct const&            gp,
                                   std::vector<Reflection> const& T,
                                   size_t step_cap = 100'000) {
    CanonicalGenerators out;
    for (size_t i = 0; i < T.size(); ++i) {
      bool dup = false;
      for (auto const& r : out.R) {
        dup = dup || r.element == T[i].element;
      }
      if (!dup) {
        out.R.push_back(T[i]);
        out.expr.push_back({static_cast<int>(i)});
      }
    }
    auto order_by_shortlex = [&]() {
      std::vector<size_t> idx(out.R.size());
      for (size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
      }
      std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return shortlex_less(out.R[a].element, out.R[b].element);
      });
      std::vector<Reflection>       R;
      std::vector<std::vector<int>> E;
      for (size_t i : idx) {
        R.push_back(out.R[i]);
        E.push_back(out.expr[i]);
      }
      out.R    = std::move(R);
      out.expr = std::move(E);
    };
    order_by_shortlex();
    while (true) {
      bool changed = false;
      for (size_t t = 0; t < out.R.size() && !changed; ++t) {
        for (size_t r = 0; r < out.R.size() && !changed; ++r) {
          if (r == t || pair_order(gp, out.R[r], out.R[t]) != kInf) {
            continue;
          }
          if (side_of_wall(gp, out.R[r], out.R[t]) > 0) {
            continue;
          }
          Word nt = gp.conjugate(out.R[t].element, out.R[r].element);
          std::vector<int> ne = out.expr[r];
          ne.insert(ne.end(), out.expr[t].begin(), out.expr[t].end());
          ne.insert(ne.end(), out.expr[r].rbegin(), out.expr[r].rend());
          bool dup = false;
          for (auto const& q : out.R) {
            dup = dup || q.element == nt;
          }
          if (dup) {
            out.R.erase(out.R.begin() + static_cast<long>(t));
            out.expr.erase(out.expr.begin() + static_cast<long>(t));
          } else {
            out.R[t]    = make_reflection(gp, nt);
            out.expr[t] = std::move(ne);
          }
          changed = true;
        }
      }
      if (!changed) {
        break;
      }
      if (++out.steps > step_cap) {
        throw Inconclusive("canonical generator descent exceeded "
                           + std::to_string(step_cap) + " steps");
      }
      order_by_shortlex();
    }
    // validation: every wall of R has a panel with exactly one chamber in D
    Folder f(gp, out.R);
    out.validated = true;
    for (auto const& r : out.R) {
      if (!f.in_domain(r.gate)
          || f.in_domain(gp.multiply(r.element, r.gate))) {
        out.validated = false;
      }
    }
    return out;
  }

  // Canonical generators relative to chamber c: translate to the identity
  // and back.
  inline CanonicalGenerators
  canonical_generators(GraphProduct const&            gp,
                       std::vector<Reflection> const& T,
                       Word const&                    c = {}) {
    if (c.empty()) {
      return canonical_generators_at_identity(gp, T);
    }
    Word                    cinv = gp.inverse(c);
    std::vector<Reflection> moved;
    for (auto const& t : T) {
      moved.push_back(make_reflection(gp, gp.conjugate(t.element, cinv)));
    }
    auto out = canonical_generators_at_identity(gp, moved);
    for (auto& r : out.R) {
      r = make_reflection(gp, gp.conjugate(r.element, c));
    }
    Folder f(gp, out.R, gp.normalize(c));
    out.validated = true;
    for (auto const& r : out.R) {
      bool found = false;
      for (auto const& y : gp.ball(c.size() + r.gate.size() + 1)) {
        if (on_wall(gp, r.element, y) && f.in_domain(y)
            && !f.in_domain(gp.multiply(r.element, y))) {
          found = true;
          break;
        }
      }
      out.validated = out.validated && found;
    }
    return out;
  }

  // Product of T elements along an expression.
  inline Word evaluate_expression(GraphProduct const&            gp,
                                  std::vector<Reflection> const& T,
                                  std::vector<int> const&        expr) {
    Word w;
    for (int i : expr) {
      w = gp.multiply(w, T[static_cast<size_t>(i)].element);
    }
    return w;
  }

}  // namespace coxlab

#endif  // COXLAB_WALLS_HPP_
