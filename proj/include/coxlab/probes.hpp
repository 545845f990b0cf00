#ifndef COXLAB_PROBES_HPP_
#define COXLAB_PROBES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endo.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "graph_product.hpp"
#include "system.hpp"
#include "tits.hpp"
#include "walls.hpp"
#include "word.hpp"
#include "words.hpp"

namespace coxlab {

  ////////////////////////////////////////////////////////////////////////
  // Bases: tuples of self-similar reflections
  ////////////////////////////////////////////////////////////////////////

  struct PhiReport {
    bool        holds = false;
    char        failing_clause = 0;  // 'a', 'b' or 'c' when false
    std::string detail;
    // when true: the cores as columns of a clique-preserving linear map
    std::vector<uint32_t> cores;
  };

  inline PhiReport phi_gamma_check(CoxeterSystem const&     sys,
                                   std::vector<Word> const& g) {
    require_right_angled(sys, "phi_Gamma");
    auto      gp = GraphProduct::racg(sys);
    size_t    n  = sys.rank();
    PhiReport rep;
    if (g.size() != n) {
      throw InvalidInput("phi_Gamma needs one element per generator");
    }
    std::vector<Word> x;
    for (auto const& w : g) {
      x.push_back(gp.normalize(w));
    }
    for (size_t l = 0; l < n; ++l) {
      if (x[l].empty() || !(element_order(gp, x[l]) == Order::finite(2))) {
        rep.failing_clause = 'a';
        rep.detail = "x" + std::to_string(l + 1) + " is not an involution";
        return rep;
      }
    }
    for (size_t l = 0; l < n; ++l) {
      for (size_t j = l + 1; j < n; ++j) {
        if (x[l] == x[j]) {
          rep.failing_clause = 'b';
          rep.detail = "x" + std::to_string(l + 1) + " = x"
                       + std::to_string(j + 1);
          return rep;
        }
        if (gp.commute(x[l], x[j]) != sys.graph_adjacent(l, j)) {
          rep.failing_clause = 'b';
          rep.detail = "commutation of x" + std::to_string(l + 1) + ", x"
                       + std::to_string(j + 1) + " does not match the graph";
          return rep;
        }
      }
    }
    std::vector<uint32_t> cores;
    for (auto const& w : x) {
      uint32_t m = 0;
      for (int v : gp.support(gp.cyclic_reduce(w).core)) {
        m |= 1U << v;
      }
      cores.push_back(m);
    }
    std::vector<uint32_t> basis;
    for (size_t l = 0; l < n; ++l) {
      uint32_t v = cores[l];
      for (uint32_t b : basis) {
        v = std::min(v, v ^ b);
      }
      if (v == 0) {
        rep.failing_clause = 'c';
        rep.detail = "core of x" + std::to_string(l + 1)
                     + " is dependent on the earlier cores";
        return rep;
      }
      basis.push_back(v);
    }
    rep.holds = true;
    rep.cores = cores;
    return rep;
  }

  namespace detail {
    inline std::string xv(size_t i) {
      return "x" + std::to_string(i + 1);
    }
    inline std::string yv(size_t i) {
      return "y" + std::to_string(i + 1);
    }
  }  // namespace detail

  // The sentence phi_Gamma(x1..xn) in the evaluator's syntax.
  inline std::string phi_gamma_formula(CoxeterSystem const& sys) {
    using detail::xv;
    using detail::yv;
    size_t                   n = sys.rank();
    std::vector<std::string> parts;
    for (size_t l = 0; l < n; ++l) {
      parts.push_back(xv(l) + "*" + xv(l) + " = e & " + xv(l) + " != e");
    }
    for (size_t l = 0; l < n; ++l) {
      for (size_t j = l + 1; j < n; ++j) {
        parts.push_back(xv(l) + " != " + xv(j));
        parts.push_back("[" + xv(l) + "," + xv(j) + "] "
                        + (sys.graph_adjacent(l, j) ? "=" : "!=") + " e");
      }
    }
    for (size_t l = 0; l < n; ++l) {
      std::vector<size_t> others;
      for (size_t i = 0; i < n; ++i) {
        if (i != l) {
          others.push_back(i);
        }
      }
      for (uint32_t k = 0; k < (1U << others.size()); ++k) {
        std::string vars = yv(l), rhs;
        for (size_t p = 0; p < others.size(); ++p) {
          if ((k >> p) & 1U) {
            vars += " " + yv(others[p]);
            rhs += (rhs.empty() ? "" : " * ") + xv(others[p]) + "^"
                   + yv(others[p]);
          }
        }
        parts.push_back("forall " + vars + " . " + xv(l) + "^" + yv(l)
                        + " != " + (rhs.empty() ? "e" : rhs));
      }
    }
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "(" : " & (") + p + ")";
    }
    return out;
  }

  inline std::string psi_formula() {
    return "x*x = e & x != e & !(exists y . y*y = e & y != e & y != x & "
           "(forall z . z*z = e -> ([z,x] = e -> [z,y] = e)))";
  }

  inline void require_star_property(CoxeterSystem const& sys) {
    require_right_angled(sys, "psi");
    if (!graph_predicates(sys).star_property) {
      throw InvalidInput("star property fails; psi does not define the "
                         "reflections of this system");
    }
  }

  inline bool psi_reflection_check(CoxeterSystem const& sys, Word const& x) {
    require_star_property(sys);
    auto gp = GraphProduct::racg(sys);
    return is_reflection(gp, x);
  }

  inline bool psi_bounded(CoxeterSystem const& sys,
                          Word const&          x,
                          size_t               radius) {
    require_star_property(sys);
    auto gp = GraphProduct::racg(sys);
    auto f  = parse_formula(gp, psi_formula(), {"x"});
    return fo_eval(gp, *f, {{"x", gp.normalize(x)}}, radius);
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite continuation
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::vector<int>>
  maximal_spherical_subsets(CoxeterSystem const& sys) {
    size_t                        n = sys.rank();
    std::vector<uint32_t>         sph;
    for (uint32_t m = 0; m < (1U << n); ++m) {
      std::vector<int> sub;
      for (size_t i = 0; i < n; ++i) {
        if ((m >> i) & 1U) {
          sub.push_back(static_cast<int>(i));
        }
      }
      if (sub.empty() || is_spherical_subset(sys, sub)) {
        sph.push_back(m);
      }
    }
    std::vector<std::vector<int>> out;
    for (uint32_t m : sph) {
      bool maximal = true;
      for (uint32_t o : sph) {
        maximal = maximal && !(o != m && (o & m) == m);
      }
      if (maximal) {
        std::vector<int> sub;
        for (size_t i = 0; i < n; ++i) {
          if ((m >> i) & 1U) {
            sub.push_back(static_cast<int>(i));
          }
        }
        out.push_back(sub);
      }
    }
    return out;
  }

  struct FiniteContinuation {
    std::vector<Word> elements;
    size_t            radius      = 0;
    size_t            subgroups   = 0;  // conjugates containing w, with repeats
  };

  // Intersection of the conjugates u W_J u^-1 (J maximal spherical,
  // l(u) <= radius) that contain w.
  inline FiniteContinuation finite_continuation(CoxeterSystem const& sys,
                                                Word const&          w,
                                                size_t               radius) {
    TitsEngine eng(sys);
    Word       x = eng.normalize(w);
    Order      o = eng.order(x, 64);
    if (o.kind != Order::Kind::finite) {
      throw InvalidInput("finite continuation needs an element of finite "
                         "order");
    }
    FiniteContinuation out;
    out.radius = radius;
    std::optional<WordSet> acc;
    auto                   ball = eng.ball(radius);
    for (auto const& J : maximal_spherical_subsets(sys)) {
      std::vector<Word> gens;
      for (int s : J) {
        gens.push_back(Word{s});
      }
      auto    base = eng.closure(gens);
      WordSet seen_groups;
      for (auto const& u : ball) {
        WordSet conj;
        Word    uinv = eng.inverse(u);
        for (auto const& g : base) {
          conj.insert(eng.multiply(eng.multiply(u, g), uinv));
        }
        if (conj.count(x) == 0) {
          continue;
        }
        ++out.subgroups;
        if (!acc) {
          acc = conj;
        } else {
          WordSet keep;
          for (auto const& g : *acc) {
            if (conj.count(g) != 0) {
              keep.insert(g);
            }
          }
          acc = std::move(keep);
        }
      }
    }
    if (!acc) {
      throw Inconclusive("no spherical conjugate within radius "
                         + std::to_string(radius) + " contains the element");
    }
    out.elements.assign(acc->begin(), acc->end());
    std::sort(out.elements.begin(), out.elements.end(), shortlex_less);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Domain property
  ////////////////////////////////////////////////////////////////////////

  enum class DomainStatus { witness, exhausted, certified_negative };

  inline char const* to_string(DomainStatus s) {
    switch (s) {
      case DomainStatus::witness:
        return "witness";
      case DomainStatus::exhausted:
        return "exhausted";
      default:
        return "certified-negative";
    }
  }

  struct DomainReport {
    DomainStatus status = DomainStatus::exhausted;
    Word         g;
    size_t       radius = 0;
    std::string  reason;
  };

  namespace detail {

    template <typename G>
    DomainReport domain_check_impl(CoxeterSystem const& sys,
                                   G const&             grp,
                                   Word const&          x0,
                                   Word const&          y0,
                                   size_t               radius,
                                   std::vector<Word> const& ball) {
      Word x = grp.normalize(x0), y = grp.normalize(y0);
      if (x.empty() || y.empty()) {
        throw InvalidInput("domain check needs x != e and y != e");
      }
      DomainReport rep;
      rep.radius = radius;
      // supports in different diagram components commute elementwise
      auto comps = diagram_components(sys);
      auto comp_of = [&](int s) {
        for (size_t c = 0; c < comps.size(); ++c) {
          if (std::find(comps[c].begin(), comps[c].end(), s)
              != comps[c].end()) {
            return c;
          }
        }
        return comps.size();
      };
      bool separated = true;
      for (int s : x) {
        for (int t : y) {
          separated = separated && comp_of(s) != comp_of(t);
        }
      }
      if (separated) {
        rep.status = DomainStatus::certified_negative;
        rep.reason = "supports lie in different irreducible components";
        return rep;
      }
      auto commutes = [&](Word const& a, Word const& b) {
        return grp.multiply(a, b) == grp.multiply(b, a);
      };
      for (auto const& g : ball) {
        Word yg = grp.multiply(grp.multiply(grp.inverse(g), y), g);
        if (!commutes(x, yg)) {
          rep.status = DomainStatus::witness;
          rep.g      = g;
          return rep;
        }
      }
      // close the conjugacy class of y under generator conjugation
      WordSet          cls{y};
      std::deque<Word> queue{y};
      size_t const     cap = 10'000;
      while (!queue.empty() && cls.size() <= cap) {
        Word z = queue.front();
        queue.pop_front();
        for (size_t s = 0; s < sys.rank(); ++s) {
          Word sw{static_cast<int>(s)};
          Word c = grp.multiply(grp.multiply(sw, z), sw);
          if (cls.insert(c).second) {
            queue.push_back(c);
          }
        }
      }
      if (queue.empty()) {
        bool all = true;
        for (auto const& c : cls) {
          all = all && commutes(x, c);
        }
        if (all) {
          rep.status = DomainStatus::certified_negative;
          rep.reason = "conjugacy class of y is finite ("
                       + std::to_string(cls.size())
                       + " elements) and centralizes x";
          return rep;
        }
      }
      rep.status = DomainStatus::exhausted;
      rep.reason = "no witness in the ball of radius " + std::to_string(radius);
      return rep;
    }

  }  // namespace detail

  inline DomainReport domain_check(CoxeterSystem const& sys,
                                   Word const&          x,
                                   Word const&          y,
                                   size_t               radius) {
    if (sys.right_angled()) {
      auto gp = GraphProduct::racg(sys);
      return detail::domain_check_impl(sys, gp, x, y, radius, gp.ball(radius));
    }
    TitsEngine eng(sys);
    return detail::domain_check_impl(sys, eng, x, y, radius, eng.ball(radius));
  }

  ////////////////////////////////////////////////////////////////////////
  // Coxeter-element rigidity
  ////////////////////////////////////////////////////////////////////////

  struct RigidityReport {
    size_t            candidates = 0;  // image tuples examined
    size_t            sims       = 0;  // sims with all entries <= cap
    std::vector<Endo> proper_fixing;   // proper sims fixing h
    size_t            automorphisms_fixing = 0;
  };

  // Images s -> u s u^-1 with l(u) <= cap; keeps sims whose complexity
  // entries are all <= cap.
  inline RigidityReport rigidity_check(CoxeterSystem const& sys,
                                       Word const&          h,
                                       size_t               cap) {
    require_star_property(sys);
    if (!sys.even()) {
      throw InvalidInput("rigidity check needs an even system");
    }
    auto gp = GraphProduct::racg(sys);
    Word hh = gp.normalize(h);
    std::vector<std::vector<Word>> choices(sys.rank());
    auto ball = gp.ball(cap);
    for (size_t s = 0; s < sys.rank(); ++s) {
      WordSet seen;
      for (auto const& u : ball) {
        Word c = gp.conjugate(Word{static_cast<int>(s)}, u);
        if (seen.insert(c).second) {
          choices[s].push_back(c);
        }
      }
      std::sort(choices[s].begin(), choices[s].end(), shortlex_less);
    }
    RigidityReport    rep;
    std::vector<Word> img(sys.rank());
    auto rec = [&](auto&& self, size_t s) -> void {
      if (s == sys.rank()) {
        ++rep.candidates;
        Endo f;
        f.images = img;
        if (!sim_check_racg(sys, f).is_sim) {
          return;
        }
        auto cm = complexity_matrix(sys, f);
        for (auto const& row : cm.delta) {
          for (size_t d : row) {
            if (d > cap) {
              return;
            }
          }
        }
        ++rep.sims;
        if (apply_endo(gp, f, hh) != hh) {
          return;
        }
        auto cls = classify_endo(sys, f);
        if (cls.kind == EndoKind::automorphism) {
          ++rep.automorphisms_fixing;
        } else {
          f.kind = cls.kind;
          rep.proper_fixing.push_back(f);
        }
        return;
      }
      for (auto const& c : choices[s]) {
        img[s] = c;
        self(self, s + 1);
      }
    };
    rec(rec, 0);
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2-spherical reflection tuples
  ////////////////////////////////////////////////////////////////////////

  struct DeltaReport {
    bool        holds = false;
    std::string failing_clause;  // "i" or "ii" when false
    std::string detail;
  };

  inline void require_delta_scope(CoxeterSystem const& sys) {
    if (!irreducible(sys)) {
      throw InvalidInput("delta needs an irreducible system");
    }
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        if (sys.m(i, j) == kInf) {
          throw InvalidInput("delta needs a 2-spherical system");
        }
      }
    }
    if (!sys.even()) {
      throw InvalidInput("delta needs an even system");
    }
    auto rep = classify(sys);
    if (rep.types.front().kind != ComponentKind::other) {
      throw InvalidInput("delta needs a system that is neither spherical "
                         "nor affine");
    }
  }

  inline DeltaReport delta_2spherical_check(CoxeterSystem const&     sys,
                                            std::vector<Word> const& xs,
                                            size_t conj_length = 24) {
    require_delta_scope(sys);
    if (xs.size() != sys.rank()) {
      throw InvalidInput("delta needs one element per generator");
    }
    TitsEngine        eng(sys);
    DeltaReport       rep;
    std::vector<Word> x;
    for (auto const& w : xs) {
      x.push_back(eng.normalize(w));
    }
    for (size_t i = 0; i < x.size(); ++i) {
      if (!(eng.order(x[i]) == Order::finite(2))
          || eng.reflection_class(x[i], std::max(conj_length, x[i].size()))
                 < 0) {
        rep.failing_clause = "i";
        rep.detail = "x" + std::to_string(i + 1) + " is not a reflection";
        return rep;
      }
    }
    for (size_t i = 0; i < x.size(); ++i) {
      for (size_t j = i + 1; j < x.size(); ++j) {
        long  m = sys.m(i, j);
        Order o = eng.order(eng.multiply(x[i], x[j]), m + 1);
        if (!(o == Order::finite(m))) {
          rep.failing_clause = "ii";
          rep.detail = "o(x" + std::to_string(i + 1) + " x"
                       + std::to_string(j + 1) + ") = " + o.str()
                       + ", expected " + std::to_string(m);
          return rep;
        }
      }
    }
    rep.holds = true;
    return rep;
  }

}  // namespace coxlab

#endif  // COXLAB_PROBES_HPP_
