#ifndef COXLAB_SUITES_HPP_
#define COXLAB_SUITES_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affine.hpp"
#include "endo.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "graph_product.hpp"
#include "linear.hpp"
#include "probes.hpp"
#include "raag.hpp"
#include "system.hpp"
#include "tits.hpp"
#include "tree.hpp"
#include "walls.hpp"
#include "words.hpp"

namespace coxlab {

  struct CheckResult {
    int         id = 0;
    std::string name;
    bool        pass = false;
    double      seconds = 0;
    double      limit   = 0;
    std::string detail;
  };

  struct SuiteConfig {
    uint64_t seed = 1;
  };

  namespace suites {

    // Collects the first few failure messages of a check.
    class Tally {
     public:
      void fail(std::string msg) {
        ++_failures;
        if (_log.size() < 5) {
          _log.push_back(std::move(msg));
        }
      }
      void expect(bool cond, std::string const& msg) {
        if (!cond) {
          fail(msg);
        }
      }
      bool ok() const noexcept {
        return _failures == 0;
      }
      void note(std::string s) {
        _notes.push_back(std::move(s));
      }
      std::string str() const {
        std::string out;
        for (auto const& n : _notes) {
          out += (out.empty() ? "" : "; ") + n;
        }
        if (_failures != 0) {
          out += (out.empty() ? "" : "; ") + std::to_string(_failures)
                 + " failure(s)";
          for (auto const& l : _log) {
            out += " | " + l;
          }
        }
        return out;
      }

     private:
      size_t                   _failures = 0;
      std::vector<std::string> _log;
      std::vector<std::string> _notes;
    };

    inline std::vector<Word> all_words(size_t rank, size_t max_len) {
      std::vector<Word> out{Word{}};
      std::vector<Word> layer{Word{}};
      for (size_t l = 1; l <= max_len; ++l) {
        std::vector<Word> next;
        for (auto const& w : layer) {
          for (size_t s = 0; s < rank; ++s) {
            Word x = w;
            x.push_back(static_cast<int>(s));
            next.push_back(x);
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }

    inline Word random_word(std::mt19937_64& rng, size_t rank, size_t len) {
      std::uniform_int_distribution<int> d(0, static_cast<int>(rank) - 1);
      Word                               w;
      for (size_t i = 0; i < len; ++i) {
        w.push_back(d(rng));
      }
      return w;
    }

    inline size_t uniform(std::mt19937_64& rng, size_t lo, size_t hi) {
      return std::uniform_int_distribution<size_t>(lo, hi)(rng);
    }

    ////////////////////////////////////////////////////////////////////
    // 1. Normal forms against the faithful linear action
    ////////////////////////////////////////////////////////////////////

    inline void word_oracle(SuiteConfig const&, Tally& t) {
      std::vector<std::pair<std::string, CoxeterSystem>> systems{
          {"D_inf", universal_system(2)},
          {"universal-3", universal_system(3)},
          {"path-3", path_racg(3)},
          {"cycle-4", cycle_racg(4)}};
      for (auto const& [label, sys] : systems) {
        auto          gp = GraphProduct::racg(sys);
        ReflectionRep rep(sys);
        TitsEngine    eng(sys);
        std::map<Word, IntMatrix> nf_to_mat;
        std::map<IntMatrix, Word> mat_to_nf;
        size_t                    words = 0;
        for (auto const& w : all_words(sys.rank(), 5)) {
          ++words;
          Word      nf = gp.normalize(w);
          IntMatrix m  = rep.matrix(w);
          auto [i1, new1] = nf_to_mat.emplace(nf, m);
          auto [i2, new2] = mat_to_nf.emplace(m, nf);
          t.expect(i1->second == m,
                   label + ": one normal form, two elements");
          t.expect(i2->second == nf,
                   label + ": one element, two normal forms");
          t.expect(eng.normalize(w) == eng.normalize(nf),
                   label + ": Tits route disagrees on " + gp.format(w));
        }
        t.note(label + " " + std::to_string(words) + " words/"
               + std::to_string(nf_to_mat.size()) + " elements");
      }
      auto gp  = GraphProduct::racg(universal_system(3));
      auto sph = gp.spheres(6);
      for (size_t r = 1; r <= 6; ++r) {
        size_t want = 3U << (r - 1);
        t.expect(sph[r].size() == want,
                 "sphere " + std::to_string(r) + " has "
                     + std::to_string(sph[r].size()) + ", want "
                     + std::to_string(want));
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 2. Orders and centralizers over B_6
    ////////////////////////////////////////////////////////////////////

    // Order read off the faithful linear action: 1, 2, or none up to 12.
    inline Order matrix_order(ReflectionRep const& rep, Word const& x) {
      IntMatrix id = identity_matrix(rep.dimension());
      IntMatrix m  = rep.matrix(x);
      IntMatrix p  = m;
      for (long k = 1; k <= 12; ++k) {
        if (p == id) {
          return Order::finite(k);
        }
        p = mat_mul(p, m);
      }
      return Order::infinite();
    }

    inline void orders_centralizers(SuiteConfig const&, Tally& t) {
      std::vector<std::pair<std::string, CoxeterSystem>> systems{
          {"D_inf", universal_system(2)},
          {"universal-3", universal_system(3)},
          {"universal-4", universal_system(4)}};
      for (auto const& [label, sys] : systems) {
        auto          gp = GraphProduct::racg(sys);
        ReflectionRep rep(sys);
        t.expect(irreducible(sys), label + " is not irreducible");
        auto ball = gp.ball(6);
        for (auto const& x : ball) {
          Order o = element_order(gp, x);
          t.expect(o.kind != Order::Kind::unknown
                       && (o.kind == Order::Kind::infinite || o.value <= 2),
                   label + ": order outside {1,2,inf}");
          t.expect(o == matrix_order(rep, x),
                   label + ": order of " + gp.format(x) + " is " + o.str());
          auto c    = single_root_centralizer(gp, x);
          auto mine = centralizer_in_ball(gp, c, 6);
          auto brute = brute_force_centralizer(gp, x, ball);
          t.expect(mine == brute,
                   label + ": centralizer of " + gp.format(x) + " has "
                       + std::to_string(mine.size()) + " vs brute "
                       + std::to_string(brute.size()));
        }
        t.note(label + " |B_6|=" + std::to_string(ball.size()));
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 3. Geometric sets and canonical generators
    ////////////////////////////////////////////////////////////////////

    inline std::set<Word> elements_of(std::vector<Reflection> const& R) {
      std::set<Word> out;
      for (auto const& r : R) {
        out.insert(r.element);
      }
      return out;
    }

    // u in U with u R u^-1 = target, searched over U ∩ B_radius.
    inline std::optional<Word>
    conjugating_element(GraphProduct const&            gp,
                        std::vector<Reflection> const& R,
                        std::set<Word> const&          target,
                        std::vector<Word> const&       ball) {
      Folder f(gp, R);
      for (auto const& u : ball) {
        if (!f.contains(u)) {
          continue;
        }
        std::set<Word> moved;
        for (auto const& r : R) {
          moved.insert(gp.conjugate(r.element, u));
        }
        if (moved == target) {
          return u;
        }
      }
      return std::nullopt;
    }

    inline void geometry(SuiteConfig const& cfg, Tally& t) {
      {
        auto gp = GraphProduct::racg(universal_system(2));
        auto T  = make_reflections(gp, {{0}, {1}, {0, 1, 0}});
        auto g  = is_geometric_set(gp, T);
        t.expect(!g.geometric && g.failing
                     && *g.failing == std::make_tuple(0, 1, 2),
                 "{a,b,aba} should fail at (a,b,aba)");
        auto cg = canonical_generators(gp, T);
        auto conj =
            conjugating_element(gp, cg.R, {Word{0}, Word{1}}, gp.ball(6));
        t.expect(cg.R.size() == 2 && conj.has_value(),
                 "canonical generators of {a,b,aba} are not {a,b}");
      }
      std::mt19937_64 rng(cfg.seed);
      std::vector<std::pair<std::string, CoxeterSystem>> systems{
          {"universal-3", universal_system(3)},
          {"path-3", path_racg(3)},
          {"pentagon", cycle_racg(5)}};
      size_t conj_cases = 0;
      for (auto const& [label, sys] : systems) {
        auto gp    = GraphProduct::racg(sys);
        auto ball6 = gp.ball(6);
        auto ball1 = gp.ball(1);
        for (size_t trial = 0; trial < 50; ++trial) {
          size_t            k = uniform(rng, 2, 4);
          std::vector<Word> xs;
          for (size_t i = 0; i < k; ++i) {
            Word u = gp.normalize(random_word(rng, sys.rank(), uniform(rng, 0, 3)));
            int  s = static_cast<int>(uniform(rng, 0, sys.rank() - 1));
            xs.push_back(gp.conjugate(Word{s}, u));
          }
          auto T  = make_reflections(gp, xs);
          auto cg = canonical_generators(gp, T);
          std::string tag = label + " trial " + std::to_string(trial);
          t.expect(cg.R.size() <= T.size(), tag + ": |R| > |T|");
          t.expect(cg.validated, tag + ": fundamental domain check failed");
          t.expect(is_geometric_set(gp, cg.R).geometric,
                   tag + ": R not geometric");
          Folder f(gp, cg.R);
          for (size_t i = 0; i < cg.R.size(); ++i) {
            t.expect(evaluate_expression(gp, T, cg.expr[i])
                         == cg.R[i].element,
                     tag + ": R element not spelled by T");
          }
          for (auto const& x : T) {
            t.expect(f.contains(x.element), tag + ": T element outside <R>");
          }
          if (trial < 10) {
            for (auto const& c : ball1) {
              auto other = canonical_generators(gp, T, c);
              auto u = conjugating_element(gp, cg.R, elements_of(other.R),
                                           ball6);
              ++conj_cases;
              t.expect(u.has_value(), tag + ": no conjugator in U ∩ B_6 for "
                                          "chamber " + gp.format(c));
            }
          }
        }
      }
      t.note(std::to_string(conj_cases) + " conjugacy cases");
    }

    ////////////////////////////////////////////////////////////////////
    // 4. Determinants of alpha_p
    ////////////////////////////////////////////////////////////////////

    inline void determinant(SuiteConfig const&, Tally& t) {
      for (size_t n = 2; n <= 4; ++n) {
        auto sys = universal_system(n);
        for (long p : {3L, 5L, 7L}) {
          BigInt d = alpha_p_determinant(sys, p);
          t.expect(d == BigInt(p), "rank " + std::to_string(n) + ", p="
                                       + std::to_string(p) + ": det "
                                       + d.str());
        }
        t.expect(endo_determinant(sys, identity_endo(n)) == BigInt(1),
                 "det(identity) != 1 at rank " + std::to_string(n));
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 5. Complexity under composition
    ////////////////////////////////////////////////////////////////////

    // s_i -> u_i s_i u_i^-1 with short random u_i and distinct images.
    inline Endo random_sim(std::mt19937_64&     rng,
                           CoxeterSystem const& sys,
                           GraphProduct const&  gp) {
      while (true) {
        Endo           f;
        std::set<Word> seen;
        for (size_t s = 0; s < sys.rank(); ++s) {
          Word u = gp.normalize(random_word(rng, sys.rank(), uniform(rng, 0, 3)));
          Word x = gp.conjugate(Word{static_cast<int>(s)}, u);
          seen.insert(x);
          f.images.push_back(x);
        }
        if (seen.size() == sys.rank()) {
          return f;
        }
      }
    }

    inline void complexity(SuiteConfig const& cfg, Tally& t) {
      std::mt19937_64 rng(cfg.seed);
      size_t          proper = 0, strict = 0;
      for (size_t n : {2U, 3U}) {
        auto sys = universal_system(n);
        auto gp  = GraphProduct::racg(sys);
        for (size_t trial = 0; trial < 50; ++trial) {
          Endo a = random_sim(rng, sys, gp);
          Endo b = random_sim(rng, sys, gp);
          Endo ab = compose(gp, a, b);
          std::string tag = "rank " + std::to_string(n) + " trial "
                            + std::to_string(trial);
          t.expect(sim_check(sys, a).is_sim && sim_check(sys, b).is_sim
                       && sim_check(sys, ab).is_sim,
                   tag + ": not a sim");
          auto da  = complexity_matrix(sys, a).delta;
          auto dab = complexity_matrix(sys, ab).delta;
          t.expect(entrywise_geq(dab, da), tag + ": Delta decreased");
          if (classify_endo(sys, b).kind == EndoKind::sim_proper) {
            ++proper;
            bool s = dab != da;
            strict += s ? 1 : 0;
            t.expect(s, tag + ": proper factor but Delta unchanged");
          }
        }
      }
      t.note(std::to_string(proper) + " proper factors, "
             + std::to_string(strict) + " strict");
      t.expect(proper > 0, "no proper factor was sampled");
    }

    ////////////////////////////////////////////////////////////////////
    // 6. Structural phi and psi against bounded evaluation
    ////////////////////////////////////////////////////////////////////

    inline std::vector<Word> involutions(GraphProduct const&      gp,
                                         std::vector<Word> const& ball) {
      std::vector<Word> out;
      for (auto const& x : ball) {
        if (element_order(gp, x) == Order::finite(2)) {
          out.push_back(x);
        }
      }
      return out;
    }

    inline void definability(SuiteConfig const&, Tally& t) {
      constexpr size_t kRadius = 4;
      std::vector<std::pair<std::string, CoxeterSystem>> phi_systems{
          {"D_inf", universal_system(2)}, {"universal-3", universal_system(3)}};
      size_t tuples = 0, agree_true = 0;
      for (auto const& [label, sys] : phi_systems) {
        auto                  gp = GraphProduct::racg(sys);
        auto                  ball = gp.ball(kRadius);
        auto                  inv  = involutions(gp, ball);
        std::set<std::string> free;
        for (size_t i = 0; i < sys.rank(); ++i) {
          free.insert(detail::xv(i));
        }
        auto             f = parse_formula(gp, phi_gamma_formula(sys), free);
        BoundedEvaluator ev(gp, ball);
        std::vector<size_t> idx(sys.rank(), 0);
        while (true) {
          std::vector<Word> tuple;
          Assignment        env;
          for (size_t i = 0; i < idx.size(); ++i) {
            tuple.push_back(inv[idx[i]]);
            env[detail::xv(i)] = inv[idx[i]];
          }
          bool structural = phi_gamma_check(sys, tuple).holds;
          bool bounded    = ev.eval(*f, env);
          ++tuples;
          agree_true += structural && bounded ? 1 : 0;
          if (structural != bounded) {
            std::string s;
            for (auto const& w : tuple) {
              s += (s.empty() ? "" : ", ") + gp.format(w);
            }
            t.fail(label + ": phi disagrees on (" + s + ")");
          }
          size_t k = 0;
          while (k < idx.size() && ++idx[k] == inv.size()) {
            idx[k++] = 0;
          }
          if (k == idx.size()) {
            break;
          }
        }
      }
      t.note(std::to_string(tuples) + " tuples, "
             + std::to_string(agree_true) + " bases");
      std::vector<std::pair<std::string, CoxeterSystem>> psi_systems{
          {"D_inf", universal_system(2)},
          {"universal-3", universal_system(3)},
          {"pentagon", cycle_racg(5)}};
      size_t involution_count = 0;
      for (auto const& [label, sys] : psi_systems) {
        auto gp = GraphProduct::racg(sys);
        for (auto const& x : involutions(gp, gp.ball(kRadius))) {
          ++involution_count;
          t.expect(psi_reflection_check(sys, x) == psi_bounded(sys, x, kRadius),
                   label + ": psi disagrees on " + gp.format(x));
        }
      }
      t.note(std::to_string(involution_count) + " involutions");
      bool refused = false;
      try {
        psi_reflection_check(path_racg(3), Word{0});
      } catch (InvalidInput const&) {
        refused = true;
      }
      t.expect(refused, "psi was not refused on the path");
    }

    ////////////////////////////////////////////////////////////////////
    // 7. Affine models
    ////////////////////////////////////////////////////////////////////

    inline void affine(SuiteConfig const& cfg, Tally& t) {
      std::mt19937_64 rng(cfg.seed);
      for (auto const* type : {"A1~", "A2~"}) {
        std::string tag = type;
        AffineGroup g   = build_affine(type);  // validates relations
        auto        k   = kernel_cosets(g, 6);
        t.expect(k.cosets == 2 && k.normal && k.consistent,
                 tag + ": kernel has " + std::to_string(k.cosets)
                     + " cosets");
        IntegerInterpretation interp(g);
        auto                  ball = g.ball(8);
        for (size_t i = 0; i < 500; ++i) {
          auto const& x = ball[uniform(rng, 0, ball.size() - 1)];
          auto const& y = ball[uniform(rng, 0, ball.size() - 1)];
          auto        c = interp.multiply(interp.encode(x), interp.encode(y));
          t.expect(interp.decode(c) == g.multiply(x, y),
                   tag + ": code multiplication differs");
        }
        auto r7 = involution_generation_check(g, 7);
        auto r8 = involution_generation_check(g, 8);
        t.expect(r7.covered && r8.covered, tag + ": reflection length open");
        t.expect(r7.max_length == r8.max_length,
                 tag + ": max reflection length moved from "
                     + std::to_string(r7.max_length) + " to "
                     + std::to_string(r8.max_length));
        // second route on a short ball
        for (auto const& x : g.ball(4)) {
          auto lat = affine_reflection_length(g, x);
          auto srch = affine_reflection_length_search(g, x, 4, 4);
          t.expect(lat.exact && srch && *lat.exact == *srch,
                   tag + ": routes disagree on " + g.format(x));
        }
        t.note(tag + " max l_T over B_8 = " + std::to_string(r8.max_length));
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 8. RAAG embedding
    ////////////////////////////////////////////////////////////////////

    inline void raag_bridge(SuiteConfig const&, Tally& t) {
      std::vector<std::pair<std::string, SimpleGraph>> graphs{
          {"vertex", parse_graph("vertices u\n")},
          {"edge", parse_graph("vertices u v\nedge u v\n")},
          {"path-3", parse_graph("vertices u v w\nedge u v\nedge v w\n")}};
      for (auto const& [label, graph] : graphs) {
        GammaPlus   gp(graph);
        auto const& A  = gp.raag();
        auto const& W  = gp.racg();
        auto        b4 = A.ball(4);
        std::vector<Word> beta4;
        for (auto const& x : b4) {
          beta4.push_back(gp.beta(x));
        }
        for (size_t i = 0; i < b4.size(); ++i) {
          for (size_t j = 0; j < b4.size(); ++j) {
            if (gp.beta(A.multiply(b4[i], b4[j]))
                != W.multiply(beta4[i], beta4[j])) {
              t.fail(label + ": beta not multiplicative on "
                     + A.format(b4[i]) + ", " + A.format(b4[j]));
            }
          }
        }
        WordSet images;
        auto    b6 = A.ball(6);
        for (auto const& x : b6) {
          Word y = gp.beta(x);
          t.expect(gp.in_kernel(y), label + ": theta(beta) != 0");
          t.expect(images.insert(y).second,
                   label + ": beta collides at " + A.format(x));
        }
        size_t want = size_t{1} << graph.vertices.size();
        size_t got  = gp.coset_count(2 * graph.vertices.size());
        t.expect(got == want, label + ": " + std::to_string(got)
                                  + " cosets, want " + std::to_string(want));
        t.note(label + " |B_6|=" + std::to_string(b6.size()));
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 9. Witness tree
    ////////////////////////////////////////////////////////////////////

    inline void tree(SuiteConfig const&, Tally& t) {
      auto tw = unsuperstability_tree(5, 2, 3);
      t.expect(tw.clause_b1, "clause (b)(i) not certified");
      t.expect(tw.clause_b2, "clause (b)(ii) not certified");
      t.expect(tw.purity, "5-purity failed on B_5");
      t.expect(tw.clause_e, "clause (e) failed");
      t.expect(tw.clause_f && tw.max_f <= 1, "clause (f) failed");
      t.expect(tw.ok(), "tree witness incomplete");
      t.note(std::to_string(tw.nodes.size()) + " nodes, "
             + std::to_string(tw.e_checks) + " (e) checks, "
             + std::to_string(tw.f_checks) + " (f) checks");
    }

    ////////////////////////////////////////////////////////////////////
    // 10. Domain probe
    ////////////////////////////////////////////////////////////////////

    inline void domain(SuiteConfig const& cfg, Tally& t) {
      std::mt19937_64 rng(cfg.seed);
      auto            u3 = universal_system(3);
      auto            gp = GraphProduct::racg(u3);
      for (size_t i = 0; i < 20; ++i) {
        Word x, y;
        while (x.empty()) {
          x = gp.normalize(random_word(rng, 3, uniform(rng, 1, 3)));
        }
        while (y.empty()) {
          y = gp.normalize(random_word(rng, 3, uniform(rng, 1, 3)));
        }
        auto rep = domain_check(u3, x, y, 4);
        bool ok  = rep.status == DomainStatus::witness
                  && !gp.commute(x, gp.conjugate(y, gp.inverse(rep.g)));
        t.expect(ok, "no witness for (" + gp.format(x) + ", "
                         + gp.format(y) + ")");
      }
      auto two = parse_system("generators a b c d\nm a c 2\nm a d 2\n"
                              "m b c 2\nm b d 2\n");
      auto rep = domain_check(two, {0, 1}, {2, 3, 2}, 4);
      t.expect(rep.status == DomainStatus::certified_negative,
               "two components: " + std::string(to_string(rep.status)));
      auto dinf = universal_system(2);
      rep = domain_check(dinf, {0, 1}, {0, 1}, 4);
      t.expect(rep.status == DomainStatus::certified_negative,
               "D_inf: " + std::string(to_string(rep.status)));
    }

    struct Criterion {
      int         id;
      std::string name;
      double      limit;
      void (*run)(SuiteConfig const&, Tally&);
    };

    inline std::vector<Criterion> const& criteria() {
      static std::vector<Criterion> const all{
          {1, "word-oracle equivalence", 60, word_oracle},
          {2, "finite order and centralizers", 120, orders_centralizers},
          {3, "geometric sets", 120, geometry},
          {4, "determinant obstruction", 10, determinant},
          {5, "complexity monotonicity", 120, complexity},
          {6, "definability checkers", 120, definability},
          {7, "affine models", 60, affine},
          {8, "RAAG bridge", 60, raag_bridge},
          {9, "unsuperstability tree", 300, tree},
          {10, "domain probe", 60, domain}};
      return all;
    }

  }  // namespace suites

  inline CheckResult run_criterion(int id, SuiteConfig const& cfg) {
    for (auto const& c : suites::criteria()) {
      if (c.id != id) {
        continue;
      }
      CheckResult   r{c.id, c.name, false, 0, c.limit, ""};
      suites::Tally t;
      auto          t0 = std::chrono::steady_clock::now();
      try {
        c.run(cfg, t);
      } catch (std::exception const& e) {
        t.fail(std::string("exception: ") + e.what());
      }
      r.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      r.pass   = t.ok() && r.seconds < r.limit;
      r.detail = t.str();
      if (r.seconds >= r.limit) {
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time");
      }
      return r;
    }
    throw InvalidInput("no criterion " + std::to_string(id));
  }

  inline std::map<std::string, std::vector<int>> const& suite_table() {
    static std::map<std::string, std::vector<int>> const table{
        {"word-oracle", {1}},
        {"geometry", {2, 3}},
        {"sim", {4, 5}},
        {"probes", {6, 9, 10}},
        {"affine", {7}},
        {"raag", {8}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}};
    return table;
  }

  inline std::vector<CheckResult> run_suite(std::string const& name,
                                            SuiteConfig const& cfg) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) {
      throw InvalidInput("unknown suite '" + name + "'");
    }
    std::vector<CheckResult> out;
    for (int id : it->second) {
      out.push_back(run_criterion(id, cfg));
    }
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_SUITES_HPP_
