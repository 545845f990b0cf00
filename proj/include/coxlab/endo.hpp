#ifndef COXLAB_ENDO_HPP_
#define COXLAB_ENDO_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_product.hpp"
#include "linear.hpp"
#include "system.hpp"
#include "tits.hpp"
#include "walls.hpp"
#include "word.hpp"
#include "words.hpp"

namespace coxlab {

  enum class EndoKind { unknown, not_sim, sim, sim_proper, automorphism };

  inline char const* to_string(EndoKind k) {
    switch (k) {
      case EndoKind::not_sim:
        return "not-sim";
      case EndoKind::sim:
        return "sim";
      case EndoKind::sim_proper:
        return "sim-proper";
      case EndoKind::automorphism:
        return "automorphism";
      default:
        return "unknown";
    }
  }

  // A map S -> W given by the images of the generators.
  struct Endo {
    std::vector<Word> images;
    EndoKind          kind = EndoKind::unknown;
    std::string       reason;
  };

  inline Endo identity_endo(size_t rank) {
    Endo e;
    for (size_t s = 0; s < rank; ++s) {
      e.images.push_back(Word{static_cast<int>(s)});
    }
    return e;
  }

  // Lines "map <s> = <word>"; unmapped generators are fixed.
  inline Endo parse_endo(CoxeterSystem const& sys, std::string const& text) {
    Endo               e = identity_endo(sys.rank());
    std::vector<bool>  set(sys.rank(), false);
    std::istringstream in(text);
    std::string        line;
    size_t             lineno = 0;
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
      if (tok.size() < 3 || tok[0] != "map" || tok[2] != "=") {
        throw InvalidInput("line " + std::to_string(lineno)
                           + ": expected 'map <s> = <word>'");
      }
      auto s = static_cast<size_t>(sys.index_of(tok[1]));
      if (set[s]) {
        throw InvalidInput("line " + std::to_string(lineno)
                           + ": generator mapped twice");
      }
      set[s] = true;
      std::string rest;
      for (size_t i = 3; i < tok.size(); ++i) {
        rest += tok[i] + " ";
      }
      e.images[s] = parse_coxeter_word(sys, rest);
    }
    return e;
  }

  inline Endo load_endo(CoxeterSystem const& sys, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_endo(sys, ss.str());
  }

  inline Word apply_endo(GraphProduct const& gp, Endo const& f, Word const& w) {
    Word out;
    for (int l : w) {
      out = gp.multiply(out, f.images.at(static_cast<size_t>(l)));
    }
    return out;
  }

  // (f o g)(s) = f(g(s))
  inline Endo compose(GraphProduct const& gp, Endo const& f, Endo const& g) {
    Endo out;
    for (auto const& img : g.images) {
      out.images.push_back(apply_endo(gp, f, img));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sim membership
  ////////////////////////////////////////////////////////////////////////

  struct SimReport {
    bool                     is_sim = false;
    bool                     decided = true;
    std::vector<std::string> failures;
  };

  inline SimReport sim_check_racg(CoxeterSystem const& sys, Endo const& f) {
    auto      gp = GraphProduct::racg(sys);
    SimReport rep;
    if (f.images.size() != sys.rank()) {
      throw InvalidInput("endomorphism must give one image per generator");
    }
    std::vector<Word> img;
    for (size_t s = 0; s < sys.rank(); ++s) {
      img.push_back(gp.normalize(f.images[s]));
      auto cf = gp.cyclic_reduce(img.back());
      if (cf.core.size() != 1 || cf.core[0] != static_cast<int>(s)) {
        rep.failures.push_back("image of " + sys.name(s) + " = "
                               + gp.format(img.back()) + " is not in "
                               + sys.name(s) + "^W");
      }
    }
    for (size_t s = 0; s < sys.rank(); ++s) {
      for (size_t t = s + 1; t < sys.rank(); ++t) {
        Order want = sys.m(s, t) == kInf ? Order::infinite()
                                         : Order::finite(sys.m(s, t));
        Order got  = element_order(gp, gp.multiply(img[s], img[t]));
        if (!(want == got)) {
          rep.failures.push_back("o(f(" + sys.name(s) + ") f(" + sys.name(t)
                                 + ")) = " + got.str() + ", expected "
                                 + want.str());
        }
      }
    }
    rep.is_sim = rep.failures.empty();
    return rep;
  }

  // General systems: conjugacy class by bounded search, orders by power
  // iteration with the default cutoff.
  inline SimReport sim_check_general(CoxeterSystem const& sys,
                                     Endo const&          f,
                                     size_t conj_length = 16) {
    TitsEngine eng(sys);
    SimReport  rep;
    auto       ab = abelianization(sys);
    std::vector<Word> img;
    for (size_t s = 0; s < sys.rank(); ++s) {
      img.push_back(eng.normalize(f.images.at(s)));
      int g = eng.reflection_class(img.back(), conj_length);
      if (g < 0) {
        rep.failures.push_back("no conjugate of a generator found for f("
                               + sys.name(s) + ") within length "
                               + std::to_string(conj_length));
        rep.decided = false;
      } else if (ab.class_of[static_cast<size_t>(g)] != ab.class_of[s]) {
        rep.failures.push_back("f(" + sys.name(s) + ") is conjugate to "
                               + sys.name(static_cast<size_t>(g))
                               + ", not to " + sys.name(s));
      }
    }
    for (size_t s = 0; s < sys.rank(); ++s) {
      for (size_t t = s + 1; t < sys.rank(); ++t) {
        Order got = eng.order(eng.multiply(img[s], img[t]));
        int   m   = sys.m(s, t);
        if (m == kInf) {
          if (got.kind == Order::Kind::finite) {
            rep.failures.push_back("o(f(" + sys.name(s) + ") f("
                                   + sys.name(t) + ")) = " + got.str()
                                   + ", expected inf");
          } else {
            rep.decided = false;
          }
        } else if (!(got == Order::finite(m))) {
          rep.failures.push_back("o(f(" + sys.name(s) + ") f(" + sys.name(t)
                                 + ")) = " + got.str() + ", expected "
                                 + std::to_string(m));
        }
      }
    }
    rep.is_sim = rep.failures.empty();
    return rep;
  }

  inline SimReport sim_check(CoxeterSystem const& sys, Endo const& f) {
    return sys.right_angled() ? sim_check_racg(sys, f)
                              : sim_check_general(sys, f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Automorphism or proper, complexity matrices
  ////////////////////////////////////////////////////////////////////////

  struct EndoClassification {
    EndoKind                kind = EndoKind::unknown;
    std::vector<Word>       inverse;  // images of the inverse map
    std::vector<int>        missing;  // generators outside the image
    CanonicalGenerators     canon;
  };

  inline EndoClassification classify_endo(CoxeterSystem const& sys,
                                          Endo const&          f) {
    auto gp  = GraphProduct::racg(sys);
    auto rep = sim_check_racg(sys, f);
    if (!rep.is_sim) {
      throw InvalidInput("not a self-similarity: " + rep.failures.front());
    }
    std::vector<Word> img;
    for (auto const& w : f.images) {
      img.push_back(gp.normalize(w));
    }
    auto T = make_reflections(gp, img);
    EndoClassification out;
    out.canon = canonical_generators(gp, T);
    Folder fold(gp, out.canon.R);
    for (size_t s = 0; s < sys.rank(); ++s) {
      auto [rep_s, used] = fold.fold(Word{static_cast<int>(s)});
      if (!rep_s.empty()) {
        out.missing.push_back(static_cast<int>(s));
        continue;
      }
      // s = t_1 ... t_k, each t_j a product of images
      Word pre;
      for (int j : used) {
        auto const& e = out.canon.expr[static_cast<size_t>(j)];
        for (int i : e) {
          pre.push_back(i);
        }
      }
      out.inverse.push_back(gp.normalize(pre));
    }
    if (out.missing.empty()) {
      out.kind = EndoKind::automorphism;
      Endo inv;
      inv.images = out.inverse;
      for (size_t s = 0; s < sys.rank(); ++s) {
        if (apply_endo(gp, f, inv.images[s]) != Word{static_cast<int>(s)}) {
          throw InvalidInput("inverse certificate failed to verify");
        }
      }
    } else {
      out.kind = EndoKind::sim_proper;
      out.inverse.clear();
    }
    return out;
  }

  using ComplexityMatrix = std::vector<std::vector<size_t>>;

  struct ComplexityResult {
    ComplexityMatrix        delta;
    std::vector<Reflection> geometrized;  // beta(s) for each generator s
  };

  // Wall distances between the canonical generators of the image,
  // matched to S by the letter of their conjugacy class.
  inline ComplexityResult complexity_matrix(CoxeterSystem const& sys,
                                            Endo const&          f) {
    if (!sys.even()) {
      throw InvalidInput("complexity matrices need an even system");
    }
    auto gp  = GraphProduct::racg(sys);
    auto rep = sim_check_racg(sys, f);
    if (!rep.is_sim) {
      throw InvalidInput("not a self-similarity: " + rep.failures.front());
    }
    std::vector<Word> img;
    for (auto const& w : f.images) {
      img.push_back(gp.normalize(w));
    }
    auto canon = canonical_generators(gp, make_reflections(gp, img));
    if (canon.R.size() != sys.rank()) {
      throw InvalidInput("geometrization has " + std::to_string(canon.R.size())
                         + " generators, expected "
                         + std::to_string(sys.rank()));
    }
    ComplexityResult out;
    out.geometrized.resize(sys.rank());
    std::vector<bool> hit(sys.rank(), false);
    for (auto const& r : canon.R) {
      auto s = static_cast<size_t>(r.letter);
      if (hit[s]) {
        throw InvalidInput("geometrization repeats the class of "
                           + sys.name(s));
      }
      hit[s]            = true;
      out.geometrized[s] = r;
    }
    size_t n = sys.rank();
    out.delta.assign(n, std::vector<size_t>(n, 0));
    for (size_t s = 0; s < n; ++s) {
      for (size_t t = s + 1; t < n; ++t) {
        size_t d = wall_distance(gp, out.geometrized[s], out.geometrized[t]);
        out.delta[s][t] = out.delta[t][s] = d;
      }
    }
    return out;
  }

  inline bool entrywise_geq(ComplexityMatrix const& a,
                            ComplexityMatrix const& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] < b[i][j]) {
          return false;
        }
      }
    }
    return true;
  }

  inline size_t entry_sum(ComplexityMatrix const& a) {
    size_t s = 0;
    for (auto const& row : a) {
      for (size_t x : row) {
        s += x;
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial conjugations and F(Gamma)
  ////////////////////////////////////////////////////////////////////////

  inline Endo partial_conjugation(CoxeterSystem const&    sys,
                                  int                     s,
                                  std::vector<int> const& C) {
    require_right_angled(sys, "partial conjugations");
    auto star  = closed_star(sys, static_cast<size_t>(s));
    auto comps = graph_components_without(sys, star);
    std::vector<int> sorted = C;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> covered;
    for (auto const& comp : comps) {
      bool any = false, all = true;
      for (int v : comp) {
        bool in = std::binary_search(sorted.begin(), sorted.end(), v);
        any     = any || in;
        all     = all && in;
      }
      if (any && !all) {
        throw InvalidInput("C must be a union of components of Gamma - N*(s)");
      }
      if (all) {
        covered.insert(covered.end(), comp.begin(), comp.end());
      }
    }
    std::sort(covered.begin(), covered.end());
    if (covered != sorted) {
      throw InvalidInput("C must be a union of components of Gamma - N*(s)");
    }
    Endo e = identity_endo(sys.rank());
    for (int t : sorted) {
      e.images[static_cast<size_t>(t)] = Word{s, t, s};
    }
    auto gp = GraphProduct::racg(sys);
    for (auto& w : e.images) {
      w = gp.normalize(w);
    }
    return e;
  }

  // A linear map of GF(2)^S as the list of column bitmasks.
  struct F2LinearMap {
    std::vector<uint32_t> columns;

    bool is_permutation() const {
      for (auto c : columns) {
        if (__builtin_popcount(c) != 1) {
          return false;
        }
      }
      return true;
    }

    uint32_t apply(uint32_t v) const {
      uint32_t out = 0;
      for (size_t i = 0; i < columns.size(); ++i) {
        if ((v >> i) & 1U) {
          out ^= columns[i];
        }
      }
      return out;
    }
  };

  inline bool is_clique_mask(CoxeterSystem const& sys, uint32_t mask) {
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        if (((mask >> i) & 1U) && ((mask >> j) & 1U)
            && !sys.graph_adjacent(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<F2LinearMap> enumerate_F_gamma(CoxeterSystem const& sys,
                                                    size_t max_rank = 6) {
    require_right_angled(sys, "F(Gamma)");
    size_t n = sys.rank();
    if (n > max_rank) {
      throw InvalidInput("F(Gamma) enumeration is capped at rank "
                         + std::to_string(max_rank));
    }
    std::vector<uint32_t> cliques;  // nonempty
    for (uint32_t m = 1; m < (1U << n); ++m) {
      if (is_clique_mask(sys, m)) {
        cliques.push_back(m);
      }
    }
    std::vector<F2LinearMap> out;
    std::vector<uint32_t>    cols;
    // reduced basis of the span of chosen columns, for independence
    auto independent = [&](std::vector<uint32_t> const& vs) {
      std::vector<uint32_t> basis;
      for (uint32_t v : vs) {
        for (uint32_t b : basis) {
          v = std::min(v, v ^ b);
        }
        if (v == 0) {
          return false;
        }
        basis.push_back(v);
      }
      return true;
    };
    auto rec = [&](auto&& self, size_t k) -> void {
      if (k == n) {
        out.push_back({cols});
        return;
      }
      for (uint32_t c : cliques) {
        cols.push_back(c);
        bool ok = independent(cols);
        // every clique containing k inside {0..k} must map to a clique
        for (uint32_t cl : cliques) {
          if (!ok) {
            break;
          }
          if (!((cl >> k) & 1U) || (cl >> (k + 1)) != 0) {
            continue;
          }
          uint32_t img = 0;
          for (size_t i = 0; i <= k; ++i) {
            if ((cl >> i) & 1U) {
              img ^= cols[i];
            }
          }
          ok = is_clique_mask(sys, img);
        }
        if (ok) {
          self(self, k + 1);
        }
        cols.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  inline std::vector<F2LinearMap>
  graph_automorphisms(CoxeterSystem const& sys) {
    size_t              n = sys.rank();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    std::vector<F2LinearMap> out;
    do {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        for (size_t j = 0; j < n && ok; ++j) {
          ok = sys.graph_adjacent(i, j) == sys.graph_adjacent(perm[i], perm[j]);
        }
      }
      if (ok) {
        F2LinearMap m;
        for (size_t i = 0; i < n; ++i) {
          m.columns.push_back(1U << perm[i]);
        }
        out.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  // s -> product of the generators in the clique alpha(s).
  inline Endo endo_of_F2_map(CoxeterSystem const& sys, F2LinearMap const& m) {
    Endo e;
    for (size_t s = 0; s < sys.rank(); ++s) {
      Word w;
      for (size_t t = 0; t < sys.rank(); ++t) {
        if ((m.columns[s] >> t) & 1U) {
          w.push_back(static_cast<int>(t));
        }
      }
      e.images.push_back(w);
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal groups: free coordinates on the even subgroup
  ////////////////////////////////////////////////////////////////////////

  inline void require_universal(CoxeterSystem const& sys) {
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        if (sys.m(i, j) != kInf) {
          throw InvalidInput("this operation needs a universal system");
        }
      }
    }
  }

  // Free group words: letter +i is x_i = s_0 s_i, -i its inverse.
  using FreeWord = std::vector<int>;

  inline FreeWord free_reduce(FreeWord const& w) {
    FreeWord out;
    for (int x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  // s_a s_b = x_a^-1 x_b with x_0 = e.
  inline FreeWord to_free_coordinates(CoxeterSystem const& sys,
                                      Word const&          w) {
    require_universal(sys);
    auto gp = GraphProduct::racg(sys);
    Word x  = gp.normalize(w);
    if (x.size() % 2 != 0) {
      throw InvalidInput("only even-length elements have free coordinates");
    }
    FreeWord out;
    for (size_t i = 0; i < x.size(); i += 2) {
      if (x[i] != 0) {
        out.push_back(-x[i]);
      }
      if (x[i + 1] != 0) {
        out.push_back(x[i + 1]);
      }
    }
    return free_reduce(out);
  }

  inline Word from_free_coordinates(CoxeterSystem const& sys,
                                    FreeWord const&      fw) {
    auto gp = GraphProduct::racg(sys);
    Word w;
    for (int x : fw) {
      int i = x < 0 ? -x : x;
      w     = gp.multiply(w, x > 0 ? Word{0, i} : Word{i, 0});
    }
    return w;
  }

  inline std::vector<long long> free_abelianize(FreeWord const& w, size_t n) {
    std::vector<long long> v(n, 0);
    for (int x : w) {
      v[static_cast<size_t>((x < 0 ? -x : x) - 1)] += x < 0 ? -1 : 1;
    }
    return v;
  }

  // s_n -> s_n s_0 s_n ... s_0 s_n (length 2p - 1), others fixed.
  inline Endo alpha_p(CoxeterSystem const& sys, long p) {
    require_universal(sys);
    if (sys.rank() < 2) {
      throw InvalidInput("alpha_p needs rank at least 2");
    }
    if (p < 1) {
      throw InvalidInput("p must be positive");
    }
    int  n = static_cast<int>(sys.rank()) - 1;
    Endo e = identity_endo(sys.rank());
    Word w;
    for (long i = 0; i < 2 * p - 1; ++i) {
      w.push_back(i % 2 == 0 ? n : 0);
    }
    e.images[static_cast<size_t>(n)] = w;
    return e;
  }

  // Abelianized action on the free basis x_1..x_n of the even subgroup.
  inline IntMatrix even_subgroup_matrix(CoxeterSystem const& sys,
                                        Endo const&          f) {
    require_universal(sys);
    auto      gp = GraphProduct::racg(sys);
    size_t    n  = sys.rank() - 1;
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (size_t i = 1; i <= n; ++i) {
      Word img = gp.multiply(f.images[0], f.images[i]);
      auto col = free_abelianize(to_free_coordinates(sys, img), n);
      for (size_t r = 0; r < n; ++r) {
        m[r][i - 1] = col[r];
      }
    }
    return m;
  }

  inline BigInt endo_determinant(CoxeterSystem const& sys, Endo const& f) {
    return determinant(even_subgroup_matrix(sys, f));
  }

  inline BigInt alpha_p_determinant(CoxeterSystem const& sys, long p) {
    if (p < 3 || p % 2 == 0) {
      throw InvalidInput("p must be an odd prime");
    }
    for (long d = 3; d * d <= p; d += 2) {
      if (p % d == 0) {
        throw InvalidInput("p must be an odd prime");
      }
    }
    return endo_determinant(sys, alpha_p(sys, p));
  }

}  // namespace coxlab

#endif  // COXLAB_ENDO_HPP_
