#ifndef COXLAB_TREE_HPP_
#define COXLAB_TREE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endo.hpp"
#include "error.hpp"
#include "graph_product.hpp"
#include "system.hpp"
#include "word.hpp"

namespace coxlab {

  ////////////////////////////////////////////////////////////////////////
  // Free group arithmetic (letters +-i, i >= 1)
  ////////////////////////////////////////////////////////////////////////

  inline FreeWord free_multiply(FreeWord const& a, FreeWord const& b) {
    FreeWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return free_reduce(w);
  }

  inline FreeWord free_inverse(FreeWord const& a) {
    FreeWord w(a.rbegin(), a.rend());
    for (auto& x : w) {
      x = -x;
    }
    return w;
  }

  inline FreeWord free_power(FreeWord const& a, long k) {
    FreeWord base = k < 0 ? free_inverse(a) : a;
    FreeWord r;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      r = free_multiply(r, base);
    }
    return r;
  }

  // w = h c h^-1 with c cyclically reduced, c = r^k with r not a proper
  // power.
  struct FreeCyclic {
    FreeWord h, c, r;
    long     k = 0;
  };

  inline FreeCyclic free_cyclic(FreeWord const& w0) {
    FreeWord   w = free_reduce(w0);
    FreeCyclic out;
    size_t     i = 0, j = w.size();
    while (j > i + 1 && w[i] == -w[j - 1]) {
      ++i;
      --j;
    }
    out.h.assign(w.begin(), w.begin() + static_cast<long>(i));
    out.c.assign(w.begin() + static_cast<long>(i),
                 w.begin() + static_cast<long>(j));
    if (out.c.empty()) {
      return out;
    }
    size_t n = out.c.size();
    for (size_t p = 1; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool periodic = true;
      for (size_t q = p; q < n && periodic; ++q) {
        periodic = out.c[q] == out.c[q - p];
      }
      if (periodic) {
        out.r.assign(out.c.begin(), out.c.begin() + static_cast<long>(p));
        out.k = static_cast<long>(n / p);
        break;
      }
    }
    return out;
  }

  // The unique x with x^n = w, if any.
  inline std::optional<FreeWord> free_root(FreeWord const& w, long n) {
    auto cd = free_cyclic(w);
    if (cd.c.empty()) {
      return FreeWord{};
    }
    if (cd.k % n != 0) {
      return std::nullopt;
    }
    return free_multiply(free_multiply(cd.h, free_power(cd.r, cd.k / n)),
                         free_inverse(cd.h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness tree
  ////////////////////////////////////////////////////////////////////////

  // w_0(z) = z, w_{m+1}(z, y_0..y_m) = w_m(y_m z^n, y_0..y_{m-1});
  // so w_m(z) = F_0(F_1(..F_{m-1}(z))) with F_i(u) = y_i u^n.
  template <typename Mul, typename Pow, typename T>
  T w_word(T const& z, std::vector<T> const& y, long n, Mul mul, Pow pw) {
    T u = z;
    for (size_t i = y.size(); i-- > 0;) {
      u = mul(y[i], pw(u, n));
    }
    return u;
  }

  struct TreeNode {
    std::vector<int> eta;
    Word             b;
  };

  struct TreeWitness {
    long                     n = 0;
    size_t                   depth = 0, branching = 0;
    std::vector<FreeWord>    pool_free;
    std::vector<Word>        pool;
    std::vector<TreeNode>    nodes;
    bool                     clause_b1 = false;
    bool                     clause_b2 = false;
    bool                     purity    = false;
    bool                     clause_e  = false;
    bool                     clause_f  = false;
    size_t                   e_checks  = 0;
    size_t                   f_checks  = 0;
    size_t                   max_f     = 0;
    std::vector<std::string> log;

    bool ok() const {
      return clause_b1 && clause_b2 && purity && clause_e && clause_f;
    }
  };

  namespace detail {

    inline bool is_prime(long p) {
      if (p < 2) {
        return false;
      }
      for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    inline void increasing_sequences(size_t                         pool,
                                     size_t                         len,
                                     std::vector<int>&              cur,
                                     std::vector<std::vector<int>>& out) {
      if (cur.size() == len) {
        out.push_back(cur);
        return;
      }
      int start = cur.empty() ? 0 : cur.back() + 1;
      for (int i = start; i < static_cast<int>(pool); ++i) {
        cur.push_back(i);
        increasing_sequences(pool, len, cur, out);
        cur.pop_back();
      }
    }

    // Decides phi_m(b, y) in the even subgroup: peel off y_i u^n by unique
    // n-th roots, then check the power conditions on the intermediate
    // words.
    inline bool phi_holds(FreeWord const&              b,
                          std::vector<FreeWord> const& y,
                          long                         n) {
      size_t                m = y.size();
      std::vector<FreeWord> u(m + 1);
      u[0] = b;
      for (size_t i = 0; i < m; ++i) {
        auto r = free_root(free_multiply(free_inverse(y[i]), u[i]), n);
        if (!r) {
          return false;
        }
        u[i + 1] = *r;
      }
      FreeWord const& z = u[m];
      auto mul = [](FreeWord const& a, FreeWord const& c) {
        return free_multiply(a, c);
      };
      auto pw = [](FreeWord const& a, long k) { return free_power(a, k); };
      if (w_word(z, y, n, mul, pw) != b) {
        return false;
      }
      for (size_t l = 0; l <= m; ++l) {
        std::vector<FreeWord> tail(y.begin() + static_cast<long>(m - l),
                                   y.end());
        if (free_power(w_word(z, tail, n, mul, pw), n).empty()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  // Universal rank 3, H the even subgroup, free on x1 = ab, x2 = ac.
  inline TreeWitness unsuperstability_tree(long   n,
                                           size_t depth,
                                           size_t branching,
                                           size_t search_radius = 3) {
    if (!detail::is_prime(n) || n <= 2) {
      throw InvalidInput("n must be a prime larger than 2");
    }
    if (branching < 1) {
      throw InvalidInput("branching must be positive");
    }
    size_t N = branching + depth;
    if (N >= static_cast<size_t>(n * n)) {
      throw InvalidInput("pool exceeds the distinct residues mod n");
    }
    auto sys = universal_system(3);
    auto gp  = GraphProduct::racg(sys);
    auto mul = [&](Word const& a, Word const& c) { return gp.multiply(a, c); };
    auto pw  = [&](Word const& a, long k) { return gp.power(a, k); };

    TreeWitness tw;
    tw.n         = n;
    tw.depth     = depth;
    tw.branching = branching;
    for (size_t l = 0; l < N; ++l) {
      long     p = 1 + static_cast<long>(l) % n;
      long     q = 1 + static_cast<long>(l) / n;
      FreeWord a = free_multiply(free_power({1}, p), free_power({2}, q));
      tw.pool_free.push_back(a);
      tw.pool.push_back(from_free_coordinates(sys, a));
    }

    // (b)(i): abelianized differences avoid n Z^2, and no x^n y^n with
    // x, y in the search ball hits a difference.
    tw.clause_b1 = true;
    std::vector<FreeWord> hball{FreeWord{}};
    {
      std::vector<FreeWord> frontier{FreeWord{}};
      for (size_t r = 1; r <= search_radius; ++r) {
        std::vector<FreeWord> next;
        for (auto const& w : frontier) {
          for (int x : {1, -1, 2, -2}) {
            if (!w.empty() && w.back() == -x) {
              continue;
            }
            FreeWord v = w;
            v.push_back(x);
            next.push_back(v);
          }
        }
        hball.insert(hball.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
    }
    WordSet powers_sum;
    {
      std::vector<FreeWord> pn;
      for (auto const& x : hball) {
        pn.push_back(free_power(x, n));
      }
      for (auto const& x : pn) {
        for (auto const& y : pn) {
          powers_sum.insert(free_multiply(x, y));
        }
      }
    }
    for (size_t i = 0; i < N; ++i) {
      for (size_t j = 0; j < N; ++j) {
        if (i == j) {
          continue;
        }
        FreeWord d  = free_multiply(free_inverse(tw.pool_free[i]),
                                    tw.pool_free[j]);
        auto     ab = free_abelianize(d, 2);
        bool     abel_ok = ab[0] % n != 0 || ab[1] % n != 0;
        if (!abel_ok || powers_sum.count(d) != 0) {
          tw.clause_b1 = false;
          tw.log.push_back("(b)(i) fails for pool pair " + std::to_string(i)
                           + "," + std::to_string(j));
        }
      }
    }
    tw.log.push_back("(b)(i): abelian certificate mod " + std::to_string(n)
                     + " and search over " + std::to_string(hball.size())
                     + "^2 pairs");

    // (b)(ii): positive words, plus products of up to three pool elements
    tw.clause_b2 = true;
    for (auto const& a : tw.pool_free) {
      for (int x : a) {
        tw.clause_b2 = tw.clause_b2 && x > 0;
      }
    }
    for (size_t i = 0; i < N; ++i) {
      tw.clause_b2 = tw.clause_b2 && !tw.pool[i].empty();
      for (size_t j = 0; j < N; ++j) {
        Word p = gp.multiply(tw.pool[i], tw.pool[j]);
        tw.clause_b2 = tw.clause_b2 && !p.empty();
        for (size_t k = 0; k < N; ++k) {
          tw.clause_b2 = tw.clause_b2 && !gp.multiply(p, tw.pool[k]).empty();
        }
      }
    }
    tw.log.push_back("(b)(ii): pool words are positive in x1, x2");

    // n-purity on B_5: x^n in H forces x in H, n-th roots are unique and
    // nontrivial elements have nontrivial n-th powers
    tw.purity = true;
    {
      WordMap<Word> root_of;
      for (auto const& x : gp.ball(5)) {
        Word xn = gp.power(x, n);
        bool in_h_power = xn.size() % 2 == 0;
        bool in_h       = x.size() % 2 == 0;
        if (in_h_power && !in_h) {
          tw.purity = false;
        }
        if (!x.empty() && xn.empty()) {
          tw.purity = false;
        }
        auto [it, fresh] = root_of.emplace(xn, x);
        if (!fresh && it->second != x) {
          tw.purity = false;
        }
      }
    }
    tw.log.push_back("purity of H checked on B_5");

    // nodes and clause (e)
    std::vector<std::vector<int>> etas;
    for (size_t len = 1; len <= depth + 1; ++len) {
      std::vector<int> cur;
      detail::increasing_sequences(N, len, cur, etas);
    }
    auto pool_words = [&](std::vector<int>::const_iterator b,
                          std::vector<int>::const_iterator e) {
      std::vector<Word> out;
      for (auto it = b; it != e; ++it) {
        out.push_back(tw.pool[static_cast<size_t>(*it)]);
      }
      return out;
    };
    auto free_pool = [&](std::vector<int> const& idx) {
      std::vector<FreeWord> out;
      for (int i : idx) {
        out.push_back(tw.pool_free[static_cast<size_t>(i)]);
      }
      return out;
    };
    tw.clause_e = true;
    for (auto const& eta : etas) {
      size_t m = eta.size() - 1;
      Word   b = w_word(tw.pool[static_cast<size_t>(eta[m])],
                        pool_words(eta.begin(), eta.begin() + static_cast<long>(m)),
                        n, mul, pw);
      if (b.empty()) {
        tw.clause_e = false;
      }
      for (size_t k = 0; k <= m; ++k) {
        ++tw.e_checks;
        Word z = w_word(tw.pool[static_cast<size_t>(eta[m])],
                        pool_words(eta.begin() + static_cast<long>(k),
                                   eta.begin() + static_cast<long>(m)),
                        n, mul, pw);
        auto ys = pool_words(eta.begin(), eta.begin() + static_cast<long>(k));
        bool ok = w_word(z, ys, n, mul, pw) == b;
        for (size_t l = 0; l <= k && ok; ++l) {
          std::vector<Word> tail(ys.begin() + static_cast<long>(k - l),
                                 ys.end());
          ok = !gp.power(w_word(z, tail, n, mul, pw), n).empty();
        }
        std::vector<int> nu(eta.begin(), eta.begin() + static_cast<long>(k));
        ok = ok
             && detail::phi_holds(to_free_coordinates(sys, b), free_pool(nu),
                                  n);
        if (!ok) {
          tw.clause_e = false;
          tw.log.push_back("(e) fails at a node of depth "
                           + std::to_string(m) + ", prefix "
                           + std::to_string(k));
        }
      }
      tw.nodes.push_back({eta, b});
    }
    tw.log.push_back("(e): " + std::to_string(tw.e_checks)
                     + " prefix memberships verified");

    // clause (f) with m(n) = 1
    tw.clause_f = true;
    for (auto const& node : tw.nodes) {
      if (node.eta.size() < 2) {
        continue;
      }
      std::vector<int> nu(node.eta.begin(), node.eta.end() - 2);
      FreeWord         b = to_free_coordinates(sys, node.b);
      size_t           count = 0;
      for (size_t i = 0; i < N; ++i) {
        auto idx = nu;
        idx.push_back(static_cast<int>(i));
        ++tw.f_checks;
        if (detail::phi_holds(b, free_pool(idx), n)) {
          ++count;
        }
      }
      tw.max_f = std::max(tw.max_f, count);
      if (count > 1) {
        tw.clause_f = false;
        tw.log.push_back("(f) fails: " + std::to_string(count)
                         + " indices satisfy the next formula");
      }
    }
    tw.log.push_back("(f): " + std::to_string(tw.f_checks)
                     + " memberships decided, largest count "
                     + std::to_string(tw.max_f));
    return tw;
  }

}  // namespace coxlab

#endif  // COXLAB_TREE_HPP_
