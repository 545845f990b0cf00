#ifndef COXLAB_LINEAR_HPP_
#define COXLAB_LINEAR_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "graph_product.hpp"
#include "system.hpp"
#include "word.hpp"

namespace coxlab {

  using BigInt    = boost::multiprecision::cpp_int;
  using IntMatrix = std::vector<std::vector<long long>>;

  inline IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline IntMatrix mat_mul(IntMatrix const& a, IntMatrix const& b) {
    size_t    n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<long long>(p, 0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < k; ++j) {
        if (a[i][j] == 0) {
          continue;
        }
        for (size_t l = 0; l < p; ++l) {
          c[i][l] += a[i][j] * b[j][l];
        }
      }
    }
    return c;
  }

  inline std::vector<long long> mat_vec(IntMatrix const&              a,
                                        std::vector<long long> const& v) {
    std::vector<long long> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < v.size(); ++j) {
        out[i] += a[i][j] * v[j];
      }
    }
    return out;
  }

  // Fraction-free elimination over the integers.
  inline BigInt determinant(IntMatrix const& a) {
    size_t n = a.size();
    if (n == 0) {
      return 1;
    }
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        m[i][j] = a[i][j];
      }
    }
    BigInt prev = 1;
    int    sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        size_t p = k + 1;
        while (p < n && m[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(m[p], m[k]);
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  inline size_t matrix_rank(IntMatrix const& a) {
    if (a.empty()) {
      return 0;
    }
    size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        m[i][j] = a[i][j];
      }
    }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
      size_t p = r;
      while (p < rows && m[p][c] == 0) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      std::swap(m[p], m[r]);
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) {
          continue;
        }
        BigInt f = m[i][c], g = m[r][c];
        for (size_t j = c; j < cols; ++j) {
          m[i][j] = m[i][j] * g - m[r][j] * f;
        }
      }
      ++r;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Geometric representation of a right-angled Coxeter group
  ////////////////////////////////////////////////////////////////////////

  class ReflectionRep {
   public:
    explicit ReflectionRep(CoxeterSystem const& sys) : _n(sys.rank()) {
      require_right_angled(sys, "the integral reflection representation");
      for (size_t s = 0; s < _n; ++s) {
        // column t holds sigma_s(alpha_t) = alpha_t - 2 B(alpha_t, alpha_s)
        // alpha_s
        IntMatrix m = identity_matrix(_n);
        for (size_t t = 0; t < _n; ++t) {
          long long b = t == s ? 1 : (sys.m(s, t) == 2 ? 0 : -1);
          m[s][t] -= 2 * b;
        }
        _gens.push_back(std::move(m));
      }
    }

    size_t dimension() const noexcept {
      return _n;
    }

    IntMatrix const& generator(size_t s) const {
      return _gens.at(s);
    }

    IntMatrix matrix(Word const& w) const {
      IntMatrix m = identity_matrix(_n);
      for (int s : w) {
        m = mat_mul(m, _gens.at(static_cast<size_t>(s)));
      }
      return m;
    }

    size_t fixed_space_codim(Word const& w) const {
      IntMatrix m = matrix(w);
      for (size_t i = 0; i < _n; ++i) {
        m[i][i] -= 1;
      }
      return matrix_rank(m);
    }

   private:
    size_t                 _n;
    std::vector<IntMatrix> _gens;
  };

  struct ReflectionLengthResult {
    size_t                lower = 0;
    std::optional<size_t> upper;
    bool                  exact         = false;
    size_t                search_radius = 0;
  };

  inline bool is_complete_graph(CoxeterSystem const& sys) {
    for (size_t i = 0; i < sys.rank(); ++i) {
      for (size_t j = i + 1; j < sys.rank(); ++j) {
        if (sys.m(i, j) != 2) {
          return false;
        }
      }
    }
    return true;
  }

  // Reflection length of w in a right-angled Coxeter group. Lower bound:
  // codimension of the fixed space, raised to the parity of l_S(w). Upper
  // bound: l_S(w), improved by meet-in-the-middle search over products of
  // reflections v s v^-1 with l(v) <= search_radius.
  inline ReflectionLengthResult
  reflection_length(CoxeterSystem const& sys,
                    Word const&          w,
                    std::optional<size_t> search_radius = std::nullopt,
                    size_t                level_cap = 200'000) {
    auto          gp = GraphProduct::racg(sys);
    ReflectionRep rep(sys);
    Word          x = gp.normalize(w);
    ReflectionLengthResult out;
    out.search_radius = search_radius.value_or(x.size() + 2);
    if (x.empty()) {
      out.upper = 0;
      out.exact = true;
      return out;
    }
    out.lower = rep.fixed_space_codim(x);
    if (out.lower % 2 != x.size() % 2) {
      ++out.lower;
    }
    out.upper = x.size();
    if (is_complete_graph(sys)) {
      // (Z/2)^n: the reflections are the generators
      out.lower = out.upper.value();
      out.exact = true;
      return out;
    }
    if (out.lower >= *out.upper) {
      out.exact = true;
      return out;
    }
    WordSet refl;
    for (auto const& v : gp.ball(out.search_radius)) {
      for (size_t s = 0; s < sys.rank(); ++s) {
        refl.insert(gp.conjugate(Word{static_cast<int>(s)}, v));
      }
    }
    // levels[k]: products of exactly k reflections
    std::deque<WordSet> levels{WordSet{Word{}}, refl};
    auto                 level = [&](size_t k) -> WordSet const* {
      while (levels.size() <= k) {
        WordSet next;
        for (auto const& p : levels.back()) {
          for (auto const& t : refl) {
            next.insert(gp.multiply(p, t));
          }
          if (next.size() > level_cap) {
            return nullptr;
          }
        }
        levels.push_back(std::move(next));
      }
      return &levels[k];
    };
    for (size_t k = out.lower; k < *out.upper; k += 2) {
      size_t a = k / 2, b = k - a;
      auto   la = level(a);
      auto   lb = level(b);
      if (la == nullptr || lb == nullptr) {
        break;
      }
      bool found = false;
      for (auto const& p : *la) {
        if (lb->count(gp.multiply(gp.inverse(p), x)) != 0) {
          found = true;
          break;
        }
      }
      if (found) {
        out.upper = k;
        break;
      }
    }
    out.exact = out.lower == *out.upper;
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_LINEAR_HPP_
