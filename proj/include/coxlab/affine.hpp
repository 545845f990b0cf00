#ifndef COXLAB_AFFINE_HPP_
#define COXLAB_AFFINE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linear.hpp"
#include "system.hpp"
#include "word.hpp"
#include "words.hpp"

namespace coxlab {

  // (v, q) in Z^d x| W0.
  struct AffineElement {
    std::vector<long long> v;
    int                    q = 0;

    bool operator==(AffineElement const&) const = default;
  };

  struct AffineElementHash {
    size_t operator()(AffineElement const& x) const noexcept {
      size_t h = std::hash<int>()(x.q);
      for (long long c : x.v) {
        h ^= std::hash<long long>()(c) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

  using AffineSet = std::unordered_set<AffineElement, AffineElementHash>;

  inline long long det_small(IntMatrix const& m) {
    return static_cast<long long>(determinant(m));
  }

  class AffineGroup {
   public:
    // `table[q][r]` is the index of q r; `theta[q]` the matrix of q.
    AffineGroup(std::string                       name,
                size_t                            dim,
                std::vector<std::vector<int>>     table,
                std::vector<IntMatrix>            theta,
                std::vector<std::string>          gen_names,
                std::vector<AffineElement>        gens,
                std::vector<std::vector<int>>     coxeter)
        : _name(std::move(name)),
          _d(dim),
          _table(std::move(table)),
          _theta(std::move(theta)),
          _gens(std::move(gens)),
          _sys(std::move(gen_names), std::move(coxeter)) {
      validate();
    }

    std::string const& name() const noexcept {
      return _name;
    }
    size_t dim() const noexcept {
      return _d;
    }
    size_t finite_order() const noexcept {
      return _table.size();
    }
    int identity_index() const noexcept {
      return _e;
    }
    IntMatrix const& theta(int q) const {
      return _theta.at(static_cast<size_t>(q));
    }
    int mul_q(int q, int r) const {
      return _table[static_cast<size_t>(q)][static_cast<size_t>(r)];
    }
    int inv_q(int q) const {
      return _inv[static_cast<size_t>(q)];
    }
    CoxeterSystem const& system() const noexcept {
      return _sys;
    }
    std::vector<AffineElement> const& generators() const noexcept {
      return _gens;
    }

    AffineElement identity() const {
      return {std::vector<long long>(_d, 0), _e};
    }

    // (v1, q1)(v2, q2) = (v1 + theta(q1) v2, q1 q2)
    AffineElement multiply(AffineElement const& x,
                           AffineElement const& y) const {
      AffineElement out{x.v, mul_q(x.q, y.q)};
      auto          tv = mat_vec(theta(x.q), y.v);
      for (size_t i = 0; i < _d; ++i) {
        out.v[i] += tv[i];
      }
      return out;
    }

    // (v, q)^-1 = (-theta(q^-1) v, q^-1)
    AffineElement inverse(AffineElement const& x) const {
      int  qi = inv_q(x.q);
      auto tv = mat_vec(theta(qi), x.v);
      for (auto& c : tv) {
        c = -c;
      }
      return {tv, qi};
    }

    AffineElement power(AffineElement const& x, long k) const {
      AffineElement base = k < 0 ? inverse(x) : x;
      AffineElement r    = identity();
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        r = multiply(r, base);
      }
      return r;
    }

    AffineElement from_word(Word const& w) const {
      AffineElement r = identity();
      for (int l : w) {
        if (l < 0 || static_cast<size_t>(l) >= _gens.size()) {
          throw InvalidInput("unknown letter in word");
        }
        r = multiply(r, _gens[static_cast<size_t>(l)]);
      }
      return r;
    }

    // Exact: some power with trivial linear part is a translation.
    Order order(AffineElement const& x) const {
      size_t        k0 = 1;
      AffineElement p  = x;
      while (p.q != _e) {
        p = multiply(p, x);
        ++k0;
      }
      if (p != identity()) {
        return Order::infinite();
      }
      AffineElement y = x;
      for (size_t k = 1; k <= k0; ++k) {
        if (y == identity()) {
          return Order::finite(static_cast<long>(k));
        }
        y = multiply(y, x);
      }
      return Order::finite(static_cast<long>(k0));
    }

    // Sign character: determinant of the linear part.
    int epsilon(AffineElement const& x) const {
      return static_cast<int>(det_small(theta(x.q)));
    }

    std::vector<std::vector<AffineElement>> spheres(size_t radius) const {
      std::vector<std::vector<AffineElement>> out{{identity()}};
      AffineSet                               seen{identity()};
      for (size_t r = 1; r <= radius; ++r) {
        std::vector<AffineElement> next;
        for (auto const& x : out.back()) {
          for (auto const& g : _gens) {
            auto y = multiply(x, g);
            if (seen.insert(y).second) {
              next.push_back(std::move(y));
            }
          }
        }
        out.push_back(std::move(next));
      }
      return out;
    }

    std::vector<AffineElement> ball(size_t radius) const {
      std::vector<AffineElement> out;
      for (auto& s : spheres(radius)) {
        out.insert(out.end(), s.begin(), s.end());
      }
      return out;
    }

    std::string format(AffineElement const& x) const {
      std::string s = "((";
      for (size_t i = 0; i < x.v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(x.v[i]);
      }
      return s + "), q" + std::to_string(x.q) + ")";
    }

   private:
    void validate() {
      size_t n = _table.size();
      if (n == 0) {
        throw InvalidInput("finite part must be nonempty");
      }
      if (_theta.size() != n) {
        throw InvalidInput("need one matrix per element of the finite part");
      }
      for (auto const& row : _table) {
        if (row.size() != n) {
          throw InvalidInput("multiplication table must be square");
        }
        for (int x : row) {
          if (x < 0 || static_cast<size_t>(x) >= n) {
            throw InvalidInput("table entry out of range");
          }
        }
      }
      _e = -1;
      for (size_t q = 0; q < n && _e < 0; ++q) {
        bool id = true;
        for (size_t r = 0; r < n; ++r) {
          id = id && _table[q][r] == static_cast<int>(r)
               && _table[r][q] == static_cast<int>(r);
        }
        if (id) {
          _e = static_cast<int>(q);
        }
      }
      if (_e < 0) {
        throw InvalidInput("table has no identity");
      }
      _inv.assign(n, -1);
      for (size_t q = 0; q < n; ++q) {
        for (size_t r = 0; r < n; ++r) {
          if (_table[q][r] == _e) {
            _inv[q] = static_cast<int>(r);
          }
        }
        if (_inv[q] < 0) {
          throw InvalidInput("table element without inverse");
        }
      }
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          for (size_t c = 0; c < n; ++c) {
            if (_table[static_cast<size_t>(_table[a][b])][c]
                != _table[a][static_cast<size_t>(_table[b][c])]) {
              throw InvalidInput("table is not associative");
            }
          }
        }
      }
      for (size_t q = 0; q < n; ++q) {
        auto const& m = _theta[q];
        if (m.size() != _d) {
          throw InvalidInput("matrix has wrong size");
        }
        for (auto const& row : m) {
          if (row.size() != _d) {
            throw InvalidInput("matrix has wrong size");
          }
        }
        long long det = det_small(m);
        if (det != 1 && det != -1) {
          throw InvalidInput("theta(q" + std::to_string(q)
                             + ") is not invertible over the integers");
        }
      }
      if (_theta[static_cast<size_t>(_e)] != identity_matrix(_d)) {
        throw InvalidInput("theta(e) must be the identity");
      }
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          if (mat_mul(_theta[a], _theta[b])
              != _theta[static_cast<size_t>(_table[a][b])]) {
            throw InvalidInput("theta is not a homomorphism");
          }
        }
      }
      if (_gens.size() != _sys.rank()) {
        throw InvalidInput("one generator image per Coxeter generator");
      }
      for (auto const& g : _gens) {
        if (g.v.size() != _d || g.q < 0 || static_cast<size_t>(g.q) >= n) {
          throw InvalidInput("bad generator image");
        }
      }
      // Coxeter relations, with exact orders
      for (size_t i = 0; i < _gens.size(); ++i) {
        for (size_t j = i; j < _gens.size(); ++j) {
          Order o = order(multiply(_gens[i], _gens[j]));
          int   m = _sys.m(i, j);
          bool  ok = m == kInf ? o.kind == Order::Kind::infinite
                               : o == Order::finite(m);
          if (!ok) {
            throw InvalidInput("relation check failed: o("
                               + _sys.name(i) + _sys.name(j) + ") = "
                               + o.str() + ", expected "
                               + m_to_string(m));
          }
        }
      }
    }

    std::string                    _name;
    size_t                         _d;
    std::vector<std::vector<int>>  _table;
    std::vector<IntMatrix>         _theta;
    std::vector<AffineElement>     _gens;
    CoxeterSystem                  _sys;
    int                            _e = 0;
    std::vector<int>               _inv;
  };

  // Finite group table from a generating set of integer matrices.
  inline std::pair<std::vector<IntMatrix>, std::vector<std::vector<int>>>
  matrix_group(size_t d, std::vector<IntMatrix> const& gens) {
    std::vector<IntMatrix> elems{identity_matrix(d)};
    for (size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        auto p = mat_mul(elems[i], g);
        if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
          elems.push_back(p);
          if (elems.size() > 10'000) {
            throw InvalidInput("matrix group is too large");
          }
        }
      }
    }
    std::vector<std::vector<int>> table(elems.size(),
                                        std::vector<int>(elems.size()));
    for (size_t a = 0; a < elems.size(); ++a) {
      for (size_t b = 0; b < elems.size(); ++b) {
        auto p = mat_mul(elems[a], elems[b]);
        table[a][b] = static_cast<int>(
            std::find(elems.begin(), elems.end(), p) - elems.begin());
      }
    }
    return {elems, table};
  }

  inline int matrix_index(std::vector<IntMatrix> const& elems,
                          IntMatrix const&              m) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), m)
                            - elems.begin());
  }

  // Infinite dihedral group: a = (0, -1), b = (1, -1).
  inline AffineGroup affine_A1() {
    IntMatrix s{{-1}};
    auto [elems, table] = matrix_group(1, {s});
    int q = matrix_index(elems, s);
    return AffineGroup("A1~", 1, table, elems, {"a", "b"},
                       {{{0}, q}, {{1}, q}}, {{1, kInf}, {kInf, 1}});
  }

  // Root lattice coordinates: s1, s2 simple reflections, s0 the reflection
  // in the affine hyperplane of the highest root.
  inline AffineGroup affine_A2() {
    IntMatrix s1{{-1, 1}, {0, 1}};
    IntMatrix s2{{1, 0}, {1, -1}};
    IntMatrix st{{0, -1}, {-1, 0}};
    auto [elems, table] = matrix_group(2, {s1, s2});
    return AffineGroup("A2~", 2, table, elems, {"s0", "s1", "s2"},
                       {{{1, 1}, matrix_index(elems, st)},
                        {{0, 0}, matrix_index(elems, s1)},
                        {{0, 0}, matrix_index(elems, s2)}},
                       {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  }

  // Custom model file:
  //   dim <d>
  //   table <row>            (one line per element, in index order)
  //   theta <q> <d*d entries row-major>
  //   gen <name> <v_1 .. v_d> <q>
  //   m <a> <b> <k|inf>      (unlisted pairs default to inf)
  inline AffineGroup parse_affine(std::string const& text) {
    std::istringstream                in(text);
    std::string                       line;
    size_t                            lineno = 0;
    std::optional<size_t>             dim;
    std::vector<std::vector<int>>     table;
    std::unordered_map<int, IntMatrix> theta;
    std::vector<std::string>          names;
    std::vector<AffineElement>        gens;
    std::vector<std::tuple<std::string, std::string, int>> ms;
    auto fail = [&](std::string const& msg) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + msg);
    };
    auto num = [&](std::string const& s) -> long long {
      try {
        size_t    pos = 0;
        long long x   = std::stoll(s, &pos);
        if (pos != s.size()) {
          fail("bad number '" + s + "'");
        }
        return x;
      } catch (std::logic_error const&) {
        fail("bad number '" + s + "'");
      }
      return 0;
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
      if (tok[0] == "dim") {
        if (tok.size() != 2 || dim) {
          fail("expected a single 'dim <d>'");
        }
        long long d = num(tok[1]);
        if (d < 1) {
          fail("dimension must be positive");
        }
        dim = static_cast<size_t>(d);
      } else if (tok[0] == "table") {
        std::vector<int> row;
        for (size_t i = 1; i < tok.size(); ++i) {
          row.push_back(static_cast<int>(num(tok[i])));
        }
        table.push_back(row);
      } else if (tok[0] == "theta") {
        if (!dim || tok.size() != 2 + *dim * *dim) {
          fail("expected 'theta <q>' and d*d entries after 'dim'");
        }
        int       q = static_cast<int>(num(tok[1]));
        IntMatrix m(*dim, std::vector<long long>(*dim));
        for (size_t i = 0; i < *dim * *dim; ++i) {
          m[i / *dim][i % *dim] = num(tok[2 + i]);
        }
        if (!theta.emplace(q, m).second) {
          fail("duplicate theta for q" + std::to_string(q));
        }
      } else if (tok[0] == "gen") {
        if (!dim || tok.size() != 3 + *dim) {
          fail("expected 'gen <name> <v..> <q>' after 'dim'");
        }
        AffineElement g;
        for (size_t i = 0; i < *dim; ++i) {
          g.v.push_back(num(tok[2 + i]));
        }
        g.q = static_cast<int>(num(tok.back()));
        names.push_back(tok[1]);
        gens.push_back(g);
      } else if (tok[0] == "m") {
        if (tok.size() != 4) {
          fail("expected 'm <a> <b> <k|inf>'");
        }
        int k = tok[3] == "inf" ? kInf : static_cast<int>(num(tok[3]));
        ms.emplace_back(tok[1], tok[2], k);
      } else {
        fail("unknown directive '" + tok[0] + "'");
      }
    }
    if (!dim) {
      throw InvalidInput("missing 'dim'");
    }
    std::vector<IntMatrix> th;
    for (size_t q = 0; q < table.size(); ++q) {
      auto it = theta.find(static_cast<int>(q));
      if (it == theta.end()) {
        throw InvalidInput("missing theta for q" + std::to_string(q));
      }
      th.push_back(it->second);
    }
    if (theta.size() != table.size()) {
      throw InvalidInput("theta given for an element outside the table");
    }
    size_t                        n = names.size();
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, kInf));
    for (size_t i = 0; i < n; ++i) {
      mat[i][i] = 1;
    }
    for (auto const& [a, b, k] : ms) {
      auto ia = std::find(names.begin(), names.end(), a) - names.begin();
      auto ib = std::find(names.begin(), names.end(), b) - names.begin();
      if (static_cast<size_t>(ia) == n || static_cast<size_t>(ib) == n) {
        throw InvalidInput("unknown generator in 'm' line");
      }
      mat[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = k;
      mat[static_cast<size_t>(ib)][static_cast<size_t>(ia)] = k;
    }
    return AffineGroup("custom", *dim, table, th, names, gens, mat);
  }

  inline AffineGroup load_affine(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_affine(ss.str());
  }

  inline AffineGroup build_affine(std::string const& type,
                                  std::string const& custom_path = "") {
    if (type == "A1~") {
      return affine_A1();
    }
    if (type == "A2~") {
      return affine_A2();
    }
    if (type == "custom") {
      return load_affine(custom_path);
    }
    throw InvalidInput("unknown affine type '" + type + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Sign character
  ////////////////////////////////////////////////////////////////////////

  struct EpsilonReport {
    int  sign      = 1;
    bool in_kernel = true;
  };

  inline EpsilonReport epsilon_of_word(Word const& w) {
    int s = w.size() % 2 == 0 ? 1 : -1;
    return {s, s == 1};
  }

  inline EpsilonReport epsilon_of_element(AffineGroup const&   g,
                                          AffineElement const& x) {
    int s = g.epsilon(x);
    return {s, s == 1};
  }

  // Number of cosets of the kernel met by the ball, and whether the ball's
  // kernel part is closed under conjugation by generators.
  struct KernelReport {
    size_t cosets = 0;
    bool   normal = true;
    bool   consistent = true;  // word parity agrees with the determinant
  };

  inline KernelReport kernel_cosets(AffineGroup const& g, size_t radius) {
    KernelReport rep;
    auto         sph = g.spheres(radius);
    std::vector<int> labels;
    for (size_t r = 0; r < sph.size(); ++r) {
      for (auto const& x : sph[r]) {
        int e = g.epsilon(x);
        rep.consistent = rep.consistent && e == (r % 2 == 0 ? 1 : -1);
        if (std::find(labels.begin(), labels.end(), e) == labels.end()) {
          labels.push_back(e);
        }
        if (e == 1) {
          for (auto const& s : g.generators()) {
            auto c = g.multiply(g.multiply(s, x), g.inverse(s));
            rep.normal = rep.normal && g.epsilon(c) == 1;
          }
        }
      }
    }
    rep.cosets = labels.size();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflection length
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Is target in the Z-span of gens?
    inline bool in_lattice(std::vector<std::vector<long long>> rows,
                           std::vector<long long>              target) {
      size_t d = target.size();
      size_t r = 0;
      for (size_t c = 0; c < d && r < rows.size(); ++c) {
        // Euclid down column c among rows r..
        while (true) {
          size_t piv = rows.size();
          for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0
                && (piv == rows.size()
                    || std::llabs(rows[i][c]) < std::llabs(rows[piv][c]))) {
              piv = i;
            }
          }
          if (piv == rows.size()) {
            break;
          }
          std::swap(rows[r], rows[piv]);
          bool done = true;
          for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
              long long f = rows[i][c] / rows[r][c];
              for (size_t j = 0; j < d; ++j) {
                rows[i][j] -= f * rows[r][j];
              }
              done = done && rows[i][c] == 0;
            }
          }
          if (done) {
            if (target[c] % rows[r][c] != 0) {
              return false;
            }
            long long f = target[c] / rows[r][c];
            for (size_t j = 0; j < d; ++j) {
              target[j] -= f * rows[r][j];
            }
            ++r;
            break;
          }
        }
        if (target[c] != 0) {
          return false;
        }
      }
      return std::all_of(target.begin(), target.end(),
                         [](long long x) { return x == 0; });
    }

    inline long long gcd_ll(long long a, long long b) {
      a = std::llabs(a);
      b = std::llabs(b);
      while (b != 0) {
        a %= b;
        std::swap(a, b);
      }
      return a;
    }

  }  // namespace detail

  // Reflections of the finite part with the primitive lattice vector
  // spanning the -1 eigenspace: the reflections of the model with linear
  // part q are then (k beta_q, q) for k in Z.
  struct FiniteReflection {
    int                    q;
    std::vector<long long> beta;
  };

  inline std::vector<FiniteReflection>
  finite_reflections(AffineGroup const& g) {
    std::vector<FiniteReflection> out;
    size_t                        d = g.dim();
    for (size_t q = 0; q < g.finite_order(); ++q) {
      auto const& m = g.theta(static_cast<int>(q));
      IntMatrix   a = m;
      for (size_t i = 0; i < d; ++i) {
        a[i][i] -= 1;
      }
      if (matrix_rank(a) != 1) {
        continue;
      }
      // -1 eigenvector: any nonzero column of (theta - I), made primitive
      std::vector<long long> beta(d, 0);
      for (size_t c = 0; c < d; ++c) {
        bool nz = false;
        for (size_t i = 0; i < d; ++i) {
          nz = nz || a[i][c] != 0;
        }
        if (nz) {
          for (size_t i = 0; i < d; ++i) {
            beta[i] = a[i][c];
          }
          break;
        }
      }
      long long gg = 0;
      for (long long x : beta) {
        gg = detail::gcd_ll(gg, x);
      }
      for (auto& x : beta) {
        x /= gg;
      }
      out.push_back({static_cast<int>(q), beta});
    }
    return out;
  }

  // The elements (k beta_q, q), |k| <= bound, that occur as conjugates of
  // generators by elements of the ball of the given radius.
  inline bool reflection_lattice_check(AffineGroup const& g,
                                       long               bound,
                                       size_t             radius) {
    AffineSet conj;
    for (auto const& u : g.ball(radius)) {
      for (auto const& s : g.generators()) {
        conj.insert(g.multiply(g.multiply(u, s), g.inverse(u)));
      }
    }
    for (auto const& fr : finite_reflections(g)) {
      for (long k = -bound; k <= bound; ++k) {
        AffineElement t{fr.beta, fr.q};
        for (auto& x : t.v) {
          x *= k;
        }
        if (conj.count(t) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  struct AffineLengthResult {
    size_t                lower = 0;
    std::optional<size_t> exact;
  };

  // Exact reflection length: x is a product of k reflections iff some
  // sequence q_1..q_k of finite reflections multiplies to the linear part
  // and the translation lies in the Z-span of q_1..q_{i-1} beta_{q_i}.
  inline AffineLengthResult affine_reflection_length(AffineGroup const&   g,
                                                     AffineElement const& x,
                                                     size_t max_length = 8) {
    size_t    d = g.dim();
    IntMatrix a = g.theta(x.q);
    for (size_t i = 0; i < d; ++i) {
      a[i][i] -= 1;
    }
    AffineLengthResult out;
    size_t             codim = matrix_rank(a);
    // a fixed point exists iff v is in the rational column space of A - I
    IntMatrix aug = a;
    for (size_t i = 0; i < d; ++i) {
      aug[i].push_back(x.v[i]);
    }
    bool fixed = matrix_rank(aug) == codim;
    out.lower  = codim + (fixed ? 0 : 1);
    size_t parity = g.epsilon(x) == 1 ? 0 : 1;
    if (out.lower % 2 != parity) {
      ++out.lower;
    }
    auto refl = finite_reflections(g);
    for (size_t k = out.lower; k <= max_length; k += 2) {
      std::vector<size_t> seq(k, 0);
      bool                found = false;
      // odometer over reflection sequences
      while (!found) {
        int                                 q = g.identity_index();
        std::vector<std::vector<long long>> span;
        for (size_t i = 0; i < k; ++i) {
          auto const& fr = refl[seq[i]];
          span.push_back(mat_vec(g.theta(q), fr.beta));
          q = g.mul_q(q, fr.q);
        }
        if (q == x.q && detail::in_lattice(span, x.v)) {
          found = true;
          break;
        }
        size_t p = 0;
        while (p < k && ++seq[p] == refl.size()) {
          seq[p++] = 0;
        }
        if (p == k) {
          break;
        }
      }
      if (found) {
        out.exact = k;
        return out;
      }
    }
    return out;
  }

  // Search route: products of reflections (k beta_q, q) with |k| <= bound,
  // meet in the middle. Returns the least length found up to max_length.
  inline std::optional<size_t>
  affine_reflection_length_search(AffineGroup const&   g,
                                  AffineElement const& x,
                                  long                 bound,
                                  size_t               max_length = 4) {
    std::vector<AffineElement> T;
    for (auto const& fr : finite_reflections(g)) {
      for (long k = -bound; k <= bound; ++k) {
        AffineElement t{fr.beta, fr.q};
        for (auto& c : t.v) {
          c *= k;
        }
        T.push_back(t);
      }
    }
    std::deque<AffineSet> levels{AffineSet{g.identity()}};
    auto level = [&](size_t k) -> AffineSet const& {
      while (levels.size() <= k) {
        AffineSet next;
        for (auto const& p : levels.back()) {
          for (auto const& t : T) {
            next.insert(g.multiply(p, t));
          }
        }
        levels.push_back(std::move(next));
      }
      return levels[k];
    };
    for (size_t k = 0; k <= max_length; ++k) {
      size_t a = k / 2, b = k - a;
      auto const& la = level(a);
      auto const& lb = level(b);
      for (auto const& p : la) {
        if (lb.count(g.multiply(g.inverse(p), x)) != 0) {
          return k;
        }
      }
    }
    return std::nullopt;
  }

  struct GenerationReport {
    bool   covered    = true;
    size_t max_length = 0;
    size_t elements   = 0;
  };

  // Every element of the ball is a product of boundedly many reflections.
  inline GenerationReport involution_generation_check(AffineGroup const& g,
                                                      size_t radius) {
    GenerationReport rep;
    for (auto const& x : g.ball(radius)) {
      ++rep.elements;
      auto r = affine_reflection_length(g, x);
      if (!r.exact) {
        rep.covered = false;
      } else {
        rep.max_length = std::max(rep.max_length, *r.exact);
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Interpretation in the integers
  ////////////////////////////////////////////////////////////////////////

  // Codes are integer tuples (v_1, .., v_d, q). Multiplication on codes
  // uses only the parameters: the entries of theta(q) and the finite table.
  class IntegerInterpretation {
   public:
    explicit IntegerInterpretation(AffineGroup const& g) : _d(g.dim()) {
      for (size_t q = 0; q < g.finite_order(); ++q) {
        _params.push_back(g.theta(static_cast<int>(q)));
        std::vector<int> row;
        for (size_t r = 0; r < g.finite_order(); ++r) {
          row.push_back(g.mul_q(static_cast<int>(q), static_cast<int>(r)));
        }
        _table.push_back(row);
      }
    }

    using Code = std::vector<long long>;

    Code encode(AffineElement const& x) const {
      Code c = x.v;
      c.push_back(x.q);
      return c;
    }

    AffineElement decode(Code const& c) const {
      if (c.size() != _d + 1 || c.back() < 0
          || static_cast<size_t>(c.back()) >= _table.size()) {
        throw InvalidInput("malformed code");
      }
      return {Code(c.begin(), c.end() - 1), static_cast<int>(c.back())};
    }

    // c_i = a_i + sum_j A(q_a)_ij b_j
    Code multiply(Code const& a, Code const& b) const {
      auto const& A = _params[static_cast<size_t>(a[_d])];
      Code        c(_d + 1, 0);
      for (size_t i = 0; i < _d; ++i) {
        c[i] = a[i];
        for (size_t j = 0; j < _d; ++j) {
          c[i] += A[i][j] * b[j];
        }
      }
      c[_d] = _table[static_cast<size_t>(a[_d])][static_cast<size_t>(b[_d])];
      return c;
    }

    size_t parameter_count() const {
      return _params.size() * _d * _d;
    }

    std::vector<long long> parameters() const {
      std::vector<long long> out;
      for (auto const& m : _params) {
        for (auto const& row : m) {
          out.insert(out.end(), row.begin(), row.end());
        }
      }
      return out;
    }

   private:
    size_t                        _d;
    std::vector<IntMatrix>        _params;
    std::vector<std::vector<int>> _table;
  };

}  // namespace coxlab

#endif  // COXLAB_AFFINE_HPP_
