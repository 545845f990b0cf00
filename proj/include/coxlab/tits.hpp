#ifndef COXLAB_TITS_HPP_
#define COXLAB_TITS_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "system.hpp"
#include "word.hpp"
#include "words.hpp"

namespace coxlab {

  // Word problem for an arbitrary finite-rank Coxeter system. A reduced
  // word's braid-move orbit is the set of all its reduced expressions, so
  // x is a right descent of w exactly when some word of the orbit ends in
  // x. Canonical form: the shortlex-least word in the orbit.
  class TitsEngine {
   public:
    static constexpr size_t kDefaultBudget = 400'000;

    explicit TitsEngine(CoxeterSystem sys, size_t budget = kDefaultBudget)
        : _sys(std::move(sys)), _budget(budget) {}

    CoxeterSystem const& system() const noexcept {
      return _sys;
    }

    Word normalize(Word const& w) const {
      std::string r;
      for (int x : w) {
        if (x < 0 || static_cast<size_t>(x) >= _sys.rank()) {
          throw InvalidInput("unknown letter in word");
        }
        r = times_generator(r, static_cast<char>(x));
      }
      return to_word(r);
    }

    Word multiply(Word const& x, Word const& y) const {
      std::string r = to_string(x);
      for (int l : y) {
        r = times_generator(r, static_cast<char>(l));
      }
      return to_word(r);
    }

    Word inverse(Word const& x) const {
      return normalize(reversed(x));
    }

    Word conjugate(Word const& x, Word const& g) const {
      return multiply(multiply(g, x), inverse(g));
    }

    Word power(Word const& x, long k) const {
      Word base = k < 0 ? inverse(x) : x;
      Word r;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        r = multiply(r, base);
      }
      return r;
    }

    bool equals(Word const& a, Word const& b) const {
      return normalize(a) == normalize(b);
    }

    // Smallest k <= cutoff with x^k = e; unknown beyond the cutoff.
    Order order(Word const& x, long cutoff = 0) const {
      if (cutoff <= 0) {
        cutoff = default_cutoff();
      }
      Word nx = normalize(x);
      Word p  = nx;
      for (long k = 1; k <= cutoff; ++k) {
        if (p.empty()) {
          return Order::finite(k);
        }
        p = multiply(p, nx);
      }
      return Order::unknown(cutoff);
    }

    long default_cutoff() const {
      return 2L * std::max(2, _sys.max_finite_entry());
    }

    std::vector<std::vector<Word>> spheres(size_t radius,
                                           size_t limit = 2'000'000) const {
      std::vector<std::vector<Word>> out{{Word{}}};
      WordSet                        seen{Word{}};
      for (size_t r = 1; r <= radius; ++r) {
        std::vector<Word> next;
        for (auto const& w : out.back()) {
          for (size_t s = 0; s < _sys.rank(); ++s) {
            Word x = multiply(w, Word{static_cast<int>(s)});
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

    std::vector<Word> ball(size_t radius) const {
      std::vector<Word> out;
      for (auto& s : spheres(radius)) {
        out.insert(out.end(), s.begin(), s.end());
      }
      return out;
    }

    // Elements of the subgroup generated by `gens` (closure under right
    // multiplication); throws when the closure exceeds `limit`.
    std::vector<Word> closure(std::vector<Word> const& gens,
                              size_t                   limit = 100'000) const {
      std::vector<Word> out{Word{}};
      WordSet           seen{Word{}};
      for (size_t i = 0; i < out.size(); ++i) {
        for (auto const& g : gens) {
          Word x = multiply(out[i], g);
          if (seen.insert(x).second) {
            out.push_back(std::move(x));
            if (out.size() > limit) {
              throw Inconclusive("subgroup closure exceeded "
                                 + std::to_string(limit) + " elements");
            }
          }
        }
      }
      return out;
    }

    // Is x conjugate to some generator? Breadth-first search over
    // conjugates by generators, never exceeding `max_length`. Returns the
    // generator index or -1.
    int reflection_class(Word const& x, size_t max_length) const {
      Word              nx = normalize(x);
      WordSet           seen{nx};
      std::deque<Word>  queue{nx};
      while (!queue.empty()) {
        Word y = queue.front();
        queue.pop_front();
        if (y.size() == 1) {
          return y[0];
        }
        for (size_t s = 0; s < _sys.rank(); ++s) {
          Word z = conjugate(y, Word{static_cast<int>(s)});
          if (z.size() <= max_length && seen.insert(z).second) {
            queue.push_back(std::move(z));
          }
        }
      }
      return -1;
    }

   private:
    static std::string to_string(Word const& w) {
      std::string s;
      for (int x : w) {
        s.push_back(static_cast<char>(x));
      }
      return s;
    }

    static Word to_word(std::string const& s) {
      Word w;
      for (char c : s) {
        w.push_back(static_cast<int>(c));
      }
      return w;
    }

    // All words reachable from w by braid moves (w assumed reduced).
    std::vector<std::string> const& orbit(std::string const& w) const {
      auto it = _orbits.find(w);
      if (it != _orbits.end()) {
        return it->second;
      }
      std::vector<std::string>        out{w};
      std::unordered_set<std::string> seen{w};
      for (size_t i = 0; i < out.size(); ++i) {
        std::string cur = out[i];
        for (size_t p = 0; p + 1 < cur.size(); ++p) {
          auto a = static_cast<size_t>(cur[p]);
          auto b = static_cast<size_t>(cur[p + 1]);
          if (a == b) {
            continue;
          }
          int m = _sys.m(a, b);
          if (m == kInf || p + static_cast<size_t>(m) > cur.size()) {
            continue;
          }
          bool alt = true;
          for (size_t k = 0; k < static_cast<size_t>(m) && alt; ++k) {
            alt = static_cast<size_t>(cur[p + k]) == (k % 2 == 0 ? a : b);
          }
          if (!alt) {
            continue;
          }
          std::string nxt = cur;
          for (size_t k = 0; k < static_cast<size_t>(m); ++k) {
            nxt[p + k] = static_cast<char>(k % 2 == 0 ? b : a);
          }
          if (seen.insert(nxt).second) {
            out.push_back(std::move(nxt));
            if (out.size() > _budget) {
              throw Inconclusive("braid orbit exceeded budget "
                                 + std::to_string(_budget));
            }
          }
        }
      }
      if (_orbits.size() > 200'000) {
        _orbits.clear();
      }
      return _orbits.emplace(w, std::move(out)).first->second;
    }

    std::string orbit_min(std::string const& w) const {
      auto const& o = orbit(w);
      return *std::min_element(o.begin(), o.end());
    }

    // r canonical and reduced; returns canonical form of r x.
    std::string times_generator(std::string const& r, char x) const {
      auto key = r;
      key.push_back(x);
      auto it = _products.find(key);
      if (it != _products.end()) {
        return it->second;
      }
      std::string result;
      bool        descent = false;
      for (auto const& v : orbit(r)) {
        if (!v.empty() && v.back() == x) {
          result  = orbit_min(v.substr(0, v.size() - 1));
          descent = true;
          break;
        }
      }
      if (!descent) {
        result = orbit_min(key);
      }
      if (_products.size() > 1'000'000) {
        _products.clear();
      }
      _products.emplace(key, result);
      return result;
    }

    CoxeterSystem _sys;
    size_t        _budget;
    mutable std::unordered_map<std::string, std::vector<std::string>> _orbits;
    mutable std::unordered_map<std::string, std::string>            _products;
  };

  // Tits equality of two words with an explicit orbit budget.
  inline bool equals_general(CoxeterSystem const& sys,
                             Word const&          w1,
                             Word const&          w2,
                             size_t budget = TitsEngine::kDefaultBudget) {
    TitsEngine eng(sys, budget);
    return eng.equals(w1, w2);
  }

}  // namespace coxlab

#endif  // COXLAB_TITS_HPP_
