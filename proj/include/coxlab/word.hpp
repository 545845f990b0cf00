#ifndef COXLAB_WORD_HPP_
#define COXLAB_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace coxlab {

  // A word is a sequence of letter ids. What a letter means is up to the
  // engine that owns the word.
  using Word = std::vector<int>;

  struct WordHash {
    size_t operator()(Word const& w) const noexcept {
      uint64_t h = 1469598103934665603ULL;
      for (int x : w) {
        h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
      return static_cast<size_t>(h ^ (h >> 29));
    }
  };

  using WordSet = std::unordered_set<Word, WordHash>;
  template <typename V>
  using WordMap = std::unordered_map<Word, V, WordHash>;

  inline Word concat(Word const& a, Word const& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  inline Word reversed(Word const& w) {
    return Word(w.rbegin(), w.rend());
  }

  // Shortlex: shorter first, then lexicographic on letter ids.
  inline bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  // Names are concatenated when every name is one character, otherwise
  // separated by spaces. The empty word prints as "e".
  inline std::string format_word(Word const&                     w,
                                 std::vector<std::string> const& names) {
    if (w.empty()) {
      return "e";
    }
    bool single = true;
    for (auto const& n : names) {
      single = single && n.size() == 1;
    }
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (!single && i > 0) {
        out += ' ';
      }
      out += names.at(static_cast<size_t>(w[i]));
    }
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_WORD_HPP_
