#ifndef COXLAB_ERROR_HPP_
#define COXLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace coxlab {

  // Malformed input: bad files, unknown symbols, violated preconditions.
  class InvalidInput : public std::runtime_error {
   public:
    explicit InvalidInput(std::string const& msg) : std::runtime_error(msg) {}
  };

  // A search ran out of budget or radius before it could decide.
  class Inconclusive : public std::runtime_error {
   public:
    explicit Inconclusive(std::string const& msg)
        : std::runtime_error(msg) {}
  };

}  // namespace coxlab

#endif  // COXLAB_ERROR_HPP_
