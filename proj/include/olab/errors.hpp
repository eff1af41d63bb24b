#pragma once

#include <stdexcept>
#include <string>

namespace olab {

// Error taxonomy mirrors the CLI exit contract: bad input/config exits 1,
// capacity refusals exit 2.
class Error : public std::runtime_error {
 public:
  enum class Kind { contract, cap, config, input };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_contract(const std::string& msg) {
  throw Error(Error::Kind::contract, msg);
}
[[noreturn]] inline void throw_cap(const std::string& msg) {
  throw Error(Error::Kind::cap, msg);
}
[[noreturn]] inline void throw_config(const std::string& msg) {
  throw Error(Error::Kind::config, msg);
}
[[noreturn]] inline void throw_input(const std::string& msg) {
  throw Error(Error::Kind::input, msg);
}

}  // namespace olab
