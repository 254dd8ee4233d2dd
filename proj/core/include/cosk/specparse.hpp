#ifndef COSK_SPECPARSE_HPP
#define COSK_SPECPARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cosk/catalog.hpp"

namespace cosk {

class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:
//   spec    := atom ('*scale(' number ')')*
//   atom    := 'sphere(' int ',' number ')' | 'flat(' int ')'
//            | 'cpn(' int ')' | 'sym(' ident ')' | 'product[' spec (';' spec)* ']'
// Whitespace is allowed between tokens.  Throws SpecParseError with the
// byte offset of the failure; semantic violations (cpn(0), flat(0), ...)
// are reported at the offending token.
SpaceSpec parse_spec(std::string_view text);

}  // namespace cosk

#endif
