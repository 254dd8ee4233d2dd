#include "cosk/specparse.hpp"

#include <cctype>
#include <charconv>

namespace cosk {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpaceSpec parse() {
    SpaceSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  double number() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{}) fail("expected number");
    pos_ += res.ptr - begin;
    return value;
  }

  int integer() {
    skip_ws();
    const std::size_t at = pos_;
    const double v = number();
    const int i = static_cast<int>(v);
    if (v != static_cast<double>(i)) throw SpecParseError("expected integer", at);
    return i;
  }

  SpaceSpec parse_spec() {
    SpaceSpec spec = parse_atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        const std::string kw = ident();
        if (kw != "scale") fail("expected 'scale' after '*'");
        expect('(');
        spec.scale *= number();
        expect(')');
      } else {
        break;
      }
    }
    return spec;
  }

  SpaceSpec parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string kw = ident();
    if (kw == "sphere") {
      expect('(');
      const std::size_t nat = pos_;
      const int n = integer();
      if (n < 1) throw SpecParseError("sphere dimension must be >= 1", nat);
      expect(',');
      const double kappa = number();
      expect(')');
      return SpaceSpec::sphere(n, kappa);
    }
    if (kw == "flat") {
      expect('(');
      const std::size_t nat = pos_;
      const int n = integer();
      if (n < 1) throw SpecParseError("flat dimension must be >= 1", nat);
      expect(')');
      return SpaceSpec::flat(n);
    }
    if (kw == "cpn") {
      expect('(');
      const std::size_t mat = pos_;
      const int m = integer();
      if (m < 1) throw SpecParseError("cpn needs m >= 1", mat);
      expect(')');
      return SpaceSpec::cpn(m);
    }
    if (kw == "sym") {
      expect('(');
      std::string name = ident();
      expect(')');
      return SpaceSpec::sym(std::move(name));
    }
    if (kw == "product") {
      expect('[');
      std::vector<SpaceSpec> factors;
      factors.push_back(parse_spec());
      while (try_consume(';')) factors.push_back(parse_spec());
      expect(']');
      return SpaceSpec::product(std::move(factors));
    }
    throw SpecParseError("unknown space kind '" + kw + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpaceSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace cosk
