#include "isg/bicyclic.hpp"

#include <cctype>

namespace isg {

BicyclicElement bicyclic_mul(BicyclicElement x, BicyclicElement y) {
  // q^a p^b * q^c p^d: the middle p^b q^c cancels pairwise via pq = 1
  if (x.b <= y.a) {
    return {x.a + y.a - x.b, y.b};
  }
  return {x.a, x.b - y.a + y.b};
}

BicyclicElement bicyclic_inverse(BicyclicElement x) { return {x.b, x.a}; }

bool bicyclic_is_idempotent(BicyclicElement x) { return x.a == x.b; }

namespace {

// Parses `g[^k]` with g already consumed; omitted exponent means 1.
int64_t parse_exponent(const std::string& text, size_t& pos) {
  if (pos >= text.size() || text[pos] != '^') return 1;
  ++pos;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw parse_error("expected exponent digits after '^'", pos);
  }
  int64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > (int64_t{1} << 60)) {
      throw parse_error("exponent too large", pos);
    }
    ++pos;
  }
  return value;
}

}  // namespace

BicyclicElement bicyclic_parse(const std::string& text) {
  size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_spaces();
  if (pos >= text.size()) {
    throw parse_error("empty input", pos);
  }
  BicyclicElement out;
  if (text[pos] == '1') {
    ++pos;
  } else {
    bool any = false;
    if (text[pos] == 'q') {
      ++pos;
      out.a = parse_exponent(text, pos);
      any = true;
      skip_spaces();
    }
    if (pos < text.size() && text[pos] == 'p') {
      ++pos;
      out.b = parse_exponent(text, pos);
      any = true;
    }
    if (!any) {
      throw parse_error("expected '1', 'q' or 'p'", pos);
    }
  }
  skip_spaces();
  if (pos != text.size()) {
    throw parse_error("trailing input", pos);
  }
  return out;
}

std::string bicyclic_format(BicyclicElement x) {
  if (x.a == 0 && x.b == 0) return "1";
  std::string out;
  if (x.a > 0) {
    out = "q";
    if (x.a > 1) out += "^" + std::to_string(x.a);
  }
  if (x.b > 0) {
    if (!out.empty()) out += " ";
    out += "p";
    if (x.b > 1) out += "^" + std::to_string(x.b);
  }
  return out;
}

}  // namespace isg
