#include "arrangebij/rational.hpp"

#include <stdexcept>

namespace arrangebij {

std::string to_fraction(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat fraction_from(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(text, 10);
      return Rat(num);
    }
    Int num(text.substr(0, slash), 10);
    Int den(text.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat v(num, den);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
}

}  // namespace arrangebij
