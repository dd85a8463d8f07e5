#include "kast/ring_traits.hpp"

namespace kast {

std::string ring_name(RingTag r) {
  switch (r) {
    case RingTag::Integers:
      return "z";
    case RingTag::Laurent:
      return "laurent";
    case RingTag::RationalPoly:
      return "qpoly";
  }
  return "?";
}

RingTag parse_ring(const std::string& name) {
  if (name == "z" || name == "integers" || name == "int") return RingTag::Integers;
  if (name == "laurent" || name == "zq") return RingTag::Laurent;
  if (name == "qpoly" || name == "rational-poly" || name == "qq") return RingTag::RationalPoly;
  throw std::invalid_argument("unknown ring '" + name + "' (expected z, laurent or qpoly)");
}

}  // namespace kast
