#include "tautclass/flatbundles.hpp"

#include <charconv>

namespace tautclass {

std::string to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::gl_plus: return "GL+";
    case StructureTag::sl: return "SL";
    case StructureTag::pgl_plus: return "PGL+";
    case StructureTag::p_plus_gl_plus: return "P+GL+";
  }
  return "?";
}

StructureTag parse_structure_tag(std::string_view text) {
  for (StructureTag tag :
       {StructureTag::gl_plus, StructureTag::sl, StructureTag::pgl_plus, StructureTag::p_plus_gl_plus})
    if (text == to_string(tag)) return tag;
  throw std::invalid_argument("unknown structure tag '" + std::string(text) + "'");
}

ClassSelector ClassSelector::parse(std::string_view text) {
  if (text == "eu") return eu();
  if (text == "eu0") return eu_k(0);
  if (text == "euplus") return eu_plus();
  if (text == "witt") return witt();
  if (text.substr(0, 4) == "euk:") {
    int k = 0;
    const std::string_view digits = text.substr(4);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && end == digits.data() + digits.size() && k >= 0) return eu_k(k);
  }
  throw std::invalid_argument("unknown class selector '" + std::string(text) + "'");
}

std::string ClassSelector::to_string() const {
  switch (kind) {
    case Kind::euler: return "eu";
    case Kind::euler_component: return component == 0 ? "eu0" : "euk:" + std::to_string(component);
    case Kind::euler_plus: return "euplus";
    case Kind::witt: return "witt";
  }
  return "?";
}

}  // namespace tautclass
