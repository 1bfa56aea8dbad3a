#pragma once

// Canonical text form: "3,1,2,1"; the zero sequence is "0".

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "alphaseq/sequence.hpp"

namespace alphaseq {

inline std::string to_text(const AlphaSequence& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(a[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const AlphaSequence& a) {
  return os << to_text(a);
}

inline AlphaSequence parse_sequence(std::string_view text) {
  if (text == "0") {
    return AlphaSequence::zero();
  }
  if (text.empty()) {
    throw Error(ErrorCode::Parse, "empty sequence text");
  }
  std::vector<Element> elements;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Element value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw Error(ErrorCode::Parse, "bad element '" + std::string(field) + "'");
    }
    if (value == 0) {
      throw Error(ErrorCode::Parse, "elements must be positive");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return AlphaSequence(std::move(elements));
}

}  // namespace alphaseq
