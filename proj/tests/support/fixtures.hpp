#pragma once

#include <string_view>
#include <vector>

#include "grassmann/element.hpp"

namespace fixtures {

inline const grassmann::Field kQ = grassmann::Field::rationals();
inline const grassmann::Field kF3 = grassmann::Field::prime(3);
inline const grassmann::Field kF5 = grassmann::Field::prime(5);

inline grassmann::Element el(std::string_view text, int n, grassmann::Field field = kQ) {
  return grassmann::parse_element(text, n, field);
}

inline std::vector<grassmann::Element> els(std::initializer_list<std::string_view> texts, int n,
                                           grassmann::Field field = kQ) {
  std::vector<grassmann::Element> out;
  for (auto t : texts) out.push_back(el(t, n, field));
  return out;
}

}  // namespace fixtures
