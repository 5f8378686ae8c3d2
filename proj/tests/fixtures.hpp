#pragma once

#include "argon/framework.hpp"
#include "argon/labelling.hpp"

#include <string>
#include <vector>

namespace fixtures {

using argon::Framework;
using argon::Label;
using argon::Labelling;

inline Framework chain() { return argon::new_framework({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}}); }
inline Framework cycle3() { return argon::new_framework({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}}); }
inline Framework simple4() {
  return argon::new_framework({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "C"}});
}
inline Framework floating() {
  return argon::new_framework({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "A"}, {"A", "C"}, {"B", "C"}, {"C", "D"}});
}
inline Framework empty() { return argon::new_framework({}, {}); }
inline Framework self() { return argon::new_framework({"A"}, {{"A", "A"}}); }

struct Named {
  std::string name;
  Framework af;
};

inline std::vector<Named> all() {
  return {{"chain", chain()}, {"cycle3", cycle3()}, {"simple4", simple4()},
          {"floating", floating()}, {"empty", empty()}, {"self", self()}};
}

/// "IOU" style shorthand, one character per argument in index order.
inline Labelling lab(const std::string& code) {
  std::vector<Label> ls;
  for (char c : code)
    ls.push_back(c == 'I' ? Label::In : c == 'O' ? Label::Out : Label::Undec);
  return Labelling::from_labels(ls);
}

} // namespace fixtures
