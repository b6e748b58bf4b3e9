// A finitary language as a total membership decision plus its alphabet.

#pragma once

#include <functional>
#include <string>

#include "opow/words.hpp"

namespace opow {

struct language {
  std::string name;
  alphabet alpha;
  std::function<bool(const word&)> decide;

  bool operator()(const word& w) const { return decide(w); }
};

}  // namespace opow
