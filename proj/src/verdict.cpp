#include "wreath/verdict.hpp"

namespace wreath {

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    default: return "unknown";
  }
}

}  // namespace wreath
