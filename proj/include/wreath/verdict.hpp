#pragma once

#include <cstdint>
#include <string>

namespace wreath {

enum class Status { holds, fails, unknown };

const char* to_string(Status s);

/// Outcome of a budgeted property check.  `holds` and `fails` always come
/// with a certificate or counterexample in serialized form; `unknown` means
/// the search budget ran out first.
struct Verdict {
  Status status = Status::unknown;
  std::string certificate;
  std::uint64_t nodes_explored = 0;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
};

}  // namespace wreath
