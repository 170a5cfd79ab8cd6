#pragma once

#include <string>
#include <utility>

namespace ewt {

/// Three-valued outcome of a fuel-bounded check.
struct Verdict {
  enum class Kind { Holds = 0, Unknown = 1, Fails = 2 };
  Kind kind = Kind::Holds;
  std::string detail;

  static Verdict holds() { return {}; }
  static Verdict fails(std::string why) { return {Kind::Fails, std::move(why)}; }
  static Verdict unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }

  bool ok() const { return kind == Kind::Holds; }
  bool failed() const { return kind == Kind::Fails; }
  bool is_unknown() const { return kind == Kind::Unknown; }

  /// Worst wins: fails over unknown over holds. Ties keep the left detail.
  Verdict& operator&=(const Verdict& o) {
    if (static_cast<int>(o.kind) > static_cast<int>(kind)) *this = o;
    return *this;
  }
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Holds: return "holds";
    case Verdict::Kind::Unknown: return "unknown";
    case Verdict::Kind::Fails: return "fails";
  }
  return "?";
}

}  // namespace ewt
