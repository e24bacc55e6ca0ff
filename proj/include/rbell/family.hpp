#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rbell {

/// Second kind counts set partitions by blocks; first kind counts
/// permutations by cycles. The row sums are written B and A respectively.
enum class Kind { SecondKind, FirstKind };

enum class Bound { AtMost, AtLeast };

/// Size restriction applied to every block (or cycle).
struct Constraint {
  Bound bound = Bound::AtLeast;
  unsigned m = 1;

  static Constraint at_most(unsigned m) { return {Bound::AtMost, m}; }
  static Constraint at_least(unsigned m) { return {Bound::AtLeast, m}; }

  bool admits(std::uint64_t size) const {
    return bound == Bound::AtMost ? size <= m : size >= m;
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// One of the four constrained Stirling families, e.g. "B-atmost-3".
/// AtLeast(1) is the classical unrestricted family.
class TriangleSpec {
 public:
  TriangleSpec(Kind kind, Constraint constraint);

  static TriangleSpec second_at_most(unsigned m) {
    return {Kind::SecondKind, Constraint::at_most(m)};
  }
  static TriangleSpec second_at_least(unsigned m) {
    return {Kind::SecondKind, Constraint::at_least(m)};
  }
  static TriangleSpec first_at_most(unsigned m) {
    return {Kind::FirstKind, Constraint::at_most(m)};
  }
  static TriangleSpec first_at_least(unsigned m) {
    return {Kind::FirstKind, Constraint::at_least(m)};
  }

  /// Parses "<B|A>-<atmost|atleast>-<m>". Throws std::invalid_argument.
  static TriangleSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Constraint& constraint() const { return constraint_; }
  Bound bound() const { return constraint_.bound; }
  unsigned m() const { return constraint_.m; }

  bool is_second_kind() const { return kind_ == Kind::SecondKind; }
  bool is_at_most() const { return constraint_.bound == Bound::AtMost; }

  /// Same family with a different size parameter.
  TriangleSpec with_m(unsigned m) const { return {kind_, {constraint_.bound, m}}; }

  std::string name() const;

  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;

 private:
  Kind kind_;
  Constraint constraint_;
};

}  // namespace rbell
