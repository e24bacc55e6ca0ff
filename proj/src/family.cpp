#include "rbell/family.hpp"

#include <charconv>
#include <stdexcept>

namespace rbell {

TriangleSpec::TriangleSpec(Kind kind, Constraint constraint)
    : kind_(kind), constraint_(constraint) {
  if (constraint_.m < 1)
    throw std::invalid_argument("constraint parameter m must be >= 1");
}

TriangleSpec TriangleSpec::parse(std::string_view text) {
  auto fail = [&]() -> TriangleSpec {
    throw std::invalid_argument("bad family '" + std::string(text) +
                                "', expected <B|A>-<atmost|atleast>-<m>");
  };
  const auto first = text.find('-');
  const auto second = first == std::string_view::npos
                          ? std::string_view::npos
                          : text.find('-', first + 1);
  if (second == std::string_view::npos) return fail();

  const auto kind_text = text.substr(0, first);
  const auto bound_text = text.substr(first + 1, second - first - 1);
  const auto m_text = text.substr(second + 1);

  Kind kind;
  if (kind_text == "B")
    kind = Kind::SecondKind;
  else if (kind_text == "A")
    kind = Kind::FirstKind;
  else
    return fail();

  Bound bound;
  if (bound_text == "atmost")
    bound = Bound::AtMost;
  else if (bound_text == "atleast")
    bound = Bound::AtLeast;
  else
    return fail();

  unsigned m = 0;
  auto [ptr, ec] = std::from_chars(m_text.data(), m_text.data() + m_text.size(), m);
  if (ec != std::errc{} || ptr != m_text.data() + m_text.size() || m < 1) return fail();
  return {kind, {bound, m}};
}

std::string TriangleSpec::name() const {
  std::string out = kind_ == Kind::SecondKind ? "B" : "A";
  out += constraint_.bound == Bound::AtMost ? "-atmost-" : "-atleast-";
  out += std::to_string(constraint_.m);
  return out;
}

}  // namespace rbell
