#ifndef BRAID3_LINK_INVARIANTS_HPP_
#define BRAID3_LINK_INVARIANTS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "braid3/floer.hpp"
#include "braid3/murasugi.hpp"

namespace braid3 {

// delta(K) = 2 d(Sigma(K), s_0) for 3-braid knots. Throws Error(NotAKnot)
// when components != 1 and Error(FamilyNotCovered) outside Family1 and
// Family3 with m in {-1, -3}.
Grading delta(MurasugiForm const& f, int components);

// -n - 4d + sum(a) for Family1 knots; same errors as delta.
std::int64_t signature(MurasugiForm const& f, int components);

enum class ScreenResult { Pass, Fail, NotAKnot };
std::string to_string(ScreenResult r);

// Necessary condition for finite concordance order. Never an order claim.
ScreenResult finite_order_screen(MurasugiForm const& f, int components);

bool quasi_alternating(MurasugiForm const& f);

enum class Fillability { No, Constrained, Unknown };
std::string to_string(Fillability f);

struct SteinReport {
  bool l_space = false;
  bool tight = false;
  Fillability fillable = Fillability::Unknown;
  // chi(W) = 4 d(M, s_0) + 1 of any Stein filling; set iff Constrained.
  std::optional<std::int64_t> euler_char;
  std::int64_t dehn_twist_count_bound = 0;

  friend bool operator==(SteinReport const&, SteinReport const&) = default;
};

SteinReport stein_report(MurasugiForm const& f);

}  // namespace braid3

#endif  // BRAID3_LINK_INVARIANTS_HPP_
