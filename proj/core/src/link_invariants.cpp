#include "braid3/link_invariants.hpp"

#include <numeric>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

bool is_odd(std::int64_t d) noexcept { return d % 2 != 0; }

void require_knot(MurasugiForm const& f, int components) {
  if (components != 1) {
    throw Error(ErrorCode::NotAKnot, "closure of " + to_string(f) + " has " +
                                         std::to_string(components) +
                                         " components");
  }
}

[[noreturn]] void not_covered(MurasugiForm const& f, char const* what) {
  throw Error(ErrorCode::FamilyNotCovered,
              std::string(what) + " has no closed form for " + to_string(f));
}

std::int64_t tuple_sum(Family1 const& f) {
  return std::accumulate(f.a.begin(), f.a.end(), std::int64_t{0});
}

// Closures that are the unknot: x y^-1, x^-1 y^-1 and x y.
bool is_unknot_form(MurasugiForm const& f) {
  return f == MurasugiForm{Family1{0, {1}}} ||
         f == MurasugiForm{Family3{0, -1}} || f == MurasugiForm{Family3{1, -3}};
}

}  // namespace

Grading delta(MurasugiForm const& f, int components) {
  require_knot(f, components);
  std::int64_t const d = twist_exponent(f);
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    auto const n = static_cast<std::int64_t>(f1->a.size());
    std::int64_t const total = tuple_sum(*f1);
    std::int64_t num = n - total;
    if (is_odd(d)) {
      num += d > 0 ? 4 : -4;
    }
    return make_grading(static_cast<long>(num), 2);
  }
  auto const* f3 = std::get_if<Family3>(&f);
  if (f3 == nullptr || f3->m == -2) {
    not_covered(f, "delta");
  }
  long const m = f3->m;
  if (is_odd(d)) {
    return make_grading(d > 0 ? m + 3 : m - 5, 2);
  }
  return make_grading(d > 0 ? m + 9 : m + 1, 2);
}

std::int64_t signature(MurasugiForm const& f, int components) {
  require_knot(f, components);
  auto const* f1 = std::get_if<Family1>(&f);
  if (f1 == nullptr) {
    not_covered(f, "signature");
  }
  auto const n = static_cast<std::int64_t>(f1->a.size());
  return -n - 4 * f1->d + tuple_sum(*f1);
}

std::string to_string(ScreenResult r) {
  switch (r) {
    case ScreenResult::Pass:
      return "Pass";
    case ScreenResult::Fail:
      return "Fail";
    case ScreenResult::NotAKnot:
      return "NotAKnot";
  }
  return "?";
}

ScreenResult finite_order_screen(MurasugiForm const& f, int components) {
  if (components != 1) {
    return ScreenResult::NotAKnot;
  }
  if (is_unknot_form(f)) {
    return ScreenResult::Pass;
  }
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    auto const n = static_cast<std::int64_t>(f1->a.size());
    if (f1->d >= -1 && f1->d <= 1 && n + 4 * f1->d == tuple_sum(*f1)) {
      return ScreenResult::Pass;
    }
  }
  return ScreenResult::Fail;
}

bool quasi_alternating(MurasugiForm const& f) {
  std::int64_t const d = twist_exponent(f);
  if (auto const* f2 = std::get_if<Family2>(&f)) {
    return (d == 1 && f2->m >= -3 && f2->m <= -1) ||
           (d == -1 && f2->m >= 1 && f2->m <= 3);
  }
  if (std::holds_alternative<Family3>(f)) {
    return d == 0 || d == 1;
  }
  return d >= -1 && d <= 1;
}

std::string to_string(Fillability f) {
  switch (f) {
    case Fillability::No:
      return "No";
    case Fillability::Constrained:
      return "Constrained";
    case Fillability::Unknown:
      return "Unknown";
  }
  return "?";
}

SteinReport stein_report(MurasugiForm const& f) {
  SteinReport r;
  r.l_space = is_l_space(f);
  r.tight = is_tight(f);
  r.dehn_twist_count_bound = exponent_sum(canonical_word(f));
  if (!r.tight) {
    r.fillable = Fillability::No;
  } else if (r.l_space) {
    Grading const chi = 4 * correction_term(f) + 1;
    if (chi.get_den() == 1 && chi > 0) {
      r.fillable = Fillability::Constrained;
      r.euler_char = chi.get_num().get_si();
    } else {
      r.fillable = Fillability::No;
    }
  }
  return r;
}

}  // namespace braid3
