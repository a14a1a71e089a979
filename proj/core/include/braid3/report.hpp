#ifndef BRAID3_REPORT_HPP_
#define BRAID3_REPORT_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>

#include "braid3/braid_word.hpp"
#include "braid3/floer.hpp"
#include "braid3/homology_rep.hpp"
#include "braid3/link_invariants.hpp"
#include "braid3/murasugi.hpp"

namespace braid3 {

struct OracleCheck {
  // Set when the closure is split and the oracle does not apply.
  std::optional<std::string> error;
  std::optional<mpz_class> determinant;
  std::optional<int> signature;
  bool agrees = true;

  friend bool operator==(OracleCheck const&, OracleCheck const&) = default;
};

struct InvariantReport {
  std::string word;
  MurasugiForm normal_form;
  int components = 0;
  mpz_class determinant;
  AbelianGroup h1;
  int b1 = 0;
  bool l_space = false;
  bool tight = false;
  bool tight_inverse = false;
  KnotTypeTag knot_type_tag = KnotTypeTag::FigureEightLike;
  std::optional<GradedModule> hf_plus_s0;
  std::optional<mpz_class> spin_c_count;
  std::optional<Grading> correction_term;
  std::optional<Grading> delta;
  std::optional<std::int64_t> signature;
  bool qa = false;
  ScreenResult finite_order_screen = ScreenResult::NotAKnot;
  SteinReport stein;
  std::optional<TorusBundleFloer> torus_bundle;
  std::optional<OracleCheck> oracle;
};

struct ReportOptions {
  bool torus_bundle = false;
  bool oracle = false;
};

InvariantReport analyze(BraidWord const& w, ReportOptions const& opts = {});

// Canonical single-line JSON with stable field order; absent optionals are
// omitted and rationals are {"num","den"} pairs.
std::string to_json(InvariantReport const& r);
// Multi-line human-readable rendering.
std::string to_text(InvariantReport const& r);

}  // namespace braid3

#endif  // BRAID3_REPORT_HPP_
