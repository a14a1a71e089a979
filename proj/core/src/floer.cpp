#include "braid3/floer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

bool is_odd(std::int64_t d) noexcept { return d % 2 != 0; }

// d = 2k + 1 or d = 2k.
std::int64_t half_floor(std::int64_t d) noexcept {
  return is_odd(d) ? (d - 1) / 2 : d / 2;
}

Grading quarter(std::int64_t num) {
  return make_grading(static_cast<long>(num), 4);
}

GradedModule tower_plus_free(long tower, std::int64_t rank, long free_grading) {
  std::vector<FreeSummand> frees;
  if (rank > 0) {
    frees.push_back({rank, make_grading(free_grading)});
  }
  return GradedModule({make_grading(tower)}, std::move(frees));
}

GradedModule raw_surgery_table(KnotTypeTag tag, std::int64_t n) {
  switch (tag) {
    case KnotTypeTag::RightTrefoilLike:
      return n > 0 ? tower_plus_free(-2, n - 1, -2)
                   : tower_plus_free(0, -n, -1);
    case KnotTypeTag::LeftTrefoilLike:
      return n >= 0 ? tower_plus_free(0, n, 0)
                    : tower_plus_free(2, -n - 1, 1);
    case KnotTypeTag::FigureEightLike:
      return n >= 0 ? tower_plus_free(0, n, -1) : tower_plus_free(0, -n, 0);
  }
  return {};
}

// 1/0 surgery is S^3 for every model knot.
bool tables_agree_at_infinity() {
  GradedModule const s3({make_grading(0)}, {});
  for (auto tag : {KnotTypeTag::RightTrefoilLike, KnotTypeTag::LeftTrefoilLike,
                   KnotTypeTag::FigureEightLike}) {
    if (raw_surgery_table(tag, 0) != s3) {
      return false;
    }
  }
  return true;
}

struct FamilyNumbers {
  std::int64_t n = 0;
  std::int64_t total = 0;
};

FamilyNumbers family1_numbers(Family1 const& f) {
  return {static_cast<std::int64_t>(f.a.size()),
          std::accumulate(f.a.begin(), f.a.end(), std::int64_t{0})};
}

// Model knot and grading shift for the s_0 summand; the surgery coefficient
// is -1/k with d = 2k + 1 or 2k.
struct SurgeryRecipe {
  KnotTypeTag tag;
  std::int64_t k;
  Grading shift;
};

SurgeryRecipe recipe(MurasugiForm const& f) {
  std::int64_t const d = twist_exponent(f);
  std::int64_t const k = half_floor(d);
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    auto const [n, total] = family1_numbers(*f1);
    if (is_odd(d)) {
      return {KnotTypeTag::RightTrefoilLike, k, quarter(n + 4 - total)};
    }
    return {KnotTypeTag::FigureEightLike, k, quarter(n - total)};
  }
  if (auto const* f2 = std::get_if<Family2>(&f)) {
    return {KnotTypeTag::RightTrefoilLike, k, quarter(f2->m + 4)};
  }
  auto const& f3 = std::get<Family3>(f);
  if (is_odd(d)) {
    return {KnotTypeTag::RightTrefoilLike, k, quarter(f3.m + 3)};
  }
  return {KnotTypeTag::LeftTrefoilLike, k, quarter(f3.m + 1)};
}

}  // namespace

Grading make_grading(long num, long den) {
  Grading g{mpz_class(num), mpz_class(den)};
  g.canonicalize();
  return g;
}

std::string to_string(Grading const& g) { return g.get_str(); }

GradedModule::GradedModule(std::vector<Grading> towers,
                           std::vector<FreeSummand> frees, bool absolute)
    : _towers(std::move(towers)), _frees(std::move(frees)), _absolute(absolute) {
  normalise();
}

void GradedModule::normalise() {
  for (auto& t : _towers) {
    t.canonicalize();
  }
  std::sort(_towers.begin(), _towers.end());
  std::map<Grading, std::int64_t> ranks;
  for (auto& f : _frees) {
    f.grading.canonicalize();
    ranks[f.grading] += f.rank;
  }
  _frees.clear();
  for (auto const& [g, r] : ranks) {
    if (r != 0) {
      _frees.push_back({r, g});
    }
  }
}

Grading const& GradedModule::min_tower() const {
  if (_towers.empty()) {
    throw std::logic_error("GradedModule::min_tower: no towers");
  }
  return _towers.front();
}

GradedModule GradedModule::shifted(Grading const& q) const {
  GradedModule out = *this;
  for (auto& t : out._towers) {
    t += q;
  }
  for (auto& f : out._frees) {
    f.grading += q;
  }
  return out;
}

std::string to_string(GradedModule const& g) {
  std::string out;
  for (auto const& t : g.towers()) {
    out += out.empty() ? "" : " + ";
    out += "T+_{" + to_string(t) + "}";
  }
  for (auto const& f : g.frees()) {
    out += out.empty() ? "" : " + ";
    out += "Z^" + std::to_string(f.rank) + "_{" + to_string(f.grading) + "}";
  }
  if (out.empty()) {
    out = "0";
  }
  if (!g.absolute()) {
    out += " (relative)";
  }
  return out;
}

std::string to_string(KnotTypeTag tag) {
  switch (tag) {
    case KnotTypeTag::RightTrefoilLike:
      return "RightTrefoilLike";
    case KnotTypeTag::LeftTrefoilLike:
      return "LeftTrefoilLike";
    case KnotTypeTag::FigureEightLike:
      return "FigureEightLike";
  }
  return "?";
}

GradedModule surgery_table(KnotTypeTag tag, std::int64_t n) {
  static bool const consistent = tables_agree_at_infinity();
  if (!consistent) {
    throw Error(ErrorCode::InternalInconsistency,
                "surgery tables disagree at n = 0");
  }
  return raw_surgery_table(tag, n);
}

GradedModule zero_surgery_table(KnotTypeTag tag) {
  switch (tag) {
    case KnotTypeTag::RightTrefoilLike:
      return GradedModule({make_grading(-1, 2), make_grading(-3, 2)}, {});
    case KnotTypeTag::LeftTrefoilLike:
      return GradedModule({make_grading(3, 2), make_grading(1, 2)}, {});
    case KnotTypeTag::FigureEightLike:
      return GradedModule({make_grading(1, 2), make_grading(-1, 2)},
                          {{1, make_grading(-1, 2)}});
  }
  return {};
}

bool is_l_space(MurasugiForm const& f) {
  std::int64_t const d = twist_exponent(f);
  switch (family_number(f)) {
    case 1:
      return d >= -1 && d <= 1;
    case 2:
      return d == 1 || d == -1;
    default:
      return d >= -1 && d <= 2;
  }
}

bool is_tight(MurasugiForm const& f) {
  std::int64_t const d = twist_exponent(f);
  if (auto const* f2 = std::get_if<Family2>(&f)) {
    return d > 0 || (d == 0 && f2->m >= 0);
  }
  return d > 0;
}

KnotTypeTag knot_type(MurasugiForm const& f) {
  if (is_tight(f)) {
    return KnotTypeTag::RightTrefoilLike;
  }
  if (is_tight(mirror(f))) {
    return KnotTypeTag::LeftTrefoilLike;
  }
  return KnotTypeTag::FigureEightLike;
}

mpz_class form_determinant(MurasugiForm const& f) {
  mpz_class t = image(family_tail(f)).trace();
  if (is_odd(twist_exponent(f))) {
    t = -t;
  }
  return abs(2 - t);
}

GradedModule hf_plus_s0(MurasugiForm const& f) {
  if (form_determinant(f) == 0) {
    throw Error(ErrorCode::PositiveB1,
                "b1(M_{T,phi}) >= 1 for " + to_string(f));
  }
  SurgeryRecipe const r = recipe(f);
  return shift(surgery_table(r.tag, -r.k), r.shift);
}

Grading correction_term(MurasugiForm const& f) {
  return hf_plus_s0(f).min_tower();
}

TorusBundleFloer torus_bundle_hf(MurasugiForm const& f) {
  mpz_class const det = form_determinant(f);
  if (det == 0) {
    throw Error(ErrorCode::B1NotOne,
                "torus bundle has b1 > 1 for " + to_string(f));
  }
  SurgeryRecipe const r = recipe(f);
  TorusBundleFloer out;
  out.s0 = shift(zero_surgery_table(r.tag), r.shift);
  out.other_torsion_structures = det - 1;
  out.other_relative =
      GradedModule({make_grading(1, 2), make_grading(-1, 2)}, {}, false);
  return out;
}

HfkBindingProfile hfk_binding(MurasugiForm const& f) {
  if (!is_l_space(f)) {
    throw Error(ErrorCode::NotLSpace,
                "M_{T,phi} is not an L-space for " + to_string(f));
  }
  HfkBindingProfile p;
  p.tag = knot_type(f);
  switch (p.tag) {
    case KnotTypeTag::RightTrefoilLike:
      p.ranks = {1, 1, 1};
      p.arrows = {{0, -1}};
      break;
    case KnotTypeTag::LeftTrefoilLike:
      p.ranks = {1, 1, 1};
      p.arrows = {{1, 0}};
      break;
    case KnotTypeTag::FigureEightLike:
      p.ranks = {1, 3, 1};
      p.arrows = {{1, 0}, {0, -1}};
      break;
  }
  p.other_structures = form_determinant(f) - 1;
  return p;
}

}  // namespace braid3
