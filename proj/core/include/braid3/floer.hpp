#ifndef BRAID3_FLOER_HPP_
#define BRAID3_FLOER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braid3/murasugi.hpp"

namespace braid3 {

// Exact rational grading, always in lowest terms.
using Grading = mpq_class;

Grading make_grading(long num, long den = 1);
// "-1/2", "3/4", "0".
std::string to_string(Grading const& g);

struct FreeSummand {
  std::int64_t rank;
  Grading grading;

  friend bool operator==(FreeSummand const&, FreeSummand const&) = default;
};

// Formal graded Z[U]-module: towers T+_d (listed by bottom grading d) plus
// finite free summands Z^rank in a single grading. Kept normalised: towers
// sorted, frees merged per grading and sorted, zero ranks dropped, so that
// operator== is multiset equality.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(std::vector<Grading> towers, std::vector<FreeSummand> frees,
               bool absolute = true);

  std::vector<Grading> const& towers() const noexcept { return _towers; }
  std::vector<FreeSummand> const& frees() const noexcept { return _frees; }
  bool absolute() const noexcept { return _absolute; }

  bool is_bare_tower() const noexcept {
    return _towers.size() == 1 && _frees.empty();
  }
  // Smallest tower bottom grading. Requires at least one tower.
  Grading const& min_tower() const;

  GradedModule shifted(Grading const& q) const;

  friend bool operator==(GradedModule const&, GradedModule const&) = default;

 private:
  void normalise();

  std::vector<Grading> _towers;
  std::vector<FreeSummand> _frees;
  bool _absolute = true;
};

inline GradedModule shift(GradedModule const& g, Grading const& q) {
  return g.shifted(q);
}

// "T+_{-2} + Z^1_{-1}" style rendering.
std::string to_string(GradedModule const& g);

// The knot whose (E^1, d^1) page the binding imitates in s_0.
enum class KnotTypeTag { RightTrefoilLike, LeftTrefoilLike, FigureEightLike };

std::string to_string(KnotTypeTag tag);

// HF+ of 1/n surgery on the model knot; n = 0 gives S^3.
GradedModule surgery_table(KnotTypeTag tag, std::int64_t n);
// HF+ of 0-surgery in its unique supporting Spin^c structure.
GradedModule zero_surgery_table(KnotTypeTag tag);

bool is_l_space(MurasugiForm const& f);
// c(T, phi) != 0.
bool is_tight(MurasugiForm const& f);
KnotTypeTag knot_type(MurasugiForm const& f);

// |det(phi_* - I)|; zero iff b_1(M_{T,phi}) > 0.
mpz_class form_determinant(MurasugiForm const& f);

// HF+(M_{T,phi}, s_0) with absolute gradings. Throws Error(PositiveB1).
GradedModule hf_plus_s0(MurasugiForm const& f);
// d(M_{T,phi}, s_0). Throws Error(PositiveB1).
Grading correction_term(MurasugiForm const& f);

struct TorusBundleFloer {
  // HF+ in (s_0, 0), absolute gradings.
  GradedModule s0;
  // Torsion structures (s, 0) with s != s_0: each carries two towers whose
  // bottoms differ by one; only relative gradings are known.
  mpz_class other_torsion_structures;
  GradedModule other_relative;
  // HF+ vanishes in every (s, i) with i != 0 (adjunction).
  bool nontorsion_vanish = true;
};

// Throws Error(B1NotOne) for parabolic or central monodromy.
TorusBundleFloer torus_bundle_hf(MurasugiForm const& f);

struct HfkArrow {
  int from;  // Alexander grading of the source
  int to;

  friend bool operator==(HfkArrow const&, HfkArrow const&) = default;
};

struct HfkBindingProfile {
  KnotTypeTag tag;
  // Ranks in s_0 at Alexander gradings +1, 0, -1.
  std::vector<int> ranks;
  std::vector<HfkArrow> arrows;
  bool collapses_at_e2 = true;
  // Every other Spin^c structure: rank 1 at Alexander grading 0.
  mpz_class other_structures;

  friend bool operator==(HfkBindingProfile const&,
                         HfkBindingProfile const&) = default;
};

// Throws Error(NotLSpace).
HfkBindingProfile hfk_binding(MurasugiForm const& f);

}  // namespace braid3

#endif  // BRAID3_FLOER_HPP_
