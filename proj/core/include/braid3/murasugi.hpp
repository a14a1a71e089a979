#ifndef BRAID3_MURASUGI_HPP_
#define BRAID3_MURASUGI_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "braid3/braid_word.hpp"
#include "braid3/homology_rep.hpp"

namespace braid3 {

// Letters of PSL(2,Z) = Z/2 * Z/3 with S of order two and U of order three.
// Lifted to SL(2,Z) as S = [[0,-1],[1,0]], U = [[0,-1],[1,1]], U2 = U*U.
enum class FpLetter : std::uint8_t { S, U, U2 };

// Alternating, cyclically reduced word in S and U^{+-1}. Words of length at
// least two start with S and are stored in their least even rotation, so two
// words are equal iff they represent conjugate elements of PSL(2,Z).
struct FreeProductWord {
  std::vector<FpLetter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(FreeProductWord const&,
                         FreeProductWord const&) = default;
};

// sign * (product of the lifted letters). With the cyclic normalisation of
// FreeProductWord this is a complete SL(2,Z) conjugacy invariant.
struct SignedFreeProductWord {
  int sign = 1;
  FreeProductWord word;

  friend bool operator==(SignedFreeProductWord const&,
                         SignedFreeProductWord const&) = default;
};

std::string to_string(FreeProductWord const& w);

SL2Matrix evaluate(SignedFreeProductWord const& w);

// Conjugacy normal form of image(w) in SL(2,Z).
SignedFreeProductWord sl2_normal_form(BraidWord const& w);
// Its image in PSL(2,Z).
FreeProductWord psl2_normal_form(BraidWord const& w);

// h^d * x y^-a_1 ... x y^-a_n; a in least cyclic rotation.
struct Family1 {
  std::int64_t d = 0;
  std::vector<std::int64_t> a;

  friend bool operator==(Family1 const&, Family1 const&) = default;
};

// h^d * y^m.
struct Family2 {
  std::int64_t d = 0;
  std::int64_t m = 0;

  friend bool operator==(Family2 const&, Family2 const&) = default;
};

// h^d * x^m y^-1, m in {-1, -2, -3}.
struct Family3 {
  std::int64_t d = 0;
  int m = -1;

  friend bool operator==(Family3 const&, Family3 const&) = default;
};

using MurasugiForm = std::variant<Family1, Family2, Family3>;

// 1, 2 or 3.
int family_number(MurasugiForm const& f) noexcept;
std::int64_t twist_exponent(MurasugiForm const& f) noexcept;
// "Family1{d=1, a=(5)}", "Family2{d=0, m=3}", ...
std::string to_string(MurasugiForm const& f);

// Builds a Family1 form with the tuple rotated into canonical position.
Family1 make_family1(std::int64_t d, std::vector<std::int64_t> a);
// Lexicographically least rotation; the earliest one on ties.
std::vector<std::int64_t> least_rotation(std::vector<std::int64_t> const& a);

// Throws Error(InvalidForm) when f violates its family's invariants.
void validate(MurasugiForm const& f);

// Family representative without the h^d prefix.
BraidWord family_tail(MurasugiForm const& f);
// h^d expanded as (x y)^{3d} (or (y^-1 x^-1)^{3|d|}) followed by the tail.
BraidWord canonical_word(MurasugiForm const& f);

// Throws Error(InternalInconsistency) if the recovered parameters do not
// reproduce the input's conjugacy class; that indicates a calibration bug.
MurasugiForm classify(BraidWord const& w);

bool is_conjugate(BraidWord const& w1, BraidWord const& w2);

// Normal form of the inverse braid, i.e. of phi^-1 (the mirror closure).
MurasugiForm mirror(MurasugiForm const& f);

}  // namespace braid3

#endif  // BRAID3_MURASUGI_HPP_
