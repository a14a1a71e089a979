#ifndef BRAID3_HOMOLOGY_REP_HPP_
#define BRAID3_HOMOLOGY_REP_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "braid3/braid_word.hpp"

namespace braid3 {

// Integer 2x2 matrix [[p, q], [r, s]] with unbounded entries.
struct IntMatrix2 {
  mpz_class p{1}, q{0}, r{0}, s{1};

  mpz_class det() const { return p * s - q * r; }
  mpz_class trace() const { return p + s; }
  IntMatrix2 operator*(IntMatrix2 const& o) const;
  IntMatrix2 operator-(IntMatrix2 const& o) const;
  IntMatrix2 operator-() const { return {-p, -q, -r, -s}; }

  friend bool operator==(IntMatrix2 const&, IntMatrix2 const&) = default;
};

// Element of SL(2,Z); the determinant-one invariant is checked on
// construction.
class SL2Matrix {
 public:
  SL2Matrix() = default;
  // Throws std::invalid_argument unless ps - qr = 1.
  explicit SL2Matrix(IntMatrix2 m);

  static SL2Matrix identity() { return {}; }

  IntMatrix2 const& entries() const noexcept { return _m; }
  mpz_class const& p() const noexcept { return _m.p; }
  mpz_class const& q() const noexcept { return _m.q; }
  mpz_class const& r() const noexcept { return _m.r; }
  mpz_class const& s() const noexcept { return _m.s; }
  mpz_class trace() const { return _m.trace(); }

  SL2Matrix operator*(SL2Matrix const& o) const;
  SL2Matrix operator-() const;
  SL2Matrix inverse() const;
  bool is_plus_minus_identity() const;

  friend bool operator==(SL2Matrix const&, SL2Matrix const&) = default;

 private:
  IntMatrix2 _m;
};

std::string to_string(IntMatrix2 const& m);
inline std::string to_string(SL2Matrix const& m) {
  return to_string(m.entries());
}

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with
// d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_finite() const noexcept { return free_rank == 0; }
  // Order when finite.
  std::optional<mpz_class> order() const;

  friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
};

// "0", "Z/2 + Z/2", "Z + Z/3", ...
std::string to_string(AbelianGroup const& g);

struct TraceClass {
  enum class Kind { Central, Elliptic, Parabolic, Hyperbolic };
  Kind kind;
  int epsilon;  // +1 or -1

  friend bool operator==(TraceClass const&, TraceClass const&) = default;
};

std::string to_string(TraceClass::Kind kind);

struct ParabolicInvariant {
  int epsilon;
  mpz_class m;

  friend bool operator==(ParabolicInvariant const&,
                         ParabolicInvariant const&) = default;
};

// Per-letter convention: x -> [[1,1],[0,1]], y -> [[1,0],[-1,1]].
SL2Matrix generator_matrix(Letter l);
SL2Matrix image(BraidWord const& w);

AbelianGroup smith_normal_form(IntMatrix2 const& m);

// H_1 of the branched double cover of the closure: coker(image(w) - I).
AbelianGroup h1_branched_cover(BraidWord const& w);
// |det(image(w) - I)| = |2 - trace|; zero iff b_1 of the cover is positive.
mpz_class determinant(BraidWord const& w);

// Central: +-I. Elliptic: |trace| <= 1. Parabolic: |trace| = 2, not +-I.
// Hyperbolic: |trace| > 2. For |trace| >= 1 epsilon is the sign of the
// trace; for trace 0 it is the sign of the lower-left entry, which is a
// conjugacy invariant of elliptic elements (epsilon*M ~ [[0,-1],[1,0]]).
TraceClass trace_class(SL2Matrix const& m);

// epsilon*M is conjugate in SL(2,Z) to [[1,0],[-m,1]] = image(y)^m.
// Throws Error(NotParabolic).
ParabolicInvariant parabolic_invariant(SL2Matrix const& m);

}  // namespace braid3

#endif  // BRAID3_HOMOLOGY_REP_HPP_
