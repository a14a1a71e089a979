#ifndef BRAID3_SEIFERT_ORACLE_HPP_
#define BRAID3_SEIFERT_ORACLE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "braid3/braid_word.hpp"

namespace braid3 {

// Dense square integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : _n(n), _data(n * n) {}

  std::size_t size() const noexcept { return _n; }
  mpz_class& operator()(std::size_t i, std::size_t j) {
    return _data[i * _n + j];
  }
  mpz_class const& operator()(std::size_t i, std::size_t j) const {
    return _data[i * _n + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator+(IntMatrix const& o) const;
  IntMatrix operator-(IntMatrix const& o) const;

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t _n = 0;
  std::vector<mpz_class> _data;
};

// Exact determinant (fraction-free elimination). det of the empty matrix is 1.
mpz_class det(IntMatrix const& m);
// Signature of a symmetric matrix by rational congruence diagonalisation.
int signature(IntMatrix const& symmetric);

// A homology generator of the braid-closure Seifert surface: the loop through
// the bands of two consecutive crossings in the same column.
struct SeifertGenerator {
  int column;          // 1 or 2
  std::size_t first;   // letter positions in the reduced word
  std::size_t second;
};

struct SeifertMatrix {
  IntMatrix v;
  std::vector<SeifertGenerator> generators;
  // The free-reduced word the surface was built from.
  BraidWord word;

  std::size_t size() const noexcept { return v.size(); }
  IntMatrix symmetrized() const { return v + v.transpose(); }
};

// Seifert matrix of the closure, built from the three stacked braid disks
// and one half-twisted band per crossing. Throws Error(SplitClosure) when
// the reduced word misses a column.
SeifertMatrix seifert_matrix(BraidWord const& w);
int sym_signature(SeifertMatrix const& v);
// |det(V + V^T)|. Throws Error(SplitClosure).
mpz_class oracle_determinant(BraidWord const& w);

}  // namespace braid3

#endif  // BRAID3_SEIFERT_ORACLE_HPP_
