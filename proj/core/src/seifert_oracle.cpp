#include "braid3/seifert_oracle.hpp"

#include <utility>

#include "braid3/errors.hpp"

namespace braid3 {

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(_n);
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(IntMatrix const& o) const {
  IntMatrix out(_n);
  for (std::size_t k = 0; k < _data.size(); ++k) {
    out._data[k] = _data[k] + o._data[k];
  }
  return out;
}

IntMatrix IntMatrix::operator-(IntMatrix const& o) const {
  IntMatrix out(_n);
  for (std::size_t k = 0; k < _data.size(); ++k) {
    out._data[k] = _data[k] - o._data[k];
  }
  return out;
}

mpz_class det(IntMatrix const& m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int signature(IntMatrix const& symmetric) {
  std::size_t const n = symmetric.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = symmetric(i, j);
    }
  }
  // Row elimination keeps the trailing block symmetric (Schur complement). A
  // zero pivot with a nonzero off-diagonal entry is repaired by adding that
  // row and column to the pivot's.
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) {
        ++p;
      }
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) {
          std::swap(row[k], row[p]);
        }
      } else {
        p = k + 1;
        while (p < n && a[k][p] == 0) {
          ++p;
        }
        if (p == n) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          a[k][j] += a[p][j];
        }
        for (std::size_t i = 0; i < n; ++i) {
          a[i][k] += a[i][p];
        }
      }
    }
    mpq_class const pivot = a[k][k];
    sig += sgn(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) {
        continue;
      }
      mpq_class const f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) {
        a[i][j] -= f * a[k][j];
      }
    }
  }
  return sig;
}

SeifertMatrix seifert_matrix(BraidWord const& w) {
  SeifertMatrix out;
  out.word = free_reduce(w);
  auto const& letters = out.word.letters();

  for (int column : {1, 2}) {
    auto const gen = column == 1 ? Generator::X : Generator::Y;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].generator == gen) {
        pos.push_back(i);
      }
    }
    if (pos.empty()) {
      throw Error(ErrorCode::SplitClosure,
                  "closure of '" + to_string(w) + "' is split");
    }
    for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
      out.generators.push_back({column, pos[j], pos[j + 1]});
    }
  }

  auto const& g = out.generators;
  std::size_t const n = g.size();
  IntMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) {
    int const s1 = letters[g[i].first].sign;
    int const s2 = letters[g[i].second].sign;
    if (s1 > 0 && s2 > 0) {
      v(i, i) = -1;
    } else if (s1 < 0 && s2 < 0) {
      v(i, i) = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      auto const& a = g[i];
      auto const& b = g[j];
      if (a.column == b.column && a.second == b.first) {
        if (letters[a.second].sign > 0) {
          v(i, j) = 1;
        } else {
          v(j, i) = -1;
        }
      }
      if (a.column == 1 && b.column == 2) {
        if (a.first < b.first && b.first < a.second && a.second < b.second) {
          v(i, j) = 1;
        } else if (b.first < a.first && a.first < b.second &&
                   b.second < a.second) {
          v(i, j) = -1;
        }
      }
    }
  }
  out.v = std::move(v);
  return out;
}

int sym_signature(SeifertMatrix const& v) {
  return signature(v.symmetrized());
}

mpz_class oracle_determinant(BraidWord const& w) {
  return abs(det(seifert_matrix(w).symmetrized()));
}

}  // namespace braid3
