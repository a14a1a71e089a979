#include "braid3/homology_rep.hpp"

#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

IntMatrix2 IntMatrix2::operator*(IntMatrix2 const& o) const {
  return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r,
          r * o.q + s * o.s};
}

IntMatrix2 IntMatrix2::operator-(IntMatrix2 const& o) const {
  return {p - o.p, q - o.q, r - o.r, s - o.s};
}

SL2Matrix::SL2Matrix(IntMatrix2 m) : _m(std::move(m)) {
  if (_m.det() != 1) {
    throw std::invalid_argument("SL2Matrix: determinant is not 1: " +
                                to_string(_m));
  }
}

SL2Matrix SL2Matrix::operator*(SL2Matrix const& o) const {
  SL2Matrix out;
  out._m = _m * o._m;
  return out;
}

SL2Matrix SL2Matrix::operator-() const {
  SL2Matrix out;
  out._m = -_m;
  return out;
}

SL2Matrix SL2Matrix::inverse() const {
  SL2Matrix out;
  out._m = {_m.s, -_m.q, -_m.r, _m.p};
  return out;
}

bool SL2Matrix::is_plus_minus_identity() const {
  return _m.q == 0 && _m.r == 0 && _m.p == _m.s;
}

std::string to_string(IntMatrix2 const& m) {
  return "[[" + m.p.get_str() + "," + m.q.get_str() + "],[" + m.r.get_str() +
         "," + m.s.get_str() + "]]";
}

std::optional<mpz_class> AbelianGroup::order() const {
  if (free_rank != 0) {
    return std::nullopt;
  }
  mpz_class n = 1;
  for (auto const& d : torsion) {
    n *= d;
  }
  return n;
}

std::string to_string(AbelianGroup const& g) {
  std::string out;
  for (int i = 0; i < g.free_rank; ++i) {
    out += out.empty() ? "Z" : " + Z";
  }
  for (auto const& d : g.torsion) {
    out += out.empty() ? "" : " + ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

std::string to_string(TraceClass::Kind kind) {
  switch (kind) {
    case TraceClass::Kind::Central:
      return "Central";
    case TraceClass::Kind::Elliptic:
      return "Elliptic";
    case TraceClass::Kind::Parabolic:
      return "Parabolic";
    case TraceClass::Kind::Hyperbolic:
      return "Hyperbolic";
  }
  return "?";
}

SL2Matrix generator_matrix(Letter l) {
  int const e = l.sign;
  if (l.generator == Generator::X) {
    return SL2Matrix(IntMatrix2{1, e, 0, 1});
  }
  return SL2Matrix(IntMatrix2{1, 0, -e, 1});
}

SL2Matrix image(BraidWord const& w) {
  // Multiplying by an elementary matrix only touches one column, so do it
  // in place instead of through the general product.
  IntMatrix2 m;
  for (auto const& l : w.letters()) {
    if (l.generator == Generator::X) {
      // M * [[1,e],[0,1]]: second column += e * first column.
      if (l.sign > 0) {
        m.q += m.p;
        m.s += m.r;
      } else {
        m.q -= m.p;
        m.s -= m.r;
      }
    } else {
      // M * [[1,0],[-e,1]]: first column -= e * second column.
      if (l.sign > 0) {
        m.p -= m.q;
        m.r -= m.s;
      } else {
        m.p += m.q;
        m.r += m.s;
      }
    }
  }
  return SL2Matrix(std::move(m));
}

AbelianGroup smith_normal_form(IntMatrix2 const& m) {
  AbelianGroup g;
  mpz_class d1;
  mpz_gcd(d1.get_mpz_t(), m.p.get_mpz_t(), m.q.get_mpz_t());
  mpz_gcd(d1.get_mpz_t(), d1.get_mpz_t(), m.r.get_mpz_t());
  mpz_gcd(d1.get_mpz_t(), d1.get_mpz_t(), m.s.get_mpz_t());
  if (d1 == 0) {
    g.free_rank = 2;
    return g;
  }
  mpz_class const det = abs(m.det());
  if (det == 0) {
    g.free_rank = 1;
    if (d1 >= 2) {
      g.torsion.push_back(d1);
    }
    return g;
  }
  mpz_class const d2 = det / d1;
  if (d1 >= 2) {
    g.torsion.push_back(d1);
  }
  if (d2 >= 2) {
    g.torsion.push_back(d2);
  }
  return g;
}

AbelianGroup h1_branched_cover(BraidWord const& w) {
  return smith_normal_form(image(w).entries() - IntMatrix2{});
}

mpz_class determinant(BraidWord const& w) {
  return abs(2 - image(w).trace());
}

TraceClass trace_class(SL2Matrix const& m) {
  mpz_class const t = m.trace();
  if (m.is_plus_minus_identity()) {
    return {TraceClass::Kind::Central, m.p() > 0 ? 1 : -1};
  }
  mpz_class const a = abs(t);
  if (a <= 1) {
    int const eps = t != 0 ? sgn(t) : sgn(m.r());
    return {TraceClass::Kind::Elliptic, eps};
  }
  if (a == 2) {
    return {TraceClass::Kind::Parabolic, sgn(t)};
  }
  return {TraceClass::Kind::Hyperbolic, sgn(t)};
}

ParabolicInvariant parabolic_invariant(SL2Matrix const& m) {
  TraceClass const tc = trace_class(m);
  if (tc.kind != TraceClass::Kind::Parabolic) {
    throw Error(ErrorCode::NotParabolic,
                "parabolic_invariant: matrix is " + to_string(tc.kind) + ": " +
                    to_string(m));
  }
  SL2Matrix const n = tc.epsilon > 0 ? m : -m;
  // N - I has rank one; its kernel is spanned by the fixed vector of N.
  mpz_class const a = n.p() - 1;
  mpz_class const b = n.q();
  mpz_class const c = n.r();
  mpz_class const d = n.s() - 1;
  mpz_class v1, v2;
  if (a != 0 || b != 0) {
    v1 = b;
    v2 = -a;
  } else {
    v1 = d;
    v2 = -c;
  }
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), v1.get_mpz_t(),
             v2.get_mpz_t());
  v1 /= g;
  v2 /= g;
  // v1 * x + v2 * y = 1, so P = [[v1, -y], [v2, x]] has determinant 1.
  SL2Matrix const basis(IntMatrix2{v1, -y, v2, x});
  SL2Matrix const t = basis.inverse() * n * basis;
  if (t.r() != 0 || t.p() != 1 || t.s() != 1) {
    throw Error(ErrorCode::InternalInconsistency,
                "parabolic_invariant: conjugation did not triangularize " +
                    to_string(m));
  }
  // [[1,t],[0,1]] is conjugate to [[1,0],[-t,1]] via [[0,-1],[1,0]].
  return {tc.epsilon, t.q()};
}

}  // namespace braid3
