#include "braid3/murasugi.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

bool is_u_power(FpLetter l) noexcept { return l != FpLetter::S; }

// Product of two letters of the same factor: returns the sign picked up and
// the surviving letter, if any. S^2 = U^3 = -I in SL(2,Z).
struct Merge {
  int sign;
  bool survives;
  FpLetter letter;
};

Merge merge(FpLetter a, FpLetter b) noexcept {
  if (a == FpLetter::S) {
    return {-1, false, FpLetter::S};
  }
  int const power = (a == FpLetter::U ? 1 : 2) + (b == FpLetter::U ? 1 : 2);
  switch (power) {
    case 2:
      return {1, true, FpLetter::U2};
    case 3:
      return {-1, false, FpLetter::S};
    default:  // U^4 = -U
      return {-1, true, FpLetter::U};
  }
}

bool same_factor(FpLetter a, FpLetter b) noexcept {
  return is_u_power(a) == is_u_power(b);
}

// Reduced word in SL(2,Z) with a central sign, built letter by letter.
class SignedWordBuilder {
 public:
  void push_back(FpLetter l) {
    if (!_w.empty() && same_factor(_w.back(), l)) {
      Merge const m = merge(_w.back(), l);
      _sign *= m.sign;
      if (m.survives) {
        _w.back() = m.letter;
      } else {
        _w.pop_back();
      }
    } else {
      _w.push_back(l);
    }
  }

  void push_front(FpLetter l) {
    if (!_w.empty() && same_factor(l, _w.front())) {
      Merge const m = merge(l, _w.front());
      _sign *= m.sign;
      if (m.survives) {
        _w.front() = m.letter;
      } else {
        _w.pop_front();
      }
    } else {
      _w.push_front(l);
    }
  }

  void flip_sign() noexcept { _sign = -_sign; }

  // Conjugates until the word is cyclically reduced and, when it has length
  // at least two, starts with S.
  void cyclically_reduce() {
    while (_w.size() >= 2 && same_factor(_w.front(), _w.back())) {
      FpLetter const last = _w.back();
      _w.pop_back();
      push_front(last);
    }
    if (_w.size() >= 2 && is_u_power(_w.front())) {
      _w.push_back(_w.front());
      _w.pop_front();
    }
  }

  SignedFreeProductWord finish() const {
    SignedFreeProductWord out;
    out.sign = _sign;
    out.word.letters.assign(_w.begin(), _w.end());
    return out;
  }

 private:
  int _sign = 1;
  std::deque<FpLetter> _w;
};

// Least rotation by an even offset; rotations of an alternating word that
// keep S in front are exactly its conjugates by prefixes.
void canonical_rotation(std::vector<FpLetter>& w) {
  if (w.size() < 2) {
    return;
  }
  std::vector<FpLetter> best = w;
  std::vector<FpLetter> rot(w.size());
  for (std::size_t k = 2; k < w.size(); k += 2) {
    std::rotate_copy(w.begin(), w.begin() + k, w.end(), rot.begin());
    if (rot < best) {
      best = rot;
    }
  }
  w = std::move(best);
}

int parity_sign(std::int64_t d) noexcept { return d % 2 == 0 ? 1 : -1; }

[[noreturn]] void inconsistent(BraidWord const& w, std::string const& why) {
  throw Error(ErrorCode::InternalInconsistency,
              "classify(" + to_string(w) + "): " + why);
}

std::string join(std::vector<std::int64_t> const& a) {
  std::string out;
  for (auto v : a) {
    out += out.empty() ? "" : ",";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::string to_string(FreeProductWord const& w) {
  std::string out;
  for (auto l : w.letters) {
    out += out.empty() ? "" : " ";
    out += l == FpLetter::S ? "S" : (l == FpLetter::U ? "U" : "U^2");
  }
  return out.empty() ? "1" : out;
}

SL2Matrix evaluate(SignedFreeProductWord const& w) {
  static SL2Matrix const S(IntMatrix2{0, -1, 1, 0});
  static SL2Matrix const U(IntMatrix2{0, -1, 1, 1});
  static SL2Matrix const U2 = U * U;
  SL2Matrix m;
  for (auto l : w.word.letters) {
    m = m * (l == FpLetter::S ? S : (l == FpLetter::U ? U : U2));
  }
  return w.sign > 0 ? m : -m;
}

SignedFreeProductWord sl2_normal_form(BraidWord const& w) {
  // x = -S U, x^-1 = -U^2 S, y = -U S, y^-1 = -S U^2.
  SignedWordBuilder b;
  for (auto const& l : w.letters()) {
    b.flip_sign();
    if (l.generator == Generator::X) {
      if (l.sign > 0) {
        b.push_back(FpLetter::S);
        b.push_back(FpLetter::U);
      } else {
        b.push_back(FpLetter::U2);
        b.push_back(FpLetter::S);
      }
    } else {
      if (l.sign > 0) {
        b.push_back(FpLetter::U);
        b.push_back(FpLetter::S);
      } else {
        b.push_back(FpLetter::S);
        b.push_back(FpLetter::U2);
      }
    }
  }
  b.cyclically_reduce();
  SignedFreeProductWord out = b.finish();
  canonical_rotation(out.word.letters);
  return out;
}

FreeProductWord psl2_normal_form(BraidWord const& w) {
  return sl2_normal_form(w).word;
}

int family_number(MurasugiForm const& f) noexcept {
  return static_cast<int>(f.index()) + 1;
}

std::int64_t twist_exponent(MurasugiForm const& f) noexcept {
  return std::visit([](auto const& g) { return g.d; }, f);
}

std::string to_string(MurasugiForm const& f) {
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    return "Family1{d=" + std::to_string(f1->d) + ", a=(" + join(f1->a) +
           ")}";
  }
  if (auto const* f2 = std::get_if<Family2>(&f)) {
    return "Family2{d=" + std::to_string(f2->d) +
           ", m=" + std::to_string(f2->m) + "}";
  }
  auto const& f3 = std::get<Family3>(f);
  return "Family3{d=" + std::to_string(f3.d) + ", m=" + std::to_string(f3.m) +
         "}";
}

std::vector<std::int64_t> least_rotation(std::vector<std::int64_t> const& a) {
  std::vector<std::int64_t> best = a;
  std::vector<std::int64_t> rot(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) {
    std::rotate_copy(a.begin(), a.begin() + k, a.end(), rot.begin());
    if (rot < best) {
      best = rot;
    }
  }
  return best;
}

Family1 make_family1(std::int64_t d, std::vector<std::int64_t> a) {
  return {d, least_rotation(a)};
}

void validate(MurasugiForm const& f) {
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    auto const& a = f1->a;
    bool const ok =
        !a.empty() &&
        std::all_of(a.begin(), a.end(), [](auto v) { return v >= 0; }) &&
        std::any_of(a.begin(), a.end(), [](auto v) { return v >= 1; }) &&
        least_rotation(a) == a;
    if (!ok) {
      throw Error(ErrorCode::InvalidForm,
                  "invalid Family1 tuple in " + to_string(f));
    }
  } else if (auto const* f3 = std::get_if<Family3>(&f)) {
    if (f3->m < -3 || f3->m > -1) {
      throw Error(ErrorCode::InvalidForm,
                  "Family3 requires m in {-1,-2,-3}: " + to_string(f));
    }
  }
}

BraidWord family_tail(MurasugiForm const& f) {
  validate(f);
  BraidWord tail;
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    for (auto a : f1->a) {
      tail.push_back(kX);
      tail.append_power(kY, -a);
    }
  } else if (auto const* f2 = std::get_if<Family2>(&f)) {
    tail.append_power(kY, f2->m);
  } else {
    tail.append_power(kX, std::get<Family3>(f).m);
    tail.push_back(kYInv);
  }
  return tail;
}

BraidWord canonical_word(MurasugiForm const& f) {
  BraidWord w = full_twist_power(twist_exponent(f));
  w.append(family_tail(f));
  return w;
}

MurasugiForm classify(BraidWord const& w) {
  SignedFreeProductWord const nf = sl2_normal_form(w);
  std::int64_t const e = exponent_sum(w);
  auto const& letters = nf.word.letters;

  auto recover_d = [&](std::int64_t rest) {
    // e = 6d + rest
    std::int64_t const diff = e - rest;
    if (diff % 6 != 0) {
      inconsistent(w, "exponent sum " + std::to_string(e) +
                          " is not 6d + " + std::to_string(rest));
    }
    return diff / 6;
  };

  MurasugiForm form;
  if (letters.empty()) {
    form = Family2{recover_d(0), 0};
  } else if (letters.size() == 1) {
    // e = 6d + m - 1 and m - 1 in {-2,-3,-4} are distinct mod 6.
    std::int64_t const r = ((e % 6) + 6) % 6;
    int m = 0;
    switch (r) {
      case 4:
        m = -1;
        break;
      case 3:
        m = -2;
        break;
      case 2:
        m = -3;
        break;
      default:
        inconsistent(w, "elliptic image with exponent sum " +
                            std::to_string(e));
    }
    form = Family3{recover_d(m - 1), m};
  } else {
    // Syllables S U (x-like, "R") and S U^2 (y^-1-like, "L").
    std::vector<bool> is_r;
    is_r.reserve(letters.size() / 2);
    for (std::size_t i = 0; i + 1 < letters.size(); i += 2) {
      is_r.push_back(letters[i + 1] == FpLetter::U);
    }
    auto const r_count =
        static_cast<std::int64_t>(std::count(is_r.begin(), is_r.end(), true));
    auto const l_count = static_cast<std::int64_t>(is_r.size()) - r_count;
    if (r_count == 0 || l_count == 0) {
      ParabolicInvariant const pi = parabolic_invariant(image(w));
      if (!pi.m.fits_slong_p()) {
        inconsistent(w, "parabolic invariant out of range");
      }
      std::int64_t const m = pi.m.get_si();
      if (m != (r_count > 0 ? r_count : -l_count)) {
        inconsistent(w, "parabolic invariant " + std::to_string(m) +
                            " disagrees with the PSL(2,Z) word " +
                            to_string(nf.word));
      }
      form = Family2{recover_d(m), m};
    } else {
      auto const first_r = static_cast<std::size_t>(
          std::find(is_r.begin(), is_r.end(), true) - is_r.begin());
      std::rotate(is_r.begin(), is_r.begin() + first_r, is_r.end());
      std::vector<std::int64_t> a;
      for (bool r : is_r) {
        if (r) {
          a.push_back(0);
        } else {
          ++a.back();
        }
      }
      auto const n = static_cast<std::int64_t>(a.size());
      std::int64_t const total = std::accumulate(a.begin(), a.end(),
                                                 std::int64_t{0});
      form = make_family1(recover_d(n - total), std::move(a));
    }
  }

  // Sign/parity coherence and full conjugacy-class agreement of the emitted
  // representative with the input.
  std::int64_t const d = twist_exponent(form);
  int const model_eps = trace_class(image(family_tail(form))).epsilon;
  int const eps = trace_class(image(w)).epsilon;
  if (eps != parity_sign(d) * model_eps) {
    inconsistent(w, "(-1)^d disagrees with the trace sign for " +
                        to_string(form));
  }
  if (sl2_normal_form(canonical_word(form)) != nf) {
    inconsistent(w, to_string(form) +
                        " is not conjugate to the input in SL(2,Z)");
  }
  return form;
}

bool is_conjugate(BraidWord const& w1, BraidWord const& w2) {
  return classify(w1) == classify(w2);
}

MurasugiForm mirror(MurasugiForm const& f) {
  return classify(inverse(canonical_word(f)));
}

}  // namespace braid3
