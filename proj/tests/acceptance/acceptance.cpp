// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; the sample sizes and sweep bounds below are the pinned tolerances.

#include <json.hpp>

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braid3/errors.hpp"
#include "braid3/floer.hpp"
#include "braid3/homology_rep.hpp"
#include "braid3/link_invariants.hpp"
#include "braid3/murasugi.hpp"
#include "braid3/report.hpp"
#include "braid3/seifert_oracle.hpp"
#include "calibration.hpp"
#include "oracles.hpp"

using namespace braid3;

namespace {

constexpr std::uint64_t kSeed = 20240601;

constexpr int kRoundTripWords = 10000;
constexpr std::size_t kRoundTripMaxLength = 40;
constexpr int kConjugacyPairs = 1000;
constexpr std::size_t kConjugacyWordLength = 24;
constexpr std::size_t kConjugatorLength = 12;
constexpr int kOracleWords = 1000;
constexpr std::size_t kOracleMaxLength = 16;
constexpr std::int64_t kDeltaMaxD = 6;
constexpr std::size_t kDeltaMaxN = 5;
constexpr std::int64_t kDeltaMaxA = 5;
constexpr std::int64_t kSignatureMaxD = 2;
constexpr std::size_t kSignatureMaxN = 4;
constexpr std::int64_t kSignatureMaxA = 4;
constexpr std::int64_t kSweepMaxD = 5;
constexpr std::size_t kSweepMaxN = 3;
constexpr std::int64_t kSweepMaxParam = 8;
constexpr int kIncrementPrefixes = 50;
constexpr std::int64_t kIncrementMaxA = 6;
constexpr std::int64_t kTorusKnotMaxD = 4;

struct Result {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(std::string const& why) {
    if (pass) {
      first_failure = why;
    }
    pass = false;
  }
};

// Calls visit(tuple) for every canonical Family1 tuple with n <= max_n and
// entries in [0, max_a].
void for_each_tuple(std::size_t max_n, std::int64_t max_a,
                    std::function<void(std::vector<std::int64_t> const&)> const&
                        visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::int64_t> a(n, 0);
    for (;;) {
      bool const nonzero =
          std::any_of(a.begin(), a.end(), [](auto v) { return v > 0; });
      if (nonzero && least_rotation(a) == a) {
        visit(a);
      }
      std::size_t k = 0;
      while (k < n && a[k] == max_a) {
        a[k++] = 0;
      }
      if (k == n) {
        break;
      }
      ++a[k];
    }
  }
}

int closure_components(MurasugiForm const& f) {
  return components(family_tail(f));
}

std::string without_word(std::string const& json) {
  auto j = nlohmann::ordered_json::parse(json);
  j.erase("word");
  return j.dump();
}

bool non_split(BraidWord const& w) {
  bool x = false;
  bool y = false;
  BraidWord const reduced = free_reduce(w);
  for (auto const& l : reduced.letters()) {
    (l.generator == Generator::X ? x : y) = true;
  }
  return x && y;
}

Result round_trip() {
  Result r;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < kRoundTripWords; ++i) {
    BraidWord const w = oracle::random_word(rng, kRoundTripMaxLength);
    MurasugiForm const f = classify(w);
    BraidWord const c = canonical_word(f);
    oracle::Mat const m = oracle::image(w);
    bool const ok = classify(c) == f &&
                    psl2_normal_form(c) == psl2_normal_form(w) &&
                    sl2_normal_form(c) == sl2_normal_form(w) &&
                    exponent_sum(c) == exponent_sum(w) &&
                    image(c).trace() == m[0] + m[3];
    if (!ok) {
      r.fail(to_string(w));
    }
  }
  r.detail = std::to_string(kRoundTripWords) + " words, length <= " +
             std::to_string(kRoundTripMaxLength);
  return r;
}

Result conjugacy_invariance() {
  Result r;
  std::mt19937_64 rng(kSeed + 1);
  ReportOptions const opts{true, false};
  for (int i = 0; i < kConjugacyPairs; ++i) {
    BraidWord const w = oracle::random_word(rng, kConjugacyWordLength);
    BraidWord const u = oracle::random_word(rng, kConjugatorLength);
    BraidWord const c = concat(concat(u, w), inverse(u));
    if (without_word(to_json(analyze(w, opts))) !=
        without_word(to_json(analyze(c, opts)))) {
      r.fail(to_string(w) + " vs " + to_string(c));
    }
  }
  r.detail = std::to_string(kConjugacyPairs) + " pairs (u, w), all fields";
  return r;
}

Result oracle_determinant_equivalence() {
  Result r;
  std::mt19937_64 rng(kSeed + 2);
  int checked = 0;
  while (checked < kOracleWords) {
    BraidWord const w = oracle::random_word(rng, kOracleMaxLength, 2);
    if (!non_split(w)) {
      continue;
    }
    ++checked;
    mpz_class const rep = determinant(w);
    if (rep != oracle_determinant(w) ||
        rep != oracle::abs_det_minus_identity(oracle::image(w))) {
      r.fail(to_string(w));
    }
  }
  r.detail = std::to_string(kOracleWords) + " non-split words, length <= " +
             std::to_string(kOracleMaxLength);
  return r;
}

Result closed_form_fixtures() {
  Result r;
  int checks = 0;
  auto expect = [&](bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      r.fail(what);
    }
  };

  // (a) h x^n y^-1 is L(n+4,1) with d = (n+3)/4.
  for (long n = 0; n <= 8; ++n) {
    BraidWord w = parse("h");
    w.append_power(kX, n);
    w.push_back(kYInv);
    MurasugiForm const f = classify(w);
    auto const order = h1_branched_cover(w).order();
    expect(order && *order == n + 4, "|H1| for n=" + std::to_string(n));
    expect(correction_term(f) == make_grading(n + 3, 4),
           "d for n=" + std::to_string(n));
  }

  // (b) The full twist.
  BraidWord const h = parse("h");
  expect(h1_branched_cover(h) ==
             AbelianGroup{0, {mpz_class(2), mpz_class(2)}},
         "H1(Y(0))");
  expect(correction_term(classify(h)) == make_grading(1), "d(Y(0))");

  // (c) The 8_20 mirror.
  InvariantReport const k = analyze(parse("h x y^-5"));
  expect(k.qa, "8_20 qa");
  expect(k.delta && *k.delta == 0, "8_20 delta");
  expect(k.signature && *k.signature == 0, "8_20 signature");
  expect(k.finite_order_screen == ScreenResult::Pass, "8_20 screen");

  // (d) Surgery tables, row by row.
  using K = KnotTypeTag;
  auto g = [](long v) { return make_grading(v); };
  auto module = [](Grading t, std::int64_t rank, Grading f) {
    std::vector<FreeSummand> frees;
    if (rank > 0) {
      frees.push_back({rank, std::move(f)});
    }
    return GradedModule({std::move(t)}, std::move(frees));
  };
  for (std::int64_t n = -6; n <= 6; ++n) {
    std::string const at = " n=" + std::to_string(n);
    expect(surgery_table(K::RightTrefoilLike, n) ==
               (n > 0 ? module(g(-2), n - 1, g(-2)) : module(g(0), -n, g(-1))),
           "T table" + at);
    expect(surgery_table(K::LeftTrefoilLike, n) ==
               (n >= 0 ? module(g(0), n, g(0)) : module(g(2), -n - 1, g(1))),
           "-T table" + at);
    expect(surgery_table(K::FigureEightLike, n) ==
               (n >= 0 ? module(g(0), n, g(-1)) : module(g(0), -n, g(0))),
           "E table" + at);
  }
  auto half = [](long v) { return make_grading(v, 2); };
  expect(zero_surgery_table(K::RightTrefoilLike) ==
             GradedModule({half(-1), half(-3)}, {}),
         "0-surgery T");
  expect(zero_surgery_table(K::LeftTrefoilLike) ==
             GradedModule({half(3), half(1)}, {}),
         "0-surgery -T");
  expect(zero_surgery_table(K::FigureEightLike) ==
             GradedModule({half(1), half(-1)}, {{1, half(-1)}}),
         "0-surgery E");

  r.detail = std::to_string(checks) + " exact fixture checks";
  return r;
}

Result delta_cross_check() {
  Result r;
  int checked = 0;
  auto check = [&](MurasugiForm const& f) {
    if (closure_components(f) != 1) {
      return;
    }
    ++checked;
    if (2 * correction_term(f) != delta(f, 1)) {
      r.fail(to_string(f));
    }
  };
  for (std::int64_t d = -kDeltaMaxD; d <= kDeltaMaxD; ++d) {
    for_each_tuple(kDeltaMaxN, kDeltaMaxA,
                   [&](auto const& a) { check(Family1{d, a}); });
    for (int m : {-1, -3}) {
      check(Family3{d, m});
    }
  }
  r.detail = std::to_string(checked) + " knot forms, |d| <= " +
             std::to_string(kDeltaMaxD) + ", n <= " +
             std::to_string(kDeltaMaxN) + ", a_i <= " +
             std::to_string(kDeltaMaxA);
  return r;
}

Result signature_formula() {
  Result r;
  int checked = 0;
  for (std::int64_t d = -kSignatureMaxD; d <= kSignatureMaxD; ++d) {
    for_each_tuple(kSignatureMaxN, kSignatureMaxA, [&](auto const& a) {
      MurasugiForm const f = Family1{d, a};
      if (closure_components(f) != 1) {
        return;
      }
      ++checked;
      int const oracle_sigma =
          sym_signature(seifert_matrix(canonical_word(f)));
      if (signature(f, 1) != oracle_sigma) {
        r.fail(to_string(f));
      }
    });
  }
  r.detail = std::to_string(checked) + " Family1 knots, |d| <= " +
             std::to_string(kSignatureMaxD) + ", n <= " +
             std::to_string(kSignatureMaxN) + ", a_i <= " +
             std::to_string(kSignatureMaxA);
  return r;
}

Result coherence_sweep() {
  Result r;
  int checked = 0;
  auto check = [&](MurasugiForm const& f) {
    ++checked;
    bool const l = is_l_space(f);
    if (form_determinant(f) != 0) {
      if (l != hf_plus_s0(f).is_bare_tower()) {
        r.fail("L-space vs bare tower: " + to_string(f));
      }
      if (is_tight(f) && is_tight(mirror(f))) {
        r.fail("tight both ways: " + to_string(f));
      }
    } else if (l) {
      r.fail("L-space with b1 > 0: " + to_string(f));
    }
    if (quasi_alternating(f) && !l) {
      r.fail("qa but not an L-space: " + to_string(f));
    }
  };
  for (std::int64_t d = -kSweepMaxD; d <= kSweepMaxD; ++d) {
    for_each_tuple(kSweepMaxN, kSweepMaxParam,
                   [&](auto const& a) { check(Family1{d, a}); });
    for (std::int64_t m = -kSweepMaxParam; m <= kSweepMaxParam; ++m) {
      check(Family2{d, m});
    }
    for (int m : {-1, -2, -3}) {
      check(Family3{d, m});
    }
  }
  r.detail = std::to_string(checked) + " forms, |d| <= " +
             std::to_string(kSweepMaxD) + ", parameters <= " +
             std::to_string(kSweepMaxParam);
  return r;
}

Result determinant_increment() {
  Result r;
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<int> prefix_len(0, 4);
  std::uniform_int_distribution<std::int64_t> entry(0, 5);
  for (int i = 0; i < kIncrementPrefixes; ++i) {
    std::vector<std::int64_t> prefix(prefix_len(rng));
    for (auto& a : prefix) {
      a = entry(rng);
    }
    auto word = [&](std::int64_t last) {
      BraidWord w = parse("h");
      for (auto a : prefix) {
        w.push_back(kX);
        w.append_power(kY, -a);
      }
      w.push_back(kX);
      w.append_power(kY, -last);
      return w;
    };
    mpz_class const step = determinant(word(2)) - determinant(word(1));
    bool ok = step > 0;
    for (std::int64_t an = 1; an <= kIncrementMaxA; ++an) {
      ok = ok && determinant(word(an + 1)) - determinant(word(an)) == step;
    }
    if (!ok) {
      r.fail(to_string(word(1)));
    }
  }
  r.detail = std::to_string(kIncrementPrefixes) + " prefixes, a_n = 1.." +
             std::to_string(kIncrementMaxA);
  return r;
}

Result torus_knots() {
  Result r;
  for (std::int64_t d = 1; d <= kTorusKnotMaxD; ++d) {
    BraidWord a;
    for (std::int64_t k = 0; k < 3 * d - 1; ++k) {
      a.append(parse("x y"));
    }
    BraidWord b = full_twist_power(d);
    b.append(parse("x^-1 y^-1"));
    bool const ok =
        classify(a) == classify(b) && determinant(a) == determinant(b) &&
        sym_signature(seifert_matrix(a)) == sym_signature(seifert_matrix(b));
    if (!ok) {
      r.fail("d=" + std::to_string(d));
    }
  }
  r.detail = "d = 1.." + std::to_string(kTorusKnotMaxD);
  return r;
}

Result calibration_gate() {
  Result r;
  if (!calibration::check(r.detail)) {
    r.fail(r.detail);
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    Result (*run)();
  };
  Criterion const criteria[] = {
      {"normal-form round trip", round_trip},
      {"conjugacy invariance of reports", conjugacy_invariance},
      {"determinant oracle equivalence", oracle_determinant_equivalence},
      {"closed-form fixtures", closed_form_fixtures},
      {"delta = 2 d cross-check", delta_cross_check},
      {"signature formula vs Seifert oracle", signature_formula},
      {"classification coherence sweep", coherence_sweep},
      {"H1 increment in the last exponent", determinant_increment},
      {"torus-knot identification", torus_knots},
      {"Seifert calibration gate", calibration_gate},
  };
  int failures = 0;
  int index = 0;
  for (auto const& c : criteria) {
    ++index;
    Result res;
    try {
      res = c.run();
    } catch (std::exception const& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d %s  %s (%s)%s%s\n", index,
                res.pass ? "PASS" : "FAIL", c.name, res.detail.c_str(),
                res.pass ? "" : "; first failure: ",
                res.first_failure.c_str());
    failures += res.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
