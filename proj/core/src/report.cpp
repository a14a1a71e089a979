#include "braid3/report.hpp"

#include <json.hpp>
#include <sstream>

#include "braid3/errors.hpp"
#include "braid3/seifert_oracle.hpp"

namespace braid3 {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(mpz_class const& v) {
  if (v.fits_slong_p()) {
    return static_cast<std::int64_t>(v.get_si());
  }
  return v.get_str();
}

Json rational_json(Grading const& q) {
  return Json{{"num", integer_json(q.get_num())},
              {"den", integer_json(q.get_den())}};
}

Json module_json(GradedModule const& g) {
  Json towers = Json::array();
  for (auto const& t : g.towers()) {
    towers.push_back(rational_json(t));
  }
  Json frees = Json::array();
  for (auto const& f : g.frees()) {
    frees.push_back(Json{{"rank", f.rank},
                         {"num", integer_json(f.grading.get_num())},
                         {"den", integer_json(f.grading.get_den())}});
  }
  return Json{{"towers", towers}, {"frees", frees}, {"absolute", g.absolute()}};
}

Json form_json(MurasugiForm const& f) {
  Json j{{"family", family_number(f)}, {"d", twist_exponent(f)}};
  if (auto const* f1 = std::get_if<Family1>(&f)) {
    j["a"] = f1->a;
  } else if (auto const* f2 = std::get_if<Family2>(&f)) {
    j["m"] = f2->m;
  } else {
    j["m"] = std::get<Family3>(f).m;
  }
  j["text"] = to_string(f);
  return j;
}

Json group_json(AbelianGroup const& g) {
  Json torsion = Json::array();
  for (auto const& t : g.torsion) {
    torsion.push_back(integer_json(t));
  }
  return Json{{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"text", to_string(g)}};
}

Json stein_json(SteinReport const& s) {
  Json j{{"l_space", s.l_space},
         {"tight", s.tight},
         {"fillable", to_string(s.fillable)}};
  if (s.euler_char) {
    j["euler_char"] = *s.euler_char;
  }
  j["dehn_twist_count_bound"] = s.dehn_twist_count_bound;
  return j;
}

Json torus_bundle_json(TorusBundleFloer const& t) {
  return Json{{"s0", module_json(t.s0)},
              {"other_torsion_structures",
               integer_json(t.other_torsion_structures)},
              {"other_relative", module_json(t.other_relative)},
              {"nontorsion_vanish", t.nontorsion_vanish}};
}

Json oracle_json(OracleCheck const& o) {
  Json j = Json::object();
  if (o.error) {
    j["error"] = *o.error;
  }
  if (o.determinant) {
    j["determinant"] = integer_json(*o.determinant);
  }
  if (o.signature) {
    j["signature"] = *o.signature;
  }
  j["agrees"] = o.agrees;
  return j;
}

template <class T, class F>
std::optional<T> unless_error(F&& f) {
  try {
    return f();
  } catch (Error const& e) {
    switch (e.code()) {
      case ErrorCode::NotAKnot:
      case ErrorCode::FamilyNotCovered:
      case ErrorCode::PositiveB1:
      case ErrorCode::B1NotOne:
        return std::nullopt;
      default:
        throw;
    }
  }
}

OracleCheck run_oracle(BraidWord const& w, InvariantReport const& r) {
  OracleCheck o;
  try {
    SeifertMatrix const v = seifert_matrix(w);
    o.determinant = abs(det(v.symmetrized()));
    o.signature = sym_signature(v);
  } catch (Error const& e) {
    if (e.code() != ErrorCode::SplitClosure) {
      throw;
    }
    o.error = std::string(to_string(e.code()));
    return o;
  }
  o.agrees = *o.determinant == r.determinant &&
             (!r.signature || *r.signature == *o.signature);
  return o;
}

}  // namespace

InvariantReport analyze(BraidWord const& w, ReportOptions const& opts) {
  InvariantReport r;
  r.word = to_string(w);
  r.normal_form = classify(w);
  auto const& f = r.normal_form;
  r.components = components(w);
  r.determinant = determinant(w);
  r.h1 = h1_branched_cover(w);
  r.b1 = r.h1.free_rank;
  r.l_space = r.determinant != 0 && is_l_space(f);
  r.tight = is_tight(f);
  r.tight_inverse = is_tight(mirror(f));
  r.knot_type_tag = knot_type(f);
  r.hf_plus_s0 = unless_error<GradedModule>([&] { return hf_plus_s0(f); });
  if (auto const order = r.h1.order()) {
    r.spin_c_count = *order;
  }
  r.correction_term =
      unless_error<Grading>([&] { return correction_term(f); });
  r.delta = unless_error<Grading>([&] { return delta(f, r.components); });
  r.signature =
      unless_error<std::int64_t>([&] { return signature(f, r.components); });
  r.qa = quasi_alternating(f);
  r.finite_order_screen = finite_order_screen(f, r.components);
  r.stein = stein_report(f);
  if (opts.torus_bundle) {
    r.torus_bundle =
        unless_error<TorusBundleFloer>([&] { return torus_bundle_hf(f); });
  }
  if (opts.oracle) {
    r.oracle = run_oracle(w, r);
  }
  return r;
}

std::string to_json(InvariantReport const& r) {
  Json j;
  j["word"] = r.word;
  j["normal_form"] = form_json(r.normal_form);
  j["components"] = r.components;
  j["determinant"] = integer_json(r.determinant);
  j["h1"] = group_json(r.h1);
  j["b1"] = r.b1;
  j["l_space"] = r.l_space;
  j["tight"] = r.tight;
  j["tight_inverse"] = r.tight_inverse;
  j["knot_type_tag"] = to_string(r.knot_type_tag);
  if (r.hf_plus_s0) {
    j["hf_plus_s0"] = module_json(*r.hf_plus_s0);
  }
  if (r.spin_c_count) {
    j["spin_c_count"] = integer_json(*r.spin_c_count);
  }
  if (r.correction_term) {
    j["correction_term"] = rational_json(*r.correction_term);
  }
  if (r.delta) {
    j["delta"] = rational_json(*r.delta);
  }
  if (r.signature) {
    j["signature"] = *r.signature;
  }
  j["qa"] = r.qa;
  j["finite_order_screen"] = to_string(r.finite_order_screen);
  j["stein"] = stein_json(r.stein);
  if (r.torus_bundle) {
    j["torus_bundle"] = torus_bundle_json(*r.torus_bundle);
  }
  if (r.oracle) {
    j["oracle"] = oracle_json(*r.oracle);
  }
  return j.dump();
}

std::string to_text(InvariantReport const& r) {
  std::ostringstream os;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  os << "word:                " << (r.word.empty() ? "(empty)" : r.word)
     << '\n';
  os << "normal form:         " << to_string(r.normal_form) << '\n';
  os << "components:          " << r.components << '\n';
  os << "determinant:         " << r.determinant.get_str() << '\n';
  os << "H1(branched cover):  " << to_string(r.h1) << '\n';
  if (r.b1 > 0) {
    os << "b1:                  " << r.b1
       << " (b1 > 0: Floer data in s0 not computed)\n";
  }
  os << "L-space:             " << yes_no(r.l_space) << '\n';
  os << "tight:               " << yes_no(r.tight) << '\n';
  os << "tight (inverse):     " << yes_no(r.tight_inverse) << '\n';
  os << "knot type tag:       " << to_string(r.knot_type_tag) << '\n';
  if (r.hf_plus_s0) {
    os << "HF+(s0):             " << to_string(*r.hf_plus_s0) << '\n';
  }
  if (r.spin_c_count) {
    os << "Spin^c structures:   " << r.spin_c_count->get_str() << '\n';
  }
  if (r.correction_term) {
    os << "correction term:     " << to_string(*r.correction_term) << '\n';
  }
  if (r.delta) {
    os << "delta:               " << to_string(*r.delta) << '\n';
  }
  if (r.signature) {
    os << "signature:           " << *r.signature << '\n';
  }
  os << "quasi-alternating:   " << yes_no(r.qa) << '\n';
  os << "finite-order screen: " << to_string(r.finite_order_screen) << '\n';
  os << "Stein fillable:      " << to_string(r.stein.fillable);
  if (r.stein.euler_char) {
    os << " (chi = " << *r.stein.euler_char << ")";
  }
  os << '\n';
  os << "twist count bound:   " << r.stein.dehn_twist_count_bound << '\n';
  if (r.torus_bundle) {
    auto const& t = *r.torus_bundle;
    os << "torus bundle s0:     " << to_string(t.s0) << '\n';
    os << "  other torsion:     " << t.other_torsion_structures.get_str()
       << " x " << to_string(t.other_relative) << '\n';
  }
  if (r.oracle) {
    auto const& o = *r.oracle;
    if (o.error) {
      os << "oracle:              " << *o.error << '\n';
    } else {
      os << "oracle:              det " << o.determinant->get_str()
         << ", signature " << *o.signature << ", "
         << (o.agrees ? "agrees" : "DISAGREES") << '\n';
    }
  }
  return os.str();
}

}  // namespace braid3
