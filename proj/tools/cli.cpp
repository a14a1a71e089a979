#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "braid3/errors.hpp"
#include "braid3/report.hpp"

namespace braid3::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  bool json = false;
  bool oracle = false;
  bool torus_bundle = false;

  ReportOptions report_options() const { return {torus_bundle, oracle}; }
};

struct Outcome {
  std::string text;
  int code = kOk;
};

int code_for(Error const& e) {
  switch (e.code()) {
    case ErrorCode::UnknownToken:
    case ErrorCode::MalformedExponent:
      return kParseError;
    default:
      return kInconsistency;
  }
}

std::string error_json(std::string const& input, Error const& e) {
  Json j{{"input", input},
         {"error", {{"code", std::string(to_string(e.code()))},
                    {"message", e.what()}}}};
  return j.dump();
}

Outcome analyze_one(std::string const& text, Flags const& flags) {
  try {
    InvariantReport const r = analyze(parse(text), flags.report_options());
    Outcome o{flags.json ? to_json(r) : to_text(r), kOk};
    if (r.oracle && !r.oracle->agrees) {
      o.code = kInconsistency;
    }
    return o;
  } catch (Error const& e) {
    return {flags.json ? error_json(text, e)
                       : std::string("error: ") + e.what() + "\n",
            code_for(e)};
  }
}

int cmd_analyze(std::string const& word, Flags const& flags, std::ostream& out,
                std::ostream& err) {
  Outcome const o = analyze_one(word, flags);
  bool const failed = o.code == kParseError ||
                      (o.code == kInconsistency && !flags.oracle);
  (failed && !flags.json ? err : out) << o.text << (flags.json ? "\n" : "");
  if (o.code == kInconsistency && flags.oracle && !flags.json) {
    err << "error: oracle disagrees with the representation\n";
  }
  return o.code;
}

bool is_skipped(std::string const& line) {
  auto const first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<Outcome> analyze_parallel(std::vector<std::string> const& words,
                                      Flags const& flags) {
  std::vector<Outcome> results(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < words.size(); i = next++) {
      results[i] = analyze_one(words[i], flags);
    }
  };
  unsigned const n = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(n, words.size()); ++t) {
    pool.emplace_back(worker);
  }
  pool.clear();
  return results;
}

int cmd_batch(std::string const& path, Flags const& flags, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return kIoError;
  }
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!is_skipped(line)) {
      words.push_back(line);
    }
  }
  if (in.bad()) {
    err << "error: failed reading '" << path << "'\n";
    return kIoError;
  }

  std::vector<Outcome> const results = analyze_parallel(words, flags);
  std::size_t ok = 0;
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto const& r = results[i];
    if (r.code == kOk) {
      ++ok;
    }
    if (r.code == kInconsistency) {
      code = kInconsistency;
    }
    if (flags.json) {
      out << r.text << '\n';
    } else {
      out << "[" << i + 1 << "] " << words[i] << '\n' << r.text;
      out << '\n';
    }
  }
  std::size_t const failed = results.size() - ok;
  std::string const summary =
      std::to_string(ok) + " ok, " + std::to_string(failed) + " failed";
  if (flags.json) {
    out << Json{{"summary", summary}, {"ok", ok}, {"failed", failed}}.dump()
        << '\n';
  } else {
    out << summary << '\n';
  }
  return code;
}

int cmd_conjugate(std::string const& a, std::string const& b,
                  Flags const& flags, std::ostream& out, std::ostream& err) {
  try {
    MurasugiForm const fa = classify(parse(a));
    MurasugiForm const fb = classify(parse(b));
    bool const conj = fa == fb;
    if (flags.json) {
      out << Json{{"w1", a},
                  {"w2", b},
                  {"form1", to_string(fa)},
                  {"form2", to_string(fb)},
                  {"conjugate", conj}}
                 .dump()
          << '\n';
    } else {
      out << to_string(fa) << '\n' << to_string(fb) << '\n'
          << (conj ? "conjugate" : "not conjugate") << '\n';
    }
    return conj ? kOk : kNotConjugate;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return code_for(e);
  }
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"3-braid normal forms and Floer invariants of their closures"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_flag("--json", flags.json, "Emit JSON (ND-JSON in batch mode)");
  app.add_flag("--oracle", flags.oracle,
               "Cross-check determinant and signature with a Seifert matrix");
  app.add_flag("--torus-bundle", flags.torus_bundle,
               "Include HF+ of the associated torus bundle");

  std::string word;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one braid word");
  analyze_cmd->add_option("word", word, "Braid word, e.g. \"h x y^-5\"")
      ->required();

  std::string path;
  auto* batch_cmd =
      app.add_subcommand("batch", "Analyze one word per line of a file");
  batch_cmd->add_option("file", path, "Input file")->required();

  std::string w1;
  std::string w2;
  auto* conj_cmd =
      app.add_subcommand("conjugate", "Decide conjugacy of two words");
  conj_cmd->add_option("w1", w1)->required();
  conj_cmd->add_option("w2", w2)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kParseError;
  }

  if (*analyze_cmd) {
    return cmd_analyze(word, flags, out, err);
  }
  if (*batch_cmd) {
    return cmd_batch(path, flags, out, err);
  }
  return cmd_conjugate(w1, w2, flags, out, err);
}

}  // namespace braid3::cli
