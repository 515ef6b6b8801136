#include "pmm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "pmm/diagram.hpp"
#include "pmm/io.hpp"
#include "pmm/selftest.hpp"

namespace pmm {

namespace {

struct Options {
  int n = 0;
  std::string mode = "rn";
  std::string format = "json";
  std::string output;
  std::string input;
  std::vector<std::string> words;
  std::string suite;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void require_n(const Options& o) {
  if (o.n < 1) throw UsageError("-n must be given and at least 1");
}

WordMode mode_of(const Options& o) { return o.mode == "braid" ? WordMode::braid : WordMode::rn; }

/// Words come from positional arguments, or from --input (one per line).
std::vector<std::string> word_texts(const Options& o, std::size_t count) {
  std::vector<std::string> texts = o.words;
  if (texts.empty() && !o.input.empty()) {
    std::istringstream lines(read_file(o.input));
    for (std::string line; std::getline(lines, line);) texts.push_back(line);
  }
  if (texts.size() != count)
    throw UsageError("expected " + std::to_string(count) + " word(s), got " + std::to_string(texts.size()));
  return texts;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + o.output + "'");
}

std::string dump(const json& j) { return j.dump() + "\n"; }

int cmd_eval(const Options& o, std::ostream& out) {
  require_n(o);
  const auto w = parse_word(word_texts(o, 1)[0], o.n, mode_of(o));
  if (w.mode == WordMode::rn) {
    const auto a = eval_word(w.rn, o.n);
    emit(o, out, o.format == "text" ? to_text(a) + "\n" : dump(to_json(a)));
  } else {
    const auto f = phi_word(w.braid, o.n);
    const auto s = shadow(f);
    emit(o, out, o.format == "text" ? to_text(f) + "shadow: " + to_text(s) + "\n"
                                    : dump({{"layers", to_json(f)}, {"shadow", to_json(s)}}));
  }
  return kExitOk;
}

int cmd_equal(const Options& o, std::ostream& out) {
  require_n(o);
  const auto texts = word_texts(o, 2);
  const auto a = parse_word(texts[0], o.n, mode_of(o));
  const auto b = parse_word(texts[1], o.n, mode_of(o));
  bool equal = false;
  json report;
  std::string text;
  if (a.mode == WordMode::rn) {
    const auto x = eval_word(a.rn, o.n), y = eval_word(b.rn, o.n);
    equal = x == y;
    report = {{"equal", equal}, {"left", to_json(x)}, {"right", to_json(y)}};
    text = "left:  " + to_text(x) + "\nright: " + to_text(y) + "\n";
  } else {
    const auto x = phi_word(a.braid, o.n), y = phi_word(b.braid, o.n);
    equal = x == y;
    report = {{"equal", equal}, {"left", to_json(x)}, {"right", to_json(y)}};
    text = "left:\n" + to_text(x) + "right:\n" + to_text(y);
  }
  emit(o, out, o.format == "text" ? std::string(equal ? "equal\n" : "not equal\n") + text : dump(report));
  return equal ? kExitOk : kExitNotEqual;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  require_n(o);
  const auto w = parse_word(word_texts(o, 1)[0], o.n, WordMode::rn);
  const auto a = eval_word(w.rn, o.n);
  const auto nf = normal_form(a);
  emit(o, out, o.format == "text" ? to_string(nf) + "\n"
                                  : dump({{"word", to_string(nf)}, {"element", to_json(a)}}));
  return kExitOk;
}

void require_guard(int n) {
  if (n > kEnumerationGuard)
    throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                            std::to_string(kEnumerationGuard));
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_n(o);
  require_guard(o.n);
  std::string text;
  for (const auto& a : enumerate_rn(o.n))
    text += (o.format == "text" ? to_text(a) : to_json(a).dump()) + "\n";
  emit(o, out, text);
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o);
  require_guard(o.n);
  const auto listed = static_cast<std::uint64_t>(enumerate_rn(o.n).size());
  const auto a = rn_order_stirling(o.n), b = rn_order_multinomial(o.n);
  if (listed != a || listed != b) {
    err << "error: count mismatch: enumeration " << listed << ", Stirling form " << a << ", multinomial form " << b
        << "\n";
    return kExitPrecondition;
  }
  emit(o, out, o.format == "text" ? std::to_string(listed) + "\n"
                                  : dump({{"n", o.n}, {"count", listed}, {"stirling", a}, {"multinomial", b}}));
  return kExitOk;
}

int cmd_limit(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("limit needs --input <matrix file>");
  const auto p = poly_matrix_from_json(read_json_file(o.input));
  const auto terms = family_limit(p);
  if (o.format == "text") {
    std::string text;
    for (std::size_t k = 0; k < terms.size(); ++k)
      text += "term " + std::to_string(k) + " (domain dim " + std::to_string(terms[k].domain.dim()) + ")\n" +
              to_text(terms[k].restricted);
    emit(o, out, text);
  } else {
    json list = json::array();
    for (const auto& t : terms) list.push_back(to_json(t));
    emit(o, out, dump({{"terms", list}, {"tuple", to_json(limit_tuple(terms))}}));
  }
  return kExitOk;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  if (!o.words.empty()) {
    require_n(o);
    const auto w = parse_word(o.words.at(0), o.n, WordMode::braid);
    emit(o, out, word_diagram_svg(w.braid, o.n));
  } else if (!o.input.empty()) {
    emit(o, out, layered_diagram_svg(layered_aut_from_json(read_json_file(o.input))));
  } else {
    throw UsageError("diagram needs a word or --input <layered automorphism file>");
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const auto r = run_selftest(o.suite, o.n, o.seed);
  if (o.format == "text") {
    std::ostringstream s;
    for (const auto& c : r.checks)
      s << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    s << r.suite << ": " << (r.passed() ? "pass" : "fail") << "\n";
    emit(o, out, s.str());
  } else {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    emit(o, out, dump({{"suite", r.suite}, {"n", r.n}, {"passed", r.passed()}, {"checks", checks}}));
  }
  return r.passed() ? kExitOk : kExitNotEqual;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the PM-monoid R_n and the braid PM-monoid", "pmtool"};
  app.require_subcommand(1);
  Options o;
  const auto common = [&o](CLI::App* sub, bool with_mode) {
    sub->add_option("-n", o.n, "number of strands");
    if (with_mode)
      sub->add_option("--mode", o.mode, "word syntax")->check(CLI::IsMember({"rn", "braid"}));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "write the result to a file");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a word");
  common(eval, true);
  eval->add_option("word", o.words, "word, e.g. \"s1 e[2] s2\"");
  eval->add_option("--input", o.input, "file holding the word");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  common(equal, true);
  equal->add_option("words", o.words, "two words")->expected(0, 2);
  equal->add_option("--input", o.input, "file holding the words, one per line");

  auto* nf = app.add_subcommand("normal-form", "normal form of an rn word");
  common(nf, false);
  nf->add_option("word", o.words, "word");
  nf->add_option("--input", o.input, "file holding the word");

  auto* enumerate = app.add_subcommand("enumerate", "list R_n as JSON lines");
  common(enumerate, false);
  auto* count = app.add_subcommand("count", "order of R_n, cross-checked");
  common(count, false);

  auto* limit = app.add_subcommand("limit", "limit of a polynomial matrix family");
  common(limit, false);
  limit->add_option("--input", o.input, "polynomial matrix JSON file");

  auto* diagram = app.add_subcommand("diagram", "SVG diagram of a braid word or layered automorphism");
  common(diagram, false);
  diagram->add_option("word", o.words, "braid word");
  diagram->add_option("--input", o.input, "layered automorphism JSON file");

  auto* selftest = app.add_subcommand("selftest", "run a self-test battery");
  common(selftest, false);
  std::string suites;
  for (const auto& s : selftest_suites()) suites += (suites.empty() ? "" : ", ") + s;
  selftest->add_option("suite", o.suite, "one of: " + suites)->required();
  selftest->add_option("--seed", o.seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (equal->parsed()) return cmd_equal(o, out);
    if (nf->parsed()) return cmd_normal_form(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (count->parsed()) return cmd_count(o, out, err);
    if (limit->parsed()) return cmd_limit(o, out);
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "error: precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pmm
