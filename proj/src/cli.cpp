#include "aq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "aq/dump.hpp"
#include "aq/errors.hpp"
#include "aq/friedrichs.hpp"
#include "aq/oracles.hpp"
#include "aq/verify.hpp"

namespace aq {

namespace {

struct UsageError : InputError {
  using InputError::InputError;
};

struct Options {
  int order = 0;
  int degree = 0;
  int stages = -1;
  int cap = 8;
  std::string out;
  std::string gauge = "analytic";
  std::string perturbation;
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dump load_dump(const std::string& path) {
  try {
    return parse_dump(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

void check_cap(const char* what, int value, int cap) {
  if (value > cap)
    throw UsageError(std::string(what) + " " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --max-order-cap)");
}

int require_positive(const char* flag, int value) {
  if (value < 1) throw UsageError(std::string(flag) + " must be a positive integer");
  return value;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

// Lines "GEN : TERM" or "GEN : sym TERM", terms written at hbar = 1. A sym
// term stands for the coefficient times the sum of its monomial's orderings.
BasisChange parse_perturbation(const std::string& text, const BasicSetPresentation& s) {
  BasisChange p;
  p.corrections.assign(s.size(), SeriesElement(s.trunc));
  const Algebra a(s.commutators);
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(no, static_cast<int>(b) + 1, "expected 'GEN : term'");
    std::string gen = line.substr(b, colon - b);
    gen.erase(gen.find_last_not_of(" \t") + 1);
    const auto it = std::find(s.generators.begin(), s.generators.end(), gen);
    if (it == s.generators.end()) throw ParseError(no, static_cast<int>(b) + 1, "unknown generator '" + gen + "'");
    const auto i = static_cast<std::size_t>(it - s.generators.begin());
    std::string rest = line.substr(colon + 1);
    const auto rb = rest.find_first_not_of(" \t");
    const int col = static_cast<int>(colon + 2 + (rb == std::string::npos ? 0 : rb));
    const bool sym = rest.compare(rb == std::string::npos ? 0 : rb, 4, "sym ") == 0;
    if (sym) rest = rest.substr(rb + 4);
    std::pair<TermKey, Rational> term;
    try {
      term = parse_term(rest, s.generators);
    } catch (const InputError& e) {
      throw ParseError(no, col, e.what());
    }
    const auto& [k, c] = term;
    if (k.h) throw ParseError(no, col, "write perturbations at hbar = 1");
    SeriesElement one(Truncation::z_order(s.trunc.z_max));
    one.add(k, c);
    SeriesElement graded = to_graded(one, s.trunc);
    if (sym) {
      const auto [gk, gc] = *graded.terms().begin();
      const SeriesElement sym_nu = symmetrized(gk.m, a);
      SeriesElement expanded(s.trunc);
      for (const auto& [sk, sc] : sym_nu.terms())
        expanded.add(TermKey{sk.z + gk.z, sk.h + gk.h, sk.m}, sc * gc);
      graded = expanded;
    }
    p.corrections[i] += graded;
  }
  return p;
}

RunResult ok_or_report(std::string text, bool clean) { return {clean ? 0 : 1, std::move(text), {}}; }

RunResult cmd_validate(const Options& o) {
  const auto b = load_bialgebra(o.inputs.at(0));
  const auto report = validate(b);
  if (report.empty()) return {0, "ok " + b.name + "\n", {}};
  return ok_or_report(join_lines(report), false);
}

RunResult cmd_quantize(const Options& o) {
  const int n = require_positive("--order", o.order);
  check_cap("order", n, o.cap);
  const auto b = load_bialgebra(o.inputs.at(0));
  return {0, render_dump(to_dump(quantize(b, n, parse_gauge(o.gauge)))), {}};
}

RunResult cmd_oracle(const Options& o) {
  const int n = require_positive("--order", o.order);
  check_cap("order", n, o.cap);
  return {0, render_dump(to_dump(builtin_reference(o.inputs.at(0), n))), {}};
}

RunResult cmd_verify(const Options& o) {
  const Dump d = load_dump(o.inputs.at(0));
  if (d.degree >= 0) {
    const auto defects = presentation_defects(to_presentation(d));
    return ok_or_report(join_lines(defects), defects.empty());
  }
  const auto report = verify_hopf(to_result(d));
  return ok_or_report(report.render(), report.empty());
}

RunResult cmd_diff(const Options& o) {
  if (o.inputs.size() != 2) throw UsageError("diff takes two dumps");
  const auto lines = diff_dumps(load_dump(o.inputs[0]), load_dump(o.inputs[1]));
  return ok_or_report(join_lines(lines), lines.empty());
}

BasicSetPresentation primitivize_input(const Options& o) {
  const auto& in = o.inputs.at(0);
  if (!is_builtin_bialgebra(in)) {
    std::ifstream probe(in);
    std::string first;
    probe >> first;
    if (first == "bialgebra") return to_presentation(load_dump(in));
  }
  const auto b = load_bialgebra(in);
  if (o.order > 0) {
    check_cap("order", o.order, o.cap);
    const int degree = o.degree > 0 ? o.degree : o.order + 2;
    check_cap("degree", degree, o.cap);
    return graded_presentation(quantize(b, o.order, parse_gauge(o.gauge)), degree);
  }
  const int degree = require_positive("--degree", o.degree);
  check_cap("degree", degree, o.cap);
  return classical_presentation(b, degree);
}

RunResult cmd_primitivize(const Options& o) {
  BasicSetPresentation s = primitivize_input(o);
  if (!o.perturbation.empty()) s = perturb_basis(s, parse_perturbation(read_file(o.perturbation), s));
  const int stages = o.stages >= 0 ? o.stages : s.trunc.degree_max - 1;
  const auto r = primitivize(s, stages);
  std::string text;
  std::istringstream change(render_basis_change(r.composite, s.generators));
  for (std::string line; std::getline(change, line);) text += "# basis " + line + "\n";
  text += render_dump(to_dump(r.presentation));
  return {0, text, {}};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact analytic quantization of Lie bialgebras", "aq"};
  app.require_subcommand(1);
  Options o;
  const auto common = [&](CLI::App* c, bool order, bool degree) {
    if (order) c->add_option("--order", o.order, "truncation order N in z");
    if (degree) c->add_option("--degree", o.degree, "graded degree bound D");
    c->add_option("--out", o.out, "write the report to this file instead of standard output");
    c->add_option("--max-order-cap", o.cap, "hard cap on N and D")->capture_default_str();
  };
  auto* validate_cmd = app.add_subcommand("validate", "check the Lie bialgebra axioms");
  validate_cmd->add_option("bialgebra", o.inputs, "builtin name or file")->required()->expected(1);
  common(validate_cmd, false, false);
  auto* quantize_cmd = app.add_subcommand("quantize", "compute the deformed coproducts and brackets");
  quantize_cmd->add_option("bialgebra", o.inputs, "builtin name or file")->required()->expected(1);
  quantize_cmd->add_option("--gauge", o.gauge, "analytic or min-norm")->capture_default_str();
  common(quantize_cmd, true, false);
  auto* verify_cmd = app.add_subcommand("verify", "recompute all Hopf residuals of a dump");
  verify_cmd->add_option("dump", o.inputs, "dump file")->required()->expected(1);
  common(verify_cmd, false, false);
  auto* prim_cmd = app.add_subcommand("primitivize", "recover the primitive basis of a basic set");
  prim_cmd->add_option("input", o.inputs, "graded dump, builtin name or bialgebra file")->required()->expected(1);
  prim_cmd->add_option("--perturbation", o.perturbation, "file of 'GEN : [sym] term' lines applied first");
  prim_cmd->add_option("--stages", o.stages, "classical stages (default D-1)");
  prim_cmd->add_option("--gauge", o.gauge, "gauge of the quantized input")->capture_default_str();
  common(prim_cmd, true, true);
  auto* oracle_cmd = app.add_subcommand("oracle", "closed-form reference dump");
  oracle_cmd->add_option("name", o.inputs, "su2 or u3")->required()->expected(1);
  common(oracle_cmd, true, false);
  auto* diff_cmd = app.add_subcommand("diff", "exact term-level differences");
  diff_cmd->add_option("dumps", o.inputs, "two dump files")->required()->expected(2);
  common(diff_cmd, false, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  RunResult r;
  try {
    if (*validate_cmd) r = cmd_validate(o);
    else if (*quantize_cmd) r = cmd_quantize(o);
    else if (*verify_cmd) r = cmd_verify(o);
    else if (*prim_cmd) r = cmd_primitivize(o);
    else if (*oracle_cmd) r = cmd_oracle(o);
    else r = cmd_diff(o);
  } catch (const ParseError& e) {
    return {2, {}, "parse error: " + std::string(e.what()) + "\n"};
  } catch (const ObstructionError& e) {
    return {3, {}, "obstruction at order " + std::to_string(e.order()) + " (" + e.generator() + "): " + e.what() + "\n"};
  } catch (const NonPrimitivizableError& e) {
    return {3, {}, "not primitivizable at stage " + std::to_string(e.stage()) + ": " + e.what() + "\n"};
  } catch (const InputError& e) {
    return {2, {}, "error: " + std::string(e.what()) + "\n"};
  }

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) return {2, {}, "error: cannot write '" + o.out + "'\n"};
    f << r.out;
    r.out.clear();
  }
  return r;
}

}  // namespace aq
