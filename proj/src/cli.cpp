#include "nhq/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>

#include "nhq/error.hpp"
#include "nhq/expr.hpp"
#include "nhq/format.hpp"
#include "nhq/suites.hpp"

namespace nhq {

namespace {

struct Options {
  std::string quiver;
  std::string dim;
  std::string r;
  std::string lambda;
  bool json = false;
  std::uint64_t seed = 7;
  std::size_t cases = 20;
  std::string compare;
  std::vector<std::string> operands;
};

QuiverPtr open_quiver(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    for (const char* name : {"jordan", "a2", "a3p"}) {
      if (source == name) return builtin_quiver(source);
    }
  }
  return load_quiver(source);
}

/// "v=2,w=1" into one entry per vertex; unnamed vertices keep `fill`.
template <class T, class Convert>
std::vector<T> vertex_map(const Quiver& q, const std::string& text, const std::string& flag, T fill, Convert convert) {
  std::vector<T> out(q.num_vertices(), fill);
  std::vector<bool> seen(q.num_vertices(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected vertex=value", flag + " '" + item + "'");
    auto v = q.find_vertex(item.substr(0, eq));
    if (!v) throw ParseError("unknown vertex '" + item.substr(0, eq) + "'", flag);
    if (seen[*v]) throw ParseError("vertex '" + item.substr(0, eq) + "' given twice", flag);
    seen[*v] = true;
    out[*v] = convert(item.substr(eq + 1));
    start = end + 1;
  }
  return out;
}

std::vector<std::size_t> parse_dims(const Quiver& q, const std::string& text) {
  std::vector<bool> seen(q.num_vertices(), false);
  auto dims = vertex_map<std::size_t>(q, text, "--dim", 0, [](const std::string& s) {
    std::size_t used = 0;
    long value = -1;
    try {
      value = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw ParseError("not an integer '" + s + "'", "--dim");
    if (value <= 0) throw DimensionError("dimensions must be positive");
    return static_cast<std::size_t>(value);
  });
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (dims[v] == 0) throw DimensionError("--dim has no entry for vertex '" + q.vertex_name(v) + "'");
  }
  return dims;
}

std::vector<Rational> parse_rationals(const Quiver& q, const std::string& text, const std::string& flag) {
  if (text.empty()) return {};
  return vertex_map<Rational>(q, text, flag, Rational(0), [&](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), flag);
    }
  });
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o.quiver.empty()) {
      if (!o.dim.empty() || !o.r.empty() || !o.lambda.empty()) throw Error("--dim, --r and --lambda need a quiver (-q)");
      return;
    }
    q_ = open_quiver(o.quiver);
    if (!o.dim.empty()) r_ = make_repspace(q_, parse_dims(*q_, o.dim));
    params_ = ReductionParameters{parse_rationals(*q_, o.r, "--r"), parse_rationals(*q_, o.lambda, "--lambda")};
  }

  Value operand(std::size_t k) const {
    if (k >= o_.operands.size()) throw Error("missing operand " + std::to_string(k + 1));
    try {
      return parse_expression(o_.operands[k], q_, r_);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), "operand " + std::to_string(k + 1));
    }
  }

  const RepSpacePtr& space() const {
    if (!r_) throw DimensionError("this command needs a dimension vector (--dim)");
    return r_;
  }

  void arity(std::size_t n) const {
    if (o_.operands.size() != n) {
      throw Error("expected " + std::to_string(n) + " operand(s), got " + std::to_string(o_.operands.size()));
    }
  }

  int emit(const VerificationReport& rep) {
    if (o_.json) out_ << rep.json().dump(2) << '\n';
    else out_ << rep.text();
    return rep.status == Status::failed ? exit_failed : exit_ok;
  }

  int run(const std::string& verb) {
    if (verb == "bracket") {
      arity(2);
      out_ << format(necklace_bracket(as_necklace(operand(0), q_), as_necklace(operand(1), q_))) << '\n';
    } else if (verb == "dbracket") {
      arity(2);
      out_ << format(double_bracket(as_path(operand(0), q_), as_path(operand(1), q_))) << '\n';
    } else if (verb == "qmul") {
      arity(2);
      out_ << format(qpa_mul(as_qpa(operand(0), q_), as_qpa(operand(1), q_))) << '\n';
    } else if (verb == "qcomm") {
      arity(2);
      out_ << format(qpa_comm(as_qpa(operand(0), q_), as_qpa(operand(1), q_))) << '\n';
    } else if (verb == "trace") {
      arity(1);
      auto x = as_necklace(operand(0), q_);
      out_ << format(trace_classical(space(), x)) << '\n';
    } else if (verb == "qtrace") {
      arity(1);
      auto x = as_qpa(operand(0), q_);
      out_ << format(trace_quantum(space(), x)) << '\n';
    } else if (verb == "moment") {
      if (o_.operands.empty()) {
        out_ << format(moment_map(q_, params_.lambda).element) << '\n';
      } else {
        arity(1);
        auto v = as_gl(operand(0), space());
        out_ << format(quantum_moment(v, params_.r)) << '\n';
      }
    } else if (verb == "solve-chi") {
      arity(0);
      return emit(solve_chi(space(), params_).report);
    } else if (verb == "kernel") {
      arity(0);
      auto k = kernel_constraint(space(), params_.lambda);
      if (!o_.compare.empty()) k.report.notes.push_back("reference: " + o_.compare);
      return emit(k.report);
    }
    return exit_ok;
  }

  int verify(const std::string& suite) {
    arity(0);
    SuiteConfig config;
    config.quiver = q_;
    if (r_) config.dims = r_->dims();
    config.cases = o_.cases;
    config.seed = o_.seed;
    config.r = params_.r;
    config.lambda = params_.lambda;
    return emit(run_suite(suite, config).report);
  }

 private:
  const Options& o_;
  std::ostream& out_;
  QuiverPtr q_;
  RepSpacePtr r_;
  ReductionParameters params_;
};

void common_options(CLI::App* sub, Options& o, bool needs_quiver) {
  auto* q = sub->add_option("-q,--quiver", o.quiver, "quiver file (or jordan, a2, a3p)");
  if (needs_quiver) q->required();
  sub->add_option("--dim", o.dim, "dimension vector v=k,...");
  sub->add_option("--r", o.r, "r parameters v=p/q,...");
  sub->add_option("--lambda", o.lambda, "moment map levels v=p/q,...");
  sub->add_flag("--json", o.json, "emit a JSON report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with necklace Lie algebras, quantum path algebras and traces", "nhq"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"bracket", "necklace bracket {X, Y}"},
      {"dbracket", "double bracket of two paths"},
      {"qmul", "product X*Y in the quantum path algebra"},
      {"qcomm", "commutator [X, Y] in the quantum path algebra"},
      {"trace", "classical trace of a necklace element"},
      {"qtrace", "quantum trace of a quantum path algebra element"},
      {"moment", "moment map element, or the quantum moment of E(v)_{p,q}"},
      {"solve-chi", "solve for the character of the quantum reduction"},
      {"kernel", "constraints on r from ker tau"},
  };
  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    common_options(sub, o, true);
    sub->add_option("operands", o.operands, "expressions");
    if (name == "kernel") sub->add_option("--compare", o.compare, "reference constraint to print alongside");
    subs.emplace_back(sub, name);
  }
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  common_options(verify, o, false);
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--cases", o.cases, "number of cases");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "nhq: " << e.what() << '\n';
    return exit_other;
  }

  try {
    if (verify->parsed()) return Session(o, out).verify(suite);
    for (const auto& [sub, name] : subs) {
      if (sub->parsed()) return Session(o, out).run(name);
    }
  } catch (const ParseError& e) {
    err << "nhq: parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const DimensionError& e) {
    err << "nhq: dimension error: " << e.what() << '\n';
    return exit_dimension;
  } catch (const std::exception& e) {
    err << "nhq: " << e.what() << '\n';
    return exit_other;
  }
  return exit_other;
}

}  // namespace nhq
