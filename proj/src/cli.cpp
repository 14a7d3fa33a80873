#include "weyldiag/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "weyldiag/diagrams.hpp"
#include "weyldiag/errors.hpp"
#include "weyldiag/grassmann.hpp"
#include "weyldiag/root_system.hpp"
#include "weyldiag/verify.hpp"
#include "weyldiag/words.hpp"

namespace weyldiag::cli {

namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::string type;
  int rank = 0;
  std::string word;
  std::string diagram;
  std::string u;
  std::string grid;
  int p = 0;
  int m = 0;
  std::string output;
  std::string format = "text";
  bool render = false;
  bool timing = false;
  bool order_experiment = false;
};

json root_json(const Root& r) { return json(std::vector<int>(r.coeffs().begin(), r.coeffs().end())); }

json element_json(const RootSystem& sys, const WeylElement& w) {
  json matrix = json::array();
  for (int r = 0; r < w.rank(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < w.rank(); ++c) row.push_back(w.at(r, c));
    matrix.push_back(row);
  }
  const Word word = reduced_word(sys, w);
  return json{{"word", std::vector<int>(word.letters().begin(), word.letters().end())},
              {"length", w.length()},
              {"matrix", matrix}};
}

std::string braces(const Diagram& d) { return "{" + d.to_string() + "}"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string permutation_text(const std::vector<int>& perm) {
  return "[" + format_int_list(perm) + "]";
}

class Session {
 public:
  explicit Session(const Flags& flags) : flags_(flags) {}

  bool json_format() const { return flags_.format == "json"; }

  std::shared_ptr<const RootSystem> system() {
    if (!system_) {
      if (flags_.type.empty() || flags_.rank == 0) throw ParseError("--type and --rank are required");
      system_ = RootSystem::build({CartanType::parse_family(flags_.type), flags_.rank});
      if (system_->is_degenerate_alias()) warnings_ << "warning: D3 is accepted as an alias of A3\n";
    }
    return system_;
  }

  Word word() {
    if (flags_.word.empty() && !word_given_) throw ParseError("--word is required");
    const std::vector<int> letters = parse_int_list(flags_.word);
    return Word(system(), letters);
  }

  GridShape shape() {
    if (flags_.p == 0 || flags_.m == 0) throw ParseError("--p and --m are required");
    GridShape s{flags_.p, flags_.m};
    s.validate();
    if (s.degenerate()) warnings_ << "warning: grid shape with p = 1 or m = 1 is outside 1 < p < n\n";
    return s;
  }

  SweepOptions sweep() const { return SweepOptions{sweep_cap_from_env(), 0}; }

  void mark_word_given() { word_given_ = true; }
  std::string warnings() const { return warnings_.str(); }

 private:
  const Flags& flags_;
  std::shared_ptr<const RootSystem> system_;
  std::ostringstream warnings_;
  bool word_given_ = false;
};

// Each handler writes its main output and returns an exit code.
using Handler = std::function<int(Session&, const Flags&, std::ostream&)>;

int cmd_roots(Session& s, const Flags&, std::ostream& out) {
  auto sys = s.system();
  if (s.json_format()) {
    json roots = json::array();
    for (const Root& r : sys->positive_roots()) roots.push_back(root_json(r));
    out << json{{"type", sys->type().name()}, {"positive_roots", roots}, {"count", sys->positive_count()}}.dump(2)
        << '\n';
  } else {
    for (const Root& r : sys->positive_roots()) out << r.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_betas(Session& s, const Flags&, std::ostream& out) {
  const Word word = s.word();
  const RootSequence seq = root_sequence(word);
  if (s.json_format()) {
    json betas = json::array();
    for (const Root& b : seq.betas) betas.push_back(root_json(b));
    out << json{{"word", std::vector<int>(word.letters().begin(), word.letters().end())}, {"betas", betas}}.dump(2)
        << '\n';
  } else {
    for (const Root& b : seq.betas) out << b.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_positive(Session& s, const Flags& f, std::ostream& out) {
  const Word word = s.word();
  require_reduced(word);
  const Diagram d = parse_diagram(word, f.diagram);
  const bool positive = is_positive(d);
  if (s.json_format()) {
    out << json{{"word", std::vector<int>(word.letters().begin(), word.letters().end())},
                {"diagram", std::vector<int>(d.positions().begin(), d.positions().end())},
                {"positive", positive}}
               .dump(2)
        << '\n';
  } else {
    out << bool_text(positive) << '\n';
  }
  return kSuccess;
}

int cmd_zeta(Session& s, const Flags& f, std::ostream& out) {
  const Word word = s.word();
  require_reduced(word);
  const Diagram d = parse_diagram(word, f.diagram);
  const RootSystem& sys = word.system();
  const WeylElement u = zeta(d);
  const WeylElement v = zeta_prime(d);
  if (s.json_format()) {
    out << json{{"diagram", std::vector<int>(d.positions().begin(), d.positions().end())},
                {"positive", is_positive(d)},
                {"zeta", element_json(sys, u)},
                {"zeta_prime", element_json(sys, v)}}
               .dump(2)
        << '\n';
  } else {
    out << "zeta = (" << reduced_word(sys, u).to_string() << ")\n"
        << "zeta_prime = (" << reduced_word(sys, v).to_string() << ")\n"
        << "length = " << u.length() << '\n'
        << "matrix = " << u.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_diagram_for(Session& s, const Flags& f, std::ostream& out) {
  const Word word = s.word();
  const Word u_word(s.system(), parse_int_list(f.u));
  const auto d = diagram_for(word, u_word.element());
  if (s.json_format()) {
    json j{{"word", std::vector<int>(word.letters().begin(), word.letters().end())},
           {"u", element_json(word.system(), u_word.element())}};
    j["diagram"] = d ? json(std::vector<int>(d->positions().begin(), d->positions().end())) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << (d ? braces(*d) : std::string("absent")) << '\n';
  }
  return kSuccess;
}

int cmd_enumerate(Session& s, const Flags&, std::ostream& out) {
  const Word word = s.word();
  const std::vector<Diagram> diagrams = enumerate_positive(word, s.sweep());
  if (s.json_format()) {
    json list = json::array();
    for (const Diagram& d : diagrams) list.push_back(std::vector<int>(d.positions().begin(), d.positions().end()));
    out << json{{"word", std::vector<int>(word.letters().begin(), word.letters().end())},
                {"positive_diagrams", list},
                {"count", diagrams.size()}}
               .dump(2)
        << '\n';
  } else {
    for (const Diagram& d : diagrams) out << braces(d) << '\n';
    out << "count = " << diagrams.size() << '\n';
  }
  return kSuccess;
}

int cmd_interval(Session& s, const Flags&, std::ostream& out) {
  const Word word = s.word();
  const std::vector<WeylElement> interval = bruhat_interval(word, s.sweep());
  const RootSystem& sys = word.system();
  if (s.json_format()) {
    json elements = json::array();
    for (const WeylElement& u : interval) {
      const Word w = reduced_word(sys, u);
      elements.push_back(std::vector<int>(w.letters().begin(), w.letters().end()));
    }
    out << json{{"word", std::vector<int>(word.letters().begin(), word.letters().end())},
                {"interval_count", interval.size()},
                {"elements", elements}}
               .dump(2)
        << '\n';
  } else {
    out << "interval_count = " << interval.size() << '\n';
    for (const WeylElement& u : interval) out << "(" << reduced_word(sys, u).to_string() << ")\n";
  }
  return kSuccess;
}

int cmd_verify(Session& s, const Flags& f, std::ostream& out) {
  const Word word = s.word();
  VerifyOptions options;
  options.sweep = s.sweep();
  options.order_experiment = f.order_experiment;
  const VerificationReport report = verify_word(word, options);
  if (s.json_format()) {
    out << to_json(report, f.timing) << '\n';
  } else {
    out << "type = " << report.type << '\n'
        << "word = " << format_int_list(report.word) << '\n'
        << "total_diagrams = " << report.total_diagrams << '\n'
        << "positive_count = " << report.positive_count << '\n'
        << "interval_count = " << report.interval_count << '\n'
        << "bijection_ok = " << bool_text(report.bijection_ok) << '\n'
        << "roundtrip_ok = " << bool_text(report.roundtrip_ok) << '\n'
        << "dual_test_ok = " << bool_text(report.dual_test_ok) << '\n'
        << "subexpression_ok = " << bool_text(report.subexpression_ok) << '\n'
        << "prefix_ok = " << bool_text(report.prefix_ok) << '\n'
        << "reduced_expression_ok = " << bool_text(report.reduced_expression_ok) << '\n'
        << "obstruction_ok = " << bool_text(report.obstruction_ok) << '\n';
    if (report.oracle_ok) out << "oracle_ok = " << bool_text(*report.oracle_ok) << '\n';
    if (report.le_equivalence_ok) out << "le_equivalence_ok = " << bool_text(*report.le_equivalence_ok) << '\n';
    if (report.order_experiment) {
      out << "order_experiment.inclusion_pairs = " << report.order_experiment->inclusion_pairs << '\n'
          << "order_experiment.bruhat_preserved = " << report.order_experiment->bruhat_preserved << '\n';
    }
    for (const std::string& w : report.warnings) out << "warning = " << w << '\n';
    if (f.timing) out << "elapsed_ms = " << report.elapsed.count() << '\n';
  }
  return report.all_ok() ? kSuccess : kVerificationFailed;
}

int cmd_census(Session& s, const Flags&, std::ostream& out) {
  const CensusResult census = longest_word_census(s.system()->type(), s.sweep());
  if (s.json_format()) {
    out << to_json(census) << '\n';
  } else {
    out << "type = " << census.type.name() << '\n'
        << "word = " << format_int_list(census.word) << '\n'
        << "positive_roots = " << census.positive_roots << '\n'
        << "positive_count = " << census.positive_count << '\n'
        << "group_order = " << census.group_order << '\n';
  }
  return census.ok() ? kSuccess : kVerificationFailed;
}

int cmd_qm(Session& s, const Flags&, std::ostream& out) {
  const GridShape shape = s.shape();
  const Word word = quantum_matrices_word(shape);
  if (s.json_format()) {
    out << json{{"p", shape.p},
                {"m", shape.m},
                {"type", word.system().type().name()},
                {"word", std::vector<int>(word.letters().begin(), word.letters().end())},
                {"degenerate", shape.degenerate()}}
               .dump(2)
        << '\n';
  } else {
    out << word.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_le(Session& s, const Flags& f, std::ostream& out) {
  const GridDiagram grid = parse_grid(s.shape(), f.grid);
  const bool le = is_le_diagram(grid);
  if (s.json_format()) {
    out << json{{"p", grid.shape().p}, {"m", grid.shape().m}, {"grid", grid.to_string()}, {"le", le}}.dump(2) << '\n';
  } else {
    out << bool_text(le) << '\n';
  }
  return kSuccess;
}

int cmd_pipedream(Session& s, const Flags& f, std::ostream& out) {
  const GridDiagram grid = parse_grid(s.shape(), f.grid);
  const std::vector<int> perm = pipe_dream_permutation(grid);
  if (s.json_format()) {
    json j{{"p", grid.shape().p}, {"m", grid.shape().m}, {"grid", grid.to_string()}, {"permutation", perm}};
    if (f.render) j["render"] = render_wiring(grid);
    out << j.dump(2) << '\n';
  } else {
    out << permutation_text(perm) << '\n';
    if (f.render) out << render_wiring(grid);
  }
  return kSuccess;
}

constexpr const char* kDescription =
    "Positive (admissible) diagrams over reduced words of Weyl group elements.\n"
    "Words and diagrams are comma-separated and 1-based: --word 1,2,1 --diagram 2,3.\n"
    "Grids are space-separated row,col pairs, rows counted from the top: --grid \"2,2 1,2\".\n"
    "Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 precondition error,\n"
    "4 sweep size cap exceeded (override with WEYLDIAG_SWEEP_CAP, default 24).";

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{kDescription, "weyldiag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Flags flags;

  struct Spec {
    const char* name;
    const char* help;
    bool needs_system;
    bool needs_word;
    Handler handler;
  };
  const std::vector<Spec> specs = {
      {"roots", "Print the positive roots", true, false, cmd_roots},
      {"betas", "Root sequence of a reduced word", true, true, cmd_betas},
      {"positive", "Test one diagram for positivity (admissibility)", true, true, cmd_positive},
      {"zeta", "Map a diagram through zeta and zeta'", true, true, cmd_zeta},
      {"diagram-for", "Positive diagram whose zeta image is the product of --u", true, true, cmd_diagram_for},
      {"enumerate", "All positive diagrams of a word", true, true, cmd_enumerate},
      {"interval", "Bruhat interval below the word's element", true, true, cmd_interval},
      {"verify", "Full verification report; exit 0 iff every check passes", true, true, cmd_verify},
      {"census", "Positive diagrams over a reduced word of w0 against |W|", true, false, cmd_census},
      {"qm", "Quantum-matrices word of a p x m grid", false, false, cmd_qm},
      {"le", "Le condition of a grid filling", false, false, cmd_le},
      {"pipedream", "Permutation of a grid filling (and ASCII wiring with --render)", false, false, cmd_pipedream},
  };

  std::vector<std::pair<CLI::App*, const Spec*>> commands;
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", flags.output, "Write the output to this file instead of stdout");
    if (spec.needs_system) {
      sub->add_option("--type", flags.type, "Cartan family A..G")->required();
      sub->add_option("--rank", flags.rank, "Rank")->required();
    }
    if (spec.needs_word) sub->add_option("--word", flags.word, "Reduced word, e.g. 1,2,1")->required();
    const std::string name = spec.name;
    if (name == "positive" || name == "zeta") {
      sub->add_option("--diagram", flags.diagram, "Diagram positions, e.g. 2,3 (empty for none)")->required();
    }
    if (name == "diagram-for") sub->add_option("--u", flags.u, "Word whose product is u")->required();
    if (name == "qm" || name == "le" || name == "pipedream") {
      sub->add_option("--p", flags.p, "Rows")->required();
      sub->add_option("--m", flags.m, "Columns")->required();
    }
    if (name == "le" || name == "pipedream") sub->add_option("--grid", flags.grid, "Filled boxes, e.g. \"2,2 1,2\"");
    if (name == "pipedream") sub->add_flag("--render", flags.render, "Also print the ASCII wiring diagram");
    if (name == "verify") {
      sub->add_flag("--timing", flags.timing, "Report elapsed time");
      sub->add_flag("--order-experiment", flags.order_experiment,
                    "Report how often diagram inclusion matches Bruhat order (statistics only)");
    }
    commands.emplace_back(sub, &spec);
  }

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err);
    if (result.exit_code != 0) result.exit_code = kUsageError;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  Session session(flags);
  try {
    for (const auto& [sub, spec] : commands) {
      if (!sub->parsed()) continue;
      if (spec->needs_word) session.mark_word_given();
      std::ostringstream body;
      result.exit_code = spec->handler(session, flags, body);
      if (flags.output.empty()) {
        out << body.str();
      } else {
        std::ofstream file(flags.output, std::ios::binary);
        if (!file) throw ParseError("cannot open output file '" + flags.output + "'");
        file << body.str();
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kUsageError;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kSizeCapError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kPreconditionError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    result.exit_code = kVerificationFailed;
  }
  result.out = out.str();
  result.err = session.warnings() + err.str();
  return result;
}

}  // namespace weyldiag::cli
