#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weyldiag/cli.hpp"
#include "weyldiag/diagrams.hpp"
#include "weyldiag/errors.hpp"
#include "weyldiag/grassmann.hpp"
#include "weyldiag/verify.hpp"
#include "weyldiag/words.hpp"

namespace py = pybind11;
using namespace weyldiag;

namespace {

std::shared_ptr<const RootSystem> system_of(const std::string& family, int rank) {
  return RootSystem::build({CartanType::parse_family(family), rank});
}

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

std::vector<std::vector<int>> matrix_rows(const WeylElement& w) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(w.rank()));
  for (int r = 0; r < w.rank(); ++r)
    for (int c = 0; c < w.rank(); ++c) rows[static_cast<std::size_t>(r)].push_back(w.at(r, c));
  return rows;
}

Word make_word(const std::string& family, int rank, const std::vector<int>& letters) {
  return Word(system_of(family, rank), letters);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positive diagrams over reduced words in finite Weyl groups";

  auto base = py::register_exception<Error>(m, "WeylDiagError");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SizeCapError>(m, "SizeCapError", base.ptr());

  m.def(
      "positive_roots",
      [](const std::string& family, int rank) {
        const auto sys = system_of(family, rank);
        std::vector<std::vector<int>> out;
        for (const Root& r : sys->positive_roots()) out.push_back(to_vec(r.coeffs()));
        return out;
      },
      py::arg("family"), py::arg("rank"));

  m.def(
      "group_order", [](const std::string& family, int rank) { return system_of(family, rank)->group_order(); },
      py::arg("family"), py::arg("rank"));

  m.def(
      "is_reduced",
      [](const std::string& family, int rank, const std::vector<int>& word) {
        return is_reduced(make_word(family, rank, word));
      },
      py::arg("family"), py::arg("rank"), py::arg("word"));

  m.def(
      "root_sequence",
      [](const std::string& family, int rank, const std::vector<int>& word) {
        std::vector<std::vector<int>> out;
        for (const Root& b : root_sequence(make_word(family, rank, word)).betas) out.push_back(to_vec(b.coeffs()));
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("word"));

  m.def(
      "extend_to_w0",
      [](const std::string& family, int rank, const std::vector<int>& word) {
        return to_vec(extend_to_w0(make_word(family, rank, word)).letters());
      },
      py::arg("family"), py::arg("rank"), py::arg("word") = std::vector<int>{});

  m.def(
      "is_positive",
      [](const std::string& family, int rank, const std::vector<int>& word, const std::vector<int>& diagram) {
        return is_positive(Diagram(make_word(family, rank, word), diagram));
      },
      py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("diagram"));

  m.def(
      "zeta",
      [](const std::string& family, int rank, const std::vector<int>& word, const std::vector<int>& diagram) {
        return matrix_rows(zeta(Diagram(make_word(family, rank, word), diagram)));
      },
      py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("diagram"),
      "Action matrix of the product over the diagram; column c is the image of the (c+1)-th simple root.");

  m.def(
      "diagram_for",
      [](const std::string& family, int rank, const std::vector<int>& word,
         const std::vector<int>& u_word) -> std::optional<std::vector<int>> {
        const Word w = make_word(family, rank, word);
        const Word u(w.system_ptr(), u_word);
        const auto d = diagram_for(w, u.element());
        if (!d) return std::nullopt;
        return to_vec(d->positions());
      },
      py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("u_word"));

  m.def(
      "enumerate_positive",
      [](const std::string& family, int rank, const std::vector<int>& word) {
        std::vector<std::vector<int>> out;
        for (const Diagram& d : enumerate_positive(make_word(family, rank, word), {sweep_cap_from_env(), 0}))
          out.push_back(to_vec(d.positions()));
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("word"));

  m.def(
      "interval_size",
      [](const std::string& family, int rank, const std::vector<int>& word) {
        return bruhat_interval(make_word(family, rank, word), {sweep_cap_from_env(), 0}).size();
      },
      py::arg("family"), py::arg("rank"), py::arg("word"));

  m.def(
      "verify_json",
      [](const std::string& family, int rank, const std::vector<int>& word, bool order_experiment) {
        VerifyOptions opts;
        opts.sweep.cap = sweep_cap_from_env();
        opts.order_experiment = order_experiment;
        return to_json(verify_word(make_word(family, rank, word), opts));
      },
      py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("order_experiment") = false);

  m.def(
      "census",
      [](const std::string& family, int rank) {
        const CensusResult c = longest_word_census({CartanType::parse_family(family), rank}, {sweep_cap_from_env(), 0});
        return py::make_tuple(c.positive_roots, c.positive_count, c.group_order);
      },
      py::arg("family"), py::arg("rank"), "(positive root count, positive diagram count, group order)");

  m.def(
      "quantum_matrices_word",
      [](int p, int cols) { return to_vec(quantum_matrices_word({p, cols}).letters()); }, py::arg("p"), py::arg("m"));

  m.def(
      "is_le_diagram",
      [](int p, int cols, const std::vector<std::pair<int, int>>& boxes) {
        return is_le_diagram(GridDiagram({p, cols}, boxes));
      },
      py::arg("p"), py::arg("m"), py::arg("boxes"));

  m.def(
      "pipe_dream_permutation",
      [](int p, int cols, const std::vector<std::pair<int, int>>& boxes) {
        return pipe_dream_permutation(GridDiagram({p, cols}, boxes));
      },
      py::arg("p"), py::arg("m"), py::arg("boxes"));

  m.def(
      "render_wiring",
      [](int p, int cols, const std::vector<std::pair<int, int>>& boxes) {
        return render_wiring(GridDiagram({p, cols}, boxes));
      },
      py::arg("p"), py::arg("m"), py::arg("boxes"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"weyldiag"};
        full.insert(full.end(), args.begin(), args.end());
        const cli::Result r = cli::run(full);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
