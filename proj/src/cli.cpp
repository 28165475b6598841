#include "sysgraph/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "sysgraph/bounds.hpp"
#include "sysgraph/colored_graph.hpp"
#include "sysgraph/constructions.hpp"
#include "sysgraph/io.hpp"
#include "sysgraph/isoperimetry.hpp"
#include "sysgraph/simplicial.hpp"
#include "sysgraph/spectral.hpp"
#include "sysgraph/verifiers.hpp"

namespace sysgraph::cli {

using ojson = nlohmann::ordered_json;

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("SYSGRAPH_THREADS")) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 1;
}

namespace {

// Shortest round-trip decimal form, identical across runs.
std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), end};
}

// Reproducibility record embedded in every report. Thread count and wall
// time are left out so that reports are byte-identical across runs and
// across --threads settings; timing goes to stderr instead.
ojson manifest(const std::string& subcommand, ojson parameters, const std::vector<std::string>& inputs) {
  ojson m;
  m["tool"] = "sysgraph";
  m["version"] = kToolVersion;
  m["subcommand"] = subcommand;
  m["inputs"] = inputs;
  m["parameters"] = std::move(parameters);
  return m;
}

void emit(const std::string& output_path, const std::string& text, std::ostream& out) {
  if (output_path.empty() || output_path == "-") {
    out << text;
  } else {
    io::write_file(output_path, text);
  }
}

ojson edge_json(const ColoredEdge& e) { return ojson::array({e.u, e.v, e.color}); }

ojson witness_json(const Witness& w) {
  ojson j;
  j["kind"] = to_string(w.kind);
  j["color"] = w.color;
  j["depth"] = w.depth;
  j["edges"] = ojson::array();
  for (const auto& e : w.edges) j["edges"].push_back(edge_json(e));
  j["component_ids"] = w.component_ids;
  if (w.kind == Witness::Kind::ParallelEdgePair) j["multiplicity"] = w.multiplicity;
  return j;
}

Property parse_property(const std::string& name) {
  if (name == "pseudo-cube") return Property::PseudoCube;
  if (name == "dual-systolic") return Property::DualSystolic;
  if (name == "weak-pseudo-cube") return Property::WeakPseudoCube;
  return Property::WeaklyDualSystolic;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int dim = 0;
  std::string output;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  const auto g = build_family(a.family == "cube" ? Family::BooleanCube : Family::CliqueProduct, a.dim);
  emit(a.output, io::graph_to_json(g), out);
  return kOk;
}

struct VerifyArgs {
  std::string property;
  std::string mode = "literal";
  std::string input;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const auto g = io::graph_from_json(io::read_file(a.input));
  const auto property = parse_property(a.property);
  const auto mode = a.mode == "weak" ? WeakMode::FullyWeak : WeakMode::PaperLiteral;
  const auto report = verify(g, property, mode);

  ojson j;
  j["property"] = to_string(report.property);
  if (property == Property::WeakPseudoCube) j["mode"] = a.mode;
  j["dimension"] = g.dimension();
  j["num_vertices"] = g.num_vertices();
  j["verdict"] = report.verdict;
  j["witness"] = report.witness ? witness_json(*report.witness) : ojson(nullptr);
  std::vector<std::uint64_t> per_depth;
  for (const auto& t : report.recursion_trace) {
    if (per_depth.size() <= static_cast<std::size_t>(t.depth)) per_depth.resize(t.depth + 1, 0);
    ++per_depth[t.depth];
  }
  j["trace_components_per_depth"] = per_depth;
  ojson params;
  params["property"] = a.property;
  params["mode"] = a.mode;
  j["manifest"] = manifest("verify", params, {a.input});
  out << j.dump(2) << '\n';
  return report.verdict ? kOk : kPropertyFails;
}

struct ProfileArgs {
  std::string input;
  bool exact = false;
  bool heuristic = false;
  std::uint64_t max_size = 0;
  bool complements = false;
  std::vector<std::uint64_t> sizes;
  unsigned trials = 16;
  std::uint64_t seed = 0;
  std::string output;
};

int do_profile(const ProfileArgs& a, unsigned threads, std::ostream& out, std::ostream& err) {
  if (a.exact == a.heuristic) {
    err << "profile: choose exactly one of --exact or --heuristic\n";
    return kInvalidInput;
  }
  const auto g = io::graph_from_json(io::read_file(a.input));
  ProfileReport report;
  ojson params;
  if (a.exact) {
    if (a.max_size == 0) {
      err << "profile: --exact needs --max-size\n";
      return kInvalidInput;
    }
    report = exact_profile(g, {a.max_size, a.complements, threads});
    params["method"] = "exact";
    params["max_size"] = a.max_size;
    params["complements"] = a.complements;
  } else {
    if (a.sizes.empty()) {
      err << "profile: --heuristic needs --sizes\n";
      return kInvalidInput;
    }
    report = heuristic_profile(g, a.sizes, a.trials, a.seed);
    params["method"] = "heuristic";
    params["sizes"] = a.sizes;
    params["trials"] = a.trials;
    params["seed"] = a.seed;
  }
  const auto checks = check_profile_against_bounds(report);

  std::string csv = "# manifest: " + manifest("profile", params, {a.input}).dump() + "\n";
  csv += "s,min_expansion_num,min_expansion_den,method,bound_pseudo,bound_dualsys,pass_pseudo,"
         "pass_dualsys,witness\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    const auto& c = checks[i];
    csv += std::to_string(row.size) + ',' + std::to_string(row.min_expansion.num()) + ',' +
           std::to_string(row.min_expansion.den()) + ',' + to_string(row.method) + ',' +
           format_double(c.bound_pseudo) + ',' + format_double(c.bound_dualsys) + ',' +
           (c.pass_pseudo ? "true" : "false") + ',' + (c.pass_dualsys ? "true" : "false") + ',';
    for (std::size_t k = 0; k < row.witness.size(); ++k) {
      if (k) csv += ';';
      csv += std::to_string(row.witness[k]);
    }
    csv += '\n';
  }
  emit(a.output, csv, out);
  return kOk;
}

struct BoundsArgs {
  int dim = 0;
  double size = 0.0;
  double log_size = 0.0;
  int table = bounds::kMaxEll;
};

int do_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  double log_s = a.log_size;
  if (log_s <= 0.0) {
    if (!(a.size > 1.0)) {
      err << "bounds: need --size > 1 or --log-size > 0\n";
      return kInvalidInput;
    }
    log_s = std::log2(a.size);
  }
  if (a.table < 1 || a.table > bounds::kMaxEll) {
    err << "bounds: --table must be in 1.." << bounds::kMaxEll << '\n';
    return kInvalidInput;
  }
  const double envelope = bounds::simplified_envelope_at_log(log_s);
  const double closed = bounds::closed_form_envelope_at_log(log_s);
  ojson params;
  params["dim"] = a.dim;
  params["log_size"] = log_s;
  params["table"] = a.table;

  std::string csv = "# manifest: " + manifest("bounds", params, {}).dump() + "\n";
  csv += "quantity,value\n";
  csv += "pseudo_cube_bound," + format_double(a.dim - log_s) + '\n';
  csv += "envelope," + format_double(envelope) + '\n';
  csv += "envelope_argmin_ell," + std::to_string(bounds::simplified_envelope_argmin_at_log(log_s)) + '\n';
  csv += "exact_envelope," + format_double(bounds::exact_envelope_at_log(log_s)) + '\n';
  csv += "closed_form," + format_double(closed) + '\n';
  csv += "dual_systolic_bound," + format_double(a.dim - std::min(envelope, closed)) + '\n';
  csv += "\nell,simplified_coefficient,simplified_value,exact_root,exact_coefficient,exact_value\n";
  const auto fam = bounds::g_ell_family(a.table);
  for (int ell = 1; ell <= a.table; ++ell) {
    const auto& simple = fam.simplified[ell - 1];
    const auto& exact = fam.exact[ell];
    csv += std::to_string(ell) + ',' + format_double(simple.c) + ',' +
           format_double(simple.c * std::pow(log_s, 1.0 / simple.ell)) + ',' +
           std::to_string(exact.ell) + ',' + format_double(exact.c) + ',' +
           format_double(exact.c * std::pow(log_s, 1.0 / exact.ell)) + '\n';
  }
  out << csv;
  return kOk;
}

struct SpectrumArgs {
  std::string input;
  double epsilon = 0.0;
  double tie_tolerance = kDefaultTieTolerance;
  std::string full_csv;
  std::string solver = "dense";
  bool theorem = false;
  int dim = 0;
  int k = 0;
};

int do_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const auto solver = a.solver == "inertia" ? SpectrumSolver::InertiaCount : SpectrumSolver::DenseFull;
  ojson j;
  ojson params;
  params["solver"] = a.solver;
  if (a.theorem) {
    if (a.dim == 0 || a.k == 0) {
      err << "spectrum: --verify-theorem6 needs --dim and --k\n";
      return kInvalidInput;
    }
    const auto r = verify_threshold_theorem(a.dim, a.k, solver);
    j["d"] = r.d;
    j["k"] = r.k;
    j["n"] = r.n;
    j["epsilon"] = r.epsilon;
    j["threshold_rank_strict"] = r.rank.strict;
    j["threshold_rank_tolerant"] = r.rank.tolerant;
    j["bound"] = r.bound;
    j["required"] = r.required;
    j["copy_count_inequality"] = r.size_inequality;
    j["verdict"] = r.verdict;
    params["dim"] = a.dim;
    params["k"] = a.k;
    j["manifest"] = manifest("spectrum", params, {});
    out << j.dump(2) << '\n';
    return r.verdict ? kOk : kPropertyFails;
  }
  if (a.input.empty() || !(a.epsilon > 0.0)) {
    err << "spectrum: need FILE and --epsilon\n";
    return kInvalidInput;
  }
  const auto g = io::graph_from_json(io::read_file(a.input));
  j["n"] = g.num_vertices();
  j["d"] = g.dimension();
  j["epsilon"] = a.epsilon;
  j["tie_tolerance"] = a.tie_tolerance;
  ThresholdRank rank;
  if (solver == SpectrumSolver::DenseFull || !a.full_csv.empty()) {
    const auto spectrum = full_spectrum(g);
    rank = threshold_rank(spectrum, a.epsilon, a.tie_tolerance);
    j["max_residual"] = spectrum.max_residual;
    if (!a.full_csv.empty()) {
      std::string csv = "eigenvalue\n";
      for (double lambda : spectrum.eigenvalues) csv += format_double(lambda) + '\n';
      io::write_file(a.full_csv, csv);
    }
  }
  if (solver == SpectrumSolver::InertiaCount) {
    rank = threshold_rank(g, a.epsilon, a.tie_tolerance, SpectrumSolver::InertiaCount);
  }
  j["threshold_rank_strict"] = rank.strict;
  j["threshold_rank_tolerant"] = rank.tolerant;
  params["epsilon"] = a.epsilon;
  params["tie_tolerance"] = a.tie_tolerance;
  j["manifest"] = manifest("spectrum", params, {a.input});
  out << j.dump(2) << '\n';
  return kOk;
}

struct ComplexArgs {
  std::string build;
  int dim = 0;
  std::string dual;
  std::string squares;
  bool alternating = false;
  std::string triangles;
  std::string validate;
  std::string output;
};

int do_complex(const ComplexArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = !a.build.empty() + !a.dual.empty() + !a.squares.empty() +
                    !a.triangles.empty() + !a.validate.empty();
  if (modes != 1) {
    err << "complex: choose exactly one of --build, --dual, --squares, --triangles, --validate\n";
    return kInvalidInput;
  }
  if (!a.build.empty()) {
    const auto c = a.build == "cards" ? cards_complex() : cube_complex(a.dim);
    emit(a.output, io::complex_to_json(c.raw()), out);
    return kOk;
  }
  if (!a.dual.empty()) {
    const auto c = ChromaticComplex::validate(io::complex_from_json(io::read_file(a.dual)));
    emit(a.output, io::graph_to_json(dual_graph(c)), out);
    return kOk;
  }
  if (!a.validate.empty()) {
    const auto c = ChromaticComplex::validate(io::complex_from_json(io::read_file(a.validate)));
    ojson j;
    j["valid"] = true;
    j["num_colors"] = c.num_colors();
    j["num_vertices"] = c.num_vertices();
    j["num_facets"] = c.num_facets();
    out << j.dump(2) << '\n';
    return kOk;
  }
  const std::string& input = a.squares.empty() ? a.triangles : a.squares;
  const auto c = ChromaticComplex::validate(io::complex_from_json(io::read_file(input)));
  const auto& raw = c.raw();
  ojson j;
  ojson params;
  ojson list = ojson::array();
  if (!a.squares.empty()) {
    for (const auto& sq : detect_empty_squares(
             raw, a.alternating ? SquareFilter::AlternatingColors : SquareFilter::Any)) {
      ojson ids = ojson::array();
      for (auto v : sq.cycle) ids.push_back(raw.vertices[v].id);
      list.push_back(ids);
    }
    j["empty_squares"] = list;
    params["alternating"] = a.alternating;
  } else {
    for (const auto& t : detect_empty_triangles(raw)) {
      ojson ids = ojson::array();
      for (auto v : t) ids.push_back(raw.vertices[v].id);
      list.push_back(ids);
    }
    j["empty_triangles"] = list;
  }
  j["count"] = list.size();
  j["manifest"] = manifest("complex", params, {input});
  emit(a.output, j.dump(2) + "\n", out);
  return kOk;
}

struct ExportArgs {
  std::string input;
  std::string format;
  std::string output;
};

int do_export(const ExportArgs& a, std::ostream& out) {
  const auto text = io::read_file(a.input);
  const auto kind = io::detect_format(text);
  std::string result;
  if (kind == io::kGraphFormat) {
    const auto g = io::graph_from_json(text);
    if (a.format == "dot") result = io::graph_to_dot(g);
    else if (a.format == "json") result = io::graph_to_json(g);
    else result = io::graph_to_csv_edges(g);
  } else if (kind == io::kComplexFormat) {
    const auto c = ChromaticComplex::validate(io::complex_from_json(text));
    if (a.format == "dot") result = io::complex_to_dot(c);
    else if (a.format == "json") result = io::complex_to_json(c.raw());
    else result = io::complex_to_csv_edges(c);
  } else {
    throw io::FormatError("unknown input format \"" + kind + "\"");
  }
  emit(a.output, result, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-colored regular graphs: constructions, structural verifiers, "
               "isoperimetric profiles, bounds and spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  unsigned threads_flag = 0;
  app.add_option("--threads", threads_flag, "Worker threads (falls back to SYSGRAPH_THREADS)");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Generate a graph family as pcg-1 JSON");
  construct->add_option("--family", construct_args.family)
      ->required()
      ->check(CLI::IsMember({"cube", "clique-product"}));
  construct->add_option("--dim", construct_args.dim)->required();
  construct->add_option("-o,--output", construct_args.output);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Decide a structural property");
  verify_cmd->add_option("--property", verify_args.property)
      ->required()
      ->check(CLI::IsMember({"pseudo-cube", "dual-systolic", "weak-pseudo-cube", "weakly-dual-systolic"}));
  verify_cmd->add_option("--mode", verify_args.mode)->check(CLI::IsMember({"literal", "weak"}));
  verify_cmd->add_option("file", verify_args.input)->required();

  ProfileArgs profile_args;
  auto* profile = app.add_subcommand("profile", "Isoperimetric profile (exact or heuristic)");
  profile->add_flag("--exact", profile_args.exact);
  profile->add_flag("--heuristic", profile_args.heuristic);
  profile->add_option("--max-size", profile_args.max_size);
  profile->add_flag("--complements", profile_args.complements);
  profile->add_option("--sizes", profile_args.sizes)->delimiter(',');
  profile->add_option("--trials", profile_args.trials);
  profile->add_option("--seed", profile_args.seed);
  profile->add_option("-o,--output", profile_args.output);
  profile->add_option("file", profile_args.input)->required();

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate isoperimetric lower bounds");
  bounds_cmd->add_option("--dim", bounds_args.dim)->required();
  bounds_cmd->add_option("--size", bounds_args.size);
  bounds_cmd->add_option("--log-size", bounds_args.log_size, "log2 of the set size");
  bounds_cmd->add_option("--table", bounds_args.table);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Normalized adjacency spectrum and threshold rank");
  spectrum->add_option("--epsilon", spectrum_args.epsilon);
  spectrum->add_option("--tie-tolerance", spectrum_args.tie_tolerance);
  spectrum->add_option("--full-csv", spectrum_args.full_csv);
  spectrum->add_option("--solver", spectrum_args.solver)->check(CLI::IsMember({"dense", "inertia"}));
  spectrum->add_flag("--verify-theorem6", spectrum_args.theorem);
  spectrum->add_option("--dim", spectrum_args.dim);
  spectrum->add_option("--k", spectrum_args.k);
  spectrum->add_option("file", spectrum_args.input);

  ComplexArgs complex_args;
  auto* complex_cmd = app.add_subcommand("complex", "Chromatic complexes and their dual graphs");
  complex_cmd->add_option("--build", complex_args.build)->check(CLI::IsMember({"cube", "cards"}));
  complex_cmd->add_option("--dim", complex_args.dim);
  complex_cmd->add_option("--dual", complex_args.dual);
  complex_cmd->add_option("--squares", complex_args.squares);
  complex_cmd->add_flag("--alternating", complex_args.alternating);
  complex_cmd->add_option("--triangles", complex_args.triangles);
  complex_cmd->add_option("--validate", complex_args.validate);
  complex_cmd->add_option("-o,--output", complex_args.output);

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Convert a graph or complex file");
  export_cmd->add_option("--format", export_args.format)
      ->required()
      ->check(CLI::IsMember({"dot", "json", "csv-edges"}));
  export_cmd->add_option("-o,--output", export_args.output);
  export_cmd->add_option("file", export_args.input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const unsigned threads = resolve_threads(threads_flag > 0 ? std::optional(threads_flag) : std::nullopt);
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string name;
  try {
    if (construct->parsed()) {
      name = "construct";
      code = do_construct(construct_args, out);
    } else if (verify_cmd->parsed()) {
      name = "verify";
      code = do_verify(verify_args, out);
    } else if (profile->parsed()) {
      name = "profile";
      code = do_profile(profile_args, threads, out, err);
    } else if (bounds_cmd->parsed()) {
      name = "bounds";
      code = do_bounds(bounds_args, out, err);
    } else if (spectrum->parsed()) {
      name = "spectrum";
      code = do_spectrum(spectrum_args, out, err);
    } else if (complex_cmd->parsed()) {
      name = "complex";
      code = do_complex(complex_args, out, err);
    } else if (export_cmd->parsed()) {
      name = "export";
      code = do_export(export_args, out);
    }
  } catch (const GraphError& e) {
    err << "invalid graph: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ComplexError& e) {
    err << "invalid complex: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    // Internal invariant failures are bugs, not bad input.
    if (dynamic_cast<const std::domain_error*>(&e) == nullptr &&
        dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
      err << "internal error: " << e.what() << '\n';
      return 3;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  err << "sysgraph " << name << ": " << format_double(std::round(elapsed.count())) << " ms\n";
  return code;
}

}  // namespace sysgraph::cli
