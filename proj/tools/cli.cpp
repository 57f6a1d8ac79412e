#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtopo/border_pcm.hpp"
#include "dtopo/classifier.hpp"
#include "dtopo/error.hpp"
#include "dtopo/generators.hpp"
#include "dtopo/simplicial.hpp"
#include "dtopo/surface.hpp"
#include "json.hpp"

namespace dtopo::cli {
namespace {

using json = nlohmann::ordered_json;

struct Input {
  std::string source;
  std::string format;
  Poset poset;
  /// Set for facet files and for Hasse files that describe a simplicial complex.
  std::optional<SimplicialComplex> complex;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

// Hasse files start with a `rank` or `f` record; anything else is a facet list.
std::string detect_format(const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    return first == "rank" || first == "f" ? "hasse" : "facets";
  }
  return "facets";
}

Input load(const std::string& path, const std::string& format, std::istream& in) {
  const std::string text = read_all(path, in);
  Input input;
  input.source = path;
  input.format = format == "auto" ? detect_format(text) : format;
  std::istringstream ss(text);
  if (input.format == "facets") {
    input.complex = read_facets(ss);
    input.poset = face_poset(*input.complex);
  } else {
    input.poset = read_hasse(ss);
    if (is_simplicial(input.poset)) input.complex = from_face_poset(input.poset);
  }
  return input;
}

const SimplicialComplex& require_complex(const Input& input, const std::string& what) {
  if (!input.complex)
    throw DomainError(what + " needs a simplicial complex; the input poset is not simplicial");
  return *input.complex;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string text_bool(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "n/a";
}

json instance_json(const Input& input, const std::vector<std::size_t>& per_rank) {
  return {{"source", input.source},
          {"format", input.format},
          {"faces", input.poset.size()},
          {"rank", input.poset.rank()},
          {"faces_per_rank", per_rank}};
}

std::vector<std::size_t> faces_per_rank(const Poset& p) {
  std::vector<std::size_t> out(static_cast<std::size_t>(p.rank() + 1), 0);
  for (FaceId h = 0; h < p.size(); ++h) ++out[static_cast<std::size_t>(p.rank(h))];
  return out;
}

// --- classify -----------------------------------------------------------------

struct ClassifyOptions {
  std::string file = "-";
  std::string format = "auto";
  std::string mode = "fast";
  std::string dump_dir = std::filesystem::temp_directory_path().string();
  bool json = false;
};

Classification classify_input(const Input& input, const ClassifyOptions& o) {
  const auto rec = RecognizerOptions::from_environment();
  if (o.mode == "recursive")
    return input.complex ? classify_recursive(*input.complex, rec)
                         : classify_recursive(input.poset, rec);
  const SimplicialComplex& k = require_complex(input, "--mode " + o.mode);
  if (o.mode == "fast") return classify_fast(k, rec);
  return classify_both(k, rec, o.dump_dir);
}

void print_classification(std::ostream& out, const Input& input, const Classification& c) {
  out << "instance=" << input.source << '\n'
      << "format=" << input.format << '\n'
      << "rank=" << c.rank << '\n'
      << "faces_per_rank=";
  for (std::size_t i = 0; i < c.faces_per_rank.size(); ++i)
    out << (i ? " " : "") << c.faces_per_rank[i];
  out << '\n'
      << "path=" << to_string(c.path) << '\n'
      << "kind=" << to_string(c.kind()) << '\n'
      << "surface=" << text_bool(c.is_surface) << '\n'
      << "pcm=" << text_bool(c.is_pcm) << '\n'
      << "smooth_pcm=" << text_bool(c.is_smooth_pcm) << '\n'
      << "pseudomanifold=" << text_bool(c.is_pseudomanifold) << '\n'
      << "normal=" << text_bool(c.is_normal_pseudomanifold) << '\n'
      << "border_empty=" << text_bool(c.border_empty) << '\n'
      << "border_faces="
      << (c.border_face_count ? std::to_string(*c.border_face_count) : std::string("n/a")) << '\n'
      << "condition_c=" << text_bool(c.condition_c) << '\n'
      << "fast_fell_back=" << (c.fast_fell_back ? "true" : "false") << '\n';
  if (c.path == EvaluationPath::both) out << "agreement=true\n";
  out << "time_ms=" << std::fixed << std::setprecision(3) << c.total_milliseconds() << '\n';
}

json classification_json(const Classification& c) {
  json timings = json::array();
  for (const Timing& t : c.timings) timings.push_back({{"check", t.check}, {"ms", t.milliseconds}});
  return {{"classification",
           {{"kind", to_string(c.kind())},
            {"path", to_string(c.path)},
            {"rank", c.rank},
            {"surface", optional_bool(c.is_surface)},
            {"pcm", optional_bool(c.is_pcm)},
            {"smooth_pcm", optional_bool(c.is_smooth_pcm)},
            {"pseudomanifold", optional_bool(c.is_pseudomanifold)},
            {"normal_pseudomanifold", optional_bool(c.is_normal_pseudomanifold)},
            {"border_empty", optional_bool(c.border_empty)},
            {"border_faces",
             c.border_face_count ? json(*c.border_face_count) : json(nullptr)},
            {"condition_c", optional_bool(c.condition_c)},
            {"fast_fell_back", c.fast_fell_back},
            {"recursive_evaluations", c.recursive_evaluations}}},
          {"timings", timings},
          {"total_ms", c.total_milliseconds()}};
}

int run_classify(const ClassifyOptions& o, std::istream& in, std::ostream& out, json& report) {
  const Input input = load(o.file, o.format, in);
  const Classification c = classify_input(input, o);
  report["instance"] = instance_json(input, c.faces_per_rank);
  report.update(classification_json(c));
  if (!o.json) print_classification(out, input, c);
  return ok;
}

// --- border -------------------------------------------------------------------

struct BorderOptions {
  std::string file = "-";
  std::string format = "auto";
  bool json = false;
};

json labels_json(const Poset& p, const FaceSet& faces) {
  json out = json::array();
  for (FaceId h : faces) {
    std::string label(p.label(h));
    out.push_back(label.empty() ? json(h) : json(label));
  }
  return out;
}

int run_border(const BorderOptions& o, std::istream& in, std::ostream& out, json& report) {
  const Input input = load(o.file, o.format, in);
  Recognizer rec(input.poset, RecognizerOptions::from_environment());
  const BorderDecomposition b = rec.border(input.poset.all());
  report["instance"] = instance_json(input, faces_per_rank(input.poset));

  json components = json::array();
  for (const BorderComponent& c : b.components)
    components.push_back({{"faces", labels_json(input.poset, c.faces)},
                          {"surface", c.verdict.is_surface},
                          {"rank", rec.rank(c.faces)}});
  report["border"] = {{"rank", rec.rank(b.border)},
                      {"faces", labels_json(input.poset, b.border)},
                      {"components", components}};
  if (o.json) return ok;

  write_hasse(out, SuborderView(input.poset, b.border).materialize());
  out << "# border of a rank-" << b.rank << " order: " << b.border.size() << " of "
      << input.poset.size() << " faces, " << b.components.size() << " component(s)\n";
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const BorderComponent& c = b.components[i];
    out << "# component " << i << ": " << c.faces.size() << " faces, ";
    if (c.verdict.is_surface)
      out << *c.verdict.rank << "-surface\n";
    else
      out << "not a surface (rank " << rec.rank(c.faces) << ")\n";
  }
  return ok;
}

// --- check --------------------------------------------------------------------

struct CheckOptions {
  std::string file = "-";
  std::string format = "auto";
  std::string property;
  bool json = false;
};

int run_check(const CheckOptions& o, std::istream& in, std::ostream& out, json& report) {
  const Input input = load(o.file, o.format, in);
  const auto rec = RecognizerOptions::from_environment();
  const SuborderView all(input.poset);
  bool result = false;
  if (o.property == "surface") {
    result = is_k_surface(all, rec).is_surface;
  } else if (o.property == "coherent") {
    result = is_coherent(all, rec);
  } else if (o.property == "pcm") {
    result = is_pcm(all, rec).holds;
  } else if (o.property == "smooth") {
    result = is_smooth_pcm(all, rec).holds;
  } else if (o.property == "condition-c") {
    result = check_condition_c(all, rec);
  } else if (o.property == "pseudomanifold") {
    result = is_pseudomanifold(require_complex(input, "--pseudomanifold"));
  } else {
    result = is_normal_pseudomanifold(require_complex(input, "--normal"));
  }
  report["instance"] = instance_json(input, faces_per_rank(input.poset));
  report["check"] = {{"property", o.property}, {"result", result}};
  if (!o.json)
    out << o.property << '=' << (result ? "true" : "false") << '\n'
        << "rank=" << input.poset.rank() << '\n';
  return ok;
}

// --- gen ----------------------------------------------------------------------

struct GenOptions {
  std::string name;
  std::vector<std::int64_t> params;
  std::string output = "-";
  std::string format = "auto";
};

int run_gen(const GenOptions& o, std::ostream& out, json& report) {
  const Instance inst = generate({o.name, o.params});
  std::ostringstream text;
  std::string format = o.format;
  if (const auto* k = std::get_if<SimplicialComplex>(&inst)) {
    if (format == "auto") format = "facets";
    if (format == "facets")
      write_facets(text, *k);
    else
      write_hasse(text, face_poset(*k));
  } else {
    if (format == "facets") throw DomainError("generator '" + o.name + "' yields a poset; use --format hasse");
    format = "hasse";
    write_hasse(text, std::get<Poset>(inst));
  }
  report["generator"] = {{"name", o.name}, {"params", o.params}, {"format", format}};
  if (o.output == "-") {
    out << text.str();
  } else {
    std::ofstream file(o.output);
    if (!file) throw DomainError("cannot write '" + o.output + "'");
    file << text.str();
  }
  return ok;
}

// --- bench --------------------------------------------------------------------

struct BenchOptions {
  std::size_t random = 50;
  int max_sphere = 4;
  std::string dump_dir = std::filesystem::temp_directory_path().string();
  bool json = false;
};

int run_bench(const BenchOptions& o, std::ostream& out, json& report) {
  std::vector<NamedInstance> corpus;
  for (NamedInstance& inst : generator_corpus())
    if (inst.name.rfind("sphere ", 0) != 0) corpus.push_back(std::move(inst));
  for (int n = 0; n <= o.max_sphere; ++n) corpus.push_back({"sphere " + std::to_string(n), sphere(n)});
  for (NamedInstance& inst : random_corpus(o.random)) corpus.push_back(std::move(inst));

  CrossCheckOptions cc;
  cc.recognizer = RecognizerOptions::from_environment();
  cc.dump_dir = o.dump_dir;
  cc.stop_on_disagreement = false;
  const CrossCheckReport r = cross_check(corpus, cc);

  json rows = json::array();
  for (const CrossCheckRow& row : r.rows) {
    rows.push_back({{"instance", row.name},
                    {"faces", row.faces},
                    {"rank", row.rank},
                    {"kind", to_string(row.kind)},
                    {"fast_ms", row.fast_ms},
                    {"recursive_ms", row.recursive_ms},
                    {"speedup", row.fast_ms > 0 ? row.recursive_ms / row.fast_ms : 0.0},
                    {"fast_fell_back", row.fast_fell_back},
                    {"agree", row.agree}});
    if (!row.agree) rows.back()["mismatch"] = row.mismatch;
  }
  report["bench"] = {{"instances", r.rows.size()},
                     {"disagreements", r.disagreements},
                     {"surface", r.count(Kind::surface)},
                     {"pcm", r.count(Kind::pcm)},
                     {"neither", r.count(Kind::neither)},
                     {"empty", r.count(Kind::empty_order)},
                     {"rows", rows}};

  if (!o.json) {
    out << std::left << std::setw(28) << "instance" << std::right << std::setw(7) << "faces"
        << std::setw(12) << "fast ms" << std::setw(14) << "recursive ms" << std::setw(10)
        << "speedup" << "  " << std::left << std::setw(8) << "kind" << "agree\n";
    out << std::fixed << std::setprecision(3);
    for (const CrossCheckRow& row : r.rows) {
      const double speedup = row.fast_ms > 0 ? row.recursive_ms / row.fast_ms : 0.0;
      out << std::left << std::setw(28) << row.name << std::right << std::setw(7) << row.faces
          << std::setw(12) << row.fast_ms << std::setw(14) << row.recursive_ms << std::setw(9)
          << std::setprecision(2) << speedup << (row.fast_fell_back ? "*" : " ") << "  "
          << std::setprecision(3) << std::left << std::setw(8) << to_string(row.kind)
          << (row.agree ? "yes" : "NO: " + row.mismatch) << '\n';
    }
    out << "# * fast path fell back to the recursive definitions (rank < 2)\n"
        << "instances=" << r.rows.size() << " disagreements=" << r.disagreements
        << " surface=" << r.count(Kind::surface) << " pcm=" << r.count(Kind::pcm)
        << " neither=" << r.count(Kind::neither) << " empty=" << r.count(Kind::empty_order)
        << '\n';
  }
  return r.disagreements ? disagreement : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Recognizes discrete surfaces, PCMs and pseudomanifolds.", "dtopo"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"auto", "facets", "hasse"};

  ClassifyOptions classify_opts;
  auto* classify = app.add_subcommand("classify", "Classify a complex or poset");
  classify->add_option("file", classify_opts.file, "Facet or Hasse file, '-' for stdin");
  classify->add_option("--mode", classify_opts.mode, "Evaluation path")
      ->check(CLI::IsMember({"fast", "recursive", "both"}));
  classify->add_option("--format", classify_opts.format)->check(CLI::IsMember(formats));
  classify->add_option("--dump-dir", classify_opts.dump_dir,
                       "Where --mode both writes a disagreeing instance");
  classify->add_flag("--json", classify_opts.json);

  BorderOptions border_opts;
  auto* border = app.add_subcommand("border", "Print the border as a Hasse diagram");
  border->add_option("file", border_opts.file, "Facet or Hasse file, '-' for stdin");
  border->add_option("--format", border_opts.format)->check(CLI::IsMember(formats));
  border->add_flag("--json", border_opts.json);

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Run a single recognizer");
  check->add_option("file", check_opts.file, "Facet or Hasse file, '-' for stdin");
  check->add_option("--format", check_opts.format)->check(CLI::IsMember(formats));
  check->add_flag("--json", check_opts.json);
  auto* props = check->add_option_group("property");
  for (const char* p :
       {"surface", "coherent", "pcm", "smooth", "condition-c", "pseudomanifold", "normal"}) {
    props->add_flag_callback(std::string("--") + p, [&check_opts, p] { check_opts.property = p; });
  }
  props->require_option(1);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("name", gen_opts.name, "Generator name")->required();
  gen->add_option("params", gen_opts.params, "Integer parameters");
  gen->add_option("-o,--output", gen_opts.output, "Output file, '-' for stdout");
  gen->add_option("--format", gen_opts.format)->check(CLI::IsMember(formats));
  gen->footer("Generators:\n" + generator_usage());

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time fast vs recursive classification");
  bench->add_option("--random", bench_opts.random, "Number of random instances");
  bench->add_option("--max-sphere", bench_opts.max_sphere, "Largest sphere dimension")
      ->check(CLI::Range(0, 6));
  bench->add_option("--dump-dir", bench_opts.dump_dir);
  bench->add_flag("--json", bench_opts.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return domain_error;
  }

  json report;
  report["command"] = args;
  bool as_json = false;
  int status = ok;
  try {
    if (classify->parsed()) {
      as_json = classify_opts.json;
      status = run_classify(classify_opts, in, out, report);
    } else if (border->parsed()) {
      as_json = border_opts.json;
      status = run_border(border_opts, in, out, report);
    } else if (check->parsed()) {
      as_json = check_opts.json;
      status = run_check(check_opts, in, out, report);
    } else if (gen->parsed()) {
      status = run_gen(gen_opts, out, report);
    } else {
      as_json = bench_opts.json;
      status = run_bench(bench_opts, out, report);
    }
  } catch (const DisagreementError& e) {
    err << "error: " << e.what() << '\n';
    report["error"] = e.what();
    report["dump"] = e.dump_path().string();
    status = disagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    report["error"] = e.what();
    status = domain_error;
  }
  if (as_json) {
    report["exit_status"] = status;
    out << report.dump(2) << '\n';
  }
  return status;
}

}  // namespace dtopo::cli
