#include "harmonic_codes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "harmonic_codes/analyzer.hpp"
#include "harmonic_codes/codes.hpp"
#include "harmonic_codes/embedding.hpp"
#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"
#include "harmonic_codes/io.hpp"
#include "harmonic_codes/lattice.hpp"

namespace harmonic_codes::cli {

namespace {

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::string values;
  int d = -1;
  int k = -1;
  int k_max = -1;
  std::uint64_t n = 0;
  std::uint64_t dim = 0;
  int t_max = 5;
  unsigned threads = 0;
  std::string at;
  bool certify = false;
  bool json = false;
  bool exact = false;
  bool as_float = false;
};

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HARMONIC_CODES_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::istream& input(const std::string& path) {
    if (path == "-") return in_;
    file_in_.open(path);
    if (!file_in_) throw IoError("cannot open '" + path + "' for reading");
    return file_in_;
  }

  std::ostream& output(const std::string& path) {
    if (path == "-") return out_;
    file_out_.open(path);
    if (!file_out_) throw IoError("cannot open '" + path + "' for writing");
    return file_out_;
  }

  void finish() {
    if (file_out_.is_open()) {
      file_out_.close();
      if (!file_out_) throw IoError("write failed");
    }
    if (!out_) throw IoError("write failed");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ifstream file_in_;
  std::ofstream file_out_;
};

void print_report(std::ostream& os, const CodeReport& r, bool json) {
  if (json) {
    os << to_json(r).dump(2) << '\n';
  } else {
    os << to_text(r);
  }
}

GramView load_gram(std::istream& is, std::uint64_t& dim, unsigned threads) {
  auto loaded = io::read_code_or_gram(is);
  if (auto* code = std::get_if<LatticeCode>(&loaded)) {
    const EmbeddedCode built = build_code(*code, threads);
    if (dim == 0) dim = built.harmonic_dim();
    return gram_from_embedded(built);
  }
  Matrix& m = std::get<Matrix>(loaded);
  if (dim == 0) dim = rank(m);
  return GramView::detect_antipodes(std::move(m));
}

int cmd_roots(const Options& o, Streams& s) {
  io::write_code(s.output(o.out), generate_e8_roots());
  return kOk;
}

int cmd_dim(const Options& o, Streams& s) {
  s.output(o.out) << harmonic_dimension(o.d, o.k) << '\n';
  return kOk;
}

int cmd_gegenbauer(const Options& o, Streams& s) {
  const GegenbauerPoly p = gegenbauer(o.d, o.k);
  std::ostream& os = s.output(o.out);
  if (!o.at.empty()) {
    os << evaluate(p, Rational::parse(o.at)) << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? " " : "") << p.coeffs()[i];
  os << '\n';
  return kOk;
}

int cmd_build(const Options& o, Streams& s) {
  const LatticeCode code = io::read_code(s.input(o.in));
  const EmbeddedCode built = build_code(code, resolve_threads(o.threads));
  std::ostream& os = s.output(o.out);
  if (!o.certify) {
    io::write_gram(os, built.gram());
    return kOk;
  }
  const CodeReport r = certify(built, o.t_max);
  print_report(os, r, o.json);
  return r.all_pass() ? kOk : kDomainFailure;
}

int cmd_certify(const Options& o, Streams& s) {
  std::uint64_t dim = o.dim;
  const GramView g = load_gram(s.input(o.in), dim, resolve_threads(o.threads));
  const CodeReport r = certify(g, dim, o.t_max);
  print_report(s.output(o.out), r, o.json);
  return r.all_pass() ? kOk : kDomainFailure;
}

int cmd_bound(const Options& o, Streams& s) {
  const QuadraticBound b = quadratic_bound(o.n, o.dim);
  std::ostream& os = s.output(o.out);
  if (o.json) {
    nlohmann::ordered_json j;
    j["bound"] = b.str();
    j["radicand"] = b.radicand.str();
    j["exact"] = b.exact();
    os << j.dump(2) << '\n';
  } else {
    os << b.str() << '\n';
  }
  return kOk;
}

int cmd_design(const Options& o, Streams& s) {
  std::uint64_t dim = o.dim;
  const GramView g = load_gram(s.input(o.in), dim, resolve_threads(o.threads));
  const int d_sphere = o.d >= 0 ? o.d : static_cast<int>(dim) - 1;
  const DesignResult r = design_strength(g, d_sphere, o.t_max);
  std::ostream& os = s.output(o.out);
  nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
  for (const auto& v : r.residuals) residuals.push_back(v.str());
  if (o.json) {
    nlohmann::ordered_json j;
    j["design_strength"] = r.strength;
    j["residuals"] = residuals;
    os << j.dump(2) << '\n';
  } else {
    os << "design_strength: " << r.strength << '\n' << "residuals: " << residuals.dump() << '\n';
  }
  return kOk;
}

int cmd_scan(const Options& o, Streams& s) {
  const std::set<Rational> values = io::read_values(s.input(o.values.empty() ? o.in : o.values));
  const int k_max = o.k_max >= 0 ? o.k_max : o.k;
  nlohmann::ordered_json j;
  nlohmann::ordered_json scans = nlohmann::ordered_json::array();
  for (const auto& r : constant_modulus_scan(values, o.d, o.k, k_max)) scans.push_back(to_json(r));
  j["scan"] = scans;
  if (o.n > 0) j["candidate"] = to_json(candidate_parameters(values, o.d, o.k, o.n));
  std::ostream& os = s.output(o.out);
  if (o.json) {
    os << j.dump(2) << '\n';
  } else {
    for (const auto& r : scans) {
      for (const auto& [key, value] : r.items()) {
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      os << '\n';
    }
    if (j.contains("candidate")) {
      os << "candidate:\n";
      for (const auto& [key, value] : j["candidate"].items()) {
        os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  }
  return kOk;
}

int cmd_export(const Options& o, Streams& s) {
  auto loaded = io::read_code_or_gram(s.input(o.in));
  std::ostream& os = s.output(o.out);
  if (auto* m = std::get_if<Matrix>(&loaded)) {
    if (o.as_float) throw DomainError("export --float needs a code file, not a Gram");
    GramView g(*m);  // validates
    io::write_gram(os, g.entries());
    return kOk;
  }
  const EmbeddedCode built = build_code(std::get<LatticeCode>(loaded), resolve_threads(o.threads));
  if (o.as_float) {
    io::write_float_code(os, built);
  } else {
    io::write_gram(os, built.gram());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antipodal spherical codes from lattice roots via degree-2 harmonic embeddings", "harmonic-codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for the Gram fill (env HARMONIC_CODES_THREADS)")
      ->check(CLI::PositiveNumber);

  using Handler = std::function<int(const Options&, Streams&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in,-i", o.in, "Input file ('-' for stdin)"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "Output file ('-' for stdout)"); };

  auto* roots = add("roots", "Write the 240 E8 roots as a code file", cmd_roots);
  add_out(roots);

  auto* dim = add("dim", "Dimension of degree-k spherical harmonics on S^d", cmd_dim);
  dim->add_option("-d", o.d, "Sphere dimension")->required()->check(CLI::PositiveNumber);
  dim->add_option("-k", o.k, "Degree")->required()->check(CLI::NonNegativeNumber);
  add_out(dim);

  auto* geg = add("gegenbauer", "Normalized Gegenbauer coefficients (constant term first)", cmd_gegenbauer);
  geg->add_option("-d", o.d, "Sphere dimension")->required()->check(CLI::PositiveNumber);
  geg->add_option("-k", o.k, "Degree")->required()->check(CLI::NonNegativeNumber);
  geg->add_option("--at", o.at, "Evaluate at this rational instead");
  add_out(geg);

  auto* build = add("build", "Embed an antipodal code and write its exact Gram", cmd_build);
  add_in(build);
  add_out(build);
  build->add_flag("--certify", o.certify, "Print the certification report instead of the Gram");
  build->add_option("--t-max", o.t_max, "Highest design degree tested")->check(CLI::PositiveNumber);
  build->add_flag("--json", o.json, "JSON report");

  auto* cert = add("certify", "Certify a code file or exact Gram file", cmd_certify);
  add_in(cert);
  add_out(cert);
  cert->add_option("--dim", o.dim, "Ambient dimension (default: exact rank of the Gram)");
  cert->add_option("--t-max", o.t_max, "Highest design degree tested")->check(CLI::PositiveNumber);
  cert->add_flag("--json", o.json, "JSON report");

  auto* bound = add("bound", "Lower bound on coherence of antipodal codes", cmd_bound);
  bound->add_option("-n", o.n, "Number of points")->required();
  bound->add_option("--dim", o.dim, "Ambient dimension")->required();
  bound->add_flag("--json", o.json, "JSON output");
  add_out(bound);

  auto* design = add("design", "Spherical design strength of a code or Gram", cmd_design);
  add_in(design);
  add_out(design);
  design->add_option("-d", o.d, "Sphere dimension (default: ambient dimension - 1)");
  design->add_option("--dim", o.dim, "Ambient dimension (default: exact rank of the Gram)");
  design->add_option("--t-max", o.t_max, "Highest degree tested")->check(CLI::PositiveNumber);
  design->add_flag("--json", o.json, "JSON output");

  auto* scan = add("scan", "Gegenbauer images of an inner-product value set", cmd_scan);
  scan->add_option("--values", o.values, "Values file, one p/q per line");
  add_in(scan);
  add_out(scan);
  scan->add_option("-d", o.d, "Sphere dimension")->required();
  scan->add_option("-k", o.k, "Degree (first of the range)")->required();
  scan->add_option("--k-max", o.k_max, "Last degree of the range");
  scan->add_option("-n", o.n, "Point count for candidate parameters");
  scan->add_flag("--json", o.json, "JSON output");

  auto* exp = add("export", "Export the embedded code as exact Gram or float coordinates", cmd_export);
  add_in(exp);
  add_out(exp);
  auto* exact_flag = exp->add_flag("--exact", o.exact, "Exact Gram (default)");
  exp->add_flag("--float", o.as_float, "Unit coordinates in R^dim")->excludes(exact_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  Streams streams(in, out);
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        const int status = handler(o, streams);
        streams.finish();
        return status;
      }
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  err << app.help();
  return kUsage;
}

}  // namespace harmonic_codes::cli
