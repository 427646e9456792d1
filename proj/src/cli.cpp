#include "pascal/cli.hpp"

#include "pascal/format.hpp"
#include "pascal/fourier.hpp"
#include "pascal/spectral.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace pascal {

namespace {

// Exact value of a decimal literal ("-0.125", "3e-2"), or of "p/q".
BigRational parse_exact_number(const std::string& token) {
  if (token.find('/') != std::string::npos) return BigRational::parse(token);
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(token, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw std::invalid_argument("not a number: '" + token + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  exponent -= static_cast<long>(m[3].length());
  mpz_class value(digits.empty() ? "0" : digits, 10);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  BigRational out = exponent >= 0 ? BigRational(mpz_class(value * power)) : BigRational(value) / BigRational(power);
  return m[1] == "-" ? -out : out;
}

std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string word;
  while (in >> word) {
    std::stringstream parts(word);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (!piece.empty()) tokens.push_back(piece);
    }
  }
  return tokens;
}

// Writes `text` to the --output file when given, otherwise to `out`.
void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + output_path);
  file << text;
}

std::string summary_line(const IdentityReport& report) {
  const std::size_t failures = report.failure_count();
  std::ostringstream s;
  s << (failures == 0 ? "ALL PASSED" : "FAILED") << " (" << report.checks.size() << " checks, " << failures
    << " failures)\n";
  return s.str();
}

}  // namespace

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options) {
  if (options.n < 2) throw std::invalid_argument("benchmark: N must be >= 2");
  const ReferenceSpectrum reference = reference_spectrum(options.n, options.digits, options.cache_dir);
  const SpectralDecomposition via_j = pascal_eigen_via_J(options.n);
  const SpectralDecomposition direct = pascal_eigen_direct(options.n);
  std::vector<BenchmarkRow> rows;
  for (std::size_t k = 0; k < options.n; ++k) {
    BenchmarkRow row;
    row.t_eigenvalue = via_j.pairs[k].value;
    row.j_eigenvalue = via_j.pairs[k].jacobi_value.value_or(reference.pairs[k].value.to_double());
    row.error_via_j = eigenvector_error(via_j.pairs[k].vector, reference.pairs[k]);
    row.error_via_t = eigenvector_error(direct.pairs[k].vector, reference.pairs[k]);
    rows.push_back(row);
  }
  return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "t_eigenvalue,j_eigenvalue,error_via_j,error_via_t\n";
  for (const auto& r : rows) {
    out << format_double(r.t_eigenvalue) << ',' << format_double(r.j_eigenvalue) << ','
        << format_double(r.error_via_j) << ',' << format_double(r.error_via_t) << '\n';
  }
}

nlohmann::json benchmark_to_json(const std::vector<BenchmarkRow>& rows, const BenchmarkOptions& options) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows) {
    list.push_back({{"t_eigenvalue", r.t_eigenvalue},
                    {"j_eigenvalue", r.j_eigenvalue},
                    {"error_via_j", r.error_via_j},
                    {"error_via_t", r.error_via_t}});
  }
  return {{"n", options.n}, {"digits", options.digits}, {"rows", std::move(list)}};
}

IdentityReport run_verify(std::size_t n_max, const VerifyOptions& options) {
  if (n_max == 0) throw std::invalid_argument("verify: --n-max must be >= 1");
  IdentityReport report;
  for (std::size_t n = 1; n <= n_max; ++n) report.append(verify_suite(n, options));
  report.append(bispectral_check(std::max<std::size_t>(n_max, 3)));
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pascal matrix spectra: exact identities, stable eigendecomposition, reference benchmark"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("--output", output_path, "Write results to this file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Exact identity suites for N = 1..K");
  std::size_t n_max = 20;
  bool inject_corruption = false;
  verify->add_option("--n-max", n_max, "Largest N")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-corruption", inject_corruption, "Test hook: perturb one entry of J_N")->group("");

  // eigen
  auto* eigen = app.add_subcommand("eigen", "Eigendecomposition of the Pascal matrix");
  std::size_t eigen_n = 0;
  std::string route = "via-j";
  std::string eigen_format = "csv";
  bool with_vectors = false;
  eigen->add_option("--n", eigen_n, "Matrix size")->required()->check(CLI::PositiveNumber);
  eigen->add_option("--route", route, "direct | via-j")->check(CLI::IsMember({"direct", "via-j"}));
  eigen->add_option("--format", eigen_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  eigen->add_flag("--vectors", with_vectors, "Include eigenvector entries");

  // benchmark
  auto* bench = app.add_subcommand("benchmark", "Eigenvector errors of both routes against the reference");
  BenchmarkOptions bench_options;
  std::string bench_format = "csv";
  std::string cache_dir;
  bench->add_option("--n", bench_options.n, "Matrix size (>= 2)")->check(CLI::Range(2, 1000));
  bench->add_option("--digits", bench_options.digits, "Reference precision in decimal digits (>= 50)")
      ->check(CLI::Range(50u, 100000u));
  bench->add_option("--format", bench_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--cache-dir", cache_dir, "Reference cache directory (default: $PASCAL_ORACLE_CACHE)");

  // transform
  auto* transform = app.add_subcommand("transform", "Binomial transform s_n = sum_k C(n,k) (-1)^k v_k");
  std::string input_path;
  std::string mode = "exact";
  transform->add_option("--input", input_path, "File of numbers (whitespace or comma separated); '-' for stdin")
      ->required();
  transform->add_option("--mode", mode, "exact | binary64")->check(CLI::IsMember({"exact", "binary64"}));

  // identities
  auto* identities = app.add_subcommand("identities", "Identity engine checks");
  std::string which = "all";
  std::optional<std::size_t> bounds;
  identities
      ->add_option("--which", which, "all | bispectral | fourier | fubar | orthogonality | recovery")
      ->check(CLI::IsMember({"all", "bispectral", "fourier", "fubar", "orthogonality", "recovery"}));
  identities->add_option("--bounds", bounds,
                         "Size bound: N for bispectral/fourier (16), max x for orthogonality (40), "
                         "max n for fubar (5), max sample point for recovery (8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*verify) {
      const IdentityReport report = run_verify(n_max, VerifyOptions{inject_corruption});
      std::ostringstream text;
      print_report(text, report);
      text << summary_line(report);
      emit(text.str(), output_path, out);
      return report.all_passed() ? 0 : 1;
    }
    if (*eigen) {
      const SpectralDecomposition d = route == "direct" ? pascal_eigen_direct(eigen_n) : pascal_eigen_via_J(eigen_n);
      std::ostringstream text;
      if (eigen_format == "json") {
        text << to_json(d, with_vectors).dump(2) << '\n';
      } else {
        write_csv(text, d, with_vectors);
      }
      emit(text.str(), output_path, out);
      return 0;
    }
    if (*bench) {
      if (!cache_dir.empty()) {
        bench_options.cache_dir = std::filesystem::path(cache_dir);
      } else {
        bench_options.cache_dir = oracle_cache_from_env();
      }
      const auto rows = run_benchmark(bench_options);
      std::ostringstream text;
      if (bench_format == "json") {
        text << benchmark_to_json(rows, bench_options).dump(2) << '\n';
      } else {
        write_benchmark_csv(text, rows);
      }
      emit(text.str(), output_path, out);
      return 0;
    }
    if (*transform) {
      std::vector<std::string> tokens;
      if (input_path == "-") {
        tokens = read_tokens(std::cin);
      } else {
        std::ifstream in(input_path);
        if (!in) throw std::runtime_error("cannot read " + input_path);
        tokens = read_tokens(in);
      }
      if (tokens.empty()) throw std::invalid_argument("transform: empty input vector");
      std::ostringstream text;
      if (mode == "exact") {
        std::vector<BigRational> v;
        for (const auto& t : tokens) v.push_back(parse_exact_number(t));
        for (const auto& x : binomial_transform(v)) text << x.to_string() << '\n';
      } else {
        std::vector<double> v;
        for (const auto& t : tokens) {
          std::size_t used = 0;
          v.push_back(std::stod(t, &used));
          if (used != t.size()) throw std::invalid_argument("not a number: '" + t + "'");
        }
        for (double x : binomial_transform(v)) text << format_double(x) << '\n';
      }
      emit(text.str(), output_path, out);
      return 0;
    }
    if (*identities) {
      IdentityReport report;
      const bool all = which == "all";
      if (all || which == "bispectral") report.append(bispectral_check(bounds.value_or(16)));
      if (all || which == "fourier") report.append(check_fourier_images(bounds.value_or(16)));
      if (all || which == "orthogonality") report.append(check_orthogonality(bounds.value_or(40)));
      if (all || which == "fubar") {
        const std::size_t n_top = bounds.value_or(5);
        for (std::size_t n = 0; n <= n_top; ++n) {
          for (std::size_t l = 0; l <= n; ++l) report.append(check_identity_fubar(n, l, 8));
        }
      }
      if (all || which == "recovery") {
        const std::size_t points = bounds.value_or(8);
        report.append(check_coefficient_recovery("L / b(L)", to_diffop(jacobi_word()), fourier_map(jacobi_word()),
                                                 points));
        report.append(check_coefficient_recovery("Lt / b(Lt)", to_diffop(jacobi_tilde_word()),
                                                 fourier_map(jacobi_tilde_word()), points));
      }
      std::ostringstream text;
      print_report(text, report);
      text << summary_line(report);
      emit(text.str(), output_path, out);
      return report.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pascal
