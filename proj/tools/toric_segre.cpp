// toric_segre: Segre class of a subscheme of a smooth projective toric variety.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricsegre/invariants.hpp"
#include "toricsegre/io.hpp"

using namespace toricsegre;

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string matrix_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + to_string(m[i]);
  return s + "]";
}

void print_human(std::ostream& os, const ToricVariety& x, const SegreResult& res) {
  const ChowRing& chow = x.chow();
  os << "variety: dim " << x.dim() << ", " << x.nrays() << " rays, grading " << matrix_string(x.grading()) << "\n";
  for (int d = 0; d <= res.k; ++d) {
    os << "  A^" << d << " basis:";
    for (const Monomial& m : chow.basis(d)) os << " " << chow.monomial_name(m);
    os << "\n";
  }
  os << "subscheme: dim " << res.n << ", alpha " << to_string(res.alpha) << "\n";
  for (const ResidualData& r : res.residuals) {
    os << "  [R_" << r.d << "] = " << (r.empty ? std::string("0 (empty)") : chow.to_string(r.cls));
    os << "  (" << r.rows.size() << (r.rows.size() == 1 ? " row, " : " rows, ") << r.consistency_rows
       << (r.consistency_rows == 1 ? " check" : " checks");
    if (!r.skipped.empty()) os << ", " << r.skipped.size() << " skipped";
    if (r.attempts > 1) os << ", " << r.attempts << " attempts";
    os << ")\n";
  }
  os << "segre class:\n";
  for (std::size_t i = 0; i < res.s.size(); ++i) os << "  s_" << i << " = " << chow.to_string(res.s[i]) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre classes of subschemes of smooth projective toric varieties"};
  std::string input_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> coeff_bound;
  std::optional<int> retries;
  std::optional<std::string> format;
  bool check = false, verbose = false;
  app.add_option("--input", input_path, "input JSON document (default: stdin)");
  app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--coeff-bound", coeff_bound, "random coefficients are drawn from [-N, N] (default 100)");
  app.add_option("--retries", retries, "resampling attempts per residual (default 5)");
  app.add_option("--format", format, "human or json (default human)")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--check", check, "run the invariant suite on the fan first");
  app.add_flag("--verbose", verbose, "log progress to stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCode::Usage);
  }

  std::string stage = "input";
  try {
    std::string text;
    if (input_path.empty() || input_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) fail(ErrorCode::Io, "cannot open " + input_path);
      text = read_all(in);
    }
    const InputDocument doc = parse_input(text);
    SegreOptions opt = options_from(doc);
    if (seed) opt.seed = *seed;
    if (coeff_bound) opt.coeff_bound = *coeff_bound;
    if (retries) opt.retries = *retries;
    const std::string fmt = format ? *format : doc.options.format.value_or("human");
    if (fmt != "human" && fmt != "json") fail(ErrorCode::InvalidInput, "unknown format '" + fmt + "'");
    if (verbose) opt.log = [](const std::string& s) { std::cerr << s << "\n"; };
    if (opt.coeff_bound < 1) fail(ErrorCode::InvalidInput, "coeff_bound must be positive");
    if (opt.retries < 0) fail(ErrorCode::InvalidInput, "retries must be non-negative");

    stage = "variety";
    const ToricVariety x = variety_of(doc);
    if (check) {
      stage = "check";
      bool all = true;
      for (const CheckResult& c : check_invariants(x)) {
        std::cerr << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        all = all && c.ok;
      }
      if (!all) fail(ErrorCode::Internal, "invariant suite failed");
    }
    stage = "ideal";
    const Ideal ideal = ideal_of(doc, x);
    stage = "segre";
    const SegreResult res = segre_class(x, ideal, opt);
    if (fmt == "json")
      std::cout << output_to_json(make_output(x, res, opt.retries));
    else
      print_human(std::cout, x, res);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error [" << error_name(e.code()) << "] in " << stage << ": " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error [Internal] in " << stage << ": " << e.what() << "\n";
    return static_cast<int>(ErrorCode::Internal);
  }
}
