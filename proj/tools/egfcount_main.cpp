// egfcount: exact terms, saddle-point estimates, and error tables for
// counting sequences whose EGF is exp(P(z)) with integer-coefficient P.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "egf/a000898.hpp"
#include "egf/compare.hpp"
#include "egf/errors.hpp"
#include "egf/exact.hpp"
#include "egf/int_render.hpp"
#include "egf/numerics.hpp"
#include "egf/poly.hpp"
#include "egf/saddle.hpp"

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

nlohmann::ordered_json row_to_json(const Row& row) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : row) obj[key] = value;
  return obj;
}

// Streams rows in the chosen format without retaining them; an exact-term
// dump can hold a hundred thousand rows of hundred-kilodigit numbers.
class RowWriter {
 public:
  RowWriter(std::string format, std::ostream& os) : format_(std::move(format)), os_(os) {}

  void write(const Row& row) {
    if (format_ == "lines") {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os_ << '\t';
        os_ << row[i].second;
      }
      os_ << '\n';
    } else if (format_ == "csv") {
      if (first_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) os_ << ',';
          os_ << row[i].first;
        }
        os_ << '\n';
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os_ << ',';
        os_ << row[i].second;
      }
      os_ << '\n';
    } else {  // json: an array of flat objects, one per row
      os_ << (first_ ? "[\n  " : ",\n  ") << row_to_json(row).dump();
    }
    first_ = false;
  }

  void finish() {
    if (format_ == "json") os_ << (first_ ? "[]" : "\n]") << '\n';
  }

 private:
  std::string format_;
  std::ostream& os_;
  bool first_ = true;
};

struct CommonOpts {
  unsigned bits = 256;
  std::string format = "lines";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--bits", opts.bits, "working precision in binary digits")
      ->check(CLI::Range(64u, 1048576u))
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"lines", "csv", "json"}))
      ->capture_default_str();
}

std::vector<unsigned long> merged_ns(const std::vector<unsigned long>& list,
                                     const std::vector<unsigned long>& singles) {
  std::vector<unsigned long> ns = list;
  ns.insert(ns.end(), singles.begin(), singles.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

void enforce_cap(const std::vector<unsigned long>& ns, unsigned long max_n) {
  for (unsigned long n : ns) {
    if (n > max_n)
      throw egf::DomainError("n=" + std::to_string(n) + " is above the cap of " +
                             std::to_string(max_n) +
                             "; raise --max-n if the runtime and memory are intended");
  }
}

Row comparison_row_fields(const egf::ComparisonRow& row) {
  return Row{{"n", std::to_string(row.n)},
             {"exact", row.exact_str},
             {"estimate", row.estimate_str},
             {"ratio_minus_one", row.ratio_minus_one.str(8)},
             {"scaled_error", row.scaled_error.str(8)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting sequences with EGF exp(P(z)): exact terms, saddle-point "
               "estimates, and error tables"};
  app.require_subcommand(1);

  // --- exact ----------------------------------------------------------
  std::string exact_poly;
  unsigned long exact_n = 0;
  unsigned exact_digits = 0;
  CommonOpts exact_opts;
  auto* exact_cmd = app.add_subcommand("exact", "exact terms I_0..I_N by the recurrence");
  exact_cmd->add_option("--poly", exact_poly, "coefficients p_0,p_1,... of P, ascending")
      ->required();
  exact_cmd->add_option("--n", exact_n, "last index N")->required();
  exact_cmd
      ->add_option("--digits", exact_digits,
                   "significant digits for scientific output; 0 prints full decimal")
      ->capture_default_str();
  add_common(exact_cmd, exact_opts);
  exact_cmd->callback([&] {
    const egf::ExpPolynomial p = egf::parse_poly(exact_poly);
    RowWriter writer(exact_opts.format, std::cout);
    egf::exact_terms_stream(p, exact_n, [&](unsigned long n, const mpz_class& term) {
      std::string value = exact_digits == 0 ? term.get_str()
                          : term == 0       ? std::string("0")
                                            : egf::render_int_scientific(term, exact_digits);
      writer.write(Row{{"n", std::to_string(n)}, {"value", std::move(value)}});
    });
    writer.finish();
  });

  // --- estimate -------------------------------------------------------
  std::string est_poly = "0,2,1";
  std::vector<unsigned long> est_list, est_singles;
  std::string est_method = "hayman";
  bool est_no_correction = false;
  unsigned est_digits = 5;
  CommonOpts est_opts;
  auto* est_cmd = app.add_subcommand("estimate", "asymptotic estimate of I_n");
  est_cmd->add_option("--poly", est_poly, "coefficients of P")->capture_default_str();
  est_cmd->add_option("--n", est_singles, "target index; may repeat");
  est_cmd->add_option("--n-list", est_list, "comma-separated target indices")->delimiter(',');
  est_cmd
      ->add_option("--method", est_method,
                   "hayman: generic saddle point; closed: the A000898 closed formula")
      ->check(CLI::IsMember({"hayman", "closed"}))
      ->capture_default_str();
  est_cmd->add_flag("--no-correction", est_no_correction,
                    "closed method only: drop the 1 + sqrt(2)/(3 sqrt(n)) factor");
  est_cmd->add_option("--digits", est_digits, "significant digits")->capture_default_str();
  add_common(est_cmd, est_opts);
  est_cmd->callback([&] {
    const std::vector<unsigned long> ns = merged_ns(est_list, est_singles);
    if (ns.empty()) throw egf::DomainError("estimate needs --n or --n-list");
    const egf::PrecisionContext ctx(est_opts.bits);
    const egf::ExpPolynomial p = egf::parse_poly(est_poly);
    if (est_method == "closed" && !(p == egf::a000898::poly()))
      throw egf::DomainError("the closed formula is specific to --poly 0,2,1");
    RowWriter writer(est_opts.format, std::cout);
    for (unsigned long n : ns) {
      const egf::LnValue value =
          est_method == "hayman"
              ? egf::hayman_coefficient_estimate(p, n, ctx).ln_count
              : egf::a000898::closed_form_estimate(n, !est_no_correction, ctx).value;
      writer.write(Row{{"n", std::to_string(n)},
                       {"estimate", egf::render_ln_scientific(value, est_digits)}});
    }
    writer.finish();
  });

  // --- compare --------------------------------------------------------
  std::vector<unsigned long> cmp_list;
  unsigned cmp_digits = 5;
  unsigned long cmp_max_n = 200000;
  CommonOpts cmp_opts;
  auto* cmp_cmd = app.add_subcommand(
      "compare", "exact I_n against the corrected closed-form estimate (EGF exp(z^2+2z))");
  cmp_cmd->add_option("--n-list", cmp_list, "comma-separated indices")->delimiter(',');
  cmp_cmd->add_option("--digits", cmp_digits, "significant digits")->capture_default_str();
  cmp_cmd->add_option("--max-n", cmp_max_n, "refuse indices above this cap")
      ->capture_default_str();
  add_common(cmp_cmd, cmp_opts);
  cmp_cmd->callback([&] {
    std::vector<unsigned long> ns =
        cmp_list.empty() ? std::vector<unsigned long>{100, 1000, 10000, 100000} : cmp_list;
    enforce_cap(ns, cmp_max_n);
    const egf::PrecisionContext ctx(cmp_opts.bits);
    RowWriter writer(cmp_opts.format, std::cout);
    for (const auto& row : egf::comparison_rows(ns, cmp_digits, ctx))
      writer.write(comparison_row_fields(row));
    writer.finish();
  });

  // --- fit-error ------------------------------------------------------
  std::vector<unsigned long> fit_list;
  unsigned fit_digits = 5;
  unsigned long fit_max_n = 200000;
  CommonOpts fit_opts;
  auto* fit_cmd =
      app.add_subcommand("fit-error", "least-squares order of the estimate error in n");
  fit_cmd->add_option("--n-list", fit_list, "comma-separated indices, at least 3 spanning "
                                            "a decade")
      ->delimiter(',')
      ->required();
  fit_cmd->add_option("--digits", fit_digits, "significant digits")->capture_default_str();
  fit_cmd->add_option("--max-n", fit_max_n, "refuse indices above this cap")
      ->capture_default_str();
  add_common(fit_cmd, fit_opts);
  fit_cmd->callback([&] {
    if (fit_list.size() < 3) throw egf::DomainError("the fit needs at least 3 values of n");
    const auto [lo, hi] = std::minmax_element(fit_list.begin(), fit_list.end());
    if (*lo < 1 || *hi < 10 * *lo)
      throw egf::DomainError("the fit needs n values spread over at least one decade");
    enforce_cap(fit_list, fit_max_n);
    const egf::PrecisionContext ctx(fit_opts.bits);
    const egf::ErrorOrderFit fit =
        egf::fit_error_order(egf::comparison_rows(fit_list, fit_digits, ctx), ctx);
    const std::string slope = fit.slope.str(6);
    const std::string intercept = fit.intercept.str(6);
    if (fit_opts.format == "json") {
      nlohmann::ordered_json out;
      out["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : fit.rows) out["rows"].push_back(row_to_json(comparison_row_fields(row)));
      out["slope"] = slope;
      out["intercept"] = intercept;
      std::cout << out.dump(2) << '\n';
    } else {
      RowWriter writer(fit_opts.format, std::cout);
      for (const auto& row : fit.rows) writer.write(comparison_row_fields(row));
      writer.finish();
      const char sep = fit_opts.format == "csv" ? ',' : '\t';
      std::cout << "slope" << sep << slope << '\n'
                << "intercept" << sep << intercept << '\n';
    }
  });

  // --- saddle ---------------------------------------------------------
  std::string sad_poly;
  unsigned long sad_n = 0;
  unsigned sad_digits = 10;
  CommonOpts sad_opts;
  auto* sad_cmd = app.add_subcommand("saddle", "solve a(r) = n and show the saddle data");
  sad_cmd->add_option("--poly", sad_poly, "coefficients of P")->required();
  sad_cmd->add_option("--n", sad_n, "target index")->required();
  sad_cmd->add_option("--digits", sad_digits, "significant digits")->capture_default_str();
  add_common(sad_cmd, sad_opts);
  sad_cmd->callback([&] {
    const egf::PrecisionContext ctx(sad_opts.bits);
    const egf::ExpPolynomial p = egf::parse_poly(sad_poly);
    const egf::SaddlePoint sp = egf::solve_saddle(p, sad_n, ctx);
    const egf::Real r = sp.r.rounded_to(ctx.working());
    const Row fields{{"n", std::to_string(sad_n)},
                     {"r", sp.r.str(static_cast<int>(sad_digits))},
                     {"residual", sp.residual.str(6)},
                     {"b", egf::b_of_r(p, r).str(static_cast<int>(sad_digits))},
                     {"ln_f", egf::poly_at(p, r).str(static_cast<int>(sad_digits))}};
    if (sad_opts.format == "lines") {
      for (const auto& [key, value] : fields) std::cout << key << '\t' << value << '\n';
    } else if (sad_opts.format == "csv") {
      RowWriter writer("csv", std::cout);
      writer.write(fields);
      writer.finish();
    } else {
      std::cout << row_to_json(fields).dump(2) << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
