#include "jumpdet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "jumpdet/chebyshev.hpp"
#include "jumpdet/coefficients.hpp"
#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/funcspec.hpp"
#include "jumpdet/sampling.hpp"
#include "jumpdet/summability.hpp"
#include "jumpdet/tails.hpp"
#include "jumpdet/variation.hpp"

namespace jumpdet::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string input;
  std::string command;
  std::vector<std::string> methods;
  std::string basis = "auto";
  std::string diagnostic;
  std::string path = "x";
  std::string out;
  std::string format = "csv";
  int r = 0;
  double alpha = 1.0;
  std::size_t n0 = 16;
  std::size_t nmax = 256;
  std::vector<std::size_t> n_values;
  std::vector<double> points;
  std::size_t grid = 0;
  std::size_t K = 0;
  std::size_t Kcap = 0;
  std::vector<std::size_t> densities{64, 128, 256, 512, 1024};
  bool strict = false;
};

// Failure with file context; maps to exit status 1.
struct ValidationFailure {
  std::string message;
};

struct Input {
  std::optional<PiecewiseFunction> function;
  std::optional<SeriesFile> series;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationFailure{"cannot read input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  Input in;
  try {
    if (first != std::string::npos && text[first] == '{') {
      in.series = series_from_json(text);
    } else {
      in.function = parse_function_spec(text);
    }
  } catch (const Error& e) {
    // Parse errors already start with "line:col:".
    const std::string what = e.what();
    const bool located = !what.empty() && std::isdigit(static_cast<unsigned char>(what[0]));
    throw ValidationFailure{path + (located ? ":" : ": ") + what};
  }
  return in;
}

std::vector<std::size_t> schedule(const Options& opt) {
  if (!opt.n_values.empty()) {
    for (std::size_t i = 0; i < opt.n_values.size(); ++i) {
      if (opt.n_values[i] < 1 || (i > 0 && opt.n_values[i] <= opt.n_values[i - 1])) {
        throw ArgumentError("--nvalues must be positive and strictly increasing");
      }
    }
    return opt.n_values;
  }
  if (opt.n0 < 1 || opt.nmax < opt.n0) throw ArgumentError("need 1 <= --n0 <= --nmax");
  std::vector<std::size_t> out;
  for (std::size_t n = opt.n0; n <= opt.nmax; n *= 2) out.push_back(n);
  if (out.back() != opt.nmax) out.push_back(opt.nmax);
  return out;
}

bool is_chebyshev_basis(const Input& in, const Options& opt) {
  if (opt.basis == "chebyshev") return true;
  if (opt.basis == "fourier") return false;
  if (in.series) return in.series->is_chebyshev;
  return !in.function->periodic();
}

bool closed_form_eligible(const PiecewiseFunction& f, bool chebyshev) {
  for (const auto& e : f.pieces()) {
    const auto p = e.as_polynomial();
    if (!p) return false;
    if (chebyshev ? p->size() > 1 : p->size() > 4) return false;
  }
  return true;
}

std::size_t coefficient_count(const PiecewiseFunction& f, const Options& opt, bool chebyshev,
                              bool needs_tail, std::size_t nmax) {
  if (opt.K != 0) return opt.K;
  if (!needs_tail) return std::max<std::size_t>(nmax, 1);
  // The theta path costs O(K^2); keep K modest when it runs.
  if (chebyshev && opt.path != "x") return std::max<std::size_t>(1024, 16 * nmax);
  if (closed_form_eligible(f, chebyshev)) return std::max<std::size_t>(1'000'000, 100 * nmax);
  return std::max<std::size_t>(4 * nmax, 256);
}

FourierSeries fourier_of(const Input& in, const Options& opt, bool needs_tail, std::size_t nmax) {
  if (in.series) {
    if (in.series->is_chebyshev) throw ArgumentError("input holds a Chebyshev series; a Fourier series is required");
    return in.series->fourier;
  }
  return fourier_coefficients(*in.function, coefficient_count(*in.function, opt, false, needs_tail, nmax));
}

ChebyshevSeries chebyshev_of(const Input& in, const Options& opt, bool needs_tail, std::size_t nmax) {
  if (in.series) {
    if (!in.series->is_chebyshev) throw ArgumentError("input holds a Fourier series; a Chebyshev series is required");
    return in.series->chebyshev;
  }
  return chebyshev_coefficients(*in.function, coefficient_count(*in.function, opt, true, needs_tail, nmax));
}

std::vector<double> evaluation_points(const Input& in, const Options& opt, bool chebyshev) {
  if (!opt.points.empty()) return opt.points;
  std::vector<double> out;
  if (opt.grid > 0) {
    for (std::size_t i = 0; i < opt.grid; ++i) {
      const double t = static_cast<double>(i);
      out.push_back(chebyshev ? -1.0 + 2.0 * (t + 1.0) / static_cast<double>(opt.grid + 1)
                              : -kPi + 2.0 * kPi * t / static_cast<double>(opt.grid));
    }
    return out;
  }
  if (in.function) {
    for (const auto& j : in.function->jumps()) {
      if (!chebyshev || std::fabs(j.location) < 1.0) out.push_back(j.location);
    }
  }
  if (out.empty()) throw ArgumentError("no evaluation points: pass --points or --grid");
  return out;
}

std::string field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

struct EstimateRow {
  double x;
  std::size_t n;
  std::string method;
  std::optional<int> r;
  std::optional<double> alpha;
  double estimate;
  std::optional<double> truth;
  double remainder;
  bool warning;
  bool diverging = false;
};

// Successive differences along a doubling schedule that fail to shrink. A last
// step within the truncation remainders of its two estimates is not evidence.
bool diverges(const std::vector<double>& e, const std::vector<double>& remainder) {
  if (e.size() < 3) return false;
  const std::size_t i = e.size() - 1;
  const double last = std::fabs(e[i] - e[i - 1]);
  const double prev = std::fabs(e[i - 1] - e[i - 2]);
  const double scale = std::max(1.0, std::fabs(e.back()));
  if (last <= remainder[i] + remainder[i - 1]) return false;
  return last > 1e-9 * scale && last >= 0.75 * prev;
}

class Output {
 public:
  Output(const Options& opt, std::ostream& fallback) : opt_(opt), fallback_(fallback) {}

  void write(const std::string& text) {
    if (opt_.out.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream f(opt_.out, std::ios::binary);
    if (!f) throw ValidationFailure{"cannot write output file '" + opt_.out + "'"};
    f << text;
  }

 private:
  const Options& opt_;
  std::ostream& fallback_;
};

nlohmann::json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string render_estimates(const std::vector<EstimateRow>& rows, const Options& opt) {
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j;
      j["x"] = r.x;
      j["n"] = r.n;
      j["method"] = r.method;
      j["r"] = r.r ? nlohmann::json(*r.r) : nlohmann::json(nullptr);
      j["alpha"] = number_or_null(r.alpha);
      j["estimate"] = number_or_null(r.estimate);
      j["true_jump"] = number_or_null(r.truth);
      j["abs_error"] = number_or_null(r.truth ? std::optional<double>(std::fabs(r.estimate - *r.truth)) : std::nullopt);
      j["remainder_bound"] = r.remainder;
      j["warning"] = r.warning;
      j["diverging"] = r.diverging;
      arr.push_back(std::move(j));
    }
    nlohmann::json doc;
    doc["command"] = opt.command;
    doc["rows"] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  std::string s = std::string(kEstimateHeader) + "\n";
  for (const auto& r : rows) {
    const std::optional<double> err =
        r.truth ? std::optional<double>(std::fabs(r.estimate - *r.truth)) : std::nullopt;
    s += format_double(r.x) + "," + std::to_string(r.n) + "," + r.method + "," +
         (r.r ? std::to_string(*r.r) : std::string()) + "," + field(r.alpha) + "," +
         format_double(r.estimate) + "," + field(r.truth) + "," + field(err) + "," +
         format_double(r.remainder) + "," + (r.warning ? "1" : "0") + "," +
         (r.diverging ? "1" : "0") + "\n";
  }
  return s;
}

std::vector<std::string> default_methods(bool chebyshev, const Options& opt) {
  if (chebyshev) return {"chebyshev"};
  if (opt.command == "table") {
    if (opt.r < 1) return {"fejer", "cesaro", "integrated"};
    return {"fejer", "cesaro", "integrated", "conjugate"};
  }
  return {"integrated"};
}

int detect(const Input& in, const Options& opt, Output& output, std::ostream& err) {
  if (!in.function && !in.series) throw ArgumentError("--input is required");
  const bool cheb = is_chebyshev_basis(in, opt);
  const auto methods = opt.methods.empty() ? default_methods(cheb, opt) : opt.methods;
  const auto ns = schedule(opt);
  const std::size_t nmax = ns.back();
  bool tail = false;
  for (const auto& m : methods) {
    if (m == "chebyshev" && !cheb) throw ArgumentError("method chebyshev needs the Chebyshev basis");
    if (m != "chebyshev" && cheb) throw ArgumentError("method " + m + " needs the Fourier basis");
    if (m == "conjugate" && opt.r < 1) {
      throw ArgumentError("conjugate tail needs --r >= 1 (r = 0 has no conjugate analogue)");
    }
    if (m == "integrated" || m == "conjugate" || m == "chebyshev") tail = true;
  }
  const auto points = evaluation_points(in, opt, cheb);
  std::vector<EstimateRow> rows;
  bool any_warning = false;
  bool any_divergence = false;

  std::optional<FourierSeries> fs;
  std::optional<ChebyshevSeries> cs;
  if (cheb) {
    cs = chebyshev_of(in, opt, tail, nmax);
  } else {
    fs = fourier_of(in, opt, tail, nmax);
  }
  const std::size_t K = cheb ? cs->K() : fs->K();
  if (nmax > K) {
    throw ArgumentError("n = " + std::to_string(nmax) + " exceeds the series length K = " + std::to_string(K));
  }
  for (double x : points) {
    std::optional<double> truth;
    if (in.function) truth = in.function->true_jump(x);
    for (const auto& m : methods) {
      const std::size_t first = rows.size();
      std::vector<double> values;
      std::vector<double> remainders;
      for (std::size_t n : ns) {
        JumpEstimate e;
        if (m == "fejer") {
          e = fejer_jump(*fs, x, n);
        } else if (m == "cesaro") {
          e = cesaro_jump(*fs, x, opt.alpha, n);
        } else if (m == "integrated") {
          e = jump_from_integrated(*fs, x, opt.r, n, TailSumConfig{opt.Kcap});
        } else if (m == "conjugate") {
          e = jump_from_conjugate(*fs, x, opt.r, n, TailSumConfig{opt.Kcap});
        } else if (m == "chebyshev") {
          ChebyshevTailConfig cfg;
          cfg.n = n;
          cfg.K_cap = opt.Kcap;
          cfg.path = opt.path == "theta" ? ChebyshevPath::theta_domain
                     : opt.path == "both" ? ChebyshevPath::both
                                          : ChebyshevPath::x_domain;
          e = jump_from_chebyshev(*cs, x, cfg);
        } else {
          throw ArgumentError("unknown method '" + m + "'");
        }
        values.push_back(e.value);
        remainders.push_back(e.remainder_bound);
        any_warning = any_warning || e.precision_warning;
        rows.push_back(EstimateRow{x, n, m, e.r, e.alpha, e.value, truth, e.remainder_bound,
                                   e.precision_warning});
      }
      const bool div = diverges(values, remainders);
      for (std::size_t i = first; i < rows.size(); ++i) rows[i].diverging = div;
      if (div) {
        any_divergence = true;
        err << "warning: " << m << " estimates at x = " << format_double(x)
            << " do not settle along the n schedule (diverging)\n";
      }
    }
  }
  output.write(render_estimates(rows, opt));
  if (any_warning) err << "warning: truncation remainder exceeds 1% of an estimate\n";
  return opt.strict && (any_warning || any_divergence) ? kExitPrecision : kExitOk;
}

int coeffs(const Input& in, const Options& opt, Output& output) {
  if (!in.function && !in.series) throw ArgumentError("--input is required");
  const bool cheb = is_chebyshev_basis(in, opt);
  const std::size_t K = opt.K != 0 ? opt.K : 64;
  if (cheb) {
    const ChebyshevSeries s = in.series ? chebyshev_of(in, opt, false, K)
                                        : chebyshev_coefficients(*in.function, K);
    if (opt.format == "json") {
      output.write(to_json(s) + "\n");
    } else {
      std::string t = "k,c\n";
      for (std::size_t k = 0; k < s.c.size(); ++k) t += std::to_string(k) + "," + format_double(s.c[k]) + "\n";
      output.write(t);
    }
    return kExitOk;
  }
  const FourierSeries s = in.series ? fourier_of(in, opt, false, K) : fourier_coefficients(*in.function, K);
  if (opt.format == "json") {
    output.write(to_json(s) + "\n");
  } else {
    std::string t = "k,a,b\n0," + format_double(2.0 * s.a0_half) + ",0\n";
    for (std::size_t k = 1; k <= s.K(); ++k) {
      t += std::to_string(k) + "," + format_double(s.a[k - 1]) + "," + format_double(s.b[k - 1]) + "\n";
    }
    output.write(t);
  }
  return kExitOk;
}

int variation(const Input& in, const Options& opt, Output& output) {
  if (!in.function) throw ArgumentError("variation needs a function-spec input");
  std::vector<std::pair<std::size_t, SampleSequence>> grids;
  for (std::size_t d : opt.densities) grids.emplace_back(d, sample_for_variation(*in.function, d));
  const VariationReport rep = variation_report(grids);
  struct Row {
    std::string functional;
    std::string parameter;
    std::size_t density;
    double value;
  };
  std::vector<Row> rows;
  for (const auto& l : rep.levels) {
    rows.push_back({"total_variation", "1", l.density, l.total_variation});
    for (const auto& [p, v] : l.p_variation) rows.push_back({"p_variation", format_double(p), l.density, v});
    rows.push_back({"harmonic_variation", "", l.density, l.harmonic_variation});
  }
  const std::size_t finest = rep.levels.back().density;
  for (const auto& [name, v] : rep.lambda_variation) rows.push_back({"lambda_variation", name, finest, v});
  for (std::size_t i = 0; i < rep.modulus.size(); ++i) {
    rows.push_back({"modulus", std::to_string(i + 1), finest, rep.modulus[i]});
  }
  rows.push_back({"class", class_name(rep.suggested.kind), finest, rep.suggested.parameter});
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"functional", r.functional}, {"parameter", r.parameter},
                     {"grid_density", r.density}, {"value", r.value}});
    }
    nlohmann::json doc;
    doc["command"] = "variation";
    doc["rows"] = std::move(arr);
    doc["class"] = {{"name", class_name(rep.suggested.kind)},
                    {"parameter", rep.suggested.parameter},
                    {"r_squared", rep.suggested.r_squared},
                    {"heuristic", true}};
    output.write(doc.dump(2) + "\n");
  } else {
    std::string t = "functional,parameter,grid_density,value\n";
    for (const auto& r : rows) {
      t += r.functional + "," + r.parameter + "," + std::to_string(r.density) + "," + format_double(r.value) + "\n";
    }
    output.write(t);
  }
  return kExitOk;
}

int diagnose(const Input& in, const Options& opt, Output& output) {
  struct Row {
    std::string diagnostic;
    std::size_t n;
    std::optional<double> x;
    double lhs;
    std::optional<double> rhs;
    double bound;
    std::string flag;
  };
  std::vector<Row> rows;
  bool warning = false;
  const auto ns = schedule(opt);
  const std::string& d = opt.diagnostic;
  if (d == "v2") {
    if (!in.function && !in.series) throw ArgumentError("--input is required");
    const FourierSeries s = fourier_of(in, opt, true, ns.back());
    const V2Diagnostic v = v2_tail_diagnostic(s, ns);
    warning = v.precision_warning;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      rows.push_back({"v2", ns[i], std::nullopt, v.u[i], std::nullopt, v.dropped[i],
                      v.bounded ? "bounded" : "unbounded"});
    }
  } else if (d == "parseval") {
    if (!in.function) throw ArgumentError("parseval needs a function-spec input");
    const FourierSeries s = fourier_of(in, opt, true, ns.back());
    for (std::size_t n : ns) {
      const ParsevalCheck c = parseval_increment_check(*in.function, s, n);
      const double rel = std::fabs(c.lhs - c.rhs) / std::max(std::fabs(c.lhs), 1e-300);
      rows.push_back({"parseval", n, std::nullopt, c.lhs, c.rhs, c.rhs_tail + c.lhs_error,
                      format_double(rel)});
    }
  } else if (d == "sn") {
    if (!in.function && !in.series) throw ArgumentError("--input is required");
    const FourierSeries s = fourier_of(in, opt, false, ns.back());
    for (double x : evaluation_points(in, opt, false)) {
      for (std::size_t n : ns) {
        std::optional<double> truth;
        if (in.function) truth = in.function->true_jump(x);
        rows.push_back({"sn", n, x, kPi * s_n_diagnostic(s, x, n), truth, 0.0, ""});
      }
    }
  } else if (d == "sawtooth-bound") {
    const auto sups = sawtooth_tail_bound_check(ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      rows.push_back({"sawtooth-bound", ns[i], std::nullopt, sups[i], std::nullopt, 0.0,
                      sups[i] <= 2.0 ? "bounded" : "large"});
    }
  } else {
    throw ArgumentError("unknown diagnostic '" + d + "' (v2, parseval, sn, sawtooth-bound)");
  }
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"diagnostic", r.diagnostic}, {"n", r.n}, {"x", number_or_null(r.x)},
                     {"lhs", r.lhs}, {"rhs", number_or_null(r.rhs)}, {"bound", r.bound},
                     {"flag", r.flag}});
    }
    nlohmann::json doc;
    doc["command"] = "diagnose";
    doc["rows"] = std::move(arr);
    output.write(doc.dump(2) + "\n");
  } else {
    std::string t = "diagnostic,n,x,lhs,rhs,bound,flag\n";
    for (const auto& r : rows) {
      t += r.diagnostic + "," + std::to_string(r.n) + "," + field(r.x) + "," + format_double(r.lhs) +
           "," + field(r.rhs) + "," + format_double(r.bound) + "," + r.flag + "\n";
    }
    output.write(t);
  }
  return opt.strict && warning ? kExitPrecision : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Jump detection from Fourier and Chebyshev coefficients", "jumpdet"};
  app.add_option("command,--command", opt.command, "coeffs | detect | table | variation | diagnose")
      ->required()
      ->check(CLI::IsMember({"coeffs", "detect", "table", "variation", "diagnose"}));
  app.add_option("diagnostic,--diagnostic", opt.diagnostic, "v2 | parseval | sn | sawtooth-bound");
  app.add_option("--input,-i", opt.input, "function spec or series JSON");
  app.add_option("--method,-m", opt.methods, "fejer | cesaro | integrated | conjugate | chebyshev")
      ->check(CLI::IsMember({"fejer", "cesaro", "integrated", "conjugate", "chebyshev"}));
  app.add_option("--basis", opt.basis)->check(CLI::IsMember({"auto", "fourier", "chebyshev"}));
  app.add_option("--path", opt.path, "Chebyshev tail path")->check(CLI::IsMember({"x", "theta", "both"}));
  app.add_option("--r", opt.r, "order of the integrated/conjugate tail");
  app.add_option("--alpha", opt.alpha, "Cesaro order");
  app.add_option("--n0", opt.n0, "first n of the doubling schedule");
  app.add_option("--nmax", opt.nmax, "last n of the doubling schedule");
  app.add_option("--nvalues", opt.n_values, "explicit n schedule")->delimiter(',');
  app.add_option("--points", opt.points, "evaluation points")->delimiter(',');
  app.add_option("--grid", opt.grid, "number of uniform evaluation points");
  app.add_option("--K", opt.K, "number of coefficients to compute");
  app.add_option("--Kcap", opt.Kcap, "last tail index summed");
  app.add_option("--density", opt.densities, "sampling densities for variation")->delimiter(',');
  app.add_option("--out,-o", opt.out, "output file (default stdout)");
  app.add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--strict", opt.strict, "exit 2 on precision warnings or divergence");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    Input in;
    if (!opt.input.empty()) in = load_input(opt.input);
    Output output(opt, out);
    if (opt.command == "detect" || opt.command == "table") return detect(in, opt, output, err);
    if (opt.command == "coeffs") return coeffs(in, opt, output);
    if (opt.command == "variation") return variation(in, opt, output);
    return diagnose(in, opt, output);
  } catch (const ValidationFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitValidation;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace jumpdet::cli
