// sunrise: one-sided maximal operator and Muckenhoupt weight toolkit.
//
// Subcommands map 1:1 onto the library: superlevel, halo-iter, mminus,
// constant, tauberian, solyanik, check, gallery, verify.  Exit codes:
//   0 success, 1 verification failure, 2 usage/parse error, 3 domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sunrise/constants.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/json_io.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/sampling.hpp"
#include "sunrise/tauberian.hpp"
#include "sunrise/verify.hpp"
#include "sunrise/weight_spec.hpp"

namespace {

using namespace sunrise;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// weight arguments may point at a JSON file with @path
StepWeight load_weight(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return weight_spec_from_json(slurp(arg.substr(1))).resolve();
  return parse_weight_arg(arg).resolve();
}

IntervalSet load_set(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return interval_set_from_json(slurp(arg.substr(1)));
  return parse_set_arg(arg);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

struct GlobalOpts {
  std::uint64_t seed = 0x5EED5EEDULL;
  std::string format = "json";
  std::string out;
  int budget = 1000;
  double tol = 1e-6;
  int candidates = 24;
  int refine = 8;
  int ascent = 3;

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.base_candidates = candidates;
    cfg.refine_rounds = refine;
    cfg.ascent_cycles = ascent;
    cfg.seed = seed;
    cfg.quad_tol = tol;
    cfg.validate();
    return cfg;
  }
};

std::vector<Rational> parse_alpha_range(const std::string& text) {
  // "start:end:count" inclusive on both ends
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ParseError("expected alphas as START:END:COUNT");
  const Rational lo = Rational::parse(text.substr(0, c1));
  const Rational hi = Rational::parse(text.substr(c1 + 1, c2 - c1 - 1));
  const long count = std::stol(text.substr(c2 + 1));
  if (count < 2 || !(lo < hi)) throw ParseError("alpha range needs START < END and COUNT >= 2");
  std::vector<Rational> alphas;
  const Rational step = (hi - lo) / Rational(count - 1);
  for (long i = 0; i < count; ++i) alphas.push_back(lo + step * Rational(i));
  return alphas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-sided maximal operator and Muckenhoupt weight toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for all randomized searches");
  app.add_option("--format", g.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write output to a file instead of stdout");
  app.add_option("--budget", g.budget, "sample/instance budget for checks");
  app.add_option("--tol", g.tol, "quadrature tolerance");
  app.add_option("--candidates", g.candidates, "search candidates per axis");
  app.add_option("--refine", g.refine, "search refinement rounds");
  app.add_option("--ascent", g.ascent, "coordinate ascent cycles per round");

  // superlevel
  auto* sl = app.add_subcommand("superlevel", "rising-sun decomposition of {M+ 1_E > alpha}");
  std::string sl_set, sl_alpha;
  sl->add_option("--set", sl_set, "interval set, \"a,b;c,d\" or JSON or @file")->required();
  sl->add_option("--alpha", sl_alpha, "level in (0,1), rational")->required();

  // halo-iter
  auto* hi = app.add_subcommand("halo-iter", "iterated halo extensions H_alpha^{+,k}(E)");
  std::string hi_set, hi_alpha;
  int hi_k = 1;
  hi->add_option("--set", hi_set)->required();
  hi->add_option("--alpha", hi_alpha)->required();
  hi->add_option("--k", hi_k, "number of iterations")->required();

  // mminus
  auto* mm = app.add_subcommand("mminus", "backward maximal function M-w at a point");
  std::string mm_weight, mm_x;
  mm->add_option("--weight", mm_weight)->required();
  mm->add_option("--x", mm_x)->required();

  // constant
  auto* ct = app.add_subcommand("constant", "A1+/Ap+/Fujii-Wilson constant estimate");
  std::string ct_weight, ct_which;
  double ct_p = 2.0;
  ct->add_option("--weight", ct_weight)->required();
  ct->add_option("--which", ct_which, "a1|ap|fw")->required()
      ->check(CLI::IsMember({"a1", "ap", "fw"}));
  ct->add_option("--p", ct_p, "exponent for --which ap");

  // tauberian
  auto* tb = app.add_subcommand("tauberian", "lower bound for C_w+(alpha)");
  std::string tb_weight, tb_alpha, tb_families = "all";
  tb->add_option("--weight", tb_weight)->required();
  tb->add_option("--alpha", tb_alpha)->required();
  tb->add_option("--families", tb_families, "anchored,random,comb,adapted or all");

  // solyanik
  auto* so = app.add_subcommand("solyanik", "C_w+ curve sweep and Solyanik exponent fit");
  std::string so_weight, so_alphas = "0.9:0.99:10", so_families = "all", so_fit_out;
  double so_win_lo = 0.9, so_win_hi = 0.995;
  so->add_option("--weight", so_weight)->required();
  so->add_option("--alphas", so_alphas, "sweep as START:END:COUNT");
  so->add_option("--families", so_families);
  so->add_option("--fit-out", so_fit_out, "write the fit summary JSON to a file");
  so->add_option("--window-lo", so_win_lo, "fit window lower edge");
  so->add_option("--window-hi", so_win_hi, "fit window upper edge");

  // check
  auto* ck = app.add_subcommand("check", "sampled inequality checks (oracle module)");
  std::string ck_weight, ck_ineq;
  double ck_eps = 0.0, ck_exponent = 0.0, ck_beta = 2.0;
  ck->add_option("--weight", ck_weight)->required();
  ck->add_option("--ineq", ck_ineq, "rhi|ratio|converse")->required()
      ->check(CLI::IsMember({"rhi", "ratio", "converse"}));
  ck->add_option("--eps", ck_eps, "exponent parameter (default 1/(2 fw))");
  ck->add_option("--exponent", ck_exponent, "ratio-check exponent (default eps/(1+eps))");
  ck->add_option("--beta", ck_beta, "converse-check beta (> 1)");

  // gallery
  auto* ga = app.add_subcommand("gallery", "list or resolve built-in gallery weights");
  std::string ga_name;
  bool ga_resolve = false, ga_spec = false;
  ga->add_option("--name", ga_name, "gallery entry name");
  ga->add_flag("--resolve", ga_resolve, "print the resolved step weight JSON");
  ga->add_flag("--spec", ga_spec, "print the weight spec JSON");

  // verify
  auto* vf = app.add_subcommand("verify", "run the invariant suites");
  std::string vf_suite = "all";
  bool vf_inject = false;
  vf->add_option("--suite", vf_suite, "all|rsun|halo|rhi|tauberian");
  vf->add_flag("--inject-fault", vf_inject, "perturb a certificate (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 treats --help as a "parse error"; keep its exit code 0
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sl) {
      const auto d = superlevel_indicator(load_set(sl_set), Rational::parse(sl_alpha));
      emit(to_json(d, 2), g.out);
    } else if (*hi) {
      const auto chain = halo_iterate(load_set(hi_set), Rational::parse(hi_alpha), hi_k);
      emit(to_json(chain, 2), g.out);
    } else if (*mm) {
      const StepWeight w = load_weight(mm_weight);
      const Rational x = Rational::parse(mm_x);
      const Rational v = mminus_weight_at(w, x);
      char num[32];
      std::snprintf(num, sizeof(num), "%.17g", v.to_double());
      emit("{\"schema\": 1, \"x\": \"" + x.str() + "\", \"value\": \"" + v.str() +
               "\", \"value_binary64\": " + num + "}",
           g.out);
    } else if (*ct) {
      const StepWeight w = load_weight(ct_weight);
      const SearchConfig cfg = g.config();
      ConstantEstimate est;
      if (ct_which == "a1") est = a1_plus(w, cfg);
      else if (ct_which == "ap") est = ap_plus_lower(w, ct_p, cfg);
      else est = fujii_wilson(w, cfg);
      emit(to_json(est, 2), g.out);
    } else if (*tb) {
      const auto est = tauberian_lower(load_weight(tb_weight), Rational::parse(tb_alpha),
                                       parse_families(tb_families), g.config());
      emit(to_json(est, 2), g.out);
    } else if (*so) {
      FitWindow window{so_win_lo, so_win_hi};
      const auto curve = solyanik_fit(load_weight(so_weight), parse_alpha_range(so_alphas),
                                      parse_families(so_families), g.config(), window);
      emit(solyanik_csv(curve), g.out);
      if (so_fit_out.empty()) std::clog << to_json(curve, 2) << '\n';
      else emit(to_json(curve, 2), so_fit_out);
      if (!curve.resolved()) {
        std::clog << "delta unresolved, curve flat\n";
        return kExitDomain;
      }
    } else if (*ck) {
      const StepWeight w = load_weight(ck_weight);
      SampleBudget budget;
      budget.samples = g.budget;
      budget.seed = g.seed;
      InequalityReport rep;
      if (ck_ineq == "rhi") {
        const double eps = ck_eps > 0 ? ck_eps : 1.0 / (2.0 * fujii_wilson(w, g.config()).value);
        rep = reverse_holder_check(w, eps, budget);
      } else if (ck_ineq == "ratio") {
        double expo = ck_exponent;
        if (expo <= 0) {
          const double eps =
              ck_eps > 0 ? ck_eps : 1.0 / (2.0 * fujii_wilson(w, g.config()).value);
          expo = eps / (1.0 + eps);
        }
        rep = measure_ratio_check(w, expo, budget);
      } else {
        const auto curve = solyanik_fit(w, parse_alpha_range("0.9:0.99:10"), family::kAll,
                                        g.config());
        rep = solyanik_converse_check(w, ck_beta, curve, budget);
      }
      emit(to_json(rep, 2), g.out);
      if (!rep.pass()) return kExitVerifyFailed;
    } else if (*ga) {
      if (ga_name.empty()) {
        std::string out;
        for (const auto& n : gallery_names()) out += n + "\n";
        emit(out, g.out);
      } else if (ga_resolve) {
        emit(to_json(gallery_weight(ga_name), 2), g.out);
      } else if (ga_spec) {
        emit(weight_spec_to_json(gallery_spec(ga_name)), g.out);
      } else {
        emit(weight_spec_to_json(gallery_spec(ga_name)), g.out);
      }
    } else if (*vf) {
      const auto summary = run_verify(vf_suite, g.seed, g.budget, vf_inject);
      emit(to_json(summary, 2), g.out);
      if (!summary.pass()) return kExitVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
