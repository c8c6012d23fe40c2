#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fibsigma/analytic.hpp"
#include "fibsigma/chains.hpp"
#include "fibsigma/fib.hpp"
#include "fibsigma/parallel.hpp"
#include "fibsigma/sieve.hpp"
#include "fibsigma/sigma.hpp"
#include "fibsigma/verify.hpp"
#include "fibsigma/zeckendorf.hpp"

namespace fibsigma::cli {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_precision = 3;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  row += '\n';
  return row;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

ChainKind parse_kind(const std::string& s) {
  if (s == "+1" || s == "1" || s == "first") return ChainKind::first;
  if (s == "-1" || s == "second") return ChainKind::second;
  throw CLI::ValidationError("--kind", "expected +1 or -1");
}

mpz_class parse_mpz(const std::string& s) {
  try {
    return mpz_class(s);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("integer", "cannot parse '" + s + "'");
  }
}

// Common per-run settings; every subcommand draws from this pool.
struct Options {
  long alpha = 3;
  std::string n_str;
  std::string seed_str;
  std::string kind_str = "+1";
  std::uint64_t limit = 0;
  std::size_t min_len = 1;
  std::uint64_t k = 2;
  std::uint64_t cutoff = 1000000;
  double s = 3.0;
  std::uint64_t terms = 10000;
  unsigned threads = default_thread_count();
  unsigned rounds = 64;
  std::uint64_t witness_seed = 0x66b5eed5u;
  std::string format = "csv";
  std::string out_path;
  bool starts_only = false;
  int which = 1;
  long n_max = 5000;
  bool full = false;
  // verify scales
  long pmax = 0, kmax = 0, mmax = 0, nmax = 0;
  std::vector<long> alphas;
  std::string suite;

  PrimalityConfig primality() const {
    PrimalityConfig cfg;
    cfg.rounds = rounds;
    cfg.witness_seed = witness_seed;
    return cfg;
  }
};

class OutputTarget {
public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ---- simple value commands --------------------------------------------------

int cmd_fib(const Options& opt, std::ostream& out) {
  long n = 0;
  try {
    n = std::stol(opt.n_str);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "not a machine-size index: '" + opt.n_str + "'");
  }
  out << fib_at(Alpha(opt.alpha), n) << "\n";
  return exit_ok;
}

int cmd_zeck(const Options& opt, std::ostream& out) {
  const ZeckRep rep = zeck_encode(Alpha(opt.alpha), parse_mpz(opt.n_str));
  for (std::size_t i = 0; i < rep.digits.size(); ++i) {
    if (i) out << ",";
    out << rep.digits[i].index << ":" << rep.digits[i].coeff;
  }
  out << "\n";
  return exit_ok;
}

int cmd_sigma(const Options& opt, std::ostream& out) {
  out << sigma_iterate(Alpha(opt.alpha), parse_mpz(opt.n_str), opt.k) << "\n";
  return exit_ok;
}

int cmd_ord(const Options& opt, std::ostream& out) {
  Alpha alpha(opt.alpha);
  if (!opt.n_str.empty()) {
    out << ord_trace(alpha, parse_mpz(opt.n_str)).ord() << "\n";
    return exit_ok;
  }
  if (opt.limit < 1) throw CLI::ValidationError("ord", "need --n or --limit");
  FibTable table(alpha, mpz_class(static_cast<unsigned long>(opt.limit)));
  out << csv_row({"n", "ord"});
  for (std::uint64_t n = 1; n <= opt.limit; ++n)
    out << csv_row({std::to_string(n),
                    std::to_string(ord_trace(table, mpz_class(static_cast<unsigned long>(n))).ord())});
  return exit_ok;
}

int cmd_trace(const Options& opt, std::ostream& out) {
  const SigmaTrace trace = ord_trace(Alpha(opt.alpha), parse_mpz(opt.n_str));
  if (opt.format == "json") {
    json j{{"alpha", opt.alpha}, {"start", trace.start().get_str()}, {"ord", trace.ord()}};
    j["iterates"] = json::array();
    for (const mpz_class& it : trace.iterates) j["iterates"].push_back(it.get_str());
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << csv_row({"step", "value"});
  for (std::size_t i = 0; i < trace.iterates.size(); ++i)
    out << csv_row({std::to_string(i), trace.iterates[i].get_str()});
  return exit_ok;
}

// ---- chains ------------------------------------------------------------------

json chain_to_json(const ChainRecord& rec) {
  json j{{"kind", kind_label(rec.kind)},
         {"seed", rec.seed.get_str()},
         {"length", rec.length()},
         {"breaker", rec.breaker.get_str()}};
  j["elements"] = json::array();
  for (const mpz_class& e : rec.elements) j["elements"].push_back(e.get_str());
  return j;
}

int cmd_chain(const Options& opt, std::ostream& out) {
  const ChainRecord rec =
      build_chain(parse_mpz(opt.seed_str), parse_kind(opt.kind_str), opt.primality());
  if (opt.format == "json") {
    out << chain_to_json(rec).dump() << "\n";
    return exit_ok;
  }
  out << csv_row({"kind", "seed", "length", "breaker"});
  out << csv_row({kind_label(rec.kind), rec.seed.get_str(), std::to_string(rec.length()),
                  rec.breaker.get_str()});
  return exit_ok;
}

int cmd_scan(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.limit < 2) throw CLI::ValidationError("--limit", "must be >= 2");
  const ChainKind kind = parse_kind(opt.kind_str);
  const ScanSummary scan =
      scan_chains(opt.limit, kind, opt.min_len, opt.primality(), opt.threads, opt.starts_only);
  if (opt.format == "json") {
    json j{{"kind", kind_label(kind)},
           {"limit", opt.limit},
           {"min_len", opt.min_len},
           {"k_of_limit", scan.max_length},
           {"starts_only", opt.starts_only}};
    j["records"] = json::array();
    for (const ChainRecord& rec : scan.records) j["records"].push_back(chain_to_json(rec));
    j["count_by_length"] = json::object();
    for (const auto& [len, cnt] : scan.count_by_length)
      j["count_by_length"][std::to_string(len)] = cnt;
    j["start_count_by_length"] = json::object();
    for (const auto& [len, cnt] : scan.start_count_by_length)
      j["start_count_by_length"][std::to_string(len)] = cnt;
    out << j.dump() << "\n";
  } else {
    out << csv_row({"kind", "seed", "length", "breaker"});
    for (const ChainRecord& rec : scan.records)
      out << csv_row({kind_label(rec.kind), rec.seed.get_str(), std::to_string(rec.length()),
                      rec.breaker.get_str()});
    const double ll = std::log(static_cast<double>(opt.limit));
    err << "scan: k(" << opt.limit << ") = " << scan.max_length << "; log N/loglog N = "
        << fmt(ll / std::log(ll)) << "; seeds by length:";
    for (const auto& [len, cnt] : scan.count_by_length) err << " " << len << ":" << cnt;
    err << "; starts by length:";
    for (const auto& [len, cnt] : scan.start_count_by_length) err << " " << len << ":" << cnt;
    err << "\n";
  }
  return exit_ok;
}

// ---- analytic ------------------------------------------------------------------

int cmd_bk(const Options& opt, std::ostream& out, std::ostream& err) {
  const BkEstimate est = bk_truncated(opt.k, opt.cutoff, opt.threads);
  out << csv_row({"k", "cutoff", "b_k", "log_ratio"});
  out << csv_row({std::to_string(est.k), std::to_string(est.cutoff),
                  est.value.str(20), est.log_ratio.str(20)});
  err << "bk: convergence delta |B_k(x) - B_k(x/2)| = " << est.convergence_delta.str(6) << "\n";
  return exit_ok;
}

int cmd_density(const Options& opt, std::ostream& out) {
  const DensityPrediction pred = compare_density(opt.k, opt.limit, parse_kind(opt.kind_str),
                                                 opt.primality(), opt.threads, opt.cutoff);
  out << csv_row({"k", "limit", "kind", "observed", "observed_starts", "b_k", "integral",
                  "predicted", "rel_error"});
  out << csv_row({std::to_string(pred.k), std::to_string(pred.limit), kind_label(pred.kind),
                  std::to_string(pred.observed), std::to_string(pred.observed_starts),
                  fmt(pred.bk), fmt(pred.integral), fmt(pred.predicted), fmt(pred.rel_error)});
  return exit_ok;
}

int cmd_dirichlet(const Options& opt, std::ostream& out, std::ostream& err) {
  const DirichletCheck check = dirichlet_check(Alpha(opt.alpha), opt.s, opt.terms);
  out << csv_row({"alpha", "s", "terms", "lhs", "rhs", "gap", "tail_bound"});
  out << csv_row({std::to_string(opt.alpha), fmt(opt.s), std::to_string(opt.terms), fmt(check.lhs),
                  fmt(check.rhs), fmt(check.gap), fmt(check.tail_bound)});
  if (check.gap > check.tail_bound) {
    err << "dirichlet: truncation gap exceeds its tail bound\n";
    return exit_violation;
  }
  return exit_ok;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const Options& opt, std::ostream& out) {
  verify::Scales scales;
  scales.alphas = opt.alphas;
  scales.pmax = opt.pmax;
  scales.kmax = opt.kmax;
  scales.mmax = opt.mmax;
  scales.nmax = opt.nmax;
  scales.limit = opt.limit;
  scales.threads = opt.threads;
  scales.primality = opt.primality();

  std::vector<std::string> names;
  if (opt.suite == "all")
    names = verify::suite_names();
  else
    names.push_back(opt.suite);

  std::size_t total_violations = 0;
  for (const std::string& name : names) {
    const verify::SuiteReport report = verify::run_suite(name, scales);
    for (const auto& st : report.statements)
      out << (st.violations == 0 ? "ok   " : "FAIL ") << report.suite << "." << st.name << "  "
          << st.detail << "  [checked=" << st.checked << " violations=" << st.violations << "]\n";
    out << (report.pass() ? "PASS " : "FAIL ") << report.suite << " (" << report.statements.size()
        << " statements, " << report.violations() << " violations)\n";
    total_violations += report.violations();
  }
  return total_violations == 0 ? exit_ok : exit_violation;
}

// ---- figure ------------------------------------------------------------------

int cmd_figure(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.which != 1 && opt.which != 2)
    throw CLI::ValidationError("--which", "expected 1 or 2");
  if (opt.n_max < 2) throw CLI::ValidationError("--n-max", "must be >= 2");
  if (opt.n_max > 20000 && !opt.full)
    throw CLI::ValidationError("--n-max", "above 20000 requires --full (long run, large table)");

  Alpha alpha(opt.alpha);
  const std::vector<std::size_t> ords = ord_of_fib_range(alpha, opt.n_max, opt.threads);
  const double log2v = std::log(2.0);

  bool bound_ok = true;
  if (opt.which == 1) {
    out << csv_row({"n", "ord", "bound"});
    for (long n = 2; n <= opt.n_max; ++n) {
      const double bound = std::log(static_cast<double>(n)) / log2v + 2.0;
      const std::size_t o = ords[static_cast<std::size_t>(n)];
      if (static_cast<double>(o) > bound) bound_ok = false;
      out << csv_row({std::to_string(n), std::to_string(o), fmt(bound)});
    }
  } else {
    out << csv_row({"n", "ratio", "limit"});
    const double limit_ratio = 1.0 / log2v;
    long last_above = 1;
    for (long n = 2; n <= opt.n_max; ++n) {
      const double ratio =
          static_cast<double>(ords[static_cast<std::size_t>(n)]) / std::log(static_cast<double>(n + 1));
      if (ratio >= limit_ratio) last_above = n;
      out << csv_row({std::to_string(n), fmt(ratio), fmt(limit_ratio)});
    }
    err << "figure 2: ord(F_n)/log(n+1) < 1/log 2 for all n in [" << (last_above + 1) << ", "
        << opt.n_max << "] (largest offender n = " << last_above << ")\n";
  }

  // Empirical running maxima standing in for limsup ord(F_p)/log p.
  {
    double best = 0.0, best_tail = 0.0;
    long best_p = 0, best_tail_p = 0;
    for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(opt.n_max))) {
      const double r = static_cast<double>(ords[static_cast<std::size_t>(p)]) /
                       std::log(static_cast<double>(p));
      if (r > best) {
        best = r;
        best_p = static_cast<long>(p);
      }
      if (p > static_cast<std::uint64_t>(opt.n_max) / 2 && r > best_tail) {
        best_tail = r;
        best_tail_p = static_cast<long>(p);
      }
    }
    err << "figure: running max of ord(F_p)/log p (empirical, not a limsup): " << fmt(best)
        << " at p = " << best_p << " over p <= " << opt.n_max << "; " << fmt(best_tail)
        << " at p = " << best_tail_p << " over the upper half\n";
  }

  if (opt.which == 1 && !bound_ok) {
    err << "figure 1: ord bound violated\n";
    return exit_violation;
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fibsigma: generalized Fibonacci divisor iteration, Zeckendorf encoding,\n"
               "Cunningham chains and their density constants"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "worker threads (env FIBSIGMA_THREADS)");
    cmd->add_option("--format", opt.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out_path, "write stdout payload to this file");
    cmd->add_option("--rounds", opt.rounds, "probable-prime rounds above 2^64 (>= 40)");
    cmd->add_option("--witness-seed", opt.witness_seed, "seed for probable-prime witness choice");
  };

  CLI::App* fib = app.add_subcommand("fib", "print F_n");
  fib->add_option("--alpha", opt.alpha, "sequence parameter (>= 1)")->required();
  fib->add_option("--n", opt.n_str, "index, may be negative")->required();
  add_common(fib);

  CLI::App* zeck = app.add_subcommand("zeck", "Zeckendorf digits of n as c:a pairs, ascending");
  zeck->add_option("--alpha", opt.alpha, "sequence parameter (>= 3)")->required();
  zeck->add_option("--n", opt.n_str, "value to encode (>= 1)")->required();
  add_common(zeck);

  CLI::App* sig = app.add_subcommand("sigma", "print sigma^k(n) (default k = 1)");
  sig->add_option("--alpha", opt.alpha)->required();
  sig->add_option("--n", opt.n_str)->required();
  opt.k = 1;
  sig->add_option("--k", opt.k, "iteration count (0 = identity)");
  add_common(sig);

  CLI::App* ordc = app.add_subcommand("ord", "iteration order: --n for one value, --limit for CSV n,ord rows");
  ordc->add_option("--alpha", opt.alpha)->required();
  ordc->add_option("--n", opt.n_str);
  ordc->add_option("--limit", opt.limit, "emit (n, ord) rows for 1 <= n <= limit");
  add_common(ordc);

  CLI::App* trace = app.add_subcommand("trace", "full sigma orbit of n down to 1 (CSV: step,value)");
  trace->add_option("--alpha", opt.alpha)->required();
  trace->add_option("--n", opt.n_str)->required();
  add_common(trace);

  CLI::App* chain = app.add_subcommand("chain", "Cunningham chain from a prime seed (CSV: kind,seed,length,breaker)");
  chain->add_option("--seed", opt.seed_str, "prime seed")->required();
  chain->add_option("--kind", opt.kind_str, "+1 (p -> 2p+1) or -1 (p -> 2p-1)")->required();
  add_common(chain);

  CLI::App* scan = app.add_subcommand("scan", "chain lengths for every prime seed <= limit (CSV: kind,seed,length,breaker; summary on stderr)");
  scan->add_option("--limit", opt.limit)->required();
  scan->add_option("--kind", opt.kind_str)->required();
  scan->add_option("--min-len", opt.min_len, "report seeds with l(p) >= this");
  scan->add_flag("--starts-only", opt.starts_only, "only seeds whose chain cannot extend backwards");
  add_common(scan);

  CLI::App* bk = app.add_subcommand("bk", "truncated singular series B_k(cutoff) (CSV: k,cutoff,b_k,log_ratio)");
  bk->add_option("--k", opt.k)->required();
  bk->add_option("--cutoff", opt.cutoff, "prime cutoff x");
  add_common(bk);

  CLI::App* density = app.add_subcommand("density", "observed chain counts vs B_k * integral (CSV: k,limit,kind,observed,observed_starts,b_k,integral,predicted,rel_error)");
  density->add_option("--k", opt.k)->required();
  density->add_option("--limit", opt.limit)->required();
  density->add_option("--kind", opt.kind_str);
  density->add_option("--cutoff", opt.cutoff, "prime cutoff for B_k");
  add_common(density);

  CLI::App* dirichlet = app.add_subcommand("dirichlet", "truncated zeta(s) zeta_alpha(s-1) identity (CSV: alpha,s,terms,lhs,rhs,gap,tail_bound)");
  dirichlet->add_option("--alpha", opt.alpha)->required();
  dirichlet->add_option("--s", opt.s, "exponent, > 2")->required();
  dirichlet->add_option("--terms", opt.terms, "truncation T");
  add_common(dirichlet);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a named statement suite (or 'all')");
  verify_cmd->add_option("suite", opt.suite, "one of: all, " + [] {
                           std::string s;
                           for (const auto& n : verify::suite_names()) {
                             if (!s.empty()) s += ", ";
                             s += n;
                           }
                           return s;
                         }())
      ->required();
  verify_cmd->add_option("--alpha", opt.alphas, "alpha values (repeatable)");
  verify_cmd->add_option("--pmax", opt.pmax, "prime bound");
  verify_cmd->add_option("--kmax", opt.kmax, "index bound");
  verify_cmd->add_option("--mmax", opt.mmax, "shift bound");
  verify_cmd->add_option("--nmax", opt.nmax, "value bound");
  verify_cmd->add_option("--limit", opt.limit, "scan bound");
  add_common(verify_cmd);

  CLI::App* figure = app.add_subcommand("figure", "data behind the ord(F_n) plots (CSV 1: n,ord,bound; CSV 2: n,ratio,limit)");
  figure->add_option("--which", opt.which, "1: (n, ord, bound), 2: (n, ratio, limit)")->required();
  figure->add_option("--n-max", opt.n_max, "largest index (default 5000)");
  figure->add_flag("--full", opt.full, "allow the hours-scale n-max up to 80000");
  figure->add_option("--alpha", opt.alpha);
  add_common(figure);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    OutputTarget target(opt.out_path, out);
    std::ostream& payload = target.stream();
    if (app.got_subcommand(fib)) return cmd_fib(opt, payload);
    if (app.got_subcommand(zeck)) return cmd_zeck(opt, payload);
    if (app.got_subcommand(sig)) return cmd_sigma(opt, payload);
    if (app.got_subcommand(ordc)) return cmd_ord(opt, payload);
    if (app.got_subcommand(trace)) return cmd_trace(opt, payload);
    if (app.got_subcommand(chain)) return cmd_chain(opt, payload);
    if (app.got_subcommand(scan)) return cmd_scan(opt, payload, err);
    if (app.got_subcommand(bk)) return cmd_bk(opt, payload, err);
    if (app.got_subcommand(density)) return cmd_density(opt, payload);
    if (app.got_subcommand(dirichlet)) return cmd_dirichlet(opt, payload, err);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(opt, payload);
    if (app.got_subcommand(figure)) return cmd_figure(opt, payload, err);
    err << "error: no subcommand\n";
    return exit_usage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const precision_error& e) {
    err << "precision error: " << e.what() << "\n";
    return exit_precision;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_violation;
  }
}

}  // namespace fibsigma::cli
