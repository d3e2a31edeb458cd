#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qmanin/completion.hpp"
#include "qmanin/expr.hpp"
#include "qmanin/lax.hpp"
#include "qmanin/qlinalg.hpp"
#include "qmanin/ruleset_io.hpp"
#include "qmanin/spec_io.hpp"
#include "qmanin/verify.hpp"

using namespace qm;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void print_record(const CheckRecord& r) {
  std::cout << r.group << "." << r.check_id << "  " << status_name(r.status);
  if (r.status != r.expected) std::cout << " (expected " << status_name(r.expected) << ")";
  if (!r.gating) std::cout << " [non-gating]";
  std::cout << "  " << r.elapsed << "s";
  if (r.completion_degree >= 0) std::cout << "  degree " << r.completion_degree;
  std::cout << "\n";
  if (r.status != Status::Proved && !r.detail.empty()) std::cout << "  " << r.detail << "\n";
}

void write_report(const std::string& path, const std::vector<CheckRecord>& rs) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report " + path);
  out << report_json(rs).dump(2) << "\n";
}

int finish_suite(const std::vector<CheckRecord>& rs, const std::string& report) {
  for (auto& r : rs) print_record(r);
  write_report(report, rs);
  size_t proved = 0;
  for (auto& r : rs) proved += r.status == Status::Proved;
  std::cout << rs.size() << " checks, " << proved << " proved\n";
  return suite_exit_code(rs);
}

Params parse_params(const std::vector<std::string>& kvs) {
  Params p;
  for (auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got " + kv);
    try {
      size_t used = 0;
      long v = std::stol(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      p[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw UsageError("--param value must be an integer: " + kv);
    }
  }
  return p;
}

std::vector<RatQ> parse_scalars(const std::string& list) {
  std::vector<RatQ> out;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_scalar(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmanin: exact verification of q-Manin matrix identities"};
  app.require_subcommand(1);

  std::string filter = "*", report;
  long n_opt = 0, degree_opt = 0;
  int jobs = 1;
  bool stable = false, list = false;
  auto* suite = app.add_subcommand("suite", "run the checks matching a glob");
  suite->add_option("--filter", filter, "glob over group.id or id");
  suite->add_option("--n", n_opt, "matrix size override")->check(CLI::PositiveNumber);
  suite->add_option("--degree", degree_opt, "completion degree cap override")->check(CLI::PositiveNumber);
  suite->add_option("--jobs", jobs, "parallel checks")->check(CLI::PositiveNumber);
  suite->add_option("--report", report, "write the JSON report here");
  suite->add_flag("--stable", stable, "report elapsed times as 0");
  suite->add_flag("--list", list, "list matching checks without running them");

  std::string check_id;
  std::vector<std::string> kvs;
  auto* check = app.add_subcommand("check", "run one check");
  check->add_option("id", check_id, "check id")->required();
  check->add_option("--param", kvs, "parameter override key=value");
  check->add_option("--report", report, "write the JSON report here");
  check->add_flag("--stable", stable, "report elapsed times as 0");

  std::string matrix_file;
  int qsign = 1, reduce_degree = 0;
  auto* det = app.add_subcommand("det", "column q-determinant of a matrix file");
  det->add_option("--matrix", matrix_file, "matrix JSON")->required();
  det->add_option("--qsign", qsign, "1 for det_q, -1 for det_{q^-1}")->check(CLI::IsMember({1, -1}));
  det->add_option("--reduce", reduce_degree, "print the normal form at this completion degree");

  std::string algebra_file, cache_dir, rules_out;
  int gb_degree = 4;
  auto* gb = app.add_subcommand("gb", "complete an algebra up to a degree");
  gb->add_option("--algebra", algebra_file, "algebra spec JSON")->required();
  gb->add_option("--degree", gb_degree, "completion degree")->check(CLI::PositiveNumber);
  gb->add_option("--cache", cache_dir, "cache directory (QMANIN_CACHE_DIR overrides)");
  gb->add_option("--output", rules_out, "write the rule set JSON here");

  int lax_n = 2, sites = 1;
  std::string inhom;
  bool lax_suite = false;
  auto* lax = app.add_subcommand("lax", "L-operators of an inhomogeneous chain");
  lax->add_option("--n", lax_n, "auxiliary dimension")->check(CLI::PositiveNumber);
  lax->add_option("--sites", sites, "number of sites")->check(CLI::PositiveNumber);
  lax->add_option("--inhomogeneities", inhom, "comma-separated scalars, e.g. 1,q");
  lax->add_flag("--suite", lax_suite, "run the L-operator checks with these bounds");
  lax->add_option("--report", report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*suite) {
      RunOptions o;
      o.jobs = jobs;
      o.stable = stable;
      if (n_opt) o.overrides["n"] = n_opt;
      if (degree_opt) o.overrides["degree"] = degree_opt;
      if (list) {
        for (auto& d : list_checks())
          if (glob_match(filter, d.group + "." + d.id) || glob_match(filter, d.id))
            std::cout << d.group << "." << d.id << "  " << d.citation << "\n";
        return 0;
      }
      auto rs = run_suite(filter, o);
      if (rs.empty()) throw UsageError("no check matches " + filter);
      return finish_suite(rs, report);
    }
    if (*check) {
      const CheckDef* d = find_check(check_id);
      if (!d) throw UsageError("unknown check " + check_id);
      RunOptions o;
      o.stable = stable;
      o.overrides = parse_params(kvs);
      for (auto& [k, v] : o.overrides)
        if (!d->defaults.count(k)) throw UsageError("check " + check_id + " has no parameter " + k);
      return finish_suite({run_check(*d, o)}, report);
    }
    if (*det) {
      MatrixFile mf = matrix_from_json(read_json_file(matrix_file));
      if (mf.matrix.rows() != mf.matrix.cols()) throw UsageError("det: matrix is not square");
      NCPoly d = det_q(mf.matrix, qsign);
      if (reduce_degree > 0) {
        auto rules = mf.algebra.rules(reduce_degree);
        std::cout << reduce(d, *rules).str() << "\n";
        if (!mf.algebra.stats(reduce_degree).confluent)
          std::cerr << "note: rules at degree " << reduce_degree << " are not complete\n";
      } else {
        std::cout << d.str() << "\n";
      }
      return 0;
    }
    if (*gb) {
      if (!cache_dir.empty()) engine_config().cache_dir = cache_dir;
      std::string dir = effective_cache_dir();
      if (!dir.empty()) std::filesystem::create_directories(dir);
      AlgebraHandle A = algebra_from_json(read_json_file(algebra_file));
      auto rules = A.rules(gb_degree);
      CompletionStats st = A.stats(gb_degree);
      std::cout << A.name() << ": " << rules->size() << " rules at degree " << gb_degree
                << (st.confluent ? ", complete" : ", truncated") << "\n";
      if (!dir.empty())
        std::cout << "cache " << (std::filesystem::path(dir) /
                                  (cache_key(A.presentation().hash(), gb_degree) + ".json")).string()
                  << "\n";
      if (!rules_out.empty()) save_ruleset(rules_out, *rules, st);
      return 0;
    }
    if (*lax) {
      if (lax_suite) {
        RunOptions o;
        o.overrides = {{"n", lax_n}, {"sites", sites}};
        return finish_suite(run_suite("lax.*", o), report);
      }
      std::vector<RatQ> a;
      if (inhom.empty())
        for (int j = 0; j < sites; ++j) a.push_back(RatQ::q(j == 0 ? 0 : 2 * j - 1));
      else
        a = parse_scalars(inhom);
      LaxMatrix L(lax_n, a);
      bool rll = rll_residual(L).is_zero();
      bool fused = fused_qdet_residual(L).is_zero();
      VOp qd = qdet_lax(L);
      std::cout << "n=" << lax_n << " sites=" << L.sites() << "\n";
      std::cout << "RLL residual: " << (rll ? "0" : "nonzero") << "\n";
      std::cout << "fused determinant residual: " << (fused ? "0" : "nonzero") << "\n";
      for (size_t r = 0; r < qd.dim(); ++r)
        for (auto& [c, v] : qd.row(r))
          if (c == r) std::cout << "qdet[" << r + 1 << "," << c + 1 << "] = " << v.str() << "\n";
      return rll && fused ? 0 : 3;
    }
  } catch (const UsageError& e) {
    std::cerr << "qmanin: " << e.what() << "\n";
    return 1;
  } catch (const ExprError& e) {
    std::cerr << "qmanin: " << e.what() << "\n";
    return 1;
  } catch (const SpecError& e) {
    std::cerr << "qmanin: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "qmanin: resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qmanin: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
