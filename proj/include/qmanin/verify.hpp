#pragma once
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmanin/algebras.hpp"

namespace qm {

enum class Status { Proved, Refuted, Inconclusive, Error };
std::string status_name(Status s);
Status parse_status(const std::string& s);

using Params = std::map<std::string, long>;

// A residual proved zero by reduction, kept for independent replay.
struct Obligation {
  AlgebraHandle algebra;
  NCPoly residual;
  int degree;
  ReductionTrace trace;
};

struct CheckRecord {
  std::string check_id;
  std::string group;
  std::string citation;
  Params params;
  Status status = Status::Error;
  Status expected = Status::Proved;
  bool gating = true;
  int completion_degree = -1;
  double elapsed = 0;
  nlohmann::json witness;
  std::string detail;
  std::vector<Obligation> obligations;  // filled when traces are kept; not serialized

  bool unexpected() const { return status != expected; }
};

struct RunOptions {
  Params overrides;
  bool keep_traces = false;
  bool stable = false;  // report elapsed as 0 for byte-identical reports
  int jobs = 1;
};

class Evidence {
 public:
  Evidence(const Params& params, bool keep_traces) : params_(params), keep_(keep_traces) {}

  long param(const std::string& key) const;
  int cap() const { return int(param("degree")); }

  // Proves p = 0 in A, escalating the completion degree from deg(p) + 2 up to the cap.
  // A nonzero normal form in a complete system refutes.
  bool zero(const AlgebraHandle& A, const NCPoly& p, const std::string& label);
  bool zero_all(const AlgebraHandle& A, const std::vector<NCPoly>& ps, const std::string& label);
  // Exact computation whose residual was found to be zero (or not).
  bool exact(bool holds, const std::string& label);
  // Localized hypotheses must not make 1 = 0 at the working degree.
  void require_nondegenerate(const AlgebraHandle& A, int degree);
  void refute(nlohmann::json witness, const std::string& label);
  void note(const std::string& s);

  Status status() const;
  int degree_used() const { return degree_; }
  nlohmann::json witness() const;
  std::string detail() const;
  std::vector<Obligation>& obligations() { return obligations_; }

 private:
  const Params& params_;
  bool keep_;
  int degree_ = -1;
  size_t reductions_ = 0, steps_ = 0, exact_ = 0, failed_ = 0;
  std::vector<std::string> notes_;
  std::string first_failure_;
  nlohmann::json refutation_;
  bool refuted_ = false;
  std::vector<Obligation> obligations_;
};

struct CheckDef {
  std::string id;
  std::string group;
  std::string citation;
  Params defaults;  // always includes "degree" (completion cap)
  Status expected = Status::Proved;
  bool gating = true;
  std::function<void(Evidence&)> run;
};

void register_check(CheckDef def);
const std::vector<CheckDef>& list_checks();
const CheckDef* find_check(const std::string& id);

CheckRecord run_check(const std::string& id, const RunOptions& opts = {});
CheckRecord run_check(const CheckDef& def, const RunOptions& opts = {});
// Glob over "group.id" or "id"; results are in catalog order whatever the job count.
std::vector<CheckRecord> run_suite(const std::string& filter, const RunOptions& opts = {});
bool glob_match(const std::string& pattern, const std::string& text);

nlohmann::json to_json(const CheckRecord& r);
nlohmann::json report_json(const std::vector<CheckRecord>& rs);
// Over gating checks: 3 on an unexpected outcome, 1 on an error, 2 if an inconclusive result
// is present, 0 otherwise.
int suite_exit_code(const std::vector<CheckRecord>& rs);

// Rank comparison of coefficient spans of homogeneous elements of a free algebra.
size_t span_rank(const std::vector<NCPoly>& ps);
bool same_span(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b);

// Shared algebras, built once per process.
AlgebraHandle shared_algebra(const std::string& key, const std::function<AlgebraHandle()>& make);

void register_elementary_checks();
void register_determinant_checks();
void register_inverse_checks();
void register_tensor_checks();
void register_lax_checks();
void register_engine_checks();

}  // namespace qm
