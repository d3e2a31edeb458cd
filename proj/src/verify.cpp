#include "qmanin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "qmanin/completion.hpp"

namespace qm {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
    case Status::Error: return "Error";
  }
  return "Error";
}

Status parse_status(const std::string& s) {
  for (Status t : {Status::Proved, Status::Refuted, Status::Inconclusive, Status::Error})
    if (status_name(t) == s) return t;
  throw std::invalid_argument("unknown status " + s);
}

long Evidence::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) throw std::invalid_argument("check has no parameter " + key);
  return it->second;
}

namespace {

std::string clip(const std::string& s, size_t n = 160) {
  return s.size() <= n ? s : s.substr(0, n) + " ...";
}

}  // namespace

bool Evidence::zero(const AlgebraHandle& A, const NCPoly& p, const std::string& label) {
  NCPoly x = p.alphabet() == A.alphabet() ? p : transport(p, A);
  int top = cap();
  int start = std::min(top, std::max(2, int(x.degree()) + 2));
  for (int d = start; d <= top; ++d) {
    MembershipResult r = A.prove_zero(x, d);
    degree_ = std::max(degree_, d);
    if (r.status == Membership::Proved) {
      auto rs = A.rules(d);
      if (!replay_trace(x, r.trace, *rs, NCPoly(RatQ(), A.alphabet())))
        throw std::logic_error("reduction trace does not replay: " + label);
      ++reductions_;
      steps_ += r.trace.steps.size();
      if (keep_) obligations_.push_back({A, x, d, std::move(r.trace)});
      return true;
    }
    if (A.stats(d).confluent) {
      // unique normal forms: a nonzero one shows p is not in the ideal
      refute(json{{"kind", "normal_form"},
                  {"label", label},
                  {"algebra", A.name()},
                  {"completion_degree", d},
                  {"normal_form", r.normal_form.str()}},
             label);
      return false;
    }
    if (d == top && first_failure_.empty())
      first_failure_ = label + ": normal form at degree " + std::to_string(d) + ": " +
                       clip(r.normal_form.str());
  }
  ++failed_;
  return false;
}

bool Evidence::zero_all(const AlgebraHandle& A, const std::vector<NCPoly>& ps,
                        const std::string& label) {
  bool ok = true;
  for (size_t k = 0; k < ps.size(); ++k)
    ok = zero(A, ps[k], label + "[" + std::to_string(k) + "]") && ok;
  return ok;
}

bool Evidence::exact(bool holds, const std::string& label) {
  if (holds) {
    ++exact_;
  } else {
    // an exact computation with a nonzero residual is a genuine counterexample
    refute(json{{"kind", "exact_residual"}, {"label", label}}, label);
  }
  return holds;
}

void Evidence::require_nondegenerate(const AlgebraHandle& A, int degree) {
  if (A.collapsed(degree))
    throw std::runtime_error("localized algebra " + A.name() + " collapsed (1 = 0) at degree " +
                             std::to_string(degree));
  notes_.push_back(A.name() + " nondegenerate at degree " + std::to_string(degree));
}

void Evidence::refute(json witness, const std::string& label) {
  if (!refuted_) {
    refutation_ = std::move(witness);
    refuted_ = true;
    notes_.push_back("refuted: " + label);
  }
}

void Evidence::note(const std::string& s) { notes_.push_back(s); }

Status Evidence::status() const {
  if (refuted_) return Status::Refuted;
  if (failed_) return Status::Inconclusive;
  if (reductions_ + exact_ == 0) return Status::Error;
  return Status::Proved;
}

json Evidence::witness() const {
  Status s = status();
  if (s == Status::Refuted) return refutation_;
  if (s == Status::Proved)
    return json{{"kind", "certificate"},
                {"reductions", reductions_},
                {"trace_steps", steps_},
                {"replayed", reductions_ > 0},
                {"exact_residuals", exact_}};
  return nullptr;
}

std::string Evidence::detail() const {
  std::string d;
  if (!first_failure_.empty()) d = first_failure_;
  if (failed_ > 1) d += " (" + std::to_string(failed_) + " residuals unresolved)";
  for (auto& n : notes_) {
    if (!d.empty()) d += "; ";
    d += n;
  }
  if (reductions_ + exact_ + failed_ == 0 && !refuted_) d += d.empty() ? "no evidence" : "; no evidence";
  return d;
}

namespace {

std::vector<CheckDef>& registry_storage() {
  static std::vector<CheckDef> r;
  return r;
}

void ensure_registered() {
  static std::once_flag once;
  std::call_once(once, [] {
    register_elementary_checks();
    register_determinant_checks();
    register_inverse_checks();
    register_tensor_checks();
    register_lax_checks();
    register_engine_checks();
  });
}

}  // namespace

void register_check(CheckDef def) {
  if (!def.defaults.count("degree")) def.defaults["degree"] = 4;
  registry_storage().push_back(std::move(def));
}

const std::vector<CheckDef>& list_checks() {
  ensure_registered();
  return registry_storage();
}

const CheckDef* find_check(const std::string& id) {
  for (auto& d : list_checks())
    if (d.id == id || d.group + "." + d.id == id) return &d;
  return nullptr;
}

CheckRecord run_check(const std::string& id, const RunOptions& opts) {
  const CheckDef* d = find_check(id);
  if (!d) throw std::invalid_argument("unknown check " + id);
  return run_check(*d, opts);
}

CheckRecord run_check(const CheckDef& def, const RunOptions& opts) {
  CheckRecord rec;
  rec.check_id = def.id;
  rec.group = def.group;
  rec.citation = def.citation;
  rec.expected = def.expected;
  rec.gating = def.gating;
  rec.params = def.defaults;
  for (auto& [k, v] : opts.overrides)
    if (rec.params.count(k)) rec.params[k] = v;
  Evidence ev(rec.params, opts.keep_traces);
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(ev);
    rec.status = ev.status();
    rec.witness = ev.witness();
    rec.detail = ev.detail();
  } catch (const std::exception& e) {
    rec.status = Status::Error;
    rec.witness = nullptr;
    rec.detail = std::string(e.what());
    std::string more = ev.detail();
    if (!more.empty() && more != "no evidence") rec.detail += "; " + more;
  }
  rec.completion_degree = ev.degree_used();
  double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rec.elapsed = opts.stable ? 0.0 : std::round(el * 1000.0) / 1000.0;
  rec.obligations = std::move(ev.obligations());
  return rec;
}

bool glob_match(const std::string& pat, const std::string& s) {
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < s.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == s[t])) {
      ++p;
      ++t;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

std::vector<CheckRecord> run_suite(const std::string& filter, const RunOptions& opts) {
  std::vector<const CheckDef*> sel;
  for (auto& d : list_checks())
    if (glob_match(filter, d.group + "." + d.id) || glob_match(filter, d.id)) sel.push_back(&d);
  std::vector<CheckRecord> out(sel.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || sel.size() <= 1) {
    for (size_t i = 0; i < sel.size(); ++i) out[i] = run_check(*sel[i], opts);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < sel.size();) out[i] = run_check(*sel[i], opts);
    });
  for (auto& t : pool) t.join();
  return out;
}

json to_json(const CheckRecord& r) {
  json params = json::object();
  for (auto& [k, v] : r.params) params[k] = v;
  return json{{"check_id", r.check_id},
              {"group", r.group},
              {"citation", r.citation},
              {"params", params},
              {"status", status_name(r.status)},
              {"expected", status_name(r.expected)},
              {"gating", r.gating},
              {"completion_degree",
               r.completion_degree < 0 ? json(nullptr) : json(r.completion_degree)},
              {"elapsed", r.elapsed},
              {"witness", r.witness},
              {"detail", r.detail}};
}

json report_json(const std::vector<CheckRecord>& rs) {
  json a = json::array();
  for (auto& r : rs) a.push_back(to_json(r));
  return a;
}

int suite_exit_code(const std::vector<CheckRecord>& rs) {
  bool inconclusive = false, error = false, unexpected = false;
  for (auto& r : rs) {
    if (!r.gating) continue;
    if (r.status == Status::Error) error = true;
    else if (r.status == Status::Inconclusive) inconclusive = true;
    else if (r.status != r.expected) unexpected = true;
  }
  if (unexpected) return 3;
  if (error) return 1;
  if (inconclusive) return 2;
  return 0;
}

size_t span_rank(const std::vector<NCPoly>& ps) {
  std::map<Word, size_t> col;
  for (auto& p : ps)
    for (auto& [w, c] : p.terms()) col.emplace(w, 0);
  size_t k = 0;
  for (auto& [w, i] : col) i = k++;
  std::vector<std::vector<RatQ>> rows;
  for (auto& p : ps) {
    std::vector<RatQ> r(col.size());
    for (auto& [w, c] : p.terms()) r[col[w]] = c;
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t c = 0; c < col.size() && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    RatQ inv = RatQ(1) / rows[rank][c];
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      RatQ f = rows[r][c] * inv;
      for (size_t j = c; j < col.size(); ++j)
        if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool same_span(const std::vector<NCPoly>& a, const std::vector<NCPoly>& b) {
  std::vector<NCPoly> all = a;
  all.insert(all.end(), b.begin(), b.end());
  size_t r = span_rank(all);
  return span_rank(a) == r && span_rank(b) == r;
}

AlgebraHandle shared_algebra(const std::string& key, const std::function<AlgebraHandle()>& make) {
  static std::mutex m;
  static std::map<std::string, AlgebraHandle> cache;
  std::lock_guard<std::mutex> lk(m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgebraHandle h = make();
  cache.emplace(key, h);
  return h;
}

}  // namespace qm
