#include "voakit/spans.hpp"

#include <utility>

#include "voakit/errors.hpp"
#include "voakit/products.hpp"

namespace voakit {

std::string span_kind_name(SpanKind k) {
  switch (k) {
    case SpanKind::On: return "O_n";
    case SpanKind::ODagger: return "O_dagger";
    case SpanKind::OPrime: return "O_prime";
    case SpanKind::ShiftOnly: return "shift";
  }
  return "?";
}

namespace {

struct Job {
  bool product;  // false: shifted translation of w
  BasisKey v;
  BasisKey w;
};

std::vector<Job> jobs_for(const VOA& A, const SpanRequest& req) {
  const int ambient = req.cutoff + req.margin;
  std::vector<Job> jobs;
  const bool products = req.kind != SpanKind::ShiftOnly;
  const bool shifts = req.kind != SpanKind::ODagger;
  const int extra = req.kind == SpanKind::On ? 2 * req.n + 1 : req.m + req.n + 1;
  if (products)
    for (const BasisKey& v : A.keys_upto(ambient)) {
      if (v.wt == 0) continue;  // the vacuum contributes zero
      for (const BasisKey& w : A.keys_upto(ambient - v.wt - extra)) jobs.push_back(Job{true, v, w});
    }
  if (shifts)
    for (const BasisKey& w : A.keys_upto(ambient - 1)) jobs.push_back(Job{false, w, w});
  return jobs;
}

GradedVector run_job(const VOA& A, const SpanRequest& req, const Job& job) {
  if (!job.product) return shifted_translation(A, GradedVector(job.w), req.kind == SpanKind::On ? 0 : req.m - req.n);
  if (req.kind == SpanKind::On) return circ_n(A, GradedVector(job.v), GradedVector(job.w), req.n);
  return circ_mn(A, GradedVector(job.v), GradedVector(job.w), req.m, req.n);
}

}  // namespace

std::vector<GradedVector> span_generators(const VOA& A, const SpanRequest& req, bool parallel) {
  const std::vector<Job> jobs = jobs_for(A, req);
  std::vector<GradedVector> out(jobs.size());
  const long count = static_cast<long>(jobs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) out[i] = run_job(A, req, jobs[i]);
  } else {
    for (long i = 0; i < count; ++i) out[i] = run_job(A, req, jobs[i]);
  }
  return out;
}

Subspace build_span(const VOA& A, const SpanRequest& req, bool parallel) {
  const int ambient = req.cutoff + req.margin;
  if (ambient > A.max_weight())
    throw TruncationError("span window " + std::to_string(ambient) + " exceeds enumerated weight " +
                          std::to_string(A.max_weight()));
  Subspace s(A.grading(), ambient);
  s.provenance.family = span_kind_name(req.kind);
  s.provenance.m = req.m;
  s.provenance.n = req.n;
  s.provenance.margin = req.margin;
  if (req.n < 0 && req.kind != SpanKind::On) {
    for (const BasisKey& k : A.keys_upto(ambient)) s.insert(GradedVector(k));
    s.provenance.generators = s.provenance.admitted = static_cast<long>(s.rank());
    return s;
  }
  std::vector<GradedVector> gens = span_generators(A, req, parallel);
  s.provenance.generators = static_cast<long>(gens.size());
  for (const auto& g : gens)
    if (s.try_insert(g)) ++s.provenance.admitted;
  return s;
}

std::shared_ptr<const Subspace> SpanStore::get(const SpanRequest& req) {
  {
    std::lock_guard lock(mu_);
    auto it = spans_.find(req);
    if (it != spans_.end()) return it->second;
  }
  auto built = std::make_shared<const Subspace>(build_span(A_, req));
  std::lock_guard lock(mu_);
  return spans_.emplace(req, std::move(built)).first->second;
}

}  // namespace voakit
