#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "voakit/subspace.hpp"
#include "voakit/voa.hpp"

namespace voakit {

// Spanning families: O_n, the dagger family O^+_{n,m}, the primed family
// O^+_{n,m} + (L(-1)+L(0)+m-n)W, and the shift part alone.
enum class SpanKind { On, ODagger, OPrime, ShiftOnly };

std::string span_kind_name(SpanKind k);

struct SpanRequest {
  SpanKind kind = SpanKind::On;
  int m = 0;
  int n = 0;
  int cutoff = 6;
  int margin = 4;
  auto operator<=>(const SpanRequest&) const = default;
};

// All generators whose support fits in weights <= cutoff + margin, in a
// fixed order. The parallel flag only changes how they are evaluated.
std::vector<GradedVector> span_generators(const VOA& A, const SpanRequest& req, bool parallel = true);

// Echelonized span inside the ambient window cutoff + margin. For n < 0 the
// primed and dagger families are the whole space.
Subspace build_span(const VOA& A, const SpanRequest& req, bool parallel = true);

// Thread-safe memo of built spans for one VOA.
class SpanStore {
 public:
  explicit SpanStore(const VOA& A) : A_(A) {}
  std::shared_ptr<const Subspace> get(const SpanRequest& req);
  const VOA& voa() const { return A_; }

 private:
  const VOA& A_;
  std::mutex mu_;
  std::map<SpanRequest, std::shared_ptr<const Subspace>> spans_;
};

}  // namespace voakit
