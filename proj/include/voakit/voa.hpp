#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "voakit/graded_vector.hpp"
#include "voakit/rational.hpp"

namespace voakit {

enum class VoaKind { FreeBoson, Virasoro };

std::string kind_name(VoaKind k);
VoaKind parse_kind(const std::string& s);

// Weakly decreasing list of creation-mode depths.
using Partition = std::vector<int>;

// A vertex operator algebra with a PBW basis: the rank-one free boson M(1)
// (basis a(-n1)...a(-nk)|0>) or the universal Virasoro vacuum module
// (basis L(-n1)...L(-nk)|0>, parts >= 2). Weight pieces are enumerated up
// to max_weight; asking for anything heavier throws TruncationError.
class VOA {
 public:
  VOA(VoaKind kind, Q c, int max_weight = 24);
  static VOA free_boson(int max_weight = 24) { return VOA(VoaKind::FreeBoson, Q(1), max_weight); }
  static VOA virasoro(Q c = frac(1, 2), int max_weight = 24) { return VOA(VoaKind::Virasoro, c, max_weight); }

  VOA(const VOA&) = delete;
  VOA& operator=(const VOA&) = delete;
  VOA(VOA&&) noexcept;

  VoaKind kind() const { return kind_; }
  const Q& central_charge() const { return c_; }
  int max_weight() const { return grading_.max_weight(); }
  const Grading& grading() const { return grading_; }
  int dim(int wt) const { return grading_.dim(wt); }
  const std::vector<Partition>& basis(int wt) const { return basis_.at(wt); }
  const Partition& monomial(BasisKey k) const { return basis_.at(k.wt).at(k.idx); }
  BasisKey key_of(const Partition& p) const;
  std::vector<BasisKey> keys_upto(int wt) const { return grading_.keys_upto(wt); }

  // Weight and smallest part of the strong generator (h or omega).
  int generator_weight() const { return kind_ == VoaKind::FreeBoson ? 1 : 2; }
  int min_part() const { return generator_weight(); }

  GradedVector vacuum() const { return GradedVector(BasisKey{0, 0}); }
  GradedVector omega() const;
  // h = a(-1)|0> for the free boson, omega for Virasoro.
  GradedVector generator() const;
  GradedVector basis_vector(BasisKey k) const { return GradedVector(k); }

  // Modes of the strong generator: h_k = a(k), omega_k = L(k-1).
  GradedVector gen_mode(long k, BasisKey w) const;
  GradedVector gen_mode(long k, const GradedVector& w) const;

  // v_k w for basis vectors, memoized.
  const GradedVector& mode(BasisKey v, long k, BasisKey w) const;
  GradedVector mode(const GradedVector& v, long k, const GradedVector& w) const;

  // Virasoro operator L(k) = omega_{k+1}.
  GradedVector L(long k, const GradedVector& w) const;
  GradedVector L(long k, BasisKey w) const { return L(k, GradedVector(w)); }
  // e^{a L(1)} v, a finite sum since L(1) lowers weight.
  GradedVector exp_L1(const Q& a, const GradedVector& v) const;
  // Terms L(1)^r v / r! for r = 0, 1, ... until zero.
  std::vector<GradedVector> L1_powers(const GradedVector& v) const;
  GradedVector theta(const GradedVector& v) const;

  GradedVector literal(const std::string& name) const;
  std::string format(const GradedVector& v) const;
  std::string format_monomial(BasisKey k) const;

  std::size_t cache_size() const;
  void clear_cache() const;

 private:
  GradedVector boson_mode(long k, BasisKey w) const;
  GradedVector vir_L(long m, BasisKey w) const;
  GradedVector apply_vir_L(long m, const GradedVector& w) const;
  GradedVector compute_mode(BasisKey v, long k, BasisKey w) const;
  void check_weight(long wt) const;

  VoaKind kind_;
  Q c_;
  Grading grading_;
  std::vector<std::vector<Partition>> basis_;
  std::vector<std::map<Partition, int>> index_;

  struct Cache {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint64_t, GradedVector> map;
  };
  std::unique_ptr<Cache> modes_;
  std::unique_ptr<Cache> vir_;
};

// Partitions of n with parts >= min_part, in reverse lexicographic order.
std::vector<Partition> partitions(int n, int min_part);

}  // namespace voakit
