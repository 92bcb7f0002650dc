#include "voakit/voa.hpp"

#include <algorithm>
#include <mutex>
#include <regex>
#include <sstream>

#include "voakit/errors.hpp"

namespace voakit {

std::string kind_name(VoaKind k) { return k == VoaKind::FreeBoson ? "heisenberg" : "virasoro"; }

VoaKind parse_kind(const std::string& s) {
  if (s == "heisenberg" || s == "free-boson" || s == "boson") return VoaKind::FreeBoson;
  if (s == "virasoro") return VoaKind::Virasoro;
  throw UsageError("unknown VOA kind '" + s + "' (expected heisenberg or virasoro)");
}

namespace {

void partitions_rec(int n, int max_part, int min_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= min_part; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, min_part, cur, out);
    cur.pop_back();
  }
}

std::uint64_t pack(long a, long k, long b) {
  return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(k + (1L << 19)) << 22) |
         static_cast<std::uint64_t>(b);
}

}  // namespace

std::vector<Partition> partitions(int n, int min_part) {
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) partitions_rec(n, n, min_part, cur, out);
  return out;
}

VOA::VOA(VoaKind kind, Q c, int max_weight)
    : kind_(kind), c_(std::move(c)), modes_(std::make_unique<Cache>()), vir_(std::make_unique<Cache>()) {
  if (kind_ == VoaKind::FreeBoson) c_ = 1;
  std::vector<int> dims;
  for (int n = 0; n <= max_weight; ++n) {
    basis_.push_back(partitions(n, min_part()));
    std::map<Partition, int> idx;
    for (std::size_t i = 0; i < basis_.back().size(); ++i) idx.emplace(basis_.back()[i], static_cast<int>(i));
    index_.push_back(std::move(idx));
    dims.push_back(static_cast<int>(basis_.back().size()));
  }
  grading_ = Grading(std::move(dims));
}

VOA::VOA(VOA&&) noexcept = default;

void VOA::check_weight(long wt) const {
  if (wt > max_weight())
    throw TruncationError("weight " + std::to_string(wt) + " exceeds enumerated weight " +
                          std::to_string(max_weight()));
}

BasisKey VOA::key_of(const Partition& p) const {
  int wt = 0;
  for (int x : p) wt += x;
  check_weight(wt);
  return BasisKey{wt, index_[wt].at(p)};
}

GradedVector VOA::omega() const {
  if (kind_ == VoaKind::FreeBoson) return GradedVector(key_of({1, 1}), frac(1, 2));
  return GradedVector(key_of({2}));
}

GradedVector VOA::generator() const {
  return kind_ == VoaKind::FreeBoson ? GradedVector(key_of({1})) : omega();
}

GradedVector VOA::boson_mode(long k, BasisKey w) const {
  const Partition& p = monomial(w);
  if (k == 0) return {};
  if (k < 0) {
    check_weight(w.wt - k);
    Partition q = p;
    q.insert(std::upper_bound(q.begin(), q.end(), static_cast<int>(-k), std::greater<int>()),
             static_cast<int>(-k));
    return GradedVector(key_of(q));
  }
  long mult = std::count(p.begin(), p.end(), static_cast<int>(k));
  if (mult == 0) return {};
  Partition q = p;
  q.erase(std::find(q.begin(), q.end(), static_cast<int>(k)));
  return GradedVector(key_of(q), Q(k * mult));
}

GradedVector VOA::apply_vir_L(long m, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [k, c] : w) out.axpy(c, vir_L(m, k));
  return out;
}

// L(m) on a Virasoro PBW monomial by commutator pushing.
GradedVector VOA::vir_L(long m, BasisKey w) const {
  if (w.wt - m < 0) return {};
  check_weight(w.wt - m);
  const std::uint64_t key = pack(0, m, grading_.col(w));
  {
    std::shared_lock lock(vir_->mu);
    auto it = vir_->map.find(key);
    if (it != vir_->map.end()) return it->second;
  }
  const Partition& p = monomial(w);
  GradedVector out;
  if (p.empty()) {
    if (m <= -2) out = GradedVector(key_of({static_cast<int>(-m)}));
  } else if (-m >= p.front()) {
    Partition q = p;
    q.insert(q.begin(), static_cast<int>(-m));
    out = GradedVector(key_of(q));
  } else {
    const long n1 = p.front();
    BasisKey rest = key_of(Partition(p.begin() + 1, p.end()));
    out = apply_vir_L(-n1, vir_L(m, rest));
    if (m + n1 != 0) out.axpy(Q(m + n1), vir_L(m - n1, rest));
    if (m == n1) out.add(rest, frac(m * m * m - m, 12) * c_);
  }
  std::unique_lock lock(vir_->mu);
  return vir_->map.emplace(key, std::move(out)).first->second;
}

GradedVector VOA::gen_mode(long k, BasisKey w) const {
  return kind_ == VoaKind::FreeBoson ? boson_mode(k, w) : vir_L(k - 1, w);
}

GradedVector VOA::gen_mode(long k, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [key, c] : w) out.axpy(c, gen_mode(k, key));
  return out;
}

// Iterate formula for v = a_p b with a the strong generator:
// (a_p b)_k = sum_j (-1)^j C(p,j) [a_{p-j} b_{k+j} - (-1)^p b_{p+k-j} a_j].
GradedVector VOA::compute_mode(BasisKey v, long k, BasisKey w) const {
  const Partition& parts = monomial(v);
  if (parts.empty()) return k == -1 ? GradedVector(w) : GradedVector();
  const long gw = generator_weight();
  const long p = gw - 1 - parts.front();
  const BasisKey b = key_of(Partition(parts.begin() + 1, parts.end()));
  GradedVector out;
  const long jmax1 = b.wt + w.wt - k - 1;
  for (long j = 0; j <= jmax1; ++j) {
    const GradedVector& inner = mode(b, k + j, w);
    if (inner.is_zero()) continue;
    out.axpy(Q(sign_pow(j) * binom(p, j)), gen_mode(p - j, inner));
  }
  const long jmax2 = gw + w.wt - 1;
  const int sp = sign_pow(p);
  for (long j = 0; j <= jmax2; ++j) {
    GradedVector aw = gen_mode(j, w);
    if (aw.is_zero()) continue;
    Q coef = Q(-sp * sign_pow(j) * binom(p, j));
    for (const auto& [key, c] : aw) out.axpy(coef * c, mode(b, p + k - j, key));
  }
  return out;
}

const GradedVector& VOA::mode(BasisKey v, long k, BasisKey w) const {
  static const GradedVector zero;
  const long wt = static_cast<long>(v.wt) + w.wt - k - 1;
  if (wt < 0) return zero;
  check_weight(wt);
  const std::uint64_t key = pack(grading_.col(v), k, grading_.col(w));
  {
    std::shared_lock lock(modes_->mu);
    auto it = modes_->map.find(key);
    if (it != modes_->map.end()) return it->second;
  }
  GradedVector out = compute_mode(v, k, w);
  std::unique_lock lock(modes_->mu);
  return modes_->map.emplace(key, std::move(out)).first->second;
}

GradedVector VOA::mode(const GradedVector& v, long k, const GradedVector& w) const {
  GradedVector out;
  for (const auto& [kv, cv] : v)
    for (const auto& [kw, cw] : w) out.axpy(cv * cw, mode(kv, k, kw));
  return out;
}

GradedVector VOA::L(long k, const GradedVector& w) const {
  if (kind_ == VoaKind::Virasoro) return apply_vir_L(k, w);
  return mode(omega(), k + 1, w);
}

std::vector<GradedVector> VOA::L1_powers(const GradedVector& v) const {
  std::vector<GradedVector> out;
  GradedVector cur = v;
  for (long r = 0; !cur.is_zero(); ++r) {
    out.push_back(cur);
    cur = L(1, cur);
    cur *= frac(1, r + 1);
  }
  return out;
}

GradedVector VOA::exp_L1(const Q& a, const GradedVector& v) const {
  GradedVector out;
  Q ar = 1;
  for (const auto& term : L1_powers(v)) {
    out.axpy(ar, term);
    ar *= a;
  }
  return out;
}

GradedVector VOA::theta(const GradedVector& v) const {
  GradedVector signed_v;
  for (const auto& [k, c] : v) signed_v.add(k, sign_pow(k.wt) * c);
  return exp_L1(1, signed_v);
}

GradedVector VOA::literal(const std::string& raw) const {
  std::string name;
  for (char ch : raw)
    if (ch != ' ') name += ch;
  if (name == "one" || name == "1" || name == "vac" || name == "|0>") return vacuum();
  if (name == "w" || name == "omega") return omega();
  if (name == "h") {
    if (kind_ != VoaKind::FreeBoson) throw UsageError("'h' is only defined for the free boson");
    return generator();
  }
  static const std::regex basis_re(R"(e(\d+)\.(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, basis_re)) {
    int wt = std::stoi(m[1]);
    int idx = std::stoi(m[2]);
    if (wt > max_weight() || idx >= dim(wt)) throw UsageError("no basis vector " + name);
    return GradedVector(BasisKey{wt, idx});
  }
  const char letter = kind_ == VoaKind::FreeBoson ? 'a' : 'L';
  static const std::regex mode_re(R"(([aL])\((-?\d+)\)(\^(\d+))?)");
  Partition p;
  std::string rest = name;
  if (rest.size() >= 3 && rest.substr(rest.size() - 3) == "|0>") rest.resize(rest.size() - 3);
  auto it = std::sregex_iterator(rest.begin(), rest.end(), mode_re);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != consumed) break;
    if ((*it)[1].str()[0] != letter) throw UsageError("mode letter does not match VOA kind in '" + raw + "'");
    int n = -std::stoi((*it)[2]);
    int times = (*it)[4].matched ? std::stoi((*it)[4]) : 1;
    if (n < min_part()) throw UsageError("not a creation mode in '" + raw + "'");
    for (int t = 0; t < times; ++t) p.push_back(n);
    consumed += it->length();
  }
  if (consumed != rest.size() || p.empty()) throw UsageError("cannot parse vector literal '" + raw + "'");
  std::sort(p.begin(), p.end(), std::greater<int>());
  return GradedVector(key_of(p));
}

std::string VOA::format_monomial(BasisKey k) const {
  const Partition& p = monomial(k);
  std::ostringstream os;
  const char* letter = kind_ == VoaKind::FreeBoson ? "a" : "L";
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    os << letter << "(-" << p[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << "|0>";
  return os.str();
}

std::string VOA::format(const GradedVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Q a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << format_monomial(k);
    first = false;
  }
  return os.str();
}

std::size_t VOA::cache_size() const {
  std::shared_lock lock(modes_->mu);
  return modes_->map.size();
}

void VOA::clear_cache() const {
  std::unique_lock lock(modes_->mu);
  modes_->map.clear();
}

}  // namespace voakit
