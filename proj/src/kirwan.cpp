#include "weightvar/kirwan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "weightvar/errors.hpp"
#include "weightvar/schubert.hpp"
#include "weightvar/symmetric.hpp"

namespace weightvar {

namespace {

void canonicalize(ReductionInput& in) {
  for (auto& q : in.spectrum) q.canonicalize();
  for (auto& q : in.mu) q.canonicalize();
  in.nu1.canonicalize();
  in.nu2.canonicalize();
}

}  // namespace

ReductionInput ReductionInput::generic(std::vector<Rational> lambda, std::vector<Rational> mu) {
  ReductionInput in;
  in.kind = Kind::Generic;
  in.spectrum = std::move(lambda);
  in.mu = std::move(mu);
  canonicalize(in);
  return in;
}

ReductionInput ReductionInput::grassmannian(int n, int k, Rational nu1, Rational nu2, std::vector<Rational> mu) {
  ReductionInput in;
  in.kind = Kind::Grassmannian;
  in.k = k;
  in.nu1 = nu1;
  in.nu2 = nu2;
  if (n > 0) {
    const int kk = std::clamp(k, 0, n);
    in.spectrum.assign(static_cast<std::size_t>(kk), nu1);
    in.spectrum.insert(in.spectrum.end(), static_cast<std::size_t>(n - kk), nu2);
  }
  in.mu = std::move(mu);
  canonicalize(in);
  return in;
}

namespace {

Rational sum(std::span<const Rational> v) {
  Rational s = 0;
  for (const auto& q : v) s += q;
  return s;
}

std::string join_indices(const std::vector<int>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + "}";
}

}  // namespace

std::vector<std::string> structural_issues(const ReductionInput& in) {
  std::vector<std::string> issues;
  const int n = in.n();
  if (n < 2 || n > kMaxBlock) {
    issues.push_back("n = " + std::to_string(n) + " is outside the supported range 2.." + std::to_string(kMaxBlock));
    return issues;
  }
  if (static_cast<int>(in.mu.size()) != n) {
    issues.push_back("mu has " + std::to_string(in.mu.size()) + " entries, expected " + std::to_string(n));
    return issues;
  }
  if (in.is_grassmannian()) {
    if (in.k < 1 || in.k > n - 1)
      issues.push_back("k = " + std::to_string(in.k) + " must satisfy 1 <= k <= n-1");
    if (!(in.nu1 > in.nu2))
      issues.push_back("nu1 = " + to_string(in.nu1) + " must be greater than nu2 = " + to_string(in.nu2));
    if (in.k * in.nu1 + (n - in.k) * in.nu2 != 0)
      issues.push_back("k*nu1 + (n-k)*nu2 = " + to_string(Rational(in.k * in.nu1 + (n - in.k) * in.nu2)) +
                       ", expected 0");
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      const auto& a = in.spectrum[static_cast<std::size_t>(i)];
      const auto& b = in.spectrum[static_cast<std::size_t>(i + 1)];
      if (!(a > b))
        issues.push_back("lambda is not strictly decreasing at indices " + std::to_string(i + 1) + "," +
                         std::to_string(i + 2) + " (" + to_string(a) + " <= " + to_string(b) + ")");
    }
    if (const Rational s = sum(in.spectrum); s != 0) issues.push_back("lambda sums to " + to_string(s) + ", expected 0");
  }
  if (const Rational s = sum(in.mu); s != 0) issues.push_back("mu sums to " + to_string(s) + ", expected 0");
  return issues;
}

bool in_polytope(std::span<const Rational> mu, std::span<const Rational> lambda) {
  if (mu.size() != lambda.size()) throw SizeMismatch("in_polytope: mu and lambda differ in length");
  std::vector<Rational> m(mu.begin(), mu.end()), l(lambda.begin(), lambda.end());
  std::sort(m.begin(), m.end(), std::greater<>());
  std::sort(l.begin(), l.end(), std::greater<>());
  Rational pm = 0, pl = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    pm += m[i];
    pl += l[i];
    if (pm > pl) return false;
  }
  return pm == pl;
}

std::vector<WallCoincidence> wall_coincidences(std::span<const Rational> mu, std::span<const Rational> lambda) {
  if (mu.size() != lambda.size()) throw SizeMismatch("wall_coincidences: mu and lambda differ in length");
  const int n = static_cast<int>(mu.size());
  auto indices = [](unsigned mask) {
    std::vector<int> idx;
    for (int i = 0; mask; ++i, mask >>= 1)
      if (mask & 1u) idx.push_back(i + 1);
    return idx;
  };
  auto subset_sum = [](std::span<const Rational> v, unsigned mask) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask & (1u << i)) s += v[i];
    return s;
  };
  std::vector<WallCoincidence> out;
  for (int m = 1; m <= n - 1; ++m) {
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == m) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return indices(a) < indices(b); });
    for (unsigned s : masks) {
      const Rational ms = subset_sum(mu, s);
      for (unsigned r : masks)
        if (subset_sum(lambda, r) == ms) out.push_back(WallCoincidence{indices(s), indices(r), ms});
    }
  }
  return out;
}

bool is_regular(std::span<const Rational> mu, std::span<const Rational> lambda) {
  return wall_coincidences(mu, lambda).empty();
}

std::vector<std::string> validation_issues(const ReductionInput& in, const ValidationOptions& opts) {
  auto issues = structural_issues(in);
  if (!issues.empty()) return issues;
  if (!in_polytope(in.mu, in.spectrum)) {
    std::vector<Rational> m = in.mu, l = in.spectrum;
    std::sort(m.begin(), m.end(), std::greater<>());
    std::sort(l.begin(), l.end(), std::greater<>());
    Rational pm = 0, pl = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      pm += m[i];
      pl += l[i];
      if (pm > pl) {
        issues.push_back("mu is outside the moment polytope: the " + std::to_string(i + 1) +
                         " largest entries of mu sum to " + to_string(pm) + " > " + to_string(pl));
        break;
      }
    }
  }
  if (!opts.skip_regularity) {
    const auto walls = wall_coincidences(in.mu, in.spectrum);
    constexpr std::size_t kShown = 8;
    for (std::size_t i = 0; i < std::min(walls.size(), kShown); ++i) {
      const auto& w = walls[i];
      issues.push_back("mu lies on a wall: sum of mu over " + join_indices(w.mu_indices) + " equals sum of " +
                       (in.is_grassmannian() ? "nu" : "lambda") + " over " + join_indices(w.lambda_indices) +
                       " (= " + to_string(w.value) + ")");
    }
    if (walls.size() > kShown)
      issues.push_back("... and " + std::to_string(walls.size() - kShown) + " further subset-sum coincidences");
  }
  return issues;
}

void validate(const ReductionInput& in, const ValidationOptions& opts) {
  auto issues = validation_issues(in, opts);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

Rational eta(int k, const Permutation& tau, std::span<const Rational> p) {
  Rational s = 0;
  for (int i = k + 1; i <= tau.size(); ++i) s += p[static_cast<std::size_t>(tau(i) - 1)];
  return s;
}

namespace {

// suffix[k] = Σ_{i>k} p[w(i)] for k = 0..n.
std::vector<Rational> suffix_sums(const Permutation& w, std::span<const Rational> p) {
  const int n = w.size();
  std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
  for (int k = n - 1; k >= 0; --k) s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k) + 1] + p[static_cast<std::size_t>(w(k + 1) - 1)];
  return s;
}

}  // namespace

std::vector<KernelPair> enumerate_pairs(std::span<const Rational> spectrum, std::span<const Rational> mu, Exec exec) {
  if (spectrum.size() != mu.size()) throw SizeMismatch("enumerate_pairs: spectrum and mu differ in length");
  const int n = static_cast<int>(spectrum.size());
  const auto perms = all_permutations(n);
  std::vector<std::vector<Rational>> tau_sums;
  tau_sums.reserve(perms.size());
  for (const auto& t : perms) tau_sums.push_back(suffix_sums(t, mu));

  std::vector<std::vector<KernelPair>> per_v(perms.size());
  auto scan = [&](std::size_t vi) {
    const auto vs = suffix_sums(perms[vi], spectrum);
    for (std::size_t ti = 0; ti < perms.size(); ++ti)
      for (int k = 1; k <= n - 1; ++k)
        if (vs[static_cast<std::size_t>(k)] < tau_sums[ti][static_cast<std::size_t>(k)]) {
          per_v[vi].push_back(KernelPair{perms[vi], perms[ti], k});
          break;
        }
  };
  const long count = static_cast<long>(perms.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) scan(static_cast<std::size_t>(i));
  } else {
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) slot.run([&] { scan(static_cast<std::size_t>(i)); });
    slot.rethrow();
  }
  std::vector<KernelPair> out;
  for (auto& chunk : per_v) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

bool certificate_holds(const KernelPair& pair, std::span<const Rational> spectrum, std::span<const Rational> mu) {
  const int n = pair.v.size();
  if (pair.k_witness < 1 || pair.k_witness > n - 1) return false;
  for (int k = 1; k <= pair.k_witness; ++k) {
    const bool passes = eta(k, pair.v, spectrum) < eta(k, pair.tau, mu);
    if (passes != (k == pair.k_witness)) return false;
  }
  return true;
}

std::vector<Poly> KernelSet::generator_polys() const {
  std::vector<Poly> out;
  for (auto i : generators) out.push_back(certificates[i].poly);
  return out;
}

std::vector<Poly> KernelSet::generators_of_degree(int d) const {
  std::vector<Poly> out;
  for (auto i : generators)
    if (certificates[i].poly.degree() == d) out.push_back(certificates[i].poly);
  return out;
}

int KernelSet::min_degree() const {
  int d = -1;
  for (auto i : generators) {
    const int g = certificates[i].poly.degree();
    if (d < 0 || g < d) d = g;
  }
  return d;
}

namespace {

std::vector<KernelPair> prune_pairs(const std::vector<KernelPair>& pairs) {
  std::map<Permutation, std::vector<Permutation>> by_tau;
  for (const auto& p : pairs) by_tau[p.tau].push_back(p.v);
  std::vector<KernelPair> out;
  for (const auto& p : pairs) {
    const auto& vs = by_tau[p.tau];
    const bool dominated = std::any_of(vs.begin(), vs.end(), [&](const Permutation& other) {
      return other != p.v && bruhat_leq(p.v, other);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<KernelCertificate> attach_polys(const std::vector<KernelPair>& pairs, int n, Exec exec) {
  auto& calc = shared_schubert(n);
  calc.precompute(exec);
  std::vector<Poly> polys(pairs.size());
  auto fill = [&](std::size_t i) { polys[i] = calc.kernel_class(pairs[i].v, pairs[i].tau); };
  const long count = static_cast<long>(pairs.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  } else {
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) slot.run([&] { fill(static_cast<std::size_t>(i)); });
    slot.rethrow();
  }
  std::vector<KernelCertificate> certs;
  certs.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    certs.push_back(KernelCertificate{pairs[i].v, pairs[i].tau, pairs[i].k_witness, std::move(polys[i])});
  return certs;
}

KernelSet assemble(std::vector<KernelCertificate> certs) {
  KernelSet set;
  set.certificates = std::move(certs);
  std::map<Poly, std::size_t, decltype(&structural_less)> first(&structural_less);
  for (std::size_t i = 0; i < set.certificates.size(); ++i) first.try_emplace(set.certificates[i].poly, i);
  for (const auto& [poly, idx] : first) set.generators.push_back(idx);
  std::sort(set.generators.begin(), set.generators.end(), [&](std::size_t a, std::size_t b) {
    const int da = set.certificates[a].poly.degree(), db = set.certificates[b].poly.degree();
    return da != db ? da < db : a < b;
  });
  return set;
}

}  // namespace

KernelSet kernel_pairs(const ReductionInput& in, const KernelOptions& opts) {
  auto pairs = enumerate_pairs(in.spectrum, in.mu, opts.exec);
  if (opts.prune) pairs = prune_pairs(pairs);
  return assemble(attach_polys(pairs, in.n(), opts.exec));
}

KernelSet grassmannian_kernel(const ReductionInput& in, const KernelOptions& opts) {
  if (in.k < 1 || in.k > in.n() - 1) throw std::invalid_argument("grassmannian_kernel: k out of range");
  const auto pairs = enumerate_pairs(in.spectrum, in.mu, opts.exec);
  auto certs = attach_polys(pairs, in.n(), opts.exec);

  std::map<Poly, bool, decltype(&structural_less)> symmetric(&structural_less);
  std::vector<KernelCertificate> kept;
  std::vector<KernelPair> kept_pairs;
  for (auto& c : certs) {
    auto it = symmetric.find(c.poly);
    if (it == symmetric.end()) it = symmetric.emplace(c.poly, is_block_symmetric(c.poly, in.k)).first;
    if (!it->second) continue;
    kept_pairs.push_back(KernelPair{c.v, c.tau, c.k_witness});
    kept.push_back(std::move(c));
  }
  if (opts.prune) {
    const auto survivors = prune_pairs(kept_pairs);
    std::vector<KernelCertificate> pruned;
    std::size_t j = 0;
    for (auto& c : kept)
      if (j < survivors.size() && survivors[j].v == c.v && survivors[j].tau == c.tau) {
        pruned.push_back(std::move(c));
        ++j;
      }
    kept = std::move(pruned);
  }
  return assemble(std::move(kept));
}

}  // namespace weightvar
