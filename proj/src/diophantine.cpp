#include "stadion/diophantine.hpp"

#include "bigfloat.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace stadion {

namespace {

namespace mp = boost::multiprecision;
using detail::Big;

constexpr u128 kHalf = u128(1) << 127;

u128 to_u128(const BigInt& v) {
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto hi = static_cast<unsigned long long>((v >> 64) & mask);
  const auto lo = static_cast<unsigned long long>(v & mask);
  return (u128(hi) << 64) | lo;
}

BigInt from_u128(u128 v) {
  BigInt r = static_cast<unsigned long long>(v >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(v);
  return r;
}

inline u128 distance(u128 acc) { return acc >= kHalf ? u128(0) - acc : acc; }

double u128_fraction(u128 v) {
  return std::ldexp(double(static_cast<std::uint64_t>(v >> 64)), -64) +
         std::ldexp(double(static_cast<std::uint64_t>(v)), -128);
}

// ceil(eps * 2^128), clamped to the u128 range.
u128 threshold(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("accuracy must be positive");
  if (eps >= 1.0) return ~u128(0);
  const Rational t = exact_rational(eps) * Rational(BigInt(1) << 128);
  BigInt c = mp::numerator(t) / mp::denominator(t);
  if (c * mp::denominator(t) != mp::numerator(t)) ++c;
  return to_u128(c);
}

void push_value(IrrationalSet& s, const std::string& name, const Big& v) {
  const Big fl = mp::floor(v);
  const BigInt ip = fl.convert_to<BigInt>();
  const Big f = mp::ldexp(Big(v - fl), 128);
  s.names.push_back(name);
  s.values.push_back(v.convert_to<long double>());
  s.int_part.push_back(ip);
  s.frac.push_back(to_u128(mp::floor(f).convert_to<BigInt>()));
  const double hi = v.convert_to<double>();
  s.hi.push_back(hi);
  s.lo.push_back(Big(v - hi).convert_to<double>());
}


// First Z in [lo, hi] meeting the threshold on every irrational, or 0.
std::uint64_t scan_range(const IrrationalSet& x, u128 thr, std::uint64_t lo, std::uint64_t hi,
                         const std::atomic<std::uint64_t>& best) {
  const std::size_t n = x.size();
  const u128 f0 = x.frac[0];
  u128 acc = u128(lo) * f0;
  for (std::uint64_t z = lo; z <= hi; ++z, acc += f0) {
    if (distance(acc) < thr) {
      bool ok = true;
      for (std::size_t k = 1; k < n && ok; ++k) ok = distance(u128(z) * x.frac[k]) < thr;
      if (ok) return z;
    }
    if ((z & 0xFFFFF) == 0 && best.load(std::memory_order_relaxed) < z) return 0;
    if (z == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return 0;
}

template <class Fn>
void run_chunks(std::uint64_t start, std::uint64_t cap, std::uint64_t chunk, int threads,
                const std::atomic<std::uint64_t>& best, Fn&& fn) {
  if (chunk == 0) chunk = 1;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      const std::uint64_t lo = start + c * chunk;
      if (c > (cap - start) / chunk || lo > cap) return;
      if (lo >= best.load()) return;
      const std::uint64_t hi = std::min(cap, lo + chunk - 1);
      fn(lo, hi);
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

double box_bound(double eps, std::size_t n) { return std::pow(eps, -double(n)); }

}  // namespace

IrrationalSet IrrationalSet::generators(const std::vector<std::size_t>& indices) {
  static const char* names[kFieldDim] = {"1", "A", "B", "C", "D", "E", "F", "G"};
  const auto& g = detail::big_generators();
  IrrationalSet s;
  for (std::size_t q : indices) {
    if (q >= kFieldDim) throw std::out_of_range("generator index out of range");
    push_value(s, names[q], g[q]);
  }
  return s;
}

IrrationalSet IrrationalSet::for_case(CaseLabel label) {
  switch (label) {
    case CaseLabel::A: return generators({1, 2, 3});
    case CaseLabel::B:
    case CaseLabel::C: return generators({1, 2, 3, 4, 5, 6, 7});
    default: throw std::invalid_argument("custom cases have no preset irrational set");
  }
}

IrrationalSet IrrationalSet::from_doubles(const std::vector<double>& xs) {
  IrrationalSet s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw std::invalid_argument("non-finite value in irrational set");
    push_value(s, "x" + std::to_string(i + 1), Big(xs[i]));
  }
  return s;
}

IrrationalSet IrrationalSet::from_strings(const std::vector<std::string>& xs) {
  IrrationalSet s;
  for (std::size_t i = 0; i < xs.size(); ++i) push_value(s, "x" + std::to_string(i + 1), Big(xs[i]));
  return s;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STADION_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Approximation approximation_at(const IrrationalSet& x, std::uint64_t Z) {
  Approximation a;
  a.found = true;
  a.Z = Z;
  const BigInt one128 = BigInt(1) << 128;
  const BigInt half = BigInt(1) << 127;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const BigInt p = BigInt(Z) * from_u128(x.frac[k]);
    BigInt whole = p >> 128;
    const BigInt rem = p & (one128 - 1);
    if (rem > half || (rem == half && (whole & 1) != 0)) ++whole;
    a.q.push_back(BigInt(Z) * x.int_part[k] + whole);
    a.max_error = std::max(a.max_error, u128_fraction(distance(u128(Z) * x.frac[k])));
  }
  return a;
}

Approximation min_z_for_accuracy(const IrrationalSet& x, double eps, std::uint64_t z_cap, const ScanOptions& options) {
  if (x.size() == 0) throw std::invalid_argument("empty irrational set");
  const u128 thr = threshold(eps);
  const std::uint64_t start = std::max<std::uint64_t>(1, options.z_start);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  if (start <= z_cap) {
    run_chunks(start, z_cap, options.chunk, resolve_threads(options.threads), best,
               [&](std::uint64_t lo, std::uint64_t hi) {
                 if (const std::uint64_t z = scan_range(x, thr, lo, hi, best)) atomic_min(best, z);
               });
  }
  Approximation a;
  if (best.load() != std::numeric_limits<std::uint64_t>::max()) a = approximation_at(x, best.load());
  a.eps = eps;
  a.N = box_bound(eps, x.size());
  a.z_cap = z_cap;
  return a;
}

Approximation dirichlet_search(const IrrationalSet& x, std::uint64_t N, const ScanOptions& options) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const double eps = static_cast<double>(std::pow(static_cast<long double>(N), -1.0L / x.size()));
  Approximation a = min_z_for_accuracy(x, eps, N, options);
  if (!a.found) throw std::logic_error("box principle violated: no multiplier found up to N");
  a.N = double(N);
  return a;
}

std::vector<Approximation> step_function(const IrrationalSet& x, const std::vector<double>& eps_grid,
                                         std::uint64_t z_cap, const ScanOptions& options) {
  for (std::size_t i = 1; i < eps_grid.size(); ++i)
    if (!(eps_grid[i] <= eps_grid[i - 1])) throw std::invalid_argument("accuracy grid must be descending");
  std::vector<Approximation> out;
  ScanOptions opt = options;
  for (double eps : eps_grid) {
    Approximation a = min_z_for_accuracy(x, eps, z_cap, opt);
    if (a.found) opt.z_start = a.Z;
    out.push_back(a);
    if (!a.found) opt.z_start = z_cap + 1;
  }
  return out;
}

Approximation lattice_search(const IrrationalSet& x, double eps, std::uint64_t z_cap) {
  const std::size_t n = x.size();
  const std::size_t d = n + 1;
  using Vec = std::vector<long double>;
  Approximation best;
  best.eps = eps;
  best.N = box_bound(eps, n);
  best.z_cap = z_cap;

  auto consider = [&](long double z_real) {
    const long double zr = std::round(std::abs(z_real));
    if (zr < 1 || zr > static_cast<long double>(z_cap)) return;
    const auto z = static_cast<std::uint64_t>(zr);
    if (best.found && z >= best.Z) return;
    Approximation a = approximation_at(x, z);
    if (a.max_error < eps) {
      a.eps = best.eps, a.N = best.N, a.z_cap = z_cap;
      best = a;
    }
  };

  for (long double scale = 1; scale <= static_cast<long double>(z_cap) * 2; scale *= 2) {
    const long double s = eps / scale;
    std::vector<Vec> b(d, Vec(d, 0.0L));
    b[0][0] = s;
    for (std::size_t k = 0; k < n; ++k) b[0][k + 1] = x.values[k];
    for (std::size_t k = 1; k < d; ++k) b[k][k] = 1.0L;

    // Textbook LLL with delta = 3/4, Gram-Schmidt recomputed after each change.
    auto dotv = [&](const Vec& u, const Vec& v) {
      long double r = 0;
      for (std::size_t i = 0; i < d; ++i) r += u[i] * v[i];
      return r;
    };
    std::vector<Vec> bs(d);
    std::vector<Vec> mu(d, Vec(d, 0.0L));
    std::vector<long double> bn(d);
    auto gram_schmidt = [&] {
      for (std::size_t i = 0; i < d; ++i) {
        bs[i] = b[i];
        for (std::size_t j = 0; j < i; ++j) {
          mu[i][j] = bn[j] > 0 ? dotv(b[i], bs[j]) / bn[j] : 0;
          for (std::size_t t = 0; t < d; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
        }
        bn[i] = dotv(bs[i], bs[i]);
      }
    };
    gram_schmidt();
    std::size_t k = 1;
    int guard = 0;
    while (k < d && guard++ < 100000) {
      for (std::size_t j = k; j-- > 0;) {
        const long double r = std::round(mu[k][j]);
        if (r != 0) {
          for (std::size_t t = 0; t < d; ++t) b[k][t] -= r * b[j][t];
          gram_schmidt();
        }
      }
      if (bn[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
        ++k;
      } else {
        std::swap(b[k], b[k - 1]);
        gram_schmidt();
        k = std::max<std::size_t>(k - 1, 1);
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      consider(b[i][0] / s);
      for (std::size_t j = i + 1; j < d; ++j) {
        consider((b[i][0] + b[j][0]) / s);
        consider((b[i][0] - b[j][0]) / s);
      }
    }
  }
  return best;
}

MinimalityCertificate verify_minimality(const IrrationalSet& x, std::uint64_t Z, double eps, int threads) {
  if (Z >= (std::uint64_t(1) << 53)) throw std::invalid_argument("oracle is exact only below 2^53");
  const std::size_t n = x.size();
  auto passes = [&](std::uint64_t zi) {
    const double z = double(zi);
    for (std::size_t k = 0; k < n; ++k) {
      const double p = z * x.hi[k];
      const double e = std::fma(z, x.hi[k], -p);
      double t = (p - std::nearbyint(p)) + (e + z * x.lo[k]);
      t -= std::nearbyint(t);
      if (!(std::abs(t) < eps)) return false;
    }
    return true;
  };
  MinimalityCertificate c;
  c.z_meets_accuracy = Z >= 1 && passes(Z);
  c.checked = Z > 0 ? Z - 1 : 0;
  if (Z <= 1) return c;
  std::atomic<std::uint64_t> violations{0};
  std::atomic<std::uint64_t> first{std::numeric_limits<std::uint64_t>::max()};
  const std::atomic<std::uint64_t> never{std::numeric_limits<std::uint64_t>::max()};
  run_chunks(1, Z - 1, std::uint64_t(1) << 22, resolve_threads(threads), never,
             [&](std::uint64_t lo, std::uint64_t hi) {
               std::uint64_t local = 0, lfirst = 0;
               for (std::uint64_t z = lo; z <= hi; ++z)
                 if (passes(z)) {
                   if (!local) lfirst = z;
                   ++local;
                 }
               if (local) {
                 violations += local;
                 atomic_min(first, lfirst);
               }
             });
  c.violations = violations.load();
  if (c.violations) c.first_violation = first.load();
  return c;
}

}  // namespace stadion
