#include "quartica/quartic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "quartica/version.hpp"

namespace quartica {

namespace {

constexpr std::uint32_t kMaxBound = 0x7fffffffu;
constexpr std::int64_t kMaxModulus = 4096;
// Smallest-prime-factor table memory cap for the per-row coprimality mask.
constexpr std::uint32_t kSpfLimit = 4u * 1000 * 1000;

constexpr std::uint64_t make_square_mask64() {
  std::uint64_t m = 0;
  for (int k = 0; k < 64; ++k) m |= std::uint64_t(1) << ((k * k) & 63);
  return m;
}
constexpr std::uint64_t kSquareMask64 = make_square_mask64();

bool maybe_square_mod64(std::uint64_t low) {
  return (kSquareMask64 >> (low & 63)) & 1;
}

struct SolutionRec {
  std::uint32_t x;
  std::uint32_t y;
  ExactInt z;
};

struct ChunkResult {
  std::vector<SolutionRec> sols;
  std::uint64_t scanned = 0;
  std::uint64_t sieved = 0;
};

// All form values over the box fit a signed 128-bit integer (checked by the
// kernel selection bound before use).
struct WideKernel {
  __int128 a, b, c;

  struct Row {
    __int128 ax4;
    __int128 bx2;
  };

  static WideKernel from(const QuarticForm& f) {
    return WideKernel{static_cast<__int128>(f.a), static_cast<__int128>(f.b),
                      static_cast<__int128>(f.c)};
  }

  Row begin_row(std::uint64_t x) const {
    const std::uint64_t x2 = x * x;
    const __int128 x2w = static_cast<__int128>(x2);
    return Row{a * x2w * x2w, b * x2w};
  }

  // 0 = negative value (sieved by sign), 1 = not a square, 2 = square.
  int test(const Row& r, std::uint64_t y, ExactInt* z) const {
    const std::uint64_t y2 = y * y;
    const __int128 y2w = static_cast<__int128>(y2);
    const __int128 v = r.ax4 + r.bx2 * y2w + c * (y2w * y2w);
    if (v < 0) return 0;
    const auto uv = static_cast<unsigned __int128>(v);
    if (!maybe_square_mod64(static_cast<std::uint64_t>(uv))) return 1;
    if (uv <= ~std::uint64_t(0)) {
      const auto u = static_cast<std::uint64_t>(uv);
      const std::uint64_t root = isqrt_floor_u64(u);
      if (root * root != u) return 1;
      *z = ExactInt(root);
      return 2;
    }
    const unsigned __int128 root = isqrt_floor_u128(uv);
    if (root * root != uv) return 1;
    *z = ExactInt(root);
    return 2;
  }
};

// Arbitrary-precision fallback for forms whose values exceed 128 bits.
struct BigKernel {
  ExactInt a, b, c;

  struct Row {
    ExactInt ax4;
    ExactInt bx2;
  };

  static BigKernel from(const QuarticForm& f) { return BigKernel{f.a, f.b, f.c}; }

  Row begin_row(std::uint64_t x) const {
    ExactInt x2 = ExactInt(x) * x;
    return Row{a * x2 * x2, b * x2};
  }

  int test(const Row& r, std::uint64_t y, ExactInt* z) const {
    ExactInt y2 = ExactInt(y) * y;
    ExactInt v = r.ax4 + r.bx2 * y2 + c * y2 * y2;
    if (v < 0) return 0;
    auto root = isqrt_exact(v);
    if (!root) return 1;
    *z = std::move(*root);
    return 2;
  }
};

std::vector<std::uint32_t> build_spf(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      for (std::uint64_t j = i; j <= n; j += i) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
  }
  return spf;
}

struct SearchContext {
  std::uint32_t bound;
  bool coprime_only;
  bool exclude_trivial;
  std::vector<SieveSpec> sieves;
  std::vector<std::uint32_t> spf;  // empty when the gcd fallback is used
};

struct RowSieveState {
  std::uint32_t m;
  const std::uint8_t* row;  // admissibility slice for the current x
  std::uint32_t ry;
};

// Per-worker scratch: the coprimality mask for one row of x.
struct Scratch {
  std::vector<std::uint8_t> mask;
};

void fill_coprime_mask(const SearchContext& ctx, std::uint32_t x,
                       std::vector<std::uint8_t>& mask) {
  mask.assign(static_cast<std::size_t>(ctx.bound) + 1, 1);
  std::uint32_t v = x;
  while (v > 1) {
    const std::uint32_t p = ctx.spf[v];
    for (std::uint64_t y = p; y <= ctx.bound; y += p) mask[y] = 0;
    while (v % p == 0) v /= p;
  }
}

template <class Kernel>
void process_rows(const Kernel& kernel, const SearchContext& ctx,
                  std::uint32_t x_begin, std::uint32_t x_end, Scratch& scratch,
                  ChunkResult& out) {
  std::vector<RowSieveState> states(ctx.sieves.size());
  const bool use_mask = ctx.coprime_only && !ctx.spf.empty();

  for (std::uint32_t x = x_begin; x <= x_end; ++x) {
    if (use_mask) fill_coprime_mask(ctx, x, scratch.mask);
    for (std::size_t s = 0; s < ctx.sieves.size(); ++s) {
      const auto m = static_cast<std::uint32_t>(ctx.sieves[s].modulus);
      states[s].m = m;
      states[s].row = ctx.sieves[s].table.data() +
                      static_cast<std::size_t>(x % m) * m;
      states[s].ry = 0;  // residue of y = 0
    }
    const auto row = kernel.begin_row(x);

    for (std::uint32_t y = 1; y <= ctx.bound; ++y) {
      for (auto& st : states) {
        if (++st.ry == st.m) st.ry = 0;
      }
      if (ctx.coprime_only) {
        if (use_mask) {
          if (!scratch.mask[y]) continue;
        } else if (std::gcd(x, y) != 1) {
          continue;
        }
      }
      bool rejected = false;
      for (const auto& st : states) {
        if (!st.row[st.ry]) {
          rejected = true;
          break;
        }
      }
      if (rejected) {
        ++out.sieved;
        continue;
      }
      ExactInt z;
      switch (kernel.test(row, y, &z)) {
        case 0:
          ++out.sieved;  // negative value: sieved by sign
          break;
        case 1:
          ++out.scanned;
          break;
        default: {
          ++out.scanned;
          const bool trivial = z.is_zero();
          if (!(ctx.exclude_trivial && trivial)) {
            out.sols.push_back(SolutionRec{x, y, std::move(z)});
          }
          break;
        }
      }
    }
  }
}

template <class Kernel>
void run_search(const Kernel& kernel, const SearchContext& ctx,
                std::size_t chunk_size, unsigned workers,
                std::vector<ChunkResult>& results) {
  const std::uint64_t chunk = std::max<std::size_t>(1, chunk_size);
  const auto nchunks = static_cast<std::uint32_t>((ctx.bound + chunk - 1) / chunk);
  results.resize(nchunks);

  std::atomic<std::uint32_t> next{0};
  auto work = [&]() {
    Scratch scratch;
    for (;;) {
      const std::uint32_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= nchunks) break;
      const auto x_begin = static_cast<std::uint32_t>(1 + i * chunk);
      const auto x_end = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(ctx.bound, (i + 1) * chunk));
      process_rows(kernel, ctx, x_begin, x_end, scratch, results[i]);
    }
  };

  unsigned nworkers = workers ? workers : std::thread::hardware_concurrency();
  nworkers = std::max(1u, std::min<unsigned>(nworkers, nchunks));
  if (nworkers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nworkers);
  pool.reserve(nworkers);
  for (unsigned w = 0; w < nworkers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        work();
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Totient summatory Phi(n) = sum_{k<=n} phi(k) via the divisor-block
// recursion Phi(n) = n(n+1)/2 - sum_{d=2..n} Phi(n/d).
class TotientSummatory {
 public:
  explicit TotientSummatory(std::uint64_t n) {
    base_limit_ = static_cast<std::uint32_t>(std::min<std::uint64_t>(n, 2'000'000));
    std::vector<std::uint32_t> phi(base_limit_ + 1);
    std::iota(phi.begin(), phi.end(), 0u);
    for (std::uint32_t i = 2; i <= base_limit_; ++i) {
      if (phi[i] == i) {  // prime
        for (std::uint64_t j = i; j <= base_limit_; j += i) phi[j] -= phi[j] / i;
      }
    }
    prefix_.resize(base_limit_ + 1, 0);
    for (std::uint32_t i = 1; i <= base_limit_; ++i) prefix_[i] = prefix_[i - 1] + phi[i];
  }

  unsigned __int128 sum(std::uint64_t n) {
    if (n <= base_limit_) return prefix_[n];
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    unsigned __int128 res = (n % 2 == 0)
        ? static_cast<unsigned __int128>(n / 2) * (n + 1)
        : static_cast<unsigned __int128>(n) * ((n + 1) / 2);
    for (std::uint64_t i = 2, last; i <= n; i = last + 1) {
      const std::uint64_t q = n / i;
      last = n / q;
      res -= static_cast<unsigned __int128>(last - i + 1) * sum(q);
    }
    memo_.emplace(n, res);
    return res;
  }

 private:
  std::uint32_t base_limit_;
  std::vector<std::uint64_t> prefix_;
  std::unordered_map<std::uint64_t, unsigned __int128> memo_;
};

ExactInt from_u128(unsigned __int128 v) {
  ExactInt hi = ExactInt(static_cast<std::uint64_t>(v >> 64));
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

}  // namespace

ExactInt eval_form(const QuarticForm& f, const ExactInt& x, const ExactInt& y) {
  const ExactInt x2 = x * x;
  const ExactInt y2 = y * y;
  return f.a * x2 * x2 + f.b * x2 * y2 + f.c * y2 * y2;
}

std::size_t SieveSpec::admissible_count() const {
  return static_cast<std::size_t>(
      std::count(table.begin(), table.end(), std::uint8_t(1)));
}

SieveSpec build_sieve(const QuarticForm& f, const ExactInt& modulus) {
  if (modulus < 2) throw ParameterError("sieve modulus must be >= 2");
  if (modulus > kMaxModulus)
    throw ParameterError("sieve modulus is capped at 4096");
  const auto m = static_cast<std::int64_t>(modulus);
  const auto reduce = [m](const ExactInt& v) {
    return static_cast<std::int64_t>(((v % m) + m) % m);
  };
  const std::int64_t am = reduce(f.a), bm = reduce(f.b), cm = reduce(f.c);

  std::vector<std::uint8_t> squares(m, 0);
  for (std::int64_t k = 0; k < m; ++k) squares[(k * k) % m] = 1;
  std::vector<std::int64_t> r2(m), r4(m);
  for (std::int64_t i = 0; i < m; ++i) {
    r2[i] = (i * i) % m;
    r4[i] = (r2[i] * r2[i]) % m;
  }

  SieveSpec spec;
  spec.modulus = modulus;
  spec.table.resize(static_cast<std::size_t>(m) * m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      const std::int64_t v =
          (am * r4[i] + bm * ((r2[i] * r2[j]) % m) + cm * r4[j]) % m;
      spec.table[static_cast<std::size_t>(i) * m + j] = squares[v];
    }
  }
  return spec;
}

ExactInt candidate_pair_count(const ExactInt& bound, bool coprime_only) {
  if (bound < 1) throw ParameterError("bound must be >= 1");
  if (!coprime_only) return bound * bound;
  if (bound > kMaxBound)
    throw ParameterError("coprime pair count is capped at bound 2^31-1");
  TotientSummatory phi(static_cast<std::uint64_t>(bound));
  return 2 * from_u128(phi.sum(static_cast<std::uint64_t>(bound))) - 1;
}

std::size_t count_nontrivial(const SearchCertificate& cert) {
  std::size_t n = 0;
  for (const auto& s : cert.solutions_found) {
    if (!s.trivial) ++n;
  }
  return n;
}

SearchCertificate search(const QuarticForm& f, const ExactInt& bound,
                         const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (bound < 1) throw ParameterError("search bound must be >= 1");
  if (bound > kMaxBound) throw ParameterError("search bound is capped at 2^31-1");

  SearchContext ctx;
  ctx.bound = static_cast<std::uint32_t>(bound);
  ctx.coprime_only = options.coprime_only;
  ctx.exclude_trivial = options.exclude_trivial;
  for (const auto& m : options.sieve_moduli) ctx.sieves.push_back(build_sieve(f, m));
  const bool want_mask =
      options.coprime_filter == CoprimeFilter::factor_mask ||
      (options.coprime_filter == CoprimeFilter::automatic && ctx.bound <= kSpfLimit);
  if (ctx.coprime_only && ctx.bound >= 2 && want_mask) {
    if (ctx.bound > kSpfLimit)
      throw ParameterError("factor-mask filter is capped at bound 4e6");
    ctx.spf = build_spf(ctx.bound);
  }

  // Every intermediate of the wide evaluation is bounded in magnitude by
  // (|a|+|b|+|c|) * bound^4, so it is safe iff that fits 127 bits.
  const ExactInt b4 = bound * bound * bound * bound;
  const ExactInt max_abs = (abs(f.a) + abs(f.b) + abs(f.c)) * b4;
  const bool wide_ok = max_abs <= (ExactInt(1) << 126);
  SearchKernel kernel = options.kernel;
  if (kernel == SearchKernel::automatic) {
    kernel = wide_ok ? SearchKernel::wide : SearchKernel::big;
  } else if (kernel == SearchKernel::wide && !wide_ok) {
    throw ParameterError("form values exceed the wide kernel's 128-bit range");
  }

  std::vector<ChunkResult> results;
  if (kernel == SearchKernel::wide) {
    run_search(WideKernel::from(f), ctx, options.chunk_size, options.workers,
               results);
  } else {
    run_search(BigKernel::from(f), ctx, options.chunk_size, options.workers,
               results);
  }

  SearchCertificate cert;
  cert.form = f;
  cert.bound = bound;
  cert.coprime_only = options.coprime_only;
  cert.exclude_trivial = options.exclude_trivial;
  cert.sieve_moduli = options.sieve_moduli;
  std::uint64_t scanned = 0, sieved = 0;
  for (auto& r : results) {
    scanned += r.scanned;
    sieved += r.sieved;
    for (auto& rec : r.sols) {
      Solution s;
      s.x = rec.x;
      s.y = rec.y;
      s.z = std::move(rec.z);
      s.primitive = ctx.coprime_only || std::gcd(rec.x, rec.y) == 1;
      s.trivial = s.z.is_zero();
      cert.solutions_found.push_back(std::move(s));
    }
  }
  cert.pairs_scanned = scanned;
  cert.pairs_sieved_out = sieved;
  cert.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  cert.tool_version = kToolVersion;
  return cert;
}

}  // namespace quartica
