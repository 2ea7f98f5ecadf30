#include "divmom/segmented.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <stdexcept>
#include <thread>

#include "divmom/checked.hpp"
#include "divmom/primes.hpp"

namespace divmom {

namespace {

struct Checkpoint {
  std::uint64_t position;  // the x value
  std::size_t out_index;
};

struct SegmentResult {
  __int128 total = 0;
  std::vector<std::pair<std::size_t, __int128>> partials;  // (out_index, prefix)
};

// f values of one segment [lo, hi]: factor out every prime <= sqrt(x_max),
// whatever remains in rem is 1 or a single prime > sqrt(x_max).
class SegmentWorker {
 public:
  SegmentWorker(const MultiplicativeSpec& spec,
                const std::vector<std::uint64_t>& primes,
                std::uint64_t segment_size)
      : spec_(spec), primes_(primes) {
    rem_.resize(segment_size);
    val_.resize(segment_size);
    // Powers of two are handled with countr_zero; memoize their values.
    pow2_val_.assign(64, 0);
    pow2_ok_.assign(64, false);
    for (unsigned e = 1; e < 64; ++e) {
      try {
        pow2_val_[e] = spec.prime_power(2, e);
        pow2_ok_[e] = true;
      } catch (const std::overflow_error&) {
        // reported only if a multiple of 2^e actually shows up
      }
    }
  }

  SegmentResult run(std::uint64_t lo, std::uint64_t hi,
                    std::span<const Checkpoint> checkpoints) {
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    const std::int64_t k = spec_.prime_value;
    for (std::size_t i = 0; i < len; ++i) {
      rem_[i] = lo + i;
      val_[i] = 1;
    }
    // p = 2: the exponent is the number of trailing zero bits.
    for (std::uint64_t m = lo + (lo & 1); m <= hi; m += 2) {
      const unsigned e = static_cast<unsigned>(std::countr_zero(m));
      if (!pow2_ok_[e])
        throw std::overflow_error(
            "segmented_sum: f(2^" + std::to_string(e) + ") overflows int64");
      const std::size_t i = static_cast<std::size_t>(m - lo);
      rem_[i] = m >> e;
      val_[i] = pow2_val_[e];
    }
    for (std::uint64_t p : primes_) {
      if (p == 2) continue;
      if (p > hi) break;
      std::uint64_t m = ((lo + p - 1) / p) * p;
      for (; m <= hi; m += p) {
        const std::size_t i = static_cast<std::size_t>(m - lo);
        std::uint64_t r = rem_[i] / p;  // m is a multiple of p, rem keeps it
        unsigned e = 1;
        while (r % p == 0) {
          r /= p;
          ++e;
        }
        rem_[i] = r;
        val_[i] = checked_mul(val_[i],
                              e == 1 ? k : spec_.prime_power(p, e));
      }
    }
    SegmentResult res;
    std::size_t ck = 0;
    __int128 acc = 0;
    for (std::size_t i = 0; i < len; ++i) {
      std::int64_t v = val_[i];
      if (rem_[i] > 1) v = checked_mul(v, k);  // leftover prime > sqrt(x)
      acc += v;  // |v| <= int64 max and len < 2^32, so no i128 overflow
      while (ck < checkpoints.size() &&
             checkpoints[ck].position == lo + i) {
        res.partials.emplace_back(checkpoints[ck].out_index, acc);
        ++ck;
      }
    }
    res.total = acc;
    return res;
  }

 private:
  const MultiplicativeSpec& spec_;
  const std::vector<std::uint64_t>& primes_;
  std::vector<std::uint64_t> rem_;
  std::vector<std::int64_t> val_;
  std::vector<std::int64_t> pow2_val_;
  std::vector<char> pow2_ok_;
};

}  // namespace

std::vector<BigInt> segmented_sums(const MultiplicativeSpec& spec,
                                   std::span<const std::uint64_t> xs,
                                   const SegmentedOptions& opt) {
  if (xs.empty())
    throw std::invalid_argument("segmented_sums: empty checkpoint list");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || (i > 0 && xs[i] <= xs[i - 1]))
      throw std::invalid_argument(
          "segmented_sums: checkpoints must be strictly increasing and >= 1");
  }
  if (opt.segment_size < (std::uint64_t{1} << 10))
    throw std::invalid_argument("segmented_sums: segment_size must be >= 2^10");
  if (opt.segment_size > (std::uint64_t{1} << 31))
    throw std::invalid_argument("segmented_sums: segment_size must be <= 2^31");

  const std::uint64_t x = xs.back();
  const std::uint64_t seg = opt.segment_size;
  const std::size_t num_segments =
      static_cast<std::size_t>((x + seg - 1) / seg);
  const std::vector<std::uint64_t> primes = primes_up_to(isqrt(x));

  // Checkpoints grouped by segment index.
  std::vector<std::vector<Checkpoint>> per_segment(num_segments);
  for (std::size_t i = 0; i < xs.size(); ++i)
    per_segment[static_cast<std::size_t>((xs[i] - 1) / seg)].push_back(
        {xs[i], i});

  unsigned threads = opt.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, num_segments));

  std::vector<SegmentResult> results(num_segments);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned tid) {
    try {
      SegmentWorker worker(spec, primes, seg);
      for (;;) {
        const std::size_t s = next.fetch_add(1);
        if (s >= num_segments) break;
        const std::uint64_t lo = static_cast<std::uint64_t>(s) * seg + 1;
        const std::uint64_t hi = std::min(lo + seg - 1, x);
        results[s] = worker.run(lo, hi, per_segment[s]);
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };

  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Exact prefix accumulation in segment order.
  std::vector<BigInt> out(xs.size());
  BigInt running = 0;
  for (std::size_t s = 0; s < num_segments; ++s) {
    for (const auto& [idx, partial] : results[s].partials)
      out[idx] = running + bigint_from_i128(partial);
    running += bigint_from_i128(results[s].total);
  }
  return out;
}

BigInt segmented_sum(const MultiplicativeSpec& spec, std::uint64_t x,
                     const SegmentedOptions& opt) {
  const std::uint64_t xs[1] = {x};
  return segmented_sums(spec, xs, opt)[0];
}

BigInt tau_sum_by_divisors(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("tau_sum_by_divisors: x must be >= 1");
  unsigned __int128 acc = 0;
  for (std::uint64_t d = 1; d <= x; ++d) acc += x / d;
  return bigint_from_i128(static_cast<__int128>(acc));
}

}  // namespace divmom
