#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xih {

using complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error hierarchy. Every throwing path in the library uses one of these.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error { using Error::Error; };
// Evaluation requested exactly at a pole.
struct PoleError : Error { using Error::Error; };
// Result (or a mandatory intermediate) exceeds double range.
struct OverflowError : Error { using Error::Error; };
// Iteration/refinement budget exhausted before reaching the tolerance.
struct ConvergenceError : Error { using Error::Error; };
// Work or memory cap exceeded (node budgets, sieve sizes, table sizes).
struct CapacityError : Error { using Error::Error; };
// A series was evaluated in a parameter region where it diverges.
struct DivergenceError : Error { using Error::Error; };
// Regularized summation methods disagree beyond the allowed spread.
struct InstabilityError : Error { using Error::Error; };
// File output failed.
struct IoError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Shared small value types.
// ---------------------------------------------------------------------------

struct Tolerances {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_terms = 100000;
    int max_refinement_depth = 40;

    void validate() const {
        constexpr double eps8 = 8.0 * 2.220446049250313e-16;
        if (!(rel_tol >= eps8)) throw DomainError("Tolerances: rel_tol below 8*epsilon");
        if (!(abs_tol > 0.0)) throw DomainError("Tolerances: abs_tol must be > 0");
        if (max_terms < 1) throw DomainError("Tolerances: max_terms must be >= 1");
        if (max_refinement_depth < 1) throw DomainError("Tolerances: max_refinement_depth must be >= 1");
    }
};

// Exponential envelope |f(t)| <= scale * e^{-rate * t}. A non-positive rate is
// meaningful only as a growth declaration handed to laplace_transform, which
// combines it with Re(s); the integrators themselves demand rate > 0.
struct DecayHint {
    double rate = 1.0;
    double scale = 1.0;
};

struct QuadResult {
    complex value{0.0, 0.0};
    double err_estimate = 0.0;   // claimed upper bound on |true - value|
    std::int64_t n_evals = 0;
    double truncation_point = 0.0;

    double real_value() const { return value.real(); }
};

enum class IdentityId {
    EQ11,
    UPSILON,
    DIRICHLET_U0,
    LAPLACE_CHAIN,
    RK_IDENTITY,
    BOUNDARY_LIMIT,
    HARMONICITY,
    DUFFIN_POISSON,
};

const char* to_string(IdentityId id);

struct VerificationReport {
    IdentityId identity_id = IdentityId::EQ11;
    // Ordered (name, value) pairs; complex inputs appear as name_re / name_im.
    std::vector<std::pair<std::string, double>> inputs;
    complex lhs{0.0, 0.0};
    complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::string variant_notes;
    std::int64_t n_evals = 0;
};

// Cosine-kernel convention for the half-plane series: PLAIN pairs the series
// with cos(x t) closed forms, TWO_PI with cos(2 pi x t).
enum class Convention { PLAIN, TWO_PI };

enum class SumMethod { PARTIAL, ABEL, CESARO };

struct SummationScheme {
    SumMethod method = SumMethod::ABEL;
    int M_max = 200;   // outer (Moebius) index cap
    int N_max = 400;   // inner index cap
    std::vector<double> abel_radii = {0.90, 0.95, 0.975, 0.99};

    void validate() const {
        if (M_max < 8) throw DomainError("SummationScheme: M_max must be >= 8");
        if (N_max < 8) throw DomainError("SummationScheme: N_max must be >= 8");
        if (abel_radii.empty()) throw DomainError("SummationScheme: abel_radii empty");
        double prev = 0.0;
        for (double r : abel_radii) {
            if (!(r > prev && r < 1.0))
                throw DomainError("SummationScheme: abel_radii must increase strictly within (0,1)");
            prev = r;
        }
    }
};

struct ZeroEntry {
    double gamma = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct ZerosTable {
    std::vector<ZeroEntry> entries;
};

// ---------------------------------------------------------------------------
// Compensated summation, used by every series in the library so that results
// are reproducible to the last bit regardless of term count.
// ---------------------------------------------------------------------------

class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class KahanSumComplex {
  public:
    void add(complex z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    complex value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_;
    KahanSum im_;
};

// Number of worker threads requested through XI_HARMONIC_THREADS
// (0 or unset = hardware concurrency).
int worker_thread_count();

// Applies fn to 0..count-1, possibly in parallel, storing results by index so
// output order never depends on the thread count.
template <class T, class Fn>
std::vector<T> indexed_map(std::size_t count, Fn&& fn);

}  // namespace xih

// ---------------------------------------------------------------------------
// indexed_map implementation (header-only: templated over the result type).
// ---------------------------------------------------------------------------

#include <atomic>
#include <exception>
#include <thread>

namespace xih {

template <class T, class Fn>
std::vector<T> indexed_map(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    if (count == 0) return out;
    int workers = worker_thread_count();
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto body = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (failed.load() && first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace xih
