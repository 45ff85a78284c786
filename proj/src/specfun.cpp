#include "xih/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

namespace xih {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(complex s) {
    if (s.imag() != 0.0) return false;
    double r = s.real();
    return r <= 0.0 && r == std::floor(r);
}

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

complex gamma_lanczos_half_plane(complex s) {
    // valid for Re(s) >= 0.5
    complex acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (s - 1.0 + static_cast<double>(k));
    complex t = s + (kLanczosG - 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, s - 0.5) * std::exp(-t) * acc;
}

// Bernoulli numbers B_2 .. B_24 for the Euler-Maclaurin tail.
constexpr double kBernoulli2k[12] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

// Stieltjes constants for the expansion of zeta(s)(s-1) about s = 1.
constexpr double kStieltjes0 = 0.57721566490153286061;
constexpr double kStieltjes1 = -0.072815845483676724861;
constexpr double kStieltjes2 = -0.0096903631928723184845;
constexpr double kStieltjes3 = 0.0020538344203033458662;

complex zeta_euler_maclaurin(complex s, const Tolerances& tol) {
    int N = std::max(10, static_cast<int>(std::ceil(std::abs(s.imag()))));
    if (N + 24 > tol.max_terms)
        throw ConvergenceError("zeta_complex: max_terms too small for Euler-Maclaurin");
    KahanSumComplex direct;
    for (int k = 1; k < N; ++k) direct.add(std::exp(-s * std::log(static_cast<double>(k))));
    double dN = static_cast<double>(N);
    complex NmS = std::exp(-s * std::log(dN));   // N^{-s}
    complex acc = direct.value() + 0.5 * NmS + NmS * dN / (s - 1.0);
    // correction terms B_{2j}/(2j)! * N^{1-s-2j} * s(s+1)...(s+2j-2)
    complex rising = s;               // (s)_{2j-1}, built incrementally
    complex npow = NmS / dN;          // N^{-s-1}, then N^{-s-3}, ...
    double fact = 2.0;                // (2j)!
    for (int j = 1; j <= 12; ++j) {
        acc += (kBernoulli2k[j - 1] / fact) * npow * rising;
        if (j < 12) {
            rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
            npow /= dN * dN;
            fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        }
    }
    return acc;
}

}  // namespace

const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::EQ11: return "EQ11";
        case IdentityId::UPSILON: return "UPSILON";
        case IdentityId::DIRICHLET_U0: return "DIRICHLET_U0";
        case IdentityId::LAPLACE_CHAIN: return "LAPLACE_CHAIN";
        case IdentityId::RK_IDENTITY: return "RK_IDENTITY";
        case IdentityId::BOUNDARY_LIMIT: return "BOUNDARY_LIMIT";
        case IdentityId::HARMONICITY: return "HARMONICITY";
        case IdentityId::DUFFIN_POISSON: return "DUFFIN_POISSON";
    }
    return "UNKNOWN";
}

int worker_thread_count() {
    const char* env = std::getenv("XI_HARMONIC_THREADS");
    long v = 0;
    if (env && *env) v = std::strtol(env, nullptr, 10);
    if (v <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return static_cast<int>(v);
}

complex gamma_complex(complex s) {
    if (is_nonpositive_integer(s))
        throw PoleError("gamma_complex: pole at non-positive integer");
    complex result;
    if (s.real() >= 0.5) {
        result = gamma_lanczos_half_plane(s);
    } else {
        // reflection: Gamma(s) = pi / (sin(pi s) * Gamma(1 - s))
        complex sinpis = std::sin(kPi * s);
        result = kPi / (sinpis * gamma_lanczos_half_plane(1.0 - s));
    }
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw OverflowError("gamma_complex: result exceeds double range");
    return result;
}

complex zeta_complex(complex s, const Tolerances& tol) {
    if (s == complex(1.0, 0.0)) throw PoleError("zeta_complex: pole at s = 1");
    if (s.real() >= 0.5) return zeta_euler_maclaurin(s, tol);
    // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    complex one_minus = 1.0 - s;
    complex chi = std::pow(complex(2.0, 0.0), s) * std::pow(complex(kPi, 0.0), s - 1.0) *
                  std::sin(0.5 * kPi * s) * gamma_complex(one_minus);
    return chi * zeta_euler_maclaurin(one_minus, tol);
}

complex xi(complex s) {
    if (s.real() < 0.5) s = 1.0 - s;  // symmetric; evaluate on the stable side
    // xi(s) = (s-1) pi^{-s/2} Gamma(s/2 + 1) zeta(s), with zeta(s)(s-1)
    // expanded through the removable point at s = 1.
    complex zs_times_sm1;
    complex d = s - 1.0;
    if (std::abs(d) < 1e-3) {
        zs_times_sm1 = 1.0 + d * (kStieltjes0 + d * (-kStieltjes1 + d * (0.5 * kStieltjes2 +
                       d * (-kStieltjes3 / 6.0))));
    } else {
        zs_times_sm1 = zeta_complex(s) * d;
    }
    complex value = std::exp(-0.5 * s * std::log(kPi)) * gamma_complex(0.5 * s + 1.0) * zs_times_sm1;
    if (s.imag() == 0.0) value = complex(value.real(), 0.0);
    return value;
}

complex Xi(complex t) {
    // evenness enforced at the API level
    if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) t = -t;
    complex value = xi(complex(0.5, 0.0) + complex(0.0, 1.0) * t);
    if (t.imag() == 0.0) value = complex(value.real(), 0.0);
    return value;
}

double psi_theta(double x, const Tolerances& tol) {
    if (!(x > 0.0)) throw DomainError("psi_theta: requires x > 0");
    if (x < 1.0) {
        // 2 psi(x) + 1 = x^{-1/2} (2 psi(1/x) + 1)
        double inv = 1.0 / x;
        return 0.5 * ((2.0 * psi_theta(inv, tol) + 1.0) / std::sqrt(x) - 1.0);
    }
    KahanSum sum;
    for (int n = 1; n <= tol.max_terms; ++n) {
        double e = -kPi * static_cast<double>(n) * static_cast<double>(n) * x;
        if (e < -745.0) break;  // underflows to zero
        double term = std::exp(e);
        sum.add(term);
        if (term < 1e-20 * (sum.value() + 1e-300)) break;
    }
    return sum.value();
}

double theta_factor(double y) {
    double z = std::abs(y);
    if (z > 1400.0) throw OverflowError("theta_factor: argument beyond overflow guard");
    if (z >= 4.0) return std::exp(-0.5 * z);  // correction < e^{2} e^{-pi e^{8}}: below double
    return std::exp(-0.5 * z) - 2.0 * std::exp(0.5 * z) * psi_theta(std::exp(2.0 * z));
}

complex incomplete_gamma_upper(complex s, double x, const Tolerances& tol) {
    if (x < 0.0) throw DomainError("incomplete_gamma_upper: requires x >= 0");
    if (x == 0.0) return gamma_complex(s);
    if (x > std::abs(s) + 1.0) {
        // modified Lentz continued fraction for Gamma(s, x)
        const double tiny = 1e-300;
        complex b = complex(x, 0.0) + 1.0 - s;
        complex c = complex(1.0 / tiny, 0.0);
        complex d = 1.0 / b;
        complex hcf = d;
        int i = 1;
        for (; i <= tol.max_terms; ++i) {
            complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            complex delta = d * c;
            hcf *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        if (i > tol.max_terms)
            throw ConvergenceError("incomplete_gamma_upper: continued fraction stalled");
        return std::exp(-x + s * std::log(x)) * hcf;
    }
    // series for the lower function, then complement
    complex ap = s;
    complex del = 1.0 / s;
    complex sum = del;
    int i = 1;
    for (; i <= tol.max_terms; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    if (i > tol.max_terms) throw ConvergenceError("incomplete_gamma_upper: series stalled");
    complex lower = sum * std::exp(-x + s * std::log(x));
    return gamma_complex(s) - lower;
}

std::vector<int> mobius_sieve(std::int64_t N) {
    if (N < 1) throw DomainError("mobius_sieve: requires N >= 1");
    if (N > 100000000) throw CapacityError("mobius_sieve: N exceeds memory budget");
    std::vector<int> mu(static_cast<std::size_t>(N) + 1, 0);
    std::vector<char> composite(static_cast<std::size_t>(N) + 1, 0);
    std::vector<std::int64_t> primes;
    mu[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > N) break;
            composite[static_cast<std::size_t>(i * p)] = 1;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(i * p)] = -mu[static_cast<std::size_t>(i)];
        }
    }
    return mu;
}

namespace {

void check_squares_caps(int k, std::int64_t n) {
    if (k < 0 || n < 0) throw DomainError("sum_of_squares: requires k, n >= 0");
    if (k > 8) throw CapacityError("sum_of_squares: k exceeds cap 8");
    if (n > 1000000) throw CapacityError("sum_of_squares: n exceeds cap 1e6");
    // k-fold Cauchy products against a sqrt(n)-sparse factor cost ~k*n^1.5
    long double work = static_cast<long double>(k) * static_cast<long double>(n) *
                       std::sqrt(static_cast<long double>(n));
    if (work > 2e10L) throw CapacityError("sum_of_squares: work budget exceeded");
}

std::vector<std::int64_t> theta_power_table(const std::vector<std::int64_t>& base, int power,
                                            std::int64_t n_max) {
    std::size_t len = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::int64_t> acc(len, 0);
    acc[0] = 1;  // empty product
    std::vector<std::int64_t> next(len, 0);
    for (int p = 0; p < power; ++p) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t i = 0; i < len; ++i) {
            std::int64_t ai = acc[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j) {
                std::int64_t bj = base[j];
                if (bj == 0) continue;
                std::int64_t prod;
                if (__builtin_mul_overflow(ai, bj, &prod))
                    throw OverflowError("sum_of_squares: coefficient overflow");
                if (__builtin_add_overflow(next[i + j], prod, &next[i + j]))
                    throw OverflowError("sum_of_squares: coefficient overflow");
            }
        }
        acc.swap(next);
    }
    return acc;
}

}  // namespace

std::vector<std::int64_t> sum_of_squares_r_table(int k, std::int64_t n_max) {
    check_squares_caps(k, n_max);
    std::size_t len = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::int64_t> theta(len, 0);
    theta[0] = 1;
    for (std::int64_t a = 1; a * a <= n_max; ++a) theta[static_cast<std::size_t>(a * a)] = 2;
    return theta_power_table(theta, k, n_max);
}

std::vector<std::int64_t> sum_of_squares_rprime_table(int l, std::int64_t n_max) {
    check_squares_caps(l, n_max);
    std::size_t len = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::int64_t> theta(len, 0);
    for (std::int64_t a = 1; a * a <= n_max; ++a) theta[static_cast<std::size_t>(a * a)] = 1;
    return theta_power_table(theta, l, n_max);
}

std::int64_t sum_of_squares_r(int k, std::int64_t n) {
    return sum_of_squares_r_table(k, n)[static_cast<std::size_t>(n)];
}

std::int64_t sum_of_squares_rprime(int l, std::int64_t n) {
    return sum_of_squares_rprime_table(l, n)[static_cast<std::size_t>(n)];
}

}  // namespace xih
