#pragma once

#include "pendmel/abelian.hpp"
#include "pendmel/fourier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pendmel {

/// Odd powers of y with nonzero even coefficient part. Even powers and
/// sine terms integrate to zero over the closed ovals.
std::vector<PowerTerm> reduce_oscillatory(const Perturbation& p);

struct RotaryReduction {
    std::vector<PowerTerm> even;
    std::vector<PowerTerm> odd;
};

/// Sine terms integrate to zero over [-pi, pi]; both parities survive.
RotaryReduction reduce_rotary(const Perturbation& p);

/// First-order Melnikov function of the region as a closed form.
///
/// Constants: the oval integral is 4 * 2^(s/2) * I_{n,s} per term, the
/// rotary one 2 * 2^(s/2) * I_{n,s}; M- takes (-1)^s times the M+ terms.
EllipticForm build_melnikov(const Perturbation& p, Region region);

enum class BoundKind { Finite, Center, NotApplicable };

struct Bound {
    BoundKind kind = BoundKind::NotApplicable;
    int value = 0;
    std::string source;

    bool finite() const { return kind == BoundKind::Finite; }
};

/// Rotary: 2n + 2m + floor(m/2) + 2. Oscillatory: 2n + 2 floor((m-1)/2) + 1.
int bound_theorem_a(int n, int m, Region region);

/// o(s1, s2): number of odd integers in [s1, s2] minus one.
int odd_span(int s1, int s2);

/// Oscillatory bound for powers s1..s2 of y: Center when no odd power is
/// present, n when s1 = s2 is odd, n + 2r when 0 <= r < (l + 3)/2 with
/// r = o(s1, s2) and l the first odd integer in [s1, s2].
Bound bound_theorem_b(int n, int s1, int s2);

enum class TheoremCVariant { Full, EvenOnly, OddOnly };

/// Rotary bound for one odd power plus even powers y^0..y^(2r).
int bound_theorem_c(int n, int r, TheoremCVariant variant);

/// Tightest of the bounds whose hypotheses the (reduced) perturbation meets.
Bound applicable_bound(const Perturbation& p, Region region);

struct Zero {
    double h;
    int multiplicity;
};

struct ZeroReport {
    Region region = Region::Oscillatory;
    std::vector<Zero> zeros;
    int count = 0;         // with multiplicity
    int simple_count = 0;  // sign changes only
    std::optional<Bound> bound;
    double h_min = 0;
    double h_max = 0;
    int grid = 0;
    double tolerance = 0;
};

inline constexpr double default_delta = 1e-4;
inline constexpr double default_h_max = 50;
inline constexpr int default_grid = 400;
inline constexpr double refine_tolerance = 1e-12;

/// Grid points for a scan of [h_min, h_max]: uniform in log(h / (2 - h)) on
/// the oscillatory region and in log(h - 2) on the rotary ones.
std::vector<double> scan_grid(Region region, double h_min, double h_max, int grid);

/// Zeros of f on [h_min, h_max]. Sign changes are refined by safeguarded
/// Newton; a dip of |f| below 1e-10 of the sampled maximum without a sign
/// change is reported as a double zero. If a bound is given, a count above
/// it raises BoundViolationError.
ZeroReport count_zeros(const EllipticForm& f, double h_min, double h_max, int grid = default_grid,
                       const std::optional<Bound>& bound = std::nullopt);

struct ScanOptions {
    double delta = default_delta;
    double h_max = default_h_max;
    int grid = default_grid;
};

/// Default scan interval of a region.
std::pair<double, double> scan_interval(Region region, const ScanOptions& options);

/// Melnikov function, applicable bound and zero report for one region.
/// An identically zero function yields a report with no zeros; callers
/// distinguish it through build_melnikov(p, region).is_zero().
ZeroReport analyze(const Perturbation& p, Region region, const ScanOptions& options = {});

/// Simple-zero counts [c-; c0; c+] of a perturbation.
struct Configuration {
    int minus = 0;
    int zero = 0;
    int plus = 0;
    Bound bound_minus;
    Bound bound_zero;
    Bound bound_plus;

    friend bool operator==(const Configuration& a, const Configuration& b)
    {
        return a.minus == b.minus && a.zero == b.zero && a.plus == b.plus;
    }
    std::string label() const;
};

Configuration configuration_analysis(const Perturbation& p, const ScanOptions& options = {});

/// Sign-change count of sampled values, ignoring exact zeros.
int count_sign_changes(const std::vector<Wide>& values);

struct Monotonicity {
    bool decreasing = true;
    double max_difference = 0;  // largest forward difference seen
    int samples = 0;
};

/// Q(h) = L1(h) / L0(h) sampled on the scan grid of the region.
Monotonicity quotient_monotonicity(Region region, int samples, const ScanOptions& options = {});

}  // namespace pendmel
