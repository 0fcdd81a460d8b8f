#pragma once

#include "pendmel/abelian.hpp"

#include <vector>

namespace pendmel {

struct VerifyOptions {
    int n_max = 6;
    int r_max = 4;
    int samples = 12;  // energies per region
    double tolerance = 1e-9;
    bool include_even = true;  // also check the rotary even-power integrals
    bool inject_sign_flip = false;  // negate every closed-form value (self-test)
};

struct VerifyEntry {
    Region region;
    int n;
    int power;  // r in I_{n,r}
    double max_relative_error;
    double worst_h;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    double max_relative_error = 0;
    bool pass = true;
};

/// Energies log-spaced over [0.1, 1.9] or [2.1, 50].
std::vector<double> verify_energies(Region region, int samples);

/// Closed forms of I_{n,2r+1} (both regions) and I_{n,2r} (rotary) against
/// the quadrature oracle. The error is relative to |I| unless the integral
/// cancels to below 1e-12 of its L1 norm, in which case the L1 norm is used.
VerifyReport verify_closed_forms(const VerifyOptions& options);

}  // namespace pendmel
