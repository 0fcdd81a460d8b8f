#include "pendmel/verify.hpp"

#include "pendmel/errors.hpp"
#include "pendmel/oracle.hpp"
#include "pendmel/parallel.hpp"

#include <cmath>

namespace pendmel {

std::vector<double> verify_energies(Region region, int samples)
{
    if (samples < 1)
        throw ArgumentError("need at least one sample energy");
    const double lo = is_rotary(region) ? 2.1 : 0.1;
    const double hi = is_rotary(region) ? 50.0 : 1.9;
    std::vector<double> hs;
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.5 : static_cast<double>(i) / (samples - 1);
        hs.push_back(lo * std::pow(hi / lo, t));
    }
    return hs;
}

VerifyReport verify_closed_forms(const VerifyOptions& options)
{
    if (options.n_max < 0 || options.r_max < 0)
        throw ArgumentError("n_max and r_max must be nonnegative");
    struct Job {
        Region region;
        int n;
        int power;
    };
    std::vector<Job> jobs;
    for (Region region : {Region::Oscillatory, Region::RotaryPlus}) {
        for (int n = 0; n <= options.n_max; ++n) {
            for (int r = 0; r <= options.r_max; ++r) {
                jobs.push_back({region, n, 2 * r + 1});
                if (options.include_even && is_rotary(region))
                    jobs.push_back({region, n, 2 * r});
            }
        }
    }

    VerifyReport report;
    report.entries.resize(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        const Job& job = jobs[k];
        const EllipticForm form = job.power % 2 == 1 ? build_I_odd(job.n, job.power / 2, job.region)
                                                     : build_I_even(job.n, job.power / 2, job.region);
        const FormEvaluator eval(form);
        VerifyEntry entry{job.region, job.n, job.power, 0, 0};
        for (double h : verify_energies(job.region, options.samples)) {
            double closed = eval(h);
            if (options.inject_sign_flip)
                closed = -closed;
            const auto quad = oracle::quad_I(job.n, job.power, job.region, h);
            double scale = std::abs(quad.value);
            if (scale < 1e-12 * quad.l1)
                scale = quad.l1;
            const double err = scale > 0 ? std::abs(closed - quad.value) / scale : std::abs(closed);
            if (err > entry.max_relative_error || std::isnan(err)) {
                entry.max_relative_error = err;
                entry.worst_h = h;
            }
        }
        report.entries[k] = entry;
    });
    for (const auto& e : report.entries) {
        report.max_relative_error = std::max(report.max_relative_error, e.max_relative_error);
        if (!(e.max_relative_error <= options.tolerance))
            report.pass = false;
    }
    return report;
}

}  // namespace pendmel
