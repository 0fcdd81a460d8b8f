#pragma once

#include "pendmel/fourier.hpp"
#include "pendmel/melnikov.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pendmel {

/// y cos(n x)
Perturbation morozov(int n);
/// a - (1 + gamma cos x) y
Perturbation josephson(const Rational& a, const Rational& gamma);
/// (a1 + c1 cos x) y + (a3 + c3 cos x) y^3, the part of a cubic-in-y,
/// first-degree Fourier perturbation that survives on the ovals.
Perturbation eq5(const Rational& a1, const Rational& c1, const Rational& a3, const Rational& c3);
/// (a0 + a1 cos x) y
Perturbation ex1(const Rational& a0, const Rational& a1);
/// a0 + a1 y^2 + a2 y^(2r+1)
Perturbation ex2(const Rational& a0, const Rational& a1, const Rational& a2, int r);
/// cos((n-1)x) / ((2n-1) K(n-1)) y + 2n cos(n x) / K(n) y^3, which makes
/// the lifted polynomial R identically 2n + 1.
Perturbation sharp_r1(int n);

/// A preset family: integer structure parameters and real coefficients in
/// which the perturbation is linear.
struct PresetFamily {
    std::string name;
    std::vector<std::string> structure;  // e.g. {"n"} or {"r"}
    std::vector<std::string> coefficients;
    std::function<Perturbation(const std::vector<int>&, const std::vector<Rational>&)> make;
};

const std::vector<PresetFamily>& preset_families();
const PresetFamily& preset_family(std::string_view name);

/// "name" or "name:v1,v2,..." with structure values first, then
/// coefficients; missing values take the family defaults.
Perturbation preset_from_spec(std::string_view spec);

/// Directory holding the shipped preset JSON files.
std::string preset_directory();

struct SweepPoint {
    std::vector<Rational> coefficients;
    Configuration configuration;
};

struct SweepResult {
    std::string preset;
    std::vector<int> structure;
    std::vector<SweepPoint> points;  // in input order
    std::map<std::string, int> realized;  // label -> number of points
};

/// Configurations [c-; c0; c+] over coefficient vectors. The family is
/// linear in its coefficients, so each basis Melnikov function is sampled
/// once on the scan grids and every point reduces to a weighted sum;
/// counts are sign changes on those grids.
SweepResult sweep_configurations(const PresetFamily& family, const std::vector<int>& structure,
                                 const std::vector<std::vector<Rational>>& points, const ScanOptions& options);

/// grid^k points of [-1, 1]^k.
std::vector<std::vector<Rational>> grid_points(int k, int grid);
/// draws points uniformly from [-1, 1]^k, rounded to multiples of 2^-20.
std::vector<std::vector<Rational>> random_points(int k, int draws, std::uint64_t seed);

struct Eq5Search {
    bool found = false;
    int draws = 0;
    std::vector<Rational> coefficients;  // a1, c1, a3, c3
    ZeroReport report;
};

/// Looks for eq5 coefficients whose oscillatory Melnikov function has at
/// least three simple zeros: each draw picks three nodes in (0, 2) and
/// takes the combination of the four basis functions vanishing there.
Eq5Search search_eq5(int max_draws, std::uint64_t seed, const ScanOptions& options = {});

}  // namespace pendmel
