#pragma once

// Frequency sweeps, CSV/plot-script emission and the self-check report
// behind the `besselq` command-line tool.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "besselq/qfactor.hpp"

namespace besselq::cli {

enum class Scale { linear, log };

struct FrequencyGrid {
    Scale scale = Scale::log;
    double min = 1e-4;
    double max = 1e5;
    int count = 181;

    // Throws DomainError unless 0 < min < max and count >= 2.
    void validate() const;
    // Strictly increasing; the end points are exactly min and max.
    std::vector<double> points() const;
};

struct SweepRecord {
    double omega = 0.0;
    double nu = 0.0;
    double q_inverse = 0.0;
    qfactor::Route route = qfactor::Route::kelvin;
    double est_rel_error = 0.0;
    double q_asymp_low = 0.0;
    double q_asymp_high = 0.0;
};

inline constexpr std::string_view kSweepHeader =
    "omega,nu,q_inverse,route,est_rel_error,q_asymp_low,q_asymp_high";

/// Scientific notation with 17 significant digits, independent of locale.
std::string format_number(double value);

/// One record per grid point, in grid order.
std::vector<SweepRecord> run_sweep(double nu, const FrequencyGrid& grid, const qfactor::QOptions& options = {});

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

/// Sweeps every nu in order and writes a single CSV file.
void write_sweep_file(const std::filesystem::path& path, std::span<const double> nus, const FrequencyGrid& grid,
                      const qfactor::QOptions& options = {});

struct FigureConfig {
    std::vector<double> nus = {-0.5, 0.0, 1.0, 2.0, 5.0};
    FrequencyGrid linear_grid{Scale::linear, 0.05, 20.0, 400};
    FrequencyGrid log_grid{Scale::log, 1e-4, 1e5, 181};
    // Asymptote comparisons, one panel per nu.
    std::vector<double> panel_nus = {0.0, 5.0};
    FrequencyGrid high_grid{Scale::log, 1e1, 1e7, 121};
    FrequencyGrid low_grid{Scale::log, 1e-4, 1e0, 81};
    qfactor::QOptions options{};
};

/// Writes fig1..fig4 as CSV plus a gnuplot script each; returns the paths.
std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, const FigureConfig& config = {});

struct CheckItem {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool passed() const;
    // nullptr when everything passed.
    const CheckItem* first_failure() const;
};

inline constexpr double kRouteAgreementBelow = 1e-9;
inline constexpr double kRouteAgreementAbove = 1e-8;
inline constexpr double kRayleighSneddonTol = 1e-6;
inline constexpr double kLaplaceConsistencyTol = 1e-6;
// Upper end of the reference grid used for the below-crossover route check.
inline constexpr double kReferenceCrossover = 324.0;

/// Route agreement, monotonicity, Rayleigh-Sneddon and Laplace-consistency
/// suites for each nu. The fg route runs under options.crossover, so a
/// crossover below the reference grid shows up as a failure.
CheckReport run_checks(std::span<const double> nus, const qfactor::QOptions& options = {});

void print_report(std::ostream& out, const CheckReport& report);

}  // namespace besselq::cli
