#include <charconv>
#include <ostream>
#include <system_error>

#include "besselq/cli.hpp"

namespace besselq::cli {

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 16);
    if (res.ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records)
{
    out << kSweepHeader << '\n';
    for (const SweepRecord& r : records) {
        out << format_number(r.omega) << ',' << format_number(r.nu) << ',' << format_number(r.q_inverse) << ','
            << qfactor::to_string(r.route) << ',' << format_number(r.est_rel_error) << ','
            << format_number(r.q_asymp_low) << ',' << format_number(r.q_asymp_high) << '\n';
    }
}

}  // namespace besselq::cli
