#pragma once

#include <cstdint>
#include <string>

#include "mbqc/engine.hpp"
#include "mbqc/thermo.hpp"
#include "mbqc/verify.hpp"

namespace mbqc {

// Deterministic JSON for every CLI report: schema tag, tool version, seed, and
// the tolerances actually used are always embedded. Equal inputs produce
// byte-identical output.

std::string run_report_json(const RunResult& result, const MeasurementPattern& pattern,
                            std::uint64_t seed);
std::string enumerate_report_json(const TrajectoryEnsemble& ensemble, std::uint64_t seed);
std::string no_signaling_report_json(const verify::NoSignalingReport& report,
                                     std::uint64_t seed);
std::string otp_report_json(const verify::OtpReport& report);
std::string decomposition_report_json(const verify::DecompositionReport& report,
                                      std::uint64_t seed);
std::string heat_report_json(const thermo::HeatReport& report, std::uint64_t seed);

}  // namespace mbqc
