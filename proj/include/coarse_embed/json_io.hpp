#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "coarse_embed/embedding.hpp"
#include "coarse_embed/exponent_schedule.hpp"

namespace coarse_embed {

using Json = nlohmann::ordered_json;

/// Serializes with insertion-ordered keys, two-space indentation and every
/// floating-point number printed with 17 significant digits ("%.17g"), so
/// identical inputs give byte-identical text. Non-finite numbers become null.
std::string dump_pinned(const Json& value);

/// {"exponents":[...], "provenance":[{"alpha":..,"beta":..,"eps":..}]};
/// an infinite exponent is written as the string "infinity".
Json to_json(const ExponentSchedule& schedule);
ExponentSchedule schedule_from_json(const Json& value);

/// {"depth", "upper_constant", "upper_constant_full", "samples", "certificates"}
Json embed_report_json(const DistortionProfile& profile, const CertificationReport& report);

/// Header "r,rho_minus,rho_plus,pairs", one row per sample.
void write_samples_csv(std::ostream& out, const DistortionProfile& profile);

}  // namespace coarse_embed
