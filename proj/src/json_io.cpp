#include "coarse_embed/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

namespace {

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void dump_into(const Json& value, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(it.key()).dump();
        out += ": ";
        dump_into(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        dump_into(item, out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string dump_pinned(const Json& value) {
  std::string out;
  dump_into(value, out, 0);
  out += '\n';
  return out;
}

Json to_json(const ExponentSchedule& schedule) {
  Json exponents = Json::array();
  for (const Exponent& p : schedule.exponents()) {
    if (p.is_infinite()) {
      exponents.push_back("infinity");
    } else {
      exponents.push_back(p.value());
    }
  }
  Json provenance = Json::array();
  for (const ScheduleProvenance& prov : schedule.provenance()) {
    provenance.push_back({{"alpha", prov.alpha}, {"beta", prov.beta}, {"eps", prov.eps}});
  }
  return Json{{"exponents", std::move(exponents)}, {"provenance", std::move(provenance)}};
}

ExponentSchedule schedule_from_json(const Json& value) {
  try {
    std::vector<Exponent> exponents;
    for (const Json& p : value.at("exponents")) {
      if (p.is_string()) {
        if (p.get<std::string>() != "infinity") {
          throw Error(ErrorCode::ParseError, "exponent strings must be \"infinity\"");
        }
        exponents.push_back(Exponent::infinity());
      } else {
        exponents.emplace_back(p.get<double>());
      }
    }
    std::vector<ScheduleProvenance> provenance;
    for (const Json& prov : value.at("provenance")) {
      provenance.push_back(
          {prov.at("alpha").get<double>(), prov.at("beta").get<double>(), prov.at("eps").get<double>()});
    }
    return ExponentSchedule(std::move(exponents), std::move(provenance));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed schedule JSON: ") + e.what());
  }
}

Json embed_report_json(const DistortionProfile& profile, const CertificationReport& report) {
  Json samples = Json::array();
  for (const DistortionSample& s : profile.samples) {
    samples.push_back({{"r", s.r}, {"rho_minus", s.rho_minus}, {"rho_plus", s.rho_plus},
                       {"pairs", s.pairs}});
  }
  Json lower = Json::array();
  for (const LowerBoundCertificate& c : report.lower) {
    lower.push_back({{"R", c.radius}, {"threshold", c.threshold}, {"ok", c.ok}});
  }
  Json certificates{{"schedule", report.schedule},
                    {"upper", report.upper && report.upper_full},
                    {"lower", std::move(lower)},
                    {"injective", report.injective}};
  return Json{{"depth", profile.depth},
              {"upper_constant", profile.upper_constant},
              {"upper_constant_full", profile.upper_constant_full},
              {"samples", std::move(samples)},
              {"certificates", std::move(certificates)}};
}

void write_samples_csv(std::ostream& out, const DistortionProfile& profile) {
  out << "r,rho_minus,rho_plus,pairs\n";
  for (const DistortionSample& s : profile.samples) {
    out << format_double(s.r) << ',' << format_double(s.rho_minus) << ','
        << format_double(s.rho_plus) << ',' << s.pairs << '\n';
  }
}

}  // namespace coarse_embed
