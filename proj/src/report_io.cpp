#include "fibroot/report_io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fibroot {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string margin_str(const std::optional<double>& m) {
    if (!m) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *m);
    return buf;
}

std::string witness_str(const std::vector<int>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(w[i]);
    }
    return out;
}

ordered_json result_to_json(const ClaimResult& r) {
    ordered_json j;
    j["k"] = r.k;
    j["claim"] = claim_name(r.claim);
    j["status"] = status_name(r.status);
    if (r.margin)
        j["margin"] = *r.margin;
    else
        j["margin"] = nullptr;
    j["witness"] = r.witness;
    j["bits_used"] = r.bits_used;
    return j;
}

ClaimResult result_from_json(const ordered_json& j) {
    ClaimResult r{};
    r.k = j.at("k").get<int>();
    auto claim = claim_from_name(j.at("claim").get<std::string>());
    if (!claim) throw std::runtime_error("unknown claim name in report");
    r.claim = *claim;
    auto status = status_from_name(j.at("status").get<std::string>());
    if (!status) throw std::runtime_error("unknown status name in report");
    r.status = *status;
    if (!j.at("margin").is_null()) r.margin = j.at("margin").get<double>();
    r.witness = j.at("witness").get<std::vector<int>>();
    r.bits_used = j.at("bits_used").get<long>();
    return r;
}

std::string report_json(const Report& report) {
    ordered_json j;
    j["schema"] = "fibroot-report/1";
    ordered_json cfg;
    cfg["k_min"] = report.config.k_min;
    cfg["k_max"] = report.config.k_max;
    cfg["bits"] = report.config.bits;
    cfg["target_radius"] = report.config.target_radius;
    cfg["max_escalations"] = report.config.max_escalations;
    cfg["parallel"] = report.config.parallel;
    cfg["version"] = report.config.version;
    j["config"] = std::move(cfg);
    ordered_json rows = ordered_json::array();
    for (const ClaimResult& r : report.results)
        rows.push_back(result_to_json(r));
    j["results"] = std::move(rows);
    ordered_json worst;
    for (int i = 0; i < kNumClaims; ++i) {
        const auto& m =
            report.worst_margin_per_claim[static_cast<size_t>(i)];
        if (m)
            worst[claim_name(static_cast<ClaimId>(i))] = *m;
        else
            worst[claim_name(static_cast<ClaimId>(i))] = nullptr;
    }
    ordered_json summary;
    summary["worst_margin_per_claim"] = std::move(worst);
    summary["verdict"] = status_name(report.verdict);
    j["summary"] = std::move(summary);
    j["runtime_seconds"] = report.runtime_seconds;
    return j.dump(2) + "\n";
}

std::string report_csv(const Report& report) {
    std::string out = "k,claim,status,margin,witness,bits_used\n";
    for (const ClaimResult& r : report.results) {
        out += std::to_string(r.k);
        out += ',';
        out += claim_name(r.claim);
        out += ',';
        out += status_name(r.status);
        out += ',';
        out += margin_str(r.margin);
        out += ',';
        out += witness_str(r.witness);
        out += ',';
        out += std::to_string(r.bits_used);
        out += '\n';
    }
    return out;
}

std::string report_human(const Report& report) {
    std::ostringstream os;
    char line[160];
    os << "verification report (toolkit " << report.config.version << ")\n";
    std::snprintf(line, sizeof line,
                  "k range %d..%d | bits %ld | target radius %g | "
                  "max escalations %d | parallel %d\n",
                  report.config.k_min, report.config.k_max,
                  report.config.bits, report.config.target_radius,
                  report.config.max_escalations, report.config.parallel);
    os << line;
    std::snprintf(line, sizeof line, "%5s  %-8s  %-13s  %-13s  %-7s  %s\n",
                  "k", "claim", "status", "margin", "witness", "bits");
    os << line;
    for (const ClaimResult& r : report.results) {
        std::string m = "-";
        if (r.margin) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", *r.margin);
            m = buf;
        }
        std::string w = r.witness.empty() ? "-" : witness_str(r.witness);
        std::snprintf(line, sizeof line, "%5d  %-8s  %-13s  %-13s  %-7s  %ld\n",
                      r.k, claim_name(r.claim), status_name(r.status),
                      m.c_str(), w.c_str(), r.bits_used);
        os << line;
    }
    os << "worst margins:";
    for (int i = 0; i < kNumClaims; ++i) {
        const auto& m =
            report.worst_margin_per_claim[static_cast<size_t>(i)];
        if (m) {
            std::snprintf(line, sizeof line, " %s=%.3g",
                          claim_name(static_cast<ClaimId>(i)), *m);
            os << line;
        }
    }
    os << "\nverdict: " << status_name(report.verdict) << "\n";
    std::snprintf(line, sizeof line, "runtime: %.3f s\n",
                  report.runtime_seconds);
    os << line;
    return os.str();
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "human") return OutputFormat::human;
    return std::nullopt;
}

std::string serialize_report(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            return report_json(report);
        case OutputFormat::csv:
            return report_csv(report);
        case OutputFormat::human:
            return report_human(report);
    }
    return {};
}

Report parse_report_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error(std::string("malformed report JSON: ") +
                                 e.what());
    }
    if (!j.contains("schema") ||
        j.at("schema").get<std::string>() != "fibroot-report/1")
        throw std::runtime_error("unsupported report schema");
    Report report;
    const auto& cfg = j.at("config");
    report.config.k_min = cfg.at("k_min").get<int>();
    report.config.k_max = cfg.at("k_max").get<int>();
    report.config.bits = cfg.at("bits").get<long>();
    report.config.target_radius = cfg.at("target_radius").get<double>();
    report.config.max_escalations = cfg.at("max_escalations").get<int>();
    report.config.parallel = cfg.at("parallel").get<int>();
    report.config.version = cfg.at("version").get<std::string>();
    for (const auto& row : j.at("results"))
        report.results.push_back(result_from_json(row));
    const auto& worst = j.at("summary").at("worst_margin_per_claim");
    for (int i = 0; i < kNumClaims; ++i) {
        const char* name = claim_name(static_cast<ClaimId>(i));
        if (worst.contains(name) && !worst.at(name).is_null())
            report.worst_margin_per_claim[static_cast<size_t>(i)] =
                worst.at(name).get<double>();
    }
    auto verdict =
        status_from_name(j.at("summary").at("verdict").get<std::string>());
    if (!verdict) throw std::runtime_error("unknown verdict in report");
    report.verdict = *verdict;
    report.runtime_seconds = j.at("runtime_seconds").get<double>();
    return report;
}

std::string serialize_roots(const RootSet& rs, OutputFormat format) {
    const int digits =
        static_cast<int>(std::ceil(
            static_cast<double>(rs.precision_used.working_bits) * 0.3010)) +
        2;
    auto row_strings = [&](const RootBall& r) {
        return std::array<std::string, 8>{
            r.value.re().str(digits),  r.value.im().str(digits),
            r.value.rad().str(digits), r.modulus.lo().str(digits),
            r.modulus.hi().str(digits), r.argument.lo().str(digits),
            r.argument.hi().str(digits), std::string(root_kind_name(r.kind))};
    };
    if (format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            const RootBall& r = rs.roots[i];
            auto s = row_strings(r);
            ordered_json j;
            j["k"] = rs.k.k;
            j["index"] = static_cast<int>(i);
            j["sector_h"] = r.sector_h;
            j["kind"] = s[7];
            j["mid_re"] = s[0];
            j["mid_im"] = s[1];
            j["radius"] = s[2];
            j["modulus_lo"] = s[3];
            j["modulus_hi"] = s[4];
            j["arg_lo"] = s[5];
            j["arg_hi"] = s[6];
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    std::string out;
    const bool human = format == OutputFormat::human;
    if (human) {
        out = "roots of the degree-" + std::to_string(rs.k.k) +
              " family member (" +
              std::to_string(rs.precision_used.working_bits) +
              " bits, radius column certifies enclosure)\n";
    }
    out +=
        "k,index,sector_h,kind,mid_re,mid_im,radius,modulus_lo,modulus_hi,"
        "arg_lo,arg_hi\n";
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        const RootBall& r = rs.roots[i];
        auto s = row_strings(r);
        out += std::to_string(rs.k.k);
        out += ',';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(r.sector_h);
        out += ',';
        out += s[7];
        for (int f = 0; f < 7; ++f) {
            out += ',';
            out += s[static_cast<size_t>(f)];
        }
        out += '\n';
    }
    return out;
}

}  // namespace fibroot
