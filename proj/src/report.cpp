#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "orthospec/identities.hpp"

namespace orthospec {

long decimal_digits_for(long precision_bits) {
    // Enough digits that the printed decimal pins down the binary value again.
    return static_cast<long>(std::ceil(static_cast<double>(precision_bits) * 0.30102999566398120)) + 2;
}

std::string report_to_json(const VerificationReport& report) {
    const long digits = decimal_digits_for(report.precision_bits);
    nlohmann::json j;
    j["id"] = report.id;
    j["params"] = report.params;
    j["precision_bits"] = report.precision_bits;
    j["terms_used"] = report.terms_used;
    j["partial_sum"] = report.partial_sum.to_decimal(digits);
    j["rhs"] = report.rhs_value.to_decimal(digits);
    j["abs_error"] = report.abs_error.to_decimal(digits);
    j["tail_estimate"] = report.tail_estimate.to_decimal(digits);
    j["converged"] = report.converged;
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        VerificationReport report;
        report.precision_bits = j.at("precision_bits").get<long>();
        require_precision(report.precision_bits);
        report.id = j.at("id").get<std::string>();
        report.params = j.at("params").get<std::string>();
        report.terms_used = j.at("terms_used").get<std::vector<long>>();
        report.partial_sum = BigReal::of_string(j.at("partial_sum").get<std::string>(), report.precision_bits);
        report.rhs_value = BigReal::of_string(j.at("rhs").get<std::string>(), report.precision_bits);
        report.abs_error = BigReal::of_string(j.at("abs_error").get<std::string>(), report.precision_bits);
        report.tail_estimate =
            BigReal::of_string(j.at("tail_estimate").get<std::string>(), report.precision_bits);
        report.converged = j.at("converged").get<bool>();
        report.elapsed_ms = j.at("elapsed_ms").get<double>();
        return report;
    } catch (const nlohmann::json::exception& error) {
        throw std::invalid_argument(std::string("malformed verification report: ") + error.what());
    }
}

}  // namespace orthospec
