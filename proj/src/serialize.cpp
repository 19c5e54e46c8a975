#include "layered_cheb/serialize.hpp"

#include <sstream>

namespace layered_cheb {

nlohmann::json to_json(const std::vector<BigInt>& values) {
    auto out = nlohmann::json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

nlohmann::json to_json(const IntPolynomial& poly) { return to_json(poly.coefficients()); }

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json ranges = nlohmann::json::array();
    for (const auto& r : report.ranges) {
        ranges.push_back({{"name", r.name}, {"lo", r.lo}, {"hi", r.hi}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        nlohmann::json item{{"parameters", f.parameters}, {"expected", f.expected}, {"actual", f.actual}};
        if (f.first_offending_n) item["first_offending_n"] = *f.first_offending_n;
        failures.push_back(std::move(item));
    }
    return {
        {"statement", report.statement},
        {"detail", report.detail},
        {"ranges", std::move(ranges)},
        {"cases", report.cases},
        {"failures", std::move(failures)},
        {"status", to_string(report.status())},
    };
}

std::string series_csv(const std::vector<BigInt>& values) {
    std::string out = "n,f_n\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
        out += std::to_string(n) + "," + values[n].str() + "\n";
    }
    return out;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    std::string status = to_string(report.status());
    for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << status << "  " << report.statement << "  cases=" << report.cases;
    if (!report.ranges.empty()) {
        out << "  ranges=";
        for (std::size_t i = 0; i < report.ranges.size(); ++i) {
            const auto& r = report.ranges[i];
            if (i) out << ",";
            out << r.name << "[" << r.lo << ".." << r.hi << "]";
        }
    }
    if (!report.detail.empty()) out << "  (" << report.detail << ")";
    out << "\n";
    for (const auto& f : report.failures) {
        out << "    " << f.parameters << ": expected " << f.expected << ", got " << f.actual;
        if (f.first_offending_n) out << " [first offending n=" << *f.first_offending_n << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace layered_cheb
