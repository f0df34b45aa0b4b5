#include "walshlab/report.hpp"

#include <cstdio>
#include <numeric>

namespace walshlab {

std::string mask_bits(uint64_t mask, int n) {
    std::string out(n, '0');
    for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1) out[n - 1 - j] = '1';
    }
    return out;
}

std::string spectrum_dump_text(const WalshSpectrum& s) {
    std::string out;
    for (uint64_t omega = 0; omega < s.size(); ++omega) {
        out += mask_bits(omega, s.n());
        out += ' ';
        out += std::to_string(s[omega]);
        out += '\n';
    }
    return out;
}

std::string distribution_dump_text(const MeasurementDistribution& d) {
    std::string out;
    char buf[64];
    for (uint64_t z = 0; z < d.size(); ++z) {
        const uint64_t num = d.numerator(z);
        const uint64_t den = d.denominator();
        const uint64_t g = std::gcd(num, den);
        out += mask_bits(z, d.n());
        out += ' ';
        out += std::to_string(num / (g ? g : 1));
        out += '/';
        out += std::to_string(den / (g ? g : 1));
        std::snprintf(buf, sizeof(buf), " %.12g", d.probability(z));
        out += buf;
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json analytics_json(const BooleanFunction& f, const WalshSpectrum& s) {
    nlohmann::ordered_json j;
    j["n"] = f.n();
    j["weight"] = f.weight();
    j["balanced"] = f.is_balanced();
    j["nonlinearity"] = s.nonlinearity();
    const auto resiliency = s.resiliency_order();
    if (resiliency) {
        j["resiliency"] = *resiliency;
    } else {
        j["resiliency"] = nullptr;
    }
    j["class"] = s.classify().to_string();
    const auto peak = s.max_correlation();
    j["max_correlation"] = {
        {"mask", peak.mask},
        {"bits", mask_bits(peak.mask, s.n())},
        {"value", peak.value},
    };
    return j;
}

std::string anf_text(const AnfPolynomial& p) {
    const auto masks = p.monomials();
    if (masks.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < masks.size(); ++i) {
        if (i) out += " + ";
        if (masks[i] == 0) {
            out += '1';
            continue;
        }
        for (int j = 0; j < p.n(); ++j) {
            if ((masks[i] >> j) & 1) {
                out += 'x';
                out += std::to_string(j + 1);
            }
        }
    }
    return out;
}

nlohmann::ordered_json anf_json(const AnfPolynomial& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n();
    j["degree"] = p.degree();
    j["monomials"] = p.monomials();
    j["anf"] = anf_text(p);
    return j;
}

}  // namespace walshlab
