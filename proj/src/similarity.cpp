#include "hsc/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hsc {

void SimilarityCurve::validate() const {
    if (symbols_per_word <= 0)
        throw std::invalid_argument("curve: k must be a positive integer");
    if (knots.size() < 2) throw std::invalid_argument("curve: need at least two knots");
    double max_sim = 0.0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& [snr, sim] = knots[i];
        if (!(sim > 0.0) || sim > 1.0) {
            std::ostringstream msg;
            msg << "curve: knot " << i << " similarity " << sim << " outside (0, 1]";
            throw std::invalid_argument(msg.str());
        }
        if (i > 0) {
            if (!(snr > knots[i - 1].first)) {
                std::ostringstream msg;
                msg << "curve: knot " << i << " snr " << snr
                    << " dB does not increase past " << knots[i - 1].first << " dB";
                throw std::invalid_argument(msg.str());
            }
            if (sim < knots[i - 1].second) {
                std::ostringstream msg;
                msg << "curve: knot " << i << " similarity " << sim
                    << " decreases below " << knots[i - 1].second;
                throw std::invalid_argument(msg.str());
            }
        }
        max_sim = std::max(max_sim, sim);
    }
    if (std::abs(max_sim - saturation) > 1e-12)
        throw std::invalid_argument("curve: saturation must equal the largest knot similarity");
}

double similarity_at(const SimilarityCurve& curve, double snr_db) {
    const auto& k = curve.knots;
    if (snr_db <= k.front().first) return k.front().second;
    if (snr_db >= k.back().first) return k.back().second;
    auto hi = std::upper_bound(k.begin(), k.end(), snr_db,
                               [](double x, const auto& p) { return x < p.first; });
    auto lo = hi - 1;
    const double t = (snr_db - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

std::optional<double> required_snr(const SimilarityCurve& curve, double threshold) {
    if (!(threshold > 0.0)) throw std::domain_error("threshold must be positive");
    if (threshold > curve.saturation) return std::nullopt;
    double lo = curve.knots.front().first;
    double hi = curve.knots.back().first;
    if (similarity_at(curve, lo) >= threshold) return lo;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (similarity_at(curve, mid) >= threshold ? hi : lo) = mid;
    }
    return hi;
}

SubcarrierThreshold subcarrier_threshold(const std::vector<double>& thresholds,
                                         const SimilarityCurve& curve) {
    if (thresholds.empty())
        throw std::invalid_argument("subcarrier_threshold: empty slice");
    SubcarrierThreshold out;
    out.max_similarity = *std::max_element(thresholds.begin(), thresholds.end());
    if (auto snr_db = required_snr(curve, out.max_similarity))
        out.min_snr_linear = std::pow(10.0, *snr_db / 10.0);
    return out;
}

SimilarityCurve default_curve(int symbols_per_word, double saturation) {
    if (symbols_per_word <= 0)
        throw std::invalid_argument("k must be a positive integer");
    // Exponential knee toward the ceiling; larger k saturates at lower SNR.
    const double onset_db = 6.5 - 0.75 * symbols_per_word;
    const double scale_db = 3.0;
    SimilarityCurve c;
    c.symbols_per_word = symbols_per_word;
    c.saturation = saturation;
    for (double d = 0.25; d <= 30.0; d += 1.25) {
        const double sim = saturation * (1.0 - std::exp(-d / scale_db));
        c.knots.emplace_back(onset_db + d, sim);
    }
    c.knots.emplace_back(onset_db + 40.0, saturation);
    c.validate();
    return c;
}

SimilarityCurve load_curve(std::istream& in) {
    nlohmann::json j;
    in >> j;
    SimilarityCurve c;
    c.symbols_per_word = j.at("k").get<int>();
    c.saturation = j.at("m_sat").get<double>();
    for (const auto& knot : j.at("knots"))
        c.knots.emplace_back(knot.at(0).get<double>(), knot.at(1).get<double>());
    c.validate();
    return c;
}

void save_curve(const SimilarityCurve& curve, std::ostream& out) {
    nlohmann::json j;
    j["k"] = curve.symbols_per_word;
    j["m_sat"] = curve.saturation;
    auto& knots = j["knots"] = nlohmann::json::array();
    for (const auto& [snr, sim] : curve.knots) knots.push_back({snr, sim});
    out << j.dump(2) << '\n';
}

}  // namespace hsc
