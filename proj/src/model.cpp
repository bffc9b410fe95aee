#include "fdaloha/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdaloha {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::domain_error("invalid parameter: " + what);
}

}  // namespace

SystemParams validate(const SystemParams& p) {
    if (!(p.lambda > 0.0)) fail("lambda must be > 0, got " + std::to_string(p.lambda));
    if (!(p.r >= 1.0)) fail("r must be >= 1, got " + std::to_string(p.r));
    if (!(p.alpha > 2.0)) fail("alpha must be > 2, got " + std::to_string(p.alpha));
    if (!(p.theta > 0.0)) fail("theta must be > 0, got " + std::to_string(p.theta));
    if (!(p.eta >= 0.0 && p.eta <= 1.0)) fail("eta must be in [0,1], got " + std::to_string(p.eta));
    if (!(p.w > 0.0)) fail("w must be > 0, got " + std::to_string(p.w));
    return p;
}

DuplexMix validate(const DuplexMix& m) {
    if (!(m.q >= 0.0 && m.q <= 1.0)) fail("q must be in [0,1], got " + std::to_string(m.q));
    return m;
}

DurationConfig validate(const DurationConfig& c) {
    if (!(c.d > 0.0)) fail("d must be > 0, got " + std::to_string(c.d));
    if (!(c.gamma > 0.0)) fail("gamma must be > 0, got " + std::to_string(c.gamma));
    return c;
}

double beta_coeff(const SystemParams& p) {
    validate(p);
    return std::exp(-(1.0 - p.eta) * p.theta * std::pow(p.r, p.alpha));
}

void to_json(nlohmann::json& j, const SystemParams& p) {
    j = nlohmann::json{{"lambda", p.lambda}, {"r", p.r},     {"alpha", p.alpha},
                       {"theta", p.theta},   {"eta", p.eta}, {"w", p.w}};
}

void from_json(const nlohmann::json& j, SystemParams& p) {
    j.at("lambda").get_to(p.lambda);
    j.at("r").get_to(p.r);
    j.at("alpha").get_to(p.alpha);
    j.at("theta").get_to(p.theta);
    j.at("eta").get_to(p.eta);
    j.at("w").get_to(p.w);
}

void to_json(nlohmann::json& j, const DuplexMix& m) { j = nlohmann::json{{"q", m.q}}; }

void from_json(const nlohmann::json& j, DuplexMix& m) { j.at("q").get_to(m.q); }

void to_json(nlohmann::json& j, const DurationConfig& c) {
    j = nlohmann::json{{"d", c.d}, {"gamma", c.gamma}};
}

void from_json(const nlohmann::json& j, DurationConfig& c) {
    j.at("d").get_to(c.d);
    j.at("gamma").get_to(c.gamma);
}

}  // namespace fdaloha
