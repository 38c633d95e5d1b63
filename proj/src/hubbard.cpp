#include "tsd/hubbard.hpp"

#include <cmath>
#include <stdexcept>

#include "tsd/bounds.hpp"

namespace tsd {
namespace {

double cost_exponent(double tau, int term_count, double epsilon_t) {
    if (!(tau > 0.0)) throw std::domain_error("tau must be positive");
    if (term_count < 1) throw std::invalid_argument("term count must be >= 1");
    const double ratio = double(term_count) * tau / epsilon_t;
    if (!(ratio > 1.0))
        throw std::domain_error("m * tau / epsilon_t must exceed 1");
    return 2.0 * std::sqrt(std::log(5.0) * std::log(ratio));
}

}  // namespace

std::string to_string(Boundary boundary) {
    return boundary == Boundary::open ? "open" : "periodic";
}

Boundary boundary_from_string(const std::string& name) {
    if (name == "open") return Boundary::open;
    if (name == "periodic") return Boundary::periodic;
    throw std::invalid_argument("unknown boundary: " + name);
}

void HubbardParams::validate() const {
    if (eta < 2) throw std::invalid_argument("eta must be >= 2");
    if (!(epsilon_t > 0.0)) throw std::invalid_argument("epsilon_t must be positive");
    if (!(sim_time >= 0.0)) throw std::invalid_argument("sim_time must be >= 0");
    if (!std::isfinite(t_h) || !std::isfinite(u_h))
        throw std::invalid_argument("couplings must be finite");
}

nlohmann::ordered_json hubbard_params_to_json(const HubbardParams& p) {
    return {{"t_h", p.t_h},
            {"u_h", p.u_h},
            {"eta", p.eta},
            {"sim_time", p.sim_time},
            {"epsilon_t", p.epsilon_t},
            {"boundary", to_string(p.boundary)}};
}

HubbardParams hubbard_params_from_json(const nlohmann::json& j) {
    HubbardParams p{j.at("t_h").get<double>(),
                    j.at("u_h").get<double>(),
                    j.at("eta").get<int>(),
                    j.at("sim_time").get<double>(),
                    j.at("epsilon_t").get<double>(),
                    boundary_from_string(j.at("boundary").get<std::string>())};
    p.validate();
    return p;
}

ComplexMatrix hubbard_term_matrix(double t_h, double u_h) {
    if (!std::isfinite(t_h) || !std::isfinite(u_h))
        throw std::invalid_argument("couplings must be finite");
    ComplexMatrix a(4);
    a(0, 2) = -t_h;
    a(0, 3) = -t_h;
    a(1, 2) = t_h;
    a(1, 3) = t_h;
    a(2, 0) = -t_h;
    a(2, 1) = t_h;
    a(3, 0) = -t_h;
    a(3, 1) = t_h;
    a(2, 2) = u_h;
    a(3, 3) = u_h;
    return a;
}

double hubbard_tau(double sim_time, double t_h, double u_h) {
    if (!std::isfinite(sim_time) || !std::isfinite(t_h) || !std::isfinite(u_h))
        throw std::invalid_argument("parameters must be finite");
    return std::abs(sim_time) * std::sqrt(8.0 * t_h * t_h + 2.0 * u_h * u_h);
}

double hubbard_cost(int eta, double tau, int term_count, double epsilon_t) {
    if (eta < 1) throw std::invalid_argument("eta must be >= 1");
    if (!(epsilon_t > 0.0)) throw std::invalid_argument("epsilon_t must be positive");
    const double log_cost = std::log(2.0) + 4.0 * std::log(double(eta)) +
                            std::log(tau) + cost_exponent(tau, term_count, epsilon_t);
    return std::exp(log_cost);
}

double hubbard_machine_epsilon(double epsilon_t, int eta, double tau,
                               int term_count) {
    if (eta < 1) throw std::invalid_argument("eta must be >= 1");
    if (!(epsilon_t > 0.0)) throw std::invalid_argument("epsilon_t must be positive");
    const double exponent = cost_exponent(tau, term_count, epsilon_t);
    const double log_value = std::log(epsilon_t) - exponent - std::log(4.0) -
                             4.0 * std::log(double(eta)) - std::log(tau) -
                             std::log(stability_constant());
    return std::exp(log_value);
}

std::vector<std::pair<int, int>> enumerate_lattice_terms(int eta,
                                                         Boundary boundary) {
    if (eta < 2) throw std::invalid_argument("eta must be >= 2");
    std::vector<std::pair<int, int>> bonds;
    const auto site = [eta](int row, int col) { return row * eta + col; };
    for (int row = 0; row < eta; ++row) {
        for (int col = 0; col < eta; ++col) {
            if (boundary == Boundary::periodic) {
                bonds.emplace_back(site(row, col), site(row, (col + 1) % eta));
                bonds.emplace_back(site(row, col), site((row + 1) % eta, col));
            } else {
                if (col + 1 < eta)
                    bonds.emplace_back(site(row, col), site(row, col + 1));
                if (row + 1 < eta)
                    bonds.emplace_back(site(row, col), site(row + 1, col));
            }
        }
    }
    return bonds;
}

}  // namespace tsd
