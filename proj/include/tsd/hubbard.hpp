#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsd/complex_matrix.hpp"

namespace tsd {

enum class Boundary { open, periodic };

std::string to_string(Boundary boundary);
Boundary boundary_from_string(const std::string& name);

struct HubbardParams {
    double t_h = 1.0;       // hopping amplitude
    double u_h = 2.0;       // on-site interaction
    int eta = 2;            // square lattice side length
    double sim_time = 1.0;  // |t|, real or imaginary evolution time
    double epsilon_t = 1e-3;
    Boundary boundary = Boundary::periodic;

    void validate() const;
};

nlohmann::ordered_json hubbard_params_to_json(const HubbardParams& params);
HubbardParams hubbard_params_from_json(const nlohmann::json& j);

// The two-site nearest-neighbor term in the basis {up-down, down-up,
// updown-empty, empty-updown}; real symmetric for real parameters.
ComplexMatrix hubbard_term_matrix(double t_h, double u_h);

// tau = |t| * sqrt(8 t_h^2 + 2 u_h^2)
double hubbard_tau(double sim_time, double t_h, double u_h);

// Cost bound 2 eta^4 tau exp(2 sqrt(ln 5 ln(m tau / epsilon_t))), log space.
// Requires m*tau/epsilon_t > 1.
double hubbard_cost(int eta, double tau, int term_count, double epsilon_t);

// Machine epsilon sufficient for tolerance epsilon_t; satisfies
// hubbard_machine_epsilon * 2 * hubbard_cost * stability_constant = epsilon_t.
double hubbard_machine_epsilon(double epsilon_t, int eta, double tau,
                               int term_count);

// Nearest-neighbor bonds of an eta x eta lattice, row-major, right bond before
// down bond. Periodic counts are 2 eta^2 (eta = 2 keeps wrapped duplicates);
// open counts are 2 eta (eta - 1).
std::vector<std::pair<int, int>> enumerate_lattice_terms(int eta,
                                                         Boundary boundary);

}  // namespace tsd
