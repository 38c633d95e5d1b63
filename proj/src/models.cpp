#include "tsd/models.hpp"

#include <stdexcept>

#include "tsd/hubbard.hpp"
#include "tsd/spectral.hpp"

namespace tsd {

ComplexMatrix balanced_hermitian(int dim, std::uint64_t seed) {
    ComplexMatrix a =
        sample_generator_set(dim, 1, GeneratorClass::hermitian, 1.0, seed)
            .generators.front();
    if (dim == 1) return a;
    const std::vector<double> eig = hermitian_eigenvalues(a);
    const double mid = 0.5 * (eig.front() + eig.back());
    for (int i = 0; i < dim; ++i) a(i, i) -= mid;
    const double half_width = 0.5 * (eig.back() - eig.front());
    if (half_width == 0.0)
        throw std::runtime_error("degenerate spectrum; change the seed");
    a.scale_real(1.0 / half_width);
    return a;
}

GeneratorSet excursion_generator_set(int dim, std::uint64_t seed) {
    return make_generator_set(GeneratorClass::hermitian,
                              {balanced_hermitian(dim, seed)});
}

GeneratorSet hubbard_split_generators(double t_h, double u_h) {
    return make_generator_set(
        GeneratorClass::hermitian,
        {hubbard_term_matrix(t_h, 0.0), hubbard_term_matrix(0.0, u_h)});
}

}  // namespace tsd
