#include "tsd/mat_exp.hpp"

#include <cmath>
#include <stdexcept>

#include "tsd/linalg.hpp"
#include "tsd/spectral.hpp"

namespace tsd {
namespace {

constexpr double kOverflowGuard = 700.0;
constexpr double kPadeTheta13 = 5.371920351148152;

const double kPadeCoeff[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

ComplexMatrix add_scaled_identity(ComplexMatrix m, double s) {
    for (int i = 0; i < m.dim(); ++i) m(i, i) += cplx(s, 0.0);
    return m;
}

}  // namespace

ComplexMatrix mat_exp(const ComplexMatrix& m) {
    require_finite(m, "mat_exp");
    const int n = m.dim();
    if (n == 1) {
        if (std::abs(m(0, 0)) > kOverflowGuard)
            throw std::range_error("mat_exp: operator norm exceeds overflow guard");
        ComplexMatrix out(1);
        out(0, 0) = std::exp(m(0, 0));
        return out;
    }

    const double norm = spectral_norm(m);
    if (norm > kOverflowGuard)
        throw std::range_error("mat_exp: operator norm exceeds overflow guard");

    int squarings = 0;
    if (norm > kPadeTheta13)
        squarings = int(std::ceil(std::log2(norm / kPadeTheta13)));
    ComplexMatrix a = m;
    if (squarings > 0) a.scale_real(std::ldexp(1.0, -squarings));

    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;

    // u = a (a6 (b13 a6 + b11 a4 + b9 a2) + b7 a6 + b5 a4 + b3 a2 + b1 I)
    ComplexMatrix inner = a6 * kPadeCoeff[13] + a4 * kPadeCoeff[11] + a2 * kPadeCoeff[9];
    ComplexMatrix u = a6 * inner;
    u += a6 * kPadeCoeff[7] + a4 * kPadeCoeff[5] + a2 * kPadeCoeff[3];
    u = a * add_scaled_identity(std::move(u), kPadeCoeff[1]);

    // v = a6 (b12 a6 + b10 a4 + b8 a2) + b6 a6 + b4 a4 + b2 a2 + b0 I
    inner = a6 * kPadeCoeff[12] + a4 * kPadeCoeff[10] + a2 * kPadeCoeff[8];
    ComplexMatrix v = a6 * inner;
    v += a6 * kPadeCoeff[6] + a4 * kPadeCoeff[4] + a2 * kPadeCoeff[2];
    v = add_scaled_identity(std::move(v), kPadeCoeff[0]);

    ComplexMatrix result = solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace tsd
