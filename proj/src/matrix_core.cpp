#include "jtri/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jtri/lapack_backend.hpp"

namespace jtri {

double schatten_norm(const ComplexMatrix& a, double p) {
    if (std::isnan(p) || p < 1.0)
        throw InvalidArgument("schatten_norm needs p >= 1");
    const std::vector<double> s = lapack::singular_values(a);
    if (std::isinf(p))
        return s.empty() ? 0.0 : s.front();
    if (p == 1.0) {
        double sum = 0.0;
        for (double v : s)
            sum += v;
        return sum;
    }
    if (p == 2.0) {
        double sum = 0.0;
        for (double v : s)
            sum += v * v;
        return std::sqrt(sum);
    }
    // General p: factor out the largest value to avoid overflow.
    const double top = s.empty() ? 0.0 : s.front();
    if (top == 0.0)
        return 0.0;
    double sum = 0.0;
    for (double v : s)
        sum += std::pow(v / top, p);
    return top * std::pow(sum, 1.0 / p);
}

double operator_norm(const ComplexMatrix& a) {
    return schatten_norm(a, std::numeric_limits<double>::infinity());
}

double trace_norm(const ComplexMatrix& a) { return schatten_norm(a, 1.0); }

std::vector<cplx> spectrum(const ComplexMatrix& a) {
    std::vector<cplx> w = lapack::eigenvalues(a);
    std::sort(w.begin(), w.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return w;
}

double nilpotency_eigenvalue_gate(int dim, const ToleranceConfig& cfg) {
    const double floor =
        std::pow(dim * std::numeric_limits<double>::epsilon(), 1.0 / dim);
    return std::max(cfg.cluster_tol, floor);
}

bool is_nilpotent(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    const double scale = 1.0 + operator_norm(a);

    double rho = 0.0; // spectral radius
    for (const cplx& w : lapack::eigenvalues(a))
        rho = std::max(rho, std::abs(w));
    const bool eig_verdict =
        rho <= nilpotency_eigenvalue_gate(a.dim(), cfg) * scale;

    ComplexMatrix normalized = (cplx(1.0 / scale, 0.0)) * a;
    const double power_norm = operator_norm(matrix_power(normalized, a.dim()));
    const bool power_verdict = power_norm <= cfg.residual_tol;

    if (eig_verdict != power_verdict)
        throw AmbiguousNilpotency(
            "nilpotency tests disagree (spectral radius " +
            std::to_string(rho) + ", scaled power norm " +
            std::to_string(power_norm) + "); adjust tolerances");
    return eig_verdict;
}

} // namespace jtri
