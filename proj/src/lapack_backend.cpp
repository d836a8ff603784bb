#include "jtri/lapack_backend.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace jtri::lapack {

static void check_info(int info, const char* driver) {
    if (info != 0)
        throw EigensolverFailure(std::string(driver) + " failed, info = " +
                                 std::to_string(info));
}

std::vector<cplx> eigenvalues(const ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<cplx> work(a.entries());
    std::vector<cplx> w(static_cast<std::size_t>(n));
    int info = LAPACKE_zgeev(LAPACK_ROW_MAJOR, 'N', 'N', n, work.data(), n,
                             w.data(), nullptr, n, nullptr, n);
    check_info(info, "zgeev");
    return w;
}

Eigensystem eigensystem(const ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<cplx> work(a.entries());
    Eigensystem sys;
    sys.values.resize(static_cast<std::size_t>(n));
    sys.right = ComplexMatrix(n);
    sys.left = ComplexMatrix(n);
    int info = LAPACKE_zgeev(LAPACK_ROW_MAJOR, 'V', 'V', n, work.data(), n,
                             sys.values.data(), sys.left.data(), n,
                             sys.right.data(), n);
    check_info(info, "zgeev");
    return sys;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<cplx> work(a.entries());
    std::vector<double> s(static_cast<std::size_t>(n));
    std::vector<double> superb(static_cast<std::size_t>(n));
    int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', n, n, work.data(), n,
                              s.data(), nullptr, n, nullptr, n, superb.data());
    check_info(info, "zgesvd");
    return s;
}

Svd svd(const ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<cplx> work(a.entries());
    Svd out;
    out.s.resize(static_cast<std::size_t>(n));
    out.u = ComplexMatrix(n);
    out.vh = ComplexMatrix(n);
    std::vector<double> superb(static_cast<std::size_t>(n));
    int info =
        LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'A', 'A', n, n, work.data(), n,
                       out.s.data(), out.u.data(), n, out.vh.data(), n,
                       superb.data());
    check_info(info, "zgesvd");
    return out;
}

Schur schur(const ComplexMatrix& a) {
    const int n = a.dim();
    Schur out;
    out.t = ComplexMatrix(n, a.entries());
    out.q = ComplexMatrix(n);
    out.w.resize(static_cast<std::size_t>(n));
    lapack_int sdim = 0;
    int info = LAPACKE_zgees(LAPACK_ROW_MAJOR, 'V', 'N', nullptr, n,
                             out.t.data(), n, &sdim, out.w.data(),
                             out.q.data(), n);
    check_info(info, "zgees");
    return out;
}

std::vector<std::vector<cplx>> invariant_subspace_basis(
    const Schur& s, const std::vector<int>& select) {
    const int n = s.t.dim();
    if (select.size() != static_cast<std::size_t>(n))
        throw InvalidArgument("select mask size mismatch");
    std::vector<lapack_logical> mask(select.begin(), select.end());
    int m = 0;
    for (int v : select)
        if (v)
            ++m;
    if (m == 0)
        return {};
    ComplexMatrix t = s.t;
    ComplexMatrix q = s.q;
    std::vector<cplx> w(static_cast<std::size_t>(n));
    lapack_int mm = 0;
    double cond_subspace = 0.0, cond_projection = 0.0;
    int info = LAPACKE_ztrsen(LAPACK_ROW_MAJOR, 'N', 'V', mask.data(), n,
                              t.data(), n, q.data(), n, w.data(), &mm,
                              &cond_subspace, &cond_projection);
    check_info(info, "ztrsen");
    std::vector<std::vector<cplx>> basis(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        basis[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                q.at(i, j);
    }
    return basis;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix work(n, a.entries());
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
    int info =
        LAPACKE_zgetrf(LAPACK_ROW_MAJOR, n, n, work.data(), n, ipiv.data());
    check_info(info, "zgetrf");
    info = LAPACKE_zgetri(LAPACK_ROW_MAJOR, n, work.data(), n, ipiv.data());
    check_info(info, "zgetri");
    return work;
}

} // namespace jtri::lapack
