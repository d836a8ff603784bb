#include "jtri/kernels.hpp"

namespace jtri::kernels {

namespace serial {

void gemm_rows(int i0, int i1, int k, int n, const cplx* a, const cplx* b,
               cplx* c) {
    for (int i = i0; i < i1; ++i) {
        cplx* ci = c + static_cast<std::size_t>(i) * n;
        const cplx* ai = a + static_cast<std::size_t>(i) * k;
        for (int j = 0; j < n; ++j)
            ci[j] = cplx(0.0, 0.0);
        for (int l = 0; l < k; ++l) {
            const cplx ail = ai[l];
            if (ail == cplx(0.0, 0.0))
                continue;
            const cplx* bl = b + static_cast<std::size_t>(l) * n;
            for (int j = 0; j < n; ++j)
                ci[j] += ail * bl[j];
        }
    }
}

void gemm(int m, int k, int n, const cplx* a, const cplx* b, cplx* c) {
    gemm_rows(0, m, k, n, a, b, c);
}

static void gemm_accum_rows(int i0, int i1, int k, int n, cplx alpha,
                            const cplx* a, const cplx* b, cplx* c) {
    for (int i = i0; i < i1; ++i) {
        cplx* ci = c + static_cast<std::size_t>(i) * n;
        const cplx* ai = a + static_cast<std::size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const cplx f = alpha * ai[l];
            if (f == cplx(0.0, 0.0))
                continue;
            const cplx* bl = b + static_cast<std::size_t>(l) * n;
            for (int j = 0; j < n; ++j)
                ci[j] += f * bl[j];
        }
    }
}

void gemm_accum(int m, int k, int n, cplx alpha, const cplx* a, const cplx* b,
                cplx* c) {
    gemm_accum_rows(0, m, k, n, alpha, a, b, c);
}

static void gemm_adj_b_rows(int i0, int i1, int k, int d, const cplx* a,
                            const cplx* b, cplx* c) {
    for (int i = i0; i < i1; ++i) {
        const cplx* ai = a + static_cast<std::size_t>(i) * k;
        cplx* ci = c + static_cast<std::size_t>(i) * d;
        for (int j = 0; j < d; ++j) {
            const cplx* bj = b + static_cast<std::size_t>(j) * k;
            cplx s(0.0, 0.0);
            for (int l = 0; l < k; ++l)
                s += ai[l] * std::conj(bj[l]);
            ci[j] = s;
        }
    }
}

void gemm_adj_b(int m, int k, int d, const cplx* a, const cplx* b, cplx* c) {
    gemm_adj_b_rows(0, m, k, d, a, b, c);
}

void batch_gemm(int items, int n, const cplx* const* a, const cplx* const* b,
                cplx* const* c) {
    for (int i = 0; i < items; ++i)
        gemm(n, n, n, a[i], b[i], c[i]);
}

} // namespace serial

cplx trace_of_product(int n, const cplx* a, const cplx* b) {
    cplx s(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const cplx* ai = a + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            s += ai[j] * b[static_cast<std::size_t>(j) * n + i];
    }
    return s;
}

cplx dot_conj(std::size_t len, const cplx* a, const cplx* b) {
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < len; ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

void gemm(int m, int k, int n, const cplx* a, const cplx* b, cplx* c) {
    const long long work = 1LL * m * k * n;
    if (work < parallel_cutoff || m == 1) {
        serial::gemm(m, k, n, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i)
        serial::gemm_rows(i, i + 1, k, n, a, b, c);
}

void gemm_accum(int m, int k, int n, cplx alpha, const cplx* a, const cplx* b,
                cplx* c) {
    const long long work = 1LL * m * k * n;
    if (work < parallel_cutoff || m == 1) {
        serial::gemm_accum(m, k, n, alpha, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i)
        serial::gemm_accum(1, k, n, alpha, a + static_cast<std::size_t>(i) * k,
                           b, c + static_cast<std::size_t>(i) * n);
}

void gemm_adj_b(int m, int k, int d, const cplx* a, const cplx* b, cplx* c) {
    const long long work = 1LL * m * k * d;
    if (work < parallel_cutoff || m == 1) {
        serial::gemm_adj_b(m, k, d, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i)
        serial::gemm_adj_b(1, k, d, a + static_cast<std::size_t>(i) * k, b,
                           c + static_cast<std::size_t>(i) * d);
}

void batch_gemm(int items, int n, const cplx* const* a, const cplx* const* b,
                cplx* const* c) {
    const long long work = 1LL * items * n * n * n;
    if (work < parallel_cutoff || items == 1) {
        serial::batch_gemm(items, n, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < items; ++i)
        serial::gemm(n, n, n, a[i], b[i], c[i]);
}

} // namespace jtri::kernels
