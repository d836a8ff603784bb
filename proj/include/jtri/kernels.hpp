#pragma once

#include <complex>
#include <cstddef>

namespace jtri::kernels {

using cplx = std::complex<double>;

/// Multiply-add count below which the parallel entry points run the serial
/// loops inline. Keeps tiny operands (the common n <= 32 case) off the
/// OpenMP runtime.
inline constexpr long long parallel_cutoff = 1LL << 15;

/// Serial reference implementations. The parallel entry points below
/// dispatch whole output rows (or whole batch items) to these, so parallel
/// results are bitwise identical to serial ones for any thread count.
namespace serial {

/// c[m x n] = a[m x k] * b[k x n], row-major; c must not alias a or b.
void gemm(int m, int k, int n, const cplx* a, const cplx* b, cplx* c);

/// Rows [i0, i1) of the same product.
void gemm_rows(int i0, int i1, int k, int n, const cplx* a, const cplx* b,
               cplx* c);

/// c[m x n] += alpha * a[m x k] * b[k x n].
void gemm_accum(int m, int k, int n, cplx alpha, const cplx* a, const cplx* b,
                cplx* c);

/// c[m x d] = a[m x k] * b^H, where b is d x k. Row i of c holds the
/// inner products <b_j, a_i> = sum_l conj(b[j][l]) a[i][l].
void gemm_adj_b(int m, int k, int d, const cplx* a, const cplx* b, cplx* c);

/// items products c_i = a_i * b_i of square n x n matrices.
void batch_gemm(int items, int n, const cplx* const* a, const cplx* const* b,
                cplx* const* c);

} // namespace serial

/// tr(a * b) for square n x n operands without forming the product.
cplx trace_of_product(int n, const cplx* a, const cplx* b);

/// sum_i conj(a_i) * b_i over len entries.
cplx dot_conj(std::size_t len, const cplx* a, const cplx* b);

/// OpenMP entry points; bitwise equal to the serial namespace.
void gemm(int m, int k, int n, const cplx* a, const cplx* b, cplx* c);
void gemm_accum(int m, int k, int n, cplx alpha, const cplx* a, const cplx* b,
                cplx* c);
void gemm_adj_b(int m, int k, int d, const cplx* a, const cplx* b, cplx* c);
void batch_gemm(int items, int n, const cplx* const* a, const cplx* const* b,
                cplx* const* c);

} // namespace jtri::kernels
