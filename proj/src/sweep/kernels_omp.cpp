// kernels_omp.cpp: OpenMP kernel, one task per row

#include <omp.h>

#include "nanogp/sweep/kernels.hpp"

namespace nanogp::sweep {

Outcomes evaluate_parallel(const std::vector<Row>& rows, const EvalSettings& settings, int jobs) {
    if (jobs <= 1) {
        return evaluate_serial(rows, settings);
    }
    Outcomes out(rows.size());
    const auto n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = evaluate_row(rows[static_cast<std::size_t>(i)], settings);
    }
    return out;
}

} // namespace nanogp::sweep
