#include "wiglab/core/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace wiglab {

namespace {

// FFTW planning is not thread-safe; execution with fftw_execute_dft is.
// Plans are created once per (length, sign) with FFTW_ESTIMATE, which is
// deterministic, and FFTW_UNALIGNED so they run on any caller buffer.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> scratch(static_cast<size_t>(n));
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

void fft_forward(std::span<std::complex<double>> data) {
    const int n = static_cast<int>(data.size());
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(cache().get(n, FFTW_FORWARD), buf, buf);
}

void fft_inverse(std::span<std::complex<double>> data) {
    const int n = static_cast<int>(data.size());
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(cache().get(n, FFTW_BACKWARD), buf, buf);
    const double scale = 1.0 / n;
    for (auto& v : data) v *= scale;
}

} // namespace wiglab
