#include "dfun/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace dfun {

namespace {

// Autocorrelation counts C(d) = #{i : S_i and S_{i+d}} of a 0/1 array through
// zero-padded real FFTs; the plans are reused across levels.
class Autocorrelator {
public:
    explicit Autocorrelator(const BoxDomain& d) : dim_(d.dim()) {
        for (int a = 0; a < 3; ++a) {
            n_[a] = d.count(a);
            m_[a] = a < dim_ ? 2 * n_[a] : 1;
        }
        // in-place layout: the last used axis is padded to 2 (m / 2 + 1) reals
        const int last = dim_ - 1;
        stride_ = m_;
        stride_[last] = 2 * (m_[last] / 2 + 1);
        complex_size_ = stride_[0] * stride_[1] * stride_[2] / 2;
        spec_ = fftw_alloc_complex(complex_size_);
        real_ = reinterpret_cast<double*>(spec_);
        int dims[3];
        for (int a = 0; a < dim_; ++a) dims[a] = static_cast<int>(m_[a]);
        if (!spec_) throw std::runtime_error("level sets: FFT allocation failed");
        fwd_ = fftw_plan_dft_r2c(dim_, dims, real_, spec_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r(dim_, dims, spec_, real_, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw std::runtime_error("level sets: FFT setup failed");
        norm_ = 1.0 / static_cast<double>(m_[0] * m_[1] * m_[2]);
    }
    Autocorrelator(const Autocorrelator&) = delete;
    Autocorrelator& operator=(const Autocorrelator&) = delete;
    ~Autocorrelator() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(spec_);
    }

    void run(const std::vector<char>& s) {
        std::fill(real_, real_ + 2 * complex_size_, 0.0);
        for (std::size_t i0 = 0; i0 < n_[0]; ++i0)
            for (std::size_t i1 = 0; i1 < n_[1]; ++i1)
                for (std::size_t i2 = 0; i2 < n_[2]; ++i2)
                    if (s[(i0 * n_[1] + i1) * n_[2] + i2]) real_[(i0 * stride_[1] + i1) * stride_[2] + i2] = 1.0;
        fftw_execute(fwd_);
        for (std::size_t k = 0; k < complex_size_; ++k) {
            const double re = spec_[k][0], im = spec_[k][1];
            spec_[k][0] = re * re + im * im;
            spec_[k][1] = 0.0;
        }
        fftw_execute(bwd_);
    }

    // count for the shift d (|d_a| < n_a)
    double count(const std::array<long, 3>& d) const {
        std::size_t k = 0;
        for (int a = 0; a < 3; ++a) {
            const long m = static_cast<long>(m_[a]);
            k = k * stride_[a] + static_cast<std::size_t>(((d[a] % m) + m) % m);
        }
        return real_[k] * norm_;
    }

private:
    int dim_;
    std::array<std::size_t, 3> n_{}, m_{}, stride_{};
    std::size_t complex_size_ = 0;
    double norm_ = 1.0;
    double* real_ = nullptr;
    fftw_complex* spec_ = nullptr;
    fftw_plan fwd_ = nullptr, bwd_ = nullptr;
};

} // namespace

std::vector<double> level_set_difference(const GridFunction& f, const BoxDomain& out, std::span<const double> levels) {
    const BoxDomain& in = f.domain();
    if (in.dim() != out.dim()) throw std::invalid_argument("level_set_difference: dimension mismatch");
    for (std::size_t k = 1; k < levels.size(); ++k)
        if (!(levels[k] < levels[k - 1])) throw std::invalid_argument("level_set_difference: levels must decrease");

    std::array<std::vector<long>, 3> off;
    for (int a = 0; a < 3; ++a) off[a] = a < in.dim() ? pairing_offsets(in.axis(a), out.axis(a)) : std::vector<long>{0};

    std::vector<double> res(out.size(), 0.0);
    std::vector<char> done(out.size(), 0);
    Autocorrelator corr(in);
    std::vector<char> set(in.size()), prev;
    for (double s : levels) {
        for (std::size_t k = 0; k < in.size(); ++k) set[k] = f.value(k) >= s;
        if (std::none_of(set.begin(), set.end(), [](char c) { return c; })) continue;
        // an unchanged set adds nothing: its points already carry a higher level
        if (set == prev) continue;
        prev = set;
        corr.run(set);
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (done[k]) continue;
            const Index j = out.unflat(k);
            std::array<long, 3> d{};
            bool inside = true;
            for (int a = 0; a < 3; ++a) {
                d[a] = off[a][j[a]];
                if (std::abs(d[a]) >= static_cast<long>(in.count(a))) inside = false;
            }
            if (inside && corr.count(d) > 0.5) {
                res[k] = s;
                done[k] = 1;
            }
        }
    }
    return res;
}

} // namespace dfun
