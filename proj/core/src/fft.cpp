#include "gnls/fft.hpp"

#include <fftw3.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>

#include "gnls/errors.hpp"

namespace gnls::fft {

namespace {

std::size_t total_size(const std::vector<int>& dims) {
  std::size_t t = 1;
  for (int d : dims) t *= static_cast<std::size_t>(d);
  return t;
}

// Plan creation is not thread-safe in FFTW; execution via the new-array
// interface is.  Plans are cached per (sign, dims), created out-of-place
// with FFTW_UNALIGNED so they can run on any pair of distinct buffers.
class PlanCache {
 public:
  fftw_plan get(int sign, const std::vector<int>& dims) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(sign, dims);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    cvec scratch_in(total_size(dims)), scratch_out(scratch_in.size());
    fftw_plan plan = fftw_plan_dft(
        static_cast<int>(dims.size()), dims.data(),
        reinterpret_cast<fftw_complex*>(scratch_in.data()),
        reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw Error("fftw_plan_dft failed");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, std::vector<int>>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

cvec run(const cvec& in, int sign, const std::vector<int>& dims) {
  if (in.size() != total_size(dims))
    throw InvalidArgument("fft: input size does not match extents");
  cvec out(in.size());
  fftw_plan plan = cache().get(sign, dims);
  fftw_execute_dft(
      plan,
      reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

cvec forward(const cvec& in, const std::vector<int>& dims) {
  return run(in, FFTW_FORWARD, dims);
}

cvec backward(const cvec& in, const std::vector<int>& dims) {
  return run(in, FFTW_BACKWARD, dims);
}

}  // namespace gnls::fft
