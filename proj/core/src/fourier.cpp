#include "rdcalib/fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace rdcalib {

namespace {
// FFTW's planner mutates global state; execution does not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("Fft: size must be >= 1");
  std::vector<std::complex<double>> scratch_in(static_cast<std::size_t>(size));
  std::vector<std::complex<double>> scratch_out(static_cast<std::size_t>(size));
  auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
  auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_UNALIGNED keeps new-array execution valid for arbitrary caller buffers.
  forward_plan_ = fftw_plan_dft_1d(size, in, out, FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  backward_plan_ = fftw_plan_dft_1d(size, in, out, FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (forward_plan_ == nullptr || backward_plan_ == nullptr) {
    throw std::runtime_error("Fft: plan creation failed");
  }
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (backward_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

Fft::Fft(Fft&& other) noexcept
    : size_(other.size_),
      forward_plan_(other.forward_plan_),
      backward_plan_(other.backward_plan_) {
  other.forward_plan_ = nullptr;
  other.backward_plan_ = nullptr;
  other.size_ = 0;
}

Fft& Fft::operator=(Fft&& other) noexcept {
  if (this != &other) {
    std::swap(size_, other.size_);
    std::swap(forward_plan_, other.forward_plan_);
    std::swap(backward_plan_, other.backward_plan_);
  }
  return *this;
}

void Fft::forward(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft::backward(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(backward_plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

Eigen::VectorXcd FourierDictionary::synthesize(const Eigen::VectorXcd& alpha) const {
  if (alpha.size() != fft_.size()) {
    throw std::invalid_argument("FourierDictionary: coefficient length mismatch");
  }
  Eigen::VectorXcd x(alpha.size());
  fft_.backward(alpha.data(), x.data());
  return x;
}

Eigen::VectorXd FourierDictionary::synthesize_real(const Eigen::VectorXcd& alpha) const {
  return synthesize(alpha).real();
}

Eigen::VectorXcd FourierDictionary::analyze(const Eigen::VectorXcd& x) const {
  if (x.size() != fft_.size()) {
    throw std::invalid_argument("FourierDictionary: signal length mismatch");
  }
  Eigen::VectorXcd alpha(x.size());
  fft_.forward(x.data(), alpha.data());
  alpha /= static_cast<double>(fft_.size());
  return alpha;
}

Eigen::VectorXcd FourierDictionary::analyze(const Eigen::VectorXd& x) const {
  return analyze(Eigen::VectorXcd(x.cast<std::complex<double>>()));
}

Eigen::VectorXcd FourierDictionary::adjoint(const Eigen::VectorXcd& x) const {
  if (x.size() != fft_.size()) {
    throw std::invalid_argument("FourierDictionary: signal length mismatch");
  }
  Eigen::VectorXcd out(x.size());
  fft_.forward(x.data(), out.data());
  return out;
}

}  // namespace rdcalib
